//! Built-in registry of example algebras with expected outputs.
//!
//! Each entry carries structure constants (possibly parameter-dependent),
//! the metric signature it is paired with, and the expected curvature /
//! Killing data, case label, Jordan types and flags. `verify`
//! recomputes everything from scratch and reports exact mismatches; an
//! empty report is the regression result.
//!
//! Entries are written with 1-based indices and "display" coefficients
//! (the number in front of θ^aθ^b in the usual symmetric-product
//! notation), matching how such results are normally quoted; the
//! off-diagonal tensor components are half the display coefficient.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::boostweight::{support, WeightVector};
use crate::error::Error;
use crate::geometry::{scalar_invariants, CurvaturePack, NullFrameMetric};
use crate::nullcone::{classify_case, membership_with_permutations, necessary_conditions};
use crate::parampoly::ParamPoly;
use crate::scalar::{self, Scalar};
use crate::tensor::{Slot, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    NonMember,
}

#[derive(Debug, Clone, Default)]
pub struct Expected {
    /// Display coefficients of Ric, 1-based (a ≤ b).
    pub ric: Option<Vec<(usize, usize, ParamPoly)>>,
    pub killing: Option<Vec<(usize, usize, ParamPoly)>>,
    /// Some(Some(x)): canonical label of the identity-frame support;
    /// Some(None): infeasible in the identity frame.
    pub case_label: Option<Option<Vec<Scalar>>>,
    /// Jordan type at default parameters (blocks ≥ 2, descending).
    pub ricci_jordan: Option<Vec<usize>>,
    pub killing_jordan: Option<Vec<usize>>,
    pub riem_zero: Option<bool>,
    pub nabla_riem_zero: Option<bool>,
    /// Whether every curated scalar invariant vanishes.
    pub vsi: Option<bool>,
    pub membership: Option<Membership>,
    pub nilpotent: Option<bool>,
    pub solvable: Option<bool>,
    /// Parameter bindings (in terms of the remaining parameters) on which
    /// the metric becomes Ricci-flat.
    pub ricci_flat_condition: Option<Vec<(&'static str, ParamPoly)>>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub p: usize,
    pub k: usize,
    /// (name, default value)
    pub params: Vec<(&'static str, Scalar)>,
    /// 1-based (a, b, c, C^a_{bc}).
    pub brackets: Vec<(usize, usize, usize, ParamPoly)>,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        2 * self.p + self.k
    }
}

/// A catalog entry instantiated at concrete parameter values.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub metric: NullFrameMetric,
    pub mu: StructureConstants,
    pub bindings: BTreeMap<String, Scalar>,
    pub at_defaults: bool,
    pub expected_ric: Option<Tensor>,
    pub expected_killing: Option<Tensor>,
    pub expected: Expected,
}

pub fn list() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

pub fn find(name: &str) -> Result<CatalogEntry, Error> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Instantiate an entry; unknown binding names are rejected, missing
/// bindings fall back to the entry defaults.
pub fn get(name: &str, bindings: &BTreeMap<String, Scalar>) -> Result<Instance, Error> {
    let entry = find(name)?;
    instantiate(&entry, bindings)
}

pub fn instantiate(
    entry: &CatalogEntry,
    bindings: &BTreeMap<String, Scalar>,
) -> Result<Instance, Error> {
    for name in bindings.keys() {
        if !entry.params.iter().any(|(p, _)| p == name) {
            return Err(Error::MissingParameter(format!(
                "{name} is not a parameter of {}",
                entry.name
            )));
        }
    }
    let mut values: BTreeMap<String, Scalar> = BTreeMap::new();
    let mut at_defaults = true;
    for (p, default) in &entry.params {
        match bindings.get(*p) {
            Some(v) => {
                if v != default {
                    at_defaults = false;
                }
                values.insert((*p).to_string(), v.clone());
            }
            None => {
                values.insert((*p).to_string(), default.clone());
            }
        }
    }
    let metric = NullFrameMetric::new(entry.p, entry.k)?;
    let n = metric.dim();
    let mut mu = StructureConstants::new(n);
    for (a, b, c, poly) in &entry.brackets {
        let v = poly.eval(&values)?;
        mu.add_to(a - 1, b - 1, c - 1, v)?;
    }
    let expected_ric = entry
        .expected
        .ric
        .as_ref()
        .map(|comps| display_tensor(n, comps, &values))
        .transpose()?;
    let expected_killing = entry
        .expected
        .killing
        .as_ref()
        .map(|comps| display_tensor(n, comps, &values))
        .transpose()?;
    Ok(Instance {
        name: entry.name.to_string(),
        metric,
        mu,
        bindings: values,
        at_defaults,
        expected_ric,
        expected_killing,
        expected: entry.expected.clone(),
    })
}

fn display_tensor(
    n: usize,
    comps: &[(usize, usize, ParamPoly)],
    values: &BTreeMap<String, Scalar>,
) -> Result<Tensor, Error> {
    let mut t = Tensor::new(n, vec![Slot::Down, Slot::Down]);
    let half = scalar::rat(1, 2);
    for (a, b, poly) in comps {
        let v = poly.eval(values)?;
        if a == b {
            t.add_to(&[(a - 1) as u8, (b - 1) as u8], v);
        } else {
            t.add_to(&[(a - 1) as u8, (b - 1) as u8], &v * &half);
            t.add_to(&[(b - 1) as u8, (a - 1) as u8], &v * &half);
        }
    }
    Ok(t)
}

fn format_sym(t: &Tensor) -> String {
    let mut parts = Vec::new();
    for (idx, v) in t.iter() {
        if idx[0] <= idx[1] {
            let coeff = if idx[0] == idx[1] { v.clone() } else { v + v };
            parts.push(format!(
                "{} θ{}θ{}",
                scalar::format(&coeff),
                idx[0] + 1,
                idx[1] + 1
            ));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Recompute everything for an instance and diff against the
/// expectations. An empty report means verified. Parameter-independent
/// data (case label, Jordan types, flags, membership) is checked only at
/// the default parameters, where it was recorded.
pub fn verify(inst: &Instance) -> Vec<String> {
    let mut mismatches = Vec::new();
    if !inst.mu.is_lie_algebra() {
        mismatches.push("jacobi defect is nonzero".to_string());
        return mismatches;
    }
    let pack = CurvaturePack::compute(&inst.mu, &inst.metric, 1);
    if let Some(expect) = &inst.expected_ric {
        if &pack.ric != expect {
            mismatches.push(format!(
                "Ric mismatch: expected {}, computed {}",
                format_sym(expect),
                format_sym(&pack.ric)
            ));
        }
    }
    if let Some(expect) = &inst.expected_killing {
        if &pack.killing != expect {
            mismatches.push(format!(
                "Killing form mismatch: expected {}, computed {}",
                format_sym(expect),
                format_sym(&pack.killing)
            ));
        }
    }
    if !inst.at_defaults {
        return mismatches;
    }
    let p = inst.metric.p();
    if let Some(expect) = &inst.expected.case_label {
        let sup = support(&inst.mu.as_tensor(), p, inst.metric.k());
        let computed = classify_case(&sup, p).map(|l| l.0);
        let expect = expect.as_ref().map(|x| WeightVector(x.clone()));
        if computed != expect {
            mismatches.push(format!(
                "case label mismatch: expected {:?}, computed {:?}",
                expect.map(|w| w.0.iter().map(scalar::format).collect::<Vec<_>>()),
                computed.map(|w| w.0.iter().map(scalar::format).collect::<Vec<_>>())
            ));
        }
    }
    if let Some(expect) = &inst.expected.ricci_jordan {
        match pack.ricci_op.jordan_type() {
            Ok(t) if &t == expect => {}
            other => mismatches.push(format!(
                "Ricci Jordan type mismatch: expected {expect:?}, computed {other:?}"
            )),
        }
    }
    if let Some(expect) = &inst.expected.killing_jordan {
        match pack.killing_op.jordan_type() {
            Ok(t) if &t == expect => {}
            other => mismatches.push(format!(
                "Killing Jordan type mismatch: expected {expect:?}, computed {other:?}"
            )),
        }
    }
    if let Some(expect) = inst.expected.riem_zero {
        if pack.riem.is_zero() != expect {
            mismatches.push(format!(
                "Riemann flatness mismatch: expected riem_zero = {expect}"
            ));
        }
    }
    if let Some(expect) = inst.expected.nabla_riem_zero {
        if pack.nabla_riem().is_zero() != expect {
            mismatches.push(format!(
                "∇Riem mismatch: expected nabla_riem_zero = {expect}"
            ));
        }
    }
    if let Some(expect) = inst.expected.vsi {
        let all_zero = scalar_invariants(&pack).iter().all(|(_, v)| v.is_zero());
        if all_zero != expect {
            mismatches.push(format!("invariant table mismatch: expected vsi = {expect}"));
        }
    }
    if let Some(expect) = inst.expected.nilpotent {
        match inst.mu.is_nilpotent() {
            Ok(v) if v == expect => {}
            other => mismatches.push(format!(
                "nilpotency mismatch: expected {expect}, got {other:?}"
            )),
        }
    }
    if let Some(expect) = inst.expected.solvable {
        match inst.mu.is_solvable() {
            Ok(v) if v == expect => {}
            other => mismatches.push(format!(
                "solvability mismatch: expected {expect}, got {other:?}"
            )),
        }
    }
    if let Some(expect) = inst.expected.membership {
        let cert = membership_with_permutations(&inst.mu, &inst.metric)
            .expect("jacobi already verified");
        let necessary = necessary_conditions(&inst.mu, &inst.metric, &pack);
        match expect {
            Membership::Member => match &cert {
                Some(c) => {
                    if let Err(e) = c.verify(&inst.mu, &inst.metric) {
                        mismatches.push(format!("certificate failed re-verification: {e}"));
                    }
                    if !necessary.passes {
                        mismatches.push(
                            "necessary conditions fail despite a certificate".to_string(),
                        );
                    }
                }
                None => mismatches.push("expected a membership certificate, found none".into()),
            },
            Membership::NonMember => {
                if cert.is_some() {
                    mismatches.push("expected no certificate, but one was found".into());
                }
                if necessary.passes {
                    mismatches.push(
                        "expected a refuting invariant, but the necessary battery passes"
                            .to_string(),
                    );
                }
            }
        }
    }
    mismatches
}

/// Substituting the entry's Ricci-flat condition must give Ric = 0
/// exactly, and perturbing the first substituted parameter by +1 must
/// give Ric ≠ 0.
pub fn check_ricci_flat_condition(entry: &CatalogEntry) -> Result<(), String> {
    let Some(cond) = &entry.expected.ricci_flat_condition else {
        return Err(format!("{} has no ricci_flat_condition", entry.name));
    };
    let mut defaults: BTreeMap<String, Scalar> = entry
        .params
        .iter()
        .map(|(n, v)| (n.to_string(), v.clone()))
        .collect();
    // free parameters keep their defaults; substituted ones are recomputed
    for (name, poly) in cond {
        let v = poly.eval(&defaults).map_err(|e| format!("{e}"))?;
        defaults.insert(name.to_string(), v);
    }
    let inst = instantiate(entry, &defaults).map_err(|e| format!("{e}"))?;
    if !inst.mu.is_lie_algebra() {
        return Err(format!("{}: flat point violates jacobi", entry.name));
    }
    let pack = CurvaturePack::compute(&inst.mu, &inst.metric, 0);
    if !pack.ric.is_zero() {
        return Err(format!(
            "{}: Ric != 0 on the flat locus: {}",
            entry.name,
            format_sym(&pack.ric)
        ));
    }
    // perturb the first substituted parameter
    let (first, _) = &cond[0];
    let mut perturbed = inst.bindings.clone();
    let v = perturbed[&first.to_string()].clone();
    perturbed.insert(first.to_string(), v + scalar::one());
    let inst2 = instantiate(entry, &perturbed).map_err(|e| format!("{e}"))?;
    let pack2 = CurvaturePack::compute(&inst2.mu, &inst2.metric, 0);
    if pack2.ric.is_zero() {
        return Err(format!(
            "{}: Ric still vanishes at a perturbed parameter",
            entry.name
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// entry definitions
// ---------------------------------------------------------------------

fn v(name: &str) -> ParamPoly {
    ParamPoly::var(name)
}

fn c(n: i64) -> ParamPoly {
    ParamPoly::int(n)
}

fn cr(n: i64, d: i64) -> ParamPoly {
    ParamPoly::rat(n, d)
}

fn label(xs: &[(i64, i64)]) -> Option<Vec<Scalar>> {
    Some(xs.iter().map(|&(n, d)| scalar::rat(n, d)).collect())
}

struct Build(CatalogEntry);

impl Build {
    fn new(name: &'static str, description: &'static str, p: usize, k: usize) -> Self {
        Build(CatalogEntry {
            name,
            description,
            p,
            k,
            params: Vec::new(),
            brackets: Vec::new(),
            expected: Expected::default(),
        })
    }

    fn param(mut self, name: &'static str, default: Scalar) -> Self {
        self.0.params.push((name, default));
        self
    }

    fn bracket(mut self, a: usize, b: usize, c: usize, v: ParamPoly) -> Self {
        self.0.brackets.push((a, b, c, v));
        self
    }

    fn bracket_i(self, a: usize, b: usize, cc: usize, n: i64) -> Self {
        self.bracket(a, b, cc, c(n))
    }

    fn ric(mut self, comps: Vec<(usize, usize, ParamPoly)>) -> Self {
        self.0.expected.ric = Some(comps);
        self
    }

    fn killing(mut self, comps: Vec<(usize, usize, ParamPoly)>) -> Self {
        self.0.expected.killing = Some(comps);
        self
    }

    fn case(mut self, l: Option<Vec<Scalar>>) -> Self {
        self.0.expected.case_label = Some(l);
        self
    }

    fn jordan(mut self, ric: Vec<usize>, killing: Vec<usize>) -> Self {
        self.0.expected.ricci_jordan = Some(ric);
        self.0.expected.killing_jordan = Some(killing);
        self
    }

    fn flags(mut self, riem_zero: Option<bool>, nabla_zero: Option<bool>, vsi: bool) -> Self {
        self.0.expected.riem_zero = riem_zero;
        self.0.expected.nabla_riem_zero = nabla_zero;
        self.0.expected.vsi = Some(vsi);
        self
    }

    fn member(mut self) -> Self {
        self.0.expected.membership = Some(Membership::Member);
        self
    }

    fn non_member(mut self) -> Self {
        self.0.expected.membership = Some(Membership::NonMember);
        self
    }

    fn nilpotent(mut self) -> Self {
        self.0.expected.nilpotent = Some(true);
        self.0.expected.solvable = Some(true);
        self
    }

    fn solvable(mut self, yes: bool) -> Self {
        self.0.expected.solvable = Some(yes);
        self
    }

    fn flat_condition(mut self, cond: Vec<(&'static str, ParamPoly)>) -> Self {
        self.0.expected.ricci_flat_condition = Some(cond);
        self
    }

    fn done(self) -> CatalogEntry {
        self.0
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    let one = scalar::one;
    let mut out = Vec::new();

    // ----- Lorentzian families -----

    out.push(
        Build::new(
            "lorentz-typeIII-dim4",
            "four-dimensional Lorentzian solvable family with a two-step nilradical",
            1,
            2,
        )
        .param("a", one())
        .param("b", one())
        .param("c", one())
        .param("alpha", scalar::zero())
        .param("beta", scalar::zero())
        .bracket(2, 1, 2, v("a").add(&v("b")))
        .bracket(3, 1, 3, v("a"))
        .bracket(4, 1, 4, v("b"))
        .bracket(2, 3, 4, v("c"))
        .bracket(3, 1, 4, v("alpha"))
        .bracket(4, 1, 3, v("beta"))
        .ric(vec![(
            1,
            1,
            // −½[(α+β)² − c² − 4ab]
            {
                let apb = v("alpha").add(&v("beta"));
                v("c")
                    .mul(&v("c"))
                    .add(&c(4).mul(&v("a")).mul(&v("b")))
                    .sub(&apb.mul(&apb))
                    .scale(&scalar::rat(1, 2))
            },
        )])
        .killing(vec![(1, 1, {
            let a = v("a");
            let b = v("b");
            c(2).mul(
                &a.mul(&a)
                    .add(&a.mul(&b))
                    .add(&b.mul(&b))
                    .add(&v("alpha").mul(&v("beta"))),
            )
        })])
        .case(label(&[(1, 1)]))
        .jordan(vec![2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .done(),
    );

    out.push(
        Build::new(
            "s4_8-coframe",
            "one-parameter slice of the Lorentzian family carrying an explicit coordinate coframe; Ricci-flat at b = -1/4",
            1,
            2,
        )
        .param("b", scalar::rat(-1, 4))
        .bracket(2, 1, 2, c(1).add(&v("b")))
        .bracket_i(3, 1, 3, 1)
        .bracket(4, 1, 4, v("b"))
        .bracket_i(2, 3, 4, 1)
        .ric(vec![(1, 1, cr(1, 2).add(&c(2).mul(&v("b"))))])
        .killing(vec![(1, 1, {
            let b = v("b");
            c(2).mul(&c(1).add(&b).add(&b.mul(&b)))
        })])
        .case(label(&[(1, 1)]))
        .jordan(vec![], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .flat_condition(vec![("b", cr(-1, 4))])
        .done(),
    );

    out.push(
        Build::new(
            "typeN-n31",
            "Heisenberg algebra with a flat Lorentzian metric (single negative-weight component)",
            1,
            1,
        )
        .param("a", one())
        .bracket(2, 1, 3, v("a"))
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(1, 2)]))
        .jordan(vec![], vec![])
        .flags(Some(true), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    // ----- signature (2, 2+k) -----

    out.push(
        Build::new(
            "case31a-sl2R-plus-R",
            "non-solvable neutral 4-dim example: simple 3-dim subalgebra plus a central line",
            2,
            0,
        )
        .bracket_i(1, 1, 3, 2)
        .bracket_i(4, 3, 4, 2)
        .bracket_i(3, 1, 4, 1)
        .ric(vec![(1, 4, c(6)), (3, 3, c(-6))])
        .killing(vec![(1, 4, c(-8)), (3, 3, c(8))])
        .case(label(&[(3, 1), (1, 1)]))
        .jordan(vec![4], vec![4])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "case31b-s4_1",
            "solvable 4-dim example in the steep-weight case",
            2,
            0,
        )
        .bracket_i(4, 1, 2, 1)
        .bracket_i(3, 1, 3, 1)
        .bracket_i(3, 1, 4, 1)
        .ric(vec![
            (1, 1, cr(-1, 2)),
            (1, 3, c(2)),
            (1, 4, c(1)),
            (3, 3, cr(-1, 2)),
        ])
        .killing(vec![(1, 1, c(1))])
        .case(label(&[(3, 1), (1, 1)]))
        .jordan(vec![4], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .done(),
    );

    out.push(
        Build::new(
            "case21a-sl2-n31",
            "six-dimensional family: simple 3-dim algebra acting on the Heisenberg algebra; four algebras by (a,b)",
            2,
            2,
        )
        .param("a", one())
        .param("b", one())
        .bracket_i(3, 1, 5, 1)
        .bracket(2, 4, 6, v("a"))
        .bracket(6, 1, 4, v("b").neg())
        .bracket_i(1, 1, 3, 2)
        .bracket_i(5, 3, 5, 2)
        .bracket(4, 3, 4, v("b"))
        .bracket(6, 3, 6, v("b").neg())
        .bracket(4, 5, 6, v("b"))
        .ric(vec![
            (1, 5, v("b").mul(&v("b")).add(&c(4))),
            (
                1,
                6,
                // −ab + 2a + b + b²
                c(2).mul(&v("a"))
                    .add(&v("b"))
                    .add(&v("b").mul(&v("b")))
                    .sub(&v("a").mul(&v("b"))),
            ),
            (3, 3, v("b").mul(&v("b")).scale(&scalar::rat(-3, 2)).sub(&c(6))),
        ])
        .killing(vec![
            (1, 5, c(-2).mul(&v("b").mul(&v("b")).add(&c(4)))),
            (3, 3, c(2).mul(&v("b").mul(&v("b")).add(&c(4)))),
        ])
        .case(label(&[(2, 1), (1, 1)]))
        .jordan(vec![3, 2], vec![3, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "case21b-5dim",
            "five-dimensional solvable family; Ricci-flat on b = -2a, d = a",
            2,
            1,
        )
        .param("a", one())
        .param("b", one())
        .param("c", one())
        .param("d", one())
        .bracket(4, 1, 2, v("d"))
        .bracket(1, 1, 3, v("a"))
        .bracket(2, 2, 3, v("b"))
        .bracket(5, 1, 4, v("c"))
        .bracket(4, 3, 4, v("a").add(&v("b")).neg())
        .bracket(5, 3, 5, c(2).mul(&v("a")).add(&v("b")).neg())
        .ric(vec![
            (
                1,
                5,
                c(-3).mul(&v("c")).mul(&v("b").add(&c(2).mul(&v("a")))),
            ),
            (3, 3, {
                // −½(3a² − b² + d²)
                let a = v("a");
                let b = v("b");
                let d = v("d");
                b.mul(&b)
                    .sub(&c(3).mul(&a).mul(&a))
                    .sub(&d.mul(&d))
                    .scale(&scalar::rat(1, 2))
            }),
        ])
        .killing(vec![(3, 3, {
            let a = v("a");
            let b = v("b");
            c(3).mul(
                &c(2)
                    .mul(&a)
                    .mul(&a)
                    .add(&c(2).mul(&a).mul(&b))
                    .add(&b.mul(&b)),
            )
        })])
        .case(label(&[(2, 1), (1, 1)]))
        .jordan(vec![3, 2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .flat_condition(vec![("b", c(-2).mul(&v("a"))), ("d", v("a"))])
        .done(),
    );

    out.push(
        Build::new(
            "s6_242",
            "six-dimensional solvable algebra with a 3-step nilpotent nilradical",
            2,
            2,
        )
        .bracket_i(2, 4, 6, 1)
        .bracket_i(4, 5, 6, 1)
        .bracket_i(6, 1, 6, 1)
        .bracket_i(4, 1, 4, 1)
        .bracket_i(5, 3, 5, 1)
        .bracket_i(4, 3, 4, 1)
        .bracket_i(2, 2, 3, -1)
        .bracket_i(2, 1, 2, 2)
        .ric(vec![
            (1, 1, cr(5, 2)),
            (1, 3, c(3)),
            (1, 6, c(-3)),
            (3, 3, c(1)),
        ])
        .killing(vec![(1, 1, c(6)), (1, 3, c(6)), (3, 3, c(3))])
        .case(label(&[(2, 1), (1, 1)]))
        .jordan(vec![3, 2], vec![2, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .done(),
    );

    out.push(
        Build::new(
            "case3half1half-s5_35nr",
            "five-dimensional solvable family over a filiform nilradical; Ricci-flat at c = 1, b = 8a/3",
            2,
            1,
        )
        .param("a", one())
        .param("b", one())
        .param("c", scalar::int(2))
        .bracket_i(2, 4, 5, 1)
        .bracket_i(4, 3, 5, 1)
        .bracket(4, 1, 4, v("a"))
        .bracket(5, 1, 5, v("b"))
        .bracket(3, 1, 3, v("a").sub(&v("b")))
        .bracket(2, 1, 2, v("a").add(&v("b")))
        .bracket(3, 1, 5, v("c"))
        .ric(vec![
            (
                1,
                1,
                // (b/2)(8a − 3b)
                c(4).mul(&v("a"))
                    .mul(&v("b"))
                    .sub(&v("b").mul(&v("b")).scale(&scalar::rat(3, 2))),
            ),
            (1, 3, c(1).sub(&v("c"))),
        ])
        .killing(vec![(
            1,
            1,
            c(3).mul(&v("a").mul(&v("a")).add(&v("b").mul(&v("b")))),
        )])
        .case(label(&[(3, 2), (1, 2)]))
        .jordan(vec![2, 2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .flat_condition(vec![("c", c(1)), ("b", v("a").scale(&scalar::rat(8, 3)))])
        .done(),
    );

    out.push(
        Build::new(
            "case11-s5_35",
            "five-dimensional solvable one-parameter example",
            2,
            1,
        )
        .param("a", one())
        .bracket(4, 1, 4, v("a").add(&c(2)).neg())
        .bracket(2, 1, 2, v("a").add(&c(1)).neg())
        .bracket(5, 1, 5, v("a").neg())
        .bracket_i(3, 1, 3, -1)
        .bracket_i(4, 2, 3, 1)
        .bracket_i(2, 3, 5, -1)
        .ric(vec![
            (1, 1, {
                // ½(a² + 4a − 3)
                let a = v("a");
                a.mul(&a)
                    .add(&c(4).mul(&a))
                    .sub(&c(3))
                    .scale(&scalar::rat(1, 2))
            }),
            (3, 3, c(2).mul(&v("a")).add(&c(3))),
        ])
        .killing(vec![(1, 1, {
            let a = v("a");
            c(3).mul(&a.mul(&a).add(&c(2).mul(&a)).add(&c(2)))
        })])
        .case(label(&[(1, 1), (1, 1)]))
        .jordan(vec![2, 2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .done(),
    );

    out.push(
        Build::new(
            "case1half-family",
            "solvable family in dimension 5 with the full shallow-weight component set; Ricci-flat at a = 2",
            2,
            1,
        )
        .param("a", one())
        .param("b", one())
        .param("c", one())
        .param("d", one())
        .param("e", one())
        .param("f", one())
        .param("g", one())
        .param("h", one())
        .bracket_i(2, 1, 2, 2)
        .bracket_i(3, 1, 3, 1)
        .bracket_i(4, 1, 4, 1)
        .bracket(2, 3, 4, v("a"))
        .bracket(2, 1, 3, v("b"))
        .bracket(4, 1, 3, v("c"))
        .bracket(2, 1, 4, v("d"))
        .bracket(5, 1, 3, v("e"))
        .bracket(2, 1, 5, v("f"))
        .bracket(4, 1, 5, v("g"))
        .bracket(4, 3, 5, v("h"))
        .bracket(2, 3, 5, v("a").mul(&v("g")).sub(&v("d").mul(&v("h"))))
        .ric(vec![(
            1,
            1,
            c(2).sub(&v("a").mul(&v("a")).scale(&scalar::rat(1, 2))),
        )])
        .killing(vec![(1, 1, c(6))])
        .case(label(&[(1, 1), (1, 2)]))
        .jordan(vec![2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .flat_condition(vec![("a", c(2))])
        .done(),
    );

    out.push(
        Build::new(
            "s5_36",
            "simplest member of the shallow-weight dimension-5 family; Ricci-flat at a = 2",
            2,
            1,
        )
        .param("a", one())
        .bracket_i(2, 1, 2, 2)
        .bracket_i(3, 1, 3, 1)
        .bracket_i(4, 1, 4, 1)
        .bracket(2, 3, 4, v("a"))
        .bracket_i(4, 3, 5, 1)
        .ric(vec![(
            1,
            1,
            c(2).sub(&v("a").mul(&v("a")).scale(&scalar::rat(1, 2))),
        )])
        .killing(vec![(1, 1, c(6))])
        .case(label(&[(1, 1), (1, 2)]))
        .jordan(vec![2], vec![2])
        .flags(Some(false), None, true)
        .member()
        .solvable(true)
        .flat_condition(vec![("a", c(2))])
        .done(),
    );

    out.push(
        Build::new(
            "case10-s3_1-ext",
            "hyperbolic plane-motion algebra padded with flat directions; parallel curvature",
            2,
            1,
        )
        .bracket_i(4, 1, 3, 1)
        .bracket_i(3, 1, 4, 1)
        .ric(vec![(1, 1, c(-2))])
        .killing(vec![(1, 1, c(2))])
        .case(label(&[(1, 1), (0, 1)]))
        .jordan(vec![2], vec![2])
        .flags(Some(false), Some(true), true)
        .member()
        .solvable(true)
        .done(),
    );

    out.push(
        Build::new(
            "case10-s3_3-ext",
            "Euclidean plane-motion algebra padded with flat directions; parallel curvature",
            2,
            1,
        )
        .bracket_i(4, 1, 3, 1)
        .bracket_i(3, 1, 4, -1)
        .ric(vec![(1, 1, c(2))])
        .killing(vec![(1, 1, c(-2))])
        .case(label(&[(1, 1), (0, 1)]))
        .jordan(vec![2], vec![2])
        .flags(Some(false), Some(true), true)
        .member()
        .solvable(true)
        .done(),
    );

    // ----- Ricci-flat and flat nilpotent examples -----

    out.push(
        Build::new(
            "n5_5",
            "five-dimensional 3-step nilpotent algebra from an explicit coframe: Ricci-flat, curvature parallel but nonzero",
            2,
            1,
        )
        .bracket_i(2, 1, 5, -1)
        .bracket_i(4, 3, 5, -1)
        .bracket_i(5, 1, 3, 1)
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(1, 2), (1, 2)]))
        .jordan(vec![], vec![])
        .flags(Some(false), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "n5_6",
            "five-dimensional 4-step nilpotent algebra: Ricci-flat with parallel nonzero curvature",
            2,
            1,
        )
        .bracket_i(2, 1, 4, 1)
        .bracket_i(5, 1, 3, 1)
        .bracket_i(4, 1, 5, 1)
        .bracket_i(2, 3, 5, 1)
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(2, 3), (1, 3)]))
        .jordan(vec![], vec![])
        .flags(Some(false), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "n4_1-flat",
            "four-dimensional 3-step nilpotent algebra with a flat neutral metric",
            2,
            0,
        )
        .bracket_i(2, 1, 4, 1)
        .bracket_i(4, 1, 3, 1)
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(3, 5), (1, 5)]))
        .jordan(vec![], vec![])
        .flags(Some(true), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "n5_1-flat",
            "five-dimensional 2-step nilpotent algebra with a flat metric",
            2,
            1,
        )
        .bracket_i(2, 1, 5, 1)
        .bracket_i(4, 1, 3, 1)
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(1, 2), (1, 4)]))
        .jordan(vec![], vec![])
        .flags(Some(true), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "casehalf0-n31-ext",
            "Heisenberg-plus-flat-directions family with every component in the single-pair deep weight",
            2,
            1,
        )
        .param("a", one())
        .param("b", one())
        .param("c", one())
        .bracket(2, 1, 4, v("a"))
        .bracket(2, 1, 5, v("b"))
        .bracket(2, 1, 3, v("c"))
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(1, 2), (0, 1)]))
        .jordan(vec![], vec![])
        .flags(Some(true), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "casethird-n31-ext",
            "Heisenberg-plus-flat-direction family on the diagonal fractional case",
            2,
            0,
        )
        .param("a", one())
        .param("b", one())
        .bracket(4, 1, 3, v("a"))
        .bracket(2, 1, 3, v("b"))
        .ric(vec![])
        .killing(vec![])
        .case(label(&[(1, 3), (1, 3)]))
        .jordan(vec![], vec![])
        .flags(Some(true), Some(true), true)
        .member()
        .nilpotent()
        .done(),
    );

    // ----- abstract nilpotent algebras for the construction pipeline -----

    out.push(
        Build::new(
            "n5_2",
            "five-dimensional 4-step filiform nilpotent algebra (abstract presentation)",
            2,
            1,
        )
        .bracket_i(1, 2, 5, 1)
        .bracket_i(2, 3, 5, 1)
        .bracket_i(3, 4, 5, 1)
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "n5_3",
            "five-dimensional 3-step nilpotent algebra (abstract presentation)",
            2,
            1,
        )
        .bracket_i(2, 3, 4, 1)
        .bracket_i(1, 3, 5, 1)
        .bracket_i(3, 4, 5, 1)
        .nilpotent()
        .done(),
    );

    out.push(
        Build::new(
            "n5_4",
            "five-dimensional Heisenberg algebra (abstract presentation)",
            2,
            1,
        )
        .bracket_i(1, 2, 4, 1)
        .bracket_i(1, 3, 5, 1)
        .nilpotent()
        .done(),
    );

    // ----- signature (3, 3+k) -----

    out.push(
        Build::new(
            "case311-sl2-R2",
            "simple 3-dim algebra acting on a plane, plus a flat line, in neutral 6-dim signature",
            3,
            0,
        )
        .bracket_i(3, 1, 4, 1)
        .bracket_i(2, 4, 6, 1)
        .bracket_i(6, 1, 2, -1)
        .bracket_i(1, 1, 3, 2)
        .bracket_i(4, 3, 4, 2)
        .bracket_i(2, 2, 3, -1)
        .bracket_i(6, 3, 6, -1)
        .ric(vec![
            (1, 4, c(6)),
            (1, 6, c(2)),
            (3, 3, c(-5)),
            (5, 5, cr(-1, 2)),
        ])
        .killing(vec![(1, 4, c(-10)), (3, 3, c(10))])
        .case(label(&[(3, 1), (1, 1), (1, 1)]))
        .jordan(vec![4, 2], vec![4])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "case111-sl2-trivial",
            "split simple 3-dim algebra on the minus side, abelian plus side, trivial action: Ric = -B/2",
            3,
            0,
        )
        .bracket_i(1, 1, 3, -2)
        .bracket_i(5, 3, 5, -2)
        .bracket_i(3, 1, 5, 1)
        .ric(vec![(1, 5, c(-4)), (3, 3, c(-4))])
        .killing(vec![(1, 5, c(8)), (3, 3, c(8))])
        .case(label(&[(1, 1), (1, 1), (1, 1)]))
        .jordan(vec![2, 2, 2], vec![2, 2, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "case111-su2-trivial",
            "compact simple 3-dim algebra on the minus side, abelian plus side, trivial action: Ric = -B/2",
            3,
            0,
        )
        .bracket_i(5, 1, 3, 1)
        .bracket_i(1, 3, 5, 1)
        .bracket_i(3, 1, 5, -1)
        .ric(vec![(1, 1, c(1)), (3, 3, c(1)), (5, 5, c(1))])
        .killing(vec![(1, 1, c(-2)), (3, 3, c(-2)), (5, 5, c(-2))])
        .case(label(&[(1, 1), (1, 1), (1, 1)]))
        .jordan(vec![2, 2, 2], vec![2, 2, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "case111-sl2-adjoint",
            "split simple 3-dim algebra acting on the plus side by its adjoint representation",
            3,
            0,
        )
        .bracket_i(1, 1, 3, -2)
        .bracket_i(5, 3, 5, -2)
        .bracket_i(3, 1, 5, 1)
        .bracket_i(2, 1, 4, -2)
        .bracket_i(4, 1, 6, 1)
        .bracket_i(2, 2, 3, -2)
        .bracket_i(6, 3, 6, -2)
        .bracket_i(4, 2, 5, 1)
        .bracket_i(6, 4, 5, -2)
        .ric(vec![
            (1, 1, c(-1)),
            (1, 5, c(-8)),
            (3, 3, c(-15)),
            (5, 5, c(-1)),
        ])
        .killing(vec![(1, 5, c(16)), (3, 3, c(16))])
        .case(label(&[(1, 1), (1, 1), (1, 1)]))
        .jordan(vec![2, 2, 2], vec![2, 2, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "sl2-n31-neutral33",
            "the 6-dim simple-on-Heisenberg family paired with the fully split metric instead",
            3,
            0,
        )
        .param("a", one())
        .param("b", one())
        .bracket_i(3, 1, 5, 1)
        .bracket(2, 4, 6, v("a"))
        .bracket(6, 1, 4, v("b").neg())
        .bracket_i(1, 1, 3, 2)
        .bracket_i(5, 3, 5, 2)
        .bracket(4, 3, 4, v("b"))
        .bracket(6, 3, 6, v("b").neg())
        .bracket(4, 5, 6, v("b"))
        .ric(vec![
            (
                1,
                5,
                v("b").mul(&v("b")).sub(&c(3).mul(&v("b"))).add(&c(4)),
            ),
            (1, 6, c(4).mul(&v("a"))),
            (3, 3, {
                let b = v("b");
                c(-2).mul(&b.mul(&b).sub(&b).add(&c(2)))
            }),
        ])
        .killing(vec![
            (1, 5, c(-2).mul(&v("b").mul(&v("b")).add(&c(4)))),
            (3, 3, c(2).mul(&v("b").mul(&v("b")).add(&c(4)))),
        ])
        .case(label(&[(2, 1), (1, 1), (0, 1)]))
        .jordan(vec![3, 2], vec![2, 2, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    out.push(
        Build::new(
            "sl2-s31a1-alpha",
            "indecomposable 6-dim algebra with simple factor and non-nilpotent solvable radical, neutral metric",
            3,
            0,
        )
        .param("alpha", one())
        .bracket_i(6, 3, 6, -2)
        .bracket_i(1, 1, 3, -2)
        .bracket_i(4, 3, 4, 1)
        .bracket_i(2, 2, 3, 1)
        .bracket_i(4, 1, 2, 1)
        .bracket_i(3, 1, 6, 1)
        .bracket_i(2, 4, 6, -1)
        .bracket(2, 2, 5, v("alpha"))
        .bracket(4, 4, 5, v("alpha"))
        .ric(vec![
            (1, 6, c(-2)),
            (3, 3, c(-4)),
            (3, 5, c(4).mul(&v("alpha"))),
            (5, 5, v("alpha").mul(&v("alpha")).neg()),
        ])
        .killing(vec![
            (1, 6, c(10)),
            (3, 3, c(10)),
            (5, 5, c(2).mul(&v("alpha")).mul(&v("alpha"))),
        ])
        .case(label(&[(3, 1), (1, 1), (1, 1)]))
        .jordan(vec![4], vec![4, 2])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    // ----- the two large split examples -----

    let sl3_brackets: Vec<(usize, usize, usize, i64, i64)> = vec![
        (1, 1, 7, -2, 1),
        (6, 6, 7, 2, 1),
        (7, 1, 6, 1, 1),
        (3, 3, 7, -1, 1),
        (5, 5, 7, -1, 1),
        (8, 7, 8, -1, 1),
        (10, 7, 10, -1, 1),
        (3, 1, 8, 1, 1),
        (5, 1, 10, -1, 1),
        (8, 3, 6, -1, 1),
        (10, 5, 6, 1, 1),
        (3, 3, 9, -3, 1),
        (8, 8, 9, -3, 1),
        (10, 9, 10, -3, 1),
        (5, 5, 9, 3, 1),
        (7, 3, 10, 1, 2),
        (9, 3, 10, 1, 2),
        (1, 3, 5, 1, 1),
        (6, 8, 10, 1, 1),
        (7, 5, 8, 1, 2),
        (9, 5, 8, -1, 2),
    ];

    let mut b = Build::new(
        "sl3R-o55",
        "rank-two simple 8-dim algebra plus an abelian plane in split signature (5,5)",
        5,
        0,
    );
    for &(a, bb, cc, n, d) in &sl3_brackets {
        b = b.bracket(a, bb, cc, cr(n, d));
    }
    out.push(
        b.ric(vec![
            (1, 6, c(-6)),
            (3, 8, c(1)),
            (3, 10, cr(-15, 2)),
            (5, 8, c(-9)),
            (5, 10, cr(-3, 2)),
            (7, 7, cr(-9, 2)),
            (7, 9, c(-3)),
            (9, 9, c(-23)),
        ])
        .killing(vec![
            (1, 6, c(12)),
            (3, 10, c(12)),
            (5, 8, c(12)),
            (7, 7, c(12)),
            (9, 9, c(36)),
        ])
        .case(label(&[(5, 1), (3, 1), (3, 1), (1, 1), (1, 1)]))
        .jordan(vec![6, 4], vec![6, 4])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    let mut b = Build::new(
        "sl3R-o66",
        "rank-two simple algebra acting on its standard representation plus a flat line, split signature (6,6)",
        6,
        0,
    );
    for &(a, bb, cc, n, d) in &sl3_brackets {
        b = b.bracket(a, bb, cc, cr(n, d));
    }
    for (a, bb, cc, n) in [
        (12, 7, 12, 1),
        (12, 9, 12, 1),
        (2, 6, 12, 1),
        (4, 10, 12, 1),
        (2, 2, 7, 1),
        (12, 1, 2, 1),
        (12, 3, 4, 1),
        (2, 2, 9, -1),
        (4, 2, 5, -1),
        (2, 4, 8, -1),
        (4, 4, 9, 2),
    ] {
        b = b.bracket_i(a, bb, cc, n);
    }
    out.push(
        b.ric(vec![
            (1, 6, c(-6)),
            (3, 8, c(1)),
            (3, 10, cr(-15, 2)),
            (3, 12, c(-2)),
            (5, 8, c(-8)),
            (5, 10, cr(-3, 2)),
            (7, 7, cr(-7, 2)),
            (7, 9, c(-3)),
            (9, 9, c(-20)),
            (11, 11, c(-1)),
        ])
        .killing(vec![
            (1, 6, c(14)),
            (3, 10, c(14)),
            (5, 8, c(14)),
            (7, 7, c(14)),
            (9, 9, c(42)),
        ])
        .case(label(&[(5, 1), (3, 1), (3, 1), (1, 1), (1, 1), (1, 1)]))
        .jordan(vec![6, 4, 2], vec![6, 4])
        .flags(Some(false), None, true)
        .member()
        .solvable(false)
        .done(),
    );

    // ----- negative control -----

    out.push(
        Build::new(
            "s3_3-control",
            "plane-motion algebras (rotation generator spacelike): never in the Lorentzian null cone",
            1,
            1,
        )
        .param("alpha", scalar::zero())
        .bracket(1, 1, 3, v("alpha"))
        .bracket_i(2, 1, 3, -1)
        .bracket_i(1, 2, 3, 1)
        .bracket(2, 2, 3, v("alpha"))
        .ric(vec![
            (1, 1, c(2).mul(&v("alpha"))),
            (1, 2, c(-4).mul(&v("alpha")).mul(&v("alpha"))),
            (2, 2, c(-2).mul(&v("alpha"))),
            (3, 3, c(2).sub(&c(2).mul(&v("alpha")).mul(&v("alpha")))),
        ])
        .killing(vec![(
            3,
            3,
            c(2).mul(&v("alpha")).mul(&v("alpha")).sub(&c(2)),
        )])
        .case(None)
        .flags(Some(false), None, false)
        .non_member()
        .solvable(true)
        .done(),
    );

    out
}
