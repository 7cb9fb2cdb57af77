//! Null-cone membership machinery.
//!
//! A bracket lies in the null cone of the O(p,q) action when some
//! nonnegative, reversely well-ordered weight vector x satisfies
//! Σ xᵢbᵢ ≤ −1 on every boost weight b in its support. Feasibility of
//! that system is decided exactly by Fourier–Motzkin elimination; the
//! canonical witness is the lexicographically minimal vertex (minimize
//! x₁, then x₂, …), which reproduces the published case labels.
//!
//! A certificate proves membership. Absence of a certificate over the
//! null-pair relabelling group σ is NOT a proof of non-membership; only
//! a nonzero polynomial invariant is. Reports keep that asymmetry
//! explicit.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::{BasisChange, StructureConstants};
use crate::boostweight::{
    self, canonicalize_weights, component_weight, support, BoostWeight, WeightVector,
};
use crate::error::Error;
use crate::geometry::{scalar_invariants, CurvaturePack, NullFrameMetric};
use crate::scalar::{self, Scalar};
use crate::tensor::Slot;

/// Exact Fourier–Motzkin machinery for systems Σ aᵢxᵢ ≤ rhs.
mod fm {
    use super::*;

    #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
    pub struct Constraint {
        pub coeffs: Vec<Scalar>,
        pub rhs: Scalar,
    }

    impl Constraint {
        fn normalize(mut self) -> Self {
            if let Some(a) = self.coeffs.iter().find(|a| !a.is_zero()) {
                let scale = a.abs().recip();
                for c in &mut self.coeffs {
                    *c *= &scale;
                }
                self.rhs *= &scale;
            }
            self
        }

        fn is_trivial(&self) -> Option<bool> {
            if self.coeffs.iter().all(Zero::is_zero) {
                Some(!self.rhs.is_negative())
            } else {
                None
            }
        }
    }

    pub fn constraint(coeffs: Vec<Scalar>, rhs: Scalar) -> Constraint {
        Constraint { coeffs, rhs }
    }

    /// Eliminate the variable at `var`, producing the exact projection.
    fn eliminate(cons: &BTreeSet<Constraint>, var: usize) -> Option<BTreeSet<Constraint>> {
        let mut zero_side = BTreeSet::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for c in cons {
            let a = &c.coeffs[var];
            if a.is_zero() {
                zero_side.insert(c.clone());
            } else if a.is_positive() {
                pos.push(c);
            } else {
                neg.push(c);
            }
        }
        for p in &pos {
            for n in &neg {
                // p: a x ≤ r (a>0) gives x ≤ r/a; n: b x ≤ s (b<0) gives
                // x ≥ s/b; combine to s/b ≤ r/a, i.e. a·s − b·r ≤ 0 scaled.
                let a = &p.coeffs[var];
                let b = &n.coeffs[var];
                let mut coeffs = Vec::with_capacity(p.coeffs.len());
                for (pc, nc) in p.coeffs.iter().zip(&n.coeffs) {
                    coeffs.push(pc * &-b.clone() + nc * a);
                }
                let rhs = &p.rhs * &-b.clone() + &n.rhs * a;
                let c = Constraint { coeffs, rhs }.normalize();
                match c.is_trivial() {
                    Some(true) => {}
                    Some(false) => return None,
                    None => {
                        zero_side.insert(c);
                    }
                }
            }
        }
        Some(zero_side)
    }

    /// Minimum feasible value of x_var after projecting out all later
    /// variables; earlier variables must already be substituted (zero
    /// coefficients). Returns None when infeasible, Some(None) when
    /// unbounded below.
    fn min_of_first(cons: &BTreeSet<Constraint>, var: usize, nvars: usize) -> Option<Option<Scalar>> {
        let mut cur = cons.clone();
        for v in (var + 1..nvars).rev() {
            cur = eliminate(&cur, v)?;
        }
        let mut lower: Option<Scalar> = None;
        for c in &cur {
            let a = &c.coeffs[var];
            if a.is_zero() {
                if c.rhs.is_negative() {
                    return None;
                }
            } else if a.is_negative() {
                let bound = &c.rhs / a;
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            }
        }
        // check the lower bound against upper bounds
        if let Some(l) = &lower {
            for c in &cur {
                let a = &c.coeffs[var];
                if a.is_positive() && &(&c.rhs / a) < l {
                    return None;
                }
            }
        }
        Some(lower)
    }

    /// Lexicographically minimal feasible point (x₁ first), assuming every
    /// variable is bounded below on the feasible set.
    pub fn lex_min(mut cons: BTreeSet<Constraint>, nvars: usize) -> Option<Vec<Scalar>> {
        let mut point = Vec::with_capacity(nvars);
        for var in 0..nvars {
            let m = min_of_first(&cons, var, nvars)?
                .expect("system bounded below by the ordering constraints");
            // substitute x_var = m
            let mut next = BTreeSet::new();
            for c in &cons {
                let mut c2 = c.clone();
                let a = core::mem::replace(&mut c2.coeffs[var], Scalar::zero());
                if !a.is_zero() {
                    c2.rhs -= &a * &m;
                }
                let c2 = c2.normalize();
                match c2.is_trivial() {
                    Some(true) => {}
                    Some(false) => return None,
                    None => {
                        next.insert(c2);
                    }
                }
            }
            cons = next;
            point.push(m);
        }
        Some(point)
    }
}

/// Feasible weight vector proving null-cone membership in some frame:
/// the relabelling applied, the canonical witness, and every support
/// element with its margin Σxᵢbᵢ ≤ −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub permutation: FramePermutation,
    pub weights: WeightVector,
    pub margins: Vec<(BoostWeight, Scalar)>,
}

impl Certificate {
    /// Re-verify every margin from scratch against μ's support.
    pub fn verify(&self, mu: &StructureConstants, g: &NullFrameMetric) -> Result<(), Error> {
        let permuted = self.permutation.apply(mu, g)?;
        let sup = support(&permuted.as_tensor(), g.p(), g.k());
        if sup.len() != self.margins.len() {
            return Err(Error::InvalidCertificate(format!(
                "support has {} weights, certificate lists {}",
                sup.len(),
                self.margins.len()
            )));
        }
        for (w, margin) in &self.margins {
            if !sup.contains(w) {
                return Err(Error::InvalidCertificate(format!(
                    "weight {:?} not in support",
                    w.0
                )));
            }
            let recomputed = self.weights.dot(w);
            if &recomputed != margin {
                return Err(Error::InvalidCertificate(format!(
                    "margin mismatch at {:?}",
                    w.0
                )));
            }
            if recomputed > -Scalar::one() {
                return Err(Error::InvalidCertificate(format!(
                    "margin {} > -1 at {:?}",
                    scalar::format(&recomputed),
                    w.0
                )));
            }
        }
        if !self.weights.is_well_ordered() {
            return Err(Error::InvalidCertificate("weights not canonical".into()));
        }
        Ok(())
    }
}

/// Null-pair relabelling: swap bit per target pair, then a permutation of
/// pairs (slot pair i is filled by original pair `pair_perm[i]`).
/// Spacelike directions are fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramePermutation {
    pub swaps: Vec<bool>,
    pub pair_perm: Vec<usize>,
}

impl FramePermutation {
    pub fn identity(p: usize) -> Self {
        FramePermutation {
            swaps: vec![false; p],
            pair_perm: (0..p).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.swaps.iter().any(|&s| s) && self.pair_perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// 0-based index permutation: slot s is occupied by basis vector
    /// perm[s] of the original frame.
    pub fn index_map(&self, g: &NullFrameMetric) -> Vec<usize> {
        let p = g.p();
        let mut map = Vec::with_capacity(g.dim());
        for i in 0..p {
            let src = self.pair_perm[i];
            let (even, odd) = if self.swaps[i] {
                (2 * src + 1, 2 * src)
            } else {
                (2 * src, 2 * src + 1)
            };
            map.push(even);
            map.push(odd);
        }
        for s in 2 * p..g.dim() {
            map.push(s);
        }
        map
    }

    pub fn to_basis_change(&self, g: &NullFrameMetric) -> BasisChange {
        BasisChange::from_permutation(&self.index_map(g))
    }

    pub fn apply(
        &self,
        mu: &StructureConstants,
        g: &NullFrameMetric,
    ) -> Result<StructureConstants, Error> {
        mu.change_basis(&self.to_basis_change(g))
    }
}

/// Normalized case tag [x₁,…,x_p]: the canonical witness rescaled so the
/// tightest support constraint sits exactly at −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseLabel(pub WeightVector);

impl CaseLabel {
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.0 .0.iter().map(scalar::format).collect();
        format!("[{}]", parts.join(","))
    }
}

fn feasibility_system(s: &BTreeSet<BoostWeight>, p: usize) -> BTreeSet<fm::Constraint> {
    let mut cons = BTreeSet::new();
    for w in s {
        let coeffs: Vec<Scalar> = w.0.iter().map(|&b| scalar::int(b)).collect();
        cons.insert(fm::constraint(coeffs, scalar::int(-1)));
    }
    // ordering x₁ ≥ x₂ ≥ … ≥ x_p ≥ 0
    for i in 0..p.saturating_sub(1) {
        let mut coeffs = vec![Scalar::zero(); p];
        coeffs[i] = -Scalar::one();
        coeffs[i + 1] = Scalar::one();
        cons.insert(fm::constraint(coeffs, Scalar::zero()));
    }
    if p > 0 {
        let mut coeffs = vec![Scalar::zero(); p];
        coeffs[p - 1] = -Scalar::one();
        cons.insert(fm::constraint(coeffs, Scalar::zero()));
    }
    cons
}

/// Exact feasibility of {Σxᵢbᵢ ≤ −1 ∀b ∈ S, x₁ ≥ … ≥ x_p ≥ 0}. On
/// success returns the lexicographically minimal vertex with its margin
/// list; an empty support is trivially certified (μ = 0 is the origin).
pub fn case_feasibility(s: &BTreeSet<BoostWeight>, p: usize) -> Option<Certificate> {
    if s.is_empty() {
        return Some(Certificate {
            permutation: FramePermutation::identity(p),
            weights: WeightVector(vec![Scalar::zero(); p]),
            margins: Vec::new(),
        });
    }
    let point = fm::lex_min(feasibility_system(s, p), p)?;
    let weights = WeightVector(point);
    let margins = s.iter().map(|w| (w.clone(), weights.dot(w))).collect();
    Some(Certificate {
        permutation: FramePermutation::identity(p),
        weights,
        margins,
    })
}

/// Canonical case label: the feasibility witness rescaled so the tightest
/// margin is exactly −1. Empty support gets the zero label.
pub fn classify_case(s: &BTreeSet<BoostWeight>, p: usize) -> Option<CaseLabel> {
    let cert = case_feasibility(s, p)?;
    if cert.margins.is_empty() {
        return Some(CaseLabel(cert.weights));
    }
    let tightest = cert
        .margins
        .iter()
        .map(|(_, m)| m.clone())
        .max()
        .expect("nonempty margins");
    let scale = -tightest.recip();
    Some(CaseLabel(WeightVector(
        cert.weights.0.iter().map(|x| x * &scale).collect(),
    )))
}

/// Try all 2^p · p! null-pair relabellings (swap masks in ascending
/// binary order; for each mask, pair permutations in lexicographic
/// order); the first certificate in that fixed order wins.
pub fn membership_with_permutations(
    mu: &StructureConstants,
    g: &NullFrameMetric,
) -> Result<Option<Certificate>, Error> {
    if !mu.is_lie_algebra() {
        return Err(Error::NotLieAlgebra);
    }
    let p = g.p();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations_lex((0..p).collect(), &mut perms);
    for mask in 0..(1u32 << p) {
        let swaps: Vec<bool> = (0..p).map(|i| mask >> i & 1 == 1).collect();
        for pair_perm in &perms {
            let fp = FramePermutation {
                swaps: swaps.clone(),
                pair_perm: pair_perm.clone(),
            };
            let permuted = fp.apply(mu, g)?;
            let sup = support(&permuted.as_tensor(), p, g.k());
            if let Some(base) = case_feasibility(&sup, p) {
                return Ok(Some(Certificate {
                    permutation: fp,
                    ..base
                }));
            }
        }
    }
    Ok(None)
}

fn permutations_lex(items: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    fn rec(prefix: &mut Vec<usize>, rest: &[usize], out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for (i, &x) in rest.iter().enumerate() {
            prefix.push(x);
            let mut next: Vec<usize> = rest.to_vec();
            next.remove(i);
            rec(prefix, &next, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), &items, out);
}

/// Necessary-condition battery. Any failure certifies NON-membership; a
/// full pass is necessary-only (membership stays open without a
/// certificate).
#[derive(Debug, Clone)]
pub struct NecessaryReport {
    pub invariants: Vec<(String, Scalar)>,
    pub invariants_all_zero: bool,
    pub killing_nilpotent: bool,
    pub killing_index: Option<usize>,
    pub killing_index_bound: usize,
    pub killing_index_ok: bool,
    pub semisimple: bool,
    pub passes: bool,
}

pub fn necessary_conditions(
    mu: &StructureConstants,
    g: &NullFrameMetric,
    pack: &CurvaturePack,
) -> NecessaryReport {
    let invariants = scalar_invariants(pack);
    let invariants_all_zero = invariants.iter().all(|(_, v)| v.is_zero());
    let killing_index = pack.killing_op.nilpotency_index();
    let killing_nilpotent = killing_index.is_some();
    let killing_index_bound = if g.k() == 0 { 2 * g.p() } else { 2 * g.p() + 1 };
    let killing_index_ok = killing_index.map_or(false, |i| i <= killing_index_bound);
    let semisimple = mu.killing_matrix().rank() == mu.dim();
    let passes = invariants_all_zero && killing_nilpotent && killing_index_ok && !semisimple;
    NecessaryReport {
        invariants,
        invariants_all_zero,
        killing_nilpotent,
        killing_index,
        killing_index_bound,
        killing_index_ok,
        semisimple,
        passes,
    }
}

/// All structure-constant positions (a, b<c) whose boost weight w obeys
/// Σxᵢwᵢ ≤ −1, grouped by weight (and filtered by odd split parity when
/// k = 0). Indices are 0-based.
pub fn allowed_components(
    x: &WeightVector,
    p: usize,
    k: usize,
) -> Vec<(BoostWeight, Vec<(usize, usize, usize)>)> {
    let n = 2 * p + k;
    let minus_one = -Scalar::one();
    let variance = [Slot::Up, Slot::Down, Slot::Down];
    let mut groups: BTreeMap<BoostWeight, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                let w = component_weight(&[a as u8, b as u8, c as u8], &variance, p, k)
                    .expect("indices in range");
                if k == 0 && w.sum().rem_euclid(2) == 0 {
                    continue;
                }
                if x.dot(&w) <= minus_one {
                    groups.entry(w).or_default().push((a, b, c));
                }
            }
        }
    }
    groups.into_iter().collect()
}

/// Smallest m such that no sum of m (or more) allowed structure-constant
/// weights lands in the Ricci diamond {Σ|bᵢ| ≤ 2, even parity when k = 0}.
/// Allowed weights satisfy Σ|bᵢ| ≤ 3, the case inequality, and odd split
/// parity when k = 0.
pub fn universality_order(x: &WeightVector, p: usize, k: usize) -> usize {
    let v: Vec<BoostWeight> = enumerate_weights(p, 3)
        .into_iter()
        .filter(|w| {
            (k > 0 || w.sum().rem_euclid(2) == 1) && x.dot(w) <= -Scalar::one()
        })
        .collect();
    let diamond: Vec<BoostWeight> = enumerate_weights(p, 2)
        .into_iter()
        .filter(|w| k > 0 || w.sum().rem_euclid(2) == 0)
        .collect();
    if v.is_empty() {
        return 1;
    }
    // sums of m allowed weights have x-value ≤ −m; once −m drops below the
    // diamond's minimum x-value the intersection is empty forever
    let v_min = diamond
        .iter()
        .map(|w| x.dot(w))
        .min()
        .expect("diamond contains the origin");
    let mut bound = 1usize;
    while scalar::int(-(bound as i64)) >= v_min {
        bound += 1;
    }
    let diamond: BTreeSet<Vec<i64>> = diamond.into_iter().map(|w| w.0).collect();
    let mut hits = vec![false; bound + 1];
    let mut reach: BTreeSet<Vec<i64>> = BTreeSet::new();
    reach.insert(vec![0; p]);
    for m in 1..=bound {
        let mut next = BTreeSet::new();
        for r in &reach {
            for w in &v {
                let s: Vec<i64> = r.iter().zip(&w.0).map(|(a, b)| a + b).collect();
                // prune points whose x-value already fell below everything
                // the diamond can reach (x-values only decrease)
                if x.dot(&BoostWeight(s.clone())) >= v_min {
                    next.insert(s);
                }
            }
        }
        hits[m] = next.iter().any(|s| diamond.contains(s));
        reach = next;
    }
    (1..=bound)
        .find(|&m| (m..=bound).all(|j| !hits[j]))
        .unwrap_or(bound)
}

fn enumerate_weights(p: usize, abs_bound: i64) -> Vec<BoostWeight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; p];
    fn rec(cur: &mut Vec<i64>, slot: usize, remaining: i64, out: &mut Vec<BoostWeight>) {
        if slot == cur.len() {
            out.push(BoostWeight(cur.clone()));
            return;
        }
        for v in -remaining..=remaining {
            cur[slot] = v;
            rec(cur, slot + 1, remaining - v.abs(), out);
        }
        cur[slot] = 0;
    }
    rec(&mut cur, 0, abs_bound, &mut out);
    out
}

/// Per-λ audit of the one-parameter contraction: every component of the
/// certified frame's bracket scales by λ^e with integer exponent e ≤ −1.
#[derive(Debug, Clone)]
pub struct ContractionReport {
    pub integer_weights: WeightVector,
    /// (λ, per-weight exponents, all components shrink for this λ)
    pub evaluations: Vec<(Scalar, Vec<(BoostWeight, i64)>, bool)>,
}

pub fn contraction_limit_check(
    mu: &StructureConstants,
    cert: &Certificate,
    lambdas: &[Scalar],
    g: &NullFrameMetric,
) -> Result<ContractionReport, Error> {
    cert.verify(mu, g)
        .map_err(|e| Error::InvalidCertificate(format!("{e}")))?;
    let permuted = cert.permutation.apply(mu, g)?;
    let t = permuted.as_tensor();
    let x_int = cert.weights.cleared_denominators();
    let p = g.p();
    let k = g.k();
    let mut evaluations = Vec::new();
    for lambda in lambdas {
        let acted = boostweight::boost_act(&t, &x_int, lambda, p, k)?;
        let mut exponents = Vec::new();
        for w in support(&t, p, k) {
            let e = x_int.dot(&w);
            let e = scalar::to_i64(&e).ok_or(Error::NonIntegralExponent)?;
            if e > -1 {
                return Err(Error::InvalidCertificate(format!(
                    "integer weights give exponent {e} > -1"
                )));
            }
            exponents.push((w, e));
        }
        // componentwise scaling identity
        for (idx, v) in t.iter() {
            let w = component_weight(idx, t.variance(), p, k)?;
            let e = scalar::to_i64(&x_int.dot(&w)).ok_or(Error::NonIntegralExponent)?;
            let expect = v * &scalar::pow(lambda, e);
            if acted.get(idx) != expect {
                return Err(Error::InvalidCertificate(
                    "boost action disagrees with per-component scaling".into(),
                ));
            }
        }
        // exponents are ≤ −1, so components shrink exactly when |λ| > 1
        let shrinks = lambda.abs() > Scalar::one();
        evaluations.push((lambda.clone(), exponents, shrinks));
    }
    Ok(ContractionReport {
        integer_weights: x_int,
        evaluations,
    })
}

/// Canonicalize a raw weight vector into a case label (sorted descending,
/// nonnegative).
pub fn label_from_weights(x: &WeightVector) -> Result<CaseLabel, Error> {
    let (canon, _) = canonicalize_weights(x)?;
    Ok(CaseLabel(canon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, one, rat};

    fn wset(ws: &[&[i64]]) -> BTreeSet<BoostWeight> {
        ws.iter().map(|w| BoostWeight(w.to_vec())).collect()
    }

    #[test]
    fn feasibility_spec_cases() {
        // {(−1,2),(0,−1)} → feasible with x = (3,1)
        let cert = case_feasibility(&wset(&[&[-1, 2], &[0, -1]]), 2).unwrap();
        assert_eq!(cert.weights, WeightVector::from_i64(&[3, 1]));
        for (_, m) in &cert.margins {
            assert!(*m <= -one());
        }
        // {(1,0)} → infeasible
        assert!(case_feasibility(&wset(&[&[1, 0]]), 2).is_none());
        // {(1,−2)} → feasible with x = (1,1)
        let cert = case_feasibility(&wset(&[&[1, -2]]), 2).unwrap();
        assert_eq!(cert.weights, WeightVector::from_i64(&[1, 1]));
        // empty support: vacuous certificate
        let cert = case_feasibility(&BTreeSet::new(), 2).unwrap();
        assert!(cert.margins.is_empty());
        assert_eq!(cert.weights, WeightVector::from_i64(&[0, 0]));
    }

    #[test]
    fn classification_labels() {
        // [3,1]a support {(−1,2),(0,−1),(−1,0)}
        let label = classify_case(&wset(&[&[-1, 2], &[0, -1], &[-1, 0]]), 2).unwrap();
        assert_eq!(label.0, WeightVector::from_i64(&[3, 1]));
        assert_eq!(label.display(), "[3,1]");
        // s5_35-nilradical family → [3/2, 1/2]
        let label = classify_case(&wset(&[&[-1, 1], &[0, -2], &[-1, 0]]), 2).unwrap();
        assert_eq!(label.0, WeightVector(vec![rat(3, 2), rat(1, 2)]));
        // {C^4_13, C^2_13} → [1/3,1/3]
        let label = classify_case(&wset(&[&[-1, -2], &[-2, -1]]), 2).unwrap();
        assert_eq!(label.0, WeightVector(vec![rat(1, 3), rat(1, 3)]));
        // scaling invariance: labels depend only on the support
        let label2 = classify_case(&wset(&[&[-1, -2], &[-2, -1]]), 2).unwrap();
        assert_eq!(label, label2);
    }

    #[test]
    fn tightest_constraint_is_minus_one() {
        for s in [
            wset(&[&[-1, 2], &[0, -1]]),
            wset(&[&[-2, 1], &[-1, -2]]),
            wset(&[&[-2, 0], &[-1, -1], &[0, -2]]),
            wset(&[&[-1, 1], &[0, -2]]),
        ] {
            let label = classify_case(&s, 2).unwrap();
            let tightest = s.iter().map(|w| label.0.dot(w)).max().unwrap();
            assert_eq!(tightest, int(-1));
        }
    }

    #[test]
    fn permutation_index_maps() {
        let g = NullFrameMetric::new(2, 1).unwrap();
        let id = FramePermutation::identity(2);
        assert_eq!(id.index_map(&g), vec![0, 1, 2, 3, 4]);
        let swap_first = FramePermutation {
            swaps: vec![true, false],
            pair_perm: vec![0, 1],
        };
        assert_eq!(swap_first.index_map(&g), vec![1, 0, 2, 3, 4]);
        let exchange = FramePermutation {
            swaps: vec![false, false],
            pair_perm: vec![1, 0],
        };
        assert_eq!(exchange.index_map(&g), vec![2, 3, 0, 1, 4]);
    }

    #[test]
    fn membership_finds_certificates() {
        // [3,1]a: certificate with x = (3,1) in the identity frame
        let mut mu = StructureConstants::new(4);
        mu.set(0, 0, 2, int(2)).unwrap();
        mu.set(3, 2, 3, int(2)).unwrap();
        mu.set(2, 0, 3, one()).unwrap();
        let g = NullFrameMetric::new(2, 0).unwrap();
        let cert = membership_with_permutations(&mu, &g).unwrap().unwrap();
        assert!(cert.permutation.is_identity());
        assert_eq!(cert.weights, WeightVector::from_i64(&[3, 1]));
        cert.verify(&mu, &g).unwrap();

        // abelian: vacuous certificate
        let abelian = StructureConstants::new(4);
        let cert = membership_with_permutations(&abelian, &g).unwrap().unwrap();
        assert!(cert.margins.is_empty());

        // a certificate that needs a pair swap: relabel [3,1]a by swapping
        // the first null pair, the search must undo it
        let fp = FramePermutation {
            swaps: vec![true, false],
            pair_perm: vec![0, 1],
        };
        let swapped = fp.apply(&mu, &g).unwrap();
        let cert = membership_with_permutations(&swapped, &g).unwrap().unwrap();
        assert!(!cert.permutation.is_identity());
        cert.verify(&swapped, &g).unwrap();
    }

    #[test]
    fn membership_not_found_for_s33() {
        // s3_3 (α = 0) in (1,2), natural order: support {0, ±2} in slot 1
        let mut mu = StructureConstants::new(3);
        mu.set(2, 0, 1, one()).unwrap(); // C^3_12 = 1
        mu.set(1, 0, 2, -one()).unwrap(); // C^2_13 = −1
        let g = NullFrameMetric::new(1, 1).unwrap();
        assert!(mu.is_lie_algebra());
        assert!(membership_with_permutations(&mu, &g).unwrap().is_none());
    }

    #[test]
    fn necessary_conditions_cases() {
        let g = NullFrameMetric::new(2, 0).unwrap();
        // [3,1]a passes the whole battery
        let mut mu = StructureConstants::new(4);
        mu.set(0, 0, 2, int(2)).unwrap();
        mu.set(3, 2, 3, int(2)).unwrap();
        mu.set(2, 0, 3, one()).unwrap();
        let pack = CurvaturePack::compute(&mu, &g, 1);
        let rep = necessary_conditions(&mu, &g, &pack);
        assert!(rep.passes);
        assert!(rep.killing_index.unwrap() <= 4);

        // sl(2,R)⊕R with the simple part split across a null pair:
        // non-semisimple overall, but tr(K²) ≠ 0 certifies non-membership
        let mut mu = StructureConstants::new(4);
        // E at 0, F at 1, H at 2: [H,E] = 2E, [H,F] = −2F, [E,F] = H
        mu.set(0, 2, 0, int(2)).unwrap();
        mu.set(1, 2, 1, int(-2)).unwrap();
        mu.set(2, 0, 1, one()).unwrap();
        assert!(mu.is_lie_algebra());
        let pack = CurvaturePack::compute(&mu, &g, 1);
        let rep = necessary_conditions(&mu, &g, &pack);
        assert!(!rep.semisimple);
        assert!(!rep.killing_nilpotent);
        let trk2 = rep
            .invariants
            .iter()
            .find(|(n, _)| n == "trK2")
            .map(|(_, v)| v.clone())
            .unwrap();
        assert!(!trk2.is_zero());
        assert!(!rep.passes);

        // s3_3 (α = 0) with the rotation generator placed spacelike
        let mut mu = StructureConstants::new(3);
        // order (b1,b2,b3) = (a2,a3,a1): [b1,b3] = −b2, [b2,b3] = b1
        mu.set(1, 0, 2, -one()).unwrap();
        mu.set(0, 1, 2, one()).unwrap();
        assert!(mu.is_lie_algebra());
        let g12 = NullFrameMetric::new(1, 1).unwrap();
        let pack = CurvaturePack::compute(&mu, &g12, 1);
        let rep = necessary_conditions(&mu, &g12, &pack);
        let trk2 = rep
            .invariants
            .iter()
            .find(|(n, _)| n == "trK2")
            .map(|(_, v)| v.clone())
            .unwrap();
        assert_eq!(trk2, int(4));
        assert!(!rep.passes);
    }

    #[test]
    fn allowed_components_examples() {
        // x = (3,1), weight (−1,2) group contains C^3_14 (0-based (2,0,3))
        let x = WeightVector::from_i64(&[3, 1]);
        let groups = allowed_components(&x, 2, 1);
        let g_m12 = groups
            .iter()
            .find(|(w, _)| w == &BoostWeight(vec![-1, 2]))
            .map(|(_, v)| v.clone())
            .unwrap();
        assert_eq!(g_m12, vec![(2, 0, 3)]);
        // x = (1), p = 1: exactly the type III weights {−1, −2}
        let x1 = WeightVector::from_i64(&[1]);
        let groups = allowed_components(&x1, 1, 2);
        let weights: Vec<BoostWeight> = groups.iter().map(|(w, _)| w.clone()).collect();
        assert_eq!(weights, vec![BoostWeight(vec![-2]), BoostWeight(vec![-1])]);
        let m2: &Vec<(usize, usize, usize)> = &groups[0].1;
        // b.w. −2 positions: C^2_{1i} (0-based (1,0,i)), i spacelike
        assert_eq!(m2, &vec![(1, 0, 2), (1, 0, 3)]);
    }

    #[test]
    fn universality_orders_lorentzian_and_small_cases() {
        assert_eq!(universality_order(&WeightVector::from_i64(&[1, 0]), 2, 1), 3);
        assert_eq!(universality_order(&WeightVector::from_i64(&[3, 1]), 2, 1), 7);
        assert_eq!(
            universality_order(&WeightVector(vec![rat(1, 3), rat(1, 3)]), 2, 1),
            1
        );
        assert_eq!(
            universality_order(&WeightVector(vec![rat(1, 2), rat(1, 2)]), 2, 1),
            2
        );
    }

    #[test]
    fn contraction_audit() {
        let mut mu = StructureConstants::new(4);
        mu.set(0, 0, 2, int(2)).unwrap();
        mu.set(3, 2, 3, int(2)).unwrap();
        mu.set(2, 0, 3, one()).unwrap();
        let g = NullFrameMetric::new(2, 0).unwrap();
        let cert = membership_with_permutations(&mu, &g).unwrap().unwrap();
        let rep =
            contraction_limit_check(&mu, &cert, &[one(), int(2), rat(1, 2)], &g).unwrap();
        // λ = 1: identity (all factors 1); λ = 2: every component shrinks
        assert!(!rep.evaluations[0].2);
        assert!(rep.evaluations[1].2);
        for (_, exps, _) in &rep.evaluations {
            for (_, e) in exps {
                assert!(*e <= -1);
            }
        }
    }
}
