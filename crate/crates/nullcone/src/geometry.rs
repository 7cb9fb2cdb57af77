//! Null-frame metric and left-invariant curvature.
//!
//! Conventions (all verified against worked examples in the test suite):
//! the connection coefficient Γ^a_{bc} is the a-component of the
//! derivative of e_b in the direction e_c, so the torsion identity reads
//! Γ^a_{cb} − Γ^a_{bc} = C^a_{bc}; the Ricci tensor is the contraction
//! Ric_{bd} = Σ_a Riem^a_{bad}; covariant derivatives append their new
//! lower index last.
//!
//! Because the null-frame metric is a permutation pairing (g_{ab} = 1
//! exactly when b is the partner of a), raising and lowering indices is
//! an index relabelling with unit coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::error::Error;
use crate::matrix::DenseMatrix;
use crate::scalar::{self, Scalar};
use crate::tensor::{Slot, Tensor};

/// Metric 2θ¹θ² + … + 2θ^{2p−1}θ^{2p} + Σ (θ^i)² in the null frame:
/// p null pairs followed by k spacelike directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NullFrameMetric {
    p: usize,
    k: usize,
}

impl NullFrameMetric {
    pub fn new(p: usize, k: usize) -> Result<Self, Error> {
        if 2 * p + k < 3 {
            return Err(Error::DimensionTooSmall);
        }
        Ok(NullFrameMetric { p, k })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        2 * self.p + self.k
    }

    /// The index paired with a by the metric (g_{a,partner(a)} = 1);
    /// spacelike indices pair with themselves.
    pub fn partner(&self, a: usize) -> usize {
        if a < 2 * self.p {
            a ^ 1
        } else {
            a
        }
    }

    pub fn is_spacelike(&self, a: usize) -> bool {
        a >= 2 * self.p
    }

    /// g_{ab} (equal to g^{ab}).
    pub fn g(&self, a: usize, b: usize) -> Scalar {
        if b == self.partner(a) {
            scalar::one()
        } else {
            scalar::zero()
        }
    }

    pub fn tensor_lower(&self) -> Tensor {
        let mut t = Tensor::new(self.dim(), vec![Slot::Down, Slot::Down]);
        for a in 0..self.dim() {
            t.set(&[a as u8, self.partner(a) as u8], scalar::one());
        }
        t
    }

    pub fn tensor_upper(&self) -> Tensor {
        let mut t = Tensor::new(self.dim(), vec![Slot::Up, Slot::Up]);
        for a in 0..self.dim() {
            t.set(&[a as u8, self.partner(a) as u8], scalar::one());
        }
        t
    }

    pub fn matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.dim(), self.dim());
        for a in 0..self.dim() {
            m.set(a, self.partner(a), scalar::one());
        }
        m
    }
}

fn relabel_slot(t: &Tensor, slot: usize, g: &NullFrameMetric, flip_to: Slot) -> Tensor {
    let mut variance = t.variance().to_vec();
    variance[slot] = flip_to;
    let mut out = Tensor::new(t.dim(), variance);
    for (idx, v) in t.iter() {
        let mut new_idx = idx.clone();
        new_idx[slot] = g.partner(idx[slot] as usize) as u8;
        out.set(&new_idx, v.clone());
    }
    out
}

/// Contract slot (which must be Down) with g⁻¹.
pub fn raise_index(t: &Tensor, slot: usize, g: &NullFrameMetric) -> Result<Tensor, Error> {
    if slot >= t.order() {
        return Err(Error::IndexOutOfRange {
            index: slot,
            dim: t.order(),
        });
    }
    if t.variance()[slot] != Slot::Down {
        return Err(Error::InvalidStructureConstant(
            "raise_index needs a lower slot".into(),
        ));
    }
    Ok(relabel_slot(t, slot, g, Slot::Up))
}

/// Contract slot (which must be Up) with g.
pub fn lower_index(t: &Tensor, slot: usize, g: &NullFrameMetric) -> Result<Tensor, Error> {
    if slot >= t.order() {
        return Err(Error::IndexOutOfRange {
            index: slot,
            dim: t.order(),
        });
    }
    if t.variance()[slot] != Slot::Up {
        return Err(Error::InvalidStructureConstant(
            "lower_index needs an upper slot".into(),
        ));
    }
    Ok(relabel_slot(t, slot, g, Slot::Down))
}

/// Connection coefficients Γ^a_{bc} = ½ g^{ad}(C_{cdb} − C_{dbc} + C_{bdc}).
pub fn connection(mu: &StructureConstants, g: &NullFrameMetric) -> Tensor {
    assert_eq!(mu.dim(), g.dim());
    let n = g.dim();
    let half = scalar::rat(1, 2);
    let mut t = Tensor::new(n, vec![Slot::Up, Slot::Down, Slot::Down]);
    // C_{xyz} = C^{partner(x)}_{yz}
    let low = |x: usize, y: usize, z: usize| mu.get(g.partner(x), y, z);
    for a in 0..n {
        let d = g.partner(a);
        for b in 0..n {
            for c in 0..n {
                let v = low(c, d, b) - low(d, b, c) + low(b, d, c);
                if !v.is_zero() {
                    t.set(&[a as u8, b as u8, c as u8], v * &half);
                }
            }
        }
    }
    t
}

/// Riem^a_{bcd} = Γ^e_{bd}Γ^a_{ec} − Γ^e_{bc}Γ^a_{ed} − C^e_{cd}Γ^a_{be};
/// antisymmetric in (c, d).
pub fn riemann(gamma: &Tensor, mu: &StructureConstants) -> Tensor {
    let n = gamma.dim();
    let mut by_upper: BTreeMap<u8, Vec<(u8, u8, Scalar)>> = BTreeMap::new();
    let mut by_middle: BTreeMap<u8, Vec<(u8, u8, Scalar)>> = BTreeMap::new();
    for (idx, v) in gamma.iter() {
        by_upper
            .entry(idx[0])
            .or_default()
            .push((idx[1], idx[2], v.clone()));
        by_middle
            .entry(idx[1])
            .or_default()
            .push((idx[0], idx[2], v.clone()));
    }
    let mut out = Tensor::new(n, vec![Slot::Up, Slot::Down, Slot::Down, Slot::Down]);
    // quadratic terms: pair Γ^e_{b,y} with Γ^a_{e,z}
    for (e, ups) in &by_upper {
        if let Some(mids) = by_middle.get(e) {
            for (b, y, v1) in ups {
                for (a, z, v2) in mids {
                    let prod = v1 * v2;
                    out.add_to(&[*a, *b, *z, *y], prod.clone());
                    out.add_to(&[*a, *b, *y, *z], -prod);
                }
            }
        }
    }
    // −C^e_{cd} Γ^a_{be}
    let mut by_last: BTreeMap<u8, Vec<(u8, u8, Scalar)>> = BTreeMap::new();
    for (idx, v) in gamma.iter() {
        by_last
            .entry(idx[2])
            .or_default()
            .push((idx[0], idx[1], v.clone()));
    }
    for (e, c, d, vc) in mu.iter_canonical() {
        if let Some(gs) = by_last.get(&(e as u8)) {
            for (a, b, vg) in gs {
                let prod = vc * vg;
                out.add_to(&[*a, *b, c as u8, d as u8], -prod.clone());
                out.add_to(&[*a, *b, d as u8, c as u8], prod);
            }
        }
    }
    out
}

/// Ric_{bd} = Σ_a Riem^a_{bad}.
pub fn ricci(riem: &Tensor) -> Tensor {
    riem.contract(0, 2)
}

/// ∇_c T: Γ-correction per slot, no partial-derivative term
/// (left-invariance); the new lower index is appended last.
pub fn covariant_derivative(t: &Tensor, gamma: &Tensor) -> Tensor {
    let n = t.dim();
    let mut by_upper: BTreeMap<u8, Vec<(u8, u8, Scalar)>> = BTreeMap::new();
    let mut by_middle: BTreeMap<u8, Vec<(u8, u8, Scalar)>> = BTreeMap::new();
    for (idx, v) in gamma.iter() {
        by_upper
            .entry(idx[0])
            .or_default()
            .push((idx[1], idx[2], v.clone()));
        by_middle
            .entry(idx[1])
            .or_default()
            .push((idx[0], idx[2], v.clone()));
    }
    let mut variance = t.variance().to_vec();
    variance.push(Slot::Down);
    let mut out = Tensor::new(n, variance);
    for (idx, v) in t.iter() {
        for (s, slot) in t.variance().iter().enumerate() {
            match slot {
                Slot::Up => {
                    // +Γ^{a}_{d c} T^{…d…}: d sits at slot s of T
                    if let Some(entries) = by_middle.get(&idx[s]) {
                        for (a, c, w) in entries {
                            let mut new_idx = idx.clone();
                            new_idx[s] = *a;
                            new_idx.push(*c);
                            out.add_to(&new_idx, w * v);
                        }
                    }
                }
                Slot::Down => {
                    // −Γ^{d}_{b c} T^{…}_{…d…}: d sits at slot s of T
                    if let Some(entries) = by_upper.get(&idx[s]) {
                        for (b, c, w) in entries {
                            let mut new_idx = idx.clone();
                            new_idx[s] = *b;
                            new_idx.push(*c);
                            out.add_to(&new_idx, -(w * v));
                        }
                    }
                }
            }
        }
    }
    out
}

/// ∇Riem, ∇²Riem, …, ∇^(k_max)Riem.
pub fn nabla_k_riemann(riem: &Tensor, gamma: &Tensor, k_max: usize) -> Vec<Tensor> {
    let mut out = Vec::with_capacity(k_max);
    let mut cur = riem.clone();
    for _ in 0..k_max {
        cur = covariant_derivative(&cur, gamma);
        out.push(cur.clone());
    }
    out
}

/// Killing operator K = g⁻¹B, i.e. K^a_b = g^{ac} B_{cb}.
pub fn killing_operator(b: &Tensor, g: &NullFrameMetric) -> DenseMatrix {
    operator_from_bilinear(b, g)
}

/// Ricci operator g⁻¹Ric.
pub fn ricci_operator(ric: &Tensor, g: &NullFrameMetric) -> DenseMatrix {
    operator_from_bilinear(ric, g)
}

fn operator_from_bilinear(t: &Tensor, g: &NullFrameMetric) -> DenseMatrix {
    assert_eq!(t.variance(), [Slot::Down, Slot::Down]);
    let n = g.dim();
    let mut m = DenseMatrix::zeros(n, n);
    for (idx, v) in t.iter() {
        m.set(g.partner(idx[0] as usize), idx[1] as usize, v.clone());
    }
    m
}

/// Full contraction of T with itself, every index paired through g.
pub fn full_self_contraction(t: &Tensor, g: &NullFrameMetric) -> Scalar {
    let mut acc = Scalar::zero();
    for (idx, v) in t.iter() {
        let dual: Vec<u8> = idx.iter().map(|&i| g.partner(i as usize) as u8).collect();
        let w = t.get(&dual);
        if !w.is_zero() {
            acc += v * &w;
        }
    }
    acc
}

/// Curvature data computed once from (μ, g); each member is recomputable
/// from the pair.
#[derive(Debug, Clone)]
pub struct CurvaturePack {
    pub metric: NullFrameMetric,
    pub gamma: Tensor,
    pub riem: Tensor,
    pub ric: Tensor,
    pub killing: Tensor,
    pub killing_op: DenseMatrix,
    pub ricci_op: DenseMatrix,
    /// nablas[i] = ∇^(i+1) Riem.
    pub nablas: Vec<Tensor>,
}

impl CurvaturePack {
    pub fn compute(mu: &StructureConstants, g: &NullFrameMetric, k_max: usize) -> Self {
        let gamma = connection(mu, g);
        let riem = riemann(&gamma, mu);
        let ric = ricci(&riem);
        let killing = mu.killing_form();
        let killing_op = killing_operator(&killing, g);
        let ricci_op = ricci_operator(&ric, g);
        let nablas = nabla_k_riemann(&riem, &gamma, k_max);
        CurvaturePack {
            metric: *g,
            gamma,
            riem,
            ric,
            killing,
            killing_op,
            ricci_op,
            nablas,
        }
    }

    pub fn nabla_riem(&self) -> &Tensor {
        &self.nablas[0]
    }
}

/// The curated polynomial invariants: Ricci scalar, Ric·Ric, the full
/// Riemann square, tr(K^m) for m = 1..n, and |∇Riem|². All vanish exactly
/// on the null cone.
pub fn scalar_invariants(pack: &CurvaturePack) -> Vec<(String, Scalar)> {
    use alloc::format;
    let g = &pack.metric;
    let n = g.dim();
    let mut out = Vec::new();
    let ric_up = raise_index(&pack.ric, 0, g).expect("ric has lower slots");
    out.push((String::from("R"), ric_up.contract(0, 1).get(&[])));
    out.push((
        String::from("RicRic"),
        full_self_contraction(&pack.ric, g),
    ));
    out.push((
        String::from("RiemRiem"),
        full_self_contraction(&pack.riem, g),
    ));
    let mut p = DenseMatrix::identity(n);
    for m in 1..=n {
        p = p.mul(&pack.killing_op);
        out.push((format!("trK{m}"), p.trace()));
    }
    out.push((
        String::from("NablaRiemSq"),
        full_self_contraction(pack.nabla_riem(), g),
    ));
    out
}
