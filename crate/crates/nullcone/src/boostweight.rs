//! The ℤ^p boost-weight grading of frame indices and tensor components.
//!
//! In the null frame the i-th boost generator scales the null pair
//! (e_{2i}, e_{2i+1}) (0-based) with weights +1/−1 and fixes everything
//! else. Component weights add the basis weight for each upper slot and
//! subtract it for each lower slot; all grading data travels with the
//! pair count p and spacelike count k, since weights are meaningless
//! without them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::scalar::{self, Scalar};
use crate::tensor::{Slot, Tensor};

/// Integer p-tuple grading a single component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoostWeight(pub Vec<i64>);

impl BoostWeight {
    pub fn zero(p: usize) -> Self {
        BoostWeight(vec![0; p])
    }

    pub fn abs_sum(&self) -> i64 {
        self.0.iter().map(|b| b.abs()).sum()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|b| b.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        BoostWeight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Rational weight vector (x₁, …, x_p); canonical form is nonnegative
/// and reversely well-ordered x₁ ≥ … ≥ x_p ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Scalar>);

impl WeightVector {
    pub fn from_i64(entries: &[i64]) -> Self {
        WeightVector(entries.iter().map(|&v| scalar::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Σ xᵢ bᵢ.
    pub fn dot(&self, b: &BoostWeight) -> Scalar {
        assert_eq!(self.0.len(), b.0.len());
        let mut acc = Scalar::zero();
        for (x, &w) in self.0.iter().zip(&b.0) {
            if w != 0 {
                acc += x * scalar::int(w);
            }
        }
        acc
    }

    pub fn is_well_ordered(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
            && self.0.last().map_or(true, |x| !x.is_negative())
    }

    /// Scale by the lcm of denominators: the integer vector labelling the
    /// same projective case.
    pub fn cleared_denominators(&self) -> WeightVector {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let mut lcm = BigInt::one();
        for x in &self.0 {
            lcm = lcm.lcm(x.denom());
        }
        let f = Scalar::from_integer(lcm);
        WeightVector(self.0.iter().map(|x| x * &f).collect())
    }
}

/// Boost weight of basis vector a (0-based): e_{2i} ↦ +uᵢ, e_{2i+1} ↦ −uᵢ
/// for the i-th null pair, spacelike ↦ 0.
pub fn basis_weight(a: usize, p: usize, k: usize) -> Result<BoostWeight, Error> {
    let n = 2 * p + k;
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, dim: n });
    }
    let mut w = vec![0i64; p];
    if a < 2 * p {
        w[a / 2] = if a % 2 == 0 { 1 } else { -1 };
    }
    Ok(BoostWeight(w))
}

/// Weight of one component: +basis weight per upper slot, − per lower.
pub fn component_weight(
    idx: &[u8],
    variance: &[Slot],
    p: usize,
    k: usize,
) -> Result<BoostWeight, Error> {
    assert_eq!(idx.len(), variance.len());
    let mut w = BoostWeight::zero(p);
    for (&i, slot) in idx.iter().zip(variance) {
        let bw = basis_weight(i as usize, p, k)?;
        for (acc, v) in w.0.iter_mut().zip(&bw.0) {
            match slot {
                Slot::Up => *acc += v,
                Slot::Down => *acc -= v,
            }
        }
    }
    Ok(w)
}

/// Partition of T by component boost weight; recombining the parts gives
/// back T exactly.
pub fn decompose(t: &Tensor, p: usize, k: usize) -> BTreeMap<BoostWeight, Tensor> {
    let mut parts: BTreeMap<BoostWeight, Tensor> = BTreeMap::new();
    for (idx, v) in t.iter() {
        let w = component_weight(idx, t.variance(), p, k).expect("indices within dimension");
        parts
            .entry(w)
            .or_insert_with(|| Tensor::new(t.dim(), t.variance().to_vec()))
            .set(idx, v.clone());
    }
    parts
}

/// Boost support Δ: the set of weights carrying nonzero components.
pub fn support(t: &Tensor, p: usize, k: usize) -> BTreeSet<BoostWeight> {
    decompose(t, p, k).into_keys().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaKind {
    /// Σ|bᵢ| ≤ 4 and |bᵢ| ≤ 2; even parity in the split case.
    Riemann,
    /// Σ|bᵢ| ≤ 2; even parity in the split case.
    Ricci,
    /// Odd-indexed objects such as the structure constants:
    /// Σ|bᵢ| ≤ 3 and |bᵢ| ≤ 2; odd parity in the split case.
    Odd,
}

/// Check the Δ bound (and, when k = 0, the split parity rule) on every
/// support element of T.
pub fn check_delta_bounds(t: &Tensor, kind: DeltaKind, p: usize, k: usize) -> bool {
    support(t, p, k).iter().all(|w| weight_in_delta(w, kind, k))
}

pub fn weight_in_delta(w: &BoostWeight, kind: DeltaKind, k: usize) -> bool {
    let (abs_bound, slot_bound, even) = match kind {
        DeltaKind::Riemann => (4, 2, true),
        DeltaKind::Ricci => (2, 2, true),
        DeltaKind::Odd => (3, 2, false),
    };
    if w.abs_sum() > abs_bound || w.max_abs() > slot_bound {
        return false;
    }
    if k == 0 {
        let parity_even = w.sum() % 2 == 0;
        if parity_even != even {
            return false;
        }
    }
    true
}

/// Scale each boost-weight-(b) part of T by λ^(Σxᵢbᵢ). With rational λ
/// every exponent must be an integer.
pub fn boost_act(
    t: &Tensor,
    x: &WeightVector,
    lambda: &Scalar,
    p: usize,
    k: usize,
) -> Result<Tensor, Error> {
    assert!(!lambda.is_zero(), "boost scale factor must be nonzero");
    let mut out = Tensor::new(t.dim(), t.variance().to_vec());
    for (idx, v) in t.iter() {
        let w = component_weight(idx, t.variance(), p, k)?;
        let e = x.dot(&w);
        if !scalar::is_integer(&e) {
            return Err(Error::NonIntegralExponent);
        }
        let e = scalar::to_i64(&e).ok_or(Error::NonIntegralExponent)?;
        out.set(idx, v * &scalar::pow(lambda, e));
    }
    Ok(out)
}

/// Sort a nonnegative weight vector descending; returns the canonical
/// vector and the pair permutation applied (slot i now holds original
/// pair perm[i]).
pub fn canonicalize_weights(x: &WeightVector) -> Result<(WeightVector, Vec<usize>), Error> {
    if x.0.iter().any(Signed::is_negative) {
        return Err(Error::NegativeWeight);
    }
    let mut order: Vec<usize> = (0..x.0.len()).collect();
    // stable sort: ties keep original pair order
    order.sort_by(|&i, &j| x.0[j].cmp(&x.0[i]).then(i.cmp(&j)));
    let sorted = WeightVector(order.iter().map(|&i| x.0[i].clone()).collect());
    Ok((sorted, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureConstants;
    use crate::scalar::{int, one, rat};

    #[test]
    fn basis_weights() {
        // (p,k) = (1,1): e1 → (+1), e2 → (−1), e3 → (0)   [1-based labels]
        assert_eq!(basis_weight(0, 1, 1).unwrap(), BoostWeight(vec![1]));
        assert_eq!(basis_weight(1, 1, 1).unwrap(), BoostWeight(vec![-1]));
        assert_eq!(basis_weight(2, 1, 1).unwrap(), BoostWeight(vec![0]));
        // (p,k) = (2,0): e3 → (0,+1)
        assert_eq!(basis_weight(2, 2, 0).unwrap(), BoostWeight(vec![0, 1]));
        // spacelike always zero
        assert_eq!(basis_weight(5, 2, 2).unwrap(), BoostWeight(vec![0, 0]));
        assert!(basis_weight(6, 2, 2).is_err());
    }

    #[test]
    fn component_weights() {
        // C^2_{1i} in (1, 1+k) → −2
        let w = component_weight(&[1, 0, 2], &[Slot::Up, Slot::Down, Slot::Down], 1, 1).unwrap();
        assert_eq!(w, BoostWeight(vec![-2]));
        // C^3_{14} in (2, 2+k) → (−1, 2)
        let w = component_weight(&[2, 0, 3], &[Slot::Up, Slot::Down, Slot::Down], 2, 1).unwrap();
        assert_eq!(w, BoostWeight(vec![-1, 2]));
        // metric component g_{12} → (0, …, 0)
        let w = component_weight(&[0, 1], &[Slot::Down, Slot::Down], 2, 0).unwrap();
        assert_eq!(w, BoostWeight(vec![0, 0]));
    }

    fn type_iii_mu() -> StructureConstants {
        // dim 4, (1,3): C^2_12 = 5, C^3_13 = 2, C^4_14 = 3, C^2_34 = 7
        let mut mu = StructureConstants::new(4);
        mu.set(1, 0, 1, int(5)).unwrap();
        mu.set(2, 0, 2, int(2)).unwrap();
        mu.set(3, 0, 3, int(3)).unwrap();
        mu.set(1, 2, 3, int(7)).unwrap();
        mu
    }

    #[test]
    fn decompose_partitions_and_recombines() {
        let t = type_iii_mu().as_tensor();
        let parts = decompose(&t, 1, 2);
        let keys: Vec<_> = parts.keys().cloned().collect();
        assert_eq!(
            keys,
            vec![BoostWeight(vec![-1])],
        );
        // type III with a b.w. −2 component as well
        let mut mu = type_iii_mu();
        mu.set(1, 0, 2, int(1)).unwrap(); // C^2_13, weight −2
        let t = mu.as_tensor();
        let parts = decompose(&t, 1, 2);
        assert_eq!(
            parts.keys().cloned().collect::<Vec<_>>(),
            vec![BoostWeight(vec![-2]), BoostWeight(vec![-1])]
        );
        let mut recombined = Tensor::new(4, t.variance().to_vec());
        for part in parts.values() {
            recombined = recombined.add(part);
        }
        assert_eq!(recombined, t);
        // zero tensor → empty map
        assert!(decompose(&Tensor::new(4, vec![Slot::Down]), 1, 2).is_empty());
    }

    #[test]
    fn support_additivity_under_products() {
        let t = type_iii_mu().as_tensor();
        let s = t.tensor_product(&t);
        let sup_t = support(&t, 1, 2);
        let sup_s = support(&s, 1, 2);
        // Minkowski sum bound: every product weight is a sum of factor weights
        for w in &sup_s {
            assert!(sup_t
                .iter()
                .any(|a| sup_t.iter().any(|b| &a.add(b) == w)));
        }
    }

    #[test]
    fn delta_bounds() {
        let mut fake = Tensor::new(6, vec![Slot::Down, Slot::Down]);
        fake.set(&[4, 4], one()); // g_ii-like, weight (0,0) — wait, index 4 is e5
        assert!(check_delta_bounds(&fake, DeltaKind::Ricci, 2, 2));
        // support {(3,0)} is outside the Ricci diamond
        assert!(!weight_in_delta(&BoostWeight(vec![3, 0]), DeltaKind::Ricci, 1));
        assert!(weight_in_delta(&BoostWeight(vec![-1, -1]), DeltaKind::Ricci, 1));
        // split parity: (−1,0) has odd sum, fails the even rule at k = 0
        assert!(!weight_in_delta(&BoostWeight(vec![-1, 0]), DeltaKind::Ricci, 0));
        assert!(weight_in_delta(&BoostWeight(vec![-1, 0]), DeltaKind::Odd, 0));
        // μ of a split catalog entry: all support sums odd
        let mu = type_iii_mu();
        for w in support(&mu.as_tensor(), 2, 0) {
            assert_eq!(w.sum().rem_euclid(2), 1);
        }
    }

    #[test]
    fn boost_act_examples() {
        let t = {
            let mut mu = type_iii_mu();
            mu.set(1, 0, 2, int(1)).unwrap(); // weight −2 part
            mu.as_tensor()
        };
        // x = 0 → unchanged
        let x0 = WeightVector::from_i64(&[0]);
        assert_eq!(boost_act(&t, &x0, &int(2), 1, 2).unwrap(), t);
        // x = (1), λ = 2: (μ)₋₁ halves, (μ)₋₂ quarters
        let x = WeightVector::from_i64(&[1]);
        let acted = boost_act(&t, &x, &int(2), 1, 2).unwrap();
        let parts = decompose(&t, 1, 2);
        let acted_parts = decompose(&acted, 1, 2);
        assert_eq!(
            acted_parts[&BoostWeight(vec![-1])],
            parts[&BoostWeight(vec![-1])].scale(&rat(1, 2))
        );
        assert_eq!(
            acted_parts[&BoostWeight(vec![-2])],
            parts[&BoostWeight(vec![-2])].scale(&rat(1, 4))
        );
        // the metric is fixed by every boost
        let g = crate::geometry::NullFrameMetric::new(1, 2).unwrap().tensor_lower();
        let fixed = boost_act(&g, &WeightVector(vec![rat(7, 2)]), &int(3), 1, 2).unwrap();
        assert_eq!(fixed, g);
        // non-integral exponent with numeric λ
        let xh = WeightVector(vec![rat(1, 2)]);
        assert_eq!(
            boost_act(&t, &xh, &int(2), 1, 2),
            Err(Error::NonIntegralExponent)
        );
    }

    #[test]
    fn boost_act_composes_multiplicatively() {
        let t = type_iii_mu().as_tensor();
        let x = WeightVector::from_i64(&[2]);
        let l1 = rat(3, 2);
        let l2 = rat(-5, 7);
        let both = boost_act(&t, &x, &(&l1 * &l2), 1, 2).unwrap();
        let seq = boost_act(&boost_act(&t, &x, &l1, 1, 2).unwrap(), &x, &l2, 1, 2).unwrap();
        assert_eq!(both, seq);
    }

    #[test]
    fn canonicalization() {
        let (c, perm) = canonicalize_weights(&WeightVector::from_i64(&[1, 3])).unwrap();
        assert_eq!(c, WeightVector::from_i64(&[3, 1]));
        assert_eq!(perm, vec![1, 0]);
        let (c, perm) = canonicalize_weights(&WeightVector::from_i64(&[3, 1])).unwrap();
        assert_eq!(c, WeightVector::from_i64(&[3, 1]));
        assert_eq!(perm, vec![0, 1]);
        let half = WeightVector(vec![rat(1, 2), rat(1, 2)]);
        let (c, perm) = canonicalize_weights(&half).unwrap();
        assert_eq!(c, half);
        assert_eq!(perm, vec![0, 1]);
        assert_eq!(
            canonicalize_weights(&WeightVector::from_i64(&[1, -1])),
            Err(Error::NegativeWeight)
        );
    }

    #[test]
    fn cleared_denominators() {
        let x = WeightVector(vec![rat(3, 2), rat(1, 2)]);
        assert_eq!(x.cleared_denominators(), WeightVector::from_i64(&[3, 1]));
    }
}
