//! Lie algebra core: structure constants, Jacobi verification, adjoint
//! operators, derived and lower central series, solvability and
//! semisimplicity tests, basis change, subspace bracket checks.
//!
//! Structure constants C^a_{bc} ([e_b, e_c] = C^a_{bc} e_a) are stored
//! canonically with b < c, so antisymmetry is structural rather than
//! checked.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::tensor::{Slot, Tensor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    entries: BTreeMap<(u8, u8, u8), Scalar>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Self {
        StructureConstants {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_indices(&self, a: usize, b: usize, c: usize) -> Result<(), Error> {
        for idx in [a, b, c] {
            if idx >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    dim: self.dim,
                });
            }
        }
        Ok(())
    }

    /// Set C^a_{bc} = v (and C^a_{cb} = −v). Indices are 0-based.
    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Scalar) -> Result<(), Error> {
        self.check_indices(a, b, c)?;
        if b == c {
            if v.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidStructureConstant(format!(
                "C^{a}_{{{b}{c}}} with repeated lower index must vanish"
            )));
        }
        let (b, c, v) = if b < c { (b, c, v) } else { (c, b, -v) };
        let key = (a as u8, b as u8, c as u8);
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    pub fn add_to(&mut self, a: usize, b: usize, c: usize, v: Scalar) -> Result<(), Error> {
        if v.is_zero() {
            return Ok(());
        }
        let cur = self.get(a, b, c);
        self.set(a, b, c, cur + v)
    }

    /// C^a_{bc} with the sign implied by canonical storage.
    pub fn get(&self, a: usize, b: usize, c: usize) -> Scalar {
        if b == c {
            return Scalar::zero();
        }
        let (bb, cc, sign) = if b < c { (b, c, false) } else { (c, b, true) };
        match self.entries.get(&(a as u8, bb as u8, cc as u8)) {
            Some(v) => {
                if sign {
                    -v.clone()
                } else {
                    v.clone()
                }
            }
            None => Scalar::zero(),
        }
    }

    /// Canonical entries (a, b, c, C^a_{bc}) with b < c, no zeros.
    pub fn iter_canonical(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries
            .iter()
            .map(|(&(a, b, c), v)| (a as usize, b as usize, c as usize, v))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::new(self.dim);
        if c.is_zero() {
            return out;
        }
        for (&k, v) in &self.entries {
            out.entries.insert(k, v * c);
        }
        out
    }

    /// μ as a (1,2)-tensor, both lower orderings populated.
    pub fn as_tensor(&self) -> Tensor {
        let mut t = Tensor::new(self.dim, vec![Slot::Up, Slot::Down, Slot::Down]);
        for (a, b, c, v) in self.iter_canonical() {
            t.set(&[a as u8, b as u8, c as u8], v.clone());
            t.set(&[a as u8, c as u8, b as u8], -v.clone());
        }
        t
    }

    /// Inverse of `as_tensor`; fails unless T is antisymmetric in (1,2).
    pub fn from_tensor(t: &Tensor) -> Result<Self, Error> {
        if t.variance() != [Slot::Up, Slot::Down, Slot::Down] {
            return Err(Error::InvalidStructureConstant(format!(
                "expected one upper and two lower slots, got {:?}",
                t.variance()
            )));
        }
        if !t.is_antisymmetric_in(1, 2) {
            return Err(Error::InvalidStructureConstant(
                "tensor is not antisymmetric in its lower pair".into(),
            ));
        }
        let mut out = Self::new(t.dim());
        for (idx, v) in t.iter() {
            let (a, b, c) = (idx[0] as usize, idx[1] as usize, idx[2] as usize);
            if b < c {
                out.set(a, b, c, v.clone())?;
            }
        }
        Ok(out)
    }

    /// [X, Y] componentwise.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: if x.len() != self.dim { x.len() } else { y.len() },
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, b, c, v) in self.iter_canonical() {
            let coef = &x[b] * &y[c] - &x[c] * &y[b];
            if !coef.is_zero() {
                out[a] += v * &coef;
            }
        }
        Ok(out)
    }

    /// Matrix of ad_X = [X, ·].
    pub fn ad_operator(&self, x: &[Scalar]) -> DenseMatrix {
        assert_eq!(x.len(), self.dim);
        let mut m = DenseMatrix::zeros(self.dim, self.dim);
        for (a, b, c, v) in self.iter_canonical() {
            // column c picks up x_b C^a_{bc}, column b picks up −x_c C^a_{bc}
            if !x[b].is_zero() {
                let cur = m.get(a, c) + &(&x[b] * v);
                m.set(a, c, cur);
            }
            if !x[c].is_zero() {
                let cur = m.get(a, b) - &(&x[c] * v);
                m.set(a, b, cur);
            }
        }
        m
    }

    pub fn ad_basis(&self, b: usize) -> DenseMatrix {
        let mut x = vec![Scalar::zero(); self.dim];
        x[b] = Scalar::one();
        self.ad_operator(&x)
    }

    /// Jacobi defect J^a_{bcd} = Σ_e (C^a_{be}C^e_{cd} + C^a_{ce}C^e_{db} +
    /// C^a_{de}C^e_{bc}), stored on b < c < d (it is totally antisymmetric
    /// in the lower triple). μ is a Lie algebra iff this vanishes.
    pub fn jacobi_defect(&self) -> Tensor {
        let mut t = Tensor::new(
            self.dim,
            vec![Slot::Up, Slot::Down, Slot::Down, Slot::Down],
        );
        for b in 0..self.dim {
            for c in b + 1..self.dim {
                for d in c + 1..self.dim {
                    for a in 0..self.dim {
                        let v = self.jacobi_component(a, b, c, d);
                        t.set(&[a as u8, b as u8, c as u8, d as u8], v);
                    }
                }
            }
        }
        t
    }

    /// J^a_{bcd} for arbitrary index order.
    pub fn jacobi_component(&self, a: usize, b: usize, c: usize, d: usize) -> Scalar {
        let mut v = Scalar::zero();
        for e in 0..self.dim {
            let t1 = self.get(a, b, e) * self.get(e, c, d);
            let t2 = self.get(a, c, e) * self.get(e, d, b);
            let t3 = self.get(a, d, e) * self.get(e, b, c);
            v += t1 + t2 + t3;
        }
        v
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.jacobi_defect().is_zero()
    }

    fn require_lie(&self) -> Result<(), Error> {
        if self.is_lie_algebra() {
            Ok(())
        } else {
            Err(Error::NotLieAlgebra)
        }
    }

    /// Derived series 𝔤 ⊇ [𝔤,𝔤] ⊇ [[𝔤,𝔤],[𝔤,𝔤]] ⊇ …, listed until
    /// stable. Solvable iff the last member is zero.
    pub fn derived_series(&self) -> Result<Vec<Subspace>, Error> {
        self.require_lie()?;
        Ok(self.series_unchecked(true))
    }

    /// Lower central series 𝔤 ⊇ [𝔤,𝔤] ⊇ [𝔤,[𝔤,𝔤]] ⊇ …. Nilpotent iff
    /// it reaches zero.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>, Error> {
        self.require_lie()?;
        Ok(self.series_unchecked(false))
    }

    pub(crate) fn series_unchecked(&self, derived: bool) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut chain = vec![full.clone()];
        loop {
            let cur = chain.last().unwrap();
            let left = if derived { cur } else { &full };
            let next = Subspace::bracket_span(self, left, cur);
            if next.dim() == cur.dim() {
                break;
            }
            chain.push(next);
            if chain.last().unwrap().dim() == 0 {
                break;
            }
        }
        chain
    }

    pub fn is_solvable(&self) -> Result<bool, Error> {
        Ok(self.derived_series()?.last().unwrap().dim() == 0)
    }

    pub fn is_nilpotent(&self) -> Result<bool, Error> {
        Ok(self.lower_central_series()?.last().unwrap().dim() == 0)
    }

    /// Killing form B_{ab} = tr(ad_{e_a} ∘ ad_{e_b}) as a symmetric
    /// (0,2)-tensor.
    pub fn killing_form(&self) -> Tensor {
        let ads: Vec<DenseMatrix> = (0..self.dim).map(|b| self.ad_basis(b)).collect();
        let mut t = Tensor::new(self.dim, vec![Slot::Down, Slot::Down]);
        for a in 0..self.dim {
            for b in a..self.dim {
                let v = ads[a].mul(&ads[b]).trace();
                t.set(&[a as u8, b as u8], v.clone());
                if a != b {
                    t.set(&[b as u8, a as u8], v);
                }
            }
        }
        t
    }

    pub fn killing_matrix(&self) -> DenseMatrix {
        let t = self.killing_form();
        let mut m = DenseMatrix::zeros(self.dim, self.dim);
        for (idx, v) in t.iter() {
            m.set(idx[0] as usize, idx[1] as usize, v.clone());
        }
        m
    }

    /// Cartan criterion: semisimple iff the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> Result<bool, Error> {
        self.require_lie()?;
        Ok(self.killing_matrix().rank() == self.dim)
    }

    /// Transformed constants (A·μ)(X,Y) = A⁻¹ μ(AX, AY), where the columns
    /// of A are the new basis vectors in old coordinates.
    pub fn change_basis(&self, a: &BasisChange) -> Result<Self, Error> {
        if a.matrix().rows() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.matrix().rows(),
            });
        }
        let m = a.matrix();
        let minv = a.inverse();
        let mut out = Self::new(self.dim);
        for bp in 0..self.dim {
            for cp in bp + 1..self.dim {
                // μ(A e_bp, A e_cp) in old coordinates
                let mut img = vec![Scalar::zero(); self.dim];
                for (d, e, f, v) in self.iter_canonical() {
                    let coef = m.get(e, bp) * m.get(f, cp) - m.get(f, bp) * m.get(e, cp);
                    if !coef.is_zero() {
                        img[d] += v * &coef;
                    }
                }
                let new_img = minv.mul_vec(&img);
                for (ap, v) in new_img.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(ap, bp, cp, v)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// True iff [U, V] ⊆ W, checked on basis pairs with exact rank tests.
    pub fn subspace_bracket_check(&self, u: &Subspace, v: &Subspace, w: &Subspace) -> bool {
        for x in u.basis() {
            for y in v.basis() {
                let img = self.bracket(x, y).expect("ambient dimensions match");
                if !w.contains(&img) {
                    return false;
                }
            }
        }
        true
    }

    /// Structure constants of the bracket restricted to U, in U's basis
    /// coordinates; None when U is not closed under the bracket.
    pub fn restrict_to(&self, u: &Subspace) -> Option<StructureConstants> {
        let d = u.dim();
        let mut out = StructureConstants::new(d);
        if d == 0 {
            return Some(out);
        }
        let cols = DenseMatrix::from_rows(u.basis().to_vec()).transpose();
        for i in 0..d {
            for j in i + 1..d {
                let img = self.bracket(&u.basis()[i], &u.basis()[j]).ok()?;
                let coords = cols.solve(&img)?;
                for (a, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(a, i, j, v).ok()?;
                    }
                }
            }
        }
        Some(out)
    }

    /// True iff U is closed under the bracket and its restricted lower
    /// central series reaches zero.
    pub fn is_nilpotent_subalgebra(&self, u: &Subspace) -> bool {
        match self.restrict_to(u) {
            Some(sub) => sub.series_unchecked(false).last().unwrap().dim() == 0,
            None => false,
        }
    }
}

/// Subspace of the ambient space, stored as a reduced-echelon basis so
/// equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient);
        }
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
            };
        }
        let m = DenseMatrix::from_rows(vectors.to_vec());
        let (rref, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut basis = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let mut v = vec![Scalar::zero(); ambient];
            v[i] = Scalar::one();
            basis.push(v);
        }
        Subspace { ambient, basis }
    }

    /// Span of the given 0-based basis indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Scalar>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace::span(ambient, &vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        DenseMatrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // solve A^T x = B^T y: kernel of the n×(a+b) block matrix [A^T  −B^T]
        let a = self.dim();
        let b = other.dim();
        let mut m = DenseMatrix::zeros(self.ambient, a + b);
        for (j, row) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, row[i].clone());
            }
        }
        for (j, row) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, a + j, -row[i].clone());
            }
        }
        let vectors: Vec<Vec<Scalar>> = m
            .kernel()
            .into_iter()
            .map(|xy| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (j, row) in self.basis.iter().enumerate() {
                    if !xy[j].is_zero() {
                        for i in 0..self.ambient {
                            let t = &xy[j] * &row[i];
                            v[i] += t;
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// span{[u, v] : u ∈ U basis, v ∈ V basis}.
    pub fn bracket_span(mu: &StructureConstants, u: &Subspace, v: &Subspace) -> Subspace {
        let mut images = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                images.push(mu.bracket(x, y).expect("ambient dimensions match"));
            }
        }
        Subspace::span(u.ambient, &images)
    }
}

/// Invertible basis change with the inverse cached.
#[derive(Debug, Clone)]
pub struct BasisChange {
    matrix: DenseMatrix,
    inverse: DenseMatrix,
}

impl BasisChange {
    pub fn new(matrix: DenseMatrix) -> Result<Self, Error> {
        let inverse = matrix.inverse()?;
        Ok(BasisChange { matrix, inverse })
    }

    pub fn identity(n: usize) -> Self {
        BasisChange {
            matrix: DenseMatrix::identity(n),
            inverse: DenseMatrix::identity(n),
        }
    }

    /// Column j is the new basis vector f_j in old coordinates.
    pub fn from_columns(cols: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        Self::new(DenseMatrix::from_rows(cols).transpose())
    }

    /// Permutation: slot j is occupied by old basis vector perm[j].
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = DenseMatrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Scalar::one());
        }
        Self::new(m).expect("permutation matrices are invertible")
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &DenseMatrix {
        &self.inverse
    }
}
