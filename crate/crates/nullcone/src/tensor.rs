//! Variance-typed sparse tensors over exact rationals.
//!
//! Components are stored in a sorted map keyed by the multi-index; zeros
//! are never stored, so exact equality is map equality. Indices are
//! 0-based `u8` (dimensions stay ≤ 16).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    variance: Vec<Slot>,
    comps: BTreeMap<Vec<u8>, Scalar>,
}

impl Tensor {
    pub fn new(dim: usize, variance: Vec<Slot>) -> Self {
        Tensor {
            dim,
            variance,
            comps: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn variance(&self) -> &[Slot] {
        &self.variance
    }

    pub fn order(&self) -> usize {
        self.variance.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn get(&self, idx: &[u8]) -> Scalar {
        self.comps.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Overwrite one component; zero deletes.
    pub fn set(&mut self, idx: &[u8], v: Scalar) {
        debug_assert_eq!(idx.len(), self.variance.len());
        debug_assert!(idx.iter().all(|&i| (i as usize) < self.dim));
        if v.is_zero() {
            self.comps.remove(idx);
        } else {
            self.comps.insert(idx.to_vec(), v);
        }
    }

    /// Add into one component; zero results are dropped.
    pub fn add_to(&mut self, idx: &[u8], v: Scalar) {
        if v.is_zero() {
            return;
        }
        debug_assert_eq!(idx.len(), self.variance.len());
        match self.comps.get_mut(idx) {
            Some(cur) => {
                *cur += v;
                if cur.is_zero() {
                    self.comps.remove(idx);
                }
            }
            None => {
                self.comps.insert(idx.to_vec(), v);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.comps.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.variance, other.variance);
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (idx, v) in other.iter() {
            out.add_to(idx, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Tensor::new(self.dim, self.variance.clone());
        }
        self.map(|v| v * c)
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Tensor::new(self.dim, self.variance.clone());
        for (idx, v) in self.iter() {
            out.set(idx, f(v));
        }
        out
    }

    pub fn tensor_product(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut variance = self.variance.clone();
        variance.extend_from_slice(&other.variance);
        let mut out = Tensor::new(self.dim, variance);
        for (i1, v1) in self.iter() {
            for (i2, v2) in other.iter() {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.set(&idx, v1 * v2);
            }
        }
        out
    }

    /// Contract an upper slot against a lower slot.
    pub fn contract(&self, up: usize, down: usize) -> Self {
        assert_ne!(up, down);
        assert_eq!(self.variance[up], Slot::Up);
        assert_eq!(self.variance[down], Slot::Down);
        let keep: Vec<usize> = (0..self.order()).filter(|&s| s != up && s != down).collect();
        let variance = keep.iter().map(|&s| self.variance[s]).collect();
        let mut out = Tensor::new(self.dim, variance);
        for (idx, v) in self.iter() {
            if idx[up] == idx[down] {
                let new_idx: Vec<u8> = keep.iter().map(|&s| idx[s]).collect();
                out.add_to(&new_idx, v.clone());
            }
        }
        out
    }

    /// Reorder slots: new slot s holds what old slot `perm[s]` held.
    pub fn permute_slots(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let variance = perm.iter().map(|&s| self.variance[s]).collect();
        let mut out = Tensor::new(self.dim, variance);
        for (idx, v) in self.iter() {
            let new_idx: Vec<u8> = perm.iter().map(|&s| idx[s]).collect();
            out.set(&new_idx, v.clone());
        }
        out
    }

    pub fn is_symmetric_in(&self, a: usize, b: usize) -> bool {
        self.swap_check(a, b, false)
    }

    pub fn is_antisymmetric_in(&self, a: usize, b: usize) -> bool {
        self.swap_check(a, b, true)
    }

    fn swap_check(&self, a: usize, b: usize, anti: bool) -> bool {
        if self.variance[a] != self.variance[b] {
            return false;
        }
        for (idx, v) in self.iter() {
            let mut sw = idx.clone();
            sw.swap(a, b);
            let other = self.get(&sw);
            let want = if anti { -v.clone() } else { v.clone() };
            if other != want {
                return false;
            }
        }
        true
    }
}
