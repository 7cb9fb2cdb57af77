//! Polynomials in named parameters with exact rational coefficients.
//!
//! Catalog entries store structure constants and expected outputs as
//! closed-form expressions in their parameters; binding the parameters
//! evaluates everything down to exact scalars.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::scalar::{self, Scalar};

type Monomial = BTreeMap<String, u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = ParamPoly::default();
        if !c.is_zero() {
            p.terms.insert(Monomial::new(), c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(scalar::int(c))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Self::constant(scalar::rat(n, d))
    }

    pub fn var(name: &str) -> Self {
        let mut m = Monomial::new();
        m.insert(name.to_string(), 1);
        let mut p = ParamPoly::default();
        p.terms.insert(m, scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_empty())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = ParamPoly::default();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ParamPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (v, e) in m2 {
                    *m.entry(v.clone()).or_insert(0) += e;
                }
                let entry = out.terms.entry(m).or_insert_with(Scalar::zero);
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.mul(&ParamPoly::constant(c.clone()))
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for v in m.keys() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        vars.sort();
        vars
    }

    /// Evaluate at the given bindings; every variable must be bound.
    pub fn eval(&self, bindings: &BTreeMap<String, Scalar>) -> Result<Scalar, Error> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m {
                let x = bindings
                    .get(v)
                    .ok_or_else(|| Error::MissingParameter(v.clone()))?;
                term *= scalar::pow(x, e as i64);
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl core::fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_empty() {
                write!(f, "{}", scalar::format(c))?;
            } else {
                write!(f, "{}", scalar::format(c))?;
                for (v, e) in m {
                    if *e == 1 {
                        write!(f, "*{v}")?;
                    } else {
                        write!(f, "*{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn arithmetic_and_evaluation() {
        // −½[(α+β)² − c² − 4ab]
        let a = ParamPoly::var("a");
        let b = ParamPoly::var("b");
        let c = ParamPoly::var("c");
        let al = ParamPoly::var("alpha");
        let be = ParamPoly::var("beta");
        let apb = al.add(&be);
        let expr = apb
            .mul(&apb)
            .sub(&c.mul(&c))
            .sub(&ParamPoly::int(4).mul(&a).mul(&b))
            .scale(&rat(-1, 2));
        let mut bind = BTreeMap::new();
        bind.insert("a".into(), int(1));
        bind.insert("b".into(), rat(-1, 4));
        bind.insert("c".into(), int(1));
        bind.insert("alpha".into(), int(0));
        bind.insert("beta".into(), int(0));
        // Ricci-flat point of the four-dimensional Lorentzian family
        assert_eq!(expr.eval(&bind).unwrap(), int(0));
        bind.insert("b".into(), int(1));
        assert_eq!(expr.eval(&bind).unwrap(), rat(5, 2));
    }

    #[test]
    fn missing_parameter_reported() {
        let p = ParamPoly::var("x");
        assert_eq!(
            p.eval(&BTreeMap::new()),
            Err(Error::MissingParameter("x".into()))
        );
    }

    #[test]
    fn zero_terms_are_dropped() {
        let x = ParamPoly::var("x");
        let zero = x.sub(&x);
        assert!(zero.is_zero());
        assert_eq!(zero.is_constant(), Some(int(0)));
    }
}
