use num_traits::{One, Zero};

use super::{LaurentPoly, Monomial, Rational, Var};
use crate::error::{Error, Result};

/// Power series in one variable, known through degree `order` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(var: Var, order: usize) -> Self {
        TruncatedSeries {
            var,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Coefficients for degrees `0..=order`, padding or cutting as needed.
    pub fn from_coeffs(var: Var, order: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(var, order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    /// Expansion of a polynomial in `var` with no negative exponents.
    pub fn from_poly(p: &LaurentPoly, var: Var, order: usize) -> Result<Self> {
        let mut s = Self::zero(var, order);
        for (m, c) in p.terms() {
            let e = m.exp(var);
            if *m != Monomial::var(var, e) {
                return Err(Error::NotASeries(format!("{p} is not univariate in {var}")));
            }
            if e < 0 {
                return Err(Error::NotASeries(format!(
                    "{p} has a negative power of {var}"
                )));
            }
            if let Some(slot) = s.coeffs.get_mut(e as usize) {
                *slot = c.clone();
            }
        }
        Ok(s)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.var, 0, &self.coeffs)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.var, order.min(self.order()), &self.coeffs)
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::SeriesVariableMismatch(
                self.var.symbol(),
                other.var.symbol(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let coeffs: Vec<_> = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Ok(TruncatedSeries {
            var: self.var,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries {
            var: self.var,
            coeffs,
        })
    }

    /// `1 / self` to the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncatedSeries {
            var: self.var,
            coeffs: out,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::shorthand::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn partition_count_series() {
        let den = (c(1) - t(2)) * (c(1) - t(4));
        let s = TruncatedSeries::from_poly(&den, Var::T, 6)
            .unwrap()
            .reciprocal()
            .unwrap();
        // number of (a, b) with 2a + 4b = k
        assert_eq!(s.coeffs(), ints(&[1, 0, 1, 0, 2, 0, 2]).as_slice());
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let den = (c(1) - t(2)) * (c(1) - t(4));
        let inv = TruncatedSeries::from_poly(&den, Var::T, 6)
            .unwrap()
            .reciprocal()
            .unwrap();
        let num = TruncatedSeries::from_poly(&(c(1) + t(3)).pow(4), Var::T, 3).unwrap();
        let s = num.mul(&inv).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.to_poly(), c(1) + t(2) + t(3).scale(&int(4)));
    }

    #[test]
    fn additive_identity() {
        let s = TruncatedSeries::from_coeffs(Var::T, 4, &ints(&[3, -1, 0, 7, 2]));
        assert_eq!(s.add(&TruncatedSeries::zero(Var::T, 4)).unwrap(), s);
    }

    #[test]
    fn reciprocal_requires_unit() {
        let s = TruncatedSeries::from_poly(&t(1), Var::T, 3).unwrap();
        assert_eq!(s.reciprocal(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn rejects_non_series_input() {
        assert!(TruncatedSeries::from_poly(&t(-1), Var::T, 3).is_err());
        assert!(TruncatedSeries::from_poly(&q(1), Var::T, 3).is_err());
        let a = TruncatedSeries::one(Var::T, 2);
        let b = TruncatedSeries::one(Var::Q, 2);
        assert!(a.mul(&b).is_err());
    }
}
