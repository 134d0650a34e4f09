use super::LaurentPoly;
use crate::error::Result;

/// Sums `num_i / den_i` over a caller-chosen common denominator.
///
/// Every `den_i` must divide the common denominator exactly and the final sum
/// must be divisible by it; closed forms whose individual summands are
/// rational functions but whose total is a polynomial are evaluated this way.
#[derive(Clone, Debug)]
pub struct CommonDenominator {
    den: LaurentPoly,
    acc: LaurentPoly,
}

impl CommonDenominator {
    pub fn new(den: LaurentPoly) -> Self {
        CommonDenominator {
            den,
            acc: LaurentPoly::zero(),
        }
    }

    /// Adds a polynomial summand.
    pub fn add_poly(&mut self, p: &LaurentPoly) -> Result<&mut Self> {
        self.acc = self.acc.checked_add(&p.checked_mul(&self.den)?)?;
        Ok(self)
    }

    /// Adds `num / den`.
    pub fn add(&mut self, num: &LaurentPoly, den: &LaurentPoly) -> Result<&mut Self> {
        let cofactor = self.den.exact_div(den)?;
        self.acc = self.acc.checked_add(&num.checked_mul(&cofactor)?)?;
        Ok(self)
    }

    pub fn finish(&self) -> Result<LaurentPoly> {
        self.acc.exact_div(&self.den)
    }
}
