use crate::algebra::shorthand::*;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::moduli::check_genus;

/// Parts of `IE` and `IP` on which the torsion group acts non-trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantPolys {
    pub ie_b_var: LaurentPoly,
    pub ie_dol_var: LaurentPoly,
    pub ip_var: LaurentPoly,
}

pub fn variant_polys(g: u32) -> Result<VariantPolys> {
    check_genus(g, 2)?;
    let k = g as i32;
    let lead = (two_pow(2 * g) - int(1)) * ratio(1, 2);
    let pair = |x: LaurentPoly| (&x + c(1)).pow(2 * g - 2) + (&x - c(1)).pow(2 * g - 2);
    let ie_b_var = (q(2 * k - 2) * pair(q(1))).scale(&lead);
    let ip_var = (t(4 * k - 4) * pair(t(1))).scale(&lead);
    let dol =
        ((u(1) + c(1)) * (v(1) + c(1))).pow(g - 1) + ((u(1) - c(1)) * (v(1) - c(1))).pow(g - 1);
    let ie_dol_var = (uv(3 * k - 3) * dol).scale(&lead);

    let shifted = ie_b_var.shift(crate::algebra::Var::Q, 2 - 2 * k);
    if shifted.degree(crate::algebra::Var::Q) != Some(2 * k - 2)
        || !shifted.palindrome_check(g as i64 - 1)
    {
        return Err(Error::PalindromyFailure(format!(
            "q^(2-2g) IE_var(M_B) at g = {g}"
        )));
    }
    Ok(VariantPolys {
        ie_b_var,
        ie_dol_var,
        ip_var,
    })
}
