use num_bigint::BigInt;

use crate::algebra::shorthand::*;
use crate::algebra::{LaurentPoly, Rational};
use crate::dt::invert_ie;
use crate::error::{Error, Result};
use crate::moduli::{check_genus, Side};
use crate::strata::{e_exceptional, incidence_poincare, sigma_omega_sl2};

fn qm1(k: u32) -> LaurentPoly {
    (q(1) - c(1)).pow(k)
}

fn qp1(k: u32) -> LaurentPoly {
    (q(1) + c(1)).pow(k)
}

/// `IE(M_B)` for SL2-type spaces with torsion coefficient `n`; `n = 2^{2g}`
/// gives SL2 and `n = 1` gives PGL2.
pub fn ie_betti_with(g: u32, n: &Rational) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let head = (q(2 * k - 2) + c(1)) * (q(2) - c(1)).pow(2 * g - 2);
    let odd =
        (q(2 * k - 3) * (q(2) + c(1)) * (qp1(2 * g - 2) - qm1(2 * g - 2))).scale(&ratio(1, 2));
    let torsion = (q(2 * k - 2) * (qp1(2 * g - 2) + qm1(2 * g - 2))).scale(&(n * ratio(1, 2)));
    Ok(head + odd + torsion)
}

/// The PGL2 closed form as displayed, independent of [`ie_betti_with`].
pub fn ie_betti_pgl2_displayed(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let head = (q(2 * k - 2) + c(1)) * (q(2) - c(1)).pow(2 * g - 2);
    let plus = q(2 * k - 3) * (q(2) + q(1) + c(1)) * qp1(2 * g - 2);
    let minus = q(2 * k - 3) * (q(2) - q(1) + c(1)) * qm1(2 * g - 2);
    Ok(head + (plus - minus).scale(&ratio(1, 2)))
}

/// `E(T_B)` in closed form.
pub fn e_t_betti_closed(g: u32, n: &Rational) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let om = |e: i32| one_minus(&q(e));
    let d2 = (q(1)
        * (one_plus(&q(1)).pow(2 * g - 1) * one_plus(&q(2 * k - 3))
            + om(1).pow(2 * g - 1) * om(2 * k - 3))
        * om(2 * k - 3))
    .exact_div(&om(1))?
    .scale(&ratio(1, 2));
    let signs = [
        (2, 0),
        (-1, 1),
        (-1, 3),
        (-1, 2 * k - 4),
        (-2, 2 * k - 2),
        (1, 2 * k - 1),
        (-2, 2 * k),
        (4, 2 * k + 1),
        (-1, 2 * k + 2),
        (1, 2 * k + 3),
        (1, 4 * k - 6),
        (-1, 4 * k - 5),
        (4, 4 * k - 4),
        (-2, 4 * k - 3),
        (1, 4 * k - 2),
        (-2, 4 * k - 1),
        (-1, 4 * k + 1),
        (-1, 6 * k - 6),
        (-1, 6 * k - 4),
        (2, 6 * k - 3),
    ];
    let inner: LaurentPoly = signs.iter().map(|&(s, e)| q(e).scale(&int(s))).sum();
    let fibre = (q(1) * inner).exact_div(&(om(1).pow(3) * om(2)))?;
    Ok(ie_betti_with(g, n)? + d2 + fibre.scale(n))
}

/// `E(T_B)` assembled from the strata: the smooth locus, `D_2°` and the
/// fibres over `Ω`.
pub fn e_t_betti_compositional(g: u32, n: &BigInt) -> Result<LaurentPoly> {
    let nr = Rational::from_integer(n.clone());
    let (sigma, e_omega) = sigma_omega_sl2(Side::Betti, g, n)?;
    let e_m = invert_ie(&ie_betti_with(g, &nr)?, &sigma, &e_omega, g)?;
    let e_sm = &e_m - &sigma.plus;
    let (_, inc) = incidence_poincare(g)?;
    let d2 = &inc.plus * (&sigma.plus - &e_omega) + &inc.minus * &sigma.minus;
    let over_omega = e_exceptional(g)?.fibre().scale(&nr);
    Ok(e_sm + d2 + over_omega)
}

/// Both routes to `E(T_B)`, required to agree.
pub fn e_t_betti(g: u32, n: &BigInt) -> Result<LaurentPoly> {
    let closed = e_t_betti_closed(g, &Rational::from_integer(n.clone()))?;
    let route = e_t_betti_compositional(g, n)?;
    if closed != route {
        return Err(Error::IdentityMismatch(format!(
            "E(T_B) at g = {g}: closed form {closed}, strata route {route}"
        )));
    }
    Ok(closed)
}
