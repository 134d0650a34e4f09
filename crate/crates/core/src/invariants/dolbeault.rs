use num_bigint::BigInt;

use crate::algebra::shorthand::*;
use crate::algebra::{CommonDenominator, LaurentPoly, Rational};
use crate::dt::{assemble_ie, e_d2_circ_compositional};
use crate::error::{Error, Result};
use crate::moduli::{check_genus, Side};
use crate::strata::{e_exceptional, sigma_omega_sl2};

fn w(k: i32) -> LaurentPoly {
    uv(k)
}

fn wm(k: i32) -> LaurentPoly {
    one_minus(&uv(k))
}

fn wp(k: i32) -> LaurentPoly {
    one_plus(&uv(k))
}

/// `((1-u)(1-v))^k`.
fn a_pow(k: u32) -> LaurentPoly {
    (one_minus(&u(1)) * one_minus(&v(1))).pow(k)
}

/// `((1+u)(1+v))^k`.
fn b_pow(k: u32) -> LaurentPoly {
    (one_plus(&u(1)) * one_plus(&v(1))).pow(k)
}

/// E-polynomial of the smooth locus of `M_Dol(C, SL2)`, with torsion
/// coefficient `n` (`2^{2g}` for SL2).
///
/// External input: accepted only through the purity comparison with the
/// intersection Poincaré polynomial.
pub fn e_dol_sm_with(g: u32, n: &Rational) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let a = a_pow(g);
    let b = b_pow(g);
    let a1 = a_pow(g - 1);
    let b1 = b_pow(g - 1);
    let a2 = a_pow(g - 2);
    let nn = cr(n);
    let half = ratio(1, 2);
    let top = w(3 * k - 3);

    let mut acc = CommonDenominator::new(wm(1).pow(2) * wp(1));
    let twisted = (one_minus(&(u(2) * v(1))) * one_minus(&(u(1) * v(2)))).pow(g);
    acc.add(&(&top * (twisted - w(k + 1) * &a)), &(wm(1) * wm(2)))?;
    acc.add(&(&top * &a).scale(&-&half), &wm(1))?;
    acc.add(&(&top * &b).scale(&-&half), &wp(1))?;
    acc.add(
        &(w(k) * (&a + &b) * wm(k - 1) * wm(k)).scale(&-&half),
        &wm(2),
    )?;
    acc.add(
        &(w(k + 1) * (&a - &b) * wm(k - 2) * wm(k - 1)).scale(&-&half),
        &wm(2),
    )?;
    acc.add(
        &-(w(2 * k - 1) * wm(k - 2) * (&a - &nn) * wm(k - 1)),
        &wm(1),
    )?;
    acc.add(&-(&nn * w(2 * k - 2) * wm(k - 1) * wm(k)), &wm(1))?;
    acc.add_poly(&(&top * (&a1 + &b1 - w(k - 1).scale(&int(2)))).scale(&(n * &half)))?;

    let outer = -(&top * one_minus(&u(1)) * one_minus(&v(1)));
    acc.add(&(&outer * &b1).scale(&ratio(1, 4)), &wp(1))?;
    acc.add(&-(&outer * w(k - 1) * &a1), &(wm(1) * wm(2)))?;
    let lin = u(1) + v(1) - w(1).scale(&int(2));
    acc.add(
        &-(&outer * lin * &a2).scale(&ratio(k as i64 - 1, 2)),
        &wm(1),
    )?;
    acc.add(&-(&outer * &a1).scale(&ratio(4 * k as i64 - 7, 4)), &wm(1))?;
    acc.add(&(&outer * w(1) * &a1).scale(&half), &wm(1).pow(2))?;
    acc.finish()
}

/// `IE(M_Dol)` from the smooth-locus polynomial, in closed form.
pub fn ie_dol_closed(g: u32, n: &Rational, e_sm: &LaurentPoly) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let a = a_pow(g);
    let b = b_pow(g);
    let half = ratio(1, 2);
    let mut acc = CommonDenominator::new(wm(1) * wp(1));
    acc.add_poly(e_sm)?;
    acc.add_poly(&(w(k) * (&a + &b)).scale(&half))?;
    let lead = (w(k + 1) * wm(2 * k - 4)).scale(&half);
    acc.add(&(&lead * &a), &wm(1))?;
    acc.add(&-(&lead * &b), &wp(1))?;
    acc.add_poly(&(cr(n) * w(2 * k - 2)))?;
    acc.finish()
}

/// `IE(M_Dol)` by the closed form and by assembly from the strata, required
/// to agree.
pub fn ie_dol_with(g: u32, n: &BigInt, e_sm: &LaurentPoly) -> Result<LaurentPoly> {
    let nr = Rational::from_integer(n.clone());
    let closed = ie_dol_closed(g, &nr, e_sm)?;
    let (sigma, e_omega) = sigma_omega_sl2(Side::Dolbeault, g, n)?;
    let route = assemble_ie(&e_sm.checked_add(&sigma.plus)?, &sigma, &e_omega, g)?;
    if closed != route {
        return Err(Error::IdentityMismatch(format!(
            "IE(M_Dol) at g = {g}: closed form and strata assembly differ by {}",
            &closed - &route
        )));
    }
    Ok(closed)
}

/// `E(T_Dol)` in closed form.
pub fn e_t_dol_closed(g: u32, n: &Rational, e_sm: &LaurentPoly) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let a = a_pow(g);
    let b = b_pow(g);
    let nn = cr(n);
    let mut acc = CommonDenominator::new(wm(1).pow(4) * wp(1));
    acc.add_poly(e_sm)?;
    let lead = (w(k) * wm(2 * k - 2)).scale(&ratio(1, 2));
    acc.add(&(&lead * &a * wm(2 * k - 3)), &wm(1).pow(2))?;
    acc.add(&(&lead * &b * wp(2 * k - 3)), &(wm(1) * wp(1)))?;
    acc.add(&-(&nn * wm(2 * k - 2).pow(2)), &(wm(2) * wm(1)))?;
    let inner = c(1) - w(4) - w(2 * k - 3) - w(2 * k - 1) + w(2 * k).scale(&int(2));
    acc.add(
        &(&nn * wm(2 * k - 2) * wm(2 * k) * inner),
        &(wm(1).pow(3) * wm(2)),
    )?;
    acc.finish()
}

/// `E(T_Dol)` assembled from the smooth locus and the exceptional strata.
pub fn e_t_dol_compositional(g: u32, n: &BigInt, e_sm: &LaurentPoly) -> Result<LaurentPoly> {
    let d2 = e_d2_circ_compositional(Side::Dolbeault, g, n)?;
    let over_omega = e_exceptional(g)?
        .fibre()
        .q_to_uv()
        .scale(&Rational::from_integer(n.clone()));
    e_sm.checked_add(&d2)?.checked_add(&over_omega)
}

pub fn e_t_dol(g: u32, n: &BigInt, e_sm: &LaurentPoly) -> Result<LaurentPoly> {
    let closed = e_t_dol_closed(g, &Rational::from_integer(n.clone()), e_sm)?;
    let route = e_t_dol_compositional(g, n, e_sm)?;
    if closed != route {
        return Err(Error::IdentityMismatch(format!(
            "E(T_Dol) at g = {g}: closed form and strata route differ by {}",
            &closed - &route
        )));
    }
    Ok(closed)
}
