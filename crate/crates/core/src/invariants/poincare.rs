use crate::algebra::shorthand::*;
use crate::algebra::{CommonDenominator, LaurentPoly, Rational, TruncatedSeries, Var};
use crate::error::{Error, Result};
use crate::moduli::check_genus;

fn tp1(k: u32) -> LaurentPoly {
    (t(1) + c(1)).pow(k)
}

fn tm1(k: u32) -> LaurentPoly {
    (t(1) - c(1)).pow(k)
}

/// `(t^2 - 1)(t^4 - 1)`.
fn classifying_den() -> LaurentPoly {
    (t(2) - c(1)) * (t(4) - c(1))
}

/// Intersection Poincaré polynomial with torsion coefficient `n`.
pub fn ip_with(g: u32, n: &Rational) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let gg = g as i64;
    let half = ratio(1, 2);
    let mut acc = CommonDenominator::new(classifying_den());
    acc.add(&(t(3) + c(1)).pow(2 * g), &classifying_den())?;
    acc.add(
        &(t(4 * k - 3) * tp1(2 * g - 2)).scale(&int(gg - 1)),
        &(t(1) - c(1)),
    )?;
    let diff = (t(2) + c(1)).pow(2) * tp1(2 * g) - tp1(4) * tm1(2 * g);
    acc.add(&-(t(4 * k - 4) * diff), &classifying_den().scale(&int(4)))?;
    acc.add_poly(&(t(4 * k - 4) * (tp1(2 * g - 2) - tm1(2 * g - 2))).scale(&half))?;
    acc.add_poly(&(t(4 * k - 6) * (tp1(2 * g) - tm1(2 * g))).scale(&-&half))?;
    let var = (n - int(1)) * &half;
    acc.add_poly(&(t(4 * k - 4) * (tp1(2 * g - 2) + tm1(2 * g - 2))).scale(&var))?;
    acc.finish()
}

/// Ordinary Poincaré polynomial of `M(C, SL2)`.
///
/// The second summand is `((t+1)^{2g}(t^2+1) - (t-1)^{2g}(t^2-1)) / (2(t^4-1))`;
/// with a plus sign between the two products the sum fails to be a
/// polynomial.
pub fn p_ordinary(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let k = g as i32;
    let gg = g as i64;
    let half = ratio(1, 2);
    let t4m1 = t(4) - c(1);
    let mut acc = CommonDenominator::new(classifying_den() * (t(2) - c(1)));
    acc.add(&(t(3) + c(1)).pow(2 * g), &classifying_den())?;
    let second = tp1(2 * g) * (t(2) + c(1)) - tm1(2 * g) * (t(2) - c(1));
    acc.add(&second, &t4m1.scale(&int(2)))?;
    for j in 2..=gg {
        let m = (j % 2) as i32;
        let jj = j as i32;
        let coeff = binomial(2 * gg, j) - binomial(2 * gg, j - 2);
        let num = t(jj + 2 * m) * (t(2 * jj - 2 * m) - c(1)) * (t(2 * k - 2 * jj + 2) - c(1));
        acc.add(&num.scale(&big(coeff)), &((t(1) - c(1)) * &t4m1))?;
    }
    acc.add_poly(&(t(1) * (tp1(2 * g) + tm1(2 * g))).scale(&-&half))?;
    acc.add(&(t(2 * k + 2) - c(1)), &(t(1) - c(1)))?;
    acc.add_poly(&-t(4 * k - 4))?;
    acc.add(&(tm1(2 * g) * t(4 * k - 4)), &(t(2) + c(1)).scale(&int(4)))?;
    let lead = -(tp1(2 * g) * t(4 * k - 4));
    let t2m1 = t(2) - c(1);
    acc.add(
        &lead.scale(&int(2 * gg)),
        &(t2m1.scale(&int(2)) * (t(1) + c(1))),
    )?;
    acc.add(&lead, &t2m1.pow(2).scale(&int(2)))?;
    acc.add(
        &lead.scale(&(ratio(5, 2) - int(2 * gg))),
        &t2m1.scale(&int(2)),
    )?;
    let tors = two_pow(2 * g) - int(1);
    acc.add_poly(
        &(t(4 * k - 4) * (tp1(2 * g - 2) + tm1(2 * g - 2) - c(2))).scale(&(tors * &half)),
    )?;
    acc.finish()
}

/// Expansion of `(1 + t^3)^{2g} / ((1 - t^2)(1 - t^4))` through `t^order`.
pub fn classifying_series(g: u32, order: usize) -> Result<TruncatedSeries> {
    let num = TruncatedSeries::from_poly(&(t(3) + c(1)).pow(2 * g), Var::T, order)?;
    let den = TruncatedSeries::from_poly(&classifying_den(), Var::T, order)?;
    num.mul(&den.reciprocal()?)
}

/// Checks `IP = P_t(BG) - 2g t^{4g-5} + O(t^{4g-4})`.
pub fn check_taylor(g: u32, ip: &LaurentPoly) -> Result<()> {
    check_genus(g, 2)?;
    let order = 4 * g as usize - 5;
    let mut expected = classifying_series(g, order)?.coeffs().to_vec();
    expected[order] -= int(2 * g as i64);
    let got = TruncatedSeries::from_poly(ip, Var::T, order)?;
    if got.coeffs() != expected.as_slice() {
        return Err(Error::ExpansionMismatch(format!(
            "IP at g = {g} through t^{order}: got {}, expected {}",
            got.to_poly(),
            TruncatedSeries::from_coeffs(Var::T, order, &expected).to_poly()
        )));
    }
    Ok(())
}

/// `IP - P` through `t^6`, checked against
/// `2g t^3 + t^4 + 2g t^5 - (C(2g,3) - C(2g,2) - 2g) t^6`.
pub fn ip_minus_p_expansion(g: u32, ip: &LaurentPoly, p: &LaurentPoly) -> Result<TruncatedSeries> {
    check_genus(g, 6)?;
    let got = TruncatedSeries::from_poly(&(ip - p), Var::T, 6)?;
    let gg = g as i64;
    let t6 = -(binomial(2 * gg, 3) - binomial(2 * gg, 2) - 2 * gg);
    let expected = [
        int(0),
        int(0),
        int(0),
        int(2 * gg),
        int(1),
        int(2 * gg),
        big(t6),
    ];
    if got.coeffs() != expected {
        return Err(Error::ExpansionMismatch(format!(
            "IP - P at g = {g} through t^6: got {}",
            got.to_poly()
        )));
    }
    Ok(got)
}

/// `f(t) ↦ t^{2 dim} f(-1/t)`. This is an involution.
pub fn reflect(p: &LaurentPoly, dim: u32) -> Result<LaurentPoly> {
    let image = -t(-1);
    Ok(p.substitute(&[(Var::T, image)])?
        .shift(Var::T, 2 * dim as i32))
}

/// Diagonal `IE(M_Dol; s, s)` obtained from `IP_t`, written in `t` for `s`.
pub fn purity_transform_s(ip: &LaurentPoly, dim: u32) -> Result<LaurentPoly> {
    reflect(ip, dim)
}

/// Diagonal `IE(M_Dol)` in `q = s^2`. Fails with `OddTSubstitution` when the
/// diagonal has odd powers of `s`, which happens as soon as `IP_t` has odd
/// Betti numbers.
pub fn purity_transform(ip: &LaurentPoly, dim: u32) -> Result<LaurentPoly> {
    reflect(ip, dim)?.t_squared_to_q()
}

/// Inverse of [`purity_transform`].
pub fn purity_transform_inverse(diag: &LaurentPoly, dim: u32) -> Result<LaurentPoly> {
    reflect(&diag.q_to_t_squared(), dim)
}

/// `t^{2 dim} IE(M_Dol; -1/t, -1/t)`, which purity identifies with `IP_t`.
pub fn ip_from_dolbeault(ie_dol: &LaurentPoly, dim: u32) -> Result<LaurentPoly> {
    let image = -t(-1);
    let diag = ie_dol.substitute(&[(Var::U, image.clone()), (Var::V, image)])?;
    Ok(diag.shift(Var::T, 2 * dim as i32))
}
