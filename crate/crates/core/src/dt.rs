//! Decomposition-theorem multiplicities and the assembly of `IE(M)` from the
//! E-polynomials of the strata.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::shorthand::*;
use crate::algebra::{format_rational, LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::moduli::{check_genus, Group, Side};
use crate::strata::{
    e_exceptional, ie_normal_slice_omega, incidence_poincare, sigma_omega_sl2, SplitPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicityKind {
    A,
    B,
    CeilSum,
    FloorSum,
}

/// Multiplicities indexed by a signed integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityVector {
    pub kind: MultiplicityKind,
    pub genus: u32,
    pub values: BTreeMap<i64, BigInt>,
}

impl MultiplicityVector {
    pub fn get(&self, index: i64) -> BigInt {
        self.values.get(&index).cloned().unwrap_or_default()
    }

    /// `Σ_i values[i] q^{i + offset}`.
    pub fn to_poly(&self, offset: i64) -> LaurentPoly {
        self.values
            .iter()
            .map(|(&i, n)| q((i + offset) as i32).scale(&big(n.clone())))
            .sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.values.iter().all(|(&i, n)| self.get(-i) == *n)
    }
}

fn om(k: i32) -> LaurentPoly {
    one_minus(&q(k))
}

fn half_width(g: u32) -> i64 {
    2 * g as i64 - 3
}

fn literal(kind: MultiplicityKind, g: u32) -> MultiplicityVector {
    let m = half_width(g);
    let values = (-m..=m)
        .map(|i| {
            let r = m - i.abs();
            let v = match kind {
                MultiplicityKind::FloorSum => r / 2,
                _ => (r + 1) / 2,
            };
            (i, BigInt::from(v))
        })
        .collect();
    MultiplicityVector {
        kind,
        genus: g,
        values,
    }
}

/// `a(i) = ⌈(2g-3-|i|)/2⌉`, stored for `|i| ≤ 2g-3`.
pub fn a_coeffs(g: u32) -> Result<MultiplicityVector> {
    check_genus(g, 2)?;
    Ok(literal(MultiplicityKind::A, g))
}

/// Closed forms of `Σ ⌈(2g-3-|i|)/2⌉ q^{2g-3+i}` and its floor analogue,
/// checked against the literal sums.
pub fn multiplicity_sums(g: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    check_genus(g, 2)?;
    let n = g as i32;
    let den = om(1) * om(2);
    let ceil_sum = (q(1) * om(2 * n - 3) * om(2 * n - 2)).exact_div(&den)?;
    let floor_sum = (q(2) * om(2 * n - 4) * om(2 * n - 3)).exact_div(&den)?;
    let off = half_width(g);
    for (kind, closed) in [
        (MultiplicityKind::CeilSum, &ceil_sum),
        (MultiplicityKind::FloorSum, &floor_sum),
    ] {
        let lit = literal(kind, g).to_poly(off);
        if lit != *closed {
            return Err(Error::IdentityMismatch(format!(
                "{kind:?} at g = {g}: closed form {closed}, literal sum {lit}"
            )));
        }
    }
    Ok((ceil_sum, floor_sum))
}

/// The generating polynomial whose coefficient of `q^{3g-3+j}` is `b(j)`.
pub fn b_generating_poly(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let n = g as i32;
    let inner = c(1) - q(4) - q(2 * n - 3) - q(2 * n - 1) + q(2 * n).scale(&int(2));
    let fibre = (om(2 * n - 2) * om(2 * n) * inner).exact_div(&(om(1).pow(3) * om(2)))?;
    let slice = om(2 * n).exact_div(&om(2))?;
    let ceil = (q(1) * om(2 * n - 3) * om(2 * n - 2)).exact_div(&(om(1) * om(2)))?;
    Ok(fibre - slice - ceil)
}

/// `(d1 + d3 - d13) - IE(N_Ω) - ceil_sum`, the stalk of the decomposition
/// over a point of `Ω` with the known summands removed.
pub fn stalk_remainder(g: u32) -> Result<LaurentPoly> {
    let fibre = e_exceptional(g)?.fibre();
    let (ceil_sum, _) = multiplicity_sums(g)?;
    Ok(fibre - ie_normal_slice_omega(g)? - ceil_sum)
}

/// `b(j)` for `|j| ≤ 3g-4`.
pub fn b_coeffs(g: u32) -> Result<MultiplicityVector> {
    let poly = b_generating_poly(g)?;
    let centre = 3 * g as i64 - 3;
    let m = 3 * g as i64 - 4;
    for (mono, _) in poly.terms() {
        let j = mono.exp(Var::Q) as i64 - centre;
        if j.abs() > m {
            return Err(Error::ConsistencyFailure(format!(
                "b generating polynomial has a term at j = {j} outside |j| <= {m}"
            )));
        }
    }
    let mut values = BTreeMap::new();
    for j in -m..=m {
        let c = poly.coeff_of(Var::Q, (centre + j) as i32);
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient(format!(
                "b({j}) = {}",
                format_rational(&c)
            )));
        }
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity {
                index: j,
                value: format_rational(&c),
            });
        }
        values.insert(j, c.to_integer());
    }
    Ok(MultiplicityVector {
        kind: MultiplicityKind::B,
        genus: g,
        values,
    })
}

fn in_context(p: LaurentPoly, dolbeault: bool) -> LaurentPoly {
    if dolbeault {
        p.q_to_uv()
    } else {
        p
    }
}

fn correction(
    sigma: &SplitPoly,
    e_omega: &LaurentPoly,
    g: u32,
    dolbeault: bool,
) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let n = g as i32;
    let factor = in_context(om(2 * n - 4).exact_div(&om(2))?, dolbeault);
    let q1 = in_context(q(1), dolbeault);
    let q2 = in_context(q(2), dolbeault);
    let top = in_context(q(2 * n - 2), dolbeault);
    let strata = q2
        .checked_mul(&sigma.plus)?
        .checked_add(&q1.checked_mul(&sigma.minus)?)?;
    strata
        .checked_mul(&factor)?
        .checked_add(&e_omega.checked_mul(&top)?)
}

fn is_dolbeault(polys: &[&LaurentPoly]) -> bool {
    polys.iter().any(|p| p.uses(Var::U) || p.uses(Var::V))
}

/// `IE = E + (q^2 Σ^+ + q Σ^-)(1 - q^{2g-4})/(1 - q^2) + E(Ω) q^{2g-2}`, with
/// `q = uv` when the inputs are in `u, v`.
pub fn assemble_ie(
    e_m: &LaurentPoly,
    sigma: &SplitPoly,
    e_omega: &LaurentPoly,
    g: u32,
) -> Result<LaurentPoly> {
    let dol = is_dolbeault(&[e_m, &sigma.plus, &sigma.minus, e_omega]);
    e_m.checked_add(&correction(sigma, e_omega, g, dol)?)
}

/// Recovers `E(M)` from `IE(M)`; inverse of [`assemble_ie`].
pub fn invert_ie(
    ie: &LaurentPoly,
    sigma: &SplitPoly,
    e_omega: &LaurentPoly,
    g: u32,
) -> Result<LaurentPoly> {
    let dol = is_dolbeault(&[ie, &sigma.plus, &sigma.minus, e_omega]);
    ie.checked_sub(&correction(sigma, e_omega, g, dol)?)
}

/// `E(D_2°) = I^+ (Σ^+ - E(Ω)) + I^- Σ^-` for SL2-type strata with
/// `E(Ω) = torsion`.
pub fn e_d2_circ_compositional(side: Side, g: u32, torsion: &BigInt) -> Result<LaurentPoly> {
    let (_, inc) = incidence_poincare(g)?;
    let (sigma, e_omega) = sigma_omega_sl2(side, g, torsion)?;
    let dol = side == Side::Dolbeault;
    let ip = in_context(inc.plus, dol);
    let im = in_context(inc.minus, dol);
    Ok(ip * (&sigma.plus - &e_omega) + im * &sigma.minus)
}

/// Closed form of `E(D_2°)` on either side.
pub fn e_d2_circ_closed(side: Side, g: u32, torsion: &BigInt) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let n = g as i32;
    let nn = big(torsion.clone());
    match side {
        Side::Betti => {
            let lead = om(2 * n - 2).exact_div(&om(1))?;
            let inner = om(2 * n - 3) * om(1).pow(2 * g - 1)
                + one_plus(&q(2 * n - 3)) * one_plus(&q(1)).pow(2 * g - 1);
            let tail = om(2 * n - 2).pow(2).exact_div(&(om(2) * om(1)))?;
            Ok((lead * inner).scale(&ratio(1, 2)) - tail.scale(&nn))
        }
        Side::Dolbeault => {
            let w = |k: i32| uv(k);
            let wm = |k: i32| one_minus(&uv(k));
            let a = (one_minus(&u(1)) * one_minus(&v(1))).pow(g);
            let b = (one_plus(&u(1)) * one_plus(&v(1))).pow(g);
            let lead = (w(n) * wm(2 * n - 2)).scale(&ratio(1, 2));
            let mut acc = crate::algebra::CommonDenominator::new(wm(1).pow(2) * one_plus(&w(1)));
            acc.add(&(&lead * a * wm(2 * n - 3)), &wm(1).pow(2))?;
            acc.add(
                &(&lead * b * one_plus(&w(2 * n - 3))),
                &(wm(1) * one_plus(&w(1))),
            )?;
            acc.add(&(wm(2 * n - 2).pow(2).scale(&-nn)), &(wm(2) * wm(1)))?;
            acc.finish()
        }
    }
}

/// `E(D_2°)`, computed compositionally and checked against the closed form.
pub fn e_d2_circ(side: Side, g: u32) -> Result<LaurentPoly> {
    e_d2_circ_with(side, g, &Group::SL2.torsion(g))
}

pub fn e_d2_circ_with(side: Side, g: u32, torsion: &BigInt) -> Result<LaurentPoly> {
    let route = e_d2_circ_compositional(side, g, torsion)?;
    let closed = e_d2_circ_closed(side, g, torsion)?;
    if route != closed {
        return Err(Error::IdentityMismatch(format!(
            "E(D2°) on the {side} side at g = {g}: strata route {route}, closed form {closed}"
        )));
    }
    Ok(route)
}
