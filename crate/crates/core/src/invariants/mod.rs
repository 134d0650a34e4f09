//! Closed-form invariants of `M(C, G)` for `G ∈ {SL2, PGL2, GL2}`.

mod betti;
mod dolbeault;
mod poincare;
mod variants;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::shorthand::*;
use crate::algebra::{format_rational, LaurentPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::moduli::{check_genus, dimension, Group, Side};

pub use betti::{
    e_t_betti_closed, e_t_betti_compositional, ie_betti_pgl2_displayed, ie_betti_with,
};
pub use dolbeault::{
    e_dol_sm_with, e_t_dol, e_t_dol_closed, e_t_dol_compositional, ie_dol_closed, ie_dol_with,
};
pub use poincare::{
    check_taylor, classifying_series, ip_from_dolbeault, ip_minus_p_expansion, ip_with, p_ordinary,
    purity_transform, purity_transform_inverse, purity_transform_s, reflect,
};
pub use variants::{variant_polys, VariantPolys};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    IE,
    IP,
    P,
    ET,
    IEVar,
    IPVar,
    Euler,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::IE,
        Kind::IP,
        Kind::P,
        Kind::ET,
        Kind::IEVar,
        Kind::IPVar,
        Kind::Euler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::IE => "ie",
            Kind::IP => "ip",
            Kind::P => "p",
            Kind::ET => "e-t",
            Kind::IEVar => "ie-var",
            Kind::IPVar => "ip-var",
            Kind::Euler => "euler",
        }
    }

    /// Whether the invariant depends on the choice of Betti or Dolbeault.
    pub fn needs_side(self) -> bool {
        matches!(self, Kind::IE | Kind::ET | Kind::IEVar)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown invariant {s:?}")))
    }
}

/// A computed invariant with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: Kind,
    pub group: Group,
    /// `None` for invariants that agree on both sides.
    pub side: Option<Side>,
    pub genus: u32,
    pub poly: LaurentPoly,
    /// Coefficient standing for the torsion points: `2^{2g}` or `1`.
    pub torsion: BigInt,
}

impl InvariantResult {
    pub fn dimension(&self) -> u32 {
        dimension(self.group, self.genus)
    }
}

fn rational(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn require_integral(what: &str, p: &LaurentPoly) -> Result<()> {
    if !p.has_integer_coefficients() {
        return Err(Error::NonIntegerCoefficient(what.to_string()));
    }
    Ok(())
}

fn require_betti_numbers(what: &str, p: &LaurentPoly) -> Result<()> {
    require_integral(what, p)?;
    if !p.has_nonnegative_coefficients() {
        return Err(Error::NegativeCoefficient(what.to_string()));
    }
    Ok(())
}

fn unsupported(kind: Kind, group: Group, side: Option<Side>) -> Error {
    let side = side.map(|s| format!(" {s}")).unwrap_or_default();
    Error::UnsupportedCombination(format!("{kind} for {group}{side}"))
}

/// `E(T^*Jac(C))`, `E((C^*)^{2g})` or `P_t(Jac(C))` relating PGL2 to GL2.
fn gl1_factor(kind: Kind, side: Option<Side>, g: u32) -> Result<LaurentPoly> {
    match (kind, side) {
        (Kind::IE, Some(Side::Betti)) => Ok((q(1) - c(1)).pow(2 * g)),
        (Kind::IE, Some(Side::Dolbeault)) => {
            Ok(uv(g as i32) * (one_minus(&u(1)) * one_minus(&v(1))).pow(g))
        }
        (Kind::IP, _) => Ok((t(1) + c(1)).pow(2 * g)),
        _ => Err(Error::UnsupportedKind(kind.name())),
    }
}

/// Lifts a PGL2 result to GL2.
pub fn transform_gl2(r: &InvariantResult) -> Result<InvariantResult> {
    if r.group != Group::PGL2 {
        return Err(Error::UnsupportedGroup(r.group.name()));
    }
    let factor = gl1_factor(r.kind, r.side, r.genus)?;
    Ok(InvariantResult {
        group: Group::GL2,
        poly: r.poly.checked_mul(&factor)?,
        ..r.clone()
    })
}

/// `IE(M_B(C, G))`.
pub fn ie_betti(group: Group, g: u32) -> Result<InvariantResult> {
    check_genus(g, 2)?;
    if group == Group::GL2 {
        return transform_gl2(&ie_betti(Group::PGL2, g)?);
    }
    let torsion = group.torsion(g);
    let poly = ie_betti_with(g, &rational(&torsion))?;
    let what = format!("IE(M_B(C, {group})) at g = {g}");
    require_integral(&what, &poly)?;
    if !poly.palindrome_check(3 * g as i64 - 3) {
        return Err(Error::PalindromyFailure(what));
    }
    Ok(InvariantResult {
        kind: Kind::IE,
        group,
        side: Some(Side::Betti),
        genus: g,
        poly,
        torsion,
    })
}

/// Intersection Euler characteristic, from the closed form, checked against
/// `IE(M_B)` at `q = 1`.
pub fn euler_char(group: Group, g: u32) -> Result<BigInt> {
    check_genus(g, 2)?;
    let closed = match group {
        Group::SL2 => (BigInt::one() << (2 * g - 2)) * ((BigInt::one() << (2 * g - 1)) + 1),
        Group::PGL2 => BigInt::from(3) << (2 * g - 3),
        Group::GL2 => return Err(unsupported(Kind::Euler, group, None)),
    };
    let at_one = ie_betti(group, g)?.poly.evaluate_all(&int(1))?;
    if at_one != rational(&closed) {
        return Err(Error::ConsistencyFailure(format!(
            "Euler characteristic of {group} at g = {g}: closed form {closed}, IE(1) = {}",
            format_rational(&at_one)
        )));
    }
    Ok(closed)
}

/// Smooth-locus E-polynomial of `M_Dol(C, SL2)`.
pub fn e_dol_sm(g: u32) -> Result<LaurentPoly> {
    e_dol_sm_with(g, &rational(&Group::SL2.torsion(g)))
}

/// `IE(M_Dol(C, G))`.
pub fn ie_dol(group: Group, g: u32) -> Result<InvariantResult> {
    check_genus(g, 2)?;
    if group == Group::GL2 {
        return transform_gl2(&ie_dol(Group::PGL2, g)?);
    }
    let torsion = group.torsion(g);
    let e_sm = e_dol_sm_with(g, &rational(&torsion))?;
    let poly = ie_dol_with(g, &torsion, &e_sm)?;
    require_integral(&format!("IE(M_Dol(C, {group})) at g = {g}"), &poly)?;
    Ok(InvariantResult {
        kind: Kind::IE,
        group,
        side: Some(Side::Dolbeault),
        genus: g,
        poly,
        torsion,
    })
}

/// `IP_t(M(C, G))`.
pub fn ip(group: Group, g: u32) -> Result<InvariantResult> {
    check_genus(g, 2)?;
    if group == Group::GL2 {
        return transform_gl2(&ip(Group::PGL2, g)?);
    }
    let torsion = group.torsion(g);
    let poly = ip_with(g, &rational(&torsion))?;
    require_betti_numbers(&format!("IP_t(M(C, {group})) at g = {g}"), &poly)?;
    Ok(InvariantResult {
        kind: Kind::IP,
        group,
        side: None,
        genus: g,
        poly,
        torsion,
    })
}

/// `P_t(M(C, SL2))`.
pub fn p_ordinary_sl2(g: u32) -> Result<InvariantResult> {
    let poly = p_ordinary(g)?;
    require_betti_numbers(&format!("P_t(M(C, sl2)) at g = {g}"), &poly)?;
    let torsion = Group::SL2.torsion(g);
    Ok(InvariantResult {
        kind: Kind::P,
        group: Group::SL2,
        side: None,
        genus: g,
        poly,
        torsion,
    })
}

/// `E(T)` for the desingularization of an SL2 or PGL2 moduli space.
pub fn e_t(group: Group, side: Side, g: u32) -> Result<InvariantResult> {
    check_genus(g, 2)?;
    if group == Group::GL2 {
        return Err(unsupported(Kind::ET, group, Some(side)));
    }
    let torsion = group.torsion(g);
    let poly = match side {
        Side::Betti => betti::e_t_betti(g, &torsion)?,
        Side::Dolbeault => e_t_dol(g, &torsion, &e_dol_sm_with(g, &rational(&torsion))?)?,
    };
    let what = format!("E(T_{side}) for {group} at g = {g}");
    require_integral(&what, &poly)?;
    if side == Side::Betti && !poly.palindrome_check(3 * g as i64 - 3) {
        return Err(Error::PalindromyFailure(what));
    }
    Ok(InvariantResult {
        kind: Kind::ET,
        group,
        side: Some(side),
        genus: g,
        poly,
        torsion,
    })
}

/// Computes `kind` for `(group, side, g)`, or reports the combination as
/// unsupported.
pub fn compute(kind: Kind, group: Group, side: Option<Side>, g: u32) -> Result<InvariantResult> {
    check_genus(g, 2)?;
    let side = if kind.needs_side() {
        Some(side.ok_or(Error::MissingSide(kind.name()))?)
    } else {
        None
    };
    let sl2_only = |r: Result<InvariantResult>| {
        if group == Group::SL2 {
            r
        } else {
            Err(unsupported(kind, group, side))
        }
    };
    match kind {
        Kind::IE => match side {
            Some(Side::Betti) => ie_betti(group, g),
            _ => ie_dol(group, g),
        },
        Kind::IP => ip(group, g),
        Kind::P => sl2_only(p_ordinary_sl2(g)),
        Kind::ET => e_t(group, side.expect("checked above"), g),
        Kind::IEVar => {
            if group != Group::SL2 {
                return Err(unsupported(kind, group, side));
            }
            let vp = variant_polys(g)?;
            let poly = match side {
                Some(Side::Betti) => vp.ie_b_var,
                _ => vp.ie_dol_var,
            };
            Ok(InvariantResult {
                kind,
                group,
                side,
                genus: g,
                poly,
                torsion: group.torsion(g),
            })
        }
        Kind::IPVar => {
            if group != Group::SL2 {
                return Err(unsupported(kind, group, side));
            }
            let poly = variant_polys(g)?.ip_var;
            Ok(InvariantResult {
                kind,
                group,
                side,
                genus: g,
                poly,
                torsion: group.torsion(g),
            })
        }
        Kind::Euler => {
            let n = euler_char(group, g)?;
            let poly = LaurentPoly::constant(rational(&n));
            Ok(InvariantResult {
                kind,
                group,
                side,
                genus: g,
                poly,
                torsion: group.torsion(g),
            })
        }
    }
}

/// `IE(M_Dol)` specialised to `u = v = s`, written in `t` for `s`.
pub fn diagonal_s(ie_dol: &LaurentPoly) -> Result<LaurentPoly> {
    let s = t(1);
    ie_dol.substitute(&[(Var::U, s.clone()), (Var::V, s)])
}

/// `IE(M_Dol)` on the diagonal in `q = s^2`, when only even powers of `s`
/// occur.
pub fn diagonal(ie_dol: &LaurentPoly) -> Result<LaurentPoly> {
    diagonal_s(ie_dol)?.t_squared_to_q()
}
