//! Verification suites: each check recomputes a quantity along two
//! independent routes, or against a printed table, and reports the outcome.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::algebra::shorthand::*;
use crate::algebra::{LaurentPoly, Var};
use crate::dt::{self, assemble_ie, invert_ie};
use crate::error::{Error, Result};
use crate::golden::{self, Table};
use crate::invariants::{self as inv, Kind};
use crate::moduli::{Group, ModuliSpec, Side};
use crate::strata;
use crate::sweep::map_genera;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Palindromy,
    Purity,
    Tables,
    Identities,
    Expansion,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Palindromy,
        Suite::Purity,
        Suite::Tables,
        Suite::Identities,
        Suite::Expansion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Palindromy => "palindromy",
            Suite::Purity => "purity",
            Suite::Tables => "tables",
            Suite::Identities => "identities",
            Suite::Expansion => "expansion",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one named check at one genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub genus: u32,
    pub outcome: std::result::Result<(), String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(()) => write!(f, "PASS {} g={} {}", self.suite, self.genus, self.name),
            Err(e) => write!(f, "FAIL {} g={} {}: {e}", self.suite, self.genus, self.name),
        }
    }
}

fn ensure(cond: bool, err: impl FnOnce() -> Error) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(err())
    }
}

fn same(what: &str, left: &LaurentPoly, right: &LaurentPoly) -> Result<()> {
    ensure(left == right, || {
        Error::IdentityMismatch(format!(
            "{what}: {left} differs from {right} by {}",
            left - right
        ))
    })
}

type CheckFn = fn(u32) -> Result<()>;

/// Checks belonging to a suite, with the genera each applies to.
pub fn checks(suite: Suite) -> &'static [(&'static str, u32, CheckFn)] {
    match suite {
        Suite::Palindromy => &[
            ("ie-betti-sl2", 2, |g| palindromic_ie(Group::SL2, g)),
            ("ie-betti-pgl2", 2, |g| palindromic_ie(Group::PGL2, g)),
            ("ie-betti-gl2", 2, |g| palindromic_ie(Group::GL2, g)),
            ("e-t-betti-sl2", 2, palindromic_e_t),
            ("ie-var-betti", 2, palindromic_variant),
        ],
        Suite::Purity => &[
            ("purity-sl2", 2, |g| purity(Group::SL2, g)),
            ("purity-pgl2", 2, |g| purity(Group::PGL2, g)),
            ("purity-gl2", 2, |g| purity(Group::GL2, g)),
            ("purity-transform-involution", 2, purity_involution),
        ],
        Suite::Tables => &[
            ("ie-sl2-table", 2, |g| table(Table::IeSl2, g)),
            ("ie-sl2-palindromic-completion", 2, table_completion),
            ("ip-sl2-table", 2, |g| table(Table::IpSl2, g)),
            ("ip-minus-p-table", 2, |g| table(Table::IpMinusP, g)),
        ],
        Suite::Identities => &[
            ("multiplicity-sums", 2, |g| {
                dt::multiplicity_sums(g).map(drop)
            }),
            ("b-nonnegative-symmetric", 2, b_symmetric),
            ("stalk-identity", 2, stalk_identity),
            ("omega-s-identity", 2, omega_s_identity),
            ("ie-omega-r-routes", 2, ie_omega_r_routes),
            ("normal-slice-routes", 2, normal_slice_routes),
            ("e-d2-circ-routes", 2, d2_circ_routes),
            ("ie-betti-assembly", 2, ie_betti_assembly),
            ("ie-dol-assembly", 2, ie_dol_assembly),
            ("gl2-assembly", 2, gl2_assembly),
            ("gamma-split", 2, gamma_split),
            ("euler-characteristics", 2, euler),
            ("e-t-routes", 2, e_t_routes),
        ],
        Suite::Expansion => &[
            ("taylor-ip", 2, taylor),
            ("ip-minus-p-low-order", 6, ip_minus_p),
        ],
    }
}

/// Runs a suite over `genera`. Table checks only cover genera with printed
/// rows.
pub fn run_suite(suite: Suite, genera: RangeInclusive<u32>) -> Vec<Check> {
    let per_genus = map_genera(genera, |g| {
        checks(suite)
            .iter()
            .filter(|(_, min, _)| g >= *min)
            .filter(|_| suite != Suite::Tables || golden::GENERA.contains(&g))
            .map(|&(name, _, f)| Check {
                suite,
                name,
                genus: g,
                outcome: f(g).map_err(|e| e.to_string()),
            })
            .collect::<Vec<_>>()
    });
    per_genus.into_iter().flatten().collect()
}

pub fn palindromic_ie(group: Group, g: u32) -> Result<()> {
    let r = inv::ie_betti(group, g)?;
    let centre = r.dimension() as i64;
    ensure(
        r.poly.palindrome_check(centre / 2) && centre % 2 == 0,
        || Error::PalindromyFailure(format!("IE(M_B(C, {group})) at g = {g}")),
    )
}

pub fn palindromic_e_t(g: u32) -> Result<()> {
    let r = inv::e_t(Group::SL2, Side::Betti, g)?;
    ensure(r.poly.palindrome_check(3 * g as i64 - 3), || {
        Error::PalindromyFailure(format!("E(T_B) at g = {g}"))
    })
}

pub fn palindromic_variant(g: u32) -> Result<()> {
    inv::variant_polys(g).map(drop)
}

/// `t^{2 dim} IE(M_Dol; -1/t, -1/t) = IP_t`.
pub fn purity(group: Group, g: u32) -> Result<()> {
    let dol = inv::ie_dol(group, g)?;
    let ip = inv::ip(group, g)?;
    let lifted = inv::ip_from_dolbeault(&dol.poly, dol.dimension())?;
    same(&format!("purity for {group} at g = {g}"), &lifted, &ip.poly)
}

pub fn purity_involution(g: u32) -> Result<()> {
    let ip = inv::ip(Group::SL2, g)?;
    let dim = ip.dimension();
    let diag = inv::purity_transform_s(&ip.poly, dim)?;
    let dol = inv::diagonal_s(&inv::ie_dol(Group::SL2, g)?.poly)?;
    same("diagonal IE(M_Dol)", &diag, &dol)?;
    ensure(diag.degree(Var::T) == Some(2 * dim as i32), || {
        Error::ConsistencyFailure(format!(
            "diagonal IE(M_Dol) has degree {:?}",
            diag.degree(Var::T)
        ))
    })?;
    same(
        "inverse purity transform",
        &inv::reflect(&diag, dim)?,
        &ip.poly,
    )
}

fn engine_row(table: Table, g: u32) -> Result<LaurentPoly> {
    Ok(match table {
        Table::IeSl2 => inv::ie_betti(Group::SL2, g)?.poly,
        Table::IpSl2 => inv::ip(Group::SL2, g)?.poly,
        Table::IpMinusP => inv::ip(Group::SL2, g)?.poly - inv::p_ordinary_sl2(g)?.poly,
    })
}

/// Compares the engine with the printed row, truncated as printed.
pub fn table(table: Table, g: u32) -> Result<()> {
    let printed = table.row(g).ok_or_else(|| {
        Error::UnsupportedCombination(format!("no printed {} row for g = {g}", table.name()))
    })?;
    let mut ours = engine_row(table, g)?;
    if let Some(d) = table.printed_through(g) {
        ours = ours.truncate(d);
    }
    same(&format!("{} row g = {g}", table.name()), &ours, &printed)
}

pub fn table_completion(g: u32) -> Result<()> {
    let printed = Table::IeSl2.row(g).ok_or_else(|| {
        Error::UnsupportedCombination(format!("no printed ie-sl2 row for g = {g}"))
    })?;
    let full = golden::complete_by_palindromy(&printed, g);
    same(
        "palindromic completion",
        &full,
        &inv::ie_betti(Group::SL2, g)?.poly,
    )
}

pub fn b_symmetric(g: u32) -> Result<()> {
    let b = dt::b_coeffs(g)?;
    ensure(b.is_symmetric(), || {
        Error::ConsistencyFailure(format!("b(j) != b(-j) at g = {g}"))
    })
}

pub fn stalk_identity(g: u32) -> Result<()> {
    let b = dt::b_coeffs(g)?.to_poly(3 * g as i64 - 3);
    same("stalk identity", &b, &dt::stalk_remainder(g)?)
}

pub fn omega_s_identity(g: u32) -> Result<()> {
    same(
        "E(Ω_S) routes",
        &strata::omega_s_from_d1(g)?,
        &strata::e_exceptional(g)?.omega_s,
    )
}

/// `IE(Ω_R) = E(Ω_S) - E(P^{2g-1}) · ceil_sum`.
pub fn ie_omega_r_routes(g: u32) -> Result<()> {
    let (ceil_sum, _) = dt::multiplicity_sums(g)?;
    let route = strata::e_exceptional(g)?.omega_s - strata::e_projective(2 * g - 1)? * ceil_sum;
    same("IE(Ω_R) routes", &route, &strata::ie_omega_r(g)?)
}

pub fn normal_slice_routes(g: u32) -> Result<()> {
    same(
        "IE(N_Σ) routes",
        &strata::ih_normal_slice_sigma_via_cone(g)?,
        &strata::ih_normal_slice_sigma(g)?,
    )?;
    same(
        "IE(N_Ω) routes",
        &strata::ie_normal_slice_omega_via_truncation(g)?,
        &strata::ie_normal_slice_omega(g)?,
    )
}

pub fn d2_circ_routes(g: u32) -> Result<()> {
    for side in Side::ALL {
        dt::e_d2_circ(side, g)?;
        dt::e_d2_circ_with(side, g, &Group::PGL2.torsion(g))?;
    }
    Ok(())
}

/// `E(M_B)` recovered from `IE(M_B)` is a polynomial in `q^2` of degree
/// `6g - 6`, and reassembles to `IE(M_B)`.
pub fn ie_betti_assembly(g: u32) -> Result<()> {
    let spec = ModuliSpec::new(Group::SL2, Side::Betti, g)?;
    let (sigma, e_omega) = strata::e_sigma_omega(&spec)?;
    let ie = inv::ie_betti(Group::SL2, g)?.poly;
    let e_m = invert_ie(&ie, &sigma, &e_omega, g)?;
    ensure(
        e_m.terms().iter().all(|(m, _)| m.exp(Var::Q) % 2 == 0)
            && e_m.degree(Var::Q) == Some(6 * g as i32 - 6),
        || {
            Error::ConsistencyFailure(format!(
                "E(M_B) = {e_m} is not a polynomial in q^2 of degree {}",
                6 * g - 6
            ))
        },
    )?;
    same(
        "assembled IE(M_B)",
        &assemble_ie(&e_m, &sigma, &e_omega, g)?,
        &ie,
    )
}

pub fn ie_dol_assembly(g: u32) -> Result<()> {
    for group in [Group::SL2, Group::PGL2] {
        let n = group.torsion(g);
        let e_sm = inv::e_dol_sm_with(g, &big(n.clone()))?;
        inv::ie_dol_with(g, &n, &e_sm)?;
    }
    Ok(())
}

/// The GL2 strata (symmetric squares) reproduce `E(GL_1)` times the PGL2
/// data on both sides.
pub fn gl2_assembly(g: u32) -> Result<()> {
    for side in Side::ALL {
        let gl = ModuliSpec::new(Group::GL2, side, g)?;
        let (sigma_gl, omega_gl) = strata::e_sigma_omega(&gl)?;
        let (sigma_pgl, omega_pgl) = strata::sigma_omega_sl2(side, g, &Group::PGL2.torsion(g))?;
        let ie_gl = inv::compute(Kind::IE, Group::GL2, Some(side), g)?.poly;
        let ie_pgl = inv::compute(Kind::IE, Group::PGL2, Some(side), g)?.poly;
        let lhs = invert_ie(&ie_gl, &sigma_gl, &omega_gl, g)?;
        let rhs = &omega_gl * invert_ie(&ie_pgl, &sigma_pgl, &omega_pgl, g)?;
        same(&format!("E(M_{side}(C, GL2))"), &lhs, &rhs)?;
    }
    Ok(())
}

/// `IE(SL2) - IE_var = IE(PGL2)` on both sides and for `IP`, and
/// `(q - 1)^{2g} IE(PGL2) = IE(GL2)`.
pub fn gamma_split(g: u32) -> Result<()> {
    let var = inv::variant_polys(g)?;
    let sl = inv::ie_betti(Group::SL2, g)?.poly;
    let pgl = inv::ie_betti(Group::PGL2, g)?.poly;
    same("IE_B(SL2) - IE_var", &(&sl - &var.ie_b_var), &pgl)?;
    same("PGL2 closed forms", &pgl, &inv::ie_betti_pgl2_displayed(g)?)?;
    let gl = inv::ie_betti(Group::GL2, g)?.poly;
    same("IE_B(GL2)", &((q(1) - c(1)).pow(2 * g) * &pgl), &gl)?;
    let ip_sl = inv::ip(Group::SL2, g)?.poly;
    same(
        "IP(SL2) - IP_var",
        &(&ip_sl - &var.ip_var),
        &inv::ip(Group::PGL2, g)?.poly,
    )?;
    let dol_sl = inv::ie_dol(Group::SL2, g)?.poly;
    let dol_pgl = inv::ie_dol(Group::PGL2, g)?.poly;
    same(
        "IE_Dol(SL2) - IE_var",
        &(&dol_sl - &var.ie_dol_var),
        &dol_pgl,
    )
}

pub fn euler(g: u32) -> Result<()> {
    inv::euler_char(Group::SL2, g)?;
    inv::euler_char(Group::PGL2, g).map(drop)
}

pub fn e_t_routes(g: u32) -> Result<()> {
    for group in [Group::SL2, Group::PGL2] {
        for side in Side::ALL {
            inv::e_t(group, side, g)?;
        }
    }
    Ok(())
}

pub fn taylor(g: u32) -> Result<()> {
    inv::check_taylor(g, &inv::ip(Group::SL2, g)?.poly)
}

pub fn ip_minus_p(g: u32) -> Result<()> {
    let ip = inv::ip(Group::SL2, g)?.poly;
    let p = inv::p_ordinary_sl2(g)?.poly;
    inv::ip_minus_p_expansion(g, &ip, &p).map(drop)
}
