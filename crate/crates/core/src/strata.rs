//! E-polynomials of the strata of the singular locus, of the exceptional
//! divisors of the desingularization, and of the normal slices.
//!
//! Polynomials living over the deepest stratum `Ω` are stored per point, that
//! is divided by `E(Ω)`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::shorthand::*;
use crate::algebra::{LaurentPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::moduli::{check_genus, Group, ModuliSpec, Side};

/// A polynomial split into its involution-invariant and variant parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoly {
    pub plus: LaurentPoly,
    pub minus: LaurentPoly,
}

impl SplitPoly {
    pub fn total(&self) -> LaurentPoly {
        &self.plus + &self.minus
    }

    pub fn q_to_uv(&self) -> SplitPoly {
        SplitPoly {
            plus: self.plus.q_to_uv(),
            minus: self.minus.q_to_uv(),
        }
    }
}

/// Betti numbers `dims[d] = dim H^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    dims: Vec<u64>,
}

impl BettiVector {
    pub fn new(dims: Vec<u64>) -> Self {
        BettiVector { dims }
    }

    /// Reads a Poincaré polynomial in `q = t^2` (or in `t`).
    pub fn from_poincare(p: &LaurentPoly) -> Result<Self> {
        let in_t = if p.uses(Var::Q) {
            p.q_to_t_squared()
        } else {
            p.clone()
        };
        if in_t.variables().iter().any(|&v| v != Var::T) {
            return Err(Error::Parse(format!("{p} is not a polynomial in t or q")));
        }
        let top = in_t.degree(Var::T).unwrap_or(0).max(0) as usize;
        let mut dims = vec![0u64; top + 1];
        for (m, c) in in_t.terms() {
            let d = m.exp(Var::T);
            let n = (c.is_integer() && !c.is_negative())
                .then(|| c.to_integer().to_u64())
                .flatten();
            match (d >= 0, n) {
                (true, Some(n)) => dims[d as usize] = n,
                _ => return Err(Error::Parse(format!("{p} is not a Poincaré polynomial"))),
            }
        }
        Ok(BettiVector { dims })
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn get(&self, d: usize) -> u64 {
        self.dims.get(d).copied().unwrap_or(0)
    }
}

fn om(k: i32) -> LaurentPoly {
    one_minus(&q(k))
}

fn op(k: i32) -> LaurentPoly {
    one_plus(&q(k))
}

fn gi(g: u32) -> i32 {
    g as i32
}

/// `E((C^*)^{2g})` split under inversion.
pub fn e_torus_split(g: u32) -> Result<SplitPoly> {
    check_genus(g, 1)?;
    let a = om(1).pow(2 * g);
    let b = op(1).pow(2 * g);
    let half = ratio(1, 2);
    Ok(SplitPoly {
        plus: (&a + &b).scale(&half),
        minus: (&a - &b).scale(&half),
    })
}

/// `E(T^*Jac(C))` split under the involution, in `u, v`.
pub fn e_tstar_jac_split(g: u32) -> Result<SplitPoly> {
    check_genus(g, 1)?;
    let w = uv(gi(g));
    let a = (one_minus(&u(1)) * one_minus(&v(1))).pow(g);
    let b = (one_plus(&u(1)) * one_plus(&v(1))).pow(g);
    let half = ratio(1, 2);
    Ok(SplitPoly {
        plus: (&w * (&a + &b)).scale(&half),
        minus: (&w * (&a - &b)).scale(&half),
    })
}

/// Symmetric square of a space with E-polynomial `e`, split under the swap.
pub fn sym2_split(e: &LaurentPoly) -> Result<SplitPoly> {
    let rules: Vec<_> = e
        .variables()
        .into_iter()
        .map(|x| (x, LaurentPoly::var_pow(x, 2)))
        .collect();
    let square = e.checked_mul(e)?;
    let adams = e.substitute(&rules)?;
    let half = ratio(1, 2);
    Ok(SplitPoly {
        plus: (&square + &adams).scale(&half),
        minus: (&square - &adams).scale(&half),
    })
}

/// `(Σ split, E(Ω))` for SL2-type strata with `E(Ω) = torsion` points.
pub fn sigma_omega_sl2(side: Side, g: u32, torsion: &BigInt) -> Result<(SplitPoly, LaurentPoly)> {
    check_genus(g, 1)?;
    let sigma = match side {
        Side::Betti => e_torus_split(g)?,
        Side::Dolbeault => e_tstar_jac_split(g)?,
    };
    Ok((sigma, cr(&Rational::from_integer(torsion.clone()))))
}

/// Strata of the singular locus: the split of `Σ` and `E(Ω)`.
pub fn e_sigma_omega(spec: &ModuliSpec) -> Result<(SplitPoly, LaurentPoly)> {
    let g = spec.genus;
    match spec.group {
        Group::SL2 => sigma_omega_sl2(spec.side, g, &spec.torsion()),
        Group::GL2 => {
            let e = match spec.side {
                Side::Betti => (q(1) - c(1)).pow(2 * g),
                Side::Dolbeault => uv(gi(g)) * (one_minus(&u(1)) * one_minus(&v(1))).pow(g),
            };
            Ok((sym2_split(&e)?, e))
        }
        Group::PGL2 => Err(Error::UnsupportedGroup("pgl2")),
    }
}

/// Poincaré polynomial of the incidence variety `I_{2g-3}` in `q = t^2`,
/// with its split under the involution.
pub fn incidence_poincare(g: u32) -> Result<(LaurentPoly, SplitPoly)> {
    check_genus(g, 2)?;
    let n = gi(g);
    let full = (om(2 * n - 2) * om(2 * n - 3)).exact_div(&om(1).pow(2))?;
    let den = om(2) * om(1);
    let plus = om(2 * n - 2).pow(2).exact_div(&den)?;
    let minus = (q(1) * om(2 * n - 2) * om(2 * n - 4)).exact_div(&den)?;
    Ok((full, SplitPoly { plus, minus }))
}

/// E-polynomial of an isotropic Grassmannian, flagged when a vanishing
/// factor collapses it to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianE {
    pub poly: LaurentPoly,
    pub degenerate: bool,
}

/// `E(Gr^ω(k, V))` for `k ∈ {2, 3}` and `dim V = 2g`.
pub fn e_grassmannian_iso(k: u32, g: u32) -> Result<GrassmannianE> {
    check_genus(g, 2)?;
    let n = gi(g);
    let (num, den) = match k {
        2 => (om(2 * n - 2) * om(2 * n), om(1) * om(2)),
        3 => (
            om(2 * n - 4) * om(2 * n - 2) * om(2 * n),
            om(1) * om(2) * om(3),
        ),
        _ => {
            return Err(Error::UnsupportedCombination(format!(
                "isotropic Grassmannian with k = {k}"
            )))
        }
    };
    let poly = num.exact_div(&den)?;
    Ok(GrassmannianE {
        degenerate: poly.is_zero(),
        poly,
    })
}

/// Exceptional strata of the desingularization over a point of `Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalStrata {
    pub delta_s: LaurentPoly,
    pub d1: LaurentPoly,
    pub d3: LaurentPoly,
    pub d13: LaurentPoly,
    pub omega_s: LaurentPoly,
}

impl ExceptionalStrata {
    /// `d1 + d3 - d13`, the fibre of the desingularization over `Ω`.
    pub fn fibre(&self) -> LaurentPoly {
        &self.d1 + &self.d3 - &self.d13
    }
}

pub fn e_exceptional(g: u32) -> Result<ExceptionalStrata> {
    check_genus(g, 2)?;
    let n = gi(g);
    let tail = om(2 * n - 2) * om(2 * n);
    let den3 = om(1).pow(3) * om(2);
    Ok(ExceptionalStrata {
        delta_s: (om(3) * &tail).exact_div(&(om(1).pow(2) * om(2)))?,
        d1: (om(4) * om(2 * n - 4) * &tail).exact_div(&den3)?,
        d3: (om(3) * om(2 * n - 3) * &tail).exact_div(&den3)?,
        d13: (om(3) * om(2 * n - 4) * &tail).exact_div(&den3)?,
        omega_s: (om(2 * n - 2) * om(2 * n - 1) * om(2 * n)).exact_div(&(om(1).pow(2) * om(2)))?,
    })
}

/// `Σ_{i=0}^{m} q^{i+1}` with the signed-range convention, so that an upper
/// limit of `-2` contributes `-1`.
pub fn signed_geometric_sum(m: i32) -> Result<LaurentPoly> {
    (q(1) * om(m + 1)).exact_div(&om(1))
}

/// `d1 - delta_s · Σ_{i=0}^{2g-6} q^{i+1}`, the second route to `omega_s`.
pub fn omega_s_from_d1(g: u32) -> Result<LaurentPoly> {
    let ex = e_exceptional(g)?;
    Ok(&ex.d1 - &ex.delta_s * signed_geometric_sum(2 * gi(g) - 6)?)
}

/// Primitive truncation of the Betti numbers of a projective link, giving
/// the intersection Poincaré polynomial of the affine cone of dimension `n`.
pub fn cone_ih_truncation(betti: &BettiVector, n: usize) -> Result<LaurentPoly> {
    let mut coeffs = Vec::with_capacity(n);
    for d in 0..n {
        let below = if d >= 2 { betti.get(d - 2) } else { 0 };
        let here = betti.get(d);
        if here < below {
            return Err(Error::NegativePrimitive { degree: d });
        }
        coeffs.push(int((here - below) as i64));
    }
    Ok(LaurentPoly::from_coeffs(Var::T, 0, &coeffs))
}

/// `IE(N_Σ) = 1 + q + ... + q^{2g-4}`.
pub fn ih_normal_slice_sigma(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    om(2 * gi(g) - 3).exact_div(&om(1))
}

/// `IE(N_Σ)` through the cone truncation of `I_{2g-3}`.
pub fn ih_normal_slice_sigma_via_cone(g: u32) -> Result<LaurentPoly> {
    let (full, _) = incidence_poincare(g)?;
    let betti = BettiVector::from_poincare(&full)?;
    cone_ih_truncation(&betti, (4 * g - 6) as usize)?.t_squared_to_q()
}

/// `IE(N_Ω) = 1 + q^2 + ... + q^{2g-2}`.
pub fn ie_normal_slice_omega(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    om(2 * gi(g)).exact_div(&om(2))
}

/// `IE(N_Ω)` as the truncation `[(1 - q) IE(Ω_R)]_{≤ 3g-4}`.
pub fn ie_normal_slice_omega_via_truncation(g: u32) -> Result<LaurentPoly> {
    Ok((om(1) * ie_omega_r(g)?).truncate(3 * g as i64 - 4))
}

/// `IE(Ω_R)` per point of `Ω`.
pub fn ie_omega_r(g: u32) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let n = gi(g);
    (om(4 * n - 4) * om(2 * n)).exact_div(&(om(1) * om(2)))
}

/// `E(P^{2g-1})`.
pub fn e_projective(dim: u32) -> Result<LaurentPoly> {
    om(dim as i32 + 1).exact_div(&om(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(Var::Q, 0, &cs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn torus_split() {
        let s = e_torus_split(1).unwrap();
        assert_eq!(s.plus, qs(&[1, 0, 1]));
        assert_eq!(s.minus, qs(&[0, -2]));
        let s = e_torus_split(2).unwrap();
        assert_eq!(s.plus, qs(&[1, 0, 6, 0, 1]));
        assert_eq!(s.total(), om(1).pow(4));
    }

    #[test]
    fn tstar_jac_split() {
        let s = e_tstar_jac_split(1).unwrap();
        assert_eq!(s.plus, uv(1) + uv(2));
        assert_eq!(s.minus, -(uv(1) * (u(1) + v(1))));
        for g in 1..5 {
            let s = e_tstar_jac_split(g).unwrap();
            let whole = uv(g as i32) * (one_minus(&u(1)) * one_minus(&v(1))).pow(g);
            assert_eq!(s.total(), whole);
        }
    }

    #[test]
    fn sym2() {
        let s = sym2_split(&c(1)).unwrap();
        assert_eq!((s.plus, s.minus), (c(1), c(0)));
        let s = sym2_split(&(q(1) - c(1))).unwrap();
        assert_eq!(s.plus, q(2) - q(1));
        assert_eq!(s.minus, c(1) - q(1));
    }

    #[test]
    fn sigma_omega() {
        let spec = ModuliSpec::new(Group::SL2, Side::Betti, 2).unwrap();
        assert_eq!(e_sigma_omega(&spec).unwrap().1, c(16));
        let spec = ModuliSpec::new(Group::GL2, Side::Betti, 3).unwrap();
        assert_eq!(e_sigma_omega(&spec).unwrap().1, (q(1) - c(1)).pow(6));
        let spec = ModuliSpec::new(Group::PGL2, Side::Betti, 3).unwrap();
        assert_eq!(e_sigma_omega(&spec), Err(Error::UnsupportedGroup("pgl2")));
        let (s, _) = sigma_omega_sl2(Side::Dolbeault, 1, &BigInt::from(4)).unwrap();
        assert_eq!(s.plus, uv(1) + uv(2));
    }

    #[test]
    fn incidence() {
        assert_eq!(incidence_poincare(2).unwrap().0, qs(&[1, 1]));
        assert_eq!(incidence_poincare(3).unwrap().0, qs(&[1, 2, 3, 3, 2, 1]));
        for g in 2..10 {
            let n = g as i32;
            let (_, s) = incidence_poincare(g).unwrap();
            let diff = (om(2 * n - 2) * op(2 * n - 3)).exact_div(&om(2)).unwrap();
            assert_eq!(&s.plus - &s.minus, diff);
        }
    }

    #[test]
    fn grassmannians() {
        assert_eq!(e_grassmannian_iso(2, 2).unwrap().poly, qs(&[1, 1, 1, 1]));
        let d = e_grassmannian_iso(3, 2).unwrap();
        assert!(d.degenerate && d.poly.is_zero());
        let p = e_grassmannian_iso(2, 3).unwrap().poly;
        assert!(p.is_palindromic_doubled(7));
        assert_eq!(p.degree(Var::Q), Some(7));
        assert_eq!(p.coeff_of(Var::Q, 7), int(1));
        assert!(e_grassmannian_iso(4, 3).is_err());
    }

    #[test]
    fn exceptional() {
        let ex = e_exceptional(2).unwrap();
        assert_eq!(ex.delta_s, qs(&[1, 2, 3, 3, 2, 1]));
        for g in 2..9 {
            let n = g as i32;
            let ex = e_exceptional(g).unwrap();
            assert_eq!(
                &ex.omega_s * om(1).pow(2) * om(2),
                om(2 * n - 2) * om(2 * n - 1) * om(2 * n)
            );
            assert_eq!(omega_s_from_d1(g).unwrap(), ex.omega_s);
        }
    }

    #[test]
    fn signed_sum_convention() {
        assert_eq!(signed_geometric_sum(-2).unwrap(), c(-1));
        assert_eq!(signed_geometric_sum(-1).unwrap(), c(0));
        assert_eq!(signed_geometric_sum(0).unwrap(), q(1));
        assert_eq!(signed_geometric_sum(2).unwrap(), qs(&[0, 1, 1, 1]));
    }

    #[test]
    fn cone_truncation() {
        let t_ = |cs: &[i64]| {
            LaurentPoly::from_coeffs(Var::T, 0, &cs.iter().map(|&x| int(x)).collect::<Vec<_>>())
        };
        assert_eq!(
            cone_ih_truncation(&BettiVector::new(vec![1, 0, 1]), 2).unwrap(),
            c(1)
        );
        let i3 = BettiVector::new(vec![1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1]);
        assert_eq!(cone_ih_truncation(&i3, 6).unwrap(), t_(&[1, 0, 1, 0, 1]));
        assert_eq!(
            cone_ih_truncation(&BettiVector::new(vec![1]), 1).unwrap(),
            c(1)
        );
        assert_eq!(
            cone_ih_truncation(&BettiVector::new(vec![1, 0, 0]), 3),
            Err(Error::NegativePrimitive { degree: 2 })
        );
        assert_eq!(
            cone_ih_truncation(&BettiVector::new(vec![1, 1, 1, 2]), 4).unwrap(),
            t_(&[1, 1, 0, 1])
        );
    }

    #[test]
    fn normal_slices() {
        assert_eq!(ih_normal_slice_sigma(2).unwrap(), c(1));
        assert_eq!(ih_normal_slice_sigma(3).unwrap(), qs(&[1, 1, 1]));
        assert_eq!(ie_normal_slice_omega(2).unwrap(), qs(&[1, 0, 1]));
        assert_eq!(ie_normal_slice_omega(3).unwrap(), qs(&[1, 0, 1, 0, 1]));
        for g in 2..9 {
            assert_eq!(
                ih_normal_slice_sigma_via_cone(g).unwrap(),
                ih_normal_slice_sigma(g).unwrap()
            );
            assert_eq!(
                ie_normal_slice_omega_via_truncation(g).unwrap(),
                ie_normal_slice_omega(g).unwrap()
            );
        }
    }

    #[test]
    fn omega_r() {
        assert_eq!(ie_omega_r(2).unwrap(), qs(&[1, 0, 1]) * qs(&[1, 1, 1, 1]));
        for g in 2..9 {
            let p = ie_omega_r(g).unwrap();
            let top = p.degree(Var::Q).unwrap();
            assert_eq!(top as u32, 6 * g - 7);
            assert_eq!(p.coeff_of(Var::Q, 0), int(1));
            assert_eq!(p.coeff_of(Var::Q, top), int(1));
            assert!(p.is_palindromic_doubled(top as i64));
        }
    }
}
