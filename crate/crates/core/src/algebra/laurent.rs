use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use super::rational::{format_rational, is_unit_magnitude, Rational};
use crate::error::{Error, Result};

/// Products with at least this many term pairs are split across threads.
#[cfg(feature = "parallel")]
const PAR_MUL_THRESHOLD: usize = 1 << 14;

/// Exact multivariate Laurent polynomial over the rationals.
///
/// Terms are kept sorted by [`Monomial`] with no zero coefficients, so
/// structural equality is polynomial equality. `q` never appears together
/// with `u` or `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(super::rational::int(n))
    }

    pub fn var(var: Var) -> Self {
        Self::var_pow(var, 1)
    }

    pub fn var_pow(var: Var, exp: i32) -> Self {
        Self::term(Rational::one(), Monomial::var(var, exp))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates. Fails if
    /// the result would mix `q` with `u`/`v`.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let p = Self::from_sorted_map(acc);
        p.check_alias()?;
        Ok(p)
    }

    /// Univariate polynomial `sum c_k x^k` from a coefficient list starting
    /// at degree `low`.
    pub fn from_coeffs(var: Var, low: i32, coeffs: &[Rational]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::var(var, low + k as i32), c.clone()))
            .collect::<Vec<_>>();
        let mut terms = terms;
        terms.sort_by_key(|a| a.0);
        LaurentPoly { terms }
    }

    fn from_sorted_map(map: BTreeMap<Monomial, Rational>) -> Self {
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_hash_map(map: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single term, if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Coefficient of `var^k` (all other exponents zero).
    pub fn coeff_of(&self, var: Var, k: i32) -> Rational {
        self.coeff(&Monomial::var(var, k))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn uses(&self, var: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) != 0)
    }

    /// Variables that occur with a nonzero exponent, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    pub fn degree(&self, var: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    pub fn min_degree(&self, var: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    fn uses_q(&self) -> bool {
        self.uses(Var::Q)
    }

    fn uses_uv(&self) -> bool {
        self.uses(Var::U) || self.uses(Var::V)
    }

    fn check_alias(&self) -> Result<()> {
        if self.uses_q() && self.uses_uv() {
            Err(Error::MixedAlias)
        } else {
            Ok(())
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if (self.uses_q() && other.uses_uv()) || (self.uses_uv() && other.uses_q()) {
            Err(Error::MixedAlias)
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let signed = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, signed(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, signed(c))));
        LaurentPoly { terms: out }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_term(c, m);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_term(c, m);
        }
        #[cfg(feature = "parallel")]
        {
            if self.terms.len() * other.terms.len() >= PAR_MUL_THRESHOLD {
                return self.mul_parallel(other);
            }
        }
        self.mul_sequential(other)
    }

    /// Schoolbook product on the calling thread.
    pub fn mul_sequential(&self, other: &Self) -> Self {
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() + other.terms.len());
        accumulate_products(&mut acc, &self.terms, &other.terms);
        Self::from_hash_map(acc)
    }

    /// Schoolbook product with the left operand split across the rayon pool.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, other: &Self) -> Self {
        use rayon::prelude::*;
        let chunk = (self.terms.len() / rayon::current_num_threads().max(1)).max(8);
        let acc = self
            .terms
            .par_chunks(chunk)
            .map(|rows| {
                let mut acc = HashMap::new();
                accumulate_products(&mut acc, rows, &other.terms);
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (m, c) in b {
                    *a.entry(m).or_insert_with(Rational::zero) += c;
                }
                a
            });
        Self::from_hash_map(acc)
    }

    fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        // multiplying by a monomial preserves the lexicographic order
        LaurentPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.mul_term(c, &Monomial::ONE)
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, var: Var, k: i32) -> Self {
        self.mul_term(&Rational::one(), &Monomial::var(var, k))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are first shifted by monomials into ordinary
    /// polynomials, then reduced by lexicographic leading terms. Any term
    /// that cannot be reduced goes to the remainder; a nonzero remainder is
    /// reported as [`Error::NonExactDivision`].
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.check_compatible(den)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = den.as_monomial() {
            return Ok(self.mul_term(&c.recip(), &m.inverse()));
        }
        let num_shift = self.min_exponents();
        let den_shift = den.min_exponents();
        let num = self.mul_term(&Rational::one(), &num_shift.inverse());
        let den_p = den.mul_term(&Rational::one(), &den_shift.inverse());

        let (lead_m, lead_c) = den_p.terms.last().expect("nonzero divisor").clone();
        let lead_inv = lead_c.recip();
        let mut rem: BTreeMap<Monomial, Rational> = num.terms.into_iter().collect();
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            match lead_m.divides_into(&m) {
                Some(qm) => {
                    let qc = &c * &lead_inv;
                    // the leading term cancels exactly; subtract the rest
                    for (dm, dc) in den_p.terms.iter().rev().skip(1) {
                        let key = dm.mul(&qm);
                        let entry = rem.entry(key).or_insert_with(Rational::zero);
                        *entry -= dc * &qc;
                        if entry.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    quotient.push((qm, qc));
                }
                None => remainder.push((m, c)),
            }
        }
        if !remainder.is_empty() {
            remainder.reverse();
            return Err(Error::NonExactDivision {
                remainder: Box::new(LaurentPoly { terms: remainder }),
            });
        }
        quotient.reverse();
        let q = LaurentPoly { terms: quotient };
        Ok(q.mul_term(&Rational::one(), &den_shift.inverse().mul(&num_shift)))
    }

    /// Componentwise minimum exponent. Dividing it out leaves a polynomial
    /// with no monomial factor, so Laurent divisibility becomes polynomial
    /// divisibility.
    fn min_exponents(&self) -> Monomial {
        let mut e = self.terms.first().map(|(m, _)| m.0).unwrap_or([0; 4]);
        for (m, _) in &self.terms {
            for (a, b) in e.iter_mut().zip(m.0) {
                *a = (*a).min(b);
            }
        }
        Monomial(e)
    }

    /// Image under the ring homomorphism fixing the coefficients and sending
    /// each listed variable to the given polynomial. Unlisted variables are
    /// kept. A negative exponent needs a monomial image.
    pub fn substitute(&self, rules: &[(Var, LaurentPoly)]) -> Result<Self> {
        let mut image: [Option<&LaurentPoly>; 4] = [None; 4];
        for (var, p) in rules {
            image[var.index()] = Some(p);
        }
        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = [0i32; 4];
            let mut factor = LaurentPoly::term(c.clone(), Monomial::ONE);
            for var in Var::ALL {
                let i = var.index();
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                match image[i] {
                    None => kept[i] = e,
                    Some(img) => {
                        let key = (i, e);
                        if let std::collections::hash_map::Entry::Vacant(slot) = powers.entry(key) {
                            let p = if e > 0 {
                                img.pow(e as u32)
                            } else {
                                let (im, ic) =
                                    img.as_monomial().ok_or_else(|| Error::NonMonomialInverse {
                                        var: var.symbol(),
                                        image: Box::new(img.clone()),
                                    })?;
                                LaurentPoly::term(ic.recip(), im.inverse()).pow((-e) as u32)
                            };
                            slot.insert(p);
                        }
                        factor = factor.mul_unchecked(&powers[&key]);
                    }
                }
            }
            for (fm, fc) in factor.terms {
                *acc.entry(fm.mul(&Monomial(kept)))
                    .or_insert_with(Rational::zero) += fc;
            }
        }
        let out = Self::from_hash_map(acc);
        out.check_alias()?;
        Ok(out)
    }

    /// Rewrites `t^{2k}` as `q^k`. Fails on any odd power of `t`.
    pub fn t_squared_to_q(&self) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(Var::T);
            if e % 2 != 0 {
                return Err(Error::OddTSubstitution);
            }
            let mut n = m.0;
            n[Var::T.index()] = 0;
            n[Var::Q.index()] += e / 2;
            terms.push((Monomial(n), c.clone()));
        }
        Self::from_terms(terms)
    }

    /// Rewrites `q^k` as `t^{2k}`.
    pub fn q_to_t_squared(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut n = m.0;
            n[Var::T.index()] += 2 * n[Var::Q.index()];
            n[Var::Q.index()] = 0;
            (Monomial(n), c.clone())
        });
        Self::from_terms(terms).expect("no u, v introduced")
    }

    /// Rewrites `q` as `uv`.
    pub fn q_to_uv(&self) -> Self {
        self.substitute(&[(Var::Q, LaurentPoly::var(Var::U) * LaurentPoly::var(Var::V))])
            .expect("q -> uv is a monomial substitution")
    }

    /// Value with every variable set to the same rational.
    pub fn evaluate_all(&self, value: &Rational) -> Result<Rational> {
        let rules: Vec<_> = Var::ALL
            .into_iter()
            .map(|v| (v, LaurentPoly::constant(value.clone())))
            .collect();
        Ok(self.substitute(&rules)?.constant_term())
    }

    /// Terms of total degree at most `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= max_degree)
                .cloned()
                .collect(),
        }
    }

    /// Whether `coeff(d) == coeff(2c - d)` for all `d`, for a polynomial in
    /// a single variable. Polynomials in more than one variable are never
    /// palindromic in this sense.
    pub fn palindrome_check(&self, center_degree: i64) -> bool {
        self.is_palindromic_doubled(2 * center_degree)
    }

    /// Palindromy about the half-integer centre `doubled_center / 2`.
    pub fn is_palindromic_doubled(&self, doubled_center: i64) -> bool {
        let vars = self.variables();
        let var = match vars.as_slice() {
            [] => Var::Q,
            [v] => *v,
            _ => return false,
        };
        self.terms.iter().all(|(m, c)| {
            let d = m.exp(var) as i64;
            let mirror = doubled_center - d;
            match i32::try_from(mirror) {
                Ok(mirror) => &self.coeff_of(var, mirror) == c,
                Err(_) => false,
            }
        })
    }
}

fn accumulate_products(
    acc: &mut HashMap<Monomial, Rational>,
    left: &[(Monomial, Rational)],
    right: &[(Monomial, Rational)],
) {
    for (ma, ca) in left {
        for (mb, cb) in right {
            let m = ma.mul(mb);
            let prod = ca * cb;
            match acc.get_mut(&m) {
                Some(c) => *c += prod,
                None => {
                    acc.insert(m, prod);
                }
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending canonical order, `c*x^k` with explicit signs:
    /// `1 - 4*q^2 + 75*q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&mag))?;
            } else if is_unit_magnitude(&mag) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if one operand uses `q` and the other `u` or `v`; use
            /// the `checked_` form to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs)
                    .expect("q and (u, v) mixed in one expression")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::shorthand::*;

    #[test]
    fn difference_of_squares() {
        assert_eq!((c(1) - q(1)) * (c(1) + q(1)), c(1) - q(2));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert!((c(1) + q(1)).pow(0).is_one());
    }

    #[test]
    fn square_of_torus_factor() {
        // expanded by hand: (1 - u - v + uv)^2
        let base = (c(1) - u(1)) * (c(1) - v(1));
        let expected = c(1) - u(1).scale(&int(2)) - v(1).scale(&int(2))
            + u(2)
            + (u(1) * v(1)).scale(&int(4))
            + v(2)
            - (u(2) * v(1)).scale(&int(2))
            - (u(1) * v(2)).scale(&int(2))
            + u(2) * v(2);
        assert_eq!(base.pow(2), expected);
        assert_eq!(expected.len(), 9);
    }

    #[test]
    fn mixed_alias_is_rejected() {
        assert_eq!(q(1).checked_add(&u(1)), Err(Error::MixedAlias));
        assert_eq!(v(2).checked_mul(&q(1)), Err(Error::MixedAlias));
        assert!(q(1).checked_mul(&t(1)).is_ok());
        // constants are compatible with both contexts
        assert!(c(3).checked_mul(&u(1)).is_ok());
    }

    #[test]
    fn geometric_division() {
        let p = (c(1) - q(4)).exact_div(&(c(1) - q(2))).unwrap();
        assert_eq!(p, c(1) + q(2));
    }

    #[test]
    fn non_exact_division_carries_remainder() {
        match (c(1) - q(3)).exact_div(&(c(1) - q(2))) {
            Err(Error::NonExactDivision { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected NonExactDivision, got {other:?}"),
        }
        assert_eq!(
            q(1).exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn long_division_by_square() {
        let num = (c(1) - q(4)) * (c(1) - q(3));
        let den = (c(1) - q(1)).pow(2);
        let expected = c(1)
            + q(1).scale(&int(2))
            + q(2).scale(&int(3))
            + q(3).scale(&int(3))
            + q(4).scale(&int(2))
            + q(5);
        assert_eq!(num.exact_div(&den).unwrap(), expected);
    }

    #[test]
    fn laurent_division() {
        // (t^-2 - t^2) / (t^-1 - t) = t^-1 + t
        let num = t(-2) - t(2);
        let den = t(-1) - t(1);
        assert_eq!(num.exact_div(&den).unwrap(), t(-1) + t(1));
        // the quotient can have negative exponents even when both operands
        // are polynomials
        assert_eq!((c(1) + t(1)).exact_div(&(t(1) + t(2))).unwrap(), t(-1));
        // bivariate numerator over a polynomial in uv
        let w = u(1) * v(1);
        let num = (c(1) - w.pow(3)) * (u(1) + v(2));
        assert_eq!(
            num.exact_div(&(c(1) - w.clone())).unwrap(),
            (c(1) + &w + w.pow(2)) * (u(1) + v(2))
        );
    }

    #[test]
    fn substitution_examples() {
        let p = (q(1) - c(1)).pow(2);
        let w = u(1) * v(1);
        assert_eq!(
            p.substitute(&[(Var::Q, w.clone())]).unwrap(),
            (w - c(1)).pow(2)
        );

        let p = c(1) + t(2) + t(4).scale(&int(17)) + t(6).scale(&int(17));
        let expected = c(1) + q(1) + q(2).scale(&int(17)) + q(3).scale(&int(17));
        assert_eq!(p.t_squared_to_q().unwrap(), expected);

        let p = q(6) + q(5) + q(4).scale(&int(17)) + q(3).scale(&int(17));
        let back = p.substitute(&[(Var::Q, t(-2))]).unwrap() * t(12);
        assert_eq!(
            back,
            c(1) + t(2) + t(4).scale(&int(17)) + t(6).scale(&int(17))
        );
    }

    #[test]
    fn odd_t_substitution_fails() {
        assert_eq!((c(1) + t(3)).t_squared_to_q(), Err(Error::OddTSubstitution));
    }

    #[test]
    fn negative_power_needs_monomial_image() {
        let err = q(-1).substitute(&[(Var::Q, c(1) + t(1))]).unwrap_err();
        assert!(matches!(err, Error::NonMonomialInverse { .. }));
        // u -> -t^-1 on u^-2 is fine
        let p = u(-2).substitute(&[(Var::U, -t(-1))]).unwrap();
        assert_eq!(p, t(2));
    }

    #[test]
    fn substitution_producing_mixed_alias_fails() {
        assert_eq!(
            (t(1) + q(1)).substitute(&[(Var::T, u(1))]),
            Err(Error::MixedAlias)
        );
    }

    #[test]
    fn palindromes() {
        let p = c(1) + q(2).scale(&int(17)) + q(4).scale(&int(17)) + q(6);
        assert!(p.palindrome_check(3));
        assert!(!(c(1) - q(2).scale(&int(4))).palindrome_check(1));
        assert!(c(1).palindrome_check(0));
        assert!(!c(1).palindrome_check(1));
        assert!(LaurentPoly::zero().palindrome_check(5));
        assert!((c(1) + q(1)).is_palindromic_doubled(1));
        assert!(!(u(1) + v(1)).palindrome_check(1));
    }

    #[test]
    fn display_format() {
        let p = c(1) - q(2).scale(&int(4)) + q(4).scale(&int(75));
        assert_eq!(p.to_string(), "1 - 4*q^2 + 75*q^4");
        assert_eq!((-q(1) + q(3)).to_string(), "-q + q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!((u(1) * v(2)).scale(&ratio(1, 2)).to_string(), "1/2*u*v^2");
        assert_eq!(t(-1).to_string(), "t^-1");
    }

    #[test]
    fn evaluation() {
        let p = (q(1) - c(1)).pow(4) + q(3).scale(&int(2));
        assert_eq!(p.evaluate_all(&int(1)).unwrap(), int(2));
    }
}
