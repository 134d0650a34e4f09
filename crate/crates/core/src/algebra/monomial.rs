use std::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial symbols. The declaration order fixes the canonical term order
/// `u < v < t < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    U,
    V,
    T,
    Q,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::U, Var::V, Var::T, Var::Q];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::U => 'u',
            Var::V => 'v',
            Var::T => 't',
            Var::Q => 'q',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector over `(u, v, t, q)`. Entries may be negative.
///
/// The derived `Ord` is lexicographic on the array, which is the canonical
/// term order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [i32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(var: Var, exp: i32) -> Self {
        let mut e = [0; 4];
        e[var.index()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, var: Var) -> i32 {
        self.0[var.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.map(|e| -e))
    }

    /// `self / other` when every exponent of the quotient is non-negative.
    pub fn divides_into(&self, other: &Monomial) -> Option<Monomial> {
        let e: [i32; 4] = std::array::from_fn(|i| other.0[i] - self.0[i]);
        e.iter().all(|&x| x >= 0).then_some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for var in Var::ALL {
            let e = self.exp(var);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
