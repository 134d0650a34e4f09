//! Low-genus tables for `M(C, SL2)`, stored as printed: `IE(M_B)` truncated
//! at degree `3g - 3`, full `IP_t`, and full `IP_t - P_t`.

use crate::algebra::shorthand::int;
use crate::algebra::{LaurentPoly, Var};

pub const GENERA: std::ops::RangeInclusive<u32> = 2..=5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table {
    IeSl2,
    IpSl2,
    IpMinusP,
}

impl Table {
    pub const ALL: [Table; 3] = [Table::IeSl2, Table::IpSl2, Table::IpMinusP];

    pub fn name(self) -> &'static str {
        match self {
            Table::IeSl2 => "ie-sl2",
            Table::IpSl2 => "ip-sl2",
            Table::IpMinusP => "ip-minus-p",
        }
    }

    pub fn var(self) -> Var {
        match self {
            Table::IeSl2 => Var::Q,
            Table::IpSl2 | Table::IpMinusP => Var::T,
        }
    }

    /// Highest degree shown in the printed row, if the row is truncated.
    pub fn printed_through(self, g: u32) -> Option<i64> {
        match self {
            Table::IeSl2 => Some(3 * g as i64 - 3),
            _ => None,
        }
    }

    fn rows(self) -> &'static [&'static [(i32, i64)]] {
        match self {
            Table::IeSl2 => IE_SL2,
            Table::IpSl2 => IP_SL2,
            Table::IpMinusP => IP_MINUS_P,
        }
    }

    /// The printed row for genus `g`, if the table has one.
    pub fn row(self, g: u32) -> Option<LaurentPoly> {
        if !GENERA.contains(&g) {
            return None;
        }
        let terms = self.rows()[(g - 2) as usize];
        Some(
            terms
                .iter()
                .map(|&(e, c)| LaurentPoly::var_pow(self.var(), e).scale(&int(c)))
                .sum(),
        )
    }
}

#[rustfmt::skip]
const IE_SL2: &[&[(i32, i64)]] = &[
    &[(0, 1), (2, 17)],
    &[(0, 1), (2, -4), (4, 75), (6, 384)],
    &[(0, 1), (2, -6), (4, 15), (6, 243), (8, 3875)],
    &[(0, 1), (2, -8), (4, 28), (6, -56), (8, 1103), (10, 28672), (12, 71848)],
];

#[rustfmt::skip]
const IP_SL2: &[&[(i32, i64)]] = &[
    &[(0, 1), (2, 1), (4, 17), (6, 17)],
    &[
        (0, 1), (2, 1), (3, 6), (4, 2), (5, 6), (6, 17), (7, 6), (8, 81), (9, 12), (10, 396),
        (11, 6), (12, 66),
    ],
    &[
        (0, 1), (2, 1), (3, 8), (4, 2), (5, 8), (6, 30), (7, 16), (8, 31), (9, 72), (10, 59),
        (11, 72), (12, 385), (13, 80), (14, 3955), (15, 80), (16, 3885), (17, 16), (18, 259),
    ],
    &[
        (0, 1), (2, 1), (3, 10), (4, 2), (5, 10), (6, 47), (7, 20), (8, 48), (9, 140), (10, 93),
        (11, 150), (12, 304), (13, 270), (14, 349), (15, 522), (16, 1583), (17, 532),
        (18, 29414), (19, 532), (20, 72170), (21, 280), (22, 28784), (23, 30), (24, 1028),
    ],
];

#[rustfmt::skip]
const IP_MINUS_P: &[&[(i32, i64)]] = &[
    &[(4, 16)],
    &[(3, 6), (4, 1), (5, 6), (6, 1), (7, 6), (8, 79), (10, 1)],
    &[
        (3, 8), (4, 1), (5, 8), (6, -20), (7, 16), (8, -19), (9, 22), (10, 56), (11, 56),
        (12, 327), (13, 8), (14, 28), (16, 1),
    ],
    &[
        (3, 10), (4, 1), (5, 10), (6, -65), (7, 20), (8, -196), (9, -35), (10, -20), (11, -25),
        (12, 124), (13, 240), (14, 256), (15, 262), (16, 1279), (17, 120), (18, 211), (19, 10),
        (20, 45), (22, 1),
    ],
];

/// Completes a truncated `IE(M_B)` row to degree `6g - 6` by palindromy.
pub fn complete_by_palindromy(row: &LaurentPoly, g: u32) -> LaurentPoly {
    let top = 6 * g as i32 - 6;
    let half = 3 * g as i32 - 3;
    let mut full = row.truncate(half as i64);
    for (m, c) in row.terms() {
        let d = m.exp(Var::Q);
        if d < half {
            full = full + LaurentPoly::var_pow(Var::Q, top - d).scale(c);
        }
    }
    full
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::shorthand::*;

    #[test]
    fn rows_exist_only_in_range() {
        assert!(Table::IpSl2.row(1).is_none());
        assert!(Table::IpSl2.row(6).is_none());
        assert_eq!(Table::IpMinusP.row(2).unwrap(), t(4).scale(&int(16)));
    }

    #[test]
    fn palindromic_completion() {
        let full = complete_by_palindromy(&Table::IeSl2.row(2).unwrap(), 2);
        assert_eq!(
            full,
            c(1) + q(2).scale(&int(17)) + q(4).scale(&int(17)) + q(6)
        );
    }
}
