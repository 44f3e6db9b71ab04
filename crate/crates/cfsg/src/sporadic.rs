//! The 26 sporadic simple groups: exact orders, the maximal subgroup H1 used
//! for the chain, and its Sylow subgroup H2. All values are exact integers;
//! decimal and factored forms are cross-checked against each other at
//! startup.

use num_bigint::BigUint;
use num_traits::One;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SporadicName {
    M11,
    M12,
    M22,
    M23,
    M24,
    Co1,
    Co2,
    Co3,
    McL,
    HS,
    Suz,
    J2,
    Fi22,
    Fi23,
    Fi24Prime,
    Monster,
    Baby,
    Th,
    HN,
    He,
    J1,
    J3,
    J4,
    ONan,
    Ly,
    Ru,
}

impl fmt::Display for SporadicName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SporadicName::M11 => "M11",
            SporadicName::M12 => "M12",
            SporadicName::M22 => "M22",
            SporadicName::M23 => "M23",
            SporadicName::M24 => "M24",
            SporadicName::Co1 => "Co1",
            SporadicName::Co2 => "Co2",
            SporadicName::Co3 => "Co3",
            SporadicName::McL => "McL",
            SporadicName::HS => "HS",
            SporadicName::Suz => "Suz",
            SporadicName::J2 => "J2",
            SporadicName::Fi22 => "Fi22",
            SporadicName::Fi23 => "Fi23",
            SporadicName::Fi24Prime => "Fi24'",
            SporadicName::Monster => "M",
            SporadicName::Baby => "B",
            SporadicName::Th => "Th",
            SporadicName::HN => "HN",
            SporadicName::He => "He",
            SporadicName::J1 => "J1",
            SporadicName::J3 => "J3",
            SporadicName::J4 => "J4",
            SporadicName::ONan => "O'N",
            SporadicName::Ly => "Ly",
            SporadicName::Ru => "Ru",
        };
        write!(f, "{s}")
    }
}

/// Order of the Monster as a decimal literal (t1) and of the Baby Monster
/// (t3); their factored forms are checked against these in tests and at
/// sweep startup.
pub const T1_MONSTER_ORDER: &str =
    "808017424794512875886459904961710757005754368000000000";
pub const T3_BABY_ORDER: &str = "4154781481226426191177580544000000";

/// t2 = |2.B|, the Monster's H1, factored.
pub const T2_FACTORS: &[(u64, u32)] = &[
    (2, 42),
    (3, 13),
    (5, 6),
    (7, 2),
    (11, 1),
    (13, 1),
    (17, 1),
    (19, 1),
    (23, 1),
    (31, 1),
    (47, 1),
];

/// t4, the Baby Monster's H1, as the binomial product 2^38 * (2^12-1) *
/// (2^9+1) * (2^8-1) * (2^6-1) * (2^5+1) * (2^2-1).
pub fn t4_binomial_form() -> BigUint {
    let mut v = BigUint::one() << 38;
    for f in [4095u64, 513, 255, 63, 33, 3] {
        v *= f;
    }
    v
}

pub const T4_FACTORS: &[(u64, u32)] = &[
    (2, 38),
    (3, 10),
    (5, 2),
    (7, 2),
    (11, 1),
    (13, 1),
    (17, 1),
    (19, 1),
];

pub struct SporadicRow {
    pub name: SporadicName,
    /// |H| as a decimal literal.
    pub h_decimal: &'static str,
    /// |H| as a prime factorization.
    pub h_factors: &'static [(u64, u32)],
    /// H2 = a Sylow subgroup of H1, always a prime power.
    pub h2: (u64, u32),
    /// H1 = a maximal subgroup, factored.
    pub h1_factors: &'static [(u64, u32)],
    /// Conventional name of H1.
    pub h1_name: &'static str,
    pub b1: u32,
    pub b2: u32,
}

pub fn factored(fs: &[(u64, u32)]) -> BigUint {
    let mut v = BigUint::one();
    for &(p, e) in fs {
        v *= BigUint::from(p).pow(e);
    }
    v
}

pub fn factored_string(fs: &[(u64, u32)]) -> String {
    fs.iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

impl SporadicName {
    pub const ALL: [SporadicName; 26] = [
        SporadicName::M11,
        SporadicName::M12,
        SporadicName::M22,
        SporadicName::M23,
        SporadicName::M24,
        SporadicName::Co1,
        SporadicName::Co2,
        SporadicName::Co3,
        SporadicName::McL,
        SporadicName::HS,
        SporadicName::Suz,
        SporadicName::J2,
        SporadicName::Fi22,
        SporadicName::Fi23,
        SporadicName::Fi24Prime,
        SporadicName::Monster,
        SporadicName::Baby,
        SporadicName::Th,
        SporadicName::HN,
        SporadicName::He,
        SporadicName::J1,
        SporadicName::J3,
        SporadicName::J4,
        SporadicName::ONan,
        SporadicName::Ly,
        SporadicName::Ru,
    ];

    pub fn b2(self) -> u32 {
        self.row().b2
    }

    pub fn row(self) -> &'static SporadicRow {
        ROWS.iter().find(|r| r.name == self).expect("all 26 present")
    }
}

pub static ROWS: &[SporadicRow] = &[
    SporadicRow {
        name: SporadicName::M11,
        h_decimal: "7920",
        h_factors: &[(2, 4), (3, 2), (5, 1), (11, 1)],
        h2: (2, 4),
        h1_factors: &[(2, 4), (3, 2), (5, 1)],
        h1_name: "M10",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::M12,
        h_decimal: "95040",
        h_factors: &[(2, 6), (3, 3), (5, 1), (11, 1)],
        h2: (2, 2),
        h1_factors: &[(2, 2), (3, 1), (5, 1), (11, 1)],
        h1_name: "L2(11)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::M22,
        h_decimal: "443520",
        h_factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)],
        h2: (2, 6),
        h1_factors: &[(2, 6), (3, 2), (5, 1), (7, 1)],
        h1_name: "A8",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::M23,
        h_decimal: "10200960",
        h_factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
        h2: (2, 7),
        h1_factors: &[(2, 7), (3, 2), (5, 1), (7, 1)],
        h1_name: "2^4:A7",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::M24,
        h_decimal: "244823040",
        h_factors: &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
        h2: (2, 8),
        h1_factors: &[(2, 8), (3, 2), (5, 1), (7, 1), (11, 1)],
        h1_name: "M22:2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Co1,
        h_decimal: "4157776806543360000",
        h_factors: &[
            (2, 21),
            (3, 9),
            (5, 4),
            (7, 2),
            (11, 1),
            (13, 1),
            (23, 1),
        ],
        h2: (2, 18),
        h1_factors: &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
        h1_name: "Co2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Co2,
        h_decimal: "42305421312000",
        h_factors: &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
        h2: (2, 18),
        h1_factors: &[(2, 18), (3, 2), (5, 1), (7, 1), (11, 1)],
        h1_name: "2^10:M22:2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Co3,
        h_decimal: "495766656000",
        h_factors: &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
        h2: (2, 7),
        h1_factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
        h1_name: "M23",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::McL,
        h_decimal: "898128000",
        h_factors: &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)],
        h2: (3, 6),
        h1_factors: &[(2, 7), (3, 6), (5, 1), (7, 1)],
        h1_name: "U4(3)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::HS,
        h_decimal: "44352000",
        h_factors: &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)],
        h2: (2, 7),
        h1_factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)],
        h1_name: "M22",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Suz,
        h_decimal: "448345497600",
        h_factors: &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)],
        h2: (2, 12),
        h1_factors: &[(2, 12), (3, 3), (5, 2), (7, 1), (13, 1)],
        h1_name: "G2(4)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::J2,
        h_decimal: "604800",
        h_factors: &[(2, 7), (3, 3), (5, 2), (7, 1)],
        h2: (2, 5),
        h1_factors: &[(2, 5), (3, 3), (7, 1)],
        h1_name: "U3(3)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Fi22,
        h_decimal: "64561751654400",
        h_factors: &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
        h2: (2, 16),
        h1_factors: &[(2, 16), (3, 6), (5, 1), (7, 1), (11, 1)],
        h1_name: "2.U6(2)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Fi23,
        h_decimal: "4089470473293004800",
        h_factors: &[
            (2, 18),
            (3, 13),
            (5, 2),
            (7, 1),
            (11, 1),
            (13, 1),
            (17, 1),
            (23, 1),
        ],
        h2: (2, 18),
        h1_factors: &[(2, 18), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
        h1_name: "2.Fi22",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Fi24Prime,
        h_decimal: "1255205709190661721292800",
        h_factors: &[
            (2, 21),
            (3, 16),
            (5, 2),
            (7, 3),
            (11, 1),
            (13, 1),
            (17, 1),
            (23, 1),
            (29, 1),
        ],
        h2: (2, 19),
        h1_factors: &[(2, 19), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
        h1_name: "2.Fi22:2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Monster,
        h_decimal: T1_MONSTER_ORDER,
        h_factors: &[
            (2, 46),
            (3, 20),
            (5, 9),
            (7, 6),
            (11, 2),
            (13, 3),
            (17, 1),
            (19, 1),
            (23, 1),
            (29, 1),
            (31, 1),
            (41, 1),
            (47, 1),
            (59, 1),
            (71, 1),
        ],
        h2: (2, 42),
        h1_factors: T2_FACTORS,
        h1_name: "2.B",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Baby,
        h_decimal: T3_BABY_ORDER,
        h_factors: &[
            (2, 41),
            (3, 13),
            (5, 6),
            (7, 2),
            (11, 1),
            (13, 1),
            (17, 1),
            (19, 1),
            (23, 1),
            (31, 1),
            (47, 1),
        ],
        h2: (2, 38),
        h1_factors: T4_FACTORS,
        h1_name: "2^(9+16).Sp8(2) order t4",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Th,
        h_decimal: "90745943887872000",
        h_factors: &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
        h2: (2, 15),
        h1_factors: &[(2, 15), (3, 2), (5, 1), (7, 1), (31, 1)],
        h1_name: "2^5.L5(2)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::HN,
        h_decimal: "273030912000000",
        h_factors: &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)],
        h2: (2, 9),
        h1_factors: &[(2, 9), (3, 5), (5, 2), (7, 1), (11, 1)],
        h1_name: "A12",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::He,
        h_decimal: "4030387200",
        h_factors: &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)],
        h2: (2, 8),
        h1_factors: &[(2, 8), (3, 2), (5, 2), (17, 1)],
        h1_name: "Sp4(4)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::J1,
        h_decimal: "175560",
        h_factors: &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)],
        h2: (2, 2),
        h1_factors: &[(2, 2), (3, 1), (5, 1), (11, 1)],
        h1_name: "L2(11)",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::J3,
        h_decimal: "50232960",
        h_factors: &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)],
        h2: (2, 5),
        h1_factors: &[(2, 5), (3, 1), (5, 1), (17, 1)],
        h1_name: "L2(16):2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::J4,
        h_decimal: "86775571046077562880",
        h_factors: &[
            (2, 21),
            (3, 3),
            (5, 1),
            (7, 1),
            (11, 3),
            (23, 1),
            (29, 1),
            (31, 1),
            (37, 1),
            (43, 1),
        ],
        h2: (2, 21),
        h1_factors: &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
        h1_name: "2^11:M24",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::ONan,
        h_decimal: "460815505920",
        h_factors: &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
        h2: (2, 6),
        h1_factors: &[(2, 6), (3, 2), (7, 3), (19, 1)],
        h1_name: "L3(7):2",
        b1: 1,
        b2: 1,
    },
    SporadicRow {
        name: SporadicName::Ly,
        h_decimal: "51765179004000000",
        h_factors: &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
        h2: (5, 6),
        h1_factors: &[(2, 6), (3, 3), (5, 6), (7, 1), (31, 1)],
        h1_name: "G2(5)",
        b1: 1,
        b2: 5,
    },
    SporadicRow {
        name: SporadicName::Ru,
        h_decimal: "145926144000",
        h_factors: &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)],
        h2: (2, 12),
        h1_factors: &[(2, 12), (3, 3), (5, 2), (13, 1)],
        h1_name: "2F4(2)",
        b1: 1,
        b2: 1,
    },
];

/// Cross-checks run before a sweep: every decimal literal equals its prime
/// factorization, t4's binomial and factored forms agree, and H2 | H1 | H.
pub fn verify_constants() -> Result<(), String> {
    for row in ROWS {
        let decimal: BigUint = row.h_decimal.parse().map_err(|_| "bad decimal")?;
        let fac = factored(row.h_factors);
        if decimal != fac {
            return Err(format!(
                "{}: decimal {} != factored {}",
                row.name, decimal, fac
            ));
        }
        let h1 = factored(row.h1_factors);
        let h2 = BigUint::from(row.h2.0).pow(row.h2.1);
        if &h1 % &h2 != BigUint::ZERO || &decimal % &h1 != BigUint::ZERO {
            return Err(format!("{}: divisibility broken", row.name));
        }
    }
    if factored(T4_FACTORS) != t4_binomial_form() {
        return Err("t4 factored and binomial forms disagree".into());
    }
    if factored(T2_FACTORS)
        != factored(
            SporadicName::Monster.row().h1_factors,
        )
    {
        return Err("t2 mismatch".into());
    }
    Ok(())
}
