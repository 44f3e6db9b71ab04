//! Exact big-integer order formulas for H, H2, H1 across the simple group
//! families: the group order, the Sylow subgroup used as H2, and the Borel
//! or maximal subgroup used as H1. Every value carries a human-readable
//! factored form for reports.

use crate::family::{Family, SpecError};
use crate::sporadic::{factored, factored_string};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

pub struct Orders {
    pub h: BigUint,
    pub h2: BigUint,
    pub h1: BigUint,
    pub h_str: String,
    pub h2_str: String,
    pub h1_str: String,
}

fn big(q: u64) -> BigUint {
    BigUint::from(q)
}

fn qpow(q: u64, e: u64) -> BigUint {
    big(q).pow(e as u32)
}

/// q^e - 1
fn qm1(q: u64, e: u64) -> BigUint {
    qpow(q, e) - BigUint::one()
}

/// q^e + 1
fn qp1(q: u64, e: u64) -> BigUint {
    qpow(q, e) + BigUint::one()
}

fn gcd_u(a: BigUint, b: u64) -> BigUint {
    a.gcd(&big(b))
}

/// prod_{i=1}^{m} (q^{i+1} - 1)
fn prod_linear(q: u64, m: u64) -> BigUint {
    (1..=m).map(|i| qm1(q, i + 1)).product()
}

/// prod_{i=1}^{m} (q^{i+1} - (-1)^{i+1}): minus for odd i, plus for even i.
fn prod_unitary(q: u64, m: u64) -> BigUint {
    (1..=m)
        .map(|i| if i % 2 == 1 { qm1(q, i + 1) } else { qp1(q, i + 1) })
        .product()
}

/// prod_{i=1}^{m} (q^{2i} - 1)
fn prod_even(q: u64, m: u64) -> BigUint {
    (1..=m).map(|i| qm1(q, 2 * i)).product()
}

fn prod_over(q: u64, exps: &[u64]) -> BigUint {
    exps.iter().map(|&e| qm1(q, e)).product()
}

pub fn order_formulas(family: &Family) -> Result<Orders, SpecError> {
    family.validate()?;
    use Family::*;
    let o = match *family {
        Linear { m, q } => {
            let m = m as u64;
            let d = gcd_u(qm1(q, 1), m + 1);
            let p_part = qpow(q, m * (m + 1) / 2);
            let h = &p_part * prod_linear(q, m) / &d;
            if q > 2 {
                let h1 = &p_part * qm1(q, 1).pow(m as u32) / &d;
                Orders {
                    h,
                    h2: p_part.clone(),
                    h1,
                    h_str: format!(
                        "{q}^{} * prod_{{i=1..{m}}}({q}^(i+1)-1) / gcd({q}-1,{})",
                        m * (m + 1) / 2,
                        m + 1
                    ),
                    h2_str: format!("{q}^{}", m * (m + 1) / 2),
                    h1_str: format!(
                        "{q}^{} * ({q}-1)^{m} / gcd({q}-1,{})",
                        m * (m + 1) / 2,
                        m + 1
                    ),
                }
            } else {
                let h1 = &h / qm1(2, m + 1);
                Orders {
                    h,
                    h2: p_part,
                    h1,
                    h_str: format!("2^{} * prod_{{i=1..{m}}}(2^(i+1)-1)", m * (m + 1) / 2),
                    h2_str: format!("2^{}", m * (m + 1) / 2),
                    h1_str: format!("|H| / (2^{}-1)", m + 1),
                }
            }
        }
        Unitary { m, q } => {
            let m = m as u64;
            let d = gcd_u(qp1(q, 1), m + 1);
            let prod = prod_unitary(q, m);
            if q > 2 {
                let p_part = qpow(q, m * (m + 1) / 2);
                let h = &p_part * &prod / &d;
                // Borel torus of the twisted form: (q-1)^floor(m/2) * (q+1)^ceil((m-1)/2)
                let torus =
                    qm1(q, 1).pow((m / 2) as u32) * qp1(q, 1).pow((m - 1).div_ceil(2) as u32);
                let h1 = &p_part * torus / &d;
                Orders {
                    h,
                    h2: p_part.clone(),
                    h1,
                    h_str: format!(
                        "{q}^{} * prod_{{i=1..{m}}}({q}^(i+1)-(-1)^(i+1)) / gcd({q}+1,{})",
                        m * (m + 1) / 2,
                        m + 1
                    ),
                    h2_str: format!("{q}^{}", m * (m + 1) / 2),
                    h1_str: format!(
                        "{q}^{} * ({q}-1)^{} * ({q}+1)^{} / gcd({q}+1,{})",
                        m * (m + 1) / 2,
                        m / 2,
                        (m - 1).div_ceil(2),
                        m + 1
                    ),
                }
            } else if (m - 1) % 6 != 0 {
                let p_part = qpow(2, m * (m + 1) / 2);
                let h = &p_part * &prod / &d;
                // maximal subgroup of index (2^(m+1) - (-1)^(m+1)) (2^m - (-1)^m) / 3
                let x = if (m + 1) % 2 == 0 { qm1(2, m + 1) } else { qp1(2, m + 1) };
                let y = if m % 2 == 0 { qm1(2, m) } else { qp1(2, m) };
                let h1 = BigUint::from(3u32) * &p_part * &prod / (&d * &x * &y);
                Orders {
                    h,
                    h2: p_part,
                    h1,
                    h_str: format!(
                        "2^{} * prod_{{i=1..{m}}}(2^(i+1)-(-1)^(i+1)) / gcd(3,{})",
                        m * (m + 1) / 2,
                        m + 1
                    ),
                    h2_str: format!("2^{}", m * (m + 1) / 2),
                    h1_str: format!(
                        "3/gcd(3,{}) * 2^{} * prod / ((2^{}-(-1)^{})(2^{}-(-1)^{}))",
                        m + 1,
                        m * (m + 1) / 2,
                        m + 1,
                        m + 1,
                        m,
                        m
                    ),
                }
            } else {
                let p_part_h = qpow(2, m * (m + 1) / 2);
                let h = &p_part_h * &prod / &d;
                let h2 = qpow(2, m * (m - 1) / 2);
                let h1 =
                    BigUint::from(3u32) * &h2 * prod_unitary(2, m - 1) / &d;
                Orders {
                    h,
                    h2,
                    h1,
                    h_str: format!(
                        "2^{} * prod_{{i=1..{m}}}(2^(i+1)-(-1)^(i+1)) / gcd(3,{})",
                        m * (m + 1) / 2,
                        m + 1
                    ),
                    h2_str: format!("2^{}", m * (m - 1) / 2),
                    h1_str: format!(
                        "3/gcd(3,{}) * 2^{} * prod_{{i=1..{}}}(2^(i+1)-(-1)^(i+1))",
                        m + 1,
                        m * (m - 1) / 2,
                        m - 1
                    ),
                }
            }
        }
        Symplectic { m, q } | OrthogonalOdd { m, q } => {
            let m = m as u64;
            let d = gcd_u(qm1(q, 1), 2);
            let p_part = qpow(q, m * m);
            let h = &p_part * prod_even(q, m) / &d;
            if q > 2 {
                let h1 = &p_part * qm1(q, 1).pow(m as u32) / &d;
                Orders {
                    h,
                    h2: p_part.clone(),
                    h1,
                    h_str: format!(
                        "{q}^{} * prod_{{i=1..{m}}}({q}^(2i)-1) / gcd(2,{q}-1)",
                        m * m
                    ),
                    h2_str: format!("{q}^{}", m * m),
                    h1_str: format!("{q}^{} * ({q}-1)^{m} / gcd(2,{q}-1)", m * m),
                }
            } else {
                // symplectic q=2 only (B_m needs q odd)
                let h2 = qpow(2, m * m - m + 1);
                let h1 = &h2 * qp1(2, m) * prod_even(2, m - 1);
                Orders {
                    h,
                    h2,
                    h1,
                    h_str: format!("2^{} * prod_{{i=1..{m}}}(2^(2i)-1)", m * m),
                    h2_str: format!("2^{}", m * m - m + 1),
                    h1_str: format!(
                        "2^{} * (2^{m}+1) * prod_{{i=1..{}}}(2^(2i)-1)",
                        m * m - m + 1,
                        m - 1
                    ),
                }
            }
        }
        OrthogonalPlus { m, q } => {
            let m = m as u64;
            let d = gcd_u(qm1(q, m), 4);
            let p_part = qpow(q, m * (m - 1));
            let h = &p_part * qm1(q, m) * prod_even(q, m - 1) / &d;
            if q > 2 {
                let h1 = &p_part * qm1(q, 1).pow(m as u32) / &d;
                Orders {
                    h,
                    h2: p_part.clone(),
                    h1,
                    h_str: format!(
                        "{q}^{} * ({q}^{m}-1) * prod_{{i=1..{}}}({q}^(2i)-1) / gcd(4,{q}^{m}-1)",
                        m * (m - 1),
                        m - 1
                    ),
                    h2_str: format!("{q}^{}", m * (m - 1)),
                    h1_str: format!("{q}^{} * ({q}-1)^{m} / gcd(4,{q}^{m}-1)", m * (m - 1)),
                }
            } else {
                let h2 = qpow(2, m * m - 2 * m + 1);
                let h1 = &h2 * prod_even(2, m - 1);
                Orders {
                    h,
                    h2,
                    h1,
                    h_str: format!(
                        "2^{} * (2^{m}-1) * prod_{{i=1..{}}}(2^(2i)-1)",
                        m * (m - 1),
                        m - 1
                    ),
                    h2_str: format!("2^{}", m * m - 2 * m + 1),
                    h1_str: format!(
                        "2^{} * prod_{{i=1..{}}}(2^(2i)-1)",
                        m * m - 2 * m + 1,
                        m - 1
                    ),
                }
            }
        }
        OrthogonalMinus { m, q } => {
            let m = m as u64;
            let d = gcd_u(qp1(q, m), 4);
            let p_part = qpow(q, m * (m - 1));
            let h = &p_part * qp1(q, m) * prod_even(q, m - 1) / &d;
            if q > 2 {
                // Borel torus of the twisted form: (q-1)^(m-1) (q+1)
                let h1 = &p_part * qm1(q, 1).pow(m as u32 - 1) * qp1(q, 1) / &d;
                Orders {
                    h,
                    h2: p_part.clone(),
                    h1,
                    h_str: format!(
                        "{q}^{} * ({q}^{m}+1) * prod_{{i=1..{}}}({q}^(2i)-1) / gcd(4,{q}^{m}+1)",
                        m * (m - 1),
                        m - 1
                    ),
                    h2_str: format!("{q}^{}", m * (m - 1)),
                    h1_str: format!(
                        "{q}^{} * ({q}-1)^{} * ({q}+1) / gcd(4,{q}^{m}+1)",
                        m * (m - 1),
                        m - 1
                    ),
                }
            } else {
                let h2 = p_part.clone();
                let h1 = &h2 * qp1(2, m - 1) * prod_even(2, m - 2);
                Orders {
                    h,
                    h2,
                    h1,
                    h_str: format!(
                        "2^{} * (2^{m}+1) * prod_{{i=1..{}}}(2^(2i)-1)",
                        m * (m - 1),
                        m - 1
                    ),
                    h2_str: format!("2^{}", m * (m - 1)),
                    h1_str: format!(
                        "2^{} * (2^{}+1) * prod_{{i=1..{}}}(2^(2i)-1)",
                        m * (m - 1),
                        m - 1,
                        m - 2
                    ),
                }
            }
        }
        G2 { q } => Orders {
            h: qpow(q, 6) * qm1(q, 6) * qm1(q, 2),
            h2: qpow(q, 6),
            h1: qpow(q, 6) * qm1(q, 1).pow(2),
            h_str: format!("{q}^6 * ({q}^6-1) * ({q}^2-1)"),
            h2_str: format!("{q}^6"),
            h1_str: format!("{q}^6 * ({q}-1)^2"),
        },
        F4 { q } => Orders {
            h: qpow(q, 24) * prod_over(q, &[12, 8, 6, 2]),
            h2: qpow(q, 24),
            h1: qpow(q, 24) * prod_over(q, &[6, 4, 2, 1]),
            h_str: format!("{q}^24 * prod_{{i in {{2,6,8,12}}}}({q}^i-1)"),
            h2_str: format!("{q}^24"),
            h1_str: format!("{q}^24 * ({q}^6-1)({q}^4-1)({q}^2-1)({q}-1)"),
        },
        E6 { q } => {
            let d = gcd_u(qm1(q, 1), 3);
            let h = qpow(q, 36) * prod_over(q, &[12, 9, 8, 6, 5, 2]) / &d;
            if q > 2 {
                Orders {
                    h,
                    h2: qpow(q, 36),
                    h1: qpow(q, 36) * qm1(q, 1).pow(6),
                    h_str: format!(
                        "{q}^36 * prod_{{i in {{2,5,6,8,9,12}}}}({q}^i-1) / gcd(3,{q}-1)"
                    ),
                    h2_str: format!("{q}^36"),
                    h1_str: format!("{q}^36 * ({q}-1)^6"),
                }
            } else {
                Orders {
                    h,
                    h2: qpow(2, 36),
                    h1: qpow(2, 36) * factored(&[(3, 3), (5, 1), (7, 1), (31, 1)]),
                    h_str: "2^36 * prod_{i in {2,5,6,8,9,12}}(2^i-1)".into(),
                    h2_str: "2^36".into(),
                    h1_str: format!("2^36 * {}", factored_string(&[(3, 3), (5, 1), (7, 1), (31, 1)])),
                }
            }
        }
        TwistedE6 { q } => {
            let d = gcd_u(qp1(q, 1), 3);
            // odd-degree factors flip sign in the twisted form: (q^9+1), (q^5+1)
            Orders {
                h: qpow(q, 36) * qp1(q, 9) * qp1(q, 5) * prod_over(q, &[12, 8, 6, 2]) / &d,
                h2: qpow(q, 36),
                h1: qpow(q, 36) * qm1(q, 1).pow(4) * qp1(q, 1).pow(2),
                h_str: format!(
                    "{q}^36 * ({q}^9+1) * ({q}^5+1) * prod_{{i in {{2,6,8,12}}}}({q}^i-1) / gcd(3,{q}+1)"
                ),
                h2_str: format!("{q}^36"),
                h1_str: format!("{q}^36 * ({q}-1)^4 * ({q}+1)^2"),
            }
        }
        TripleD4 { q } => Orders {
            h: qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + BigUint::one()) * qm1(q, 6) * qm1(q, 2),
            h2: qpow(q, 12),
            h1: qpow(q, 12) * qm1(q, 3) * qm1(q, 1),
            h_str: format!("{q}^12 * ({q}^8+{q}^4+1) * ({q}^6-1) * ({q}^2-1)"),
            h2_str: format!("{q}^12"),
            h1_str: format!("{q}^12 * ({q}^3-1) * ({q}-1)"),
        },
        E7 { q } => {
            let d = gcd_u(qm1(q, 1), 2);
            let h = qpow(q, 63) * prod_over(q, &[18, 14, 12, 10, 8, 6, 2]) / &d;
            if q > 2 {
                Orders {
                    h,
                    h2: qpow(q, 63),
                    h1: qpow(q, 63) * qm1(q, 1).pow(7),
                    h_str: format!(
                        "{q}^63 * prod_{{i in {{2,6,8,10,12,14,18}}}}({q}^i-1) / gcd(2,{q}-1)"
                    ),
                    h2_str: format!("{q}^63"),
                    h1_str: format!("{q}^63 * ({q}-1)^7"),
                }
            } else {
                Orders {
                    h,
                    h2: qpow(2, 63),
                    h1: qpow(2, 63) * factored(&[(3, 4), (7, 2), (5, 1)]),
                    h_str: "2^63 * prod_{i in {2,6,8,10,12,14,18}}(2^i-1)".into(),
                    h2_str: "2^63".into(),
                    h1_str: format!("2^63 * {}", factored_string(&[(3, 4), (7, 2), (5, 1)])),
                }
            }
        }
        E8 { q } => {
            let h = qpow(q, 120) * prod_over(q, &[30, 24, 20, 18, 14, 12, 8, 2]);
            if q > 2 {
                Orders {
                    h,
                    h2: qpow(q, 120),
                    h1: qpow(q, 120) * qm1(q, 1).pow(8),
                    h_str: format!(
                        "{q}^120 * prod_{{i in {{2,8,12,14,18,20,24,30}}}}({q}^i-1)"
                    ),
                    h2_str: format!("{q}^120"),
                    h1_str: format!("{q}^120 * ({q}-1)^8"),
                }
            } else {
                Orders {
                    h,
                    h2: qpow(2, 119),
                    h1: qpow(2, 119) * factored(&[(3, 4), (5, 1), (7, 2), (31, 1)]),
                    h_str: "2^120 * prod_{i in {2,8,12,14,18,20,24,30}}(2^i-1)".into(),
                    h2_str: "2^119".into(),
                    h1_str: format!(
                        "2^119 * {}",
                        factored_string(&[(3, 4), (5, 1), (7, 2), (31, 1)])
                    ),
                }
            }
        }
        Suzuki { q } => Orders {
            h: qpow(q, 2) * qp1(q, 2) * qm1(q, 1),
            h2: qpow(q, 2),
            h1: qpow(q, 2) * qm1(q, 1),
            h_str: format!("{q}^2 * ({q}^2+1) * ({q}-1)"),
            h2_str: format!("{q}^2"),
            h1_str: format!("{q}^2 * ({q}-1)"),
        },
        SmallRee { q } => Orders {
            h: qpow(q, 3) * qp1(q, 3) * qm1(q, 1),
            h2: qpow(q, 3),
            h1: qpow(q, 3) * qm1(q, 1),
            h_str: format!("{q}^3 * ({q}^3+1) * ({q}-1)"),
            h2_str: format!("{q}^3"),
            h1_str: format!("{q}^3 * ({q}-1)"),
        },
        LargeRee { q } => Orders {
            h: qpow(q, 12) * qp1(q, 6) * qm1(q, 4) * qp1(q, 3) * qm1(q, 1),
            h2: qpow(q, 12),
            h1: qpow(q, 12) * qm1(q, 1).pow(2),
            h_str: format!("{q}^12 * ({q}^6+1)({q}^4-1)({q}^3+1)({q}-1)"),
            h2_str: format!("{q}^12"),
            h1_str: format!("{q}^12 * ({q}-1)^2"),
        },
        Tits => Orders {
            h: BigUint::from(17971200u64),
            h2: BigUint::from(32u64),
            h1: BigUint::from(11232u64),
            h_str: "17971200".into(),
            h2_str: "2^5".into(),
            h1_str: "11232".into(),
        },
        Alternating { m } => {
            let chain = crate::alternating::alternating_chain(m)?;
            Orders {
                h: chain.h,
                h2: chain.h2,
                h1: chain.h1,
                h_str: format!("{m}!/2"),
                h2_str: format!("{}!/2", chain.k),
                h1_str: format!("{}!/2", chain.k + 1),
            }
        }
        Sporadic(name) => {
            let row = name.row();
            Orders {
                h: row.h_decimal.parse().expect("checked decimal literal"),
                h2: BigUint::from(row.h2.0).pow(row.h2.1),
                h1: factored(row.h1_factors),
                h_str: factored_string(row.h_factors),
                h2_str: factored_string(&[row.h2]),
                h1_str: format!("{} = {}", row.h1_name, factored_string(row.h1_factors)),
            }
        }
    };
    Ok(o)
}
