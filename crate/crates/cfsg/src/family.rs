//! Identifiers and parameter constraints for the finite simple group
//! families, plus the per-family search-method and bound constants.

use crate::sporadic::SporadicName;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// A_m(q) = PSL_{m+1}(q), m >= 1, except PSL_2(2), PSL_2(3)
    Linear { m: u32, q: u64 },
    /// 2A_m(q^2) = PSU_{m+1}(q), m >= 2, except PSU_3(2)
    Unitary { m: u32, q: u64 },
    /// C_m(q) = PSp_{2m}(q), m >= 2, except PSp_4(2)
    Symplectic { m: u32, q: u64 },
    /// B_m(q), m >= 3, q odd
    OrthogonalOdd { m: u32, q: u64 },
    /// D_m(q), m >= 4
    OrthogonalPlus { m: u32, q: u64 },
    /// 2D_m(q^2), m >= 4
    OrthogonalMinus { m: u32, q: u64 },
    G2 { q: u64 },
    F4 { q: u64 },
    E6 { q: u64 },
    TwistedE6 { q: u64 },
    TripleD4 { q: u64 },
    E7 { q: u64 },
    E8 { q: u64 },
    /// 2B_2(q), q = 2^(2t+1), t >= 1
    Suzuki { q: u64 },
    /// 2G_2(q), q = 3^(2t+1), t >= 1
    SmallRee { q: u64 },
    /// 2F_4(q), q = 2^(2t+1), t >= 1
    LargeRee { q: u64 },
    /// 2F_4(2)', the Tits group
    Tits,
    /// Alt(m), m >= 5
    Alternating { m: u32 },
    Sporadic(SporadicName),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Method1,
    Method2,
}

/// A family member together with its assigned search method and bound
/// constants.
#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub method: Method,
    pub b1: u32,
    pub b2: u32,
}

#[derive(Debug, PartialEq, Eq)]
pub enum SpecError {
    BadRank(&'static str),
    NotPrimePower(u64),
    ExcludedCase(&'static str),
    BadTwistExponent(&'static str),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::BadRank(s) => write!(f, "rank out of range: {s}"),
            SpecError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            SpecError::ExcludedCase(s) => write!(f, "excluded small case: {s}"),
            SpecError::BadTwistExponent(s) => write!(f, "bad twisted exponent: {s}"),
        }
    }
}

impl std::error::Error for SpecError {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime p with q = p^a, or None when q is not a prime power.
pub fn prime_power_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut n = q;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            p = d;
            while n % d == 0 {
                n /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some(q); // q itself prime
    }
    if n == 1 {
        Some(p)
    } else {
        None
    }
}

/// Checks q = base^(2t+1) with t >= 1.
fn odd_twist_exponent(q: u64, base: u64) -> bool {
    let mut v = q;
    let mut e = 0;
    while v % base == 0 {
        v /= base;
        e += 1;
    }
    v == 1 && e >= 3 && e % 2 == 1
}

impl Family {
    pub fn validate(&self) -> Result<(), SpecError> {
        use Family::*;
        let check_q = |q: u64| {
            prime_power_base(q)
                .map(|_| ())
                .ok_or(SpecError::NotPrimePower(q))
        };
        match *self {
            Linear { m, q } => {
                if m < 1 {
                    return Err(SpecError::BadRank("A_m(q) needs m >= 1"));
                }
                check_q(q)?;
                if m == 1 && q == 2 {
                    return Err(SpecError::ExcludedCase("PSL_2(2)"));
                }
                if m == 1 && q == 3 {
                    return Err(SpecError::ExcludedCase("PSL_2(3)"));
                }
                Ok(())
            }
            Unitary { m, q } => {
                if m < 2 {
                    return Err(SpecError::BadRank("2A_m(q^2) needs m >= 2"));
                }
                check_q(q)?;
                if m == 2 && q == 2 {
                    return Err(SpecError::ExcludedCase("PSU_3(2)"));
                }
                Ok(())
            }
            Symplectic { m, q } => {
                if m < 2 {
                    return Err(SpecError::BadRank("C_m(q) needs m >= 2"));
                }
                check_q(q)?;
                if m == 2 && q == 2 {
                    return Err(SpecError::ExcludedCase("PSp_4(2)"));
                }
                Ok(())
            }
            OrthogonalOdd { m, q } => {
                if m < 3 {
                    return Err(SpecError::BadRank("B_m(q) needs m >= 3"));
                }
                check_q(q)?;
                if q % 2 == 0 {
                    return Err(SpecError::ExcludedCase("B_m(q) needs q odd"));
                }
                Ok(())
            }
            OrthogonalPlus { m, q } => {
                if m < 4 {
                    return Err(SpecError::BadRank("D_m(q) needs m >= 4"));
                }
                check_q(q)
            }
            OrthogonalMinus { m, q } => {
                if m < 4 {
                    return Err(SpecError::BadRank("2D_m(q^2) needs m >= 4"));
                }
                check_q(q)
            }
            G2 { q } => {
                check_q(q)?;
                if q < 3 {
                    return Err(SpecError::ExcludedCase("G_2(2) is not simple"));
                }
                Ok(())
            }
            F4 { q } | E6 { q } | TwistedE6 { q } | TripleD4 { q } | E7 { q } | E8 { q } => {
                check_q(q)
            }
            Suzuki { q } => {
                if odd_twist_exponent(q, 2) {
                    Ok(())
                } else {
                    Err(SpecError::BadTwistExponent("2B_2 needs q = 2^(2t+1), t >= 1"))
                }
            }
            SmallRee { q } => {
                if odd_twist_exponent(q, 3) {
                    Ok(())
                } else {
                    Err(SpecError::BadTwistExponent("2G_2 needs q = 3^(2t+1), t >= 1"))
                }
            }
            LargeRee { q } => {
                if odd_twist_exponent(q, 2) {
                    Ok(())
                } else {
                    Err(SpecError::BadTwistExponent("2F_4 needs q = 2^(2t+1), t >= 1"))
                }
            }
            Tits => Ok(()),
            Alternating { m } => {
                if m < 5 {
                    return Err(SpecError::BadRank("Alt(m) needs m >= 5"));
                }
                Ok(())
            }
            Sporadic(_) => Ok(()),
        }
    }

    /// Method and (b1, b2) assignment per family and branch.
    pub fn spec(self) -> Result<FamilySpec, SpecError> {
        self.validate()?;
        use Family::*;
        let (method, b1, b2) = match self {
            Linear { q, .. } => {
                if q > 2 {
                    (Method::Method1, 2, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            Unitary { q, .. } => {
                if q > 2 {
                    (Method::Method1, 2, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            Symplectic { q, .. } => {
                if q > 2 {
                    (Method::Method1, 2, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            OrthogonalOdd { .. } => (Method::Method1, 2, 1),
            OrthogonalPlus { q, .. } => {
                if q > 2 {
                    (Method::Method1, 2, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            OrthogonalMinus { q, .. } => {
                if q > 2 {
                    (Method::Method1, 3, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            G2 { .. } => (Method::Method1, 1, 1),
            F4 { .. } => (Method::Method2, 1, 1),
            E6 { q } | E7 { q } | E8 { q } => {
                if q > 2 {
                    (Method::Method1, 1, 1)
                } else {
                    (Method::Method2, 1, 1)
                }
            }
            TwistedE6 { .. } | TripleD4 { .. } => (Method::Method1, 1, 1),
            Suzuki { .. } | SmallRee { .. } | LargeRee { .. } => (Method::Method1, 1, 1),
            Tits => (Method::Method2, 1, 1),
            Alternating { .. } => (Method::Method2, 1, 1),
            Sporadic(name) => (Method::Method2, 1, name.b2()),
        };
        Ok(FamilySpec {
            family: self,
            method,
            b1,
            b2,
        })
    }

    pub fn m(&self) -> Option<u32> {
        use Family::*;
        match *self {
            Linear { m, .. }
            | Unitary { m, .. }
            | Symplectic { m, .. }
            | OrthogonalOdd { m, .. }
            | OrthogonalPlus { m, .. }
            | OrthogonalMinus { m, .. }
            | Alternating { m } => Some(m),
            _ => None,
        }
    }

    pub fn q(&self) -> Option<u64> {
        use Family::*;
        match *self {
            Linear { q, .. }
            | Unitary { q, .. }
            | Symplectic { q, .. }
            | OrthogonalOdd { q, .. }
            | OrthogonalPlus { q, .. }
            | OrthogonalMinus { q, .. }
            | G2 { q }
            | F4 { q }
            | E6 { q }
            | TwistedE6 { q }
            | TripleD4 { q }
            | E7 { q }
            | E8 { q }
            | Suzuki { q }
            | SmallRee { q }
            | LargeRee { q } => Some(q),
            Tits => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match *self {
            Linear { m, q } => write!(f, "A_{m}({q})"),
            Unitary { m, q } => write!(f, "2A_{m}({q}^2)"),
            Symplectic { m, q } => write!(f, "C_{m}({q})"),
            OrthogonalOdd { m, q } => write!(f, "B_{m}({q})"),
            OrthogonalPlus { m, q } => write!(f, "D_{m}({q})"),
            OrthogonalMinus { m, q } => write!(f, "2D_{m}({q}^2)"),
            G2 { q } => write!(f, "G_2({q})"),
            F4 { q } => write!(f, "F_4({q})"),
            E6 { q } => write!(f, "E_6({q})"),
            TwistedE6 { q } => write!(f, "2E_6({q})"),
            TripleD4 { q } => write!(f, "3D_4({q})"),
            E7 { q } => write!(f, "E_7({q})"),
            E8 { q } => write!(f, "E_8({q})"),
            Suzuki { q } => write!(f, "2B_2({q})"),
            SmallRee { q } => write!(f, "2G_2({q})"),
            LargeRee { q } => write!(f, "2F_4({q})"),
            Tits => write!(f, "2F_4(2)'"),
            Alternating { m } => write!(f, "Alt({m})"),
            Sporadic(name) => write!(f, "{name}"),
        }
    }
}

/// Prime powers up to the limit, ascending.
pub fn prime_powers_up_to(max_q: u64) -> Vec<u64> {
    (2..=max_q).filter(|&q| prime_power_base(q).is_some()).collect()
}

/// Every family member with m <= max_m and q <= max_q, honoring branch
/// constraints and the excluded small cases, in a fixed deterministic order.
pub fn enumerate(max_m: u32, max_q: u64) -> Vec<FamilySpec> {
    use Family::*;
    let qs = prime_powers_up_to(max_q);
    let mut out = Vec::new();
    let mut push = |fam: Family| {
        if let Ok(spec) = fam.spec() {
            out.push(spec);
        }
    };

    for m in 1..=max_m {
        for &q in &qs {
            push(Linear { m, q });
        }
    }
    for m in 2..=max_m {
        for &q in &qs {
            push(Unitary { m, q });
        }
    }
    for m in 2..=max_m {
        for &q in &qs {
            push(Symplectic { m, q });
        }
    }
    for m in 3..=max_m {
        for &q in &qs {
            push(OrthogonalOdd { m, q });
        }
    }
    for m in 4..=max_m {
        for &q in &qs {
            push(OrthogonalPlus { m, q });
        }
    }
    for m in 4..=max_m {
        for &q in &qs {
            push(OrthogonalMinus { m, q });
        }
    }
    for &q in &qs {
        push(G2 { q });
    }
    for &q in &qs {
        push(F4 { q });
    }
    for &q in &qs {
        push(E6 { q });
    }
    for &q in &qs {
        push(TwistedE6 { q });
    }
    for &q in &qs {
        push(TripleD4 { q });
    }
    for &q in &qs {
        push(E7 { q });
    }
    for &q in &qs {
        push(E8 { q });
    }
    for &q in &qs {
        push(Suzuki { q });
    }
    for &q in &qs {
        push(SmallRee { q });
    }
    for &q in &qs {
        push(LargeRee { q });
    }
    push(Tits);
    for m in 5..=max_m {
        push(Alternating { m });
    }
    for name in SporadicName::ALL {
        push(Sporadic(name));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(31), Some(31));
        assert_eq!(prime_power_base(6), None);
        assert_eq!(prime_power_base(1), None);
        assert_eq!(
            prime_powers_up_to(32),
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }

    #[test]
    fn excluded_small_cases() {
        assert_eq!(
            Family::Linear { m: 1, q: 2 }.validate(),
            Err(SpecError::ExcludedCase("PSL_2(2)"))
        );
        assert_eq!(
            Family::Linear { m: 1, q: 3 }.validate(),
            Err(SpecError::ExcludedCase("PSL_2(3)"))
        );
        assert_eq!(
            Family::Unitary { m: 2, q: 2 }.validate(),
            Err(SpecError::ExcludedCase("PSU_3(2)"))
        );
        assert_eq!(
            Family::Symplectic { m: 2, q: 2 }.validate(),
            Err(SpecError::ExcludedCase("PSp_4(2)"))
        );
        assert!(Family::Linear { m: 1, q: 4 }.validate().is_ok());
    }

    #[test]
    fn twisted_exponent_constraints() {
        assert!(Family::Suzuki { q: 8 }.validate().is_ok());
        assert!(Family::Suzuki { q: 32 }.validate().is_ok());
        assert!(Family::Suzuki { q: 2 }.validate().is_err());
        assert!(Family::Suzuki { q: 4 }.validate().is_err());
        assert!(Family::Suzuki { q: 16 }.validate().is_err());
        assert!(Family::SmallRee { q: 27 }.validate().is_ok());
        assert!(Family::SmallRee { q: 3 }.validate().is_err());
        assert!(Family::SmallRee { q: 9 }.validate().is_err());
        assert!(Family::LargeRee { q: 8 }.validate().is_ok());
        assert!(Family::LargeRee { q: 2 }.validate().is_err());
    }

    #[test]
    fn b_constants_follow_the_method_table() {
        let s = Family::Linear { m: 3, q: 5 }.spec().unwrap();
        assert_eq!((s.method, s.b1, s.b2), (Method::Method1, 2, 1));
        let s = Family::Linear { m: 3, q: 2 }.spec().unwrap();
        assert_eq!((s.method, s.b1, s.b2), (Method::Method2, 1, 1));
        let s = Family::OrthogonalMinus { m: 4, q: 3 }.spec().unwrap();
        assert_eq!((s.method, s.b1, s.b2), (Method::Method1, 3, 1));
        let s = Family::Sporadic(SporadicName::Ly).spec().unwrap();
        assert_eq!((s.b1, s.b2), (1, 5));
    }

    #[test]
    fn enumeration_is_deterministic_and_respects_bounds() {
        let a = enumerate(12, 32);
        let b = enumerate(12, 32);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(format!("{}", x.family), format!("{}", y.family));
        }
        assert!(a.iter().all(|s| s.family.m().is_none_or(|m| m <= 12)));
        assert!(a.iter().all(|s| s.family.q().is_none_or(|q| q <= 32)));
        // Suzuki entries are exactly q = 8 and 32; small Ree only q = 27
        let suz: Vec<u64> = a
            .iter()
            .filter_map(|s| match s.family {
                Family::Suzuki { q } => Some(q),
                _ => None,
            })
            .collect();
        assert_eq!(suz, vec![8, 32]);
        let ree: Vec<u64> = a
            .iter()
            .filter_map(|s| match s.family {
                Family::SmallRee { q } => Some(q),
                _ => None,
            })
            .collect();
        assert_eq!(ree, vec![27]);
    }
}
