//! The alternating-group chain: inside Alt(m) sit stabilizer copies of
//! Alt(k) and Alt(k+1), where k is pinned by (k!/2)^2 <= m!/2 < ((k+1)!/2)^2.
//! All comparisons are exact factorial arithmetic.

use crate::family::SpecError;
use num_bigint::BigUint;
use num_traits::{One, Zero};

pub struct AltChain {
    pub m: u32,
    pub k: u32,
    /// m!/2
    pub h: BigUint,
    /// k!/2
    pub h2: BigUint,
    /// (k+1)!/2
    pub h1: BigUint,
    /// k > m/2
    pub k_above_half: bool,
    /// (k+1)^2 <= m!/2, i.e. [H1:H2]^2 within the plain bound
    pub step_squared_ok: bool,
    /// (m!/(k+1)!)^2 < m!/2, i.e. [H:H1]^2 within the plain bound
    pub index_squared_ok: bool,
}

impl AltChain {
    pub fn all_ok(&self) -> bool {
        self.k_above_half && self.step_squared_ok && self.index_squared_ok
    }
}

fn half_factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= i;
    }
    f / 2u32
}

/// Finds the unique k with k!/2 <= sqrt(m!/2) < (k+1)!/2 and evaluates the
/// chain checks, for m >= 5.
pub fn alternating_chain(m: u32) -> Result<AltChain, SpecError> {
    if m < 5 {
        return Err(SpecError::BadRank("alternating chain needs m >= 5"));
    }
    let h = half_factorial(m);
    let mut k = 2u32;
    // grow k while (k+1)!/2 still fits under sqrt(m!/2)
    while half_factorial(k + 1).pow(2) <= h {
        k += 1;
    }
    let h2 = half_factorial(k);
    let h1 = half_factorial(k + 1);
    debug_assert!(h2.pow(2) <= h && h < h1.pow(2));

    let idx1 = &h / &h1;
    debug_assert!((&h % &h1).is_zero());
    Ok(AltChain {
        m,
        k,
        k_above_half: 2 * k > m,
        step_squared_ok: BigUint::from(k + 1).pow(2) <= h,
        index_squared_ok: idx1.pow(2) < h,
        h,
        h2,
        h1,
    })
}
