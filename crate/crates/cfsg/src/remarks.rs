//! Two standalone integer inequalities the order calculations lean on:
//! q < (q-1)^2 for every integer q > 2, and the alternating-sign product
//! prod_{i=1}^{m} (q^(i+1) - (-1)^(i+1)) < q^(sum (i+1)).

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct RemarkReport {
    pub q_max: u64,
    pub ratio_checked: Vec<u64>,
    pub product_checked: Vec<(u64, u32)>,
    pub pass: bool,
}

/// Verifies the ratio bound over 3 <= q <= q_max and the product bound over
/// every integer 2 <= q <= q_max with m <= 12.
pub fn remark_checks(q_max: u64) -> RemarkReport {
    let mut ratio_checked = Vec::new();
    let mut product_checked = Vec::new();
    let mut pass = true;

    for q in 3..=q_max {
        // q < (q-1)^2, integer form
        if q >= (q - 1) * (q - 1) {
            pass = false;
        }
        ratio_checked.push(q);
    }

    for q in 2..=q_max {
        for m in 1..=12u32 {
            let mut prod = BigUint::one();
            let mut exp_sum = 0u32;
            for i in 1..=m {
                let e = i + 1;
                let term = BigUint::from(q).pow(e);
                prod *= if i % 2 == 1 {
                    &term - BigUint::one()
                } else {
                    &term + BigUint::one()
                };
                exp_sum += e;
            }
            if prod >= BigUint::from(q).pow(exp_sum) {
                pass = false;
            }
            product_checked.push((q, m));
        }
    }

    RemarkReport {
        q_max,
        ratio_checked,
        product_checked,
        pass,
    }
}
