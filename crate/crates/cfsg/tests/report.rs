//! Sweep-level integration: JSON stability, row coverage, and spot values.

use cfsg_audit::{sweep, Family};

#[test]
fn sweep_rows_carry_decimal_and_factored_strings() {
    let rows = sweep(4, 5);
    for r in &rows {
        assert!(!r.h.is_empty() && r.h.chars().all(|c| c.is_ascii_digit()));
        assert!(!r.h_factored.is_empty());
        assert!(!r.h1_factored.is_empty());
        assert!(!r.h2_factored.is_empty());
    }
}

#[test]
fn sweep_json_is_byte_stable() {
    let a = serde_json::to_vec(&sweep(8, 11)).unwrap();
    let b = serde_json::to_vec(&sweep(8, 11)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sweep_covers_every_family_kind() {
    let rows = sweep(12, 32);
    let sporadics = rows
        .iter()
        .filter(|r| r.m.is_none() && r.q.is_none())
        .count();
    assert_eq!(sporadics, 26);
    let alternating = rows.iter().filter(|r| r.family.starts_with("Alt(")).count();
    assert_eq!(alternating, 8); // m = 5..=12
    for prefix in [
        "A_", "2A_", "C_", "B_", "D_", "2D_", "G_2", "F_4", "E_6", "2E_6", "3D_4", "E_7",
        "E_8", "2B_2", "2G_2", "2F_4",
    ] {
        assert!(
            rows.iter().any(|r| r.family.starts_with(prefix)),
            "family {prefix} missing from the sweep"
        );
    }
}

#[test]
fn psl2_rows_match_known_small_orders() {
    let a14 = cfsg_audit::audit(&Family::Linear { m: 1, q: 4 }.spec().unwrap()).unwrap();
    assert_eq!(a14.h, "60");
    let a19 = cfsg_audit::audit(&Family::Linear { m: 1, q: 9 }.spec().unwrap()).unwrap();
    assert_eq!(a19.h, "360");
    let a2_4 = cfsg_audit::audit(&Family::Linear { m: 2, q: 4 }.spec().unwrap()).unwrap();
    assert_eq!(a2_4.h, "20160"); // PSL(3,4)
}

#[test]
fn exceptional_orders_at_q2_match_literature() {
    let f42 = cfsg_audit::order_formulas(&Family::F4 { q: 2 }).unwrap();
    assert_eq!(f42.h.to_string(), "3311126603366400");
    let e62 = cfsg_audit::order_formulas(&Family::E6 { q: 2 }).unwrap();
    assert_eq!(e62.h.to_string(), "214841575522005575270400");
    let td42 = cfsg_audit::order_formulas(&Family::TripleD4 { q: 2 }).unwrap();
    assert_eq!(td42.h.to_string(), "211341312");
    let se62 = cfsg_audit::order_formulas(&Family::TwistedE6 { q: 2 }).unwrap();
    assert_eq!(se62.h.to_string(), "76532479683774853939200");
}
