//! Whole-pipeline checks on a handful of named groups: series, plan, build,
//! serialize, reload, and exhaustive verification, plus the per-node space
//! recurrence.

use group_ds::build::{build, plan, CaseTag, DEFAULT_B1, DEFAULT_B2};
use group_ds::series::verify_series;
use group_ds::{build_auto, composition_series, gen, wire, CayleyGroup};

fn pipeline(name: &str, g: &CayleyGroup) {
    let s = composition_series(g);
    verify_series(g, &s).unwrap_or_else(|e| panic!("{name}: bad series: {e}"));

    let p = plan(g, DEFAULT_B1, DEFAULT_B2, 0).unwrap();
    let (ds, report) = build(g, &p).unwrap();
    assert_eq!(report.total_words, ds.word_count());
    assert_eq!(ds.word_count(), ds.census(), "{name}: census mismatch");
    assert!(report.lookup_bound <= 183);

    // space recurrence per extension layer: own words <= 7 (index^2 + n)
    for layer in &report.layers {
        if layer.kind != "base" {
            let bound = 7 * (layer.index * layer.index + layer.group_order) as u64;
            assert!(
                layer.words <= bound,
                "{name}: layer {layer:?} exceeds the recurrence bound"
            );
        }
    }

    let reloaded = wire::deserialize(&wire::serialize(&ds)).unwrap();
    for a in 0..g.order() {
        for b in 0..g.order() {
            assert_eq!(reloaded.multiply_dense(a, b), g.mul(a, b), "{name} at ({a},{b})");
        }
    }
}

#[test]
fn symmetric_4_pipeline() {
    pipeline("S4", &gen::symmetric(4).unwrap());
}

#[test]
fn dihedral_12_pipeline() {
    pipeline("D24", &gen::dihedral(12).unwrap());
}

#[test]
fn cyclic_36_pipeline() {
    pipeline("Z36", &gen::cyclic(36).unwrap());
}

#[test]
fn alternating_5_pipeline() {
    pipeline("A5", &gen::alternating(5).unwrap());
}

#[test]
fn quaternion_times_z3_pipeline() {
    let q8 = gen::from_perm_gens_text(gen::Q8_GENS).unwrap();
    let g = gen::direct_product(&q8, &gen::cyclic(3).unwrap()).unwrap();
    pipeline("Q8xZ3", &g);
}

#[test]
fn lookup_bound_recurrence_examples() {
    // base alone costs 3; each extension layer adds 9 + doubles
    let g = gen::alternating(5).unwrap();
    let (ds, report) = build_auto(&g).unwrap();
    assert_eq!(report.case, CaseTag::Case2Simple);
    assert_eq!(ds.lookup_count(), 183); // 9 (1+2+4+8) + 16*3 over four layers
}

#[test]
fn loaded_table_round_trip_via_text() {
    let g = gen::symmetric(4).unwrap();
    let text = g.to_table_string();
    let h = CayleyGroup::parse(&text).unwrap();
    let (ds, _) = build_auto(&h).unwrap();
    for a in 0..24 {
        for b in 0..24 {
            assert_eq!(ds.multiply_dense(a, b), g.mul(a, b));
        }
    }
}
