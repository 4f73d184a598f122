//! Acceptance gate: one test per criterion, so `cargo test --test
//! acceptance` prints one pass/fail line for each. Elapsed times are
//! printed (visible with `--nocapture`) but never asserted; the checks
//! themselves are exact.

use std::time::Instant;

use linpow::betti::regularity;
use linpow::families::terai_ideal;
use linpow::lq::{find_lq_order, SearchOutcome};
use linpow::suites::{
    complementary_ideal_suite, eagon_reiner_suite, edge_ideal_suite, family_quotients_suite,
    family_regularity_suite, oracle_suite, polymatroidal_suite, splitting_suite,
    sturmfels_suite, x_condition_suite, SuiteReport,
};
use linpow::FieldSpec;

/// Seed for every sampled acceptance run.
const SEED: u64 = 0x1729;

fn assert_suite(label: &str, started: Instant, report: SuiteReport) {
    println!("{label}: {:.2?}", started.elapsed());
    print!("{}", report.render_text());
    assert!(report.passed(), "\n{}", report.render_text());
}

#[test]
fn c01_terai_regularity_is_3_over_q_and_4_over_f2() {
    let t = Instant::now();
    let j = terai_ideal();
    assert_eq!(regularity(&j, FieldSpec::Q).unwrap(), 3);
    assert_eq!(regularity(&j, FieldSpec::F2).unwrap(), 4);
    println!("criterion 1: {:.2?}", t.elapsed());
}

#[test]
fn c02_terai_admits_no_linear_quotients_order() {
    let t = Instant::now();
    let search = find_lq_order(&terai_ideal(), 10_000_000).unwrap();
    assert_eq!(search.outcome, SearchOutcome::NoneExists);
    println!("criterion 2: {:.2?} ({} nodes)", t.elapsed(), search.nodes);
}

#[test]
fn c03_sturmfels_order_verifies_and_square_regularity_is_7() {
    let t = Instant::now();
    assert_suite("criterion 3", t, sturmfels_suite().unwrap());
}

#[test]
fn c04_edge_ideal_linearity_matches_chordal_complements_up_to_6_vertices() {
    let t = Instant::now();
    assert_suite("criterion 4", t, edge_ideal_suite().unwrap());
}

#[test]
fn c05_complementary_ideal_linearity_matches_component_counts() {
    let t = Instant::now();
    assert_suite("criterion 5", t, complementary_ideal_suite(SEED).unwrap());
}

#[test]
fn c06_prefix_family_regularity_shifts_with_the_characteristic() {
    let t = Instant::now();
    assert_suite("criterion 6", t, family_regularity_suite().unwrap());
}

#[test]
fn c07_prefix_family_order_verifies_and_square_regularity_is_7() {
    let t = Instant::now();
    assert_suite("criterion 7", t, family_quotients_suite().unwrap());
}

#[test]
fn c08_betti_splitting_is_additive_with_exhaustive_tor_checks() {
    let t = Instant::now();
    assert_suite("criterion 8", t, splitting_suite().unwrap());
}

#[test]
fn c09_hochster_and_koszul_betti_tables_agree_on_random_ideals() {
    let t = Instant::now();
    assert_suite("criterion 9", t, oracle_suite(SEED).unwrap());
}

#[test]
fn c10_x_condition_holds_on_connected_graphs_with_walk_agreement() {
    let t = Instant::now();
    assert_suite("criterion 10", t, x_condition_suite().unwrap());
}

#[test]
fn c11_linear_resolution_matches_cohen_macaulay_alexander_duals() {
    let t = Instant::now();
    assert_suite("criterion 11", t, eagon_reiner_suite(SEED).unwrap());
}

#[test]
fn c12_extreme_degree_squarefree_ideals_are_polymatroidal_with_lex_squares() {
    let t = Instant::now();
    assert_suite("criterion 12", t, polymatroidal_suite().unwrap());
}
