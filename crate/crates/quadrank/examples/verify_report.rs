//! Run the full check battery at one configuration and look at the report in
//! both renderings, plus what a corrupted matrix does to it.
//!
//! Run with: cargo run --example verify_report

use quadrank::ffield::FieldSpec;
use quadrank::incidence::build_bundle;
use quadrank::projgeom::QuadraticSpace;
use quadrank::verifier::{run_all, run_with_bundle};

fn main() {
    let space = QuadraticSpace::paper_nonsquare(FieldSpec::prime(3).unwrap());
    let report = run_all(&space);
    print!("{}", report.render_text());

    println!("\nJSON (first lines):");
    for line in report.to_json().lines().take(12) {
        println!("  {line}");
    }

    // Flip a single bit of G_AA: the matrix identities and the rank check
    // notice, and the report carries a witness.
    let mut bundle = build_bundle(&space);
    let bit = bundle.g_aa.get(2, 7);
    bundle.g_aa.set(2, 7, !bit);
    let corrupted = run_with_bundle(&space, &bundle);
    println!("\nafter flipping G_AA[2][7]:");
    for check in corrupted.checks.iter().filter(|c| !c.passed()) {
        let witness = check.witness.as_ref().unwrap();
        println!("  {} fails: {}", check.name, witness.detail);
    }
    println!("overall: {}", if corrupted.passed() { "PASS" } else { "FAIL" });
}
