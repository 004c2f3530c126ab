//! Enumerate P(F_q^4), classify every point by its Q value, and compare the
//! census with the closed-form counts for both form presets.
//!
//! Run with: cargo run --example point_census

use quadrank::ffield::FieldSpec;
use quadrank::projgeom::QuadraticSpace;
use quadrank::verifier::expected_point_counts;

fn main() {
    for q in [3u64, 5, 9] {
        for (label, space) in [
            ("square alpha", QuadraticSpace::paper_square(FieldSpec::from_order(q).unwrap())),
            ("nonsquare alpha", QuadraticSpace::paper_nonsquare(FieldSpec::from_order(q).unwrap())),
        ] {
            let counts = space.class_counts();
            let (want_iso, want_aniso) = expected_point_counts(q, space.disc_class());
            println!(
                "q={q:<2} {label:<16} points={:<5} iso={:<4} (expect {:<4}) S={:<4} T={:<4} aniso={:<5} (expect {})",
                space.point_count(),
                counts.iso,
                want_iso,
                counts.square_aniso,
                counts.nonsquare_aniso,
                counts.aniso(),
                want_aniso,
            );
        }
    }

    // The first few classified points at q = 3.
    let space = QuadraticSpace::paper_square(FieldSpec::prime(3).unwrap());
    println!("\nfirst points of P(F_3^4) under x0^2 - x1^2 + x2^2 - x3^2:");
    for p in space.enumerate_points().iter().take(8) {
        println!(
            "  {p}  Q = {}  {}",
            space.quadratic(p),
            space.classify(p)
        );
    }
}
