//! The headline computation: 2-ranks of G_II and G_AA across a sweep of
//! field orders, for both presets in dimension 4 and for the 3D regression.
//!
//! In dimension 4 both submatrices come out at full rank; in dimension 3 the
//! ranks are q+1 (full) and q^2-1 (one below the order).
//!
//! Run with: cargo run --release --example rank_certificate

use quadrank::ffield::FieldSpec;
use quadrank::incidence::build_bundle;
use quadrank::projgeom::QuadraticSpace;

fn main() {
    println!("dimension 4:");
    println!(
        "{:>4} {:>10} {:>8} {:>6} {:>6} {:>8} {:>6} {:>6}",
        "q", "preset", "II-ord", "rank", "full", "AA-ord", "rank", "full"
    );
    for q in [3u64, 5, 7, 9, 11, 13] {
        for square in [true, false] {
            let field = FieldSpec::from_order(q).unwrap();
            let space = if square {
                QuadraticSpace::paper_square(field)
            } else {
                QuadraticSpace::paper_nonsquare(field)
            };
            let bundle = build_bundle(&space);
            let (rii, raa) = (bundle.g_ii.rank2(), bundle.g_aa.rank2());
            println!(
                "{:>4} {:>10} {:>8} {:>6} {:>6} {:>8} {:>6} {:>6}",
                q,
                if square { "square" } else { "nonsq" },
                bundle.g_ii.rows(),
                rii,
                yes(rii == bundle.g_ii.rows()),
                bundle.g_aa.rows(),
                raa,
                yes(raa == bundle.g_aa.rows()),
            );
        }
    }

    println!("\ndimension 3 (x0^2 - x1^2 + x2^2):");
    println!("{:>4} {:>8} {:>6} {:>8} {:>6} {:>10}", "q", "II-ord", "rank", "AA-ord", "rank", "expected");
    for q in [3u64, 5, 7, 9, 11, 13] {
        let space = QuadraticSpace::dim3(FieldSpec::from_order(q).unwrap());
        let bundle = build_bundle(&space);
        println!(
            "{:>4} {:>8} {:>6} {:>8} {:>6} {:>10}",
            q,
            bundle.g_ii.rows(),
            bundle.g_ii.rank2(),
            bundle.g_aa.rows(),
            bundle.g_aa.rank2(),
            format!("{}/{}", q + 1, q * q - 1),
        );
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}
