//! Build the incidence bundle for q = 3, inspect the classified submatrices,
//! and write the BITMAT dump set with its index map.
//!
//! Run with: cargo run --example incidence_dump

use quadrank::ffield::FieldSpec;
use quadrank::incidence::{build_b_blocks, build_bundle, index_map_csv, write_dump};
use quadrank::projgeom::QuadraticSpace;

fn main() {
    let space = QuadraticSpace::paper_square(FieldSpec::prime(3).unwrap());
    let bundle = build_bundle(&space);
    let (b1, b2) = build_b_blocks(&space);

    println!(
        "G is {}x{}; G_II {}x{}; G_AA {}x{} with |S| = {}, |T| = {}",
        bundle.g.rows(),
        bundle.g.cols(),
        bundle.g_ii.rows(),
        bundle.g_ii.cols(),
        bundle.g_aa.rows(),
        bundle.g_aa.cols(),
        bundle.s_count,
        bundle.t_count(),
    );

    println!("\nG_II (diagonal all ones — isotropic points are self-orthogonal):");
    print!("{:?}", bundle.g_ii);

    println!("B1 row weights: {:?}",
        (0..b1.rows()).map(|i| b1.row_weight(i)).collect::<Vec<_>>());
    println!("B1^2 = 0 over GF(2): {}", b1.matmul2(&b1).unwrap().is_zero());
    println!("B2^2 = 0 over GF(2): {}", b2.matmul2(&b2).unwrap().is_zero());

    // Matrix positions mean nothing without the point ordering; the CSV
    // carries it for every matrix in the dump set.
    let csv = index_map_csv(&space, &bundle);
    println!("\nindex_map.csv head:");
    for line in csv.lines().take(6) {
        println!("  {line}");
    }

    let dir = std::env::temp_dir().join("quadrank_dump_q3");
    write_dump(&space, &bundle, &b1, &b2, &dir).expect("dump writes");
    println!("\nwrote dump set to {}", dir.display());
}
