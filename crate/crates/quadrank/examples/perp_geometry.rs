//! Hyperplane and plane statistics: per-point perp profiles, common isotropic
//! counts of point pairs, and the plane profile law.
//!
//! Run with: cargo run --example perp_geometry

use quadrank::ffield::FieldSpec;
use quadrank::projgeom::{PointClass, QuadraticSpace};

fn main() {
    let q = 5u64;
    for (label, space) in [
        ("square", QuadraticSpace::paper_square(FieldSpec::prime(q).unwrap())),
        ("nonsquare", QuadraticSpace::paper_nonsquare(FieldSpec::prime(q).unwrap())),
    ] {
        println!("q={q}, {label} alpha:");
        let pts = space.enumerate_points();
        let iso = pts.iter().find(|p| space.classify(p) == PointClass::Isotropic).unwrap();
        let aniso = pts.iter().find(|p| space.classify(p) != PointClass::Isotropic).unwrap();
        let pi = space.perp_profile(iso);
        let pa = space.perp_profile(aniso);
        println!("  isotropic   {iso}: perp carries {} isotropic, {} anisotropic", pi.iso, pi.aniso);
        println!("  anisotropic {aniso}: perp carries {} isotropic, {} anisotropic", pa.iso, pa.aniso);

        // Common isotropic counts over a few isotropic pairs: always even.
        let iso_pts: Vec<_> = pts
            .iter()
            .filter(|p| space.classify(p) == PointClass::Isotropic)
            .collect();
        print!("  pair counts:");
        for other in iso_pts.iter().skip(1).take(6) {
            print!(" {}", space.perp_pair_isotropic_count(iso_pts[0], other).unwrap());
        }
        println!();

        // Plane census: isotropic counts land in {0, 1, 2, q+1}.
        let mut histogram = std::collections::BTreeMap::new();
        for plane in space.enumerate_planes() {
            *histogram.entry(space.plane_isotropic_count(&plane)).or_insert(0u64) += 1;
        }
        println!("  plane isotropic-count histogram: {histogram:?}");
        println!();
    }
}
