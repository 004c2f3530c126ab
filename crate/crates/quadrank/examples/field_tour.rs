//! Arithmetic in F_q for odd prime powers: construction, the quadratic
//! character, and the canonical nonsquare.
//!
//! Run with: cargo run --example field_tour

use quadrank::ffield::{Chi, FieldSpec};

fn main() {
    // Prime field.
    let f7 = FieldSpec::prime(7).unwrap();
    println!("F_7:");
    println!("  3 * 5       = {}", f7.mul(f7.element(3), f7.element(5)));
    println!("  inv(3)      = {}", f7.inv(f7.element(3)).unwrap());
    println!("  -1          = {}", f7.from_int(-1));
    let squares: Vec<u64> = f7
        .elements()
        .filter(|&a| f7.chi(a) == Chi::Square)
        .map(|a| a.index())
        .collect();
    println!("  squares     = {squares:?}");
    println!("  nonsquare   = {}", f7.canonical_nonsquare());

    // Extension field: modulus found by deterministic search.
    let f9 = FieldSpec::extension(3, 2).unwrap();
    println!("\nF_9 = F_3[t]/({}):", render_modulus(&f9));
    let t = f9.element(3);
    println!("  t * t       = {} (index {})", f9.render(f9.mul(t, t)), f9.mul(t, t));
    println!("  nonsquare   = {}", f9.render(f9.canonical_nonsquare()));
    println!("  chi table:");
    for a in f9.elements() {
        println!("    chi({:<6}) = {}", f9.render(a), f9.chi(a));
    }

    // Fermat in the extension: a^(q-1) = 1 for a != 0.
    let a = f9.element(7);
    println!("  ({})^8      = {}", f9.render(a), f9.render(f9.pow(a, 8)));

    let f25 = FieldSpec::extension(5, 2).unwrap();
    println!("\nF_25 modulus: {}", render_modulus(&f25));
    let f27 = FieldSpec::extension(3, 3).unwrap();
    println!("F_27 modulus: {}", render_modulus(&f27));

    // Characteristic 2 is rejected: the polar form needs 1/2.
    println!("\nF_2 attempt: {}", FieldSpec::prime(2).unwrap_err());
}

fn render_modulus(f: &FieldSpec) -> String {
    let coeffs = f.modulus();
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}t"),
            (k, 1) => format!("t^{k}"),
            (k, c) => format!("{c}t^{k}"),
        });
    }
    terms.join(" + ")
}
