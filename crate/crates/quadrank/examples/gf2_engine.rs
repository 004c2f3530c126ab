//! The packed GF(2) kernel on its own: ranks, products, powers, and the
//! BITMAT text format.
//!
//! Run with: cargo run --example gf2_engine

use quadrank::gf2mat::BitMatrix;

fn main() {
    let id = BitMatrix::identity(5);
    println!("rank of I_5          = {}", id.rank2());
    println!("rank of 0 (4x7)      = {}", BitMatrix::zero(4, 7).rank2());

    // Two equal rows collapse to rank 1.
    let ones = BitMatrix::from_fn(2, 2, |_, _| true);
    println!("rank of all-ones 2x2 = {}", ones.rank2());

    // A small product over GF(2), entry by entry: parity of the dot product.
    let a = BitMatrix::from_fn(2, 2, |i, j| [[true, true], [false, true]][i][j]);
    let b = BitMatrix::from_fn(2, 2, |i, j| [[true, false], [true, true]][i][j]);
    let c = a.matmul2(&b).unwrap();
    println!("\n[[1,1],[0,1]] * [[1,0],[1,1]] over GF(2):");
    print!("{c:?}");

    // Powers: M^0 is the identity.
    let cubed = a.matmul2(&a).unwrap().matmul2(&a).unwrap();
    println!("M^0 is identity      = {}", a.matpow2(0).unwrap().is_identity());
    println!("M^3 = M*M*M          = {}", a.matpow2(3).unwrap() == cubed);

    // XOR is its own inverse.
    println!("M + M = 0            = {}", a.add2(&a).unwrap().is_zero());

    // The BITMAT v1 text format round-trips bit-exactly.
    let bytes = c.to_bitmat();
    println!("\nBITMAT serialization of the product:");
    print!("{}", String::from_utf8_lossy(&bytes));
    let back = BitMatrix::from_bitmat(&bytes).unwrap();
    println!("round trip equal     = {}", back == c);

    // Malformed streams are rejected with a precise error.
    println!(
        "bad magic            -> {}",
        BitMatrix::from_bitmat(b"BITMAP 1 2 2\n00\n00\n").unwrap_err()
    );
    println!(
        "short payload        -> {}",
        BitMatrix::from_bitmat(b"BITMAT 1 2 2\n00\n").unwrap_err()
    );
}
