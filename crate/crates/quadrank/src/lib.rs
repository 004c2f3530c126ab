//! Incidence matrices of polarized projective spaces over odd finite fields.
//!
//! The library enumerates the projective space `P(F_q^n)` carrying a diagonal
//! quadratic form `Q`, classifies its points as isotropic or (square/nonsquare)
//! anisotropic, builds the 0/1 orthogonality incidence matrix `G` together with
//! its classified submatrices, and certifies their 2-ranks and the counting and
//! matrix identities behind them with a packed GF(2) kernel.
//!
//! The main entry points:
//!
//! * [`ffield::FieldSpec`] — exact arithmetic in `F_q` for odd prime powers,
//!   including the quadratic character and canonical nonsquare selection.
//! * [`projgeom::QuadraticSpace`] — point enumeration, the quadratic and polar
//!   bilinear forms, point classification, hyperplane and plane queries.
//! * [`gf2mat::BitMatrix`] — word-packed GF(2) matrices with rank, product,
//!   and a diff-friendly text serialization ("BITMAT v1").
//! * [`incidence`] — the incidence matrix `G`, the submatrices `G_II`/`G_AA`
//!   with their S/T block layout, and the B-block criterion matrices.
//! * [`verifier`] — the exhaustive check battery with a structured JSON report.
//! * [`cli`] — the command-line front end (`counts`, `build`, `rank`,
//!   `verify`, `dump-points`).
//!
//! Every runnable capability also has a commented walkthrough under
//! `examples/`; start with `cargo run --example rank_certificate`.

pub mod cli;
pub mod ffield;
pub mod gf2mat;
pub mod incidence;
pub mod projgeom;
pub mod verifier;

pub use ffield::{Chi, FieldElement, FieldError, FieldSpec};
pub use gf2mat::{BitMatrix, Gf2Error};
pub use incidence::{build_b_blocks, build_bundle, IncidenceBundle, IndexMap};
pub use projgeom::{GeomError, PointClass, ProjPoint, QuadraticSpace};
pub use verifier::{run_all, CheckResult, CheckStatus, VerificationReport};
