//! The orthogonality incidence matrix of a polarized projective space.
//!
//! `G` is indexed by all points in enumeration order, with `G(x,y) = 1`
//! exactly when `<x,y> = 0`; it is symmetric, and its diagonal marks the
//! isotropic points. The classified submatrices `G_II` (isotropic rows and
//! columns) and `G_AA` (anisotropic) are restrictions of `G` through explicit
//! index maps; on the anisotropic side the square-anisotropic points precede
//! the nonsquare-anisotropic ones, which gives `G_AA` its 2x2 block layout
//! `[G_SS G_ST; G_TS G_TT]`.
//!
//! The companion B blocks hold the proportional-Gram criterion
//! `<x,x><y,y> = <x,y>^2` on S x S and T x T. The criterion is written in
//! this scale-invariant form rather than via normalized representatives: the
//! normalizing scalar is unique only up to sign, while both sides here scale
//! by the same fourth power under any change of representatives.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::Path;

use crate::ffield::FieldElement;
use crate::gf2mat::BitMatrix;
use crate::projgeom::{PointClass, ProjPoint, QuadraticSpace};

/// Environment variable with the worker count for row-parallel construction.
pub const WORKERS_ENV: &str = "QUADRANK_WORKERS";

/// Which points a matrix index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    Isotropic,
    /// Anisotropic points, square class first.
    Anisotropic,
}

/// Ordered list of points backing the rows/columns of a matrix, with the
/// inverse position lookup.
#[derive(Clone, Debug)]
pub struct IndexMap {
    filter: ClassFilter,
    points: Vec<ProjPoint>,
    position: HashMap<ProjPoint, usize>,
}

impl IndexMap {
    fn new(filter: ClassFilter, points: Vec<ProjPoint>) -> Self {
        let position = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        IndexMap {
            filter,
            points,
            position,
        }
    }

    pub fn filter(&self) -> ClassFilter {
        self.filter
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> &ProjPoint {
        &self.points[index]
    }

    pub fn position(&self, point: &ProjPoint) -> Option<usize> {
        self.position.get(point).copied()
    }
}

/// The incidence matrix with its classified submatrices and index maps.
#[derive(Clone, Debug)]
pub struct IncidenceBundle {
    pub g: BitMatrix,
    pub g_ii: BitMatrix,
    pub g_aa: BitMatrix,
    pub g_ss: BitMatrix,
    pub g_st: BitMatrix,
    pub g_ts: BitMatrix,
    pub g_tt: BitMatrix,
    pub all_map: IndexMap,
    pub iso_map: IndexMap,
    /// Anisotropic points: positions `0..s_count` are square-anisotropic.
    pub aniso_map: IndexMap,
    pub s_count: usize,
}

impl IncidenceBundle {
    pub fn t_count(&self) -> usize {
        self.aniso_map.len() - self.s_count
    }
}

fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|w| w.clamp(1, 64))
        .unwrap_or(1)
}

/// `G` over the given points: entry (i, j) set iff `<p_i, p_j> = 0`.
/// Only the upper triangle is evaluated; the lower is mirrored.
fn incidence_matrix(space: &QuadraticSpace, pts: &[ProjPoint], workers: usize) -> BitMatrix {
    let n = pts.len();
    let zero = space.field().zero();
    let mut g = BitMatrix::zero(n, n);
    let words = n.div_ceil(64);

    let fill_row = |i: usize| -> Vec<u64> {
        let mut row = vec![0u64; words];
        for j in i..n {
            if space.bilinear(&pts[i], &pts[j]) == zero {
                row[j / 64] |= 1u64 << (j % 64);
            }
        }
        row
    };

    if workers <= 1 {
        for i in 0..n {
            let row = fill_row(i);
            g.set_row_words(i, &row);
        }
    } else {
        // Strided row assignment balances the shrinking upper triangle.
        let bands: Vec<Vec<(usize, Vec<u64>)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let fill_row = &fill_row;
                    scope.spawn(move || {
                        (w..n)
                            .step_by(workers)
                            .map(|i| (i, fill_row(i)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for band in bands {
            for (i, row) in band {
                g.set_row_words(i, &row);
            }
        }
    }

    // Mirror the strict upper triangle.
    for i in 0..n {
        for j in i + 1..n {
            if g.get(i, j) {
                g.set(j, i, true);
            }
        }
    }
    g
}

/// Build `G` and all classified restrictions for the space. Deterministic:
/// index maps follow the point enumeration order, with square-anisotropic
/// points ahead of nonsquare-anisotropic ones on the A side.
pub fn build_bundle(space: &QuadraticSpace) -> IncidenceBundle {
    let pts = space.enumerate_points();
    let mut iso_idx = Vec::new();
    let mut s_idx = Vec::new();
    let mut t_idx = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        match space.classify(p) {
            PointClass::Isotropic => iso_idx.push(i),
            PointClass::SquareAniso => s_idx.push(i),
            PointClass::NonsquareAniso => t_idx.push(i),
        }
    }
    let aniso_idx: Vec<usize> = s_idx.iter().chain(&t_idx).copied().collect();

    let g = incidence_matrix(space, &pts, worker_count());
    let g_ii = g.submatrix(&iso_idx, &iso_idx).expect("indices in range");
    let g_aa = g.submatrix(&aniso_idx, &aniso_idx).expect("indices in range");
    let g_ss = g.submatrix(&s_idx, &s_idx).expect("indices in range");
    let g_st = g.submatrix(&s_idx, &t_idx).expect("indices in range");
    let g_ts = g.submatrix(&t_idx, &s_idx).expect("indices in range");
    let g_tt = g.submatrix(&t_idx, &t_idx).expect("indices in range");

    let take = |idx: &[usize]| -> Vec<ProjPoint> { idx.iter().map(|&i| pts[i].clone()).collect() };
    let iso_map = IndexMap::new(ClassFilter::Isotropic, take(&iso_idx));
    let aniso_map = IndexMap::new(ClassFilter::Anisotropic, take(&aniso_idx));
    let all_map = IndexMap::new(ClassFilter::All, pts);

    IncidenceBundle {
        g,
        g_ii,
        g_aa,
        g_ss,
        g_st,
        g_ts,
        g_tt,
        all_map,
        iso_map,
        aniso_map,
        s_count: s_idx.len(),
    }
}

/// The B blocks over S x S and T x T: entry (x, y) set iff `x != y` and
/// `<x,x><y,y> = <x,y>^2`. Zero diagonal by construction.
pub fn build_b_blocks(space: &QuadraticSpace) -> (BitMatrix, BitMatrix) {
    let pts = space.enumerate_points();
    let mut s_pts = Vec::new();
    let mut t_pts = Vec::new();
    for p in pts {
        match space.classify(&p) {
            PointClass::SquareAniso => s_pts.push(p),
            PointClass::NonsquareAniso => t_pts.push(p),
            PointClass::Isotropic => {}
        }
    }
    (criterion_block(space, &s_pts), criterion_block(space, &t_pts))
}

fn criterion_block(space: &QuadraticSpace, pts: &[ProjPoint]) -> BitMatrix {
    let f = space.field();
    let norms: Vec<FieldElement> = pts.iter().map(|p| space.quadratic(p)).collect();
    let mut m = BitMatrix::zero(pts.len(), pts.len());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let pairing = space.bilinear(&pts[i], &pts[j]);
            if f.mul(norms[i], norms[j]) == f.mul(pairing, pairing) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    m
}

/// File names of the dump set written by [`write_dump`].
pub const DUMP_FILES: [&str; 6] = [
    "G.bitmat",
    "G_II.bitmat",
    "G_AA.bitmat",
    "B1.bitmat",
    "B2.bitmat",
    "index_map.csv",
];

/// Write the BITMAT dump set plus the index map CSV into `dir`. Files are
/// written atomically (temp file + rename) so a crashed run never leaves a
/// half-written artifact behind.
pub fn write_dump(
    space: &QuadraticSpace,
    bundle: &IncidenceBundle,
    b1: &BitMatrix,
    b2: &BitMatrix,
    dir: &Path,
) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    write_atomic(&dir.join("G.bitmat"), &bundle.g.to_bitmat())?;
    write_atomic(&dir.join("G_II.bitmat"), &bundle.g_ii.to_bitmat())?;
    write_atomic(&dir.join("G_AA.bitmat"), &bundle.g_aa.to_bitmat())?;
    write_atomic(&dir.join("B1.bitmat"), &b1.to_bitmat())?;
    write_atomic(&dir.join("B2.bitmat"), &b2.to_bitmat())?;
    write_atomic(&dir.join("index_map.csv"), index_map_csv(space, bundle).as_bytes())?;
    Ok(())
}

/// One CSV row per (matrix, position): the point behind each index, its
/// class, and its Q value. Coordinates are space-separated element indices.
pub fn index_map_csv(space: &QuadraticSpace, bundle: &IncidenceBundle) -> String {
    let mut out = String::from("matrix,position,coordinates,class,q_value\n");
    let mut emit = |matrix: &str, pts: &[ProjPoint]| {
        for (i, p) in pts.iter().enumerate() {
            let coords = p
                .indices()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let class = space.classify(p);
            let q_value = space.quadratic(p).index();
            out.push_str(&format!("{matrix},{i},{coords},{class},{q_value}\n"));
        }
    };
    emit("G", bundle.all_map.points());
    emit("G_II", bundle.iso_map.points());
    emit("G_AA", bundle.aniso_map.points());
    emit("B1", &bundle.aniso_map.points()[..bundle.s_count]);
    emit("B2", &bundle.aniso_map.points()[bundle.s_count..]);
    out
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn space(q: u64, square_alpha: bool) -> QuadraticSpace {
        let f = FieldSpec::from_order(q).unwrap();
        if square_alpha {
            QuadraticSpace::paper_square(f)
        } else {
            QuadraticSpace::paper_nonsquare(f)
        }
    }

    #[test]
    fn bundle_dimensions() {
        let b = build_bundle(&space(3, true));
        assert_eq!((b.g.rows(), b.g.cols()), (40, 40));
        assert_eq!(b.g_ii.rows(), 16);
        assert_eq!(b.g_aa.rows(), 24);
        assert_eq!((b.s_count, b.t_count()), (12, 12));

        let b = build_bundle(&space(3, false));
        assert_eq!(b.g_ii.rows(), 10);
        assert!(b.g_ii.is_identity());

        let b = build_bundle(&space(5, true));
        assert_eq!(b.g_aa.rows(), 120);
        assert_eq!((b.g_ss.rows(), b.g_ss.cols()), (60, 60));
        assert_eq!((b.g_tt.rows(), b.g_tt.cols()), (60, 60));
    }

    #[test]
    fn entries_match_fresh_bilinear_evaluations() {
        let s = space(5, false);
        let b = build_bundle(&s);
        let zero = s.field().zero();
        let pts = b.all_map.points();
        let mut rng = ChaCha8Rng::seed_from_u64(0x1dce);
        for _ in 0..1000 {
            let i = rng.gen_range(0..pts.len());
            let j = rng.gen_range(0..pts.len());
            let expected = s.bilinear(&pts[i], &pts[j]) == zero;
            assert_eq!(b.g.get(i, j), expected);
        }
    }

    #[test]
    fn diagonal_marks_isotropic_points() {
        let s = space(3, true);
        let b = build_bundle(&s);
        for (i, p) in b.all_map.points().iter().enumerate() {
            let iso = s.classify(p) == PointClass::Isotropic;
            assert_eq!(b.g.get(i, i), iso);
        }
        for i in 0..b.g_ii.rows() {
            assert!(b.g_ii.get(i, i));
        }
        for i in 0..b.g_aa.rows() {
            assert!(!b.g_aa.get(i, i));
        }
    }

    #[test]
    fn symmetry_and_block_reassembly() {
        let b = build_bundle(&space(3, true));
        assert!(b.g.is_symmetric());
        assert_eq!(b.g_st, b.g_ts.transpose());

        let s_count = b.s_count;
        let reassembled = BitMatrix::from_fn(b.g_aa.rows(), b.g_aa.cols(), |i, j| {
            match (i < s_count, j < s_count) {
                (true, true) => b.g_ss.get(i, j),
                (true, false) => b.g_st.get(i, j - s_count),
                (false, true) => b.g_ts.get(i - s_count, j),
                (false, false) => b.g_tt.get(i - s_count, j - s_count),
            }
        });
        assert_eq!(reassembled, b.g_aa);
    }

    #[test]
    fn restriction_through_index_maps_reproduces_submatrices() {
        let s = space(3, false);
        let b = build_bundle(&s);
        let iso_positions: Vec<usize> = b
            .iso_map
            .points()
            .iter()
            .map(|p| b.all_map.position(p).unwrap())
            .collect();
        let restricted = b.g.submatrix(&iso_positions, &iso_positions).unwrap();
        assert_eq!(restricted, b.g_ii);

        let aniso_positions: Vec<usize> = b
            .aniso_map
            .points()
            .iter()
            .map(|p| b.all_map.position(p).unwrap())
            .collect();
        assert_eq!(
            b.g.submatrix(&aniso_positions, &aniso_positions).unwrap(),
            b.g_aa
        );
    }

    #[test]
    fn aniso_map_orders_square_before_nonsquare() {
        let s = space(5, true);
        let b = build_bundle(&s);
        for (i, p) in b.aniso_map.points().iter().enumerate() {
            let expected = if i < b.s_count {
                PointClass::SquareAniso
            } else {
                PointClass::NonsquareAniso
            };
            assert_eq!(s.classify(p), expected);
        }
        // Within each class, enumeration order is preserved.
        let enumerated = s.enumerate_points();
        let order: HashMap<&ProjPoint, usize> =
            enumerated.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let in_order = |pts: &[ProjPoint]| pts.windows(2).all(|w| order[&w[0]] < order[&w[1]]);
        assert!(in_order(&b.aniso_map.points()[..b.s_count]));
        assert!(in_order(&b.aniso_map.points()[b.s_count..]));
        assert!(in_order(b.iso_map.points()));
    }

    #[test]
    fn parallel_construction_is_deterministic() {
        let s = space(5, true);
        let pts = s.enumerate_points();
        let sequential = incidence_matrix(&s, &pts, 1);
        for workers in [2, 3, 7] {
            assert_eq!(incidence_matrix(&s, &pts, workers), sequential);
        }
    }

    #[test]
    fn b_blocks_diagonal_and_row_sums() {
        let s = space(3, true);
        let (b1, b2) = build_b_blocks(&s);
        assert_eq!((b1.rows(), b2.rows()), (12, 12));
        for i in 0..b1.rows() {
            assert!(!b1.get(i, i));
            assert!(!b2.get(i, i));
            assert_eq!(b1.row_weight(i), 8); // q^2 - 1 at q = 3
        }
    }

    #[test]
    fn b_block_identities_mod_2() {
        for s in [space(3, true), space(3, false)] {
            let b = build_bundle(&s);
            let (b1, b2) = build_b_blocks(&s);
            assert!(b1.matmul2(&b1).unwrap().is_zero());
            assert!(b2.matmul2(&b2).unwrap().is_zero());

            // G_AA^2 = I + blockdiag(B1, B2) over GF(2).
            let sq = b.g_aa.matmul2(&b.g_aa).unwrap();
            let expected = BitMatrix::from_fn(sq.rows(), sq.cols(), |i, j| {
                let s_count = b.s_count;
                let block = match (i < s_count, j < s_count) {
                    (true, true) => b1.get(i, j),
                    (false, false) => b2.get(i - s_count, j - s_count),
                    _ => false,
                };
                block ^ (i == j)
            });
            assert_eq!(sq, expected);
        }
    }

    #[test]
    fn criterion_is_representative_invariant() {
        // Both sides of <x,x><y,y> = <x,y>^2 pick up the factor
        // (lambda mu)^2 when the representatives are rescaled.
        let s = space(3, true);
        let f = s.field().clone();
        let pts = s.enumerate_points();
        let aniso: Vec<_> = pts
            .iter()
            .filter(|p| s.classify(p) != PointClass::Isotropic)
            .collect();
        for x in aniso.iter().take(6) {
            for y in aniso.iter().rev().take(6) {
                let base = {
                    let bxy = s.bilinear(x, y);
                    f.mul(s.quadratic(x), s.quadratic(y)) == f.mul(bxy, bxy)
                };
                for lambda in f.elements().skip(1) {
                    for mu in f.elements().skip(1) {
                        let sx: Vec<FieldElement> =
                            x.coords().iter().map(|&c| f.mul(lambda, c)).collect();
                        let sy: Vec<FieldElement> =
                            y.coords().iter().map(|&c| f.mul(mu, c)).collect();
                        let qx = sx
                            .iter()
                            .zip(s.diag())
                            .fold(f.zero(), |acc, (&c, &d)| f.add(acc, f.mul(d, f.mul(c, c))));
                        let qy = sy
                            .iter()
                            .zip(s.diag())
                            .fold(f.zero(), |acc, (&c, &d)| f.add(acc, f.mul(d, f.mul(c, c))));
                        let bxy = (0..4).fold(f.zero(), |acc, i| {
                            f.add(acc, f.mul(s.diag()[i], f.mul(sx[i], sy[i])))
                        });
                        let scaled = f.mul(qx, qy) == f.mul(bxy, bxy);
                        assert_eq!(scaled, base);
                    }
                }
            }
        }
    }

    #[test]
    fn dump_set_round_trips() {
        let s = space(3, true);
        let b = build_bundle(&s);
        let (b1, b2) = build_b_blocks(&s);
        let dir = tempfile::tempdir().unwrap();
        write_dump(&s, &b, &b1, &b2, dir.path()).unwrap();

        for name in DUMP_FILES {
            assert!(dir.path().join(name).exists(), "{name} missing");
        }
        let bytes = fs::read(dir.path().join("G_AA.bitmat")).unwrap();
        assert!(bytes.starts_with(b"BITMAT 1 24 24\n"));
        assert_eq!(BitMatrix::from_bitmat(&bytes).unwrap(), b.g_aa);

        let csv = fs::read_to_string(dir.path().join("index_map.csv")).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "matrix,position,coordinates,class,q_value");
        // 40 + 16 + 24 + 12 + 12 point rows.
        assert_eq!(lines.len(), 1 + 104);
        assert!(lines[1].starts_with("G,0,0 0 0 1,"));
    }
}
