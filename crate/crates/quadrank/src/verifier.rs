//! Exhaustive verification of the counting lemmas, matrix identities and
//! rank statements at a configured field and form.
//!
//! Every check scans all relevant points, pairs or planes — nothing is
//! sampled; desk-scale `q` keeps even the pair scans in the millions. The
//! point-scan checks recompute everything from the bilinear form directly, so
//! they stay independent of the incidence matrices whose identities the
//! matrix checks certify. A failed check always carries a witness with full
//! point coordinates and both sides of the violated equality; checks whose
//! statements are tied to one dimension are skipped (with the reason
//! recorded) at any other dimension.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::ffield::Chi;
use crate::gf2mat::BitMatrix;
use crate::incidence::{build_b_blocks, build_bundle, IncidenceBundle};
use crate::projgeom::{PointClass, ProjPoint, QuadraticSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Counterexample data: the offending points and the violated equality.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// Coordinate index vectors of the points involved (may be empty for
    /// aggregate facts such as a rank deficit).
    pub points: Vec<Vec<u64>>,
    /// Human-readable statement of the violation, with both sides.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub stats: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn pass(name: &str, stats: BTreeMap<String, i64>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            reason: None,
            stats,
            witness: None,
        }
    }

    fn fail(name: &str, stats: BTreeMap<String, i64>, witness: Witness) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            reason: None,
            stats,
            witness: Some(witness),
        }
    }

    fn skipped(name: &str, reason: &str) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            reason: Some(reason.into()),
            stats: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// The configuration a report was produced for, echoed into every artifact.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    pub dim: usize,
    pub diag: Vec<u64>,
    pub alpha_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

impl ConfigEcho {
    pub fn from_space(space: &QuadraticSpace) -> Self {
        let f = space.field();
        ConfigEcho {
            q: f.order(),
            p: f.characteristic(),
            e: f.degree(),
            modulus: (f.degree() > 1).then(|| f.modulus().to_vec()),
            dim: space.dim(),
            diag: space.diag().iter().map(|d| d.index()).collect(),
            alpha_class: space.disc_class().to_string(),
            preset: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub checks: Vec<CheckResult>,
    /// "pass" iff every non-skipped check passed.
    pub overall: CheckStatus,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == CheckStatus::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text summary; one line per check, derived from the same data
    /// as the JSON.
    pub fn render_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "q={} p={} e={} dim={} alpha_class={} diag={:?}{}\n",
            c.q,
            c.p,
            c.e,
            c.dim,
            c.alpha_class,
            c.diag,
            c.preset
                .as_deref()
                .map(|p| format!(" preset={p}"))
                .unwrap_or_default()
        );
        for check in &self.checks {
            let status = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            let stats = check
                .stats
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!("  {:<24} {:<4} {}\n", check.name, status, stats));
            if let Some(reason) = &check.reason {
                out.push_str(&format!("{:>34}{}\n", "reason: ", reason));
            }
            if let Some(w) = &check.witness {
                let pts = w
                    .points
                    .iter()
                    .map(|p| {
                        format!(
                            "({})",
                            p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(":")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!("{:>35}{} {}\n", "witness: ", w.detail, pts));
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Closed-form point counts for dimension 4: (isotropic, anisotropic).
pub fn expected_point_counts(q: u64, disc: Chi) -> (u64, u64) {
    match disc {
        Chi::Square => (q * q + 2 * q + 1, q * q * q - q),
        Chi::NonSquare => (q * q + 1, q * q * q + q),
        Chi::Zero => unreachable!("a non-degenerate form has nonzero discriminant"),
    }
}

const DIM4_ONLY: &str = "asserted for dimension 4 only";
const DIM3_ONLY: &str = "asserted for dimension 3 only";

fn stats(entries: &[(&str, i64)]) -> BTreeMap<String, i64> {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Packed orthogonality masks of `points` against `targets`:
/// bit `k` of mask `i` is set iff `<points[i], targets[k]> = 0`.
fn ortho_masks(space: &QuadraticSpace, points: &[ProjPoint], targets: &[ProjPoint]) -> Vec<Vec<u64>> {
    let zero = space.field().zero();
    let words = targets.len().div_ceil(64);
    points
        .iter()
        .map(|x| {
            let mut mask = vec![0u64; words];
            for (k, t) in targets.iter().enumerate() {
                if space.bilinear(x, t) == zero {
                    mask[k / 64] |= 1u64 << (k % 64);
                }
            }
            mask
        })
        .collect()
}

fn intersection_count(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

/// Class tallies against the closed-form counts (dimension 4).
pub fn check_class_counts(space: &QuadraticSpace) -> CheckResult {
    const NAME: &str = "class_counts";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let counts = space.class_counts();
    let q = space.field().order();
    let (want_iso, want_aniso) = expected_point_counts(q, space.disc_class());
    let st = stats(&[
        ("points", (counts.iso + counts.aniso()) as i64),
        ("isotropic", counts.iso as i64),
        ("square_aniso", counts.square_aniso as i64),
        ("nonsquare_aniso", counts.nonsquare_aniso as i64),
        ("expected_isotropic", want_iso as i64),
        ("expected_anisotropic", want_aniso as i64),
    ]);
    if counts.iso != want_iso || counts.aniso() != want_aniso {
        return CheckResult::fail(
            NAME,
            st,
            Witness {
                points: vec![],
                detail: format!(
                    "counted (iso, aniso) = ({}, {}), expected ({}, {})",
                    counts.iso,
                    counts.aniso(),
                    want_iso,
                    want_aniso
                ),
            },
        );
    }
    if counts.square_aniso != counts.nonsquare_aniso {
        return CheckResult::fail(
            NAME,
            st,
            Witness {
                points: vec![],
                detail: format!(
                    "|S| = {} differs from |T| = {}",
                    counts.square_aniso, counts.nonsquare_aniso
                ),
            },
        );
    }
    CheckResult::pass(NAME, st)
}

/// Per-point hyperplane profiles (dimension 4): every isotropic point sees
/// `2q+1` (square discriminant) or `1` (nonsquare) isotropic points on its
/// orthogonal hyperplane; every anisotropic point sees `(q+1, q^2)`.
pub fn check_perp_profiles(space: &QuadraticSpace) -> CheckResult {
    const NAME: &str = "perp_profiles";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let q = space.field().order();
    let zero = space.field().zero();
    let pts = space.enumerate_points();
    let classes: Vec<PointClass> = pts.iter().map(|p| space.classify(p)).collect();
    let iso_expected = match space.disc_class() {
        Chi::Square => 2 * q + 1,
        _ => 1,
    };
    let mut iso_points = 0i64;
    let mut aniso_points = 0i64;
    for (i, x) in pts.iter().enumerate() {
        let mut iso = 0u64;
        let mut aniso = 0u64;
        for (j, y) in pts.iter().enumerate() {
            if space.bilinear(x, y) != zero {
                continue;
            }
            if classes[j] == PointClass::Isotropic {
                iso += 1;
            } else {
                aniso += 1;
            }
        }
        let (want_iso, want_aniso) = if classes[i] == PointClass::Isotropic {
            iso_points += 1;
            (iso_expected, q * q + q + 1 - iso_expected)
        } else {
            aniso_points += 1;
            (q + 1, q * q)
        };
        if (iso, aniso) != (want_iso, want_aniso) {
            return CheckResult::fail(
                NAME,
                stats(&[("iso_points", iso_points), ("aniso_points", aniso_points)]),
                Witness {
                    points: vec![x.indices()],
                    detail: format!(
                        "{} point has perp profile ({iso}, {aniso}), expected ({want_iso}, {want_aniso})",
                        classes[i]
                    ),
                },
            );
        }
    }
    CheckResult::pass(
        NAME,
        stats(&[
            ("iso_points", iso_points),
            ("aniso_points", aniso_points),
            ("iso_perp_isotropic", iso_expected as i64),
            ("aniso_perp_isotropic", (q + 1) as i64),
        ]),
    )
}

/// For every pair of distinct isotropic points, the number of isotropic
/// points orthogonal to both is even (dimension 4).
pub fn check_isotropic_pair_parity(space: &QuadraticSpace) -> CheckResult {
    const NAME: &str = "isotropic_pair_parity";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let pts = space.enumerate_points();
    let iso: Vec<ProjPoint> = pts
        .into_iter()
        .filter(|p| space.classify(p) == PointClass::Isotropic)
        .collect();
    let masks = ortho_masks(space, &iso, &iso);
    let mut pairs = 0i64;
    for i in 0..iso.len() {
        for j in i + 1..iso.len() {
            pairs += 1;
            let count = intersection_count(&masks[i], &masks[j]);
            if count % 2 != 0 {
                return CheckResult::fail(
                    NAME,
                    stats(&[("pairs", pairs)]),
                    Witness {
                        points: vec![iso[i].indices(), iso[j].indices()],
                        detail: format!("common isotropic count {count} is odd"),
                    },
                );
            }
        }
    }
    CheckResult::pass(NAME, stats(&[("pairs", pairs)]))
}

/// For every pair of distinct anisotropic points, the intersection of their
/// hyperplanes carries exactly one isotropic point precisely when
/// `<x,x><y,y> = <x,y>^2`, and an even number otherwise (dimension 4).
pub fn check_aniso_pair_criterion(space: &QuadraticSpace) -> CheckResult {
    const NAME: &str = "aniso_pair_criterion";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let f = space.field();
    let pts = space.enumerate_points();
    let mut iso = Vec::new();
    let mut aniso = Vec::new();
    for p in pts {
        if space.classify(&p) == PointClass::Isotropic {
            iso.push(p);
        } else {
            aniso.push(p);
        }
    }
    let masks = ortho_masks(space, &aniso, &iso);
    let norms: Vec<_> = aniso.iter().map(|p| space.quadratic(p)).collect();
    let mut pairs = 0i64;
    let mut criterion_pairs = 0i64;
    for i in 0..aniso.len() {
        for j in i + 1..aniso.len() {
            pairs += 1;
            let pairing = space.bilinear(&aniso[i], &aniso[j]);
            let lhs = f.mul(norms[i], norms[j]);
            let rhs = f.mul(pairing, pairing);
            let criterion = lhs == rhs;
            let count = intersection_count(&masks[i], &masks[j]);
            let ok = if criterion {
                criterion_pairs += 1;
                count == 1
            } else {
                count % 2 == 0
            };
            if !ok {
                return CheckResult::fail(
                    NAME,
                    stats(&[("pairs", pairs), ("criterion_pairs", criterion_pairs)]),
                    Witness {
                        points: vec![aniso[i].indices(), aniso[j].indices()],
                        detail: format!(
                            "common isotropic count {count} with <x,x><y,y> = {lhs} vs <x,y>^2 = {rhs}",
                        ),
                    },
                );
            }
        }
    }
    CheckResult::pass(
        NAME,
        stats(&[("pairs", pairs), ("criterion_pairs", criterion_pairs)]),
    )
}

/// Plane profile law (dimension 4): every plane carries 0, 1, 2 or q+1
/// isotropic points; two distinct orthogonal isotropic points always span a
/// totally isotropic plane.
pub fn check_plane_profiles(space: &QuadraticSpace) -> CheckResult {
    const NAME: &str = "plane_profiles";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let f = space.field();
    let q = f.order();
    let zero = f.zero();
    let mut histogram = [0i64; 4]; // 0, 1, 2, q+1
    let planes = space.enumerate_planes();
    let total = planes.len() as i64;
    for plane in &planes {
        let count = space.plane_isotropic_count(plane);
        let slot = match count {
            0 => 0,
            1 => 1,
            2 => 2,
            c if c == q + 1 => 3,
            c => {
                return CheckResult::fail(
                    NAME,
                    stats(&[("planes", total)]),
                    Witness {
                        points: plane.basis().iter().map(|p| p.indices()).collect(),
                        detail: format!("plane carries {c} isotropic points, not in {{0,1,2,{}}}", q + 1),
                    },
                );
            }
        };
        histogram[slot] += 1;
    }

    // Orthogonal isotropic pairs span totally isotropic planes.
    let iso: Vec<ProjPoint> = space
        .enumerate_points()
        .into_iter()
        .filter(|p| space.classify(p) == PointClass::Isotropic)
        .collect();
    let mut ortho_pairs = 0i64;
    for i in 0..iso.len() {
        for j in i + 1..iso.len() {
            if space.bilinear(&iso[i], &iso[j]) != zero {
                continue;
            }
            ortho_pairs += 1;
            for lambda in f.elements() {
                let combo: Vec<_> = iso[i]
                    .coords()
                    .iter()
                    .zip(iso[j].coords())
                    .map(|(&a, &b)| f.add(f.mul(lambda, a), b))
                    .collect();
                let point = space.normalize(&combo).expect("independent points");
                let value = space.quadratic(&point);
                if value != zero {
                    return CheckResult::fail(
                        NAME,
                        stats(&[("planes", total), ("orthogonal_isotropic_pairs", ortho_pairs)]),
                        Witness {
                            points: vec![iso[i].indices(), iso[j].indices(), point.indices()],
                            detail: format!(
                                "span of orthogonal isotropic pair contains Q = {value} != 0"
                            ),
                        },
                    );
                }
            }
        }
    }

    CheckResult::pass(
        NAME,
        stats(&[
            ("planes", total),
            ("planes_iso_0", histogram[0]),
            ("planes_iso_1", histogram[1]),
            ("planes_iso_2", histogram[2]),
            ("totally_isotropic_planes", histogram[3]),
            ("orthogonal_isotropic_pairs", ortho_pairs),
        ]),
    )
}

fn first_difference(a: &BitMatrix, b: &BitMatrix) -> Option<(usize, usize)> {
    debug_assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `G_II^2 = I` over GF(2) for a square discriminant; `G_II = I` itself for
/// a nonsquare one (dimension 4).
pub fn check_gii_identity(space: &QuadraticSpace, bundle: &IncidenceBundle) -> CheckResult {
    const NAME: &str = "gii_identity";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let order = bundle.g_ii.rows() as i64;
    let square = space.disc_class() == Chi::Square;
    let candidate = if square {
        bundle.g_ii.matmul2(&bundle.g_ii).expect("G_II is square")
    } else {
        bundle.g_ii.clone()
    };
    let st = stats(&[("order", order), ("squared", square as i64)]);
    if let Some((i, j)) = first_difference(&candidate, &BitMatrix::identity(candidate.rows())) {
        let label = if square { "G_II^2" } else { "G_II" };
        return CheckResult::fail(
            NAME,
            st,
            Witness {
                points: vec![bundle.iso_map.point(i).indices(), bundle.iso_map.point(j).indices()],
                detail: format!(
                    "{label}[{i}][{j}] = {}, identity needs {}",
                    candidate.get(i, j) as u8,
                    (i == j) as u8
                ),
            },
        );
    }
    CheckResult::pass(NAME, st)
}

/// The anisotropic matrix identities over GF(2) (dimension 4):
/// `G_AA^2 = I + blockdiag(B1, B2)`, `B1^2 = B2^2 = 0`, `G_AA^4 = I`, and
/// every row sum of B1 and B2 is even.
pub fn check_gaa_identities(space: &QuadraticSpace, bundle: &IncidenceBundle) -> CheckResult {
    const NAME: &str = "gaa_identities";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    let (b1, b2) = build_b_blocks(space);
    let s_count = bundle.s_count;
    let order = bundle.g_aa.rows();

    let mut b1_sums = (i64::MAX, i64::MIN);
    let mut b2_sums = (i64::MAX, i64::MIN);
    for i in 0..b1.rows() {
        let w = b1.row_weight(i) as i64;
        b1_sums = (b1_sums.0.min(w), b1_sums.1.max(w));
    }
    for i in 0..b2.rows() {
        let w = b2.row_weight(i) as i64;
        b2_sums = (b2_sums.0.min(w), b2_sums.1.max(w));
    }
    let st = stats(&[
        ("order", order as i64),
        ("b1_row_sum_min", b1_sums.0),
        ("b1_row_sum_max", b1_sums.1),
        ("b2_row_sum_min", b2_sums.0),
        ("b2_row_sum_max", b2_sums.1),
    ]);
    let witness_points = |i: usize, j: usize, offset: usize| {
        vec![
            bundle.aniso_map.point(i + offset).indices(),
            bundle.aniso_map.point(j + offset).indices(),
        ]
    };

    // (a) G_AA^2 = I + blockdiag(B1, B2).
    let sq = bundle.g_aa.matmul2(&bundle.g_aa).expect("G_AA is square");
    let expected = {
        let mut m = BitMatrix::identity(order);
        for i in 0..b1.rows() {
            for j in 0..b1.cols() {
                if b1.get(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        for i in 0..b2.rows() {
            for j in 0..b2.cols() {
                if b2.get(i, j) {
                    m.set(s_count + i, s_count + j, true);
                }
            }
        }
        m
    };
    if let Some((i, j)) = first_difference(&sq, &expected) {
        return CheckResult::fail(
            NAME,
            st,
            Witness {
                points: witness_points(i, j, 0),
                detail: format!(
                    "G_AA^2[{i}][{j}] = {} but I + blockdiag(B1,B2) has {}",
                    sq.get(i, j) as u8,
                    expected.get(i, j) as u8
                ),
            },
        );
    }

    // (b) B1^2 = 0 and B2^2 = 0.
    for (label, block, offset) in [("B1", &b1, 0usize), ("B2", &b2, s_count)] {
        let bsq = block.matmul2(block).expect("block is square");
        if !bsq.is_zero() {
            let (i, j) = first_difference(&bsq, &BitMatrix::zero(bsq.rows(), bsq.cols()))
                .expect("nonzero matrix differs from zero");
            return CheckResult::fail(
                NAME,
                st,
                Witness {
                    points: witness_points(i, j, offset),
                    detail: format!("{label}^2[{i}][{j}] = 1, expected 0"),
                },
            );
        }
    }

    // (c) G_AA^4 = I.
    let fourth = sq.matmul2(&sq).expect("G_AA^2 is square");
    if let Some((i, j)) = first_difference(&fourth, &BitMatrix::identity(order)) {
        return CheckResult::fail(
            NAME,
            st,
            Witness {
                points: witness_points(i, j, 0),
                detail: format!(
                    "G_AA^4[{i}][{j}] = {}, identity needs {}",
                    fourth.get(i, j) as u8,
                    (i == j) as u8
                ),
            },
        );
    }

    // (d) even row sums.
    for (label, block, offset) in [("B1", &b1, 0usize), ("B2", &b2, s_count)] {
        for i in 0..block.rows() {
            let w = block.row_weight(i);
            if w % 2 != 0 {
                return CheckResult::fail(
                    NAME,
                    st,
                    Witness {
                        points: vec![bundle.aniso_map.point(i + offset).indices()],
                        detail: format!("{label} row {i} has odd sum {w}"),
                    },
                );
            }
        }
    }

    CheckResult::pass(NAME, st)
}

/// Full 2-rank of both classified submatrices (dimension 4).
pub fn check_full_rank(space: &QuadraticSpace, bundle: &IncidenceBundle) -> CheckResult {
    const NAME: &str = "full_rank";
    if space.dim() != 4 {
        return CheckResult::skipped(NAME, DIM4_ONLY);
    }
    rank_check(NAME, bundle, bundle.g_ii.rows() as u64, bundle.g_aa.rows() as u64)
}

/// Dimension-3 regression: the 2-ranks are `q + 1` for `G_II` and
/// `q^2 - 1` for `G_AA`.
pub fn check_dim3_ranks(space: &QuadraticSpace, bundle: &IncidenceBundle) -> CheckResult {
    const NAME: &str = "dim3_ranks";
    if space.dim() != 3 {
        return CheckResult::skipped(NAME, DIM3_ONLY);
    }
    let q = space.field().order();
    rank_check(NAME, bundle, q + 1, q * q - 1)
}

fn rank_check(name: &str, bundle: &IncidenceBundle, want_ii: u64, want_aa: u64) -> CheckResult {
    let rank_ii = bundle.g_ii.rank2() as u64;
    let rank_aa = bundle.g_aa.rank2() as u64;
    let st = stats(&[
        ("gii_order", bundle.g_ii.rows() as i64),
        ("gii_rank2", rank_ii as i64),
        ("gii_expected_rank", want_ii as i64),
        ("gaa_order", bundle.g_aa.rows() as i64),
        ("gaa_rank2", rank_aa as i64),
        ("gaa_expected_rank", want_aa as i64),
    ]);
    if rank_ii != want_ii || rank_aa != want_aa {
        return CheckResult::fail(
            name,
            st,
            Witness {
                points: vec![],
                detail: format!(
                    "rank2(G_II) = {rank_ii} (expected {want_ii}), rank2(G_AA) = {rank_aa} (expected {want_aa})"
                ),
            },
        );
    }
    CheckResult::pass(name, st)
}

/// Run every applicable check on a freshly built bundle.
pub fn run_all(space: &QuadraticSpace) -> VerificationReport {
    let bundle = build_bundle(space);
    run_with_bundle(space, &bundle)
}

/// Run every applicable check against a caller-supplied bundle (used by the
/// corruption-injection hook in the CLI).
pub fn run_with_bundle(space: &QuadraticSpace, bundle: &IncidenceBundle) -> VerificationReport {
    let checks = vec![
        check_class_counts(space),
        check_perp_profiles(space),
        check_isotropic_pair_parity(space),
        check_aniso_pair_criterion(space),
        check_plane_profiles(space),
        check_gii_identity(space, bundle),
        check_gaa_identities(space, bundle),
        check_full_rank(space, bundle),
        check_dim3_ranks(space, bundle),
    ];
    let overall = if checks.iter().all(|c| c.passed()) {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    VerificationReport {
        config: ConfigEcho::from_space(space),
        checks,
        overall,
    }
}
