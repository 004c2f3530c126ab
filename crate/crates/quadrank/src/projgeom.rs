//! The projective space `P(F_q^n)` polarized by a diagonal quadratic form.
//!
//! A "point" is a 1-dimensional subspace of `F_q^n`, stored by its canonical
//! representative (first nonzero coordinate scaled to 1). The quadratic form
//! `Q(x) = sum d_i x_i^2` (all `d_i` nonzero) induces the polar bilinear form
//! `<x,y> = (Q(x+y) - Q(x) - Q(y))/2 = sum d_i x_i y_i`, and the squareness
//! class of `Q(x)` partitions the points into isotropic, square-anisotropic
//! and nonsquare-anisotropic families.
//!
//! Hyperplane and plane queries are exhaustive scans over the enumerated
//! points: at desk-scale `q` a scan is trivial, and it keeps this module
//! independent of the matrix identities the verifier later checks.

use std::fmt;

use thiserror::Error;

use crate::ffield::{Chi, FieldElement, FieldSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("diagonal coefficient {position} is zero; the form must be non-degenerate")]
    DegenerateForm { position: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("the two points must be distinct")]
    SamePoint,
}

/// Classification of a projective point by the squareness of its `Q` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    Isotropic,
    SquareAniso,
    NonsquareAniso,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointClass::Isotropic => write!(f, "isotropic"),
            PointClass::SquareAniso => write!(f, "square_aniso"),
            PointClass::NonsquareAniso => write!(f, "nonsquare_aniso"),
        }
    }
}

/// Canonical representative of a projective point: not all coordinates zero,
/// first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate indices, e.g. for CSV dumps.
    pub fn indices(&self) -> Vec<u64> {
        self.coords.iter().map(|c| c.index()).collect()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Counts of isotropic and anisotropic points on a hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerpProfile {
    pub iso: u64,
    pub aniso: u64,
}

/// Tallies of the three point classes over the whole space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub iso: u64,
    pub square_aniso: u64,
    pub nonsquare_aniso: u64,
}

impl ClassCounts {
    pub fn aniso(&self) -> u64 {
        self.square_aniso + self.nonsquare_aniso
    }
}

/// A 2-dimensional subspace, described by its reduced row-echelon basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    basis: [ProjPoint; 2],
}

impl Plane {
    pub fn basis(&self) -> &[ProjPoint; 2] {
        &self.basis
    }
}

/// `F_q^n` with a non-degenerate diagonal quadratic form.
#[derive(Clone, Debug)]
pub struct QuadraticSpace {
    field: FieldSpec,
    n: usize,
    diag: Vec<FieldElement>,
}

impl QuadraticSpace {
    pub fn new(field: FieldSpec, diag: Vec<FieldElement>) -> Result<Self, GeomError> {
        if diag.len() < 2 {
            return Err(GeomError::DimensionTooSmall(diag.len()));
        }
        if let Some(position) = diag.iter().position(|d| d.index() == 0) {
            return Err(GeomError::DegenerateForm { position });
        }
        let n = diag.len();
        Ok(QuadraticSpace { field, n, diag })
    }

    /// The 4-dimensional form `x0^2 - x1^2 + x2^2 - a x3^2` with `a = 1`
    /// (the canonical square choice).
    pub fn paper_square(field: FieldSpec) -> Self {
        let one = field.one();
        let minus_one = field.from_int(-1);
        QuadraticSpace::new(field, vec![one, minus_one, one, minus_one])
            .expect("preset coefficients are nonzero")
    }

    /// The 4-dimensional form `x0^2 - x1^2 + x2^2 - a x3^2` with `a` the
    /// canonical nonsquare of the field.
    pub fn paper_nonsquare(field: FieldSpec) -> Self {
        let one = field.one();
        let minus_one = field.from_int(-1);
        let minus_alpha = field.neg(field.canonical_nonsquare());
        QuadraticSpace::new(field, vec![one, minus_one, one, minus_alpha])
            .expect("preset coefficients are nonzero")
    }

    /// The 3-dimensional form `x0^2 - x1^2 + x2^2`.
    pub fn dim3(field: FieldSpec) -> Self {
        let one = field.one();
        let minus_one = field.from_int(-1);
        QuadraticSpace::new(field, vec![one, minus_one, one])
            .expect("preset coefficients are nonzero")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn diag(&self) -> &[FieldElement] {
        &self.diag
    }

    /// Squareness class of the form's discriminant (the product of the
    /// diagonal coefficients). For dimension 4 this distinguishes the two
    /// inequivalent forms: `Square` gives the hyperbolic point counts and
    /// `NonSquare` the elliptic ones. The `paper_square`/`paper_nonsquare`
    /// presets land on the class of their `a`.
    pub fn disc_class(&self) -> Chi {
        let prod = self
            .diag
            .iter()
            .fold(self.field.one(), |acc, &d| self.field.mul(acc, d));
        self.field.chi(prod)
    }

    /// Number of projective points, `(q^n - 1)/(q - 1)`.
    pub fn point_count(&self) -> u64 {
        let q = self.field.order();
        let qn = q.checked_pow(self.n as u32).expect("q^n overflows u64");
        (qn - 1) / (q - 1)
    }

    /// Normalize a coordinate vector to its canonical projective
    /// representative; `None` for the zero vector.
    pub fn normalize(&self, coords: &[FieldElement]) -> Option<ProjPoint> {
        assert_eq!(coords.len(), self.n, "coordinate vector has the wrong length");
        let lead = coords.iter().position(|c| c.index() != 0)?;
        if coords[lead] == self.field.one() {
            return Some(ProjPoint {
                coords: coords.to_vec(),
            });
        }
        let inv = self
            .field
            .inv(coords[lead])
            .expect("leading coordinate is nonzero");
        Some(ProjPoint {
            coords: coords.iter().map(|&c| self.field.mul(inv, c)).collect(),
        })
    }

    /// All projective points, in lexicographic order of their canonical
    /// coordinate index vectors; deterministic.
    pub fn enumerate_points(&self) -> Vec<ProjPoint> {
        let q = self.field.order();
        let mut pts = Vec::with_capacity(self.point_count() as usize);
        let mut coords = vec![self.field.zero(); self.n];
        // Odometer with the last coordinate fastest = lexicographic order.
        loop {
            if let Some(lead) = coords.iter().position(|c| c.index() != 0) {
                if coords[lead] == self.field.one() {
                    pts.push(ProjPoint {
                        coords: coords.clone(),
                    });
                }
            }
            let mut k = self.n;
            loop {
                if k == 0 {
                    debug_assert_eq!(pts.len() as u64, self.point_count());
                    return pts;
                }
                k -= 1;
                let next = coords[k].index() + 1;
                if next < q {
                    coords[k] = self.field.element(next);
                    break;
                }
                coords[k] = self.field.zero();
            }
        }
    }

    /// `Q(x) = sum d_i x_i^2`, evaluated on the canonical representative.
    pub fn quadratic(&self, x: &ProjPoint) -> FieldElement {
        self.quadratic_raw(&x.coords)
    }

    fn quadratic_raw(&self, coords: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for (d, &c) in self.diag.iter().zip(coords) {
            acc = f.add(acc, f.mul(*d, f.mul(c, c)));
        }
        acc
    }

    /// The polar form of `Q`: `<x,y> = (Q(x+y) - Q(x) - Q(y))/2`, which for
    /// the diagonal form is `sum d_i x_i y_i`. Symmetric, with
    /// `<x,x> = Q(x)`.
    pub fn bilinear(&self, x: &ProjPoint, y: &ProjPoint) -> FieldElement {
        self.bilinear_raw(&x.coords, &y.coords)
    }

    fn bilinear_raw(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.n {
            acc = f.add(acc, f.mul(self.diag[i], f.mul(x[i], y[i])));
        }
        acc
    }

    /// Classify by the squareness of `Q(x)`; independent of the chosen
    /// representative since `Q(cx) = c^2 Q(x)`.
    pub fn classify(&self, x: &ProjPoint) -> PointClass {
        match self.field.chi(self.quadratic(x)) {
            Chi::Zero => PointClass::Isotropic,
            Chi::Square => PointClass::SquareAniso,
            Chi::NonSquare => PointClass::NonsquareAniso,
        }
    }

    /// Exhaustive class tallies over all points.
    pub fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts {
            iso: 0,
            square_aniso: 0,
            nonsquare_aniso: 0,
        };
        for p in self.enumerate_points() {
            match self.classify(&p) {
                PointClass::Isotropic => counts.iso += 1,
                PointClass::SquareAniso => counts.square_aniso += 1,
                PointClass::NonsquareAniso => counts.nonsquare_aniso += 1,
            }
        }
        counts
    }

    /// Counts of isotropic/anisotropic points on the hyperplane orthogonal
    /// to `x`, by exhaustive scan.
    pub fn perp_profile(&self, x: &ProjPoint) -> PerpProfile {
        let mut profile = PerpProfile { iso: 0, aniso: 0 };
        for y in self.enumerate_points() {
            if self.bilinear(x, &y).index() != 0 {
                continue;
            }
            if self.classify(&y) == PointClass::Isotropic {
                profile.iso += 1;
            } else {
                profile.aniso += 1;
            }
        }
        profile
    }

    /// Number of isotropic points orthogonal to both `x` and `y`, by
    /// exhaustive scan. The points must be distinct.
    pub fn perp_pair_isotropic_count(
        &self,
        x: &ProjPoint,
        y: &ProjPoint,
    ) -> Result<u64, GeomError> {
        if x == y {
            return Err(GeomError::SamePoint);
        }
        let zero = self.field.zero();
        let mut count = 0;
        for z in self.enumerate_points() {
            if self.quadratic(&z) == zero
                && self.bilinear(x, &z) == zero
                && self.bilinear(y, &z) == zero
            {
                count += 1;
            }
        }
        Ok(count)
    }

    /// All 2-dimensional subspaces, each exactly once, as reduced
    /// row-echelon basis pairs; `(q^2+1)(q^2+q+1)` of them for `n = 4`.
    pub fn enumerate_planes(&self) -> Vec<Plane> {
        let f = &self.field;
        let q = f.order();
        let mut planes = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                // Row 0 pivots at column i (entry 1, zero at column j), row 1
                // pivots at column j; remaining entries run over F_q.
                let free0: Vec<usize> = (i + 1..self.n).filter(|&k| k != j).collect();
                let free1: Vec<usize> = (j + 1..self.n).collect();
                let slots = free0.len() + free1.len();
                let total = q.pow(slots as u32);
                for mut v in 0..total {
                    let mut row0 = vec![f.zero(); self.n];
                    let mut row1 = vec![f.zero(); self.n];
                    row0[i] = f.one();
                    row1[j] = f.one();
                    for &k in &free0 {
                        row0[k] = f.element(v % q);
                        v /= q;
                    }
                    for &k in &free1 {
                        row1[k] = f.element(v % q);
                        v /= q;
                    }
                    planes.push(Plane {
                        basis: [ProjPoint { coords: row0 }, ProjPoint { coords: row1 }],
                    });
                }
            }
        }
        planes
    }

    /// The `q + 1` canonical points of a plane.
    pub fn plane_points(&self, plane: &Plane) -> Vec<ProjPoint> {
        let f = &self.field;
        let [u, v] = &plane.basis;
        let mut pts = Vec::with_capacity(f.order() as usize + 1);
        pts.push(u.clone());
        for lambda in f.elements() {
            let combo: Vec<FieldElement> = u
                .coords
                .iter()
                .zip(&v.coords)
                .map(|(&a, &b)| f.add(f.mul(lambda, a), b))
                .collect();
            pts.push(self.normalize(&combo).expect("basis rows are independent"));
        }
        pts
    }

    /// Number of isotropic points among the `q + 1` points of the plane;
    /// always one of `{0, 1, 2, q+1}` for a non-degenerate form.
    pub fn plane_isotropic_count(&self, plane: &Plane) -> u64 {
        let zero = self.field.zero();
        self.plane_points(plane)
            .iter()
            .filter(|p| self.quadratic(p) == zero)
            .count() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn space(q: u64, square_alpha: bool) -> QuadraticSpace {
        let f = FieldSpec::from_order(q).unwrap();
        if square_alpha {
            QuadraticSpace::paper_square(f)
        } else {
            QuadraticSpace::paper_nonsquare(f)
        }
    }

    fn point(space: &QuadraticSpace, ints: &[i64]) -> ProjPoint {
        let coords: Vec<FieldElement> = ints.iter().map(|&v| space.field().from_int(v)).collect();
        space.normalize(&coords).unwrap()
    }

    #[test]
    fn construction_rejects_bad_forms() {
        let f = FieldSpec::prime(3).unwrap();
        let zero = f.zero();
        let one = f.one();
        assert_eq!(
            QuadraticSpace::new(f.clone(), vec![one, zero, one]).unwrap_err(),
            GeomError::DegenerateForm { position: 1 }
        );
        assert_eq!(
            QuadraticSpace::new(f, vec![one]).unwrap_err(),
            GeomError::DimensionTooSmall(1)
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(space(3, true).enumerate_points().len(), 40);
        assert_eq!(space(9, true).enumerate_points().len(), 820);
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(QuadraticSpace::dim3(f5).enumerate_points().len(), 31);
    }

    #[test]
    fn enumeration_is_canonical_sorted_and_distinct() {
        let s = space(5, true);
        let pts = s.enumerate_points();
        let mut seen = HashSet::new();
        let one = s.field().one();
        for w in pts.windows(2) {
            assert!(w[0] < w[1], "not in lexicographic order");
        }
        for p in &pts {
            let lead = p.coords().iter().position(|c| c.index() != 0).unwrap();
            assert_eq!(p.coords()[lead], one, "not canonical: {p}");
            assert!(seen.insert(p.clone()));
        }
    }

    #[test]
    fn scalar_multiples_normalize_to_same_point() {
        let s = space(5, false);
        let f = s.field().clone();
        for p in s.enumerate_points() {
            for lambda in f.elements().skip(1) {
                let scaled: Vec<FieldElement> =
                    p.coords().iter().map(|&c| f.mul(lambda, c)).collect();
                assert_eq!(s.normalize(&scaled).unwrap(), p);
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        let s = space(3, true);
        assert_eq!(s.quadratic(&point(&s, &[1, 1, 0, 0])).index(), 0);
        assert_eq!(s.quadratic(&point(&s, &[1, 0, 0, 0])).index(), 1);
        assert_eq!(s.quadratic(&point(&s, &[1, 1, 1, 1])).index(), 0);
        // (1,1,0,0) is isotropic for every alpha.
        let s = space(7, false);
        assert_eq!(s.quadratic(&point(&s, &[1, 1, 0, 0])).index(), 0);
    }

    #[test]
    fn bilinear_examples_and_symmetry() {
        let s = space(3, true);
        let e0 = point(&s, &[1, 0, 0, 0]);
        let e1 = point(&s, &[0, 1, 0, 0]);
        assert_eq!(s.bilinear(&e0, &e1).index(), 0);
        assert_eq!(s.bilinear(&point(&s, &[1, 1, 1, 0]), &e0).index(), 1);
        let pts = s.enumerate_points();
        for x in &pts {
            assert_eq!(s.bilinear(x, x), s.quadratic(x));
            for y in &pts {
                assert_eq!(s.bilinear(x, y), s.bilinear(y, x));
            }
        }
    }

    #[test]
    fn bilinear_agrees_with_polar_form() {
        // Independent route: <x,y> = (Q(x+y) - Q(x) - Q(y)) / 2.
        for s in [space(3, true), space(9, false)] {
            let f = s.field().clone();
            let half = f.inv(f.from_int(2)).unwrap();
            let pts = s.enumerate_points();
            let step = (pts.len() / 40).max(1);
            for x in pts.iter().step_by(step) {
                for y in pts.iter().step_by(step) {
                    let sum: Vec<FieldElement> = x
                        .coords()
                        .iter()
                        .zip(y.coords())
                        .map(|(&a, &b)| f.add(a, b))
                        .collect();
                    let polar = f.mul(
                        half,
                        f.sub(
                            f.sub(s.quadratic_raw(&sum), s.quadratic(x)),
                            s.quadratic(y),
                        ),
                    );
                    assert_eq!(s.bilinear(x, y), polar);
                }
            }
        }
    }

    #[test]
    fn bilinear_is_linear_in_each_slot() {
        let s = space(3, true);
        let f = s.field().clone();
        let vectors: Vec<Vec<FieldElement>> = (0..81u64)
            .map(|v| {
                (0..4)
                    .map(|k| f.element((v / 3u64.pow(k)) % 3))
                    .collect()
            })
            .collect();
        let step = 7; // a sample of raw (not necessarily canonical) vectors
        for x in vectors.iter().step_by(step) {
            for y in vectors.iter().step_by(step) {
                for z in vectors.iter().step_by(step) {
                    let sum: Vec<FieldElement> =
                        x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
                    assert_eq!(
                        s.bilinear_raw(&sum, z),
                        f.add(s.bilinear_raw(x, z), s.bilinear_raw(y, z))
                    );
                }
                for lambda in f.elements() {
                    let scaled: Vec<FieldElement> =
                        x.iter().map(|&a| f.mul(lambda, a)).collect();
                    assert_eq!(
                        s.bilinear_raw(&scaled, y),
                        f.mul(lambda, s.bilinear_raw(x, y))
                    );
                }
            }
        }
    }

    #[test]
    fn classification_examples_and_scale_invariance() {
        let s = space(3, true);
        assert_eq!(s.classify(&point(&s, &[1, 1, 0, 0])), PointClass::Isotropic);
        assert_eq!(s.classify(&point(&s, &[1, 0, 0, 0])), PointClass::SquareAniso);
        assert_eq!(s.classify(&point(&s, &[1, 0, 1, 1])), PointClass::SquareAniso);

        // Q(cx) = c^2 Q(x): the class never depends on the representative.
        let f = s.field().clone();
        for p in s.enumerate_points() {
            let class = s.classify(&p);
            for lambda in f.elements().skip(1) {
                let scaled: Vec<FieldElement> =
                    p.coords().iter().map(|&c| f.mul(lambda, c)).collect();
                let q_scaled = s.quadratic_raw(&scaled);
                let chi = f.chi(q_scaled);
                let scaled_class = match chi {
                    Chi::Zero => PointClass::Isotropic,
                    Chi::Square => PointClass::SquareAniso,
                    Chi::NonSquare => PointClass::NonsquareAniso,
                };
                assert_eq!(scaled_class, class);
            }
        }
    }

    #[test]
    fn class_counts_match_formulas() {
        let c = space(3, true).class_counts();
        assert_eq!((c.iso, c.aniso()), (16, 24));
        assert_eq!(c.square_aniso, c.nonsquare_aniso);
        let c = space(3, false).class_counts();
        assert_eq!((c.iso, c.aniso()), (10, 30));
        assert_eq!(c.square_aniso, c.nonsquare_aniso);
        let c = space(5, true).class_counts();
        assert_eq!((c.iso, c.aniso()), (36, 120));
    }

    #[test]
    fn disc_class_tracks_alpha() {
        assert_eq!(space(3, true).disc_class(), Chi::Square);
        assert_eq!(space(3, false).disc_class(), Chi::NonSquare);
        assert_eq!(space(9, true).disc_class(), Chi::Square);
        assert_eq!(space(9, false).disc_class(), Chi::NonSquare);
    }

    #[test]
    fn perp_profiles_match_lemma_counts() {
        let s = space(3, true);
        let iso_point = point(&s, &[1, 1, 0, 0]);
        assert_eq!(s.perp_profile(&iso_point), PerpProfile { iso: 7, aniso: 6 });
        let aniso_point = point(&s, &[1, 0, 0, 0]);
        assert_eq!(s.perp_profile(&aniso_point), PerpProfile { iso: 4, aniso: 9 });

        let s = space(3, false);
        assert_eq!(
            s.perp_profile(&point(&s, &[1, 1, 0, 0])),
            PerpProfile { iso: 1, aniso: 12 }
        );

        // Hyperplanes have (q^(n-1) - 1)/(q - 1) points.
        let s = space(5, true);
        for p in s.enumerate_points().iter().step_by(7) {
            let profile = s.perp_profile(p);
            assert_eq!(profile.iso + profile.aniso, 31);
        }
    }

    #[test]
    fn perp_pair_examples() {
        let s = space(3, true);
        let e0 = point(&s, &[1, 0, 0, 0]);
        let e2 = point(&s, &[0, 0, 1, 0]);
        let p = point(&s, &[1, 1, 1, 0]);
        assert_eq!(s.perp_pair_isotropic_count(&e0, &e2).unwrap(), 0);
        assert_eq!(s.perp_pair_isotropic_count(&e0, &p).unwrap(), 1);
        assert_eq!(
            s.perp_pair_isotropic_count(&e0, &e0).unwrap_err(),
            GeomError::SamePoint
        );
    }

    #[test]
    fn isotropic_pairs_have_even_intersection_counts() {
        let s = space(3, true);
        let iso: Vec<ProjPoint> = s
            .enumerate_points()
            .into_iter()
            .filter(|p| s.classify(p) == PointClass::Isotropic)
            .collect();
        for (i, x) in iso.iter().enumerate() {
            for y in &iso[i + 1..] {
                let c = s.perp_pair_isotropic_count(x, y).unwrap();
                assert_eq!(c % 2, 0, "odd count {c} for {x}, {y}");
            }
        }
    }

    #[test]
    fn plane_enumeration_counts_and_uniqueness() {
        let s = space(3, true);
        let planes = s.enumerate_planes();
        assert_eq!(planes.len(), 130);
        let mut seen = HashSet::new();
        for plane in &planes {
            let mut pts = s.plane_points(plane);
            assert_eq!(pts.len(), 4);
            pts.sort();
            assert!(seen.insert(pts), "plane enumerated twice");
        }

        let f5 = FieldSpec::prime(5).unwrap();
        let s5 = QuadraticSpace::paper_square(f5);
        assert_eq!(s5.enumerate_planes().len(), 806);
    }

    #[test]
    fn plane_isotropic_counts() {
        // span{e0, e2}: Q = a^2 + b^2; -1 is a nonsquare mod 3 (0 points)
        // and a square mod 5 (2 points).
        for (q, expected) in [(3u64, 0u64), (5, 2)] {
            let s = space(q, true);
            let plane = s
                .enumerate_planes()
                .into_iter()
                .find(|pl| {
                    pl.basis()[0] == point(&s, &[1, 0, 0, 0])
                        && pl.basis()[1] == point(&s, &[0, 0, 1, 0])
                })
                .expect("span{e0,e2} is enumerated");
            assert_eq!(s.plane_isotropic_count(&plane), expected);
        }

        for s in [space(3, true), space(3, false)] {
            let q = s.field().order();
            for plane in s.enumerate_planes() {
                let c = s.plane_isotropic_count(&plane);
                assert!(c == 0 || c == 1 || c == 2 || c == q + 1, "count {c}");
            }
        }
    }

    #[test]
    fn orthogonal_isotropic_pairs_span_isotropic_planes() {
        let s = space(3, true);
        let zero = s.field().zero();
        let iso: Vec<ProjPoint> = s
            .enumerate_points()
            .into_iter()
            .filter(|p| s.classify(p) == PointClass::Isotropic)
            .collect();
        let f = s.field().clone();
        let mut found = 0;
        for (i, x) in iso.iter().enumerate() {
            for y in &iso[i + 1..] {
                if s.bilinear(x, y) != zero {
                    continue;
                }
                found += 1;
                // All q+1 points of span{x,y} must be isotropic.
                assert_eq!(s.quadratic(y), zero);
                for lambda in f.elements() {
                    let combo: Vec<FieldElement> = x
                        .coords()
                        .iter()
                        .zip(y.coords())
                        .map(|(&a, &b)| f.add(f.mul(lambda, a), b))
                        .collect();
                    assert_eq!(s.quadratic_raw(&combo), zero);
                }
            }
        }
        assert!(found > 0, "hyperbolic space has orthogonal isotropic pairs");
    }
}
