//! The PGL(3,q) action on points, lines, point sets and curves, plus
//! projective-equivalence search and equivalence-class counting for the
//! degree-(q-1) three-term family.

use alloc::vec::Vec;
use core::fmt;

use crate::gf::{FieldSpec, Felt};
use crate::hpoly::HPoly;
use crate::projplane::{PLine, PPoint, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivError {
    SingularMatrix,
    FieldMismatch,
    NotAFrame,
}

impl fmt::Display for EquivError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivError::SingularMatrix => write!(f, "matrix is singular"),
            EquivError::FieldMismatch => write!(f, "operands from different fields"),
            EquivError::NotAFrame => write!(f, "points do not form a projective frame"),
        }
    }
}

pub(crate) type Mat3 = [[Felt; 3]; 3];

pub(crate) fn mat_det(f: &FieldSpec, m: &Mat3) -> Felt {
    let t1 = f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])));
    let t2 = f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0])));
    let t3 = f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])));
    f.add(f.sub(t1, t2), t3)
}

pub(crate) fn mat_mul(f: &FieldSpec, a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[f.zero(); 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = f.zero();
            for k in 0..3 {
                acc = f.add(acc, f.mul(a[r][k], b[k][c]));
            }
            out[r][c] = acc;
        }
    }
    out
}

/// Adjugate-based inverse; caller guarantees a nonzero determinant.
pub(crate) fn mat_inv(f: &FieldSpec, m: &Mat3) -> Mat3 {
    let det = mat_det(f, m);
    debug_assert!(!det.is_zero());
    let di = f.inv(det);
    let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
        f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]))
    };
    // adj[c][r] = cofactor(r, c)
    let mut out = [[f.zero(); 3]; 3];
    out[0][0] = cof(1, 1, 2, 2);
    out[1][0] = f.neg(cof(1, 0, 2, 2));
    out[2][0] = cof(1, 0, 2, 1);
    out[0][1] = f.neg(cof(0, 1, 2, 2));
    out[1][1] = cof(0, 0, 2, 2);
    out[2][1] = f.neg(cof(0, 0, 2, 1));
    out[0][2] = cof(0, 1, 1, 2);
    out[1][2] = f.neg(cof(0, 0, 1, 2));
    out[2][2] = cof(0, 0, 1, 1);
    for row in out.iter_mut() {
        for e in row.iter_mut() {
            *e = f.mul(di, *e);
        }
    }
    out
}

fn mat_vec(f: &FieldSpec, m: &Mat3, v: &[Felt; 3]) -> [Felt; 3] {
    let mut out = [f.zero(); 3];
    for r in 0..3 {
        let mut acc = f.zero();
        for k in 0..3 {
            acc = f.add(acc, f.mul(m[r][k], v[k]));
        }
        out[r] = acc;
    }
    out
}

/// An invertible projectivity of PG(2,q), stored as a matrix normalized so
/// that the first nonzero entry in row-major order is 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Projectivity {
    q: u32,
    m: Mat3,
}

impl Projectivity {
    pub fn new(f: &FieldSpec, m: Mat3) -> Result<Projectivity, EquivError> {
        for row in &m {
            for e in row {
                if e.field_order() != f.q() {
                    return Err(EquivError::FieldMismatch);
                }
            }
        }
        if mat_det(f, &m).is_zero() {
            return Err(EquivError::SingularMatrix);
        }
        Ok(Projectivity {
            q: f.q(),
            m: normalize_mat(f, m),
        })
    }

    pub fn identity(f: &FieldSpec) -> Projectivity {
        let o = f.zero();
        let i = f.one();
        Projectivity {
            q: f.q(),
            m: [[i, o, o], [o, i, o], [o, o, i]],
        }
    }

    /// Matrix from raw element indices, row-major. Panics if singular.
    pub fn from_indices(f: &FieldSpec, rows: [[u32; 3]; 3]) -> Projectivity {
        let m = rows.map(|r| r.map(|i| f.elt(i)));
        Projectivity::new(f, m).expect("invertible matrix")
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn inverse(&self, f: &FieldSpec) -> Projectivity {
        Projectivity {
            q: self.q,
            m: normalize_mat(f, mat_inv(f, &self.m)),
        }
    }

    /// Composition: (self * other) acts as self after other.
    pub fn compose(&self, f: &FieldSpec, other: &Projectivity) -> Projectivity {
        Projectivity {
            q: self.q,
            m: normalize_mat(f, mat_mul(f, &self.m, &other.m)),
        }
    }

    pub fn apply_point(&self, f: &FieldSpec, p: &PPoint) -> PPoint {
        let v = mat_vec(f, &self.m, &p.coords());
        PPoint::new(f, v).expect("projectivity is invertible")
    }

    /// Lines transform by the inverse transpose.
    pub fn apply_line(&self, f: &FieldSpec, l: &PLine) -> PLine {
        let inv = mat_inv(f, &self.m);
        let c = l.coords();
        let mut out = [f.zero(); 3];
        for j in 0..3 {
            let mut acc = f.zero();
            for i in 0..3 {
                acc = f.add(acc, f.mul(c[i], inv[i][j]));
            }
            out[j] = acc;
        }
        PLine::new(f, out).expect("projectivity is invertible")
    }

    pub fn apply_set(&self, f: &FieldSpec, s: &PointSet) -> PointSet {
        let pts: Vec<PPoint> = s
            .points(f)
            .iter()
            .map(|p| self.apply_point(f, p))
            .collect();
        PointSet::from_points(f, &pts).expect("bijections preserve distinctness")
    }

    /// Action on a curve equation: the zero set of the result is the image
    /// of the zero set of the input.
    pub fn apply_curve(&self, f: &FieldSpec, poly: &HPoly) -> HPoly {
        crate::hpoly::substitute(f, poly, self)
    }

    /// Row-major element indices, for serialization.
    pub fn entry_indices(&self) -> [[u32; 3]; 3] {
        self.m.map(|r| r.map(|e| e.index()))
    }
}

fn normalize_mat(f: &FieldSpec, mut m: Mat3) -> Mat3 {
    let mut lead = None;
    'find: for row in &m {
        for e in row {
            if !e.is_zero() {
                lead = Some(*e);
                break 'find;
            }
        }
    }
    if let Some(l) = lead {
        if l != f.one() {
            let s = f.inv(l);
            for row in m.iter_mut() {
                for e in row.iter_mut() {
                    *e = f.mul(s, *e);
                }
            }
        }
    }
    m
}

/// The unique projectivity sending the standard frame
/// (1:0:0),(0:1:0),(0:0:1),(1:1:1) to the given four points, or an error
/// when three of them are collinear.
pub fn from_standard_frame(f: &FieldSpec, pts: &[PPoint; 4]) -> Result<Projectivity, EquivError> {
    // Solve [P1 P2 P3] c = P4; general position <=> all c_i nonzero.
    let cols: Vec<[Felt; 3]> = pts.iter().map(|p| p.coords()).collect();
    let m: Mat3 = [
        [cols[0][0], cols[1][0], cols[2][0]],
        [cols[0][1], cols[1][1], cols[2][1]],
        [cols[0][2], cols[1][2], cols[2][2]],
    ];
    if mat_det(f, &m).is_zero() {
        return Err(EquivError::NotAFrame);
    }
    let inv = mat_inv(f, &m);
    let c = mat_vec(f, &inv, &cols[3]);
    if c.iter().any(|x| x.is_zero()) {
        return Err(EquivError::NotAFrame);
    }
    let scaled: Mat3 = [
        [
            f.mul(c[0], cols[0][0]),
            f.mul(c[1], cols[1][0]),
            f.mul(c[2], cols[2][0]),
        ],
        [
            f.mul(c[0], cols[0][1]),
            f.mul(c[1], cols[1][1]),
            f.mul(c[2], cols[2][1]),
        ],
        [
            f.mul(c[0], cols[0][2]),
            f.mul(c[1], cols[1][2]),
            f.mul(c[2], cols[2][2]),
        ],
    ];
    Projectivity::new(f, scaled)
}

/// The unique projectivity mapping one ordered frame to another.
pub fn from_frames(
    f: &FieldSpec,
    src: &[PPoint; 4],
    dst: &[PPoint; 4],
) -> Result<Projectivity, EquivError> {
    let a = from_standard_frame(f, src)?;
    let b = from_standard_frame(f, dst)?;
    Ok(b.compose(f, &a.inverse(f)))
}

// ---------------------------------------------------------------------
// Equivalence search
// ---------------------------------------------------------------------

use alloc::collections::BTreeMap;

use crate::arcs::{line_counts, spectrum};
use crate::curve::{family_catalog, CurveError, FamilyId, PlaneCurve};
use crate::projplane::{bitset_contains, line_through, pencil, Plane};

/// Every plane point classified by its line profile with respect to a
/// set: the class signature is the full psi vector, which any witness
/// projectivity must preserve. Whether the point belongs to the set is
/// determined by the signature, so classes never mix the two sides.
struct PlaneTyping {
    /// signature -> point indices carrying it, ascending.
    classes: BTreeMap<Vec<u16>, Vec<u32>>,
    /// per-point signature (shared with `classes` keys).
    signature_of: Vec<Vec<u16>>,
    /// per-line intersection counts with the set.
    counts: Vec<u16>,
    spectrum: crate::arcs::ArcSpectrum,
}

fn plane_typing(f: &FieldSpec, plane: &Plane, s: &PointSet) -> PlaneTyping {
    let counts = line_counts(plane, s);
    let q = f.q() as usize;
    let mut classes: BTreeMap<Vec<u16>, Vec<u32>> = BTreeMap::new();
    let mut signature_of = Vec::with_capacity(plane.size());
    for (pi, p) in plane.points().iter().enumerate() {
        let mut psi = alloc::vec![0u16; q + 2];
        for l in pencil(f, p) {
            psi[counts[l.index(f)] as usize] += 1;
        }
        classes.entry(psi.clone()).or_default().push(pi as u32);
        signature_of.push(psi);
    }
    PlaneTyping {
        classes,
        signature_of,
        counts,
        spectrum: spectrum(plane, s),
    }
}

/// Deterministic anchor: a projective frame assembled greedily from the
/// rarest type classes.
fn anchor_frame(f: &FieldSpec, plane: &Plane, t: &PlaneTyping) -> [PPoint; 4] {
    let mut order: Vec<u32> = (0..plane.size() as u32).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (&t.signature_of[a as usize], &t.signature_of[b as usize]);
        let (ca, cb) = (t.classes[sa].len(), t.classes[sb].len());
        ca.cmp(&cb).then(sa.cmp(sb)).then(a.cmp(&b))
    });
    let mut chosen: Vec<PPoint> = Vec::with_capacity(4);
    for &pi in &order {
        let p = plane.points()[pi as usize];
        let ok = match chosen.len() {
            0 => true,
            1 => p != chosen[0],
            2 => line_through(f, &chosen[0], &chosen[1])
                .map(|l| !p.on(f, &l))
                .unwrap_or(false),
            _ => {
                let cand = [chosen[0], chosen[1], chosen[2], p];
                from_standard_frame(f, &cand).is_ok()
            }
        };
        if ok {
            chosen.push(p);
            if chosen.len() == 4 {
                return [chosen[0], chosen[1], chosen[2], chosen[3]];
            }
        }
    }
    unreachable!("every projective plane contains a frame")
}

/// Backtracking frame search: maps the side-1 anchor to every candidate
/// frame of side 2 whose classes and pairwise secant counts match, and
/// hands each induced projectivity to `verify`. Sound and complete: a
/// witness must send typed points to equally-typed points.
fn search_witness(
    f: &FieldSpec,
    plane: &Plane,
    t1: &PlaneTyping,
    t2: &PlaneTyping,
    mut verify: impl FnMut(&Projectivity) -> bool,
) -> Option<Projectivity> {
    if t1.spectrum != t2.spectrum {
        return None;
    }
    // class signatures and their sizes must agree
    if t1.classes.len() != t2.classes.len()
        || t1
            .classes
            .iter()
            .any(|(sig, pts)| t2.classes.get(sig).map(|v| v.len()) != Some(pts.len()))
    {
        return None;
    }
    let anchor = anchor_frame(f, plane, t1);
    let secant = |t: &PlaneTyping, a: &PPoint, b: &PPoint| -> u16 {
        let l = line_through(f, a, b).expect("distinct points");
        t.counts[l.index(f)]
    };
    let c12 = secant(t1, &anchor[0], &anchor[1]);
    let c13 = secant(t1, &anchor[0], &anchor[2]);
    let c23 = secant(t1, &anchor[1], &anchor[2]);
    let c14 = secant(t1, &anchor[0], &anchor[3]);
    let c24 = secant(t1, &anchor[1], &anchor[3]);
    let c34 = secant(t1, &anchor[2], &anchor[3]);

    let cls: Vec<&Vec<u32>> = anchor
        .iter()
        .map(|p| &t2.classes[&t1.signature_of[p.index(f)]])
        .collect();
    let pt = |pi: u32| plane.points()[pi as usize];

    for &i1 in cls[0] {
        let q1 = pt(i1);
        for &i2 in cls[1] {
            if i2 == i1 {
                continue;
            }
            let q2 = pt(i2);
            if secant(t2, &q1, &q2) != c12 {
                continue;
            }
            for &i3 in cls[2] {
                if i3 == i1 || i3 == i2 {
                    continue;
                }
                let q3 = pt(i3);
                let l12 = line_through(f, &q1, &q2).expect("distinct");
                if q3.on(f, &l12) {
                    continue;
                }
                if secant(t2, &q1, &q3) != c13 || secant(t2, &q2, &q3) != c23 {
                    continue;
                }
                for &i4 in cls[3] {
                    if i4 == i1 || i4 == i2 || i4 == i3 {
                        continue;
                    }
                    let q4 = pt(i4);
                    if secant(t2, &q1, &q4) != c14
                        || secant(t2, &q2, &q4) != c24
                        || secant(t2, &q3, &q4) != c34
                    {
                        continue;
                    }
                    let Ok(a) = from_frames(f, &anchor, &[q1, q2, q3, q4]) else {
                        continue;
                    };
                    if verify(&a) {
                        return Some(a);
                    }
                }
            }
        }
    }
    None
}

/// Decides projective equivalence of two point sets; a returned witness A
/// satisfies A(S1) = S2.
pub fn are_equivalent_sets(
    f: &FieldSpec,
    plane: &Plane,
    s1: &PointSet,
    s2: &PointSet,
) -> Option<Projectivity> {
    if s1.len() != s2.len() {
        return None;
    }
    if s1 == s2 {
        return Some(Projectivity::identity(f));
    }
    let t1 = plane_typing(f, plane, s1);
    let t2 = plane_typing(f, plane, s2);
    let bits2 = s2.bitset();
    search_witness(f, plane, &t1, &t2, |a| {
        s1.points(f).iter().all(|p| {
            let img = a.apply_point(f, p);
            bitset_contains(&bits2, img.index(f) as u32)
        })
    })
}

/// Decides projective equivalence of two curves on coefficient vectors up
/// to scalar: a returned witness A satisfies apply_curve(A, C1) ~ C2.
pub fn are_equivalent_curves(
    f: &FieldSpec,
    plane: &Plane,
    c1: &PlaneCurve,
    c2: &PlaneCurve,
) -> Option<Projectivity> {
    if c1.degree() != c2.degree() {
        return None;
    }
    if c1.poly().normalized(f) == c2.poly().normalized(f) {
        return Some(Projectivity::identity(f));
    }
    if c1.n_q() != c2.n_q() {
        return None;
    }
    let t1 = plane_typing(f, plane, c1.points());
    let t2 = plane_typing(f, plane, c2.points());
    // probe points for a cheap proportionality filter before composing
    let probes: Vec<PPoint> = plane.points().iter().copied().take(6).collect();
    let vals1: Vec<Felt> = probes.iter().map(|p| c1.poly().evaluate(f, p)).collect();
    search_witness(f, plane, &t1, &t2, |a| {
        // witness condition: F1 o A^{-1} ~ F2, i.e. F1 ~ F2 o A
        let m = a.matrix();
        let mut ratio: Option<Felt> = None;
        for (p, &v1) in probes.iter().zip(&vals1) {
            let img = a.apply_point(f, p);
            let v2 = c2.poly().evaluate(f, &img);
            match (v1.is_zero(), v2.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    // evaluation on normalized representatives may differ
                    // by a point-dependent scalar of weight d; compare by
                    // re-evaluating on the raw image instead
                    let raw = [
                        f.add(
                            f.add(f.mul(m[0][0], p.coords()[0]), f.mul(m[0][1], p.coords()[1])),
                            f.mul(m[0][2], p.coords()[2]),
                        ),
                        f.add(
                            f.add(f.mul(m[1][0], p.coords()[0]), f.mul(m[1][1], p.coords()[1])),
                            f.mul(m[1][2], p.coords()[2]),
                        ),
                        f.add(
                            f.add(f.mul(m[2][0], p.coords()[0]), f.mul(m[2][1], p.coords()[1])),
                            f.mul(m[2][2], p.coords()[2]),
                        ),
                    ];
                    let v2 = c2.poly().evaluate_raw(f, raw);
                    if v2.is_zero() {
                        return false;
                    }
                    let r = f.div(v1, v2);
                    match ratio {
                        None => ratio = Some(r),
                        Some(prev) if prev == r => {}
                        _ => return false,
                    }
                }
            }
        }
        // exact check on survivors
        crate::hpoly::substitute(f, c1.poly(), a)
            .proportional_to(f, c2.poly())
            .is_some()
    })
}

/// Equivalence classes in the zero-sum three-term family of degree q-1.
#[derive(Clone, Debug)]
pub struct FamilyClasses {
    /// Normalized parameter triples (1, beta, gamma), beta ascending.
    pub triples: Vec<[Felt; 3]>,
    /// Class id of each triple, ids in order of first appearance.
    pub class_of: Vec<usize>,
    /// One representative triple per class (the first member).
    pub representatives: Vec<[Felt; 3]>,
}

impl FamilyClasses {
    pub fn nu(&self) -> usize {
        self.representatives.len()
    }
}

/// Partitions the family members by explicit pairwise equivalence search.
pub fn count_family_classes(
    f: &FieldSpec,
    plane: &Plane,
) -> Result<FamilyClasses, CurveError> {
    let q = f.q();
    if q < 4 {
        return Err(CurveError::InvalidFamilyParams(
            "the family needs q >= 4 for a nonzero-sum triple",
        ));
    }
    let mut triples = Vec::new();
    let mut curves = Vec::new();
    for b in 1..q {
        let beta = f.elt(b);
        let gamma = f.neg(f.add(f.one(), beta));
        if gamma.is_zero() {
            continue;
        }
        triples.push([f.one(), beta, gamma]);
        curves.push(family_catalog(
            f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta,
                gamma,
                require_zero_sum: true,
            },
        )?);
    }
    let n = curves.len();
    let mut class_of = alloc::vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        class_of[i] = id;
        representatives.push(triples[i]);
        for j in (i + 1)..n {
            if class_of[j] == usize::MAX
                && are_equivalent_curves(f, plane, &curves[i], &curves[j]).is_some()
            {
                class_of[j] = id;
            }
        }
    }
    Ok(FamilyClasses {
        triples,
        class_of,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{family_catalog, FamilyId, PlaneCurve};
    use crate::gf::FieldSpec;
    use crate::hpoly::HPoly;
    use crate::projplane::{PPoint, Plane, PointSet};
    use rand::{Rng, SeedableRng};

    fn random_projectivity(f: &FieldSpec, rng: &mut impl Rng) -> Projectivity {
        loop {
            let rows: [[u32; 3]; 3] =
                core::array::from_fn(|_| core::array::from_fn(|_| rng.gen_range(0..f.q())));
            if let Ok(p) = Projectivity::new(f, rows.map(|r| r.map(|i| f.elt(i)))) {
                return p;
            }
        }
    }

    fn random_set(f: &FieldSpec, rng: &mut impl Rng, k: usize) -> PointSet {
        use rand::seq::SliceRandom;
        let n = crate::projplane::plane_size(f.q());
        let mut idxs: Vec<u32> = (0..n as u32).collect();
        idxs.shuffle(rng);
        idxs.truncate(k);
        PointSet::from_indices(f.q(), idxs)
    }

    #[test]
    fn action_basics() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let id = Projectivity::identity(&f);
        let p = PPoint::from_indices(&f, 1, 2, 3);
        assert_eq!(id.apply_point(&f, &p), p);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random_projectivity(&f, &mut rng);
            let b = random_projectivity(&f, &mut rng);
            // left action on points
            let lhs = b.apply_point(&f, &a.apply_point(&f, &p));
            let rhs = b.compose(&f, &a).apply_point(&f, &p);
            assert_eq!(lhs, rhs);
            // inverse undoes
            assert_eq!(a.inverse(&f).apply_point(&f, &a.apply_point(&f, &p)), p);
            // incidence is preserved
            let l = crate::projplane::PLine::from_indices(&f, 1, 4, 2);
            let q = PPoint::from_indices(&f, 0, 1, 3);
            for pt in [p, q] {
                assert_eq!(
                    pt.on(&f, &l),
                    a.apply_point(&f, &pt).on(&f, &a.apply_line(&f, &l))
                );
            }
        }
    }

    #[test]
    fn n_q_invariant_under_apply() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let c = family_catalog(
            &f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta: f.one(),
                gamma: f.from_int(3),
                require_zero_sum: true,
            },
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let a = random_projectivity(&f, &mut rng);
            let moved = PlaneCurve::new(&f, a.apply_curve(&f, c.poly())).unwrap();
            assert_eq!(moved.n_q(), c.n_q());
            assert_eq!(a.apply_set(&f, c.points()), *moved.points());
        }
    }

    #[test]
    fn permutation_matrix_swaps_family_params() {
        let f = FieldSpec::make_field(7, 1).unwrap();
        let c = family_catalog(
            &f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta: f.elt(2),
                gamma: f.elt(4),
                require_zero_sum: true,
            },
        )
        .unwrap();
        // X <-> Y swap
        let swap = Projectivity::from_indices(&f, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        let moved = swap.apply_curve(&f, c.poly());
        let expect = HPoly::from_terms(
            &f,
            6,
            &[
                (6, 0, 0, f.elt(2)),
                (0, 6, 0, f.one()),
                (0, 0, 6, f.elt(4)),
            ],
        )
        .unwrap();
        assert!(moved.proportional_to(&f, &expect).is_some());
    }

    #[test]
    fn set_equivalence_constructed_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for (p, h) in [(3u32, 1u32), (2, 2), (5, 1), (7, 1), (2, 3)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let plane = Plane::new(&f);
            for _ in 0..8 {
                let k = rng.gen_range(1..=12.min(plane.size() - 1));
                let s = random_set(&f, &mut rng, k);
                let a = random_projectivity(&f, &mut rng);
                let moved = a.apply_set(&f, &s);
                let w = are_equivalent_sets(&f, &plane, &s, &moved)
                    .expect("constructed instances are equivalent");
                assert_eq!(w.apply_set(&f, &s), moved, "witness must verify");
            }
        }
    }

    #[test]
    fn set_equivalence_is_an_equivalence_relation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let s = random_set(&f, &mut rng, 9);
        // reflexive
        let w = are_equivalent_sets(&f, &plane, &s, &s).unwrap();
        assert_eq!(w.apply_set(&f, &s), s);
        // symmetric via the inverse witness
        let a = random_projectivity(&f, &mut rng);
        let t = a.apply_set(&f, &s);
        let w1 = are_equivalent_sets(&f, &plane, &s, &t).unwrap();
        assert_eq!(w1.inverse(&f).apply_set(&f, &t), s);
        // transitive via composition
        let b = random_projectivity(&f, &mut rng);
        let u = b.apply_set(&f, &t);
        let w2 = are_equivalent_sets(&f, &plane, &t, &u).unwrap();
        assert_eq!(w2.compose(&f, &w1).apply_set(&f, &s), u);
    }

    #[test]
    fn different_spectra_fast_reject() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        // 4 collinear points vs 4 points in general position
        let collinear = PointSet::from_points(
            &f,
            &[
                PPoint::from_indices(&f, 1, 0, 0),
                PPoint::from_indices(&f, 1, 0, 1),
                PPoint::from_indices(&f, 1, 0, 2),
                PPoint::from_indices(&f, 1, 0, 3),
            ],
        )
        .unwrap();
        let frame = PointSet::from_points(
            &f,
            &[
                PPoint::from_indices(&f, 1, 0, 0),
                PPoint::from_indices(&f, 0, 1, 0),
                PPoint::from_indices(&f, 0, 0, 1),
                PPoint::from_indices(&f, 1, 1, 1),
            ],
        )
        .unwrap();
        assert!(are_equivalent_sets(&f, &plane, &collinear, &frame).is_none());
    }

    #[test]
    fn degenerate_set_equivalence() {
        // empty, singleton, pair and collinear sets go through the same
        // plane-typed search
        let f = FieldSpec::make_field(3, 1).unwrap();
        let plane = Plane::new(&f);
        let empty = PointSet::from_indices(3, alloc::vec![]);
        assert!(are_equivalent_sets(&f, &plane, &empty, &empty).is_some());

        let s1 = PointSet::from_indices(3, alloc::vec![0]);
        let s2 = PointSet::from_indices(3, alloc::vec![7]);
        let w = are_equivalent_sets(&f, &plane, &s1, &s2).unwrap();
        assert_eq!(w.apply_set(&f, &s1), s2);

        let pair1 = PointSet::from_indices(3, alloc::vec![0, 5]);
        let pair2 = PointSet::from_indices(3, alloc::vec![2, 12]);
        let w = are_equivalent_sets(&f, &plane, &pair1, &pair2).unwrap();
        assert_eq!(w.apply_set(&f, &pair1), pair2);

        // three collinear points are equivalent to any other three
        let c1 = PointSet::from_points(
            &f,
            &[
                PPoint::from_indices(&f, 1, 0, 0),
                PPoint::from_indices(&f, 1, 0, 1),
                PPoint::from_indices(&f, 1, 0, 2),
            ],
        )
        .unwrap();
        let c2 = PointSet::from_points(
            &f,
            &[
                PPoint::from_indices(&f, 0, 1, 0),
                PPoint::from_indices(&f, 1, 1, 0),
                PPoint::from_indices(&f, 1, 2, 0),
            ],
        )
        .unwrap();
        let w = are_equivalent_sets(&f, &plane, &c1, &c2).unwrap();
        assert_eq!(w.apply_set(&f, &c1), c2);
    }

    #[test]
    fn hermitian_cubic_not_equivalent_to_diagonal_cubic() {
        let f = FieldSpec::make_field(2, 2).unwrap();
        let plane = Plane::new(&f);
        let h3 = family_catalog(&f, &FamilyId::Hermitian { n: 2 }).unwrap();
        // X^3 + a Y^3 + a^2 Z^3 with a the generator of GF(4)
        let a = f.elt(2);
        let a2 = f.mul(a, a);
        let calpha = PlaneCurve::new(
            &f,
            HPoly::from_terms(
                &f,
                3,
                &[(3, 0, 0, f.one()), (0, 3, 0, a), (0, 0, 3, a2)],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(h3.n_q(), 9);
        assert_eq!(calpha.n_q(), 9);
        assert!(are_equivalent_curves(&f, &plane, &h3, &calpha).is_none());
        // sanity: each is equivalent to itself moved by a projectivity
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let m = random_projectivity(&f, &mut rng);
        let moved = PlaneCurve::new(&f, m.apply_curve(&f, h3.poly())).unwrap();
        let w = are_equivalent_curves(&f, &plane, &h3, &moved).unwrap();
        assert!(w
            .apply_curve(&f, h3.poly())
            .proportional_to(&f, moved.poly())
            .is_some());
    }

    #[test]
    fn curve_equivalence_detects_shared_point_sets() {
        // two inequivalent curves with the same rational point set: the
        // full plane vanishing polynomials X^qY - XY^q and X^qZ - XZ^q
        let f = FieldSpec::make_field(3, 1).unwrap();
        let plane = Plane::new(&f);
        let q = f.q();
        let c1 = PlaneCurve::new(
            &f,
            HPoly::from_terms(
                &f,
                q + 1,
                &[(q, 1, 0, f.one()), (1, q, 0, f.neg(f.one()))],
            )
            .unwrap(),
        )
        .unwrap();
        let c2 = PlaneCurve::new(
            &f,
            HPoly::from_terms(
                &f,
                q + 1,
                &[(q, 0, 1, f.one()), (1, 0, q, f.neg(f.one()))],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(c1.points(), c2.points()); // both vanish everywhere
        // they are equivalent: swapping Y and Z maps one to the other
        let w = are_equivalent_curves(&f, &plane, &c1, &c2).unwrap();
        assert!(w
            .apply_curve(&f, c1.poly())
            .proportional_to(&f, c2.poly())
            .is_some());
    }

    #[test]
    fn family_class_counts_small() {
        for (p, h, expect) in [(5u32, 1u32, 1usize), (7, 1, 2), (2, 3, 1), (3, 2, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let plane = Plane::new(&f);
            let classes = count_family_classes(&f, &plane).unwrap();
            assert_eq!(classes.nu(), expect, "nu for q = {}", f.q());
            // every member is assigned and representatives are members
            assert!(classes.class_of.iter().all(|&c| c < classes.nu()));
        }
    }
}
