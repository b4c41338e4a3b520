//! Points, lines and incidence in PG(2,q).
//!
//! Representatives are normalized so the leftmost nonzero coordinate is 1,
//! which gives every point and line a canonical index:
//! `(1:y:z) -> y*q + z`, `(0:1:z) -> q^2 + z`, `(0:0:1) -> q^2 + q`.
//! Lines use the same scheme on dual coordinates. Enumeration order is
//! index order throughout.

use alloc::vec::Vec;
use core::fmt;

use crate::gf::{FieldSpec, Felt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneError {
    ZeroVector,
    EqualPoints,
    DuplicatePoint,
    FieldMismatch,
}

impl fmt::Display for PlaneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneError::ZeroVector => write!(f, "all coordinates are zero"),
            PlaneError::EqualPoints => write!(f, "the two points coincide"),
            PlaneError::DuplicatePoint => write!(f, "duplicate point in set"),
            PlaneError::FieldMismatch => write!(f, "coordinates from a different field"),
        }
    }
}

/// Number of points (and lines) of PG(2,q).
#[inline]
pub fn plane_size(q: u32) -> usize {
    (q as usize) * (q as usize) + q as usize + 1
}

fn normalize(f: &FieldSpec, mut v: [Felt; 3]) -> Result<[Felt; 3], PlaneError> {
    let lead = v.iter().position(|c| !c.is_zero()).ok_or(PlaneError::ZeroVector)?;
    if v[lead] != f.one() {
        let s = f.inv(v[lead]);
        for c in v.iter_mut() {
            *c = f.mul(s, *c);
        }
    }
    Ok(v)
}

fn index_of(f: &FieldSpec, v: &[Felt; 3]) -> usize {
    let q = f.q() as usize;
    if !v[0].is_zero() {
        v[1].index() as usize * q + v[2].index() as usize
    } else if !v[1].is_zero() {
        q * q + v[2].index() as usize
    } else {
        q * q + q
    }
}

fn from_index(f: &FieldSpec, idx: usize) -> [Felt; 3] {
    let q = f.q() as usize;
    if idx < q * q {
        [
            f.one(),
            f.elt((idx / q) as u32),
            f.elt((idx % q) as u32),
        ]
    } else if idx < q * q + q {
        [f.zero(), f.one(), f.elt((idx - q * q) as u32)]
    } else {
        debug_assert_eq!(idx, q * q + q);
        [f.zero(), f.zero(), f.one()]
    }
}

/// A point of PG(2,q), normalized.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PPoint {
    coords: [Felt; 3],
}

impl PPoint {
    pub fn new(f: &FieldSpec, coords: [Felt; 3]) -> Result<PPoint, PlaneError> {
        for c in &coords {
            if c.field_order() != f.q() {
                return Err(PlaneError::FieldMismatch);
            }
        }
        Ok(PPoint {
            coords: normalize(f, coords)?,
        })
    }

    /// Point from raw coordinate indices; panics on the zero vector.
    pub fn from_indices(f: &FieldSpec, x: u32, y: u32, z: u32) -> PPoint {
        PPoint::new(f, [f.elt(x), f.elt(y), f.elt(z)]).expect("nonzero coordinate triple")
    }

    #[inline]
    pub fn coords(&self) -> [Felt; 3] {
        self.coords
    }

    #[inline]
    pub fn index(&self, f: &FieldSpec) -> usize {
        index_of(f, &self.coords)
    }

    pub fn from_index(f: &FieldSpec, idx: usize) -> PPoint {
        PPoint {
            coords: from_index(f, idx),
        }
    }

    /// Incidence test P in l.
    #[inline]
    pub fn on(&self, f: &FieldSpec, l: &PLine) -> bool {
        incident(f, self, l)
    }

    /// Text form "(x:y:z)".
    pub fn render(&self) -> alloc::string::String {
        use alloc::format;
        format!(
            "({}:{}:{})",
            self.coords[0].index(),
            self.coords[1].index(),
            self.coords[2].index()
        )
    }
}

/// A line of PG(2,q), as normalized dual coordinates: ax + by + cz = 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PLine {
    coords: [Felt; 3],
}

impl PLine {
    pub fn new(f: &FieldSpec, coords: [Felt; 3]) -> Result<PLine, PlaneError> {
        for c in &coords {
            if c.field_order() != f.q() {
                return Err(PlaneError::FieldMismatch);
            }
        }
        Ok(PLine {
            coords: normalize(f, coords)?,
        })
    }

    pub fn from_indices(f: &FieldSpec, a: u32, b: u32, c: u32) -> PLine {
        PLine::new(f, [f.elt(a), f.elt(b), f.elt(c)]).expect("nonzero dual triple")
    }

    #[inline]
    pub fn coords(&self) -> [Felt; 3] {
        self.coords
    }

    #[inline]
    pub fn index(&self, f: &FieldSpec) -> usize {
        index_of(f, &self.coords)
    }

    pub fn from_index(f: &FieldSpec, idx: usize) -> PLine {
        PLine {
            coords: from_index(f, idx),
        }
    }

    /// Text form "[a:b:c]".
    pub fn render(&self) -> alloc::string::String {
        use alloc::format;
        format!(
            "[{}:{}:{}]",
            self.coords[0].index(),
            self.coords[1].index(),
            self.coords[2].index()
        )
    }
}

#[inline]
pub fn incident(f: &FieldSpec, p: &PPoint, l: &PLine) -> bool {
    let mut acc = f.zero();
    for i in 0..3 {
        acc = f.add(acc, f.mul(p.coords[i], l.coords[i]));
    }
    acc.is_zero()
}

fn cross(f: &FieldSpec, a: &[Felt; 3], b: &[Felt; 3]) -> [Felt; 3] {
    [
        f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
        f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
        f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
    ]
}

/// The unique line through two distinct points.
pub fn line_through(f: &FieldSpec, p: &PPoint, q: &PPoint) -> Result<PLine, PlaneError> {
    let c = cross(f, &p.coords, &q.coords);
    PLine::new(f, c).map_err(|_| PlaneError::EqualPoints)
}

/// The unique intersection point of two distinct lines.
pub fn meet(f: &FieldSpec, l: &PLine, m: &PLine) -> Result<PPoint, PlaneError> {
    let c = cross(f, &l.coords, &m.coords);
    PPoint::new(f, c).map_err(|_| PlaneError::EqualPoints)
}

/// All q^2+q+1 points in enumeration order.
pub fn enumerate_points(f: &FieldSpec) -> Vec<PPoint> {
    (0..plane_size(f.q())).map(|i| PPoint::from_index(f, i)).collect()
}

/// All q^2+q+1 lines in enumeration order.
pub fn enumerate_lines(f: &FieldSpec) -> Vec<PLine> {
    (0..plane_size(f.q())).map(|i| PLine::from_index(f, i)).collect()
}

/// Streaming point iterator, for large fields where materializing the
/// full plane is wasteful.
pub fn points_iter(f: &FieldSpec) -> impl Iterator<Item = PPoint> + '_ {
    (0..plane_size(f.q())).map(move |i| PPoint::from_index(f, i))
}

/// Two distinct points spanning the null space of the dual vector, in a
/// deterministic order (not necessarily index-sorted).
fn span_of_line(f: &FieldSpec, l: &PLine) -> ([Felt; 3], [Felt; 3]) {
    let [a, b, c] = l.coords;
    let o = f.zero();
    let i = f.one();
    if a.is_zero() && b.is_zero() {
        // z = 0
        ([i, o, o], [o, i, o])
    } else if a.is_zero() {
        // by + cz = 0, b = 1 after normalization
        ([i, o, o], [o, f.neg(c), b])
    } else {
        // a = 1: x = -(by + cz)
        ([f.neg(b), i, o], [f.neg(c), o, i])
    }
}

/// The q+1 points of a line, sorted by point index.
pub fn points_on_line(f: &FieldSpec, l: &PLine) -> Vec<PPoint> {
    let (u, v) = span_of_line(f, l);
    let mut pts = Vec::with_capacity(f.q() as usize + 1);
    pts.push(PPoint::new(f, v).unwrap());
    for t in f.elements_by_index() {
        let w = [
            f.add(u[0], f.mul(t, v[0])),
            f.add(u[1], f.mul(t, v[1])),
            f.add(u[2], f.mul(t, v[2])),
        ];
        pts.push(PPoint::new(f, w).unwrap());
    }
    pts.sort_unstable_by_key(|p| p.index(f));
    debug_assert!(pts.windows(2).all(|w| w[0] != w[1]));
    pts
}

/// The q+1 lines through a point, sorted by line index.
pub fn pencil(f: &FieldSpec, p: &PPoint) -> Vec<PLine> {
    // Dual of points_on_line: lines through P are the null space of P.
    let dual = PLine { coords: p.coords };
    let (u, v) = span_of_line(f, &dual);
    let mut lines = Vec::with_capacity(f.q() as usize + 1);
    lines.push(PLine::new(f, v).unwrap());
    for t in f.elements_by_index() {
        let w = [
            f.add(u[0], f.mul(t, v[0])),
            f.add(u[1], f.mul(t, v[1])),
            f.add(u[2], f.mul(t, v[2])),
        ];
        lines.push(PLine::new(f, w).unwrap());
    }
    lines.sort_unstable_by_key(|l| l.index(f));
    lines
}

/// Materialized plane: points, lines and per-line point indices. Used by
/// the spectrum loops; build once per field.
pub struct Plane {
    q: u32,
    points: Vec<PPoint>,
    lines: Vec<PLine>,
    line_points: Vec<Vec<u32>>,
}

impl Plane {
    pub fn new(f: &FieldSpec) -> Plane {
        let points = enumerate_points(f);
        let lines = enumerate_lines(f);
        let line_points = lines
            .iter()
            .map(|l| {
                points_on_line(f, l)
                    .into_iter()
                    .map(|p| p.index(f) as u32)
                    .collect()
            })
            .collect();
        Plane {
            q: f.q(),
            points,
            lines,
            line_points,
        }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn points(&self) -> &[PPoint] {
        &self.points
    }

    #[inline]
    pub fn lines(&self) -> &[PLine] {
        &self.lines
    }

    /// Indices of the q+1 points on line `li`, sorted ascending.
    #[inline]
    pub fn points_of_line(&self, li: usize) -> &[u32] {
        &self.line_points[li]
    }
}

/// An immutable subset of PG(2,q) points, stored as sorted unique indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    q: u32,
    indices: Vec<u32>,
}

impl PointSet {
    pub fn from_points(f: &FieldSpec, pts: &[PPoint]) -> Result<PointSet, PlaneError> {
        let mut indices: Vec<u32> = pts.iter().map(|p| p.index(f) as u32).collect();
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(PlaneError::DuplicatePoint);
        }
        Ok(PointSet {
            q: f.q(),
            indices,
        })
    }

    /// From indices, deduplicating.
    pub fn from_indices(q: u32, mut indices: Vec<u32>) -> PointSet {
        indices.sort_unstable();
        indices.dedup();
        PointSet { q, indices }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    #[inline]
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    #[inline]
    pub fn contains_index(&self, idx: u32) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, f: &FieldSpec, p: &PPoint) -> bool {
        self.contains_index(p.index(f) as u32)
    }

    pub fn points(&self, f: &FieldSpec) -> Vec<PPoint> {
        self.indices
            .iter()
            .map(|&i| PPoint::from_index(f, i as usize))
            .collect()
    }

    /// Membership bitmap over the whole plane.
    pub fn bitset(&self) -> Vec<u64> {
        let n = plane_size(self.q);
        let mut bits = alloc::vec![0u64; (n + 63) / 64];
        for &i in &self.indices {
            bits[i as usize / 64] |= 1 << (i % 64);
        }
        bits
    }

    /// The complement within PG(2,q).
    pub fn complement(&self) -> PointSet {
        let n = plane_size(self.q);
        let mut out = Vec::with_capacity(n - self.indices.len());
        let mut it = self.indices.iter().copied().peekable();
        for i in 0..n as u32 {
            if it.peek() == Some(&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        PointSet {
            q: self.q,
            indices: out,
        }
    }
}

#[inline]
pub fn bitset_contains(bits: &[u64], idx: u32) -> bool {
    bits[idx as usize / 64] & (1 << (idx % 64)) != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn point_counts() {
        for (p, h, expect) in [(5u32, 1u32, 31usize), (7, 1, 57), (2, 2, 21)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let pts = enumerate_points(&f);
            assert_eq!(pts.len(), expect);
            // indices round-trip and are unique
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(p.index(&f), i);
                assert_eq!(&PPoint::from_index(&f, i), p);
            }
        }
        // q=4: 16 points have x != 0
        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let affine = enumerate_points(&f4)
            .iter()
            .filter(|p| !p.coords()[0].is_zero())
            .count();
        assert_eq!(affine, 16);
    }

    #[test]
    fn line_through_examples() {
        let f = FieldSpec::make_field(7, 1).unwrap();
        let p = PPoint::from_indices(&f, 1, 0, 0);
        let q = PPoint::from_indices(&f, 0, 1, 0);
        assert_eq!(line_through(&f, &p, &q).unwrap(), PLine::from_indices(&f, 0, 0, 1));

        // over F_7: (1:1:3), (1:1:5) span the line [1:6:0]
        let a = PPoint::from_indices(&f, 1, 1, 3);
        let b = PPoint::from_indices(&f, 1, 1, 5);
        let l = line_through(&f, &a, &b).unwrap();
        assert_eq!(l, PLine::from_indices(&f, 1, 6, 0));
        assert!(a.on(&f, &l) && b.on(&f, &l));

        assert_eq!(line_through(&f, &a, &a), Err(PlaneError::EqualPoints));
    }

    #[test]
    fn pencil_properties() {
        for (p, h) in [(5u32, 1u32), (2, 3), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let q = f.q() as usize;
            for pt in enumerate_points(&f) {
                let pen = pencil(&f, &pt);
                assert_eq!(pen.len(), q + 1);
                for l in &pen {
                    assert!(pt.on(&f, l));
                }
                // pencil lines cover the whole plane
                let mut covered = alloc::collections::BTreeSet::new();
                for l in &pen {
                    for m in points_on_line(&f, l) {
                        covered.insert(m.index(&f));
                    }
                }
                assert_eq!(covered.len(), plane_size(f.q()));
                // two distinct pencil lines meet only at the point
                for (i, l1) in pen.iter().enumerate() {
                    for l2 in &pen[i + 1..] {
                        assert_eq!(meet(&f, l1, l2).unwrap(), pt);
                    }
                }
            }
        }
    }

    #[test]
    fn duality_and_line_meets() {
        for (p, h) in [(2u32, 2u32), (7, 1), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let pts = enumerate_points(&f);
            let lines = enumerate_lines(&f);
            // duality of the incidence form
            for pt in pts.iter().take(12) {
                for l in lines.iter().take(12) {
                    let swapped_p = PPoint { coords: l.coords };
                    let swapped_l = PLine { coords: pt.coords };
                    assert_eq!(incident(&f, pt, l), incident(&f, &swapped_p, &swapped_l));
                }
            }
            // every pair of distinct lines meets in exactly one point
            for (i, l1) in lines.iter().enumerate() {
                for l2 in &lines[i + 1..] {
                    let common = points_on_line(&f, l1)
                        .iter()
                        .filter(|p| p.on(&f, l2))
                        .count();
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn plane_line_point_lists() {
        let f = FieldSpec::make_field(3, 2).unwrap();
        let plane = Plane::new(&f);
        for (li, l) in plane.lines().iter().enumerate() {
            let idxs = plane.points_of_line(li);
            assert_eq!(idxs.len(), f.q() as usize + 1);
            for &pi in idxs {
                assert!(plane.points()[pi as usize].on(&f, l));
            }
        }
    }

    #[test]
    fn point_set_basics() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let a = PPoint::from_indices(&f, 1, 2, 3);
        let b = PPoint::from_indices(&f, 0, 1, 4);
        let s = PointSet::from_points(&f, &[a, b]).unwrap();
        assert!(s.contains(&f, &a) && s.contains(&f, &b));
        assert_eq!(s.complement().len(), 31 - 2);
        // scaled duplicate is rejected
        let a2 = PPoint::new(&f, [f.elt(2), f.elt(4), f.elt(1)]).unwrap(); // 2*(1,2,3)
        assert_eq!(a2, a);
        assert_eq!(
            PointSet::from_points(&f, &[a, a2]),
            Err(PlaneError::DuplicatePoint)
        );
    }
}
