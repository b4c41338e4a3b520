//! Projective [n,3,d]_q codes built from plane point sets: generator
//! matrices, brute-force weight enumerators, and the dictionary between
//! arc spectra and weight distributions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arcs::ArcSpectrum;
use crate::gf::{FieldSpec, Felt};
use crate::projplane::{PPoint, Plane, PointSet};

/// Brute-force codeword enumeration is capped at this field order; beyond
/// it the spectrum dictionary is the intended route.
pub const WEIGHT_BRUTE_FORCE_MAX_Q: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    TooFewPoints(usize),
    FieldMismatch,
    CapExceeded(u32),
    SizeMismatch { spectrum_n: usize, code_n: usize },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::TooFewPoints(n) => write!(f, "need at least 3 points, got {n}"),
            CodeError::FieldMismatch => write!(f, "operands from different fields"),
            CodeError::CapExceeded(q) => write!(
                f,
                "codeword enumeration capped at q <= {WEIGHT_BRUTE_FORCE_MAX_Q}, got q = {q}"
            ),
            CodeError::SizeMismatch { spectrum_n, code_n } => write!(
                f,
                "spectrum is for a {spectrum_n}-point set but the code has {code_n} columns"
            ),
        }
    }
}

/// A projective 3-row code: columns are normalized representatives of
/// pairwise distinct points, in point-index order. The cached minimum
/// distance comes from the largest line intersection of the column set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode3 {
    q: u32,
    n: usize,
    d: usize,
    columns: Vec<[Felt; 3]>,
}

impl LinearCode3 {
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimum distance, as n minus the largest line intersection.
    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn columns(&self) -> &[[Felt; 3]] {
        &self.columns
    }

    /// The column points.
    pub fn column_points(&self, f: &FieldSpec) -> Vec<PPoint> {
        self.columns
            .iter()
            .map(|c| PPoint::new(f, *c).expect("columns are normalized points"))
            .collect()
    }

    /// Generator matrix rows (3 x n), row-major.
    pub fn generator_rows(&self) -> [Vec<Felt>; 3] {
        let mut rows: [Vec<Felt>; 3] = [
            Vec::with_capacity(self.n),
            Vec::with_capacity(self.n),
            Vec::with_capacity(self.n),
        ];
        for col in &self.columns {
            for (r, row) in rows.iter_mut().enumerate() {
                row.push(col[r]);
            }
        }
        rows
    }
}

/// Weight distribution c_0 .. c_n, counting messages by codeword weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    c: Vec<u64>,
}

impl WeightEnumerator {
    pub fn from_counts(c: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator { c }
    }

    #[inline]
    pub fn counts(&self) -> &[u64] {
        &self.c
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.c.len() - 1
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        self.c.iter().skip(1).position(|&x| x != 0).map(|i| i + 1)
    }

    pub fn total(&self) -> u64 {
        self.c.iter().sum()
    }
}

/// Builds the projective code of a point set; columns in point-index
/// order, d = n - (largest line intersection).
pub fn code_from_arc(
    f: &FieldSpec,
    plane: &Plane,
    s: &PointSet,
) -> Result<LinearCode3, CodeError> {
    if s.q() != f.q() || plane.q() != f.q() {
        return Err(CodeError::FieldMismatch);
    }
    if s.len() < 3 {
        return Err(CodeError::TooFewPoints(s.len()));
    }
    let sp = crate::arcs::spectrum(plane, s);
    let n = s.len();
    let d = n - sp.n();
    let columns = s.points(f).iter().map(|p| p.coords()).collect();
    Ok(LinearCode3 {
        q: f.q(),
        n,
        d,
        columns,
    })
}

/// Exact weight enumerator by running all q^3 message vectors through the
/// generator matrix.
pub fn weight_enumerator(
    f: &FieldSpec,
    code: &LinearCode3,
) -> Result<WeightEnumerator, CodeError> {
    if code.q != f.q() {
        return Err(CodeError::FieldMismatch);
    }
    if f.q() > WEIGHT_BRUTE_FORCE_MAX_Q {
        return Err(CodeError::CapExceeded(f.q()));
    }
    let mut c = vec![0u64; code.n + 1];
    let elements: Vec<Felt> = f.elements_by_index().collect();
    for &m0 in &elements {
        for &m1 in &elements {
            for &m2 in &elements {
                let mut w = 0usize;
                for col in &code.columns {
                    let dot = f.add(
                        f.add(f.mul(m0, col[0]), f.mul(m1, col[1])),
                        f.mul(m2, col[2]),
                    );
                    if !dot.is_zero() {
                        w += 1;
                    }
                }
                c[w] += 1;
            }
        }
    }
    Ok(WeightEnumerator { c })
}

/// The weight enumerator implied by the arc spectrum:
/// c_0 = 1 and c_{n-i} = (q-1) a_i.
pub fn spectrum_derived_enumerator(sp: &ArcSpectrum) -> WeightEnumerator {
    let n = sp.k();
    let q = sp.q() as u64;
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for (i, &ai) in sp.a().iter().enumerate() {
        if ai != 0 && i <= n {
            c[n - i] += (q - 1) * ai;
        }
    }
    WeightEnumerator { c }
}

/// Verifies (q-1)(a_0, ..., a_{n-d}) = (c_n, ..., c_d) componentwise for a
/// code and the spectrum of its column set.
pub fn spectrum_weight_check(
    f: &FieldSpec,
    code: &LinearCode3,
    we: &WeightEnumerator,
    sp: &ArcSpectrum,
) -> Result<bool, CodeError> {
    if sp.k() != code.n || we.n() != code.n {
        return Err(CodeError::SizeMismatch {
            spectrum_n: sp.k(),
            code_n: code.n,
        });
    }
    let q = f.q() as u64;
    let n = code.n;
    let d = code.d;
    for i in 0..=(n - d) {
        let ai = sp.a().get(i).copied().unwrap_or(0);
        if we.counts()[n - i] != (q - 1) * ai {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{family_catalog, FamilyId};
    use crate::gf::FieldSpec;
    use crate::projplane::{PPoint, Plane};

    fn family_code(f: &FieldSpec, plane: &Plane) -> (LinearCode3, ArcSpectrum, PointSet) {
        for b in 1..f.q() {
            let beta = f.elt(b);
            let gamma = f.neg(f.add(f.one(), beta));
            if gamma.is_zero() {
                continue;
            }
            let s = family_catalog(
                f,
                &FamilyId::Fermat {
                    alpha: f.one(),
                    beta,
                    gamma,
                    require_zero_sum: true,
                },
            )
            .unwrap()
            .points()
            .clone();
            let sp = crate::arcs::spectrum(plane, &s);
            let code = code_from_arc(f, plane, &s).unwrap();
            return (code, sp, s);
        }
        unreachable!()
    }

    #[test]
    fn family_code_parameters() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let (code, sp, _) = family_code(&f, &plane);
        // [16, 3, 12]_5: n - d = 4 is the largest secant
        assert_eq!(code.n(), 16);
        assert_eq!(code.d(), 12);
        assert_eq!(sp.n(), 4);
    }

    #[test]
    fn weight_enumerator_family_f5() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let (code, sp, _) = family_code(&f, &plane);
        let we = weight_enumerator(&f, &code).unwrap();
        assert_eq!(we.counts()[0], 1);
        assert_eq!(we.total(), 125); // q^3 messages
        assert_eq!(we.min_distance(), Some(code.d()));
        // nonzero weights only at n, n-3, n-4 per the (12,16,3) spectrum
        for (w, &c) in we.counts().iter().enumerate() {
            if c == 0 {
                continue;
            }
            assert!(
                w == 0 || w == 16 || w == 13 || w == 12,
                "unexpected weight {w}"
            );
        }
        // full dictionary agreement
        assert_eq!(we, spectrum_derived_enumerator(&sp));
        assert!(spectrum_weight_check(&f, &code, &we, &sp).unwrap());
    }

    #[test]
    fn dictionary_on_random_sets() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for (p, h) in [(3u32, 1u32), (2, 2), (5, 1), (7, 1)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let plane = Plane::new(&f);
            let all: Vec<u32> = (0..plane.size() as u32).collect();
            for _ in 0..12 {
                let mut idxs = all.clone();
                idxs.shuffle(&mut rng);
                let k = rng.gen_range(3..=all.len().min(20));
                idxs.truncate(k);
                let s = PointSet::from_indices(f.q(), idxs);
                let sp = crate::arcs::spectrum(&plane, &s);
                let code = code_from_arc(&f, &plane, &s).unwrap();
                let brute = weight_enumerator(&f, &code).unwrap();
                let derived = spectrum_derived_enumerator(&sp);
                assert_eq!(brute, derived, "q={} k={}", f.q(), k);
                assert!(spectrum_weight_check(&f, &code, &brute, &sp).unwrap());
                // a_i = 0 => c_{n-i} = 0 on the relation's range
                for (i, &ai) in sp.a().iter().enumerate() {
                    if ai == 0 && i <= code.n() - code.d() {
                        assert_eq!(brute.counts()[code.n() - i], 0);
                    }
                }
            }
        }
    }

    #[test]
    fn collinear_triple() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let pts = [
            PPoint::from_indices(&f, 1, 0, 0),
            PPoint::from_indices(&f, 1, 0, 1),
            PPoint::from_indices(&f, 1, 0, 2),
        ];
        let s = PointSet::from_points(&f, &pts).unwrap();
        let code = code_from_arc(&f, &plane, &s).unwrap();
        // all three on one line: d = n - (max line meet) = 0
        assert_eq!(code.d(), 0);
        let we = weight_enumerator(&f, &code).unwrap();
        assert_eq!(we.total(), 125);
    }

    #[test]
    fn error_paths() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let s = PointSet::from_points(&f, &[PPoint::from_indices(&f, 1, 0, 0)]).unwrap();
        assert_eq!(
            code_from_arc(&f, &plane, &s),
            Err(CodeError::TooFewPoints(1))
        );

        let (code, sp, _) = family_code(&f, &plane);
        let we = weight_enumerator(&f, &code).unwrap();
        let f7 = FieldSpec::make_field(7, 1).unwrap();
        let plane7 = Plane::new(&f7);
        let (code7, _, _) = family_code(&f7, &plane7);
        assert!(matches!(
            spectrum_weight_check(&f, &code7, &we, &sp),
            Err(CodeError::SizeMismatch { .. })
        ));
    }
}
