//! (k,n)-arc machinery: line-intersection spectra, per-point line
//! profiles, the complement set Z of a curve, and the executable forms of
//! the counting lemmas used in the degree-(q-1) classification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::curve::PlaneCurve;
use crate::gf::FieldSpec;
use crate::projplane::{bitset_contains, pencil, PLine, PPoint, Plane, PointSet};

/// Line-intersection spectrum of a point set: a[i] counts the lines
/// meeting the set in exactly i points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSpectrum {
    q: u32,
    a: Vec<u64>,
    k: usize,
}

impl ArcSpectrum {
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Counts a_0 .. a_{q+1}.
    #[inline]
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// The set size k.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest line intersection (the arc parameter n); 0 for the empty set.
    pub fn n(&self) -> usize {
        self.a.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    /// Smallest i with a_i nonzero.
    pub fn k0(&self) -> usize {
        self.a.iter().position(|&c| c != 0).unwrap_or(0)
    }

    /// The double-counting identities: sum a_i = q^2+q+1,
    /// sum i*a_i = k(q+1), sum i(i-1)*a_i = k(k-1).
    pub fn identities_hold(&self) -> bool {
        let q = self.q as u64;
        let k = self.k as u64;
        let s0: u64 = self.a.iter().sum();
        let s1: u64 = self.a.iter().enumerate().map(|(i, &c)| i as u64 * c).sum();
        let s2: u64 = self
            .a
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64) * (i as u64).saturating_sub(1) * c)
            .sum();
        s0 == q * q + q + 1 && s1 == k * (q + 1) && s2 == k * k.saturating_sub(1)
    }
}

/// Per-line intersection counts, index-aligned with `plane.lines()`.
pub fn line_counts(plane: &Plane, s: &PointSet) -> Vec<u16> {
    let bits = s.bitset();
    (0..plane.lines().len())
        .map(|li| {
            plane
                .points_of_line(li)
                .iter()
                .filter(|&&pi| bitset_contains(&bits, pi))
                .count() as u16
        })
        .collect()
}

/// Exact spectrum over all q^2+q+1 lines.
pub fn spectrum(plane: &Plane, s: &PointSet) -> ArcSpectrum {
    assert_eq!(plane.q(), s.q(), "plane and set fields differ");
    let q = plane.q();
    let mut a = vec![0u64; q as usize + 2];
    for c in line_counts(plane, s) {
        a[c as usize] += 1;
    }
    let sp = ArcSpectrum { q, a, k: s.len() };
    debug_assert!(sp.identities_hold());
    sp
}

/// The per-point profile psi_i(P) = number of i-lines through P, with the
/// lines themselves retained per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointType {
    psi: Vec<u32>,
    lines_by_count: Vec<Vec<PLine>>,
}

impl PointType {
    /// psi_0 .. psi_{q+1}.
    #[inline]
    pub fn psi(&self) -> &[u32] {
        &self.psi
    }

    #[inline]
    pub fn psi_at(&self, i: usize) -> u32 {
        self.psi[i]
    }

    /// The i-lines through the point.
    pub fn lines_with_count(&self, i: usize) -> &[PLine] {
        &self.lines_by_count[i]
    }

    /// Renders the type as i1^r1 ... it^rt, descending i; classes with a
    /// zero count are omitted (so 0^r appears exactly when psi_0 > 0).
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for i in (0..self.psi.len()).rev() {
            if self.psi[i] != 0 {
                parts.push(format!("{}^{}", i, self.psi[i]));
            }
        }
        parts.join(" ")
    }
}

/// Profile of a point with respect to a set (the point itself may or may
/// not belong to the set).
pub fn point_type(f: &FieldSpec, plane: &Plane, s: &PointSet, p: &PPoint) -> PointType {
    let q = f.q();
    let bits = s.bitset();
    let mut psi = vec![0u32; q as usize + 2];
    let mut lines_by_count = vec![Vec::new(); q as usize + 2];
    for l in pencil(f, p) {
        let li = l.index(f);
        let count = plane
            .points_of_line(li)
            .iter()
            .filter(|&&pi| bitset_contains(&bits, pi))
            .count();
        psi[count] += 1;
        lines_by_count[count].push(l);
    }
    debug_assert_eq!(psi.iter().sum::<u32>(), q + 1);
    PointType {
        psi,
        lines_by_count,
    }
}

/// Z(C): the rational points of the plane not on the curve.
pub fn complement_zset(c: &PlaneCurve) -> PointSet {
    c.points().complement()
}

/// One named predicate outcome in a lemma report.
#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Report of the arc-level lemma predicates for a point set. Intended for
/// sets of size (q-1)^2; the identity predicates are parameterized by the
/// actual k. Failures are entries, not errors.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&LemmaCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

pub fn verify_arc_lemmas(f: &FieldSpec, plane: &Plane, s: &PointSet) -> LemmaReport {
    let q = f.q() as u64;
    let sp = spectrum(plane, s);
    let a = sp.a();
    let k = sp.k() as u64;
    let k0 = sp.k0() as u64;
    let mut checks = Vec::new();

    // The three double-counting identities.
    let s0: u64 = a.iter().sum();
    checks.push(LemmaCheck {
        name: "sum_a_i",
        pass: s0 == q * q + q + 1,
        detail: format!("sum a_i = {s0}, plane has {} lines", q * q + q + 1),
    });
    let s1: u64 = a.iter().enumerate().map(|(i, &c)| i as u64 * c).sum();
    checks.push(LemmaCheck {
        name: "sum_i_a_i",
        pass: s1 == k * (q + 1),
        detail: format!("sum i*a_i = {s1}, k(q+1) = {}", k * (q + 1)),
    });
    let s2: u64 = a
        .iter()
        .enumerate()
        .map(|(i, &c)| i as u64 * (i as u64).saturating_sub(1) * c)
        .sum();
    checks.push(LemmaCheck {
        name: "sum_i_i1_a_i",
        pass: s2 == k * k.saturating_sub(1),
        detail: format!("sum i(i-1)*a_i = {s2}, k(k-1) = {}", k * k.saturating_sub(1)),
    });

    // Through every point of the set, two lines counting i and j points
    // must satisfy i + j >= q.
    let counts = line_counts(plane, s);
    let mut min_pair_sum = u64::MAX;
    for p in s.points(f) {
        let pencil_counts: Vec<u64> = pencil(f, &p)
            .iter()
            .map(|l| counts[l.index(f)] as u64)
            .collect();
        for (x, &ci) in pencil_counts.iter().enumerate() {
            for &cj in &pencil_counts[x + 1..] {
                min_pair_sum = min_pair_sum.min(ci + cj);
            }
        }
    }
    checks.push(LemmaCheck {
        name: "secant_pair_sums",
        pass: s.is_empty() || min_pair_sum >= q,
        detail: format!("min i+j over line pairs at set points = {min_pair_sum}, need >= {q}"),
    });

    // psi_{q-1}(P) >= 3 at every set point, and the induced a_{q-1} bound.
    let mut min_psi = u32::MAX;
    for p in s.points(f) {
        let t = point_type(f, plane, s, &p);
        min_psi = min_psi.min(t.psi_at(q as usize - 1));
    }
    checks.push(LemmaCheck {
        name: "psi_qm1_at_least_3",
        pass: s.is_empty() || min_psi >= 3,
        detail: format!("min psi_(q-1) over set points = {min_psi}"),
    });
    checks.push(LemmaCheck {
        name: "a_qm1_at_least_3qm1",
        pass: a[q as usize - 1] >= 3 * (q - 1),
        detail: format!("a_(q-1) = {}, need >= {}", a[q as usize - 1], 3 * (q - 1)),
    });

    // k0 bound.
    checks.push(LemmaCheck {
        name: "k0_at_most_q_minus_4",
        pass: k0 + 4 <= q,
        detail: format!("k0 = {k0}, need <= {}", q as i64 - 4),
    });

    // sum (i-k0)(i-q+2) a_i = 3(q-1)^2 - 3 k0, over i = k0..q-1.
    let lhs: i64 = a
        .iter()
        .enumerate()
        .take(q as usize)
        .skip(k0 as usize)
        .map(|(i, &c)| (i as i64 - k0 as i64) * (i as i64 - q as i64 + 2) * c as i64)
        .sum();
    let rhs = 3 * (q as i64 - 1) * (q as i64 - 1) - 3 * k0 as i64;
    checks.push(LemmaCheck {
        name: "weighted_spectrum_identity",
        pass: lhs == rhs,
        detail: format!("sum (i-k0)(i-q+2)a_i = {lhs}, expected {rhs}"),
    });
    checks.push(LemmaCheck {
        name: "a_qm1_weighted_lower_bound",
        pass: (q as i64 - k0 as i64 - 1) * a[q as usize - 1] as i64 >= rhs,
        detail: format!(
            "(q-k0-1)a_(q-1) = {}, need >= {rhs}",
            (q as i64 - k0 as i64 - 1) * a[q as usize - 1] as i64
        ),
    });

    LemmaReport { checks }
}
