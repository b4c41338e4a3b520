//! Frobenius classicality, the basic and refined point-count bounds, and
//! rational inflection inventories for nonsingular plane curves.

use alloc::vec::Vec;
use core::fmt;

use crate::curve::{CurveError, PlaneCurve};
use crate::gf::FieldSpec;
use crate::hpoly::{exact_divide, HPoly};
use crate::projplane::PPoint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SvError {
    Curve(CurveError),
    SingularRationalPoint(PPoint),
    NotClassical,
}

impl fmt::Display for SvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SvError::Curve(e) => write!(f, "{e}"),
            SvError::SingularRationalPoint(p) => {
                write!(f, "singular rational point at {}", p.render())
            }
            SvError::NotClassical => {
                write!(f, "curve is Frobenius nonclassical and no order was supplied")
            }
        }
    }
}

impl From<CurveError> for SvError {
    fn from(e: CurveError) -> Self {
        SvError::Curve(e)
    }
}

/// Outcome of the Frobenius-classicality test. The curve is classical
/// (order 1) exactly when the equation does not divide the tangent-line
/// criterion polynomial X^q F_X + Y^q F_Y + Z^q F_Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub classical: bool,
    /// Degree of the criterion polynomial that was divided.
    pub criterion_degree: u32,
    /// The quotient when divisibility holds (the nonclassical case).
    pub quotient_degree: Option<u32>,
}

impl FrobeniusReport {
    /// The Frobenius order when classical; nonclassical curves have order
    /// equal to the second order-sequence entry, which is not evaluated
    /// here.
    pub fn order(&self) -> Option<u32> {
        if self.classical {
            Some(1)
        } else {
            None
        }
    }
}

/// The criterion polynomial X^q F_X + Y^q F_Y + Z^q F_Z.
pub fn frobenius_criterion_poly(f: &FieldSpec, poly: &HPoly) -> HPoly {
    let q = f.q();
    let [px, py, pz] = poly.partials(f);
    let xq = HPoly::monomial(f, q, 0, 0, f.one());
    let yq = HPoly::monomial(f, 0, q, 0, f.one());
    let zq = HPoly::monomial(f, 0, 0, q, f.one());
    xq.mul(f, &px).add(f, &yq.mul(f, &py)).add(f, &zq.mul(f, &pz))
}

/// Divisibility test for Frobenius classicality. Absolute irreducibility
/// of the input is the caller's responsibility (flagged, not certified).
pub fn frobenius_classical(f: &FieldSpec, c: &PlaneCurve) -> Result<FrobeniusReport, SvError> {
    let phi = frobenius_criterion_poly(f, c.poly());
    if phi.is_zero() {
        // criterion degenerates only for equations that are p-th powers
        return Ok(FrobeniusReport {
            classical: false,
            criterion_degree: phi.degree(),
            quotient_degree: Some(phi.degree().saturating_sub(c.degree())),
        });
    }
    let quotient = exact_divide(f, &phi, c.poly()).map_err(|_| SvError::NotClassical);
    let quotient = quotient.unwrap_or(None);
    Ok(FrobeniusReport {
        classical: quotient.is_none(),
        criterion_degree: phi.degree(),
        quotient_degree: quotient.map(|q| q.degree()),
    })
}

/// The basic bound value d(d+q-1)/2, kept exact as a doubled integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicBound {
    pub d: u32,
    pub q: u32,
    /// d(d+q-1), twice the bound.
    pub doubled: u64,
}

impl BasicBound {
    pub fn floor(&self) -> u64 {
        self.doubled / 2
    }

    pub fn is_integer(&self) -> bool {
        self.doubled % 2 == 0
    }
}

pub fn sv_basic_bound(d: u32, q: u32) -> BasicBound {
    BasicBound {
        d,
        q,
        doubled: d as u64 * (d as u64 + q as u64 - 1),
    }
}

/// The refined bound report: per-point tangency data and the inequality
/// 2 N_q <= nu(2g-2) + (q+2)d - sum A(P), with A(P) = j2(P) - nu - 1 at
/// rational points.
#[derive(Clone, Debug)]
pub struct SVReport {
    pub d: u32,
    pub q: u32,
    pub genus: u64,
    pub nu: u32,
    pub n_q: u64,
    pub basic: BasicBound,
    /// nu(2g-2) + (q+2)d - sum A(P): the right side of the doubled
    /// inequality.
    pub refined_rhs_doubled: i64,
    pub sum_a: u64,
    /// j2 at every rational point.
    pub j2_table: Vec<(PPoint, u32)>,
    /// True when 2 N_q equals the refined right side exactly.
    pub attained: bool,
}

/// Evaluates the refined bound. Preconditions: no singular point up to the
/// configured extension degree, and either the curve is Frobenius
/// classical or the caller supplies the order. The genus is taken as
/// (d-1)(d-2)/2, valid for the nonsingular model.
pub fn sv_refined_bound(
    f: &FieldSpec,
    c: &PlaneCurve,
    nu_override: Option<u32>,
    extension_check: u32,
    cap: u32,
) -> Result<SVReport, SvError> {
    if let Some(p) = c.singular_rational_points().first() {
        return Err(SvError::SingularRationalPoint(*p));
    }
    let report = c.singular_points_check(f, extension_check, cap)?;
    if !report.nonsingular() {
        let p = report
            .by_extension
            .iter()
            .find_map(|e| e.points.first())
            .expect("nonsingular() is false");
        return Err(SvError::SingularRationalPoint(*p));
    }
    let nu = match nu_override {
        Some(nu) => nu,
        None => {
            let fr = frobenius_classical(f, c)?;
            if !fr.classical {
                return Err(SvError::NotClassical);
            }
            1
        }
    };
    let d = c.degree();
    let q = f.q();
    let genus = (d as u64 - 1) * (d as u64 - 2) / 2;
    let mut j2_table = Vec::with_capacity(c.n_q());
    let mut sum_a = 0u64;
    for p in c.points().points(f) {
        let (_t, j2) = c.tangent_and_multiplicity(f, &p, None)?;
        sum_a += (j2 - nu - 1) as u64;
        j2_table.push((p, j2));
    }
    let refined_rhs_doubled = nu as i64 * (2 * genus as i64 - 2) + (q as i64 + 2) * d as i64
        - sum_a as i64;
    let n_q = c.n_q() as u64;
    Ok(SVReport {
        d,
        q,
        genus,
        nu,
        n_q,
        basic: sv_basic_bound(d, q),
        refined_rhs_doubled,
        sum_a,
        j2_table,
        attained: 2 * n_q as i64 == refined_rhs_doubled,
    })
}

/// Rational points with tangent contact of order at least 3.
pub fn inflection_points(f: &FieldSpec, c: &PlaneCurve) -> Result<Vec<PPoint>, SvError> {
    if let Some(p) = c.singular_rational_points().first() {
        return Err(SvError::SingularRationalPoint(*p));
    }
    let mut out = Vec::new();
    for p in c.points().points(f) {
        let (_t, j2) = c.tangent_and_multiplicity(f, &p, None)?;
        if j2 >= 3 {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{family_catalog, sziklai_bound, FamilyId, PlaneCurve};
    use crate::gf::{embed, FieldSpec};
    use crate::hpoly::HPoly;

    const CAP: u32 = 1 << 14;

    fn fermat_curves(f: &FieldSpec) -> Vec<PlaneCurve> {
        let mut out = Vec::new();
        for b in 1..f.q() {
            let beta = f.elt(b);
            let gamma = f.neg(f.add(f.one(), beta));
            if gamma.is_zero() {
                continue;
            }
            out.push(
                family_catalog(
                    f,
                    &FamilyId::Fermat {
                        alpha: f.one(),
                        beta,
                        gamma,
                        require_zero_sum: true,
                    },
                )
                .unwrap(),
            );
        }
        out
    }

    /// Trace-form Hermitian equation Y^n Z + Y Z^n - X^(n+1).
    fn hermitian_trace_form(f: &FieldSpec, n: u32) -> PlaneCurve {
        let poly = HPoly::from_terms(
            f,
            n + 1,
            &[
                (0, n, 1, f.one()),
                (0, 1, n, f.one()),
                (n + 1, 0, 0, f.neg(f.one())),
            ],
        )
        .unwrap();
        PlaneCurve::new(f, poly).unwrap()
    }

    #[test]
    fn family_curves_classical() {
        for (p, h) in [(5u32, 1u32), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            for c in fermat_curves(&f) {
                let r = frobenius_classical(&f, &c).unwrap();
                assert!(r.classical, "q={} should be classical", f.q());
            }
        }
    }

    #[test]
    fn hermitian_nonclassical() {
        for n in [2u32, 3] {
            let f = FieldSpec::make_field(if n == 2 { 2 } else { 3 }, 2).unwrap();
            assert_eq!(f.q(), n * n);
            let fermat_form = family_catalog(&f, &FamilyId::Hermitian { n }).unwrap();
            let r = frobenius_classical(&f, &fermat_form).unwrap();
            assert!(!r.classical);
            let trace_form = hermitian_trace_form(&f, n);
            let r2 = frobenius_classical(&f, &trace_form).unwrap();
            assert!(!r2.classical);
        }
    }

    #[test]
    fn conic_classical_odd_char() {
        for (p, h) in [(5u32, 1u32), (7, 1), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let conic = family_catalog(&f, &FamilyId::Conic).unwrap();
            assert!(frobenius_classical(&f, &conic).unwrap().classical);
        }
    }

    #[test]
    fn pointwise_oracle_agrees() {
        // Over extensions the Frobenius image of a curve point must leave
        // the tangent line somewhere iff the curve is classical.
        let cases: Vec<(FieldSpec, PlaneCurve, bool)> = {
            let f4 = FieldSpec::make_field(2, 2).unwrap();
            let f5 = FieldSpec::make_field(5, 1).unwrap();
            let h = family_catalog(&f4, &FamilyId::Hermitian { n: 2 }).unwrap();
            let c113 = fermat_curves(&f5).remove(0);
            let conic = family_catalog(&f5, &FamilyId::Conic).unwrap();
            alloc::vec![(f4, h, false), (f5, c113, true), (f5b(), conic, true)]
        };
        fn f5b() -> FieldSpec {
            FieldSpec::make_field(5, 1).unwrap()
        }
        for (f, c, expect_classical) in cases {
            let got = frobenius_classical(&f, &c).unwrap().classical;
            assert_eq!(got, expect_classical);
            // pointwise: scan curve points over F_{q^2} and F_{q^3}
            let mut witness = false;
            'ext: for m in 2..=3u32 {
                let ext = FieldSpec::make_field_capped(f.p(), f.h() * m, CAP).unwrap();
                let e = embed(&f, &ext).unwrap();
                let poly = c.poly().embed(&e, &ext);
                let grads = poly.partials(&ext);
                for pt in crate::projplane::points_iter(&ext) {
                    if !poly.evaluate(&ext, &pt).is_zero() {
                        continue;
                    }
                    let g = [
                        grads[0].evaluate(&ext, &pt),
                        grads[1].evaluate(&ext, &pt),
                        grads[2].evaluate(&ext, &pt),
                    ];
                    if g.iter().all(|v| v.is_zero()) {
                        continue;
                    }
                    // Frobenius image (x^q : y^q : z^q) against the tangent
                    let co = pt.coords();
                    let qi = f.q() as i64;
                    let dot = ext.add(
                        ext.add(
                            ext.mul(ext.pow(co[0], qi), g[0]),
                            ext.mul(ext.pow(co[1], qi), g[1]),
                        ),
                        ext.mul(ext.pow(co[2], qi), g[2]),
                    );
                    if !dot.is_zero() {
                        witness = true;
                        break 'ext;
                    }
                }
            }
            assert_eq!(
                witness, expect_classical,
                "pointwise witness disagrees with divisibility"
            );
        }
    }

    #[test]
    fn basic_bound_values() {
        // d = q-1 coincides with the Sziklai value, across the whole cap
        for q in 2..=(1u32 << 14) {
            let d = q.saturating_sub(1);
            if d < 1 {
                continue;
            }
            let b = sv_basic_bound(d, q);
            assert_eq!(b.doubled % 2, 0);
            assert_eq!(b.floor(), (q as u64 - 1) * (q as u64 - 1));
            if d >= 2 {
                assert_eq!(b.floor(), sziklai_bound(d, q));
            }
        }
        assert_eq!(sv_basic_bound(2, 5).floor(), 6);
        assert_eq!(sv_basic_bound(4, 5).floor(), 16);
    }

    #[test]
    fn refined_bound_family_equality() {
        for (p, h) in [(5u32, 1u32), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let q = f.q() as i64;
            for c in fermat_curves(&f) {
                let r = sv_refined_bound(&f, &c, None, 2, CAP).unwrap();
                assert_eq!(r.nu, 1);
                assert_eq!(r.sum_a, 0, "no rational inflections expected");
                assert_eq!(r.refined_rhs_doubled, 2 * (q - 1) * (q - 1));
                assert!(r.attained);
                assert!(r.j2_table.iter().all(|&(_, j2)| j2 == 2));
            }
        }
    }

    #[test]
    fn refined_bound_conic() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let conic = family_catalog(&f, &FamilyId::Conic).unwrap();
        let r = sv_refined_bound(&f, &conic, None, 2, CAP).unwrap();
        // 2*6 = 1*(-2) + 7*2 = 12: equality
        assert_eq!(r.genus, 0);
        assert_eq!(r.refined_rhs_doubled, 12);
        assert!(r.attained);
    }

    #[test]
    fn inflection_inventories() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        for c in fermat_curves(&f5) {
            assert!(inflection_points(&f5, &c).unwrap().is_empty());
        }
        let conic = family_catalog(&f5, &FamilyId::Conic).unwrap();
        assert!(inflection_points(&f5, &conic).unwrap().is_empty());

        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let h = family_catalog(&f4, &FamilyId::Hermitian { n: 2 }).unwrap();
        let infl = inflection_points(&f4, &h).unwrap();
        assert_eq!(infl.len(), 9); // every rational point
    }

    #[test]
    fn singular_inputs_rejected() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let xy = HPoly::from_terms(&f, 2, &[(1, 1, 0, f.one())]).unwrap();
        let c = PlaneCurve::new(&f, xy).unwrap();
        assert!(matches!(
            sv_refined_bound(&f, &c, None, 1, CAP),
            Err(SvError::SingularRationalPoint(_))
        ));
        assert!(matches!(
            inflection_points(&f, &c),
            Err(SvError::SingularRationalPoint(_))
        ));
    }
}
