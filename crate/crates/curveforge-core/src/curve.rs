//! Plane-curve analysis: rational points over the base field and its
//! extensions, rational linear components, singular points, tangent lines
//! with intersection multiplicities, and a catalog of named curve
//! families.

use alloc::vec::Vec;
use core::fmt;

use crate::gf::{embed, FieldSpec, Felt, GfError};
use crate::hpoly::{restrict_to_line, HPoly, UniPoly};
use crate::projplane::{
    enumerate_lines, line_through, points_iter, PLine, PPoint, PointSet,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    ZeroPolynomial,
    BadDegree(u32),
    Gf(GfError),
    PointNotOnCurve,
    SingularPoint,
    LineMissesPoint,
    InvalidFamilyParams(&'static str),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::ZeroPolynomial => write!(f, "the zero polynomial defines no curve"),
            CurveError::BadDegree(d) => write!(f, "curve degree {d} must be >= 1"),
            CurveError::Gf(e) => write!(f, "{e}"),
            CurveError::PointNotOnCurve => write!(f, "point is not on the curve"),
            CurveError::SingularPoint => write!(f, "curve is singular at the point"),
            CurveError::LineMissesPoint => write!(f, "line does not pass through the point"),
            CurveError::InvalidFamilyParams(m) => write!(f, "invalid family parameters: {m}"),
        }
    }
}

impl From<GfError> for CurveError {
    fn from(e: GfError) -> Self {
        CurveError::Gf(e)
    }
}

/// The Sziklai value (d-1)q + 1.
#[inline]
pub fn sziklai_bound(d: u32, q: u32) -> u64 {
    (d as u64 - 1) * q as u64 + 1
}

/// A plane curve with its rational point set and eligibility flags cached
/// at construction.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    poly: HPoly,
    points: PointSet,
    linear_components: Vec<PLine>,
    singular_rational: Vec<PPoint>,
}

impl PlaneCurve {
    pub fn new(f: &FieldSpec, poly: HPoly) -> Result<PlaneCurve, CurveError> {
        if poly.is_zero() {
            return Err(CurveError::ZeroPolynomial);
        }
        if poly.degree() < 1 {
            return Err(CurveError::BadDegree(poly.degree()));
        }
        let mut idxs = Vec::new();
        for (i, p) in points_iter(f).enumerate() {
            if poly.evaluate(f, &p).is_zero() {
                idxs.push(i as u32);
            }
        }
        let points = PointSet::from_indices(f.q(), idxs);

        let linear_components = enumerate_lines(f)
            .into_iter()
            .filter(|l| restrict_to_line(f, &poly, l).is_zero())
            .collect();

        let [px, py, pz] = poly.partials(f);
        let singular_rational = points
            .points(f)
            .into_iter()
            .filter(|p| {
                px.evaluate(f, p).is_zero()
                    && py.evaluate(f, p).is_zero()
                    && pz.evaluate(f, p).is_zero()
            })
            .collect();

        Ok(PlaneCurve {
            poly,
            points,
            linear_components,
            singular_rational,
        })
    }

    #[inline]
    pub fn poly(&self) -> &HPoly {
        &self.poly
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    /// The cached rational point set.
    #[inline]
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// N_q: the number of rational points.
    #[inline]
    pub fn n_q(&self) -> usize {
        self.points.len()
    }

    /// Rational lines dividing the equation; empty iff the curve has no
    /// rational linear component.
    #[inline]
    pub fn linear_components(&self) -> &[PLine] {
        &self.linear_components
    }

    #[inline]
    pub fn has_linear_component(&self) -> bool {
        !self.linear_components.is_empty()
    }

    /// Rational singular points.
    #[inline]
    pub fn singular_rational_points(&self) -> &[PPoint] {
        &self.singular_rational
    }

    /// Point count over the degree-m extension field.
    pub fn count_points_ext(&self, f: &FieldSpec, m: u32, cap: u32) -> Result<u64, CurveError> {
        if m == 1 {
            return Ok(self.n_q() as u64);
        }
        let ext = FieldSpec::make_field_capped(f.p(), f.h() * m, cap)?;
        let e = embed(f, &ext)?;
        let lifted = self.poly.embed(&e, &ext);
        let mut n = 0u64;
        for p in points_iter(&ext) {
            if lifted.evaluate(&ext, &p).is_zero() {
                n += 1;
            }
        }
        Ok(n)
    }

    /// Singular points over F_{q^j} for every j up to m.
    pub fn singular_points_check(
        &self,
        f: &FieldSpec,
        m: u32,
        cap: u32,
    ) -> Result<SingularReport, CurveError> {
        let [px, py, pz] = self.poly.partials(f);
        let mut by_extension = Vec::new();
        for j in 1..=m {
            let pts: Vec<PPoint> = if j == 1 {
                self.singular_rational.clone()
            } else {
                let ext = FieldSpec::make_field_capped(f.p(), f.h() * j, cap)?;
                let e = embed(f, &ext)?;
                let lf = self.poly.embed(&e, &ext);
                let lx = px.embed(&e, &ext);
                let ly = py.embed(&e, &ext);
                let lz = pz.embed(&e, &ext);
                points_iter(&ext)
                    .filter(|p| {
                        lf.evaluate(&ext, p).is_zero()
                            && lx.evaluate(&ext, p).is_zero()
                            && ly.evaluate(&ext, p).is_zero()
                            && lz.evaluate(&ext, p).is_zero()
                    })
                    .collect()
            };
            by_extension.push(ExtSingular { degree: j, points: pts });
        }
        Ok(SingularReport { by_extension })
    }

    /// Tangent line at a nonsingular rational point of the curve, and the
    /// intersection multiplicity I(P, l . C) for l (the tangent when l is
    /// omitted).
    pub fn tangent_and_multiplicity(
        &self,
        f: &FieldSpec,
        p: &PPoint,
        l: Option<&PLine>,
    ) -> Result<(PLine, u32), CurveError> {
        if !self.poly.evaluate(f, p).is_zero() {
            return Err(CurveError::PointNotOnCurve);
        }
        let [px, py, pz] = self.poly.partials(f);
        let grad = [
            px.evaluate(f, p),
            py.evaluate(f, p),
            pz.evaluate(f, p),
        ];
        let tangent = PLine::new(f, grad).map_err(|_| CurveError::SingularPoint)?;
        debug_assert!(p.on(f, &tangent), "Euler identity puts P on its tangent");
        let line = match l {
            Some(l) => {
                if !p.on(f, l) {
                    return Err(CurveError::LineMissesPoint);
                }
                *l
            }
            None => tangent,
        };
        let r = restrict_to_line(f, &self.poly, &line);
        let mult = r
            .multiplicity_at(f, p)
            .expect("P lies on the restricted line");
        Ok((tangent, mult))
    }
}

#[derive(Clone, Debug)]
pub struct ExtSingular {
    pub degree: u32,
    pub points: Vec<PPoint>,
}

#[derive(Clone, Debug)]
pub struct SingularReport {
    pub by_extension: Vec<ExtSingular>,
}

impl SingularReport {
    /// True when no singular point was found over any checked extension.
    pub fn nonsingular(&self) -> bool {
        self.by_extension.iter().all(|e| e.points.is_empty())
    }
}

/// Named curve families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// alpha X^(q-1) + beta Y^(q-1) + gamma Z^(q-1), parameters nonzero;
    /// `require_zero_sum` additionally enforces alpha+beta+gamma = 0.
    Fermat {
        alpha: Felt,
        beta: Felt,
        gamma: Felt,
        require_zero_sum: bool,
    },
    /// The degree-4 curve over F_4 with 14 rational points.
    Exceptional4,
    /// X^(n+1) + Y^(n+1) + Z^(n+1) over F_{n^2}.
    Hermitian { n: u32 },
    /// X^q - X Z^(q-1) + Y^(q-1) Z - Z^q, degree q.
    HommaQ,
    /// X^(q+1) - X^2 Z^(q-1) + Y^q Z - Y Z^q, degree q+1.
    HommaQ1,
    /// Y(Y^q Z - Y Z^q) + Z(Z^q X - Z X^q) + (aX + bY + cZ)(X^q Y - X Y^q),
    /// degree q+2; requires t^3 - (c t^q + b t + a) with no root in F_{q^3}.
    Tallini { a: Felt, b: Felt, c: Felt },
    /// The conic X^2 + YZ.
    Conic,
}

/// Builds a named curve over the given field.
pub fn family_catalog(f: &FieldSpec, id: &FamilyId) -> Result<PlaneCurve, CurveError> {
    family_catalog_capped(f, id, crate::gf::DEFAULT_CAP)
}

/// As `family_catalog`; the cap bounds the F_{q^3} validation field for
/// the degree-(q+2) family.
pub fn family_catalog_capped(
    f: &FieldSpec,
    id: &FamilyId,
    cap: u32,
) -> Result<PlaneCurve, CurveError> {
    let q = f.q();
    let one = f.one();
    let poly = match id {
        FamilyId::Fermat {
            alpha,
            beta,
            gamma,
            require_zero_sum,
        } => {
            if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
                return Err(CurveError::InvalidFamilyParams(
                    "fermat parameters must be nonzero",
                ));
            }
            if *require_zero_sum && !f.add(f.add(*alpha, *beta), *gamma).is_zero() {
                return Err(CurveError::InvalidFamilyParams(
                    "fermat parameters must sum to zero",
                ));
            }
            let d = q - 1;
            HPoly::from_terms(
                f,
                d,
                &[(d, 0, 0, *alpha), (0, d, 0, *beta), (0, 0, d, *gamma)],
            )
            .expect("consistent terms")
        }
        FamilyId::Exceptional4 => {
            if q != 4 {
                return Err(CurveError::InvalidFamilyParams(
                    "the exceptional quartic lives over GF(4)",
                ));
            }
            HPoly::from_terms(
                f,
                4,
                &[
                    (4, 0, 0, one),
                    (0, 4, 0, one),
                    (0, 0, 4, one),
                    (2, 2, 0, one),
                    (0, 2, 2, one),
                    (2, 0, 2, one),
                    (2, 1, 1, one),
                    (1, 2, 1, one),
                    (1, 1, 2, one),
                ],
            )
            .expect("consistent terms")
        }
        FamilyId::Hermitian { n } => {
            if n * n != q {
                return Err(CurveError::InvalidFamilyParams(
                    "hermitian requires a field of order n^2",
                ));
            }
            let d = n + 1;
            HPoly::from_terms(f, d, &[(d, 0, 0, one), (0, d, 0, one), (0, 0, d, one)])
                .expect("consistent terms")
        }
        FamilyId::HommaQ => HPoly::from_terms(
            f,
            q,
            &[
                (q, 0, 0, one),
                (1, 0, q - 1, f.neg(one)),
                (0, q - 1, 1, one),
                (0, 0, q, f.neg(one)),
            ],
        )
        .expect("consistent terms"),
        FamilyId::HommaQ1 => HPoly::from_terms(
            f,
            q + 1,
            &[
                (q + 1, 0, 0, one),
                (2, 0, q - 1, f.neg(one)),
                (0, q, 1, one),
                (0, 1, q, f.neg(one)),
            ],
        )
        .expect("consistent terms"),
        FamilyId::Tallini { a, b, c } => {
            validate_tallini(f, *a, *b, *c, cap)?;
            let y = HPoly::monomial(f, 0, 1, 0, one);
            let z = HPoly::monomial(f, 0, 0, 1, one);
            let t1 = HPoly::from_terms(
                f,
                q + 1,
                &[(0, q, 1, one), (0, 1, q, f.neg(one))],
            )
            .expect("consistent terms");
            let t2 = HPoly::from_terms(
                f,
                q + 1,
                &[(1, 0, q, one), (q, 0, 1, f.neg(one))],
            )
            .expect("consistent terms");
            let t3 = HPoly::from_terms(
                f,
                q + 1,
                &[(q, 1, 0, one), (1, q, 0, f.neg(one))],
            )
            .expect("consistent terms");
            let lin = HPoly::linear(f, *a, *b, *c);
            y.mul(f, &t1)
                .add(f, &z.mul(f, &t2))
                .add(f, &lin.mul(f, &t3))
        }
        FamilyId::Conic => {
            HPoly::from_terms(f, 2, &[(2, 0, 0, one), (0, 1, 1, one)]).expect("consistent terms")
        }
    };
    PlaneCurve::new(f, poly)
}

/// The degree-(q+2) family is valid only when t^3 - (c t^q + b t + a)
/// has no root in F_{q^3}.
fn validate_tallini(f: &FieldSpec, a: Felt, b: Felt, c: Felt, cap: u32) -> Result<(), CurveError> {
    let q = f.q();
    let deg = if c.is_zero() { 3 } else { q.max(3) } as usize;
    let mut coeffs = alloc::vec![f.zero(); deg + 1];
    coeffs[0] = f.neg(a);
    coeffs[1] = f.sub(coeffs[1], b);
    coeffs[3] = f.add(coeffs[3], f.one());
    if !c.is_zero() {
        coeffs[q as usize] = f.sub(coeffs[q as usize], c);
    }
    let phi = UniPoly::from_coeffs(f, coeffs);
    let ext = FieldSpec::make_field_capped(f.p(), f.h() * 3, cap)?;
    let e = embed(f, &ext)?;
    let lifted = phi.embed(&e, &ext);
    if lifted.has_no_root(&ext) {
        Ok(())
    } else {
        Err(CurveError::InvalidFamilyParams(
            "the cubic criterion polynomial has a root in the cubic extension",
        ))
    }
}

/// Rational triangle points: the union of the three coordinate lines.
pub fn coordinate_triangle(f: &FieldSpec) -> PointSet {
    let mut idxs = Vec::new();
    for (i, p) in points_iter(f).enumerate() {
        let c = p.coords();
        if c[0].is_zero() || c[1].is_zero() || c[2].is_zero() {
            idxs.push(i as u32);
        }
    }
    PointSet::from_indices(f.q(), idxs)
}

/// Membership in the zero-sum three-term family, by inspecting the
/// equation. Combined with a point-set comparison against the triangle
/// complement this gives both directions of the characterization.
pub fn is_fermat_family_member(f: &FieldSpec, c: &PlaneCurve) -> bool {
    let q = f.q();
    if c.degree() != q - 1 {
        return false;
    }
    let d = q - 1;
    let alpha = c.poly().coeff(d, 0, 0);
    let beta = c.poly().coeff(0, d, 0);
    let gamma = c.poly().coeff(0, 0, d);
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return false;
    }
    if !f.add(f.add(alpha, beta), gamma).is_zero() {
        return false;
    }
    let expect = HPoly::from_terms(
        f,
        d,
        &[(d, 0, 0, alpha), (0, d, 0, beta), (0, 0, d, gamma)],
    )
    .expect("consistent terms");
    c.poly().proportional_to(f, &expect).is_some()
}

/// The line through two coordinate index triples.
pub fn line_of(f: &FieldSpec, p: (u32, u32, u32), q: (u32, u32, u32)) -> PLine {
    line_through(
        f,
        &PPoint::from_indices(f, p.0, p.1, p.2),
        &PPoint::from_indices(f, q.0, q.1, q.2),
    )
    .expect("distinct points")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn fermat(f: &FieldSpec, a: i64, b: i64, c: i64) -> PlaneCurve {
        family_catalog(
            f,
            &FamilyId::Fermat {
                alpha: f.from_int(a),
                beta: f.from_int(b),
                gamma: f.from_int(c),
                require_zero_sum: true,
            },
        )
        .unwrap()
    }

    #[test]
    fn fermat_point_counts_and_triangle() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        let c = fermat(&f5, 1, 1, 3);
        assert_eq!(c.n_q(), 16);
        // point set is exactly the complement of the coordinate triangle
        let triangle = coordinate_triangle(&f5);
        assert_eq!(c.points(), &triangle.complement());
        assert!(is_fermat_family_member(&f5, &c));
        // nonsingular, no linear components
        assert!(c.singular_rational_points().is_empty());
        assert!(!c.has_linear_component());
    }

    #[test]
    fn named_curve_counts() {
        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let quartic = family_catalog(&f4, &FamilyId::Exceptional4).unwrap();
        assert_eq!(quartic.n_q(), 14);

        let hermitian = family_catalog(&f4, &FamilyId::Hermitian { n: 2 }).unwrap();
        assert_eq!(hermitian.n_q(), 9);

        let f5 = FieldSpec::make_field(5, 1).unwrap();
        let hq = family_catalog(&f5, &FamilyId::HommaQ).unwrap();
        assert_eq!(hq.n_q() as u64, sziklai_bound(5, 5)); // (q-1)q+1 = 21

        let hq1 = family_catalog(&f5, &FamilyId::HommaQ1).unwrap();
        assert_eq!(hq1.n_q(), 26); // q^2+1

        let conic = family_catalog(&f5, &FamilyId::Conic).unwrap();
        assert_eq!(conic.n_q(), 6); // q+1
    }

    #[test]
    fn extension_counts() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        let conic = family_catalog(&f5, &FamilyId::Conic).unwrap();
        assert_eq!(conic.count_points_ext(&f5, 1, 1 << 14).unwrap(), 6);
        // a rational conic has q^m + 1 points over every extension
        assert_eq!(conic.count_points_ext(&f5, 2, 1 << 14).unwrap(), 26);

        // monotone under divisibility of extensions
        let c = fermat(&f5, 1, 1, 3);
        let n1 = c.count_points_ext(&f5, 1, 1 << 14).unwrap();
        let n2 = c.count_points_ext(&f5, 2, 1 << 14).unwrap();
        assert!(n1 <= n2);

        // cap violations surface as errors
        assert!(matches!(
            conic.count_points_ext(&f5, 9, 1 << 14),
            Err(CurveError::Gf(GfError::CapExceeded { .. }))
        ));
    }

    #[test]
    fn hasse_weil_window_quartic_f25() {
        // Fermat quartic over F_25 is nonsingular of genus 3:
        // N must be within 26 +- 2g*5 = 26 +- 30.
        let f25 = FieldSpec::make_field(5, 2).unwrap();
        let one = f25.one();
        let quartic = HPoly::from_terms(
            &f25,
            4,
            &[(4, 0, 0, one), (0, 4, 0, one), (0, 0, 4, one)],
        )
        .unwrap();
        let c = PlaneCurve::new(&f25, quartic).unwrap();
        assert!(c.singular_rational_points().is_empty());
        let n = c.n_q() as i64;
        assert!((n - 26).abs() <= 30, "N = {n} outside the Hasse-Weil window");
    }

    #[test]
    fn linear_components() {
        let f7 = FieldSpec::make_field(7, 1).unwrap();
        // V(X*Y) has components V(X) and V(Y)
        let xy = HPoly::from_terms(&f7, 2, &[(1, 1, 0, f7.one())]).unwrap();
        let c = PlaneCurve::new(&f7, xy).unwrap();
        let comps = c.linear_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&PLine::from_indices(&f7, 1, 0, 0)));
        assert!(comps.contains(&PLine::from_indices(&f7, 0, 1, 0)));

        // the family curve has none
        let cf = fermat(&f7, 1, 1, 5);
        assert!(cf.linear_components().is_empty());
    }

    #[test]
    fn singular_points() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        // V(XY): singular at (0:0:1)
        let xy = HPoly::from_terms(&f5, 2, &[(1, 1, 0, f5.one())]).unwrap();
        let c = PlaneCurve::new(&f5, xy).unwrap();
        assert_eq!(
            c.singular_rational_points(),
            &[PPoint::from_indices(&f5, 0, 0, 1)]
        );

        // cuspidal cubic V(ZY^2 - X^3): singular at (0:0:1)
        let cusp = HPoly::from_terms(
            &f5,
            3,
            &[(0, 2, 1, f5.one()), (3, 0, 0, f5.neg(f5.one()))],
        )
        .unwrap();
        let c2 = PlaneCurve::new(&f5, cusp).unwrap();
        assert_eq!(
            c2.singular_rational_points(),
            &[PPoint::from_indices(&f5, 0, 0, 1)]
        );

        // family curves are nonsingular over the base and the quadratic
        // extension
        let cf = fermat(&f5, 1, 1, 3);
        let report = cf.singular_points_check(&f5, 2, 1 << 14).unwrap();
        assert!(report.nonsingular());
    }

    #[test]
    fn tangents_and_multiplicities() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        let conic = family_catalog(&f5, &FamilyId::Conic).unwrap();
        for p in conic.points().points(&f5) {
            let (_t, j2) = conic.tangent_and_multiplicity(&f5, &p, None).unwrap();
            assert_eq!(j2, 2);
        }

        let cf = fermat(&f5, 1, 1, 3);
        let p = PPoint::from_indices(&f5, 1, 1, 1);
        let (_t, j2) = cf.tangent_and_multiplicity(&f5, &p, None).unwrap();
        assert_eq!(j2, 2);

        // the Hermitian cubic over F_4 has j2 = 3 at each rational point
        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let h = family_catalog(&f4, &FamilyId::Hermitian { n: 2 }).unwrap();
        for p in h.points().points(&f4) {
            let (_t, j2) = h.tangent_and_multiplicity(&f4, &p, None).unwrap();
            assert_eq!(j2, 3);
        }

        // error paths
        let off = PPoint::from_indices(&f5, 1, 0, 0);
        assert_eq!(
            cf.tangent_and_multiplicity(&f5, &off, None),
            Err(CurveError::PointNotOnCurve)
        );
        let far_line = PLine::from_indices(&f5, 1, 0, 0);
        assert!(!p.on(&f5, &far_line));
        assert_eq!(
            cf.tangent_and_multiplicity(&f5, &p, Some(&far_line)),
            Err(CurveError::LineMissesPoint)
        );
    }

    #[test]
    fn sziklai_on_catalog() {
        // every catalog member without linear components respects the
        // bound, except the exceptional quartic
        for (p, h) in [(5u32, 1u32), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::make_field(p, h).unwrap();
            let q = f.q();
            let mut members: Vec<PlaneCurve> = Vec::new();
            members.push(family_catalog(&f, &FamilyId::Conic).unwrap());
            members.push(family_catalog(&f, &FamilyId::HommaQ).unwrap());
            members.push(family_catalog(&f, &FamilyId::HommaQ1).unwrap());
            for b in 1..q {
                let beta = f.elt(b);
                let gamma = f.neg(f.add(f.one(), beta));
                if beta.is_zero() || gamma.is_zero() {
                    continue;
                }
                members.push(
                    family_catalog(
                        &f,
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
            for c in &members {
                assert!(!c.has_linear_component());
                assert!(c.n_q() as u64 <= sziklai_bound(c.degree(), q));
                // attaining members have only nonsingular rational points
                if c.n_q() as u64 == sziklai_bound(c.degree(), q) {
                    assert!(c.singular_rational_points().is_empty());
                }
            }
        }
        // the exceptional quartic beats the bound
        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let e = family_catalog(&f4, &FamilyId::Exceptional4).unwrap();
        assert!(!e.has_linear_component());
        assert_eq!(e.n_q(), 14);
        assert_eq!(sziklai_bound(4, 4), 13);
    }

    #[test]
    fn fermat_family_validation() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        assert!(matches!(
            family_catalog(
                &f5,
                &FamilyId::Fermat {
                    alpha: f5.zero(),
                    beta: f5.one(),
                    gamma: f5.one(),
                    require_zero_sum: false,
                }
            ),
            Err(CurveError::InvalidFamilyParams(_))
        ));
        assert!(matches!(
            family_catalog(
                &f5,
                &FamilyId::Fermat {
                    alpha: f5.one(),
                    beta: f5.one(),
                    gamma: f5.one(),
                    require_zero_sum: true,
                }
            ),
            Err(CurveError::InvalidFamilyParams(_))
        ));
        // non-family degree-(q-1) curve does not pass the membership test
        let other = HPoly::from_terms(
            &f5,
            4,
            &[(4, 0, 0, f5.one()), (3, 1, 0, f5.one())],
        )
        .unwrap();
        let c = PlaneCurve::new(&f5, other).unwrap();
        assert!(!is_fermat_family_member(&f5, &c));
        assert_ne!(c.points(), &coordinate_triangle(&f5).complement());
    }

    #[test]
    fn tallini_validation() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        // find a parameter triple accepted by the criterion
        let mut found = None;
        'outer: for a in 1..5u32 {
            for b in 0..5u32 {
                for c in 1..5u32 {
                    let id = FamilyId::Tallini {
                        a: f5.elt(a),
                        b: f5.elt(b),
                        c: f5.elt(c),
                    };
                    if let Ok(curve) = family_catalog(&f5, &id) {
                        found = Some(curve);
                        break 'outer;
                    }
                }
            }
        }
        let curve = found.expect("some valid degree-(q+2) parameters exist");
        assert_eq!(curve.degree(), 7); // q + 2
        assert_eq!(curve.n_q() as u64, sziklai_bound(7, 5));

        // a = 0 makes t = 0 a root, so the criterion must reject it
        assert!(family_catalog(
            &f5,
            &FamilyId::Tallini {
                a: f5.zero(),
                b: f5.zero(),
                c: f5.one(),
            }
        )
        .is_err());
    }
}
