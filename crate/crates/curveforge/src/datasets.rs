//! Bundled q=7 reference data: the two 36-point arcs that occur as the
//! k0 = 3 case and one of the k0 = 2 cases in the classification of
//! (36,6)-arcs, together with the sextic/quartic line products and the
//! constraint points used in the reconstruction argument.

use curveforge_core::gf::FieldSpec;
use curveforge_core::hpoly::HPoly;
use curveforge_core::projplane::{PPoint, PointSet};

use crate::formats::read_arc;

pub const ARC_Q7_K0_3: &str = include_str!("../data/q7_arc_k0_3.arc");
pub const ARC_Q7_K0_2: &str = include_str!("../data/q7_arc_k0_2.arc");

pub fn field_q7() -> FieldSpec {
    FieldSpec::make_field(7, 1).expect("GF(7) is below any cap")
}

pub fn arc_k0_3(f: &FieldSpec) -> PointSet {
    let (ff, s) = read_arc(ARC_Q7_K0_3, 1 << 14).expect("bundled arc parses");
    assert_eq!(ff.q(), f.q());
    s
}

pub fn arc_k0_2(f: &FieldSpec) -> PointSet {
    let (ff, s) = read_arc(ARC_Q7_K0_2, 1 << 14).expect("bundled arc parses");
    assert_eq!(ff.q(), f.q());
    s
}

/// G = Y Z (Z - 3Y)(Z - 4Y)(Z - 5Y)(Z - 6Y), the sextic of six lines
/// through (1:0:0).
pub fn sextic_g(f: &FieldSpec) -> HPoly {
    let y = HPoly::monomial(f, 0, 1, 0, f.one());
    let z = HPoly::monomial(f, 0, 0, 1, f.one());
    let mut g = y.mul(f, &z);
    for k in [3i64, 4, 5, 6] {
        g = g.mul(f, &HPoly::linear(f, f.zero(), f.from_int(-k), f.one()));
    }
    g
}

/// H = X (X + Y - Z)(2X + Y - Z)(X + 2Y - 2Z), the quartic of four lines
/// through (0:1:1).
pub fn quartic_h(f: &FieldSpec) -> HPoly {
    let x = HPoly::monomial(f, 1, 0, 0, f.one());
    let l1 = HPoly::linear(f, f.one(), f.one(), f.from_int(-1));
    let l2 = HPoly::linear(f, f.from_int(2), f.one(), f.from_int(-1));
    let l3 = HPoly::linear(f, f.one(), f.from_int(2), f.from_int(-2));
    x.mul(f, &l1).mul(f, &l2).mul(f, &l3)
}

/// The six printed constraint points of the k0 = 3 elimination.
pub fn constraint_points(f: &FieldSpec) -> Vec<PPoint> {
    [
        (1, 0, 0),
        (1, 5, 4),
        (1, 4, 0),
        (1, 0, 6),
        (1, 2, 5),
        (1, 6, 4),
    ]
    .into_iter()
    .map(|(x, y, z)| PPoint::from_indices(f, x, y, z))
    .collect()
}

/// The distinguished complement point of the k0 = 2 arc.
pub fn q0_point(f: &FieldSpec) -> PPoint {
    PPoint::from_indices(f, 1, 5, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_arcs_parse() {
        let f = field_q7();
        assert_eq!(arc_k0_3(&f).len(), 36);
        assert_eq!(arc_k0_2(&f).len(), 36);
    }

    #[test]
    fn constraint_points_lie_on_the_arc() {
        let f = field_q7();
        let s = arc_k0_3(&f);
        for p in constraint_points(&f) {
            assert!(s.contains(&f, &p), "{} not in the k0=3 arc", p.render());
        }
        // and Q0 lies off the k0=2 arc
        assert!(!arc_k0_2(&f).contains(&f, &q0_point(&f)));
    }

    #[test]
    fn g_and_h_shapes() {
        let f = field_q7();
        let g = sextic_g(&f);
        let h = quartic_h(&f);
        assert_eq!(g.degree(), 6);
        assert_eq!(h.degree(), 4);
        // all six G-lines pass through (1:0:0); all four H-lines through (0:1:1)
        assert!(g.evaluate(&f, &PPoint::from_indices(&f, 1, 0, 0)).is_zero());
        assert!(h.evaluate(&f, &PPoint::from_indices(&f, 0, 1, 1)).is_zero());
    }

    #[test]
    fn g_divisible_by_yz() {
        let f = field_q7();
        let g = sextic_g(&f);
        let yz = HPoly::from_terms(&f, 2, &[(0, 1, 1, f.one())]).unwrap();
        let quotient = curveforge_core::hpoly::exact_divide(&f, &g, &yz)
            .unwrap()
            .expect("YZ divides G");
        assert_eq!(quotient.mul(&f, &yz), g);
    }

    #[test]
    fn g_curve_has_linear_components() {
        let f = field_q7();
        let c = curveforge_core::curve::PlaneCurve::new(&f, sextic_g(&f)).unwrap();
        let comps = c.linear_components();
        assert_eq!(comps.len(), 6);
        use curveforge_core::projplane::PLine;
        assert!(comps.contains(&PLine::from_indices(&f, 0, 1, 0))); // V(Y)
        assert!(comps.contains(&PLine::from_indices(&f, 0, 0, 1))); // V(Z)
    }
}
