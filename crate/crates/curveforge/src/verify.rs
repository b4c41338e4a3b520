//! The verification suite behind `verify-paper` and the acceptance tests:
//! one function per criterion, each returning a report of named checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use curveforge_core::arcs::{point_type, spectrum, verify_arc_lemmas};
use curveforge_core::codes::{
    code_from_arc, spectrum_derived_enumerator, spectrum_weight_check, weight_enumerator,
};
use curveforge_core::curve::{
    coordinate_triangle, family_catalog, sziklai_bound, FamilyId, PlaneCurve,
};
use curveforge_core::equiv::{are_equivalent_sets, count_family_classes, Projectivity};
use curveforge_core::gf::{FieldSpec, Felt};
use curveforge_core::hpoly::{exact_divide, exponents, restrict_to_line, HPoly};
use curveforge_core::linsolve::{k0_spectrum_system, noether_reconstruct, qsolve, Q};
use curveforge_core::projplane::{enumerate_lines, plane_size, PLine, Plane, PointSet};
use curveforge_core::svfrob::{
    frobenius_classical, inflection_points, sv_basic_bound, sv_refined_bound,
};

use crate::datasets;
use crate::report::RunReport;

pub const CAP: u32 = 1 << 14;
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// All (alpha, beta, gamma) in (F_q^*)^3 with zero sum.
pub fn family_triples_all(f: &FieldSpec) -> Vec<(Felt, Felt, Felt)> {
    let mut out = Vec::new();
    for a in 1..f.q() {
        for b in 1..f.q() {
            let alpha = f.elt(a);
            let beta = f.elt(b);
            let gamma = f.neg(f.add(alpha, beta));
            if !gamma.is_zero() {
                out.push((alpha, beta, gamma));
            }
        }
    }
    out
}

/// Normalized representatives (1, beta, gamma), one per projective triple.
pub fn family_triples_normalized(f: &FieldSpec) -> Vec<(Felt, Felt, Felt)> {
    let mut out = Vec::new();
    for b in 1..f.q() {
        let beta = f.elt(b);
        let gamma = f.neg(f.add(f.one(), beta));
        if !gamma.is_zero() {
            out.push((f.one(), beta, gamma));
        }
    }
    out
}

fn fermat(f: &FieldSpec, t: (Felt, Felt, Felt)) -> PlaneCurve {
    family_catalog(
        f,
        &FamilyId::Fermat {
            alpha: t.0,
            beta: t.1,
            gamma: t.2,
            require_zero_sum: true,
        },
    )
    .expect("valid zero-sum triple")
}

pub fn field(q: u32) -> FieldSpec {
    let (p, h) = crate::formats::factor_prime_power(q).expect("q is a prime power");
    FieldSpec::make_field_capped(p, h, CAP).expect("q below cap")
}

/// Criterion 1: every zero-sum family member over F_q has exactly
/// (q-1)^2 rational points, equal to the triangle complement.
pub fn criterion1(q: u32) -> RunReport {
    let mut r = RunReport::new("criterion-1-family-counts");
    r.param("q", q);
    let f = field(q);
    let triangle_complement = coordinate_triangle(&f).complement();
    let triples = family_triples_all(&f);
    r.check(
        "triple_count",
        json!((q as u64 - 1) * (q as u64 - 2)),
        json!(triples.len()),
    );
    let expect = (q as u64 - 1) * (q as u64 - 1);
    let mut all_counts_ok = true;
    let mut all_sets_ok = true;
    for t in triples {
        let c = fermat(&f, t);
        all_counts_ok &= c.n_q() as u64 == expect;
        all_sets_ok &= c.points() == &triangle_complement;
    }
    r.assert_true("every_member_has_qm1_sq_points", all_counts_ok);
    r.assert_true("every_point_set_is_triangle_complement", all_sets_ok);
    r
}

/// Criterion 2: point counts of the named curves.
pub fn criterion2(q: u32) -> RunReport {
    let mut r = RunReport::new("criterion-2-named-counts");
    r.param("q", q);
    let f = field(q);
    if q == 4 {
        let e = family_catalog(&f, &FamilyId::Exceptional4).unwrap();
        r.check("exceptional_quartic_n4", 14, e.n_q() as u64);
        let h = family_catalog(&f, &FamilyId::Hermitian { n: 2 }).unwrap();
        r.check("hermitian_cubic_n4", 9, h.n_q() as u64);
    }
    if matches!(q, 5 | 7 | 8 | 9) {
        let hq = family_catalog(&f, &FamilyId::HommaQ).unwrap();
        r.check(
            "degree_q_family",
            json!((q as u64 - 1) * q as u64 + 1),
            json!(hq.n_q() as u64),
        );
        let hq1 = family_catalog(&f, &FamilyId::HommaQ1).unwrap();
        r.check(
            "degree_q1_family",
            json!(q as u64 * q as u64 + 1),
            json!(hq1.n_q() as u64),
        );
    }
    let conic = family_catalog(&f, &FamilyId::Conic).unwrap();
    r.check("conic", json!(q as u64 + 1), json!(conic.n_q() as u64));
    r
}

/// Criterion 3: family-arc spectra and the double-counting identities on
/// random sets of the same size.
pub fn criterion3(q: u32, seed: u64, random_sets: usize) -> RunReport {
    let mut r = RunReport::new("criterion-3-spectrum-suite");
    r.param("q", q);
    r.param("random_sets", random_sets as u64);
    r.param("seed", seed);
    let f = field(q);
    let plane = Plane::new(&f);
    let qm1 = q as u64 - 1;
    let mut shape_ok = true;
    for t in family_triples_normalized(&f) {
        let c = fermat(&f, t);
        let sp = spectrum(&plane, c.points());
        shape_ok &= sp.a()[0] == 3
            && sp.a()[q as usize - 2] == qm1 * qm1
            && sp.a()[q as usize - 1] == 3 * qm1
            && sp.k0() == 0
            && sp.identities_hold();
    }
    r.assert_true("family_arcs_have_expected_spectrum", shape_ok);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q as u64);
    let all: Vec<u32> = (0..plane_size(q) as u32).collect();
    let k = ((q - 1) * (q - 1)) as usize;
    let mut identities_ok = true;
    for _ in 0..random_sets {
        let mut idxs = all.clone();
        idxs.shuffle(&mut rng);
        idxs.truncate(k);
        let s = PointSet::from_indices(q, idxs);
        identities_ok &= spectrum(&plane, &s).identities_hold();
    }
    r.assert_true("identities_on_random_sets", identities_ok);
    r
}

/// Criterion 4: lemma predicates on every family arc over F_q.
pub fn criterion4(q: u32) -> RunReport {
    let mut r = RunReport::new("criterion-4-lemma-predicates");
    r.param("q", q);
    let f = field(q);
    let plane = Plane::new(&f);
    let mut psi_ok = true;
    let mut secant_ok = true;
    let mut weighted_ok = true;
    let mut rest_ok = true;
    for t in family_triples_normalized(&f) {
        let c = fermat(&f, t);
        let report = verify_arc_lemmas(&f, &plane, c.points());
        for check in &report.checks {
            match check.name {
                "psi_qm1_at_least_3" => psi_ok &= check.pass,
                "secant_pair_sums" => secant_ok &= check.pass,
                "weighted_spectrum_identity" => weighted_ok &= check.pass,
                _ => rest_ok &= check.pass,
            }
        }
    }
    r.assert_true("psi_qm1_at_least_3_everywhere", psi_ok);
    r.assert_true("secant_pair_sums_at_least_q", secant_ok);
    r.assert_true("weighted_spectrum_identity", weighted_ok);
    r.assert_true("remaining_lemma_predicates", rest_ok);
    r
}

/// The equivalence-class count the congruence formulas predict.
pub fn nu_formula(q: u32) -> u64 {
    let (p, _) = crate::formats::factor_prime_power(q).expect("prime power");
    let q = q as u64;
    if p == 2 {
        if q % 3 == 2 {
            (q - 2) / 6
        } else {
            (q + 2) / 6
        }
    } else if p == 3 {
        (q + 3) / 6
    } else if q % 3 == 2 {
        (q + 1) / 6
    } else {
        (q + 5) / 6
    }
}

/// Criterion 5: explicit orbit computation of the family classes.
pub fn criterion5(q: u32) -> RunReport {
    let mut r = RunReport::new("criterion-5-equivalence-classes");
    r.param("q", q);
    let f = field(q);
    let plane = Plane::new(&f);
    let classes = count_family_classes(&f, &plane).unwrap();
    r.check("nu", json!(nu_formula(q)), json!(classes.nu() as u64));
    let reps: Vec<String> = classes
        .representatives
        .iter()
        .map(|t| format!("({}:{}:{})", t[0].index(), t[1].index(), t[2].index()))
        .collect();
    r.info("representatives", json!(reps));
    r
}

/// Criterion 6: the q=7 reproduction around the two bundled 36-point arcs.
pub fn criterion6() -> RunReport {
    let mut r = RunReport::new("criterion-6-q7-reproduction");
    r.param("q", 7);
    let f = datasets::field_q7();
    let plane = Plane::new(&f);

    // the k0 = 3 arc and its code
    let s3 = datasets::arc_k0_3(&f);
    let sp3 = spectrum(&plane, &s3);
    r.check("k0_of_first_arc", 3, sp3.k0() as u64);
    let code = code_from_arc(&f, &plane, &s3).unwrap();
    r.check("code_n", 36, code.n() as u64);
    r.check("code_d", 30, code.d() as u64);
    let we = weight_enumerator(&f, &code).unwrap();
    r.assert_true(
        "weight_relation_holds",
        spectrum_weight_check(&f, &code, &we, &sp3).unwrap(),
    );

    // the reconstruction forces the quadric coefficients to zero
    let g = datasets::sextic_g(&f);
    let h = datasets::quartic_h(&f);
    let constraints = datasets::constraint_points(&f);
    let outcome = noether_reconstruct(&f, &g, &h, 6, &constraints, &[]).unwrap();
    r.check("transversal_intersection_size", 24, outcome.intersection.len() as u64);
    r.check("solution_space_dimension", 1, outcome.dimension() as u64);
    r.assert_true("quadric_part_forced_zero", outcome.b_part_forced_zero());

    // with the off-arc points of V(G) as nonvanishing constraints, no
    // nonzero solution survives: the arc is not a curve of degree six
    let g_points: Vec<_> = curveforge_core::projplane::points_iter(&f)
        .filter(|p| g.evaluate(&f, p).is_zero())
        .collect();
    // six concurrent lines: 6q + 1 rational points, 31 of them on the arc
    r.check("g_rational_points", 43, g_points.len() as u64);
    let off_arc: Vec<_> = g_points
        .iter()
        .copied()
        .filter(|p| !s3.contains(&f, p))
        .collect();
    r.check("g_points_off_arc", 12, off_arc.len() as u64);
    let outcome2 = noether_reconstruct(&f, &g, &h, 6, &constraints, &off_arc).unwrap();
    r.check("forced_trivial", json!(true), json!(outcome2.forced_trivial));

    // the k0 = 2 arc: profile of the distinguished complement point
    let s2 = datasets::arc_k0_2(&f);
    let sp2 = spectrum(&plane, &s2);
    r.check("k0_of_second_arc", 2, sp2.k0() as u64);
    let q0 = datasets::q0_point(&f);
    let t = point_type(&f, &plane, &s2, &q0);
    r.check("psi6_at_q0", 3, t.psi_at(6) as u64);
    r.check("psi5_at_q0", 2, t.psi_at(5) as u64);
    let lines6: Vec<String> = t.lines_with_count(6).iter().map(|l| l.render()).collect();
    let lines5: Vec<String> = t.lines_with_count(5).iter().map(|l| l.render()).collect();
    let expect6: Vec<String> = [(0, 1, 1), (1, 0, 3), (1, 6, 2)]
        .iter()
        .map(|&(a, b, c)| PLine::from_indices(&f, a, b, c).render())
        .collect();
    let expect5: Vec<String> = [(1, 3, 6), (1, 4, 0)]
        .iter()
        .map(|&(a, b, c)| PLine::from_indices(&f, a, b, c).render())
        .collect();
    let mut got6 = lines6.clone();
    let mut want6 = expect6.clone();
    got6.sort();
    want6.sort();
    let mut got5 = lines5.clone();
    let mut want5 = expect5.clone();
    got5.sort();
    want5.sort();
    r.check("six_lines_at_q0", json!(want6), json!(got6));
    r.check("five_lines_at_q0", json!(want5), json!(got5));
    r
}

/// Criterion 7: the refined bound is attained with equality on family
/// curves and the basic bound coincides with the Sziklai value at d=q-1.
pub fn criterion7(q: u32) -> RunReport {
    let mut r = RunReport::new("criterion-7-sv-equality");
    r.param("q", q);
    let f = field(q);
    let qm1 = q as i64 - 1;
    let mut classical_ok = true;
    let mut inflection_ok = true;
    let mut attained_ok = true;
    for t in family_triples_normalized(&f) {
        let c = fermat(&f, t);
        classical_ok &= frobenius_classical(&f, &c).unwrap().classical;
        inflection_ok &= inflection_points(&f, &c).unwrap().is_empty();
        let rep = sv_refined_bound(&f, &c, None, 2, CAP).unwrap();
        attained_ok &= rep.attained
            && rep.refined_rhs_doubled == 2 * qm1 * qm1
            && rep.sum_a == 0
            && rep.j2_table.iter().all(|&(_, j2)| j2 == 2);
    }
    r.assert_true("family_curves_frobenius_classical", classical_ok);
    r.assert_true("no_rational_inflections", inflection_ok);
    r.assert_true("refined_bound_attained_with_equality", attained_ok);
    // arithmetic identity: 2(q-1)^2 = (2g-2) + (q+2)(q-1) for g = (q-2)(q-3)/2
    let g2 = (q as i64 - 2) * (q as i64 - 3) - 2;
    r.check(
        "doubled_identity",
        json!(2 * qm1 * qm1),
        json!(g2 + (q as i64 + 2) * qm1),
    );
    let basic = sv_basic_bound(q - 1, q);
    r.check("basic_bound_is_integer", json!(true), json!(basic.is_integer()));
    r.check("basic_bound_value", json!((qm1 * qm1) as u64), json!(basic.floor()));
    r.check(
        "sziklai_value",
        json!(basic.floor()),
        json!(sziklai_bound(q - 1, q)),
    );
    r
}

/// Criterion 8: closed forms of the k0 >= q-3 spectrum system over the
/// rationals, for every q in 5..=13.
pub fn criterion8() -> RunReport {
    let mut r = RunReport::new("criterion-8-spectrum-system");
    let mut forms_ok = true;
    let mut negative_ok = true;
    for q in 5i128..=13 {
        let (m, b) = k0_spectrum_system(q);
        let sol = qsolve(&m, &b).unwrap();
        let v = sol.unique().expect("nonsingular system").clone();
        let two = Q::from_integer(2);
        forms_ok &= two * v[0] == Q::from_integer(3 * (q * q - 3 * q + 2));
        forms_ok &= v[1] == Q::from_integer(-2 * (q * q - 5 * q + 4));
        forms_ok &= two * v[2] == Q::from_integer(3 * (q * q - 3 * q + 4));
        negative_ok &= v[1] < Q::from_integer(0);
    }
    r.assert_true("closed_forms_for_q_5_to_13", forms_ok);
    r.assert_true("a_qm2_negative", negative_ok);
    r
}

/// Criterion 9a: the brute-force weight enumerator equals the
/// spectrum-derived one on the bundled arcs and the family arcs.
pub fn criterion9_weights() -> RunReport {
    let mut r = RunReport::new("criterion-9-weight-oracle");
    let f7 = datasets::field_q7();
    let plane7 = Plane::new(&f7);
    let mut ok = true;
    for s in [datasets::arc_k0_3(&f7), datasets::arc_k0_2(&f7)] {
        let sp = spectrum(&plane7, &s);
        let code = code_from_arc(&f7, &plane7, &s).unwrap();
        let brute = weight_enumerator(&f7, &code).unwrap();
        ok &= brute == spectrum_derived_enumerator(&sp);
    }
    r.assert_true("bundled_arcs_dual_route", ok);
    let mut fam_ok = true;
    for q in [5u32, 7] {
        let f = field(q);
        let plane = Plane::new(&f);
        for t in family_triples_normalized(&f) {
            let c = fermat(&f, t);
            let sp = spectrum(&plane, c.points());
            let code = code_from_arc(&f, &plane, c.points()).unwrap();
            fam_ok &= weight_enumerator(&f, &code).unwrap() == spectrum_derived_enumerator(&sp);
        }
    }
    r.assert_true("family_arcs_dual_route", fam_ok);
    r
}

/// Criterion 9b: restriction-vanishing agrees with exact linear
/// divisibility on random (polynomial, line) pairs.
pub fn criterion9_restriction(q: u32, seed: u64, pairs: usize) -> RunReport {
    let mut r = RunReport::new("criterion-9-restriction-oracle");
    r.param("q", q);
    r.param("pairs", pairs as u64);
    r.param("seed", seed);
    let f = field(q);
    let lines = enumerate_lines(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31).wrapping_add(q as u64));
    let mut ok = true;
    let mut done = 0usize;
    while done < pairs {
        let d = rng.gen_range(1..=5u32);
        let terms: Vec<(u32, u32, u32, Felt)> = exponents(d)
            .map(|(i, j, k)| (i, j, k, f.elt(rng.gen_range(0..f.q()))))
            .collect();
        let poly = HPoly::from_terms(&f, d, &terms).unwrap();
        if poly.is_zero() {
            continue;
        }
        let l = lines[rng.gen_range(0..lines.len())];
        let vanishes = restrict_to_line(&f, &poly, &l).is_zero();
        let divides = exact_divide(&f, &poly, &HPoly::from_line(&f, &l))
            .unwrap()
            .is_some();
        ok &= vanishes == divides;
        done += 1;
    }
    r.assert_true("restriction_iff_divisibility", ok);
    r
}

/// Criterion 9c: equivalence witnesses verify under the group action on
/// randomized constructed instances.
pub fn criterion9_equiv(q: u32, seed: u64, instances: usize) -> RunReport {
    let mut r = RunReport::new("criterion-9-equivalence-oracle");
    r.param("q", q);
    r.param("instances", instances as u64);
    r.param("seed", seed);
    let f = field(q);
    let plane = Plane::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(77).wrapping_add(q as u64));
    let all: Vec<u32> = (0..plane_size(q) as u32).collect();
    let mut ok = true;
    for _ in 0..instances {
        let k = rng.gen_range(1..=15.min(all.len() - 1));
        let mut idxs = all.clone();
        idxs.shuffle(&mut rng);
        idxs.truncate(k);
        let s = PointSet::from_indices(q, idxs);
        let a = loop {
            let rows: [[u32; 3]; 3] = std::array::from_fn(|_| {
                std::array::from_fn(|_| rng.gen_range(0..q))
            });
            if let Ok(p) = Projectivity::new(&f, rows.map(|row| row.map(|i| f.elt(i)))) {
                break p;
            }
        };
        let moved = a.apply_set(&f, &s);
        match are_equivalent_sets(&f, &plane, &s, &moved) {
            Some(w) => ok &= w.apply_set(&f, &s) == moved,
            None => ok = false,
        }
    }
    r.assert_true("witnesses_verify_under_apply", ok);
    r
}

/// Criterion 10: the scope disclosure for the non-enumerable part of the
/// classification.
pub fn criterion10() -> RunReport {
    let mut r = RunReport::new("criterion-10-disclosure");
    r.info(
        "disclosure",
        "the degree-(q-1) classification quantifies over all curves of that degree; \
         the coefficient space is not enumerable at desk scale and is covered here \
         by the family-side counts, the lemma predicates and the q=7 arc eliminations",
    );
    r
}

/// Which q values each criterion applies to.
pub fn criterion_qs(n: usize) -> Vec<u32> {
    match n {
        1 => vec![5, 7, 8, 9, 11, 13],
        2 => vec![4, 5, 7, 8, 9],
        3 | 4 | 7 => vec![5, 7, 8, 9],
        5 => vec![5, 7, 8, 9, 11, 13],
        6 => vec![7],
        8 | 10 => vec![],
        9 => vec![2, 3, 4, 5, 7, 8],
        _ => vec![],
    }
}

/// The full verification for one q: every criterion that mentions it.
pub fn verify_paper(q: u32, seed: u64) -> RunReport {
    let mut total = RunReport::new("verify-paper");
    total.param("q", q);
    total.param("seed", seed);
    if criterion_qs(1).contains(&q) {
        total.merge(criterion1(q));
    }
    if criterion_qs(2).contains(&q) {
        total.merge(criterion2(q));
    }
    if criterion_qs(3).contains(&q) {
        total.merge(criterion3(q, seed, 1000));
        total.merge(criterion4(q));
    }
    if criterion_qs(5).contains(&q) {
        total.merge(criterion5(q));
    }
    if q == 7 {
        total.merge(criterion6());
    }
    if criterion_qs(7).contains(&q) {
        total.merge(criterion7(q));
    }
    total.merge(criterion8());
    if q <= 7 && criterion_qs(9).contains(&q) {
        total.merge(criterion9_restriction(q, seed, 500));
    }
    if criterion_qs(9).contains(&q) {
        total.merge(criterion9_equiv(q, seed, 100));
    }
    if q == 7 {
        total.merge(criterion9_weights());
    }
    total.merge(criterion10());
    total
}
