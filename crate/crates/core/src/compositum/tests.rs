use proptest::prelude::*;

use super::*;

fn tower(text: &str) -> Field {
    Field::parse_tower(text).unwrap()
}

#[test]
fn gaussian_field_squared_splits_in_two() {
    let l = tower("base=Q; gen i: algebraic y^2 + 1");
    let q = l.ancestor(0);
    let pts = tensor_decompose_over(&q, &l, &l).unwrap();
    assert_eq!(pts.len(), 2);
    for pt in &pts {
        assert!(pt.maximal && pt.strictly_maximal);
        assert_eq!(pt.field, l);
    }
    let images: Vec<String> = pts.iter().map(|p| p.u.describe().join(",")).collect();
    assert_eq!(images, vec!["i -> i".to_string(), "i -> -i".to_string()]);
    assert_eq!(degree_sum(&q, &l, &l, &pts).unwrap(), (2, 2));
}

#[test]
fn radicial_square_has_one_thick_point() {
    let l = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a");
    let k = l.ancestor(1);
    let pts = tensor_decompose_over(&k, &l, &l).unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].multiplicity, 2);
    assert!(pts[0].maximal);
    assert!(!pts[0].strictly_maximal);
    assert_eq!(pts[0].field, l);
    assert_eq!(degree_sum(&k, &l, &l, &pts).unwrap(), (2, 2));
}

#[test]
fn transcendental_factor_gives_one_generic_point() {
    let k = tower("base=Q; gen i: algebraic y^2 + 1");
    let l = k.transcendental("x").unwrap();
    let pts = tensor_decompose_over(&k, &l, &k).unwrap();
    assert_eq!(pts.len(), 1);
    assert!(pts[0].strictly_maximal);
    assert_eq!(pts[0].field.description(), "base=Q; gen i: algebraic y^2 + 1; gen x: transcendental");
}

#[test]
fn clashing_names_are_renamed() {
    let k = tower("base=Q; gen x: transcendental");
    let l = k.algebraic("s", &k.parse_poly("y^2 - 2").unwrap()).unwrap();
    let m = k.algebraic("s", &k.parse_poly("y^2 - 3").unwrap()).unwrap();
    let pts = tensor_decompose_over(&k, &l, &m).unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].field.gen_names(), vec!["x", "s", "s_2"]);
}

#[test]
fn separable_transfer_for_square_root_of_two() {
    let q = Field::rationals();
    let l = q.algebraic("s", &q.parse_poly("y^2 - 2").unwrap()).unwrap();
    let m = q.transcendental("x").unwrap();
    let pts = tensor_decompose(&q, &l, &m, &FieldHom::inclusion(&q, &m).unwrap()).unwrap();
    assert_eq!(pts.len(), 1);
    let r = separable_transfer_check(&q, &l, &m, &pts[0].field, pts[0].multiplicity).unwrap();
    assert!(r.applicable && r.strictly_maximal && r.separable_over_m && r.holds);
    let trivial = separable_transfer_check(&q, &q, &m, &m, 1).unwrap();
    assert!(trivial.separable_over_m && trivial.holds);
}

#[test]
fn separable_extensions_give_strict_points() {
    let k = tower("base=Q; gen x: transcendental");
    let l = k.algebraic("s", &k.parse_poly("y^4 - 2").unwrap()).unwrap();
    let m = k.algebraic("t", &k.parse_poly("y^2 - 2").unwrap()).unwrap();
    let pts = tensor_decompose_over(&k, &l, &m).unwrap();
    assert_eq!(pts.len(), 2);
    assert!(pts.iter().all(|p| p.strictly_maximal));
    assert_eq!(degree_sum(&k, &l, &m, &pts).unwrap(), (4, 4));
}

#[test]
fn inseparable_witness() {
    let w = InseparableWitness::new(2).unwrap();
    assert!(w.l.is_separable_over(&w.k).unwrap());
    assert!(!w.e.is_separable_over(&w.m).unwrap());
    assert_eq!(w.degree().unwrap(), Some(2));
    assert!(w.to_model.is_inverse_of(&w.from_model).unwrap());
    assert_eq!(w.e_model.description(), "base=F2; gen a: transcendental; gen s: algebraic y^2 + a; gen x: transcendental");
    assert!(!w.flags().maximal);
    let r = separable_transfer_check(&w.k, &w.l, &w.m, &w.e, 1).unwrap();
    assert!(r.applicable && !r.separable_over_m && !r.maximal && r.holds);
}

#[test]
fn subfield_restrictions_stay_maximal() {
    let q = Field::rationals();
    let l0 = q.algebraic("s", &q.parse_poly("y^2 - 2").unwrap()).unwrap();
    let l = l0.transcendental("x").unwrap();
    let pts = tensor_decompose_over(&q, &l, &l0).unwrap();
    assert_eq!(pts.len(), 2);
    for pt in &pts {
        let r = subfield_maximality_check(&q, &l0, &l, &l0, pt).unwrap();
        assert!(r.restricted_maximal && r.holds);
        assert_eq!(r.subfield, "Q(s)");
        let trivial = subfield_maximality_check(&q, &q, &l, &l0, pt).unwrap();
        assert!(trivial.restricted_maximal);
    }

    let k = tower("base=F3; gen a: transcendental");
    let lx = k.transcendental("x").unwrap();
    let lxy = lx.transcendental("z").unwrap();
    let m = k.algebraic("r", &k.parse_poly("y^3 - a").unwrap()).unwrap();
    let pts = tensor_decompose_over(&k, &lxy, &m).unwrap();
    let r = subfield_maximality_check(&k, &lx, &lxy, &m, &pts[0]).unwrap();
    assert_eq!(r.subfield, "F3(a)(r)(x)");
    assert!(r.restricted_maximal);
}

#[test]
fn base_change_examples() {
    let k = tower("base=Q; gen i: algebraic y^2 + 1");
    let q = k.ancestor(0);
    let l = k.transcendental("x").unwrap();
    let m = k.transcendental("z").unwrap();
    let pts = tensor_decompose_over(&k, &l, &m).unwrap();
    let r = base_change_maximality_check(&q, &k, &l, &m, &pts[0]).unwrap();
    assert!(r.algebraic && r.maximal_over_k && r.maximal_over_k0 && r.holds);
    assert!(base_change_maximality_check(&k, &k, &l, &m, &pts[0]).unwrap().holds);

    let k = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a");
    let k0 = k.ancestor(1);
    let l = k.algebraic("w", &k.parse_poly("y^2 + r").unwrap()).unwrap();
    let pts = tensor_decompose_over(&k, &l, &l).unwrap();
    for pt in &pts {
        let rep = base_change_maximality_check(&k0, &k, &l, &l, pt).unwrap();
        assert!(rep.algebraic && rep.holds);
    }
}

#[test]
fn factoring_beyond_reach_is_reported() {
    let k = tower("base=F2; gen a: transcendental");
    let f = k.parse_poly("y^3 + a*y + 1").unwrap();
    assert!(matches!(k.algebraic("w", &f), Err(crate::Error::Capability(_))));
    let l = k.algebraic_unchecked("w", f);
    let m = k.transcendental("b").unwrap();
    assert!(matches!(tensor_decompose_over(&k, &l, &m), Err(crate::Error::Capability(_))));
}

fn tower_over_f5(name: &str, coeffs: &[u64]) -> Option<(Field, Field)> {
    let f5 = Field::prime(5).unwrap();
    let mut c: Vec<Elem> = coeffs.iter().map(|&x| f5.from_i64(x as i64)).collect();
    c.push(f5.one());
    let f = UPoly::from_coeffs(c);
    if f.deg() < 2 || !factor::is_irreducible(&f5, &f).ok()? {
        return None;
    }
    Some((f5.clone(), f5.algebraic(name, &f).ok()?))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn points_match_factors_and_degrees_add_up(
        lcoeffs in prop::collection::vec(0u64..5, 1..4),
        mcoeffs in prop::collection::vec(0u64..5, 1..3),
    ) {
        let (Some((f5, l)), Some((_, m))) = (tower_over_f5("w", &lcoeffs), tower_over_f5("v", &mcoeffs)) else { return Ok(()) };
        let pts = tensor_decompose_over(&f5, &l, &m).unwrap();
        let mapped = l.step().unwrap().minpoly().unwrap().map(|c| m.lift_from(&f5, c));
        let fac = factor::factor(&m, &mapped).unwrap();
        prop_assert_eq!(pts.len(), fac.count_distinct());
        let (sum, total) = degree_sum(&f5, &l, &m, &pts).unwrap();
        prop_assert_eq!(sum, total);
        prop_assert!(pts.iter().all(|p| p.strictly_maximal));
    }
}
