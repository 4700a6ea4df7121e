use proptest::prelude::*;

use super::tower_ops::is_separable_poly;
use super::*;
use crate::poly::factor;

fn tower(text: &str) -> Field {
    Field::parse_tower(text).unwrap()
}

fn el(k: &Field, s: &str) -> Elem {
    k.parse_elem(s).unwrap()
}

#[test]
fn gaussian_integers_square_of_i() {
    let k = tower("base=Q; gen i: algebraic y^2 + 1");
    let i = k.gen().unwrap();
    assert_eq!(k.mul(&i, &i), k.from_i64(-1));
}

#[test]
fn square_root_of_transcendental_squares_back() {
    let k = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
    let r = k.gen_by_name("r").unwrap();
    assert_eq!(k.mul(&r, &r), el(&k, "a"));
}

#[test]
fn fraction_sum() {
    let k = tower("base=Q; gen x: transcendental");
    let s = k.add(&el(&k, "(x+1)/x"), &el(&k, "1/x"));
    assert_eq!(s, el(&k, "(x+2)/x"));
    assert_eq!(k.fmt_elem(&s), "(x + 2)/x");
}

#[test]
fn inverse_of_zero_is_domain_error() {
    let k = tower("base=Q; gen i: algebraic y^2 + 1");
    assert!(matches!(k.inv(&k.zero()), Err(Error::Domain(_))));
}

#[test]
fn separability_examples() {
    let q = Field::rationals();
    assert!(is_separable_poly(&q, &q.parse_poly("y^2 + 1").unwrap()));
    let fa = tower("base=F2; gen a: transcendental");
    assert!(!is_separable_poly(&fa, &fa.parse_poly("y^2 - a").unwrap()));
    let f2 = Field::prime(2).unwrap();
    assert!(is_separable_poly(&f2, &f2.parse_poly("y^3 - y - 1").unwrap()));
}

#[test]
fn radicial_examples() {
    let big = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
    let small = big.ancestor(1);
    assert!(big.is_radicial_over(&small, 2, 8).unwrap());

    let qi = tower("base=Q; gen i: algebraic y^2 + 1");
    assert!(!qi.is_radicial_over(&qi.ancestor(0), 2, 8).unwrap());

    let fx = tower("base=F2; gen a: transcendental; gen x: transcendental");
    assert!(!fx.is_radicial_over(&fx.ancestor(1), 2, 8).unwrap());
}

#[test]
fn perfect_closure_examples() {
    let f2 = Field::prime(2).unwrap();
    let c = f2.perfect_closure_truncated(2, 3).unwrap();
    assert_eq!(c.field, f2);

    let fa = tower("base=F2; gen a: transcendental");
    let c = fa.perfect_closure_truncated(2, 1).unwrap();
    assert_eq!(c.field.depth(), 2);
    let root = c.root("a", 1).unwrap();
    assert_eq!(c.field.mul(root, root), c.field.lift_from(&fa, &el(&fa, "a")));
    assert!(c.field.is_radicial_over(&fa, 2, 8).unwrap());

    let fst = tower("base=F3; gen s: transcendental; gen t: transcendental");
    let c = fst.perfect_closure_truncated(3, 1).unwrap();
    assert_eq!(c.adjoined, vec!["s_r1".to_string(), "t_r1".to_string()]);
    assert_eq!(c.field.degree_over(&fst).unwrap(), Some(9));
    assert!(c.field.is_radicial_over(&fst, 3, 8).unwrap());
}

#[test]
fn perfect_closure_skips_existing_roots() {
    let f = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
    let c = f.perfect_closure_truncated(2, 1).unwrap();
    assert_eq!(c.adjoined, vec!["r_r1".to_string()]);
    assert_eq!(c.root("a", 1).unwrap(), &c.field.gen_by_name("r").unwrap());
}

#[test]
fn perfect_closure_rejects_characteristic_zero() {
    assert!(matches!(Field::rationals().perfect_closure_truncated(2, 1), Err(Error::Domain(_))));
}

#[test]
fn reducible_minimal_polynomial_is_rejected() {
    let q = Field::rationals();
    let f = q.parse_poly("y^2 - 4").unwrap();
    assert!(matches!(q.algebraic("r", &f), Err(Error::Structural(_))));
}

#[test]
fn duplicate_and_reserved_names_are_rejected() {
    let k = tower("base=Q; gen x: transcendental");
    assert!(k.transcendental("x").is_err());
    assert!(k.transcendental("y").is_err());
}

#[test]
fn transcendence_degree_cap() {
    let k = tower("base=Q; gen a: transcendental; gen b: transcendental; gen c: transcendental");
    assert!(matches!(k.transcendental("d"), Err(Error::Capability(_))));
}

#[test]
fn pth_roots_in_towers() {
    let k = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a; gen u: algebraic y^2 - r");
    let a = el(&k, "a");
    assert_eq!(k.pth_root(&a).unwrap(), Some(el(&k, "r")));
    assert_eq!(k.pth_root(&el(&k, "r")).unwrap(), Some(el(&k, "u")));
    assert_eq!(k.pth_root(&el(&k, "u")).unwrap(), None);
    let fa = k.ancestor(1);
    assert_eq!(fa.pth_root(&el(&fa, "a")).unwrap(), None);
    assert_eq!(fa.pth_root(&el(&fa, "(a^2 + 1)/a^4")).unwrap(), Some(el(&fa, "(a + 1)/a^2")));
}

#[test]
fn pth_roots_over_finite_extensions() {
    let k = tower("base=F2; gen w: algebraic y^2 + y + 1");
    let w = k.gen().unwrap();
    let root = k.pth_root(&w).unwrap().unwrap();
    assert_eq!(k.mul(&root, &root), w);
}

#[test]
fn tower_description_round_trip() {
    let text = "base=F2; gen a: transcendental; gen r: algebraic y^2 + a";
    let k = tower(text);
    assert_eq!(k.description(), text);
    assert_eq!(tower(&k.description()), k);
}

#[test]
fn homomorphism_checks_relations() {
    let qi = tower("base=Q; gen i: algebraic y^2 + 1");
    let conj = FieldHom::new(&qi, &qi, vec![el(&qi, "-i")]).unwrap();
    assert!(conj.is_inverse_of(&conj).unwrap());
    assert!(FieldHom::new(&qi, &qi, vec![el(&qi, "2*i")]).is_err());
}

#[test]
fn flatten_round_trip() {
    let k = tower("base=Q; gen i: algebraic y^2 + 1; gen s: algebraic y^2 - 2");
    let e = el(&k, "3 + i*s - 1/2*s");
    let q = k.prime_field();
    let coords = linalg::flatten(&k, &q, &e).unwrap();
    assert_eq!(coords.len(), 4);
    assert_eq!(linalg::unflatten(&k, &q, &coords).unwrap(), e);
}

#[test]
fn tower_irreducibility_uses_factorization() {
    let qi = tower("base=Q; gen i: algebraic y^2 + 1");
    let f = qi.parse_poly("y^2 + 1").unwrap();
    assert!(!factor::is_irreducible(&qi, &f).unwrap());
}

fn small_elem(k: &Field, seed: &[i64]) -> Elem {
    // Combination of small monomials in the generators.
    let gens = k.gens();
    let mut acc = k.from_i64(seed[0]);
    for (j, (_, g)) in gens.iter().enumerate() {
        let c = k.from_i64(seed[(j + 1) % seed.len()]);
        acc = k.add(&acc, &k.mul(&c, &k.pow_u(g, 1 + (seed[(j + 2) % seed.len()].unsigned_abs() % 2))));
    }
    acc
}

fn fields() -> Vec<Field> {
    vec![
        tower("base=Q; gen i: algebraic y^2 + 1"),
        tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a"),
        tower("base=F5; gen x: transcendental"),
        tower("base=Q; gen x: transcendental; gen s: algebraic y^2 - 2"),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(which in 0usize..4, a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3), c in prop::collection::vec(-3i64..4, 3)) {
        let k = &fields()[which];
        let (x, y, z) = (small_elem(k, &a), small_elem(k, &b), small_elem(k, &c));
        prop_assert_eq!(k.mul(&k.mul(&x, &y), &z), k.mul(&x, &k.mul(&y, &z)));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert_eq!(k.add(&x, &y), k.add(&y, &x));
        if !x.is_zero() {
            prop_assert!(k.is_one(&k.mul(&x, &k.inv(&x).unwrap())));
        }
    }

    #[test]
    fn element_text_round_trip(which in 0usize..4, a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3)) {
        let k = &fields()[which];
        let x = small_elem(k, &a);
        let y = small_elem(k, &b);
        let e = if y.is_zero() { x } else { k.div(&x, &y).unwrap() };
        prop_assert_eq!(k.parse_elem(&k.fmt_elem(&e)).unwrap(), e);
    }

    #[test]
    fn tower_separability_matches_stepwise_gcd(which in 0usize..4) {
        let k = &fields()[which];
        let direct = k.levels().iter().filter_map(|l| {
            let step = l.step()?;
            Some(step.minpoly().map_or(true, |m| is_separable_poly(l.parent().unwrap(), m)))
        }).all(|b| b);
        prop_assert_eq!(k.all_steps_separable(), direct);
    }
}
