use proptest::prelude::*;
use valring::norms::gauss_extend;
use valring::poly::{self, factor};
use valring::{Field, FreeAlgebra, FreeModule, MonomialValuation, Sampler, UPoly};

fn f7_poly(coeffs: &[i64]) -> UPoly {
    let k = Field::prime(7).unwrap();
    UPoly::from_coeffs(coeffs.iter().map(|c| k.from_i64(*c)).collect())
}

fn xadic(base: &str, vars: &[&str]) -> MonomialValuation {
    MonomialValuation::new(&Field::parse_tower(&format!("base={base}")).unwrap(), vars).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_expands_to_the_input(mut c in prop::collection::vec(0i64..7, 1..7)) {
        c.push(1);
        let k = Field::prime(7).unwrap();
        let f = f7_poly(&c);
        let fac = factor(&k, &f).unwrap();
        prop_assert_eq!(fac.expand(&k), f);
        for (g, _) in &fac.factors {
            prop_assert!(poly::is_irreducible(&k, g).unwrap());
        }
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(0i64..7, 1..6), b in prop::collection::vec(0i64..7, 1..6)) {
        let k = Field::prime(7).unwrap();
        let (a, b) = (f7_poly(&a), f7_poly(&b));
        let g = poly::gcd(&k, &a, &b);
        prop_assume!(!g.is_zero());
        prop_assert!(poly::rem(&k, &a, &g).unwrap().is_zero());
        prop_assert!(poly::rem(&k, &b, &g).unwrap().is_zero());
    }

    #[test]
    fn module_norm_is_ultrametric(seed in any::<u64>()) {
        let v = xadic("Q", &["x1", "x2"]);
        let k = v.field();
        let m = FreeModule::new(&v, 2);
        let mut s = Sampler::new(seed);
        let z: Vec<_> = (0..2).map(|_| s.valued(&v)).collect();
        let w: Vec<_> = (0..2).map(|_| s.valued(&v)).collect();
        let sum: Vec<_> = z.iter().zip(&w).map(|(a, b)| k.add(a, b)).collect();
        let bound = m.norm(&z).min_additive(m.norm(&w));
        prop_assert!(m.norm(&sum).cmp_additive(&bound) != std::cmp::Ordering::Less);
    }

    #[test]
    fn gauss_value_is_multiplicative(seed in any::<u64>()) {
        let v = xadic("F3", &["x"]);
        let a = FreeAlgebra::polynomial(&v, &["w"]).unwrap();
        let g = gauss_extend(&a).unwrap();
        let mut s = Sampler::new(seed);
        let (z, u) = (s.mpoly(&v, 1, 3), s.mpoly(&v, 1, 3));
        let (ez, eu) = (g.embed(&z), g.embed(&u));
        let prod = g.frac_field().mul(&ez, &eu);
        prop_assert_eq!(g.value(&prod), g.value(&ez).add(&g.value(&eu)));
    }
}
