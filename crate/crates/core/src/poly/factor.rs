//! Univariate factorization over tower fields.
//!
//! Dispatch on the coefficient field:
//! * finite fields: distinct-degree then equal-degree splitting;
//! * `Q`: modular factorization, Hensel lifting and factor recombination;
//! * an algebraic step over a field we can factor over: norm reduction;
//! * a transcendental step whose coefficients all lie in the level below:
//!   factor there (a purely transcendental extension keeps irreducibles
//!   irreducible);
//! * otherwise only the squarefree decomposition is available, and the
//!   answer is a capability error unless every part is linear or of the form
//!   `y^p - c` with `c` not a `p`-th power.

use super::{canonical_cmp, finite, integer, monic, product, sqf, trager, UPoly};
use crate::error::{capability, domain, Result};
use crate::field::{Elem, Field, POLY_VAR};

/// Default bound on the degree of polynomials [`factor`] accepts.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

/// Default seed for the random choices of equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0;

/// Bound used for auxiliary factorizations (norms have larger degree).
const INTERNAL_DEGREE_BOUND: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Leading coefficient of the input.
    pub unit: Elem,
    /// Monic irreducible factors with multiplicities, ordered by
    /// [`canonical_cmp`].
    pub factors: Vec<(UPoly, usize)>,
}

impl Factorization {
    /// `unit * Π f_i^{m_i}`.
    pub fn expand(&self, k: &Field) -> UPoly {
        let body = product(k, self.factors.iter().map(|(f, m)| super::pow(k, f, *m as u64)));
        super::scale(k, &body, &self.unit)
    }

    pub fn count_distinct(&self) -> usize {
        self.factors.len()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FactorOptions {
    pub degree_bound: usize,
    pub seed: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { degree_bound: DEFAULT_DEGREE_BOUND, seed: DEFAULT_SEED }
    }
}

pub fn factor(k: &Field, f: &UPoly) -> Result<Factorization> {
    factor_with(k, f, FactorOptions::default())
}

pub fn factor_with(k: &Field, f: &UPoly, opts: FactorOptions) -> Result<Factorization> {
    let Some(unit) = f.lc().cloned() else { return domain("factorization of the zero polynomial") };
    if f.deg() > opts.degree_bound {
        return capability(format!(
            "degree {} exceeds the factorization bound {}",
            f.deg(),
            opts.degree_bound
        ));
    }
    let mut factors = Vec::new();
    for (g, m) in sqf::squarefree_decomposition(k, f)? {
        for h in factor_squarefree(k, &g, opts.seed)? {
            factors.push((h, m));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// True when `f` has positive degree and no proper factorization.
pub fn is_irreducible(k: &Field, f: &UPoly) -> Result<bool> {
    if f.deg() == 0 {
        return Ok(false);
    }
    let fac = factor(k, f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Irreducible monic factors of a monic squarefree polynomial, unsorted.
pub(crate) fn factor_squarefree(k: &Field, g: &UPoly, seed: u64) -> Result<Vec<UPoly>> {
    if g.deg() <= 1 {
        return Ok(vec![g.clone()]);
    }
    if g.deg() > INTERNAL_DEGREE_BOUND {
        return capability(format!("auxiliary factorization of degree {} is too large", g.deg()));
    }
    if k.is_finite() {
        return finite::factor_squarefree(k, g, seed);
    }
    if k.is_rationals() {
        return integer::factor_squarefree_rational(k, g);
    }
    let parent = k.parent().expect("non-prime infinite fields are extensions").clone();
    let step = k.step().unwrap();
    if step.is_transcendental() {
        if let Some(down) = descend_poly(k, &parent, g) {
            let parts = factor_squarefree(&parent, &down, seed)?;
            return Ok(parts.iter().map(|h| h.map(|c| k.lift_parent(c.clone()))).collect());
        }
        if let Some(true) = pure_inseparable_irreducible(k, g)? {
            return Ok(vec![g.clone()]);
        }
        return capability(format!(
            "factorization of {} over the function field {} is not supported",
            k.fmt_poly(g, POLY_VAR),
            k.short_name()
        ));
    }
    if let Some(true) = pure_inseparable_irreducible(k, g)? {
        return Ok(vec![g.clone()]);
    }
    trager::factor_squarefree_algebraic(k, g, seed)
}

/// Coefficients pushed down one level, when they all lie there.
pub(crate) fn descend_poly(k: &Field, parent: &Field, g: &UPoly) -> Option<UPoly> {
    debug_assert!(k.parent() == Some(parent));
    Some(UPoly::from_coeffs(g.coeffs().iter().map(|c| k.descend(c)).collect::<Option<Vec<_>>>()?))
}

/// For `g = y^p - c` in characteristic `p`: whether `c` is not a `p`-th
/// power (then `g` is irreducible). `None` for other shapes.
fn pure_inseparable_irreducible(k: &Field, g: &UPoly) -> Result<Option<bool>> {
    let p = k.characteristic() as usize;
    if p == 0 || g.deg() != p || !g.coeffs()[1..p].iter().all(Elem::is_zero) {
        return Ok(None);
    }
    let g = monic(k, g)?;
    let c = k.neg(&g.coeffs()[0]);
    Ok(Some(!k.is_pth_power(&c)?))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::poly::{div_rem, squarefree_decomposition};

    fn tower(text: &str) -> Field {
        Field::parse_tower(text).unwrap()
    }

    fn names(k: &Field, fac: &Factorization) -> Vec<(String, usize)> {
        fac.factors.iter().map(|(f, m)| (k.fmt_poly(f, "y"), *m)).collect()
    }

    #[test]
    fn sum_of_squares_splits_over_gaussian_rationals() {
        let k = tower("base=Q; gen i: algebraic y^2 + 1");
        let f = k.parse_poly("y^2 + 1").unwrap();
        let fac = factor(&k, &f).unwrap();
        assert_eq!(names(&k, &fac), vec![("y - i".into(), 1), ("y + i".into(), 1)]);
        assert_eq!(fac.expand(&k), f);
    }

    #[test]
    fn sum_of_squares_irreducible_over_rationals() {
        let q = Field::rationals();
        assert!(is_irreducible(&q, &q.parse_poly("y^2 + 1").unwrap()).unwrap());
    }

    #[test]
    fn frobenius_power_over_f2() {
        let k = Field::prime(2).unwrap();
        let f = k.parse_poly("y^4 + 1").unwrap();
        let fac = factor(&k, &f).unwrap();
        assert_eq!(names(&k, &fac), vec![("y + 1".into(), 4)]);
        assert_eq!(fac.expand(&k), f);
    }

    #[test]
    fn squarefree_examples() {
        let q = Field::rationals();
        let f = q.parse_poly("(y - 1)^2*(y + 1)").unwrap();
        let parts = squarefree_decomposition(&q, &f).unwrap();
        assert_eq!(
            parts.iter().map(|(g, m)| (q.fmt_poly(g, "y"), *m)).collect::<Vec<_>>(),
            vec![("y - 1".to_string(), 2), ("y + 1".to_string(), 1)]
        );
        assert_eq!(q.fmt_poly(&crate::poly::squarefree_part(&q, &f).unwrap(), "y"), "y^2 - 1");

        let k = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
        let g = k.parse_poly("y^2 - a").unwrap();
        let parts = squarefree_decomposition(&k, &g).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(k.fmt_poly(&parts[0].0, "y"), "y + r");
        assert_eq!(parts[0].1, 2);

        let sep = q.parse_poly("y^3 - 2").unwrap();
        assert_eq!(squarefree_decomposition(&q, &sep).unwrap(), vec![(sep, 1)]);
    }

    #[test]
    fn inseparable_irreducible_over_function_field() {
        let k = tower("base=F2; gen a: transcendental");
        let f = k.parse_poly("y^2 - a").unwrap();
        assert!(is_irreducible(&k, &f).unwrap());
    }

    #[test]
    fn degree_bound_is_a_capability_error() {
        let q = Field::rationals();
        let f = q.parse_poly("y^13 - 2").unwrap();
        assert!(matches!(factor(&q, &f), Err(crate::Error::Capability(_))));
    }

    #[test]
    fn function_field_with_varying_coefficients_is_refused() {
        let k = tower("base=Q; gen x: transcendental");
        let f = k.parse_poly("y^2 - x").unwrap();
        assert!(matches!(factor(&k, &f), Err(crate::Error::Capability(_))));
    }

    #[test]
    fn rational_factorization_with_several_modular_factors() {
        let q = Field::rationals();
        let f = q.parse_poly("(y^2 - 2)*(y^2 - 3)*(2*y + 1)*(y^4 + 1)").unwrap();
        let fac = factor(&q, &f).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.expand(&q), f);
        // x^4 + 1 is irreducible over Q but splits modulo every prime.
        assert!(is_irreducible(&q, &q.parse_poly("y^4 + 1").unwrap()).unwrap());
    }

    #[test]
    fn tower_of_two_quadratic_steps() {
        let k = tower("base=Q; gen i: algebraic y^2 + 1; gen s: algebraic y^2 - 2");
        let f = k.parse_poly("y^4 + 1").unwrap();
        let fac = factor(&k, &f).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.expand(&k), f);
    }

    #[test]
    fn finite_extension_factorization() {
        let k = tower("base=F2; gen w: algebraic y^2 + y + 1");
        let f = k.parse_poly("y^2 + y + 1").unwrap();
        let fac = factor(&k, &f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(&k), f);
    }

    /// Irreducible factors by repeatedly dividing out the least monic divisor
    /// of smallest degree, enumerating all monic candidates.
    fn brute_force(k: &Field, f: &UPoly, p: u64) -> Vec<(UPoly, usize)> {
        let mut rest = crate::poly::monic(k, f).unwrap();
        let mut out: Vec<(UPoly, usize)> = Vec::new();
        'outer: while rest.deg() > 0 {
            for d in 1..=rest.deg() {
                let count = p.pow(d as u32);
                for idx in 0..count {
                    let mut coeffs = Vec::new();
                    let mut x = idx;
                    for _ in 0..d {
                        coeffs.push(k.from_i64((x % p) as i64));
                        x /= p;
                    }
                    coeffs.push(k.one());
                    let cand = UPoly::from_coeffs(coeffs);
                    let (q, r) = div_rem(k, &rest, &cand).unwrap();
                    if r.is_zero() {
                        match out.iter_mut().find(|(g, _)| *g == cand) {
                            Some(entry) => entry.1 += 1,
                            None => out.push((cand, 1)),
                        }
                        rest = q;
                        continue 'outer;
                    }
                }
            }
        }
        out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_brute_force_over_f5(coeffs in prop::collection::vec(0i64..5, 1..7)) {
            let k = Field::prime(5).unwrap();
            let mut cs: Vec<Elem> = coeffs.iter().map(|&c| k.from_i64(c)).collect();
            cs.push(k.one());
            let f = UPoly::from_coeffs(cs);
            let fac = factor(&k, &f).unwrap();
            prop_assert_eq!(fac.expand(&k), f.clone());
            prop_assert_eq!(fac.factors.clone(), brute_force(&k, &f, 5));
            let separable = crate::field::tower_ops::is_separable_poly(&k, &f);
            prop_assert_eq!(separable, fac.factors.iter().all(|(_, m)| *m == 1));
        }

        #[test]
        fn rational_factorization_refactors(roots in prop::collection::vec(-4i64..5, 1..4), extra in 0i64..3) {
            let q = Field::rationals();
            let mut f = q.parse_poly(&format!("y^2 + {}", extra + 1)).unwrap();
            for r in &roots {
                f = crate::poly::mul(&q, &f, &q.parse_poly(&format!("3*y - {r}")).unwrap());
            }
            let fac = factor(&q, &f).unwrap();
            prop_assert_eq!(fac.expand(&q), f);
        }
    }
}
