//! Factorization over an algebraic step `P(α)` by norm reduction to `P`.

use super::{compose, factor::factor_squarefree, gcd, UPoly};
use crate::error::{capability, Result};
use crate::field::{linalg, Elem, Field};

/// `N(Y) = Norm_{k/P}(h(Y))` for `h` over `k = P(α)`, a polynomial over `P`.
pub(crate) fn norm_poly(k: &Field, h: &UPoly) -> Result<UPoly> {
    let parent = k.parent().expect("algebraic step").clone();
    let d = k.step().unwrap().degree().expect("algebraic step");
    let aux = parent.transcendental_bounded("norm_var", usize::MAX)?;
    let alpha = k.gen()?;
    // Column i holds the coordinates of h(Y) * α^i.
    let mut m = vec![vec![aux.zero(); d]; d];
    let mut alpha_i = k.one();
    for i in 0..d {
        for (j, hj) in h.coeffs().iter().enumerate() {
            let coords = linalg::flatten(k, &parent, &k.mul(hj, &alpha_i))?;
            let yj = aux.pow_u(&aux.gen()?, j as u64);
            for (r, c) in coords.into_iter().enumerate() {
                let term = aux.mul(&aux.lift_parent(c), &yj);
                m[r][i] = aux.add(&m[r][i], &term);
            }
        }
        alpha_i = k.mul(&alpha_i, &alpha);
    }
    let det = linalg::det(&aux, &m);
    match det {
        Elem::Frac(num, den) if den.is_one(&parent) => Ok(num),
        _ => unreachable!("norm of an integral element is a polynomial"),
    }
}

pub(crate) fn factor_squarefree_algebraic(k: &Field, g: &UPoly, seed: u64) -> Result<Vec<UPoly>> {
    let parent = k.parent().expect("algebraic step").clone();
    let alpha = k.gen()?;
    let p = k.characteristic();
    let max_shift = if p == 0 { 24 } else { p.min(24) };
    for s in 0..max_shift {
        // g_s(y) = g(y - s α)
        let shift = k.mul(&k.from_i64(s as i64), &alpha);
        let lin = UPoly::from_coeffs(vec![k.neg(&shift), k.one()]);
        let gs = compose(k, g, &lin);
        let n = norm_poly(k, &gs)?;
        if !crate::field::tower_ops::is_separable_poly(&parent, &n) {
            continue;
        }
        let parts = factor_squarefree(&parent, &super::monic(&parent, &n)?, seed)?;
        if parts.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        let back = UPoly::from_coeffs(vec![shift, k.one()]);
        let mut out = Vec::new();
        for part in parts {
            let lifted = part.map(|c| k.lift_parent(c.clone()));
            let h = gcd(k, &gs, &lifted);
            if h.deg() > 0 {
                out.push(compose(k, &h, &back));
            }
        }
        return Ok(out);
    }
    capability(format!(
        "no squarefree norm found for {} over {}",
        k.fmt_poly(g, crate::field::POLY_VAR),
        k.short_name()
    ))
}
