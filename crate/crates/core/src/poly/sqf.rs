//! Squarefree decomposition, including characteristic `p` over imperfect
//! fields.

use super::{canonical_cmp, derivative, div_exact, gcd, monic, UPoly};
use crate::error::{capability, domain, Result};
use crate::field::Field;

/// Monic pairwise coprime squarefree parts with multiplicities, ordered by
/// [`canonical_cmp`]; their product with multiplicities is `monic(f)`.
///
/// In characteristic `p`, an inseparable irreducible `g(y^p)` whose
/// coefficients are not `p`-th powers is reported as one factor when `g` is
/// linear; other shapes are a capability error.
pub fn squarefree_decomposition(k: &Field, f: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    if f.is_zero() {
        return domain("squarefree decomposition of the zero polynomial");
    }
    let mut out = Vec::new();
    decompose(k, &monic(k, f)?, 1, &mut out)?;
    out.sort_by(|a, b| canonical_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Product of the distinct squarefree parts.
pub fn squarefree_part(k: &Field, f: &UPoly) -> Result<UPoly> {
    let parts = squarefree_decomposition(k, f)?;
    Ok(super::product(k, parts.into_iter().map(|(g, _)| g)))
}

fn decompose(k: &Field, f: &UPoly, mult: usize, out: &mut Vec<(UPoly, usize)>) -> Result<()> {
    if f.deg() == 0 {
        return Ok(());
    }
    let df = derivative(k, f);
    let mut c = if df.is_zero() { f.clone() } else { gcd(k, f, &df) };
    let mut w = div_exact(k, f, &c)?;
    let mut i = 1;
    while w.deg() > 0 {
        let y = gcd(k, &w, &c);
        let z = div_exact(k, &w, &y)?;
        if z.deg() > 0 {
            out.push((z, i * mult));
        }
        i += 1;
        c = div_exact(k, &c, &y)?;
        w = y;
    }
    if c.deg() == 0 {
        return Ok(());
    }
    // c = g(y^p).
    let p = k.characteristic() as usize;
    debug_assert!(p > 0, "leftover cofactor only in positive characteristic");
    let g = UPoly::from_coeffs(c.coeffs().iter().step_by(p).cloned().collect());
    match pth_root_poly(k, &g)? {
        Some(h) => decompose(k, &h, mult * p, out),
        None => {
            let mut parts = Vec::new();
            decompose(k, &g, 1, &mut parts)?;
            for (gi, mi) in parts {
                if let Some(h) = pth_root_poly(k, &gi)? {
                    // gi(y^p) = h(y)^p
                    decompose(k, &h, mult * mi * p, out)?;
                } else if gi.deg() == 1 {
                    out.push((spread(k, &gi, p), mult * mi));
                } else {
                    return capability(format!(
                        "squarefree decomposition of {} needs a p-th root that does not exist",
                        k.fmt_poly(&spread(k, &gi, p), crate::field::POLY_VAR)
                    ));
                }
            }
            Ok(())
        }
    }
}

/// `g(y) -> g(y^p)`.
fn spread(k: &Field, g: &UPoly, p: usize) -> UPoly {
    let mut coeffs = vec![k.zero(); g.deg() * p + 1];
    for (j, c) in g.coeffs().iter().enumerate() {
        coeffs[j * p] = c.clone();
    }
    UPoly::from_coeffs(coeffs)
}

/// Coefficient-wise `p`-th root, if every coefficient is a `p`-th power.
fn pth_root_poly(k: &Field, g: &UPoly) -> Result<Option<UPoly>> {
    let mut roots = Vec::with_capacity(g.coeffs().len());
    for c in g.coeffs() {
        match k.pth_root(c)? {
            Some(r) => roots.push(r),
            None => return Ok(None),
        }
    }
    Ok(Some(UPoly::from_coeffs(roots)))
}
