//! Factor lifting for a discrete rank-1 valuation `x`-adically, to finite
//! precision.
//!
//! A polynomial over `V` is truncated to `F[[x]]/(x^prec)` and stored as the
//! list of its `x`-adic coefficients, each a polynomial over `F` in `y`.

use super::MonomialValuation;
use crate::error::{capability, domain, Result};
use crate::field::{Elem, Field};
use crate::poly::{self, factor, UPoly};

/// Outcome of [`hensel_factor_lift`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HenselOutcome {
    /// Monic factors over `K`, congruent to the residual factors, whose
    /// product agrees with `f` modulo `x^precision`.
    Lifted { factors: Vec<UPoly>, precision: usize },
    /// The residual polynomial is not squarefree.
    Refused { reason: String },
}

/// Default lifting precision `2 deg f + 2`.
pub fn default_precision(f: &UPoly) -> usize {
    2 * f.deg() + 2
}

type Series = Vec<UPoly>;

/// Power series coefficients of `c ∈ V` modulo `x^prec`.
fn expand_scalar(val: &MonomialValuation, c: &Elem, prec: usize) -> Result<Vec<Elem>> {
    let f = val.coeff_field();
    let Elem::Frac(n, d) = c else { unreachable!("rank-1 field is F(x)") };
    let ord = |p: &UPoly| p.coeffs().iter().position(|e| !e.is_zero()).unwrap_or(0);
    let (on, od) = (ord(n), ord(d));
    if n.is_zero() {
        return Ok(vec![f.zero(); prec]);
    }
    if on < od {
        return domain("coefficient outside the valuation ring");
    }
    let shift = on - od;
    let dcut = &d.coeffs()[od..];
    let inv0 = f.inv(&dcut[0])?;
    // Series inverse of d / x^od.
    let mut inv = vec![f.zero(); prec];
    if prec > 0 {
        inv[0] = inv0.clone();
    }
    for k in 1..prec {
        let mut acc = f.zero();
        for j in 1..=k.min(dcut.len() - 1) {
            acc = f.add(&acc, &f.mul(&dcut[j], &inv[k - j]));
        }
        inv[k] = f.neg(&f.mul(&acc, &inv0));
    }
    let ncut = &n.coeffs()[on..];
    let mut out = vec![f.zero(); prec];
    for k in shift..prec {
        let kk = k - shift;
        let mut acc = f.zero();
        for j in 0..=kk.min(ncut.len().saturating_sub(1)) {
            acc = f.add(&acc, &f.mul(&ncut[j], &inv[kk - j]));
        }
        out[k] = acc;
    }
    Ok(out)
}

/// `x`-adic expansion of a polynomial over `V`.
fn to_series(val: &MonomialValuation, g: &UPoly, prec: usize) -> Result<Series> {
    let f = val.coeff_field();
    let mut rows: Vec<Vec<Elem>> = vec![vec![f.zero(); g.coeffs().len()]; prec];
    for (j, c) in g.coeffs().iter().enumerate() {
        for (k, e) in expand_scalar(val, c, prec)?.into_iter().enumerate() {
            rows[k][j] = e;
        }
    }
    Ok(rows.into_iter().map(UPoly::from_coeffs).collect())
}

/// Back to a polynomial over `K = F(x)`.
fn from_series(val: &MonomialValuation, s: &Series) -> UPoly {
    let f = val.coeff_field();
    let deg = s.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let coeffs = (0..deg)
        .map(|j| {
            let xs = UPoly::from_coeffs(s.iter().map(|p| p.coeff(f, j)).collect());
            Elem::Frac(xs, UPoly::constant(f.one()))
        })
        .collect();
    UPoly::from_coeffs(coeffs)
}

fn series_mul(f: &Field, a: &Series, b: &Series, prec: usize) -> Series {
    let mut out = vec![UPoly::zero(); prec];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            if i + j < prec {
                out[i + j] = poly::add(f, &out[i + j], &poly::mul(f, ai, bj));
            }
        }
    }
    out
}

/// Lifts `target ≡ g h (mod x)` with `g, h` monic coprime to precision `prec`.
fn lift_pair(f: &Field, target: &Series, g0: &UPoly, h0: &UPoly, prec: usize) -> Result<(Series, Series)> {
    let (one, s, t) = poly::xgcd(f, g0, h0);
    debug_assert!(one.is_one(f));
    let mut g = vec![g0.clone()];
    let mut h = vec![h0.clone()];
    g.resize(prec, UPoly::zero());
    h.resize(prec, UPoly::zero());
    for k in 1..prec {
        let prod = series_mul(f, &g, &h, prec);
        let e = poly::sub(f, &target[k], &prod[k]);
        if e.is_zero() {
            continue;
        }
        let te = poly::mul(f, &t, &e);
        let (q, a) = poly::div_rem(f, &te, g0)?;
        let b = poly::add(f, &poly::mul(f, &s, &e), &poly::mul(f, &q, h0));
        g[k] = a;
        h[k] = b;
    }
    Ok((g, h))
}

fn lift_multi(f: &Field, target: &Series, residual: &[UPoly], prec: usize) -> Result<Vec<Series>> {
    if residual.len() == 1 {
        return Ok(vec![target.clone()]);
    }
    let mid = residual.len() / 2;
    let g0 = poly::product(f, residual[..mid].iter().cloned());
    let h0 = poly::product(f, residual[mid..].iter().cloned());
    let (g, h) = lift_pair(f, target, &g0, &h0, prec)?;
    let mut out = lift_multi(f, &g, &residual[..mid], prec)?;
    out.extend(lift_multi(f, &h, &residual[mid..], prec)?);
    Ok(out)
}

/// Lifts the factorization of the residual polynomial `f̄` to factors of
/// `f` modulo `x^precision`.
pub fn hensel_factor_lift(val: &MonomialValuation, f: &UPoly, precision: usize) -> Result<HenselOutcome> {
    if val.rank() != 1 || val.scale() != 1 {
        return capability("Hensel lifting is implemented for discrete rank-1 valuations only");
    }
    let k = val.field();
    if !f.is_monic(k) {
        return domain("Hensel lifting needs a monic polynomial");
    }
    if let Some(c) = f.coeffs().iter().find(|c| !val.in_ring(c)) {
        return domain(format!("coefficient {} is not in the valuation ring", k.fmt_elem(c)));
    }
    let fld = val.coeff_field();
    let series = to_series(val, f, precision.max(1))?;
    let residual = &series[0];
    let fac = factor::factor(fld, residual)?;
    if fac.factors.iter().any(|(_, m)| *m > 1) {
        return Ok(HenselOutcome::Refused {
            reason: format!("residual polynomial {} is not squarefree", fld.fmt_poly(residual, "y")),
        });
    }
    let parts: Vec<UPoly> = fac.factors.into_iter().map(|(g, _)| g).collect();
    let lifted = lift_multi(fld, &series, &parts, precision.max(1))?;
    Ok(HenselOutcome::Lifted { factors: lifted.iter().map(|s| from_series(val, s)).collect(), precision })
}

/// `x`-adic coefficients of a lifted factor, for inspection.
pub fn series_coefficients(val: &MonomialValuation, g: &UPoly, prec: usize) -> Result<Vec<UPoly>> {
    to_series(val, g, prec)
}

/// Whether `a ≡ b` modulo `x^prec` coefficientwise.
pub fn congruent(val: &MonomialValuation, a: &UPoly, b: &UPoly, prec: usize) -> Result<bool> {
    let diff = poly::sub(val.field(), a, b);
    Ok(to_series(val, &diff, prec)?.iter().all(UPoly::is_zero))
}
