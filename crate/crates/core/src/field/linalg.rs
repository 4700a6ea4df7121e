//! Dense linear algebra over a tower field, and coordinates of a finite
//! tower over a subtower.

use super::{Elem, Field, StepKind};
use crate::error::{capability, structural, Result};

pub type Matrix = Vec<Vec<Elem>>;

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref(k: &Field, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = k.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = k.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = k.mul(&f, &m[r][j]);
                    m[i][j] = k.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(k: &Field, m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(k, &mut m).len()
}

/// Solves `A x = b` for square or rectangular `A` given by rows; `None` when
/// inconsistent. Free variables are set to zero.
pub fn solve(k: &Field, a: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(k, &mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![k.zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][ncols].clone();
    }
    Some(x)
}

/// Coefficients expressing `target` in the span of `vectors`, if any.
pub fn in_span(k: &Field, vectors: &[Vec<Elem>], target: &[Elem]) -> Option<Vec<Elem>> {
    let n = target.len();
    if vectors.is_empty() {
        return target.iter().all(Elem::is_zero).then(Vec::new);
    }
    let a: Matrix = (0..n).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    solve(k, &a, target)
}

pub fn det(k: &Field, m: &Matrix) -> Elem {
    let n = m.len();
    let mut m = m.clone();
    let mut acc = k.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return k.zero() };
        if p != c {
            m.swap(p, c);
            acc = k.neg(&acc);
        }
        acc = k.mul(&acc, &m[c][c]);
        let inv = k.inv(&m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = k.mul(&m[i][c], &inv);
            for j in c..n {
                let t = k.mul(&f, &m[c][j]);
                m[i][j] = k.sub(&m[i][j], &t);
            }
        }
    }
    acc
}

/// `[sup : sub]` when every step in between is algebraic.
pub fn dim_over(sup: &Field, sub: &Field) -> Result<usize> {
    sup.degree_over(sub)?
        .ok_or_else(|| crate::error::Error::Capability(format!("{sup} is not finite over {sub}")))
}

/// Coordinates of `e` in the power basis of `sup` over the subtower `sub`
/// (lowest step varies slowest).
pub fn flatten(sup: &Field, sub: &Field, e: &Elem) -> Result<Vec<Elem>> {
    if sup.depth() == sub.depth() {
        if sup != sub {
            return structural(format!("{sub} is not a subtower of {sup}"));
        }
        return Ok(vec![e.clone()]);
    }
    let parent = sup.parent().unwrap();
    match &sup.step().unwrap().kind {
        StepKind::Transcendental => capability(format!("{sup} is transcendental over {sub}")),
        StepKind::Algebraic { minpoly, .. } => {
            let Elem::Alg(p) = e else { unreachable!("algebraic level") };
            let mut out = Vec::new();
            for i in 0..minpoly.deg() {
                out.extend(flatten(parent, sub, &p.coeff(parent, i))?);
            }
            Ok(out)
        }
    }
}

pub fn unflatten(sup: &Field, sub: &Field, coords: &[Elem]) -> Result<Elem> {
    if sup.depth() == sub.depth() {
        return Ok(coords[0].clone());
    }
    let parent = sup.parent().unwrap();
    let d = sup.step().unwrap().degree().ok_or_else(|| {
        crate::error::Error::Capability(format!("{sup} is transcendental over {sub}"))
    })?;
    let chunk = coords.len() / d;
    let mut acc = sup.zero();
    let g = sup.gen()?;
    for i in (0..d).rev() {
        let c = unflatten(parent, sub, &coords[i * chunk..(i + 1) * chunk])?;
        acc = sup.add(&sup.mul(&acc, &g), &sup.lift_parent(c));
    }
    Ok(acc)
}

/// The `sub`-linear span of the monomials in `gens` inside `sup`, as an
/// echelon basis of coordinate vectors. `sub[gens]` is a field because every
/// generator is algebraic, so this is the subfield `sub(gens)`.
pub fn generated_subspace(sup: &Field, sub: &Field, gens: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let n = dim_over(sup, sub)?;
    let mut basis: Vec<Vec<Elem>> = vec![flatten(sup, sub, &sup.one())?];
    let mut frontier = vec![sup.one()];
    while let Some(b) = frontier.pop() {
        for g in gens {
            let cand = sup.mul(&b, g);
            let v = flatten(sup, sub, &cand)?;
            if in_span(sub, &basis, &v).is_none() {
                basis.push(v);
                frontier.push(cand);
                if basis.len() == n {
                    return Ok(basis);
                }
            }
        }
    }
    Ok(basis)
}
