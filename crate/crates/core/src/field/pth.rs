//! `p`-th roots in characteristic `p`.
//!
//! Every level `L` of a supported tower has a `p`-basis `B` over `L^p`, and
//! each element decomposes uniquely as `e = Σ u_μ^p μ` over the monomials
//! `μ = Π b^{m_b}` with `0 ≤ m_b < p`. The element is a `p`-th power exactly
//! when only the empty monomial carries a nonzero `u`.

use std::collections::BTreeMap;

use super::{linalg, Elem, Field, Kind, StepKind};
use crate::error::{capability, domain, Result};
use crate::poly::{self, UPoly};

/// Exponent vector over the `p`-basis, mapped to the root `u_μ`.
pub type PDecomposition = BTreeMap<Vec<u32>, Elem>;

fn add_into(k: &Field, map: &mut PDecomposition, key: Vec<u32>, u: Elem) {
    if u.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            *v = k.add(v, &u);
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, u);
        }
    }
}

impl Field {
    /// Elements of `self` forming a `p`-basis over `self^p`.
    pub fn p_basis(&self) -> Result<Vec<Elem>> {
        if self.characteristic() == 0 {
            return domain("p-bases exist only in positive characteristic");
        }
        let Some(parent) = self.parent() else { return Ok(Vec::new()) };
        let lift = |v: Vec<Elem>| v.into_iter().map(|e| self.lift_parent(e)).collect::<Vec<_>>();
        match &self.step().unwrap().kind {
            StepKind::Transcendental => {
                let mut b = lift(parent.p_basis()?);
                b.push(self.gen()?);
                Ok(b)
            }
            StepKind::Algebraic { separable: true, .. } => Ok(lift(parent.p_basis()?)),
            StepKind::Algebraic { separable: false, minpoly } => {
                let (slot, w) = self.inseparable_step_data(parent, minpoly)?;
                let mut b = lift(parent.p_basis()?);
                // beta = alpha / w replaces the basis element it is a root of.
                b[slot] = self.div(&self.gen()?, &self.lift_parent(w))?;
                Ok(b)
            }
        }
    }

    /// For a step `y^p - c` with `c = w^p g`, `g` a single `p`-basis element
    /// of the parent: the index of `g` and the element `w`.
    fn inseparable_step_data(&self, parent: &Field, minpoly: &UPoly) -> Result<(usize, Elem)> {
        let p = self.characteristic() as usize;
        let pure = minpoly.deg() == p && minpoly.coeffs()[1..p].iter().all(Elem::is_zero);
        if !pure {
            return capability(format!(
                "p-th roots over inseparable steps other than y^p - c are not supported ({})",
                self.short_name()
            ));
        }
        let c = parent.neg(&minpoly.coeffs()[0]);
        let dec = parent.p_decompose(&c)?;
        let single = (dec.len() == 1).then(|| dec.iter().next().unwrap());
        match single {
            Some((key, w)) if key.iter().sum::<u32>() == 1 => {
                Ok((key.iter().position(|&m| m == 1).unwrap(), w.clone()))
            }
            _ => capability(format!(
                "inseparable step {} is not a root of a single p-basis element",
                self.short_name()
            )),
        }
    }

    /// Decomposition `e = Σ u_μ^p μ` over [`Field::p_basis`].
    pub fn p_decompose(&self, e: &Elem) -> Result<PDecomposition> {
        let p = self.characteristic();
        if p == 0 {
            return domain("p-th roots need positive characteristic");
        }
        let mut out = PDecomposition::new();
        if e.is_zero() {
            return Ok(out);
        }
        let parent = match &self.0.kind {
            Kind::Prime(_) => {
                // Frobenius is the identity on F_p.
                out.insert(Vec::new(), e.clone());
                return Ok(out);
            }
            Kind::Rationals => unreachable!(),
            Kind::Ext { parent, .. } => parent,
        };
        let nb = parent.p_basis()?.len();
        match &self.step().unwrap().kind {
            StepKind::Transcendental => {
                let Elem::Frac(n, d) = e else { unreachable!() };
                let h = poly::mul(parent, n, &poly::pow(parent, d, p - 1));
                // Group exponents j = p*q + r.
                let mut grouped: BTreeMap<Vec<u32>, Vec<Elem>> = BTreeMap::new();
                for (j, c) in h.coeffs().iter().enumerate() {
                    let (q, r) = (j / p as usize, (j % p as usize) as u32);
                    for (mu, u) in parent.p_decompose(c)? {
                        let mut key = mu.clone();
                        key.resize(nb, 0);
                        key.push(r);
                        let slot = grouped.entry(key).or_default();
                        if slot.len() <= q {
                            slot.resize(q + 1, parent.zero());
                        }
                        slot[q] = u;
                    }
                }
                for (key, coeffs) in grouped {
                    let u = self.make_frac(UPoly::from_coeffs(coeffs), d.clone())?;
                    add_into(self, &mut out, key, u);
                }
            }
            StepKind::Algebraic { minpoly, separable: true } => {
                // Solve e = Σ b_i alpha^{p i} over the parent.
                let dgr = minpoly.deg();
                let alpha_p = self.pow_u(&self.gen()?, p);
                let mut cols = Vec::with_capacity(dgr);
                let mut cur = self.one();
                for _ in 0..dgr {
                    cols.push(linalg::flatten(self, parent, &cur)?);
                    cur = self.mul(&cur, &alpha_p);
                }
                let b = linalg::in_span(parent, &cols, &linalg::flatten(self, parent, e)?)
                    .expect("alpha^p generates a separable step");
                let alpha = self.gen()?;
                for (i, bi) in b.iter().enumerate() {
                    let alpha_i = self.pow_u(&alpha, i as u64);
                    for (mu, u) in parent.p_decompose(bi)? {
                        let mut key = mu;
                        key.resize(nb, 0);
                        add_into(self, &mut out, key, self.mul(&self.lift_parent(u), &alpha_i));
                    }
                }
            }
            StepKind::Algebraic { minpoly, separable: false } => {
                let (slot, w) = self.inseparable_step_data(parent, minpoly)?;
                let beta = self.div(&self.gen()?, &self.lift_parent(w.clone()))?;
                let Elem::Alg(ep) = e else { unreachable!() };
                let mut wk = parent.one();
                for k in 0..p as usize {
                    let ek = parent.mul(&ep.coeff(parent, k), &wk);
                    wk = parent.mul(&wk, &w);
                    for (mu, u) in parent.p_decompose(&ek)? {
                        let mut key = mu;
                        key.resize(nb, 0);
                        let j = key[slot];
                        key[slot] = k as u32;
                        let root = self.mul(&self.lift_parent(u), &self.pow_u(&beta, j as u64));
                        add_into(self, &mut out, key, root);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The `p`-th root of `e` in `self`, if it exists.
    pub fn pth_root(&self, e: &Elem) -> Result<Option<Elem>> {
        if e.is_zero() {
            return Ok(Some(self.zero()));
        }
        let dec = self.p_decompose(e)?;
        Ok(match dec.len() {
            1 => dec.into_iter().next().filter(|(k, _)| k.iter().all(|&m| m == 0)).map(|(_, u)| u),
            _ => None,
        })
    }

    pub fn is_pth_power(&self, e: &Elem) -> Result<bool> {
        Ok(self.pth_root(e)?.is_some())
    }
}
