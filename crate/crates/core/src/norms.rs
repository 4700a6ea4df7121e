//! The canonical norm on free modules and free algebras over a valuation
//! ring `V`, and its extension to a valuation on the fraction field of an
//! algebra with integral reduction.
//!
//! Norms are additive: the norm of `z = Σ z_i e_i` is `min_i v(z_i)`, so that
//! `z ∈ E` exactly when the norm is `≥ 0`.

use std::cmp::Ordering;

use crate::error::{domain, precondition, structural, Result};
use crate::field::{Elem, Field, FieldHom};
use crate::poly::{self, factor, squarefree_decomposition, squarefree_part, MPoly, UPoly};
use crate::sample::Sampler;
use crate::valuation::{MonomialValuation, INTERNAL_TRDEG_BOUND};
use crate::value_group::{Value, ValueGroup};

/// Minimal value among the entries, with the index of the first minimiser.
fn min_value<'a>(val: &MonomialValuation, entries: impl IntoIterator<Item = &'a Elem>) -> (Value, Option<usize>) {
    let mut best = (Value::Zero, None);
    for (i, c) in entries.into_iter().enumerate() {
        let v = val.value(c);
        if v.cmp_additive(&best.0) == Ordering::Less {
            best = (v, Some(i));
        }
    }
    best
}

/// The free module `V^r` with its standard basis, elements given by their
/// coordinates in `K^r`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    val: MonomialValuation,
    rank: usize,
}

impl FreeModule {
    pub fn new(val: &MonomialValuation, rank: usize) -> FreeModule {
        FreeModule { val: val.clone(), rank }
    }

    pub fn valuation(&self) -> &MonomialValuation {
        &self.val
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check_len(&self, z: &[Elem]) -> Result<()> {
        if z.len() != self.rank {
            return structural(format!("expected {} coordinates, got {}", self.rank, z.len()));
        }
        Ok(())
    }

    pub fn norm(&self, z: &[Elem]) -> Value {
        min_value(&self.val, z).0
    }

    /// `z ∈ E`: every coordinate lies in `V`.
    pub fn contains(&self, z: &[Elem]) -> bool {
        z.iter().all(|c| self.val.in_ring(c))
    }

    /// `z ∈ mE`: every coordinate lies in the maximal ideal.
    pub fn in_max_submodule(&self, z: &[Elem]) -> bool {
        z.iter().all(|c| self.val.in_max_ideal(c))
    }

    pub fn scale(&self, alpha: &Elem, z: &[Elem]) -> Vec<Elem> {
        let k = self.val.field();
        z.iter().map(|c| k.mul(alpha, c)).collect()
    }

    /// `z = α z₁` with `α` a coordinate of minimal value and `z₁` of norm 0.
    pub fn unit_part_factor(&self, z: &[Elem]) -> Result<(Elem, Vec<Elem>)> {
        self.check_len(z)?;
        let (_, arg) = min_value(&self.val, z);
        let Some(i) = arg else { return domain("the zero element has no unit part") };
        let k = self.val.field();
        let alpha = z[i].clone();
        let inv = k.inv(&alpha)?;
        Ok((alpha, self.scale(&inv, z)))
    }

    /// Coordinates of `z` after the change of basis with matrix `m`
    /// (new coordinates `m z`).
    pub fn change_basis(&self, m: &[Vec<Elem>], z: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(z)?;
        let k = self.val.field();
        Ok(m.iter().map(|row| row.iter().zip(z).fold(k.zero(), |acc, (a, b)| k.add(&acc, &k.mul(a, b)))).collect())
    }

    /// Whether `m` is invertible over `V`: entries in `V` and unit determinant.
    pub fn is_unimodular(&self, m: &[Vec<Elem>]) -> bool {
        let k = self.val.field();
        m.iter().flatten().all(|c| self.val.in_ring(c)) && self.val.is_unit(&crate::field::linalg::det(k, &m.to_vec()))
    }
}

/// Multiplicative structure carried by a [`FreeAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `A = V`.
    Base,
    /// `A = V[y_1..y_m]` with the monomial basis.
    Polynomial { names: Vec<String> },
    /// `A = V[y]/(f)` with `f` monic over `V` and basis `1, y, ..., y^{d-1}`.
    Quotient { name: String, modulus: UPoly },
}

/// A `V`-algebra that is free as a `V`-module. Elements are polynomials over
/// `K` in the algebra variables (none for [`AlgebraKind::Base`]), reduced
/// modulo `f` in the quotient case.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    val: MonomialValuation,
    kind: AlgebraKind,
}

impl FreeAlgebra {
    pub fn base(val: &MonomialValuation) -> FreeAlgebra {
        FreeAlgebra { val: val.clone(), kind: AlgebraKind::Base }
    }

    pub fn polynomial(val: &MonomialValuation, names: &[&str]) -> Result<FreeAlgebra> {
        if names.is_empty() {
            return structural("a polynomial algebra needs at least one variable");
        }
        // Validates the names against the tower.
        let mut probe = val.field().clone();
        for n in names {
            probe = probe.transcendental_bounded(n, INTERNAL_TRDEG_BOUND)?;
        }
        Ok(FreeAlgebra {
            val: val.clone(),
            kind: AlgebraKind::Polynomial { names: names.iter().map(|s| s.to_string()).collect() },
        })
    }

    pub fn quotient(val: &MonomialValuation, name: &str, modulus: &UPoly) -> Result<FreeAlgebra> {
        let k = val.field();
        if modulus.degree().unwrap_or(0) == 0 {
            return structural("the modulus must have positive degree");
        }
        if !modulus.is_monic(k) {
            return structural("the modulus must be monic");
        }
        if let Some(c) = modulus.coeffs().iter().find(|c| !val.in_ring(c)) {
            return domain(format!("modulus coefficient {} is not in the valuation ring", k.fmt_elem(c)));
        }
        if val.field().gen_by_name(name).is_some() || name == crate::field::POLY_VAR {
            return structural(format!("name {name} is already in use"));
        }
        Ok(FreeAlgebra {
            val: val.clone(),
            kind: AlgebraKind::Quotient { name: name.to_string(), modulus: modulus.clone() },
        })
    }

    pub fn valuation(&self) -> &MonomialValuation {
        &self.val
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        match &self.kind {
            AlgebraKind::Base => 0,
            AlgebraKind::Polynomial { names } => names.len(),
            AlgebraKind::Quotient { .. } => 1,
        }
    }

    pub fn var_names(&self) -> Vec<&str> {
        match &self.kind {
            AlgebraKind::Base => Vec::new(),
            AlgebraKind::Polynomial { names } => names.iter().map(String::as_str).collect(),
            AlgebraKind::Quotient { name, .. } => vec![name.as_str()],
        }
    }

    /// Rank as a `V`-module; `None` for polynomial algebras.
    pub fn rank(&self) -> Option<usize> {
        match &self.kind {
            AlgebraKind::Base => Some(1),
            AlgebraKind::Polynomial { .. } => None,
            AlgebraKind::Quotient { modulus, .. } => Some(modulus.deg()),
        }
    }

    fn k(&self) -> &Field {
        self.val.field()
    }

    pub fn scalar(&self, alpha: &Elem) -> MPoly {
        MPoly::constant(self.nvars(), alpha.clone())
    }

    pub fn one(&self) -> MPoly {
        self.scalar(&self.k().one())
    }

    pub fn var(&self, i: usize) -> MPoly {
        self.reduce(&MPoly::var(self.k(), self.nvars(), i))
    }

    fn to_upoly(&self, z: &MPoly) -> UPoly {
        let k = self.k();
        let deg = z.terms().map(|(e, _)| e[0] as usize).max().unwrap_or(0);
        let mut c = vec![k.zero(); deg + 1];
        for (e, x) in z.terms() {
            c[e[0] as usize] = x.clone();
        }
        UPoly::from_coeffs(c)
    }

    fn from_upoly(&self, p: &UPoly) -> MPoly {
        MPoly::from_terms(self.k(), 1, p.coeffs().iter().enumerate().map(|(j, c)| (vec![j as u32], c.clone())))
    }

    /// Normal form: remainder modulo `f` in the quotient case.
    pub fn reduce(&self, z: &MPoly) -> MPoly {
        match &self.kind {
            AlgebraKind::Quotient { modulus, .. } => {
                let r = poly::rem(self.k(), &self.to_upoly(z), modulus).expect("monic modulus");
                self.from_upoly(&r)
            }
            _ => z.clone(),
        }
    }

    pub fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.add(self.k(), b)
    }

    pub fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.sub(self.k(), b)
    }

    pub fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        self.reduce(&a.mul(self.k(), b))
    }

    pub fn scale(&self, alpha: &Elem, z: &MPoly) -> MPoly {
        z.scale(self.k(), alpha)
    }

    /// Minimal coefficient value in the standard basis.
    pub fn norm(&self, z: &MPoly) -> Value {
        min_value(&self.val, self.reduce(z).coeffs()).0
    }

    pub fn contains(&self, z: &MPoly) -> bool {
        self.norm(z).is_nonnegative()
    }

    pub fn unit_part_factor(&self, z: &MPoly) -> Result<(Elem, MPoly)> {
        let z = self.reduce(z);
        let coeffs: Vec<Elem> = z.coeffs().cloned().collect();
        let (_, arg) = min_value(&self.val, &coeffs);
        let Some(i) = arg else { return domain("the zero element has no unit part") };
        let alpha = coeffs[i].clone();
        let inv = self.k().inv(&alpha)?;
        Ok((alpha, self.scale(&inv, &z)))
    }

    /// Inverse in `A_K`, when it exists.
    pub fn inverse(&self, z: &MPoly) -> Option<MPoly> {
        let k = self.k();
        match &self.kind {
            AlgebraKind::Quotient { modulus, .. } => {
                let (g, s, _) = poly::xgcd(k, &self.to_upoly(&self.reduce(z)), modulus);
                if g.deg() != 0 || g.is_zero() {
                    return None;
                }
                let c = k.inv(g.lc().unwrap()).ok()?;
                Some(self.from_upoly(&poly::scale(k, &s, &c)))
            }
            _ => {
                let z = self.reduce(z);
                if z.total_degree()? != 0 {
                    return None;
                }
                let c = z.coeffs().next()?;
                Some(self.scalar(&k.inv(c).ok()?))
            }
        }
    }

    /// The modulus reduced to the residue field (quotient case).
    pub fn residual_modulus(&self) -> Result<Option<UPoly>> {
        match &self.kind {
            AlgebraKind::Quotient { modulus, .. } => Ok(Some(modulus.try_map(|c| self.val.residue(c))?)),
            _ => Ok(None),
        }
    }

    /// Text form, e.g. `y^2 + x*y`.
    pub fn fmt(&self, z: &MPoly) -> String {
        z.fmt_with(self.k(), &self.var_names())
    }

    /// Presentation of `Ā`, e.g. `F2(a)(r)[w]/(w^2 + a)`.
    pub fn describe_residue(&self) -> Result<String> {
        let f = self.val.coeff_field();
        Ok(match &self.kind {
            AlgebraKind::Base => f.short_name(),
            AlgebraKind::Polynomial { names } => format!("{}[{}]", f.short_name(), names.join(",")),
            AlgebraKind::Quotient { name, .. } => {
                let fbar = self.residual_modulus()?.unwrap();
                format!("{}[{name}]/({})", f.short_name(), f.fmt_poly(&fbar, name))
            }
        })
    }

    fn random_elem(&self, s: &mut Sampler) -> MPoly {
        match &self.kind {
            AlgebraKind::Base => self.scalar(&s.valued(&self.val)),
            AlgebraKind::Polynomial { names } => s.mpoly(&self.val, names.len(), 2),
            AlgebraKind::Quotient { modulus, .. } => {
                let mut terms = Vec::new();
                for j in 0..modulus.deg() {
                    if s.chance(2, 3) {
                        terms.push((vec![j as u32], s.valued(&self.val)));
                    }
                }
                MPoly::from_terms(self.k(), 1, terms)
            }
        }
    }

    /// A random unit of `A`: a unit of `V`, times `1 + m z` with `m ∈ 𝔪` and
    /// `z ∈ A` for finite-rank algebras.
    fn random_unit(&self, s: &mut Sampler) -> MPoly {
        let u = loop {
            let c = s.integral(&self.val);
            if self.val.is_unit(&c) {
                break c;
            }
        };
        let base = self.scalar(&u);
        if matches!(self.kind, AlgebraKind::Quotient { .. }) {
            let z = self.random_elem(s);
            if let Ok((_, z1)) = self.unit_part_factor(&z) {
                let m = self.val.var(self.val.rank() - 1);
                let shifted = self.add(&self.one(), &self.scale(&m, &z1));
                return self.mul(&base, &shifted);
            }
        }
        base
    }
}

/// Outcome of [`check_algebra_norm`].
#[derive(Clone, Debug, Default)]
pub struct NormReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl NormReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(witness());
        }
    }
}

/// Randomized check of the algebra norm: scalars keep their value, the
/// norm of a product is at least the sum of the norms, and units of `A`
/// have norm `0`.
pub fn check_algebra_norm(a: &FreeAlgebra, samples: usize, seed: u64) -> NormReport {
    let mut s = Sampler::new(seed);
    let mut report = NormReport::default();
    let k = a.k();
    for _ in 0..samples {
        let alpha = s.valued(&a.val);
        let sc = a.scalar(&alpha);
        report.record(a.norm(&sc) == a.val.value(&alpha), || format!("scalar {}: norm {} but value {}", k.fmt_elem(&alpha), a.norm(&sc), a.val.value(&alpha)));

        let (z, w) = (a.random_elem(&mut s), a.random_elem(&mut s));
        let (nz, nw, nzw) = (a.norm(&z), a.norm(&w), a.norm(&a.mul(&z, &w)));
        report.record(nzw.cmp_additive(&nz.add(&nw)) != Ordering::Less, || {
            format!("product of {} and {}: norm {nzw} below {nz} + {nw}", a.fmt(&z), a.fmt(&w))
        });

        let u = a.random_unit(&mut s);
        let certified = a.inverse(&u).is_some_and(|inv| a.contains(&inv)) && a.contains(&u);
        if certified {
            let nu = a.norm(&u);
            report.record(matches!(&nu, Value::Finite(g) if g.is_zero()), || format!("unit {} has norm {nu}", a.fmt(&u)));
        }
    }
    report
}

/// Reducedness of `Ā`, which certifies reducedness of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCertificate {
    /// `Ā` is reduced (hence so is `A`).
    pub reduced: bool,
    /// Presentation of `Ā`.
    pub residue_presentation: String,
    /// A nonzero nilpotent of `Ā` and an exponent killing it.
    pub nilpotent: Option<(UPoly, usize)>,
    /// Text form of the nilpotent in the algebra variable.
    pub witness: Option<String>,
}

pub fn is_reduced_lift(a: &FreeAlgebra) -> Result<ReducedCertificate> {
    let residue_presentation = a.describe_residue()?;
    let AlgebraKind::Quotient { name, .. } = &a.kind else {
        return Ok(ReducedCertificate { reduced: true, residue_presentation, nilpotent: None, witness: None });
    };
    let f = a.val.coeff_field();
    let fbar = a.residual_modulus()?.unwrap();
    let sqf = squarefree_decomposition(f, &fbar)?;
    let max_mult = sqf.iter().map(|(_, m)| *m).max().unwrap_or(1);
    if max_mult == 1 {
        return Ok(ReducedCertificate { reduced: true, residue_presentation, nilpotent: None, witness: None });
    }
    let rad = squarefree_part(f, &fbar)?;
    let nil = poly::rem(f, &rad, &fbar)?;
    debug_assert!(!nil.is_zero() && poly::rem(f, &poly::pow(f, &nil, max_mult as u64), &fbar)?.is_zero());
    let witness = f.fmt_poly(&nil, name);
    Ok(ReducedCertificate { reduced: false, residue_presentation, nilpotent: Some((nil, max_mult)), witness: Some(witness) })
}

/// The valuation `z/u ↦ norm(z) − norm(u)` on `Frac(A)`, for `A` with
/// integral reduction. Its value group is that of `V` and its residue field
/// is `Frac(Ā)`.
#[derive(Clone, Debug)]
pub struct GaussValuation {
    algebra: FreeAlgebra,
    frac_field: Field,
    residue_field: Field,
    realization: Option<(MonomialValuation, FieldHom)>,
}

pub fn gauss_extend(a: &FreeAlgebra) -> Result<GaussValuation> {
    let val = &a.val;
    let k = val.field();
    let f = val.coeff_field();
    let (frac_field, residue_field) = match &a.kind {
        AlgebraKind::Base => (k.clone(), f.clone()),
        AlgebraKind::Polynomial { names } => {
            let (mut fk, mut ff) = (k.clone(), f.clone());
            for n in names {
                fk = fk.transcendental_bounded(n, INTERNAL_TRDEG_BOUND)?;
                ff = ff.transcendental_bounded(n, INTERNAL_TRDEG_BOUND)?;
            }
            (fk, ff)
        }
        AlgebraKind::Quotient { name, modulus } => {
            let fbar = a.residual_modulus()?.unwrap();
            let fac = factor::factor(f, &fbar)?;
            if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
                let parts: Vec<String> = fac
                    .factors
                    .iter()
                    .map(|(g, m)| if *m == 1 { format!("({})", f.fmt_poly(g, name)) } else { format!("({})^{m}", f.fmt_poly(g, name)) })
                    .collect();
                return precondition(format!(
                    "the reduction {} is not integral: {} = {}",
                    a.describe_residue()?,
                    f.fmt_poly(&fbar, name),
                    parts.join("*")
                ));
            }
            (k.algebraic_unchecked(name, modulus.clone()), f.algebraic_unchecked(name, fbar))
        }
    };
    let realization = realize(a, &frac_field, &residue_field)?;
    Ok(GaussValuation { algebra: a.clone(), frac_field, residue_field, realization })
}

/// `Frac(A)` as a monomial valuation over `Frac(Ā)`, when the algebra is
/// defined over the residue field (constant modulus).
fn realize(a: &FreeAlgebra, frac_field: &Field, residue_field: &Field) -> Result<Option<(MonomialValuation, FieldHom)>> {
    let val = &a.val;
    if let AlgebraKind::Quotient { modulus, .. } = &a.kind {
        let constant = modulus.coeffs().iter().all(|c| val.residue(c).is_ok_and(|r| val.lift_residue(&r) == *c));
        if !constant {
            return Ok(None);
        }
    }
    let vars: Vec<&str> = val.vars().iter().map(String::as_str).collect();
    let g = val.group();
    let w = MonomialValuation::build(residue_field, &vars, g.char_exponent(), g.denom_exponent(), INTERNAL_TRDEG_BOUND)?;
    let images = frac_field.gens().into_iter().map(|(n, _)| w.field().gen_by_name(&n).expect("shared generator")).collect();
    let hom = FieldHom::new(frac_field, w.field(), images)?;
    Ok(Some((w, hom)))
}

impl GaussValuation {
    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn frac_field(&self) -> &Field {
        &self.frac_field
    }

    pub fn residue_field(&self) -> &Field {
        &self.residue_field
    }

    pub fn group(&self) -> &ValueGroup {
        self.algebra.val.group()
    }

    /// The same valuation written as a monomial valuation over `Frac(Ā)`,
    /// with the isomorphism from `Frac(A)`.
    pub fn realization(&self) -> Option<&(MonomialValuation, FieldHom)> {
        self.realization.as_ref()
    }

    /// Element of `Frac(A)` represented by an algebra element.
    pub fn embed(&self, z: &MPoly) -> Elem {
        let k = self.algebra.k();
        let z = self.algebra.reduce(z);
        let mut acc = self.frac_field.zero();
        let gens: Vec<Elem> = self.algebra.var_names().iter().map(|n| self.frac_field.gen_by_name(n).unwrap()).collect();
        for (e, c) in z.terms() {
            let mut t = self.frac_field.lift_from(k, c);
            for (g, x) in gens.iter().zip(e) {
                t = self.frac_field.mul(&t, &self.frac_field.pow_u(g, *x as u64));
            }
            acc = self.frac_field.add(&acc, &t);
        }
        acc
    }

    pub fn value(&self, z: &Elem) -> Value {
        let val = &self.algebra.val;
        match &self.algebra.kind {
            AlgebraKind::Base => val.value(z),
            AlgebraKind::Quotient { .. } => match z {
                Elem::Alg(p) => min_value(val, p.coeffs()).0,
                _ => unreachable!("quotient elements are algebraic"),
            },
            AlgebraKind::Polynomial { names } => self.value_level(&self.frac_field, names.len(), z),
        }
    }

    fn value_level(&self, level: &Field, depth: usize, e: &Elem) -> Value {
        if depth == 0 {
            return self.algebra.val.value(e);
        }
        if e.is_zero() {
            return Value::Zero;
        }
        let Elem::Frac(n, d) = e else { unreachable!("algebra variables are transcendental") };
        let parent = level.parent().unwrap();
        self.poly_value(parent, depth, n).0.sub(&self.poly_value(parent, depth, d).0)
    }

    fn poly_value(&self, parent: &Field, depth: usize, p: &UPoly) -> (Value, Option<usize>) {
        let mut best = (Value::Zero, None);
        for (j, c) in p.coeffs().iter().enumerate() {
            let v = self.value_level(parent, depth - 1, c);
            if v.cmp_additive(&best.0) == Ordering::Less {
                best = (v, Some(j));
            }
        }
        best
    }

    pub fn in_ring(&self, z: &Elem) -> bool {
        self.value(z).is_nonnegative()
    }

    /// Image of `z` (value `≥ 0`) in `Frac(Ā)`.
    pub fn residue(&self, z: &Elem) -> Result<Elem> {
        if !self.in_ring(z) {
            return domain(format!("{} is not in the valuation ring", self.frac_field.fmt_elem(z)));
        }
        let val = &self.algebra.val;
        match &self.algebra.kind {
            AlgebraKind::Base => val.residue(z),
            AlgebraKind::Quotient { .. } => {
                let Elem::Alg(p) = z else { unreachable!() };
                let pbar = p.try_map(|c| val.residue(c))?;
                Ok(self.residue_field.poly_in_gen(&pbar))
            }
            AlgebraKind::Polynomial { names } => self.residue_level(&self.frac_field, names.len(), z),
        }
    }

    fn residue_level(&self, level: &Field, depth: usize, e: &Elem) -> Result<Elem> {
        let f = self.algebra.val.coeff_field();
        if depth == 0 {
            return self.algebra.val.residue(e);
        }
        let target = self.residue_field.ancestor(f.depth() + depth);
        if e.is_zero() {
            return Ok(target.zero());
        }
        let Elem::Frac(n, d) = e else { unreachable!() };
        let parent = level.parent().unwrap();
        let (_, j0) = self.poly_value(parent, depth, d);
        let pivot = d.coeffs()[j0.unwrap()].clone();
        let reduce = |p: &UPoly| -> Result<UPoly> {
            p.try_map(|c| {
                let q = parent.div(c, &pivot)?;
                self.residue_level(parent, depth - 1, &q)
            })
        };
        let (nb, db) = (reduce(n)?, reduce(d)?);
        target.div(&target.poly_in_gen(&nb), &target.poly_in_gen(&db))
    }

    /// Text summary of the extended valuation.
    pub fn describe(&self) -> String {
        format!("fraction field: {}; residue field: {}; group: {}", self.frac_field.short_name(), self.residue_field.short_name(), self.group())
    }
}
