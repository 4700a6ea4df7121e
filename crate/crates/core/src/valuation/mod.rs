//! Monomial valuations on `F(x_1, ..., x_n)` with value group `Z^n`
//! (or `(1/p^N) Z^n`) ordered lexicographically, `x_1` most significant.
//!
//! The field is the tower `F(x_1)(x_2)...(x_n)`. Values are computed level by
//! level: `v(Σ c_j x_n^j) = min_j (v'(c_j), j/s)` where `v'` is the valuation
//! one level down and `s` is the scale (1, or `p^N` after adjoining roots of
//! the variables).

use std::cmp::Ordering;

use num_rational::Rational64;

use crate::error::{domain, structural, Result};
use crate::field::{Elem, Field, FieldHom, DEFAULT_TRDEG_BOUND};
use crate::poly::UPoly;
use crate::value_group::{GroupElem, Value, ValueGroup};

pub mod hensel;

/// Bound on the transcendence degree of valuation fields built internally.
pub const INTERNAL_TRDEG_BOUND: usize = DEFAULT_TRDEG_BOUND + 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialValuation {
    coeff_field: Field,
    field: Field,
    vars: Vec<String>,
    scale: i64,
    group: ValueGroup,
}

/// One prime of the valuation ring, with its residue field.
#[derive(Clone, Debug)]
pub struct PrimeInfo {
    /// Number of leading coordinates that must be positive: `0` is the zero
    /// ideal, `n` the maximal ideal.
    pub index: usize,
    pub residue_field: Field,
    /// Variables surviving in the residue field.
    pub surviving: Vec<String>,
}

impl MonomialValuation {
    /// The valuation on `F(vars)` with `v(x_i) = e_i`.
    pub fn new(coeff_field: &Field, vars: &[&str]) -> Result<MonomialValuation> {
        MonomialValuation::build(coeff_field, vars, 1, 0, DEFAULT_TRDEG_BOUND)
    }

    /// As [`MonomialValuation::new`] with `v(x_i) = e_i / p^N`.
    pub fn with_scale(coeff_field: &Field, vars: &[&str], p: u64, n: u32) -> Result<MonomialValuation> {
        MonomialValuation::build(coeff_field, vars, p, n, INTERNAL_TRDEG_BOUND)
    }

    pub(crate) fn build(coeff_field: &Field, vars: &[&str], p: u64, n: u32, trdeg_bound: usize) -> Result<MonomialValuation> {
        if vars.is_empty() {
            return structural("a monomial valuation needs at least one variable");
        }
        let mut field = coeff_field.clone();
        for v in vars {
            field = field.transcendental_bounded(v, trdeg_bound)?;
        }
        let char_exponent = if n == 0 { coeff_field.char_exponent() } else { p };
        let group = ValueGroup::new(vars.len(), char_exponent, n)?;
        Ok(MonomialValuation {
            coeff_field: coeff_field.clone(),
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            scale: (char_exponent as i64).pow(n),
            group,
        })
    }

    pub fn coeff_field(&self) -> &Field {
        &self.coeff_field
    }

    /// The valued field `K = F(x_1..x_n)`.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn group(&self) -> &ValueGroup {
        &self.group
    }

    /// `x_i` as an element of `K`.
    pub fn var(&self, i: usize) -> Elem {
        self.field.gen_by_name(&self.vars[i]).expect("variable")
    }

    /// Additive value; `Value::Zero` for `0`.
    pub fn value(&self, z: &Elem) -> Value {
        self.value_at(&self.field, self.rank(), z)
    }

    fn value_at(&self, level: &Field, depth: usize, e: &Elem) -> Value {
        if e.is_zero() {
            return Value::Zero;
        }
        if depth == 0 {
            return Value::finite(Vec::new());
        }
        let Elem::Frac(n, d) = e else { unreachable!("variables are transcendental") };
        let parent = level.parent().unwrap();
        let vn = self.poly_value(parent, depth, n);
        let vd = self.poly_value(parent, depth, d);
        vn.sub(&vd)
    }

    /// `min_j (v'(c_j), j/s)` together with the minimising `j`.
    fn poly_value_arg(&self, parent: &Field, depth: usize, p: &UPoly) -> (Value, usize) {
        let mut best: Option<(Value, usize)> = None;
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let Value::Finite(GroupElem(mut coords)) = self.value_at(parent, depth - 1, c) else { unreachable!() };
            coords.push(Rational64::new(j as i64, self.scale));
            let v = Value::finite(coords);
            if best.as_ref().is_none_or(|(b, _)| v.cmp_additive(b) == Ordering::Less) {
                best = Some((v, j));
            }
        }
        best.expect("nonzero polynomial")
    }

    fn poly_value(&self, parent: &Field, depth: usize, p: &UPoly) -> Value {
        self.poly_value_arg(parent, depth, p).0
    }

    pub fn in_ring(&self, z: &Elem) -> bool {
        self.value(z).is_nonnegative()
    }

    pub fn in_max_ideal(&self, z: &Elem) -> bool {
        self.value(z).is_positive()
    }

    pub fn is_unit(&self, z: &Elem) -> bool {
        matches!(self.value(z), Value::Finite(g) if g.is_zero())
    }

    /// Image of `z ∈ V` in the residue field `F`.
    pub fn residue(&self, z: &Elem) -> Result<Elem> {
        if !self.in_ring(z) {
            return domain(format!(
                "{} has negative value {} and is not in the valuation ring",
                self.field.fmt_elem(z),
                self.value(z)
            ));
        }
        Ok(self.residue_at(&self.field, self.rank(), z))
    }

    fn residue_at(&self, level: &Field, depth: usize, e: &Elem) -> Elem {
        if depth == 0 || e.is_zero() {
            return if e.is_zero() { self.coeff_field.zero() } else { e.clone() };
        }
        let Elem::Frac(n, d) = e else { unreachable!() };
        let parent = level.parent().unwrap();
        let (_, j0) = self.poly_value_arg(parent, depth, d);
        let nj = n.coeff(parent, j0);
        if nj.is_zero() {
            return self.coeff_field.zero();
        }
        let ratio = parent.div(&nj, &d.coeffs()[j0]).expect("nonzero leading term");
        if self.value_at(parent, depth - 1, &ratio).is_positive() {
            return self.coeff_field.zero();
        }
        self.residue_at(parent, depth - 1, &ratio)
    }

    /// Embeds an element of the residue field `F` into `K` (the canonical
    /// section given by the tower).
    pub fn lift_residue(&self, c: &Elem) -> Elem {
        self.field.lift_from(&self.coeff_field, c)
    }

    /// Monomial `Π x_i^{e_i}` with integer exponents (scaled units).
    pub fn monomial(&self, exps: &[i64]) -> Result<Elem> {
        let mut acc = self.field.one();
        for (i, &e) in exps.iter().enumerate() {
            acc = self.field.mul(&acc, &self.field.pow(&self.var(i), e)?);
        }
        Ok(acc)
    }

    /// A monomial of the given value (which must lie in the value group).
    pub fn monomial_of_value(&self, v: &GroupElem) -> Result<Elem> {
        let exps: Vec<i64> = v
            .0
            .iter()
            .map(|c| {
                let s = c * Rational64::from_integer(self.scale);
                if s.is_integer() {
                    Ok(s.to_integer())
                } else {
                    structural(format!("{v} is not in the value group {}", self.group))
                }
            })
            .collect::<Result<_>>()?;
        self.monomial(&exps)
    }

    /// The `n + 1` primes `0 = p_0 ⊂ p_1 ⊂ ... ⊂ p_n = m`. The prime `p_i`
    /// consists of the elements whose first `i` value coordinates are
    /// lexicographically positive; its residue field is `F(x_{i+1}..x_n)`.
    pub fn prime_chain(&self) -> Result<Vec<PrimeInfo>> {
        (0..=self.rank())
            .map(|i| {
                let surviving: Vec<String> = self.vars[i..].to_vec();
                let mut field = self.coeff_field.clone();
                for v in &surviving {
                    field = field.transcendental_bounded(v, INTERNAL_TRDEG_BOUND)?;
                }
                Ok(PrimeInfo { index: i, residue_field: field, surviving })
            })
            .collect()
    }

    /// The first `i` value coordinates, compared with zero.
    fn leading_sign(&self, z: &Elem, i: usize) -> Ordering {
        match self.value(z) {
            Value::Zero => Ordering::Greater,
            Value::Finite(g) => GroupElem(g.0[..i].to_vec()).signum(),
        }
    }

    /// Membership in the prime `p_i` (requires `z ∈ V`).
    pub fn in_prime(&self, z: &Elem, i: usize) -> bool {
        self.in_ring(z) && (i > 0 && self.leading_sign(z, i) == Ordering::Greater || z.is_zero())
    }

    /// Membership in the localisation `V_{p_i}`.
    pub fn in_localization(&self, z: &Elem, i: usize) -> bool {
        self.leading_sign(z, i) != Ordering::Less
    }

    /// The coarsened valuation for `p_i`: `K` presented as
    /// `κ_i(x_1..x_i)` with `κ_i = F(x_{i+1}..x_n)`, and the reordering
    /// isomorphism from `K`.
    pub fn coarsening(&self, i: usize) -> Result<(MonomialValuation, FieldHom)> {
        if i == 0 || i > self.rank() {
            return structural(format!("no coarsening of rank {i} for a rank-{} valuation", self.rank()));
        }
        let chain = self.prime_chain()?;
        let kappa = &chain[i].residue_field;
        let lead: Vec<&str> = self.vars[..i].iter().map(String::as_str).collect();
        let coarse = MonomialValuation::build(kappa, &lead, self.group.char_exponent(), self.group.denom_exponent(), INTERNAL_TRDEG_BOUND)?;
        let coarse = MonomialValuation { scale: self.scale, ..coarse };
        let images = self.field.gens().into_iter().map(|(name, _)| coarse.field.gen_by_name(&name).unwrap()).collect();
        let hom = FieldHom::new(&self.field, &coarse.field, images)?;
        Ok((coarse, hom))
    }

    /// Residue of `z ∈ V_{p_i}` in `κ(p_i)`.
    pub fn residue_at_prime(&self, z: &Elem, i: usize) -> Result<Elem> {
        if i == 0 {
            return Ok(z.clone());
        }
        if i == self.rank() {
            let r = self.residue(z)?;
            return Ok(r);
        }
        let (coarse, hom) = self.coarsening(i)?;
        coarse.residue(&hom.apply(z)?)
    }

    /// Text summary, e.g. `F2(a)(x1)(x2) with v(x1) = (1, 0), v(x2) = (0, 1)`.
    pub fn describe(&self) -> String {
        format!("field: {}; vars: {}; order: lex; group: {}", self.coeff_field.description(), self.vars.join(","), self.group)
    }
}
