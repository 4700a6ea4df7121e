//! Finitely generated fields presented as towers of simple extensions over
//! `Q` or `F_p`.
//!
//! A [`Field`] is an immutable, cheaply clonable handle to one level of a
//! tower. Its elements ([`Elem`]) carry no back-pointer; every operation is a
//! method on the field, in the style of ring objects. Elements are kept in a
//! canonical normal form so that structural equality is field equality:
//!
//! * over a transcendental step `P(t)`: a reduced fraction `num/den` of
//!   polynomials over `P` with `den` monic;
//! * over an algebraic step `P(α)`: a polynomial over `P` of degree below the
//!   degree of the minimal polynomial of `α`.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{capability, domain, structural, Error, Result};
use crate::poly::{self, UPoly};
use crate::value_group::is_prime;

mod display;
pub mod hom;
pub mod linalg;
pub mod parse;
pub mod pth;
pub mod tower_ops;

pub use hom::FieldHom;

/// Default cap on the number of transcendental steps in a tower.
pub const DEFAULT_TRDEG_BOUND: usize = 3;

/// The variable name reserved for polynomial indeterminates in text syntax.
pub const POLY_VAR: &str = "y";

/// An element of some tower level, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Rat(BigRational),
    Mod(u64),
    Frac(UPoly, UPoly),
    Alg(UPoly),
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Rat(r) => r.is_zero(),
            Elem::Mod(x) => *x == 0,
            Elem::Frac(n, _) => n.is_zero(),
            Elem::Alg(p) => p.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    Transcendental,
    Algebraic { minpoly: UPoly, separable: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub name: String,
    pub kind: StepKind,
}

impl Step {
    pub fn is_transcendental(&self) -> bool {
        matches!(self.kind, StepKind::Transcendental)
    }

    pub fn minpoly(&self) -> Option<&UPoly> {
        match &self.kind {
            StepKind::Algebraic { minpoly, .. } => Some(minpoly),
            StepKind::Transcendental => None,
        }
    }

    /// Degree of the step; `None` for transcendental steps.
    pub fn degree(&self) -> Option<usize> {
        self.minpoly().map(UPoly::deg)
    }

    pub fn is_separable(&self) -> bool {
        match &self.kind {
            StepKind::Algebraic { separable, .. } => *separable,
            StepKind::Transcendental => true,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Rationals,
    Prime(u64),
    Ext { parent: Field, step: Step },
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    characteristic: u64,
    depth: usize,
    finite: bool,
    trdeg: usize,
}

/// Handle to one level of a field tower.
#[derive(Clone)]
pub struct Field(Arc<Node>);

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.depth == other.0.depth && self.0.kind == other.0.kind)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.description())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.description())
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != POLY_VAR
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(Node { kind: Kind::Rationals, characteristic: 0, depth: 0, finite: false, trdeg: 0 }))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= 1 << 31 {
            return structural(format!("{p} is not a supported prime"));
        }
        Ok(Field(Arc::new(Node { kind: Kind::Prime(p), characteristic: p, depth: 0, finite: true, trdeg: 0 })))
    }

    fn extend(&self, step: Step) -> Field {
        let finite = self.0.finite && !step.is_transcendental();
        let trdeg = self.0.trdeg + usize::from(step.is_transcendental());
        Field(Arc::new(Node {
            characteristic: self.0.characteristic,
            depth: self.0.depth + 1,
            finite,
            trdeg,
            kind: Kind::Ext { parent: self.clone(), step },
        }))
    }

    fn check_new_name(&self, name: &str) -> Result<()> {
        if !valid_name(name) {
            return structural(format!("`{name}` is not a valid generator name"));
        }
        if self.gen_names().iter().any(|n| n == name) {
            return structural(format!("generator `{name}` already present in the tower"));
        }
        Ok(())
    }

    /// `self(t)` with `t` transcendental.
    pub fn transcendental(&self, name: &str) -> Result<Field> {
        self.transcendental_bounded(name, DEFAULT_TRDEG_BOUND)
    }

    pub fn transcendental_bounded(&self, name: &str, bound: usize) -> Result<Field> {
        self.check_new_name(name)?;
        if self.0.trdeg >= bound {
            return capability(format!("transcendence degree bound {bound} exceeded"));
        }
        Ok(self.extend(Step { name: name.to_string(), kind: StepKind::Transcendental }))
    }

    /// `self[y]/(f)`, with `f` (made monic) checked irreducible by factoring.
    pub fn algebraic(&self, name: &str, minpoly: &UPoly) -> Result<Field> {
        self.check_new_name(name)?;
        let f = poly::monic(self, minpoly)?;
        if f.deg() < 2 {
            return structural(format!("minimal polynomial of `{name}` must have degree at least 2"));
        }
        if !poly::is_irreducible(self, &f)? {
            return Err(Error::Structural(format!(
                "minimal polynomial {} of `{name}` is reducible over {}",
                self.fmt_poly(&f, POLY_VAR),
                self
            )));
        }
        Ok(self.algebraic_unchecked(name, f))
    }

    /// Adjoins a root of a polynomial already known to be irreducible.
    pub(crate) fn algebraic_unchecked(&self, name: &str, minpoly: UPoly) -> Field {
        debug_assert!(minpoly.is_monic(self) && minpoly.deg() >= 2);
        let separable = poly::gcd(self, &minpoly, &poly::derivative(self, &minpoly)).is_one(self);
        self.extend(Step {
            name: name.to_string(),
            kind: StepKind::Algebraic { minpoly, separable },
        })
    }

    // ----- structure -----

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    /// Characteristic exponent: `p` in characteristic `p`, 1 in characteristic 0.
    pub fn char_exponent(&self) -> u64 {
        self.0.characteristic.max(1)
    }

    pub fn depth(&self) -> usize {
        self.0.depth
    }

    pub fn is_finite(&self) -> bool {
        self.0.finite
    }

    pub fn trdeg(&self) -> usize {
        self.0.trdeg
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0.kind, Kind::Rationals)
    }

    pub fn parent(&self) -> Option<&Field> {
        match &self.0.kind {
            Kind::Ext { parent, .. } => Some(parent),
            _ => None,
        }
    }

    pub fn step(&self) -> Option<&Step> {
        match &self.0.kind {
            Kind::Ext { step, .. } => Some(step),
            _ => None,
        }
    }

    /// The prime field at the bottom of the tower.
    pub fn prime_field(&self) -> Field {
        self.ancestor(0)
    }

    /// The level of the tower at the given depth (`0` is the prime field).
    pub fn ancestor(&self, depth: usize) -> Field {
        assert!(depth <= self.depth(), "ancestor deeper than the field");
        let mut f = self.clone();
        while f.depth() > depth {
            f = f.parent().expect("depth > 0").clone();
        }
        f
    }

    /// All levels from the prime field up to `self`.
    pub fn levels(&self) -> Vec<Field> {
        (0..=self.depth()).map(|d| self.ancestor(d)).collect()
    }

    pub fn is_prefix_of(&self, other: &Field) -> bool {
        other.depth() >= self.depth() && other.ancestor(self.depth()) == *self
    }

    /// Steps above the prefix `sub`, bottom first.
    pub fn steps_above(&self, sub: &Field) -> Result<Vec<Step>> {
        if !sub.is_prefix_of(self) {
            return structural(format!("{sub} is not a subtower of {self}"));
        }
        Ok(self.levels()[sub.depth() + 1..]
            .iter()
            .map(|l| l.step().expect("non-base level").clone())
            .collect())
    }

    pub fn gen_names(&self) -> Vec<String> {
        self.levels().iter().filter_map(|l| l.step().map(|s| s.name.clone())).collect()
    }

    /// The generator adjoined at the top step, as an element of `self`.
    pub fn gen(&self) -> Result<Elem> {
        let parent = self.parent().ok_or_else(|| Error::Structural("prime fields have no generator".into()))?;
        Ok(match &self.step().expect("ext").kind {
            StepKind::Transcendental => Elem::Frac(UPoly::var(parent), UPoly::constant(parent.one())),
            StepKind::Algebraic { .. } => Elem::Alg(UPoly::var(parent)),
        })
    }

    /// Every tower generator, bottom first, lifted into `self`.
    pub fn gens(&self) -> Vec<(String, Elem)> {
        self.levels()
            .iter()
            .skip(1)
            .map(|l| (l.step().unwrap().name.clone(), self.lift_from(l, &l.gen().unwrap())))
            .collect()
    }

    pub fn gen_by_name(&self, name: &str) -> Option<Elem> {
        self.gens().into_iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    /// Depth of the level that adjoined generator `name`.
    pub fn gen_depth(&self, name: &str) -> Option<usize> {
        self.levels().iter().find(|l| l.step().is_some_and(|s| s.name == name)).map(Field::depth)
    }

    /// `[self : sub]` when every step above `sub` is algebraic.
    pub fn degree_over(&self, sub: &Field) -> Result<Option<usize>> {
        Ok(self.steps_above(sub)?.iter().try_fold(1usize, |acc, s| s.degree().map(|d| acc * d)))
    }

    /// Number of elements, for finite fields.
    pub fn size(&self) -> Option<BigUint> {
        if !self.is_finite() {
            return None;
        }
        let mut exp = 1u64;
        for l in self.levels().iter().skip(1) {
            exp *= l.step().unwrap().degree().unwrap() as u64;
        }
        Some(poly::biguint_pow(self.characteristic(), exp))
    }

    /// True when every algebraic step of the tower is separable.
    pub fn all_steps_separable(&self) -> bool {
        self.levels().iter().filter_map(Field::step).all(Step::is_separable)
    }

    // ----- constants -----

    pub fn zero(&self) -> Elem {
        match &self.0.kind {
            Kind::Rationals => Elem::Rat(BigRational::zero()),
            Kind::Prime(_) => Elem::Mod(0),
            Kind::Ext { parent, step } => match step.kind {
                StepKind::Transcendental => Elem::Frac(UPoly::zero(), UPoly::constant(parent.one())),
                StepKind::Algebraic { .. } => Elem::Alg(UPoly::zero()),
            },
        }
    }

    pub fn one(&self) -> Elem {
        match &self.0.kind {
            Kind::Rationals => Elem::Rat(BigRational::one()),
            Kind::Prime(_) => Elem::Mod(1),
            Kind::Ext { parent, step } => match step.kind {
                StepKind::Transcendental => {
                    Elem::Frac(UPoly::constant(parent.one()), UPoly::constant(parent.one()))
                }
                StepKind::Algebraic { .. } => Elem::Alg(UPoly::constant(parent.one())),
            },
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        *e == self.one()
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &self.0.kind {
            Kind::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => Elem::Mod(n.mod_floor(&BigInt::from(*p)).to_u64().unwrap()),
            Kind::Ext { parent, .. } => self.lift_parent(parent.from_bigint(n)),
        }
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<Elem> {
        let n = self.from_bigint(r.numer());
        let d = self.from_bigint(r.denom());
        self.div(&n, &d)
    }

    // ----- lifting between levels -----

    /// Embeds an element of the parent level.
    pub fn lift_parent(&self, e: Elem) -> Elem {
        let (parent, step) = self.ext_parts();
        match step.kind {
            StepKind::Transcendental => Elem::Frac(UPoly::constant(e), UPoly::constant(parent.one())),
            StepKind::Algebraic { .. } => Elem::Alg(UPoly::constant(e)),
        }
    }

    /// Embeds an element of an ancestor level.
    pub fn lift_from(&self, sub: &Field, e: &Elem) -> Elem {
        debug_assert!(sub.is_prefix_of(self));
        let mut out = e.clone();
        for l in self.levels().iter().skip(sub.depth() + 1) {
            out = l.lift_parent(out);
        }
        out
    }

    /// `p(g)` for the generator `g` of this level and `p` over the parent.
    pub fn poly_in_gen(&self, p: &UPoly) -> Elem {
        let (parent, step) = self.ext_parts();
        match step.kind {
            StepKind::Transcendental => self.make_frac(p.clone(), UPoly::constant(parent.one())).expect("unit denominator"),
            StepKind::Algebraic { .. } => self.reduce_alg(p.clone()),
        }
    }

    /// The element of the parent level equal to `e`, if any.
    pub fn descend(&self, e: &Elem) -> Option<Elem> {
        let parent = self.parent()?;
        let as_const = |p: &UPoly| match p.coeffs() {
            [] => Some(parent.zero()),
            [c] => Some(c.clone()),
            _ => None,
        };
        match e {
            Elem::Frac(n, d) if d.is_one(parent) => as_const(n),
            Elem::Alg(p) => as_const(p),
            _ => None,
        }
    }

    /// The element of the ancestor `sub` equal to `e`, if any.
    pub fn descend_to(&self, sub: &Field, e: &Elem) -> Option<Elem> {
        let mut cur = e.clone();
        let mut level = self.clone();
        while level.depth() > sub.depth() {
            cur = level.descend(&cur)?;
            level = level.parent().unwrap().clone();
        }
        Some(cur)
    }

    fn ext_parts(&self) -> (&Field, &Step) {
        match &self.0.kind {
            Kind::Ext { parent, step } => (parent, step),
            _ => panic!("prime field has no parent"),
        }
    }

    fn frac_parts<'a>(&self, e: &'a Elem) -> (&'a UPoly, &'a UPoly) {
        match e {
            Elem::Frac(n, d) => (n, d),
            other => panic!("expected a rational-function element of {self}, got {other:?}"),
        }
    }

    fn alg_part<'a>(&self, e: &'a Elem) -> &'a UPoly {
        match e {
            Elem::Alg(p) => p,
            other => panic!("expected an algebraic element of {self}, got {other:?}"),
        }
    }

    /// Canonical `num/den` over the parent: coprime, `den` monic.
    pub(crate) fn make_frac(&self, num: UPoly, den: UPoly) -> Result<Elem> {
        let (parent, _) = self.ext_parts();
        if den.is_zero() {
            return domain("division by zero");
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = if den.deg() == 0 { UPoly::constant(parent.one()) } else { poly::gcd(parent, &num, &den) };
        let (mut num, mut den) = if g.deg() > 0 {
            (poly::div_exact(parent, &num, &g)?, poly::div_exact(parent, &den, &g)?)
        } else {
            (num, den)
        };
        let lc = den.lc().unwrap().clone();
        if !parent.is_one(&lc) {
            let inv = parent.inv(&lc)?;
            num = poly::scale(parent, &num, &inv);
            den = poly::scale(parent, &den, &inv);
        }
        Ok(Elem::Frac(num, den))
    }

    fn reduce_alg(&self, p: UPoly) -> Elem {
        let (parent, step) = self.ext_parts();
        let m = step.minpoly().unwrap();
        if p.deg() < m.deg() {
            Elem::Alg(p)
        } else {
            Elem::Alg(poly::rem(parent, &p, m).expect("monic modulus"))
        }
    }

    // ----- arithmetic -----

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Kind::Prime(p), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod((x + y) % p),
            (Kind::Ext { parent, step }, _, _) => match step.kind {
                StepKind::Transcendental => {
                    let (n1, d1) = self.frac_parts(a);
                    let (n2, d2) = self.frac_parts(b);
                    if n1.is_zero() {
                        return b.clone();
                    }
                    if n2.is_zero() {
                        return a.clone();
                    }
                    let res = if d1 == d2 {
                        self.make_frac(poly::add(parent, n1, n2), d1.clone())
                    } else {
                        let num = poly::add(parent, &poly::mul(parent, n1, d2), &poly::mul(parent, n2, d1));
                        self.make_frac(num, poly::mul(parent, d1, d2))
                    };
                    res.expect("nonzero denominators")
                }
                StepKind::Algebraic { .. } => {
                    Elem::Alg(poly::add(parent, self.alg_part(a), self.alg_part(b)))
                }
            },
            _ => panic!("elements {a:?}, {b:?} do not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.0.kind, a) {
            (Kind::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Kind::Prime(p), Elem::Mod(x)) => Elem::Mod((p - x) % p),
            (Kind::Ext { parent, .. }, Elem::Frac(n, d)) => Elem::Frac(poly::neg(parent, n), d.clone()),
            (Kind::Ext { parent, .. }, Elem::Alg(x)) => Elem::Alg(poly::neg(parent, x)),
            _ => panic!("element {a:?} does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Kind::Prime(p), Elem::Mod(x), Elem::Mod(y)) => {
                Elem::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Kind::Ext { parent, step }, _, _) => match step.kind {
                StepKind::Transcendental => {
                    let (n1, d1) = self.frac_parts(a);
                    let (n2, d2) = self.frac_parts(b);
                    if n1.is_zero() || n2.is_zero() {
                        return self.zero();
                    }
                    // Cross-cancel first; the product of coprime pieces is
                    // then already reduced up to the monic normalisation.
                    let g1 = poly::gcd(parent, n1, d2);
                    let g2 = poly::gcd(parent, n2, d1);
                    let q = |x: &UPoly, g: &UPoly| poly::div_exact(parent, x, g).expect("gcd divides");
                    let num = poly::mul(parent, &q(n1, &g1), &q(n2, &g2));
                    let den = poly::mul(parent, &q(d2, &g1), &q(d1, &g2));
                    self.make_frac(num, den).expect("nonzero denominator")
                }
                StepKind::Algebraic { .. } => {
                    self.reduce_alg(poly::mul(parent, self.alg_part(a), self.alg_part(b)))
                }
            },
            _ => panic!("elements {a:?}, {b:?} do not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if a.is_zero() {
            return domain("inverse of zero");
        }
        match (&self.0.kind, a) {
            (Kind::Rationals, Elem::Rat(x)) => Ok(Elem::Rat(x.recip())),
            (Kind::Prime(p), Elem::Mod(x)) => {
                let e = BigInt::from(*x).extended_gcd(&BigInt::from(*p));
                Ok(Elem::Mod(e.x.mod_floor(&BigInt::from(*p)).to_u64().unwrap()))
            }
            (Kind::Ext { .. }, Elem::Frac(n, d)) => self.make_frac(d.clone(), n.clone()),
            (Kind::Ext { parent, step }, Elem::Alg(x)) => {
                let m = step.minpoly().unwrap();
                let (g, s, _) = poly::xgcd(parent, x, m);
                if !g.is_one(parent) {
                    return domain(format!("zero divisor in {self}: the minimal polynomial is reducible"));
                }
                Ok(self.reduce_alg(s))
            }
            _ => panic!("element {a:?} does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, e: i64) -> Result<Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        Ok(self.pow_u(&base, e.unsigned_abs()))
    }

    pub fn pow_u(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn pow_big(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            if i + 1 < bits {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests;
