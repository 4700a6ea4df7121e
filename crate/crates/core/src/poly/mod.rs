//! Polynomial arithmetic over tower fields: dense univariate polynomials (the
//! workhorse of factorization and field arithmetic) and sparse multivariate
//! polynomials (carriers for free algebras `V[y1..ym]`).

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::field::{Elem, Field};

pub mod factor;
mod finite;
mod integer;
pub mod mpoly;
pub mod sqf;
mod trager;

pub use factor::{factor, is_irreducible, Factorization, DEFAULT_DEGREE_BOUND, DEFAULT_SEED};
pub use mpoly::MPoly;
pub use sqf::{squarefree_decomposition, squarefree_part};

/// Dense univariate polynomial, coefficients low degree first, no trailing
/// zeros. Coefficients are canonical elements of some [`Field`] which is
/// supplied to every operation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UPoly {
    coeffs: Vec<Elem>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> UPoly {
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: Elem) -> UPoly {
        UPoly::from_coeffs(vec![c])
    }

    /// `c * y^n`.
    pub fn monomial(k: &Field, c: Elem, n: usize) -> UPoly {
        let mut coeffs = vec![k.zero(); n];
        coeffs.push(c);
        UPoly::from_coeffs(coeffs)
    }

    /// The indeterminate `y`.
    pub fn var(k: &Field) -> UPoly {
        UPoly::monomial(k, k.one(), 1)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Coefficient of `y^i`, zero when out of range.
    pub fn coeff(&self, k: &Field, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self, k: &Field) -> bool {
        self.coeffs.len() == 1 && k.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self, k: &Field) -> bool {
        self.lc().is_some_and(|c| k.is_one(c))
    }

    pub fn map(&self, f: impl FnMut(&Elem) -> Elem) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map(&self, f: impl FnMut(&Elem) -> Result<Elem>) -> Result<UPoly> {
        Ok(UPoly::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }
}

/// Deterministic order used for factor lists: lower degree first, then the
/// coefficient sequence read from the leading term down.
pub fn canonical_cmp(a: &UPoly, b: &UPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

pub fn add(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    UPoly::from_coeffs(coeffs)
}

pub fn neg(k: &Field, a: &UPoly) -> UPoly {
    a.map(|c| k.neg(c))
}

pub fn sub(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    add(k, a, &neg(k, b))
}

pub fn scale(k: &Field, a: &UPoly, c: &Elem) -> UPoly {
    if c.is_zero() {
        return UPoly::zero();
    }
    a.map(|x| k.mul(x, c))
}

pub fn mul(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() || b.is_zero() {
        return UPoly::zero();
    }
    let mut out = vec![k.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = k.mul(x, y);
            out[i + j] = k.add(&out[i + j], &t);
        }
    }
    UPoly::from_coeffs(out)
}

pub fn pow(k: &Field, a: &UPoly, mut e: u64) -> UPoly {
    let mut base = a.clone();
    let mut acc = UPoly::constant(k.one());
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(k, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(k, &base, &base);
        }
    }
    acc
}

/// Euclidean division `a = q*b + r`, `deg r < deg b`.
pub fn div_rem(k: &Field, a: &UPoly, b: &UPoly) -> Result<(UPoly, UPoly)> {
    let Some(db) = b.degree() else {
        return domain("polynomial division by zero");
    };
    let lc_inv = k.inv(b.lc().expect("nonzero"))?;
    let mut r = a.coeffs.clone();
    if r.len() <= db {
        return Ok((UPoly::zero(), a.clone()));
    }
    let mut q = vec![k.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = k.mul(&r[i], &lc_inv);
        for (j, bj) in b.coeffs.iter().enumerate() {
            let t = k.mul(&c, bj);
            r[i - db + j] = k.sub(&r[i - db + j], &t);
        }
        q[i - db] = c;
    }
    r.truncate(db);
    Ok((UPoly::from_coeffs(q), UPoly::from_coeffs(r)))
}

pub fn rem(k: &Field, a: &UPoly, b: &UPoly) -> Result<UPoly> {
    Ok(div_rem(k, a, b)?.1)
}

/// Exact quotient; errors when `b` does not divide `a`.
pub fn div_exact(k: &Field, a: &UPoly, b: &UPoly) -> Result<UPoly> {
    let (q, r) = div_rem(k, a, b)?;
    if !r.is_zero() {
        return domain("inexact polynomial division");
    }
    Ok(q)
}

pub fn monic(k: &Field, a: &UPoly) -> Result<UPoly> {
    match a.lc() {
        None => Ok(UPoly::zero()),
        Some(c) if k.is_one(c) => Ok(a.clone()),
        Some(c) => Ok(scale(k, a, &k.inv(c)?)),
    }
}

/// Monic gcd; `gcd(f, 0) = monic(f)`, `gcd(0, 0) = 0`.
pub fn gcd(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return UPoly::constant(k.one());
    }
    if k.step().is_some_and(|s| s.is_transcendental()) && !a.is_zero() && !b.is_zero() {
        return gcd_primitive(k, a, b);
    }
    let (mut x, mut y) = (monic(k, a).expect("unit"), monic(k, b).expect("unit"));
    while !y.is_zero() {
        if y.degree() == Some(0) {
            return UPoly::constant(k.one());
        }
        // Monic remainders keep coefficient growth in check over function fields.
        let r = monic(k, &rem(k, &x, &y).expect("nonzero divisor")).expect("unit");
        x = y;
        y = r;
    }
    x
}

/// Gcd over `P(t)` through a primitive remainder sequence in `P[t][y]`.
fn gcd_primitive(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = (primitive_part(k, a), primitive_part(k, b));
    if x.deg() < y.deg() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        if y.deg() == 0 {
            return UPoly::constant(k.one());
        }
        let r = pseudo_rem(k, &x, &y);
        x = y;
        y = if r.is_zero() { r } else { primitive_part(k, &r) };
    }
    monic(k, &x).expect("nonzero leading coefficient")
}

fn numer_denom(e: &Elem) -> (&UPoly, &UPoly) {
    match e {
        Elem::Frac(n, d) => (n, d),
        _ => unreachable!("transcendental level"),
    }
}

/// `a` scaled into `P[t][y]` and divided by the gcd of its coefficients.
fn primitive_part(k: &Field, a: &UPoly) -> UPoly {
    let p = k.parent().expect("extension");
    let one = UPoly::constant(p.one());
    let mut lcm = one.clone();
    for c in a.coeffs() {
        let d = numer_denom(c).1;
        if d.deg() > 0 {
            let g = gcd(p, &lcm, d);
            lcm = mul(p, &lcm, &div_exact(p, d, &g).expect("gcd divides"));
        }
    }
    let nums: Vec<UPoly> = a
        .coeffs()
        .iter()
        .map(|c| {
            let (n, d) = numer_denom(c);
            if n.is_zero() {
                return UPoly::zero();
            }
            mul(p, n, &div_exact(p, &lcm, d).expect("denominator divides lcm"))
        })
        .collect();
    let mut content = UPoly::zero();
    for n in nums.iter().filter(|n| !n.is_zero()) {
        content = if content.is_zero() { monic(p, n).expect("unit") } else { gcd(p, &content, n) };
        if content.deg() == 0 {
            break;
        }
    }
    UPoly::from_coeffs(
        nums.iter()
            .map(|n| if n.is_zero() { k.zero() } else { Elem::Frac(div_exact(p, n, &content).expect("content divides"), one.clone()) })
            .collect(),
    )
}

/// `lc(b)^(deg a - deg b + 1) a mod b`.
fn pseudo_rem(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.deg();
    let lb = b.lc().expect("nonzero").clone();
    let mut r = a.clone();
    while !r.is_zero() && r.deg() >= db {
        let shift = r.deg() - db;
        let lr = r.lc().unwrap().clone();
        let lhs = scale(k, &r, &lb);
        let mut rhs = scale(k, b, &lr);
        let mut c = vec![k.zero(); shift];
        c.extend(rhs.coeffs.drain(..));
        r = sub(k, &lhs, &UPoly::from_coeffs(c));
    }
    r
}

/// Extended Euclid: `(g, s, t)` with `g = s*a + t*b` and `g` monic.
pub fn xgcd(k: &Field, a: &UPoly, b: &UPoly) -> (UPoly, UPoly, UPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UPoly::constant(k.one()), UPoly::zero());
    let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(k.one()));
    while !r1.is_zero() {
        let (q, r) = div_rem(k, &r0, &r1).expect("nonzero divisor");
        let s = sub(k, &s0, &mul(k, &q, &s1));
        let t = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.lc() {
        None => (r0, s0, t0),
        Some(c) => {
            let ci = k.inv(c).expect("nonzero");
            (scale(k, &r0, &ci), scale(k, &s0, &ci), scale(k, &t0, &ci))
        }
    }
}

pub fn derivative(k: &Field, a: &UPoly) -> UPoly {
    let coeffs = a
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
        .collect();
    UPoly::from_coeffs(coeffs)
}

/// Horner evaluation at a point of an extension field `target`, with the
/// coefficients mapped through `map`.
pub fn eval_mapped(
    target: &Field,
    a: &UPoly,
    point: &Elem,
    mut map: impl FnMut(&Elem) -> Result<Elem>,
) -> Result<Elem> {
    let mut acc = target.zero();
    for c in a.coeffs.iter().rev() {
        acc = target.add(&target.mul(&acc, point), &map(c)?);
    }
    Ok(acc)
}

pub fn eval(k: &Field, a: &UPoly, point: &Elem) -> Elem {
    eval_mapped(k, a, point, |c| Ok(c.clone())).expect("identity map")
}

/// `a(b(y))`.
pub fn compose(k: &Field, a: &UPoly, b: &UPoly) -> UPoly {
    let mut acc = UPoly::zero();
    for c in a.coeffs.iter().rev() {
        acc = add(k, &mul(k, &acc, b), &UPoly::constant(c.clone()));
    }
    acc
}

/// `a^e mod m`.
pub fn pow_mod(k: &Field, a: &UPoly, e: &BigUint, m: &UPoly) -> Result<UPoly> {
    let mut acc = UPoly::constant(k.one());
    let mut base = rem(k, a, m)?;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = rem(k, &mul(k, &acc, &base), m)?;
        }
        if i + 1 < bits {
            base = rem(k, &mul(k, &base, &base), m)?;
        }
    }
    if e.is_zero() {
        return rem(k, &UPoly::constant(k.one()), m);
    }
    Ok(acc)
}

pub fn product(k: &Field, items: impl IntoIterator<Item = UPoly>) -> UPoly {
    items.into_iter().fold(UPoly::constant(k.one()), |acc, f| mul(k, &acc, &f))
}

pub(crate) fn biguint_pow(base: u64, e: u64) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}
