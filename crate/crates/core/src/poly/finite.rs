//! Distinct-degree and equal-degree factorization over finite tower fields.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{div_exact, gcd, pow_mod, rem, sub, UPoly};
use crate::error::Result;
use crate::field::{linalg, Elem, Field};

/// A uniformly random element of a finite tower field.
pub(crate) fn random_elem(k: &Field, rng: &mut impl Rng) -> Elem {
    let base = k.prime_field();
    let p = k.characteristic();
    let n = linalg::dim_over(k, &base).expect("finite tower");
    let coords: Vec<Elem> = (0..n).map(|_| Elem::Mod(rng.gen_range(0..p))).collect();
    linalg::unflatten(k, &base, &coords).expect("finite tower")
}

pub(crate) fn factor_squarefree(k: &Field, g: &UPoly, seed: u64) -> Result<Vec<UPoly>> {
    let q = k.size().expect("finite field");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, d) in distinct_degree(k, g, &q)? {
        split_equal_degree(k, &part, d, &q, &mut rng, &mut out)?;
    }
    Ok(out)
}

/// Pairs `(product of all irreducible factors of degree d, d)`.
fn distinct_degree(k: &Field, g: &UPoly, q: &BigUint) -> Result<Vec<(UPoly, usize)>> {
    let x = UPoly::var(k);
    let mut rest = g.clone();
    let mut h = rem(k, &x, &rest)?;
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = pow_mod(k, &h, q, &rest)?;
        let gd = gcd(k, &rest, &sub(k, &h, &x));
        if gd.deg() > 0 {
            rest = div_exact(k, &rest, &gd)?;
            h = rem(k, &h, &rest)?;
            out.push((gd, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    Ok(out)
}

fn split_equal_degree(
    k: &Field,
    g: &UPoly,
    d: usize,
    q: &BigUint,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<UPoly>,
) -> Result<()> {
    if g.deg() == d {
        out.push(g.clone());
        return Ok(());
    }
    let p = k.characteristic();
    let one = UPoly::constant(k.one());
    loop {
        let a = UPoly::from_coeffs((0..g.deg()).map(|_| random_elem(k, rng)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace from F_{q^d} down to F_2.
            let bits = (q.bits() - 1) as usize * d;
            let mut t = rem(k, &a, g)?;
            let mut acc = t.clone();
            for _ in 1..bits {
                t = rem(k, &super::mul(k, &t, &t), g)?;
                acc = super::add(k, &acc, &t);
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / 2u32;
            sub(k, &pow_mod(k, &a, &e, g)?, &one)
        };
        let f1 = gcd(k, g, &b);
        if f1.deg() > 0 && f1.deg() < g.deg() {
            let f2 = div_exact(k, g, &f1)?;
            split_equal_degree(k, &f1, d, q, rng, out)?;
            split_equal_degree(k, &f2, d, q, rng, out)?;
            return Ok(());
        }
    }
}
