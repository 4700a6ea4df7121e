//! Factorization over `Q` by reduction modulo a prime, Hensel lifting and
//! recombination of modular factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{derivative, div_rem, gcd, UPoly};
use crate::error::{capability, Result};
use crate::field::{Elem, Field};
use crate::value_group::is_prime;

type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect())
}

/// Exact division by a monic divisor; `None` when it does not divide.
fn zdiv_monic(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    trim(r).is_empty().then(|| trim(q))
}

fn symmetric_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect())
}

fn to_fp(fp: &Field, a: &ZPoly) -> UPoly {
    UPoly::from_coeffs(a.iter().map(|c| fp.from_bigint(c)).collect())
}

fn from_fp(a: &UPoly) -> ZPoly {
    a.coeffs()
        .iter()
        .map(|c| match c {
            Elem::Mod(x) => BigInt::from(*x),
            _ => unreachable!("prime field element"),
        })
        .collect()
}

/// Lifts `f ≡ a*b (mod p^j)` with `a, b` monic and coprime mod `p` to a
/// factorization modulo `p^target`.
fn hensel_pair(fp: &Field, f: &ZPoly, a: &ZPoly, b: &ZPoly, p: &BigInt, target: u32) -> (ZPoly, ZPoly) {
    let (g, s, t) = super::xgcd(fp, &to_fp(fp, a), &to_fp(fp, b));
    debug_assert!(g.is_one(fp));
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut pj = p.clone();
    for _ in 1..target {
        let err = zsub(f, &zmul(&a, &b));
        let e: ZPoly = err.iter().map(|c| c / &pj).collect();
        let e = to_fp(fp, &e);
        let te = super::mul(fp, &t, &e);
        let (quo, ra) = div_rem(fp, &te, &to_fp(fp, &a)).expect("monic");
        let rb = super::add(fp, &super::mul(fp, &s, &e), &super::mul(fp, &quo, &to_fp(fp, &b)));
        let da: ZPoly = from_fp(&ra).into_iter().map(|c| c * &pj).collect();
        let db: ZPoly = from_fp(&rb).into_iter().map(|c| c * &pj).collect();
        a = zsub(&a, &da.iter().map(|c| -c).collect::<Vec<_>>());
        b = zsub(&b, &db.iter().map(|c| -c).collect::<Vec<_>>());
        pj *= p;
    }
    (symmetric_mod(&a, &pj), symmetric_mod(&b, &pj))
}

/// Lifts the modular factorization of `f` to modulus `p^k`.
fn hensel_multi(fp: &Field, f: &ZPoly, factors: &[ZPoly], p: &BigInt, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[ZPoly]| from_fp(&super::product(fp, fs.iter().map(|g| to_fp(fp, g))));
    let (a, b) = hensel_pair(fp, f, &prod(&factors[..mid]), &prod(&factors[mid..]), p, k);
    let mut out = hensel_multi(fp, &a, &factors[..mid], p, k);
    out.extend(hensel_multi(fp, &b, &factors[mid..], p, k));
    out
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a monic squarefree integer polynomial.
fn factor_monic_integer(g: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = g.len() - 1;
    if n <= 1 {
        return Ok(vec![g.clone()]);
    }
    // A prime keeping g squarefree.
    let mut p = 3u64;
    let fp = loop {
        if is_prime(p) {
            let fp = Field::prime(p)?;
            let gp = to_fp(&fp, g);
            if gcd(&fp, &gp, &derivative(&fp, &gp)).is_one(&fp) {
                break fp;
            }
        }
        p += 2;
        if p > 10_000 {
            return capability("no suitable prime for modular factorization");
        }
    };
    let pb = BigInt::from(p);
    let modular = super::finite::factor_squarefree(&fp, &to_fp(&fp, g), super::DEFAULT_SEED)?;
    if modular.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    let norm = g.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n + 1) * norm * 2;
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let modular: Vec<ZPoly> = modular.iter().map(from_fp).collect();
    let lifted = hensel_multi(&fp, g, &modular, &pb, k);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut rest = g.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for s in subsets(remaining.len(), size) {
            let cand = symmetric_mod(
                &s.iter().fold(vec![BigInt::one()], |acc, &i| zmul(&acc, &remaining[i])),
                &pk,
            );
            if let Some(q) = zdiv_monic(&rest, &cand) {
                out.push(cand);
                rest = q;
                remaining = remaining.into_iter().enumerate().filter(|(i, _)| !s.contains(i)).map(|(_, f)| f).collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(rest);
    Ok(out)
}

/// Irreducible monic factors of a monic squarefree polynomial over `Q`.
pub(crate) fn factor_squarefree_rational(q: &Field, g: &UPoly) -> Result<Vec<UPoly>> {
    let rats: Vec<BigRational> = g
        .coeffs()
        .iter()
        .map(|c| match c {
            Elem::Rat(r) => r.clone(),
            _ => unreachable!("rational coefficients"),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let f: ZPoly = ints.iter().map(|c| c / &content).collect();
    let n = f.len() - 1;
    let a = f[n].clone();
    // G(y) = a^{n-1} F(y/a) is monic with integer coefficients.
    let gmon: ZPoly = (0..=n)
        .map(|i| if i == n { BigInt::one() } else { &f[i] * a.pow((n - 1 - i) as u32) })
        .collect();
    let parts = factor_monic_integer(&gmon)?;
    // Undo the substitution: H(y) -> H(a y), then make monic over Q.
    parts
        .into_iter()
        .map(|h| {
            let coeffs: Vec<Elem> = h
                .iter()
                .enumerate()
                .map(|(i, c)| Elem::Rat(BigRational::from_integer(c * a.pow(i as u32))))
                .collect();
            super::monic(q, &UPoly::from_coeffs(coeffs))
        })
        .collect()
}
