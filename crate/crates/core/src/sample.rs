//! Seeded random elements for property checks and verification reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Elem, Field, StepKind};
use crate::poly::{MPoly, UPoly};
use crate::valuation::MonomialValuation;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    /// A small integer, occasionally a small fraction in characteristic 0.
    pub fn scalar(&mut self, k: &Field) -> Elem {
        let n = self.range(-3, 3);
        let e = k.from_i64(n);
        if k.characteristic() == 0 && self.chance(1, 4) {
            let d = self.range(2, 3);
            return k.div(&e, &k.from_i64(d)).expect("nonzero");
        }
        e
    }

    /// A random element of modest size, built level by level.
    pub fn elem(&mut self, k: &Field) -> Elem {
        self.elem_sized(k, 2)
    }

    fn elem_sized(&mut self, k: &Field, budget: usize) -> Elem {
        let Some(parent) = k.parent().cloned() else { return self.scalar(k) };
        let step = k.step().unwrap().clone();
        match step.kind {
            StepKind::Transcendental => {
                let deg = self.range(0, budget as i64) as usize;
                let num = self.poly(&parent, deg, 1);
                let den = if self.chance(1, 2) {
                    UPoly::constant(parent.one())
                } else {
                    let c = self.elem_sized(&parent, 1);
                    UPoly::from_coeffs(vec![c, parent.one()])
                };
                k.div(&k.poly_in_gen(&num), &k.poly_in_gen(&den)).expect("monic denominator")
            }
            StepKind::Algebraic { minpoly, .. } => {
                let p = self.poly(&parent, minpoly.deg() - 1, 1);
                k.poly_in_gen(&p)
            }
        }
    }

    /// Polynomial of degree at most `deg` with random coefficients.
    pub fn poly(&mut self, k: &Field, deg: usize, budget: usize) -> UPoly {
        UPoly::from_coeffs(
            (0..=deg)
                .map(|_| if self.chance(1, 3) { k.zero() } else { self.elem_sized(k, budget.saturating_sub(1)) })
                .collect(),
        )
    }

    /// A random element of `K = F(x_1..x_n)`: a ratio of sparse polynomials
    /// with random coefficients from `F`, sometimes shifted by a monomial
    /// with negative exponents.
    pub fn valued(&mut self, v: &MonomialValuation) -> Elem {
        let k = v.field();
        let num = self.sparse(v, 3);
        let den = loop {
            let d = self.sparse(v, 2);
            if !d.is_zero() {
                break d;
            }
        };
        let mut z = k.div(&num, &den).expect("nonzero denominator");
        if self.chance(1, 3) {
            let exps: Vec<i64> = (0..v.rank()).map(|_| self.range(-1, 1)).collect();
            z = k.mul(&z, &v.monomial(&exps).expect("monomial"));
        }
        z
    }

    /// Element of the valuation ring (value ≥ 0).
    pub fn integral(&mut self, v: &MonomialValuation) -> Elem {
        loop {
            let z = self.valued(v);
            if v.in_ring(&z) {
                return z;
            }
        }
    }

    fn sparse(&mut self, v: &MonomialValuation, max_terms: i64) -> Elem {
        let k = v.field();
        let f = v.coeff_field().clone();
        let mut acc = k.zero();
        for _ in 0..self.range(1, max_terms) {
            let exps: Vec<i64> = (0..v.rank()).map(|_| self.range(0, 2)).collect();
            let c = self.elem_sized(&f, 1);
            acc = k.add(&acc, &k.mul(&v.lift_residue(&c), &v.monomial(&exps).expect("monomial")));
        }
        acc
    }

    /// Element of `K[y_1..y_m]` with coefficients from [`Sampler::valued`].
    pub fn mpoly(&mut self, v: &MonomialValuation, nvars: usize, max_deg: u32) -> MPoly {
        let k = v.field();
        let terms: Vec<(Vec<u32>, Elem)> = (0..self.range(1, 3))
            .map(|_| {
                let e = (0..nvars).map(|_| self.rng.gen_range(0..=max_deg)).collect();
                (e, self.valued(v))
            })
            .collect();
        MPoly::from_terms(k, nvars, terms)
    }
}
