//! Separability, radiciality and truncated perfect closures.

use super::{linalg, Elem, Field, FieldHom, StepKind};
use crate::error::{domain, structural, Result};
use crate::poly::{self, UPoly};

/// Default bound on `m` when searching for `p^m`-th powers.
pub const DEFAULT_RADICIAL_BOUND: u32 = 8;

/// `gcd(f, f') = 1`.
pub fn is_separable_poly(k: &Field, f: &UPoly) -> bool {
    poly::gcd(k, f, &poly::derivative(k, f)).is_one(k)
}

/// Result of a truncated perfect closure.
#[derive(Clone, Debug)]
pub struct PerfectClosure {
    pub field: Field,
    /// For each original generator, its `p^l`-th roots for `l = 0..=N`
    /// (index 0 is the generator itself), as elements of `field`.
    pub roots: Vec<(String, Vec<Elem>)>,
    /// Names of the generators actually adjoined.
    pub adjoined: Vec<String>,
}

impl Field {
    /// True when every step above the subtower `sub` is separable
    /// (transcendental steps count as separable).
    pub fn is_separable_over(&self, sub: &Field) -> Result<bool> {
        Ok(self.steps_above(sub)?.iter().all(|s| s.is_separable()))
    }

    /// Whether `self` is radicial over the subtower `sub`: every generator
    /// above `sub` has a `p^m`-th power in `sub` for some `m ≤ bound`.
    pub fn is_radicial_over(&self, sub: &Field, p: u64, bound: u32) -> Result<bool> {
        if !sub.is_prefix_of(self) {
            return structural(format!("{sub} is not a subtower of {self}"));
        }
        if sub.depth() == self.depth() {
            return Ok(true);
        }
        if self.characteristic() != p || p == 0 {
            return Ok(false);
        }
        if self.steps_above(sub)?.iter().any(|s| s.is_transcendental()) {
            return Ok(false);
        }
        self.is_radicial_over_generated(sub, &[], p, bound)
    }

    /// Whether `self` is radicial over its subfield generated by the subtower
    /// `base` and the elements `extra`. Every step above `base` must be
    /// algebraic.
    pub fn is_radicial_over_generated(&self, base: &Field, extra: &[Elem], p: u64, bound: u32) -> Result<bool> {
        if self.characteristic() != p || p == 0 {
            return Ok(extra.is_empty() && base.depth() == self.depth());
        }
        let span = linalg::generated_subspace(self, base, extra)?;
        for (_, g) in self.gens().into_iter().skip(base.depth()) {
            let mut power = g;
            let mut found = false;
            for _ in 0..=bound {
                if linalg::in_span(base, &span, &linalg::flatten(self, base, &power)?).is_some() {
                    found = true;
                    break;
                }
                power = self.pow_u(&power, p);
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Adjoins `p^N`-th roots of every tower generator, level by level,
    /// skipping roots that already exist. Root of generator `g` at level `l`
    /// is named `g_r<l>`.
    pub fn perfect_closure_truncated(&self, p: u64, n: u32) -> Result<PerfectClosure> {
        if self.characteristic() == 0 {
            return domain("perfect closure requires positive characteristic");
        }
        if self.characteristic() != p {
            return domain(format!("characteristic of {self} is not {p}"));
        }
        let mut field = self.clone();
        let mut roots: Vec<(String, Vec<Elem>)> = self.gens().into_iter().map(|(n, g)| (n, vec![g])).collect();
        let mut adjoined = Vec::new();
        for level in 1..=n {
            for i in 0..roots.len() {
                let target = roots[i].1.last().unwrap().clone();
                let root = match field.pth_root(&target)? {
                    Some(r) => r,
                    None => {
                        let name = format!("{}_r{level}", roots[i].0);
                        let f = UPoly::from_coeffs({
                            let mut c = vec![field.zero(); p as usize + 1];
                            c[0] = field.neg(&target);
                            c[p as usize] = field.one();
                            c
                        });
                        let next = field.algebraic_unchecked(&name, f);
                        adjoined.push(name);
                        for (_, chain) in roots.iter_mut() {
                            for e in chain.iter_mut() {
                                *e = next.lift_parent(e.clone());
                            }
                        }
                        field = next;
                        field.gen()?
                    }
                };
                roots[i].1.push(root);
            }
        }
        Ok(PerfectClosure { field, roots, adjoined })
    }
}

impl PerfectClosure {
    /// The `p^l`-th root of the named original generator.
    pub fn root(&self, name: &str, level: usize) -> Option<&Elem> {
        self.roots.iter().find(|(n, _)| n == name).and_then(|(_, r)| r.get(level))
    }

    /// Embedding of the closure `other` of a field `k` into this closure of
    /// a field `F`, extending `base_hom: k -> F` by sending roots to roots.
    pub fn embed(&self, other: &PerfectClosure, base_hom: &FieldHom) -> Result<FieldHom> {
        let mut images: Vec<Elem> =
            base_hom.images().iter().map(|e| self.field.lift_from(base_hom.dst(), e)).collect();
        let src = &other.field;
        let base_depth = base_hom.src().depth();
        for l in src.levels().into_iter().skip(base_depth + 1) {
            let parent = l.parent().unwrap().clone();
            let (gen_name, lvl) = other
                .adjoined_origin(&l.step().unwrap().name)
                .ok_or_else(|| crate::error::Error::Structural("unknown closure root".into()))?;
            let lower = other.root(&gen_name, lvl - 1).expect("lower root");
            let lower = src.descend_to(&parent, lower).expect("lower root lies below");
            let partial = FieldHom::new_unchecked(&parent, &self.field, images.clone());
            let prev = partial.apply(&lower)?;
            match self.field.pth_root(&prev)? {
                Some(r) => images.push(r),
                None => return structural(format!("no p-th root of the image of {gen_name}")),
            }
        }
        FieldHom::new(src, &self.field, images)
    }

    /// For an adjoined root name, the original generator and the level.
    fn adjoined_origin(&self, name: &str) -> Option<(String, usize)> {
        self.roots.iter().find_map(|(g, _)| {
            let rest = name.strip_prefix(g.as_str())?.strip_prefix("_r")?;
            Some((g.clone(), rest.parse().ok()?))
        })
    }
}

/// Image of every step's generator kind, used in reports.
pub fn step_kinds(f: &Field) -> Vec<(String, &'static str)> {
    f.levels()
        .iter()
        .filter_map(|l| l.step())
        .map(|s| {
            (
                s.name.clone(),
                match &s.kind {
                    StepKind::Transcendental => "transcendental",
                    StepKind::Algebraic { separable: true, .. } => "separable",
                    StepKind::Algebraic { separable: false, .. } => "inseparable",
                },
            )
        })
        .collect()
}
