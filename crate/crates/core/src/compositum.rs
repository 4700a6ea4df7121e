//! Points of `Spec(L ⊗_K M)` as composed extensions `(E, u: L → E, v: M → E)`.
//!
//! `L` is a tower over `K`; its steps are processed one at a time over the
//! running field, which starts at `M`. A transcendental step adjoins a new
//! variable; an algebraic step with minimal polynomial `f` branches over the
//! irreducible factors of `f` mapped into the running field. The local ring
//! of a point has length equal to the product of the factor multiplicities.
//!
//! A point is maximal when `trdeg(E/M) = trdeg(L/K)`: each step of the
//! construction is flat, so every point it emits lies over the generic point
//! of `Spec M`.

use crate::error::{structural, Result};
use crate::field::{Elem, Field, FieldHom, StepKind};
use crate::poly::{factor, UPoly};
use crate::valuation::INTERNAL_TRDEG_BOUND;

/// How one step of `L` was realized in `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathStep {
    /// A new transcendental generator of `E`.
    Transcendental { name: String, image_name: String },
    /// Factor `factor_index` (in canonical order) of the mapped minimal
    /// polynomial; `image_name` is `None` when the factor is linear.
    Algebraic { name: String, factor_index: usize, factor: String, multiplicity: usize, image_name: Option<String> },
}

#[derive(Clone, Debug)]
pub struct CompositumPoint {
    pub field: Field,
    pub u: FieldHom,
    pub v: FieldHom,
    pub multiplicity: usize,
    pub maximal: bool,
    pub strictly_maximal: bool,
    pub path: Vec<PathStep>,
    /// Depth of `E` after each step of `L` over `K`.
    pub depths: Vec<usize>,
}

/// Flags of a composed extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointFlags {
    pub maximal: bool,
    pub strictly_maximal: bool,
}

/// Maximality from transcendence degrees, strictness from the multiplicity.
pub fn classify(k: &Field, l: &Field, m: &Field, e: &Field, multiplicity: usize) -> PointFlags {
    let maximal = e.trdeg() as i64 - m.trdeg() as i64 == l.trdeg() as i64 - k.trdeg() as i64;
    PointFlags { maximal, strictly_maximal: maximal && multiplicity == 1 }
}

pub fn classify_point(k: &Field, l: &Field, m: &Field, pt: &CompositumPoint) -> PointFlags {
    classify(k, l, m, &pt.field, pt.multiplicity)
}

/// A generator name not yet used in `e`.
fn fresh_name(e: &Field, base: &str) -> String {
    if e.gen_by_name(base).is_none() {
        return base.to_string();
    }
    (2..).map(|i| format!("{base}_{i}")).find(|n| e.gen_by_name(n).is_none()).unwrap()
}

struct Partial {
    field: Field,
    images: Vec<Elem>,
    multiplicity: usize,
    path: Vec<PathStep>,
    depths: Vec<usize>,
}

/// All points of `Spec(L ⊗_K M)`, lex-least factor first, where `K` is a
/// prefix of the tower `L` and `kv: K → M`.
pub fn tensor_decompose(k: &Field, l: &Field, m: &Field, kv: &FieldHom) -> Result<Vec<CompositumPoint>> {
    if !k.is_prefix_of(l) {
        return structural(format!("{} is not a subtower of {}", k.short_name(), l.short_name()));
    }
    if kv.src() != k || kv.dst() != m {
        return structural("the structure map must go from K to M");
    }
    let mut frontier = vec![Partial { field: m.clone(), images: kv.images().to_vec(), multiplicity: 1, path: Vec::new(), depths: Vec::new() }];
    for level in l.levels().iter().skip(k.depth() + 1) {
        let step = level.step().unwrap().clone();
        let below = level.parent().unwrap();
        let mut next = Vec::new();
        for st in frontier {
            match &step.kind {
                StepKind::Transcendental => {
                    let image_name = fresh_name(&st.field, &step.name);
                    let e = st.field.transcendental_bounded(&image_name, INTERNAL_TRDEG_BOUND)?;
                    let mut images: Vec<Elem> = st.images.iter().map(|x| e.lift_parent(x.clone())).collect();
                    images.push(e.gen()?);
                    let mut path = st.path.clone();
                    path.push(PathStep::Transcendental { name: step.name.clone(), image_name });
                    let mut depths = st.depths.clone();
                    depths.push(e.depth());
                    next.push(Partial { field: e, images, multiplicity: st.multiplicity, path, depths });
                }
                StepKind::Algebraic { minpoly, .. } => {
                    let h = FieldHom::new_unchecked(below, &st.field, st.images.clone());
                    let mapped = minpoly.try_map(|c| h.apply(c))?;
                    let fac = factor::factor(&st.field, &mapped)?;
                    for (idx, (g, mult)) in fac.factors.iter().enumerate() {
                        let factor_text = st.field.fmt_poly(g, crate::field::POLY_VAR);
                        let (e, root, image_name) = if g.deg() == 1 {
                            (st.field.clone(), st.field.neg(&g.coeffs()[0]), None)
                        } else {
                            let name = fresh_name(&st.field, &step.name);
                            let e = st.field.algebraic_unchecked(&name, g.clone());
                            let r = e.gen()?;
                            (e, r, Some(name))
                        };
                        let mut images: Vec<Elem> = st.images.iter().map(|x| e.lift_from(&st.field, x)).collect();
                        images.push(root);
                        let mut path = st.path.clone();
                        path.push(PathStep::Algebraic {
                            name: step.name.clone(),
                            factor_index: idx,
                            factor: factor_text,
                            multiplicity: *mult,
                            image_name,
                        });
                        let mut depths = st.depths.clone();
                        depths.push(e.depth());
                        next.push(Partial { field: e, images, multiplicity: st.multiplicity * mult, path, depths });
                    }
                }
            }
        }
        frontier = next;
    }
    frontier
        .into_iter()
        .map(|st| {
            let u = FieldHom::new_unchecked(l, &st.field, st.images);
            let v = FieldHom::inclusion(m, &st.field)?;
            let flags = classify(k, l, m, &st.field, st.multiplicity);
            Ok(CompositumPoint {
                field: st.field,
                u,
                v,
                multiplicity: st.multiplicity,
                maximal: flags.maximal,
                strictly_maximal: flags.strictly_maximal,
                path: st.path,
                depths: st.depths,
            })
        })
        .collect()
}

/// [`tensor_decompose`] when `K` is also a prefix of `M`.
pub fn tensor_decompose_over(k: &Field, l: &Field, m: &Field) -> Result<Vec<CompositumPoint>> {
    tensor_decompose(k, l, m, &FieldHom::inclusion(k, m)?)
}

/// Degree bookkeeping for finite `L/K`: `Σ mult·[E:M]` and `[L:K]`.
pub fn degree_sum(k: &Field, l: &Field, m: &Field, points: &[CompositumPoint]) -> Result<(usize, usize)> {
    let total = l.degree_over(k)?.ok_or_else(|| crate::Error::Structural("L is not finite over K".into()))?;
    let mut sum = 0;
    for pt in points {
        let d = pt.field.degree_over(m)?.ok_or_else(|| crate::Error::Structural("E is not finite over M".into()))?;
        sum += pt.multiplicity * d;
    }
    Ok((sum, total))
}

/// Outcome of the separability transfer check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    /// `L/K` is separable, so the check applies.
    pub applicable: bool,
    pub maximal: bool,
    pub strictly_maximal: bool,
    pub separable_over_m: bool,
    /// For separable `L/K`, a maximal point is strictly maximal and `E/M`
    /// is separable.
    pub holds: bool,
}

/// `E/M` must be a tower extension of `M` (as produced by
/// [`tensor_decompose`]).
pub fn separable_transfer_check(k: &Field, l: &Field, m: &Field, e: &Field, multiplicity: usize) -> Result<TransferReport> {
    let applicable = l.is_separable_over(k)?;
    let flags = classify(k, l, m, e, multiplicity);
    let separable_over_m = e.is_separable_over(m)?;
    let holds = !applicable || !flags.maximal || (flags.strictly_maximal && separable_over_m);
    Ok(TransferReport { applicable, maximal: flags.maximal, strictly_maximal: flags.strictly_maximal, separable_over_m, holds })
}

/// Outcome of restricting a point to a subtower `L₀` of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldReport {
    /// Tower of the subfield `E₀` generated by `u(L₀)` and `v(M)`.
    pub subfield: String,
    pub restricted_maximal: bool,
    pub holds: bool,
}

/// For `K ⊂ L₀ ⊂ L` (prefixes), the subfield of `E` generated by `u(L₀)`
/// and `M` is again a maximal composed extension when `E` is.
pub fn subfield_maximality_check(k: &Field, l0: &Field, l: &Field, m: &Field, pt: &CompositumPoint) -> Result<SubfieldReport> {
    if !(k.is_prefix_of(l0) && l0.is_prefix_of(l)) {
        return structural("expected K ⊂ L0 ⊂ L as subtowers");
    }
    let steps = l0.depth() - k.depth();
    let e0 = if steps == 0 { m.clone() } else { pt.field.ancestor(pt.depths[steps - 1]) };
    let u0 = pt.u.restrict(l0)?;
    let mut mult0 = 1;
    for s in &pt.path[..steps] {
        if let PathStep::Algebraic { multiplicity, .. } = s {
            mult0 *= multiplicity;
        }
    }
    // The restricted embedding must land in E₀.
    for img in u0.images() {
        if pt.field.descend_to(&e0, img).is_none() {
            return structural("restricted embedding leaves the generated subfield");
        }
    }
    let flags = classify(k, l0, m, &e0, mult0);
    Ok(SubfieldReport { subfield: e0.short_name(), restricted_maximal: flags.maximal, holds: !pt.maximal || flags.maximal })
}

/// Outcome of comparing maximality over `K₀ ⊂ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChangeReport {
    pub maximal_over_k: bool,
    pub maximal_over_k0: bool,
    /// `K` is algebraic over `K₀`.
    pub algebraic: bool,
    pub holds: bool,
}

/// The composed extension `(E, u, v)` of `L` and `M` over `K` is also one
/// over `K₀`; maximality over `K` and over `K₀` agree when `K/K₀` is
/// algebraic, and maximality over `K₀` implies it over `K` in general.
pub fn base_change_maximality_check(k0: &Field, k: &Field, l: &Field, m: &Field, pt: &CompositumPoint) -> Result<BaseChangeReport> {
    if !k0.is_prefix_of(k) {
        return structural("K0 must be a subtower of K");
    }
    let algebraic = k.degree_over(k0)?.is_some();
    let over_k = classify(k, l, m, &pt.field, pt.multiplicity).maximal;
    let over_k0 = classify(k0, l, m, &pt.field, pt.multiplicity).maximal;
    let holds = (!over_k0 || over_k) && (!algebraic || over_k == over_k0);
    Ok(BaseChangeReport { maximal_over_k: over_k, maximal_over_k0: over_k0, algebraic, holds })
}

/// A composed extension of `L = K(x)` and `M = K(m)` over `K = F_p(a)`,
/// where `m` plays the role of `x + a^{1/p}`: `E = M(r)` with `r^p = a`, and
/// `u(x) = m - r`.
#[derive(Clone, Debug)]
pub struct InseparableWitness {
    pub k: Field,
    pub l: Field,
    pub m: Field,
    pub e: Field,
    pub u: FieldHom,
    pub v: FieldHom,
    /// `K(a^{1/p})(x)` and mutually inverse isomorphisms with `E`.
    pub e_model: Field,
    pub to_model: FieldHom,
    pub from_model: FieldHom,
}

impl InseparableWitness {
    pub fn new(p: u64) -> Result<InseparableWitness> {
        let fp = Field::prime(p)?;
        let k = fp.transcendental("a")?;
        let l = k.transcendental("x")?;
        let m = k.transcendental("m")?;
        let root_poly = |f: &Field| -> UPoly {
            let mut c = vec![f.zero(); p as usize + 1];
            c[0] = f.neg(&f.gen_by_name("a").unwrap());
            c[p as usize] = f.one();
            UPoly::from_coeffs(c)
        };
        let e = m.algebraic("r", &root_poly(&m))?;
        let g = |f: &Field, n: &str| f.gen_by_name(n).unwrap();
        let u = FieldHom::new(&l, &e, vec![g(&e, "a"), e.sub(&g(&e, "m"), &g(&e, "r"))])?;
        let v = FieldHom::inclusion(&m, &e)?;
        let ks = k.algebraic("s", &root_poly(&k))?;
        let e_model = ks.transcendental("x")?;
        let to_model = FieldHom::new(&e, &e_model, vec![g(&e_model, "a"), e_model.add(&g(&e_model, "x"), &g(&e_model, "s")), g(&e_model, "s")])?;
        let from_model = FieldHom::new(&e_model, &e, vec![g(&e, "a"), g(&e, "r"), e.sub(&g(&e, "m"), &g(&e, "r"))])?;
        Ok(InseparableWitness { k, l, m, e, u, v, e_model, to_model, from_model })
    }

    /// `[E:M]`.
    pub fn degree(&self) -> Result<Option<usize>> {
        self.e.degree_over(&self.m)
    }

    pub fn flags(&self) -> PointFlags {
        classify(&self.k, &self.l, &self.m, &self.e, 1)
    }
}

#[cfg(test)]
mod tests;
