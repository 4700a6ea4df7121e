use std::collections::BTreeSet;

use super::{Elem, Field, StepKind};
use crate::error::{structural, Error, Result};
use crate::poly;

/// A field embedding given by the images of the tower generators of `src`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldHom {
    src: Field,
    dst: Field,
    images: Vec<Elem>,
}

impl FieldHom {
    /// Checked construction.
    ///
    /// Algebraic generators must map to roots of the mapped minimal
    /// polynomial. A transcendental generator must map to an element whose
    /// support contains a transcendental generator of `dst` not already used
    /// by the images of the generators below it.
    pub fn new(src: &Field, dst: &Field, images: Vec<Elem>) -> Result<FieldHom> {
        if src.characteristic() != dst.characteristic() {
            return structural(format!("no embedding of {src} into {dst}: characteristics differ"));
        }
        if images.len() != src.depth() {
            return structural(format!(
                "expected {} generator images for {src}, got {}",
                src.depth(),
                images.len()
            ));
        }
        let hom = FieldHom { src: src.clone(), dst: dst.clone(), images };
        let mut used = BTreeSet::new();
        for level in src.levels().into_iter().skip(1) {
            let idx = level.depth() - 1;
            let image = &hom.images[idx];
            let parent = level.parent().unwrap();
            let step = level.step().unwrap();
            match &step.kind {
                StepKind::Algebraic { minpoly, .. } => {
                    let value = poly::eval_mapped(dst, minpoly, image, |c| hom.apply_at(parent, c))?;
                    if !value.is_zero() {
                        return structural(format!(
                            "image {} of `{}` is not a root of its minimal polynomial",
                            dst.fmt_elem(image),
                            step.name
                        ));
                    }
                }
                StepKind::Transcendental => {
                    let support = dst.transcendental_support(image);
                    if support.is_subset(&used) {
                        return structural(format!(
                            "image {} of transcendental `{}` is algebraic over the images below it",
                            dst.fmt_elem(image),
                            step.name
                        ));
                    }
                }
            }
            used.extend(dst.transcendental_support(image));
        }
        Ok(hom)
    }

    pub(crate) fn new_unchecked(src: &Field, dst: &Field, images: Vec<Elem>) -> FieldHom {
        FieldHom { src: src.clone(), dst: dst.clone(), images }
    }

    /// The inclusion of a subtower into a tower extending it.
    pub fn inclusion(sub: &Field, sup: &Field) -> Result<FieldHom> {
        if !sub.is_prefix_of(sup) {
            return structural(format!("{sub} is not a subtower of {sup}"));
        }
        let images = sub.levels().into_iter().skip(1).map(|l| sup.lift_from(&l, &l.gen().unwrap())).collect();
        Ok(FieldHom { src: sub.clone(), dst: sup.clone(), images })
    }

    pub fn identity(field: &Field) -> FieldHom {
        FieldHom::inclusion(field, field).expect("a field is a subtower of itself")
    }

    pub fn src(&self) -> &Field {
        &self.src
    }

    pub fn dst(&self) -> &Field {
        &self.dst
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn apply(&self, e: &Elem) -> Result<Elem> {
        self.apply_at(&self.src, e)
    }

    fn apply_at(&self, level: &Field, e: &Elem) -> Result<Elem> {
        match e {
            Elem::Rat(r) => self.dst.from_rational(r),
            Elem::Mod(x) => Ok(self.dst.from_i64(*x as i64)),
            Elem::Frac(n, d) => {
                let parent = level.parent().expect("extension level");
                let point = &self.images[level.depth() - 1];
                let num = poly::eval_mapped(&self.dst, n, point, |c| self.apply_at(parent, c))?;
                let den = poly::eval_mapped(&self.dst, d, point, |c| self.apply_at(parent, c))?;
                self.dst.div(&num, &den).map_err(|_| {
                    Error::Domain(format!("denominator {} maps to zero", level.fmt_elem(&level.lift_parent_poly(d))))
                })
            }
            Elem::Alg(p) => {
                let parent = level.parent().expect("extension level");
                let point = &self.images[level.depth() - 1];
                poly::eval_mapped(&self.dst, p, point, |c| self.apply_at(parent, c))
            }
        }
    }

    /// Restriction to a subtower of the source.
    pub fn restrict(&self, sub: &Field) -> Result<FieldHom> {
        if !sub.is_prefix_of(&self.src) {
            return structural(format!("{sub} is not a subtower of {}", self.src));
        }
        Ok(FieldHom { src: sub.clone(), dst: self.dst.clone(), images: self.images[..sub.depth()].to_vec() })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FieldHom) -> Result<FieldHom> {
        if self.dst != next.src {
            return structural("composition of non-matching embeddings");
        }
        let images = self.images.iter().map(|e| next.apply(e)).collect::<Result<_>>()?;
        Ok(FieldHom { src: self.src.clone(), dst: next.dst.clone(), images })
    }

    /// True when `self` and `other` are mutually inverse, certifying that
    /// both are isomorphisms.
    pub fn is_inverse_of(&self, other: &FieldHom) -> Result<bool> {
        if self.src != other.dst || self.dst != other.src {
            return Ok(false);
        }
        let there_and_back = self.then(other)?;
        let back_and_there = other.then(self)?;
        Ok(there_and_back == FieldHom::identity(&self.src) && back_and_there == FieldHom::identity(&self.dst))
    }

    /// Text table `name -> image`, one entry per generator.
    pub fn describe(&self) -> Vec<String> {
        self.src
            .gen_names()
            .iter()
            .zip(&self.images)
            .map(|(n, e)| format!("{n} -> {}", self.dst.fmt_elem(e)))
            .collect()
    }
}

impl Field {
    fn lift_parent_poly(&self, p: &poly::UPoly) -> Elem {
        match &self.step().unwrap().kind {
            StepKind::Transcendental => Elem::Frac(p.clone(), poly::UPoly::constant(self.parent().unwrap().one())),
            StepKind::Algebraic { .. } => self.reduce_alg(p.clone()),
        }
    }

    /// Depths of the transcendental generators an element depends on,
    /// including through the minimal polynomials of algebraic generators.
    pub fn transcendental_support(&self, e: &Elem) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let Some(parent) = self.parent() else { return out };
        let step = self.step().unwrap();
        let polys: Vec<&poly::UPoly> = match e {
            Elem::Frac(n, d) => vec![n, d],
            Elem::Alg(p) => vec![p],
            _ => vec![],
        };
        let mut uses_gen = false;
        for p in polys {
            uses_gen |= p.deg() > 0;
            for c in p.coeffs() {
                out.extend(parent.transcendental_support(c));
            }
        }
        if uses_gen {
            match &step.kind {
                StepKind::Transcendental => {
                    out.insert(self.depth());
                }
                StepKind::Algebraic { minpoly, .. } => {
                    for c in minpoly.coeffs() {
                        out.extend(parent.transcendental_support(c));
                    }
                }
            }
        }
        out
    }
}
