//! Construction of a valuation ring `W` dominating `V` and containing an
//! extension `k'` of a subfield `k ⊂ V`.
//!
//! When the chosen point of `k' ⊗_k F` is strictly maximal, `W` is obtained
//! by walking up the tower of `k'` and applying the Gauss extension at every
//! step; the value group does not change. Otherwise `p^N`-th roots of the
//! variables and of the residue field generators are adjoined first, and the
//! same walk is made over the enlarged ring.

use crate::compositum::{tensor_decompose, tensor_decompose_over, CompositumPoint, PathStep};
use crate::error::{capability, precondition, structural, Error, Result};
use crate::field::{tower_ops::DEFAULT_RADICIAL_BOUND, Elem, Field, FieldHom};
use crate::norms::{gauss_extend, FreeAlgebra};
use crate::poly::factor;
use crate::sample::Sampler;
use crate::valuation::hensel::{default_precision, hensel_factor_lift, HenselOutcome};
use crate::valuation::MonomialValuation;
use crate::value_group::ValueGroup;

/// Input of the construction: `k ⊂ F` as subtowers, the valuation `V` on
/// `F(x_1..x_n)` and the extension `k'` of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionScenario {
    pub k: Field,
    pub val: MonomialValuation,
    pub kprime: Field,
    pub truncation: Option<u32>,
    pub point_index: usize,
}

impl ExtensionScenario {
    pub fn new(k: &Field, val: &MonomialValuation, kprime: &Field) -> Result<ExtensionScenario> {
        let f = val.coeff_field();
        if !k.is_prefix_of(f) {
            return structural(format!("{} is not a subtower of the residue field {}", k.short_name(), f.short_name()));
        }
        if !k.is_prefix_of(kprime) {
            return structural(format!("{} is not a subtower of {}", k.short_name(), kprime.short_name()));
        }
        for name in kprime.gen_names().iter().skip(k.depth()) {
            if val.vars().contains(name) {
                return structural(format!("generator {name} of k' clashes with a valuation variable"));
            }
        }
        Ok(ExtensionScenario { k: k.clone(), val: val.clone(), kprime: kprime.clone(), truncation: None, point_index: 0 })
    }

    pub fn with_truncation(mut self, n: Option<u32>) -> ExtensionScenario {
        self.truncation = n;
        self
    }

    pub fn with_point(mut self, i: usize) -> ExtensionScenario {
        self.point_index = i;
        self
    }

    pub fn characteristic(&self) -> u64 {
        self.k.characteristic()
    }
}

/// The constructed valuation with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct BuiltExtension {
    /// The valuation `W` on `F₁(x_1..x_n)`, variables possibly replaced by
    /// `p^N`-th roots.
    pub w: MonomialValuation,
    /// The original `V`.
    pub base: MonomialValuation,
    /// `K → Frac(W)`.
    pub embedding: FieldHom,
    /// The ring `W` was built on: `V`, or `V` with `p^N`-th roots adjoined.
    pub construction_base: MonomialValuation,
    pub construction_embedding: FieldHom,
    /// `k → F`, or `k† → F†` on the general path.
    pub construction_k: FieldHom,
    /// `k'`, or `k''` on the general path.
    pub construction_kprime: Field,
    /// `k' → Frac(W)`.
    pub kprime_embedding: FieldHom,
    /// The point of the decomposition used for the residue field.
    pub point: CompositumPoint,
    pub point_count: usize,
    pub point_index: usize,
    /// `Some(N)` when roots were adjoined.
    pub truncation: Option<u32>,
    /// `Δ/Γ` is `p`-torsion (general path only).
    pub p_torsion: Option<bool>,
    /// `F₁` is radicial over the compositum of `F` and `k'` (general path
    /// only; `None` when the check is out of reach).
    pub radicial: Option<bool>,
    pub provenance: Vec<String>,
}

impl BuiltExtension {
    pub fn delta(&self) -> &ValueGroup {
        self.w.group()
    }

    pub fn gamma(&self) -> &ValueGroup {
        self.base.group()
    }

    pub fn residue_field(&self) -> &Field {
        self.w.coeff_field()
    }
}

struct Walk {
    w: MonomialValuation,
    point: CompositumPoint,
    point_count: usize,
    log: Vec<String>,
}

fn point_summary(pts: &[CompositumPoint]) -> String {
    pts.iter()
        .enumerate()
        .map(|(i, p)| format!("#{i} {} (multiplicity {})", p.field.short_name(), p.multiplicity))
        .collect::<Vec<_>>()
        .join("; ")
}

/// The walk over `k'` for a strictly maximal point of `k' ⊗_k F`, where
/// `k_to_f: k → F` and `val` is a valuation over `F`.
fn walk(k: &Field, val: &MonomialValuation, k_to_f: &FieldHom, kprime: &Field, index: usize) -> Result<Walk> {
    let f = val.coeff_field();
    let pts = tensor_decompose(k, kprime, f, k_to_f)?;
    let mut log = vec![format!("decompose: {} point(s): {}", pts.len(), point_summary(&pts))];
    let Some(pt) = pts.get(index).cloned() else {
        return structural(format!("point index {index} out of range: {} point(s)", pts.len()));
    };
    if !pt.strictly_maximal {
        let offending = pt
            .path
            .iter()
            .find_map(|s| match s {
                PathStep::Algebraic { factor, multiplicity, .. } if *multiplicity > 1 => Some(format!("({factor})^{multiplicity}")),
                _ => None,
            })
            .unwrap_or_default();
        return precondition(format!(
            "point #{index} is not strictly maximal: multiplicity {} from factor {offending}; use the general construction with a truncation exponent",
            pt.multiplicity
        ));
    }
    log.push(format!("chosen point: #{index} {}", pt.field.short_name()));
    let mut cur = val.clone();
    let levels = kprime.levels();
    for (j, step) in pt.path.iter().enumerate() {
        let e_level = pt.field.ancestor(pt.depths[j]);
        match step {
            PathStep::Transcendental { name, image_name } => {
                let a = FreeAlgebra::polynomial(&cur, &[image_name])?;
                let g = gauss_extend(&a)?;
                cur = g.realization().expect("polynomial algebras are realized").0.clone();
                log.push(format!("step {name}: transcendental; Gauss extension on V[{image_name}]; residue field {}", cur.coeff_field().short_name()));
            }
            PathStep::Algebraic { name, factor: text, factor_index, image_name, .. } => {
                if cur.rank() == 1 && cur.scale() == 1 {
                    hensel_note(&cur, &pt, &levels[k.depth() + j + 1], &mut log)?;
                }
                match image_name {
                    None => {
                        log.push(format!("step {name}: root of linear factor {text} (#{factor_index}) lies in the residue field"));
                    }
                    Some(image) => {
                        let g = e_level.step().unwrap().minpoly().unwrap().clone();
                        let lifted = g.map(|c| cur.lift_residue(c));
                        let a = FreeAlgebra::quotient(&cur, image, &lifted)?;
                        let gv = gauss_extend(&a)?;
                        let (w, _) = gv.realization().ok_or_else(|| Error::Capability("Gauss extension without a monomial realization".into()))?;
                        cur = w.clone();
                        log.push(format!(
                            "step {name}: algebraic; factor {text} (#{factor_index}); Gauss extension on V[{image}]/({}); residue field {}",
                            e_level.parent().unwrap().fmt_poly(&g, image),
                            cur.coeff_field().short_name()
                        ));
                    }
                }
            }
        }
    }
    if cur.coeff_field() != &pt.field {
        return structural("the residue field of the walk differs from the composed extension");
    }
    Ok(Walk { w: cur, point: pt, point_count: pts.len(), log })
}

/// In rank 1, records the Hensel lift of the residual factorization of a
/// step's minimal polynomial when it splits.
fn hensel_note(cur: &MonomialValuation, pt: &CompositumPoint, level: &Field, log: &mut Vec<String>) -> Result<()> {
    let f_cur = cur.coeff_field();
    let below = level.parent().unwrap();
    let images: Vec<Elem> = pt.u.restrict(below)?.images().iter().map(|e| pt.field.descend_to(f_cur, e)).collect::<Option<_>>().ok_or_else(|| Error::Structural("generator image above the current level".into()))?;
    let h = FieldHom::new_unchecked(below, f_cur, images);
    let mapped = level.step().unwrap().minpoly().unwrap().try_map(|c| h.apply(c))?;
    let fac = factor::factor(f_cur, &mapped)?;
    if fac.factors.len() < 2 || fac.factors.iter().any(|(_, m)| *m > 1) {
        return Ok(());
    }
    let lifted = mapped.map(|c| cur.lift_residue(c));
    let prec = default_precision(&lifted);
    match hensel_factor_lift(cur, &lifted, prec)? {
        HenselOutcome::Lifted { factors, precision } => {
            log.push(format!(
                "hensel: {} lifted to {} factor(s) modulo x^{precision}",
                f_cur.fmt_poly(&mapped, crate::field::POLY_VAR),
                factors.len()
            ));
            Ok(())
        }
        HenselOutcome::Refused { reason } => capability(format!("Hensel lifting refused: {reason}")),
    }
}

/// `K → Frac(W)` sending `x_i` to `x̃_i^{p^N}` (`N = 0`: to `x_i`).
fn base_embedding(base: &MonomialValuation, w: &MonomialValuation, power: u64) -> Result<FieldHom> {
    let dst = w.field();
    let f = base.coeff_field();
    let mut images: Vec<Elem> = f.levels().iter().skip(1).map(|l| dst.lift_from(l, &l.gen().unwrap())).collect();
    for i in 0..base.rank() {
        images.push(dst.pow_u(&w.var(i), power));
    }
    FieldHom::new(base.field(), dst, images)
}

/// Extends an embedding into `F₁` to `F₁(x_1..x_n)`.
fn lift_hom(h: &FieldHom, w: &MonomialValuation) -> Result<FieldHom> {
    let images = h.images().iter().map(|e| w.field().lift_from(w.coeff_field(), e)).collect();
    FieldHom::new(h.src(), w.field(), images)
}

/// The construction for a strictly maximal point (chosen by
/// `scn.point_index`); the value group of `W` equals that of `V`.
pub fn build_strictly_maximal(scn: &ExtensionScenario) -> Result<BuiltExtension> {
    let f = scn.val.coeff_field();
    let walk = walk(&scn.k, &scn.val, &FieldHom::inclusion(&scn.k, f)?, &scn.kprime, scn.point_index)?;
    let embedding = base_embedding(&scn.val, &walk.w, 1)?;
    let kprime_embedding = lift_hom(&walk.point.u, &walk.w)?;
    Ok(BuiltExtension {
        w: walk.w,
        base: scn.val.clone(),
        construction_base: scn.val.clone(),
        construction_embedding: embedding.clone(),
        construction_k: FieldHom::inclusion(&scn.k, f)?,
        construction_kprime: scn.kprime.clone(),
        embedding,
        kprime_embedding,
        point: walk.point,
        point_count: walk.point_count,
        point_index: scn.point_index,
        truncation: None,
        p_torsion: None,
        radicial: None,
        provenance: walk.log,
    })
}

/// The construction after adjoining `p^N`-th roots; `N = 0` and
/// characteristic 0 reduce to [`build_strictly_maximal`].
pub fn build_general(scn: &ExtensionScenario, n: u32) -> Result<BuiltExtension> {
    let p = scn.characteristic();
    if p == 0 || n == 0 {
        return build_strictly_maximal(scn);
    }
    let val = &scn.val;
    let f = val.coeff_field();
    let f_closure = f.perfect_closure_truncated(p, n)?;
    let k_closure = scn.k.perfect_closure_truncated(p, n)?;
    let k_to_fc = f_closure.embed(&k_closure, &FieldHom::inclusion(&scn.k, f)?)?;
    let mut log = vec![
        format!("truncation: N = {n}"),
        format!("residue roots adjoined: {}", if f_closure.adjoined.is_empty() { "none".to_string() } else { f_closure.adjoined.join(", ") }),
        format!("base roots adjoined: {}", if k_closure.adjoined.is_empty() { "none".to_string() } else { k_closure.adjoined.join(", ") }),
    ];
    let root_vars: Vec<String> = val.vars().iter().map(|x| format!("{x}_r{n}")).collect();
    let root_refs: Vec<&str> = root_vars.iter().map(String::as_str).collect();
    let val_root = MonomialValuation::with_scale(&f_closure.field, &root_refs, p, n)?;
    log.push(format!("variable roots: {} with group {}", root_vars.join(", "), val_root.group()));

    let kk = &k_closure.field;
    let pts = tensor_decompose_over(&scn.k, &scn.kprime, kk)?;
    if pts.len() != 1 {
        return structural(format!("expected a unique composed extension over the radicial closure, found {}", pts.len()));
    }
    let kpp = pts[0].clone();
    log.push(format!("k'': {} (multiplicity {})", kpp.field.short_name(), kpp.multiplicity));

    let walk = match walk(kk, &val_root, &k_to_fc, &kpp.field, scn.point_index) {
        Err(Error::Precondition(msg)) => {
            return precondition(format!("after truncation N = {n} the point is still not strictly maximal ({msg}); increase N"))
        }
        other => other?,
    };
    log.extend(walk.log);
    let power = p.pow(n);
    let embedding = base_embedding(val, &walk.w, power)?;
    let construction_embedding = base_embedding(&val_root, &walk.w, 1)?;
    let kprime_embedding = lift_hom(&kpp.u.then(&walk.point.u)?, &walk.w)?;
    let p_torsion = ValueGroup::is_p_torsion_quotient(val.group(), walk.w.group(), p)?;
    let f1 = walk.w.coeff_field();
    let extra: Vec<Elem> = kpp.u.then(&walk.point.u)?.images().to_vec();
    let radicial = match f1.is_radicial_over_generated(f, &extra, p, DEFAULT_RADICIAL_BOUND) {
        Ok(b) => Some(b),
        Err(Error::Capability(_)) | Err(Error::Structural(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(BuiltExtension {
        w: walk.w,
        base: val.clone(),
        embedding,
        construction_base: val_root,
        construction_embedding,
        construction_k: k_to_fc,
        construction_kprime: kpp.field.clone(),
        kprime_embedding,
        point: walk.point,
        point_count: walk.point_count,
        point_index: scn.point_index,
        truncation: Some(n),
        p_torsion: Some(p_torsion),
        radicial,
        provenance: log,
    })
}

/// Dispatches on the scenario's truncation exponent.
pub fn build(scn: &ExtensionScenario) -> Result<BuiltExtension> {
    match scn.truncation {
        None => build_strictly_maximal(scn),
        Some(n) => build_general(scn, n),
    }
}

/// Outcome of [`verify_weakly_unramified`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedReport {
    pub gamma: String,
    pub delta: String,
    /// `Δ = Γ` as groups.
    pub group_equal: bool,
    /// Sampled values of `W` lie in `Δ`.
    pub values_in_group: bool,
    /// Sampled elements of `K` keep their value in `W`.
    pub dominates: bool,
    /// Sampled elements of the maximal ideal of `W` lie in `𝔪W`.
    pub max_ideal_generated: bool,
    /// First element of the maximal ideal of `W` outside `𝔪W`.
    pub witness: Option<String>,
    /// Weakly unramified over the ring `W` was built on: `V` itself, or the
    /// ring obtained by adjoining roots.
    pub over_construction_base: bool,
    pub samples: usize,
}

impl UnramifiedReport {
    pub fn weakly_unramified(&self) -> bool {
        self.group_equal && self.values_in_group && self.dominates && self.max_ideal_generated
    }
}

struct Audit {
    group_equal: bool,
    values_in_group: bool,
    dominates: bool,
    max_ideal_generated: bool,
    witness: Option<String>,
}

impl Audit {
    fn ok(&self) -> bool {
        self.group_equal && self.values_in_group && self.dominates && self.max_ideal_generated
    }
}

/// `W` over `V` along `emb: Frac(V) → Frac(W)`. The maximal ideal of `V` is
/// generated by `x_n`, so `𝔪W = x_n W` and `z ∈ 𝔪W ⟺ z / x_n ∈ W`.
fn audit(w: &MonomialValuation, v: &MonomialValuation, emb: &FieldHom, samples: usize, seed: u64) -> Result<Audit> {
    let mut s = Sampler::new(seed);
    let mut values_in_group = true;
    let mut dominates = true;
    let mut max_ideal_generated = true;
    let mut witness = None;
    let xn = emb.apply(&v.var(v.rank() - 1))?;
    let mut candidates = vec![w.var(w.rank() - 1)];
    for _ in 0..samples {
        let z = s.valued(w);
        values_in_group &= w.group().contains_value(&w.value(&z));
        let y = s.valued(v);
        dominates &= w.value(&emb.apply(&y)?) == v.value(&y);
        candidates.push(z);
    }
    for z in candidates.iter().filter(|z| w.in_max_ideal(z)) {
        if !w.in_ring(&w.field().div(z, &xn)?) && max_ideal_generated {
            max_ideal_generated = false;
            witness = Some(format!("{} (value {})", w.field().fmt_elem(z), w.value(z)));
        }
    }
    Ok(Audit { group_equal: w.group() == v.group(), values_in_group, dominates, max_ideal_generated, witness })
}

/// Sampled check that `W` is weakly unramified over `V`: same value group,
/// `W` dominates `V`, and `𝔪_V W` is the maximal ideal of `W`.
pub fn verify_weakly_unramified(built: &BuiltExtension, samples: usize, seed: u64) -> Result<UnramifiedReport> {
    let (w, v) = (&built.w, &built.base);
    let main = audit(w, v, &built.embedding, samples, seed)?;
    let over_construction_base = if built.truncation.is_some() {
        audit(w, &built.construction_base, &built.construction_embedding, samples, seed)?.ok()
    } else {
        main.ok()
    };
    Ok(UnramifiedReport {
        gamma: v.group().to_string(),
        delta: w.group().to_string(),
        group_equal: main.group_equal,
        values_in_group: main.values_in_group,
        dominates: main.dominates,
        max_ideal_generated: main.max_ideal_generated,
        witness: main.witness,
        over_construction_base,
        samples,
    })
}

/// One pair of corresponding primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePair {
    pub index: usize,
    /// `κ(𝔮)` and `κ(𝔮W)`.
    pub residue: String,
    pub residue_w: String,
    /// Membership in the prime is preserved by contraction on samples.
    pub contraction: bool,
    /// `κ(𝔮W)` is a strictly maximal composed extension of `k'` and `κ(𝔮)`
    /// (certified by mutually inverse isomorphisms with a decomposition
    /// point). On the general path `k''` and the root-adjoined base replace
    /// `k'` and `V`.
    pub strictly_maximal: bool,
    /// `κ(𝔮W)/κ(𝔮)` separable, checked when `k'/k` is separable.
    pub separable_over_residue: Option<bool>,
    /// `κ(𝔮W)/k'` separable, checked when `F/k` is separable.
    pub separable_over_kprime: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecReport {
    pub primes_v: usize,
    pub primes_w: usize,
    pub pairs: Vec<PrimePair>,
}

impl SpecReport {
    pub fn bijection(&self) -> bool {
        self.primes_v == self.primes_w && self.pairs.iter().all(|p| p.contraction)
    }

    pub fn all_strict(&self) -> bool {
        self.pairs.iter().all(|p| p.strictly_maximal)
    }

    pub fn all_separable(&self) -> bool {
        self.pairs.iter().all(|p| p.separable_over_residue != Some(false) && p.separable_over_kprime != Some(false))
    }
}

/// Homomorphism between towers sharing generator names.
fn by_names(src: &Field, dst: &Field) -> Result<FieldHom> {
    let images = src
        .gen_names()
        .iter()
        .map(|n| dst.gen_by_name(n).ok_or_else(|| Error::Structural(format!("generator {n} missing"))))
        .collect::<Result<_>>()?;
    FieldHom::new(src, dst, images)
}

/// Prime correspondence between `V` and `W` with the residue field checks.
pub fn spec_correspondence(built: &BuiltExtension, scn: &ExtensionScenario, samples: usize, seed: u64) -> Result<SpecReport> {
    let (v, w) = (&built.base, &built.w);
    let chain_v = v.prime_chain()?;
    let chain_w = w.prime_chain()?;
    let chain_c = built.construction_base.prime_chain()?;
    let mut s = Sampler::new(seed);
    let zs: Vec<Elem> = (0..samples).map(|_| s.integral(v)).collect();
    let kprime_separable = built.construction_kprime.is_separable_over(built.construction_k.src())?;
    let f_separable = v.coeff_field().is_separable_over(&scn.k)?;
    let over_kprime = if f_separable && built.truncation.is_none() { Some(separable_over_kprime(built, scn)?) } else { None };
    let mut pairs = Vec::new();
    for (pv, pw) in chain_v.iter().zip(&chain_w) {
        let i = pv.index;
        let mut contraction = true;
        for z in &zs {
            let iz = built.embedding.apply(z)?;
            contraction &= v.in_prime(z, i) == w.in_prime(&iz, i) && v.in_localization(z, i) == w.in_localization(&iz, i);
        }
        // Residue fields of the base W was built on; equal to `pv` on the
        // strict path.
        let kappa = &chain_c[i].residue_field;
        let k_hom = FieldHom::new(
            built.construction_k.src(),
            kappa,
            built.construction_k.images().iter().map(|e| kappa.lift_from(built.construction_k.dst(), e)).collect(),
        )?;
        let pts = tensor_decompose(built.construction_k.src(), &built.construction_kprime, kappa, &k_hom)?;
        let pt = pts.get(built.point_index).ok_or_else(|| Error::Structural("point index out of range at a prime".into()))?;
        let iso = by_names(&pt.field, &pw.residue_field)?.is_inverse_of(&by_names(&pw.residue_field, &pt.field)?)?;
        let strictly_maximal = iso && pt.strictly_maximal;
        let separable_over_residue = if kprime_separable { Some(pt.field.is_separable_over(kappa)?) } else { None };
        pairs.push(PrimePair {
            index: i,
            residue: pv.residue_field.short_name(),
            residue_w: pw.residue_field.short_name(),
            contraction,
            strictly_maximal,
            separable_over_residue,
            separable_over_kprime: over_kprime,
        });
    }
    Ok(SpecReport { primes_v: chain_v.len(), primes_w: chain_w.len(), pairs })
}

/// `F₁` presented as a tower over `k'` (a point of `F ⊗_k k'`), certified
/// isomorphic to `F₁`; separability of that tower over `k'`.
fn separable_over_kprime(built: &BuiltExtension, scn: &ExtensionScenario) -> Result<bool> {
    let f = built.base.coeff_field();
    let f1 = built.residue_field();
    let pts = tensor_decompose_over(&scn.k, f, &scn.kprime)?;
    for pt in pts {
        // E = k'(F-steps) → F₁: k' via the built point, F-steps to F.
        let u_kprime = &built.point.u;
        let mut images: Vec<Elem> = u_kprime.images().to_vec();
        let f_gens = f.gens();
        let extra: Vec<Elem> = pt.field.gen_names().into_iter().skip(scn.kprime.depth()).map(|n| {
            let orig = pt.path.iter().find_map(|s| match s {
                PathStep::Transcendental { name, image_name } if *image_name == n => Some(name.clone()),
                PathStep::Algebraic { name, image_name: Some(i), .. } if *i == n => Some(name.clone()),
                _ => None,
            });
            let orig = orig.unwrap_or(n);
            let g = f_gens.iter().find(|(m, _)| *m == orig).map(|(_, g)| g.clone()).expect("generator of F");
            f1.lift_from(f, &g)
        }).collect();
        images.extend(extra);
        let Ok(there) = FieldHom::new(&pt.field, f1, images) else { continue };
        // F₁ → E: F through the point's u, the new generators of F₁ through k'.
        let mut back: Vec<Elem> = pt.u.images().to_vec();
        let kprime_in_e = FieldHom::inclusion(&scn.kprime, &pt.field)?;
        for step in &built.point.path {
            let (name, image) = match step {
                PathStep::Transcendental { name, image_name } => (name, Some(image_name)),
                PathStep::Algebraic { name, image_name, .. } => (name, image_name.as_ref()),
            };
            if image.is_some() {
                let g = scn.kprime.gen_by_name(name).unwrap();
                back.push(kprime_in_e.apply(&g)?);
            }
        }
        let Ok(back) = FieldHom::new(f1, &pt.field, back) else { continue };
        if there.is_inverse_of(&back)? {
            return pt.field.is_separable_over(&scn.kprime);
        }
    }
    structural("no point of F ⊗ k' matches the residue field")
}
