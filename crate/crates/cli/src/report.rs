//! Text reports for `decompose` and `extend`.

use std::fmt::Write;

use valring::compositum::{degree_sum, tensor_decompose_over, CompositumPoint};
use valring::extension::{build, spec_correspondence, verify_weakly_unramified, ExtensionScenario};
use valring::{Field, Result};

use crate::scenario::Towers;

/// Samples drawn by `extend --verify`.
pub const VERIFY_SAMPLES: usize = 50;

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map(yes).unwrap_or("n/a")
}

pub fn point_lines(out: &mut String, i: usize, pt: &CompositumPoint) {
    let _ = writeln!(out, "POINT {i}");
    let _ = writeln!(out, "  field: {}", pt.field.description());
    let _ = writeln!(out, "  multiplicity: {}", pt.multiplicity);
    let _ = writeln!(out, "  maximal: {}", yes(pt.maximal));
    let _ = writeln!(out, "  strictly-maximal: {}", yes(pt.strictly_maximal));
    for line in pt.u.describe() {
        let _ = writeln!(out, "  image: {line}");
    }
}

/// All points of `k' ⊗_k F`.
pub fn decompose_report(t: &Towers) -> Result<String> {
    let pts = tensor_decompose_over(&t.k, &t.kprime, &t.f)?;
    let mut out = String::new();
    let _ = writeln!(out, "DECOMPOSE");
    let _ = writeln!(out, "  K: {}", t.k.description());
    let _ = writeln!(out, "  L: {}", t.kprime.description());
    let _ = writeln!(out, "  M: {}", t.f.description());
    let _ = writeln!(out, "  points: {}", pts.len());
    if t.kprime.trdeg() == t.k.trdeg() {
        let (sum, total) = degree_sum(&t.k, &t.kprime, &t.f, &pts)?;
        let _ = writeln!(out, "  degree-sum: {sum} of {total}");
    }
    for (i, pt) in pts.iter().enumerate() {
        point_lines(&mut out, i, pt);
    }
    Ok(out)
}

fn chain_names(f: &Field) -> String {
    f.short_name()
}

/// Full report of the construction; `verify` adds the sampled checks.
pub fn extend_report(scn: &ExtensionScenario, verify: bool, seed: u64) -> Result<String> {
    let built = build(scn)?;
    let mut out = String::new();
    let _ = writeln!(out, "GROUP");
    let _ = writeln!(out, "  gamma: {}", built.gamma());
    let _ = writeln!(out, "  delta: {}", built.delta());
    let _ = writeln!(out, "  equal: {}", yes(built.gamma() == built.delta()));
    let _ = writeln!(out, "RESIDUE");
    let _ = writeln!(out, "  F: {}", built.base.coeff_field().description());
    let _ = writeln!(out, "  F1: {}", built.residue_field().description());
    let _ = writeln!(out, "  point: {} of {}", scn.point_index, built.point_count);
    for line in built.kprime_embedding.describe() {
        let _ = writeln!(out, "  kprime: {line}");
    }
    let _ = writeln!(out, "SPEC");
    let chain_v = built.base.prime_chain()?;
    let chain_w = built.w.prime_chain()?;
    let _ = writeln!(out, "  primes: {} <-> {}", chain_v.len(), chain_w.len());
    for (a, b) in chain_v.iter().zip(&chain_w) {
        let _ = writeln!(out, "  prime {}: {} -> {}", a.index, chain_names(&a.residue_field), chain_names(&b.residue_field));
    }
    if verify {
        let spec = spec_correspondence(&built, scn, VERIFY_SAMPLES, seed)?;
        for p in &spec.pairs {
            let _ = writeln!(
                out,
                "  check {}: contraction {}, strictly-maximal {}, separable-over-residue {}, separable-over-kprime {}",
                p.index,
                yes(p.contraction),
                yes(p.strictly_maximal),
                opt(p.separable_over_residue),
                opt(p.separable_over_kprime)
            );
        }
        let _ = writeln!(out, "  bijection: {}", yes(spec.bijection()));
    }
    let _ = writeln!(out, "FLAGS");
    let _ = writeln!(out, "  strictly-maximal: {}", yes(built.point.strictly_maximal));
    let _ = writeln!(out, "  truncation: {}", built.truncation.map(|n| n.to_string()).unwrap_or_else(|| "none".into()));
    let _ = writeln!(out, "  p-torsion: {}", opt(built.p_torsion));
    let _ = writeln!(out, "  radicial: {}", opt(built.radicial));
    if verify {
        let rep = verify_weakly_unramified(&built, VERIFY_SAMPLES, seed)?;
        let _ = writeln!(out, "  weakly-unramified: {}", yes(rep.weakly_unramified()));
        let _ = writeln!(out, "  weakly-unramified-over-construction-base: {}", yes(rep.over_construction_base));
        let _ = writeln!(out, "  dominates: {}", yes(rep.dominates));
        let _ = writeln!(out, "  values-in-group: {}", yes(rep.values_in_group));
        let _ = writeln!(out, "  max-ideal-extended: {}", yes(rep.max_ideal_generated));
        if let Some(w) = &rep.witness {
            let _ = writeln!(out, "  witness: {w}");
        }
        let _ = writeln!(out, "  samples: {} (seed {seed})", rep.samples);
    }
    let _ = writeln!(out, "PROVENANCE");
    for line in &built.provenance {
        let _ = writeln!(out, "  {line}");
    }
    Ok(out)
}
