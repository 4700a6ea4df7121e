//! Golden corpus and seeded property suites run by `selftest`.

use std::cmp::Ordering;
use std::fmt::Write;

use rand::Rng;
use valring::compositum::{degree_sum, tensor_decompose_over, InseparableWitness};
use valring::norms::{check_algebra_norm, gauss_extend, is_reduced_lift};
use valring::poly::{self, factor};
use valring::valuation::hensel::{hensel_factor_lift, series_coefficients, HenselOutcome};
use valring::{Elem, Field, FreeAlgebra, FreeModule, MonomialValuation, Result, Sampler, UPoly, ValueGroup};

use crate::report::extend_report;
use crate::scenario::ScenarioFile;

/// Golden scenario files shipped with the binary.
pub const GOLDEN_SCENARIOS: &[(&str, &str)] = &[
    ("gaussian", include_str!("../scenarios/gaussian.scn")),
    ("identity", include_str!("../scenarios/identity.scn")),
    ("rank2_transcendental", include_str!("../scenarios/rank2_transcendental.scn")),
    ("rank2_sqrt2", include_str!("../scenarios/rank2_sqrt2.scn")),
    ("char2_roots", include_str!("../scenarios/char2_roots.scn")),
    ("split_residue", include_str!("../scenarios/split_residue.scn")),
];

/// Expected values, one `name = value` per line.
pub const CORPUS: &str = include_str!("../golden.txt");

/// Samples per randomized suite.
pub const RANDOM_SAMPLES: usize = 100;

fn tower(text: &str) -> Result<Field> {
    Field::parse_tower(text)
}

fn xadic(base: &str) -> Result<MonomialValuation> {
    MonomialValuation::new(&tower(&format!("base={base}"))?, &["x"])
}

/// Report of a golden scenario with the given line prefixes kept.
fn scenario_lines(name: &str, keep: &[&str]) -> Result<String> {
    let text = GOLDEN_SCENARIOS.iter().find(|(n, _)| *n == name).expect("known scenario").1;
    let (file, lines) = ScenarioFile::parse_with_lines(text).map_err(|e| e.error)?;
    let scn = file.extension(&lines, None, None).map_err(|e| e.error)?;
    let report = extend_report(&scn, true, file.seed())?;
    Ok(report
        .lines()
        .map(str::trim)
        .filter(|l| keep.iter().any(|k| l.starts_with(k)))
        .collect::<Vec<_>>()
        .join("; "))
}

type Golden = fn() -> Result<String>;

pub fn golden_cases() -> Vec<(&'static str, Golden)> {
    vec![
        ("gcd-f3", || {
            let k = tower("base=F3")?;
            let g = poly::gcd(&k, &k.parse_poly("y^3 + y")?, &k.parse_poly("y^2 + 1")?);
            Ok(k.fmt_poly(&g, "y"))
        }),
        ("factor-f5", || {
            let k = tower("base=F5")?;
            let f = factor(&k, &k.parse_poly("y^4 - 1")?)?;
            Ok(f.factors.iter().map(|(g, m)| format!("({})^{m}", k.fmt_poly(g, "y"))).collect::<Vec<_>>().join(" "))
        }),
        ("p-torsion-quotient", || {
            let sub = ValueGroup::new(1, 2, 0)?;
            let sup = ValueGroup::new(1, 2, 1)?;
            Ok(format!("{} in {}: {}", sub, sup, ValueGroup::is_p_torsion_quotient(&sub, &sup, 2)?))
        }),
        ("module-norm", || {
            let v = xadic("F3")?;
            let e = FreeModule::new(&v, 2);
            Ok(e.norm(&[v.field().parse_elem("x^2")?, v.field().parse_elem("x^-1")?]).to_string())
        }),
        ("reduced-gaussian", || {
            let v = xadic("Q")?;
            let a = FreeAlgebra::quotient(&v, "w", &v.field().parse_poly("y^2 + 1")?)?;
            Ok(format!("reduced {}", is_reduced_lift(&a)?.reduced))
        }),
        ("reduced-radicial", || {
            let f = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a")?;
            let v = MonomialValuation::new(&f, &["x"])?;
            let a = FreeAlgebra::quotient(&v, "w", &v.field().parse_poly("y^2 - a")?)?;
            let c = is_reduced_lift(&a)?;
            Ok(format!("reduced {}; witness {}", c.reduced, c.witness.unwrap_or_default()))
        }),
        ("gauss-residue", || {
            let v = xadic("F2")?;
            let g = gauss_extend(&FreeAlgebra::polynomial(&v, &["w"])?)?;
            let r = g.residue(&g.frac_field().parse_elem("(x*w + 1)/(w + 1)")?)?;
            Ok(format!("{}; {}", g.residue_field().short_name(), g.residue_field().fmt_elem(&r)))
        }),
        ("inseparable-compositum", || {
            let w = InseparableWitness::new(2)?;
            Ok(format!(
                "L/K separable {}; E/M separable {}; [E:M] {}",
                w.l.is_separable_over(&w.k)?,
                w.e.is_separable_over(&w.m)?,
                w.degree()?.map(|d| d.to_string()).unwrap_or_else(|| "inf".into())
            ))
        }),
        ("gaussian-pair", || {
            let l = tower("base=Q; gen i: algebraic y^2 + 1")?;
            let pts = tensor_decompose_over(&l.ancestor(0), &l, &l)?;
            let imgs: Vec<String> = pts.iter().map(|p| p.u.describe().join(",")).collect();
            Ok(format!("{} points: {}", pts.len(), imgs.join("; ")))
        }),
        ("radicial-point", || {
            let l = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a")?;
            let pts = tensor_decompose_over(&l.ancestor(1), &l, &l)?;
            Ok(format!("{} point, multiplicity {}, strict {}", pts.len(), pts[0].multiplicity, pts[0].strictly_maximal))
        }),
        ("hensel-f3", || {
            let v = xadic("F3")?;
            let f = v.field().parse_poly("y^2 - (1 + x)")?;
            let HenselOutcome::Lifted { factors, .. } = hensel_factor_lift(&v, &f, 4)? else {
                return Ok("refused".into());
            };
            let f3 = v.coeff_field();
            let consts: Vec<String> =
                series_coefficients(&v, &factors[0], 4)?.iter().map(|p| f3.fmt_elem(&p.coeff(f3, 0))).collect();
            Ok(consts.join(", "))
        }),
        ("extend-gaussian", || scenario_lines("gaussian", &["delta:", "F1:", "primes:", "bijection:", "weakly-unramified:"])),
        ("extend-identity", || scenario_lines("identity", &["delta:", "F1:", "weakly-unramified:"])),
        ("extend-rank2-transcendental", || scenario_lines("rank2_transcendental", &["delta:", "F1:", "primes:", "bijection:"])),
        ("extend-rank2-sqrt2", || scenario_lines("rank2_sqrt2", &["delta:", "primes:", "check", "bijection:"])),
        ("extend-char2-roots", || {
            scenario_lines("char2_roots", &["gamma:", "delta:", "p-torsion:", "radicial:", "weakly-unramified", "primes:"])
        }),
        ("extend-split-residue", || scenario_lines("split_residue", &["F1:", "point:", "kprime:"])),
    ]
}

/// Parses `name = value` lines.
pub fn parse_corpus(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .filter_map(|l| l.split_once(" = ").map(|(a, b)| (a.trim().to_string(), b.trim().to_string())))
        .collect()
}

/// Outcome of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub golden: bool,
    pub pass: bool,
    pub detail: String,
}

impl CaseResult {
    pub fn line(&self) -> String {
        let kind = if self.golden { "golden" } else { "random" };
        format!("{} {kind} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

pub fn run_golden(corpus: &str) -> Vec<CaseResult> {
    let expected = parse_corpus(corpus);
    golden_cases()
        .into_iter()
        .map(|(name, case)| {
            let got = case().unwrap_or_else(|e| format!("error: {e}"));
            match expected.iter().find(|(n, _)| n == name) {
                Some((_, want)) if *want == got => CaseResult { name: name.into(), golden: true, pass: true, detail: got },
                Some((_, want)) => {
                    CaseResult { name: name.into(), golden: true, pass: false, detail: format!("expected `{want}`, got `{got}`") }
                }
                None => CaseResult { name: name.into(), golden: true, pass: false, detail: format!("no expected value; got `{got}`") },
            }
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_monic(k: &Field, s: &mut Sampler, deg: usize) -> UPoly {
    let p = k.characteristic() as i64;
    let mut c: Vec<Elem> = (0..deg).map(|_| k.from_i64(s.range(0, p - 1))).collect();
    c.push(k.one());
    UPoly::from_coeffs(c)
}

/// Seeded property suites. Each detail names the first sampled input so that
/// different seeds are visibly different runs.
pub fn run_random(seed: u64) -> Vec<CaseResult> {
    let mut out = Vec::new();
    let mut push = |name: &str, r: Result<(bool, String)>| {
        let (pass, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
        out.push(CaseResult { name: name.into(), golden: false, pass, detail: format!("{detail} (seed {seed})") });
    };
    push("algebra-norm-f5", (|| {
        let v = xadic("F5")?;
        let a = FreeAlgebra::polynomial(&v, &["w"])?;
        let r = check_algebra_norm(&a, RANDOM_SAMPLES / 2, seed);
        Ok((r.is_ok(), format!("{} checks, {} violations", r.checks, r.violations.len())))
    })());
    push("module-norm-rank2", (|| {
        let v = MonomialValuation::new(&Field::rationals(), &["x1", "x2"])?;
        let e = FreeModule::new(&v, 2);
        let k = v.field();
        let mut s = Sampler::new(seed);
        let mut first = String::new();
        let mut ok = true;
        for i in 0..RANDOM_SAMPLES {
            let z = [s.valued(&v), s.valued(&v)];
            let w = [s.valued(&v), s.valued(&v)];
            if i == 0 {
                first = k.fmt_elem(&z[0]);
            }
            let sum = [k.add(&z[0], &w[0]), k.add(&z[1], &w[1])];
            ok &= e.norm(&sum).cmp_additive(&e.norm(&z).min_additive(e.norm(&w))) != Ordering::Less;
            let alpha = s.valued(&v);
            ok &= e.norm(&e.scale(&alpha, &z)) == v.value(&alpha).add(&e.norm(&z));
        }
        Ok((ok, format!("{RANDOM_SAMPLES} samples, first {first}")))
    })());
    push("gauss-multiplicative-f5", (|| {
        let v = xadic("F5")?;
        let g = gauss_extend(&FreeAlgebra::polynomial(&v, &["w"])?)?;
        let k = g.frac_field();
        let mut s = Sampler::new(seed);
        let mut ok = true;
        let mut first = String::new();
        for i in 0..RANDOM_SAMPLES {
            let (z, u) = (g.embed(&s.mpoly(&v, 1, 2)), g.embed(&s.mpoly(&v, 1, 2)));
            if i == 0 {
                first = k.fmt_elem(&z);
            }
            ok &= g.value(&k.mul(&z, &u)) == g.value(&z).add(&g.value(&u));
        }
        Ok((ok, format!("{RANDOM_SAMPLES} pairs, first {first}")))
    })());
    push("factor-f5", (|| {
        let k = Field::prime(5)?;
        let mut s = Sampler::new(seed);
        let mut ok = true;
        let mut first = String::new();
        for i in 0..RANDOM_SAMPLES / 2 {
            let deg = s.rng().gen_range(1..=6);
            let f = random_monic(&k, &mut s, deg);
            if i == 0 {
                first = k.fmt_poly(&f, "y");
            }
            let fac = factor(&k, &f)?;
            ok &= fac.expand(&k) == f;
            for (g, _) in &fac.factors {
                ok &= poly::is_irreducible(&k, g)?;
            }
            // Two irreducible factors g, h give gcd(deg g, deg h) points.
            let (g, h) = (&fac.factors[0].0, &fac.factors[fac.factors.len() - 1].0);
            let adjoin = |name: &str, g: &UPoly| if g.deg() == 1 { Ok(k.clone()) } else { k.algebraic(name, g) };
            let l = adjoin("z", g)?;
            let m = adjoin("w", h)?;
            let pts = tensor_decompose_over(&k, &l, &m)?;
            ok &= pts.len() == gcd(g.deg(), h.deg());
            let (sum, total) = degree_sum(&k, &l, &m, &pts)?;
            ok &= sum == total;
        }
        Ok((ok, format!("{} polynomials, first {first}", RANDOM_SAMPLES / 2)))
    })());
    out
}

/// Runs the corpus and the random suites; returns the report and whether
/// everything passed.
pub fn selftest(seed: u64, corpus: &str) -> (String, bool) {
    let mut results = run_golden(corpus);
    results.extend(run_random(seed));
    let mut out = String::new();
    for r in &results {
        let _ = writeln!(out, "{}", r.line());
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        let _ = writeln!(out, "selftest: {} cases passed", results.len());
    } else {
        let _ = writeln!(out, "selftest: {} of {} cases failed: {}", failed.len(), results.len(), failed.join(", "));
    }
    (out, failed.is_empty())
}
