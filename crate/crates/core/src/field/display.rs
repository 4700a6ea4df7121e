use super::{Elem, Field, Kind, StepKind};
use crate::poly::UPoly;

/// True when the string has a `+` or `-` outside parentheses (after the first
/// character), so that it must be parenthesised as a factor.
fn is_compound(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// A name or a number, safe to place after `/`.
fn is_atomic(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Field {
    /// Canonical text of an element, parseable back with [`Field::parse_elem`].
    pub fn fmt_elem(&self, e: &Elem) -> String {
        match (&self.0.kind, e) {
            (Kind::Rationals, Elem::Rat(r)) => r.to_string(),
            (Kind::Prime(_), Elem::Mod(x)) => x.to_string(),
            (Kind::Ext { parent, step }, Elem::Alg(p)) => parent.fmt_poly(p, &step.name),
            (Kind::Ext { parent, step }, Elem::Frac(n, d)) => {
                let num = parent.fmt_poly(n, &step.name);
                if d.is_one(parent) {
                    return num;
                }
                let den = parent.fmt_poly(d, &step.name);
                let num = if is_compound(&num) { format!("({num})") } else { num };
                let den = if is_atomic(&den) { den } else { format!("({den})") };
                format!("{num}/{den}")
            }
            _ => format!("{e:?}"),
        }
    }

    /// Canonical text of a polynomial over `self` in the variable `var`.
    pub fn fmt_poly(&self, p: &UPoly, var: &str) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut cs = self.fmt_elem(c);
            if is_compound(&cs) {
                cs = format!("({cs})");
            }
            let negative = cs.starts_with('-');
            let body = if negative { cs[1..].to_string() } else { cs };
            let monomial = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if monomial.is_empty() {
                body
            } else if body == "1" {
                monomial
            } else {
                format!("{body}*{monomial}")
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
                out.push_str(&term);
            } else {
                out.push_str(if negative { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        out
    }

    /// Tower description in the text syntax accepted by [`Field::parse_tower`].
    pub fn description(&self) -> String {
        let mut parts = Vec::new();
        for level in self.levels() {
            match &level.0.kind {
                Kind::Rationals => parts.push("base=Q".to_string()),
                Kind::Prime(p) => parts.push(format!("base=F{p}")),
                Kind::Ext { parent, step } => match &step.kind {
                    StepKind::Transcendental => parts.push(format!("gen {}: transcendental", step.name)),
                    StepKind::Algebraic { minpoly, .. } => parts.push(format!(
                        "gen {}: algebraic {}",
                        step.name,
                        parent.fmt_poly(minpoly, super::POLY_VAR)
                    )),
                },
            }
        }
        parts.join("; ")
    }

    /// Short human name, e.g. `Q(i)` or `F2(a)(r)`.
    pub fn short_name(&self) -> String {
        let mut s = match self.prime_field().0.kind {
            Kind::Prime(p) => format!("F{p}"),
            _ => "Q".to_string(),
        };
        for name in self.gen_names() {
            s.push_str(&format!("({name})"));
        }
        s
    }
}
