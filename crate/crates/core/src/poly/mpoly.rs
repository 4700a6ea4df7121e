//! Sparse multivariate polynomials over a tower field.

use std::collections::BTreeMap;

use crate::field::{Elem, Field};

/// Map from exponent vectors (lex order) to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Elem) -> MPoly {
        MPoly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Elem) -> MPoly {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    pub fn var(k: &Field, nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(nvars, e, k.one())
    }

    pub fn from_terms(k: &Field, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Elem)>) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (e, c) in terms {
            out.add_term(k, e, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Elem)> {
        self.terms.iter()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = &Elem> {
        self.terms.values()
    }

    pub fn coeff(&self, k: &Field, exps: &[u32]) -> Elem {
        self.terms.get(exps).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, k: &Field, e: Vec<u32>, c: Elem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = k.add(v, &c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, k: &Field, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(k, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, k: &Field) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), k.neg(c))).collect() }
    }

    pub fn sub(&self, k: &Field, other: &MPoly) -> MPoly {
        self.add(k, &other.neg(k))
    }

    pub fn scale(&self, k: &Field, c: &Elem) -> MPoly {
        MPoly::from_terms(k, self.nvars, self.terms.iter().map(|(e, x)| (e.clone(), k.mul(x, c))))
    }

    pub fn mul(&self, k: &Field, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(k, e, k.mul(c1, c2));
            }
        }
        out
    }

    pub fn map_coeffs(&self, k: &Field, f: impl Fn(&Elem) -> Elem) -> MPoly {
        MPoly::from_terms(k, self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Text form with the given variable names, highest monomial first.
    pub fn fmt_with(&self, k: &Field, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(x, _)| **x > 0)
                .map(|(x, n)| if *x == 1 { n.to_string() } else { format!("{n}^{x}") })
                .collect();
            let mut cs = k.fmt_elem(c);
            if cs[1..].contains(['+', '-']) {
                cs = format!("({cs})");
            }
            let neg = cs.starts_with('-');
            let body = if neg { cs[1..].to_string() } else { cs };
            let term = match (mono.is_empty(), body.as_str()) {
                (true, _) => body,
                (false, "1") => mono.join("*"),
                (false, _) => format!("{body}*{}", mono.join("*")),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}
