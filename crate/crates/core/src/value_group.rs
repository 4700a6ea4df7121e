//! Totally ordered value groups `Z^n` (lexicographic) refined by `p`-power
//! denominators, plus the monoid obtained by adjoining a zero element.
//!
//! Internally every value is written ADDITIVELY: the value of a product is the
//! sum of the values. The multiplicative dictionary is
//!
//! | multiplicative          | additive (this crate) |
//! |-------------------------|-----------------------|
//! | `|z| <= 1` (`z` in V)   | `value(z) >= 0`       |
//! | `|z| < 1` (`z` in m)    | `value(z) > 0`        |
//! | `|0| = 0`               | `Value::Zero`, read as +infinity |
//! | `max(|z|, |t|)`         | `min(value z, value t)` |
//!
//! `Value::Zero` is the value of `0`. In the multiplicative picture it is the
//! least element; in additive terms it is absorbing for addition and lies
//! *above* every group element. [`ValueGroup::compare`] uses the multiplicative
//! convention (Zero is the minimum) so that callers can transcribe
//! ultrametric statements literally, while [`ValueGroup::cmp_additive`] gives
//! the additive order used for computing valuations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{structural, Error, Result};

/// Default cap on the rank of a value group.
pub const DEFAULT_RANK_BOUND: usize = 3;

/// `(1/p^N) Z^n` with the lexicographic order (first coordinate dominant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueGroup {
    rank: usize,
    char_exponent: u64,
    denom_exponent: u32,
}

/// A group element: coordinates in `(1/p^N) Z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem(pub Vec<Rational64>);

/// A group element or the adjoined zero (the value of `0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Zero,
    Finite(GroupElem),
}

impl ValueGroup {
    pub fn new(rank: usize, char_exponent: u64, denom_exponent: u32) -> Result<Self> {
        Self::with_rank_bound(rank, char_exponent, denom_exponent, DEFAULT_RANK_BOUND)
    }

    pub fn with_rank_bound(
        rank: usize,
        char_exponent: u64,
        denom_exponent: u32,
        bound: usize,
    ) -> Result<Self> {
        if rank == 0 || rank > bound {
            return structural(format!("rank {rank} outside 1..={bound}"));
        }
        if char_exponent == 0 || (char_exponent > 1 && !is_prime(char_exponent)) {
            return structural(format!("characteristic exponent {char_exponent} is not 1 or a prime"));
        }
        if char_exponent == 1 && denom_exponent > 0 {
            return structural("denominators require a prime characteristic exponent");
        }
        let group = ValueGroup { rank, char_exponent, denom_exponent };
        group.denominator_checked()?;
        Ok(group)
    }

    /// `Z^n` lex.
    pub fn integral(rank: usize) -> Result<Self> {
        Self::new(rank, 1, 0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn char_exponent(&self) -> u64 {
        self.char_exponent
    }

    pub fn denom_exponent(&self) -> u32 {
        self.denom_exponent
    }

    fn denominator_checked(&self) -> Result<i64> {
        (self.char_exponent as i64)
            .checked_pow(self.denom_exponent)
            .ok_or_else(|| Error::Structural("denominator p^N overflows".into()))
    }

    /// `p^N`.
    pub fn denominator(&self) -> i64 {
        self.denominator_checked().expect("validated at construction")
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        let d = self.denominator();
        g.0.len() == self.rank && g.0.iter().all(|c| d % c.denom() == 0)
    }

    pub fn contains_value(&self, v: &Value) -> bool {
        match v {
            Value::Zero => true,
            Value::Finite(g) => self.contains(g),
        }
    }

    fn check(&self, v: &Value) -> Result<()> {
        if self.contains_value(v) {
            Ok(())
        } else {
            structural(format!("{v} is not an element of {self}"))
        }
    }

    pub fn zero_elem(&self) -> GroupElem {
        GroupElem(vec![Rational64::zero(); self.rank])
    }

    /// The identity of the group (multiplicatively `1`, additively `0`).
    pub fn identity(&self) -> Value {
        Value::Finite(self.zero_elem())
    }

    /// Unit vector `e_i / p^N`.
    pub fn basis_step(&self, i: usize) -> GroupElem {
        let mut g = self.zero_elem();
        g.0[i] = Rational64::new(1, self.denominator());
        g
    }

    /// Multiplicative-convention comparison: `Zero` is below everything, and
    /// for group elements `a <= b` iff `a` is lexicographically at least `b`
    /// additively (`|x| <= |y|` iff `v(x) >= v(y)`).
    pub fn compare(&self, a: &Value, b: &Value) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Value::Zero, Value::Zero) => Ordering::Equal,
            (Value::Zero, _) => Ordering::Less,
            (_, Value::Zero) => Ordering::Greater,
            (Value::Finite(x), Value::Finite(y)) => y.cmp(x),
        })
    }

    /// Additive comparison: group elements lexicographically, `Zero` on top.
    pub fn cmp_additive(&self, a: &Value, b: &Value) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.cmp_additive(b))
    }

    /// The group law (coordinatewise addition); `Zero` absorbs.
    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.add(b))
    }

    pub fn inv(&self, a: &Value) -> Result<Value> {
        self.check(a)?;
        match a {
            Value::Zero => Err(Error::Domain("the zero value has no inverse".into())),
            Value::Finite(g) => Ok(Value::Finite(g.neg())),
        }
    }

    /// Whether `self` embeds order-preservingly into `sup` as a subgroup.
    pub fn embeds_in(&self, sup: &ValueGroup) -> bool {
        self.rank == sup.rank && sup.denominator() % self.denominator() == 0
    }

    /// Whether `sup / sub` is a `p`-torsion group. Every generator
    /// `e_i / q^M` of `sup` must have a `p^m` multiple inside `sub`.
    pub fn is_p_torsion_quotient(sub: &ValueGroup, sup: &ValueGroup, p: u64) -> Result<bool> {
        if !sub.embeds_in(sup) {
            return structural(format!("{sub} does not embed in {sup}"));
        }
        if p == 0 {
            return structural("p must be positive");
        }
        let sub_den = sub.denominator() as i128;
        let sup_den = sup.denominator() as i128;
        // The generator is 1/sup_den; p^m/sup_den lies in (1/sub_den)Z iff
        // sup_den divides p^m * sub_den. Residues mod sup_den cycle, so a
        // bound of 64 steps exhausts every case for 64-bit denominators.
        let mut acc = sub_den % sup_den;
        for _ in 0..=64 {
            if acc == 0 {
                return Ok(true);
            }
            acc = (acc * p as i128) % sup_den;
        }
        Ok(false)
    }

    pub fn parse_value(&self, text: &str) -> Result<Value> {
        let v: Value = text.parse()?;
        self.check(&v)?;
        Ok(v)
    }
}

impl GroupElem {
    pub fn neg(&self) -> GroupElem {
        GroupElem(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &GroupElem) -> GroupElem {
        GroupElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &GroupElem) -> GroupElem {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Sign in the lexicographic order.
    pub fn signum(&self) -> Ordering {
        self.0
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| if c.is_positive() { Ordering::Greater } else { Ordering::Less })
            .unwrap_or(Ordering::Equal)
    }
}

impl Value {
    pub fn finite(coords: Vec<Rational64>) -> Value {
        Value::Finite(GroupElem(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Value {
        Value::finite(coords.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Value::Zero)
    }

    pub fn as_finite(&self) -> Option<&GroupElem> {
        match self {
            Value::Zero => None,
            Value::Finite(g) => Some(g),
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a.add(b)),
            _ => Value::Zero,
        }
    }

    /// `self - other`; `other` must be finite.
    pub fn sub(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a.sub(b)),
            (Value::Zero, Value::Finite(_)) => Value::Zero,
            (_, Value::Zero) => panic!("subtracting the value of zero"),
        }
    }

    /// Additive order: lexicographic on coordinates, `Zero` is the top.
    pub fn cmp_additive(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Zero, Value::Zero) => Ordering::Equal,
            (Value::Zero, _) => Ordering::Greater,
            (_, Value::Zero) => Ordering::Less,
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
        }
    }

    pub fn min_additive(self, other: Value) -> Value {
        if other.cmp_additive(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// `value >= 0`, i.e. the element lies in the valuation ring.
    pub fn is_nonnegative(&self) -> bool {
        match self {
            Value::Zero => true,
            Value::Finite(g) => g.signum() != Ordering::Less,
        }
    }

    /// `value > 0`, i.e. the element lies in the maximal ideal.
    pub fn is_positive(&self) -> bool {
        match self {
            Value::Zero => true,
            Value::Finite(g) => g.signum() == Ordering::Greater,
        }
    }
}

fn fmt_rational(r: &Rational64) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Zero => write!(f, "0"),
            Value::Finite(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_exponent == 0 {
            write!(f, "Z^{} lex", self.rank)
        } else {
            write!(f, "(1/{})Z^{} lex", self.denominator(), self.rank)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::Parse(format!("bad rational coordinate `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d <= 0 {
                return Err(bad());
            }
            let r = Rational64::new(n, d);
            // Bit-exact round trip: only canonical (reduced) fractions parse.
            if *r.numer() != n || *r.denom() != d {
                return Err(bad());
            }
            Ok(r)
        }
    }
}

impl FromStr for Value {
    type Err = Error;

    fn from_str(s: &str) -> Result<Value> {
        let s = s.trim();
        if s == "0" {
            return Ok(Value::Zero);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(c1, ..., cn)` or `0`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Err(Error::Parse("empty coordinate tuple".into()));
        }
        let coords = inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(Value::finite(coords))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn zero_is_below_everything() {
        let g = ValueGroup::integral(1).unwrap();
        assert_eq!(g.compare(&Value::Zero, &Value::from_ints(&[0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn lexicographic_rule() {
        let g = ValueGroup::integral(2).unwrap();
        let a = Value::from_ints(&[1, 0]);
        let b = Value::from_ints(&[0, 5]);
        assert_eq!(g.cmp_additive(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn rational_coordinates() {
        let g = ValueGroup::new(1, 2, 1).unwrap();
        let a = Value::finite(vec![r(1, 2)]);
        let b = Value::from_ints(&[1]);
        assert_eq!(g.cmp_additive(&a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn group_law_and_inverse() {
        let g = ValueGroup::integral(1).unwrap();
        assert_eq!(g.mul(&Value::from_ints(&[1]), &Value::from_ints(&[2])).unwrap(), Value::from_ints(&[3]));
        assert_eq!(g.mul(&Value::Zero, &Value::from_ints(&[7])).unwrap(), Value::Zero);
        let g2 = ValueGroup::integral(2).unwrap();
        assert_eq!(g2.inv(&Value::from_ints(&[1, -2])).unwrap(), Value::from_ints(&[-1, 2]));
        assert!(matches!(g2.inv(&Value::Zero), Err(Error::Domain(_))));
    }

    #[test]
    fn mismatched_groups_are_structural_errors() {
        let g = ValueGroup::integral(2).unwrap();
        let err = g.compare(&Value::from_ints(&[1]), &Value::from_ints(&[1, 2])).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let z = ValueGroup::integral(1).unwrap();
        let half = Value::finite(vec![r(1, 2)]);
        assert!(matches!(z.mul(&half, &half), Err(Error::Structural(_))));
    }

    #[test]
    fn p_torsion_quotients() {
        let z = ValueGroup::integral(1).unwrap();
        let half = ValueGroup::new(1, 2, 1).unwrap();
        let third = ValueGroup::new(1, 3, 1).unwrap();
        assert!(ValueGroup::is_p_torsion_quotient(&z, &half, 2).unwrap());
        assert!(ValueGroup::is_p_torsion_quotient(&z, &z, 2).unwrap());
        assert!(!ValueGroup::is_p_torsion_quotient(&z, &third, 2).unwrap());
        assert!(ValueGroup::is_p_torsion_quotient(&half, &z, 2).is_err());
    }

    #[test]
    fn p_torsion_matches_exhaustive_search() {
        // Oracle: search m directly with exact rationals.
        for (q, n) in [(2u64, 3u32), (3, 2), (5, 1)] {
            let sup = ValueGroup::new(1, q, n).unwrap();
            let sub = ValueGroup::integral(1).unwrap();
            for p in [2u64, 3, 5, 7] {
                let gen = r(1, sup.denominator());
                let found = (0..10u32).any(|m| (gen * r(p.pow(m) as i64, 1)).is_integer());
                assert_eq!(ValueGroup::is_p_torsion_quotient(&sub, &sup, p).unwrap(), found);
            }
        }
    }

    #[test]
    fn coarse_group_embeds_in_refinement() {
        let z = ValueGroup::new(2, 3, 0).unwrap();
        let fine = ValueGroup::new(2, 3, 2).unwrap();
        assert!(z.embeds_in(&fine));
        let a = Value::from_ints(&[1, -4]);
        let b = Value::from_ints(&[0, 9]);
        assert_eq!(z.cmp_additive(&a, &b).unwrap(), fine.cmp_additive(&a, &b).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let g = ValueGroup::new(2, 2, 1).unwrap();
        let v = g.parse_value("(1, -1/2)").unwrap();
        assert_eq!(v.to_string(), "(1, -1/2)");
        assert_eq!(g.parse_value("0").unwrap(), Value::Zero);
        assert!("(2/4)".parse::<Value>().is_err());
        assert!("1, 2".parse::<Value>().is_err());
    }

    fn arb_value(rank: usize) -> impl Strategy<Value = Value> {
        prop_oneof![
            1 => Just(Value::Zero),
            8 => proptest::collection::vec(-8i64..8, rank)
                .prop_map(|c| Value::finite(c.into_iter().map(|x| r(x, 4)).collect())),
        ]
    }

    proptest! {
        #[test]
        fn total_order(a in arb_value(3), b in arb_value(3), c in arb_value(3)) {
            let g = ValueGroup::new(3, 2, 2).unwrap();
            let ab = g.compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), g.compare(&b, &a).unwrap());
            if ab != Ordering::Greater && g.compare(&b, &c).unwrap() != Ordering::Greater {
                prop_assert!(g.compare(&a, &c).unwrap() != Ordering::Greater);
            }
        }

        #[test]
        fn order_compatible_with_law(a in arb_value(2), b in arb_value(2), c in arb_value(2)) {
            let g = ValueGroup::new(2, 2, 2).unwrap();
            if g.compare(&a, &b).unwrap() != Ordering::Greater {
                let ac = g.mul(&a, &c).unwrap();
                let bc = g.mul(&b, &c).unwrap();
                prop_assert!(g.compare(&ac, &bc).unwrap() != Ordering::Greater);
            }
            prop_assert_eq!(g.mul(&a, &b).unwrap(), g.mul(&b, &a).unwrap());
            prop_assert_eq!(g.mul(&Value::Zero, &a).unwrap(), Value::Zero);
            prop_assert!(g.compare(&Value::Zero, &a).unwrap() != Ordering::Greater);
        }

        #[test]
        fn display_parse_round_trip(a in arb_value(2)) {
            let g = ValueGroup::new(2, 2, 2).unwrap();
            prop_assert_eq!(g.parse_value(&a.to_string()).unwrap(), a);
        }
    }
}
