use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of variables a [`LiteralSet`] can address (two bits per variable).
pub const MAX_VARS: usize = 64;

const PLAIN_BITS: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    /// `x_i`, an activator; renders as the factor `(x_i - 1)`.
    Plain,
    /// `x̄_i`, an inhibitor; renders as the factor `(x_i + 1)`.
    Barred,
}

impl Polarity {
    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::Plain => Polarity::Barred,
            Polarity::Barred => Polarity::Plain,
        }
    }
}

/// A variable together with a polarity. `var` is zero-based; all rendering is one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub polarity: Polarity,
}

impl Literal {
    pub fn plain(var: usize) -> Literal {
        Literal { var, polarity: Polarity::Plain }
    }

    pub fn barred(var: usize) -> Literal {
        Literal { var, polarity: Polarity::Barred }
    }

    fn bit(self) -> u32 {
        debug_assert!(self.var < MAX_VARS);
        (2 * self.var) as u32 + matches!(self.polarity, Polarity::Barred) as u32
    }

    fn from_bit(bit: u32) -> Literal {
        let var = (bit / 2) as usize;
        if bit & 1 == 0 {
            Literal::plain(var)
        } else {
            Literal::barred(var)
        }
    }

    /// Machine token: `x3` or `!x3`.
    pub fn token(self) -> String {
        match self.polarity {
            Polarity::Plain => format!("x{}", self.var + 1),
            Polarity::Barred => format!("!x{}", self.var + 1),
        }
    }

    /// Pseudomonomial factor: `(x3-1)` or `(x3+1)`.
    pub fn factor(self) -> String {
        match self.polarity {
            Polarity::Plain => format!("(x{}-1)", self.var + 1),
            Polarity::Barred => format!("(x{}+1)", self.var + 1),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Plain => write!(f, "x{}", self.var + 1),
            Polarity::Barred => write!(f, "x\u{304}{}", self.var + 1),
        }
    }
}

impl FromStr for Literal {
    type Err = Error;

    /// Accepts `x3`, `!x3` and `x̄3`.
    fn from_str(s: &str) -> Result<Literal> {
        let s = s.trim();
        let (barred, rest) = if let Some(rest) = s.strip_prefix('!') {
            (true, rest.strip_prefix('x'))
        } else if let Some(rest) = s.strip_prefix("x\u{304}") {
            (true, Some(rest))
        } else {
            (false, s.strip_prefix('x'))
        };
        let bad = || Error::Format(format!("bad literal `{s}`"));
        let index: usize = rest.ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if index == 0 || index > MAX_VARS {
            return Err(bad());
        }
        Ok(if barred { Literal::barred(index - 1) } else { Literal::plain(index - 1) })
    }
}

/// A squarefree set of literals over the extended alphabet `{x_1..x_n, x̄_1..x̄_n}`.
///
/// Serves as a monomial (product of its literals), as a prime component (the ideal its
/// literals generate) and as a min-set. Variable `i` occupies bits `2i` (plain) and
/// `2i + 1` (barred), so the natural bit order is the canonical `(variable, polarity)` order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LiteralSet(u128);

/// A squarefree monomial.
pub type Monomial = LiteralSet;
/// A prime component, identified with its literal generators.
pub type Component = LiteralSet;

impl LiteralSet {
    pub const EMPTY: LiteralSet = LiteralSet(0);

    pub fn from_bits(bits: u128) -> LiteralSet {
        LiteralSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(lit: Literal) -> LiteralSet {
        LiteralSet(1u128 << lit.bit())
    }

    /// Plain literals for the given zero-based variables.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> LiteralSet {
        vars.into_iter().map(Literal::plain).collect()
    }

    pub fn insert(&mut self, lit: Literal) {
        self.0 |= 1u128 << lit.bit();
    }

    pub fn contains(self, lit: Literal) -> bool {
        self.0 & (1u128 << lit.bit()) != 0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn len(self) -> usize {
        self.degree()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_univariate(self) -> bool {
        self.degree() == 1
    }

    /// Divisibility of monomials, i.e. inclusion of literal sets.
    pub fn divides(self, other: LiteralSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_subset(self, other: LiteralSet) -> bool {
        self.divides(other)
    }

    pub fn intersects(self, other: LiteralSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: LiteralSet) -> LiteralSet {
        LiteralSet(self.0 | other.0)
    }

    /// Drops every bar: `x̄_i ↦ x_i`.
    pub fn shadow(self) -> LiteralSet {
        LiteralSet((self.0 | (self.0 >> 1)) & PLAIN_BITS)
    }

    /// Swaps the polarity of every literal.
    pub fn conjugate(self) -> LiteralSet {
        LiteralSet(((self.0 & PLAIN_BITS) << 1) | ((self.0 >> 1) & PLAIN_BITS))
    }

    /// Swaps the polarity of the literals of one variable.
    pub fn flip_var(self, var: usize) -> LiteralSet {
        let pair = 0b11u128 << (2 * var);
        let kept = self.0 & !pair;
        let part = self.0 & pair;
        let swapped = ((part & PLAIN_BITS) << 1) | ((part >> 1) & PLAIN_BITS);
        LiteralSet(kept | swapped)
    }

    /// True when some variable appears with both polarities.
    pub fn is_conflicted(self) -> bool {
        self.0 & (self.0 >> 1) & PLAIN_BITS != 0
    }

    pub fn is_plain_only(self) -> bool {
        self.0 & !PLAIN_BITS == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Literal> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let bit = bits.trailing_zeros();
            bits &= bits - 1;
            Some(Literal::from_bit(bit))
        })
    }

    /// Zero-based variables mentioned, in increasing order.
    pub fn variables(self) -> Vec<usize> {
        self.shadow().iter().map(|l| l.var).collect()
    }

    /// Highest zero-based variable mentioned plus one.
    pub fn var_bound(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            (127 - self.0.leading_zeros() as usize) / 2 + 1
        }
    }

    pub fn tokens(self) -> Vec<String> {
        self.iter().map(Literal::token).collect()
    }

    /// Product form such as `x1x̄3`; the empty monomial prints as `1`.
    pub fn product(self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.iter().map(|l| l.to_string()).collect()
    }
}

impl FromIterator<Literal> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> LiteralSet {
        let mut set = LiteralSet::EMPTY;
        for lit in iter {
            set.insert(lit);
        }
        set
    }
}

impl Ord for LiteralSet {
    /// Lexicographic on the sorted literal sequences.
    fn cmp(&self, other: &LiteralSet) -> Ordering {
        let (a, b) = (self.0, other.0);
        if a == b {
            return Ordering::Equal;
        }
        // the sequences agree up to the lowest differing literal; the side holding it is
        // smaller unless the other side has nothing left, i.e. is a prefix
        let d = (a ^ b).trailing_zeros();
        let above = if d == 127 { 0 } else { !0u128 << (d + 1) };
        let (holder, other_rest) = if a >> d & 1 == 1 { (Ordering::Less, b & above) } else { (Ordering::Greater, a & above) };
        if other_rest == 0 {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for LiteralSet {
    fn partial_cmp(&self, other: &LiteralSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, lit) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{lit}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LiteralSet {
    type Err = Error;

    /// Parses a comma or whitespace separated list of literals, with optional braces.
    fn from_str(s: &str) -> Result<LiteralSet> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse::<Literal>)
            .collect()
    }
}

impl Serialize for LiteralSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.degree()))?;
        for lit in self.iter() {
            seq.serialize_element(&lit.token())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LiteralSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TokenSeq;

        impl<'de> Visitor<'de> for TokenSeq {
            type Value = LiteralSet;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of literal tokens such as \"x1\" or \"!x3\"")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LiteralSet, A::Error> {
                let mut set = LiteralSet::EMPTY;
                while let Some(token) = seq.next_element::<String>()? {
                    let lit: Literal = token.parse().map_err(de::Error::custom)?;
                    set.insert(lit);
                }
                Ok(set)
            }
        }

        deserializer.deserialize_seq(TokenSeq)
    }
}

/// Removes duplicates and every set that strictly contains another; sorts canonically.
pub fn minimal_sets(sets: impl IntoIterator<Item = LiteralSet>) -> Vec<LiteralSet> {
    let mut all: Vec<LiteralSet> = sets.into_iter().collect();
    all.sort_by_key(|s| (s.degree(), s.bits()));
    all.dedup();
    let mut kept: Vec<LiteralSet> = Vec::with_capacity(all.len());
    for s in all {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_literal_order() {
        let m = set("!x3 x1 x2");
        let lits: Vec<_> = m.iter().collect();
        assert_eq!(lits, vec![Literal::plain(0), Literal::plain(1), Literal::barred(2)]);
        assert!(Literal::plain(2) < Literal::barred(2));
    }

    #[test]
    fn parse_and_tokens() {
        assert_eq!(set("{x1, x̄3}"), set("x1 !x3"));
        assert_eq!(set("x1,!x3").tokens(), vec!["x1", "!x3"]);
        assert!("y1".parse::<Literal>().is_err());
        assert!("x0".parse::<Literal>().is_err());
        assert_eq!(set("x1 !x3").to_string(), "{x1, x̄3}");
        assert_eq!(set("x1 !x3").product(), "x1x̄3");
        assert_eq!(LiteralSet::EMPTY.product(), "1");
    }

    #[test]
    fn shadow_conjugate_flip() {
        let m = set("x1 !x2 x3 !x3");
        assert_eq!(m.shadow(), set("x1 x2 x3"));
        assert_eq!(set("x1 !x2").conjugate(), set("!x1 x2"));
        assert_eq!(set("x1 !x2").flip_var(1), set("x1 x2"));
        assert!(m.is_conflicted());
        assert!(!set("x1 !x2").is_conflicted());
        assert_eq!(set("x64 !x64").shadow(), set("x64"));
        assert_eq!(set("!x64").var_bound(), 64);
    }

    #[test]
    fn set_order_is_lexicographic() {
        let mut v = vec![set("!x3 x5"), set("x1 x5"), set("x1"), set("!x2 !x5 x5")];
        v.sort();
        assert_eq!(v, vec![set("x1"), set("x1 x5"), set("!x2 x5 !x5"), set("!x3 x5")]);
    }

    #[test]
    fn minimal_sets_removes_supersets() {
        let got = minimal_sets(vec![set("x1 x2"), set("x1"), set("x2 x3"), set("x1")]);
        assert_eq!(got, vec![set("x1"), set("x2 x3")]);
    }

    #[test]
    fn serde_tokens() {
        let m = set("x1 !x3");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"["x1","!x3"]"#);
        let back: LiteralSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
