//! Generators of the data ideals.
//!
//! For data `(s_i, t_i)` the unsigned ideal `I` is generated by `m(s, s')`, the product of
//! the variables where two inputs with different outputs differ. The extended ideal
//! `I^ext` lives over the doubled alphabet: for `t_i < t_j`, coordinate `k` contributes
//! `x_k` when `s_ik < s_jk` and `x̄_k` when `s_ik > s_jk`. Reading `x_k` as `(x_k - 1)` and
//! `x̄_k` as `(x_k + 1)` gives the pseudomonomials of the signed ideal `I^sgn`.

use crate::datamodel::{DataSet, Ideal, InputSet, Literal, Monomial, Point};
use crate::datamodel::Alphabet;
use crate::decompose::minimize_generators;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Unsigned,
    Extended,
}

impl IdealKind {
    pub fn alphabet(self) -> Alphabet {
        match self {
            IdealKind::Unsigned => Alphabet::Plain,
            IdealKind::Extended => Alphabet::Extended,
        }
    }
}

fn check_dims(a: &Point, b: &Point) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension { expected: a.dim(), found: b.dim() });
    }
    Ok(())
}

/// `m(s, s') = ∏_{s_k ≠ s'_k} x_k`.
pub fn unsigned_generator(s: &Point, s2: &Point) -> Result<Monomial> {
    check_dims(s, s2)?;
    let m: Monomial = s
        .coords()
        .iter()
        .zip(s2.coords())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(k, _)| Literal::plain(k))
        .collect();
    if m.is_empty() {
        return Err(Error::EmptyMonomial);
    }
    Ok(m)
}

/// `m^ext(s_low, s_high)`; `s_low` is the input with the smaller output.
pub fn extended_generator(s_low: &Point, s_high: &Point) -> Result<Monomial> {
    check_dims(s_low, s_high)?;
    let m = extended_unchecked(s_low, s_high);
    if m.is_empty() {
        return Err(Error::EmptyMonomial);
    }
    Ok(m)
}

pub(crate) fn extended_unchecked(s_low: &Point, s_high: &Point) -> Monomial {
    let mut m = Monomial::EMPTY;
    for (k, (a, b)) in s_low.coords().iter().zip(s_high.coords()).enumerate() {
        if a < b {
            m.insert(Literal::plain(k));
        } else if a > b {
            m.insert(Literal::barred(k));
        }
    }
    m
}

/// Pseudomonomial text of an extended-alphabet monomial, e.g. `(x1-1)(x3+1)`.
pub fn render_pseudomonomial(m: &Monomial) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter().map(Literal::factor).collect()
}

/// One generator per pair of inputs with different outputs, deduplicated, in a canonical
/// order: rows are stably sorted by output first, then pairs are visited in order.
///
/// Outputs are treated as ordered labels and need not lie in `0..q`.
pub fn pair_generators(inputs: &[Point], outputs: &[u32], kind: IdealKind) -> Vec<Monomial> {
    debug_assert_eq!(inputs.len(), outputs.len());
    let mut order: Vec<usize> = (0..inputs.len()).collect();
    order.sort_by_key(|&i| outputs[i]);
    let mut gens: Vec<Monomial> = Vec::new();
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a + 1..] {
            if outputs[i] == outputs[j] {
                continue;
            }
            // outputs[i] < outputs[j] after sorting
            let m = match kind {
                IdealKind::Unsigned => extended_unchecked(&inputs[i], &inputs[j]).shadow(),
                IdealKind::Extended => extended_unchecked(&inputs[i], &inputs[j]),
            };
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
    }
    gens
}

/// Minimized ideal built from raw inputs and output labels.
pub fn build_ideal_from(n: usize, inputs: &[Point], outputs: &[u32], kind: IdealKind) -> Ideal {
    let gens = pair_generators(inputs, outputs, kind);
    let ideal = Ideal::new(kind.alphabet(), n, gens).expect("generators come from n-dimensional points");
    minimize_generators(&ideal)
}

/// `I` (unsigned) or `I^ext` (extended) of a data set, with a minimized generating set.
pub fn build_ideal(data: &DataSet, kind: IdealKind) -> Ideal {
    build_ideal_from(data.spec().n, data.inputs(), data.outputs(), kind)
}

/// The deduplicated but unminimized generator list of `build_ideal`.
pub fn raw_ideal(data: &DataSet, kind: IdealKind) -> Ideal {
    let gens = pair_generators(data.inputs(), data.outputs(), kind);
    Ideal::new(kind.alphabet(), data.spec().n, gens).expect("generators come from n-dimensional points")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateEntry {
    /// Index into the input set of the point taken to have the smaller output.
    pub low: usize,
    pub high: usize,
    pub monomial: Monomial,
}

/// Every extended monomial that some output assignment could contribute, with multiplicity:
/// both orderings of each pair of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateMultiset {
    pub entries: Vec<CandidateEntry>,
}

impl CandidateMultiset {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, m: Monomial) -> usize {
        self.entries.iter().filter(|e| e.monomial == m).count()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.entries.iter().map(|e| e.monomial)
    }
}

/// The multiset of `m^ext(s_i, s_j)` over all ordered pairs `i ≠ j` of `V`.
pub fn candidate_multiset(v: &InputSet) -> CandidateMultiset {
    let pts = v.points();
    let mut entries = Vec::with_capacity(pts.len() * pts.len().saturating_sub(1));
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate() {
            if i != j {
                entries.push(CandidateEntry { low: i, high: j, monomial: extended_unchecked(a, b) });
            }
        }
    }
    CandidateMultiset { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datamodel::{FieldSpec, LiteralSet};

    fn m(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    fn table_non_boolean() -> DataSet {
        let spec = FieldSpec::new(4, 3).unwrap();
        DataSet::new(spec, vec![(p([0, 2, 1]), 0), (p([1, 0, 3]), 0), (p([3, 0, 3]), 2), (p([2, 3, 0]), 3)]).unwrap()
    }

    #[test]
    fn unsigned_generator_examples() {
        assert_eq!(unsigned_generator(&p([0, 2, 1]), &p([3, 0, 3])).unwrap(), m("x1 x2 x3"));
        assert_eq!(unsigned_generator(&p([1, 0, 3]), &p([3, 0, 3])).unwrap(), m("x1"));
        assert_eq!(unsigned_generator(&p([0, 0]), &p([0, 1])).unwrap(), m("x2"));
        assert_eq!(unsigned_generator(&p([0, 1]), &p([0, 1])), Err(Error::EmptyMonomial));
    }

    #[test]
    fn extended_generator_examples() {
        let s1 = p([0, 1, 2, 1, 0]);
        let s3 = p([0, 1, 2, 1, 4]);
        let s4 = p([3, 0, 0, 0, 0]);
        let s5 = p([1, 1, 1, 1, 3]);
        assert_eq!(extended_generator(&s1, &s3).unwrap(), m("x5"));
        assert_eq!(extended_generator(&s4, &s5).unwrap(), m("!x1 x2 x3 x4 x5"));
        assert_eq!(extended_generator(&s3, &s5).unwrap(), m("x1 !x3 !x5"));
        assert_eq!(extended_generator(&s3, &s3), Err(Error::EmptyMonomial));
        assert_eq!(extended_generator(&s5, &s3).unwrap(), extended_generator(&s3, &s5).unwrap().conjugate());
    }

    #[test]
    fn pseudomonomial_rendering() {
        assert_eq!(render_pseudomonomial(&m("x1 !x3")), "(x1-1)(x3+1)");
        assert_eq!(render_pseudomonomial(&m("x2")), "(x2-1)");
        assert_eq!(render_pseudomonomial(&m("!x2")), "(x2+1)");
    }

    #[test]
    fn unsigned_ideal_of_non_boolean_table() {
        let d = table_non_boolean();
        let raw = raw_ideal(&d, IdealKind::Unsigned);
        let mut gens = raw.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec![m("x1"), m("x1 x2 x3")]);
        assert_eq!(build_ideal(&d, IdealKind::Unsigned).generators(), &[m("x1")]);
    }

    #[test]
    fn extended_ideal_of_non_boolean_table() {
        let d = table_non_boolean();
        let raw = raw_ideal(&d, IdealKind::Extended);
        let mut gens = raw.generators().to_vec();
        gens.sort();
        let mut want = vec![m("x1 !x2 x3"), m("x1 x2 !x3"), m("!x1 x2 !x3"), m("x1")];
        want.sort();
        assert_eq!(gens, want);
        let rendered: Vec<String> = want.iter().map(render_pseudomonomial).collect();
        assert!(rendered.contains(&"(x1-1)(x2+1)(x3-1)".to_string()));
        assert!(rendered.contains(&"(x1+1)(x2-1)(x3+1)".to_string()));
    }

    #[test]
    fn single_row_gives_zero_ideal() {
        let spec = FieldSpec::new(2, 2).unwrap();
        let d = DataSet::new(spec, vec![(p([0, 1]), 1)]).unwrap();
        assert!(build_ideal(&d, IdealKind::Extended).is_zero());
    }

    #[test]
    fn candidate_multiset_of_type3a_example() {
        let spec = FieldSpec::new(3, 3).unwrap();
        let v = InputSet::new(spec, vec![p([1, 0, 0]), p([1, 1, 0]), p([1, 2, 0]), p([1, 2, 2])]).unwrap();
        let mo = candidate_multiset(&v);
        assert_eq!(mo.len(), 12);
        assert_eq!(mo.count(m("x2")), 3);
        assert_eq!(mo.count(m("x2 x3")), 2);
        assert_eq!(mo.count(m("x3")), 1);
        assert_eq!(mo.count(m("!x2")), 3);
        assert_eq!(mo.count(m("!x2 !x3")), 2);
        assert_eq!(mo.count(m("!x3")), 1);
    }

    #[test]
    fn candidate_multiset_small_cases() {
        let spec = FieldSpec::new(2, 2).unwrap();
        let v = InputSet::new(spec, vec![p([0, 0]), p([0, 1])]).unwrap();
        let mut got: Vec<_> = candidate_multiset(&v).monomials().collect();
        got.sort();
        assert_eq!(got, vec![m("x2"), m("!x2")]);
        let single = InputSet::new(spec, vec![p([0, 0])]).unwrap();
        assert!(candidate_multiset(&single).is_empty());
    }

    #[test]
    fn candidate_multiset_f5_has_twenty_entries() {
        let spec = FieldSpec::new(5, 5).unwrap();
        let v = InputSet::new(
            spec,
            vec![p([0, 1, 2, 1, 0]), p([0, 1, 2, 1, 1]), p([0, 1, 2, 1, 4]), p([3, 0, 0, 0, 0]), p([1, 1, 1, 1, 3])],
        )
        .unwrap();
        // brute force: ordered pairs of distinct points
        let pts = v.points();
        let brute = pts.iter().flat_map(|a| pts.iter().filter(move |b| *b != a)).count();
        assert_eq!(brute, 20);
        assert_eq!(candidate_multiset(&v).len(), brute);
    }
}
