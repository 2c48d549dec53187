//! Primary decomposition of squarefree monomial ideals and the projections of the
//! extended decomposition onto unsigned and signed min-sets.
//!
//! The prime components of a squarefree monomial ideal are the ideals generated by the
//! minimal transversals of its generator supports. Decomposing `I^ext` once yields both
//! kinds of min-sets: dropping bars gives the components of `I`, and discarding every
//! component that holds a variable together with its bar gives the components of `I^sgn`.

use crate::datamodel::{minimal_sets, Alphabet, Component, DataSet, Ideal, LiteralSet, MinSetReport, Monomial, Point};
use crate::error::{Error, Result};
use crate::ideals::{build_ideal_from, pair_generators, IdealKind};

/// Default refusal threshold for [`baseline_signed_decomposition`].
pub const BASELINE_CAP: u64 = 10_000_000;

/// Drops every generator divisible by another one. Idempotent.
pub fn minimize_generators(ideal: &Ideal) -> Ideal {
    ideal.with_generators(minimal_sets(ideal.generators().iter().copied()))
}

/// Primality test: every multivariate generator has a univariate generator dividing it.
///
/// Valid for any generating set. The zero ideal counts as prime; the unit ideal does not.
pub fn is_prime(ideal: &Ideal) -> bool {
    if ideal.is_unit() {
        return false;
    }
    let univariate: LiteralSet = ideal
        .generators()
        .iter()
        .filter(|g| g.is_univariate())
        .fold(LiteralSet::EMPTY, |acc, g| acc.union(*g));
    ideal.generators().iter().all(|g| g.degree() <= 1 || g.intersects(univariate))
}

/// Inclusion-minimal literal sets meeting every generator, canonically sorted.
///
/// Generators are absorbed one at a time while an antichain of partial transversals is
/// maintained. The zero ideal has the single empty transversal.
pub fn minimal_transversals(ideal: &Ideal) -> Result<Vec<Component>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut gens: Vec<u128> = minimal_sets(ideal.generators().iter().copied()).iter().map(|g| g.bits()).collect();
    gens.sort_by_key(|g| g.count_ones());

    let mut acc: Vec<u128> = vec![0];
    for g in gens {
        let (hit, miss): (Vec<u128>, Vec<u128>) = acc.into_iter().partition(|t| t & g != 0);
        let mut fresh: Vec<u128> = Vec::new();
        for t in miss {
            let mut rest = g;
            while rest != 0 {
                let lit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let c = t | lit;
                if !hit.iter().any(|h| h & !c == 0) {
                    fresh.push(c);
                }
            }
        }
        fresh.sort_by_key(|c| (c.count_ones(), *c));
        fresh.dedup();
        let mut next = hit;
        let start = next.len();
        for c in fresh {
            if !next[start..].iter().any(|k| k & !c == 0) {
                next.push(c);
            }
        }
        acc = next;
    }
    let mut out: Vec<Component> = acc.into_iter().map(LiteralSet::from_bits).collect();
    out.sort();
    Ok(out)
}

/// Components of `I` from those of `I^ext`: drop bars, then drop redundant components.
pub fn project_unsigned(components: &[Component]) -> Vec<Component> {
    minimal_sets(components.iter().map(|c| c.shadow()))
}

/// Components of `I^sgn` from those of `I^ext`.
///
/// A component holding both `x_k` and `x̄_k` becomes the whole ring and is discarded. The
/// flag is false when nothing survives from a nonempty input, i.e. no unate function fits.
pub fn project_signed(components: &[Component]) -> (Vec<Component>, bool) {
    let kept = minimal_sets(components.iter().copied().filter(|c| !c.is_conflicted()));
    let consistent = !(kept.is_empty() && !components.is_empty());
    (kept, consistent)
}

/// Prime components of `I^ext` for raw inputs and output labels.
pub fn extended_components(n: usize, inputs: &[Point], outputs: &[u32]) -> Vec<Component> {
    let ideal = build_ideal_from(n, inputs, outputs, IdealKind::Extended);
    minimal_transversals(&ideal).expect("distinct inputs never produce the unit monomial")
}

/// Min-sets for raw inputs and output labels; labels are only compared, never range-checked.
pub fn minsets_from(n: usize, inputs: &[Point], outputs: &[u32]) -> MinSetReport {
    let components = extended_components(n, inputs, outputs);
    let unsigned_minsets = project_unsigned(&components);
    let (signed_minsets, signed_consistent) = project_signed(&components);
    let report = MinSetReport { unsigned_minsets, signed_minsets, signed_consistent };
    debug_assert!(shadow_violations(&report).is_empty(), "signed min-set without an unsigned min-set in its shadow");
    report
}

/// All unsigned and signed min-sets of a data set from one decomposition of `I^ext`.
pub fn minsets(data: &DataSet) -> MinSetReport {
    minsets_from(data.spec().n, data.inputs(), data.outputs())
}

/// Signed min-sets whose bar-dropped shadow contains no unsigned min-set. Always empty
/// for reports produced by [`minsets`].
pub fn shadow_violations(report: &MinSetReport) -> Vec<LiteralSet> {
    report
        .signed_minsets
        .iter()
        .copied()
        .filter(|w| !report.unsigned_minsets.iter().any(|u| u.is_subset(w.shadow())))
        .collect()
}

/// True iff some generator divides `m`.
pub fn contains_monomial(ideal: &Ideal, m: &Monomial) -> bool {
    ideal.generators().iter().any(|g| g.divides(*m))
}

/// Slow signed decomposition used as the benchmark comparator.
///
/// Works on the raw pseudomonomial generators of `I^sgn` (no minimization) and walks the
/// product of their factor choices depth first: a generator already met by the partial
/// choice is passed over, otherwise each of its factors is tried in turn. Complete choice
/// sets mixing `x_k - 1` and `x_k + 1` are discarded at the leaves and the survivors
/// reduced to the inclusion-minimal ones. Refuses once more than `cap` complete choice
/// sets have been produced.
pub fn baseline_signed_decomposition(data: &DataSet, cap: u64) -> Result<Vec<Component>> {
    let gens: Vec<u128> = pair_generators(data.inputs(), data.outputs(), IdealKind::Extended)
        .iter()
        .map(|g| g.bits())
        .collect();

    struct Walk<'a> {
        gens: &'a [u128],
        leaves: u64,
        cap: u64,
        found: Vec<u128>,
    }

    impl Walk<'_> {
        fn go(&mut self, depth: usize, chosen: u128) -> Result<()> {
            if depth == self.gens.len() {
                self.leaves += 1;
                if self.leaves > self.cap {
                    return Err(Error::Capacity(format!(
                        "baseline decomposition exceeded {} choice sets",
                        self.cap
                    )));
                }
                if !LiteralSet::from_bits(chosen).is_conflicted() {
                    self.found.push(chosen);
                }
                return Ok(());
            }
            let g = self.gens[depth];
            if chosen & g != 0 {
                return self.go(depth + 1, chosen);
            }
            let mut rest = g;
            while rest != 0 {
                let lit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                self.go(depth + 1, chosen | lit)?;
            }
            Ok(())
        }
    }

    let mut walk = Walk { gens: &gens, leaves: 0, cap, found: Vec::new() };
    walk.go(0, 0)?;
    Ok(minimal_sets(walk.found.into_iter().map(LiteralSet::from_bits)))
}

/// Decomposition of the unsigned ideal built directly, without the extended detour.
pub fn direct_unsigned_components(data: &DataSet) -> Vec<Component> {
    let ideal = build_ideal_from(data.spec().n, data.inputs(), data.outputs(), IdealKind::Unsigned);
    debug_assert_eq!(ideal.alphabet(), Alphabet::Plain);
    minimal_transversals(&ideal).expect("distinct inputs never produce the unit monomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datamodel::FieldSpec;

    fn m(s: &str) -> LiteralSet {
        s.parse().unwrap()
    }

    fn sets(list: &[&str]) -> Vec<LiteralSet> {
        let mut v: Vec<LiteralSet> = list.iter().map(|s| m(s)).collect();
        v.sort();
        v
    }

    fn ideal(alphabet: Alphabet, n: usize, gens: &[&str]) -> Ideal {
        Ideal::new(alphabet, n, gens.iter().map(|s| m(s)).collect()).unwrap()
    }

    fn p<const N: usize>(c: [u32; N]) -> Point {
        Point::from(c)
    }

    fn f5_ideal() -> Ideal {
        ideal(
            Alphabet::Extended,
            5,
            &["x5", "x1 !x3 x5", "x1 !x2 !x3 !x4 !x5", "x1 !x2 !x3 !x4", "!x1 x2 x3 x4 x5", "x1 !x3 !x5"],
        )
    }

    #[test]
    fn minimize_examples() {
        let i = ideal(Alphabet::Plain, 3, &["x1 x2 x3", "x1"]);
        assert_eq!(minimize_generators(&i).generators(), &[m("x1")]);
        let f5 = minimize_generators(&f5_ideal());
        assert_eq!(f5.generators(), sets(&["x5", "x1 !x3 !x5", "x1 !x2 !x3 !x4"]).as_slice());
        assert_eq!(minimize_generators(&f5), f5);
    }

    #[test]
    fn primality() {
        assert!(is_prime(&ideal(Alphabet::Plain, 1, &["x1"])));
        assert!(!is_prime(&ideal(Alphabet::Plain, 3, &["x1 x2", "x2 x3"])));
        assert!(is_prime(&ideal(Alphabet::Plain, 3, &[])));
        assert!(is_prime(&ideal(Alphabet::Plain, 3, &["x1 x2", "x2"])));
        assert!(!is_prime(&Ideal::new(Alphabet::Plain, 2, vec![LiteralSet::EMPTY]).unwrap()));
    }

    #[test]
    fn transversal_examples() {
        let xy_yz = ideal(Alphabet::Plain, 3, &["x1 x2", "x2 x3"]);
        assert_eq!(minimal_transversals(&xy_yz).unwrap(), sets(&["x2", "x1 x3"]));
        assert_eq!(
            minimal_transversals(&f5_ideal()).unwrap(),
            sets(&["x1 x5", "!x3 x5", "!x2 !x5 x5", "!x4 !x5 x5"])
        );
        assert_eq!(minimal_transversals(&ideal(Alphabet::Plain, 1, &["x1"])).unwrap(), sets(&["x1"]));
        assert_eq!(minimal_transversals(&ideal(Alphabet::Plain, 2, &[])).unwrap(), vec![LiteralSet::EMPTY]);
        let unit = Ideal::new(Alphabet::Plain, 2, vec![LiteralSet::EMPTY]).unwrap();
        assert_eq!(minimal_transversals(&unit), Err(Error::UnitIdeal));
    }

    #[test]
    fn projections() {
        let f5 = minimal_transversals(&f5_ideal()).unwrap();
        assert_eq!(project_unsigned(&f5), sets(&["x1 x5", "x3 x5", "x2 x5", "x4 x5"]));
        assert_eq!(project_signed(&f5), (sets(&["x1 x5", "!x3 x5"]), true));

        let a = sets(&["x2", "x1 !x1 x3 !x3"]);
        assert_eq!(project_unsigned(&a), sets(&["x2", "x1 x3"]));
        assert_eq!(project_signed(&a), (sets(&["x2"]), true));

        let b = sets(&["x2 !x2", "x1 x2", "x2 x3"]);
        assert_eq!(project_unsigned(&b), sets(&["x2"]));
        assert_eq!(project_signed(&b), (sets(&["x1 x2", "x2 x3"]), true));

        assert_eq!(project_signed(&sets(&["x2 !x2"])), (vec![], false));
        assert_eq!(project_signed(&[]), (vec![], true));
    }

    #[test]
    fn minsets_examples() {
        let spec = FieldSpec::new(4, 3).unwrap();
        let d = DataSet::new(spec, vec![(p([0, 2, 1]), 0), (p([1, 0, 3]), 0), (p([3, 0, 3]), 2), (p([2, 3, 0]), 3)])
            .unwrap();
        let r = minsets(&d);
        assert_eq!(r.unsigned_minsets, sets(&["x1"]));
        assert_eq!(r.signed_minsets, sets(&["x1 !x3", "x1 x2"]));
        assert!(r.signed_consistent);

        let spec2 = FieldSpec::new(2, 3).unwrap();
        let ex1 = DataSet::new(spec2, vec![(p([1, 1, 1]), 0), (p([0, 0, 0]), 0), (p([1, 1, 0]), 1)]).unwrap();
        let r = minsets(&ex1);
        assert_eq!(r.unsigned_minsets, sets(&["x1 x3", "x2 x3"]));
        assert_eq!(r.signed_minsets, sets(&["x1 !x3", "x2 !x3"]));

        let constant = DataSet::new(spec2, vec![(p([1, 1, 1]), 1), (p([0, 0, 0]), 1)]).unwrap();
        let r = minsets(&constant);
        assert_eq!(r.unsigned_minsets, vec![LiteralSet::EMPTY]);
        assert_eq!(r.signed_minsets, vec![LiteralSet::EMPTY]);
        assert!(r.signed_consistent);
    }

    #[test]
    fn baseline_examples() {
        let spec = FieldSpec::new(4, 3).unwrap();
        let d = DataSet::new(spec, vec![(p([0, 2, 1]), 0), (p([1, 0, 3]), 0), (p([3, 0, 3]), 2), (p([2, 3, 0]), 3)])
            .unwrap();
        assert_eq!(baseline_signed_decomposition(&d, BASELINE_CAP).unwrap(), sets(&["x1 !x3", "x1 x2"]));

        let spec2 = FieldSpec::new(2, 2).unwrap();
        let single = DataSet::new(spec2, vec![(p([0, 0]), 0), (p([0, 1]), 1)]).unwrap();
        assert_eq!(baseline_signed_decomposition(&single, BASELINE_CAP).unwrap(), sets(&["x2"]));
        assert!(matches!(baseline_signed_decomposition(&d, 1), Err(Error::Capacity(_))));
    }

    #[test]
    fn membership() {
        let i = ideal(Alphabet::Plain, 3, &["x1"]);
        assert!(contains_monomial(&i, &m("x1 x2 x3")));
        assert!(!contains_monomial(&i, &m("x2 x3")));
        assert!(!contains_monomial(&ideal(Alphabet::Plain, 3, &[]), &m("x1")));
    }
}
