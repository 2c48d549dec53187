//! Choosing extra experiments so that the min-sets become unique whatever the outputs.

use serde::{Deserialize, Serialize};

use crate::datamodel::{InputSet, Point};
use crate::error::{Error, Result};
use crate::uniqueness::is_cylindrically_connected;

/// Largest grid the recommender will scan for candidate points.
pub const GRID_CAP: u128 = 1 << 20;
/// Largest number of candidate subsets the recommender will test.
pub const SUBSET_CAP: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suggestion {
    pub added_points: Vec<Point>,
    pub resulting_unique: bool,
    /// Fewest added points first, then lexicographic on the sorted points.
    pub rank_key: (usize, Vec<Point>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    /// Cylindrical connectivity pins down both the unsigned and the signed min-set.
    UnsignedAndSigned,
    /// Only the unsigned min-set is guaranteed unique; signed uniqueness is open.
    UnsignedOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub already_unique: bool,
    pub guarantee: Guarantee,
    pub suggestions: Vec<Suggestion>,
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All sets of at most `k` new points that make `v` cylindrically connected, smallest
/// first and lexicographic within a size. A set is skipped when it contains a smaller
/// suggestion.
pub fn suggest_extensions(v: &InputSet, k: usize) -> Result<DesignReport> {
    if k == 0 {
        return Err(Error::Validation("k must be at least 1".into()));
    }
    let spec = v.spec();
    let guarantee = if spec.q == 2 { Guarantee::UnsignedAndSigned } else { Guarantee::UnsignedOnly };
    if is_cylindrically_connected(v).connected {
        return Ok(DesignReport { already_unique: true, guarantee, suggestions: Vec::new() });
    }
    let grid = spec
        .grid_size()
        .filter(|&g| g <= GRID_CAP)
        .ok_or_else(|| Error::Capacity(format!("grid {}^{} exceeds {GRID_CAP} points", spec.q, spec.n)))?;
    let candidates: Vec<Point> = spec.points().filter(|p| !v.contains(p)).collect();
    let k = k.min(candidates.len());
    let subsets: u128 = (1..=k as u128).map(|s| binomial(candidates.len() as u128, s)).fold(0, u128::saturating_add);
    if subsets > SUBSET_CAP {
        return Err(Error::Capacity(format!(
            "{subsets} candidate subsets of the {} free points exceed {SUBSET_CAP}",
            grid - v.len() as u128
        )));
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut suggestions = Vec::new();
    for size in 1..=k {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let covers_smaller = found.iter().any(|f| f.iter().all(|i| idx.contains(i)));
            if !covers_smaller {
                let added: Vec<Point> = idx.iter().map(|&i| candidates[i].clone()).collect();
                if verify_extension(v, &added)? {
                    found.push(idx.clone());
                    suggestions.push(Suggestion {
                        rank_key: (size, added.clone()),
                        added_points: added,
                        resulting_unique: true,
                    });
                }
            }
            // next combination in lexicographic order
            let Some(pos) = (0..size).rev().find(|&i| idx[i] < candidates.len() - size + i) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(DesignReport { already_unique: false, guarantee, suggestions })
}

/// Whether adding `extra` makes the inputs cylindrically connected.
pub fn verify_extension(v: &InputSet, extra: &[Point]) -> Result<bool> {
    if let Some(p) = extra.iter().find(|p| v.contains(p)) {
        return Err(Error::Validation(format!("{p} is already an input")));
    }
    Ok(is_cylindrically_connected(&v.extended(extra)?).connected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datamodel::FieldSpec;

    fn input_set(q: u32, pts: &[&[u32]]) -> InputSet {
        let spec = FieldSpec::new(q, pts[0].len()).unwrap();
        InputSet::new(spec, pts.iter().map(|c| Point::new(c.to_vec())).collect()).unwrap()
    }

    fn added(r: &DesignReport) -> Vec<Vec<Point>> {
        r.suggestions.iter().map(|s| s.added_points.clone()).collect()
    }

    #[test]
    fn cube() {
        let v = input_set(2, &[&[0, 0, 0], &[1, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
        let r = suggest_extensions(&v, 1).unwrap();
        assert!(!r.already_unique);
        assert_eq!(r.guarantee, Guarantee::UnsignedAndSigned);
        assert_eq!(added(&r), vec![vec![Point::from([0, 0, 1])]]);
        assert!(verify_extension(&v, &[Point::from([0, 0, 1])]).unwrap());
        assert!(!verify_extension(&v, &[Point::from([1, 1, 0])]).unwrap());
        assert!(verify_extension(&v, &[Point::from([0, 0, 0])]).is_err());
    }

    #[test]
    fn plane() {
        let v = input_set(3, &[&[0, 0], &[2, 0], &[1, 2]]);
        let r = suggest_extensions(&v, 1).unwrap();
        assert_eq!(r.guarantee, Guarantee::UnsignedOnly);
        let want: Vec<Vec<Point>> = [[0, 2], [1, 0], [2, 2]].into_iter().map(|c| vec![Point::from(c)]).collect();
        assert_eq!(added(&r), want);
    }

    #[test]
    fn larger_budgets_skip_supersets() {
        let v = input_set(2, &[&[0, 0, 0], &[1, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
        let r = suggest_extensions(&v, 2).unwrap();
        assert_eq!(r.suggestions[0].added_points, vec![Point::from([0, 0, 1])]);
        for s in &r.suggestions[1..] {
            assert_eq!(s.added_points.len(), 2);
            assert!(!s.added_points.contains(&Point::from([0, 0, 1])));
            assert!(verify_extension(&v, &s.added_points).unwrap());
        }
        let keys: Vec<_> = r.suggestions.iter().map(|s| s.rank_key.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn connected_input() {
        let v = input_set(2, &[&[0, 0], &[0, 1]]);
        let r = suggest_extensions(&v, 1).unwrap();
        assert!(r.already_unique);
        assert!(r.suggestions.is_empty());
        assert!(verify_extension(&v, &[]).unwrap());
        assert!(suggest_extensions(&v, 0).is_err());
    }

    #[test]
    fn single_point_completeness() {
        let v = input_set(3, &[&[0, 0], &[2, 0], &[1, 2]]);
        let r = suggest_extensions(&v, 1).unwrap();
        for p in v.spec().points().filter(|p| !v.contains(p)) {
            let listed = r.suggestions.iter().any(|s| s.added_points == vec![p.clone()]);
            assert_eq!(listed, verify_extension(&v, &[p]).unwrap());
        }
    }
}
