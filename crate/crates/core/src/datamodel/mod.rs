//! Value types shared by every other module: grids, points, data sets, literals and ideals.
//!
//! States are the integers `0..q` with their natural order. No field arithmetic is
//! performed anywhere; only the order of states matters.

mod ideal;
mod literal;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use ideal::{Alphabet, Ideal, MinSetReport};
pub use literal::{minimal_sets, Component, Literal, LiteralSet, Monomial, Polarity, MAX_VARS};

/// Number of states per variable and number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub q: u32,
    pub n: usize,
}

impl FieldSpec {
    pub fn new(q: u32, n: usize) -> Result<FieldSpec> {
        if q < 2 {
            return Err(Error::FieldSpec(format!("q must be at least 2, got {q}")));
        }
        if n == 0 || n > MAX_VARS {
            return Err(Error::FieldSpec(format!("n must lie in 1..={MAX_VARS}, got {n}")));
        }
        Ok(FieldSpec { q, n })
    }

    /// `q^n`, or `None` when it does not fit in 128 bits.
    pub fn grid_size(&self) -> Option<u128> {
        (self.q as u128).checked_pow(self.n as u32)
    }

    pub fn check_point(&self, p: &Point) -> std::result::Result<(), String> {
        if p.dim() != self.n {
            return Err(format!("expected {} coordinates, got {}", self.n, p.dim()));
        }
        if let Some((i, v)) = p.coords().iter().enumerate().find(|(_, &v)| v >= self.q) {
            return Err(format!("coordinate {} = {v} is outside 0..{}", i + 1, self.q));
        }
        Ok(())
    }

    pub fn is_corner(&self, p: &Point) -> bool {
        p.coords().iter().all(|&v| v == 0 || v == self.q - 1)
    }

    /// The grid point with the given lexicographic index (first coordinate most significant).
    pub fn point_at(&self, mut index: u128) -> Point {
        let q = self.q as u128;
        let mut coords = vec![0u32; self.n];
        for c in coords.iter_mut().rev() {
            *c = (index % q) as u32;
            index /= q;
        }
        Point(coords)
    }

    pub fn index_of(&self, p: &Point) -> u128 {
        p.coords().iter().fold(0u128, |acc, &v| acc * self.q as u128 + v as u128)
    }

    /// All grid points in lexicographic order. Callers guard the grid size.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let size = self.grid_size().unwrap_or(u128::MAX);
        (0..size).map(move |i| self.point_at(i))
    }
}

/// A grid point; coordinates are states in `0..q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<u32>);

impl Point {
    pub fn new(coords: Vec<u32>) -> Point {
        Point(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Hamming distance without the dimension check.
    pub fn distance(&self, other: &Point) -> usize {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl From<Vec<u32>> for Point {
    fn from(coords: Vec<u32>) -> Point {
        Point(coords)
    }
}

impl<const N: usize> From<[u32; N]> for Point {
    fn from(coords: [u32; N]) -> Point {
        Point(coords.to_vec())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Number of coordinates in which two points differ.
pub fn hamming_distance(p: &Point, r: &Point) -> Result<usize> {
    if p.dim() != r.dim() {
        return Err(Error::Dimension { expected: p.dim(), found: r.dim() });
    }
    Ok(p.distance(r))
}

/// A set of distinct inputs, kept sorted so equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InputSet {
    spec: FieldSpec,
    points: Vec<Point>,
}

impl InputSet {
    /// Validates every point; duplicates collapse.
    pub fn new(spec: FieldSpec, points: Vec<Point>) -> Result<InputSet> {
        for (i, p) in points.iter().enumerate() {
            spec.check_point(p).map_err(|detail| Error::Range { row: i + 1, detail })?;
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(InputSet { spec, points })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// `V ∪ extra`.
    pub fn extended(&self, extra: &[Point]) -> Result<InputSet> {
        let mut pts = self.points.clone();
        pts.extend_from_slice(extra);
        InputSet::new(self.spec, pts)
    }
}

/// Applies one bijection of `0..q` per coordinate to every point of `V`.
pub fn apply_coordinate_maps(v: &InputSet, maps: &[Vec<u32>]) -> Result<InputSet> {
    let spec = v.spec();
    if maps.len() != spec.n {
        return Err(Error::Dimension { expected: spec.n, found: maps.len() });
    }
    for (i, map) in maps.iter().enumerate() {
        let mut seen = vec![false; spec.q as usize];
        let bijective = map.len() == spec.q as usize
            && map.iter().all(|&z| z < spec.q && !std::mem::replace(&mut seen[z as usize], true));
        if !bijective {
            return Err(Error::Validation(format!(
                "map for coordinate {} is not a bijection on 0..{}",
                i + 1,
                spec.q
            )));
        }
    }
    let points = v
        .points()
        .iter()
        .map(|p| Point(p.coords().iter().zip(maps).map(|(&z, m)| m[z as usize]).collect()))
        .collect();
    InputSet::new(spec, points)
}

/// Input-output observations of one coordinate function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataSet {
    spec: FieldSpec,
    inputs: Vec<Point>,
    outputs: Vec<u32>,
}

/// Checks ranges and that no input appears twice with different outputs.
pub fn validate_dataset(spec: FieldSpec, rows: &[(Point, u32)]) -> Result<()> {
    let mut first_seen: HashMap<&Point, (usize, u32)> = HashMap::new();
    for (i, (input, output)) in rows.iter().enumerate() {
        let row = i + 1;
        spec.check_point(input).map_err(|detail| Error::Range { row, detail })?;
        if *output >= spec.q {
            return Err(Error::Range {
                row,
                detail: format!("output {output} is outside 0..{}", spec.q),
            });
        }
        match first_seen.get(input) {
            Some(&(first, t)) if t != *output => {
                return Err(Error::ContradictoryData { row, first });
            }
            Some(_) => {}
            None => {
                first_seen.insert(input, (row, *output));
            }
        }
    }
    Ok(())
}

impl DataSet {
    /// Validates the rows; repeated inputs with equal outputs are merged.
    pub fn new(spec: FieldSpec, rows: Vec<(Point, u32)>) -> Result<DataSet> {
        validate_dataset(spec, &rows)?;
        let mut inputs = Vec::with_capacity(rows.len());
        let mut outputs = Vec::with_capacity(rows.len());
        for (p, t) in rows {
            if !inputs.contains(&p) {
                inputs.push(p);
                outputs.push(t);
            }
        }
        Ok(DataSet { spec, inputs, outputs })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn inputs(&self) -> &[Point] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[u32] {
        &self.outputs
    }

    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Point, u32)> {
        self.inputs.iter().zip(self.outputs.iter().copied())
    }

    pub fn input_set(&self) -> InputSet {
        InputSet::new(self.spec, self.inputs.clone()).expect("inputs were validated")
    }

    pub fn with_row(&self, input: Point, output: u32) -> Result<DataSet> {
        let mut rows: Vec<_> = self.rows().map(|(p, t)| (p.clone(), t)).collect();
        rows.push((input, output));
        DataSet::new(self.spec, rows)
    }
}
