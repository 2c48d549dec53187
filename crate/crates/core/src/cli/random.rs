//! Seeded random instances.

use rand::seq::index::sample;
use rand::Rng;

use crate::datamodel::{DataSet, FieldSpec, InputSet};
use crate::error::{Error, Result};

/// `size` distinct inputs drawn uniformly without replacement.
pub fn random_input_set(rng: &mut impl Rng, spec: FieldSpec, size: usize) -> Result<InputSet> {
    let grid = spec
        .grid_size()
        .and_then(|g| usize::try_from(g).ok())
        .ok_or_else(|| Error::Capacity(format!("grid {}^{} is too large to sample", spec.q, spec.n)))?;
    if size > grid {
        return Err(Error::Validation(format!("cannot draw {size} distinct points from a grid of {grid}")));
    }
    let points = sample(rng, grid, size).into_iter().map(|i| spec.point_at(i as u128)).collect();
    InputSet::new(spec, points)
}

/// Random inputs as above, each with an output drawn uniformly from the states.
pub fn random_dataset(rng: &mut impl Rng, spec: FieldSpec, size: usize) -> Result<DataSet> {
    let grid = spec
        .grid_size()
        .and_then(|g| usize::try_from(g).ok())
        .ok_or_else(|| Error::Capacity(format!("grid {}^{} is too large to sample", spec.q, spec.n)))?;
    if size > grid {
        return Err(Error::Validation(format!("cannot draw {size} distinct points from a grid of {grid}")));
    }
    let rows = sample(rng, grid, size)
        .into_iter()
        .map(|i| (spec.point_at(i as u128), rng.gen_range(0..spec.q)))
        .collect();
    DataSet::new(spec, rows)
}
