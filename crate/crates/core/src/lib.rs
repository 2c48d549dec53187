//! Reverse engineering of minimal wiring diagrams.
//!
//! Given input-output observations of one coordinate function over a finite grid of
//! states, this crate computes every unsigned and signed min-set (minimal wiring diagram)
//! from a single squarefree monomial ideal over the doubled alphabet
//! `{x_1, …, x_n, x̄_1, …, x̄_n}`, certifies when an input set yields a unique min-set for
//! every possible output assignment, and proposes additional experiments that guarantee
//! uniqueness. An exhaustive oracle over the model space cross-checks all of it.
//!
//! ```
//! use minset::{decompose, DataSet, FieldSpec, Point};
//!
//! let spec = FieldSpec::new(2, 3).unwrap();
//! let data = DataSet::new(spec, vec![
//!     (Point::from([1, 1, 1]), 0),
//!     (Point::from([0, 0, 0]), 0),
//!     (Point::from([1, 1, 0]), 1),
//! ]).unwrap();
//! let report = decompose::minsets(&data);
//! assert_eq!(report.signed_minsets.len(), 2);
//! ```

pub mod cli;
pub mod datamodel;
pub mod decompose;
pub mod design;
pub mod error;
pub mod ideals;
pub mod oracle;
pub mod uniqueness;

pub use datamodel::{
    apply_coordinate_maps, hamming_distance, validate_dataset, Alphabet, Component, DataSet, FieldSpec, Ideal,
    InputSet, Literal, LiteralSet, MinSetReport, Monomial, Point, Polarity,
};
pub use error::{Error, Result};
