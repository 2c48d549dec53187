//! One decomposition of the extended ideal, projected two ways.

use minset::decompose::{is_prime, minimal_transversals, project_signed, project_unsigned};
use minset::ideals::{build_ideal, IdealKind};
use minset::{DataSet, FieldSpec, Point};

fn main() -> minset::Result<()> {
    let data = DataSet::new(
        FieldSpec::new(5, 5)?,
        vec![
            (Point::from([0, 1, 2, 1, 0]), 0),
            (Point::from([0, 1, 2, 1, 1]), 0),
            (Point::from([0, 1, 2, 1, 4]), 1),
            (Point::from([3, 0, 0, 0, 0]), 3),
            (Point::from([1, 1, 1, 1, 3]), 4),
        ],
    )?;
    let ext = build_ideal(&data, IdealKind::Extended);
    println!("I^ext = {ext} (prime: {})", is_prime(&ext));

    let components = minimal_transversals(&ext)?;
    let shown: Vec<String> = components.iter().map(|c| c.to_string()).collect();
    println!("components of I^ext: {}", shown.join(" ∩ "));

    for c in project_unsigned(&components) {
        println!("unsigned {c}");
    }
    let (signed, consistent) = project_signed(&components);
    for c in signed {
        println!("signed   {c}");
    }
    println!("some unate function fits: {consistent}");
    Ok(())
}
