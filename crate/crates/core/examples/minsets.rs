//! Unsigned and signed min-sets of a data set.
//!
//! `cargo run --example minsets [file.json|file.csv]`; without a file, a small
//! four-state table is used.

use minset::cli::io::{parse_input, Input};
use minset::decompose::minsets;
use minset::ideals::{build_ideal, render_pseudomonomial, IdealKind};
use minset::{DataSet, FieldSpec, Point};

fn main() -> minset::Result<()> {
    let data = match std::env::args().nth(1) {
        Some(path) => match parse_input(path.as_ref(), None)? {
            Input::Data(d) => d,
            Input::Inputs(_) => return Err(minset::Error::Format("rows need outputs".into())),
        },
        None => DataSet::new(
            FieldSpec::new(4, 3)?,
            vec![
                (Point::from([0, 2, 1]), 0),
                (Point::from([1, 0, 3]), 0),
                (Point::from([3, 0, 3]), 2),
                (Point::from([2, 3, 0]), 3),
            ],
        )?,
    };

    println!("I     = {}", build_ideal(&data, IdealKind::Unsigned));
    let ext = build_ideal(&data, IdealKind::Extended);
    println!("I^ext = {ext}");
    let sgn: Vec<String> = ext.generators().iter().map(render_pseudomonomial).collect();
    println!("I^sgn = ⟨{}⟩", sgn.join(", "));

    let report = minsets(&data);
    for s in &report.unsigned_minsets {
        println!("unsigned min-set {s}");
    }
    if !report.signed_consistent {
        println!("no unate function fits these data");
    }
    for s in &report.signed_minsets {
        println!("signed min-set   {s}");
    }
    Ok(())
}
