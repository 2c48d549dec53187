//! Will every possible output give a unique min-set? Certificates for a few input sets.

use minset::uniqueness::{certify, find_unsigned_ambiguity, DEFAULT_MAX_POINTS};
use minset::{FieldSpec, InputSet, Point};

fn inputs(q: u32, pts: &[&[u32]]) -> minset::Result<InputSet> {
    InputSet::new(FieldSpec::new(q, pts[0].len())?, pts.iter().map(|p| Point::new(p.to_vec())).collect())
}

fn main() -> minset::Result<()> {
    let sets = [
        ("line with a corner", inputs(3, &[&[1, 0, 0], &[1, 1, 0], &[1, 2, 0], &[1, 2, 2]])?),
        ("plane with a centre point", inputs(3, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]])?),
        ("four points of the cube", inputs(2, &[&[0, 0, 0], &[1, 0, 0], &[1, 0, 1], &[0, 1, 1]])?),
    ];
    for (name, v) in &sets {
        println!("== {name}");
        print!("{}", minset::cli::render::certificate_text(&certify(v, DEFAULT_MAX_POINTS)));
        if let Some(t) = find_unsigned_ambiguity(v, DEFAULT_MAX_POINTS)? {
            println!("outputs {t:?} give more than one unsigned min-set");
        }
    }
    Ok(())
}
