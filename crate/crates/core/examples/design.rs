//! Which experiment to run next so that the min-set becomes unique.

use minset::decompose::minsets;
use minset::design::suggest_extensions;
use minset::{DataSet, FieldSpec, Point};

fn main() -> minset::Result<()> {
    // data generated by f = x1 or not x3, which is unknown to the experimenter
    let f = |x: &[u32]| x[0] | (1 - x[2]);
    let spec = FieldSpec::new(2, 3)?;
    let rows = [[0, 0, 0], [1, 0, 0], [1, 0, 1], [0, 1, 1]].map(|c| (Point::from(c), f(&c)));
    let data = DataSet::new(spec, rows.to_vec())?;
    let before = minsets(&data);
    println!("signed min-sets now: {:?}", before.signed_minsets);

    let report = suggest_extensions(&data.input_set(), 2)?;
    for s in &report.suggestions {
        let pts: Vec<String> = s.added_points.iter().map(|p| p.to_string()).collect();
        println!("candidate experiment: {}", pts.join(" and "));
    }

    let next = &report.suggestions[0].added_points[0];
    let after = minsets(&data.with_row(next.clone(), f(next.coords()))?);
    println!("after measuring {next}: {:?}", after.signed_minsets);
    Ok(())
}
