//! Ground truth by listing the model space, compared with the algebraic answer.

use minset::cli::compare_with_oracle;
use minset::oracle::{count_model_space, enumerate_model_space, COMPLETION_CAP};
use minset::{DataSet, FieldSpec, Point};

fn main() -> minset::Result<()> {
    let data = DataSet::new(
        FieldSpec::new(2, 3)?,
        vec![(Point::from([1, 1, 1]), 0), (Point::from([0, 0, 0]), 0), (Point::from([1, 1, 0]), 1)],
    )?;
    let count = count_model_space(&data);
    println!("functions fitting the data: {}^{}", count.base, count.exponent);

    let space = enumerate_model_space(&data, COMPLETION_CAP)?;
    println!("listed {} functions, {} of them unate", space.functions, space.unate_functions);
    println!("minimal supports: {:?}", space.unsigned_minsets);
    println!("minimal signed supports: {:?}", space.signed_minsets);

    let check = compare_with_oracle(&data, COMPLETION_CAP)?;
    println!("decomposition agrees with the oracle: {}", check.pass());
    Ok(())
}
