//! Signed wiring diagram of a small Boolean network, printed as DOT.

use minset::oracle::{wiring_diagram, FunctionTable};
use minset::FieldSpec;

fn main() -> minset::Result<()> {
    let spec = FieldSpec::new(2, 3)?;
    let network = [
        FunctionTable::from_fn(spec, |x| x[1])?,
        FunctionTable::from_fn(spec, |x| x[0] & (1 - x[2]))?,
        FunctionTable::from_fn(spec, |x| x[0] | x[2])?,
    ];
    let wd = wiring_diagram(&network)?;
    for w in &wd.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", minset::cli::render::wiring_dot(&wd));
    Ok(())
}
