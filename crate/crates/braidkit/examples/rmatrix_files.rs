//! Writing and reading R-matrix files, then running the file through the checks.

use braidkit::rtensor::{check_hecke, check_ybe, parse_rmatrix, standard_su2, Reality, RMatrixFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = RMatrixFile {
        matrix: standard_su2(),
        lambda: None,
        reality: Reality::None,
    };
    let json = file.to_json();
    println!("{json}");
    let back = parse_rmatrix(&json)?;
    println!("{}", check_ybe(&back.matrix));
    println!("{}", check_hecke(&back.matrix));
    match parse_rmatrix("{\"n\": 2, \"entries\": [") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("truncated file: {e}"),
    }
    Ok(())
}
