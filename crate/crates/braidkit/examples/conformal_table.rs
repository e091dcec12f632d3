//! The c |> x table of the standard Euclidean-gauge spacetime, compared with the golden matrix.

use braidkit::actions::{compare_example_table, example_table, Context};
use braidkit::rtensor::{build_euclidean_gauge, standard_su2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Context::new(build_euclidean_gauge(&standard_su2())?)?;
    let names = ["a", "b", "c", "d"];
    for (g, row) in example_table(&ctx)?.iter().enumerate() {
        for (k, p) in row.iter().enumerate() {
            println!("c{} |> {} = {p}", g + 1, names[k]);
        }
    }
    let cmp = compare_example_table(&ctx)?;
    println!(
        "matches: {}/{} with generators on rows, {}/{} on columns",
        cmp.generator_rows, cmp.total, cmp.coordinate_rows, cmp.total
    );
    for (r, c, got, want) in &cmp.mismatches {
        println!("  ({r},{c}) computed {got}, table {want}");
    }
    Ok(())
}
