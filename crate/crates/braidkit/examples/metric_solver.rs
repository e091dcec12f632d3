//! Solving for the quantum metric in both gauges, and the degenerate classical case.

use braidkit::ncalg::{metric_square, render, Orientation, RelationSet};
use braidkit::qcoeff::QRat;
use braidkit::rtensor::{
    build_euclidean_gauge, build_minkowski_gauge, find_metric, standard_su2, PairData, RMatrix, Reality,
};

fn show(name: &str, pair: &PairData) -> Result<(), Box<dyn std::error::Error>> {
    let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
    match find_metric(pair, &rels) {
        Ok(eta) => {
            println!("{name}: lambda = {}", pair.lambda);
            for i in 1..=eta.n {
                let row: Vec<String> = (1..=eta.n).map(|j| eta.lower(i, j).to_string()).collect();
                println!("  eta_{i}. = [{}]", row.join(", "));
            }
            println!("  x.x = {}", render(&metric_square(&eta, &rels)?));
        }
        Err(e) => println!("{name}: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let su2 = standard_su2();
    show("euclidean", &build_euclidean_gauge(&su2)?)?;
    show("minkowski", &build_minkowski_gauge(&su2)?)?;
    let id = RMatrix::identity(2);
    show("identity", &PairData::new(id.clone(), id, QRat::one(), Reality::None)?)?;
    Ok(())
}
