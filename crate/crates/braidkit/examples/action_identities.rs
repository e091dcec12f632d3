//! Operator identities of the spacetime action: cross relations, two c paths, intertwining,
//! spinorial form, metric scaling and the Gaussian.

use braidkit::actions::{
    check_c_two_paths, check_intertwining, check_spinorial, verify_cross_relations, verify_gaussian,
    verify_metric_scaling, Context,
};
use braidkit::rtensor::{build_euclidean_gauge, standard_su2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let degree: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let ctx = Context::new(build_euclidean_gauge(&standard_su2())?)?;
    let reports = [
        verify_cross_relations(&ctx, degree),
        check_c_two_paths(&ctx, degree + 1),
        check_intertwining(&ctx, degree),
        check_spinorial(&ctx, 2),
        verify_metric_scaling(&ctx, 3),
        verify_gaussian(&ctx, 3),
    ];
    for r in &reports {
        println!("{r}");
        for n in &r.notes {
            println!("    {n}");
        }
    }
    Ok(())
}
