//! Coproducts, relations, module-algebra property, star structure and the conjugation identity.

use braidkit::actions::{Context, Generator};
use braidkit::hopf::{
    braided_exp_truncated, check_exp_inverse, check_star_involution, coproduct, verify_conjugation_identity,
    verify_hopf_axioms, verify_module_algebra_all, verify_relations,
};
use braidkit::rtensor::{build_euclidean_gauge, standard_su2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let degree: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let ctx = Context::new(build_euclidean_gauge(&standard_su2())?)?;
    println!("D c1 = {}", coproduct(&Generator::C(1), ctx.n()));
    println!("D p1 = {}", coproduct(&Generator::P(1), ctx.n()));
    let e = braided_exp_truncated(&ctx, 2)?;
    println!("exp to degree 2 has {} terms, its inverse {}", e.exp.len(), e.inv.len());
    for r in [
        verify_hopf_axioms(&ctx, 2),
        verify_relations(&ctx, degree),
        verify_module_algebra_all(&ctx, degree),
        check_star_involution(&ctx),
        check_exp_inverse(&ctx, &e, 2),
        verify_conjugation_identity(&ctx, 2),
    ] {
        println!("{r}");
    }
    Ok(())
}
