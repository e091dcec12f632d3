//! Relations of q-spacetime, normal words, reduction and the braided antipode.

use braidkit::ncalg::{braided_antipode, braiding, check_confluence, parse_ncpoly, render, Orientation, RelationSet};
use braidkit::rtensor::{build_euclidean_gauge, standard_su2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = build_euclidean_gauge(&standard_su2())?;
    let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
    for d in 0..=4 {
        println!("degree {d}: {} normal words", rels.normal_words(d).len());
    }
    println!("{}", check_confluence(&rels, 3));
    for s in ["x2.x1", "x4.x1", "x3.x2", "x4.x3.x2.x1"] {
        let p = parse_ncpoly(s)?;
        println!("{s} = {}", render(&rels.reduce(&p)));
    }
    let x1 = parse_ncpoly("x1")?;
    let x4 = parse_ncpoly("x4")?;
    println!("Psi(x4 (x) x1) has {} terms", braiding(&x4, &x1, &pair.r, &rels).len());
    let w = parse_ncpoly("x1.x4")?;
    println!("S(x1.x4) = {}", render(&braided_antipode(&w, &pair.r, &rels)));
    println!("S(x1) = {}", render(&braided_antipode(&x1, &pair.r, &rels)));
    Ok(())
}
