//! Exact arithmetic in Q(q): parsing, field operations, q = 1 limits and exact quotients.

use braidkit::qcoeff::{parse_qrat, QRat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_qrat("(q^2+1)/(q-1)")?;
    let b = parse_qrat("q^-1 - q")?;
    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("a / b = {}", a.checked_div(&b)?);
    let m3 = &(QRat::one() - QRat::q_pow(6)) / &QRat::qdiff();
    println!("(1 - q^6)/(q - q^-1) = {m3}, at q=1: {}", m3.eval_q1()?);
    let qn = QRat::q_pow(4) - QRat::q_pow(-4);
    println!("(q^4 - q^-4)/(q - q^-1) = {}", qn.div_qdiff_exact()?);
    match a.eval_q1() {
        Ok(v) => println!("a at q=1 = {v}"),
        Err(e) => println!("a at q=1: {e}"),
    }
    Ok(())
}
