//! Quantum integers and binomials as exact Laurent polynomials.

use sln_torus::laurent::{qbinom, qint, LaurentPoly};

fn main() {
    for n in 0..=5 {
        println!("[{n}] = {}", qint(n));
    }
    println!("[4 choose 2] = {}", qbinom(4, 2));
    println!("[4 choose 2] at q=1: {}", qbinom(4, 2).eval_at_one());

    // [n] (q - q^-1) = q^n - q^-n
    let denom = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    println!("[5](q - q^-1) = {}", &qint(5) * &denom);
    println!("{}", serde_json::to_string(&qint(3)).unwrap());
}
