//! The sl(N) polynomial by skein expansion against the Euler characteristic
//! of the homology.

use sln_torus::knotcomplex::{torus_homology, EulerCharacteristic};
use sln_torus::moy::{ladder_poly, sln_polynomial};

fn main() {
    let n = 2;
    for j in 0..=3 {
        println!("ladder with {j} rungs: {}", ladder_poly(n, j).unwrap());
    }
    for m in -3..=4 {
        let p = sln_polynomial(n, m).unwrap();
        let chi = torus_homology(n, m).unwrap().euler_characteristic();
        println!("m={m:>2}: {p}  (euler char matches: {})", p == chi);
    }
}
