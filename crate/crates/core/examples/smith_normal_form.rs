//! Smith normal form with transforms, and the groups it reads off.

use sln_torus::zlinalg::{homology_at, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let d = smith_normal_form(&m);
    println!("M = {m:?}");
    println!("S = {:?}", d.s);
    println!("U M V == S: {}", &(&d.u * &m) * &d.v == d.s);
    println!("det U = {}, det V = {}", d.u.determinant(), d.v.determinant());

    let coker = homology_at(&m, &IntMatrix::zeros(0, 3)).unwrap();
    println!("coker M = {coker}");
}
