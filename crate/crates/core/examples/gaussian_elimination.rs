//! Cancelling unit entries of a differential without changing homology.

use sln_torus::zlinalg::{complex_homology, FreeChainComplex, IntMatrix};

fn main() {
    let d0 = IntMatrix::from_rows(&[[1, 0], [3, 2], [0, 0]]);
    let d1 = IntMatrix::from_rows(&[[0, 0, 5]]);
    let c = FreeChainComplex::new(0, vec![2, 3, 1], vec![d0, d1]).unwrap();
    let show = |label: &str, c: &FreeChainComplex| {
        let h = complex_homology(c).unwrap();
        let parts: Vec<String> = h.iter().map(|(p, g)| format!("H^{p} = {g}")).collect();
        println!("{label}: ranks {:?}, {}", c.positions().map(|p| c.rank_at(p)).collect::<Vec<_>>(), parts.join(", "));
    };
    show("before", &c);
    let once = c.gaussian_eliminate(0, 0, 0).unwrap();
    show("after one step", &once);
    show("after all units", &c.eliminate_all_units());
}
