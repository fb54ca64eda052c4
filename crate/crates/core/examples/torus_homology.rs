//! Bigraded homology of T(2,m) from the reduced complex and from its
//! summands.

use sln_torus::knotcomplex::{
    bigraded_homology, build_torus_complex, decompose_summands, summand_homology, torus_homology,
};

fn main() {
    let (n, m) = (3, 5);
    let c = build_torus_complex(n, m).unwrap();
    let h = bigraded_homology(&c).unwrap();
    println!("KR_{n}(T(2,{m})) = {}", h.total());
    for (&(h, q), g) in h.iter() {
        println!("  h={h:<3} q={q:<4} {g}");
    }
    let descs = decompose_summands(n, m).unwrap();
    for d in &descs {
        println!("summand {:?} at h{:+} q{:+}", d.kind, d.h_shift, d.q_shift);
    }
    println!("summands agree: {}", summand_homology(n, &descs).unwrap() == h);
    println!("mirror: KR_{n}(T(2,-{m})) = {}", torus_homology(n, -m).unwrap().total());
}
