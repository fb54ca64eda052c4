//! Components of the representation space and the comparison with
//! homology.

use sln_torus::repspace::{compare, components, total_cohomology};

fn main() {
    let n = 3;
    for m in 0..=6 {
        let kinds: Vec<String> = components(n, m).unwrap().iter().map(|c| format!("{:?}", c.kind)).collect();
        let report = compare(n, m).unwrap();
        println!(
            "m={m}: {:<18} H* = {:<16} KR = {:<16} isomorphic: {}",
            kinds.join(" + "),
            total_cohomology(n, m).unwrap().total(),
            report.kr_total,
            report.isomorphic
        );
    }
    println!("{}", serde_json::to_string_pretty(&compare(2, 4).unwrap()).unwrap());
}
