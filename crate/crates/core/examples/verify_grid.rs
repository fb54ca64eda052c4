//! All consistency checks over a grid, without going through the binary.

use sln_torus::cli::{verify_grid, Format, RunConfig};

fn main() {
    let config = RunConfig {
        n_range: 2..=6,
        m_range: -8..=8,
        output_format: Format::Table,
        emit_bigrading: false,
        dump_matrices: false,
        output_path: None,
    };
    let summary = verify_grid(&config, None).unwrap();
    println!("{} checks, {} passed, {} failed", summary.total, summary.passed, summary.failed);
    for r in summary.results.iter().filter(|r| !r.passed) {
        println!("  N={} m={} {}: {}", r.n, r.m, r.check, r.detail);
    }
}
