mod common;

use std::time::{Duration, Instant};

use sln_torus::cohomring::{
    flag_ring, gysin_circle_ut, gysin_sphere_ut, product_cp_ring, pullback_matrix, GradedRing, RingElement,
};
use sln_torus::knotcomplex::{
    bigraded_homology, build_a_complex, build_torus_complex, decompose_summands, summand_homology, BigradedGroup,
    EulerCharacteristic,
};
use sln_torus::laurent::qint;
use sln_torus::moy::sln_polynomial;
use sln_torus::repspace::compare;
use sln_torus::zlinalg::AbGroup;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn table_entry(n: usize, m: i64) -> AbGroup {
    let t = n as i64;
    match m {
        1 => AbGroup::free(n),
        2 => AbGroup::free(n * n),
        3 => AbGroup::new(3 * n - 2, &[t]),
        4 => AbGroup::new(n * n + 2 * n - 2, &[t]),
        5 => AbGroup::new(5 * n - 4, &[t, t]),
        _ => unreachable!(),
    }
}

fn table_reproduction() -> Outcome {
    let t0 = Instant::now();
    for n in 2..=5 {
        for m in 1..=5 {
            let got = bigraded_homology(&build_torus_complex(n, m).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .total();
            if got != table_entry(n, m) {
                return Err(format!("N={n} m={m}: got {got}, expected {}", table_entry(n, m)));
            }
        }
    }
    let elapsed = t0.elapsed();
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("grid took {elapsed:?}"));
    }
    Ok(())
}

fn rep_space_isomorphism() -> Outcome {
    for n in 2..=5 {
        for m in 0..=8 {
            let r = compare(n, m).map_err(|e| e.to_string())?;
            if !r.isomorphic || r.kr_total != r.rep_total {
                return Err(format!("N={n} m={m}: {} vs {}", r.kr_total, r.rep_total));
            }
        }
    }
    Ok(())
}

fn two_pipelines() -> Outcome {
    for n in 2..=5 {
        for m in 1..=8 {
            let a =
                bigraded_homology(&build_torus_complex(n, m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let b = summand_homology(n, &decompose_summands(n, m).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("N={n} m={m}: tables differ"));
            }
        }
    }
    Ok(())
}

fn gysin_cross_check() -> Outcome {
    for n in 2..=8 {
        let circle = gysin_circle_ut(n).map_err(|e| e.to_string())?;
        let sphere = gysin_sphere_ut(n).map_err(|e| e.to_string())?;
        if circle != sphere {
            return Err(format!("N={n}: {circle:?} vs {sphere:?}"));
        }
        let expected = AbGroup::new(2 * n - 2, &[n as i64]);
        if circle.total() != expected {
            return Err(format!("N={n}: total {} != {expected}", circle.total()));
        }
    }
    Ok(())
}

fn euler_vs_skein() -> Outcome {
    for n in 2..=5 {
        for m in 1..=8 {
            let chi = build_torus_complex(n, m).map_err(|e| e.to_string())?.euler_characteristic();
            let skein = sln_polynomial(n, m).map_err(|e| e.to_string())?;
            if chi != skein {
                return Err(format!("N={n} m={m}: {chi} vs {skein}"));
            }
        }
    }
    for n in 2..=8 {
        if sln_polynomial(n, 1).map_err(|e| e.to_string())? != qint(n as u32) {
            return Err(format!("N={n}: T(2,1) is not [N]"));
        }
    }
    Ok(())
}

fn a_summand_placement() -> Outcome {
    for n in 2..=6usize {
        let t = n as i64;
        let mut expected = BigradedGroup::new();
        for q in (2 - 2 * t..=-2).step_by(2) {
            expected.insert_sum(0, q, &AbGroup::free(1));
        }
        expected.insert_sum(0, 0, &AbGroup::cyclic(t));
        for q in (2..=2 * t - 2).step_by(2) {
            expected.insert_sum(-1, q, &AbGroup::free(1));
        }
        let got = bigraded_homology(&build_a_complex(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("N={n}: {got:?}"));
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = common::rng(0x5eed);
    for _ in 0..500 {
        common::snf_contract(&common::random_matrix(&mut rng, 12, 9))?;
    }
    let mut rng = common::rng(0xe1e1);
    for _ in 0..200 {
        let rc = common::random_complex(&mut rng, 5, 8);
        common::gaussian_invariance(&mut rng, &rc)?;
    }
    for n in 2..=8 {
        let f = flag_ring(n).map_err(|e| e.to_string())?;
        if f.rank() != n * (n - 1) {
            return Err(format!("N={n}: flag rank {}", f.rank()));
        }
        if f.poincare().shift(3 - 2 * n as i64) != &qint(n as u32) * &qint(n as u32 - 1) {
            return Err(format!("N={n}: flag Poincaré polynomial"));
        }
    }
    for n in 2..=5 {
        let f = flag_ring(n).map_err(|e| e.to_string())?;
        let p = product_cp_ring(n).map_err(|e| e.to_string())?;
        let pull = pullback_matrix(n).map_err(|e| e.to_string())?;
        for x in 0..p.rank() {
            for y in 0..p.rank() {
                let bx = RingElement::basis(p.rank(), x);
                let by = RingElement::basis(p.rank(), y);
                let lhs = GradedRing::apply(&pull, &p.mul(&bx, &by));
                let rhs = f.mul(&GradedRing::apply(&pull, &bx), &GradedRing::apply(&pull, &by));
                if lhs != rhs {
                    return Err(format!("N={n}: pullback not multiplicative on ({x}, {y})"));
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 named-link totals, N 2..5, m 1..5, under 5 s", table_reproduction),
        ("2 KR_N isomorphic to rep-space cohomology, N 2..5, m 0..8", rep_space_isomorphism),
        ("3 complex and summand pipelines agree on (h,q) tables", two_pipelines),
        ("4 circle and sphere Gysin routes agree, N 2..8", gysin_cross_check),
        ("5 Euler characteristic equals skein polynomial", euler_vs_skein),
        ("6 A-summand bigrading placement, N 2..6", a_summand_placement),
        ("7 property suites (SNF, elimination, flag ring, pullback), suite under 60 s", property_suites),
    ];
    let suite = Instant::now();
    let mut failures = 0;
    for (name, f) in criteria {
        let t0 = Instant::now();
        let mut outcome = f();
        if name.starts_with('7') && outcome.is_ok() && suite.elapsed() >= Duration::from_secs(60) {
            outcome = Err(format!("suite took {:?}", suite.elapsed()));
        }
        let dt = t0.elapsed();
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({dt:.2?})"),
            Err(e) => {
                failures += 1;
                println!("FAIL  criterion {name}  ({dt:.2?}): {e}");
            }
        }
    }
    println!("{} of 7 criteria passed in {:.2?}", 7 - failures, suite.elapsed());
    if failures > 0 {
        std::process::exit(1);
    }
}
