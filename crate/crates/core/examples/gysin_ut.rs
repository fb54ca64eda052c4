//! H*(UT CP^{N-1}) two ways: as a circle bundle over F(1,1;N) and as a
//! sphere bundle over CP^{N-1}.

use sln_torus::cohomring::{gysin_circle_ut, gysin_sphere_ut};

fn main() {
    for n in 2..=5 {
        let circle = gysin_circle_ut(n).unwrap();
        let sphere = gysin_sphere_ut(n).unwrap();
        let degrees: Vec<String> = circle.degrees.iter().map(|(d, g)| format!("H^{d}={g}")).collect();
        println!("N={n}: {}  total {}  agree: {}", degrees.join(" "), circle.total(), circle == sphere);
    }
}
