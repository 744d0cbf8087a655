//! Instances shared by the benchmarks.

use qloci::{BipartiteQuiver, OrbitData};

/// Named quiver/orbit pairs, smallest first.
pub fn instances() -> Vec<(&'static str, BipartiteQuiver, OrbitData)> {
    let cube = BipartiteQuiver::new(vec![2, 2, 2], vec![2, 2]).expect("valid dims");
    let cube_orbits = OrbitData::enumerate(&cube);
    let mid = cube_orbits[cube_orbits.len() / 2].clone();
    vec![
        ("running", qloci::examples::running_quiver(), qloci::examples::running_orbit()),
        ("cube_mid", cube, mid),
    ]
}
