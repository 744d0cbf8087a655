//! The running example: the quiver `y2 → x2 ← y1 → x1 ← y0` with dimension
//! vector `(2, 3, 3, 2, 1)`, one of its orbits, and diagrams and pipe dreams
//! attached to it. Used by tests, benches and the command line tool.

use std::collections::BTreeMap;

use crate::lacing::LacingDiagram;
use crate::pipes::PipeDream;
use crate::quiver::{BipartiteQuiver, OrbitData};

pub fn running_quiver() -> BipartiteQuiver {
    BipartiteQuiver::new(vec![1, 3, 2], vec![2, 3]).expect("valid quiver")
}

/// Laces `y2–y0`, `y2–y1` and `x2–x1`, one each.
pub fn running_orbit() -> OrbitData {
    let named: BTreeMap<String, usize> =
        [("y2,y0", 1), ("y2,y1", 1), ("x2,x1", 1)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    OrbitData::from_named(&running_quiver(), &named).expect("valid orbit")
}

fn diagram(w2: &[&[u8]], a2: &[&[u8]], w1: &[&[u8]], a1: &[&[u8]]) -> LacingDiagram {
    let conv = |m: &[&[u8]]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    LacingDiagram::from_matrices(&running_quiver(), &[conv(w2), conv(a2), conv(w1), conv(a1)]).expect("valid diagram")
}

const ALPHA2: [&[u8]; 3] = [&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]];
const ALPHA1: [&[u8]; 1] = [&[1, 0]];

/// A minimal diagram of [`running_orbit`] with two crossings.
pub fn running_minimal() -> LacingDiagram {
    diagram(&[&[1, 0, 0], &[0, 1, 0]], &ALPHA2, &[&[1, 0], &[0, 1], &[0, 0]], &ALPHA1)
}

/// K-theoretic diagram with three crossings.
pub fn running_k_first() -> LacingDiagram {
    diagram(&[&[1, 0, 0], &[0, 1, 0]], &ALPHA2, &[&[0, 1], &[1, 0], &[0, 0]], &ALPHA1)
}

/// K-theoretic diagram with five crossings; laces of the non-reduced dream.
pub fn running_k_second() -> LacingDiagram {
    diagram(&[&[1, 0, 0], &[0, 0, 1]], &ALPHA2, &[&[0, 1], &[0, 0], &[1, 0]], &ALPHA1)
}

/// Two steps from [`running_minimal`] towards [`running_k_second`].
pub fn running_k_intermediates() -> [LacingDiagram; 2] {
    [
        diagram(&[&[1, 0, 0], &[0, 0, 1]], &ALPHA2, &[&[1, 0], &[0, 1], &[0, 0]], &ALPHA1),
        diagram(&[&[1, 0, 0], &[0, 0, 1]], &ALPHA2, &[&[1, 0], &[0, 0], &[0, 1]], &ALPHA1),
    ]
}

fn p_star_plus(extra: &[(usize, usize)]) -> PipeDream {
    let q = running_quiver();
    let cells = q.layout().p_star_cells().into_iter().chain(extra.iter().copied());
    PipeDream::new(q.d_y(), q.d_x(), cells).expect("cells inside the grid")
}

/// Reduced pipe dream for the Zelevinsky permutation of [`running_orbit`].
pub fn running_reduced_dream() -> PipeDream {
    p_star_plus(&[(1, 5), (4, 3)])
}

/// Non-reduced pipe dream with the same Demazure product.
pub fn running_nonreduced_dream() -> PipeDream {
    p_star_plus(&[(1, 5), (2, 4), (3, 4), (4, 3), (5, 2)])
}
