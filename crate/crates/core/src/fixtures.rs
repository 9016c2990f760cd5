//! The illustrative 8-vertex instance: a triangle, a bridge, a `K4` and a
//! pendant bridge, with its 11×11 cost matrix and a reference linearization.

use crate::graph::Graph;
use crate::linearize::{Cost, Instance};
use crate::matrix::Matrix;
use crate::rat::{self, Rat};

pub const WORKED_EXAMPLE_EDGES: [(usize, usize); 11] = [
    (1, 2),
    (2, 3),
    (1, 3),
    (3, 4),
    (4, 5),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
    (6, 7),
    (7, 8),
];

pub const WORKED_EXAMPLE_Q: [[i64; 11]; 11] = [
    [1, 4, 8, 7, 4, 6, 3, 8, 5, 7, 9],
    [4, 2, 9, 2, 3, 5, 2, 7, 4, 6, 9],
    [8, 9, 3, 4, 5, 7, 4, 9, 6, 8, 0],
    [7, 2, 4, 8, 0, 9, 3, 6, 6, 3, 2],
    [4, 3, 5, 0, 5, 4, 5, 8, 3, 7, 3],
    [6, 5, 7, 9, 4, 2, 3, 6, 1, 5, 3],
    [3, 2, 4, 3, 5, 3, 1, 7, 2, 6, 4],
    [8, 7, 9, 6, 8, 6, 7, 5, 5, 9, 5],
    [5, 4, 6, 6, 3, 1, 2, 5, 8, 4, 6],
    [7, 6, 8, 3, 7, 5, 6, 9, 4, 7, 0],
    [9, 9, 0, 2, 3, 3, 4, 5, 6, 0, 2],
];

pub const WORKED_EXAMPLE_C: [i64; 11] = [54, 41, 48, 12, 23, 42, 23, 67, 40, 45, 2];

pub fn worked_example_graph() -> Graph {
    Graph::from_one_based(8, &WORKED_EXAMPLE_EDGES).expect("valid fixture graph")
}

pub fn worked_example_matrix() -> Matrix {
    Matrix::from_fn(11, 11, |i, j| rat::int(WORKED_EXAMPLE_Q[i][j]))
}

pub fn worked_example() -> Instance {
    Instance::new(
        worked_example_graph(),
        Cost::Dense(worked_example_matrix()),
        Some("worked-example".into()),
    )
    .expect("consistent fixture")
}

pub fn worked_example_c() -> Vec<Rat> {
    rat::ints(&WORKED_EXAMPLE_C)
}
