//! Brute-force ground truth over all spanning trees.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{enumerate_spanning_trees, Graph, SpanningTree};
use crate::linearize::Instance;
use crate::matrix::CostMatrix;
use crate::rat::Rat;

/// `Q(T) = Σ_{e∈T} Σ_{f∈T} q(e, f)`, diagonal included.
pub fn qmstp_cost(q: &CostMatrix, tree: &SpanningTree) -> Rat {
    let edges = tree.edges();
    let mut total = Rat::zero();
    for &e in edges {
        for &f in edges {
            total += q.get(e, f);
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// Some vector solving `C(T) = Q(T)` for every tree.
    Feasible { c: Vec<Rat>, trees: u64, rank: usize },
    /// Adding this tree's equation made the system inconsistent.
    Infeasible { tree: SpanningTree, trees: u64 },
}

impl OracleOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OracleOutcome::Feasible { .. })
    }

    pub fn solution(&self) -> Option<&[Rat]> {
        match self {
            OracleOutcome::Feasible { c, .. } => Some(c),
            OracleOutcome::Infeasible { .. } => None,
        }
    }
}

/// Reduced row echelon form over `unknowns` variables plus a right-hand side,
/// grown one equation at a time. Redundant equations are dropped, so storage
/// never exceeds `unknowns` rows.
#[derive(Debug, Clone)]
pub struct IncrementalSystem {
    unknowns: usize,
    rows: Vec<(usize, Vec<Rat>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Independent,
    Redundant,
    Inconsistent,
}

impl IncrementalSystem {
    pub fn new(unknowns: usize) -> Self {
        IncrementalSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `coeffs · x = rhs`. An inconsistent equation is not stored.
    pub fn push(&mut self, coeffs: &[Rat], rhs: Rat) -> RowStatus {
        assert_eq!(coeffs.len(), self.unknowns);
        let mut row: Vec<Rat> = coeffs.to_vec();
        row.push(rhs);
        for (pivot, basis) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let factor = row[*pivot].clone();
            for (x, b) in row.iter_mut().zip(basis) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        let Some(pivot) = row[..self.unknowns].iter().position(|x| !x.is_zero()) else {
            return if row[self.unknowns].is_zero() {
                RowStatus::Redundant
            } else {
                RowStatus::Inconsistent
            };
        };
        // leftmost nonzero pivot; exact arithmetic needs no magnitude pivoting
        let scale = Rat::one() / &row[pivot];
        for x in row.iter_mut() {
            *x *= &scale;
        }
        for (_, basis) in self.rows.iter_mut() {
            if basis[pivot].is_zero() {
                continue;
            }
            let factor = basis[pivot].clone();
            for (b, x) in basis.iter_mut().zip(&row) {
                if !x.is_zero() {
                    *b -= &factor * x;
                }
            }
        }
        self.rows.push((pivot, row));
        RowStatus::Independent
    }

    /// One solution with every free variable set to zero.
    pub fn solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.unknowns];
        for (pivot, row) in &self.rows {
            x[*pivot] = row[self.unknowns].clone();
        }
        x
    }
}

/// Decides linearizability by solving `x_T · c = Q(T)` over all trees.
pub fn oracle_linearize(inst: &Instance, max_trees: u64) -> Result<OracleOutcome> {
    let q = inst.dense_cost()?;
    let g = inst.graph();
    let m = g.edge_count();
    let mut system = IncrementalSystem::new(m);
    let mut incidence = vec![Rat::zero(); m];
    let mut trees = 0;
    for tree in enumerate_spanning_trees(g, max_trees)? {
        trees += 1;
        incidence.iter_mut().for_each(|x| x.set_zero());
        for &e in tree.edges() {
            incidence[e] = Rat::one();
        }
        if system.push(&incidence, qmstp_cost(&q, &tree)) == RowStatus::Inconsistent {
            return Ok(OracleOutcome::Infeasible { tree, trees });
        }
    }
    Ok(OracleOutcome::Feasible {
        c: system.solution(),
        trees,
        rank: system.rank(),
    })
}

/// Minimizes `Q(T)` over all trees; ties go to the lexicographically first.
pub fn brute_force_optimum(inst: &Instance, max_trees: u64) -> Result<(SpanningTree, Rat)> {
    let q = inst.dense_cost()?;
    let mut best: Option<(SpanningTree, Rat)> = None;
    for tree in enumerate_spanning_trees(inst.graph(), max_trees)? {
        let cost = qmstp_cost(&q, &tree);
        if best.as_ref().is_none_or(|(_, b)| cost < *b) {
            best = Some((tree, cost));
        }
    }
    Ok(best.expect("connected graphs have a spanning tree"))
}

/// Multiplicative MST: minimize `(Σ d1 + δ1)(Σ d2 + δ2)` over spanning trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MmstpInstance {
    pub graph: Graph,
    pub d1: Vec<Rat>,
    pub d2: Vec<Rat>,
    pub delta1: Rat,
    pub delta2: Rat,
}

impl MmstpInstance {
    pub fn new(graph: Graph, d1: Vec<Rat>, d2: Vec<Rat>, delta1: Rat, delta2: Rat) -> Result<Self> {
        for (what, v) in [("d1", &d1), ("d2", &d2)] {
            if v.len() != graph.edge_count() {
                return Err(Error::DimensionMismatch {
                    what: what.into(),
                    expected: graph.edge_count(),
                    found: v.len(),
                });
            }
        }
        Ok(MmstpInstance {
            graph,
            d1,
            d2,
            delta1,
            delta2,
        })
    }
}

pub fn mmstp_objective(inst: &MmstpInstance, tree: &SpanningTree) -> Rat {
    (tree.weight(&inst.d1) + &inst.delta1) * (tree.weight(&inst.d2) + &inst.delta2)
}

pub fn mmstp_brute_force(inst: &MmstpInstance, max_trees: u64) -> Result<(SpanningTree, Rat)> {
    let mut best: Option<(SpanningTree, Rat)> = None;
    for tree in enumerate_spanning_trees(&inst.graph, max_trees)? {
        let value = mmstp_objective(inst, &tree);
        if best.as_ref().is_none_or(|(_, b)| value < *b) {
            best = Some((tree, value));
        }
    }
    Ok(best.expect("connected graphs have a spanning tree"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::spanning_trees;
    use crate::linearize::{linearize_cycle_block, Cost};
    use crate::matrix::Matrix;
    use crate::rat::{frac, int, ints};

    fn dense(g: Graph, q: Matrix) -> Instance {
        Instance::new(g, Cost::Dense(q), None).unwrap()
    }

    #[test]
    fn cost_examples() {
        let ones = Matrix::from_fn(3, 3, |_, _| int(1));
        assert_eq!(qmstp_cost(&ones, &SpanningTree::from_sorted(vec![0, 1])), int(4));
        let zero = Matrix::zeros(3, 3);
        assert_eq!(qmstp_cost(&zero, &SpanningTree::from_sorted(vec![1, 2])), int(0));
    }

    #[test]
    fn symmetric_cost_is_diagonal_plus_twice_pairs() {
        let q = fixtures::worked_example_matrix();
        for t in spanning_trees(&fixtures::worked_example_graph(), 100).unwrap() {
            let e = t.edges();
            let mut expected = Rat::zero();
            for (a, &x) in e.iter().enumerate() {
                expected += q.get(x, x);
                for &y in &e[a + 1..] {
                    expected += q.get(x, y) * int(2);
                }
            }
            assert_eq!(qmstp_cost(&q, &t), expected);
        }
    }

    #[test]
    fn reference_c_misses_tree_costs_by_four_on_edge_five() {
        // the reference vector disagrees with the matrix exactly
        // on trees through e5
        let q = fixtures::worked_example_matrix();
        let c = fixtures::worked_example_c();
        let mut corrected = c.clone();
        corrected[4] += int(4);
        for t in spanning_trees(&fixtures::worked_example_graph(), 100).unwrap() {
            let gap = qmstp_cost(&q, &t) - t.weight(&c);
            assert_eq!(gap, int(if t.contains(4) { 4 } else { 0 }), "tree {t}");
            assert_eq!(qmstp_cost(&q, &t), t.weight(&corrected));
        }
    }

    #[test]
    fn incremental_system_detects_inconsistency() {
        let mut s = IncrementalSystem::new(2);
        assert_eq!(s.push(&ints(&[1, 1]), int(3)), RowStatus::Independent);
        assert_eq!(s.push(&ints(&[2, 2]), int(6)), RowStatus::Redundant);
        assert_eq!(s.push(&ints(&[1, -1]), int(1)), RowStatus::Independent);
        assert_eq!(s.solution(), ints(&[2, 1]));
        assert_eq!(s.push(&ints(&[0, 1]), int(5)), RowStatus::Inconsistent);
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn oracle_on_cycles_matches_cycle_formula() {
        let g = Graph::cycle(5).unwrap();
        let q = Matrix::from_fn(5, 5, |i, j| frac((3 * i + 7 * j) as i64 % 11 - 4, 1 + (i * j % 3) as i64));
        let inst = dense(g.clone(), q.clone());
        let out = oracle_linearize(&inst, 100).unwrap();
        let c_oracle = out.solution().unwrap().to_vec();
        let c_formula = linearize_cycle_block(&q.symmetrize());
        for t in spanning_trees(&g, 100).unwrap() {
            assert_eq!(t.weight(&c_oracle), t.weight(&c_formula));
        }
    }

    #[test]
    fn oracle_on_worked_example() {
        let inst = fixtures::worked_example();
        let out = oracle_linearize(&inst, 100).unwrap();
        let c = out.solution().expect("feasible").to_vec();
        let pipeline = crate::linearize::check_and_linearize(&inst).unwrap();
        let expected = pipeline.linearization().unwrap();
        for t in spanning_trees(inst.graph(), 100).unwrap() {
            assert_eq!(t.weight(&c), t.weight(expected));
            assert_eq!(t.weight(&c), qmstp_cost(&inst.dense_cost().unwrap(), &t));
        }
    }

    #[test]
    fn oracle_rejects_perturbed_weak_sum_on_k4() {
        let w = ints(&[1, 2, 3, 4, 5, 6]);
        let mut q = Matrix::from_fn(6, 6, |i, j| if i == j { int(0) } else { &w[i] + &w[j] });
        q.set(0, 1, int(4));
        q.set(1, 0, int(4));
        let out = oracle_linearize(&dense(Graph::complete(4).unwrap(), q), 100).unwrap();
        assert!(!out.is_feasible());
    }

    #[test]
    fn brute_force_examples() {
        let g = Graph::complete(3).unwrap();
        let inst = dense(g.clone(), Matrix::zeros(3, 3));
        let (t, c) = brute_force_optimum(&inst, 10).unwrap();
        assert_eq!((t.edges().to_vec(), c), (vec![0, 1], int(0)));
        let mut q = Matrix::zeros(3, 3);
        for (i, v) in [1, 2, 3].into_iter().enumerate() {
            q.set(i, i, int(v));
        }
        let (t, c) = brute_force_optimum(&dense(g, q), 10).unwrap();
        assert_eq!((t.edges().to_vec(), c), (vec![0, 1], int(3)));
    }

    #[test]
    fn mmstp_constant_objective() {
        let g = Graph::complete(4).unwrap();
        let inst = MmstpInstance::new(g.clone(), ints(&[0; 6]), ints(&[0; 6]), int(-5), int(-5)).unwrap();
        for t in spanning_trees(&g, 100).unwrap() {
            assert_eq!(mmstp_objective(&inst, &t), int(25));
        }
    }
}
