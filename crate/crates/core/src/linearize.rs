//! Deciding linearizability and building linearizations.
//!
//! For a symmetric `Q`, every off-diagonal block between two biconnected
//! components must be a sum matrix, and every clique or biclique block must
//! be a weak sum matrix. When those conditions hold, `Q` splits into
//! `M + B_1 + ... + B_k` where the `B_i` carry the cycle blocks. `M` is
//! written as `A + Aᵀ + D` with each row of `A` constant on every component,
//! which makes each row's spanning-tree cost a constant `r(i)`, and
//! `c(i) = 2 r(i) + d(i,i)`. Each cycle block gets its own closed form.

use std::borrow::Cow;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factored::{self, FactoredCost, FactoredSumCertificate, FactoredVerdict, NotSumReason};
use crate::graph::{decompose, enumerate_spanning_trees, minimum_spanning_tree, ComponentClass, Graph, SpanningTree};
use crate::matrix::{
    recognize_sum, recognize_weak_sum, row_tree_constants, CostMatrix, SumCertificate, SumWitness,
    WeakSumCertificate, WeakSumFailure, WeakSumWitness,
};
use crate::oracle::{brute_force_optimum, qmstp_cost};
use crate::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cost {
    Dense(CostMatrix),
    Factored(FactoredCost),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    cost: Cost,
    name: Option<String>,
}

impl Instance {
    pub fn new(graph: Graph, cost: Cost, name: Option<String>) -> Result<Self> {
        let m = graph.edge_count();
        let found = match &cost {
            Cost::Dense(q) if q.rows() != q.cols() => {
                return Err(Error::DimensionMismatch {
                    what: "cost matrix columns".into(),
                    expected: q.rows(),
                    found: q.cols(),
                })
            }
            Cost::Dense(q) => q.rows(),
            Cost::Factored(f) => f.len(),
        };
        if found != m {
            return Err(Error::DimensionMismatch {
                what: "cost".into(),
                expected: m,
                found,
            });
        }
        Ok(Instance { graph, cost, name })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cost(&self) -> &Cost {
        &self.cost
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The dense matrix, materializing factored costs up to
    /// [`factored::DENSE_CAP`] edges.
    pub fn dense_cost(&self) -> Result<Cow<'_, CostMatrix>> {
        match &self.cost {
            Cost::Dense(q) => Ok(Cow::Borrowed(q)),
            Cost::Factored(f) => factored::materialize(f, factored::DENSE_CAP).map(Cow::Owned),
        }
    }

    /// `Q(T)` without materializing factored costs.
    pub fn tree_cost(&self, tree: &SpanningTree) -> Rat {
        match &self.cost {
            Cost::Dense(q) => qmstp_cost(q, tree),
            Cost::Factored(f) => f.tree_cost(tree),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockCertificate {
    /// Cross block between components `rows < cols`; vectors are indexed by
    /// position within each component's sorted edge list.
    Sum {
        rows: usize,
        cols: usize,
        certificate: SumCertificate,
    },
    WeakSum {
        component: usize,
        certificate: WeakSumCertificate,
    },
    /// Closed-form linearization of a cycle's diagonal block.
    Cycle { component: usize, c: Vec<Rat> },
    Bridge { component: usize },
    /// Whole-graph factored certificate from the linear-time path.
    Factored {
        certificate: Option<FactoredSumCertificate>,
        w: Vec<Rat>,
    },
}

/// Failure evidence. Indices are global 0-based edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockWitness {
    Sum {
        rows: usize,
        cols: usize,
        witness: SumWitness,
    },
    WeakSum {
        component: usize,
        witness: WeakSumWitness,
    },
    Factored { reason: NotSumReason },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Linearizable {
        c: Vec<Rat>,
        certificates: Vec<BlockCertificate>,
    },
    NotLinearizable { witness: BlockWitness },
    /// Some components lie outside the characterized classes and their
    /// diagonal blocks fail the sufficient weak-sum condition.
    UnknownOutsideClass {
        components: Vec<usize>,
        witnesses: Vec<BlockWitness>,
    },
}

impl Verdict {
    pub fn linearization(&self) -> Option<&[Rat]> {
        match self {
            Verdict::Linearizable { c, .. } => Some(c),
            _ => None,
        }
    }

    pub fn is_linearizable(&self) -> bool {
        matches!(self, Verdict::Linearizable { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Linearizable { .. } => "linearizable",
            Verdict::NotLinearizable { .. } => "not-linearizable",
            Verdict::UnknownOutsideClass { .. } => "unknown-outside-class",
        }
    }
}

/// Cycle closed form: `c(e) = q(e,e) + Σ_{i≠e} (q(i,e) + q(e,i)) - S / (n-1)`,
/// with `S` the sum of all off-diagonal entries. Valid for any square block
/// of size `n >= 2` indexed by the cycle's edges.
pub fn linearize_cycle_block(q: &CostMatrix) -> Vec<Rat> {
    let n = q.rows();
    assert!(q.is_square() && n >= 2, "cycle block must be square with n >= 2");
    let mut incident = rat::zeros(n);
    let mut off_total = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = q.get(i, j);
                incident[i] += v;
                incident[j] += v;
                off_total += v;
            }
        }
    }
    let share = off_total / rat::int(n as i64 - 1);
    (0..n)
        .map(|e| q.get(e, e) + &incident[e] - &share)
        .collect()
}

fn map_sum_witness(w: SumWitness, row_edges: &[usize], col_edges: &[usize]) -> SumWitness {
    SumWitness {
        rows: (row_edges[w.rows.0], row_edges[w.rows.1]),
        cols: (col_edges[w.cols.0], col_edges[w.cols.1]),
    }
}

fn map_weak_witness(w: WeakSumWitness, edges: &[usize]) -> WeakSumWitness {
    WeakSumWitness {
        pair: (edges[w.pair.0], edges[w.pair.1]),
        quadruple: w.quadruple.map(|q| q.map(|i| edges[i])),
        ..w
    }
}

/// Runs the block conditions on the symmetrized dense cost and, when they
/// hold, assembles a linearization.
pub fn check_and_linearize(inst: &Instance) -> Result<Verdict> {
    let q = inst.dense_cost()?.symmetrize();
    let g = inst.graph();
    let m = g.edge_count();
    let decomp = decompose(g);
    let k = decomp.len();
    let comps = &decomp.components;

    // row_values[i][c]: value of row i of A on component c
    let mut row_values = vec![rat::zeros(k); m];
    let mut d = rat::zeros(m);
    let mut cycle_part = rat::zeros(m);
    let mut certificates = Vec::new();

    for (ci, ca) in comps.iter().enumerate() {
        for (cj, cb) in comps.iter().enumerate().skip(ci + 1) {
            let block = q.submatrix(&ca.edges, &cb.edges);
            match recognize_sum(&block) {
                Ok(cert) => {
                    for (pos, &e) in ca.edges.iter().enumerate() {
                        row_values[e][cj] = cert.row[pos].clone();
                    }
                    for (pos, &f) in cb.edges.iter().enumerate() {
                        row_values[f][ci] = cert.col[pos].clone();
                    }
                    certificates.push(BlockCertificate::Sum {
                        rows: ci,
                        cols: cj,
                        certificate: cert,
                    });
                }
                Err(w) => {
                    return Ok(Verdict::NotLinearizable {
                        witness: BlockWitness::Sum {
                            rows: ci,
                            cols: cj,
                            witness: map_sum_witness(w, &ca.edges, &cb.edges),
                        },
                    })
                }
            }
        }
    }

    let mut outside = Vec::new();
    let mut outside_witnesses = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        let block = q.submatrix(&comp.edges, &comp.edges);
        match comp.class {
            ComponentClass::Bridge => {
                let e = comp.edges[0];
                d[e] = q.get(e, e).clone();
                certificates.push(BlockCertificate::Bridge { component: ci });
            }
            ComponentClass::Cycle => {
                let c = linearize_cycle_block(&block);
                for (pos, &e) in comp.edges.iter().enumerate() {
                    cycle_part[e] = c[pos].clone();
                }
                certificates.push(BlockCertificate::Cycle { component: ci, c });
            }
            ComponentClass::Clique | ComponentClass::Biclique3 | ComponentClass::Other => {
                match recognize_weak_sum(&block) {
                    Ok(cert) => {
                        for (pos, &e) in comp.edges.iter().enumerate() {
                            row_values[e][ci] = cert.w[pos].clone();
                            d[e] = q.get(e, e) - &cert.w[pos] * rat::int(2);
                        }
                        certificates.push(BlockCertificate::WeakSum {
                            component: ci,
                            certificate: cert,
                        });
                    }
                    Err(WeakSumFailure::Violation(w)) => {
                        let witness = BlockWitness::WeakSum {
                            component: ci,
                            witness: map_weak_witness(w, &comp.edges),
                        };
                        if comp.class == ComponentClass::Other {
                            outside.push(ci);
                            outside_witnesses.push(witness);
                        } else {
                            return Ok(Verdict::NotLinearizable { witness });
                        }
                    }
                    Err(WeakSumFailure::NotSymmetric { .. }) => {
                        unreachable!("diagonal blocks of a symmetrized matrix are symmetric")
                    }
                }
            }
        }
    }
    if !outside.is_empty() {
        return Ok(Verdict::UnknownOutsideClass {
            components: outside,
            witnesses: outside_witnesses,
        });
    }

    let r = row_tree_constants(&row_values, &decomp);
    let two = rat::int(2);
    let c = (0..m)
        .map(|e| &two * &r[e] + &d[e] + &cycle_part[e])
        .collect();
    Ok(Verdict::Linearizable { c, certificates })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckPath {
    Dense,
    /// Linear-time factored path on a single clique or biclique.
    Factored,
}

impl CheckPath {
    pub fn name(self) -> &'static str {
        match self {
            CheckPath::Dense => "dense",
            CheckPath::Factored => "factored-linear",
        }
    }
}

/// Factored costs on a single clique or biclique go through the linear-time
/// path; everything else through [`check_and_linearize`].
pub fn check(inst: &Instance) -> Result<(Verdict, CheckPath)> {
    if let Cost::Factored(f) = inst.cost() {
        if factored::single_block_class(inst.graph()).is_some() {
            return Ok((linearize_factored(inst.graph(), f)?, CheckPath::Factored));
        }
    }
    Ok((check_and_linearize(inst)?, CheckPath::Dense))
}

/// [`factored::linearize_factored`] wrapped as a [`Verdict`].
pub fn linearize_factored(g: &Graph, f: &FactoredCost) -> Result<Verdict> {
    let (_, verdict) = factored::linearize_factored(g, f)?;
    Ok(match verdict {
        FactoredVerdict::Linearizable { c, w, certificate } => Verdict::Linearizable {
            c,
            certificates: vec![BlockCertificate::Factored { certificate, w }],
        },
        FactoredVerdict::NotLinearizable { reason } => Verdict::NotLinearizable {
            witness: BlockWitness::Factored { reason },
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Pass { trees: u64 },
    Counterexample {
        tree: SpanningTree,
        quadratic: Rat,
        linear: Rat,
    },
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass { .. })
    }
}

/// Compares `Q(T)` with `C(T)` on every spanning tree, reporting the first
/// mismatch in enumeration order.
pub fn verify_linearization(inst: &Instance, c: &[Rat], max_trees: u64) -> Result<Verification> {
    let g = inst.graph();
    if c.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            what: "linearization vector".into(),
            expected: g.edge_count(),
            found: c.len(),
        });
    }
    let q = inst.dense_cost()?;
    let mut trees = 0;
    for tree in enumerate_spanning_trees(g, max_trees)? {
        trees += 1;
        let quadratic = qmstp_cost(&q, &tree);
        let linear = tree.weight(c);
        if quadratic != linear {
            return Ok(Verification::Counterexample {
                tree,
                quadratic,
                linear,
            });
        }
    }
    Ok(Verification::Pass { trees })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    LinearizedMst,
    BruteForce,
}

impl SolveMethod {
    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::LinearizedMst => "linearized-mst",
            SolveMethod::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub tree: SpanningTree,
    /// `Q(T)` of the returned tree.
    pub cost: Rat,
    pub method: SolveMethod,
}

/// Minimum spanning tree on the linearization when one exists, otherwise
/// exhaustive search.
pub fn solve_qmstp(inst: &Instance, max_trees: u64) -> Result<Solution> {
    let (verdict, _) = check(inst)?;
    if let Some(c) = verdict.linearization() {
        let (tree, _) = minimum_spanning_tree(inst.graph(), c)?;
        let cost = inst.tree_cost(&tree);
        return Ok(Solution {
            tree,
            cost,
            method: SolveMethod::LinearizedMst,
        });
    }
    let (tree, cost) = brute_force_optimum(inst, max_trees)?;
    Ok(Solution {
        tree,
        cost,
        method: SolveMethod::BruteForce,
    })
}
