//! Deterministic instance families.
//!
//! Every random field is drawn from its own ChaCha stream keyed by
//! `(seed, family, field)`, so adding or reordering fields never changes the
//! values of the others.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{decompose, ComponentClass, Graph};
use crate::linearize::{Cost, Instance};
use crate::matrix::Matrix;
use crate::oracle::MmstpInstance;
use crate::rat::{self, Rat};

/// Random integers are drawn from `[-RANDOM_RANGE, RANDOM_RANGE]`.
pub const RANDOM_RANGE: i64 = 20;

/// Graph built from blocks glued in a chain: each block shares its first
/// vertex with the last vertex of the previous block.
///
/// Text form: `K4`, `K3,3`, `C5`, or a chain such as `K3+K2+K4+K2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphShape {
    blocks: Vec<Block>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    Complete(usize),
    Bipartite(usize, usize),
    Cycle(usize),
}

impl Block {
    fn graph(self) -> Result<Graph> {
        match self {
            Block::Complete(k) => Graph::complete(k),
            Block::Bipartite(a, b) => Graph::complete_bipartite(a, b),
            Block::Cycle(k) => Graph::cycle(k),
        }
    }
}

impl GraphShape {
    pub fn build(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = 0;
        for block in &self.blocks {
            let local = block.graph()?;
            if n == 0 {
                edges.extend_from_slice(local.edges());
                n = local.vertex_count();
                continue;
            }
            let attach = n - 1;
            let map = |v: usize| if v == 0 { attach } else { n + v - 1 };
            edges.extend(local.edges().iter().map(|&(u, v)| (map(u), map(v))));
            n += local.vertex_count() - 1;
        }
        Graph::new(n, &edges)
    }
}

impl FromStr for GraphShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::BadParams(format!("graph shape {s:?}: {msg}"));
        let mut blocks = Vec::new();
        for token in s.split('+').map(str::trim) {
            let num = |t: &str| t.parse::<usize>().map_err(|_| bad(format!("bad number in {token:?}")));
            let block = if let Some(rest) = token.strip_prefix(['K', 'k']) {
                match rest.split_once(',') {
                    Some((a, b)) => {
                        let (a, b) = (num(a)?, num(b)?);
                        if a == 0 || b == 0 {
                            return Err(bad("bipartite sides must be positive".into()));
                        }
                        Block::Bipartite(a, b)
                    }
                    None => {
                        let k = num(rest)?;
                        if k < 2 {
                            return Err(bad("complete graphs need at least 2 vertices".into()));
                        }
                        Block::Complete(k)
                    }
                }
            } else if let Some(rest) = token.strip_prefix(['C', 'c']) {
                let k = num(rest)?;
                if k < 3 {
                    return Err(bad("cycles need at least 3 vertices".into()));
                }
                Block::Cycle(k)
            } else {
                return Err(bad(format!("unknown block {token:?}")));
            };
            blocks.push(block);
        }
        Ok(GraphShape { blocks })
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::Complete(k) => format!("K{k}"),
                Block::Bipartite(a, b) => format!("K{a},{b}"),
                Block::Cycle(k) => format!("C{k}"),
            })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Linearizable by construction: sum cross blocks, weak-sum clique and
    /// biclique blocks, arbitrary cycle blocks, plus a skew-symmetric part
    /// and a free diagonal. With `perturb`, one symmetric off-diagonal pair
    /// is shifted afterwards.
    WeakSum { shape: GraphShape, perturb: bool },
    /// Arbitrary (not necessarily symmetric) costs on `C_n`.
    CycleRandom { n: usize },
    /// Symmetric random costs on any shape.
    RandomDense { shape: GraphShape },
    /// `K_{2,n2}` with `q(i,j) = 1` iff the edges meet at an `n2`-side vertex.
    K2nCounterexample { n2: usize, diag: Rat },
    /// `K_k` with one edge subdivided; every tree has the same cost.
    Degree2Counterexample { k: usize },
    /// Linked triangles encoding a subset-sum instance as an MMSTP.
    SubsetSumMmstp { values: Vec<Rat>, target: Rat },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::WeakSum { .. } => "weak-sum",
            Family::CycleRandom { .. } => "cycle-random",
            Family::RandomDense { .. } => "random-dense",
            Family::K2nCounterexample { .. } => "k2n-counterexample",
            Family::Degree2Counterexample { .. } => "degree2-counterexample",
            Family::SubsetSumMmstp { .. } => "subset-sum-mmstp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

/// A closed-form linearization claimed for a construction. It is
/// attached for checking, never trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimedLinearization {
    pub c: Vec<Rat>,
    pub formula: String,
}

pub const CLAIM_STATUS: &str = "claimed, verify by enumeration";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Qmstp {
        instance: Instance,
        claim: Option<ClaimedLinearization>,
    },
    Mmstp(MmstpInstance),
}

impl Generated {
    pub fn into_qmstp(self) -> Option<Instance> {
        match self {
            Generated::Qmstp { instance, .. } => Some(instance),
            Generated::Mmstp(_) => None,
        }
    }
}

fn mix(mut z: u64) -> u64 {
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent RNG stream for one field of one family.
fn stream(seed: u64, family: &str, field: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in family.bytes().chain([0]).chain(field.bytes()) {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(mix(seed ^ mix(h)))
}

fn draw(rng: &mut ChaCha8Rng) -> Rat {
    rat::int(rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE))
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let family = spec.family.name();
    let rng = |field: &str| stream(spec.seed, family, field);
    match &spec.family {
        Family::WeakSum { shape, perturb } => weak_sum(shape.build()?, *perturb, rng),
        Family::CycleRandom { n } => {
            if *n < 3 {
                return Err(Error::BadParams("cycle-random needs n >= 3".into()));
            }
            let mut r = rng("q");
            let q = Matrix::from_fn(*n, *n, |_, _| draw(&mut r));
            qmstp(Graph::cycle(*n)?, q, None, format!("cycle-random C{n} seed {}", spec.seed))
        }
        Family::RandomDense { shape } => {
            let g = shape.build()?;
            let m = g.edge_count();
            let mut r = rng("q");
            let mut q = Matrix::zeros(m, m);
            for i in 0..m {
                for j in i..m {
                    let v = draw(&mut r);
                    q.set(j, i, v.clone());
                    q.set(i, j, v);
                }
            }
            qmstp(g, q, None, format!("random-dense {shape} seed {}", spec.seed))
        }
        Family::K2nCounterexample { n2, diag } => k2n(*n2, diag),
        Family::Degree2Counterexample { k } => degree2(*k),
        Family::SubsetSumMmstp { values, target } => subset_sum(values, target).map(Generated::Mmstp),
    }
}

fn qmstp(g: Graph, q: Matrix, claim: Option<ClaimedLinearization>, name: String) -> Result<Generated> {
    Ok(Generated::Qmstp {
        instance: Instance::new(g, Cost::Dense(q), Some(name))?,
        claim,
    })
}

fn weak_sum(g: Graph, perturb: bool, rng: impl Fn(&str) -> ChaCha8Rng) -> Result<Generated> {
    let decomp = decompose(&g);
    let m = g.edge_count();
    let k = decomp.len();
    let mut alpha_rng = rng("alpha");
    let alpha: Vec<Vec<Rat>> = (0..m)
        .map(|_| (0..k).map(|_| draw(&mut alpha_rng)).collect())
        .collect();
    let mut cycle_rng = rng("cycle");
    let mut diag_rng = rng("diag");
    let mut skew_rng = rng("skew");
    let mut q = Matrix::zeros(m, m);
    for e in 0..m {
        q.set(e, e, draw(&mut diag_rng));
        let ce = decomp.component_of(e);
        for f in e + 1..m {
            let cf = decomp.component_of(f);
            let value = if ce != cf {
                &alpha[e][cf] + &alpha[f][ce]
            } else if decomp.components[ce].class == ComponentClass::Cycle {
                draw(&mut cycle_rng)
            } else {
                &alpha[e][ce] + &alpha[f][ce]
            };
            let skew = draw(&mut skew_rng);
            q.set(e, f, &value + &skew);
            q.set(f, e, value - skew);
        }
    }
    let mut name = format!("weak-sum on {} vertices", g.vertex_count());
    if perturb && m >= 2 {
        let mut r = rng("perturb");
        let e = r.gen_range(0..m);
        let f = (e + r.gen_range(1..m)) % m;
        let delta = rat::int(r.gen_range(1..=RANDOM_RANGE));
        q.set(e, f, q.get(e, f) + &delta);
        q.set(f, e, q.get(f, e) + &delta);
        name.push_str(&format!(", perturbed at ({},{})", e + 1, f + 1));
    }
    qmstp(g, q, None, name)
}

fn k2n(n2: usize, diag: &Rat) -> Result<Generated> {
    if n2 < 3 {
        return Err(Error::BadParams("k2n-counterexample needs n2 >= 3".into()));
    }
    let g = Graph::complete_bipartite(2, n2)?;
    let m = g.edge_count();
    let q = Matrix::from_fn(m, m, |i, j| {
        if i == j {
            diag.clone()
        } else if g.endpoints(i).1 == g.endpoints(j).1 {
            rat::int(1)
        } else {
            rat::int(0)
        }
    });
    let share = rat::frac(2, n2 as i64 + 1);
    let claim = ClaimedLinearization {
        c: (0..m).map(|i| q.get(i, i) + &share).collect(),
        formula: format!("c(i) = q(i,i) + 2/(n2+1) with n2 = {n2}"),
    };
    qmstp(g, q, Some(claim), format!("K2,{n2} counterexample"))
}

fn degree2(k: usize) -> Result<Generated> {
    if k < 3 {
        return Err(Error::BadParams("degree2-counterexample needs a base K_k with k >= 3".into()));
    }
    // vertex k subdivides edge (0,1) of K_k; its two edges come first
    let mut edges = vec![(0, k), (k, 1)];
    for u in 0..k {
        for v in u + 1..k {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(k + 1, &edges)?;
    let n = g.vertex_count() as i64;
    let m = g.edge_count();
    let near = rat::frac(1, 2);
    let far = rat::frac(1, 2 * (n - 3));
    let q = Matrix::from_fn(m, m, |i, j| {
        if i == j {
            rat::int(0)
        } else if i < 2 && j < 2 {
            near.clone()
        } else if i >= 2 && j >= 2 {
            far.clone()
        } else {
            rat::int(0)
        }
    });
    let claim = ClaimedLinearization {
        c: vec![rat::frac(n - 3, n - 1); m],
        formula: format!("c(e) = (n-3)/(n-1) with n = |V| = {n}"),
    };
    qmstp(g, q, Some(claim), format!("K{k} with one subdivided edge"))
}

/// Triangle `i` has vertices `3i, 3i+1, 3i+2` and edges `e12, e23, e13` in
/// that order; the path edges linking the first vertices come last.
pub fn subset_sum(values: &[Rat], target: &Rat) -> Result<MmstpInstance> {
    if values.is_empty() {
        return Err(Error::BadParams("subset-sum-mmstp needs at least one value".into()));
    }
    if values.iter().any(|v| *v < rat::int(0)) {
        return Err(Error::BadParams("subset-sum values must be non-negative".into()));
    }
    let count = values.len();
    let mut edges = Vec::new();
    let mut d1 = Vec::new();
    for (i, value) in values.iter().enumerate() {
        let base = 3 * i;
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
        d1.extend([value.clone(), rat::int(0), rat::int(0)]);
    }
    for i in 1..count {
        edges.push((3 * (i - 1), 3 * i));
        d1.push(rat::int(0));
    }
    let g = Graph::new(3 * count, &edges)?;
    MmstpInstance::new(g, d1.clone(), d1, -target.clone(), -target.clone())
}
