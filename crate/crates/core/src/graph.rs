//! Simple connected graphs, biconnected decomposition, spanning trees.
//!
//! Vertices and edges are 0-based. Error values report 1-based ids, the same
//! numbering used by instance files.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Validates and builds a graph. Edge `i` is the `i`-th pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange {
                        edge: id + 1,
                        vertex: x + 1,
                        n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge {
                    edge: id + 1,
                    vertex: u + 1,
                });
            }
            if let Some(first) = seen.insert((u.min(v), u.max(v)), id) {
                return Err(Error::DuplicateEdge {
                    edge: id + 1,
                    first: first + 1,
                });
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        let graph = Graph {
            n,
            edges: edges.to_vec(),
            adjacency,
        };
        if let Some(vertex) = graph.first_unreachable() {
            return Err(Error::Disconnected { vertex: vertex + 1 });
        }
        Ok(graph)
    }

    /// Builds from 1-based vertex pairs, the numbering of instance files.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange {
                        edge: id + 1,
                        vertex: x,
                        n,
                    });
                }
            }
            shifted.push((u - 1, v - 1));
        }
        Graph::new(n, &shifted)
    }

    pub fn complete(k: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::new(k, &edges)
    }

    /// `K_{left,right}`; edges ordered by left vertex, then right vertex.
    pub fn complete_bipartite(left: usize, right: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..left {
            for v in 0..right {
                edges.push((u, left + v));
            }
        }
        Graph::new(left + right, &edges)
    }

    /// `C_k` with edges `(i, i+1)` and the closing edge `(k-1, 0)` last.
    pub fn cycle(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::new(k, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// `(neighbour, edge id)` pairs incident to `v`.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }
}

/// A spanning tree as a sorted list of edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanningTree {
    edges: Vec<usize>,
}

impl SpanningTree {
    pub fn from_sorted(edges: Vec<usize>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        SpanningTree { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Sum of `weights` over the tree edges.
    pub fn weight(&self, weights: &[Rat]) -> Rat {
        self.edges.iter().fold(Rat::zero(), |acc, &e| acc + &weights[e])
    }

    /// Checks that the edge set is a spanning tree of `g`.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        if self.edges.len() + 1 != g.vertex_count() {
            return false;
        }
        let mut dsu = DisjointSets::new(g.vertex_count());
        self.edges.iter().all(|&e| {
            e < g.edge_count() && {
                let (u, v) = g.endpoints(e);
                dsu.union(u, v)
            }
        })
    }
}

impl fmt::Display for SpanningTree {
    /// Prints 1-based edge ids, e.g. `{1,2,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.edges.iter().map(|e| (e + 1).to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    Bridge,
    Cycle,
    Clique,
    /// Complete bipartite with both sides of size at least 3.
    Biclique3,
    Other,
}

impl ComponentClass {
    pub fn name(self) -> &'static str {
        match self {
            ComponentClass::Bridge => "bridge",
            ComponentClass::Cycle => "cycle",
            ComponentClass::Clique => "clique",
            ComponentClass::Biclique3 => "biclique",
            ComponentClass::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted edge ids.
    pub edges: Vec<usize>,
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub class: ComponentClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Ordered by smallest edge id.
    pub components: Vec<Component>,
    pub edge_to_component: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, edge: usize) -> usize {
        self.edge_to_component[edge]
    }

    /// True when every component lies in the characterized class.
    pub fn all_characterized(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.class != ComponentClass::Other)
    }
}

/// Splits the edges into biconnected components and tags each one.
///
/// Class precedence is Bridge, Cycle, Clique, Biclique3, Other, so a triangle
/// is a cycle and `K_{2,2}` is a cycle.
pub fn decompose(g: &Graph) -> ComponentDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();

    // (vertex, edge to parent, next adjacency index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    while let Some(frame) = frames.last_mut() {
        let (v, parent_edge, idx) = *frame;
        if idx < g.neighbours(v).len() {
            frame.2 += 1;
            let (w, e) = g.neighbours(v)[idx];
            if e == parent_edge {
                continue;
            }
            if disc[w] == UNSEEN {
                edge_stack.push(e);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frames.push((w, e, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(parent, _, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut group = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        group.push(e);
                        if e == parent_edge {
                            break;
                        }
                    }
                    groups.push(group);
                }
            }
        }
    }

    for group in &mut groups {
        group.sort_unstable();
    }
    groups.sort_unstable_by_key(|group| group[0]);
    let mut edge_to_component = vec![0; g.edge_count()];
    let components = groups
        .into_iter()
        .enumerate()
        .map(|(idx, edges)| {
            for &e in &edges {
                edge_to_component[e] = idx;
            }
            classify(g, edges)
        })
        .collect();
    ComponentDecomposition {
        components,
        edge_to_component,
    }
}

fn classify(g: &Graph, edges: Vec<usize>) -> Component {
    let mut vertices: Vec<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let class = classify_edges(g, &edges, &vertices);
    Component {
        edges,
        vertices,
        class,
    }
}

fn classify_edges(g: &Graph, edges: &[usize], vertices: &[usize]) -> ComponentClass {
    let k = vertices.len();
    let m = edges.len();
    if m == 1 {
        return ComponentClass::Bridge;
    }
    let local = |v: usize| vertices.binary_search(&v).unwrap();
    let mut degree = vec![0usize; k];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        degree[local(u)] += 1;
        degree[local(v)] += 1;
    }
    if degree.iter().all(|&d| d == 2) {
        return ComponentClass::Cycle;
    }
    if m == k * (k - 1) / 2 {
        return ComponentClass::Clique;
    }
    if let Some((left, right)) = bipartition(g, edges, vertices) {
        if left >= 3 && right >= 3 && left * right == m {
            return ComponentClass::Biclique3;
        }
    }
    ComponentClass::Other
}

/// Side sizes of a 2-colouring of the component, if it is bipartite.
fn bipartition(g: &Graph, edges: &[usize], vertices: &[usize]) -> Option<(usize, usize)> {
    let local = |v: usize| vertices.binary_search(&v).unwrap();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        adjacency[local(u)].push(local(v));
        adjacency[local(v)].push(local(u));
    }
    let mut colour = vec![None; vertices.len()];
    colour[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let cv = colour[v].unwrap();
        for &w in &adjacency[v] {
            match colour[w] {
                None => {
                    colour[w] = Some(!cv);
                    stack.push(w);
                }
                Some(cw) if cw == cv => return None,
                Some(_) => {}
            }
        }
    }
    let left = colour.iter().filter(|c| **c == Some(false)).count();
    Some((left, vertices.len() - left))
}

/// Union-find with union by size and an undo log.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Returns false (and records a no-op) when `u` and `v` are already joined.
    pub(crate) fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            self.history.push(None);
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(Some((a, b)));
        true
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((a, b))) = self.history.pop() {
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

/// Number of spanning trees by the matrix-tree theorem (exact Bareiss
/// elimination on the reduced Laplacian).
pub fn count_spanning_trees(g: &Graph) -> BigInt {
    let size = g.vertex_count() - 1;
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for &(u, v) in g.edges() {
        if u > 0 {
            lap[u - 1][u - 1] += 1;
        }
        if v > 0 {
            lap[v - 1][v - 1] += 1;
        }
        if u > 0 && v > 0 {
            lap[u - 1][v - 1] -= 1;
            lap[v - 1][u - 1] -= 1;
        }
    }
    bareiss_determinant(lap)
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Lazily enumerates every spanning tree in lexicographic order of the sorted
/// edge-id lists.
pub struct SpanningTrees<'g> {
    graph: &'g Graph,
    dsu: DisjointSets,
    chosen: Vec<usize>,
    // (edge, included) decisions along the current search path
    decisions: Vec<(usize, bool)>,
    next_edge: usize,
    descending: bool,
    done: bool,
}

/// Starts the enumeration, failing up front if the tree count exceeds `cap`.
pub fn enumerate_spanning_trees(g: &Graph, cap: u64) -> Result<SpanningTrees<'_>> {
    let count = count_spanning_trees(g);
    if count > BigInt::from(cap) {
        return Err(Error::TooManyTrees {
            count: count.to_string(),
            cap,
        });
    }
    Ok(SpanningTrees {
        graph: g,
        dsu: DisjointSets::new(g.vertex_count()),
        chosen: Vec::with_capacity(g.vertex_count() - 1),
        decisions: Vec::new(),
        next_edge: 0,
        descending: true,
        done: false,
    })
}

/// Collects all spanning trees; convenient for small graphs.
pub fn spanning_trees(g: &Graph, cap: u64) -> Result<Vec<SpanningTree>> {
    Ok(enumerate_spanning_trees(g, cap)?.collect())
}

impl SpanningTrees<'_> {
    /// Can the partial choice still be completed with edges `next_edge..`?
    fn completable(&self) -> bool {
        let g = self.graph;
        let needed = g.vertex_count() - 1 - self.chosen.len();
        if needed > g.edge_count() - self.next_edge {
            return false;
        }
        let mut scratch = DisjointSets {
            parent: self.dsu.parent.clone(),
            size: self.dsu.size.clone(),
            history: Vec::new(),
        };
        let mut joined = self.chosen.len();
        for e in self.next_edge..g.edge_count() {
            let (u, v) = g.endpoints(e);
            if scratch.union(u, v) {
                joined += 1;
            }
        }
        joined == g.vertex_count() - 1
    }

    /// Undo decisions up to the last included edge and switch it to excluded.
    fn backtrack(&mut self) {
        while let Some((edge, included)) = self.decisions.pop() {
            if included {
                self.dsu.undo();
                self.chosen.pop();
                self.decisions.push((edge, false));
                self.next_edge = edge + 1;
                self.descending = true;
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SpanningTrees<'_> {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        loop {
            if self.done {
                return None;
            }
            if !self.descending {
                self.backtrack();
                continue;
            }
            if self.chosen.len() + 1 == self.graph.vertex_count() {
                self.descending = false;
                return Some(SpanningTree::from_sorted(self.chosen.clone()));
            }
            if !self.completable() {
                self.descending = false;
                continue;
            }
            let e = self.next_edge;
            let (u, v) = self.graph.endpoints(e);
            if self.dsu.union(u, v) {
                self.chosen.push(e);
                self.decisions.push((e, true));
            } else {
                self.dsu.undo();
                self.decisions.push((e, false));
            }
            self.next_edge += 1;
        }
    }
}

/// Kruskal's algorithm; ties go to the smaller edge id.
pub fn minimum_spanning_tree(g: &Graph, weights: &[Rat]) -> Result<(SpanningTree, Rat)> {
    if weights.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            what: "edge weights".into(),
            expected: g.edge_count(),
            found: weights.len(),
        });
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut edges = Vec::with_capacity(g.vertex_count() - 1);
    for e in order {
        let (u, v) = g.endpoints(e);
        if dsu.union(u, v) {
            edges.push(e);
            if edges.len() + 1 == g.vertex_count() {
                break;
            }
        }
    }
    edges.sort_unstable();
    let tree = SpanningTree::from_sorted(edges);
    let weight = tree.weight(weights);
    Ok((tree, weight))
}
