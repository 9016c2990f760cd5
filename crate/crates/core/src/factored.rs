//! Costs given in rank-2 factored form, `q(i, j) = a_i b_j + c_i d_j` for
//! `i != j`, with an explicit diagonal.
//!
//! Sum recognition and linearization here run in time linear in the number
//! of edges and never build the dense matrix.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{ComponentClass, Graph, SpanningTree};
use crate::matrix::CostMatrix;
use crate::rat::{self, Rat};

/// Largest edge count [`materialize`] accepts by default.
pub const DENSE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCost {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
    pub d: Vec<Rat>,
    pub diag: Vec<Rat>,
}

impl FactoredCost {
    pub fn new(a: Vec<Rat>, b: Vec<Rat>, c: Vec<Rat>, d: Vec<Rat>, diag: Vec<Rat>) -> Result<Self> {
        let m = a.len();
        let lens = [b.len(), c.len(), d.len(), diag.len()];
        if lens.iter().any(|&l| l != m) {
            return Err(Error::LengthMismatch(format!(
                "a={m}, b={}, c={}, d={}, diag={}",
                lens[0], lens[1], lens[2], lens[3]
            )));
        }
        Ok(FactoredCost { a, b, c, d, diag })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> Rat {
        if i == j {
            self.diag[i].clone()
        } else {
            &self.a[i] * &self.b[j] + &self.c[i] * &self.d[j]
        }
    }

    /// `Q(T)` in `O(|T|)`.
    pub fn tree_cost(&self, tree: &SpanningTree) -> Rat {
        let (mut sa, mut sb, mut sc, mut sd) = (Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero());
        let mut correction = Rat::zero();
        for &e in tree.edges() {
            sa += &self.a[e];
            sb += &self.b[e];
            sc += &self.c[e];
            sd += &self.d[e];
            correction += &self.diag[e] - &self.a[e] * &self.b[e] - &self.c[e] * &self.d[e];
        }
        sa * sb + sc * sd + correction
    }
}

/// Dense matrix of a factored cost. Fails when the off-diagonal part is not
/// symmetric, since such input is not a valid quadratic cost.
pub fn materialize(f: &FactoredCost, cap: usize) -> Result<CostMatrix> {
    let m = f.len();
    if m > cap {
        return Err(Error::TooLarge { size: m, cap });
    }
    let q = CostMatrix::from_fn(m, m, |i, j| f.entry(i, j));
    if let Some((row, col)) = q.first_asymmetry() {
        return Err(Error::NotSymmetricOffDiagonal {
            pair: Some((row, col)),
        });
    }
    Ok(q)
}

/// Which factor of a product is the constant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstantFactor {
    /// Row factor (`a` or `c`) equal to the given value everywhere.
    Row(Rat),
    /// Column factor (`b` or `d`) equal to the given value everywhere.
    Col(Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactoredSumCertificate {
    /// One factor of each product `a∘b`, `c∘d` is constant.
    Constant {
        first: ConstantFactor,
        second: ConstantFactor,
        e: Vec<Rat>,
        f: Vec<Rat>,
    },
    /// `a = K c + K1` and `d = -K b + K2`, hence `q(i,j) = K2 c_i + K1 b_j`.
    Affine {
        k: Rat,
        k1: Rat,
        k2: Rat,
        e: Vec<Rat>,
        f: Vec<Rat>,
    },
}

impl FactoredSumCertificate {
    /// Row vector `e` and column vector `f` with `e_i + f_j = a_i b_j + c_i d_j`.
    pub fn vectors(&self) -> (&[Rat], &[Rat]) {
        match self {
            FactoredSumCertificate::Constant { e, f, .. } => (e, f),
            FactoredSumCertificate::Affine { e, f, .. } => (e, f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotSumReason {
    /// Some vector is constant, yet neither `a`/`b` nor `c`/`d` has a
    /// constant member on one side.
    ConstantMismatch,
    /// `a_i != a_j` while `c_i == c_j`.
    SharedRowValue { i: usize, j: usize },
    /// `a_index != K c_index + K1`.
    RowNotAffine { index: usize },
    /// `d_index != -K b_index + K2`.
    ColNotAffine { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactoredRecognition {
    Sum(FactoredSumCertificate),
    NotSum(NotSumReason),
}

impl FactoredRecognition {
    pub fn is_sum(&self) -> bool {
        matches!(self, FactoredRecognition::Sum(_))
    }
}

/// Decides in `O(n)` whether the full `n×n` matrix `a_i b_j + c_i d_j`
/// (diagonal included) is a sum matrix.
pub fn recognize_factored_sum(a: &[Rat], b: &[Rat], c: &[Rat], d: &[Rat]) -> Result<FactoredRecognition> {
    let n = a.len();
    if b.len() != n || c.len() != n || d.len() != n {
        return Err(Error::LengthMismatch(format!(
            "a={n}, b={}, c={}, d={}",
            b.len(),
            c.len(),
            d.len()
        )));
    }
    if n == 0 {
        return Err(Error::LengthMismatch("vectors are empty".into()));
    }
    let [ca, cb, cc, cd] = [a, b, c, d].map(rat::is_constant);
    if ca || cb || cc || cd {
        if !((ca || cb) && (cc || cd)) {
            return Ok(FactoredRecognition::NotSum(NotSumReason::ConstantMismatch));
        }
        let mut e = rat::zeros(n);
        let mut f = rat::zeros(n);
        let first = if ca {
            // α b_j goes to the column vector
            for (fj, bj) in f.iter_mut().zip(b) {
                *fj += &a[0] * bj;
            }
            ConstantFactor::Row(a[0].clone())
        } else {
            for (ei, ai) in e.iter_mut().zip(a) {
                *ei += ai * &b[0];
            }
            ConstantFactor::Col(b[0].clone())
        };
        let second = if cd {
            for (ei, ci) in e.iter_mut().zip(c) {
                *ei += ci * &d[0];
            }
            ConstantFactor::Col(d[0].clone())
        } else {
            for (fj, dj) in f.iter_mut().zip(d) {
                *fj += &c[0] * dj;
            }
            ConstantFactor::Row(c[0].clone())
        };
        return Ok(FactoredRecognition::Sum(FactoredSumCertificate::Constant {
            first,
            second,
            e,
            f,
        }));
    }

    let j = (1..n).find(|&j| a[j] != a[0]).expect("a is not constant");
    if c[j] == c[0] {
        return Ok(FactoredRecognition::NotSum(NotSumReason::SharedRowValue { i: 0, j }));
    }
    let k = (&a[0] - &a[j]) / (&c[0] - &c[j]);
    let k1 = &a[0] - &k * &c[0];
    let k2 = &d[0] + &k * &b[0];
    for idx in 0..n {
        if a[idx] != &k * &c[idx] + &k1 {
            return Ok(FactoredRecognition::NotSum(NotSumReason::RowNotAffine { index: idx }));
        }
        if d[idx] != &k2 - &k * &b[idx] {
            return Ok(FactoredRecognition::NotSum(NotSumReason::ColNotAffine { index: idx }));
        }
    }
    let e = c.iter().map(|ci| &k2 * ci).collect();
    let f = b.iter().map(|bj| &k1 * bj).collect();
    Ok(FactoredRecognition::Sum(FactoredSumCertificate::Affine { k, k1, k2, e, f }))
}

/// `U Vᵀ` has zero off-diagonal part iff
/// `tr((UᵀU)(VᵀV)) = Σ_i (u_i · v_i)²`, the squared Frobenius norm of the
/// off-diagonal part being the difference. Linear in the row count.
fn low_rank_offdiagonal_is_zero(u: &[&[Rat]], v: &[&[Rat]]) -> bool {
    let r = u.len();
    assert_eq!(r, v.len());
    let n = u[0].len();
    let mut gram_u = vec![vec![Rat::zero(); r]; r];
    let mut gram_v = vec![vec![Rat::zero(); r]; r];
    let mut diagonal_sq = Rat::zero();
    for i in 0..n {
        let mut dot = Rat::zero();
        for p in 0..r {
            dot += &u[p][i] * &v[p][i];
            for q in p..r {
                gram_u[p][q] += &u[p][i] * &u[q][i];
                gram_v[p][q] += &v[p][i] * &v[q][i];
            }
        }
        diagonal_sq += &dot * &dot;
    }
    let mut trace = Rat::zero();
    for p in 0..r {
        for q in 0..r {
            let (lo, hi) = (p.min(q), p.max(q));
            trace += &gram_u[lo][hi] * &gram_v[lo][hi];
        }
    }
    trace == diagonal_sq
}

/// Symmetry of the off-diagonal part in `O(n)`.
pub fn offdiagonal_is_symmetric(f: &FactoredCost) -> bool {
    // Q - Qᵀ = [a c b d] [b d -a -c]ᵀ
    let neg_a: Vec<Rat> = f.a.iter().map(|x| -x).collect();
    let neg_c: Vec<Rat> = f.c.iter().map(|x| -x).collect();
    low_rank_offdiagonal_is_zero(&[&f.a, &f.c, &f.b, &f.d], &[&f.b, &f.d, &neg_a, &neg_c])
}

/// Checks `q(i,j) = w_i + w_j` for all `i != j` in `O(n)`.
fn offdiagonal_matches_weak_sum(f: &FactoredCost, w: &[Rat]) -> bool {
    let ones = vec![rat::int(1); f.len()];
    let neg_ones = vec![rat::int(-1); f.len()];
    let neg_w: Vec<Rat> = w.iter().map(|x| -x).collect();
    low_rank_offdiagonal_is_zero(&[&f.a, &f.c, w, &ones], &[&f.b, &f.d, &neg_ones, &neg_w])
}

/// The single-block graph classes accepted by the linear-time path, found
/// without running a full decomposition.
pub fn single_block_class(g: &Graph) -> Option<ComponentClass> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 4 && m == n * (n - 1) / 2 {
        return Some(ComponentClass::Clique);
    }
    let mut colour = vec![None; n];
    colour[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let cv = colour[v].unwrap();
        for &(w, _) in g.neighbours(v) {
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
    let right = n - left;
    (left >= 3 && right >= 3 && m == left * right).then_some(ComponentClass::Biclique3)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactoredVerdict {
    Linearizable {
        c: Vec<Rat>,
        w: Vec<Rat>,
        /// `None` when the full rank-2 matrix is not a sum matrix but its
        /// off-diagonal part still is a weak sum (the diagonal is free).
        certificate: Option<FactoredSumCertificate>,
    },
    NotLinearizable {
        reason: NotSumReason,
    },
}

/// Linearization of a factored cost on `K_n` (`n >= 4`) or `K_{n1,n2}`
/// (both sides at least 3), in `O(m)`.
pub fn linearize_factored(g: &Graph, cost: &FactoredCost) -> Result<(ComponentClass, FactoredVerdict)> {
    let m = g.edge_count();
    if cost.len() != m {
        return Err(Error::DimensionMismatch {
            what: "factored cost".into(),
            expected: m,
            found: cost.len(),
        });
    }
    let class = single_block_class(g).ok_or_else(|| {
        Error::WrongGraphClass("linear-time path needs K_n with n >= 4 or K_{n1,n2} with both sides >= 3".into())
    })?;
    let recognition = recognize_factored_sum(&cost.a, &cost.b, &cost.c, &cost.d)?;
    let (w, certificate) = match recognition {
        FactoredRecognition::Sum(cert) => {
            let (e, f) = cert.vectors();
            let shift = &e[0] - &f[0];
            if let Some(i) = (1..m).find(|&i| &e[i] - &f[i] != shift) {
                return Err(Error::NotSymmetricOffDiagonal { pair: Some((0, i)) });
            }
            let half_shift = shift * rat::frac(1, 2);
            let w: Vec<Rat> = e.iter().map(|ei| ei - &half_shift).collect();
            (w, Some(cert))
        }
        FactoredRecognition::NotSum(reason) => {
            if !offdiagonal_is_symmetric(cost) {
                return Err(Error::NotSymmetricOffDiagonal { pair: None });
            }
            let w = weak_sum_candidate(cost);
            if !offdiagonal_matches_weak_sum(cost, &w) {
                return Ok((class, FactoredVerdict::NotLinearizable { reason }));
            }
            (w, None)
        }
    };
    // r(i) = (|V| - 1) w_i and c(i) = 2 r(i) + q(i,i) - 2 w_i
    let factor = rat::int(2 * (g.vertex_count() as i64) - 4);
    let c = w
        .iter()
        .zip(&cost.diag)
        .map(|(wi, qi)| &factor * wi + qi)
        .collect();
    Ok((class, FactoredVerdict::Linearizable { c, w, certificate }))
}

/// The vector forced by rows 0, 1, 2 of the off-diagonal part.
fn weak_sum_candidate(cost: &FactoredCost) -> Vec<Rat> {
    let q01 = cost.entry(0, 1);
    let q02 = cost.entry(0, 2);
    let q12 = cost.entry(1, 2);
    let w0 = (q01 + q02 - q12) * rat::frac(1, 2);
    let mut w = Vec::with_capacity(cost.len());
    w.push(w0.clone());
    w.extend((1..cost.len()).map(|j| cost.entry(0, j) - &w0));
    w
}
