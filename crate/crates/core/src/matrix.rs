//! Dense rational matrices and sum / weak-sum recognition.

use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::ComponentDecomposition;
use crate::rat::{self, Rat};

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Square quadratic cost matrix; entry `(e, f)` is `q(e, f)`.
pub type CostMatrix = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: rat::zeros(rows * cols),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                what: "matrix row".into(),
                expected: cols,
                found: bad.len(),
            });
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics on ragged input; meant for literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| rat::ints(r)).collect()).expect("ragged literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// First `(i, j)` with `i < j` and `h(i,j) != h(j,i)`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// `(Q + Qᵀ) / 2`.
    pub fn symmetrize(&self) -> Matrix {
        assert!(self.is_square(), "symmetrize needs a square matrix");
        let half = rat::frac(1, 2);
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i)) * &half
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn scale(&self, factor: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul<&Rat> for &Matrix {
    type Output = Matrix;

    fn mul(self, factor: &Rat) -> Matrix {
        self.scale(factor)
    }
}

/// `h(i, j) = row[i] + col[j]`, normalized so that `row[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumCertificate {
    pub row: Vec<Rat>,
    pub col: Vec<Rat>,
}

impl SumCertificate {
    pub fn value(&self, i: usize, j: usize) -> Rat {
        &self.row[i] + &self.col[j]
    }
}

/// Rows `i, j` and columns `k, l` with `h(i,k) + h(j,l) != h(i,l) + h(j,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumWitness {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

/// Decides whether `h` is a sum matrix. Any single row or column succeeds.
pub fn recognize_sum(h: &Matrix) -> std::result::Result<SumCertificate, SumWitness> {
    assert!(h.rows() > 0 && h.cols() > 0, "empty matrix");
    let corner = h.get(0, 0);
    let col: Vec<Rat> = h.row(0).to_vec();
    let row: Vec<Rat> = (0..h.rows()).map(|i| h.get(i, 0) - corner).collect();
    for i in 1..h.rows() {
        for j in 1..h.cols() {
            if *h.get(i, j) != &row[i] + &col[j] {
                return Err(SumWitness {
                    rows: (0, i),
                    cols: (0, j),
                });
            }
        }
    }
    Ok(SumCertificate { row, col })
}

/// `h(i, j) = w[i] + w[j]` for all `i != j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSumCertificate {
    pub w: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSumWitness {
    /// First off-diagonal entry that disagrees with the forced vector.
    pub pair: (usize, usize),
    pub expected: Rat,
    pub found: Rat,
    /// Distinct `[p, q, r, s]` with `h(p,q) + h(r,s) != h(p,r) + h(q,s)`.
    pub quadruple: Option<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakSumFailure {
    NotSymmetric { row: usize, col: usize },
    Violation(WeakSumWitness),
}

/// Decides whether a symmetric matrix is a weak sum matrix. The diagonal is
/// never inspected, and every matrix of size at most 3 qualifies.
pub fn recognize_weak_sum(h: &Matrix) -> std::result::Result<WeakSumCertificate, WeakSumFailure> {
    if let Some((row, col)) = h.first_asymmetry() {
        return Err(WeakSumFailure::NotSymmetric { row, col });
    }
    let k = h.rows();
    let w = match k {
        0 => Vec::new(),
        1 => rat::zeros(1),
        2 => vec![h.get(0, 1).clone(), Rat::zero()],
        _ => {
            let first = (h.get(0, 1) + h.get(0, 2) - h.get(1, 2)) * rat::frac(1, 2);
            let mut w = Vec::with_capacity(k);
            w.push(first.clone());
            w.extend((1..k).map(|j| h.get(0, j) - &first));
            w
        }
    };
    for i in 0..k {
        for j in i + 1..k {
            let expected = &w[i] + &w[j];
            if *h.get(i, j) != expected {
                return Err(WeakSumFailure::Violation(WeakSumWitness {
                    pair: (i, j),
                    found: h.get(i, j).clone(),
                    quadruple: conflicting_quadruple(h, i, j),
                    expected,
                }));
            }
        }
    }
    Ok(WeakSumCertificate { w })
}

fn conflicting_quadruple(h: &Matrix, i: usize, j: usize) -> Option<[usize; 4]> {
    let k = h.rows();
    let inconsistent = |p: usize, q: usize, r: usize, s: usize| {
        h.get(p, q) + h.get(r, s) != h.get(p, r) + h.get(q, s)
    };
    for r in 0..k {
        for s in 0..k {
            if r == s || [i, j].contains(&r) || [i, j].contains(&s) {
                continue;
            }
            if inconsistent(i, j, r, s) {
                return Some([i, j, r, s]);
            }
        }
    }
    // every violation has some alternating 4-cycle behind it, possibly not
    // through (i, j)
    for p in 0..k {
        for q in 0..k {
            for r in 0..k {
                for s in 0..k {
                    let distinct = p != q && p != r && p != s && q != r && q != s && r != s;
                    if distinct && inconsistent(p, q, r, s) {
                        return Some([p, q, r, s]);
                    }
                }
            }
        }
    }
    None
}

/// Common spanning-tree cost of each row of a matrix that is constant on
/// every biconnected component.
///
/// `row_values[i][c]` is the value of row `i` on component `c`. Every
/// spanning tree uses exactly `|V_c| - 1` edges of component `c`.
pub fn row_tree_constants(row_values: &[Vec<Rat>], decomp: &ComponentDecomposition) -> Vec<Rat> {
    row_values
        .iter()
        .map(|values| {
            assert_eq!(values.len(), decomp.len(), "one value per component");
            values
                .iter()
                .zip(&decomp.components)
                .fold(Rat::zero(), |acc, (value, comp)| {
                    acc + value * Rat::from_integer((comp.vertices.len() - 1).into())
                })
        })
        .collect()
}
