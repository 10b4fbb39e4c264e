use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{poly::IntPoly, AlgebraError};
use crate::graph::Graph;

/// Dense row-major integer matrix.
///
/// Most operations here are defined for square matrices; the incidence
/// matrix and the all-ones blocks `J_{mn}` are the rectangular exceptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.set(i, i, BigInt::from(1));
        }
        out
    }

    /// All-ones `rows x cols` matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::from(1); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let data = (0..rows * cols)
            .map(|k| BigInt::from(f(k / cols, k % cols)))
            .collect();
        IntMatrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `c I - self`.
    pub fn shifted_negation(&self, c: &BigInt) -> IntMatrix {
        let mut out = IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        };
        for i in 0..self.rows.min(self.cols) {
            let d = out.get(i, i) + c;
            out.set(i, i, d);
        }
        out
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut a = self.data.clone();
        let mut sign = false;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = &pivot * &a[i * n + j] - &aik * &a[k * n + j];
                    // Sylvester's identity makes this division exact
                    a[i * n + j] = v.div_floor(&prev);
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// `det(x I - self)` by Faddeev–LeVerrier; every division by `k` is exact
    /// for integer input.
    pub fn char_poly(&self) -> Result<IntPoly, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self * &m;
            for i in 0..n {
                let d = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, d);
            }
            let trace = (self * &next).trace();
            let (q, r) = (-trace).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero());
            coeffs[n - k] = q;
            m = next;
        }
        Ok(IntPoly::new(coeffs))
    }
}

pub fn det_exact(mat: &IntMatrix) -> Result<BigInt, AlgebraError> {
    mat.det()
}

pub fn char_poly_exact(mat: &IntMatrix) -> Result<IntPoly, AlgebraError> {
    mat.char_poly()
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

pub fn adjacency(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |i, j| g.has_edge(i, j) as i64)
}

pub fn degree_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |i, j| if i == j { g.degree(i) as i64 } else { 0 })
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            -(g.has_edge(i, j) as i64)
        }
    })
}

/// Vertex-by-edge 0/1 incidence matrix, columns in the graph's edge order.
pub fn incidence(g: &Graph) -> IntMatrix {
    let edges = g.edges();
    IntMatrix::from_fn(g.vertex_count(), edges.len(), |v, e| {
        (edges[e].0 == v || edges[e].1 == v) as i64
    })
}
