//! Small dense square matrices, row-major. Ladder truncations stay below a few
//! hundred rows, so nothing here tries to be clever.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// From row-major data; `None` when the length is not a perfect square.
    pub fn from_row_major(data: Vec<f64>) -> Option<Self> {
        let dim = libm::sqrt(data.len() as f64) as usize;
        (dim * dim == data.len()).then_some(Self { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Matrix {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(f64, f64) -> f64) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    /// Largest absolute entry of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_products() {
        // lowering shift times raising shift is identity except the top corner
        let n = 4;
        let mut s = Matrix::zeros(n);
        for i in 1..n {
            s[(i - 1, i)] = 1.0;
        }
        let p = s.matmul(&s.transpose());
        assert_eq!(p.diag(), vec![1.0, 1.0, 1.0, 0.0]);
        assert_eq!(Matrix::from_row_major(p.as_slice().to_vec()).unwrap(), p);
        assert!(Matrix::from_row_major(vec![0.0; 3]).is_none());
    }
}
