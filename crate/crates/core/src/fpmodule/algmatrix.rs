use crate::algebra::{Element, LocalAlgebra};
use crate::exactmath::{Matrix, Scalar};

/// A matrix with entries in a [`LocalAlgebra`], i.e. an `A`-linear map
/// `A^cols -> A^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl AlgMatrix {
    pub fn zeros(alg: &LocalAlgebra, rows: usize, cols: usize) -> Self {
        AlgMatrix {
            rows,
            cols,
            entries: vec![alg.zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Element>>, cols: usize) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged algebra matrix");
            entries.extend(row);
        }
        AlgMatrix {
            rows: r,
            cols,
            entries,
        }
    }

    /// Each column is a vector in `k^(rows·dim A)`, block `i` holding entry `(i, j)`.
    pub fn from_column_vectors(dim: usize, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                entries.push(c[i * dim..(i + 1) * dim].to_vec());
            }
        }
        AlgMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Element> {
        self.entries.iter()
    }

    /// The `k`-linear map `k^(cols·d) -> k^(rows·d)`; block `(i, j)` is
    /// multiplication by entry `(i, j)`.
    pub fn to_linear(&self, alg: &LocalAlgebra) -> Matrix {
        let d = alg.dim();
        let mut out = Matrix::zeros(alg.ctx(), self.rows * d, self.cols * d);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !alg.is_zero(e) {
                    out.set_block(i * d, j * d, &alg.mul_matrix(e));
                }
            }
        }
        out
    }

    pub fn mul(&self, alg: &LocalAlgebra, rhs: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.cols, rhs.rows, "algebra matrix product shape");
        let mut out = AlgMatrix::zeros(alg, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = alg.zero();
                for k in 0..self.cols {
                    acc = alg.add(&acc, &alg.multiply(self.get(i, k), rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn transpose(&self) -> AlgMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        AlgMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(Scalar::is_zero))
    }

    /// Minimality: every entry lies in the maximal ideal.
    pub fn entries_in_max_ideal(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.first().is_none_or(Scalar::is_zero))
    }

    /// Block-diagonal sum `[self 0; 0 rhs]`.
    pub fn block_diagonal(&self, alg: &LocalAlgebra, rhs: &AlgMatrix) -> AlgMatrix {
        let mut out = AlgMatrix::zeros(alg, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn display(&self, alg: &LocalAlgebra) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols)
                    .map(|j| alg.element_to_string(self.get(i, j)))
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}
