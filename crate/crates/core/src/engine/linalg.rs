//! Row spaces over `Z/p` kept in reduced row echelon form.

use crate::exec::Execution;

use super::field::PrimeField;

/// Batches smaller than this are reduced sequentially regardless of mode.
const PARALLEL_THRESHOLD: usize = 64;

/// A subspace of `F_p^ncols` stored as its unique reduced echelon basis,
/// rows ordered by pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ncols: usize) -> Self {
        Subspace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ncols: usize) -> Self {
        let rows = (0..ncols)
            .map(|i| {
                let mut r = vec![0; ncols];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            ncols,
            rows,
            pivots: (0..ncols).collect(),
        }
    }

    pub fn spanned_by(field: PrimeField, ncols: usize, rows: Vec<Vec<u64>>, exec: Execution) -> Self {
        let mut s = Subspace::zero(ncols);
        s.extend(field, rows, exec);
        s
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ncols - self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Normal form of `v` modulo the subspace: zero in every pivot column.
    pub fn reduce(&self, field: PrimeField, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
    }

    pub fn contains(&self, field: PrimeField, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, field: PrimeField, mut v: Vec<u64>) -> bool {
        self.reduce(field, &mut v);
        self.insert_reduced(field, v)
    }

    fn insert_reduced(&mut self, field: PrimeField, mut v: Vec<u64>) -> bool {
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = field.inv(v[p]);
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[p];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v) {
                if r != 0 {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Adds a batch of rows. The batch is first reduced against the current
    /// basis (in parallel when allowed), then inserted one at a time.
    pub fn extend(&mut self, field: PrimeField, mut rows: Vec<Vec<u64>>, exec: Execution) {
        if rows.len() >= PARALLEL_THRESHOLD && !self.rows.is_empty() {
            let me = &*self;
            exec.for_each_mut(&mut rows, |r| me.reduce(field, r));
        }
        for r in rows {
            if self.rows.len() == self.ncols {
                break;
            }
            self.insert(field, r);
        }
    }

    pub fn contains_subspace(&self, field: PrimeField, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(field, r))
    }
}

/// Rank of the row space of `rows`.
pub fn rank(field: PrimeField, ncols: usize, rows: Vec<Vec<u64>>, exec: Execution) -> usize {
    Subspace::spanned_by(field, ncols, rows, exec).dim()
}

/// Basis of `{c : sum_i c_i rows[i] = 0}`, in reduced echelon form.
pub fn left_kernel(field: PrimeField, ncols: usize, rows: &[Vec<u64>], exec: Execution) -> Subspace {
    let m = rows.len();
    let augmented: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = Vec::with_capacity(ncols + m);
            a.extend_from_slice(r);
            a.resize(ncols + m, 0);
            a[ncols + i] = 1;
            a
        })
        .collect();
    let echelon = Subspace::spanned_by(field, ncols + m, augmented, exec);
    let kernel_rows = echelon
        .rows
        .iter()
        .zip(&echelon.pivots)
        .filter(|(_, &p)| p >= ncols)
        .map(|(r, _)| r[ncols..].to_vec())
        .collect();
    Subspace::spanned_by(field, m, kernel_rows, Execution::Sequential)
}
