//! Dense integer matrices and Smith normal form.
//!
//! Everything is generic over [`ExactInt`], which any signed
//! `num_integer::Integer` satisfies. The crate defaults to
//! [`num_bigint::BigInt`] (see [`crate::Int`]) so elimination cannot
//! overflow; fixed-width types are fine when entries are known to stay small.

use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait ExactInt:
    Integer + Signed + Clone + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer conversion")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{:?}", self[(r, c)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: ExactInt> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| <T as ExactInt>::from_i64(v)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(T::zero(), |acc, c| acc + self[(r, c)].clone() * v[c].clone())
            })
            .collect()
    }

    /// Block `[self | other]`.
    pub fn hconcat(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.rows, other.rows, "row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    /// Columns `range` as a new matrix; rows restricted to `0..rows`.
    pub fn submatrix(&self, rows: usize, cols: std::ops::Range<usize>) -> Matrix<T> {
        let mut out = Matrix::zeros(rows, cols.len());
        for r in 0..rows {
            for (j, c) in cols.clone().enumerate() {
                out[(r, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Matrix<T> {
        let mut out = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                out[(r, c)] = v.clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &T) {
        for c in 0..self.cols {
            let v = self[(src, c)].clone();
            if !v.is_zero() {
                self[(dst, c)] = self[(dst, c)].clone() + q.clone() * v;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &T) {
        for r in 0..self.rows {
            let v = self[(r, src)].clone();
            if !v.is_zero() {
                self[(r, dst)] = self[(r, dst)].clone() + q.clone() * v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self[(r, c)] = -self[(r, c)].clone();
        }
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next; the first `rank` entries are positive.
#[derive(Debug, Clone)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: ExactInt> Smith<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Nontrivial invariant factors, ascending.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Columns of `v` spanning the integer kernel of the original matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        (self.rank..self.v.cols()).map(|c| self.v.column(c)).collect()
    }

    /// Integer solution of `a x = b`, if one exists.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let ub = self.u.mul_vec(b);
        let mut z = vec![T::zero(); self.v.rows()];
        for (i, value) in ub.iter().enumerate() {
            if i < self.rank {
                let (q, r) = value.div_rem(&self.d[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !value.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&z))
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form<T: ExactInt>(a: &Matrix<T>) -> Smith<T> {
    let (s, _) = smith(a, true, true, false);
    s
}

/// Smith form with `v` and its inverse; `u` is not tracked and left empty.
pub(crate) fn smith_column_transform<T: ExactInt>(a: &Matrix<T>) -> (Smith<T>, Matrix<T>) {
    let (s, v_inv) = smith(a, false, true, true);
    (s, v_inv.expect("tracked"))
}

fn smith<T: ExactInt>(a: &Matrix<T>, track_u: bool, track_v: bool, track_v_inv: bool) -> (Smith<T>, Option<Matrix<T>>) {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = if track_u { Matrix::identity(m) } else { Matrix::zeros(0, 0) };
    let mut v = if track_v { Matrix::identity(n) } else { Matrix::zeros(0, 0) };
    // column operations on v are row operations on its inverse
    let mut v_inv = track_v_inv.then(|| Matrix::identity(n));
    let mut t = 0;
    while t < m.min(n) {
        // pivot: least nonzero absolute value in the trailing block; a unit
        // cannot be beaten, so stop at the first one
        let mut best: Option<(usize, usize, T)> = None;
        'search: for r in t..m {
            for c in t..n {
                let x = &d[(r, c)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    let unit = ax.is_one();
                    best = Some((r, c, ax));
                    if unit {
                        break 'search;
                    }
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        d.swap_rows(t, pr);
        d.swap_cols(t, pc);
        if track_u {
            u.swap_rows(t, pr);
        }
        if track_v {
            v.swap_cols(t, pc);
        }
        if let Some(w) = v_inv.as_mut() {
            w.swap_rows(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..m {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = d[(r, t)].div_floor(&d[(t, t)]);
                d.add_row(r, t, &-q.clone());
                if track_u {
                    u.add_row(r, t, &-q);
                }
                if !d[(r, t)].is_zero() {
                    d.swap_rows(t, r);
                    if track_u {
                        u.swap_rows(t, r);
                    }
                    dirty = true;
                }
            }
            for c in t + 1..n {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = d[(t, c)].div_floor(&d[(t, t)]);
                d.add_col(c, t, &-q.clone());
                if track_v {
                    v.add_col(c, t, &-q.clone());
                }
                if let Some(w) = v_inv.as_mut() {
                    w.add_row(t, c, &q);
                }
                if !d[(t, c)].is_zero() {
                    d.swap_cols(t, c);
                    if track_v {
                        v.swap_cols(t, c);
                    }
                    if let Some(w) = v_inv.as_mut() {
                        w.swap_rows(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // row and column clear; enforce divisibility of the trailing block
            if d[(t, t)].abs().is_one() {
                break;
            }
            let offender = (t + 1..m)
                .flat_map(|r| (t + 1..n).map(move |c| (r, c)))
                .find(|&(r, c)| !d[(r, c)].is_multiple_of(&d[(t, t)]));
            match offender {
                Some((r, _)) => {
                    d.add_row(t, r, &T::one());
                    if track_u {
                        u.add_row(t, r, &T::one());
                    }
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            if track_u {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    (Smith { u, d, v, rank: t }, v_inv)
}

pub fn rank<T: ExactInt>(a: &Matrix<T>) -> usize {
    smith(a, false, false, false).0.rank
}

/// Finite abelian group given by invariant factors plus free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: ExactInt> AbelianInvariants<T> {
    pub fn trivial() -> Self {
        AbelianInvariants { free_rank: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    /// `0`, or summands joined by ` ⊕ ` such as `Z^2 ⊕ Z/2`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// Cokernel `Z^rows / image(a)`.
pub fn cokernel<T: ExactInt>(a: &Matrix<T>) -> AbelianInvariants<T> {
    let (s, _) = smith(a, false, false, false);
    AbelianInvariants { free_rank: a.rows() - s.rank, torsion: s.invariant_factors() }
}

/// Invariant factors of the abelian group with cyclic decomposition
/// `orders`, e.g. `[2, 3] → [6]`.
pub fn normalize_cyclic_orders<T: ExactInt>(orders: &[T]) -> Vec<T> {
    let n = orders.len();
    let mut m = Matrix::zeros(n, n);
    for (i, d) in orders.iter().enumerate() {
        m[(i, i)] = d.clone();
    }
    cokernel(&m).torsion
}
