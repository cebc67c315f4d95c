//! Exact linear algebra over Q or GF(p).
//!
//! Subspaces are stored as reduced row echelon bases, which are unique per
//! subspace, so structural equality of `Subspace` values is equality of
//! subspaces. All pivoting is exact; there is no magnitude-based pivot
//! selection.

use crate::error::Error;
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// dst += c * src
pub fn vec_axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    assert_eq!(dst.len(), src.len(), "vector length mismatch");
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d = &*d + &(c * s);
    }
}

/// A dense matrix stored by rows. Rows all share the declared column count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Matrix, Error> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
        }
        Ok(Matrix { cols, rows })
    }

    pub fn zero(field: Field, nrows: usize, cols: usize) -> Matrix {
        Matrix {
            cols,
            rows: vec![zero_vector(field, cols); nrows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let rows = (0..n).map(|i| unit_vector(field, n, i)).collect();
        Matrix { cols: n, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn mul_vector(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        assert!(
            self.cols > 0 || self.rows.is_empty(),
            "zero-column matrix applied to a vector"
        );
        self.rows
            .iter()
            .map(|row| {
                let mut acc = row[0].field().zero();
                for (m, x) in row.iter().zip(v) {
                    if !m.is_zero() && !x.is_zero() {
                        acc = &acc + &(m * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// self - lambda * I, for square matrices.
    pub fn sub_scaled_identity(&self, lambda: &Scalar) -> Matrix {
        assert_eq!(self.nrows(), self.cols, "square matrix required");
        let mut m = self.clone();
        for i in 0..m.nrows() {
            m.rows[i][i] = &m.rows[i][i] - lambda;
        }
        m
    }
}

/// Eliminates `rows` in place to reduced row echelon form and drops zero
/// rows. Returns the pivot column of each surviving row, strictly increasing.
fn rref_in_place(rows: &mut Vec<Vector>) -> Vec<usize> {
    let mut pivots: Vec<usize> = Vec::new();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            rows[rank] = vec_scale(&inv, &rows[rank]);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = -&row[col];
                vec_axpy(row, &c, &pivot);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// A linear subspace of F^n in canonical form: the stored basis is the unique
/// reduced row echelon basis, so `==` decides equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Wraps rows that are already in reduced echelon form, e.g. produced by
    /// an external elimination. Debug builds verify the invariant.
    pub(crate) fn from_rref_rows(ambient: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(basis.len(), pivots.len());
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(basis
            .iter()
            .zip(&pivots)
            .all(|(row, &p)| row[p].is_one() && row[..p].iter().all(Scalar::is_zero)));
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The residual of `v` after eliminating against the basis; zero iff
    /// `v` lies in the subspace. The residual is linear in `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                vec_axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis.iter().all(|row| other.contains(row))
    }

    /// Coordinates of `v` in this basis, `None` if `v` is outside. Because
    /// the basis is in reduced form, the coordinate on basis row r is just
    /// the entry of `v` at that row's pivot column.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows: Vec<Vector> = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        rref(self.ambient, &rows).expect("canonical bases are rectangular")
    }

    /// Intersection by double-basis elimination: eliminate rows [u|u] for u in
    /// self and [v|0] for v in other; rows whose left half vanishes carry a
    /// basis of the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        let mut rows: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            let field = v[0].field();
            row.extend(std::iter::repeat_with(|| field.zero()).take(n));
            rows.push(row);
        }
        rref_in_place(&mut rows);
        let inter: Vec<Vector> = rows
            .into_iter()
            .filter(|row| vec_is_zero(&row[..n]))
            .map(|row| row[n..].to_vec())
            .collect();
        rref(n, &inter).expect("intersection rows are rectangular")
    }
}

/// Canonicalizes a spanning list into the unique reduced-echelon basis of its
/// row space. Rows must share the length `ambient`.
pub fn rref(ambient: usize, rows: &[Vector]) -> Result<Subspace, Error> {
    for row in rows {
        if row.len() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: row.len(),
            });
        }
    }
    let mut work = rows.to_vec();
    let pivots = rref_in_place(&mut work);
    Ok(Subspace::from_rref_rows(ambient, work, pivots))
}

/// The solution space of M x = 0, as a canonical subspace of F^(ncols).
pub fn nullspace(m: &Matrix) -> Subspace {
    let n = m.ncols();
    let mut work = m.rows().to_vec();
    let pivots = rref_in_place(&mut work);
    let field = match work.first().and_then(|r| r.first()) {
        Some(s) => s.field(),
        None => {
            // No constraints survive; the nullspace is everything, but we
            // still need a field to write the identity basis. Take it from
            // the original matrix if it has entries, else default over Q:
            // a zero-row matrix over an unknown field only arises for 0x0
            // systems, where the answer below is empty anyway.
            match m.rows().first().and_then(|r| r.first()) {
                Some(s) => s.field(),
                None => Field::Rational,
            }
        }
    };
    if n == 0 {
        return Subspace::zero(0);
    }
    let pivot_set: Vec<bool> = {
        let mut set = vec![false; n];
        for &p in &pivots {
            set[p] = true;
        }
        set
    };
    let mut basis: Vec<Vector> = Vec::new();
    for free in (0..n).filter(|&c| !pivot_set[c]) {
        let mut v = zero_vector(field, n);
        v[free] = field.one();
        for (row, &p) in work.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    rref(n, &basis).expect("nullspace rows are rectangular")
}

/// Solves M x = rhs exactly. Returns a particular solution (free variables
/// set to zero) together with the homogeneous solution space, or `None` when
/// the system is inconsistent.
pub fn solve_linear(m: &Matrix, rhs: &[Scalar]) -> Option<(Vector, Subspace)> {
    assert_eq!(rhs.len(), m.nrows(), "right-hand side length mismatch");
    let n = m.ncols();
    let field = rhs
        .first()
        .map(Scalar::field)
        .or_else(|| m.rows().first().and_then(|r| r.first().map(Scalar::field)))
        .unwrap_or(Field::Rational);
    let mut rows: Vec<Vector> = m
        .rows()
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref_in_place(&mut rows);
    if pivots.last().is_some_and(|&p| p == n) {
        return None;
    }
    let mut particular = zero_vector(field, n);
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }
    Some((particular, nullspace(m)))
}
