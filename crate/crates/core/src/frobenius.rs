//! Frobenius forms: symmetric bilinear forms satisfying (uv, w) = (u, vw).
//!
//! The space of all such forms on a given table is the solution space of a
//! linear system over the upper-triangular Gram entries; it is solved exactly
//! and returned with a canonical basis. Forms are normalized on axes by
//! (a, a) = 1 when possible.

use crate::algebra::{AlgebraTable, Ideal};
use crate::axes::Axis;
use crate::error::Error;
use crate::linalg::{nullspace, solve_linear, vec_is_zero, Matrix, Subspace, Vector};
use crate::scalar::{Field, Scalar};

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

/// A validated Frobenius form: symmetric and associative for its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    gram: Matrix,
}

impl FrobeniusForm {
    /// Validates symmetry and associativity of the Gram matrix against the
    /// table, naming the first offending entry or triple.
    pub fn new(table: &AlgebraTable, gram: Matrix) -> Result<FrobeniusForm, Error> {
        let n = table.dimension();
        if gram.nrows() != n || gram.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: gram.nrows().max(gram.ncols()),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram.at(i, j) != gram.at(j, i) {
                    return Err(Error::FormNotSymmetric { i, j });
                }
            }
        }
        let form = FrobeniusForm { gram };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = form.evaluate(table.basis_product(i, j), &table.basis_vector(k));
                    let rhs = form.evaluate(&table.basis_vector(i), table.basis_product(j, k));
                    if lhs != rhs {
                        return Err(Error::FormNotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn zero(table: &AlgebraTable) -> FrobeniusForm {
        FrobeniusForm {
            gram: Matrix::zero(table.field(), table.dimension(), table.dimension()),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn evaluate(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let w = self.gram.mul_vector(v);
        let mut acc = u
            .first()
            .map(|s| s.field().zero())
            .expect("forms live on positive-dimensional algebras");
        for (ui, wi) in u.iter().zip(&w) {
            if !ui.is_zero() && !wi.is_zero() {
                acc = &acc + &(ui * wi);
            }
        }
        acc
    }
}

/// A canonical basis of the linear space of Frobenius forms on a table.
#[derive(Clone, Debug)]
pub struct FormSpace {
    field: Field,
    dimension: usize,
    basis: Vec<Matrix>,
}

impl FormSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn algebra_dimension(&self) -> usize {
        self.dimension
    }

    /// The form with the given coefficients against the basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        assert_eq!(coeffs.len(), self.basis.len(), "one coefficient per basis form");
        let n = self.dimension;
        let mut gram = Matrix::zero(self.field, n, n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let v = &*gram.at(i, j) + &(c * b.at(i, j));
                    gram.set(i, j, v);
                }
            }
        }
        gram
    }
}

/// Solves for every Frobenius form on the table: unknowns are the Gram
/// entries g_{ij} for i <= j, constraints are (b_i b_j, b_k) = (b_i, b_j b_k)
/// over all basis triples. Only i <= k is enumerated: the (k,j,i) constraint
/// is the negation of the (i,j,k) one once symmetry is baked into the
/// unknowns. The returned basis is canonical, so repeated runs agree exactly.
pub fn solve_frobenius_space(table: &AlgebraTable) -> FormSpace {
    let n = table.dimension();
    let field = table.field();
    let unknowns = n * (n + 1) / 2;
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..n {
        for k in i..n {
            for j in 0..n {
                let mut row = vec![field.zero(); unknowns];
                let mut nonzero = false;
                // (b_i b_j, b_k): sum_l c_l g_{lk}
                for (l, c) in table.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let (a, b) = if l <= k { (l, k) } else { (k, l) };
                        let slot = pair_index(n, a, b);
                        row[slot] = &row[slot] + c;
                        nonzero = true;
                    }
                }
                // minus (b_i, b_j b_k): sum_l c_l g_{il}
                for (l, c) in table.basis_product(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        let (a, b) = if i <= l { (i, l) } else { (l, i) };
                        let slot = pair_index(n, a, b);
                        row[slot] = &row[slot] - c;
                        nonzero = true;
                    }
                }
                if nonzero && !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    // Every constraint can vanish identically (a one-dimensional algebra),
    // and an empty system cannot carry the field, so keep that case explicit.
    let kernel = if rows.is_empty() {
        Subspace::full(field, unknowns)
    } else {
        let constraints = Matrix::from_rows(unknowns, rows).expect("rows share the unknown count");
        nullspace(&constraints)
    };
    let basis = kernel
        .basis()
        .iter()
        .map(|coeffs| {
            let mut gram = Matrix::zero(field, n, n);
            for i in 0..n {
                for j in i..n {
                    let v = coeffs[pair_index(n, i, j)].clone();
                    gram.set(j, i, v.clone());
                    gram.set(i, j, v);
                }
            }
            gram
        })
        .collect();
    FormSpace {
        field,
        dimension: n,
        basis,
    }
}

/// Outcome of pinning a form by (a, a) = 1 on every axis.
#[derive(Clone, Debug)]
pub enum Normalization {
    Unique(FrobeniusForm),
    /// A representative plus the dimension of forms satisfying the same
    /// constraints.
    Ambiguous { form: FrobeniusForm, degrees: usize },
    /// No form in the space satisfies all constraints; lists the axes whose
    /// constraint row is identically zero (axes isotropic for the whole
    /// space), empty when the system is only jointly inconsistent.
    Unsatisfiable { isotropic_axes: Vec<usize> },
}

/// Finds the forms in `space` with (a, a) = 1 for every given axis vector.
pub fn normalize_on_axes(
    table: &AlgebraTable,
    space: &FormSpace,
    axes: &[Vector],
) -> Normalization {
    let field = table.field();
    let d = space.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for a in axes {
        let row: Vector = space
            .basis()
            .iter()
            .map(|b| {
                let form = FrobeniusForm { gram: b.clone() };
                form.evaluate(a, a)
            })
            .collect();
        rows.push(row);
    }
    let m = Matrix::from_rows(d, rows.clone()).expect("one row per axis");
    let rhs = vec![field.one(); axes.len()];
    match solve_linear(&m, &rhs) {
        None => Normalization::Unsatisfiable {
            isotropic_axes: rows
                .iter()
                .enumerate()
                .filter(|(_, r)| vec_is_zero(r))
                .map(|(i, _)| i)
                .collect(),
        },
        Some((coeffs, homogeneous)) => {
            let gram = space.combine(&coeffs);
            let form = FrobeniusForm { gram };
            debug_assert!(FrobeniusForm::new(table, form.gram.clone()).is_ok());
            if homogeneous.dim() == 0 {
                Normalization::Unique(form)
            } else {
                Normalization::Ambiguous {
                    form,
                    degrees: homogeneous.dim(),
                }
            }
        }
    }
}

/// The radical of the form: the nullspace of the Gram matrix. For a
/// Frobenius form this is automatically an ideal; the check is re-run and an
/// invariant violation reported if it fails (which means the form was not
/// associative for the table).
pub fn form_radical(table: &AlgebraTable, form: &FrobeniusForm) -> Result<Ideal, Error> {
    let space = nullspace(form.gram());
    table.ideal(space)
}

/// Result of checking that eigenspaces for distinct eigenvalues are
/// orthogonal under a form.
#[derive(Clone, Debug)]
pub struct OrthogonalityCheck {
    pub holds: bool,
    /// (lambda, mu, v, w) with (v, w) != 0, when a violation exists.
    pub witness: Option<(Scalar, Scalar, Vector, Vector)>,
}

/// Verifies (A_lambda, A_mu) = 0 for all pairs of distinct eigenvalues of
/// one axis.
pub fn check_eigenspace_orthogonality(
    law_values: &[Scalar],
    axis: &Axis,
    form: &FrobeniusForm,
) -> OrthogonalityCheck {
    let spaces = axis.eigenspaces();
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            for v in spaces[i].basis() {
                for w in spaces[j].basis() {
                    let val = form.evaluate(v, w);
                    if !val.is_zero() {
                        return OrthogonalityCheck {
                            holds: false,
                            witness: Some((
                                law_values[i].clone(),
                                law_values[j].clone(),
                                v.clone(),
                                w.clone(),
                            )),
                        };
                    }
                }
            }
        }
    }
    OrthogonalityCheck {
        holds: true,
        witness: None,
    }
}

/// The form value (a, a) deciding whether an axis is singular for the form.
pub fn axis_singularity(form: &FrobeniusForm, axis: &Axis) -> Scalar {
    form.evaluate(axis.vector(), axis.vector())
}
