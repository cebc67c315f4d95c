//! Axis verification and axial algebras.
//!
//! An axis is a nonzero idempotent whose adjoint action is diagonalizable
//! with all eigenvalues among the fusion-law values, whose eigenvectors fuse
//! as the law prescribes, and whose 1-eigenspace is the line it spans. An
//! axial algebra is an algebra generated by a set of such axes. `AxialAlgebra`
//! values only exist fully verified.

use crate::algebra::{AlgebraTable, Ideal, QuotientMap};
use crate::error::Error;
use crate::fusion::FusionLaw;
use crate::linalg::{
    nullspace, solve_linear, vec_is_zero, zero_vector, Matrix, Subspace, Vector,
};
use crate::scalar::Scalar;
use std::fmt;

/// One failed axis condition, with enough of a witness to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxisViolation {
    /// The candidate is the zero vector.
    ZeroAxis,
    /// a*a differs from a; carries a*a.
    NotIdempotent { square: Vector },
    /// The eigenspaces for the law's eigenvalues do not span the algebra,
    /// i.e. the adjoint action is not diagonalizable over the law's values.
    EigenspacesDoNotSpan { total: usize, ambient: usize },
    /// A product of eigenvectors left the subspace the law allows.
    FusionViolation {
        lambda: Scalar,
        mu: Scalar,
        left: Vector,
        right: Vector,
        product: Vector,
    },
    /// dim A_1(a) != 1.
    NotPrimitive { one_dim: usize },
}

impl fmt::Display for AxisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisViolation::ZeroAxis => write!(f, "not a nonzero idempotent: zero vector"),
            AxisViolation::NotIdempotent { .. } => {
                write!(f, "not a nonzero idempotent: a*a differs from a")
            }
            AxisViolation::EigenspacesDoNotSpan { total, ambient } => write!(
                f,
                "adjoint action is not semisimple over the law's eigenvalues: \
                 eigenspaces span {total} of {ambient} dimensions"
            ),
            AxisViolation::FusionViolation { lambda, mu, .. } => write!(
                f,
                "fusion violation: a product of a {lambda}-eigenvector and a \
                 {mu}-eigenvector leaves the allowed eigenspaces"
            ),
            AxisViolation::NotPrimitive { one_dim } => {
                write!(f, "not primitive: the 1-eigenspace has dimension {one_dim}")
            }
        }
    }
}

pub fn format_violations(violations: &[AxisViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// The eigenspace of multiplication-by-a for the eigenvalue lambda, i.e. the
/// nullspace of ad_a - lambda I.
pub fn eigenspace(table: &AlgebraTable, a: &[Scalar], lambda: &Scalar) -> Subspace {
    let shifted = table.adjoint_matrix(a).sub_scaled_identity(lambda);
    nullspace(&shifted)
}

/// A verified axis: the vector plus its eigenspace decomposition, aligned
/// with the law's value order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    vector: Vector,
    eigenspaces: Vec<Subspace>,
}

impl Axis {
    pub fn vector(&self) -> &Vector {
        &self.vector
    }

    /// Eigenspace for the law value at `index`.
    pub fn eigenspace(&self, index: usize) -> &Subspace {
        &self.eigenspaces[index]
    }

    pub fn eigenspaces(&self) -> &[Subspace] {
        &self.eigenspaces
    }
}

/// Checks every axis condition and reports all violations, or returns the
/// verified axis with its eigenspace decomposition.
///
/// The checks run in dependency order: a zero candidate reports only that;
/// the fusion check is skipped when the eigenspaces fail to span, because
/// eigenvector products are then meaningless as a fusion test.
pub fn verify_axis(
    table: &AlgebraTable,
    law: &FusionLaw,
    a: &[Scalar],
) -> Result<Axis, Vec<AxisViolation>> {
    let n = table.dimension();
    assert_eq!(a.len(), n, "axis candidate of the wrong dimension");
    if vec_is_zero(a) {
        return Err(vec![AxisViolation::ZeroAxis]);
    }
    let mut violations = Vec::new();
    let square = table.multiply(a, a);
    if square != a.to_vec() {
        violations.push(AxisViolation::NotIdempotent { square });
    }
    let eigenspaces: Vec<Subspace> = law
        .values()
        .iter()
        .map(|lambda| eigenspace(table, a, lambda))
        .collect();
    let total: usize = eigenspaces.iter().map(Subspace::dim).sum();
    let semisimple = total == n;
    if !semisimple {
        violations.push(AxisViolation::EigenspacesDoNotSpan { total, ambient: n });
    }
    if semisimple {
        // Precompute each pair's allowed sum of eigenspaces once.
        let k = law.values().len();
        for i in 0..k {
            for j in i..k {
                let mut allowed = Subspace::zero(n);
                for &t in law.product(i, j) {
                    allowed = allowed.sum(&eigenspaces[t]);
                }
                for v in eigenspaces[i].basis() {
                    for w in eigenspaces[j].basis() {
                        let p = table.multiply(v, w);
                        if !allowed.contains(&p) {
                            violations.push(AxisViolation::FusionViolation {
                                lambda: law.values()[i].clone(),
                                mu: law.values()[j].clone(),
                                left: v.clone(),
                                right: w.clone(),
                                product: p,
                            });
                        }
                    }
                }
            }
        }
    }
    let one_dim = eigenspaces[law.one_index()].dim();
    if one_dim != 1 {
        violations.push(AxisViolation::NotPrimitive { one_dim });
    }
    if violations.is_empty() {
        Ok(Axis {
            vector: a.to_vec(),
            eigenspaces,
        })
    } else {
        Err(violations)
    }
}

/// Decomposes `u` into its eigenvector components with respect to `axis`,
/// aligned with the law's value order. The decomposition exists and is unique
/// because verified axes act semisimply; the error is kept for defensive use
/// with hand-built `Axis` values.
pub fn components(table: &AlgebraTable, axis: &Axis, u: &[Scalar]) -> Result<Vec<Vector>, Error> {
    let n = table.dimension();
    assert_eq!(u.len(), n, "vector of the wrong dimension");
    let columns: Vec<&Vector> = axis
        .eigenspaces()
        .iter()
        .flat_map(|s| s.basis().iter())
        .collect();
    let mut rows = Vec::with_capacity(n);
    for coord in 0..n {
        rows.push(columns.iter().map(|c| c[coord].clone()).collect::<Vector>());
    }
    let m = Matrix::from_rows(columns.len(), rows).expect("columns share the ambient dimension");
    let Some((coeffs, _)) = solve_linear(&m, u) else {
        return Err(Error::InvalidParameter(
            "vector does not decompose over the axis eigenspaces; \
             the adjoint action is not semisimple"
                .into(),
        ));
    };
    let field = table.field();
    let mut parts = Vec::with_capacity(axis.eigenspaces().len());
    let mut offset = 0;
    for space in axis.eigenspaces() {
        let mut part = zero_vector(field, n);
        for (t, b) in space.basis().iter().enumerate() {
            crate::linalg::vec_axpy(&mut part, &coeffs[offset + t], b);
        }
        offset += space.dim();
        parts.push(part);
    }
    Ok(parts)
}

/// An algebra together with a fusion law and a verified generating set of
/// axes. Construction re-runs the full verification, so every value of this
/// type is a genuine axial algebra.
#[derive(Clone, Debug)]
pub struct AxialAlgebra {
    table: AlgebraTable,
    law: FusionLaw,
    axes: Vec<Axis>,
}

impl AxialAlgebra {
    pub fn new(
        table: AlgebraTable,
        law: FusionLaw,
        axis_vectors: Vec<Vector>,
    ) -> Result<AxialAlgebra, Error> {
        if axis_vectors.is_empty() {
            return Err(Error::NoAxes);
        }
        let mut axes = Vec::with_capacity(axis_vectors.len());
        for (index, v) in axis_vectors.iter().enumerate() {
            match verify_axis(&table, &law, v) {
                Ok(axis) => axes.push(axis),
                Err(violations) => return Err(Error::AxisRejected { index, violations }),
            }
        }
        let closure = table.subalgebra_closure(&axis_vectors);
        if closure.dim() != table.dimension() {
            return Err(Error::AxesDoNotGenerate {
                closure_dim: closure.dim(),
                ambient: table.dimension(),
            });
        }
        Ok(AxialAlgebra { table, law, axes })
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn law(&self) -> &FusionLaw {
        &self.law
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, i: usize) -> &Axis {
        &self.axes[i]
    }

    pub fn axis_count(&self) -> usize {
        self.axes.len()
    }

    pub fn dimension(&self) -> usize {
        self.table.dimension()
    }

    /// Display names for the axes: the basis name when an axis is a basis
    /// vector, otherwise a coordinate-free placeholder.
    pub fn axis_names(&self) -> Vec<String> {
        self.axes
            .iter()
            .enumerate()
            .map(|(i, axis)| {
                let v = axis.vector();
                let unit = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>();
                match unit.as_slice() {
                    [(t, c)] if c.is_one() => self.table.basis_names()[*t].clone(),
                    _ => format!("axis{i}"),
                }
            })
            .collect()
    }

    /// Quotient by an ideal, re-verifying the surviving axes. Axes with zero
    /// image are dropped and duplicate images are merged; the images always
    /// generate the quotient. Errors if every axis dies (the quotient would
    /// not be axial) or if an image fails verification.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(AxialAlgebra, QuotientMap), Error> {
        let (qtable, map) = self.table.quotient(ideal)?;
        let mut images: Vec<Vector> = Vec::new();
        for axis in &self.axes {
            let img = map.project(axis.vector());
            if vec_is_zero(&img) || images.contains(&img) {
                continue;
            }
            images.push(img);
        }
        if qtable.dimension() == 0 || images.is_empty() {
            return Err(Error::InvalidParameter(
                "quotient kills every axis and is not axial".into(),
            ));
        }
        let quotient = AxialAlgebra::new(qtable, self.law.clone(), images)?;
        Ok((quotient, map))
    }
}

/// Restricts an axial algebra to a product-closed subspace containing the
/// given axes, re-verifying them in the restricted table. Used for viewing
/// ideals and blocks as algebras in their own right.
pub fn restrict_to_subspace(
    x: &AxialAlgebra,
    space: &Subspace,
    axis_indices: &[usize],
) -> Result<AxialAlgebra, Error> {
    let table = x.table().subalgebra_table(space)?;
    let mut vectors = Vec::with_capacity(axis_indices.len());
    for &i in axis_indices {
        let v = x.axis(i).vector();
        let coords = space.coordinates(v).ok_or_else(|| {
            Error::InvalidParameter(format!("axis {i} lies outside the subspace"))
        })?;
        vectors.push(coords);
    }
    AxialAlgebra::new(table, x.law().clone(), vectors)
}
