//! Finite-dimensional commutative (not associative) algebras given by exact
//! structure constants, together with ideal machinery: closures, the largest
//! ideal inside a subspace, quotients, and direct sums.

use crate::error::Error;
use crate::linalg::{
    rref, unit_vector, vec_axpy, zero_vector, Matrix, Subspace, Vector,
};
use crate::scalar::{Field, Scalar};

/// Index into the upper-triangular product storage, for i <= j < n.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

/// A commutative algebra on basis b_0..b_{n-1}: products b_i b_j are stored
/// once per unordered pair. The field is fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    field: Field,
    basis_names: Vec<String>,
    products: Vec<Vector>,
}

impl AlgebraTable {
    /// Builds a table from a function giving the product of b_i and b_j for
    /// i <= j. Every coefficient must lie in `field`, every product vector
    /// must have length `basis_names.len()`.
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        product: impl Fn(usize, usize) -> Vector,
    ) -> Result<AlgebraTable, Error> {
        let n = basis_names.len();
        let mut products = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                let p = product(i, j);
                if p.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: p.len(),
                    });
                }
                if p.iter().any(|c| c.field() != field) {
                    return Err(Error::MixedFields);
                }
                products.push(p);
            }
        }
        Ok(AlgebraTable {
            field,
            basis_names,
            products,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dimension(), i)
    }

    /// The structure-constant vector for b_i b_j (order of i, j irrelevant).
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.products[pair_index(self.dimension(), i, j)]
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dimension();
        assert_eq!(u.len(), n, "left factor has wrong dimension");
        assert_eq!(v.len(), n, "right factor has wrong dimension");
        let mut acc = zero_vector(self.field, n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                vec_axpy(&mut acc, &c, self.basis_product(i, j));
            }
        }
        acc
    }

    /// The matrix of ad_u = multiplication by u; column j is u * b_j.
    pub fn adjoint_matrix(&self, u: &[Scalar]) -> Matrix {
        let n = self.dimension();
        assert_eq!(u.len(), n, "adjoint of a vector of wrong dimension");
        let mut m = Matrix::zero(self.field, n, n);
        for j in 0..n {
            let mut col = zero_vector(self.field, n);
            for (i, ui) in u.iter().enumerate() {
                if !ui.is_zero() {
                    vec_axpy(&mut col, ui, self.basis_product(i, j));
                }
            }
            for (t, entry) in col.into_iter().enumerate() {
                m.set(t, j, entry);
            }
        }
        m
    }

    /// Smallest subalgebra containing the given vectors: the span is closed
    /// under pairwise products until the dimension stabilizes.
    pub fn subalgebra_closure(&self, generators: &[Vector]) -> Subspace {
        let n = self.dimension();
        let mut space = rref(n, generators).expect("generators live in the algebra");
        loop {
            let mut rows: Vec<Vector> = space.basis().to_vec();
            let before = space.dim();
            for i in 0..before {
                for j in i..before {
                    let p = self.multiply(&space.basis()[i], &space.basis()[j]);
                    if !space.contains(&p) {
                        rows.push(p);
                    }
                }
            }
            let next = rref(n, &rows).expect("rows share the ambient dimension");
            if next.dim() == before {
                return next;
            }
            space = next;
        }
    }

    /// Smallest ideal containing the given vectors: the span is closed under
    /// multiplication by all basis vectors until it stabilizes.
    pub fn ideal_closure(&self, generators: &[Vector]) -> Ideal {
        let n = self.dimension();
        let mut space = rref(n, generators).expect("generators live in the algebra");
        loop {
            let mut rows: Vec<Vector> = space.basis().to_vec();
            let before = space.dim();
            for row in space.basis() {
                for j in 0..n {
                    let p = self.multiply(row, &self.basis_vector(j));
                    if !space.contains(&p) {
                        rows.push(p);
                    }
                }
            }
            let next = rref(n, &rows).expect("rows share the ambient dimension");
            if next.dim() == before {
                debug_assert!(self.check_ideal(&next).is_ok());
                return Ideal { space: next };
            }
            space = next;
        }
    }

    /// The largest ideal of the algebra contained in `v`: shrink `v` to the
    /// vectors whose products with every basis vector stay inside, and repeat
    /// until stable. Each step is one exact linear solve.
    pub fn largest_ideal_within(&self, v: &Subspace) -> Ideal {
        let n = self.dimension();
        assert_eq!(v.ambient(), n, "subspace of the wrong ambient space");
        let mut space = v.clone();
        loop {
            let k = space.dim();
            if k == 0 {
                return Ideal { space };
            }
            // Solve for coefficient vectors t with sum_r t_r (u_r b_j) in the
            // span for all j; membership residuals are linear in t.
            let mut rows: Vec<Vector> = Vec::new();
            for j in 0..n {
                let residuals: Vec<Vector> = space
                    .basis()
                    .iter()
                    .map(|u| space.reduce(&self.multiply(u, &self.basis_vector(j))))
                    .collect();
                for coord in 0..n {
                    if residuals.iter().all(|r| r[coord].is_zero()) {
                        continue;
                    }
                    rows.push(residuals.iter().map(|r| r[coord].clone()).collect());
                }
            }
            if rows.is_empty() {
                debug_assert!(self.check_ideal(&space).is_ok());
                return Ideal { space };
            }
            let constraints = Matrix::from_rows(k, rows).expect("rows have length k");
            let kernel = crate::linalg::nullspace(&constraints);
            let new_basis: Vec<Vector> = kernel
                .basis()
                .iter()
                .map(|t| {
                    let mut w = zero_vector(self.field, n);
                    for (c, u) in t.iter().zip(space.basis()) {
                        vec_axpy(&mut w, c, u);
                    }
                    w
                })
                .collect();
            let next = rref(n, &new_basis).expect("rows share the ambient dimension");
            if next.dim() == k {
                debug_assert!(self.check_ideal(&next).is_ok());
                return Ideal { space: next };
            }
            space = next;
        }
    }

    /// Verifies closure under multiplication by basis vectors; on failure
    /// names the offending (basis row, basis vector) pair.
    pub fn check_ideal(&self, s: &Subspace) -> Result<(), (usize, usize)> {
        for (r, row) in s.basis().iter().enumerate() {
            for j in 0..self.dimension() {
                if !s.contains(&self.multiply(row, &self.basis_vector(j))) {
                    return Err((r, j));
                }
            }
        }
        Ok(())
    }

    /// Wraps a subspace as an ideal after verifying closure.
    pub fn ideal(&self, s: Subspace) -> Result<Ideal, Error> {
        match self.check_ideal(&s) {
            Ok(()) => Ok(Ideal { space: s }),
            Err((row, basis)) => Err(Error::NotAnIdeal { row, basis }),
        }
    }

    /// Quotient algebra A/I. The quotient basis consists of the images of the
    /// input basis vectors at the non-pivot coordinates of I, keeping their
    /// names. Re-validates the ideal invariant and names the offending pair
    /// if it fails.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(AlgebraTable, QuotientMap), Error> {
        let n = self.dimension();
        assert_eq!(ideal.space().ambient(), n, "ideal of the wrong algebra");
        if let Err((row, basis)) = self.check_ideal(ideal.space()) {
            return Err(Error::NotAnIdeal { row, basis });
        }
        let pivot_set: Vec<bool> = {
            let mut set = vec![false; n];
            for &p in ideal.space().pivots() {
                set[p] = true;
            }
            set
        };
        let kept: Vec<usize> = (0..n).filter(|&c| !pivot_set[c]).collect();
        let m = kept.len();
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.space().reduce(v);
            kept.iter().map(|&c| r[c].clone()).collect()
        };
        let mut proj_rows: Vec<Vector> = Vec::with_capacity(m);
        for row_of in 0..m {
            let mut row = Vec::with_capacity(n);
            for t in 0..n {
                let e = unit_vector(self.field, n, t);
                row.push(project(&e)[row_of].clone());
            }
            proj_rows.push(row);
        }
        let names: Vec<String> = kept.iter().map(|&c| self.basis_names[c].clone()).collect();
        let table = AlgebraTable::new(self.field, names, |i, j| {
            project(self.basis_product(kept[i], kept[j]))
        })?;
        let map = QuotientMap {
            matrix: Matrix::from_rows(n, proj_rows).expect("projection rows have length n"),
            lifted: kept,
        };
        Ok((table, map))
    }

    /// Direct sum with componentwise products and zero cross products.
    /// Basis names keep their summand order; callers wanting distinct names
    /// should rename beforehand.
    pub fn direct_sum(parts: &[&AlgebraTable]) -> Result<AlgebraTable, Error> {
        let field = parts.first().ok_or(Error::NoAxes).map(|a| a.field())?;
        if parts.iter().any(|a| a.field() != field) {
            return Err(Error::MixedFields);
        }
        let total: usize = parts.iter().map(|a| a.dimension()).sum();
        let mut names = Vec::with_capacity(total);
        let mut offsets = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for part in parts {
            offsets.push(offset);
            names.extend(part.basis_names.iter().cloned());
            offset += part.dimension();
        }
        let summand_of = |i: usize| -> usize {
            offsets
                .iter()
                .rposition(|&o| o <= i)
                .expect("index below total dimension")
        };
        AlgebraTable::new(field, names, |i, j| {
            let (si, sj) = (summand_of(i), summand_of(j));
            let mut v = zero_vector(field, total);
            if si == sj {
                let o = offsets[si];
                let p = parts[si].basis_product(i - o, j - o);
                for (t, c) in p.iter().enumerate() {
                    v[o + t] = c.clone();
                }
            }
            v
        })
    }

    /// Views a product-closed subspace as an algebra on its reduced basis.
    /// Errors if the subspace is not closed under products of its own rows.
    /// Basis names are borrowed from the pivot columns.
    pub fn subalgebra_table(&self, space: &Subspace) -> Result<AlgebraTable, Error> {
        let k = space.dim();
        let coords = |v: &Vector| -> Option<Vector> { space.coordinates(v) };
        let mut products: Vec<Vec<Vector>> = vec![Vec::new(); k];
        for i in 0..k {
            for j in i..k {
                let p = self.multiply(&space.basis()[i], &space.basis()[j]);
                let c = coords(&p).ok_or(Error::NotAnIdeal { row: i, basis: j })?;
                products[i].push(c);
            }
        }
        let names: Vec<String> = space
            .pivots()
            .iter()
            .map(|&p| self.basis_names[p].clone())
            .collect();
        AlgebraTable::new(self.field, names, |i, j| products[i][j - i].clone())
    }
}

/// A subspace verified (or constructed) to be closed under multiplication by
/// the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }
}

/// The projection A -> A/I together with the coordinates that survive.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    matrix: Matrix,
    lifted: Vec<usize>,
}

impl QuotientMap {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vector(v)
    }

    /// Indices of the input basis vectors whose images form the quotient basis.
    pub fn lifted_indices(&self) -> &[usize] {
        &self.lifted
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_is_zero;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    /// The three-point algebra with parameter eta on basis a, b, c:
    /// x^2 = x and x y = (eta/2)(x + y - z) for {x,y,z} = {a,b,c}.
    fn three_point(eta: Scalar) -> AlgebraTable {
        let half_eta = eta.div(&Scalar::ratio(2, 1));
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        AlgebraTable::new(Field::Rational, names, |i, j| {
            if i == j {
                return unit_vector(Field::Rational, 3, i);
            }
            let k = 3 - i - j;
            let mut v = vec![half_eta.clone(); 3];
            v[k] = -&half_eta;
            v
        })
        .unwrap()
    }

    #[test]
    fn three_point_products_match_hand_expansion() {
        let a3 = three_point(q(1, 2));
        let a = a3.basis_vector(0);
        let b = a3.basis_vector(1);
        assert_eq!(a3.multiply(&a, &a), a);
        // a b = (1/4, 1/4, -1/4)
        assert_eq!(a3.multiply(&a, &b), vec![q(1, 4), q(1, 4), q(-1, 4)]);
        // (a+b)(a+b) = a + b + 2ab = (3/2, 3/2, -1/2)
        let ab = vec![q(1, 1), q(1, 1), q(0, 1)];
        assert_eq!(
            a3.multiply(&ab, &ab),
            vec![q(3, 2), q(3, 2), q(-1, 2)]
        );
    }

    #[test]
    fn adjoint_of_first_basis_vector() {
        let a3 = three_point(q(1, 2));
        let ad = a3.adjoint_matrix(&a3.basis_vector(0));
        let expect = Matrix::from_rows(
            3,
            vec![
                vec![q(1, 1), q(1, 4), q(1, 4)],
                vec![q(0, 1), q(1, 4), q(-1, 4)],
                vec![q(0, 1), q(-1, 4), q(1, 4)],
            ],
        )
        .unwrap();
        assert_eq!(ad, expect);
        // columns are a * b_j
        for j in 0..3 {
            let col: Vector = (0..3).map(|i| ad.at(i, j).clone()).collect();
            assert_eq!(col, a3.multiply(&a3.basis_vector(0), &a3.basis_vector(j)));
        }
    }

    #[test]
    fn subalgebra_closure_examples() {
        let a3 = three_point(q(1, 2));
        // {a} is closed: a is idempotent
        let span_a = a3.subalgebra_closure(&[a3.basis_vector(0)]);
        assert_eq!(span_a.dim(), 1);
        // {a, b} generates everything
        let all = a3.subalgebra_closure(&[a3.basis_vector(0), a3.basis_vector(1)]);
        assert_eq!(all.dim(), 3);
        // the empty set generates zero
        let zero = a3.subalgebra_closure(&[]);
        assert_eq!(zero.dim(), 0);
    }

    #[test]
    fn ideal_closure_of_one_axis_is_everything() {
        let a3 = three_point(q(1, 2));
        let i = a3.ideal_closure(&[a3.basis_vector(0)]);
        assert_eq!(i.dim(), 3);
    }

    #[test]
    fn ideal_closure_in_the_split_two_point_algebra() {
        // a^2 = a, b^2 = b, ab = 0: each axis spans an ideal
        let names = vec!["a".to_string(), "b".to_string()];
        let t = AlgebraTable::new(Field::Rational, names, |i, j| {
            if i == j {
                unit_vector(Field::Rational, 2, i)
            } else {
                zero_vector(Field::Rational, 2)
            }
        })
        .unwrap();
        let i = t.ideal_closure(&[t.basis_vector(0)]);
        assert_eq!(i.space().basis(), &[vec![q(1, 1), q(0, 1)]]);
    }

    #[test]
    fn largest_ideal_within_eigenspace_like_subspaces() {
        let a3 = three_point(q(1, 2));
        // span{b - c} contains no nonzero ideal
        let v = rref(3, &[vec![q(0, 1), q(1, 1), q(-1, 1)]]).unwrap();
        assert_eq!(a3.largest_ideal_within(&v).dim(), 0);

        // eta = -1: span{(1,1,1),(0,1,-1)} shrinks to span{(1,1,1)}
        let am1 = three_point(q(-1, 1));
        let v2 = rref(
            3,
            &[
                vec![q(1, 1), q(1, 1), q(1, 1)],
                vec![q(0, 1), q(1, 1), q(-1, 1)],
            ],
        )
        .unwrap();
        let i2 = am1.largest_ideal_within(&v2);
        assert_eq!(i2.space().basis(), &[vec![q(1, 1), q(1, 1), q(1, 1)]]);

        // the whole algebra is an ideal of itself
        let full = Subspace::full(Field::Rational, 3);
        assert_eq!(a3.largest_ideal_within(&full).dim(), 3);
    }

    #[test]
    fn quotient_of_three_point_by_its_kernel_line() {
        let am1 = three_point(q(-1, 1));
        let i = am1
            .ideal(rref(3, &[vec![q(1, 1), q(1, 1), q(1, 1)]]).unwrap())
            .unwrap();
        let (qt, map) = am1.quotient(&i).unwrap();
        assert_eq!(qt.dimension(), 2);
        assert_eq!(qt.basis_names(), &["b".to_string(), "c".to_string()]);
        // pi(a) = -pi(b) - pi(c) since a + b + c = 0 in the quotient
        let pa = map.project(&am1.basis_vector(0));
        assert_eq!(pa, vec![q(-1, 1), q(-1, 1)]);
        // quotient products: images are idempotent
        let e0 = qt.basis_vector(0);
        assert_eq!(qt.multiply(&e0, &e0), e0);
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let a3 = three_point(q(1, 2));
        // span{a} is a subalgebra but not an ideal
        let bogus = Ideal {
            space: rref(3, &[a3.basis_vector(0)]).unwrap(),
        };
        assert!(matches!(
            a3.quotient(&bogus),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn direct_sum_keeps_summand_products_and_zero_cross_terms() {
        let a3 = three_point(q(1, 2));
        let names = vec!["d".to_string()];
        let one = AlgebraTable::new(Field::Rational, names, |_, _| vec![q(1, 1)]).unwrap();
        let sum = AlgebraTable::direct_sum(&[&a3, &one]).unwrap();
        assert_eq!(sum.dimension(), 4);
        let a = sum.basis_vector(0);
        let d = sum.basis_vector(3);
        assert!(vec_is_zero(&sum.multiply(&a, &d)));
        assert_eq!(sum.multiply(&d, &d), d);
        assert_eq!(
            sum.multiply(&a, &sum.basis_vector(1)),
            vec![q(1, 4), q(1, 4), q(-1, 4), q(0, 1)]
        );
    }

    #[test]
    fn direct_sum_rejects_mixed_fields() {
        let a3 = three_point(q(1, 2));
        let g = Field::prime(3).unwrap();
        let one = AlgebraTable::new(g, vec!["d".to_string()], |_, _| vec![g.integer(1)]).unwrap();
        assert!(matches!(
            AlgebraTable::direct_sum(&[&a3, &one]),
            Err(Error::MixedFields)
        ));
    }

    #[test]
    fn subalgebra_table_on_a_closed_subspace() {
        let a3 = three_point(q(-1, 1));
        let line = rref(3, &[vec![q(1, 1), q(1, 1), q(1, 1)]]).unwrap();
        let sub = a3.subalgebra_table(&line).unwrap();
        assert_eq!(sub.dimension(), 1);
        // (1,1,1) squares to zero at eta = -1
        assert!(vec_is_zero(sub.basis_product(0, 0)));
        // a non-closed subspace is rejected
        let bad = rref(3, &[vec![q(0, 1), q(1, 1), q(-1, 1)]]).unwrap();
        let a_half = three_point(q(1, 2));
        assert!(a_half.subalgebra_table(&bad).is_err());
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_bilinear(
            u in proptest::collection::vec((-3i64..=3, 1i64..=2), 3),
            v in proptest::collection::vec((-3i64..=3, 1i64..=2), 3),
            c in (-3i64..=3, 1i64..=2)
        ) {
            let a3 = three_point(q(1, 2));
            let u: Vector = u.into_iter().map(|(n, d)| q(n, d)).collect();
            let v: Vector = v.into_iter().map(|(n, d)| q(n, d)).collect();
            let c = q(c.0, c.1);
            prop_assert_eq!(a3.multiply(&u, &v), a3.multiply(&v, &u));
            let cu = crate::linalg::vec_scale(&c, &u);
            prop_assert_eq!(
                a3.multiply(&cu, &v),
                crate::linalg::vec_scale(&c, &a3.multiply(&u, &v))
            );
            let ad = a3.adjoint_matrix(&u);
            prop_assert_eq!(ad.mul_vector(&v), a3.multiply(&u, &v));
        }

        #[test]
        fn ideal_closure_is_an_idempotent_ideal_operator(
            gens in proptest::collection::vec(
                proptest::collection::vec((-2i64..=2, 1i64..=2), 3), 1..=2)
        ) {
            let a3 = three_point(q(-1, 1));
            let gens: Vec<Vector> = gens
                .into_iter()
                .map(|g| g.into_iter().map(|(n, d)| q(n, d)).collect())
                .collect();
            let i = a3.ideal_closure(&gens);
            prop_assert!(a3.check_ideal(i.space()).is_ok());
            for g in &gens {
                prop_assert!(i.contains(g));
            }
            let again = a3.ideal_closure(&i.space().basis().to_vec());
            prop_assert_eq!(i.space(), again.space());
        }

        #[test]
        fn quotient_projection_is_multiplicative(
            u in proptest::collection::vec((-2i64..=2, 1i64..=2), 3),
            v in proptest::collection::vec((-2i64..=2, 1i64..=2), 3)
        ) {
            let am1 = three_point(q(-1, 1));
            let i = am1
                .ideal(rref(3, &[vec![q(1, 1), q(1, 1), q(1, 1)]]).unwrap())
                .unwrap();
            let (qt, map) = am1.quotient(&i).unwrap();
            let u: Vector = u.into_iter().map(|(n, d)| q(n, d)).collect();
            let v: Vector = v.into_iter().map(|(n, d)| q(n, d)).collect();
            prop_assert_eq!(
                map.project(&am1.multiply(&u, &v)),
                qt.multiply(&map.project(&u), &map.project(&v))
            );
        }
    }
}
