//! Corpus construction: permutation groups and 3-transposition classes,
//! Matsuo algebras, the small named algebras, direct sums of axial algebras,
//! and the inflated-form example.
//!
//! The Matsuo product rules are the construction contract of this crate:
//! basis = the transposition class D; d.d = d; d.e = 0 when de has order 2;
//! d.e = (eta/2)(d + e - ded) when de has order 3. They are not trusted:
//! every constructed algebra goes through full axis verification.

use crate::algebra::AlgebraTable;
use crate::axes::AxialAlgebra;
use crate::error::Error;
use crate::frobenius::{normalize_on_axes, solve_frobenius_space, FrobeniusForm, Normalization};
use crate::fusion::{FusionLaw, LawKind};
use crate::linalg::{unit_vector, zero_vector, Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// A permutation of {0, .., m-1} by its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(points: usize) -> Perm {
        Perm {
            images: (0..points).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm, Error> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation of {m} points: {images:?}"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition (i j) on the given number of points.
    pub fn transposition(points: usize, i: usize, j: usize) -> Perm {
        assert!(i < points && j < points && i != j, "transposition needs two distinct points");
        let mut images: Vec<usize> = (0..points).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn points(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// self after other: (self.compose(other))(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.points(), other.points(), "permutations of different degrees");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.points()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    /// d self d^{-1}.
    pub fn conjugate_by(&self, d: &Perm) -> Perm {
        d.compose(self).compose(&d.inverse())
    }

    /// The order of self * other in the generated group.
    pub fn order_of_product(&self, other: &Perm) -> usize {
        let p = self.compose(other);
        let mut acc = p.clone();
        let mut order = 1;
        while !acc.is_identity() {
            acc = acc.compose(&p);
            order += 1;
        }
        order
    }

    /// Cycle notation on 1-based points, e.g. "(12)(34)"; "()" when trivial.
    pub fn cycle_name(&self) -> String {
        let m = self.points();
        let mut seen = vec![false; m];
        let mut out = String::new();
        for start in 0..m {
            if seen[start] || self.images[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            loop {
                seen[i] = true;
                out.push_str(&(i + 1).to_string());
                i = self.images[i];
                if i == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Largest transposition class the closure will build before refusing.
pub const CLASS_LIMIT: usize = 64;

/// A group given by involution generators, together with the conjugation
/// closure D of the generators. Validated so that the order of de is 1, 2,
/// or 3 for all d, e in D.
#[derive(Clone, Debug)]
pub struct TranspositionGroup {
    points: usize,
    generators: Vec<Perm>,
    class: Vec<Perm>,
}

impl TranspositionGroup {
    pub fn new(generators: Vec<Perm>) -> Result<TranspositionGroup, Error> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidParameter(
                "a transposition group needs at least one generator".into(),
            ));
        };
        let points = first.points();
        for g in &generators {
            if g.points() != points {
                return Err(Error::InvalidParameter(
                    "generators act on different numbers of points".into(),
                ));
            }
            if !g.is_involution() {
                return Err(Error::InvalidParameter(format!(
                    "generator {} is not an involution",
                    g.cycle_name()
                )));
            }
        }
        // Conjugating repeatedly by generators reaches conjugation by every
        // group element, so this closure is the full class.
        let mut class: Vec<Perm> = Vec::new();
        for g in &generators {
            if !class.contains(g) {
                class.push(g.clone());
            }
        }
        let mut frontier = class.clone();
        while let Some(e) = frontier.pop() {
            for g in &generators {
                let c = e.conjugate_by(g);
                if !class.contains(&c) {
                    if class.len() >= CLASS_LIMIT {
                        return Err(Error::ClassTooLarge { limit: CLASS_LIMIT });
                    }
                    class.push(c.clone());
                    frontier.push(c);
                }
            }
        }
        class.sort();
        for (i, d) in class.iter().enumerate() {
            for e in &class[i + 1..] {
                let order = d.order_of_product(e);
                if order > 3 {
                    return Err(Error::NotThreeTransposition {
                        d: d.cycle_name(),
                        e: e.cycle_name(),
                        order,
                    });
                }
            }
        }
        Ok(TranspositionGroup {
            points,
            generators,
            class,
        })
    }

    /// The symmetric group on n points with its transposition class, from
    /// the adjacent transpositions.
    pub fn symmetric(n: usize) -> Result<TranspositionGroup, Error> {
        assert!(n >= 2, "a symmetric group needs at least two points");
        let generators = (0..n - 1)
            .map(|i| Perm::transposition(n, i, i + 1))
            .collect();
        TranspositionGroup::new(generators)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// The transposition class D in a canonical order.
    pub fn class(&self) -> &[Perm] {
        &self.class
    }

    pub fn class_names(&self) -> Vec<String> {
        self.class.iter().map(Perm::cycle_name).collect()
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.class.iter().position(|q| q == p)
    }
}

/// The Matsuo algebra of a 3-transposition class over the field of `eta`,
/// verified as an axial algebra of Jordan type eta.
pub fn matsuo_algebra(group: &TranspositionGroup, eta: &Scalar) -> Result<AxialAlgebra, Error> {
    let field = eta.field();
    let law = FusionLaw::jordan(eta.clone())?;
    let half = field.integer(2).inverse().ok_or_else(|| {
        Error::InvalidParameter("the Matsuo construction needs 2 invertible in the field".into())
    })?;
    let half_eta = eta * &half;
    let class = group.class();
    let n = class.len();
    let table = AlgebraTable::new(field, group.class_names(), |i, j| {
        if i == j {
            return unit_vector(field, n, i);
        }
        let (d, e) = (&class[i], &class[j]);
        match d.order_of_product(e) {
            2 => zero_vector(field, n),
            3 => {
                let ded = e.conjugate_by(d);
                let k = group.position(&ded).expect("class is closed under conjugation");
                let mut v = zero_vector(field, n);
                v[i] = half_eta.clone();
                v[j] = half_eta.clone();
                v[k] = -&half_eta;
                v
            }
            order => unreachable!("validated class admits product order {order}"),
        }
    })?;
    let axes = (0..n).map(|i| unit_vector(field, n, i)).collect();
    AxialAlgebra::new(table, law, axes)
}

/// The named small algebras: "1A" (one idempotent), "2B" (two annihilating
/// idempotents), "3C" (the Matsuo algebra of S3, relabelled a, b, c). The
/// eta parameter fixes both the fusion law and, through its field, the
/// ground field.
pub fn named_algebra(name: &str, eta: &Scalar) -> Result<AxialAlgebra, Error> {
    let field = eta.field();
    let law = FusionLaw::jordan(eta.clone())?;
    match name {
        "1A" => {
            let table = AlgebraTable::new(field, vec!["a".to_string()], |_, _| {
                unit_vector(field, 1, 0)
            })?;
            AxialAlgebra::new(table, law, vec![unit_vector(field, 1, 0)])
        }
        "2B" => {
            let names = vec!["a".to_string(), "b".to_string()];
            let table = AlgebraTable::new(field, names, |i, j| {
                if i == j {
                    unit_vector(field, 2, i)
                } else {
                    zero_vector(field, 2)
                }
            })?;
            let axes = vec![unit_vector(field, 2, 0), unit_vector(field, 2, 1)];
            AxialAlgebra::new(table, law, axes)
        }
        "3C" => {
            let s3 = TranspositionGroup::symmetric(3)?;
            let m = matsuo_algebra(&s3, eta)?;
            let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
            let table = AlgebraTable::new(field, names, |i, j| {
                m.table().basis_product(i, j).clone()
            })?;
            let axes = (0..3).map(|i| unit_vector(field, 3, i)).collect();
            AxialAlgebra::new(table, law, axes)
        }
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

/// A shared law for direct sums of Jordan-type algebras with possibly
/// different eta parameters: values {1, 0, eta_1, ..}, where each eta fuses
/// with itself into {1, 0} and with a different eta into the empty set
/// (eigenvectors of distinct etas come from distinct summands, so their
/// products vanish). With a single eta this is exactly the Jordan law.
pub fn joint_jordan_law(etas: &[Scalar]) -> Result<FusionLaw, Error> {
    let Some(first) = etas.first() else {
        return Err(Error::InvalidParameter("a joint law needs at least one eta".into()));
    };
    let field = first.field();
    let mut distinct: Vec<Scalar> = Vec::new();
    for eta in etas {
        if eta.is_zero() || eta.is_one() {
            return Err(Error::InvalidParameter(format!(
                "jordan law needs eta distinct from 0 and 1, got {eta}"
            )));
        }
        if !distinct.contains(eta) {
            distinct.push(eta.clone());
        }
    }
    if distinct.len() == 1 {
        return FusionLaw::jordan(distinct.remove(0));
    }
    let mut values = vec![field.one(), field.zero()];
    values.extend(distinct);
    let v = values.clone();
    FusionLaw::explicit(values, &|i, j| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        match (i, j) {
            (0, 0) => vec![v[0].clone()],
            (0, 1) => vec![],
            (1, 1) => vec![v[1].clone()],
            (0, k) | (1, k) => vec![v[k].clone()],
            (k, l) if k == l => vec![v[0].clone(), v[1].clone()],
            _ => vec![],
        }
    })
}

/// Direct sum of axial algebras over one field. All-Jordan inputs combine
/// under the joint law above; otherwise the laws must agree exactly and
/// admit direct sums. Basis names get a ".k" suffix (k the 1-based summand
/// index) so the summand origin stays readable; the axes are the summand
/// axes at their offsets. The result is re-verified from scratch.
pub fn direct_sum_axial(parts: &[&AxialAlgebra]) -> Result<AxialAlgebra, Error> {
    let Some(first) = parts.first() else {
        return Err(Error::NoAxes);
    };
    let field = first.table().field();
    let law = if parts.iter().all(|p| p.law().kind() == LawKind::Jordan) {
        let etas: Vec<Scalar> = parts.iter().map(|p| p.law().values()[2].clone()).collect();
        joint_jordan_law(&etas)?
    } else {
        if parts.iter().any(|p| p.law() != first.law()) {
            return Err(Error::DirectSumNotAdmissible);
        }
        first.law().clone()
    };
    if !law.admits_direct_sums() {
        return Err(Error::DirectSumNotAdmissible);
    }
    let renamed: Vec<AlgebraTable> = parts
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let names = p
                .table()
                .basis_names()
                .iter()
                .map(|s| format!("{s}.{}", k + 1))
                .collect();
            AlgebraTable::new(field, names, |i, j| p.table().basis_product(i, j).clone())
        })
        .collect::<Result<_, _>>()?;
    let refs: Vec<&AlgebraTable> = renamed.iter().collect();
    let table = AlgebraTable::direct_sum(&refs)?;
    let total = table.dimension();
    let mut axes: Vec<Vector> = Vec::new();
    let mut offset = 0;
    for p in parts {
        for axis in p.axes() {
            let mut v = zero_vector(field, total);
            for (t, c) in axis.vector().iter().enumerate() {
                v[offset + t] = c.clone();
            }
            axes.push(v);
        }
        offset += p.dimension();
    }
    AxialAlgebra::new(table, law, axes)
}

/// The strictness witness for the radical chain: two copies of the
/// three-point algebra at eta = 1/2 with the Frobenius form that is
/// canonical on the first summand and zero on the second. The form radical
/// is the whole second summand even though the Jacobson radical vanishes.
pub fn inflated_form_example(field: Field) -> Result<(AxialAlgebra, FrobeniusForm), Error> {
    let eta = field.parse("1/2")?;
    let c = named_algebra("3C", &eta)?;
    let sum = direct_sum_axial(&[&c, &c])?;
    let space = solve_frobenius_space(c.table());
    let axes: Vec<Vector> = c.axes().iter().map(|a| a.vector().clone()).collect();
    let Normalization::Unique(block) = normalize_on_axes(c.table(), &space, &axes) else {
        return Err(Error::InvalidParameter(
            "the three-point form did not normalize uniquely".into(),
        ));
    };
    let n = sum.dimension();
    let mut gram = Matrix::zero(field, n, n);
    for i in 0..3 {
        for j in 0..3 {
            gram.set(i, j, block.gram().at(i, j).clone());
        }
    }
    let form = FrobeniusForm::new(sum.table(), gram)?;
    Ok((sum, form))
}
