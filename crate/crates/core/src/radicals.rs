//! The radical theory: the largest ideal avoiding every axis, the per-axis
//! maximal ideal candidates, the Jacobson radical as their intersection, and
//! the simplicity test built from them.

use crate::algebra::Ideal;
use crate::axes::AxialAlgebra;
use crate::error::Error;
use crate::frobenius::{form_radical, FrobeniusForm};
use crate::linalg::Subspace;

/// Sum of the eigenspaces of `axis_index` over every law value except 1.
/// An ideal avoids the axis exactly when it lies inside this subspace: the
/// 1-part of an ideal element is a multiple of the axis by primitivity, and
/// a projection polynomial in the adjoint map keeps it inside the ideal.
fn off_eigenspace(x: &AxialAlgebra, axis_index: usize) -> Subspace {
    let axis = x.axis(axis_index);
    let one = x.law().one_index();
    let mut total = Subspace::zero(x.dimension());
    for (v, space) in axis.eigenspaces().iter().enumerate() {
        if v != one {
            total = total.sum(space);
        }
    }
    total
}

/// Largest ideal of the algebra not containing the given axis.
pub fn largest_ideal_avoiding_axis(x: &AxialAlgebra, axis_index: usize) -> Ideal {
    x.table().largest_ideal_within(&off_eigenspace(x, axis_index))
}

/// The radical: the largest ideal containing no axis, computed as the
/// largest ideal inside the intersection of all off-1 eigenspace sums.
pub fn axial_radical(x: &AxialAlgebra) -> Ideal {
    let mut window = Subspace::full(x.table().field(), x.dimension());
    for b in 0..x.axis_count() {
        window = window.intersect(&off_eigenspace(x, b));
    }
    x.table().largest_ideal_within(&window)
}

/// Every maximal ideal avoids some axis b, hence is the largest ideal
/// avoiding b; conversely that ideal is maximal exactly when the quotient
/// by it is simple. Candidates are tested in axis order and deduplicated,
/// so the output order is deterministic.
pub fn maximal_ideals(x: &AxialAlgebra) -> Vec<Ideal> {
    let mut seen: Vec<Subspace> = Vec::new();
    let mut out: Vec<Ideal> = Vec::new();
    for b in 0..x.axis_count() {
        let candidate = largest_ideal_avoiding_axis(x, b);
        if seen.iter().any(|s| s == candidate.space()) {
            continue;
        }
        seen.push(candidate.space().clone());
        let (quotient, _) = x
            .quotient(&candidate)
            .expect("the quotient by an axis-avoiding ideal keeps its surviving axes");
        if is_simple(&quotient) {
            out.push(candidate);
        }
    }
    out
}

/// Intersection of all maximal ideals; the whole algebra when there are none.
pub fn jacobson_radical(x: &AxialAlgebra) -> Ideal {
    let maximal = maximal_ideals(x);
    let mut space = Subspace::full(x.table().field(), x.dimension());
    for m in &maximal {
        space = space.intersect(m.space());
    }
    x.table()
        .ideal(space)
        .expect("an intersection of ideals is an ideal")
}

/// Simplicity for axial algebras: the radical vanishes and every axis
/// generates the whole algebra as an ideal.
pub fn is_simple(x: &AxialAlgebra) -> bool {
    if axial_radical(x).dim() != 0 {
        return false;
    }
    let n = x.dimension();
    (0..x.axis_count()).all(|b| {
        x.table()
            .ideal_closure(std::slice::from_ref(x.axis(b).vector()))
            .dim()
            == n
    })
}

/// The three radicals of one algebra plus the maximal ideal list. The chain
/// axial <= jacobson <= form kernel must always hold; `chain_ok` records it.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub axial: Ideal,
    pub jacobson: Ideal,
    pub maximal: Vec<Ideal>,
    pub form: Option<Ideal>,
    pub chain_ok: bool,
}

pub fn radical_report(
    x: &AxialAlgebra,
    form: Option<&FrobeniusForm>,
) -> Result<RadicalReport, Error> {
    let axial = axial_radical(x);
    let maximal = maximal_ideals(x);
    let mut space = Subspace::full(x.table().field(), x.dimension());
    for m in &maximal {
        space = space.intersect(m.space());
    }
    let jacobson = x
        .table()
        .ideal(space)
        .expect("an intersection of ideals is an ideal");
    let form = match form {
        Some(f) => Some(form_radical(x.table(), f)?),
        None => None,
    };
    let chain_ok = axial.space().is_subspace_of(jacobson.space())
        && form
            .as_ref()
            .map_or(true, |k| jacobson.space().is_subspace_of(k.space()));
    Ok(RadicalReport {
        axial,
        jacobson,
        maximal,
        form,
        chain_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_sum_axial, named_algebra};
    use crate::frobenius::{normalize_on_axes, solve_frobenius_space, Normalization};
    use crate::linalg::rref;
    use crate::scalar::{Field, Scalar};

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn three_point(num: i64, den: i64) -> AxialAlgebra {
        named_algebra("3C", &Scalar::ratio(num, den)).unwrap()
    }

    fn normalized_form(x: &AxialAlgebra) -> FrobeniusForm {
        let space = solve_frobenius_space(x.table());
        let axes: Vec<_> = x.axes().iter().map(|a| a.vector().clone()).collect();
        match normalize_on_axes(x.table(), &space, &axes) {
            Normalization::Unique(f) => f,
            other => panic!("expected a unique normalized form, got {other:?}"),
        }
    }

    #[test]
    fn nondegenerate_three_point_algebras_are_simple() {
        for (num, den) in [(1, 2), (1, 3), (2, 5)] {
            let x = three_point(num, den);
            assert_eq!(axial_radical(&x).dim(), 0);
            let maximal = maximal_ideals(&x);
            assert_eq!(maximal.len(), 1);
            assert_eq!(maximal[0].dim(), 0);
            assert_eq!(jacobson_radical(&x).dim(), 0);
            assert!(is_simple(&x));
        }
    }

    #[test]
    fn eta_minus_one_radical_is_the_fixed_line() {
        let x = three_point(-1, 1);
        let line = rref(3, &[vec![q(1, 1), q(1, 1), q(1, 1)]]).unwrap();
        assert_eq!(axial_radical(&x).space(), &line);
        let maximal = maximal_ideals(&x);
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].space(), &line);
        assert_eq!(jacobson_radical(&x).space(), &line);
        assert!(!is_simple(&x));
        // the quotient by the radical is simple
        let ideal = x.table().ideal(line).unwrap();
        let (quotient, _) = x.quotient(&ideal).unwrap();
        assert_eq!(quotient.dimension(), 2);
        assert!(is_simple(&quotient));
    }

    #[test]
    fn eta_two_radicals_all_agree_with_the_form_kernel() {
        let x = three_point(2, 1);
        let plane = rref(
            3,
            &[
                vec![q(1, 1), q(0, 1), q(-1, 1)],
                vec![q(0, 1), q(1, 1), q(-1, 1)],
            ],
        )
        .unwrap();
        let form = normalized_form(&x);
        let report = radical_report(&x, Some(&form)).unwrap();
        assert_eq!(report.axial.space(), &plane);
        assert_eq!(report.jacobson.space(), &plane);
        assert_eq!(report.form.as_ref().unwrap().space(), &plane);
        assert_eq!(report.maximal.len(), 1);
        assert!(report.chain_ok);
    }

    #[test]
    fn split_pair_has_two_maximal_ideals_and_zero_jacobson() {
        let x = named_algebra("2B", &Scalar::ratio(1, 2)).unwrap();
        let maximal = maximal_ideals(&x);
        // the candidate avoiding a is the line through b, and conversely
        assert_eq!(maximal.len(), 2);
        assert_eq!(maximal[0].space().basis(), &[vec![q(0, 1), q(1, 1)]]);
        assert_eq!(maximal[1].space().basis(), &[vec![q(1, 1), q(0, 1)]]);
        assert_eq!(jacobson_radical(&x).dim(), 0);
        assert_eq!(axial_radical(&x).dim(), 0);
        // not simple: each axis generates only its own line
        assert!(!is_simple(&x));
    }

    #[test]
    fn direct_sums_have_the_summands_as_maximal_ideals() {
        let half = three_point(1, 2);
        let x = direct_sum_axial(&[&half, &half]).unwrap();
        let maximal = maximal_ideals(&x);
        assert_eq!(maximal.len(), 2);
        // avoiding an axis of the first summand leaves the second, and back
        let second = rref(6, [3, 4, 5].map(|k| x.table().basis_vector(k)).as_slice());
        let first = rref(6, [0, 1, 2].map(|k| x.table().basis_vector(k)).as_slice());
        assert_eq!(maximal[0].space(), &second.unwrap());
        assert_eq!(maximal[1].space(), &first.unwrap());
        assert_eq!(jacobson_radical(&x).dim(), 0);
        assert!(!is_simple(&x));
    }

    #[test]
    fn mixed_sum_radicals_locate_the_degenerate_summand() {
        let x = direct_sum_axial(&[&three_point(-1, 1), &three_point(1, 2)]).unwrap();
        let line = rref(
            6,
            &[vec![q(1, 1), q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]],
        )
        .unwrap();
        assert_eq!(axial_radical(&x).space(), &line);
        let maximal = maximal_ideals(&x);
        assert_eq!(maximal.len(), 2);
        let dims: Vec<usize> = maximal.iter().map(Ideal::dim).collect();
        assert_eq!(dims, vec![4, 3]);
        assert_eq!(jacobson_radical(&x).space(), &line);
    }

    #[test]
    fn one_point_algebra_is_simple_with_zero_maximal_ideal() {
        let x = named_algebra("1A", &Scalar::ratio(1, 2)).unwrap();
        assert!(is_simple(&x));
        let maximal = maximal_ideals(&x);
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].dim(), 0);
    }

    #[test]
    fn avoiding_ideals_never_contain_their_axis() {
        let sum = direct_sum_axial(&[&three_point(-1, 1), &three_point(1, 2)]).unwrap();
        for x in [&three_point(2, 1), &sum] {
            for b in 0..x.axis_count() {
                let p = largest_ideal_avoiding_axis(x, b);
                assert!(!p.contains(x.axis(b).vector()));
            }
        }
    }

    #[test]
    fn chain_holds_with_the_zero_form() {
        let x = three_point(1, 2);
        let zero = FrobeniusForm::zero(x.table());
        let report = radical_report(&x, Some(&zero)).unwrap();
        assert_eq!(report.form.as_ref().unwrap().dim(), 3);
        assert!(report.chain_ok);
    }

    #[test]
    fn report_without_form_skips_the_kernel() {
        let x = three_point(1, 3);
        let report = radical_report(&x, None).unwrap();
        assert!(report.form.is_none());
        assert!(report.chain_ok);
    }

    #[test]
    fn gf3_matsuo_radicals() {
        // over GF(3) the value 2 is both -1 and 2; the 3C radical is the
        // kernel of the form x + y + z
        let g3 = Field::prime(3).unwrap();
        let x = named_algebra("3C", &g3.integer(2)).unwrap();
        let r = axial_radical(&x);
        assert_eq!(r.dim(), 2);
        assert!(r.contains(&vec![
            g3.integer(1),
            g3.integer(2),
            g3.integer(0)
        ]));
        assert_eq!(jacobson_radical(&x).space(), r.space());
    }
}
