//! Acceptance suite: nine exact, zero-tolerance criteria over the full
//! corpus. Each test prints one pass line; any failure panics with context.

use std::sync::OnceLock;
use std::time::Instant;

use axial_core::axes::{verify_axis, AxialAlgebra, AxisViolation};
use axial_core::constructions::{
    direct_sum_axial, inflated_form_example, matsuo_algebra, named_algebra, TranspositionGroup,
};
use axial_core::frobenius::{
    form_radical, normalize_on_axes, solve_frobenius_space, FrobeniusForm, Normalization,
};
use axial_core::fusion::{FusionLaw, LawKind};
use axial_core::linalg::{Subspace, Vector};
use axial_core::oracle::brute_force_ideal_lattice;
use axial_core::radicals::{axial_radical, is_simple, jacobson_radical, radical_report};
use axial_core::report::{analyze, oracle_compare, FormPolicy};
use axial_core::scalar::{Field, Scalar};
use axial_core::structure::{
    check_projection_vs_form, domination, hull_kernel_discreteness, projection_digraph,
    semisimple_decomposition,
};

struct Member {
    label: String,
    x: AxialAlgebra,
    /// The construction-supplied form; only the inflated example has one.
    given_form: Option<FrobeniusForm>,
    /// Number of summands the construction was glued from.
    blocks: usize,
}

fn field_eta(field: &Field) -> Vec<Scalar> {
    // The images of 1/2, 1/3, -1, 2 in the field, deduplicated: over GF(3)
    // they all coincide, over GF(5) the middle two do.
    match field {
        Field::Rational => vec![
            Scalar::ratio(1, 2),
            Scalar::ratio(1, 3),
            Scalar::ratio(-1, 1),
            Scalar::ratio(2, 1),
        ],
        Field::Prime(3) => vec![field.integer(2)],
        Field::Prime(5) => vec![field.integer(3), field.integer(2), field.integer(4)],
        Field::Prime(p) => panic!("no corpus over GF({p})"),
    }
}

fn field_members(field: Field) -> Vec<Member> {
    let etas = field_eta(&field);
    let half = etas[0].clone();
    let s4 = TranspositionGroup::symmetric(4).expect("S4 is desk scale");

    let mut base: Vec<(String, AxialAlgebra, usize)> = vec![
        ("1A".into(), named_algebra("1A", &half).unwrap(), 1),
        ("2B".into(), named_algebra("2B", &half).unwrap(), 2),
    ];
    for eta in &etas {
        base.push((
            format!("3C({eta})"),
            named_algebra("3C", eta).unwrap(),
            1,
        ));
    }
    base.push(("M6".into(), matsuo_algebra(&s4, &half).unwrap(), 1));

    let mut members: Vec<Member> = base
        .iter()
        .map(|(label, x, blocks)| Member {
            label: label.clone(),
            x: x.clone(),
            given_form: None,
            blocks: *blocks,
        })
        .collect();
    for i in 0..base.len() {
        for j in i..base.len() {
            members.push(Member {
                label: format!("{}+{}", base[i].0, base[j].0),
                x: direct_sum_axial(&[&base[i].1, &base[j].1]).unwrap(),
                given_form: None,
                blocks: base[i].2 + base[j].2,
            });
        }
    }
    let (x, form) = inflated_form_example(field).unwrap();
    members.push(Member {
        label: "inflated".into(),
        x,
        given_form: Some(form),
        blocks: 2,
    });

    if let Field::Prime(p) = field {
        for m in &mut members {
            m.label = format!("{}/GF({p})", m.label);
        }
    }
    members
}

fn corpus() -> &'static [Member] {
    static CORPUS: OnceLock<Vec<Member>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = field_members(Field::Rational);
        all.extend(field_members(Field::prime(3).unwrap()));
        all.extend(field_members(Field::prime(5).unwrap()));
        assert_eq!(all.len(), 36 + 15 + 28, "corpus composition changed");
        all
    })
}

fn spaces_equal(a: &Subspace, b: &Subspace) -> bool {
    a.dim() == b.dim() && a.is_subspace_of(b)
}

fn axis_vectors(x: &AxialAlgebra) -> Vec<Vector> {
    x.axes().iter().map(|a| a.vector().clone()).collect()
}

/// The normalized form, falling back to a representative when (a, a) = 1
/// cannot be imposed; the corpus never needs the fallback.
fn solved_form(x: &AxialAlgebra) -> FrobeniusForm {
    let space = solve_frobenius_space(x.table());
    match normalize_on_axes(x.table(), &space, &axis_vectors(x)) {
        Normalization::Unique(form) | Normalization::Ambiguous { form, .. } => form,
        Normalization::Unsatisfiable { .. } => match space.basis().first() {
            Some(g) => FrobeniusForm::new(x.table(), g.clone()).unwrap(),
            None => FrobeniusForm::zero(x.table()),
        },
    }
}

/// Vector-count gate for the brute-force oracle, mirroring the analyze
/// pipeline's cutoff.
fn oracle_eligible(x: &AxialAlgebra) -> bool {
    match x.table().field() {
        Field::Prime(p) => (p as u128).checked_pow(x.dimension() as u32)
            .is_some_and(|est| est <= 1_000_000),
        Field::Rational => false,
    }
}

#[test]
fn criterion_1_theorem_chain() {
    let mut checked = 0;
    for m in corpus() {
        let solved = solved_form(&m.x);
        let zero = FrobeniusForm::zero(m.x.table());
        for (policy, form) in [("solved", &solved), ("zero", &zero)] {
            let report = radical_report(&m.x, Some(form)).unwrap();
            assert!(
                report.chain_ok,
                "criterion 1: FAIL on {} ({policy} form): dims R = {}, J = {}, A_perp = {}",
                m.label,
                report.axial.dim(),
                report.jacobson.dim(),
                report.form.as_ref().unwrap().dim()
            );
            checked += 1;
        }
    }
    println!("criterion 1 (radical chain, {checked} member/policy pairs): PASS");
}

#[test]
fn criterion_2_jordan_type_equality() {
    let mut checked = 0;
    for m in corpus() {
        if m.x.law().kind() != LawKind::Jordan {
            continue;
        }
        let form = solved_form(&m.x);
        let report = radical_report(&m.x, Some(&form)).unwrap();
        let kernel = report.form.as_ref().unwrap();
        assert!(
            spaces_equal(report.axial.space(), report.jacobson.space())
                && spaces_equal(report.jacobson.space(), kernel.space()),
            "criterion 2: FAIL on {}: dims R = {}, J = {}, A_perp = {}",
            m.label,
            report.axial.dim(),
            report.jacobson.dim(),
            kernel.dim()
        );
        let decomposition = if kernel.dim() == 0 {
            semisimple_decomposition(&m.x)
        } else {
            let (q, _) = m.x.quotient(kernel).unwrap();
            semisimple_decomposition(&q)
        }
        .unwrap();
        assert!(
            decomposition.is_direct && decomposition.all_simple,
            "criterion 2: FAIL on {}: A/A_perp is_direct = {}, all_simple = {}",
            m.label,
            decomposition.is_direct,
            decomposition.all_simple
        );
        checked += 1;
    }
    println!("criterion 2 (Jordan-type equality, {checked} members): PASS");
}

#[test]
fn criterion_3_strictness_witness() {
    let (x, form) = inflated_form_example(Field::Rational).unwrap();
    let j = jacobson_radical(&x);
    let kernel = form_radical(x.table(), &form).unwrap();
    assert_eq!(j.dim(), 0, "criterion 3: FAIL: J has dim {}", j.dim());
    assert_eq!(
        kernel.dim(),
        3,
        "criterion 3: FAIL: A_perp has dim {}",
        kernel.dim()
    );
    println!("criterion 3 (strict J = 0 inside dim-3 A_perp): PASS");
}

#[test]
fn criterion_4_concrete_radicals() {
    let run = |eta: Scalar| {
        let x = named_algebra("3C", &eta).unwrap();
        let form = solved_form(&x);
        radical_report(&x, Some(&form)).unwrap()
    };

    let r = run(Scalar::ratio(-1, 1));
    let ones = vec![Scalar::ratio(1, 1); 3];
    for (name, space) in [
        ("R", r.axial.space()),
        ("J", r.jacobson.space()),
        ("A_perp", r.form.as_ref().unwrap().space()),
    ] {
        assert!(
            space.dim() == 1 && space.contains(&ones),
            "criterion 4: FAIL: 3C(-1) {name} is not span{{(1,1,1)}}"
        );
    }
    let x = named_algebra("3C", &Scalar::ratio(-1, 1)).unwrap();
    let (quotient, _) = x.quotient(&axial_radical(&x)).unwrap();
    assert_eq!(quotient.dimension(), 2, "criterion 4: FAIL: 3C(-1)/R dim");
    assert!(is_simple(&quotient), "criterion 4: FAIL: 3C(-1)/R simplicity");

    assert_eq!(
        run(Scalar::ratio(2, 1)).axial.dim(),
        2,
        "criterion 4: FAIL: 3C(2) radical dim"
    );
    assert_eq!(
        run(Scalar::ratio(1, 2)).axial.dim(),
        0,
        "criterion 4: FAIL: 3C(1/2) radical dim"
    );
    println!("criterion 4 (concrete 3C radical values): PASS");
}

#[test]
fn criterion_5_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0;
    for m in corpus() {
        if !oracle_eligible(&m.x) {
            continue;
        }
        let report = oracle_compare(&m.x, 1_000_000, &m.label).unwrap();
        assert!(
            report.agreement,
            "criterion 5: FAIL on {}: maximal_match = {}, radical_match = {}",
            m.label, report.maximal_match, report.radical_match
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "criterion 5: FAIL: oracle sweep took {elapsed:?}"
    );
    println!(
        "criterion 5 (oracle equivalence, {checked} finite members in {}ms): PASS",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_6_fusion_verification() {
    for m in corpus() {
        for axis in m.x.axes() {
            assert!(
                verify_axis(m.x.table(), m.x.law(), axis.vector()).is_ok(),
                "criterion 6: FAIL: a corpus axis of {} was rejected",
                m.label
            );
        }
    }

    let half = Scalar::ratio(1, 2);
    let x = named_algebra("3C", &half).unwrap();
    let table = x.table();
    let law = x.law();
    let field = Field::Rational;
    let names = table.basis_names().to_vec();
    let e0: Vector = vec![field.one(), field.zero(), field.zero()];
    let violation = |result: Result<_, Vec<AxisViolation>>, want: fn(&AxisViolation) -> bool| {
        result
            .err()
            .map(|vs| vs.iter().any(want))
            .unwrap_or(false)
    };
    let mut rejected = 0;

    // Broken idempotency: e0 * e0 rescaled to 2 e0.
    let doubled = axial_core::algebra::AlgebraTable::new(field, names.clone(), |i, j| {
        let mut v = table.basis_product(i, j).to_vec();
        if (i, j) == (0, 0) {
            v[0] = field.integer(2);
        }
        v
    })
    .unwrap();
    assert!(
        violation(verify_axis(&doubled, law, &e0), |v| matches!(
            v,
            AxisViolation::NotIdempotent { .. }
        )),
        "criterion 6: FAIL: broken idempotency not named"
    );
    rejected += 1;

    // Wrong spectrum: the off-diagonal products use 1/4 while the law says 1/2.
    let quarter = named_algebra("3C", &Scalar::ratio(1, 4)).unwrap();
    assert!(
        violation(verify_axis(quarter.table(), law, &e0), |v| matches!(
            v,
            AxisViolation::EigenspacesDoNotSpan { .. }
        )),
        "criterion 6: FAIL: wrong spectrum not named"
    );
    rejected += 1;

    // Fusion violation: the true table against a law whose eta * eta drops 1,
    // while (b - c)^2 has a nonzero 1-component.
    let strict = FusionLaw::explicit(
        vec![field.one(), field.zero(), half.clone()],
        &|i, j| match (i.min(j), i.max(j)) {
            (0, 0) => vec![field.one()],
            (0, 2) | (1, 2) => vec![half.clone()],
            (1, 1) => vec![field.zero()],
            (2, 2) => vec![field.zero()],
            _ => vec![],
        },
    )
    .unwrap();
    assert!(
        violation(verify_axis(table, &strict, &e0), |v| matches!(
            v,
            AxisViolation::FusionViolation { .. }
        )),
        "criterion 6: FAIL: fusion violation not named"
    );
    rejected += 1;

    // Imprimitive axis: the identity of a two-block associative table.
    let split = axial_core::algebra::AlgebraTable::new(
        field,
        vec!["u".into(), "v".into()],
        |i, j| {
            let mut v = vec![field.zero(), field.zero()];
            if i == j {
                v[i] = field.one();
            }
            v
        },
    )
    .unwrap();
    let identity: Vector = vec![field.one(), field.one()];
    assert!(
        violation(verify_axis(&split, law, &identity), |v| matches!(
            v,
            AxisViolation::NotPrimitive { .. }
        )),
        "criterion 6: FAIL: imprimitivity not named"
    );
    rejected += 1;

    // The zero vector.
    let zero: Vector = vec![field.zero(); 3];
    assert!(
        violation(verify_axis(table, law, &zero), |v| matches!(
            v,
            AxisViolation::ZeroAxis
        )),
        "criterion 6: FAIL: zero axis not named"
    );
    rejected += 1;

    assert!(rejected >= 5);
    println!("criterion 6 (fusion verification, {rejected} corruptions rejected by name): PASS");
}

#[test]
fn criterion_7_frobenius_uniqueness() {
    for m in corpus() {
        let dim = solve_frobenius_space(m.x.table()).dim();
        assert_eq!(
            dim, m.blocks,
            "criterion 7: FAIL on {}: form space dim {dim}, blocks {}",
            m.label, m.blocks
        );
    }
    println!(
        "criterion 7 (form space dim = block count, {} members): PASS",
        corpus().len()
    );
}

#[test]
fn criterion_8_structure_suite() {
    let mut decomposition_ideals = 0;
    for m in corpus() {
        let x = &m.x;
        let table = x.table();
        let n = x.dimension();
        let dom = domination(x);

        // Lemma: the blocks sum to the whole algebra.
        let total = dom
            .blocks
            .iter()
            .fold(Subspace::zero(n), |acc, b| acc.sum(b.space()));
        assert_eq!(
            total.dim(),
            n,
            "criterion 8: FAIL on {}: blocks sum to dim {}",
            m.label,
            total.dim()
        );

        let form = solved_form(x);
        let kernel = form_radical(table, &form).unwrap();
        let nondegenerate = kernel.dim() == 0;

        // Lemma: with a nondegenerate form, domination is symmetric.
        if nondegenerate {
            let k = x.axis_count();
            assert!(
                (0..k).all(|i| (0..k).all(|j| dom.dominates[i][j] == dom.dominates[j][i])),
                "criterion 8: FAIL on {}: asymmetric domination",
                m.label
            );
        }

        // Proposition: each nonzero ideal U gives A = A1 (+) A2 with U = A1,
        // the parts generated by the axes inside and outside U. U ranges
        // over the blocks and, on enumerable finite members, every ideal.
        if nondegenerate {
            let mut candidates: Vec<Subspace> =
                dom.blocks.iter().map(|b| b.space().clone()).collect();
            if oracle_eligible(x) {
                candidates.extend(
                    brute_force_ideal_lattice(table, 1_000_000)
                        .unwrap()
                        .ideals
                        .iter()
                        .cloned(),
                );
            }
            for u in candidates {
                if u.dim() == 0 {
                    continue;
                }
                let (inside, outside): (Vec<_>, Vec<_>) = axis_vectors(x)
                    .into_iter()
                    .partition(|v| u.contains(v));
                let a1 = table.subalgebra_closure(&inside);
                let a2 = table.subalgebra_closure(&outside);
                assert!(
                    spaces_equal(&a1, &u),
                    "criterion 8: FAIL on {}: U (dim {}) != A1 (dim {})",
                    m.label,
                    u.dim(),
                    a1.dim()
                );
                assert!(
                    a1.dim() + a2.dim() == n && a1.intersect(&a2).dim() == 0,
                    "criterion 8: FAIL on {}: A1 (+) A2 is not direct for dim-{} U",
                    m.label,
                    u.dim()
                );
                decomposition_ideals += 1;
            }
        }

        // Projection digraph vs form, including symmetry.
        let graph = projection_digraph(x);
        let pf = check_projection_vs_form(x, &form, &graph);
        if pf.singular_axis.is_none() {
            assert!(
                pf.consistent && graph.is_symmetric(),
                "criterion 8: FAIL on {}: projection/form mismatch",
                m.label
            );
        }

        // Hull-kernel discreteness, exhaustively.
        let maximal = axial_core::radicals::maximal_ideals(x);
        assert!(
            maximal.len() <= 12,
            "criterion 8: corpus member {} has {} maximal ideals",
            m.label,
            maximal.len()
        );
        let discrete = hull_kernel_discreteness(&maximal);
        assert!(
            discrete.discrete && discrete.exhaustive,
            "criterion 8: FAIL on {}: hull-kernel not discrete",
            m.label
        );
    }
    println!(
        "criterion 8 (structure suite, {} members, {decomposition_ideals} decomposition ideals): PASS",
        corpus().len()
    );
}

#[test]
fn criterion_9_determinism() {
    let mut bytes = 0;
    for m in corpus() {
        let policy = if m.given_form.is_some() {
            FormPolicy::Given
        } else {
            FormPolicy::Solve
        };
        let first = analyze(&m.x, m.given_form.as_ref(), policy, &m.label).unwrap();
        let second = analyze(&m.x, m.given_form.as_ref(), policy, &m.label).unwrap();
        let a = serde_json::to_string_pretty(&first.report).unwrap();
        let b = serde_json::to_string_pretty(&second.report).unwrap();
        assert_eq!(a, b, "criterion 9: FAIL on {}: reports differ", m.label);
        assert_eq!(
            first.failures, 0,
            "criterion 9: FAIL on {}: {} failed verdicts",
            m.label, first.failures
        );
        bytes += a.len();
    }
    println!(
        "criterion 9 (byte-identical reports, {} members, {bytes} bytes): PASS",
        corpus().len()
    );
}
