//! The analysis pipeline: form selection, radicals, structure theory, and
//! the named theorem verdicts, collected into one deterministic report.

use serde::Serialize;

use crate::algebra::{AlgebraTable, Ideal};
use crate::axes::AxialAlgebra;
use crate::error::Error;
use crate::frobenius::{
    axis_singularity, check_eigenspace_orthogonality, normalize_on_axes, solve_frobenius_space,
    FrobeniusForm, Normalization,
};
use crate::fusion::LawKind;
use crate::linalg::{Subspace, Vector};
use crate::oracle::{brute_force_ideal_lattice, largest_axis_free_ideal};
use crate::radicals::{axial_radical, maximal_ideals, radical_report};
use crate::scalar::{Field, Scalar};
use crate::structure::{
    check_projection_vs_form, domination, hull_kernel_discreteness, non_annihilation_graph,
    projection_digraph, semisimplify,
};

/// Which Frobenius form the analysis uses. Solved forms are normalized to
/// (a, a) = 1 on the axes when possible; the zero form is always admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormPolicy {
    Solve,
    Given,
    Zero,
}

impl FormPolicy {
    pub fn parse(text: &str) -> Result<FormPolicy, Error> {
        match text {
            "solve" => Ok(FormPolicy::Solve),
            "given" => Ok(FormPolicy::Given),
            "zero" => Ok(FormPolicy::Zero),
            other => Err(Error::InvalidParameter(format!(
                "unknown form policy '{other}'; expected solve, given, or zero"
            ))),
        }
    }

    fn label(self) -> &'static str {
        match self {
            FormPolicy::Solve => "solve",
            FormPolicy::Given => "given",
            FormPolicy::Zero => "zero",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LawSummary {
    pub kind: String,
    pub values: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct AxisSummary {
    pub name: String,
    pub vector: Vec<String>,
    /// Eigenspace dimensions aligned with the law values.
    pub eigenspace_dimensions: Vec<usize>,
    /// The form value (a, a) for the chosen form.
    pub norm: String,
    pub singular: bool,
}

#[derive(Debug, Serialize)]
pub struct FormSummary {
    pub policy: String,
    /// Dimension of the space of all Frobenius forms for the product.
    pub space_dimension: usize,
    pub normalization: String,
    pub gram: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct SubspaceSummary {
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct RadicalsSummary {
    pub axial: SubspaceSummary,
    pub jacobson: SubspaceSummary,
    pub form_kernel: SubspaceSummary,
    pub maximal_ideals: Vec<SubspaceSummary>,
    pub chain_holds: bool,
}

#[derive(Debug, Serialize)]
pub struct BlockSummary {
    /// Axes of one domination class, by name.
    pub axes: Vec<String>,
    pub dimension: usize,
    /// Whether the axes of the class generate the block as a subalgebra.
    /// A false value is recorded as evidence, never interpreted.
    pub generated_by_axes: bool,
}

#[derive(Debug, Serialize)]
pub struct SemisimpleSummary {
    pub dimension: usize,
    pub classes: Vec<Vec<String>>,
    pub block_dimensions: Vec<usize>,
    pub is_direct: bool,
    pub all_simple: bool,
}

#[derive(Debug, Serialize)]
pub struct HullKernelSummary {
    pub maximal_ideals: usize,
    pub mode: String,
    pub subsets_checked: usize,
}

#[derive(Debug, Serialize)]
pub struct StructureSummary {
    pub blocks: Vec<BlockSummary>,
    pub domination_symmetric: bool,
    /// Decomposition of A modulo its Jacobson radical; absent only when the
    /// quotient itself failed, which the semisimple-quotient verdict records.
    pub semisimple_quotient: Option<SemisimpleSummary>,
    pub projection_arcs: Vec<[usize; 2]>,
    pub projection_symmetric: bool,
    pub non_annihilation_edges: Vec<[usize; 2]>,
    pub non_annihilation_components: Vec<Vec<usize>>,
    /// Whether the non-annihilation components coincide with the domination
    /// classes, reported per instance.
    pub components_match_blocks: bool,
    pub hull_kernel: HullKernelSummary,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: String,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub field: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub fusion_law: LawSummary,
    pub axes: Vec<AxisSummary>,
    pub form: FormSummary,
    pub radicals: RadicalsSummary,
    pub structure: StructureSummary,
    pub checks: Vec<CheckResult>,
    pub findings: Vec<String>,
}

/// A finished analysis: the report plus the DOT renderings and the number
/// of failed verdicts (skipped verdicts do not count).
#[derive(Debug)]
pub struct AnalysisOutcome {
    pub report: AnalysisReport,
    pub projection_dot: String,
    pub non_annihilation_dot: String,
    pub failures: usize,
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn space_summary(s: &Subspace) -> SubspaceSummary {
    SubspaceSummary {
        dimension: s.dim(),
        basis: s.basis().iter().map(|row| scalar_strings(row)).collect(),
    }
}

fn spaces_equal(a: &Subspace, b: &Subspace) -> bool {
    a.dim() == b.dim() && a.is_subspace_of(b)
}

/// Enumeration cutoff for the oracle pass inside analyze: the ideal check
/// ranges over oracle ideals only when the vector count stays desk-scale.
const ANALYZE_ORACLE_BOUND: u64 = 1_000_000;

fn choose_form(
    x: &AxialAlgebra,
    given: Option<&FrobeniusForm>,
    policy: FormPolicy,
    findings: &mut Vec<String>,
) -> Result<(FrobeniusForm, String, usize), Error> {
    let table = x.table();
    let space = solve_frobenius_space(table);
    let space_dim = space.dim();
    match policy {
        FormPolicy::Zero => Ok((
            FrobeniusForm::zero(table),
            "zero form by policy".into(),
            space_dim,
        )),
        FormPolicy::Given => {
            let form = given.cloned().ok_or(Error::MissingForm)?;
            Ok((form, "supplied with the input".into(), space_dim))
        }
        FormPolicy::Solve => {
            let vectors: Vec<Vector> = x.axes().iter().map(|a| a.vector().clone()).collect();
            match normalize_on_axes(table, &space, &vectors) {
                Normalization::Unique(form) => Ok((
                    form,
                    "unique form with (a, a) = 1 on every axis".into(),
                    space_dim,
                )),
                Normalization::Ambiguous { form, degrees } => {
                    findings.push(format!(
                        "note: the normalized form is one representative of a \
                         {degrees}-parameter family; radical comparisons depend on the choice"
                    ));
                    Ok((
                        form,
                        format!(
                            "representative of a {degrees}-parameter family with \
                             (a, a) = 1 on every axis"
                        ),
                        space_dim,
                    ))
                }
                Normalization::Unsatisfiable { isotropic_axes } => {
                    let names = x.axis_names();
                    let which = if isotropic_axes.is_empty() {
                        "the normalization system is inconsistent".to_string()
                    } else {
                        let listed: Vec<&str> =
                            isotropic_axes.iter().map(|&i| names[i].as_str()).collect();
                        format!(
                            "axes {} are isotropic for every form",
                            listed.join(", ")
                        )
                    };
                    findings.push(format!(
                        "note: (a, a) = 1 is unsatisfiable ({which}); \
                         a representative form was chosen instead"
                    ));
                    let form = match space.basis().first() {
                        Some(gram) => FrobeniusForm::new(table, gram.clone())?,
                        None => FrobeniusForm::zero(table),
                    };
                    Ok((form, format!("unnormalized representative; {which}"), space_dim))
                }
            }
        }
    }
}

/// The ideals the decomposition verdict ranges over: every distinct block,
/// plus every oracle-enumerated nonzero ideal on desk-scale GF(p) instances.
fn decomposition_candidates(
    table: &AlgebraTable,
    blocks: &[Ideal],
) -> Result<Vec<Subspace>, Error> {
    let mut found: Vec<Subspace> = Vec::new();
    let mut push = |s: &Subspace| {
        if s.dim() > 0 && !found.iter().any(|t| spaces_equal(t, s)) {
            found.push(s.clone());
        }
    };
    for b in blocks {
        push(b.space());
    }
    if let Field::Prime(_) = table.field() {
        match brute_force_ideal_lattice(table, ANALYZE_ORACLE_BOUND) {
            Ok(lattice) => {
                for s in &lattice.ideals {
                    push(s);
                }
            }
            Err(Error::OracleBound { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(found)
}

/// Checks A = A1 + A2 directly with U = A1, where A1 and A2 are the
/// subalgebras generated by the axes inside and outside U.
fn check_decomposition(x: &AxialAlgebra, u: &Subspace) -> Option<String> {
    let table = x.table();
    let n = x.dimension();
    let mut inside: Vec<Vector> = Vec::new();
    let mut outside: Vec<Vector> = Vec::new();
    for axis in x.axes() {
        if u.contains(axis.vector()) {
            inside.push(axis.vector().clone());
        } else {
            outside.push(axis.vector().clone());
        }
    }
    let a1 = table.subalgebra_closure(&inside);
    let a2 = table.subalgebra_closure(&outside);
    if !spaces_equal(&a1, u) {
        return Some(format!(
            "an ideal of dim {} differs from the subalgebra generated by its axes (dim {})",
            u.dim(),
            a1.dim()
        ));
    }
    if a1.dim() + a2.dim() != n || a1.intersect(&a2).dim() != 0 {
        return Some(format!(
            "the subalgebras split by an ideal of dim {} do not sum directly",
            u.dim()
        ));
    }
    for v in a1.basis() {
        for w in a2.basis() {
            if !crate::linalg::vec_is_zero(&table.multiply(v, w)) {
                return Some(format!(
                    "the complements split by an ideal of dim {} do not annihilate each other",
                    u.dim()
                ));
            }
        }
    }
    None
}

fn canonical_partition(parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.sort_unstable();
            q
        })
        .collect();
    out.sort();
    out
}

/// Runs the full pipeline on a verified axial algebra and produces the
/// report. `label` names the input in the report header.
pub fn analyze(
    x: &AxialAlgebra,
    given: Option<&FrobeniusForm>,
    policy: FormPolicy,
    label: &str,
) -> Result<AnalysisOutcome, Error> {
    let table = x.table();
    let n = x.dimension();
    let names = x.axis_names();
    let mut findings: Vec<String> = Vec::new();

    let (form, normalization, space_dim) = choose_form(x, given, policy, &mut findings)?;

    let axes: Vec<AxisSummary> = x
        .axes()
        .iter()
        .enumerate()
        .map(|(i, axis)| {
            let norm = axis_singularity(&form, axis);
            AxisSummary {
                name: names[i].clone(),
                vector: scalar_strings(axis.vector()),
                eigenspace_dimensions: axis.eigenspaces().iter().map(Subspace::dim).collect(),
                singular: norm.is_zero(),
                norm: norm.to_string(),
            }
        })
        .collect();

    let rr = radical_report(x, Some(&form))?;
    let kernel = rr.form.as_ref().expect("a form was supplied").clone();

    let dom = domination(x);
    let proj = projection_digraph(x);
    let nag = non_annihilation_graph(x);
    let hull = hull_kernel_discreteness(&rr.maximal);
    let semis = semisimplify(x);

    // Block summaries, one per domination class, with the generation
    // deficiency recorded when the class axes fail to span their block.
    let mut blocks = Vec::new();
    for class in &dom.classes {
        let space = dom.blocks[class[0]].space();
        let vectors: Vec<Vector> = class
            .iter()
            .map(|&i| x.axis(i).vector().clone())
            .collect();
        let generated = spaces_equal(&table.subalgebra_closure(&vectors), space);
        if !generated {
            let listed: Vec<&str> = class.iter().map(|&i| names[i].as_str()).collect();
            findings.push(format!(
                "note: the block of axes {} is not generated by them as a subalgebra",
                listed.join(", ")
            ));
        }
        blocks.push(BlockSummary {
            axes: class.iter().map(|&i| names[i].clone()).collect(),
            dimension: space.dim(),
            generated_by_axes: generated,
        });
    }

    let m = x.axis_count();
    let domination_symmetric =
        (0..m).all(|i| (0..m).all(|j| dom.dominates[i][j] == dom.dominates[j][i]));
    if kernel.dim() == 0 && !domination_symmetric {
        findings.push(
            "note: domination is not symmetric although the form is nondegenerate".into(),
        );
    }

    let components_match_blocks =
        canonical_partition(&nag.components()) == canonical_partition(&dom.classes);
    if !components_match_blocks {
        findings.push(
            "note: the non-annihilation components differ from the domination classes".into(),
        );
    }

    let mut checks: Vec<CheckResult> = Vec::new();
    let add = |checks: &mut Vec<CheckResult>, findings: &mut Vec<String>, name: &str, verdict: String| {
        if verdict.starts_with("false") {
            findings.push(format!("check {name}: {verdict}"));
        }
        checks.push(CheckResult {
            check: name.into(),
            verdict,
        });
    };

    let chain_verdict = if rr.chain_ok {
        "true".to_string()
    } else {
        format!(
            "false: dim R = {}, dim J = {}, dim A_perp = {}",
            rr.axial.dim(),
            rr.jacobson.dim(),
            kernel.dim()
        )
    };
    add(&mut checks, &mut findings, "main-theorem-chain", chain_verdict);

    let singular = axes.iter().position(|a| a.singular);
    let perp_verdict = match singular {
        Some(i) => format!("skipped: axis {} is singular for the chosen form", names[i]),
        None => {
            if spaces_equal(rr.axial.space(), rr.jacobson.space())
                && spaces_equal(rr.jacobson.space(), kernel.space())
            {
                "true".to_string()
            } else {
                format!(
                    "false: dim R = {}, dim J = {}, dim A_perp = {}",
                    rr.axial.dim(),
                    rr.jacobson.dim(),
                    kernel.dim()
                )
            }
        }
    };
    add(&mut checks, &mut findings, "lemma-perp", perp_verdict);

    let mut orth_verdict = "true".to_string();
    for (i, axis) in x.axes().iter().enumerate() {
        let check = check_eigenspace_orthogonality(x.law().values(), axis, &form);
        if !check.holds {
            let (lambda, mu, _, _) = check.witness.expect("a failed check carries a witness");
            orth_verdict = format!(
                "false: axis {}: the eigenspaces for {} and {} are not orthogonal",
                names[i], lambda, mu
            );
            break;
        }
    }
    add(&mut checks, &mut findings, "orthogonality", orth_verdict);

    let decomposition_verdict = if kernel.dim() > 0 {
        format!("skipped: the form radical is nonzero (dim {})", kernel.dim())
    } else {
        let mut verdict = "true".to_string();
        for u in decomposition_candidates(table, &dom.blocks)? {
            if let Some(reason) = check_decomposition(x, &u) {
                verdict = format!("false: {reason}");
                break;
            }
        }
        verdict
    };
    add(
        &mut checks,
        &mut findings,
        "decomposition-U-equals-A1",
        decomposition_verdict,
    );

    let mut semisimple_quotient = None;
    let semi_verdict = match &semis {
        Err(e) => format!("false: {e}"),
        Ok((quotient, decomp)) => {
            semisimple_quotient = Some(SemisimpleSummary {
                dimension: quotient.dimension(),
                classes: decomp
                    .classes
                    .iter()
                    .map(|class| {
                        let qnames = quotient.axis_names();
                        class.iter().map(|&i| qnames[i].clone()).collect()
                    })
                    .collect(),
                block_dimensions: decomp.blocks.iter().map(Ideal::dim).collect(),
                is_direct: decomp.is_direct,
                all_simple: decomp.all_simple,
            });
            let modulo_jacobson = decomp.is_direct && decomp.all_simple;
            // The companion statement: A modulo the form radical has zero
            // Jacobson radical. Trivial when the kernel is everything.
            let modulo_kernel = if kernel.dim() == n {
                Ok(true)
            } else if kernel.dim() == 0 {
                Ok(rr.jacobson.dim() == 0)
            } else {
                x.quotient(&kernel)
                    .map(|(q, _)| crate::radicals::jacobson_radical(&q).dim() == 0)
            };
            match (modulo_jacobson, modulo_kernel) {
                (true, Ok(true)) => "true".to_string(),
                (false, _) => format!(
                    "false: A/J is_direct = {}, all_simple = {}",
                    decomp.is_direct, decomp.all_simple
                ),
                (_, Ok(false)) => {
                    "false: A modulo the form radical has a nonzero Jacobson radical".to_string()
                }
                (_, Err(e)) => format!("false: quotient by the form radical failed: {e}"),
            }
        }
    };
    add(&mut checks, &mut findings, "semisimple-quotient", semi_verdict);

    let hull_verdict = if hull.discrete {
        "true".to_string()
    } else {
        let subset = hull
            .counterexample
            .clone()
            .expect("a non-discrete result carries a counterexample");
        format!("false: the subset {subset:?} of maximal ideals is not closed")
    };
    add(&mut checks, &mut findings, "hull-kernel-discrete", hull_verdict);

    let pf = check_projection_vs_form(x, &form, &proj);
    let projection_verdict = match pf.singular_axis {
        Some(i) => format!("skipped: axis {} is singular for the chosen form", names[i]),
        None => {
            if !pf.consistent {
                let (i, j) = pf.witness.expect("an inconsistent check carries a witness");
                format!(
                    "false: arc {} -> {} disagrees with the form value",
                    names[i], names[j]
                )
            } else if !proj.is_symmetric() {
                "false: the projection digraph is not symmetric".to_string()
            } else {
                "true".to_string()
            }
        }
    };
    add(&mut checks, &mut findings, "projection-vs-form", projection_verdict);

    if rr.jacobson.dim() < kernel.dim() {
        findings.push(format!(
            "note: the Jacobson radical (dim {}) is properly contained in the form radical (dim {})",
            rr.jacobson.dim(),
            kernel.dim()
        ));
    }

    let failures = checks
        .iter()
        .filter(|c| c.verdict.starts_with("false"))
        .count();

    let report = AnalysisReport {
        input: label.into(),
        field: table.field().to_string(),
        dimension: n,
        basis: table.basis_names().to_vec(),
        fusion_law: LawSummary {
            kind: match x.law().kind() {
                LawKind::Jordan => "jordan".into(),
                LawKind::Monster => "monster".into(),
                LawKind::Explicit => "explicit".into(),
            },
            values: scalar_strings(x.law().values()),
        },
        axes,
        form: FormSummary {
            policy: policy.label().into(),
            space_dimension: space_dim,
            normalization,
            gram: form.gram().rows().iter().map(|r| scalar_strings(r)).collect(),
        },
        radicals: RadicalsSummary {
            axial: space_summary(rr.axial.space()),
            jacobson: space_summary(rr.jacobson.space()),
            form_kernel: space_summary(kernel.space()),
            maximal_ideals: rr.maximal.iter().map(|i| space_summary(i.space())).collect(),
            chain_holds: rr.chain_ok,
        },
        structure: StructureSummary {
            blocks,
            domination_symmetric,
            semisimple_quotient,
            projection_arcs: proj.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            projection_symmetric: proj.is_symmetric(),
            non_annihilation_edges: nag.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            non_annihilation_components: nag.components(),
            components_match_blocks,
            hull_kernel: HullKernelSummary {
                maximal_ideals: rr.maximal.len(),
                mode: if hull.exhaustive {
                    "exhaustive".into()
                } else {
                    "sampled".into()
                },
                subsets_checked: hull.subsets_checked,
            },
        },
        checks,
        findings,
    };

    Ok(AnalysisOutcome {
        projection_dot: proj.to_dot(&names),
        non_annihilation_dot: nag.to_dot(&names),
        failures,
        report,
    })
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub input: String,
    pub field: String,
    pub dimension: usize,
    pub bound: u64,
    pub exhaustive: bool,
    pub ideal_count: usize,
    pub ideal_dimensions: Vec<usize>,
    pub oracle_maximal_dimensions: Vec<usize>,
    pub structural_maximal_dimensions: Vec<usize>,
    pub maximal_match: bool,
    pub radical_match: bool,
    pub agreement: bool,
}

/// Diffs the brute-force ideal lattice against the structural computations:
/// the maximal ideals and the largest axis-free ideal must coincide.
pub fn oracle_compare(x: &AxialAlgebra, bound: u64, label: &str) -> Result<OracleReport, Error> {
    let table = x.table();
    let lattice = brute_force_ideal_lattice(table, bound)?;

    let oracle_maximal: Vec<&Subspace> = lattice.maximal.iter().map(|&i| &lattice.ideals[i]).collect();
    let structural = maximal_ideals(x);
    let maximal_match = oracle_maximal.len() == structural.len()
        && structural
            .iter()
            .all(|m| oracle_maximal.iter().any(|s| spaces_equal(s, m.space())))
        && oracle_maximal
            .iter()
            .all(|s| structural.iter().any(|m| spaces_equal(s, m.space())));

    let vectors: Vec<Vector> = x.axes().iter().map(|a| a.vector().clone()).collect();
    let free = largest_axis_free_ideal(&lattice, &vectors)?;
    let radical_match = spaces_equal(&free, axial_radical(x).space());

    Ok(OracleReport {
        input: label.into(),
        field: table.field().to_string(),
        dimension: x.dimension(),
        bound,
        exhaustive: lattice.exhaustive,
        ideal_count: lattice.ideals.len(),
        ideal_dimensions: lattice.ideals.iter().map(Subspace::dim).collect(),
        oracle_maximal_dimensions: oracle_maximal.iter().map(|s| s.dim()).collect(),
        structural_maximal_dimensions: structural.iter().map(Ideal::dim).collect(),
        maximal_match,
        radical_match,
        agreement: maximal_match && radical_match,
    })
}
