//! Structure theory on top of the radicals: the block generated by each
//! axis, the domination preorder and its mutual classes, the projection and
//! non-annihilation graphs with DOT output, semisimple decomposition, and
//! the hull-kernel topology on the maximal ideal list.

use crate::algebra::Ideal;
use crate::axes::{components, restrict_to_subspace, AxialAlgebra};
use crate::error::Error;
use crate::frobenius::{axis_singularity, FrobeniusForm};
use crate::linalg::{vec_is_zero, Subspace};
use crate::radicals::{is_simple, jacobson_radical, maximal_ideals};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// The ideal generated by one axis.
pub fn block(x: &AxialAlgebra, axis_index: usize) -> Ideal {
    x.table()
        .ideal_closure(std::slice::from_ref(x.axis(axis_index).vector()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Directed: an arc from a to b when the 1-component of a with respect
    /// to b is non-zero.
    Projection,
    /// Undirected: an edge between a and b when their product is non-zero.
    NonAnnihilation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisGraph {
    pub kind: GraphKind,
    pub vertices: usize,
    /// Ordered pairs for the projection digraph; pairs with i < j for the
    /// non-annihilation graph.
    pub arcs: Vec<(usize, usize)>,
}

impl AxisGraph {
    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        match self.kind {
            GraphKind::Projection => self.arcs.contains(&(from, to)),
            GraphKind::NonAnnihilation => {
                self.arcs.contains(&(from.min(to), from.max(to)))
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(i, j)| self.has_arc(j, i))
    }

    /// Connected components ignoring direction, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adjacent = vec![Vec::new(); self.vertices];
        for &(i, j) in &self.arcs {
            adjacent[i].push(j);
            adjacent[j].push(i);
        }
        let mut seen = vec![false; self.vertices];
        let mut out = Vec::new();
        for start in 0..self.vertices {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < component.len() {
                let v = component[head];
                head += 1;
                for &w in &adjacent[v] {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                    }
                }
            }
            component.sort();
            out.push(component);
        }
        out
    }

    /// GraphViz rendering with axis names as vertex labels. Mutual arcs of
    /// the projection digraph collapse to one edge with dir=both.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let esc = |i: usize| labels[i].replace('"', "\\\"");
        let mut out = String::new();
        match self.kind {
            GraphKind::Projection => {
                out.push_str("digraph projection {\n");
                for i in 0..self.vertices {
                    out.push_str(&format!("  \"{}\";\n", esc(i)));
                }
                for &(i, j) in &self.arcs {
                    if self.has_arc(j, i) {
                        if i < j {
                            out.push_str(&format!(
                                "  \"{}\" -> \"{}\" [dir=both];\n",
                                esc(i),
                                esc(j)
                            ));
                        }
                    } else {
                        out.push_str(&format!("  \"{}\" -> \"{}\";\n", esc(i), esc(j)));
                    }
                }
            }
            GraphKind::NonAnnihilation => {
                out.push_str("graph non_annihilation {\n");
                for i in 0..self.vertices {
                    out.push_str(&format!("  \"{}\";\n", esc(i)));
                }
                for &(i, j) in &self.arcs {
                    out.push_str(&format!("  \"{}\" -- \"{}\";\n", esc(i), esc(j)));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn projection_digraph(x: &AxialAlgebra) -> AxisGraph {
    let one = x.law().one_index();
    let mut arcs = Vec::new();
    for i in 0..x.axis_count() {
        for j in 0..x.axis_count() {
            if i == j {
                continue;
            }
            let parts = components(x.table(), x.axis(j), x.axis(i).vector())
                .expect("verified axes decompose every vector");
            if !vec_is_zero(&parts[one]) {
                arcs.push((i, j));
            }
        }
    }
    AxisGraph {
        kind: GraphKind::Projection,
        vertices: x.axis_count(),
        arcs,
    }
}

pub fn non_annihilation_graph(x: &AxialAlgebra) -> AxisGraph {
    let mut arcs = Vec::new();
    for i in 0..x.axis_count() {
        for j in i + 1..x.axis_count() {
            let product = x
                .table()
                .multiply(x.axis(i).vector(), x.axis(j).vector());
            if !vec_is_zero(&product) {
                arcs.push((i, j));
            }
        }
    }
    AxisGraph {
        kind: GraphKind::NonAnnihilation,
        vertices: x.axis_count(),
        arcs,
    }
}

/// The domination preorder: axis i dominates axis j when the block of j is
/// contained in the block of i.
#[derive(Clone, Debug)]
pub struct Domination {
    /// Block of each axis, in axis order.
    pub blocks: Vec<Ideal>,
    pub dominates: Vec<Vec<bool>>,
    /// Mutual-domination classes, each sorted, ordered by first member.
    pub classes: Vec<Vec<usize>>,
}

pub fn domination(x: &AxialAlgebra) -> Domination {
    let count = x.axis_count();
    let blocks: Vec<Ideal> = (0..count).map(|i| block(x, i)).collect();
    let dominates: Vec<Vec<bool>> = (0..count)
        .map(|i| {
            (0..count)
                .map(|j| blocks[j].space().is_subspace_of(blocks[i].space()))
                .collect()
        })
        .collect();
    // a projection arc witnesses that the target axis lies in the source
    // block, so every arc must be mirrored by domination
    let digraph = projection_digraph(x);
    for &(i, j) in &digraph.arcs {
        assert!(
            dominates[i][j],
            "projection arc {i} -> {j} without block containment"
        );
    }
    let mut claimed = vec![false; count];
    let mut classes = Vec::new();
    for i in 0..count {
        if claimed[i] {
            continue;
        }
        let class: Vec<usize> = (0..count)
            .filter(|&j| dominates[i][j] && dominates[j][i])
            .collect();
        for &j in &class {
            claimed[j] = true;
        }
        classes.push(class);
    }
    Domination {
        blocks,
        dominates,
        classes,
    }
}

/// One block per mutual-domination class, with the two structural flags the
/// decomposition is expected to satisfy when the Jacobson radical vanishes.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub classes: Vec<Vec<usize>>,
    pub blocks: Vec<Ideal>,
    /// The blocks sum directly to the whole algebra, annihilate each other
    /// pairwise, and each axis lies in exactly one of them.
    pub is_direct: bool,
    /// Every block is simple as an axial algebra over its own axes.
    pub all_simple: bool,
}

fn decompose(x: &AxialAlgebra) -> BlockDecomposition {
    let dom = domination(x);
    let classes = dom.classes;
    let blocks: Vec<Ideal> = classes
        .iter()
        .map(|class| dom.blocks[class[0]].clone())
        .collect();
    let n = x.dimension();
    let mut is_direct = true;
    let mut acc = Subspace::zero(n);
    for b in &blocks {
        let next = acc.sum(b.space());
        is_direct &= next.dim() == acc.dim() + b.dim();
        acc = next;
    }
    is_direct &= acc.dim() == n;
    'pairs: for c in 0..blocks.len() {
        for d in c + 1..blocks.len() {
            for u in blocks[c].space().basis() {
                for v in blocks[d].space().basis() {
                    if !vec_is_zero(&x.table().multiply(u, v)) {
                        is_direct = false;
                        break 'pairs;
                    }
                }
            }
        }
    }
    for a in x.axes() {
        let hits = blocks.iter().filter(|b| b.contains(a.vector())).count();
        is_direct &= hits == 1;
    }
    let mut all_simple = true;
    for (class, b) in classes.iter().zip(&blocks) {
        match restrict_to_subspace(x, b.space(), class) {
            Ok(summand) => all_simple &= is_simple(&summand),
            Err(_) => all_simple = false,
        }
    }
    BlockDecomposition {
        classes,
        blocks,
        is_direct,
        all_simple,
    }
}

/// Decomposes an algebra with zero Jacobson radical into its blocks.
pub fn semisimple_decomposition(x: &AxialAlgebra) -> Result<BlockDecomposition, Error> {
    let j = jacobson_radical(x);
    if j.dim() != 0 {
        return Err(Error::SemisimplePrecondition { dim: j.dim() });
    }
    Ok(decompose(x))
}

/// Quotients by the Jacobson radical when necessary, then decomposes.
pub fn semisimplify(x: &AxialAlgebra) -> Result<(AxialAlgebra, BlockDecomposition), Error> {
    let j = jacobson_radical(x);
    if j.dim() == 0 {
        return Ok((x.clone(), decompose(x)));
    }
    let (quotient, _) = x.quotient(&j)?;
    let residual = jacobson_radical(&quotient);
    if residual.dim() != 0 {
        return Err(Error::SemisimplePrecondition {
            dim: residual.dim(),
        });
    }
    let decomposition = decompose(&quotient);
    Ok((quotient, decomposition))
}

/// Agreement between the projection digraph and a Frobenius form: when
/// every axis is nonsingular, an arc from a to b exists exactly when
/// (a, b) is non-zero.
#[derive(Clone, Debug)]
pub struct ProjectionFormCheck {
    /// First axis with (a, a) = 0, if any; the comparison needs all of them
    /// nonsingular and is not attempted otherwise.
    pub singular_axis: Option<usize>,
    pub consistent: bool,
    /// Ordered axis pair where arc presence and form value disagree.
    pub witness: Option<(usize, usize)>,
}

pub fn check_projection_vs_form(
    x: &AxialAlgebra,
    form: &FrobeniusForm,
    graph: &AxisGraph,
) -> ProjectionFormCheck {
    for i in 0..x.axis_count() {
        if axis_singularity(form, x.axis(i)).is_zero() {
            return ProjectionFormCheck {
                singular_axis: Some(i),
                consistent: true,
                witness: None,
            };
        }
    }
    for i in 0..x.axis_count() {
        for j in 0..x.axis_count() {
            if i == j {
                continue;
            }
            let value = form.evaluate(x.axis(i).vector(), x.axis(j).vector());
            if graph.has_arc(i, j) == value.is_zero() {
                return ProjectionFormCheck {
                    singular_axis: None,
                    consistent: false,
                    witness: Some((i, j)),
                };
            }
        }
    }
    ProjectionFormCheck {
        singular_axis: None,
        consistent: true,
        witness: None,
    }
}

/// Hull-kernel closure of a subset of the maximal ideal list: intersect the
/// chosen ideals, then collect every listed ideal containing that kernel.
/// The empty set closes to itself.
pub fn hull_kernel_closure(maximal: &[Ideal], subset: &[usize]) -> Result<Vec<usize>, Error> {
    for &i in subset {
        if i >= maximal.len() {
            return Err(Error::NotInMaximalList { index: i });
        }
    }
    if subset.is_empty() {
        return Ok(Vec::new());
    }
    let mut kernel = maximal[subset[0]].space().clone();
    for &i in &subset[1..] {
        kernel = kernel.intersect(maximal[i].space());
    }
    Ok((0..maximal.len())
        .filter(|&j| kernel.is_subspace_of(maximal[j].space()))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscretenessCheck {
    pub discrete: bool,
    /// True when every subset was closed; false when subsets were sampled.
    pub exhaustive: bool,
    pub subsets_checked: usize,
    pub counterexample: Option<Vec<usize>>,
}

/// Discreteness of the hull-kernel topology of an algebra: every subset of
/// its maximal ideal list must be closed.
pub fn check_hull_kernel_discrete(x: &AxialAlgebra) -> DiscretenessCheck {
    hull_kernel_discreteness(&maximal_ideals(x))
}

/// Checks that every subset of the given maximal ideal list is hull-kernel
/// closed. Lists of up to 12 ideals are checked exhaustively; larger lists
/// get all singletons plus a fixed-seed random sample.
pub fn hull_kernel_discreteness(maximal: &[Ideal]) -> DiscretenessCheck {
    let m = maximal.len();
    let exhaustive = m <= 12;
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    if exhaustive {
        for mask in 0u32..(1u32 << m) {
            subsets.push((0..m).filter(|i| mask >> i & 1 == 1).collect());
        }
    } else {
        subsets.push(Vec::new());
        for i in 0..m {
            subsets.push(vec![i]);
        }
        let mut rng = StdRng::seed_from_u64(0x686b);
        for _ in 0..512 {
            subsets.push((0..m).filter(|_| rng.gen_bool(0.5)).collect());
        }
    }
    let mut checked = 0;
    for subset in subsets {
        let closure =
            hull_kernel_closure(maximal, &subset).expect("generated indices are in range");
        checked += 1;
        if closure != subset {
            return DiscretenessCheck {
                discrete: false,
                exhaustive,
                subsets_checked: checked,
                counterexample: Some(subset),
            };
        }
    }
    DiscretenessCheck {
        discrete: true,
        exhaustive,
        subsets_checked: checked,
        counterexample: None,
    }
}
