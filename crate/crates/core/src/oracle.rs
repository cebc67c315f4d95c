//! Brute-force enumeration of the full ideal lattice of a prime-field
//! algebra, used as an independent check on the structural algorithms.
//! Arithmetic here is deliberately self-contained (plain u64 residues, its
//! own echelon forms) so that the two sides of a comparison cannot share a
//! bug in the exact linear algebra.

use crate::algebra::AlgebraTable;
use crate::error::Error;
use crate::linalg::{rref, Subspace, Vector};
use crate::scalar::Field;

/// Number of subspaces of GF(p)^n, by the q-analogue of Pascal's rule.
/// None when the count overflows u128.
pub fn subspace_count(p: u64, n: usize) -> Option<u128> {
    let p = p as u128;
    // g[k] = number of k-dimensional subspaces of GF(p)^m, grown in m
    let mut g: Vec<Option<u128>> = vec![Some(1)];
    for _ in 0..n {
        let mut next: Vec<Option<u128>> = Vec::with_capacity(g.len() + 1);
        let mut power: Option<u128> = Some(1);
        for k in 0..=g.len() {
            let below = if k == 0 { Some(0) } else { g[k - 1] };
            let level = g.get(k).copied().unwrap_or(Some(0));
            let scaled = level.and_then(|v| power.and_then(|q| v.checked_mul(q)));
            next.push(below.and_then(|b| scaled.and_then(|s| b.checked_add(s))));
            power = power.and_then(|q| q.checked_mul(p));
        }
        g = next;
    }
    let mut total: u128 = 0;
    for entry in g {
        total = total.checked_add(entry?)?;
    }
    Some(total)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Row-reduced subspace of GF(p)^n with rows kept in full reduced echelon
/// form at every insertion, so equal spaces have equal `rows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ModSpace {
    n: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModSpace {
    fn new(n: usize, p: u64) -> ModSpace {
        ModSpace {
            n,
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c] != 0 {
                let f = self.p - v[c];
                for k in c..self.n {
                    v[k] = (v[k] + f * self.rows[r][k]) % self.p;
                }
            }
        }
    }

    /// Inserts the vector, returning the reduced new row if the span grew.
    fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        self.reduce(&mut v);
        let lead = v.iter().position(|&x| x != 0)?;
        let f = inv_mod(v[lead], self.p);
        for x in v.iter_mut() {
            *x = *x * f % self.p;
        }
        // eliminate the new pivot from the existing rows
        for r in 0..self.rows.len() {
            if self.rows[r][lead] != 0 {
                let f = self.p - self.rows[r][lead];
                for k in 0..self.n {
                    self.rows[r][k] = (self.rows[r][k] + f * v[k]) % self.p;
                }
            }
        }
        let at = self.pivots.partition_point(|&c| c < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v.clone());
        Some(v)
    }

    fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Structure constants reduced to u64 residues, flattened; entry
/// (i, j, k) is the k-th coordinate of the product of basis vectors i, j.
struct ModTable {
    n: usize,
    p: u64,
    c: Vec<u64>,
}

impl ModTable {
    fn from_table(table: &AlgebraTable, p: u64) -> ModTable {
        let n = table.dimension();
        let mut c = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = table.basis_product(i.min(j), i.max(j));
                for k in 0..n {
                    c[(i * n + j) * n + k] = prod[k]
                        .residue()
                        .expect("prime-field scalars always have residues");
                }
            }
        }
        ModTable { n, p, c }
    }

    /// Product of an arbitrary vector with basis vector t.
    fn mult_basis(&self, v: &[u64], t: usize) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n];
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            let row = &self.c[(i * n + t) * n..(i * n + t) * n + n];
            for k in 0..n {
                out[k] = (out[k] + v[i] * row[k]) % self.p;
            }
        }
        out
    }

    fn is_ideal(&self, space: &ModSpace) -> bool {
        for row in &space.rows {
            for t in 0..self.n {
                if !space.contains(&self.mult_basis(row, t)) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest ideal containing v: spin up the span under all the
    /// multiplication operators.
    fn principal_ideal(&self, v: Vec<u64>) -> ModSpace {
        let mut space = ModSpace::new(self.n, self.p);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        if let Some(row) = space.insert(v) {
            queue.push(row);
        }
        while let Some(u) = queue.pop() {
            if space.dim() == self.n {
                return space;
            }
            for t in 0..self.n {
                if let Some(row) = space.insert(self.mult_basis(&u, t)) {
                    queue.push(row);
                }
            }
        }
        space
    }

    fn join(&self, a: &ModSpace, b: &ModSpace) -> ModSpace {
        let mut out = a.clone();
        for row in &b.rows {
            out.insert(row.clone());
        }
        out
    }
}

/// Visits every subspace of GF(p)^n exactly once, in a fixed order, as a
/// reduced echelon basis plus pivot columns.
fn visit_subspaces(n: usize, p: u64, visit: &mut impl FnMut(&ModSpace)) {
    let empty = ModSpace::new(n, p);
    visit(&empty);
    let mut pivots: Vec<usize> = Vec::new();
    for k in 1..=n {
        pivots.clear();
        pick_pivots(n, p, k, 0, &mut pivots, visit);
    }
}

fn pick_pivots(
    n: usize,
    p: u64,
    k: usize,
    from: usize,
    pivots: &mut Vec<usize>,
    visit: &mut impl FnMut(&ModSpace),
) {
    if pivots.len() == k {
        fill_free_entries(n, p, pivots, visit);
        return;
    }
    let remaining = k - pivots.len();
    for c in from..=n - remaining {
        pivots.push(c);
        pick_pivots(n, p, k, c + 1, pivots, visit);
        pivots.pop();
    }
}

fn fill_free_entries(n: usize, p: u64, pivots: &[usize], visit: &mut impl FnMut(&ModSpace)) {
    // free positions: to the right of each pivot, outside pivot columns
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &c) in pivots.iter().enumerate() {
        for col in c + 1..n {
            if !pivots.contains(&col) {
                free.push((r, col));
            }
        }
    }
    let mut rows = vec![vec![0u64; n]; pivots.len()];
    for (r, &c) in pivots.iter().enumerate() {
        rows[r][c] = 1;
    }
    let mut space = ModSpace {
        n,
        p,
        rows,
        pivots: pivots.to_vec(),
    };
    loop {
        visit(&space);
        // odometer over the free entries
        let mut carry = true;
        for &(r, c) in &free {
            let cell = &mut space.rows[r][c];
            *cell += 1;
            if *cell == p {
                *cell = 0;
            } else {
                carry = false;
                break;
            }
        }
        if carry {
            return;
        }
    }
}

/// The full ideal lattice of a prime-field algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    /// Every ideal, sorted by dimension then by basis entries.
    pub ideals: Vec<Subspace>,
    /// Indices into `ideals` of the maximal proper ideals.
    pub maximal: Vec<usize>,
    /// True when all subspaces were enumerated and filtered; false when the
    /// lattice was built by closing principal ideals under joins.
    pub exhaustive: bool,
}

fn lattice_by_filtering(table: &ModTable, n: usize, p: u64) -> Vec<ModSpace> {
    let mut found: Vec<ModSpace> = Vec::new();
    visit_subspaces(n, p, &mut |space| {
        if table.is_ideal(space) {
            found.push(space.clone());
        }
    });
    found
}

/// Every ideal is the sum of the principal ideals of its vectors, so the
/// lattice is the join closure of the principal ideals of one representative
/// per line, plus the zero ideal.
fn lattice_by_joins(table: &ModTable, n: usize, p: u64, cap: u64) -> Result<Vec<ModSpace>, Error> {
    let mut found: Vec<ModSpace> = vec![ModSpace::new(n, p)];
    let push = |space: ModSpace, found: &mut Vec<ModSpace>| -> Result<bool, Error> {
        if found.iter().any(|s| *s == space) {
            return Ok(false);
        }
        if found.len() as u64 >= cap {
            return Err(Error::OracleBound {
                estimate: found.len() as u128 + 1,
                bound: cap,
            });
        }
        found.push(space);
        Ok(true)
    };
    // one representative per line: first non-zero coordinate equal to 1
    let mut v = vec![0u64; n];
    for lead in (0..n).rev() {
        v[lead] = 1;
        loop {
            push(table.principal_ideal(v.clone()), &mut found)?;
            let mut carry = true;
            for c in (lead + 1..n).rev() {
                v[c] += 1;
                if v[c] == p {
                    v[c] = 0;
                } else {
                    carry = false;
                    break;
                }
            }
            if carry {
                break;
            }
        }
        v[lead] = 0;
    }
    // close under pairwise joins
    let mut next = 1;
    while next < found.len() {
        for i in 0..next {
            let joined = table.join(&found[i], &found[next]);
            push(joined, &mut found)?;
        }
        next += 1;
    }
    Ok(found)
}

fn to_subspace(space: &ModSpace, field: Field) -> Subspace {
    let rows: Vec<Vector> = space
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| field.integer(x as i64)).collect())
        .collect();
    rref(space.n, &rows).expect("echelon residue rows are well-formed")
}

/// Enumerates every ideal of a prime-field algebra by brute force. Refuses
/// with `OracleBound` when p^dim exceeds the bound. Chooses subspace
/// filtering when the subspace count itself is within the bound, and the
/// principal-join closure otherwise.
pub fn brute_force_ideal_lattice(table: &AlgebraTable, bound: u64) -> Result<IdealLattice, Error> {
    let Field::Prime(p) = table.field() else {
        return Err(Error::OracleNeedsPrimeField);
    };
    let n = table.dimension();
    let mut vectors: u128 = 1;
    for _ in 0..n {
        vectors = vectors.saturating_mul(p as u128);
    }
    if vectors > bound as u128 {
        return Err(Error::OracleBound {
            estimate: vectors,
            bound,
        });
    }
    let mods = ModTable::from_table(table, p);
    let (mut found, exhaustive) = match subspace_count(p, n) {
        Some(total) if total <= bound as u128 => (lattice_by_filtering(&mods, n, p), true),
        _ => (lattice_by_joins(&mods, n, p, bound)?, false),
    };
    found.sort_by(|a, b| (a.dim(), &a.rows).cmp(&(b.dim(), &b.rows)));
    let maximal = (0..found.len())
        .filter(|&i| {
            found[i].dim() < n
                && !(0..found.len()).any(|j| {
                    j != i
                        && found[j].dim() < n
                        && found[i].rows.iter().all(|r| found[j].contains(r))
                })
        })
        .collect();
    let field = table.field();
    Ok(IdealLattice {
        ideals: found.iter().map(|s| to_subspace(s, field)).collect(),
        maximal,
        exhaustive,
    })
}

/// The unique largest ideal in the lattice containing none of the given
/// axis vectors. Uniqueness is checked, not assumed: the axis-free ideals
/// must form a family with one maximum.
pub fn largest_axis_free_ideal(lattice: &IdealLattice, axes: &[Vector]) -> Result<Subspace, Error> {
    let free: Vec<&Subspace> = lattice
        .ideals
        .iter()
        .filter(|s| axes.iter().all(|a| !s.contains(a)))
        .collect();
    let mut best: Option<&Subspace> = None;
    for s in &free {
        if best.map_or(true, |b| b.dim() < s.dim()) {
            best = Some(s);
        }
    }
    let best = best.ok_or_else(|| {
        Error::InvalidParameter("an ideal lattice always contains the zero ideal".into())
    })?;
    for s in &free {
        if !s.is_subspace_of(best) {
            return Err(Error::InvalidParameter(
                "the axis-free ideals have no single largest element".into(),
            ));
        }
    }
    Ok(best.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matsuo_algebra, named_algebra, TranspositionGroup};
    use crate::radicals::{axial_radical, maximal_ideals};
    use crate::scalar::Scalar;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn subspace_counts_match_known_values() {
        assert_eq!(subspace_count(2, 4), Some(67));
        assert_eq!(subspace_count(3, 2), Some(6));
        assert_eq!(subspace_count(5, 3), Some(64));
        assert_eq!(subspace_count(3, 6), Some(56632));
        assert!(subspace_count(3, 12).unwrap() > 1_000_000);
    }

    #[test]
    fn split_pair_lattice_over_gf3() {
        let x = named_algebra("2B", &gf(3).integer(2)).unwrap();
        let lattice = brute_force_ideal_lattice(x.table(), 1_000_000).unwrap();
        assert!(lattice.exhaustive);
        assert_eq!(lattice.ideals.len(), 4);
        let dims: Vec<usize> = lattice.ideals.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 2]);
        assert_eq!(lattice.maximal, vec![1, 2]);
        // the two lines are the two axis spans
        assert!(lattice.ideals[1].contains(x.axis(1).vector()));
        assert!(lattice.ideals[2].contains(x.axis(0).vector()));
    }

    #[test]
    fn triple_point_lattice_over_gf5_matches_the_structural_radicals() {
        let x = named_algebra("3C", &gf(5).integer(2)).unwrap();
        let lattice = brute_force_ideal_lattice(x.table(), 1_000_000).unwrap();
        assert_eq!(lattice.ideals.len(), 3);
        let dims: Vec<usize> = lattice.ideals.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 2, 3]);
        assert_eq!(lattice.maximal, vec![1]);

        let structural = maximal_ideals(&x);
        assert_eq!(structural.len(), 1);
        assert_eq!(structural[0].space(), &lattice.ideals[1]);

        let axes: Vec<Vector> = x.axes().iter().map(|a| a.vector().clone()).collect();
        let free = largest_axis_free_ideal(&lattice, &axes).unwrap();
        assert_eq!(&free, axial_radical(&x).space());
    }

    #[test]
    fn the_two_enumeration_strategies_agree() {
        let g5 = gf(5);
        let triple = named_algebra("3C", &g5.integer(2)).unwrap();
        let m6 = matsuo_algebra(
            &TranspositionGroup::symmetric(4).unwrap(),
            &gf(3).integer(2),
        )
        .unwrap();
        for x in [&triple, &m6] {
            let table = x.table();
            let Field::Prime(p) = table.field() else {
                unreachable!()
            };
            let mods = ModTable::from_table(table, p);
            let mut filtered = lattice_by_filtering(&mods, table.dimension(), p);
            let mut joined = lattice_by_joins(&mods, table.dimension(), p, 1_000_000).unwrap();
            filtered.sort_by(|a, b| (a.dim(), &a.rows).cmp(&(b.dim(), &b.rows)));
            joined.sort_by(|a, b| (a.dim(), &a.rows).cmp(&(b.dim(), &b.rows)));
            assert_eq!(filtered, joined);
        }
    }

    #[test]
    fn simple_matsuo_algebra_has_only_the_trivial_ideals() {
        let m6 = matsuo_algebra(
            &TranspositionGroup::symmetric(4).unwrap(),
            &gf(3).integer(2),
        )
        .unwrap();
        let lattice = brute_force_ideal_lattice(m6.table(), 1_000_000).unwrap();
        assert_eq!(lattice.ideals.len(), 2);
        assert_eq!(lattice.maximal, vec![0]);
    }

    #[test]
    fn oversized_problems_are_refused_with_the_estimate() {
        let x = named_algebra("3C", &gf(5).integer(2)).unwrap();
        match brute_force_ideal_lattice(x.table(), 100) {
            Err(Error::OracleBound { estimate, bound }) => {
                assert_eq!(estimate, 125);
                assert_eq!(bound, 100);
            }
            other => panic!("expected a bound refusal, got {other:?}"),
        }
    }

    #[test]
    fn rational_algebras_are_refused() {
        let x = named_algebra("3C", &Scalar::ratio(1, 2)).unwrap();
        assert!(matches!(
            brute_force_ideal_lattice(x.table(), 1_000_000),
            Err(Error::OracleNeedsPrimeField)
        ));
    }

    #[test]
    fn lattices_are_deterministic() {
        let x = named_algebra("3C", &gf(5).integer(4)).unwrap();
        let a = brute_force_ideal_lattice(x.table(), 1_000_000).unwrap();
        let b = brute_force_ideal_lattice(x.table(), 1_000_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn largest_ideal_within_agrees_with_the_lattice_on_every_subspace() {
        // independent cross-check of the structural workhorse: for every
        // subspace V, the largest ideal inside V is the largest lattice
        // member contained in V
        let x = named_algebra("3C", &gf(5).integer(2)).unwrap();
        let table = x.table();
        let Field::Prime(p) = table.field() else {
            unreachable!()
        };
        let lattice = brute_force_ideal_lattice(table, 1_000_000).unwrap();
        let mut checked = 0usize;
        visit_subspaces(table.dimension(), p, &mut |space| {
            let v = to_subspace(space, table.field());
            let structural = table.largest_ideal_within(&v);
            let expected = lattice
                .ideals
                .iter()
                .filter(|i| i.is_subspace_of(&v))
                .max_by_key(|i| i.dim())
                .unwrap();
            assert_eq!(structural.space(), expected);
            checked += 1;
        });
        assert_eq!(checked, 64);
    }
}
