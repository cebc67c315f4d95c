//! Fusion laws: finite sets of eigenvalues with a symmetric set-valued
//! product prescribing where products of eigenvectors may land.

use crate::error::Error;
use crate::scalar::Scalar;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    Jordan,
    Monster,
    Explicit,
}

/// A fusion law: distinct eigenvalues (always containing 1) and, for every
/// unordered pair, the set of eigenvalues their eigenvectors may fuse into.
/// Entries are stored as sorted index lists into `values`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLaw {
    kind: LawKind,
    values: Vec<Scalar>,
    table: Vec<Vec<usize>>,
}

impl FusionLaw {
    /// The Jordan-type law on {1, 0, eta}:
    /// 1*1={1}, 1*0={}, 1*eta={eta}, 0*0={0}, 0*eta={eta}, eta*eta={1,0}.
    pub fn jordan(eta: Scalar) -> Result<FusionLaw, Error> {
        let field = eta.field();
        if eta.is_zero() || eta.is_one() {
            return Err(Error::InvalidParameter(format!(
                "jordan law needs eta distinct from 0 and 1, got {eta}"
            )));
        }
        let values = vec![field.one(), field.zero(), eta];
        let table = vec![
            vec![0],    // 1*1
            vec![],     // 1*0
            vec![2],    // 1*eta
            vec![1],    // 0*0
            vec![2],    // 0*eta
            vec![0, 1], // eta*eta
        ];
        Ok(FusionLaw {
            kind: LawKind::Jordan,
            values,
            table,
        })
    }

    /// The four-eigenvalue law on {1, 0, alpha, beta}:
    /// 1*1={1}, 1*0={}, 1*a={a}, 1*b={b}, 0*0={0}, 0*a={a}, 0*b={b},
    /// a*a={1,0}, a*b={b}, b*b={1,0,a}.
    pub fn monster(alpha: Scalar, beta: Scalar) -> Result<FusionLaw, Error> {
        let field = alpha.field();
        if beta.field() != field {
            return Err(Error::MixedFields);
        }
        let values = vec![field.one(), field.zero(), alpha, beta];
        for (i, v) in values.iter().enumerate() {
            for w in &values[i + 1..] {
                if v == w {
                    return Err(Error::InvalidParameter(format!(
                        "monster law needs 1, 0, alpha, beta pairwise distinct, got alpha={}, beta={}",
                        values[2], values[3]
                    )));
                }
            }
        }
        let table = vec![
            vec![0],       // 1*1
            vec![],        // 1*0
            vec![2],       // 1*alpha
            vec![3],       // 1*beta
            vec![1],       // 0*0
            vec![2],       // 0*alpha
            vec![3],       // 0*beta
            vec![0, 1],    // alpha*alpha
            vec![3],       // alpha*beta
            vec![0, 1, 2], // beta*beta
        ];
        Ok(FusionLaw {
            kind: LawKind::Monster,
            values,
            table,
        })
    }

    /// An explicit law. `entries` gives, for every ordered pair of value
    /// indices, the allowed result values; it must be total and symmetric,
    /// and `values` must be distinct and contain 1.
    pub fn explicit(
        values: Vec<Scalar>,
        entries: &dyn Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<FusionLaw, Error> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidParameter("a fusion law needs values".into()));
        }
        let field = values[0].field();
        if values.iter().any(|v| v.field() != field) {
            return Err(Error::MixedFields);
        }
        for (i, v) in values.iter().enumerate() {
            for w in &values[i + 1..] {
                if v == w {
                    return Err(Error::InvalidParameter(format!(
                        "fusion values must be distinct, {v} repeats"
                    )));
                }
            }
        }
        if !values.iter().any(Scalar::is_one) {
            return Err(Error::InvalidParameter(
                "a fusion law must contain the eigenvalue 1".into(),
            ));
        }
        let index_of = |s: &Scalar| -> Result<usize, Error> {
            values.iter().position(|v| v == s).ok_or_else(|| {
                Error::InvalidParameter(format!("fusion entry value {s} is not a law value"))
            })
        };
        let mut table = vec![Vec::new(); n * (n + 1) / 2];
        for i in 0..n {
            for j in 0..n {
                let cell = entries(i, j);
                let mut idx: Vec<usize> = cell
                    .iter()
                    .map(index_of)
                    .collect::<Result<Vec<_>, _>>()?;
                idx.sort_unstable();
                idx.dedup();
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                let slot = &mut table[pair_index(n, a, b)];
                if i <= j {
                    *slot = idx;
                } else if *slot != idx {
                    return Err(Error::InvalidParameter(format!(
                        "fusion table is not symmetric at ({}, {})",
                        values[i], values[j]
                    )));
                }
            }
        }
        Ok(FusionLaw {
            kind: LawKind::Explicit,
            values,
            table,
        })
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Index of the eigenvalue 1.
    pub fn one_index(&self) -> usize {
        self.values
            .iter()
            .position(Scalar::is_one)
            .expect("laws always contain 1")
    }

    pub fn value_index(&self, s: &Scalar) -> Option<usize> {
        self.values.iter().position(|v| v == s)
    }

    /// Allowed fusion results for the pair of value indices (i, j), as sorted
    /// indices into `values`.
    pub fn product(&self, i: usize, j: usize) -> &[usize] {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.table[pair_index(self.values.len(), i, j)]
    }

    /// Direct sums of algebras over this law stay axial exactly when 0 is an
    /// eigenvalue and 0 lies in 0*0.
    pub fn admits_direct_sums(&self) -> bool {
        let Some(zero_idx) = self.values.iter().position(Scalar::is_zero) else {
            return false;
        };
        self.product(zero_idx, zero_idx).contains(&zero_idx)
    }
}
