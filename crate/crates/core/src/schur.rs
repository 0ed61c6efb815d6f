//! Schur functor dimensions and equivariant resolution formats.
//!
//! A format over a split `V = F (+) G` records, per homological degree, the
//! representations `S_lambda(F*) (x) S_mu(G*)` that generate the free
//! modules, together with the twist each display carries. The verifier
//! recomputes ranks and twists from the partitions alone, so transcription
//! slips in a displayed twist are detected rather than repaired.

use num::bigint::BigUint;
use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rescalc::GradedFormat;
use crate::weyl::Variety;

/// Weakly decreasing sequence of non-negative parts; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidFormat(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Dimension of the Schur functor `S_lambda` applied to an `n`-dimensional
/// space, by the hook content formula.
pub fn schur_dimension(lambda: &Partition, n: usize) -> Result<BigUint> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { n });
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row as usize {
            // content j - i >= -(n-1), so n + j - i >= 1
            num *= BigUint::from(n + j - i);
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            den *= BigUint::from(hook);
        }
    }
    Ok(num / den)
}

/// One generating representation `S_lambda(F*) (x) S_mu(G*)` with the twist
/// carried by its display.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantTerm {
    pub lambda: Partition,
    pub mu: Partition,
    pub displayed_twist: u32,
}

impl EquivariantTerm {
    fn new(lambda: Vec<u32>, mu: Vec<u32>, displayed_twist: u32) -> Self {
        EquivariantTerm {
            lambda: Partition::new(lambda).unwrap(),
            mu: Partition::new(mu).unwrap(),
            displayed_twist,
        }
    }
}

/// Equivariant description of a length-3 format over `F (+) G`.
///
/// `terms[i]` holds homological degree `i + 1`; `None` marks degrees whose
/// equivariant shape is not recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantFormat {
    pub name: String,
    pub variety: Variety,
    pub dim_f: usize,
    pub dim_g: usize,
    pub format: GradedFormat,
    pub terms: [Option<Vec<EquivariantTerm>>; 3],
}

/// Twist check for a single displayed term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    pub hom_degree: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub displayed_twist: u32,
    pub implied_twist: u32,
    pub dimension: u64,
    pub ok: bool,
}

/// Rank comparison for one homological degree: the twist multiset rebuilt
/// from dimensions and implied twists against the target format row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCheck {
    pub hom_degree: usize,
    pub computed: Vec<u32>,
    pub expected: Vec<u32>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub twist_checks: Vec<TwistCheck>,
    pub rank_checks: Vec<RankCheck>,
    pub ranks_ok: bool,
    pub twists_ok: bool,
}

impl VerifyReport {
    pub fn is_consistent(&self) -> bool {
        self.ranks_ok
    }
}

/// Recomputes every displayed degree of `ef` from its partitions.
///
/// The implied twist of a term is `(|lambda| + |mu|) / 3`, the degree forced
/// by the weight rule on the ambient cubic grading. Ranks are aggregated per
/// implied twist and compared to the format; displayed twists that disagree
/// with the implied ones are flagged, not corrected.
pub fn verify_equivariant_format(ef: &EquivariantFormat) -> Result<VerifyReport> {
    let mut twist_checks = Vec::new();
    let mut rank_checks = Vec::new();
    for (idx, slot) in ef.terms.iter().enumerate() {
        let Some(terms) = slot else { continue };
        let hom_degree = idx + 1;
        let mut computed: Vec<u32> = Vec::new();
        for term in terms {
            let weight = term.lambda.size() + term.mu.size();
            if weight % 3 != 0 {
                return Err(Error::InvalidFormat(format!(
                    "term {}(x){} has weight {} not divisible by 3",
                    term.lambda, term.mu, weight
                )));
            }
            let implied = (weight / 3) as u32;
            let dim_l = schur_dimension(&term.lambda, ef.dim_f)?;
            let dim_g = schur_dimension(&term.mu, ef.dim_g)?;
            let dim: u64 = (dim_l * dim_g).try_into().map_err(|_| {
                Error::InvalidFormat("term dimension exceeds u64".into())
            })?;
            computed.extend(std::iter::repeat(implied).take(dim as usize));
            twist_checks.push(TwistCheck {
                hom_degree,
                lambda: term.lambda.clone(),
                mu: term.mu.clone(),
                displayed_twist: term.displayed_twist,
                implied_twist: implied,
                dimension: dim,
                ok: term.displayed_twist == implied,
            });
        }
        computed.sort_unstable();
        let expected = ef.format.rows()[hom_degree].clone();
        let ok = computed == expected;
        rank_checks.push(RankCheck {
            hom_degree,
            computed,
            expected,
            ok,
        });
    }
    let ranks_ok = rank_checks.iter().all(|c| c.ok);
    let twists_ok = twist_checks.iter().all(|c| c.ok);
    Ok(VerifyReport {
        name: ef.name.clone(),
        twist_checks,
        rank_checks,
        ranks_ok,
        twists_ok,
    })
}

fn fmt(rows: Vec<Vec<u32>>) -> GradedFormat {
    GradedFormat::new(rows).unwrap()
}

/// The six built-in equivariant formats: full displays for the two E7 and
/// two E8 loci, generator rows only for the two E6 loci. The two E8 middle
/// degrees keep their displayed twists of 9, which the weight rule shows
/// should read 21 and 25.
pub fn builtin_equivariant_formats() -> Vec<EquivariantFormat> {
    let t = EquivariantTerm::new;
    vec![
        EquivariantFormat {
            name: "e6_sigma3".into(),
            variety: Variety::Sigma3,
            dim_f: 4,
            dim_g: 2,
            format: fmt(vec![vec![0], vec![3, 3, 3, 3, 4], vec![5; 6], vec![7, 7]]),
            terms: [
                Some(vec![
                    t(vec![2, 2, 2, 2], vec![2, 2], 4),
                    t(vec![2, 1, 1, 1], vec![2, 2], 3),
                ]),
                None,
                None,
            ],
        },
        EquivariantFormat {
            name: "e6_sigma3_prime".into(),
            variety: Variety::Sigma3Prime,
            dim_f: 2,
            dim_g: 4,
            format: fmt(vec![vec![0], vec![3, 3, 3, 3, 4], vec![5; 6], vec![7, 7]]),
            terms: [
                Some(vec![
                    t(vec![2, 2], vec![2, 2, 2, 2], 4),
                    t(vec![1, 1], vec![2, 2, 2, 1], 3),
                ]),
                None,
                None,
            ],
        },
        EquivariantFormat {
            name: "e7_sigma3".into(),
            variety: Variety::Sigma3,
            dim_f: 5,
            dim_g: 2,
            format: fmt(vec![
                vec![0],
                vec![6, 6, 6, 6, 6, 7],
                vec![9; 7],
                vec![13, 13],
            ]),
            terms: [
                Some(vec![
                    t(vec![3, 3, 3, 3, 3], vec![3, 3], 7),
                    t(vec![3, 3, 3, 3, 2], vec![2, 2], 6),
                ]),
                Some(vec![
                    t(vec![4, 4, 4, 4, 4], vec![4, 3], 9),
                    t(vec![5, 4, 4, 4, 4], vec![3, 3], 9),
                ]),
                Some(vec![t(vec![6, 6, 6, 6, 6], vec![5, 4], 13)]),
            ],
        },
        EquivariantFormat {
            name: "e7_sigma3_prime".into(),
            variety: Variety::Sigma3Prime,
            dim_f: 3,
            dim_g: 4,
            format: fmt(vec![
                vec![0],
                vec![6, 6, 6, 6, 7],
                vec![10; 7],
                vec![13, 13, 13],
            ]),
            terms: [
                Some(vec![
                    t(vec![3, 3, 3], vec![3, 3, 3, 3], 7),
                    t(vec![3, 3, 3], vec![3, 2, 2, 2], 6),
                ]),
                Some(vec![
                    t(vec![5, 5, 4], vec![4, 4, 4, 4], 10),
                    t(vec![5, 5, 5], vec![4, 4, 4, 3], 10),
                ]),
                Some(vec![t(vec![7, 6, 6], vec![5, 5, 5, 5], 13)]),
            ],
        },
        EquivariantFormat {
            name: "e8_sigma3".into(),
            variety: Variety::Sigma3,
            dim_f: 6,
            dim_g: 2,
            format: fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 15, 15, 16],
                vec![21; 8],
                vec![31, 31],
            ]),
            terms: [
                Some(vec![
                    t(vec![6, 6, 6, 6, 6, 6], vec![6, 6], 16),
                    t(vec![6, 6, 6, 6, 6, 5], vec![5, 5], 15),
                ]),
                Some(vec![
                    t(vec![8, 8, 8, 8, 8, 8], vec![8, 7], 9),
                    t(vec![9, 8, 8, 8, 8, 8], vec![7, 7], 21),
                ]),
                Some(vec![t(vec![12, 12, 12, 12, 12, 12], vec![11, 10], 31)]),
            ],
        },
        EquivariantFormat {
            name: "e8_sigma3_prime".into(),
            variety: Variety::Sigma3Prime,
            dim_f: 4,
            dim_g: 4,
            format: fmt(vec![
                vec![0],
                vec![15, 15, 15, 15, 16],
                vec![25; 8],
                vec![31, 31, 31, 31],
            ]),
            terms: [
                Some(vec![
                    t(vec![6, 6, 6, 6], vec![6, 6, 6, 6], 16),
                    t(vec![6, 6, 6, 6], vec![6, 5, 5, 5], 15),
                ]),
                Some(vec![
                    t(vec![10, 10, 10, 10], vec![9, 9, 9, 8], 9),
                    t(vec![10, 10, 10, 9], vec![9, 9, 9, 9], 25),
                ]),
                Some(vec![t(vec![13, 12, 12, 12], vec![11, 11, 11, 11], 31)]),
            ],
        },
    ]
}

/// Looks up a built-in equivariant format by name.
pub fn builtin_equivariant_format(name: &str) -> Option<EquivariantFormat> {
    builtin_equivariant_formats()
        .into_iter()
        .find(|ef| ef.name == name)
}
