//! Graded free resolution format arithmetic: K-polynomials, Hilbert
//! numerators, degrees, linkage mapping cones, Gorenstein sums, and the
//! tangency Betti-degree solver.
//!
//! A format stores, per homological degree, the multiset of generation
//! degrees of its free summands (the negatives of the displayed `A(-d)`
//! twists). Homological degree 0 is always a single summand in degree 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer polynomial in one variable `t`, dense coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    /// `coeffs[i]` is the coefficient of `t^i`; no trailing zeros.
    pub coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let mut rev = self.coeffs.clone();
        rev.reverse();
        rev == self.coeffs
    }

    /// Exact quotient by `1 - t`; `None` if `p(1) != 0`.
    fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.coeffs.is_empty() {
            return Some(IntPoly::zero());
        }
        // p = (1 - t) q  =>  q_i = p_i + q_{i-1}, remainder p(1).
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0i64;
        for &c in &self.coeffs {
            acc += c;
            q.push(acc);
        }
        if q.pop() != Some(0) {
            return None;
        }
        Some(IntPoly::new(q))
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag == 1 => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Twist multisets of a graded free resolution, one per homological degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct GradedFormat {
    twists: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for GradedFormat {
    type Error = Error;
    fn try_from(twists: Vec<Vec<u32>>) -> Result<Self> {
        GradedFormat::new(twists)
    }
}

impl From<GradedFormat> for Vec<Vec<u32>> {
    fn from(f: GradedFormat) -> Self {
        f.twists
    }
}

impl GradedFormat {
    pub fn new(mut twists: Vec<Vec<u32>>) -> Result<Self> {
        if twists.first().map(Vec::as_slice) != Some(&[0]) {
            return Err(Error::InvalidFormat(
                "homological degree 0 must be a single summand in degree 0".into(),
            ));
        }
        if twists.iter().any(Vec::is_empty) {
            return Err(Error::InvalidFormat(
                "every homological degree must have positive rank".into(),
            ));
        }
        for row in &mut twists {
            row.sort_unstable();
        }
        Ok(GradedFormat { twists })
    }

    /// Koszul complex of a length-3 complete intersection.
    pub fn koszul3(d1: u32, d2: u32, d3: u32) -> Self {
        GradedFormat::new(vec![
            vec![0],
            vec![d1, d2, d3],
            vec![d1 + d2, d1 + d3, d2 + d3],
            vec![d1 + d2 + d3],
        ])
        .unwrap()
    }

    pub fn length(&self) -> usize {
        self.twists.len() - 1
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.twists
    }

    pub fn rank(&self, hom_degree: usize) -> usize {
        self.twists.get(hom_degree).map_or(0, Vec::len)
    }

    pub fn generators(&self) -> &[u32] {
        &self.twists[1]
    }

    pub fn max_twist(&self) -> u32 {
        self.twists
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap()
    }
}

/// Alternating sum `sum_i (-1)^i sum_{d in F_i} t^d`.
pub fn k_polynomial(f: &GradedFormat) -> IntPoly {
    let deg = f.max_twist() as usize;
    let mut coeffs = vec![0i64; deg + 1];
    for (i, row) in f.rows().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &d in row {
            coeffs[d as usize] += sign;
        }
    }
    IntPoly::new(coeffs)
}

/// Exact quotient `k_polynomial(F) / (1-t)^codim`.
pub fn hilbert_numerator(f: &GradedFormat, codim: usize) -> Result<IntPoly> {
    let mut p = k_polynomial(f);
    for _ in 0..codim {
        p = p
            .div_one_minus_t()
            .ok_or(Error::NotDivisible { codim })?;
    }
    Ok(p)
}

/// The multiplicity: Hilbert numerator evaluated at `t = 1`.
pub fn degree_of(f: &GradedFormat, codim: usize) -> Result<i64> {
    Ok(hilbert_numerator(f, codim)?.eval_at_one())
}

fn remove_one(row: &mut Vec<u32>, value: u32) -> bool {
    if let Some(pos) = row.iter().position(|&d| d == value) {
        row.remove(pos);
        true
    } else {
        false
    }
}

/// Minimal format of the linked ideal: dual of the mapping cone of the
/// Koszul complex on `ci` into `F`, twisted by `s = d1+d2+d3`, with
/// matching twists in adjacent homological degrees cancelled.
pub fn linkage_dual(f: &GradedFormat, ci: (u32, u32, u32)) -> Result<GradedFormat> {
    if f.length() != 3 {
        return Err(Error::InvalidFormat(format!(
            "linkage needs a length-3 format, got length {}",
            f.length()
        )));
    }
    let (d1, d2, d3) = ci;
    if d1 == 0 || d2 == 0 || d3 == 0 {
        return Err(Error::InvalidLinkage("ci degrees must be positive".into()));
    }
    let s = d1 + d2 + d3;
    let koszul = GradedFormat::koszul3(d1, d2, d3);
    // Cone: D_i = F_i + K_{i-1}; dualize and twist by s.
    let mut cone: Vec<Vec<u32>> = Vec::with_capacity(5);
    for i in 0..=4usize {
        let mut row: Vec<u32> = f.rows().get(i).cloned().unwrap_or_default();
        if i >= 1 {
            row.extend_from_slice(&koszul.rows()[i - 1]);
        }
        cone.push(row);
    }
    let mut dual: Vec<Vec<u32>> = Vec::with_capacity(5);
    for i in (0..=4usize).rev() {
        let mut row = Vec::with_capacity(cone[i].len());
        for &d in &cone[i] {
            if d > s {
                return Err(Error::InvalidLinkage(format!(
                    "twist {d} exceeds the shift {s}"
                )));
            }
            row.push(s - d);
        }
        row.sort_unstable();
        dual.push(row);
    }
    // Cancel split summands between adjacent homological degrees.
    loop {
        let mut changed = false;
        for i in 0..dual.len() - 1 {
            let upper = dual[i + 1].clone();
            for d in upper {
                if dual[i].contains(&d) {
                    remove_one(&mut dual[i], d);
                    remove_one(&mut dual[i + 1], d);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if !dual[4].is_empty() {
        return Err(Error::InvalidLinkage(
            "mapping cone did not collapse to length 3".into(),
        ));
    }
    dual.pop();
    GradedFormat::new(dual)
}

/// Length-4 format of the sum of two linked ideals: mapping cone of the
/// `s`-twisted dual of `F` into `F`, with no cancellation.
pub fn gorenstein_sum(f: &GradedFormat, s: u32) -> Result<GradedFormat> {
    if f.length() != 3 {
        return Err(Error::InvalidFormat(format!(
            "Gorenstein sum needs a length-3 format, got length {}",
            f.length()
        )));
    }
    if s <= f.max_twist() {
        return Err(Error::ShiftTooSmall {
            shift: s,
            max_twist: f.max_twist(),
        });
    }
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(5);
    for i in 0..=4usize {
        let mut row: Vec<u32> = f.rows().get(i).cloned().unwrap_or_default();
        if i >= 1 {
            for &d in &f.rows()[4 - i] {
                row.push(s - d);
            }
        }
        row.sort_unstable();
        rows.push(row);
    }
    GradedFormat::new(rows)
}

/// Outcome of the codimension-3 middle-degree solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BettiSolution {
    /// The moment plane is tangent to the sphere; the equal-degree point is
    /// the unique solution.
    Unique(Vec<u32>),
    /// Not tangent: the two moment constraints do not pin the degrees down.
    Indeterminate { sum: i64, sum_of_squares: i64 },
}

/// Solves for the `n` middle twists of a codimension-3 format from the
/// vanishing of the first two derivatives of the K-polynomial at `t = 1`.
pub fn betti_degree_solve(
    gens: &[u32],
    top: &[u32],
    n: usize,
    codim: usize,
) -> Result<BettiSolution> {
    if codim != 3 {
        return Err(Error::NoIntegerSolution(format!(
            "solver only handles codimension 3, got {codim}"
        )));
    }
    if n == 0 {
        return Err(Error::NoIntegerSolution("middle rank must be positive".into()));
    }
    // Rank condition from p(1) = 0.
    if 1 + (n as i64) != gens.len() as i64 + top.len() as i64 {
        return Err(Error::NoIntegerSolution(format!(
            "rank mismatch: 1 - {} + {} - {} != 0",
            gens.len(),
            n,
            top.len()
        )));
    }
    let s1: i64 = gens.iter().map(|&d| d as i64).sum::<i64>()
        + top.iter().map(|&d| d as i64).sum::<i64>();
    let pair_sum = |row: &[u32]| row.iter().map(|&d| d as i64 * (d as i64 - 1)).sum::<i64>();
    let s2 = pair_sum(gens) + pair_sum(top) + s1;
    // Tangency is the Cauchy-Schwarz equality n * sum(d^2) = (sum d)^2.
    if n as i64 * s2 == s1 * s1 {
        if s1 % n as i64 != 0 || s1 <= 0 {
            return Err(Error::NoIntegerSolution(format!(
                "tangency point {s1}/{n} is not a positive integer"
            )));
        }
        Ok(BettiSolution::Unique(vec![(s1 / n as i64) as u32; n]))
    } else if n as i64 * s2 > s1 * s1 {
        Ok(BettiSolution::Indeterminate {
            sum: s1,
            sum_of_squares: s2,
        })
    } else {
        // The plane misses the sphere entirely: no real solution at all.
        Err(Error::NoIntegerSolution(format!(
            "no real degrees with sum {s1} and sum of squares {s2}"
        )))
    }
}
