//! Z-gradings of a finite-type Lie algebra by a marked node, the Weyl
//! dimension formula, Freudenthal weight multiplicities, and the grading
//! range of an irreducible module.
//!
//! All arithmetic is exact. Inner products use the simply-laced
//! normalization `(alpha, alpha) = 2`; `<mu, beta>` for `mu` in
//! fundamental coordinates and `beta` in simple-root coordinates is a
//! plain integer dot product.

use std::collections::{HashMap, VecDeque};

use num::bigint::BigUint;
use num::{One, Zero};
use serde::Serialize;

use crate::diagram::{DiagramClass, TDiagram};
use crate::error::{Error, Result};
use crate::weyl::Weight;

/// Graded dimensions of the Lie algebra under the marking of one node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    /// Dimension per grade, from the most negative to the most positive.
    pub dims: Vec<(i64, u64)>,
    /// Description of the grade-0 Levi part.
    pub levi: String,
}

impl GradedDims {
    pub fn total(&self) -> u64 {
        self.dims.iter().map(|&(_, d)| d).sum()
    }

    pub fn dim_at(&self, grade: i64) -> u64 {
        self.dims
            .iter()
            .find(|&&(g, _)| g == grade)
            .map(|&(_, d)| d)
            .unwrap_or(0)
    }

    pub fn positive_part(&self) -> u64 {
        self.dims
            .iter()
            .filter(|&&(g, _)| g > 0)
            .map(|&(_, d)| d)
            .sum()
    }
}

/// Grading of `g` by the coefficient of the marked node's simple root.
pub fn z_grading_dims(d: &TDiagram, node: usize) -> Result<GradedDims> {
    let roots = d.positive_roots()?;
    let rank = d.node_count() as u64;
    let mut by_grade: HashMap<i64, u64> = HashMap::new();
    for root in &roots {
        let g = root.0[node];
        *by_grade.entry(g).or_insert(0) += 1;
        *by_grade.entry(-g).or_insert(0) += 1;
    }
    // The Cartan subalgebra sits in grade 0; zero-coefficient roots were
    // double counted above on purpose (positive and negative copies).
    *by_grade.entry(0).or_insert(0) += rank;
    let mut dims: Vec<(i64, u64)> = by_grade.into_iter().collect();
    dims.sort_unstable();
    let levi = {
        let mut keep = vec![true; d.node_count()];
        keep[node] = false;
        let comps = components(d, &keep);
        let is_chain = |comp: &[usize]| {
            comp.iter().all(|&v| {
                d.neighbors(v).iter().filter(|&&w| comp.contains(&w)).count() <= 2
            })
        };
        if comps.len() == 1 && is_chain(&comps[0]) {
            format!("gl{}", comps[0].len() + 1)
        } else {
            format!("levi({} components)", comps.len())
        }
    };
    Ok(GradedDims { dims, levi })
}

/// `dim G/P` for the maximal parabolic at `node`; equals the positive part
/// of the grading.
pub fn big_cell_dimension(d: &TDiagram, node: usize) -> Result<u64> {
    let total = d.positive_roots()?.len();
    let mut keep = vec![true; d.node_count()];
    keep[node] = false;
    let sub = d.positive_root_count_of_subset(&keep)?;
    Ok((total - sub) as u64)
}

fn components(d: &TDiagram, keep: &[bool]) -> Vec<Vec<usize>> {
    let n = d.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if !keep[start] || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in d.neighbors(v) {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Order of the Weyl group of the subdiagram on `keep`. Components must be
/// chains or finite T-shapes.
fn weyl_order_of_subset(d: &TDiagram, keep: &[bool]) -> Result<u128> {
    let mut order: u128 = 1;
    for comp in components(d, keep) {
        order *= component_weyl_order(d, &comp)?;
    }
    Ok(order)
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn component_weyl_order(d: &TDiagram, comp: &[usize]) -> Result<u128> {
    let in_comp = |v: usize| comp.contains(&v);
    let degree = |v: usize| d.neighbors(v).iter().filter(|&&w| in_comp(w)).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) == 3).collect();
    let n = comp.len() as u128;
    match branch.len() {
        0 => Ok(factorial(n + 1)), // A_n
        1 => {
            // Arm node counts from the branch point.
            let b = branch[0];
            let mut arms: Vec<u128> = Vec::new();
            for &start in d.neighbors(b) {
                if !in_comp(start) {
                    continue;
                }
                let mut len = 1u128;
                let mut prev = b;
                let mut cur = start;
                loop {
                    let next = d
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&w| w != prev && in_comp(w));
                    match next {
                        Some(w) => {
                            len += 1;
                            prev = cur;
                            cur = w;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, m] => Ok((1u128 << (m + 2)) * factorial(m + 3)), // D_{m+3}
                [1, 2, 2] => Ok(51840),                                     // E6
                [1, 2, 3] => Ok(2903040),                                   // E7
                [1, 2, 4] => Ok(696729600),                                 // E8
                _ => Err(Error::NonFiniteType),
            }
        }
        _ => Err(Error::NonFiniteType),
    }
}

/// `|W|` of the full diagram.
pub fn weyl_group_order(d: &TDiagram) -> Result<u128> {
    if d.classify() != DiagramClass::Finite {
        return Err(Error::NonFiniteType);
    }
    weyl_order_of_subset(d, &vec![true; d.node_count()])
}

/// Exact `dim V_lambda` by the Weyl dimension formula.
pub fn weyl_dimension(d: &TDiagram, lambda: &Weight) -> Result<BigUint> {
    if d.classify() != DiagramClass::Finite {
        return Err(Error::NonFiniteType);
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant);
    }
    let roots = d.positive_roots()?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in &roots {
        let a: i64 = lambda
            .0
            .iter()
            .zip(&alpha.0)
            .map(|(&l, &c)| (l + 1) * c)
            .sum();
        num *= BigUint::from(a as u64);
        den *= BigUint::from(alpha.height() as u64);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Weight multiplicities of `V_lambda`, stored on dominant weights and
/// extended by the Weyl action.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    diagram: TDiagram,
    lambda: Weight,
    dominant: HashMap<Weight, u64>,
    /// Full support: fundamental coordinates, root-basis offset `lambda - mu`,
    /// multiplicity.
    support: Vec<(Weight, Vec<i64>, u64)>,
}

impl WeightSystem {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Multiplicity of an arbitrary weight (Weyl-invariant lookup).
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        let dom = dominant_representative(&self.diagram, mu);
        self.dominant.get(&dom).copied().unwrap_or(0)
    }

    pub fn dominant_weights(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.dominant.iter().map(|(w, &m)| (w, m))
    }

    pub fn support(&self) -> &[(Weight, Vec<i64>, u64)] {
        &self.support
    }

    /// Sum of orbit-expanded multiplicities; must equal the Weyl dimension.
    pub fn total_dimension(&self) -> BigUint {
        self.support
            .iter()
            .fold(BigUint::zero(), |acc, (_, _, m)| acc + BigUint::from(*m))
    }

    /// Same total, via stabilizer indices instead of the expanded support.
    pub fn total_dimension_by_orbits(&self) -> Result<BigUint> {
        let full = weyl_order_of_subset(&self.diagram, &vec![true; self.diagram.node_count()])?;
        let mut total = BigUint::zero();
        for (w, m) in self.dominant.iter() {
            let keep: Vec<bool> = w.0.iter().map(|&c| c == 0).collect();
            let stab = weyl_order_of_subset(&self.diagram, &keep)?;
            total += BigUint::from(full / stab) * BigUint::from(*m);
        }
        Ok(total)
    }
}

fn dominant_representative(d: &TDiagram, mu: &Weight) -> Weight {
    let mut w = mu.clone();
    loop {
        match w.0.iter().position(|&c| c < 0) {
            Some(i) => w = crate::weyl::reflect(d, &w, i),
            None => return w,
        }
    }
}

/// Dominant representative of `mu` together with the updated root-basis
/// offset `lambda - mu` (reflecting at `i` when the coefficient is `m`
/// shifts the offset by `m` in slot `i`).
fn dominant_with_offset(d: &TDiagram, mut w: Weight, mut off: Vec<i64>) -> (Weight, Vec<i64>) {
    loop {
        match w.0.iter().position(|&c| c < 0) {
            Some(i) => {
                let m = w.0[i];
                w = crate::weyl::reflect(d, &w, i);
                off[i] += m;
            }
            None => return (w, off),
        }
    }
}

/// Freudenthal's recursion over the dominant weights of `V_lambda`.
pub fn weight_multiplicities(d: &TDiagram, lambda: &Weight) -> Result<WeightSystem> {
    if d.classify() != DiagramClass::Finite {
        return Err(Error::NonFiniteType);
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant);
    }
    let n = d.node_count();
    let roots = d.positive_roots()?;
    // Fundamental coordinates of each positive root.
    let roots_fund: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| {
            (0..n)
                .map(|j| (0..n).map(|i| d.cartan().entry(i, j) * a.0[i]).sum())
                .collect()
        })
        .collect();
    // Dominant support closure: the dominant weights of `V_lambda` are
    // exactly the dominant `mu <= lambda` in the same root-lattice coset.
    // Starting at `lambda`, shifting any known dominant weight by a root
    // (either sign) and reflecting back to the dominant chamber reaches all
    // of them; candidates escaping above `lambda` show a negative offset
    // and are dropped.
    let mut offsets: HashMap<Weight, Vec<i64>> = HashMap::new();
    offsets.insert(lambda.clone(), vec![0i64; n]);
    let mut queue: VecDeque<Weight> = VecDeque::new();
    queue.push_back(lambda.clone());
    while let Some(eta) = queue.pop_front() {
        let beta = offsets[&eta].clone();
        for (alpha, alpha_fund) in roots.iter().zip(&roots_fund) {
            for sign in [1i64, -1] {
                let cand = Weight(
                    eta.0
                        .iter()
                        .zip(alpha_fund)
                        .map(|(&c, &af)| c - sign * af)
                        .collect(),
                );
                let off: Vec<i64> = beta
                    .iter()
                    .zip(&alpha.0)
                    .map(|(&b, &ar)| b + sign * ar)
                    .collect();
                let (dom, off) = dominant_with_offset(d, cand, off);
                if off.iter().any(|&c| c < 0) {
                    continue;
                }
                if !offsets.contains_key(&dom) {
                    offsets.insert(dom.clone(), off);
                    queue.push_back(dom);
                }
            }
        }
    }

    // Dominant weights ordered by depth below lambda.
    let mut dominant_list: Vec<(Weight, i64)> = offsets
        .iter()
        .map(|(w, b)| (w.clone(), b.iter().sum::<i64>()))
        .collect();
    dominant_list.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for (mu, height) in dominant_list.iter().skip(1) {
        debug_assert!(*height > 0);
        let beta = &offsets[mu];
        // <lambda + mu + 2 rho, beta> with beta in root coordinates.
        let denom: i128 = (0..n)
            .map(|i| (lambda.0[i] + mu.0[i] + 2) as i128 * beta[i] as i128)
            .sum();
        let mut numer: i128 = 0;
        for (alpha, alpha_fund) in roots.iter().zip(&roots_fund) {
            let mut nu = mu.0.clone();
            for k in 1.. {
                for (v, &af) in nu.iter_mut().zip(alpha_fund) {
                    *v += af;
                }
                let nu_w = Weight(nu.clone());
                let dom = dominant_representative(d, &nu_w);
                let m = match mult.get(&dom) {
                    Some(&m) => m,
                    // Unbroken strings: once we leave the support, stay out.
                    None => break,
                };
                if m == 0 {
                    break;
                }
                let pairing: i128 = (0..n).map(|i| nu[i] as i128 * alpha.0[i] as i128).sum();
                let _ = k;
                numer += m as i128 * pairing;
            }
        }
        let value = 2 * numer / denom;
        debug_assert_eq!(2 * numer % denom, 0);
        if value > 0 {
            mult.insert(mu.clone(), value as u64);
        }
    }

    // Expanded support: the Weyl orbit of every dominant weight, with
    // offsets updated along each reflection. Orbits of distinct dominant
    // weights are disjoint, so one map dedupes everything.
    let mut seen: HashMap<Weight, (Vec<i64>, u64)> = HashMap::new();
    for (dom, &m) in mult.iter() {
        debug_assert!(m > 0);
        let beta = offsets[dom].clone();
        let mut stack = vec![dom.clone()];
        seen.insert(dom.clone(), (beta, m));
        while let Some(w) = stack.pop() {
            let off = seen[&w].0.clone();
            for i in 0..n {
                let c = w.0[i];
                if c == 0 {
                    continue;
                }
                let refl = crate::weyl::reflect(d, &w, i);
                if seen.contains_key(&refl) {
                    continue;
                }
                let mut noff = off.clone();
                noff[i] += c;
                seen.insert(refl.clone(), (noff, m));
                stack.push(refl);
            }
        }
    }
    let mut support: Vec<(Weight, Vec<i64>, u64)> = seen
        .into_iter()
        .map(|(w, (b, m))| (w, b, m))
        .collect();
    support.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(WeightSystem {
        diagram: d.clone(),
        lambda: lambda.clone(),
        dominant: mult,
        support,
    })
}

/// Grading of `V_lambda` by the marked node, normalized to start at 0 at
/// the lowest weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleGrading {
    /// Dimension per grade, index = grade.
    pub dims: Vec<BigUint>,
}

impl ModuleGrading {
    pub fn span(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim_bottom(&self) -> &BigUint {
        self.dims.first().unwrap()
    }

    pub fn dim_top(&self) -> &BigUint {
        self.dims.last().unwrap()
    }
}

/// Buckets the weights of `V_lambda` by the `node`-coefficient of
/// `mu - lowest` in the simple-root basis.
pub fn module_grading_range(d: &TDiagram, lambda: &Weight, node: usize) -> Result<ModuleGrading> {
    let ws = weight_multiplicities(d, lambda)?;
    module_grading_from_system(&ws, node)
}

pub fn module_grading_from_system(ws: &WeightSystem, node: usize) -> Result<ModuleGrading> {
    // Offsets record lambda - mu, so the grade below lambda is -beta[node];
    // normalizing by the deepest offset puts the lowest weight at 0.
    let max_off = ws
        .support
        .iter()
        .map(|(_, b, _)| b[node])
        .max()
        .ok_or(Error::NonDominant)?;
    let mut dims = vec![BigUint::zero(); max_off as usize + 1];
    for (_, beta, m) in &ws.support {
        let grade = (max_off - beta[node]) as usize;
        dims[grade] += BigUint::from(*m);
    }
    Ok(ModuleGrading { dims })
}
