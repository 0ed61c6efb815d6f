//! T-shaped diagrams, their Cartan matrices, type classification, and
//! finite root enumeration.
//!
//! A `TDiagram` has three arms of `p-1`, `q-1`, `r-1` nodes meeting at a
//! central node `u`. Nodes are ordered `x_{p-1} .. x_1, u, y_1 .. y_{q-1},
//! z_1 .. z_{r-1}` and every vector in this crate uses that order.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coarse type of a `TDiagram`: finite iff 1/p + 1/q + 1/r > 1, affine
/// iff equal, indefinite otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramClass {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramClass::Finite => write!(f, "finite"),
            DiagramClass::Affine => write!(f, "affine"),
            DiagramClass::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// Symmetric generalized Cartan matrix of a `TDiagram`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    fn from_adjacency(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            entries[i][i] = 2;
        }
        for &(a, b) in edges {
            entries[a][b] = -1;
            entries[b][a] = -1;
        }
        CartanMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        let n = self.size();
        let mut m: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(piv) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                    return 0;
                };
                m.swap(k, piv);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }
}

/// A root written in the simple-root basis (node order of the diagram).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

/// The T-shaped graph with arms of lengths `p-1`, `q-1`, `r-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDiagram {
    p: usize,
    q: usize,
    r: usize,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    cartan: CartanMatrix,
}

/// Builds the diagram for positive arm parameters `(p, q, r)`.
pub fn build_diagram(p: usize, q: usize, r: usize) -> Result<TDiagram> {
    TDiagram::new(p, q, r)
}

impl TDiagram {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self> {
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::InvalidDiagram(format!(
                "arm parameters must be positive, got ({p},{q},{r})"
            )));
        }
        let mut labels = Vec::with_capacity(p + q + r - 2);
        for i in (1..p).rev() {
            labels.push(format!("x{i}"));
        }
        labels.push("u".to_string());
        for j in 1..q {
            labels.push(format!("y{j}"));
        }
        for k in 1..r {
            labels.push(format!("z{k}"));
        }
        let u = p - 1;
        let mut edges = Vec::new();
        // x-arm runs into u along consecutive indices.
        for i in 0..p - 1 {
            edges.push((i, i + 1));
        }
        for j in 0..q - 1 {
            let node = p + j;
            edges.push((if j == 0 { u } else { node - 1 }, node));
        }
        for k in 0..r - 1 {
            let node = p + q - 1 + k;
            edges.push((if k == 0 { u } else { node - 1 }, node));
        }
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let cartan = CartanMatrix::from_adjacency(n, &edges);
        Ok(TDiagram {
            p,
            q,
            r,
            labels,
            edges,
            adjacency,
            cartan,
        })
    }

    pub fn arms(&self) -> (usize, usize, usize) {
        (self.p, self.q, self.r)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn node_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    /// Index of the central node.
    pub fn u_node(&self) -> usize {
        self.p - 1
    }

    /// Index of `x1`, the tip of the first arm, when it exists.
    pub fn x1_node(&self) -> Option<usize> {
        if self.p >= 2 {
            Some(self.p - 2)
        } else {
            None
        }
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn classify(&self) -> DiagramClass {
        let (p, q, r) = (self.p as u64, self.q as u64, self.r as u64);
        let lhs = q * r + p * r + p * q;
        let rhs = p * q * r;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => DiagramClass::Finite,
            std::cmp::Ordering::Equal => DiagramClass::Affine,
            std::cmp::Ordering::Less => DiagramClass::Indefinite,
        }
    }

    /// Pairing `<beta, alpha_i^vee>` for `beta` in simple-root coordinates.
    pub fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.cartan.row(i).iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    /// Simple reflection `s_i` acting on simple-root coordinates.
    pub fn reflect_root(&self, beta: &RootVector, i: usize) -> RootVector {
        let mut out = beta.0.clone();
        out[i] -= self.root_pairing(&beta.0, i);
        RootVector(out)
    }

    /// All positive roots, by saturation from the simple roots.
    ///
    /// Sorted by height, then lexicographically, so the output is stable.
    pub fn positive_roots(&self) -> Result<Vec<RootVector>> {
        if self.classify() != DiagramClass::Finite {
            return Err(Error::NonFiniteType);
        }
        let n = self.node_count();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let mut next = beta.clone();
                next[i] -= self.root_pairing(&beta, i);
                if next.iter().all(|&c| c >= 0) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
        roots.sort_by_key(|r| (r.height(), r.0.clone()));
        Ok(roots)
    }

    /// Positive root count of the subdiagram on `keep`.
    pub(crate) fn positive_root_count_of_subset(&self, keep: &[bool]) -> Result<usize> {
        let roots = self.positive_roots()?;
        Ok(roots
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, &c)| keep[i] || c == 0))
            .count())
    }
}

/// Classification of a diagram; see `TDiagram::classify`.
pub fn classify(d: &TDiagram) -> DiagramClass {
    d.classify()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_shape() {
        let d = build_diagram(2, 3, 3).unwrap();
        assert_eq!(d.node_count(), 6);
        assert_eq!(d.labels(), &["x1", "u", "y1", "y2", "z1", "z2"]);
        assert_eq!(d.x1_node(), Some(0));
        assert_eq!(d.u_node(), 1);
        assert_eq!(d.neighbors(d.u_node()).len(), 3);
    }

    #[test]
    fn degenerate_single_node() {
        let d = build_diagram(1, 1, 1).unwrap();
        assert_eq!(d.node_count(), 1);
        assert_eq!(d.labels(), &["u"]);
        assert_eq!(d.x1_node(), None);
    }

    #[test]
    fn affine_t244() {
        let d = build_diagram(2, 4, 4).unwrap();
        assert_eq!(d.node_count(), 8);
        assert_eq!(d.classify(), DiagramClass::Affine);
    }

    #[test]
    fn rejects_zero_arm() {
        assert!(build_diagram(0, 3, 3).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(
            build_diagram(2, 3, 3).unwrap().classify(),
            DiagramClass::Finite
        );
        assert_eq!(
            build_diagram(2, 3, 7).unwrap().classify(),
            DiagramClass::Indefinite
        );
        assert_eq!(
            build_diagram(2, 3, 6).unwrap().classify(),
            DiagramClass::Affine
        );
        assert_eq!(
            build_diagram(3, 3, 3).unwrap().classify(),
            DiagramClass::Affine
        );
    }

    #[test]
    fn classify_agrees_with_determinant_sign() {
        // det > 0 finite, det = 0 affine, for all small T_{p,q,r}.
        for p in 1..=10usize {
            for q in 1..=10usize {
                for r in 1..=10usize {
                    if p + q + r > 12 {
                        continue;
                    }
                    let d = build_diagram(p, q, r).unwrap();
                    let det = d.cartan().det();
                    match d.classify() {
                        DiagramClass::Finite => assert!(det > 0, "({p},{q},{r})"),
                        DiagramClass::Affine => assert_eq!(det, 0, "({p},{q},{r})"),
                        DiagramClass::Indefinite => assert!(det < 0, "({p},{q},{r})"),
                    }
                }
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        // Cross-checks: dim E6 = 78 = 2*36 + 6, E7 133 = 2*63 + 7, E8 248 = 2*120 + 8.
        for (pqr, count) in [((2, 3, 3), 36), ((2, 3, 4), 63), ((2, 3, 5), 120)] {
            let d = build_diagram(pqr.0, pqr.1, pqr.2).unwrap();
            assert_eq!(d.positive_roots().unwrap().len(), count);
        }
        // Stable under relabeling of the arms.
        let d = build_diagram(2, 4, 3).unwrap();
        assert_eq!(d.positive_roots().unwrap().len(), 63);
        let d = build_diagram(5, 2, 3).unwrap();
        assert_eq!(d.positive_roots().unwrap().len(), 120);
    }

    #[test]
    fn positive_roots_rejects_affine() {
        let d = build_diagram(2, 4, 4).unwrap();
        assert!(matches!(d.positive_roots(), Err(Error::NonFiniteType)));
    }

    #[test]
    fn roots_closed_under_simple_reflections() {
        let d = build_diagram(2, 3, 4).unwrap();
        let roots = d.positive_roots().unwrap();
        let set: HashSet<Vec<i64>> = roots.iter().map(|r| r.0.clone()).collect();
        for root in &roots {
            for i in 0..d.node_count() {
                let refl = d.reflect_root(root, i);
                let neg: Vec<i64> = refl.0.iter().map(|c| -c).collect();
                assert!(set.contains(&refl.0) || set.contains(&neg));
            }
        }
    }
}
