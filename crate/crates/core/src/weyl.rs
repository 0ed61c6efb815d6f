//! The coset poset `W/W_P` for the parabolic omitting `x1`, realized as
//! the Weyl orbit of the fundamental weight `omega_{x1}`.
//!
//! Elements are identified with their weights (the orbit map is a
//! bijection); lengths, reduced words, and the Bruhat order all live on
//! the orbit. Coordinate degrees come from the `x1`-coefficient of a
//! weight in the simple-root basis, normalized so the top coset gets 0.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::diagram::{DiagramClass, RootVector, TDiagram};
use crate::error::{Error, Result};

/// A weight in the fundamental-weight basis (node order of the diagram).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn fundamental(d: &TDiagram, node: usize) -> Weight {
        let mut v = vec![0i64; d.node_count()];
        v[node] = 1;
        Weight(v)
    }

    pub fn zero(d: &TDiagram) -> Weight {
        Weight(vec![0i64; d.node_count()])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// Simple reflection `s_i(mu) = mu - mu_i alpha_i`, with `alpha_i` read off
/// the i-th column of the Cartan matrix.
pub fn reflect(d: &TDiagram, mu: &Weight, node: usize) -> Weight {
    let c = mu.0[node];
    let mut out = mu.0.clone();
    for (j, v) in out.iter_mut().enumerate() {
        *v -= c * d.cartan().entry(node, j);
    }
    Weight(out)
}

/// One element of `W/W_P`: its weight, length, a reduced word, and the
/// poset predecessors it was reached from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CosetElement {
    pub id: usize,
    pub weight: Weight,
    pub length: usize,
    /// Product-order word: `w = s_{word[0]} s_{word[1]} ...`, so the last
    /// entry is applied to `omega_{x1}` first.
    pub reduced_word: Vec<usize>,
    pub covers_from: Vec<usize>,
    /// `x1`-coefficient of `weight - omega_{x1}` in the simple-root basis.
    pub(crate) grade_offset: i64,
}

/// The `sigma`-chain of the paper: identity, the two forced reflections,
/// and the two branches at length 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaChain {
    pub sigma0: Weight,
    pub sigma1: Weight,
    pub sigma2: Weight,
    pub sigma3: Weight,
    pub sigma3_prime: Weight,
}

/// Either length-3 branch of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variety {
    Sigma3,
    Sigma3Prime,
}

impl std::fmt::Display for Variety {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variety::Sigma3 => write!(f, "sigma3"),
            Variety::Sigma3Prime => write!(f, "sigma3'"),
        }
    }
}

/// `sigma0 .. sigma3, sigma3'` obtained by reflecting at `x1`, `u`, then
/// `z1` (resp. `y1`).
pub fn sigma_chain(d: &TDiagram) -> Result<SigmaChain> {
    let (p, q, r) = d.arms();
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::ArmTooShort(format!(
            "sigma chain needs all three arms, got ({p},{q},{r})"
        )));
    }
    let x1 = d.x1_node().unwrap();
    let u = d.u_node();
    let y1 = d.node_index("y1")?;
    let z1 = d.node_index("z1")?;
    let sigma0 = Weight::fundamental(d, x1);
    let sigma1 = reflect(d, &sigma0, x1);
    let sigma2 = reflect(d, &sigma1, u);
    let sigma3 = reflect(d, &sigma2, z1);
    let sigma3_prime = reflect(d, &sigma2, y1);
    Ok(SigmaChain {
        sigma0,
        sigma1,
        sigma2,
        sigma3,
        sigma3_prime,
    })
}

/// The orbit of `omega_{x1}` graded by coset length, with the cover edges
/// discovered by the orbit search.
#[derive(Debug)]
pub struct OrbitPoset {
    diagram: TDiagram,
    elements: Vec<CosetElement>,
    index: HashMap<Weight, usize>,
    max_length: usize,
    complete: bool,
    min_grade: Option<i64>,
    bruhat_memo: Mutex<HashMap<(usize, usize), bool>>,
}

/// Breadth-first orbit search from `omega_{x1}`.
///
/// An edge `w -> s_i w` is added whenever the i-th coefficient of `w`'s
/// weight is positive; lengths grow by one along edges. `max_len = None`
/// asks for the whole orbit and requires finite type.
pub fn orbit_poset(d: &TDiagram, max_len: Option<usize>) -> Result<OrbitPoset> {
    OrbitPoset::build(d, max_len)
}

impl OrbitPoset {
    pub fn build(d: &TDiagram, max_len: Option<usize>) -> Result<Self> {
        let (p, ..) = d.arms();
        if p < 2 {
            return Err(Error::ArmTooShort(
                "orbit poset needs the x1 node (p >= 2)".to_string(),
            ));
        }
        if max_len.is_none() && d.classify() != DiagramClass::Finite {
            return Err(Error::NonFiniteType);
        }
        let x1 = d.x1_node().unwrap();
        let n = d.node_count();
        let start = Weight::fundamental(d, x1);
        let mut elements = vec![CosetElement {
            id: 0,
            weight: start.clone(),
            length: 0,
            reduced_word: Vec::new(),
            covers_from: Vec::new(),
            grade_offset: 0,
        }];
        let mut index: HashMap<Weight, usize> = HashMap::new();
        index.insert(start, 0);
        let mut frontier = vec![0usize];
        let mut level = 0usize;
        let complete;
        loop {
            let mut next: Vec<usize> = Vec::new();
            let mut any_expandable = false;
            for &id in &frontier {
                for i in 0..n {
                    let c = elements[id].weight.0[i];
                    if c <= 0 {
                        continue;
                    }
                    any_expandable = true;
                    if max_len == Some(level) {
                        continue;
                    }
                    let w = reflect(d, &elements[id].weight, i);
                    if let Some(&cid) = index.get(&w) {
                        debug_assert_eq!(elements[cid].length, level + 1);
                        if !elements[cid].covers_from.contains(&id) {
                            elements[cid].covers_from.push(id);
                        }
                    } else {
                        let cid = elements.len();
                        let mut word = vec![i];
                        word.extend_from_slice(&elements[id].reduced_word);
                        let grade_offset =
                            elements[id].grade_offset - if i == x1 { c } else { 0 };
                        index.insert(w.clone(), cid);
                        elements.push(CosetElement {
                            id: cid,
                            weight: w,
                            length: level + 1,
                            reduced_word: word,
                            covers_from: vec![id],
                            grade_offset,
                        });
                        next.push(cid);
                    }
                }
            }
            if next.is_empty() {
                complete = !any_expandable || max_len != Some(level);
                // `next` can only be empty with expandable elements left when
                // the length bound cut the search off.
                break;
            }
            frontier = next;
            level += 1;
        }
        let min_grade = if complete {
            elements.iter().map(|e| e.grade_offset).min()
        } else {
            None
        };
        Ok(OrbitPoset {
            diagram: d.clone(),
            elements,
            index,
            max_length: level,
            complete,
            min_grade,
            bruhat_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn diagram(&self) -> &TDiagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn elements(&self) -> &[CosetElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &CosetElement {
        &self.elements[id]
    }

    pub fn find(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Element count per length, from 0 up to the built bound.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.max_length + 1];
        for e in &self.elements {
            sizes[e.length] += 1;
        }
        sizes
    }

    /// The maximal-length coset (the `p_top` coordinate). Needs the full orbit.
    pub fn top(&self) -> Result<usize> {
        if !self.complete {
            return Err(Error::TruncatedOrbit);
        }
        Ok(self
            .elements
            .iter()
            .max_by_key(|e| e.length)
            .map(|e| e.id)
            .unwrap())
    }

    fn sigma_ids(&self) -> Result<[usize; 5]> {
        let chain = sigma_chain(&self.diagram)?;
        let get = |w: &Weight| {
            self.find(w).ok_or_else(|| {
                Error::InvalidDiagram("sigma chain element outside the built poset".into())
            })
        };
        Ok([
            get(&chain.sigma0)?,
            get(&chain.sigma1)?,
            get(&chain.sigma2)?,
            get(&chain.sigma3)?,
            get(&chain.sigma3_prime)?,
        ])
    }

    /// Id of a length-3 branch element.
    pub fn variety_id(&self, v: Variety) -> Result<usize> {
        let ids = self.sigma_ids()?;
        Ok(match v {
            Variety::Sigma3 => ids[3],
            Variety::Sigma3Prime => ids[4],
        })
    }

    /// Bruhat order on minimal coset representatives, by the recursive
    /// descent criterion with memoization.
    pub fn bruhat_leq(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        if self.elements[a].length >= self.elements[b].length {
            return false;
        }
        if let Some(&v) = self.bruhat_memo.lock().unwrap().get(&(a, b)) {
            return v;
        }
        // Pick a simple descent s of b; then a <= b iff min(a, sa) <= sb.
        let i = self.elements[b]
            .weight
            .0
            .iter()
            .position(|&c| c < 0)
            .expect("non-identity minimal representative has a descent");
        let sb = self
            .find(&reflect(&self.diagram, &self.elements[b].weight, i))
            .expect("descent stays inside the poset");
        let sa = if self.elements[a].weight.0[i] < 0 {
            self.find(&reflect(&self.diagram, &self.elements[a].weight, i))
                .expect("descent stays inside the poset")
        } else {
            a
        };
        let v = self.bruhat_leq(sa, sb);
        self.bruhat_memo.lock().unwrap().insert((a, b), v);
        v
    }

    /// All `tau` with `len(tau) <= max_len` and NOT `w <= tau`, sorted by
    /// length then lexicographic weight.
    pub fn complement_filter(&self, w: usize, max_len: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .elements
            .iter()
            .filter(|e| e.length <= max_len && !self.bruhat_leq(w, e.id))
            .map(|e| e.id)
            .collect();
        out.sort_by(|&a, &b| {
            let ea = &self.elements[a];
            let eb = &self.elements[b];
            (ea.length, &ea.weight).cmp(&(eb.length, &eb.weight))
        });
        out
    }

    /// Simple nodes `alpha != x1` whose root subgroup preserves the opposite
    /// Schubert variety of `w` (those with `w^{-1}(alpha) > 0`), plus the GL
    /// block sizes of the corresponding Levi inside the chain of non-`x1`
    /// nodes, read from the z-arm tip towards the y-arm tip.
    pub fn levi_symmetry(&self, w: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let d = &self.diagram;
        let (p, q, r) = d.arms();
        if p != 2 {
            return Err(Error::InvalidDiagram(
                "Levi block extraction needs p = 2 (non-x1 nodes must form a chain)".into(),
            ));
        }
        let x1 = d.x1_node().unwrap();
        let word = &self.elements[w].reduced_word;
        let n = d.node_count();
        let mut invariant = Vec::new();
        for alpha in 0..n {
            if alpha == x1 {
                continue;
            }
            // w^{-1}(alpha): apply the product-order word front to back.
            let mut beta = RootVector(vec![0i64; n]);
            beta.0[alpha] = 1;
            for &i in word {
                beta = d.reflect_root(&beta, i);
            }
            if beta.is_positive() {
                invariant.push(alpha);
            }
        }
        // Chain order z_{r-1} .. z1, u, y1 .. y_{q-1}; nodes act as merged
        // walls between the GL slots.
        let mut chain = Vec::new();
        for k in (1..r).rev() {
            chain.push(d.node_index(&format!("z{k}"))?);
        }
        chain.push(d.u_node());
        for j in 1..q {
            chain.push(d.node_index(&format!("y{j}"))?);
        }
        let merged: Vec<bool> = chain.iter().map(|c| invariant.contains(c)).collect();
        let mut blocks = Vec::new();
        let mut current = 1usize;
        for m in merged {
            if m {
                current += 1;
            } else {
                blocks.push(current);
                current = 1;
            }
        }
        blocks.push(current);
        Ok((invariant, blocks))
    }

    /// Restriction degree of the Pluecker coordinate `p_tau`: the grade of
    /// `tau . omega_{x1}` above the minimal grade of the orbit. The top
    /// coset gets 0. Needs the full orbit.
    pub fn coordinate_degree(&self, tau: usize) -> Result<i64> {
        let min = self.min_grade.ok_or(Error::TruncatedOrbit)?;
        Ok(self.elements[tau].grade_offset - min)
    }

    /// Degrees of the three Pluecker coordinates common to both ideals
    /// (`sigma0`, `sigma1`, `sigma2`).
    pub fn ci_degrees(&self) -> Result<(i64, i64, i64)> {
        let ids = self.sigma_ids()?;
        Ok((
            self.coordinate_degree(ids[0])?,
            self.coordinate_degree(ids[1])?,
            self.coordinate_degree(ids[2])?,
        ))
    }

    /// Histogram of coordinate degrees over the whole orbit.
    pub fn degree_histogram(&self) -> Result<Vec<usize>> {
        if !self.complete {
            return Err(Error::TruncatedOrbit);
        }
        let max = self
            .elements
            .iter()
            .map(|e| self.coordinate_degree(e.id).unwrap())
            .max()
            .unwrap() as usize;
        let mut hist = vec![0usize; max + 1];
        for e in &self.elements {
            hist[self.coordinate_degree(e.id).unwrap() as usize] += 1;
        }
        Ok(hist)
    }

    /// JSON view of the poset (schema 1): elements and Hasse edges.
    pub fn to_json(&self) -> serde_json::Value {
        let (p, q, r) = self.diagram.arms();
        let elements: Vec<serde_json::Value> = self
            .elements
            .iter()
            .map(|e| {
                serde_json::json!({
                    "id": e.id,
                    "weight": e.weight.0,
                    "length": e.length,
                    "word": e.reduced_word.iter().map(|&i| self.diagram.label(i)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut edges: Vec<[usize; 2]> = Vec::new();
        for e in &self.elements {
            for &from in &e.covers_from {
                edges.push([from, e.id]);
            }
        }
        serde_json::json!({
            "schema": 1,
            "diagram": format!("{p},{q},{r}"),
            "max_length": self.max_length,
            "complete": self.complete,
            "elements": elements,
            "edges": edges,
        })
    }
}
