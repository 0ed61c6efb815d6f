//! The degree-4 invariant of trivectors on a six-dimensional space, its
//! partial-derivative generator sets, and computer-algebra script emission.
//!
//! Coordinates are the 20 Pluecker-style variables `x_ijk`, one per
//! three-element subset of `{1,...,6}` in lexicographic order.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::MultiVector;
use crate::weyl::Variety;

pub const NUM_VARS: usize = 20;

/// Bitmasks of the three-element subsets of `{1,...,6}` (bit `i` is basis
/// vector `e_{i+1}`), in lexicographic order of the subsets.
pub fn triple_masks() -> Vec<u8> {
    let mut masks = Vec::with_capacity(NUM_VARS);
    for i in 0..6u8 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                masks.push((1 << i) | (1 << j) | (1 << k));
            }
        }
    }
    masks
}

/// Variable name `x_ijk` for the subset behind variable `var`.
pub fn var_name(var: usize) -> String {
    let mask = triple_masks()[var];
    let digits: String = (0..6)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| char::from(b'1' + b))
        .collect();
    format!("x{digits}")
}

fn var_of_mask(mask: u8) -> usize {
    triple_masks().iter().position(|&m| m == mask).unwrap()
}

/// Multivariate integer polynomial in the 20 coordinates, sparse form.
/// Monomial keys are sorted variable indices with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparsePoly {
    terms: BTreeMap<Vec<u8>, i64>,
}

impl SparsePoly {
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        SparsePoly { terms }
    }

    pub fn var(v: usize) -> Self {
        assert!(v < NUM_VARS);
        let mut terms = BTreeMap::new();
        terms.insert(vec![v as u8], 1);
        SparsePoly { terms }
    }

    fn insert(&mut self, mono: Vec<u8>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn coefficient(&self, mono: &[u8]) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    pub fn partial(&self, v: usize) -> SparsePoly {
        let v = v as u8;
        let mut out = SparsePoly::constant(0);
        for (mono, &c) in &self.terms {
            let mult = mono.iter().filter(|&&w| w == v).count() as i64;
            if mult == 0 {
                continue;
            }
            let mut reduced = mono.clone();
            let pos = reduced.iter().position(|&w| w == v).unwrap();
            reduced.remove(pos);
            out.insert(reduced, c * mult);
        }
        out
    }

    pub fn eval(&self, point: &[i64]) -> i128 {
        assert_eq!(point.len(), NUM_VARS);
        let mut total: i128 = 0;
        for (mono, &c) in &self.terms {
            let mut val = c as i128;
            for &v in mono {
                val *= point[v as usize] as i128;
            }
            total += val;
        }
        total
    }

    /// Gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> i64 {
        self.terms
            .values()
            .fold(0i64, |g, &c| num::integer::gcd(g, c.abs()))
    }

    pub fn div_scalar(&self, s: i64) -> SparsePoly {
        assert!(s != 0);
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                assert_eq!(c % s, 0);
                (m.clone(), c / s)
            })
            .collect();
        SparsePoly { terms }
    }

    /// Rendering shared by both supported computer-algebra systems.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (mono, &c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let mut idx = 0;
            while idx < mono.len() {
                let v = mono[idx];
                let run = mono[idx..].iter().take_while(|&&w| w == v).count();
                if run == 1 {
                    factors.push(var_name(v as usize));
                } else {
                    factors.push(format!("{}^{}", var_name(v as usize), run));
                }
                idx += run;
            }
            if mag != 1 || factors.is_empty() {
                factors.insert(0, mag.to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Zero for SparsePoly {
    fn zero() -> Self {
        SparsePoly::constant(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        for (mono, c) in rhs.terms {
            self.insert(mono, c);
        }
        self
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        SparsePoly { terms }
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::constant(0);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                let mut mono = ma.clone();
                mono.extend_from_slice(mb);
                mono.sort_unstable();
                out.insert(mono, ca * cb);
            }
        }
        out
    }
}

/// The generic trivector `sum_S x_S e_S`.
fn generic_trivector() -> MultiVector<SparsePoly> {
    let mut w = MultiVector::zero();
    for (v, mask) in triple_masks().into_iter().enumerate() {
        w.add_term(mask, SparsePoly::var(v));
    }
    w
}

/// The 6x6 matrix of quadrics `A(w)` with `(i_v w) ^ w = sum_j A_jv e_1^..^e_6
/// / e_j` under the identification of five-vectors with vectors.
fn quadric_matrix(w: &MultiVector<SparsePoly>) -> Vec<Vec<SparsePoly>> {
    let mut a = vec![vec![SparsePoly::zero(); 6]; 6];
    for v in 0..6u8 {
        let five = w.contract(v).wedge(w);
        for j in 0..6u8 {
            let mask = 0b111111 & !(1 << j);
            let coeff = five.coefficient(mask);
            // e_{[6] minus j}  <->  (-1)^(j-1) e_j  (1-based j)
            a[j as usize][v as usize] = if j % 2 == 0 { coeff } else { -coeff };
        }
    }
    a
}

/// The degree-4 invariant, normalized to content 1 with the coefficient of
/// `x123^2 * x456^2` positive.
pub fn delta_polynomial() -> SparsePoly {
    let a = quadric_matrix(&generic_trivector());
    let mut trace = SparsePoly::zero();
    for j in 0..6 {
        for v in 0..6 {
            trace = trace + a[j][v].clone() * a[v][j].clone();
        }
    }
    let content = trace.content();
    let mut delta = trace.div_scalar(content);
    let x123 = var_of_mask(0b000111) as u8;
    let x456 = var_of_mask(0b111000) as u8;
    if delta.coefficient(&[x123, x123, x456, x456]) < 0 {
        delta = -delta;
    }
    delta
}

/// Defining equations of one of the two components of the singular locus:
/// the invariant together with its partials along one side of the split.
///
/// For `sigma3` the split keeps `F = <e1..e4>` and differentiates along
/// `Lambda^3 F`; for `sigma3'` it keeps `F' = <e1,e2>` and differentiates
/// along the variables meeting `F'` twice.
pub fn generator_set(variety: Variety) -> Vec<SparsePoly> {
    let delta = delta_polynomial();
    let masks = triple_masks();
    let selected: Vec<usize> = match variety {
        Variety::Sigma3 => (0..NUM_VARS)
            .filter(|&v| masks[v] & !0b001111 == 0)
            .collect(),
        Variety::Sigma3Prime => (0..NUM_VARS)
            .filter(|&v| (masks[v] & 0b000011).count_ones() == 2)
            .collect(),
    };
    let mut gens = vec![delta.clone()];
    gens.extend(selected.into_iter().map(|v| delta.partial(v)));
    gens
}

/// Supported computer-algebra dialects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dialect {
    Macaulay2,
    Singular,
}

impl std::str::FromStr for Dialect {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "macaulay2" | "m2" => Ok(Dialect::Macaulay2),
            "singular" => Ok(Dialect::Singular),
            other => Err(Error::UnsupportedDialect(other.into())),
        }
    }
}

/// Emits a standalone script that builds the generator ideal and prints its
/// codimension, degree, and Betti table. Output is deterministic.
pub fn emit_cas_script(dialect: Dialect, variety: Variety) -> String {
    let gens = generator_set(variety);
    let vars: Vec<String> = (0..NUM_VARS).map(var_name).collect();
    let mut out = String::new();
    match dialect {
        Dialect::Macaulay2 => {
            out.push_str(&format!("-- generators of the {variety} component\n"));
            out.push_str(&format!("R = QQ[{}];\n", vars.join(",")));
            for (i, g) in gens.iter().enumerate() {
                out.push_str(&format!("g{} = {};\n", i, g.render()));
            }
            let names: Vec<String> = (0..gens.len()).map(|i| format!("g{i}")).collect();
            out.push_str(&format!("I = ideal({});\n", names.join(",")));
            out.push_str("print codim I;\n");
            out.push_str("print degree I;\n");
            out.push_str("print betti res I;\n");
        }
        Dialect::Singular => {
            out.push_str(&format!("// generators of the {variety} component\n"));
            out.push_str(&format!("ring R = 0, ({}), dp;\n", vars.join(",")));
            for (i, g) in gens.iter().enumerate() {
                out.push_str(&format!("poly g{} = {};\n", i, g.render()));
            }
            let names: Vec<String> = (0..gens.len()).map(|i| format!("g{i}")).collect();
            out.push_str(&format!("ideal I = {};\n", names.join(",")));
            out.push_str("ideal J = std(I);\n");
            out.push_str("nvars(R) - dim(J);\n");
            out.push_str("mult(J);\n");
            out.push_str("resolution re = mres(I, 0);\n");
            out.push_str("print(betti(re), \"betti\");\n");
            out.push_str("exit;\n");
        }
    }
    out
}

/// Applies an invertible 6x6 integer matrix to a coordinate vector of a
/// trivector: `g . e_i = sum_j g[j][i] e_j` extended multiplicatively.
pub fn transform_coordinates(g: &[[i64; 6]; 6], coords: &[i64]) -> Vec<i64> {
    assert_eq!(coords.len(), NUM_VARS);
    let masks = triple_masks();
    let columns: Vec<Vec<u8>> = masks
        .iter()
        .map(|&m| (0..6u8).filter(|b| m & (1 << b) != 0).collect())
        .collect();
    let mut out = vec![0i64; NUM_VARS];
    for (t, rows) in columns.iter().enumerate() {
        for (s, cols) in columns.iter().enumerate() {
            if coords[s] == 0 {
                continue;
            }
            // 3x3 minor with rows `rows`, columns `cols`
            let m = |i: usize, j: usize| g[rows[i] as usize][cols[j] as usize];
            let det3 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
            out[t] += det3 * coords[s];
        }
    }
    out
}

/// Determinant of a 6x6 integer matrix by cofactor expansion.
pub fn det6(g: &[[i64; 6]; 6]) -> i64 {
    fn rec(g: &[[i64; 6]; 6], rows: &[usize], cols: &[usize]) -> i64 {
        if rows.len() == 1 {
            return g[rows[0]][cols[0]];
        }
        let mut total = 0;
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            if g[rows[0]][c] == 0 {
                continue;
            }
            let sub_cols: Vec<usize> =
                cols.iter().copied().filter(|&x| x != c).collect();
            let minor = rec(g, sub_rows, &sub_cols);
            if k % 2 == 0 {
                total += g[rows[0]][c] * minor;
            } else {
                total -= g[rows[0]][c] * minor;
            }
        }
        total
    }
    let all = [0, 1, 2, 3, 4, 5];
    rec(g, &all, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn variable_layout() {
        assert_eq!(triple_masks().len(), NUM_VARS);
        assert_eq!(var_name(0), "x123");
        assert_eq!(var_name(1), "x124");
        assert_eq!(var_name(NUM_VARS - 1), "x456");
    }

    #[test]
    fn delta_is_quartic_with_unit_content() {
        let delta = delta_polynomial();
        assert_eq!(delta.degree(), 4);
        assert_eq!(delta.content(), 1);
        assert!(delta.terms.keys().all(|m| m.len() == 4));
    }

    #[test]
    fn delta_vanishes_on_decomposables() {
        let delta = delta_polynomial();
        let mut point = vec![0i64; NUM_VARS];
        point[0] = 5; // 5 e123
        assert_eq!(delta.eval(&point), 0);
        // e1 ^ e2 ^ (e3 + e4) = e123 + e124
        let mut point = vec![0i64; NUM_VARS];
        point[0] = 1;
        point[1] = 1;
        assert_eq!(delta.eval(&point), 0);
    }

    #[test]
    fn delta_positive_on_split_form() {
        let delta = delta_polynomial();
        let mut point = vec![0i64; NUM_VARS];
        point[0] = 1; // e123
        point[NUM_VARS - 1] = 1; // e456
        assert!(delta.eval(&point) > 0);
    }

    #[test]
    fn euler_identity() {
        let delta = delta_polynomial();
        let mut euler = SparsePoly::zero();
        for v in 0..NUM_VARS {
            euler = euler + SparsePoly::var(v) * delta.partial(v);
        }
        let four_delta = SparsePoly::constant(4) * delta;
        assert_eq!(euler, four_delta);
    }

    #[test]
    fn determinant_squared_equivariance() {
        let delta = delta_polynomial();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 8 {
            let mut g = [[0i64; 6]; 6];
            for row in &mut g {
                for entry in row {
                    *entry = rng.gen_range(-2..=2);
                }
            }
            let d = det6(&g);
            if d == 0 {
                continue;
            }
            let coords: Vec<i64> = (0..NUM_VARS).map(|_| rng.gen_range(-3..=3)).collect();
            let moved = transform_coordinates(&g, &coords);
            let lhs = delta.eval(&moved);
            let rhs = (d as i128) * (d as i128) * delta.eval(&coords);
            assert_eq!(lhs, rhs, "g={g:?} coords={coords:?}");
            checked += 1;
        }
    }

    #[test]
    fn identity_transform_fixes_coordinates() {
        let mut g = [[0i64; 6]; 6];
        for i in 0..6 {
            g[i][i] = 1;
        }
        assert_eq!(det6(&g), 1);
        let coords: Vec<i64> = (0..NUM_VARS as i64).collect();
        assert_eq!(transform_coordinates(&g, &coords), coords);
    }

    #[test]
    fn generator_sets_have_expected_degrees() {
        for variety in [Variety::Sigma3, Variety::Sigma3Prime] {
            let gens = generator_set(variety);
            assert_eq!(gens.len(), 5, "{variety}");
            assert_eq!(gens[0].degree(), 4);
            for g in &gens[1..] {
                assert_eq!(g.degree(), 3);
                assert!(!g.is_zero());
            }
        }
    }

    #[test]
    fn partial_derivative_rule() {
        // d/dx0 (x0^2 x1) = 2 x0 x1
        let p = SparsePoly::var(0) * SparsePoly::var(0) * SparsePoly::var(1);
        let d = p.partial(0);
        assert_eq!(d.coefficient(&[0, 1]), 2);
        assert_eq!(d.num_terms(), 1);
    }

    #[test]
    fn script_emission_is_deterministic() {
        let a = emit_cas_script(Dialect::Macaulay2, Variety::Sigma3);
        let b = emit_cas_script(Dialect::Macaulay2, Variety::Sigma3);
        assert_eq!(a, b);
        assert!(a.starts_with("-- generators of the sigma3 component\n"));
        assert!(a.contains("R = QQ[x123,"));
        let s = emit_cas_script(Dialect::Singular, Variety::Sigma3Prime);
        assert!(s.contains("ring R = 0, (x123,"));
        assert!(s.ends_with("exit;\n"));
    }
}
