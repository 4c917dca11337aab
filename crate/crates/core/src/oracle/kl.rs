//! Kazhdan–Lusztig polynomials, the Kazhdan–Lusztig basis, structure
//! constants, the a-function and cells, all straight from the definitions.
//!
//! Conventions: `T_s² = 1 + (v − v⁻¹)T_s`, `C_s = T_s + v⁻¹`, and
//! `C_w = Σ p_{y,w} T_y` with `p_{w,w} = 1` and `p_{y,w} ∈ v⁻¹Z[v⁻¹]`
//! otherwise. `μ(y,w)` is the coefficient of `v⁻¹` in `p_{y,w}`.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::group::FiniteGroup;
use super::poly::{HeckeElement, LaurentPoly};
use crate::system::Generator;

/// `C_s C_w` (or `C_w C_s`) in the Kazhdan–Lusztig basis.
#[derive(Debug, Clone)]
enum Expansion {
    /// `s` is a descent: the product is `(v + v⁻¹)C_w`.
    Descent,
    /// `C_{sw} + Σ μ(z,w) C_z`, listed as `(index, coefficient)`.
    Terms(Vec<(usize, i64)>),
}

/// The left, right and two-sided cells of a finite group, as sorted lists of
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCells {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub two_sided: Vec<Vec<usize>>,
}

/// Kazhdan–Lusztig data for every pair of elements of a finite group.
#[derive(Debug, Clone)]
pub struct KlTable {
    group: FiniteGroup,
    /// Slots per polynomial; slot `k` holds the coefficient of `v^{-k}`.
    slots: usize,
    /// `p_{y,w}` at `(w * n + y) * slots`.
    p: Vec<i64>,
    /// `(z, μ(z,w))` for `z < w` with `μ ≠ 0`, per `w`.
    mu: Vec<Vec<(usize, i64)>>,
    bruhat: Vec<bool>,
    left: Vec<Vec<Expansion>>,
    right: Vec<Vec<Expansion>>,
}

impl KlTable {
    pub fn new(group: FiniteGroup) -> Self {
        let n = group.len();
        let max_len = (0..n).map(|w| group.length(w)).max().unwrap_or(0);
        let slots = max_len + 2;
        let mut p = vec![0i64; n * n * slots];
        let mut mu: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        let mut bruhat = vec![false; n * n];
        p[0] = 1;
        bruhat[0] = true;
        for w in 1..n {
            let s = group.first_left_descent(w).expect("only the identity lacks descents");
            let sw = group.left_mul(s, w);
            for y in 0..n {
                let sy = group.left_mul(s, y);
                bruhat[w * n + y] = if group.length(sy) < group.length(y) {
                    bruhat[sw * n + sy]
                } else {
                    bruhat[sw * n + y]
                };
            }
            let (done, rest) = p.split_at_mut(w * n * slots);
            let row = &mut rest[..n * slots];
            let prev = &done[sw * n * slots..(sw + 1) * n * slots];
            for y in 0..n {
                let sy = group.left_mul(s, y);
                let out = &mut row[y * slots..(y + 1) * slots];
                let from_sy = &prev[sy * slots..(sy + 1) * slots];
                let from_y = &prev[y * slots..(y + 1) * slots];
                for k in 0..slots {
                    out[k] += from_sy[k];
                }
                if group.length(sy) < group.length(y) {
                    // v · p: the exponent of v⁻¹ drops by one
                    debug_assert_eq!(from_y[0], 0);
                    for k in 1..slots {
                        out[k - 1] += from_y[k];
                    }
                } else {
                    for k in 0..slots - 1 {
                        out[k + 1] += from_y[k];
                    }
                }
            }
            for &(z, m) in &mu[sw] {
                if group.is_left_descent(s, z) {
                    let pz = &done[z * n * slots..(z + 1) * n * slots];
                    for (o, &c) in row.iter_mut().zip(pz) {
                        *o -= m * c;
                    }
                }
            }
            mu[w] = (0..w).filter(|&z| row[z * slots + 1] != 0).map(|z| (z, row[z * slots + 1])).collect();
        }

        let expand = |w: usize, s: Generator, on_left: bool| -> Expansion {
            let (moved, descent) = if on_left {
                (group.left_mul(s, w), group.is_left_descent(s, w))
            } else {
                (group.right_mul(w, s), group.is_right_descent(w, s))
            };
            if descent {
                return Expansion::Descent;
            }
            let mut terms = vec![(moved, 1)];
            for &(z, m) in &mu[w] {
                let z_descent = if on_left { group.is_left_descent(s, z) } else { group.is_right_descent(z, s) };
                if z_descent {
                    terms.push((z, m));
                }
            }
            Expansion::Terms(terms)
        };
        let rank = group.system().rank();
        let left = (0..rank).map(|s| (0..n).map(|w| expand(w, s, true)).collect()).collect();
        let right = (0..rank).map(|s| (0..n).map(|w| expand(w, s, false)).collect()).collect();
        Self { group, slots, p, mu, bruhat, left, right }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn n(&self) -> usize {
        self.group.len()
    }

    /// `p_{y,w}`.
    pub fn kl_poly(&self, y: usize, w: usize) -> LaurentPoly {
        let at = (w * self.n() + y) * self.slots;
        self.p[at..at + self.slots]
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(), |acc, (k, &c)| acc + LaurentPoly::monomial(c, -(k as i32)))
    }

    /// `μ(y,w)` for `y < w`, zero otherwise.
    pub fn mu(&self, y: usize, w: usize) -> i64 {
        self.mu[w].iter().find(|&&(z, _)| z == y).map_or(0, |&(_, m)| m)
    }

    /// Bruhat order by the lifting property.
    pub fn bruhat_leq(&self, y: usize, w: usize) -> bool {
        self.bruhat[w * self.n() + y]
    }

    /// `C_w` in the standard basis.
    pub fn kl_basis_element(&self, w: usize) -> HeckeElement {
        let mut h = HeckeElement::zero();
        for y in 0..self.n() {
            h.add(y, self.kl_poly(y, w));
        }
        h
    }

    /// `T_s · h` in the standard basis.
    fn t_left(&self, s: Generator, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        let v_minus = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
        for (w, c) in h.terms() {
            let sw = self.group.left_mul(s, w);
            out.add(sw, c.clone());
            if self.group.length(sw) < self.group.length(w) {
                out.add(w, &v_minus * c);
            }
        }
        out
    }

    /// Product of two elements given in the standard basis.
    pub fn hecke_multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (x, c) in a.terms() {
            let mut h = b.scale(c);
            for &s in self.group.element(x).canonical_word().iter().rev() {
                h = self.t_left(s, &h);
            }
            out = out.plus(&h);
        }
        out
    }

    /// Rewrites an element of the standard basis in the Kazhdan–Lusztig basis.
    pub fn to_kl_basis(&self, h: &HeckeElement) -> HeckeElement {
        let mut rest = h.clone();
        let mut out = HeckeElement::zero();
        // indices are sorted by length, so the last one in the support is maximal
        while let Some((w, c)) = rest.terms().last().map(|(w, c)| (w, c.clone())) {
            rest = rest.plus(&self.kl_basis_element(w).scale(&-c.clone()));
            out.add(w, c);
        }
        out
    }

    fn apply(&self, expansion: &Expansion, w: usize, c: &LaurentPoly, out: &mut HeckeElement) {
        match expansion {
            Expansion::Descent => out.add(w, &LaurentPoly::quantum_two() * c),
            Expansion::Terms(terms) => {
                for &(z, m) in terms {
                    out.add(z, c.scale(m));
                }
            }
        }
    }

    /// `C_s C_w` in the Kazhdan–Lusztig basis.
    pub fn left_kl_product(&self, s: Generator, w: usize) -> HeckeElement {
        let mut out = HeckeElement::zero();
        self.apply(&self.left[s][w], w, &LaurentPoly::one(), &mut out);
        out
    }

    /// `C_w C_s` in the Kazhdan–Lusztig basis.
    pub fn right_kl_product(&self, w: usize, s: Generator) -> HeckeElement {
        let mut out = HeckeElement::zero();
        self.apply(&self.right[s][w], w, &LaurentPoly::one(), &mut out);
        out
    }

    /// `h_{x,y,z}` for all `z`: `C_x C_y` in the Kazhdan–Lusztig basis.
    pub fn structure_constants(&self, x: usize, y: usize) -> HeckeElement {
        let mut buffer = DenseProducts::new(self);
        buffer.fill(self, y);
        buffer.row(x)
    }

    /// `a(z)` for every element: the largest `v`-degree of `h_{x,y,z}`.
    pub fn a_values(&self) -> Vec<usize> {
        let n = self.n();
        let mut a = vec![0usize; n];
        let mut buffer = DenseProducts::new(self);
        for y in 0..n {
            buffer.fill(self, y);
            buffer.raise_degrees(&mut a);
        }
        a
    }

    /// Cells as strongly connected components of the preorders generated by
    /// multiplying with `C_s` on either side.
    pub fn cells(&self) -> OracleCells {
        let n = self.n();
        let rank = self.group.system().rank();
        let edges = |table: &[Vec<Expansion>]| -> Vec<(u32, u32)> {
            let mut out = Vec::new();
            for row in table.iter().take(rank) {
                for (w, e) in row.iter().enumerate() {
                    if let Expansion::Terms(terms) = e {
                        out.extend(terms.iter().map(|&(z, _)| (w as u32, z as u32)));
                    }
                }
            }
            out
        };
        let components = |edges: &[(u32, u32)]| -> Vec<Vec<usize>> {
            let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, edges.len());
            for _ in 0..n {
                graph.add_node(());
            }
            graph.extend_with_edges(edges);
            let mut sccs: Vec<Vec<usize>> = tarjan_scc(&graph)
                .into_iter()
                .map(|c| {
                    let mut c: Vec<usize> = c.into_iter().map(|i| i.index()).collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            sccs.sort();
            sccs
        };
        let left_edges = edges(&self.left);
        let right_edges = edges(&self.right);
        let both: Vec<_> = left_edges.iter().chain(&right_edges).copied().collect();
        OracleCells { left: components(&left_edges), right: components(&right_edges), two_sided: components(&both) }
    }
}

/// `C_x C_y` for one `y` and every `x`, with coefficients stored densely as
/// `v`-exponents in `-max_len..=max_len`.
struct DenseProducts {
    n: usize,
    width: usize,
    offset: usize,
    data: Vec<i64>,
}

impl DenseProducts {
    fn new(table: &KlTable) -> Self {
        let n = table.n();
        let offset = table.slots;
        let width = 2 * offset + 1;
        Self { n, width, offset, data: vec![0; n * n * width] }
    }

    fn fill(&mut self, table: &KlTable, y: usize) {
        let (n, width, offset) = (self.n, self.width, self.offset);
        let stride = n * width;
        self.data.fill(0);
        self.data[y * width + offset] = 1;
        let group = &table.group;
        for x in 1..n {
            let s = group.first_left_descent(x).expect("only the identity lacks descents");
            let sx = group.left_mul(s, x);
            let (done, rest) = self.data.split_at_mut(x * stride);
            let out = &mut rest[..stride];
            let src = &done[sx * stride..(sx + 1) * stride];
            for w in 0..n {
                let c = &src[w * width..(w + 1) * width];
                if c.iter().all(|&k| k == 0) {
                    continue;
                }
                match &table.left[s][w] {
                    Expansion::Descent => {
                        let o = &mut out[w * width..(w + 1) * width];
                        for k in 0..width - 1 {
                            o[k + 1] += c[k];
                            o[k] += c[k + 1];
                        }
                    }
                    Expansion::Terms(terms) => {
                        for &(z, m) in terms {
                            let o = &mut out[z * width..(z + 1) * width];
                            for k in 0..width {
                                o[k] += m * c[k];
                            }
                        }
                    }
                }
            }
            for &(z, m) in &table.mu[sx] {
                if group.is_left_descent(s, z) {
                    let pz = &done[z * stride..(z + 1) * stride];
                    for (o, &c) in out.iter_mut().zip(pz) {
                        *o -= m * c;
                    }
                }
            }
        }
    }

    fn raise_degrees(&self, a: &mut [usize]) {
        for chunk in self.data.chunks_exact(self.width).enumerate() {
            let (i, c) = chunk;
            let z = i % self.n;
            if let Some(top) = c.iter().rposition(|&k| k != 0) {
                a[z] = a[z].max(top.saturating_sub(self.offset));
            }
        }
    }

    fn row(&self, x: usize) -> HeckeElement {
        let mut h = HeckeElement::zero();
        for z in 0..self.n {
            let at = (x * self.n + z) * self.width;
            let c = self.data[at..at + self.width].iter().enumerate().fold(LaurentPoly::zero(), |acc, (k, &c)| {
                acc + LaurentPoly::monomial(c, k as i32 - self.offset as i32)
            });
            h.add(z, c);
        }
        h
    }
}
