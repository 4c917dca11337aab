//! Stubs and the Kazhdan–Lusztig cells of a-value 2.
//!
//! In an a(2)-finite system every right cell of a-value 2 is the closure
//! `R_x` of a left stub `x` under right upper star operations, and `W_2`
//! is the disjoint union of these closures. [`A2Cells`] enumerates the
//! stubs, their closures, and everything derived from them: 0-cells,
//! slide classes, two-sided cells and a(2)-triples.

pub mod closed_form;
pub mod report;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::heap::{cartier_foata, heap_of, is_fc};
use crate::star::{left_lower_star, left_upper_star, right_lower_star, right_upper_star, NoncommutingPair};
use crate::system::{CoxeterSystem, Generator};

pub use closed_form::{closed_form_stubs, expected_tables, representative_zero_cells, ExpectedTables};

/// Sorts by length, then canonical word, and drops duplicates.
pub fn sort_elements(elements: &mut Vec<GroupElement>) {
    elements.sort_by_cached_key(GroupElement::sort_key);
    elements.dedup();
}

/// No right lower star operation applies to `w`.
pub fn is_left_stub(w: &GroupElement) -> Result<bool> {
    if !is_fc(w) {
        return Err(Error::NotFC);
    }
    Ok(NoncommutingPair::all(w.system()).into_iter().all(|p| right_lower_star(w, p).is_none()))
}

/// No left lower star operation applies to `w`.
pub fn is_right_stub(w: &GroupElement) -> Result<bool> {
    is_left_stub(&w.inverse())
}

/// Left stub test from the first two Cartier–Foata layers: every generator
/// of the second layer fails to commute with at least two generators of the
/// first.
pub fn is_left_stub_by_layers(w: &GroupElement) -> Result<bool> {
    let cf = cartier_foata(w)?;
    let sys = w.system();
    let Some(second) = cf.layers.get(1) else { return Ok(true) };
    Ok(second.iter().all(|&t| cf.layers[0].iter().filter(|&&s| sys.adjacent(s, t)).count() >= 2))
}

fn is_a2_stub(w: &GroupElement) -> bool {
    is_fc(w) && heap_of(w).width() == 2 && is_left_stub(w).unwrap_or(false)
}

fn require_a2_finite(sys: &CoxeterSystem) -> Result<bool> {
    let c = sys.classify()?;
    if !c.a2_finite {
        return Err(Error::NotA2Finite);
    }
    Ok(c.nontrivially_a2_finite)
}

/// Left stubs of a-value 2, found by closing the short stubs under left
/// upper star operations that stay inside the set of such stubs.
///
/// Sorted by length and canonical word. Empty for a(2)-finite systems
/// without elements of a-value 2.
pub fn enumerate_stubs(sys: &Arc<CoxeterSystem>) -> Result<Vec<GroupElement>> {
    if !require_a2_finite(sys)? {
        return Ok(Vec::new());
    }
    let pairs = NoncommutingPair::all(sys);
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    for (s, t) in sys.commuting_pairs() {
        let x = GroupElement::from_word(sys, &[s, t])?;
        seen.insert(x.clone());
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        for &p in &pairs {
            if let Some(y) = left_upper_star(&x, p) {
                if !seen.contains(&y) && is_a2_stub(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
    }
    let mut stubs: Vec<_> = seen.into_iter().collect();
    sort_elements(&mut stubs);
    Ok(stubs)
}

/// Closure of `x` under every defined right upper star operation, sorted.
pub fn right_cell_closure(x: &GroupElement) -> Vec<GroupElement> {
    let pairs = NoncommutingPair::all(x.system());
    let mut seen = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(w) = queue.pop_front() {
        for &p in &pairs {
            if let Some(y) = right_upper_star(&w, p) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    let mut cell: Vec<_> = seen.into_iter().collect();
    sort_elements(&mut cell);
    cell
}

fn descent_product(gens: &[Generator]) -> Vec<Generator> {
    gens.to_vec()
}

/// Glued product `w * w2 = w · (s s') · w2` where `{s, s'}` is both the right
/// descent set of `w` and the left descent set of `w2`.
pub fn glued_product(w: &GroupElement, w2: &GroupElement) -> Result<GroupElement> {
    let shared = w.right_descents();
    if shared.len() != 2 || shared != w2.left_descents() {
        return Err(Error::NotDescentCompatible);
    }
    w.right_mul_word(&descent_product(&shared)).multiply(w2)
}

/// The short stub `su` reached from `x = st` along the edge `{t, u}`, computed
/// as a right upper star operation followed by a left lower one.
pub fn slide(x: &GroupElement, edge: NoncommutingPair) -> Result<GroupElement> {
    let sys = x.system();
    let word = x.canonical_word();
    if word.len() != 2 || !sys.commute(word[0], word[1]) {
        return Err(Error::NotShortStub);
    }
    let (a, b) = edge.generators();
    let (t, u) = match (word.contains(&a), word.contains(&b)) {
        (true, false) => (a, b),
        (false, true) => (b, a),
        _ => return Err(Error::NotAnEdge),
    };
    let s = if word[0] == t { word[1] } else { word[0] };
    if !sys.commute(s, u) {
        return Err(Error::ResultNotStub);
    }
    let up = right_upper_star(x, edge).ok_or(Error::ResultNotStub)?;
    let result = left_lower_star(&up, edge).ok_or(Error::ResultNotStub)?;
    debug_assert_eq!(result, GroupElement::from_word(sys, &[s, u])?);
    Ok(result)
}

/// `w = left * core * right` with stubs `left` and `right⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Triple {
    pub left: GroupElement,
    pub core: GroupElement,
    pub right: GroupElement,
}

impl A2Triple {
    /// The glued product `(left * core) * right`.
    pub fn product(&self) -> Result<GroupElement> {
        glued_product(&glued_product(&self.left, &self.core)?, &self.right)
    }
}

/// A class of stubs under (simple) slide equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StubClass {
    /// Shortest member, ties broken by canonical word.
    pub representative: GroupElement,
    /// Indices into [`A2Cells::stubs`], ascending.
    pub members: Vec<usize>,
}

/// A two-sided cell of a-value 2 together with the slide class it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedCell {
    pub class: StubClass,
    /// Sorted by length, then canonical word.
    pub members: Vec<GroupElement>,
}

/// The full a-value 2 picture of one system.
#[derive(Debug, Clone)]
pub struct A2Cells {
    sys: Arc<CoxeterSystem>,
    stubs: Vec<GroupElement>,
    right_cells: Vec<Vec<GroupElement>>,
    cell_of: HashMap<GroupElement, usize>,
}

impl A2Cells {
    pub fn new(sys: Arc<CoxeterSystem>) -> Result<Self> {
        let stubs = enumerate_stubs(&sys)?;
        let right_cells: Vec<_> = stubs.iter().map(right_cell_closure).collect();
        let mut cell_of = HashMap::new();
        for (i, cell) in right_cells.iter().enumerate() {
            for w in cell {
                let previous = cell_of.insert(w.clone(), i);
                debug_assert!(previous.is_none(), "right cells overlap at {w}");
            }
        }
        Ok(Self { sys, stubs, right_cells, cell_of })
    }

    pub fn from_descriptor(descriptor: &str) -> Result<Self> {
        Self::new(Arc::new(CoxeterSystem::from_descriptor(descriptor)?))
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    /// Left stubs of a-value 2, sorted.
    pub fn stubs(&self) -> &[GroupElement] {
        &self.stubs
    }

    /// `R_x` for the `i`-th stub.
    pub fn right_cell(&self, i: usize) -> &[GroupElement] {
        &self.right_cells[i]
    }

    pub fn right_cells(&self) -> &[Vec<GroupElement>] {
        &self.right_cells
    }

    /// Size of `W_2`.
    pub fn len(&self) -> usize {
        self.cell_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stubs.is_empty()
    }

    /// Every element of `W_2`, sorted.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut all: Vec<_> = self.cell_of.keys().cloned().collect();
        sort_elements(&mut all);
        all
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.cell_of.contains_key(w)
    }

    /// Index of the right cell containing `w`.
    pub fn cell_index(&self, w: &GroupElement) -> Option<usize> {
        self.cell_of.get(w).copied()
    }

    pub fn stub_index(&self, x: &GroupElement) -> Option<usize> {
        self.stubs.iter().position(|s| s == x)
    }

    /// Looks a stub up by its word.
    pub fn find_stub(&self, word: &str) -> Result<usize> {
        let unknown = || Error::UnknownStubWord(word.to_string());
        let w = GroupElement::parse(&self.sys, word).map_err(|_| unknown())?;
        self.stub_index(&w).ok_or_else(unknown)
    }

    /// `w = x · z` with `x` the unique stub below `w` in the right weak order.
    pub fn stub_decomposition(&self, w: &GroupElement) -> Result<(GroupElement, GroupElement)> {
        if !self.contains(w) {
            return Err(Error::NotAValue2);
        }
        for x in &self.stubs {
            if x.weak_leq_right(w)? {
                return Ok((x.clone(), x.inverse().multiply(w)?));
            }
        }
        unreachable!("every element of W_2 lies above its stub")
    }

    /// Inverse of the glued product of a(2)-triples.
    pub fn a2_triple_of(&self, w: &GroupElement) -> Result<A2Triple> {
        let x = &self.stubs[self.cell_index(w).ok_or(Error::NotAValue2)?];
        let rest = x.inverse().multiply(w)?.left_mul_word(&x.right_descents());
        let y = &self.stubs[self.cell_index(&rest.inverse()).ok_or(Error::NotAValue2)?];
        let core = rest.multiply(y)?.right_mul_word(&y.right_descents());
        Ok(A2Triple { left: x.clone(), core, right: y.inverse() })
    }

    /// `I(x, y) = R_x ∩ R_y⁻¹` for stub indices, sorted.
    pub fn zero_cell(&self, x: usize, y: usize) -> Vec<GroupElement> {
        self.right_cells[x].iter().filter(|w| self.cell_index(&w.inverse()) == Some(y)).cloned().collect()
    }

    /// `N(x, y)` for every pair of stubs.
    pub fn zero_cell_sizes(&self) -> Vec<Vec<usize>> {
        let k = self.stubs.len();
        let mut sizes = vec![vec![0; k]; k];
        for (x, cell) in self.right_cells.iter().enumerate() {
            for w in cell {
                sizes[x][self.cell_of[&w.inverse()]] += 1;
            }
        }
        sizes
    }

    /// `x * x⁻¹`, the distinguished involution of `R_x`.
    pub fn distinguished_involution(&self, x: usize) -> GroupElement {
        let x = &self.stubs[x];
        glued_product(x, &x.inverse()).expect("R(x) = L(x⁻¹) has two elements")
    }

    fn first_layer_index(&self, i: usize) -> usize {
        let layer = GroupElement::from_word(&self.sys, &self.stubs[i].right_descents()).expect("same system");
        self.stub_index(&layer).expect("first layer of a stub is a short stub")
    }

    /// Classes of stubs whose first layers are joined by slides, or by simple
    /// slides only. Sorted by representative.
    pub fn slide_classes(&self, simple_only: bool) -> Vec<StubClass> {
        let k = self.stubs.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while parent[r] != r {
                r = parent[r];
            }
            parent[i] = r;
            r
        }
        let edges = NoncommutingPair::all(&self.sys);
        for i in 0..k {
            if self.stubs[i].length() != 2 {
                continue;
            }
            for &edge in &edges {
                let (t, u) = edge.generators();
                if simple_only && self.sys.bond(t, u) != Some(3) {
                    continue;
                }
                if let Ok(target) = slide(&self.stubs[i], edge) {
                    let j = self.stub_index(&target).expect("slides land on stubs");
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..k {
            let root = find(&mut parent, self.first_layer_index(i));
            groups.entry(root).or_default().push(i);
        }
        // stubs are sorted, so the first member is the shortest
        let mut classes: Vec<StubClass> = groups
            .into_values()
            .map(|members| StubClass { representative: self.stubs[members[0]].clone(), members })
            .collect();
        classes.sort_by_key(|c| c.members[0]);
        classes
    }

    /// Two-sided cells of a-value 2: unions of right cells over slide classes.
    pub fn two_sided_cells(&self) -> Vec<TwoSidedCell> {
        self.slide_classes(false)
            .into_iter()
            .map(|class| {
                let mut members: Vec<_> =
                    class.members.iter().flat_map(|&i| self.right_cells[i].iter().cloned()).collect();
                sort_elements(&mut members);
                TwoSidedCell { class, members }
            })
            .collect()
    }

    /// Moves the 0-cell `I(from, y)` to `I(to, y)`.
    ///
    /// Stubs with the same first layer are related by left star operations
    /// and the move is left multiplication by `to · from⁻¹`. When the first
    /// layers differ by one slide along `{t, u}`, the move passes through the
    /// first layers and applies every left star operation along `{t, u}`.
    pub fn transport_zero_cell(
        &self,
        cell: &[GroupElement],
        from: &GroupElement,
        to: &GroupElement,
    ) -> Result<Vec<GroupElement>> {
        let shift = |set: &[GroupElement], a: &GroupElement, b: &GroupElement| -> Result<Vec<GroupElement>> {
            let factor = b.multiply(&a.inverse())?;
            set.iter().map(|z| factor.multiply(z)).collect()
        };
        let (rf, rt) = (from.right_descents(), to.right_descents());
        let mut out = if rf == rt {
            shift(cell, from, to)?
        } else {
            let shared: Vec<_> = rf.iter().copied().filter(|g| rt.contains(g)).collect();
            if rf.len() != 2 || rt.len() != 2 || shared.len() != 1 {
                return Err(Error::NotRelated);
            }
            let t = *rf.iter().find(|&&g| g != shared[0]).unwrap();
            let u = *rt.iter().find(|&&g| g != shared[0]).unwrap();
            let edge = NoncommutingPair::new(&self.sys, t, u).map_err(|_| Error::NotRelated)?;
            let (first_from, first_to) =
                (GroupElement::from_word(&self.sys, &rf)?, GroupElement::from_word(&self.sys, &rt)?);
            let at_first = shift(cell, from, &first_from)?;
            let moved: Vec<_> = at_first
                .iter()
                .flat_map(|z| [left_upper_star(z, edge), left_lower_star(z, edge)])
                .flatten()
                .collect();
            shift(&moved, &first_to, to)?
        };
        sort_elements(&mut out);
        Ok(out)
    }
}
