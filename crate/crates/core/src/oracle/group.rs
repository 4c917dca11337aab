//! Finite groups as explicit multiplication tables by generators.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Generator};

/// Default cap on the number of elements the oracle will enumerate.
pub const DEFAULT_BOUND: usize = 500;

/// Every element of a finite Coxeter group, sorted by length and canonical
/// word, with left and right multiplication by generators tabulated.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    sys: Arc<CoxeterSystem>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    lengths: Vec<usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    /// Index of `s·w`.
    pub fn left_mul(&self, s: Generator, w: usize) -> usize {
        self.left[s][w]
    }

    /// Index of `w·s`.
    pub fn right_mul(&self, w: usize, s: Generator) -> usize {
        self.right[s][w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn is_left_descent(&self, s: Generator, w: usize) -> bool {
        self.lengths[self.left[s][w]] < self.lengths[w]
    }

    pub fn is_right_descent(&self, w: usize, s: Generator) -> bool {
        self.lengths[self.right[s][w]] < self.lengths[w]
    }

    /// Smallest left descent, `None` for the identity.
    pub fn first_left_descent(&self, w: usize) -> Option<Generator> {
        (0..self.sys.rank()).find(|&s| self.is_left_descent(s, w))
    }
}

/// Lists a finite group breadth-first from the identity.
///
/// Fails with [`Error::GroupInfinite`] when the family is known to be
/// infinite and with [`Error::GroupTooLarge`] once more than `bound`
/// elements turn up.
pub fn enumerate_group(sys: &Arc<CoxeterSystem>, bound: usize) -> Result<FiniteGroup> {
    if sys.type_tag().is_finite() == Some(false) {
        return Err(Error::GroupInfinite);
    }
    let rank = sys.rank();
    let mut elements = vec![GroupElement::identity(sys)?];
    let mut index = HashMap::from([(elements[0].clone(), 0)]);
    let mut lengths = vec![0];
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let mut next: HashSet<GroupElement> = HashSet::new();
        for &w in &frontier {
            for s in 0..rank {
                let sw = elements[w].left_mul(s);
                if !index.contains_key(&sw) {
                    next.insert(sw);
                }
            }
        }
        if elements.len() + next.len() > bound {
            return Err(Error::GroupTooLarge(bound));
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort_by_cached_key(GroupElement::sort_key);
        let start = elements.len();
        for w in next {
            index.insert(w.clone(), elements.len());
            lengths.push(w.length());
            elements.push(w);
        }
        frontier = (start..elements.len()).collect();
    }
    let lookup = |w: &GroupElement| index[w];
    let left: Vec<Vec<usize>> = (0..rank).map(|s| elements.iter().map(|w| lookup(&w.left_mul(s))).collect()).collect();
    let right: Vec<Vec<usize>> = (0..rank).map(|s| elements.iter().map(|w| lookup(&w.right_mul(s))).collect()).collect();
    let inverse = elements.iter().map(|w| lookup(&w.inverse())).collect();
    Ok(FiniteGroup { sys: Arc::clone(sys), elements, index, lengths, left, right, inverse })
}
