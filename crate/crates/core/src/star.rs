//! Generalized star operations with respect to a pair of noncommuting
//! generators.
//!
//! Relative to `I = {s, t}`, write `w = w^I · w_I` with `w_I` in the
//! dihedral subgroup `⟨s, t⟩` and no right descent of `w^I` in `I`. When
//! `w_I` is neither `1` nor the longest element it is an alternating string
//! of length `k` with `0 < k < m`, and the right upper (lower) star
//! operation lengthens (shortens) that string by one letter where possible.
//! Left operations are the mirror image through inversion.

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::heap::heap_of;
use crate::system::{CoxeterSystem, Generator, Word};

/// Two generators `s < t` with `m(s,t) ≥ 3` (possibly infinite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncommutingPair {
    s: Generator,
    t: Generator,
}

impl NoncommutingPair {
    pub fn new(sys: &CoxeterSystem, a: Generator, b: Generator) -> Result<Self> {
        if a >= sys.rank() || b >= sys.rank() || !sys.adjacent(a, b) {
            return Err(Error::NotAnEdge);
        }
        Ok(Self { s: a.min(b), t: a.max(b) })
    }

    /// Every edge of the diagram.
    pub fn all(sys: &CoxeterSystem) -> Vec<Self> {
        sys.edges().into_iter().map(|(s, t)| Self { s, t }).collect()
    }

    pub fn generators(self) -> (Generator, Generator) {
        (self.s, self.t)
    }

    pub fn contains(self, g: Generator) -> bool {
        g == self.s || g == self.t
    }

    /// The other generator of the pair.
    pub fn other(self, g: Generator) -> Generator {
        if g == self.s {
            self.t
        } else {
            self.s
        }
    }
}

/// `w = outer · inner` with `inner` an alternating word in the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub outer: GroupElement,
    /// Reduced alternating word for the dihedral part.
    pub inner: Word,
}

impl CosetDecomposition {
    pub fn inner_element(&self) -> GroupElement {
        GroupElement::from_word(self.outer.system(), &self.inner).expect("same system as outer")
    }
}

/// Peels right descents in `pair` off `w` until none is left.
pub fn coset_decompose_left(w: &GroupElement, pair: NoncommutingPair) -> CosetDecomposition {
    let mut outer = w.clone();
    let mut inner = Vec::new();
    while let Some(g) = [pair.s, pair.t].into_iter().find(|&g| outer.is_right_descent(g)) {
        outer = outer.right_mul(g);
        inner.push(g);
    }
    inner.reverse();
    CosetDecomposition { outer, inner }
}

/// Length of the dihedral string and its last letter, when `w_I` is neither
/// trivial nor longest.
fn string_position(w: &GroupElement, pair: NoncommutingPair) -> Option<(usize, Generator, Option<usize>)> {
    let dec = coset_decompose_left(w, pair);
    let k = dec.inner.len();
    let m = w.system().bond(pair.s, pair.t).map(|m| m as usize);
    if k == 0 || Some(k) == m {
        return None;
    }
    Some((k, *dec.inner.last().unwrap(), m))
}

pub fn right_upper_star(w: &GroupElement, pair: NoncommutingPair) -> Option<GroupElement> {
    let (k, last, m) = string_position(w, pair)?;
    (k >= 1 && m.is_none_or(|m| k + 2 <= m)).then(|| w.right_mul(pair.other(last)))
}

pub fn right_lower_star(w: &GroupElement, pair: NoncommutingPair) -> Option<GroupElement> {
    let (k, last, m) = string_position(w, pair)?;
    (k >= 2 && m.is_none_or(|m| k < m)).then(|| w.right_mul(last))
}

pub fn left_upper_star(w: &GroupElement, pair: NoncommutingPair) -> Option<GroupElement> {
    right_upper_star(&w.inverse(), pair).map(|x| x.inverse())
}

pub fn left_lower_star(w: &GroupElement, pair: NoncommutingPair) -> Option<GroupElement> {
    right_lower_star(&w.inverse(), pair).map(|x| x.inverse())
}

fn require_simple(w: &GroupElement, pair: NoncommutingPair) -> Result<()> {
    match w.system().bond(pair.s, pair.t) {
        Some(3) => Ok(()),
        _ => Err(Error::BondNotThree),
    }
}

/// For a bond of 3 at most one of the right upper and lower operations is
/// defined; this returns it.
pub fn simple_right_star(w: &GroupElement, pair: NoncommutingPair) -> Result<Option<GroupElement>> {
    require_simple(w, pair)?;
    Ok(right_upper_star(w, pair).or_else(|| right_lower_star(w, pair)))
}

pub fn simple_left_star(w: &GroupElement, pair: NoncommutingPair) -> Result<Option<GroupElement>> {
    require_simple(w, pair)?;
    Ok(left_upper_star(w, pair).or_else(|| left_lower_star(w, pair)))
}

/// Reads off the heap of an FC element whether a right lower star operation
/// with respect to `{s, t}` removes the right descent `s`: some maximal
/// position labeled `s` must be the only cover of a position labeled `t`.
pub fn heap_admits_right_lower_star(w: &GroupElement, s: Generator, t: Generator) -> bool {
    let heap = heap_of(w);
    let covers = heap.covers();
    heap.maximal().into_iter().filter(|&i| heap.label(i) == s).any(|i| {
        covers.iter().filter(|&&(_, up)| up == i).any(|&(j, _)| {
            heap.label(j) == t && covers.iter().filter(|&&(low, _)| low == j).count() == 1
        })
    })
}
