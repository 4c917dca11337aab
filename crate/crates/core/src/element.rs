//! Group elements as exact matrices of the geometric representation.
//!
//! An element carries the matrix of `w` and of `w⁻¹`, both acting on the
//! basis of simple roots. Column `s` of `w` is `w(α_s)`, so right descents
//! are read off `w` and left descents off `w⁻¹`. Elements compare and hash
//! by matrix, which is faithful; the canonical word is the printable key.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingScalar};
use crate::system::{CoxeterSystem, Generator, Word};

#[derive(Clone)]
pub struct GroupElement {
    sys: Arc<CoxeterSystem>,
    ring: Ring,
    mat: Vec<RingScalar>,
    inv: Vec<RingScalar>,
    canonical: OnceLock<Word>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && *self.sys == *other.sys
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({})", self.to_word_string())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word_string())
    }
}

impl GroupElement {
    pub fn identity(sys: &Arc<CoxeterSystem>) -> Result<Self> {
        let ring = sys.ring().ok_or(Error::UnsupportedRing)?;
        let n = sys.rank();
        let mut mat = vec![RingScalar::ZERO; n * n];
        for i in 0..n {
            mat[i * n + i] = RingScalar::ONE;
        }
        Ok(Self { sys: Arc::clone(sys), ring, inv: mat.clone(), mat, canonical: OnceLock::new() })
    }

    /// The simple reflection `σ_s`.
    pub fn reflection(sys: &Arc<CoxeterSystem>, s: Generator) -> Result<Self> {
        Ok(Self::identity(sys)?.right_mul(s))
    }

    /// The product of the letters of `word`, left to right.
    pub fn from_word(sys: &Arc<CoxeterSystem>, word: &[Generator]) -> Result<Self> {
        let mut w = Self::identity(sys)?;
        for &s in word {
            if s >= sys.rank() {
                return Err(Error::UnknownLabel(s.to_string()));
            }
            w.right_mul_in_place(s);
        }
        Ok(w)
    }

    /// Parses comma-joined labels (see [`CoxeterSystem::parse_word`]).
    pub fn parse(sys: &Arc<CoxeterSystem>, text: &str) -> Result<Self> {
        Self::from_word(sys, &sys.parse_word(text)?)
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    fn n(&self) -> usize {
        self.sys.rank()
    }

    /// Entry `(row, col)` of the matrix of `w`.
    pub fn entry(&self, row: usize, col: usize) -> RingScalar {
        self.mat[row * self.n() + col]
    }

    pub fn is_identity(&self) -> bool {
        self.mat == self.inv && self.canonical_word().is_empty()
    }

    /// `M ← σ_s M`: only row `s` changes.
    fn reflect_rows(sys: &CoxeterSystem, ring: Ring, m: &mut [RingScalar], s: Generator) {
        let n = sys.rank();
        for col in 0..n {
            let mut acc = -m[s * n + col];
            for t in 0..n {
                if t != s {
                    let c = sys.cartan(s, t);
                    if !c.is_zero() {
                        acc = acc + ring.mul(c, m[t * n + col]);
                    }
                }
            }
            m[s * n + col] = acc;
        }
    }

    /// `M ← M σ_s`: column `s` is negated and added into its neighbours.
    fn reflect_cols(sys: &CoxeterSystem, ring: Ring, m: &mut [RingScalar], s: Generator) {
        let n = sys.rank();
        for row in 0..n {
            let old = m[row * n + s];
            for t in 0..n {
                if t != s {
                    let c = sys.cartan(s, t);
                    if !c.is_zero() {
                        m[row * n + t] = m[row * n + t] + ring.mul(c, old);
                    }
                }
            }
            m[row * n + s] = -old;
        }
    }

    fn right_mul_in_place(&mut self, s: Generator) {
        Self::reflect_cols(&self.sys, self.ring, &mut self.mat, s);
        Self::reflect_rows(&self.sys, self.ring, &mut self.inv, s);
        self.canonical = OnceLock::new();
    }

    fn left_mul_in_place(&mut self, s: Generator) {
        Self::reflect_rows(&self.sys, self.ring, &mut self.mat, s);
        Self::reflect_cols(&self.sys, self.ring, &mut self.inv, s);
        self.canonical = OnceLock::new();
    }

    /// `w·s`
    pub fn right_mul(&self, s: Generator) -> Self {
        let mut w = self.clone();
        w.right_mul_in_place(s);
        w
    }

    /// `s·w`
    pub fn left_mul(&self, s: Generator) -> Self {
        let mut w = self.clone();
        w.left_mul_in_place(s);
        w
    }

    /// `w·u` for a word `u`.
    pub fn right_mul_word(&self, word: &[Generator]) -> Self {
        let mut w = self.clone();
        for &s in word {
            w.right_mul_in_place(s);
        }
        w
    }

    /// `u·w` for a word `u`.
    pub fn left_mul_word(&self, word: &[Generator]) -> Self {
        let mut w = self.clone();
        for &s in word.iter().rev() {
            w.left_mul_in_place(s);
        }
        w
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.sys, &other.sys) || *self.sys == *other.sys {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n();
        let ring = self.ring;
        let product = |x: &[RingScalar], y: &[RingScalar]| {
            let mut out = vec![RingScalar::ZERO; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = x[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let b = y[k * n + j];
                        if !b.is_zero() {
                            out[i * n + j] = out[i * n + j] + ring.mul(a, b);
                        }
                    }
                }
            }
            out
        };
        Ok(Self {
            sys: Arc::clone(&self.sys),
            ring,
            mat: product(&self.mat, &other.mat),
            inv: product(&other.inv, &self.inv),
            canonical: OnceLock::new(),
        })
    }

    /// `w⁻¹`, read off the carried inverse matrix.
    pub fn inverse(&self) -> Self {
        Self {
            sys: Arc::clone(&self.sys),
            ring: self.ring,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            canonical: OnceLock::new(),
        }
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self == other)
    }

    /// Sign of the root in column `col` of `m`: `true` for negative.
    fn column_is_negative(&self, m: &[RingScalar], col: usize) -> bool {
        let n = self.n();
        let mut sign = 0;
        for row in 0..n {
            let s = self.ring.sign(m[row * n + col]);
            if s != 0 {
                debug_assert!(sign == 0 || sign == s, "root with mixed signs");
                sign = s;
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
        sign < 0
    }

    /// `s` with `l(ws) < l(w)`.
    pub fn is_right_descent(&self, s: Generator) -> bool {
        self.column_is_negative(&self.mat, s)
    }

    /// `s` with `l(sw) < l(w)`.
    pub fn is_left_descent(&self, s: Generator) -> bool {
        self.column_is_negative(&self.inv, s)
    }

    pub fn left_descents(&self) -> Vec<Generator> {
        (0..self.n()).filter(|&s| self.is_left_descent(s)).collect()
    }

    pub fn right_descents(&self) -> Vec<Generator> {
        (0..self.n()).filter(|&s| self.is_right_descent(s)).collect()
    }

    /// The reduced word obtained by repeatedly stripping the smallest left
    /// descent. Deterministic, so it serves as the key of the element.
    pub fn canonical_word(&self) -> &Word {
        self.canonical.get_or_init(|| {
            let mut w = self.clone();
            let mut word = Vec::new();
            loop {
                match (0..self.n()).find(|&s| w.is_left_descent(s)) {
                    Some(s) => {
                        word.push(s);
                        w.left_mul_in_place(s);
                    }
                    None => break word,
                }
            }
        })
    }

    pub fn length(&self) -> usize {
        self.canonical_word().len()
    }

    /// Comma-joined labels of the canonical word.
    pub fn to_word_string(&self) -> String {
        self.sys.format_word(self.canonical_word())
    }

    /// Sort key: length first, then canonical word.
    pub fn sort_key(&self) -> (usize, Word) {
        (self.length(), self.canonical_word().clone())
    }

    /// `x ≤_R w`: `w` has a reduced expression starting with one of `x`.
    pub fn weak_leq_right(&self, w: &Self) -> Result<bool> {
        self.check_same(w)?;
        let quotient = self.inverse().multiply(w)?;
        Ok(self.length() + quotient.length() == w.length())
    }

    /// `x ≤_L w`: `w` has a reduced expression ending with one of `x`.
    pub fn weak_leq_left(&self, w: &Self) -> Result<bool> {
        self.inverse().weak_leq_right(&w.inverse())
    }
}

/// Whether `word` is a reduced expression.
pub fn is_reduced(sys: &Arc<CoxeterSystem>, word: &[Generator]) -> Result<bool> {
    Ok(GroupElement::from_word(sys, word)?.length() == word.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(d: &str) -> Arc<CoxeterSystem> {
        Arc::new(CoxeterSystem::from_descriptor(d).unwrap())
    }

    fn el(s: &Arc<CoxeterSystem>, w: &str) -> GroupElement {
        GroupElement::parse(s, w).unwrap()
    }

    #[test]
    fn a2_reflection_action() {
        let a2 = sys("A:2");
        let s1 = GroupElement::reflection(&a2, 0).unwrap();
        // σ_1(α_1) = -α_1, σ_1(α_2) = α_2 + α_1
        assert_eq!(s1.entry(0, 0), RingScalar::new(-1, 0));
        assert_eq!(s1.entry(1, 0), RingScalar::ZERO);
        assert_eq!(s1.entry(0, 1), RingScalar::ONE);
        assert_eq!(s1.entry(1, 1), RingScalar::ONE);
        assert!(s1.multiply(&s1).unwrap().is_identity());
    }

    #[test]
    fn canonical_words() {
        let b4 = sys("B:4");
        assert_eq!(el(&b4, "31").to_word_string(), "1,3");
        assert_eq!(el(&b4, "2121").to_word_string(), "1,2,1,2");
        assert_eq!(el(&b4, "12121212").length(), 0);
        assert_eq!(el(&b4, "121212").length(), 6 - 4);
        let h3 = sys("H:3");
        assert_eq!(el(&h3, "1212121212").length(), 0);
        assert_eq!(el(&h3, "12121").length(), 5);
    }

    #[test]
    fn descents() {
        let b4 = sys("B:4");
        let w = el(&b4, "1324");
        assert_eq!(w.left_descents(), vec![0, 2]);
        assert_eq!(w.right_descents(), vec![1, 3]);
    }

    #[test]
    fn weak_order_examples() {
        let b4 = sys("B:4");
        assert!(el(&b4, "13").weak_leq_right(&el(&b4, "132413")).unwrap());
        assert!(el(&b4, "1324").weak_leq_right(&el(&b4, "1324")).unwrap());
        assert!(!el(&b4, "24").weak_leq_right(&el(&b4, "1324")).unwrap());
        assert!(el(&b4, "24").weak_leq_left(&el(&b4, "1324")).unwrap());
    }

    #[test]
    fn infinite_bond_has_no_relation() {
        let i2 = sys("I2:inf");
        assert_eq!(el(&i2, "1212121212121212").length(), 16);
    }

    #[test]
    fn mismatched_systems() {
        let (a, b) = (sys("A:3"), sys("B:3"));
        assert_eq!(el(&a, "1").multiply(&el(&b, "1")), Err(Error::SystemMismatch));
    }

    #[test]
    fn unsupported_bond() {
        assert_eq!(GroupElement::identity(&sys("I2:7")).unwrap_err(), Error::UnsupportedRing);
    }

    /// Independent length check: brute-force search for the shortest word.
    fn brute_length(sys: &Arc<CoxeterSystem>, target: &GroupElement) -> usize {
        let mut frontier = vec![GroupElement::identity(sys).unwrap()];
        let mut seen = std::collections::HashSet::new();
        seen.insert(frontier[0].clone());
        for len in 0.. {
            if frontier.contains(target) {
                return len;
            }
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..sys.rank() {
                    let ws = w.right_mul(s);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        unreachable!()
    }

    fn any_word(rank: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0..rank, 0..max)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_word_is_a_reduced_word_for_the_element(word in any_word(4, 12), d in 0usize..3) {
            let s = sys(["A:4", "B:4", "H:4"][d]);
            let w = GroupElement::from_word(&s, &word).unwrap();
            let canon = w.canonical_word().clone();
            prop_assert_eq!(&GroupElement::from_word(&s, &canon).unwrap(), &w);
            prop_assert!(canon.len() <= word.len());
            prop_assert_eq!(canon.len() % 2, word.len() % 2);
        }

        #[test]
        fn length_matches_brute_force(word in any_word(3, 9), d in 0usize..3) {
            let s = sys(["A:3", "B:3", "H:3"][d]);
            let w = GroupElement::from_word(&s, &word).unwrap();
            prop_assert_eq!(w.length(), brute_length(&s, &w));
        }

        #[test]
        fn inverse_is_reversed_word(word in any_word(5, 14)) {
            let s = sys("Ctilde:4");
            let w = GroupElement::from_word(&s, &word).unwrap();
            let mut rev = word.clone();
            rev.reverse();
            prop_assert_eq!(w.inverse(), GroupElement::from_word(&s, &rev).unwrap());
            prop_assert!(w.multiply(&w.inverse()).unwrap().is_identity());
        }

        #[test]
        fn descents_change_length(word in any_word(5, 14), gen in 0usize..5) {
            let s = sys("Ctilde:4");
            let w = GroupElement::from_word(&s, &word).unwrap();
            let l = w.length();
            let expect_left = if w.is_left_descent(gen) { l - 1 } else { l + 1 };
            let expect_right = if w.is_right_descent(gen) { l - 1 } else { l + 1 };
            prop_assert_eq!(w.left_mul(gen).length(), expect_left);
            prop_assert_eq!(w.right_mul(gen).length(), expect_right);
        }

        #[test]
        fn multiply_is_associative(a in any_word(4, 6), b in any_word(4, 6), c in any_word(4, 6)) {
            let s = sys("F:4");
            let (x, y, z) = (
                GroupElement::from_word(&s, &a).unwrap(),
                GroupElement::from_word(&s, &b).unwrap(),
                GroupElement::from_word(&s, &c).unwrap(),
            );
            prop_assert_eq!(x.multiply(&y).unwrap().multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
        }
    }
}
