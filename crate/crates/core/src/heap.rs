//! Heaps of reduced words and the fully commutative (FC) machinery built on
//! them: FC tests, Cartier–Foata layers, width and rendering.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::element::{is_reduced, GroupElement};
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, Generator, Word};

/// The heap of a word: positions ordered by the closure of
/// "earlier and not commuting".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    labels: Vec<Generator>,
    /// `reach[i][j]`: position `i` lies weakly below position `j`.
    reach: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    levels: Vec<usize>,
}

impl Heap {
    pub fn of_word(sys: &CoxeterSystem, word: &[Generator]) -> Self {
        let q = word.len();
        let mut reach = vec![vec![false; q]; q];
        let mut levels = vec![0; q];
        for j in 0..q {
            reach[j][j] = true;
            for i in (0..j).rev() {
                if word[i] == word[j] || sys.adjacent(word[i], word[j]) {
                    levels[j] = levels[j].max(levels[i] + 1);
                    for row in reach.iter_mut().take(i + 1) {
                        if row[i] {
                            row[j] = true;
                        }
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for j in 0..q {
            for i in 0..j {
                if reach[i][j] && !(i + 1..j).any(|k| reach[i][k] && reach[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        Self { labels: word.to_vec(), reach, covers, levels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> Generator {
        self.labels[i]
    }

    pub fn labels(&self) -> &[Generator] {
        &self.labels
    }

    /// Weak order of positions.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach[i][j]
    }

    /// Covering pairs `(lower, upper)`, sorted by upper then lower.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut c = self.covers.clone();
        c.sort_by_key(|&(i, j)| (j, i));
        c
    }

    /// Height of each position in the lattice embedding: one above the
    /// highest earlier non-commuting position.
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| (0..self.len()).all(|i| i == j || !self.reach[i][j])).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| i == j || !self.reach[i][j])).collect()
    }

    /// Largest antichain, via Dilworth's theorem: the number of positions
    /// minus a maximum matching in the strict comparability graph.
    pub fn width(&self) -> usize {
        let q = self.len();
        let mut matched_to: Vec<Option<usize>> = vec![None; q];
        fn augment(h: &Heap, i: usize, seen: &mut [bool], matched_to: &mut [Option<usize>]) -> bool {
            for j in 0..h.len() {
                if i != j && h.reach[i][j] && !seen[j] {
                    seen[j] = true;
                    if matched_to[j].is_none_or(|k| augment(h, k, seen, matched_to)) {
                        matched_to[j] = Some(i);
                        return true;
                    }
                }
            }
            false
        }
        let matching = (0..q).filter(|&i| augment(self, i, &mut vec![false; q], &mut matched_to)).count();
        q - matching
    }

    /// The heap criterion for full commutativity of a reduced word: no
    /// covering between equal labels and no convex alternating chain whose
    /// length equals the bond of its two labels.
    pub fn satisfies_fc_criterion(&self, sys: &CoxeterSystem) -> bool {
        if self.covers.iter().any(|&(i, j)| self.labels[i] == self.labels[j]) {
            return false;
        }
        let q = self.len();
        for i in 0..q {
            for j in i + 1..q {
                if !self.reach[i][j] {
                    continue;
                }
                let interval: Vec<usize> = (i..=j).filter(|&k| self.reach[i][k] && self.reach[k][j]).collect();
                let (s, t) = (self.labels[i], self.labels[interval[1]]);
                if s == t {
                    continue;
                }
                let Some(m) = sys.bond(s, t) else { continue };
                let alternating = interval
                    .iter()
                    .enumerate()
                    .all(|(pos, &k)| self.labels[k] == if pos % 2 == 0 { s } else { t });
                if m >= 3 && interval.len() == m as usize && alternating {
                    return false;
                }
            }
        }
        true
    }

    /// DOT rendering; vertices are labeled by generator and ranked by level.
    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("digraph heap {\n  rankdir=BT;\n  node [shape=circle];\n");
        for i in 0..self.len() {
            let _ = writeln!(out, "  p{i} [label=\"{}\"];", sys.label(self.labels[i]));
        }
        let top = self.levels.iter().copied().max().map_or(0, |m| m + 1);
        for level in 0..top {
            let members: Vec<String> =
                (0..self.len()).filter(|&i| self.levels[i] == level).map(|i| format!("p{i};")).collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  p{i} -> p{j};");
        }
        out.push_str("}\n");
        out
    }

    /// TikZ rendering on the lattice: column by generator, row by level.
    pub fn to_tikz(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("\\begin{tikzpicture}\n");
        for i in 0..self.len() {
            let _ = writeln!(
                out,
                "  \\node (p{i}) at ({},{}) {{${}$}};",
                self.labels[i],
                self.levels[i],
                sys.label(self.labels[i])
            );
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  \\draw (p{i}) -- (p{j});");
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}

/// Heap of the canonical word of `w`.
pub fn heap_of(w: &GroupElement) -> Heap {
    Heap::of_word(w.system(), w.canonical_word())
}

/// Full commutativity of a reduced word, by the heap criterion.
pub fn is_fc_reduced_word(sys: &Arc<CoxeterSystem>, word: &[Generator]) -> Result<bool> {
    if !is_reduced(sys, word)? {
        return Err(Error::NotReduced);
    }
    Ok(Heap::of_word(sys, word).satisfies_fc_criterion(sys))
}

pub fn is_fc(w: &GroupElement) -> bool {
    heap_of(w).satisfies_fc_criterion(w.system())
}

/// Full commutativity by the word criterion: no word in the commutation
/// class of a reduced word contains a braid `sts…` of length `m(s,t)`.
/// Exponential; meant for cross-checking small elements.
pub fn is_fc_by_commutation_class(sys: &CoxeterSystem, reduced: &[Generator]) -> bool {
    let has_braid = |w: &Word| {
        (0..w.len()).any(|i| {
            (0..w.len()).any(|j| {
                let (s, t) = (w[i], w[j]);
                match sys.bond(s, t) {
                    Some(m) if s != t && m >= 3 && i + m as usize <= w.len() => {
                        (0..m as usize).all(|k| w[i + k] == if k % 2 == 0 { s } else { t })
                    }
                    _ => false,
                }
            })
        })
    };
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::from([reduced.to_vec()]);
    seen.insert(reduced.to_vec());
    while let Some(w) = queue.pop_front() {
        if has_braid(&w) {
            return false;
        }
        for i in 0..w.len().saturating_sub(1) {
            if sys.commute(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    true
}

/// Cartier–Foata normal form: `w = w_k ⋯ w_2 w_1` where `w_1` is the product
/// of the right descents of `w`, `w_2` of those of `w w_1`, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfForm {
    /// `layers[0]` is `w_1`; each layer is sorted.
    pub layers: Vec<Vec<Generator>>,
}

impl CfForm {
    /// Word reading the layers from the last to the first.
    pub fn word(&self) -> Word {
        self.layers.iter().rev().flatten().copied().collect()
    }

    pub fn first_layer(&self) -> &[Generator] {
        self.layers.first().map_or(&[], Vec::as_slice)
    }
}

pub fn cartier_foata(w: &GroupElement) -> Result<CfForm> {
    if !is_fc(w) {
        return Err(Error::NotFC);
    }
    let mut cur = w.clone();
    let mut layers = Vec::new();
    loop {
        let layer = cur.right_descents();
        if layer.is_empty() {
            break;
        }
        cur = cur.right_mul_word(&layer);
        layers.push(layer);
    }
    Ok(CfForm { layers })
}

/// Lower bound information on the a-value of an FC element, read off its
/// heap width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AClass {
    Zero,
    One,
    Two,
    More,
}

/// For FC elements: the a-value is 0 for the identity, 1 for width one, and
/// in an a(2)-finite system 2 exactly for width two; width three or more
/// forces an a-value above 2.
pub fn fc_a_classify(w: &GroupElement) -> Result<AClass> {
    let heap = heap_of(w);
    if !heap.satisfies_fc_criterion(w.system()) {
        return Err(Error::NotFC);
    }
    Ok(match heap.width() {
        0 => AClass::Zero,
        1 => AClass::One,
        2 => {
            if !w.system().classify()?.nontrivially_a2_finite {
                return Err(Error::NotA2Finite);
            }
            AClass::Two
        }
        _ => AClass::More,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(d: &str) -> Arc<CoxeterSystem> {
        Arc::new(CoxeterSystem::from_descriptor(d).unwrap())
    }

    /// The four-generator path system with a heap drawn on the lattice.
    fn lattice_system() -> Arc<CoxeterSystem> {
        let json = r#"{"labels":["a","b","c","d"],
            "matrix":[[1,4,2,2],[4,1,3,2],[2,3,1,3],[2,2,3,1]]}"#;
        Arc::new(CoxeterSystem::from_json(json).unwrap())
    }

    fn heap(s: &Arc<CoxeterSystem>, w: &str) -> Heap {
        Heap::of_word(s, &s.parse_word(w).unwrap())
    }

    fn el(s: &Arc<CoxeterSystem>, w: &str) -> GroupElement {
        GroupElement::parse(s, w).unwrap()
    }

    #[test]
    fn lattice_heap_covers() {
        let s = lattice_system();
        let h = heap(&s, "abcadb");
        assert_eq!(h.covers(), vec![(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 5)]);
        assert_eq!(h.levels(), [0, 1, 2, 2, 3, 3]);
        assert!(is_fc_reduced_word(&s, &s.parse_word("abcadb").unwrap()).unwrap());
    }

    #[test]
    fn commuting_letters_form_an_antichain() {
        let a5 = sys("A:5");
        let h = heap(&a5, "135");
        assert!(h.covers().is_empty());
        assert_eq!(h.width(), 3);
    }

    #[test]
    fn extremes_of_1532() {
        let a5 = sys("A:5");
        let h = heap(&a5, "1532");
        let labels = |v: Vec<usize>| {
            let mut l: Vec<_> = v.into_iter().map(|i| h.label(i)).collect();
            l.sort();
            l
        };
        assert_eq!(labels(h.minimal()), vec![0, 2, 4]);
        assert_eq!(labels(h.maximal()), vec![1, 4]);
        let cf = cartier_foata(&el(&a5, "1532")).unwrap();
        assert_eq!(cf.layers, vec![vec![1, 4], vec![0, 2]]);
    }

    #[test]
    fn fc_examples() {
        let a4 = sys("A:4");
        assert!(!is_fc(&el(&a4, "1241")));
        let a2 = sys("A:2");
        assert!(!is_fc_reduced_word(&a2, &[0, 1, 0]).unwrap());
        assert_eq!(is_fc_reduced_word(&a2, &[0, 0]), Err(Error::NotReduced));
        let b4 = sys("B:4");
        assert!(!is_fc(&el(&b4, "1212")));
        assert!(is_fc(&el(&b4, "121")));
    }

    #[test]
    fn cf_forms() {
        let b4 = sys("B:4");
        assert_eq!(cartier_foata(&el(&b4, "213")).unwrap().layers, vec![vec![0, 2], vec![1]]);
        assert!(cartier_foata(&el(&b4, "")).unwrap().layers.is_empty());
        assert_eq!(cartier_foata(&el(&b4, "1212")), Err(Error::NotFC));
    }

    #[test]
    fn widths_and_a_classes() {
        let c4 = sys("Ctilde:4");
        let w = el(&c4, "2413524");
        assert_eq!(heap_of(&w).width(), 3);
        assert_eq!(fc_a_classify(&w).unwrap(), AClass::More);
        assert_eq!(fc_a_classify(&el(&c4, "")).unwrap(), AClass::Zero);
        assert_eq!(fc_a_classify(&el(&c4, "13")).unwrap(), AClass::Two);
        assert_eq!(fc_a_classify(&el(&c4, "123")).unwrap(), AClass::One);
        let bad = sys("Ctilde:2");
        assert_eq!(fc_a_classify(&el(&bad, "13")), Err(Error::NotA2Finite));
    }

    #[test]
    fn dot_is_deterministic() {
        let s = lattice_system();
        let dot = heap(&s, "abcadb").to_dot(&s);
        assert_eq!(dot, heap(&s, "abcadb").to_dot(&s));
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("{ rank=same; p2; p3; }"));
        assert_eq!(heap(&s, "a").to_dot(&s).matches("label=").count(), 1);
        assert!(heap(&s, "ab").to_tikz(&s).contains("\\draw (p0) -- (p1);"));
    }

    /// Largest antichain by exhaustive search.
    fn brute_width(h: &Heap) -> usize {
        let q = h.len();
        (0u32..1 << q)
            .filter(|mask| {
                (0..q).all(|i| {
                    (0..q).all(|j| i == j || mask & (1 << i) == 0 || mask & (1 << j) == 0 || !h.leq(i, j))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn width_matches_exhaustive_search(word in proptest::collection::vec(0usize..5, 0..12)) {
            let s = sys("A:5");
            let h = Heap::of_word(&s, &word);
            prop_assert_eq!(h.width(), brute_width(&h));
        }

        #[test]
        fn heap_and_word_criteria_agree(word in proptest::collection::vec(0usize..4, 0..9), d in 0usize..3) {
            let s = sys(["A:4", "B:4", "H:4"][d]);
            let w = GroupElement::from_word(&s, &word).unwrap();
            let canon = w.canonical_word().clone();
            prop_assert_eq!(is_fc(&w), is_fc_by_commutation_class(&s, &canon));
        }

        #[test]
        fn cf_layers_rebuild_the_element(word in proptest::collection::vec(0usize..6, 0..10)) {
            let s = sys("E:2,2");
            let w = GroupElement::from_word(&s, &word).unwrap();
            if let Ok(cf) = cartier_foata(&w) {
                prop_assert_eq!(GroupElement::from_word(&s, &cf.word()).unwrap(), w.clone());
                let descents = w.right_descents();
                prop_assert_eq!(cf.first_layer(), descents.as_slice());
                prop_assert_eq!(cf.word().len(), w.length());
                // each layer commutes internally
                for layer in &cf.layers {
                    for (i, &a) in layer.iter().enumerate() {
                        for &b in &layer[i + 1..] {
                            prop_assert!(s.commute(a, b));
                        }
                    }
                }
            }
        }
    }
}
