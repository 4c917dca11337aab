//! Closed-form descriptions for the built-in families: the explicit stub
//! lists, the class and cell size tables, and representative 0-cells.
//!
//! Every count here is a formula in the rank, so the tables can be checked
//! against enumeration at any rank without stored data.

use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, TypeTag, Word};

fn beta(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Builds words from integer labels, with `v` written as `None`.
struct Labels<'a> {
    sys: &'a CoxeterSystem,
}

impl Labels<'_> {
    fn word(&self, letters: &[Option<i64>]) -> Word {
        letters
            .iter()
            .map(|l| {
                let label = l.map_or_else(|| "v".to_string(), |i| i.to_string());
                self.sys.generator(&label).expect("closed-form labels exist")
            })
            .collect()
    }

    fn nums(&self, letters: &[i64]) -> Word {
        self.word(&letters.iter().map(|&i| Some(i)).collect::<Vec<_>>())
    }
}

fn descending(from: i64, to: i64) -> Vec<i64> {
    (to..=from).rev().collect()
}

fn path_stubs(l: &Labels, n: i64) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            out.push(l.nums(&[i, j]));
        }
    }
    for i in 2..n {
        out.push(l.nums(&[i, i - 1, i + 1]));
    }
    out
}

fn closed_form_words(sys: &CoxeterSystem) -> Result<Vec<Word>> {
    let l = Labels { sys };
    let tag = sys.type_tag();
    let n = tag.rank().ok_or(Error::NotBuiltinType)? as i64;
    let mut out;
    match tag {
        TypeTag::A(_) => out = path_stubs(&l, n),
        TypeTag::B(_) => {
            out = path_stubs(&l, n);
            out.push(l.nums(&[1, 2, 1, 3]));
        }
        TypeTag::CTilde(_) => {
            out = path_stubs(&l, n);
            out.push(l.nums(&[1, 2, 1, 3]));
            out.push(l.nums(&[n, n - 1, n - 2, n]));
        }
        TypeTag::F(_) => {
            out = path_stubs(&l, n);
            out.push(l.nums(&[1, 2, 3, 2, 4]));
            out.push(l.nums(&[2, 3, 2, 4]));
            for i in 3..=n {
                let mut w = descending(i, 1);
                w.push(3);
                out.push(l.nums(&w));
            }
        }
        TypeTag::H(_) => {
            out = path_stubs(&l, n);
            out.push(l.nums(&[1, 2, 1, 3]));
            for i in 2..=n {
                let mut w = descending(i, 1);
                w.extend([2, 1, 3]);
                out.push(l.nums(&w));
            }
        }
        TypeTag::E(q, r) => {
            let (q, r) = (q as i64, r as i64);
            out = Vec::new();
            for (s, t) in sys.commuting_pairs() {
                out.push(vec![s, t]);
            }
            for i in -q + 1..r {
                out.push(l.nums(&[i, i - 1, i + 1]));
            }
            out.push(l.word(&[Some(0), Some(-1), None]));
            out.push(l.word(&[Some(0), Some(1), None]));
            for s in 1..=r {
                let mut w: Vec<_> = descending(s, -1).into_iter().map(Some).collect();
                w.push(None);
                out.push(l.word(&w));
            }
            for s in -q..=-1 {
                let mut w: Vec<_> = (s..=1).map(Some).collect();
                w.push(None);
                out.push(l.word(&w));
            }
            out.push(l.word(&[None, Some(0), Some(-1), Some(1)]));
        }
        _ => return Err(Error::NotBuiltinType),
    }
    Ok(out)
}

/// The explicit stub list of a nontrivially a(2)-finite built-in type, in
/// listing order.
pub fn closed_form_stubs(sys: &Arc<CoxeterSystem>) -> Result<Vec<GroupElement>> {
    if !sys.classify()?.nontrivially_a2_finite {
        return Err(Error::NotA2Finite);
    }
    closed_form_words(sys)?.iter().map(|w| GroupElement::from_word(sys, w)).collect()
}

/// A class given by one member and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedClass {
    pub member: Word,
    pub size: usize,
}

/// Closed-form counts for one system. Class-indexed data follow the order of
/// `simple_classes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedTables {
    pub stub_count: usize,
    pub simple_classes: Vec<ExpectedClass>,
    pub slide_classes: Vec<ExpectedClass>,
    /// Size of `I(x, y)` for `x`, `y` in the given simple classes.
    pub zero_cell_sizes: Vec<Vec<usize>>,
    /// Right cell size for a stub in each simple class.
    pub right_cell_sizes: Vec<usize>,
    pub two_sided_sizes: Vec<usize>,
}

impl ExpectedTables {
    /// `|W_2|`.
    pub fn total(&self) -> usize {
        self.two_sided_sizes.iter().sum()
    }
}

fn symmetric(upper: &[&[usize]]) -> Vec<Vec<usize>> {
    let d = upper.len();
    let mut m = vec![vec![0; d]; d];
    for (i, row) in upper.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            m[i][i + k] = v;
            m[i + k][i] = v;
        }
    }
    m
}

/// Closed-form tables for a nontrivially a(2)-finite built-in type.
/// Stub count, simple classes, `N_ij`, `N_i` and two-sided sizes.
type Columns = (usize, Vec<ExpectedClass>, Vec<Vec<usize>>, Vec<usize>, Vec<usize>);

pub fn expected_tables(sys: &CoxeterSystem) -> Result<ExpectedTables> {
    if !sys.classify()?.nontrivially_a2_finite {
        return Err(Error::NotA2Finite);
    }
    let l = Labels { sys };
    let tag = sys.type_tag();
    let n = tag.rank().ok_or(Error::NotBuiltinType)?;
    let ni = n as i64;
    let class = |member: Word, size: usize| ExpectedClass { member, size };
    let b = beta;
    let (stub_count, simple, zero, right, two): Columns =
        match tag {
            TypeTag::A(_) => {
                let k = b(n) - 1;
                (k, vec![class(l.nums(&[1, 3]), k)], symmetric(&[&[1]]), vec![k], vec![k * k])
            }
            TypeTag::B(3) => (3, vec![class(l.nums(&[1, 3]), 3)], symmetric(&[&[1]]), vec![3], vec![9]),
            TypeTag::B(_) => {
                let total = (n.pow(4) + 7 * n * n - 4 * n.pow(3)) / 2;
                (
                    b(n),
                    vec![class(l.nums(&[1, 3]), n), class(l.nums(&[2, 4]), b(n - 1) - 1)],
                    symmetric(&[&[2, 1], &[2]]),
                    vec![b(n + 1), n * n - 2 * n],
                    vec![total],
                )
            }
            TypeTag::CTilde(_) => {
                let total = n.pow(4) + 20 * n * n + 10 - 6 * n.pow(3) - 21 * n;
                (
                    b(n) + 1,
                    vec![
                        class(l.nums(&[1, 3]), n - 1),
                        class(l.nums(&[2, 4]), b(n - 2) - 1),
                        class(l.nums(&[ni - 2, ni]), n - 1),
                        class(l.nums(&[1, ni]), 1),
                    ],
                    symmetric(&[&[4, 2, 1, 2], &[4, 2, 1], &[4, 2], &[4]]),
                    vec![n * n + 1, 2 * n * n + 5 - 6 * n, n * n + 1, (n * n + 3 * n) / 2 + 2],
                    vec![total],
                )
            }
            TypeTag::E(1, 1) => (
                9,
                vec![
                    class(l.word(&[Some(-1), None]), 3),
                    class(l.word(&[Some(1), None]), 3),
                    class(l.nums(&[-1, 1]), 3),
                ],
                symmetric(&[&[1, 0, 0], &[1, 0], &[1]]),
                vec![3, 3, 3],
                vec![9, 9, 9],
            ),
            TypeTag::E(1, _) => (
                b(n + 1) - 1,
                vec![class(l.word(&[Some(-1), None]), n - 1), class(l.word(&[Some(1), None]), b(n))],
                symmetric(&[&[1, 0], &[1]]),
                vec![n - 1, b(n)],
                vec![(n - 1).pow(2), b(n).pow(2)],
            ),
            TypeTag::E(_, _) => {
                let k = b(n + 1) - 1;
                (k, vec![class(l.nums(&[-1, 1]), k)], symmetric(&[&[1]]), vec![k], vec![k * k])
            }
            TypeTag::F(4) => (9, vec![class(l.nums(&[1, 3]), 9)], symmetric(&[&[1]]), vec![9], vec![81]),
            TypeTag::F(_) => {
                let total = (n.pow(4) + 33 * n * n + 28 - 4 * n.pow(3) - 58 * n) / 2;
                (
                    b(n + 1) - 1,
                    vec![class(l.nums(&[1, 3]), 3 * n - 3), class(l.nums(&[3, 5]), b(n - 2) - 1)],
                    symmetric(&[&[2, 1], &[2]]),
                    vec![(n * n + 7 * n) / 2 - 4, (n - 1).pow(2)],
                    vec![total],
                )
            }
            TypeTag::H(3) => (5, vec![class(l.nums(&[1, 3]), 5)], symmetric(&[&[1]]), vec![5], vec![25]),
            TypeTag::H(_) => {
                let k = 2 * (b(n + 1) - 1);
                (
                    b(n + 1) - 1,
                    vec![class(l.nums(&[1, 3]), 2 * n - 1), class(l.nums(&[2, 4]), b(n - 1) - 1)],
                    symmetric(&[&[2, 2], &[2]]),
                    vec![k, k],
                    vec![2 * (b(n + 1) - 1).pow(2)],
                )
            }
            _ => return Err(Error::NotBuiltinType),
        };
    let slide = match tag {
        TypeTag::E(1, _) => simple.clone(),
        _ => vec![class(simple[0].member.clone(), stub_count)],
    };
    Ok(ExpectedTables {
        stub_count,
        simple_classes: simple,
        slide_classes: slide,
        zero_cell_sizes: zero,
        right_cell_sizes: right,
        two_sided_sizes: two,
    })
}

/// One stated 0-cell `I(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatedZeroCell {
    pub x: Word,
    pub y: Word,
    pub members: Vec<Word>,
}

/// The explicitly known 0-cells of a nontrivially a(2)-finite built-in type.
pub fn representative_zero_cells(sys: &CoxeterSystem) -> Result<Vec<StatedZeroCell>> {
    if !sys.classify()?.nontrivially_a2_finite {
        return Err(Error::NotA2Finite);
    }
    let l = Labels { sys };
    let n = sys.type_tag().rank().ok_or(Error::NotBuiltinType)? as i64;
    let diagonal = |x: Word, members: Vec<Word>| StatedZeroCell { x: x.clone(), y: x, members };
    let x13 = || l.nums(&[1, 3]);
    let x24 = || l.nums(&[2, 4]);
    Ok(match sys.type_tag() {
        TypeTag::A(_) | TypeTag::B(3) | TypeTag::H(3) => vec![diagonal(x13(), vec![x13()])],
        TypeTag::B(_) | TypeTag::H(_) => vec![diagonal(x24(), vec![x24(), l.nums(&[2, 1, 2, 4])])],
        TypeTag::CTilde(_) => {
            let mut z: Vec<i64> = (4..=n).collect();
            z.extend(descending(n - 1, 4));
            let with = |prefix: &[i64]| l.nums(&[prefix, &z[..]].concat());
            vec![diagonal(x24(), vec![x24(), l.nums(&[2, 1, 2, 4]), with(&[2]), with(&[2, 1, 2])])]
        }
        TypeTag::E(_, _) => [l.word(&[Some(-1), None]), l.word(&[Some(1), None]), l.nums(&[-1, 1])]
            .into_iter()
            .map(|x| diagonal(x.clone(), vec![x]))
            .collect(),
        TypeTag::F(4) => vec![diagonal(x24(), vec![x24()])],
        TypeTag::F(_) => vec![diagonal(x24(), vec![x24(), l.nums(&[2, 4, 3, 5, 2, 4])])],
        _ => return Err(Error::NotBuiltinType),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(d: &str) -> Arc<CoxeterSystem> {
        Arc::new(CoxeterSystem::from_descriptor(d).unwrap())
    }

    #[test]
    fn listed_counts_match_the_count_formulas() {
        for d in ["A:3", "A:6", "B:3", "B:5", "Ctilde:4", "Ctilde:6", "E:1,1", "E:1,3", "E:2,3", "F:4", "F:6", "H:3", "H:5"] {
            let s = sys(d);
            let listed = closed_form_stubs(&s).unwrap();
            let mut distinct = listed.clone();
            crate::cells::sort_elements(&mut distinct);
            assert_eq!(distinct.len(), listed.len(), "{d} lists a stub twice");
            assert_eq!(listed.len(), expected_tables(&s).unwrap().stub_count, "{d}");
        }
    }

    #[test]
    fn tables_are_self_consistent() {
        // |R_x| = Σ_j n_j N_ij and |W_2| = Σ_i n_i N_i
        for d in ["A:5", "B:3", "B:6", "Ctilde:5", "Ctilde:7", "E:1,1", "E:1,4", "E:3,3", "F:4", "F:7", "H:3", "H:6"] {
            let t = expected_tables(&sys(d)).unwrap();
            let sizes: Vec<_> = t.simple_classes.iter().map(|c| c.size).collect();
            assert_eq!(sizes.iter().sum::<usize>(), t.stub_count, "{d}");
            for (i, row) in t.zero_cell_sizes.iter().enumerate() {
                let weighted: usize = row.iter().zip(&sizes).map(|(a, b)| a * b).sum();
                assert_eq!(weighted, t.right_cell_sizes[i], "{d} row {i}");
            }
            let total: usize = sizes.iter().zip(&t.right_cell_sizes).map(|(a, b)| a * b).sum();
            assert_eq!(total, t.total(), "{d}");
        }
    }

    #[test]
    fn ctilde_formulas_at_five() {
        let t = expected_tables(&sys("Ctilde:4")).unwrap();
        assert_eq!(t.right_cell_sizes, vec![26, 25, 26, 22]);
        assert_eq!(t.total(), 280);
        let z = representative_zero_cells(&sys("Ctilde:4")).unwrap();
        let s = sys("Ctilde:4");
        let words: Vec<_> = z[0].members.iter().map(|w| s.format_word(w)).collect();
        assert_eq!(words, ["2,4", "2,1,2,4", "2,4,5,4", "2,1,2,4,5,4"]);
    }

    #[test]
    fn rejects_other_systems() {
        assert_eq!(closed_form_stubs(&sys("A:2")), Err(Error::NotA2Finite));
        let custom = Arc::new(
            CoxeterSystem::from_matrix(
                vec!["a".into(), "b".into(), "c".into()],
                &[vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
            )
            .unwrap(),
        );
        assert_eq!(closed_form_stubs(&custom), Err(Error::NotBuiltinType));
    }
}
