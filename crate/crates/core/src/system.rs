//! Coxeter systems: descriptors, Coxeter matrices and the a(2)-finite
//! classification.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingScalar};

/// Index of a generator inside its system (`0..rank`).
pub type Generator = usize;

/// A word in the generators, read left to right.
pub type Word = Vec<Generator>;

/// The family a system belongs to, with its rank parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    A(usize),
    B(usize),
    /// Affine `C̃_m`, which has `m + 1` generators.
    CTilde(usize),
    /// `E_{q,r}`: a path `-q..r` with an extra node `v` hanging off `0`.
    E(usize, usize),
    F(usize),
    H(usize),
    /// Dihedral group with bond `m`; `None` is the infinite bond.
    I2(Option<u32>),
    Custom,
}

impl TypeTag {
    /// Whether the group is finite, when the family decides it.
    pub fn is_finite(self) -> Option<bool> {
        Some(match self {
            TypeTag::A(_) | TypeTag::B(_) => true,
            TypeTag::CTilde(_) => false,
            // arms of 1, q and r edges around the branch node
            TypeTag::E(q, r) => (q + 1) * (r + 1) < 2 * (q + r + 2),
            TypeTag::F(n) => n <= 4,
            TypeTag::H(n) => n <= 4,
            TypeTag::I2(m) => m.is_some(),
            TypeTag::Custom => return None,
        })
    }

    /// Number of generators.
    pub fn rank(self) -> Option<usize> {
        Some(match self {
            TypeTag::A(n) | TypeTag::B(n) | TypeTag::F(n) | TypeTag::H(n) => n,
            TypeTag::CTilde(m) => m + 1,
            TypeTag::E(q, r) => q + r + 2,
            TypeTag::I2(_) => 2,
            TypeTag::Custom => return None,
        })
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A(n) => write!(f, "A:{n}"),
            TypeTag::B(n) => write!(f, "B:{n}"),
            TypeTag::CTilde(m) => write!(f, "Ctilde:{m}"),
            TypeTag::E(q, r) => write!(f, "E:{q},{r}"),
            TypeTag::F(n) => write!(f, "F:{n}"),
            TypeTag::H(n) => write!(f, "H:{n}"),
            TypeTag::I2(Some(m)) => write!(f, "I2:{m}"),
            TypeTag::I2(None) => write!(f, "I2:inf"),
            TypeTag::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for TypeTag {
    type Err = Error;

    /// Parses `A:<n>`, `B:<n>`, `Ctilde:<m>`, `E:<q>,<r>`, `F:<n>`, `H:<n>`
    /// and `I2:<m|inf>`, checking the rank ranges.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadDescriptor(s.to_string());
        let invalid = || Error::InvalidRank(s.to_string());
        let (family, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let tag = match family.trim() {
            "A" => TypeTag::A(num(arg)?),
            "B" => TypeTag::B(num(arg)?),
            "Ctilde" | "C~" => TypeTag::CTilde(num(arg)?),
            "E" => {
                let (q, r) = arg.split_once(',').ok_or_else(bad)?;
                TypeTag::E(num(q)?, num(r)?)
            }
            "F" => TypeTag::F(num(arg)?),
            "H" => TypeTag::H(num(arg)?),
            "I2" => match arg.trim() {
                "inf" | "∞" | "0" => TypeTag::I2(None),
                m => TypeTag::I2(Some(m.parse::<u32>().map_err(|_| bad())?)),
            },
            _ => return Err(bad()),
        };
        let ok = match tag {
            TypeTag::A(n) => n >= 1,
            TypeTag::B(n) | TypeTag::H(n) => n >= 2,
            TypeTag::CTilde(m) => m >= 2,
            TypeTag::E(q, r) => r >= q && q >= 1,
            TypeTag::F(n) => n >= 4,
            TypeTag::I2(m) => m.is_none_or(|m| m >= 5),
            TypeTag::Custom => false,
        };
        if ok {
            Ok(tag)
        } else {
            Err(invalid())
        }
    }
}

/// A Coxeter system given by its Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<String>,
    index: HashMap<String, Generator>,
    /// Row-major bonds; `0` stands for `∞`, the diagonal holds `1`.
    bonds: Vec<u32>,
    type_tag: TypeTag,
    ring: Option<Ring>,
    /// `2cos(π/m(s,t))`, present when `ring` is.
    cartan: Vec<RingScalar>,
}

#[derive(Deserialize)]
struct CustomSystem {
    labels: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

impl CoxeterSystem {
    /// Builds a built-in system.
    pub fn build(tag: TypeTag) -> Result<Self> {
        let numbered = |n: usize| (1..=n).map(|i| i.to_string()).collect::<Vec<_>>();
        let path = |n: usize| {
            let mut m = vec![vec![2i64; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 0..n.saturating_sub(1) {
                m[i][i + 1] = 3;
                m[i + 1][i] = 3;
            }
            m
        };
        let set = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, b: i64| {
            m[i][j] = b;
            m[j][i] = b;
        };
        let (labels, matrix) = match tag {
            TypeTag::A(n) => (numbered(n), path(n)),
            TypeTag::B(n) => {
                let mut m = path(n);
                set(&mut m, 0, 1, 4);
                (numbered(n), m)
            }
            TypeTag::CTilde(k) => {
                let n = k + 1;
                let mut m = path(n);
                set(&mut m, 0, 1, 4);
                set(&mut m, n - 2, n - 1, 4);
                (numbered(n), m)
            }
            TypeTag::F(n) => {
                let mut m = path(n);
                set(&mut m, 1, 2, 4);
                (numbered(n), m)
            }
            TypeTag::H(n) => {
                let mut m = path(n);
                set(&mut m, 0, 1, 5);
                (numbered(n), m)
            }
            TypeTag::I2(bond) => {
                let b = bond.map_or(0, i64::from);
                (numbered(2), vec![vec![1, b], vec![b, 1]])
            }
            TypeTag::E(q, r) => {
                // path -q..r occupies positions 0..=q+r, then v
                let n = q + r + 2;
                let mut m = path(n - 1);
                for row in m.iter_mut() {
                    row.push(2);
                }
                let mut last = vec![2; n];
                last[n - 1] = 1;
                m.push(last);
                set(&mut m, q, n - 1, 3);
                let mut labels: Vec<String> = (-(q as i64)..=r as i64).map(|i| i.to_string()).collect();
                labels.push("v".into());
                (labels, m)
            }
            TypeTag::Custom => return Err(Error::NotBuiltinType),
        };
        Self::from_matrix_with_tag(labels, &matrix, tag)
    }

    /// Parses a descriptor such as `B:4` or `E:1,2`.
    pub fn from_descriptor(descriptor: &str) -> Result<Self> {
        Self::build(descriptor.parse()?)
    }

    /// Builds a system from a JSON object `{"labels": [...], "matrix": [[...]]}`
    /// where `0` encodes an infinite bond.
    pub fn from_json(json: &str) -> Result<Self> {
        let custom: CustomSystem =
            serde_json::from_str(json).map_err(|e| Error::BadCustomSystem(e.to_string()))?;
        Self::from_matrix(custom.labels, &custom.matrix)
    }

    /// Builds a custom system from labels and a Coxeter matrix (`0` = `∞`).
    pub fn from_matrix(labels: Vec<String>, matrix: &[Vec<i64>]) -> Result<Self> {
        Self::from_matrix_with_tag(labels, matrix, TypeTag::Custom)
    }

    fn from_matrix_with_tag(labels: Vec<String>, matrix: &[Vec<i64>], type_tag: TypeTag) -> Result<Self> {
        let n = labels.len();
        if n == 0 || matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidRank(format!("{n} labels, {} matrix rows", matrix.len())));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(',') || index.insert(l.clone(), i).is_some() {
                return Err(Error::BadCustomSystem(format!("bad or repeated label `{l}`")));
            }
        }
        let mut bonds = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let m = matrix[i][j];
                if m != matrix[j][i] {
                    return Err(Error::AsymmetricMatrix(i, j));
                }
                let ok = if i == j { m == 1 } else { m == 0 || m >= 2 };
                if !ok || m > u32::MAX as i64 {
                    return Err(Error::BadBond { row: i, col: j, bond: m });
                }
                bonds[i * n + j] = m as u32;
            }
        }
        let finite_bonds = || bonds.iter().copied().filter(|&m| m != 0);
        let has4 = finite_bonds().any(|m| m == 4);
        let has5 = finite_bonds().any(|m| m == 5);
        let exotic = finite_bonds().any(|m| m >= 6);
        let ring = match (has4, has5, exotic) {
            (_, _, true) | (true, true, _) => None,
            (true, false, false) => Some(Ring::Sqrt2),
            (false, true, false) => Some(Ring::Phi),
            (false, false, false) => Some(Ring::Int),
        };
        let mut cartan = Vec::new();
        if let Some(ring) = ring {
            cartan = bonds
                .iter()
                .map(|&m| match m {
                    1 => RingScalar::ZERO,
                    0 => RingScalar::new(2, 0),
                    m => ring.bond_scalar(Some(m)).expect("ring chosen to fit every bond"),
                })
                .collect();
        }
        Ok(Self { labels, index, bonds, type_tag, ring, cartan })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn type_tag(&self) -> TypeTag {
        self.type_tag
    }

    /// The ring of the geometric representation, if the bonds allow one.
    pub fn ring(&self) -> Option<Ring> {
        self.ring
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: Generator) -> &str {
        &self.labels[s]
    }

    pub fn generator(&self, label: &str) -> Result<Generator> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The bond `m(s,t)`; `None` means `∞`.
    pub fn bond(&self, s: Generator, t: Generator) -> Option<u32> {
        match self.bonds[s * self.rank() + t] {
            0 => None,
            m => Some(m),
        }
    }

    pub fn commute(&self, s: Generator, t: Generator) -> bool {
        s != t && self.bond(s, t) == Some(2)
    }

    /// `s ≠ t` joined by an edge of the diagram.
    pub fn adjacent(&self, s: Generator, t: Generator) -> bool {
        s != t && self.bond(s, t) != Some(2)
    }

    /// `2cos(π/m(s,t))`; only meaningful when [`Self::ring`] is `Some`.
    pub(crate) fn cartan(&self, s: Generator, t: Generator) -> RingScalar {
        self.cartan[s * self.rank() + t]
    }

    /// Every edge `{s, t}` with `s < t`.
    pub fn edges(&self) -> Vec<(Generator, Generator)> {
        let n = self.rank();
        (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).filter(|&(s, t)| self.adjacent(s, t)).collect()
    }

    /// Every commuting pair `{s, t}` with `s < t`.
    pub fn commuting_pairs(&self) -> Vec<(Generator, Generator)> {
        let n = self.rank();
        (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).filter(|&(s, t)| self.commute(s, t)).collect()
    }

    /// Comma-joined labels; the empty word is the empty string.
    pub fn format_word(&self, word: &[Generator]) -> String {
        word.iter().map(|&s| self.label(s)).collect::<Vec<_>>().join(",")
    }

    /// Parses comma-joined labels. Without commas, a string whose characters
    /// are all single-character labels is read letter by letter, so `1,3,2`
    /// and `132` mean the same word in `B:4`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.contains(',') {
            return text.split(',').map(|l| self.generator(l.trim())).collect();
        }
        if let Ok(s) = self.generator(text) {
            return Ok(vec![s]);
        }
        text.chars().map(|c| self.generator(&c.to_string())).collect()
    }

    /// Classifies the system; see [`Classification`].
    pub fn classify(&self) -> Result<Classification> {
        classify(self)
    }
}

/// Result of the a(2)-finite classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub a2_finite: bool,
    /// a(2)-finite with at least one element of a-value 2.
    pub nontrivially_a2_finite: bool,
    /// The family recognized from the diagram, up to relabeling.
    pub family: Option<TypeTag>,
}

/// Reads the family off the Coxeter diagram.
///
/// A system is a(2)-finite iff its diagram is complete or it is one of the
/// acyclic families A, B, C̃ (rank ≥ 5), E, F, H, I2. It is nontrivially so
/// for A_n, B_n, H_n with n ≥ 3, C̃ with at least 5 generators, every E_{q,r}
/// and every F_n.
pub fn classify(sys: &CoxeterSystem) -> Result<Classification> {
    let n = sys.rank();
    let neighbours: Vec<Vec<Generator>> =
        (0..n).map(|s| (0..n).filter(|&t| sys.adjacent(s, t)).collect()).collect();

    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(s) = stack.pop() {
        for &t in &neighbours[s] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    if seen.iter().any(|&b| !b) {
        return Err(Error::ReducibleSystem);
    }

    let found = |family: Option<TypeTag>, a2: bool| {
        let nontrivial = a2
            && match family {
                Some(TypeTag::A(k) | TypeTag::B(k) | TypeTag::H(k)) => k >= 3,
                Some(TypeTag::CTilde(k)) => k >= 4,
                Some(TypeTag::E(..) | TypeTag::F(_)) => true,
                _ => false,
            };
        Ok(Classification { a2_finite: a2, nontrivially_a2_finite: nontrivial, family })
    };

    if n == 1 {
        return found(Some(TypeTag::A(1)), true);
    }
    let edge_count: usize = neighbours.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count != n - 1 {
        // connected with a cycle
        return found(None, edge_count == n * (n - 1) / 2);
    }
    let bond = |s: Generator, t: Generator| sys.bond(s, t);

    let branch: Vec<Generator> = (0..n).filter(|&s| neighbours[s].len() >= 3).collect();
    if !branch.is_empty() {
        if branch.len() > 1 || neighbours[branch[0]].len() > 3 {
            return found(None, false);
        }
        if sys.edges().iter().any(|&(s, t)| bond(s, t) != Some(3)) {
            return found(None, false);
        }
        let centre = branch[0];
        let mut arms: Vec<usize> = neighbours[centre]
            .iter()
            .map(|&first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                while let Some(&next) = neighbours[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return if arms[0] == 1 { found(Some(TypeTag::E(arms[1], arms[2])), true) } else { found(None, false) };
    }

    // a path: walk it from one end
    let start = (0..n).find(|&s| neighbours[s].len() == 1).expect("a path has an end");
    let mut order = vec![start];
    while order.len() < n {
        let cur = *order.last().unwrap();
        let prev = order.get(order.len().wrapping_sub(2)).copied();
        let next = neighbours[cur].iter().copied().find(|&t| Some(t) != prev).unwrap();
        order.push(next);
    }
    let path_bonds: Vec<Option<u32>> = order.windows(2).map(|w| bond(w[0], w[1])).collect();
    if n == 2 {
        return match path_bonds[0] {
            Some(3) => found(Some(TypeTag::A(2)), true),
            Some(4) => found(Some(TypeTag::B(2)), true),
            m => found(Some(TypeTag::I2(m)), true),
        };
    }
    let heavy: Vec<usize> = (0..n - 1).filter(|&i| path_bonds[i] != Some(3)).collect();
    let at_end = |i: usize| i == 0 || i == n - 2;
    match heavy.as_slice() {
        [] => found(Some(TypeTag::A(n)), true),
        &[i] if path_bonds[i] == Some(4) && at_end(i) => found(Some(TypeTag::B(n)), true),
        &[i] if path_bonds[i] == Some(4) && n >= 4 && (i == 1 || i == n - 3) => found(Some(TypeTag::F(n)), true),
        &[i] if path_bonds[i] == Some(5) && at_end(i) => found(Some(TypeTag::H(n)), true),
        &[i, j] if i == 0 && j == n - 2 && path_bonds[i] == Some(4) && path_bonds[j] == Some(4) => {
            found(Some(TypeTag::CTilde(n - 1)), n >= 5)
        }
        _ => found(None, false),
    }
}
