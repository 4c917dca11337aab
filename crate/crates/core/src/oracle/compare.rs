//! Runs the oracle on a finite group and compares it with the stub
//! machinery.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::group::{enumerate_group, FiniteGroup};
use super::kl::{KlTable, OracleCells};
use crate::cells::A2Cells;
use crate::element::GroupElement;
use crate::error::Result;
use crate::heap::{heap_of, is_fc};
use crate::star::{right_lower_star, right_upper_star, NoncommutingPair};
use crate::system::CoxeterSystem;
use crate::verify::Check;

/// a-values and cells of one finite group.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub table: KlTable,
    pub a: Vec<usize>,
    pub cells: OracleCells,
}

/// Serializable form of an [`OracleReport`]; cells hold indices into
/// `elements`.
#[derive(Debug, Serialize)]
pub struct OracleDump {
    pub elements: Vec<String>,
    pub a: Vec<usize>,
    pub cells: DumpCells,
}

#[derive(Debug, Serialize)]
pub struct DumpCells {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub two_sided: Vec<Vec<usize>>,
}

impl OracleReport {
    pub fn new(sys: &Arc<CoxeterSystem>, bound: usize) -> Result<Self> {
        Ok(Self::from_group(enumerate_group(sys, bound)?))
    }

    pub fn from_group(group: FiniteGroup) -> Self {
        let table = KlTable::new(group);
        let a = table.a_values();
        let cells = table.cells();
        Self { table, a, cells }
    }

    pub fn dump(&self) -> OracleDump {
        let g = self.table.group();
        OracleDump {
            elements: g.elements().iter().map(|w| g.system().format_word(w.canonical_word())).collect(),
            a: self.a.clone(),
            cells: DumpCells {
                left: self.cells.left.clone(),
                right: self.cells.right.clone(),
                two_sided: self.cells.two_sided.clone(),
            },
        }
    }
}

type Partition = BTreeSet<BTreeSet<usize>>;

fn restrict(cells: &[Vec<usize>], a: &[usize]) -> Partition {
    cells.iter().filter(|c| a[c[0]] == 2).map(|c| c.iter().copied().collect()).collect()
}

/// Checks that the oracle and the stub machinery describe the same cells of
/// a-value 2.
pub fn compare_with_cells(oracle: &OracleReport, cells: &A2Cells) -> Vec<Check> {
    let g = oracle.table.group();
    let a = &oracle.a;
    let idx = |w: &GroupElement| g.index_of(w).expect("W_2 lies in the group");
    let mut out = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        out.push(Check { name: name.to_string(), passed, detail });
    };

    let generators_ok = (0..g.system().rank()).all(|s| a[g.left_mul(s, 0)] == 1);
    check("a(1) = 0 and a(s) = 1", a[0] == 0 && generators_ok, String::new());

    let oracle_w2: BTreeSet<usize> = (0..g.len()).filter(|&z| a[z] == 2).collect();
    let stub_w2: BTreeSet<usize> = cells.elements().iter().map(idx).collect();
    check(
        "elements of a-value 2 match",
        oracle_w2 == stub_w2,
        format!("oracle {}, stubs {}", oracle_w2.len(), stub_w2.len()),
    );

    let right: Partition = cells.right_cells().iter().map(|c| c.iter().map(idx).collect()).collect();
    let left: Partition =
        cells.right_cells().iter().map(|c| c.iter().map(|w| idx(&w.inverse())).collect()).collect();
    let two: Partition =
        cells.two_sided_cells().iter().map(|c| c.members.iter().map(idx).collect()).collect();
    let sizes = |p: &Partition| p.iter().map(BTreeSet::len).collect::<Vec<_>>();
    let oracle_right = restrict(&oracle.cells.right, a);
    let oracle_left = restrict(&oracle.cells.left, a);
    let oracle_two = restrict(&oracle.cells.two_sided, a);
    check("right cells match", oracle_right == right, format!("{:?}", sizes(&oracle_right)));
    check("left cells match", oracle_left == left, format!("{:?}", sizes(&oracle_left)));
    check("two-sided cells match", oracle_two == two, format!("{:?}", sizes(&oracle_two)));

    let cell_of: HashMap<usize, usize> =
        oracle.cells.two_sided.iter().enumerate().flat_map(|(k, c)| c.iter().map(move |&z| (z, k))).collect();
    let constant = oracle.cells.two_sided.iter().all(|c| c.iter().all(|&z| a[z] == a[c[0]]));
    check("a is constant on two-sided cells", constant && cell_of.len() == g.len(), String::new());

    let mut width_mismatch = Vec::new();
    for (z, w) in g.elements().iter().enumerate() {
        if is_fc(w) && (a[z] == 2) != (heap_of(w).width() == 2) {
            width_mismatch.push(w.to_string());
        }
    }
    check("a = 2 exactly when the heap width is 2 (FC elements)", width_mismatch.is_empty(), width_mismatch.join(" "));

    let right_of: HashMap<usize, usize> =
        oracle.cells.right.iter().enumerate().flat_map(|(k, c)| c.iter().map(move |&z| (z, k))).collect();
    let pairs = NoncommutingPair::all(g.system());
    let mut star_breaks = 0;
    for w in cells.elements() {
        for &p in &pairs {
            for image in [right_lower_star(&w, p), right_upper_star(&w, p)].into_iter().flatten() {
                if right_of[&idx(&w)] != right_of[&idx(&image)] {
                    star_breaks += 1;
                }
            }
        }
    }
    check("right star operations stay in the oracle right cell", star_breaks == 0, format!("{star_breaks} breaks"));
    out
}
