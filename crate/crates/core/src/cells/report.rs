//! Size tables with closed-form comparison, and the JSON report.

use serde::Serialize;

use super::closed_form::{expected_tables, ExpectedClass, ExpectedTables};
use super::{A2Cells, StubClass};
use crate::element::GroupElement;
use crate::heap::cartier_foata;

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeRow {
    pub quantity: String,
    pub computed: usize,
    pub expected: Option<usize>,
}

impl SizeRow {
    pub fn verdict(&self) -> &'static str {
        match self.expected {
            Some(e) if e == self.computed => "MATCH",
            Some(_) => "MISMATCH",
            None => "-",
        }
    }
}

/// Enumerated cell sizes next to their closed forms.
#[derive(Debug, Clone)]
pub struct CellSizeReport {
    /// Simple slide classes, in the order of the closed-form table when one
    /// exists and every tabulated class was found.
    pub simple_classes: Vec<StubClass>,
    /// Slide classes, aligned the same way.
    pub slide_classes: Vec<StubClass>,
    /// `n_i`.
    pub class_sizes: Vec<usize>,
    /// `N_i`, or `None` when stubs of one class have cells of different sizes.
    pub right_cell_sizes: Vec<Option<usize>>,
    /// `N_ij`, or `None` when the 0-cell size varies over the class pair.
    pub zero_cell_sizes: Vec<Vec<Option<usize>>>,
    pub two_sided_sizes: Vec<usize>,
    pub expected: Option<ExpectedTables>,
    pub rows: Vec<SizeRow>,
}

impl CellSizeReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.verdict() != "MISMATCH")
            && self.right_cell_sizes.iter().all(Option::is_some)
            && self.zero_cell_sizes.iter().flatten().all(Option::is_some)
    }

    /// `N` is constant on pairs of simple classes and symmetric.
    pub fn zero_cell_sizes_invariant(&self) -> bool {
        let m = &self.zero_cell_sizes;
        m.iter().flatten().all(Option::is_some) && (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == m[j][i]))
    }
}

/// Puts computed classes in the order of `expected`, matching each tabulated
/// class by its listed member. Leaves the order alone if that fails.
fn align(cells: &A2Cells, classes: Vec<StubClass>, expected: &[ExpectedClass]) -> Vec<StubClass> {
    let position = |member: &[usize]| -> Option<usize> {
        let x = GroupElement::from_word(cells.system(), member).ok()?;
        let i = cells.stub_index(&x)?;
        classes.iter().position(|c| c.members.contains(&i))
    };
    let order: Option<Vec<usize>> = expected.iter().map(|e| position(&e.member)).collect();
    match order {
        Some(order) if order.len() == classes.len() && {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == order.len()
        } =>
        {
            order.into_iter().map(|i| classes[i].clone()).collect()
        }
        _ => classes,
    }
}

fn constant<I: IntoIterator<Item = usize>>(values: I) -> Option<usize> {
    let mut it = values.into_iter();
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

/// Sizes of right, 0- and two-sided cells, compared with the closed forms
/// wherever the system is a built-in family.
pub fn cell_size_report(cells: &A2Cells) -> CellSizeReport {
    let expected = expected_tables(cells.system()).ok();
    let mut simple = cells.slide_classes(true);
    let mut slide = cells.slide_classes(false);
    if let Some(e) = &expected {
        simple = align(cells, simple, &e.simple_classes);
        slide = align(cells, slide, &e.slide_classes);
    }
    let n = cells.zero_cell_sizes();
    let class_sizes: Vec<_> = simple.iter().map(|c| c.members.len()).collect();
    let right_cell_sizes: Vec<_> =
        simple.iter().map(|c| constant(c.members.iter().map(|&i| cells.right_cell(i).len()))).collect();
    let zero_cell_sizes: Vec<Vec<_>> = simple
        .iter()
        .map(|ci| {
            simple
                .iter()
                .map(|cj| constant(ci.members.iter().flat_map(|&x| cj.members.iter().map(move |&y| (x, y))).map(|(x, y)| n[x][y])))
                .collect()
        })
        .collect();
    let two_sided_sizes: Vec<_> =
        slide.iter().map(|c| c.members.iter().map(|&i| cells.right_cell(i).len()).sum()).collect();

    let sys = cells.system();
    let rep = |c: &StubClass| sys.format_word(c.representative.canonical_word());
    let lookup = |v: Option<&Vec<usize>>, i: usize| v.and_then(|v| v.get(i).copied());
    let mut rows = vec![SizeRow {
        quantity: "stubs".into(),
        computed: cells.stubs().len(),
        expected: expected.as_ref().map(|e| e.stub_count),
    }];
    let exp_class_sizes: Option<Vec<usize>> =
        expected.as_ref().map(|e| e.simple_classes.iter().map(|c| c.size).collect());
    for (i, c) in simple.iter().enumerate() {
        rows.push(SizeRow {
            quantity: format!("n_{} [{}]", i + 1, rep(c)),
            computed: class_sizes[i],
            expected: lookup(exp_class_sizes.as_ref(), i),
        });
    }
    for (i, c) in simple.iter().enumerate() {
        rows.push(SizeRow {
            quantity: format!("N_{} [{}]", i + 1, rep(c)),
            computed: right_cell_sizes[i].unwrap_or(0),
            expected: lookup(expected.as_ref().map(|e| &e.right_cell_sizes), i),
        });
    }
    for (i, row) in zero_cell_sizes.iter().enumerate() {
        for (j, size) in row.iter().enumerate().skip(i) {
            rows.push(SizeRow {
                quantity: format!("N_{}{}", i + 1, j + 1),
                computed: size.unwrap_or(0),
                expected: expected.as_ref().and_then(|e| e.zero_cell_sizes.get(i)?.get(j).copied()),
            });
        }
    }
    let exp_slide: Option<Vec<usize>> = expected.as_ref().map(|e| e.slide_classes.iter().map(|c| c.size).collect());
    for (k, c) in slide.iter().enumerate() {
        rows.push(SizeRow {
            quantity: format!("slide class {} [{}]", k + 1, rep(c)),
            computed: c.members.len(),
            expected: lookup(exp_slide.as_ref(), k),
        });
        rows.push(SizeRow {
            quantity: format!("two-sided cell {} [{}]", k + 1, rep(c)),
            computed: two_sided_sizes[k],
            expected: lookup(expected.as_ref().map(|e| &e.two_sided_sizes), k),
        });
    }
    rows.push(SizeRow {
        quantity: "|W_2|".into(),
        computed: cells.len(),
        expected: expected.as_ref().map(ExpectedTables::total),
    });

    CellSizeReport {
        simple_classes: simple,
        slide_classes: slide,
        class_sizes,
        right_cell_sizes,
        zero_cell_sizes,
        two_sided_sizes,
        expected,
        rows,
    }
}

#[derive(Debug, Serialize)]
pub struct StubEntry {
    pub word: String,
    pub side: &'static str,
    pub layers: Vec<String>,
    pub simple_class: usize,
    pub slide_class: usize,
}

#[derive(Debug, Serialize)]
pub struct RightCellEntry {
    pub stub: String,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ZeroCellEntry {
    pub x: String,
    pub y: String,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TwoSidedEntry {
    pub class: String,
    pub size: usize,
}

#[derive(Debug, Serialize)]
pub struct SizeTotals {
    pub right: Vec<Option<usize>>,
    pub two_sided: Vec<usize>,
    pub total: usize,
}

#[derive(Debug, Serialize)]
pub struct Tables {
    #[serde(rename = "N")]
    pub zero_cell_sizes: Vec<Vec<Option<usize>>>,
    pub n: Vec<usize>,
    pub sizes: SizeTotals,
}

/// Everything about `W_2` in one serializable value. Member lists are sorted
/// by length, then canonical word.
#[derive(Debug, Serialize)]
pub struct Report {
    pub system: String,
    pub w2_empty: bool,
    pub stubs: Vec<StubEntry>,
    pub right_cells: Vec<RightCellEntry>,
    pub zero_cells: Vec<ZeroCellEntry>,
    pub two_sided: Vec<TwoSidedEntry>,
    pub tables: Tables,
}

fn class_ids(classes: &[StubClass], count: usize) -> Vec<usize> {
    let mut ids = vec![0; count];
    for (k, c) in classes.iter().enumerate() {
        for &i in &c.members {
            ids[i] = k + 1;
        }
    }
    ids
}

impl Report {
    pub fn new(cells: &A2Cells) -> Self {
        let sys = cells.system();
        let fmt = |w: &GroupElement| sys.format_word(w.canonical_word());
        let fmt_all = |set: &[GroupElement]| set.iter().map(fmt).collect::<Vec<_>>();
        let sizes = cell_size_report(cells);
        let k = cells.stubs().len();
        let simple_ids = class_ids(&sizes.simple_classes, k);
        let slide_ids = class_ids(&sizes.slide_classes, k);
        let stubs = cells
            .stubs()
            .iter()
            .enumerate()
            .map(|(i, x)| StubEntry {
                word: fmt(x),
                side: "left",
                layers: cartier_foata(x)
                    .map(|cf| cf.layers.iter().rev().map(|l| sys.format_word(l)).collect())
                    .unwrap_or_default(),
                simple_class: simple_ids[i],
                slide_class: slide_ids[i],
            })
            .collect();
        let right_cells = (0..k)
            .map(|i| RightCellEntry { stub: fmt(&cells.stubs()[i]), members: fmt_all(cells.right_cell(i)) })
            .collect();
        let mut zero_cells = Vec::new();
        for x in 0..k {
            for y in 0..k {
                let members = cells.zero_cell(x, y);
                if !members.is_empty() {
                    zero_cells.push(ZeroCellEntry {
                        x: fmt(&cells.stubs()[x]),
                        y: fmt(&cells.stubs()[y]),
                        members: fmt_all(&members),
                    });
                }
            }
        }
        let two_sided = sizes
            .slide_classes
            .iter()
            .zip(&sizes.two_sided_sizes)
            .map(|(c, &size)| TwoSidedEntry { class: fmt(&c.representative), size })
            .collect();
        Report {
            system: sys.type_tag().to_string(),
            w2_empty: cells.is_empty(),
            stubs,
            right_cells,
            zero_cells,
            two_sided,
            tables: Tables {
                zero_cell_sizes: sizes.zero_cell_sizes.clone(),
                n: sizes.class_sizes.clone(),
                sizes: SizeTotals {
                    right: sizes.right_cell_sizes.clone(),
                    two_sided: sizes.two_sided_sizes.clone(),
                    total: cells.len(),
                },
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
