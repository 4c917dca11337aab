//! Golden checks for one system: stub lists, cell partition, class and
//! size tables, known 0-cells, triples and involutions, plus the full B4
//! 0-cell table.

use std::collections::HashSet;

use crate::cells::report::cell_size_report;
use crate::cells::{closed_form_stubs, representative_zero_cells, sort_elements, A2Cells};
use crate::element::GroupElement;
use crate::heap::{fc_a_classify, AClass};
use crate::system::TypeTag;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

/// The six B4 stubs in the row order of the golden 0-cell table.
pub const B4_STUBS: [&str; 6] = ["1213", "213", "13", "14", "24", "324"];

/// `|I(x_i, x_j)|` for the stubs of [`B4_STUBS`].
pub const B4_ZERO_CELL_SIZES: [[usize; 6]; 6] = [
    [2, 2, 2, 2, 1, 1],
    [2, 2, 2, 2, 1, 1],
    [2, 2, 2, 2, 1, 1],
    [2, 2, 2, 2, 1, 1],
    [1, 1, 1, 1, 2, 2],
    [1, 1, 1, 1, 2, 2],
];

/// `I(x_i, x_j)` for the stubs of [`B4_STUBS`], as reduced words.
pub const B4_ZERO_CELLS: [[&[&str]; 6]; 6] = [
    [
        &["121321", "1213241321"],
        &["12132", "121324132"],
        &["1213", "12132413"],
        &["12134", "1213241"],
        &["121324"],
        &["1213243"],
    ],
    [
        &["21321", "213241321"],
        &["2132", "21324132"],
        &["213", "2132413"],
        &["2134", "213241"],
        &["21324"],
        &["213243"],
    ],
    [&["1321", "13241321"], &["132", "1324132"], &["13", "132413"], &["134", "13241"], &["1324"], &["13243"]],
    [&["41321", "1241321"], &["4132", "124132"], &["413", "12413"], &["14", "1241"], &["124"], &["1243"]],
    [&["241321"], &["24132"], &["2413"], &["214"], &["24", "2124"], &["243", "21243"]],
    [&["3241321"], &["324132"], &["32413"], &["3214"], &["324", "32124"], &["3243", "321243"]],
];

fn b4_checks(cells: &A2Cells, out: &mut Vec<Check>) {
    let sys = cells.system();
    let parse = |w: &str| GroupElement::parse(sys, w).expect("golden words parse");
    let idx: Vec<Option<usize>> = B4_STUBS.iter().map(|w| cells.stub_index(&parse(w))).collect();
    let found = idx.iter().all(Option::is_some) && cells.stubs().len() == 6;
    out.push(Check::new("B4 six stubs", found, format!("{} stubs", cells.stubs().len())));
    if !found {
        return;
    }
    let idx: Vec<usize> = idx.into_iter().flatten().collect();
    let sizes = cells.zero_cell_sizes();
    let mut bad_sizes = Vec::new();
    let mut bad_sets = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if sizes[idx[i]][idx[j]] != B4_ZERO_CELL_SIZES[i][j] {
                bad_sizes.push(format!("({},{})", B4_STUBS[i], B4_STUBS[j]));
            }
            let mut expected: Vec<_> = B4_ZERO_CELLS[i][j].iter().map(|w| parse(w)).collect();
            sort_elements(&mut expected);
            if cells.zero_cell(idx[i], idx[j]) != expected {
                bad_sets.push(format!("({},{})", B4_STUBS[i], B4_STUBS[j]));
            }
        }
    }
    out.push(Check::new("B4 0-cell size matrix", bad_sizes.is_empty(), bad_sizes.join(" ")));
    out.push(Check::new("B4 0-cell member sets", bad_sets.is_empty(), bad_sets.join(" ")));
    let cell_sizes: Vec<_> = idx.iter().map(|&i| cells.right_cell(i).len()).collect();
    out.push(Check::new(
        "B4 right cell sizes 10,10,10,10,8,8 and |W_2| = 56",
        cell_sizes == [10, 10, 10, 10, 8, 8] && cells.len() == 56,
        format!("{cell_sizes:?}, |W_2| = {}", cells.len()),
    ));
}

/// Runs every check that applies to the system behind `cells`.
pub fn verify_system(cells: &A2Cells) -> Vec<Check> {
    let sys = cells.system();
    let mut out = Vec::new();
    if cells.is_empty() {
        out.push(Check::new("W_2 empty", cells.is_empty(), "no commuting pair of generators"));
        return out;
    }
    let fmt = |w: &GroupElement| sys.format_word(w.canonical_word());

    if let Ok(listed) = closed_form_stubs(sys) {
        let mut listed_sorted = listed.clone();
        sort_elements(&mut listed_sorted);
        out.push(Check::new(
            "stub list equals the closed form",
            listed_sorted.len() == listed.len() && listed_sorted == cells.stubs(),
            format!("{} enumerated, {} listed", cells.stubs().len(), listed.len()),
        ));
    }

    let total: usize = cells.right_cells().iter().map(Vec::len).sum();
    let all_two = cells.elements().iter().all(|w| fc_a_classify(w) == Ok(AClass::Two));
    out.push(Check::new(
        "right cells are disjoint and have a-value 2",
        total == cells.len() && all_two,
        format!("{total} members, {} distinct", cells.len()),
    ));

    let mut weak_ok = true;
    let mut descents_ok = true;
    for (i, cell) in cells.right_cells().iter().enumerate() {
        let left = cells.stubs()[i].left_descents();
        for w in cell {
            descents_ok &= w.left_descents() == left;
            for (j, x) in cells.stubs().iter().enumerate() {
                weak_ok &= x.weak_leq_right(w).unwrap_or(false) == (i == j);
            }
        }
    }
    out.push(Check::new("membership equals weak order above the stub", weak_ok, ""));
    out.push(Check::new("left descents are constant on right cells", descents_ok, ""));

    let report = cell_size_report(cells);
    let mismatches: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.verdict() == "MISMATCH")
        .map(|r| format!("{}: {} vs {}", r.quantity, r.computed, r.expected.unwrap_or(0)))
        .collect();
    if report.expected.is_some() {
        out.push(Check::new("class and cell sizes equal the closed forms", report.all_match(), mismatches.join("; ")));
    }
    out.push(Check::new(
        "0-cell sizes are constant on simple classes and symmetric",
        report.zero_cell_sizes_invariant(),
        report
            .zero_cell_sizes
            .iter()
            .map(|row| row.iter().map(|n| n.map_or("?".into(), |n| n.to_string())).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / "),
    ));

    if let Ok(stated) = representative_zero_cells(sys) {
        for z in stated {
            let name = format!("I({}; {})", sys.format_word(&z.x), sys.format_word(&z.y));
            let lookup = |w: &[usize]| GroupElement::from_word(sys, w).ok().and_then(|e| cells.stub_index(&e));
            let computed = match (lookup(&z.x), lookup(&z.y)) {
                (Some(x), Some(y)) => cells.zero_cell(x, y),
                _ => Vec::new(),
            };
            let mut expected: Vec<_> =
                z.members.iter().filter_map(|w| GroupElement::from_word(sys, w).ok()).collect();
            sort_elements(&mut expected);
            let shown: Vec<_> = computed.iter().map(fmt).collect();
            out.push(Check::new(format!("stated 0-cell {name}"), computed == expected, format!("{{{}}}", shown.join(" "))));
        }
    }

    let mut triple_errors = Vec::new();
    for w in cells.elements() {
        let ok = cells.a2_triple_of(&w).is_ok_and(|t| {
            t.core.left_descents().len() == 2
                && t.core.right_descents().len() == 2
                && t.product().is_ok_and(|p| p == w)
        });
        if !ok {
            triple_errors.push(fmt(&w));
        }
    }
    // every (stub, core, stub⁻¹) glues to a distinct element
    let mut images = HashSet::new();
    let mut triples = 0usize;
    for core in cells.elements() {
        let (l, r) = (core.left_descents(), core.right_descents());
        if l.len() != 2 || r.len() != 2 {
            continue;
        }
        for x in cells.stubs().iter().filter(|x| x.right_descents() == l) {
            for y in cells.stubs().iter().filter(|y| y.right_descents() == r) {
                triples += 1;
                let glued = crate::cells::glued_product(x, &core)
                    .and_then(|xc| crate::cells::glued_product(&xc, &y.inverse()));
                if let Ok(g) = glued {
                    if cells.contains(&g) {
                        let back = cells.a2_triple_of(&g);
                        if back.is_ok_and(|t| t.left == *x && t.core == core && t.right == y.inverse()) {
                            images.insert(g);
                        }
                    }
                }
            }
        }
    }
    out.push(Check::new(
        "triple decomposition is a bijection onto W_2",
        triple_errors.is_empty() && triples == cells.len() && images.len() == cells.len(),
        format!("{triples} triples, {} images, {} failures", images.len(), triple_errors.len()),
    ));

    let bad_involutions: Vec<_> = (0..cells.stubs().len())
        .filter(|&i| {
            let d = cells.distinguished_involution(i);
            !(d.inverse() == d && cells.zero_cell(i, i).contains(&d))
        })
        .map(|i| fmt(&cells.stubs()[i]))
        .collect();
    // Uniqueness is only certain when I(x,x) holds a single involution.
    let unique = (0..cells.stubs().len())
        .filter(|&i| cells.zero_cell(i, i).iter().filter(|z| z.inverse() == **z).count() == 1)
        .count();
    let detail = if bad_involutions.is_empty() {
        format!("the only involution in I(x,x) for {unique} of {} stubs", cells.stubs().len())
    } else {
        bad_involutions.join(" ")
    };
    out.push(Check::new("x * x⁻¹ is an involution in I(x,x)", bad_involutions.is_empty(), detail));

    if sys.type_tag() == TypeTag::B(4) {
        b4_checks(cells, &mut out);
    }
    out
}
