//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values are written out here from the closed-form formulas and
//! the published B4 data, independently of the copies inside the library.
//! The B4 oracle run is skipped unless `A2CELLS_SLOW_OK=1` is set; it takes
//! about 15 seconds in the default test profile.

use std::collections::{BTreeMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use a2cells::cells::{closed_form_stubs, enumerate_stubs, sort_elements, A2Cells};
use a2cells::element::GroupElement;
use a2cells::oracle::{compare_with_cells, OracleReport, DEFAULT_BOUND};
use a2cells::star::{
    left_lower_star, left_upper_star, right_lower_star, right_upper_star, simple_right_star, NoncommutingPair,
};
use a2cells::system::{CoxeterSystem, TypeTag};

fn beta(n: usize) -> usize {
    n * (n - 1) / 2
}

fn sweep() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((3..=8).map(|n| format!("A:{n}")));
    out.extend((3..=8).map(|n| format!("B:{n}")));
    out.extend((4..=8).map(|m| format!("Ctilde:{m}")));
    for q in 1..=3 {
        out.extend((q..=6 - q).map(|r| format!("E:{q},{r}")));
    }
    out.extend((4..=8).map(|n| format!("F:{n}")));
    out.extend((3..=8).map(|n| format!("H:{n}")));
    out
}

fn system(d: &str) -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::from_descriptor(d).unwrap())
}

fn el(sys: &Arc<CoxeterSystem>, w: &str) -> GroupElement {
    GroupElement::parse(sys, w).unwrap_or_else(|e| panic!("{w}: {e}"))
}

fn set(sys: &Arc<CoxeterSystem>, words: &[String]) -> Vec<GroupElement> {
    let mut v: Vec<_> = words.iter().map(|w| el(sys, w)).collect();
    sort_elements(&mut v);
    v
}

fn nums(ws: &[usize]) -> String {
    ws.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Number of generators and family of a descriptor.
fn shape(d: &str) -> (TypeTag, usize) {
    let tag: TypeTag = d.parse().unwrap();
    (tag, tag.rank().unwrap())
}

fn expected_stub_count(d: &str) -> usize {
    let (tag, n) = shape(d);
    match tag {
        TypeTag::A(_) => beta(n) - 1,
        TypeTag::B(_) => beta(n),
        TypeTag::CTilde(_) => beta(n) + 1,
        _ => beta(n + 1) - 1,
    }
}

/// A class given by one listed member and its size.
type Class = (String, usize);

/// Simple slide classes, then slide classes.
fn expected_classes(d: &str) -> (Vec<Class>, Vec<Class>) {
    let (tag, n) = shape(d);
    let c = |w: &str, k: usize| (w.to_string(), k);
    let simple = match tag {
        TypeTag::A(_) => vec![c("13", beta(n) - 1)],
        TypeTag::B(3) => vec![c("13", 3)],
        TypeTag::B(_) => vec![c("13", n), c("24", beta(n - 1) - 1)],
        TypeTag::CTilde(_) => vec![
            c("1,3", n - 1),
            c("2,4", beta(n - 2) - 1),
            c(&nums(&[n - 2, n]), n - 1),
            c(&nums(&[1, n]), 1),
        ],
        TypeTag::E(1, 1) => vec![c("-1,v", 3), c("1,v", 3), c("-1,1", 3)],
        TypeTag::E(1, _) => vec![c("-1,v", n - 1), c("1,v", beta(n))],
        TypeTag::E(..) => vec![c("-1,1", beta(n + 1) - 1)],
        TypeTag::F(4) => vec![c("13", 9)],
        TypeTag::F(_) => vec![c("13", 3 * n - 3), c("35", beta(n - 2) - 1)],
        TypeTag::H(3) => vec![c("13", 5)],
        TypeTag::H(_) => vec![c("13", 2 * n - 1), c("24", beta(n - 1) - 1)],
        _ => unreachable!(),
    };
    let slide = match tag {
        TypeTag::E(1, _) => simple.clone(),
        _ => vec![(simple[0].0.clone(), expected_stub_count(d))],
    };
    (simple, slide)
}

/// Two-sided cell sizes, in the order of the slide classes above.
fn expected_two_sided(d: &str) -> Vec<usize> {
    let (tag, n) = shape(d);
    // signed, since the quartics dip below zero term by term
    let poly = |c: [i64; 5], div: i64| -> usize {
        let x = n as i64;
        let v = c.iter().fold(0, |acc, k| acc * x + k);
        (v / div) as usize
    };
    match tag {
        TypeTag::A(_) => vec![(beta(n) - 1).pow(2)],
        TypeTag::B(3) => vec![9],
        TypeTag::B(_) => vec![poly([1, -4, 7, 0, 0], 2)],
        TypeTag::CTilde(_) => vec![poly([1, -6, 20, -21, 10], 1)],
        TypeTag::E(1, 1) => vec![9, 9, 9],
        TypeTag::E(1, _) => vec![(n - 1).pow(2), beta(n).pow(2)],
        TypeTag::E(..) => vec![(beta(n + 1) - 1).pow(2)],
        TypeTag::F(4) => vec![81],
        TypeTag::F(_) => vec![poly([1, -4, 33, -58, 28], 2)],
        TypeTag::H(3) => vec![25],
        TypeTag::H(_) => vec![2 * (beta(n + 1) - 1).pow(2)],
        _ => unreachable!(),
    }
}

/// The stated 0-cells `I(x, x)` as (x, members).
fn expected_zero_cells(d: &str) -> Vec<(String, Vec<String>)> {
    let (tag, n) = shape(d);
    let s = |w: &[&str]| w.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    match tag {
        TypeTag::A(_) | TypeTag::B(3) | TypeTag::H(3) => vec![("13".into(), s(&["13"]))],
        TypeTag::B(_) | TypeTag::H(_) => vec![("24".into(), s(&["24", "2124"]))],
        TypeTag::CTilde(_) => {
            let mut z: Vec<usize> = (4..=n).collect();
            z.extend((4..n).rev());
            let with = |prefix: &[usize]| nums(&[prefix, &z[..]].concat());
            vec![("2,4".into(), vec!["2,4".into(), "2,1,2,4".into(), with(&[2]), with(&[2, 1, 2])])]
        }
        TypeTag::E(..) => ["-1,v", "1,v", "-1,1"].iter().map(|x| (x.to_string(), vec![x.to_string()])).collect(),
        TypeTag::F(4) => vec![("24".into(), s(&["24"]))],
        TypeTag::F(_) => vec![("24".into(), s(&["24", "243524"]))],
        _ => unreachable!(),
    }
}

struct Context {
    cells: Vec<(String, A2Cells)>,
    build_time: Duration,
}

impl Context {
    fn new() -> Self {
        let start = Instant::now();
        let cells = sweep().into_iter().map(|d| {
            let c = A2Cells::from_descriptor(&d).unwrap();
            (d, c)
        }).collect();
        Context { cells, build_time: start.elapsed() }
    }
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn(&Context) -> Outcome>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
}

fn stub_counts() -> Outcome {
    let start = Instant::now();
    let mut systems = 0;
    for d in sweep() {
        let sys = system(&d);
        let stubs = enumerate_stubs(&sys).unwrap();
        ensure(stubs.len() == expected_stub_count(&d), || {
            format!("{d}: {} stubs, expected {}", stubs.len(), expected_stub_count(&d))
        })?;
        let mut listed = closed_form_stubs(&sys).unwrap();
        let before = listed.len();
        sort_elements(&mut listed);
        ensure(before == listed.len() && listed == stubs, || format!("{d}: closed-form list differs"))?;
        systems += 1;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("{systems} systems, generic = closed form"))
}

fn b4_golden() -> Outcome {
    let start = Instant::now();
    let cells = A2Cells::from_descriptor("B:4").unwrap();
    let sys = cells.system().clone();
    let order = ["1213", "213", "13", "14", "24", "324"];
    let sizes: [[usize; 6]; 6] = [
        [2, 2, 2, 2, 1, 1],
        [2, 2, 2, 2, 1, 1],
        [2, 2, 2, 2, 1, 1],
        [2, 2, 2, 2, 1, 1],
        [1, 1, 1, 1, 2, 2],
        [1, 1, 1, 1, 2, 2],
    ];
    let table = [
        "121321 1213241321|12132 121324132|1213 12132413|12134 1213241|121324|1213243",
        "21321 213241321|2132 21324132|213 2132413|2134 213241|21324|213243",
        "1321 13241321|132 1324132|13 132413|134 13241|1324|13243",
        "41321 1241321|4132 124132|413 12413|14 1241|124|1243",
        "241321|24132|2413|214|24 2124|243 21243",
        "3241321|324132|32413|3214|324 32124|3243 321243",
    ];
    let mut stubs: Vec<_> = order.iter().map(|w| el(&sys, w)).collect();
    let idx: Vec<usize> = stubs.iter().map(|x| cells.stub_index(x).expect("listed stub")).collect();
    sort_elements(&mut stubs);
    ensure(cells.stubs() == stubs.as_slice(), || "stub set differs".into())?;
    let n = cells.zero_cell_sizes();
    for (i, row) in table.iter().enumerate() {
        for (j, entry) in row.split('|').enumerate() {
            let expected = set(&sys, &entry.split(' ').map(String::from).collect::<Vec<_>>());
            ensure(cells.zero_cell(idx[i], idx[j]) == expected, || format!("I({},{})", order[i], order[j]))?;
            ensure(n[idx[i]][idx[j]] == sizes[i][j], || format!("N({},{})", order[i], order[j]))?;
        }
    }
    let cell_sizes: Vec<_> = idx.iter().map(|&i| cells.right_cell(i).len()).collect();
    ensure(cell_sizes == [10, 10, 10, 10, 8, 8], || format!("right cells {cell_sizes:?}"))?;
    ensure(cells.len() == 56, || format!("|W_2| = {}", cells.len()))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("6 stubs, 36 zero-cells, |W_2| = 56".into())
}

fn class_multisets(ctx: &Context) -> Outcome {
    for (d, cells) in &ctx.cells {
        let (simple, slide) = expected_classes(d);
        for (mode, expected) in [(true, simple), (false, slide)] {
            let classes = cells.slide_classes(mode);
            ensure(classes.len() == expected.len(), || format!("{d}: {} classes", classes.len()))?;
            let mut used = HashSet::new();
            for (member, size) in &expected {
                let i = cells.stub_index(&el(cells.system(), member)).ok_or(format!("{d}: {member} is no stub"))?;
                let k = classes.iter().position(|c| c.members.contains(&i)).unwrap();
                ensure(used.insert(k) && classes[k].members.len() == *size, || {
                    format!("{d}: class of {member} has {} members, expected {size}", classes[k].members.len())
                })?;
            }
        }
    }
    Ok(format!("{} systems, both modes", ctx.cells.len()))
}

fn two_sided(ctx: &Context) -> Outcome {
    let start = Instant::now();
    for (d, cells) in &ctx.cells {
        let (_, slide) = expected_classes(d);
        let expected = expected_two_sided(d);
        let two = cells.two_sided_cells();
        ensure(two.len() == expected.len(), || format!("{d}: {} two-sided cells", two.len()))?;
        for ((member, _), size) in slide.iter().zip(&expected) {
            let x = el(cells.system(), member);
            let cell = two.iter().find(|c| c.members.contains(&x)).unwrap();
            ensure(cell.members.len() == *size, || format!("{d}: cell of {member} has {}", cell.members.len()))?;
        }
        ensure(cells.len() == expected.iter().sum::<usize>(), || format!("{d}: |W_2| = {}", cells.len()))?;
    }
    let ct = &ctx.cells.iter().find(|(d, _)| d == "Ctilde:4").unwrap().1;
    ensure(ct.len() == 280, || "Ctilde:4 total".into())?;
    let e12 = &ctx.cells.iter().find(|(d, _)| d == "E:1,2").unwrap().1;
    let mut sizes: Vec<_> = e12.two_sided_cells().iter().map(|c| c.members.len()).collect();
    sizes.sort_unstable();
    ensure(sizes == [16, 100], || format!("E:1,2 sizes {sizes:?}"))?;
    let elapsed = start.elapsed() + ctx.build_time;
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{} systems, enumeration and cells in {elapsed:.2?}", ctx.cells.len()))
}

fn representative_zero_cells(ctx: &Context) -> Outcome {
    let mut count = 0;
    for (d, cells) in &ctx.cells {
        for (x, members) in expected_zero_cells(d) {
            let i = cells.find_stub(&x).map_err(|e| format!("{d}: {e}"))?;
            ensure(cells.zero_cell(i, i) == set(cells.system(), &members), || format!("{d}: I({x},{x})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} stated zero-cells across {} systems", ctx.cells.len()))
}

fn triples(ctx: &Context) -> Outcome {
    let mut total = 0;
    for (d, cells) in &ctx.cells {
        let mut seen = HashSet::new();
        for w in cells.elements() {
            let t = cells.a2_triple_of(&w).map_err(|e| format!("{d} {w}: {e}"))?;
            ensure(t.core.left_descents() == t.left.right_descents() && t.core.left_descents().len() == 2, || {
                format!("{d} {w}: left gluing")
            })?;
            ensure(t.core.right_descents() == t.right.left_descents() && t.core.right_descents().len() == 2, || {
                format!("{d} {w}: right gluing")
            })?;
            ensure(cells.stub_index(&t.left).is_some() && cells.stub_index(&t.right.inverse()).is_some(), || {
                format!("{d} {w}: outer factors are not stubs")
            })?;
            ensure(t.product().ok() == Some(w.clone()), || format!("{d} {w}: product"))?;
            ensure(seen.insert((t.left.clone(), t.core.clone(), t.right.clone())), || format!("{d}: repeated triple"))?;
        }
        // g is onto W_2 and injective, so every triple comes from exactly one element
        let mut triples = 0;
        for core in cells.elements() {
            let (l, r) = (core.left_descents(), core.right_descents());
            if l.len() == 2 && r.len() == 2 {
                let left = cells.stubs().iter().filter(|x| x.right_descents() == l).count();
                let right = cells.stubs().iter().filter(|y| y.right_descents() == r).count();
                triples += left * right;
            }
        }
        ensure(triples == cells.len(), || format!("{d}: {triples} triples for {} elements", cells.len()))?;
        total += cells.len();
    }
    Ok(format!("{total} elements decomposed and rebuilt"))
}

fn invariance(ctx: &Context) -> Outcome {
    for (d, cells) in &ctx.cells {
        let n = cells.zero_cell_sizes();
        let k = n.len();
        ensure((0..k).all(|i| (0..k).all(|j| n[i][j] == n[j][i])), || format!("{d}: N not symmetric"))?;
        let classes = cells.slide_classes(true);
        for ci in &classes {
            for cj in &classes {
                let values: HashSet<usize> =
                    ci.members.iter().flat_map(|&x| cj.members.iter().map(move |&y| (x, y))).map(|(x, y)| n[x][y]).collect();
                ensure(values.len() == 1, || format!("{d}: N varies over a class pair: {values:?}"))?;
            }
        }
    }
    Ok(format!("{} systems", ctx.cells.len()))
}

fn involutions(ctx: &Context) -> Outcome {
    let (mut count, mut unique) = (0, 0);
    for (d, cells) in &ctx.cells {
        for i in 0..cells.stubs().len() {
            let dx = cells.distinguished_involution(i);
            ensure(dx.inverse() == dx, || format!("{d}: x*x⁻¹ for {} is no involution", cells.stubs()[i]))?;
            let diagonal = cells.zero_cell(i, i);
            ensure(diagonal.contains(&dx), || format!("{d}: x*x⁻¹ outside I(x,x)"))?;
            count += 1;
            if diagonal.iter().filter(|z| z.inverse() == **z).count() == 1 {
                unique += 1;
            }
        }
    }
    Ok(format!("{count} stubs, sole involution of I(x,x) for {unique}"))
}

fn oracle() -> Outcome {
    let slow = std::env::var("A2CELLS_SLOW_OK").is_ok_and(|v| v == "1");
    let mut runs = vec![("A:3", 30), ("B:3", 30), ("A:4", 600), ("H:3", 600)];
    if slow {
        runs.push(("B:4", 3600));
    }
    let mut summary = Vec::new();
    for (d, budget) in runs {
        let start = Instant::now();
        let sys = system(d);
        let report = OracleReport::new(&sys, DEFAULT_BOUND).map_err(|e| format!("{d}: {e}"))?;
        let cells = A2Cells::new(sys).unwrap();
        for check in compare_with_cells(&report, &cells) {
            ensure(check.passed, || format!("{d}: {} {}", check.name, check.detail))?;
        }
        within(start.elapsed(), Duration::from_secs(budget))?;
        summary.push(format!("{d} ({} elements, {:.1?})", report.table.group().len(), start.elapsed()));
    }
    if !slow {
        summary.push("B:4 skipped, set A2CELLS_SLOW_OK=1".into());
    }
    Ok(summary.join(", "))
}

fn star_example() -> Outcome {
    let sys = Arc::new(
        CoxeterSystem::from_matrix(
            vec!["a".into(), "b".into(), "c".into()],
            &[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]],
        )
        .unwrap(),
    );
    let e = |w: &str| el(&sys, w);
    let w = e("abcab");
    let ab = NoncommutingPair::new(&sys, 0, 1).unwrap();
    let bc = NoncommutingPair::new(&sys, 1, 2).unwrap();
    let mut observed = BTreeMap::new();
    observed.insert("right lower {a,b}", right_lower_star(&w, ab));
    observed.insert("right upper {a,b}", right_upper_star(&w, ab));
    observed.insert("simple right {a,b}", simple_right_star(&w, ab).unwrap());
    observed.insert("left upper {b,c}", left_upper_star(&w, bc));
    observed.insert("left lower {b,c}", left_lower_star(&w, bc));
    observed.insert("right lower {b,c}", right_lower_star(&w, bc));
    observed.insert("right upper {b,c}", right_upper_star(&w, bc));
    let mut expected = BTreeMap::new();
    expected.insert("right lower {a,b}", Some(e("abca")));
    expected.insert("right upper {a,b}", None);
    expected.insert("simple right {a,b}", Some(e("abca")));
    expected.insert("left upper {b,c}", Some(e("cbabcb")));
    expected.insert("left lower {b,c}", None);
    expected.insert("right lower {b,c}", Some(e("babc")));
    expected.insert("right upper {b,c}", None);
    for (k, v) in &expected {
        ensure(observed[k] == *v, || format!("{k}: got {:?}", observed[k]))?;
    }
    Ok("all stated outcomes reproduced".into())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("stub counts and closed-form stub lists", Box::new(|_| stub_counts())),
        ("B4 stubs, zero-cell sizes and sets, right cells", Box::new(|_| b4_golden())),
        ("slide class representatives and sizes", Box::new(class_multisets)),
        ("two-sided cell counts and sizes", Box::new(two_sided)),
        ("representative zero-cells", Box::new(representative_zero_cells)),
        ("triple bijection", Box::new(triples)),
        ("zero-cell sizes constant on simple classes, symmetric", Box::new(invariance)),
        ("distinguished involutions", Box::new(involutions)),
        ("oracle agreement", Box::new(|_| oracle())),
        ("star operations on abcab", Box::new(|_| star_example())),
    ];
    let shared = Context::new();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&shared)))
            .unwrap_or_else(|panic| {
                let msg = panic.downcast_ref::<String>().cloned().or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()));
                Err(format!("panicked: {}", msg.unwrap_or_default()))
            });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
