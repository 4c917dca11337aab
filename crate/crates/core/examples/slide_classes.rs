//! Slides between short stubs, the resulting classes, and the two-sided
//! cells they index.
//!
//! `cargo run --example slide_classes -- E:1,3`

use a2cells::cells::slide;
use a2cells::star::NoncommutingPair;
use a2cells::{A2Cells, GroupElement};

fn main() -> a2cells::Result<()> {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "H:4".into());
    let cells = A2Cells::from_descriptor(&descriptor)?;
    let sys = cells.system();

    let first = cells.stubs().iter().find(|x| x.length() == 2).cloned();
    if let Some(x) = first {
        for edge in NoncommutingPair::all(sys) {
            if let Ok(y) = slide(&x, edge) {
                println!("slide {x} along {:?} -> {y}", edge.generators());
            }
        }
    }

    for (mode, simple) in [("simple slides", true), ("all slides", false)] {
        let classes = cells.slide_classes(simple);
        let summary: Vec<String> =
            classes.iter().map(|c| format!("{}: {}", c.representative, c.members.len())).collect();
        println!("{mode}: {}", summary.join(", "));
    }
    for cell in cells.two_sided_cells() {
        let rep: &GroupElement = &cell.class.representative;
        println!("two-sided cell of {rep}: {} right cells, {} elements", cell.class.members.len(), cell.members.len());
    }
    Ok(())
}
