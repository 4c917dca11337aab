//! Heaps of fully commutative elements: width, Cartier–Foata layers, and
//! Graphviz output.
//!
//! `cargo run --example heaps | dot -Tsvg > heap.svg` renders the last heap.

use std::sync::Arc;

use a2cells::heap::{cartier_foata, fc_a_classify, heap_of, is_fc};
use a2cells::{CoxeterSystem, GroupElement};

fn main() -> a2cells::Result<()> {
    let sys = Arc::new(CoxeterSystem::from_descriptor("B:4")?);
    for word in ["1,3", "1,2,1,3", "1,2,1,2", "3,2,1,2,4,3"] {
        let w = GroupElement::parse(&sys, word)?;
        if !is_fc(&w) {
            eprintln!("{word}: not fully commutative");
            continue;
        }
        let cf = cartier_foata(&w)?;
        let layers: Vec<String> = cf.layers.iter().rev().map(|l| sys.format_word(l)).collect();
        eprintln!(
            "{word}: width {}  layers {}  class {:?}",
            heap_of(&w).width(),
            layers.join(" | "),
            fc_a_classify(&w)?
        );
    }
    let w = GroupElement::parse(&sys, "3,2,1,2,4,3")?;
    print!("{}", heap_of(&w).to_dot(&sys));
    Ok(())
}
