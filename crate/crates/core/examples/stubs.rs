//! Enumerating left stubs and comparing them with the closed-form lists.
//!
//! `cargo run --example stubs -- F:6`

use std::sync::Arc;

use a2cells::cells::{closed_form_stubs, enumerate_stubs, is_left_stub, sort_elements};
use a2cells::heap::cartier_foata;
use a2cells::CoxeterSystem;

fn main() -> a2cells::Result<()> {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "B:5".into());
    let sys = Arc::new(CoxeterSystem::from_descriptor(&descriptor)?);
    let stubs = enumerate_stubs(&sys)?;
    let mut listed = closed_form_stubs(&sys)?;
    sort_elements(&mut listed);

    let mut by_layers = [0usize; 3];
    for x in &stubs {
        let layers = cartier_foata(x)?.layers.len();
        by_layers[layers.min(3) - 1] += 1;
        assert!(is_left_stub(x)?);
    }
    println!("{descriptor}: {} stubs ({} short, {} medium, {} long)", stubs.len(), by_layers[0], by_layers[1], by_layers[2]);
    println!("closed form agrees: {}", listed == stubs);
    for x in stubs.iter().take(12) {
        println!("  {x}");
    }
    Ok(())
}
