//! Group elements: exact matrices with canonical reduced words.

use std::sync::Arc;

use a2cells::element::is_reduced;
use a2cells::{CoxeterSystem, GroupElement};

fn main() -> a2cells::Result<()> {
    let sys = Arc::new(CoxeterSystem::from_descriptor("H:3")?);
    let w = GroupElement::parse(&sys, "1,2,1,2,1")?;
    let v = GroupElement::parse(&sys, "2,1,2,1,2")?;
    println!("12121 = 21212 in H3: {}", w == v);
    println!("canonical word {}  length {}", w.to_word_string(), w.length());
    println!(
        "left descents {{{}}}  right descents {{{}}}",
        sys.format_word(&w.left_descents()),
        sys.format_word(&w.right_descents())
    );

    let x = GroupElement::parse(&sys, "1,3")?;
    let y = x.multiply(&GroupElement::parse(&sys, "2")?)?;
    println!("13 · 2 = {}  and 13 <= 132 in right weak order: {}", y, x.weak_leq_right(&y)?);
    println!("inverse of {} is {}", y, y.inverse());

    let word = sys.parse_word("1,2,2,3")?;
    println!("1223 reduced: {}", is_reduced(&sys, &word)?);
    Ok(())
}
