//! Every a-value 2 element splits as stub · core · inverse stub, glued along
//! matching descent sets.

use a2cells::cells::glued_product;
use a2cells::{A2Cells, GroupElement};

fn main() -> a2cells::Result<()> {
    let cells = A2Cells::from_descriptor("B:4")?;
    let w = GroupElement::parse(cells.system(), "1,3,2,4,1,3,2")?;
    let t = cells.a2_triple_of(&w)?;
    println!("{w} = {} ∘ {} ∘ {}", t.left, t.core, t.right);
    assert_eq!(t.product()?, w);

    let left = glued_product(&t.left, &t.core)?;
    println!("left half {left}, glued back to {}", glued_product(&left, &t.right)?);

    let cores = cells.elements().into_iter().filter(|z| z.left_descents().len() == 2 && z.right_descents().len() == 2);
    println!("cores of B4: {}", cores.count());
    Ok(())
}
