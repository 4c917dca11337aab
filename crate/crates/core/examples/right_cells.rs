//! Right cells as closures under right upper star operations, and the
//! factorisation of an element through its stub.

use a2cells::cells::right_cell_closure;
use a2cells::{A2Cells, GroupElement};

fn main() -> a2cells::Result<()> {
    let cells = A2Cells::from_descriptor("B:4")?;
    for (x, cell) in cells.stubs().iter().zip(cells.right_cells()) {
        println!("R({x}): {} elements", cell.len());
    }
    println!("|W_2| = {}", cells.len());

    let x = &cells.stubs()[0];
    assert_eq!(right_cell_closure(x).len(), cells.right_cell(0).len());

    let w = GroupElement::parse(cells.system(), "1,3,2,4,1,3,2")?;
    let (stub, rest) = cells.stub_decomposition(&w)?;
    println!("{w} = {stub} · {rest}, right cell {:?}", cells.cell_index(&w));
    Ok(())
}
