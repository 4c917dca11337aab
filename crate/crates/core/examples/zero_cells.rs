//! Zero-cells: intersections of a right cell with a left cell, their sizes,
//! distinguished involutions, and moving a zero-cell between stubs.

use a2cells::A2Cells;

fn main() -> a2cells::Result<()> {
    let cells = A2Cells::from_descriptor("B:4")?;
    let names: Vec<String> = cells.stubs().iter().map(|x| x.to_string()).collect();

    println!("sizes N(x, y):");
    for (row, name) in cells.zero_cell_sizes().iter().zip(&names) {
        println!("  {name:>8}  {row:?}");
    }

    let x = cells.find_stub("1,3")?;
    let y = cells.find_stub("2,4")?;
    let show = |set: &[a2cells::GroupElement]| set.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ");
    let i = cells.zero_cell(x, x);
    println!("I(13, 13) = {{{}}}", show(&i));
    println!("I(24, 24) = {{{}}}", show(&cells.zero_cell(y, y)));
    println!("x·x⁻¹ for 13: {}", cells.distinguished_involution(x));

    // 13 and 213 share their first layer, so I(13, 13) moves to I(213, 13).
    let to = cells.find_stub("2,1,3")?;
    let moved = cells.transport_zero_cell(&i, &cells.stubs()[x], &cells.stubs()[to])?;
    println!("transported: {{{}}}  equals I(213, 13): {}", show(&moved), moved == cells.zero_cell(to, x));
    Ok(())
}
