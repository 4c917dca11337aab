//! Star operations on a small custom system: a path a - b - c with
//! m(a,b) = 3 and m(b,c) = 4, acting on w = abcab.

use std::sync::Arc;

use a2cells::star::{
    left_lower_star, left_upper_star, right_lower_star, right_upper_star, simple_right_star, NoncommutingPair,
};
use a2cells::{CoxeterSystem, GroupElement};

fn show(name: &str, result: Option<GroupElement>) {
    match result {
        Some(v) => println!("{name:<28} {v}"),
        None => println!("{name:<28} undefined"),
    }
}

fn main() -> a2cells::Result<()> {
    let labels = ["a", "b", "c"].map(String::from).to_vec();
    let sys = Arc::new(CoxeterSystem::from_matrix(labels, &[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]])?);
    let w = GroupElement::parse(&sys, "abcab")?;
    let ab = NoncommutingPair::new(&sys, 0, 1)?;
    let bc = NoncommutingPair::new(&sys, 1, 2)?;

    show("right lower star, {a,b}", right_lower_star(&w, ab));
    show("right upper star, {a,b}", right_upper_star(&w, ab));
    show("simple right star, {a,b}", simple_right_star(&w, ab)?);
    show("left upper star, {b,c}", left_upper_star(&w, bc));
    show("left lower star, {b,c}", left_lower_star(&w, bc));
    show("right lower star, {b,c}", right_lower_star(&w, bc));
    show("right upper star, {b,c}", right_upper_star(&w, bc));
    Ok(())
}
