use std::sync::OnceLock;

use a2cells::cells::A2Cells;
use a2cells::star::{right_lower_star, right_upper_star, NoncommutingPair};
use proptest::prelude::*;

const SYSTEMS: [&str; 6] = ["A:5", "B:5", "Ctilde:4", "E:1,2", "F:5", "H:4"];

fn cells(i: usize) -> &'static A2Cells {
    static CACHE: OnceLock<Vec<A2Cells>> = OnceLock::new();
    &CACHE.get_or_init(|| SYSTEMS.iter().map(|d| A2Cells::from_descriptor(d).unwrap()).collect())[i]
}

fn pick(sys: usize, seed: usize) -> (&'static A2Cells, a2cells::GroupElement) {
    let c = cells(sys);
    let w = c.elements()[seed % c.len()].clone();
    (c, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn triple_round_trip(sys in 0..SYSTEMS.len(), seed in any::<usize>()) {
        let (c, w) = pick(sys, seed);
        let t = c.a2_triple_of(&w).unwrap();
        prop_assert_eq!(t.product().unwrap(), w);
    }

    #[test]
    fn inverse_swaps_left_and_right_cells(sys in 0..SYSTEMS.len(), seed in any::<usize>()) {
        let (c, w) = pick(sys, seed);
        let inv = w.inverse();
        prop_assert!(c.contains(&inv));
        let (x, y) = (c.cell_index(&w).unwrap(), c.cell_index(&inv).unwrap());
        prop_assert!(c.zero_cell(x, y).contains(&w));
        prop_assert!(c.zero_cell(y, x).contains(&inv));
    }

    #[test]
    fn right_star_operations_keep_the_right_cell(sys in 0..SYSTEMS.len(), seed in any::<usize>()) {
        let (c, w) = pick(sys, seed);
        let home = c.cell_index(&w).unwrap();
        for pair in NoncommutingPair::all(c.system()) {
            for image in [right_upper_star(&w, pair), right_lower_star(&w, pair)].into_iter().flatten() {
                prop_assert_eq!(c.cell_index(&image), Some(home));
            }
        }
    }

    #[test]
    fn stub_decomposition_is_a_weak_order_factorisation(sys in 0..SYSTEMS.len(), seed in any::<usize>()) {
        let (c, w) = pick(sys, seed);
        let (x, rest) = c.stub_decomposition(&w).unwrap();
        prop_assert!(c.stub_index(&x).is_some());
        prop_assert_eq!(x.length() + rest.length(), w.length());
        prop_assert_eq!(x.multiply(&rest).unwrap(), w);
    }
}
