//! Building Coxeter systems from descriptors and from explicit matrices.

use a2cells::system::CoxeterSystem;

fn main() -> a2cells::Result<()> {
    for d in ["A:4", "B:4", "Ctilde:4", "E:1,2", "F:5", "H:3", "I2:5", "I2:7"] {
        let sys = CoxeterSystem::from_descriptor(d)?;
        let class = sys.classify()?;
        println!(
            "{d:<9} rank {}  ring {:?}  a(2)-finite {}  W_2 non-empty {}",
            sys.rank(),
            sys.ring(),
            class.a2_finite,
            class.nontrivially_a2_finite
        );
    }

    // A relabeled B3 handed over as JSON is still recognized by its diagram.
    let custom = CoxeterSystem::from_json(r#"{"labels":["x","y","z"],"matrix":[[1,4,2],[4,1,3],[2,3,1]]}"#)?;
    println!("custom system: family {:?}, edges {:?}", custom.classify()?.family, custom.edges());
    Ok(())
}
