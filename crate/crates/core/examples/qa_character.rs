//! Characters of the associated-graded indecomposables 𝔔ⁿ_d.
use hitstab::steenrod::{qa_character, qa_dim};

fn main() {
    for (n, d) in [(3, 2), (7, 3), (8, 4)] {
        println!("ch Qa^{n}_{d} = {}", qa_character(n, d));
        println!("  dim at k=3: {}", qa_dim(n, d, 3));
    }
}
