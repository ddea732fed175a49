//! Composition factors of 𝔔ⁿ_d and the n ≤ 8 table.
use hitstab::g0::{steinberg_reduce, Analysis};

fn main() {
    let analysis = Analysis::default();
    for cell in analysis.reproduce_table(8).expect("table computes") {
        if !cell.class.is_zero() {
            println!(
                "Qa^{}_{} = {}   matches expected: {}",
                cell.n,
                cell.d,
                cell.class,
                cell.matches()
            );
        }
    }
    let q84 = analysis.qa_class(8, 4).unwrap();
    println!("Steinberg form of Qa^8_4: {}", steinberg_reduce(&q84));
}
