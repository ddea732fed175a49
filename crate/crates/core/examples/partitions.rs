//! Partitions, dominance, Steinberg decomposition and ω-sequences.
use hitstab::combinat::{enumerate_omega, enumerate_partitions, stability, Partition};
use hitstab::g0::SteinbergProduct;

fn main() {
    for lambda in enumerate_partitions(4, 0) {
        let product = SteinbergProduct::new(lambda.p_adic_decompose(2));
        println!(
            "{:<10} restricted={:<5} L = {}",
            lambda.pretty(),
            lambda.is_p_restricted(2),
            product
        );
    }
    let a: Partition = "2,2".parse().unwrap();
    let b: Partition = "3,1".parse().unwrap();
    println!("(2,2) ⊴ (3,1): {}", a.dominated_by(&b));
    let omegas: Vec<String> = enumerate_omega(4, 8, 2)
        .iter()
        .map(|w| w.to_string())
        .collect();
    println!("Seq_4(8) = {}", omegas.join(" "));
    println!(
        "stability(d=5, t=1, e=7): {:?}",
        stability(5, 1, 7, 2).unwrap()
    );
}
