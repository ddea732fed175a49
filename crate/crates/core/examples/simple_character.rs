//! Characters and dimensions of simple functors L_λ.
use hitstab::combinat::Partition;
use hitstab::functor_eval::SimpleCharacters;

fn main() {
    let simples = SimpleCharacters::new();
    for s in ["2,1", "3,1", "2,2", "2,1,1", "4"] {
        let lambda: Partition = s.parse().unwrap();
        let chi = simples.get(&lambda).expect("character computes");
        let dims: Vec<String> = (1..=4).map(|k| chi.dim_at(k).to_string()).collect();
        println!(
            "L{}: {}   dims k=1..4: {}",
            lambda.pretty(),
            chi,
            dims.join(", ")
        );
    }
}
