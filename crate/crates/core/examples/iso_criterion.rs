//! When is 𝔔ⁿ_d → Qⁿ_d guaranteed to be an isomorphism?
use hitstab::g0::Analysis;

fn main() {
    let analysis = Analysis::default();
    for (n, d) in [(7, 3), (9, 7), (8, 4), (12, 9)] {
        let r = analysis.iso_criterion(n, d).unwrap();
        println!("({n},{d}) {}", r.verdict);
        for w in r.witnesses.iter().take(3) {
            println!(
                "    L{} in Qa^{}_{} may meet L{}",
                w.lambda.pretty(),
                w.m,
                w.e,
                w.against.pretty()
            );
        }
    }
}
