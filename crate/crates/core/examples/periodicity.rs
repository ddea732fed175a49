//! Comparing [𝔔ⁿ_d]•1^{e−d} with [𝔔^{n+e−d}_e].
use hitstab::combinat::sharp_modulus;
use hitstab::g0::Analysis;

fn main() {
    let analysis = Analysis::default();
    for (n, d, e) in [(7, 5, 9), (6, 5, 6), (6, 5, 7), (9, 7, 11), (9, 7, 13)] {
        let r = analysis.periodicity_check(n, d, e).unwrap();
        println!(
            "({n},{d},{e}) {:<14} shift {} sharp modulus {}",
            r.status.to_string(),
            e - d,
            sharp_modulus(n - d, 2)
        );
        for row in r.rows.iter().filter(|row| row.transported != row.computed) {
            println!(
                "    L{}: transported {} computed {}",
                row.target.pretty(),
                row.transported,
                row.computed
            );
        }
    }
}
