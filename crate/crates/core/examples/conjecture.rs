//! Certified comparison of [Qⁿ/Qⁿ[d−1]] with its transport to degree n+e−d.
use hitstab::g0::Analysis;

fn main() {
    let analysis = Analysis::default();
    for (n, d, e) in [(6, 5, 7), (9, 7, 11), (6, 5, 6), (13, 9, 13)] {
        let r = analysis.conjecture_report(n, d, e, 5).unwrap();
        print!("({n},{d},{e}) {}", r.status);
        if let Some(w) = &r.witness {
            print!(
                "  witness L{}: {} vs {}",
                w.partition.pretty(),
                w.transported,
                w.computed
            );
        }
        println!();
        for note in &r.notes {
            println!("    {note}");
        }
    }
}
