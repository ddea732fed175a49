//! Dimensions of the hit quotient Qⁿ(F₂^k) and of its filtration pieces.
use hitstab::steenrod::{dimension_rows, hit_quotient};

fn main() {
    for (n, k) in [(3, 2), (7, 3), (10, 3)] {
        println!("dim Q^{n}(F_2^{k}) = {}", hit_quotient(n, k).dim);
        for row in dimension_rows(n, k).iter().filter(|r| r.dim_qd > 0) {
            println!(
                "  d={} Qa={} Q_d={} K={}",
                row.d, row.dim_qa, row.dim_qd, row.dim_k
            );
        }
    }
}
