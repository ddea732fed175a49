//! Rank, kernel and quotient dimension of a small matrix over F₂.
use hitstab::gf2::{quotient_dims, BitMatrix};

fn main() {
    let m = BitMatrix::from_dense(&[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 1, 0]]);
    println!("rank = {}", m.rank());
    println!("kernel basis size = {}", m.kernel_basis().len());
    let q = quotient_dims(4, &m).expect("rows have width 4");
    println!("F_2^4 / rowspace: {q:?}");
}
