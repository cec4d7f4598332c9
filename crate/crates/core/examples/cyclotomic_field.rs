//! Arithmetic in Q(zeta12): the units w and i, inverses, norms and the Galois
//! action.

use galois_cremona::exactnum::{Cyclo, Field, Ring};

fn main() {
    let w = Cyclo::omega();
    let i = Cyclo::i();
    println!("w = {w}, w^3 = {}, 1 + w + w^2 = {}", w.pow(3), Cyclo::one().add(&w).add(&w.pow(2)));
    println!("i = {i}, i^2 = {}, zeta = {}", i.pow(2), Cyclo::zeta());
    let a = Cyclo::from_ints([2, -1, 0, 3]);
    let inv = a.inv().expect("nonzero");
    println!("a = {a}");
    println!("1/a = {inv}");
    println!("a * (1/a) = {}", a.mul(&inv));
    println!("norm(a) = {}", a.norm());
    for k in [1, 5, 7, 11] {
        println!("sigma_{k}(a) = {}", a.conjugate(k));
    }
}
