//! Gcd, squarefree decomposition, resultants and roots in Q(zeta12).

use galois_cremona::exactnum::{Cyclo, Ring};
use galois_cremona::polykernel::{resultant, roots_in_field, UniPoly};

fn main() {
    let x = UniPoly::<Cyclo>::x();
    let w = Cyclo::omega();
    // (x - w)^2 (x + 1/2) (x^2 + 2x + 3)
    let f = UniPoly::linear_root(&w)
        .pow(2)
        .mul(&UniPoly::linear_root(&Cyclo::frac(-1, 2)))
        .mul(&x.pow(2).add(&x.scale(&Cyclo::from_int(2))).add(&UniPoly::constant(Cyclo::from_int(3))));
    println!("f = {}", f.display_in("x"));
    println!("gcd(f, f') = {}", f.gcd(&f.derivative()).display_in("x"));
    let (unit, parts) = f.squarefree_decomposition();
    println!("squarefree: unit {unit}");
    for (p, k) in &parts {
        println!("  ({})^{k}", p.display_in("x"));
    }
    let roots = roots_in_field(&f);
    for (r, m) in &roots.roots {
        println!("root {r} with multiplicity {m}");
    }
    println!("unsplit: {}", roots.residual);
    let g = x.pow(2).sub(&UniPoly::constant(w.clone()));
    println!("Res(f, x^2 - w) = {}", resultant(&f, &g));
}
