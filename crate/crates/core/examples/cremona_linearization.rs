//! The Cremona map sigma1 preserves (X + Y)^3 Z - X^3 Y, lifts a deck
//! transformation, and becomes linear after conjugation by P.

use galois_cremona::birational::{
    compose_chain, cremona_p, cremona_p_inv, ffmatrix_conjugate, fiber_conjugator, sigma1, sigma1_fiber_matrix,
    sigma3,
};
use galois_cremona::galoispoints::{certify_galois_point, verify_lift};
use galois_cremona::param::{param_a_prime, param_b};
use galois_cremona::plane::ProjPoint;

fn main() -> galois_cremona::Result<()> {
    let s1 = sigma1();
    let p = param_a_prime();
    println!("sigma1 = {s1}");
    println!("F o sigma1 = ({}) * F", s1.preserves_curve(p.curve()).expect("preserved"));
    let cube = compose_chain(&[&s1, &s1, &s1])?;
    println!("sigma1^3: formal degree {}, reduces to {}", cube.formal_degree, cube.map);
    let cert = certify_galois_point(&p, &ProjPoint::from_ints([1, 0, 0]))?;
    let lift = verify_lift(&s1, &p, cert.certificate().expect("Galois"))?;
    println!("restriction {:?}, in deck group: {}", lift.restriction, lift.in_deck_group);

    let c = s1.conjugate_report(&cremona_p(), &cremona_p_inv())?;
    println!("P^-1 sigma1 P: formal degree {}, removed {}", c.formal_degree, c.removed);
    println!("  reduces to {}", c.map);
    let m = ffmatrix_conjugate(&sigma1_fiber_matrix(), &fiber_conjugator())?;
    println!("fiber matrices: P^-1 M P = {m}");

    let s3 = sigma3();
    let b = param_b();
    println!("sigma3 = {s3}, F o sigma3 = ({}) * F", s3.preserves_curve(b.curve()).expect("preserved"));
    println!("sigma3 restricted to curve b: {}", s3.restrict_to_curve(&b)?.mobius);
    Ok(())
}
