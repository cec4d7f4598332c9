//! Certify Galois points from the ramification of the projection, and compare
//! the Wronskian test with an explicit search for deck transformations.

use galois_cremona::galoispoints::{certify_galois_point, GaloisOutcome};
use galois_cremona::param::{param_a, param_a_prime, param_b};
use galois_cremona::plane::ProjPoint;

fn main() -> galois_cremona::Result<()> {
    let cases = [
        (param_a_prime(), [1, 0, 0]),
        (param_a(), [1, 1, 0]),
        (param_a(), [8, -16, 3]),
        (param_a(), [1, 2, 3]),
        (param_b(), [0, 1, 0]),
        (param_b(), [1, 0, 0]),
    ];
    for (p, c) in cases {
        let point = ProjPoint::from_ints(c);
        match certify_galois_point(&p, &point)? {
            GaloisOutcome::Certified(cert) => {
                println!("curve {}: {cert}", p.name());
                let deck: Vec<String> = cert.deck.iter().map(|m| m.to_string()).collect();
                println!("  deck group {}", deck.join(", "));
                if cert.cover.degree() == 3 {
                    println!("  explicit search: {:?}", cert.cover.brute_force_deck_deg3());
                }
            }
            GaloisOutcome::Refuted(r) => {
                println!("curve {}: {point} is not Galois: {}", p.name(), r.reason);
                println!("  cover {}, wronskian {}", r.cover, r.wronskian);
            }
        }
    }
    Ok(())
}
