//! Enumerate the smooth Galois points of each built-in quartic.

use galois_cremona::galoispoints::smooth_galois_enumerate;
use galois_cremona::param::{builtin, BUILTIN_NAMES};

fn main() -> galois_cremona::Result<()> {
    for name in BUILTIN_NAMES {
        let p = builtin(name).expect("built-in");
        let e = smooth_galois_enumerate(&p)?;
        println!("curve {name}: {}", p.curve());
        println!("  condition in x0: {}", e.condition.display_in("x0"));
        for (u, cert) in &e.points {
            println!("  Galois at {u}: {cert}");
        }
        for (u, why) in &e.discarded {
            println!("  rejected {u}: {why}");
        }
        for r in &e.residual {
            println!("  residual {}: {}", r.factor.display_in("x0"), r.verdict);
        }
        println!("  smooth Galois points: {}", e.delta());
    }
    Ok(())
}
