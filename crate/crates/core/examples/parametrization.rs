//! Rational parametrizations: checks, inverse images, flexes and projections.

use galois_cremona::param::{builtin, BUILTIN_NAMES};
use galois_cremona::plane::ProjPoint;
use galois_cremona::polykernel::P1Point;

fn main() -> galois_cremona::Result<()> {
    for name in BUILTIN_NAMES {
        let p = builtin(name).expect("built-in");
        println!("{p}");
        println!("  check: {:?}", p.verify());
        let u = P1Point::from_int(2);
        let pt = p.eval(&u)?;
        println!("  phi{u} = {pt}, back to {:?}", p.param_of_point(&pt)?);
        let flexes = p.flex_parameters()?;
        for f in &flexes.flexes {
            println!("  flex {} at parameter {} of order {}, tangent {}", f.point, f.parameter, f.order, f.tangent);
        }
        let proj = p.pullback_projection(&ProjPoint::from_ints([1, 0, 0]))?;
        println!("  projection from (1 : 0 : 0): {}", proj.cover);
    }
    Ok(())
}
