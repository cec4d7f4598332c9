//! Singular points, flexes and tangent lines of the cuspidal quartics.

use galois_cremona::plane::{curve_a, curve_a_prime, curve_b, ProjPoint};

fn main() -> galois_cremona::Result<()> {
    for c in [curve_a(), curve_a_prime(), curve_b()] {
        println!("{c}");
        for (p, m) in c.singular_points()? {
            println!("  singular point {p} of multiplicity {m}");
        }
    }
    let a = curve_a();
    let printed = ProjPoint::from_ints([8, 16, 3]);
    println!("(8 : 16 : 3) on curve a: {}", a.contains(&printed));
    for q in [ProjPoint::from_ints([0, 1, 0]), ProjPoint::from_ints([8, 16, 1])] {
        let tangent = a.tangent_line_at(&q)?;
        let meet = a.line_multiplicities(&tangent)?;
        let pts: Vec<String> = meet.points.iter().map(|(p, m)| format!("{p} x{m}")).collect();
        println!("tangent at {q}: {tangent} meets at {}", pts.join(", "));
    }
    Ok(())
}
