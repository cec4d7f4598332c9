//! Run the claim registry in-process and print the text report, or one claim
//! as JSON when an id is given.

use galois_cremona::verifier::run_claims;

fn main() -> galois_cremona::Result<()> {
    match std::env::args().nth(1) {
        Some(id) => print!("{}", run_claims(&id, None)?.to_json()?),
        None => print!("{}", run_claims("ALL", None)?.to_text()),
    }
    Ok(())
}
