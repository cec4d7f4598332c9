//! Claim registry, expression parser and report writer.

pub mod claims;
pub mod parser;
pub mod report;

pub use claims::{load_registry, registry, Claim, ClaimSpec};
pub use parser::{parse_ffmatrix, parse_map, parse_mobius, parse_point, parse_poly, parse_scalar};
pub use report::{ClaimResult, Expectation, Report, Status, Summary};

use crate::error::{Error, Result};

pub const CURVES: [&str; 3] = ["a", "a-prime", "b"];

fn selects(filter: &str, id: &str) -> bool {
    if filter.eq_ignore_ascii_case("ALL") {
        return true;
    }
    match filter.strip_suffix('*') {
        Some(prefix) => id.starts_with(prefix),
        None => id == filter,
    }
}

/// Runs the claims whose id matches `filter` (an id, `ALL`, or a prefix
/// ending in `*`), optionally restricted to claims about one builtin curve.
pub fn run_claims(filter: &str, curve: Option<&str>) -> Result<Report> {
    if let Some(c) = curve {
        if !CURVES.contains(&c) {
            return Err(Error::Unsupported(format!("unknown curve `{c}`")));
        }
    }
    let claims = load_registry()?;
    let selected: Vec<&Claim> = claims
        .iter()
        .filter(|c| selects(filter, c.spec.id))
        .filter(|c| curve.is_none_or(|k| c.spec.curves.contains(&k)))
        .collect();
    if selected.is_empty() {
        return Err(Error::UnknownClaim(filter.to_string()));
    }
    let results = selected
        .iter()
        .map(|c| c.spec.run(&c.inputs))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert!(selects("ALL", "B2"));
        assert!(selects("A*", "A10"));
        assert!(!selects("A1", "A10"));
        assert!(matches!(run_claims("Z9", None), Err(Error::UnknownClaim(_))));
        assert!(matches!(run_claims("A1", Some("b")), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn single_claim() {
        let r = run_claims("A9", None).unwrap();
        assert_eq!(r.claims.len(), 1);
        assert_eq!(r.claims[0].status, Status::Verified);
        assert!(r.all_as_expected());
    }
}
