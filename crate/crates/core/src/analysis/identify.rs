use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{weight_decomposition, HModule};

use super::envelope::same_semisimplification;

pub const UNLISTED: &str = "unlisted";

/// Matches an irreducible module against labeled candidates by dimension,
/// weight multiset and trace vector.
pub fn identify_factor<F: Field>(m: &HModule<F>, candidates: &[HModule<F>]) -> Result<String> {
    let weights = weight_decomposition(m)?.multiset();
    let mut hits: Vec<&str> = Vec::new();
    for c in candidates {
        if c.params() != m.params() || c.dim() != m.dim() {
            continue;
        }
        if weight_decomposition(c)?.multiset() != weights {
            continue;
        }
        if same_semisimplification(m, &[c])? {
            hits.push(c.label());
        }
    }
    match hits.as_slice() {
        [] => Ok(UNLISTED.to_string()),
        [one] => Ok(one.to_string()),
        many => Err(Error::Ambiguous(format!(
            "{} matches {}",
            m.label(),
            many.join(", ")
        ))),
    }
}
