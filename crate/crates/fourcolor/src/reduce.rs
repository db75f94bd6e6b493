//! D-reducibility verdicts for configurations.

use std::time::{Duration, Instant};

use crate::config::{free_completion, ring_size, validate_configuration, Configuration};
use crate::kempe::{extendable_colorings, max_consistent_subset_budgeted, Budget, FixedPointError};

#[derive(Clone, Copy, Debug)]
pub struct ReduceOptions {
    /// Largest admissible ring; the fixed point over bigger rings is refused.
    pub ring_cap: usize,
    pub budget: Budget,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { ring_cap: 16, budget: Budget::default() }
    }
}

#[derive(Clone, Debug)]
pub struct ReduceVerdict {
    pub name: String,
    pub ring: usize,
    pub internal: usize,
    pub reducible: bool,
    /// Size of the stabilized consistent remainder (0 iff reducible).
    pub remainder: usize,
    pub rounds: usize,
    pub elapsed: Duration,
}

#[derive(Debug, thiserror::Error)]
pub enum ReduceError {
    #[error("configuration {name} is invalid: {detail}")]
    InvalidConfiguration { name: String, detail: String },
    #[error("configuration {name} has ring {ring}, above the cap {cap}")]
    RingTooLarge { name: String, ring: usize, cap: usize },
    #[error("configuration {name}: {source}")]
    Budget {
        name: String,
        #[source]
        source: FixedPointError,
    },
}

/// Decide D-reducibility: compute the colorings of the completion ring that
/// extend to the completion, and run the maximal-consistent-subset fixed
/// point on the non-extendable remainder. Reducible means the remainder's
/// maximal consistent subset is empty.
pub fn is_d_reducible(k: &Configuration, opts: &ReduceOptions) -> Result<ReduceVerdict, ReduceError> {
    let started = Instant::now();
    let report = validate_configuration(k);
    if !report.is_valid() {
        return Err(ReduceError::InvalidConfiguration {
            name: k.name.clone(),
            detail: format!("{:?}", report.violations),
        });
    }
    let ring = ring_size(k).map_err(|e| ReduceError::InvalidConfiguration {
        name: k.name.clone(),
        detail: e.to_string(),
    })?;
    if ring > opts.ring_cap {
        return Err(ReduceError::RingTooLarge { name: k.name.clone(), ring, cap: opts.ring_cap });
    }
    let s = free_completion(k).map_err(|e| ReduceError::InvalidConfiguration {
        name: k.name.clone(),
        detail: e.to_string(),
    })?;
    let extendable = extendable_colorings(&s.graph, &s.ring);
    let remainder = extendable.complement();
    if remainder.is_empty() {
        return Ok(ReduceVerdict {
            name: k.name.clone(),
            ring,
            internal: k.vertex_count(),
            reducible: true,
            remainder: 0,
            rounds: 0,
            elapsed: started.elapsed(),
        });
    }
    let (fixed, rounds) = max_consistent_subset_budgeted(&remainder, opts.budget)
        .map_err(|source| ReduceError::Budget { name: k.name.clone(), source })?;
    Ok(ReduceVerdict {
        name: k.name.clone(),
        ring,
        internal: k.vertex_count(),
        reducible: fixed.is_empty(),
        remainder: fixed.len(),
        rounds,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::known;
    use crate::kempe::is_consistent;

    #[test]
    fn birkhoff_is_reducible() {
        let v = is_d_reducible(&known::birkhoff(), &ReduceOptions::default()).unwrap();
        assert!(v.reducible);
        assert_eq!(v.remainder, 0);
        assert_eq!(v.ring, 6);
        assert!(v.elapsed.as_secs() < 1);
    }

    #[test]
    fn five_wheel_is_not_reducible_and_oracle_agrees() {
        let k = known::five_wheel_core();
        let v = is_d_reducible(&k, &ReduceOptions::default()).unwrap();
        assert!(!v.reducible);
        assert!(v.remainder > 0);
        // Direct-definition oracle on the surviving remainder.
        let s = crate::config::free_completion(&k).unwrap();
        let remainder = crate::kempe::extendable_colorings(&s.graph, &s.ring).complement();
        let fixed = crate::kempe::max_consistent_subset(&remainder);
        assert!(is_consistent(&fixed));
        assert_eq!(fixed.len(), v.remainder);
    }

    #[test]
    fn five_five_edge_is_not_reducible() {
        let v = is_d_reducible(&known::five_five_edge(), &ReduceOptions::default()).unwrap();
        assert!(!v.reducible);
    }

    #[test]
    fn ring_cap_is_enforced() {
        let k = known::birkhoff();
        let opts = ReduceOptions { ring_cap: 5, ..Default::default() };
        assert!(matches!(is_d_reducible(&k, &opts), Err(ReduceError::RingTooLarge { ring: 6, .. })));
    }
}
