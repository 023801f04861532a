//! Batch execution across signatures and seeded samples.
//!
//! With the `parallel` feature, [`Exec::Parallel`] spreads work over the rayon
//! pool. Without it, every mode runs sequentially. Results always come back in
//! input order, so output does not depend on the mode.

use crate::group::{self, CoverSample, CrosscheckReport, DoubleCoverReport, HomomorphismReport};
use crate::error::Result;
use crate::signature::Signature;
use crate::verify::{verify_signature, VerifyReport};

/// How a batch is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Maps `f` over `items`, keeping input order.
pub fn map_ordered<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Every signature with `p + q <= max_n`, ordered by `n` then `p`.
pub fn signatures_up_to(max_n: usize) -> Result<Vec<Signature>> {
    Signature::all_up_to(max_n)
}

/// Verifies every signature in `sigs`.
pub fn verify_all(sigs: &[Signature], exec: Exec) -> Vec<VerifyReport> {
    map_ordered(exec, sigs, |&s| verify_signature(s))
}

/// [`group::double_cover_check`] with samples spread over `exec`.
///
/// Sample `i` draws from stream `i` of `seed`, so results match the sequential run.
pub fn double_cover(sig: Signature, samples: usize, seed: u64, exec: Exec) -> DoubleCoverReport {
    let idx: Vec<u64> = (0..samples as u64).collect();
    let outcomes: Vec<CoverSample> = map_ordered(exec, &idx, |&i| group::cover_sample_check(sig, seed, i));
    group::cover_report(sig, &outcomes)
}

/// [`group::homomorphism_check`] with pairs spread over `exec`.
pub fn homomorphism(sig: Signature, pairs: usize, seed: u64, exec: Exec) -> HomomorphismReport {
    let idx: Vec<u64> = (0..pairs as u64).collect();
    let outcomes = map_ordered(exec, &idx, |&i| group::homomorphism_pair(sig, seed, i));
    group::homomorphism_report(sig, &outcomes)
}

/// Runs [`group::theorem_crosscheck`] for several signatures.
pub fn crosscheck_all(sigs: &[Signature], samples: usize, seed: u64, exec: Exec) -> Vec<Result<CrosscheckReport>> {
    map_ordered(exec, sigs, |&s| group::theorem_crosscheck(s, samples, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let s = Signature::new(0, 3).unwrap();
        let a = double_cover(s, 16, 4, Exec::Sequential);
        let b = double_cover(s, 16, 4, Exec::Parallel);
        assert_eq!(a, b);
        assert_eq!(a, group::double_cover_check(s, 16, 4));
        let h1 = homomorphism(s, 8, 2, Exec::Sequential);
        let h2 = homomorphism(s, 8, 2, Exec::Parallel);
        assert_eq!(h1, h2);
    }

    #[test]
    fn order_is_kept() {
        let sigs = signatures_up_to(3).unwrap();
        let reports = verify_all(&sigs, Exec::Parallel);
        let got: Vec<Signature> = reports.iter().map(|r| r.signature).collect();
        assert_eq!(got, sigs);
        assert!(reports.iter().all(|r| r.error.is_none() && r.checks[0].passed));
    }
}
