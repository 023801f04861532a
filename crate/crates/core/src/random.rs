//! Seeded samplers producing exact values for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::Blade;
use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::multivector::Multivector;
use crate::scalars::ExactQuaternion;
use crate::signature::Signature;

/// The generator every sampler in this crate draws from.
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for task `index` under a base seed.
pub fn stream(seed: u64, index: u64) -> SampleRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

/// Dyadic with numerator in `-8..=8` and denominator up to `4`.
pub fn dyadic<R: Rng>(rng: &mut R) -> Dyadic {
    Dyadic::new(rng.gen_range(-8i64..=8), rng.gen_range(0u32..=2))
}

/// Sparse multivector with up to `max_terms` random terms.
pub fn multivector<R: Rng>(rng: &mut R, sig: Signature, max_terms: usize) -> Multivector {
    let count = rng.gen_range(0..=max_terms);
    let top = 1u32 << sig.n();
    let terms: Vec<(Blade, Dyadic)> =
        (0..count).map(|_| (Blade::from_mask(rng.gen_range(0..top)), dyadic(rng))).collect();
    Multivector::from_terms(sig, terms).expect("masks are below 2^n")
}

/// Quaternion with random dyadic components.
pub fn quaternion<R: Rng>(rng: &mut R) -> ExactQuaternion {
    ExactQuaternion::new(dyadic(rng), dyadic(rng), dyadic(rng), dyadic(rng))
}

fn signed<R: Rng>(rng: &mut R, x: Dyadic) -> Dyadic {
    if rng.gen_bool(0.5) {
        -x
    } else {
        x
    }
}

/// A 1-vector `v` with `v² = ±1` and dyadic coordinates.
///
/// Draws from three families: `±e_i`; `(±1/2)` on four axes of equal square;
/// and `5/4 e_a ± 3/4 e_b` (or the swap) on axes of opposite square.
/// Returns `None` only when `n = 0`.
pub fn unit_vector<R: Rng>(rng: &mut R, sig: Signature) -> Option<Multivector> {
    let n = sig.n();
    if n == 0 {
        return None;
    }
    let pos: Vec<usize> = (1..=sig.p()).collect();
    let neg: Vec<usize> = (sig.p() + 1..=n).collect();
    let mut families = vec![0u8];
    if pos.len() >= 4 || neg.len() >= 4 {
        families.push(1);
    }
    if !pos.is_empty() && !neg.is_empty() {
        families.push(2);
    }
    let terms: Vec<(Blade, Dyadic)> = match *families.choose(rng).expect("non-empty") {
        0 => {
            let i = rng.gen_range(1..=n);
            vec![(Blade::generator(i).expect("in range"), signed(rng, Dyadic::from_int(1)))]
        }
        1 => {
            let pool = match (pos.len() >= 4, neg.len() >= 4) {
                (true, true) => {
                    if rng.gen_bool(0.5) {
                        &pos
                    } else {
                        &neg
                    }
                }
                (true, false) => &pos,
                _ => &neg,
            };
            pool.choose_multiple(rng, 4)
                .map(|&i| (Blade::generator(i).expect("in range"), signed(rng, Dyadic::half_pow(1))))
                .collect()
        }
        _ => {
            let a = *pos.choose(rng).expect("non-empty");
            let b = *neg.choose(rng).expect("non-empty");
            let (big, small) = (Dyadic::new(5, 2), Dyadic::new(3, 2));
            let (ca, cb) = if rng.gen_bool(0.5) { (big, small) } else { (small, big) };
            vec![
                (Blade::generator(a).expect("in range"), signed(rng, ca)),
                (Blade::generator(b).expect("in range"), signed(rng, cb)),
            ]
        }
    };
    Some(Multivector::from_terms(sig, terms).expect("indices are in range"))
}

/// A 1-vector with coefficients in `{-1, 0, 1}` whose square is `±2^e`, `e >= 0`.
///
/// Such vectors are invertible with dyadic inverse but need not have unit norm.
pub fn invertible_vector<R: Rng>(rng: &mut R, sig: Signature) -> Option<Multivector> {
    let n = sig.n();
    if n == 0 {
        return None;
    }
    loop {
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-1i64..=1)).collect();
        let q: i64 = coeffs.iter().enumerate().map(|(i, c)| if i < sig.p() { c * c } else { -c * c }).sum();
        let m = q.unsigned_abs();
        if m != 0 && m.is_power_of_two() {
            let terms = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (Blade::generator(i + 1).expect("in range"), Dyadic::from_int(*c)));
            return Some(Multivector::from_terms(sig, terms).expect("in range"));
        }
    }
}

/// Product of `count` unit vectors, returned with its factors.
pub fn versor<R: Rng>(rng: &mut R, sig: Signature, count: usize) -> Result<(Multivector, Vec<Multivector>)> {
    let mut factors = Vec::with_capacity(count);
    let mut acc = Multivector::one(sig);
    for _ in 0..count {
        if let Some(v) = unit_vector(rng, sig) {
            acc = acc.try_mul(&v)?;
            factors.push(v);
        }
    }
    Ok((acc, factors))
}

/// Product of `count` invertible vectors.
pub fn clifford_element<R: Rng>(rng: &mut R, sig: Signature, count: usize) -> Result<Multivector> {
    let mut acc = Multivector::one(sig);
    for _ in 0..count {
        if let Some(v) = invertible_vector(rng, sig) {
            acc = acc.try_mul(&v)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::quadratic_norm;

    #[test]
    fn unit_vectors_have_unit_norm() {
        let mut r = rng(3);
        for (p, q) in [(3, 0), (0, 4), (2, 2), (5, 3), (1, 0)] {
            let s = Signature::new(p, q).unwrap();
            for _ in 0..50 {
                let v = unit_vector(&mut r, s).unwrap();
                let n = quadratic_norm(&v).as_scalar().unwrap();
                assert_eq!(n.abs(), Dyadic::from_int(1), "{v}");
            }
        }
        assert!(unit_vector(&mut r, Signature::new(0, 0).unwrap()).is_none());
    }

    #[test]
    fn invertible_vectors_square_to_powers_of_two() {
        let mut r = rng(9);
        let s = Signature::new(2, 3).unwrap();
        for _ in 0..50 {
            let v = invertible_vector(&mut r, s).unwrap();
            let sq = v.try_mul(&v).unwrap().as_scalar().unwrap();
            let m = sq.abs().to_i64().unwrap() as u64;
            assert!(m.is_power_of_two());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let s = Signature::new(1, 3).unwrap();
        let a = multivector(&mut rng(5), s, 6);
        let b = multivector(&mut rng(5), s, 6);
        assert_eq!(a, b);
        let x = unit_vector(&mut stream(5, 1), s);
        let y = unit_vector(&mut stream(5, 1), s);
        assert_eq!(x, y);
    }
}
