//! Independent oracles for checking `cliffgen`.
//!
//! Nothing here calls the library's product, classification or octonion code.

use std::collections::BTreeMap;

use cliffgen::{Blade, Dyadic, Multivector, Signature};
use num_traits::Zero;

/// Rewrites a word of generator indices into ascending order by adjacent swaps
/// and cancels equal neighbours with their square. Returns the sign (or 0) and
/// the remaining ascending indices.
pub fn rewrite_word(sig: Signature, mut word: Vec<usize>) -> (i64, Vec<usize>) {
    let mut sign = 1i64;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                let square = if word[i] <= sig.p() { 1 } else { -1 };
                sign *= square;
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            return (sign, word);
        }
    }
}

/// Terms of a multivector as explicit index lists.
pub fn index_terms(x: &Multivector) -> Vec<(Vec<usize>, Dyadic)> {
    x.terms()
        .map(|(b, c)| {
            let idx: Vec<usize> = (0..32).filter(|k| b.mask() >> k & 1 == 1).map(|k| k + 1).collect();
            (idx, c.clone())
        })
        .collect()
}

/// Geometric product by word rewriting, term by term.
pub fn naive_product(sig: Signature, a: &Multivector, b: &Multivector) -> Multivector {
    let mut acc: BTreeMap<Vec<usize>, Dyadic> = BTreeMap::new();
    for (wa, ca) in index_terms(a) {
        for (wb, cb) in index_terms(b) {
            let word: Vec<usize> = wa.iter().chain(wb.iter()).copied().collect();
            let (sign, rest) = rewrite_word(sig, word);
            let c = &(&ca * &cb) * &Dyadic::from_int(sign);
            *acc.entry(rest).or_insert_with(Dyadic::zero) += &c;
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (Blade::from_indices(&w).expect("valid indices"), c));
    Multivector::from_terms(sig, terms).expect("valid terms")
}

/// Ring label and matrix size from the residue of `q - p` mod 8, read off
/// the standard periodicity table.
pub fn expected_class(sig: Signature) -> (&'static str, usize) {
    let n = sig.n() as u32;
    let r = (sig.q() as i64 - sig.p() as i64).rem_euclid(8);
    match r {
        0 | 6 => ("R", 1 << (n / 2)),
        1 | 5 => ("C", 1 << ((n - 1) / 2)),
        2 | 4 => ("H", 1 << ((n - 2) / 2)),
        3 => ("H+H", 1 << ((n - 3) / 2)),
        _ => ("R+R", 1 << ((n - 1) / 2)),
    }
}

/// Octonion norm straight from the components: all plus for the division
/// algebra, four plus and four minus for the split form.
pub fn octonion_norm(c: &[Dyadic; 8], split: bool) -> Dyadic {
    c.iter().enumerate().fold(Dyadic::zero(), |acc, (m, x)| {
        let sq = x * x;
        if split && m >= 4 {
            &acc - &sq
        } else {
            &acc + &sq
        }
    })
}

/// Quaternion product from the Hamilton rules written out in components.
pub fn hamilton(x: [Dyadic; 4], y: [Dyadic; 4]) -> [Dyadic; 4] {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    let m = |u: &Dyadic, v: &Dyadic| u * v;
    [
        &(&(&m(&a1, &a2) - &m(&b1, &b2)) - &m(&c1, &c2)) - &m(&d1, &d2),
        &(&(&m(&a1, &b2) + &m(&b1, &a2)) + &m(&c1, &d2)) - &m(&d1, &c2),
        &(&(&m(&a1, &c2) - &m(&b1, &d2)) + &m(&c1, &a2)) + &m(&d1, &b2),
        &(&(&m(&a1, &d2) + &m(&b1, &c2)) - &m(&c1, &b2)) + &m(&d1, &a2),
    ]
}

#[cfg(test)]
mod properties;
