//! Grade involution, reversion, conjugation and the quadratic norm.

use crate::multivector::Multivector;

/// Negates the odd-grade part: an algebra automorphism.
pub fn grade_involution(a: &Multivector) -> Multivector {
    a.map_signs(|b| if b.grade() % 2 == 0 { 1 } else { -1 })
}

/// Reverses factor order in each monomial: an anti-automorphism.
pub fn reversion(a: &Multivector) -> Multivector {
    a.map_signs(|b| b.reversion_sign())
}

/// Composite of grade involution and reversion; grade `r` picks up `(-1)^(r(r+1)/2)`.
pub fn conjugation(a: &Multivector) -> Multivector {
    a.map_signs(|b| {
        let r = b.grade();
        if (r * (r + 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    })
}

/// `conj(a) · a`, which is scalar only for special elements.
pub fn quadratic_norm(a: &Multivector) -> Multivector {
    &conjugation(a) * a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Signature;

    fn mv(p: usize, q: usize, t: &str) -> Multivector {
        Multivector::parse(Signature::new(p, q).unwrap(), t).unwrap()
    }

    #[test]
    fn grade_involution_examples() {
        assert_eq!(grade_involution(&mv(0, 3, "g123")), mv(0, 3, "-g123"));
        assert_eq!(grade_involution(&mv(0, 3, "5")), mv(0, 3, "5"));
        assert_eq!(grade_involution(&mv(0, 3, "g12")), mv(0, 3, "g12"));
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(reversion(&mv(2, 0, "g12")), mv(2, 0, "-g12"));
        assert_eq!(reversion(&mv(2, 0, "g1")), mv(2, 0, "g1"));
        assert_eq!(reversion(&mv(4, 0, "g1234")), mv(4, 0, "g1234"));
    }

    #[test]
    fn reversion_matches_explicit_reordering() {
        // γ4γ3γ2γ1 multiplied out one factor at a time
        let s = Signature::new(1, 3).unwrap();
        let g = |i| Multivector::generator(s, i).unwrap();
        let reversed = &(&(&g(4) * &g(3)) * &g(2)) * &g(1);
        assert_eq!(reversion(&mv(1, 3, "g1234")), reversed);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(conjugation(&mv(1, 0, "g1")), mv(1, 0, "-g1"));
        assert_eq!(conjugation(&mv(1, 0, "3")), mv(1, 0, "3"));
        assert_eq!(conjugation(&mv(0, 2, "g12")), mv(0, 2, "-g12"));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(quadratic_norm(&mv(0, 2, "g12")), mv(0, 2, "1"));
        assert_eq!(quadratic_norm(&mv(3, 1, "1")), mv(3, 1, "1"));
    }
}
