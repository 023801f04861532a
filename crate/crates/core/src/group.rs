//! Clifford group, twisted adjoint action, Pin/Spin membership and the
//! orthogonal matrices induced on the 1-vector space.

use num_traits::{One, Zero};
use rand::Rng;

use crate::blade::Blade;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::involutions::{conjugation, grade_involution, quadratic_norm};
use crate::multivector::Multivector;
use crate::random;
use crate::real_matrix::RealMatrix;
use crate::scalars::{quat_conj, quat_mul, quat_norm_sq, ExactQuaternion};
use crate::signature::Signature;

/// Largest dimension for which the even-and-unit-norm description of Spin is
/// cross-checked against the stabilizer definition.
pub const SPIN_THEOREM_MAX_N: usize = 5;

/// An element together with the unit vectors it was built from, if known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersorCandidate {
    element: Multivector,
    factors: Option<Vec<Multivector>>,
}

impl VersorCandidate {
    pub fn new(element: Multivector) -> Self {
        VersorCandidate { element, factors: None }
    }

    /// Builds the ordered product of `factors`; each must be a 1-vector.
    pub fn from_factors(sig: Signature, factors: Vec<Multivector>) -> Result<Self> {
        let mut acc = Multivector::one(sig);
        for f in &factors {
            if !f.is_vector() {
                return Err(Error::NotInCliffordGroup(format!("factor {f} is not a 1-vector")));
            }
            acc = acc.try_mul(f)?;
        }
        Ok(VersorCandidate { element: acc, factors: Some(factors) })
    }

    pub fn element(&self) -> &Multivector {
        &self.element
    }

    pub fn factors(&self) -> Option<&[Multivector]> {
        self.factors.as_deref()
    }

    /// True when the stored element equals the product of the stored factors.
    pub fn is_consistent(&self) -> bool {
        match &self.factors {
            None => true,
            Some(fs) => {
                let sig = self.element.signature();
                fs.iter()
                    .try_fold(Multivector::one(sig), |acc, f| acc.try_mul(f))
                    .is_ok_and(|p| p == self.element)
            }
        }
    }
}

/// The quadratic norm as a scalar, or an error when it has other grades.
pub fn scalar_norm(u: &Multivector) -> Result<Dyadic> {
    let n = quadratic_norm(u);
    n.as_scalar().ok_or_else(|| Error::NonScalarNorm(format!("norm of {u} is {n}")))
}

/// Inverse as `conjugation(u) / ||u||`.
pub fn versor_inverse(u: &Multivector) -> Result<Multivector> {
    let n = scalar_norm(u)?;
    if n.is_zero() {
        return Err(Error::NotInvertible(format!("{u} has zero norm")));
    }
    let inv = Dyadic::one().checked_div(&n)?;
    Ok(conjugation(u).scale(&inv))
}

/// `φt(u) · x · u⁻¹`.
pub fn twisted_adjoint(u: &Multivector, x: &Multivector) -> Result<Multivector> {
    let inv = versor_inverse(u)?;
    grade_involution(u).try_mul(x)?.try_mul(&inv)
}

/// Diagonal Gram matrix of the symmetric form: `+1` on the first `p` axes, `-1` after.
pub fn gram(sig: Signature) -> RealMatrix {
    let d: Vec<Dyadic> = (1..=sig.n()).map(|i| Dyadic::from_int(if i <= sig.p() { 1 } else { -1 })).collect();
    RealMatrix::diagonal(&d)
}

/// Matrix of the twisted adjoint action on the 1-vector space.
///
/// Column `i` holds the coordinates of the image of `γ_{i+1}`. Fails with
/// [`Error::NotInCliffordGroup`] when some image leaves the 1-vector space.
pub fn rho_matrix(u: &Multivector) -> Result<RealMatrix> {
    let sig = u.signature();
    let n = sig.n();
    let inv = versor_inverse(u)?;
    let hat = grade_involution(u);
    let mut m = RealMatrix::zeros(n, n);
    for i in 1..=n {
        let img = hat.try_mul(&Multivector::generator(sig, i)?)?.try_mul(&inv)?;
        if !img.is_vector() {
            return Err(Error::NotInCliffordGroup(format!("image of g{i} under {u} is {img}")));
        }
        for (b, c) in img.terms() {
            let row = b.indices()[0] - 1;
            m.set(row, i - 1, c.clone());
        }
    }
    let g = gram(sig);
    if m.transpose().try_mul(&g)?.try_mul(&m)? != g {
        return Err(Error::Inconsistent {
            sig,
            detail: format!("matrix induced by {u} does not preserve the form"),
        });
    }
    Ok(m)
}

/// Membership data gathered for [`is_pin`] and [`is_spin`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub stabilizes: bool,
    pub norm: Option<Dyadic>,
    pub even: bool,
    pub pin: bool,
    pub spin: bool,
    /// Verdict of the "even with norm ±1" description, present when `n <= 5`.
    pub theorem_spin: Option<bool>,
}

impl Membership {
    pub fn agrees(&self) -> bool {
        self.theorem_spin.is_none_or(|t| t == self.spin)
    }
}

pub fn membership(u: &Multivector) -> Membership {
    let sig = u.signature();
    let norm = quadratic_norm(u).as_scalar();
    let unit = norm.as_ref().is_some_and(|n| n.abs().is_one());
    let stabilizes = rho_matrix(u).is_ok();
    let even = u.is_even();
    let pin = stabilizes && unit;
    let spin = pin && even;
    let theorem_spin = (sig.n() <= SPIN_THEOREM_MAX_N).then_some(even && unit);
    Membership { stabilizes, norm, even, pin, spin, theorem_spin }
}

pub fn is_pin(u: &Multivector) -> bool {
    membership(u).pin
}

pub fn is_spin(u: &Multivector) -> bool {
    membership(u).spin
}

/// Counts from [`double_cover_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoverReport {
    pub signature: Signature,
    pub samples: usize,
    pub definite: bool,
    /// Even samples with `ρ_u = ρ_{-u}`.
    pub even_equal: usize,
    /// Even samples with determinant `+1`.
    pub even_det_plus: usize,
    /// Odd samples with `ρ_u = ρ_{-u}`; `None` when `n = 0`.
    pub odd_equal: Option<usize>,
    /// Odd samples with determinant `-1`; `None` unless the form is definite and `n > 0`.
    pub odd_det_minus: Option<usize>,
    pub first_failure: Option<String>,
}

impl DoubleCoverReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
            && self.even_equal == self.samples
            && self.even_det_plus == self.samples
            && self.odd_equal.is_none_or(|c| c == self.samples)
            && self.odd_det_minus.is_none_or(|c| c == self.samples)
    }
}

/// One seeded sample: an even and an odd product of unit vectors.
fn cover_sample(sig: Signature, seed: u64, index: u64) -> Result<(Multivector, Option<Multivector>)> {
    let mut rng = random::stream(seed, index);
    let even_len = 2 * rng.gen_range(1..=2);
    let (even, _) = random::versor(&mut rng, sig, even_len)?;
    let odd = if sig.n() == 0 {
        None
    } else {
        let odd_len = 2 * rng.gen_range(0..=1) + 1;
        Some(random::versor(&mut rng, sig, odd_len)?.0)
    };
    Ok((even, odd))
}

/// Outcome of one double-cover sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverSample {
    even_equal: bool,
    even_det_plus: bool,
    odd_equal: Option<bool>,
    odd_det_minus: Option<bool>,
    failure: Option<String>,
}

/// Evaluates sample `index` of the double-cover check.
pub fn cover_sample_check(sig: Signature, seed: u64, index: u64) -> CoverSample {
    let run = || -> Result<CoverSample> {
        let (even, odd) = cover_sample(sig, seed, index)?;
        let re = rho_matrix(&even)?;
        let mut out = CoverSample {
            even_equal: re == rho_matrix(&-&even)?,
            even_det_plus: re.determinant()?.is_one(),
            ..CoverSample::default()
        };
        if let Some(o) = odd {
            let ro = rho_matrix(&o)?;
            out.odd_equal = Some(ro == rho_matrix(&-&o)?);
            if is_definite(sig) {
                out.odd_det_minus = Some(ro.determinant()? == -Dyadic::one());
            }
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| CoverSample { failure: Some(format!("sample {index}: {e}")), ..CoverSample::default() })
}

fn is_definite(sig: Signature) -> bool {
    sig.p() == 0 || sig.q() == 0
}

/// Merges per-sample outcomes, in index order, into a report.
pub fn cover_report(sig: Signature, outcomes: &[CoverSample]) -> DoubleCoverReport {
    let count = |f: &dyn Fn(&CoverSample) -> bool| outcomes.iter().filter(|o| f(o)).count();
    let odd_present = sig.n() > 0;
    DoubleCoverReport {
        signature: sig,
        samples: outcomes.len(),
        definite: is_definite(sig),
        even_equal: count(&|o| o.even_equal),
        even_det_plus: count(&|o| o.even_det_plus),
        odd_equal: odd_present.then(|| count(&|o| o.odd_equal == Some(true))),
        odd_det_minus: (odd_present && is_definite(sig)).then(|| count(&|o| o.odd_det_minus == Some(true))),
        first_failure: outcomes.iter().find_map(|o| o.failure.clone()),
    }
}

/// Checks `ρ_u = ρ_{-u}` and the determinant signs on seeded unit-vector products.
pub fn double_cover_check(sig: Signature, samples: usize, seed: u64) -> DoubleCoverReport {
    let outcomes: Vec<CoverSample> = (0..samples as u64).map(|i| cover_sample_check(sig, seed, i)).collect();
    cover_report(sig, &outcomes)
}

/// Counts from [`homomorphism_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub signature: Signature,
    pub pairs: usize,
    pub agreed: usize,
    pub first_failure: Option<String>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none() && self.agreed == self.pairs
    }
}

/// Checks pair `index`: `ρ(uv) = ρ(u)ρ(v)` for products of invertible vectors.
pub fn homomorphism_pair(sig: Signature, seed: u64, index: u64) -> Result<bool> {
    let mut rng = random::stream(seed, index);
    let lu = rng.gen_range(0..=3);
    let lv = rng.gen_range(0..=3);
    let u = random::clifford_element(&mut rng, sig, lu)?;
    let v = random::clifford_element(&mut rng, sig, lv)?;
    let lhs = rho_matrix(&u.try_mul(&v)?)?;
    let rhs = rho_matrix(&u)?.try_mul(&rho_matrix(&v)?)?;
    Ok(lhs == rhs)
}

pub fn homomorphism_report(sig: Signature, outcomes: &[Result<bool>]) -> HomomorphismReport {
    HomomorphismReport {
        signature: sig,
        pairs: outcomes.len(),
        agreed: outcomes.iter().filter(|o| matches!(o, Ok(true))).count(),
        first_failure: outcomes.iter().enumerate().find_map(|(i, o)| match o {
            Ok(true) => None,
            Ok(false) => Some(format!("pair {i}: product matrix differs")),
            Err(e) => Some(format!("pair {i}: {e}")),
        }),
    }
}

pub fn homomorphism_check(sig: Signature, pairs: usize, seed: u64) -> HomomorphismReport {
    let outcomes: Vec<Result<bool>> = (0..pairs as u64).map(|i| homomorphism_pair(sig, seed, i)).collect();
    homomorphism_report(sig, &outcomes)
}

/// Counts from [`theorem_crosscheck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub signature: Signature,
    pub samples: usize,
    pub agreed: usize,
    /// How many samples were in Spin.
    pub spin_count: usize,
    pub first_disagreement: Option<String>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.first_disagreement.is_none() && self.agreed == self.samples
    }
}

/// An even sample mixing Spin elements with even elements outside Spin.
pub fn even_sample(sig: Signature, seed: u64, index: u64) -> Result<Multivector> {
    let mut rng = random::stream(seed, index);
    let len = 2 * rng.gen_range(0..=2);
    let (versor, _) = random::versor(&mut rng, sig, len)?;
    let n = sig.n();
    Ok(match index % 5 {
        0 | 1 => versor,
        2 => versor.scale(&Dyadic::from_int(2)),
        3 if n >= 2 => {
            let top = n.min(4) & !1;
            let blade = Blade::from_indices(&(1..=top).collect::<Vec<_>>())?;
            versor.try_mul(&Multivector::one(sig).try_add(&Multivector::from_blade(sig, blade)?)?)?
        }
        _ => {
            let x = random::multivector(&mut rng, sig, 4);
            let even = (0..=n).step_by(2).fold(Multivector::zero(sig), |acc, k| {
                acc.try_add(&x.grade_project(k)).expect("same signature")
            });
            if even.is_zero() {
                versor
            } else {
                even
            }
        }
    })
}

/// Compares the stabilizer definition of Spin with the even-and-unit-norm
/// description on seeded even samples. Only meaningful for `n <= 5`.
pub fn theorem_crosscheck(sig: Signature, samples: usize, seed: u64) -> Result<CrosscheckReport> {
    if sig.n() > SPIN_THEOREM_MAX_N {
        return Err(Error::DimensionCap { n: sig.n(), cap: SPIN_THEOREM_MAX_N });
    }
    let mut agreed = 0;
    let mut spin_count = 0;
    let mut first = None;
    for i in 0..samples as u64 {
        let u = even_sample(sig, seed, i)?;
        let m = membership(&u);
        spin_count += usize::from(m.spin);
        if m.agrees() {
            agreed += 1;
        } else if first.is_none() {
            first = Some(format!("sample {i}: {u} spin={} theorem={:?}", m.spin, m.theorem_spin));
        }
    }
    Ok(CrosscheckReport { signature: sig, samples, agreed, spin_count, first_disagreement: first })
}

/// `q v q⁻¹` for a unit quaternion `q` and an imaginary quaternion `v`.
pub fn quaternion_rotation(q: &ExactQuaternion, v: &ExactQuaternion) -> Result<ExactQuaternion> {
    if !quat_norm_sq(q).is_one() {
        return Err(Error::NotInvertible(format!("{q:?} is not a unit quaternion")));
    }
    if !v.is_imaginary() {
        return Err(Error::Parse(format!("{v:?} is not purely imaginary")));
    }
    Ok(quat_mul(&quat_mul(q, v), &quat_conj(q)))
}

fn cl02() -> Signature {
    Signature::new(0, 2).expect("small signature")
}

/// `a + b i + c j + d k ↦ a + b γ1 + c γ2 + d γ12` in `Cl_{0,2}`.
pub fn quaternion_to_cl02(q: &ExactQuaternion) -> Multivector {
    let [a, b, c, d] = q.components();
    let blades = [Blade::SCALAR, Blade::from_mask(1), Blade::from_mask(2), Blade::from_mask(3)];
    Multivector::from_terms(cl02(), blades.into_iter().zip([a, b, c, d].into_iter().cloned()))
        .expect("blades fit in two generators")
}

/// Inverse of [`quaternion_to_cl02`].
pub fn cl02_to_quaternion(x: &Multivector) -> Result<ExactQuaternion> {
    if x.signature() != cl02() {
        return Err(Error::SignatureMismatch { left: x.signature(), right: cl02() });
    }
    let c = |m: u32| x.coefficient(Blade::from_mask(m));
    Ok(ExactQuaternion::new(c(0), c(1), c(2), c(3)))
}

/// Checks [`quaternion_rotation`] against conjugation inside `Cl_{0,2}`.
///
/// For every `q` and each imaginary unit `v`, compares `q v q⁻¹` with the image
/// of `u x u⁻¹` where `u`, `x` correspond to `q`, `v`. For `q` in the even
/// subalgebra it also compares the action on `i`, `j` with [`rho_matrix`].
pub fn quaternion_crosscheck(qs: &[ExactQuaternion]) -> Result<usize> {
    let units = [ExactQuaternion::i(), ExactQuaternion::j(), ExactQuaternion::k()];
    let mut checked = 0;
    for q in qs {
        let u = quaternion_to_cl02(q);
        let inv = versor_inverse(&u)?;
        for v in &units {
            let direct = quaternion_rotation(q, v)?;
            let via = cl02_to_quaternion(&u.try_mul(&quaternion_to_cl02(v))?.try_mul(&inv)?)?;
            if direct != via {
                return Err(Error::Inconsistent {
                    sig: cl02(),
                    detail: format!("rotation of {v:?} by {q:?}: {direct:?} vs {via:?}"),
                });
            }
            checked += 1;
        }
        if u.is_even() {
            let m = rho_matrix(&u)?;
            for (col, v) in units[..2].iter().enumerate() {
                let r = quaternion_rotation(q, v)?;
                let [_, b, c, _] = r.components();
                if m.get(0, col) != b || m.get(1, col) != c {
                    return Err(Error::Inconsistent {
                        sig: cl02(),
                        detail: format!("induced matrix of {u} disagrees with rotation of {v:?}"),
                    });
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Unit quaternions with dyadic components used by [`quaternion_crosscheck`].
pub fn dyadic_unit_quaternions() -> Vec<ExactQuaternion> {
    let h = Dyadic::half_pow(1);
    let mut out = vec![
        ExactQuaternion::from_ints(1, 0, 0, 0),
        ExactQuaternion::from_ints(-1, 0, 0, 0),
        ExactQuaternion::i(),
        ExactQuaternion::j(),
        ExactQuaternion::k(),
        -ExactQuaternion::k(),
    ];
    for signs in 0..16u32 {
        let s = |bit: u32| if signs >> bit & 1 == 1 { -h.clone() } else { h.clone() };
        out.push(ExactQuaternion::new(s(0), s(1), s(2), s(3)));
    }
    out
}
