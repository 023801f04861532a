//! Per-signature verification of the constructed representation.

use std::fmt;

use crate::error::Result;
use crate::fixtures::{self, FixtureReport};
use crate::involutions::quadratic_norm;
use crate::multivector::Multivector;
use crate::representation::{generator_matrices, verify_relations, Representation};
use crate::signature::Signature;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name, passed, detail: detail.into() }
    }
}

/// Every check for one signature plus the informational fixture comparison.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub signature: Signature,
    pub ring: String,
    pub dim: usize,
    pub k: usize,
    pub checks: Vec<Check>,
    pub fixture: Option<FixtureReport>,
    /// Set when the construction itself failed.
    pub error: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(e) = &self.error {
            return Some(e.clone());
        }
        self.checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} ring {} dim {} k {}: {}/{} checks passed",
            self.signature,
            self.ring,
            self.dim,
            self.k,
            self.passed_count(),
            self.checks.len()
        )?;
        if let Some(e) = &self.error {
            writeln!(f, "  construction failed: {e}")?;
        }
        for c in &self.checks {
            writeln!(f, "  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
        }
        if let Some(fx) = &self.fixture {
            for line in fx.summary_lines() {
                writeln!(f, "  fixture {line}")?;
            }
        }
        Ok(())
    }
}

fn relations_check(rep: &Representation) -> Check {
    match verify_relations(rep) {
        Ok(r) if r.passed() => Check::new(
            "relations",
            true,
            format!("anticommutators exact, {} blade words agree", r.words_checked),
        ),
        Ok(r) => Check::new("relations", false, format!("{r:?}")),
        Err(e) => Check::new("relations", false, e.to_string()),
    }
}

fn dimension_check(rep: &Representation, k: usize) -> Check {
    let n = rep.signature.n();
    let expected = 1usize << (n - k);
    let real = rep.basis.real_basis.len();
    let module = rep.basis.module_basis.len() * rep.basis.unit_dim();
    Check::new(
        "dimension",
        real == expected && module == expected,
        format!("real basis {real}, module basis x ring {module}, expected 2^(n-k) = {expected}"),
    )
}

fn idempotent_check(rep: &Representation) -> Result<Check> {
    let f = &rep.basis.f;
    let ok = f.try_mul(f)? == *f;
    Ok(Check::new("idempotent", ok, format!("F = {f}")))
}

fn norm_check(rep: &Representation, k: usize) -> Check {
    if k == 0 {
        return Check::new("spinor norm", true, "F = 1, nothing to vanish");
    }
    let basis = &rep.basis;
    match basis.real_basis.iter().position(|b| !quadratic_norm(b).is_zero()) {
        None => Check::new("spinor norm", true, format!("all {} basis norms vanish", basis.real_basis.len())),
        Some(i) => {
            let n = quadratic_norm(&basis.real_basis[i]);
            Check::new(
                "spinor norm",
                false,
                format!("norm of {}F is nonzero ({} terms, scalar part {})", basis.real_blades[i], n.len(), n.scalar_part()),
            )
        }
    }
}

fn closure_check(rep: &Representation) -> Result<Check> {
    let sig = rep.signature;
    for i in 1..=sig.n() {
        let g = Multivector::generator(sig, i)?;
        for b in &rep.basis.real_basis {
            let x = g.try_mul(b)?;
            if rep.basis.check_in_ideal(&x).is_err() {
                return Ok(Check::new("closure", false, format!("g{i} * ({b}) leaves the ideal")));
            }
        }
    }
    Ok(Check::new("closure", true, "left ideal closed under every generator"))
}

/// Builds and checks the representation of `sig`.
pub fn verify_signature(sig: Signature) -> VerifyReport {
    let class = crate::representation::classify(sig);
    let mut report = VerifyReport {
        signature: sig,
        ring: class.ring_tag.label().to_string(),
        dim: class.dim,
        k: 0,
        checks: Vec::new(),
        fixture: None,
        error: None,
    };
    let rep = match generator_matrices(sig) {
        Ok(r) => r,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let k = rep.basis.idempotent.k();
    report.k = k;
    let run = || -> Result<Vec<Check>> {
        Ok(vec![
            relations_check(&rep),
            dimension_check(&rep, k),
            idempotent_check(&rep)?,
            norm_check(&rep, k),
            closure_check(&rep)?,
        ])
    };
    match run() {
        Ok(c) => report.checks = c,
        Err(e) => report.error = Some(e.to_string()),
    }
    if fixtures::fixture_for(sig).is_some() {
        report.fixture = fixtures::compare_to_fixture(&rep, &fixtures::fixture_id(sig)).ok();
    }
    report
}
