//! Genus-one pipeline: correction term, symplectic invariant via genus
//! reduction, and the fixed-j count
//!
//!   n1j(beta) = 2 g(beta) n_0(beta) / aut,
//!
//! tied together by the exact identity RT1 = aut * n1j + CR with
//! CR = (c1.beta - 2) n_0 and RT1 = (beta.beta) n_0.

use crate::error::{Error, Result};
use crate::gw0::{self, MemoTable};
use crate::lattice::{self, intersect, CurveClass, SurfaceModel};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Automorphism order of a pointed genus-one surface at the named j values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutSpec {
    /// Generic j: only the elliptic involution, order 2.
    Generic,
    /// j = 1728: order 4.
    J1728,
    /// j = 0: order 6.
    J0,
    /// Explicit override.
    Explicit(i64),
}

pub fn aut_order(spec: AutSpec) -> Result<i64> {
    match spec {
        AutSpec::Generic => Ok(2),
        AutSpec::J1728 => Ok(4),
        AutSpec::J0 => Ok(6),
        AutSpec::Explicit(n) if n >= 1 => Ok(n),
        AutSpec::Explicit(n) => Err(Error::Validation(format!(
            "automorphism order {n} must be >= 1"
        ))),
    }
}

/// Parses "generic" | "j1728" | "j0" or a raw integer.
pub fn parse_aut(s: &str) -> Result<AutSpec> {
    match s {
        "generic" => Ok(AutSpec::Generic),
        "j1728" => Ok(AutSpec::J1728),
        "j0" => Ok(AutSpec::J0),
        _ => s
            .parse::<i64>()
            .map(AutSpec::Explicit)
            .map_err(|_| Error::Parse(format!("bad aut spec {s:?}"))),
    }
}

/// The full derived record for one class.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusOneReport {
    pub beta: CurveClass,
    pub class_string: String,
    pub delta: i64,
    pub genus: i64,
    pub n0: BigInt,
    pub correction: BigInt,
    pub rt1: BigInt,
    pub aut_order: i64,
    pub n1j: BigRational,
}

impl GenusOneReport {
    pub fn n1j_is_integral(&self) -> bool {
        self.n1j.denom().is_one()
    }

    /// "p/q", or just "p" when integral.
    pub fn n1j_string(&self) -> String {
        if self.n1j_is_integral() {
            self.n1j.numer().to_string()
        } else {
            format!("{}/{}", self.n1j.numer(), self.n1j.denom())
        }
    }
}

/// CR = (beta.c1 - 2) n_0(beta).
pub fn correction_term(s: &SurfaceModel, beta: &CurveClass, n0_val: &BigInt) -> Result<BigInt> {
    Ok(BigInt::from(lattice::c1_pairing(s, beta)? - 2) * n0_val)
}

/// RT1 = (beta.beta) n_0(beta).
pub fn rt1(s: &SurfaceModel, beta: &CurveClass, n0_val: &BigInt) -> Result<BigInt> {
    Ok(BigInt::from(intersect(s, beta, beta)?) * n0_val)
}

/// RT1 computed through the full-basis pairing sum; must equal [`rt1`].
pub fn rt1_via_pairing(s: &SurfaceModel, beta: &CurveClass, n0_val: &BigInt) -> Result<BigInt> {
    Ok(BigInt::from(lattice::pairing_sum_identity(s, beta)?) * n0_val)
}

/// Genus-0 invariant with two divisor insertions:
/// RT0(e_i, e_j; points) = n_0 (beta.e_i)(beta.e_j).
pub fn rt0_with_divisors(
    s: &SurfaceModel,
    beta: &CurveClass,
    ei: &CurveClass,
    ej: &CurveClass,
    n0_val: &BigInt,
) -> Result<BigInt> {
    Ok(n0_val * BigInt::from(intersect(s, beta, ei)?) * BigInt::from(intersect(s, beta, ej)?))
}

/// Computes the fixed-j genus-one count and assembles the full report,
/// asserting the RT1 = aut * n1j + CR identity exactly.
pub fn n1j(
    s: &SurfaceModel,
    beta: &CurveClass,
    aut: i64,
    memo: &mut MemoTable,
) -> Result<GenusOneReport> {
    if aut < 1 {
        return Err(Error::Validation(format!(
            "automorphism order {aut} must be >= 1"
        )));
    }
    let n0_val = gw0::n0(s, beta, memo)?;
    let genus = lattice::arithmetic_genus(s, beta)?;
    let delta = lattice::delta(s, beta)?;
    let correction = correction_term(s, beta, &n0_val)?;
    let rt1_val = rt1(s, beta, &n0_val)?;
    let n1j_val = BigRational::new(
        BigInt::from(2 * genus) * &n0_val,
        BigInt::from(aut),
    );
    let lhs = BigRational::from(rt1_val.clone());
    let rhs = BigRational::from(BigInt::from(aut)) * &n1j_val
        + BigRational::from(correction.clone());
    if lhs != rhs {
        return Err(Error::Inconsistency(format!(
            "RT1 = aut*n1j + CR failed for {beta}: {lhs} != {rhs}"
        )));
    }
    Ok(GenusOneReport {
        class_string: s.class_string(beta),
        beta: beta.clone(),
        delta,
        genus,
        n0: n0_val,
        correction,
        rt1: rt1_val,
        aut_order: aut,
        n1j: n1j_val,
    })
}

/// True iff RT1 = aut * n1j + CR holds exactly for this class.
pub fn decomposition_identity_check(
    s: &SurfaceModel,
    beta: &CurveClass,
    aut: i64,
    memo: &mut MemoTable,
) -> Result<bool> {
    let report = n1j(s, beta, aut, memo)?;
    let lhs = BigRational::from(report.rt1.clone());
    let rhs = BigRational::from(BigInt::from(report.aut_order)) * &report.n1j
        + BigRational::from(report.correction.clone());
    Ok(lhs == rhs)
}
