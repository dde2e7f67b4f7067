//! Cohen–Macaulay decisions for almost complete intersections.

use crate::classify::{aci_decompose, is_almost_complete_intersection, is_dominant};
use crate::error::{domain_err, invariant_err, Result};
use crate::ideal::{associated_primes, is_unmixed, minimal_primes, MonomialIdeal};
use crate::limits::Limits;
use crate::resolutions::projective_dimension;

/// Outcome of the structural Cohen–Macaulay test with its homological check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CmEvidence {
    pub cohen_macaulay: bool,
    pub height: usize,
    pub projective_dimension: usize,
}

/// For `I = (u_1, ..., u_q, v)` with `(u_1, ..., u_q)` a complete
/// intersection, `R/I` is Cohen–Macaulay iff `I` is not dominant.
///
/// The answer is cross-checked against `pd(R/I) = height(I)` from the
/// homology oracle; a mismatch is an invariant violation.
pub fn cohen_macaulay_aci(ideal: &MonomialIdeal, limits: &Limits) -> Result<CmEvidence> {
    if !is_almost_complete_intersection(ideal) {
        return Err(domain_err!("not an almost complete intersection"));
    }
    if aci_decompose(ideal)?.is_none() {
        return Err(domain_err!(
            "no generator splits off a complete intersection; compare pd with height instead"
        ));
    }
    let cohen_macaulay = !is_dominant(ideal);
    let height = ideal.height();
    let pd = projective_dimension(ideal, limits)?;
    if (pd == height) != cohen_macaulay {
        return Err(invariant_err!(
            "dominance predicts Cohen-Macaulay = {cohen_macaulay} but pd = {pd}, height = {height}"
        ));
    }
    Ok(CmEvidence {
        cohen_macaulay,
        height,
        projective_dimension: pd,
    })
}

/// The three decidable conditions that must coincide for an almost complete
/// intersection of shape `(CI, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AciReport {
    /// `pd(R/I) = height(I)`.
    pub cohen_macaulay: bool,
    pub unmixed: bool,
    /// `Ass(I) = Min(I)`, the decidable shadow of cleanness.
    pub ass_equals_min: bool,
    /// Whether the ideal has the `(CI, v)` shape the equivalence is stated for.
    pub ci_v_shape: bool,
    /// Cohen–Macaulay iff unmixed, and Cohen–Macaulay implies `Ass = Min`.
    pub agree: bool,
}

/// Evaluates Cohen–Macaulayness, unmixedness and `Ass = Min`.
///
/// `Ass = Min` is necessary for cleanness but not sufficient (it holds for
/// every squarefree ideal), so it is only required to follow from
/// Cohen–Macaulayness. Disagreement is an invariant violation for ideals of shape `(CI, v)`;
/// for the triangle-shaped ones it is only reported.
pub fn aci_equivalence_report(ideal: &MonomialIdeal, limits: &Limits) -> Result<AciReport> {
    let ci_v_shape = aci_decompose(ideal)?.is_some();
    let pd = projective_dimension(ideal, limits)?;
    let cohen_macaulay = pd == ideal.height();
    let unmixed = is_unmixed(ideal);
    let ass_equals_min = associated_primes(ideal) == minimal_primes(ideal);
    let agree = cohen_macaulay == unmixed && (!cohen_macaulay || ass_equals_min);
    if ci_v_shape && !agree {
        return Err(invariant_err!(
            "Cohen-Macaulay = {cohen_macaulay}, unmixed = {unmixed}, Ass = Min: {ass_equals_min}"
        ));
    }
    Ok(AciReport {
        cohen_macaulay,
        unmixed,
        ass_equals_min,
        ci_v_shape,
        agree,
    })
}
