//! Structural classification of monomial ideals.

mod cm;
mod kty;
mod order;

pub use cm::{aci_equivalence_report, cohen_macaulay_aci, AciReport, CmEvidence};
pub use kty::{kty_form, KtyForm, KtyTag};
pub use order::{find_weakly_polymatroidal_order, has_linear_quotients, is_weakly_polymatroidal};

use crate::error::{domain_err, input_err, Result};
use crate::ideal::{polarize, MonomialIdeal};
use crate::monomial::{Monomial, Variables};

/// Monomials form a regular sequence iff their supports are pairwise
/// disjoint.
pub fn is_regular_sequence(gens: &[Monomial]) -> Result<bool> {
    if gens.is_empty() {
        return Err(input_err!("empty sequence"));
    }
    if gens.iter().any(Monomial::is_one) {
        return Err(input_err!("a unit is never part of a regular sequence"));
    }
    Ok(pairwise_disjoint(gens))
}

pub(crate) fn pairwise_disjoint(ms: &[Monomial]) -> bool {
    ms.iter()
        .enumerate()
        .all(|(i, a)| ms[i + 1..].iter().all(|b| !a.shares_support(b)))
}

pub fn is_complete_intersection(ideal: &MonomialIdeal) -> bool {
    pairwise_disjoint(ideal.gens())
}

/// `height(I) = |G(I)| - 1`.
pub fn is_almost_complete_intersection(ideal: &MonomialIdeal) -> bool {
    ideal.height() + 1 == ideal.num_gens()
}

/// An almost complete intersection written as `(u_1, ..., u_q, v)` with
/// `u_1, ..., u_q` a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AciSplit {
    pub ci_part: Vec<Monomial>,
    pub v: Monomial,
}

/// Finds the `(CI, v)` shape, choosing the canonically last admissible `v`.
/// `None` for the triangle-shaped ideals, where no such `v` exists.
pub fn aci_decompose(ideal: &MonomialIdeal) -> Result<Option<AciSplit>> {
    if !is_almost_complete_intersection(ideal) {
        return Err(domain_err!("not an almost complete intersection"));
    }
    let gens = ideal.gens();
    for k in (0..gens.len()).rev() {
        let rest: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        if pairwise_disjoint(&rest) {
            return Ok(Some(AciSplit {
                ci_part: rest,
                v: gens[k].clone(),
            }));
        }
    }
    Ok(None)
}

fn dominant_at(gens: &[Monomial], k: usize) -> bool {
    let u = &gens[k];
    u.iter().any(|(x, e)| {
        gens.iter()
            .enumerate()
            .all(|(j, w)| j == k || e > w.exponent(x))
    })
}

/// Some variable of `u` has a larger exponent in `u` than in every other
/// minimal generator.
pub fn is_dominant_generator(u: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    let k = ideal
        .position(u)
        .ok_or_else(|| input_err!("monomial is not a minimal generator of the ideal"))?;
    Ok(dominant_at(ideal.gens(), k))
}

pub fn dominant_flags(ideal: &MonomialIdeal) -> Vec<bool> {
    (0..ideal.num_gens())
        .map(|k| dominant_at(ideal.gens(), k))
        .collect()
}

pub fn is_dominant(ideal: &MonomialIdeal) -> bool {
    dominant_flags(ideal).into_iter().all(|d| d)
}

/// At most one generator fails to be dominant.
pub fn is_semidominant(ideal: &MonomialIdeal) -> bool {
    dominant_flags(ideal).into_iter().filter(|d| !d).count() <= 1
}

/// A KTY form together with the variables its parts live over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtyClassification {
    pub form: KtyForm,
    /// Variables of the (possibly polarized) ideal the form was read from.
    pub vars: Variables,
    pub polarized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_ci: bool,
    pub is_aci: bool,
    pub height: usize,
    pub aci_split: Option<AciSplit>,
    pub dominant_flags: Vec<bool>,
    pub is_dominant: bool,
    pub is_semidominant: bool,
    /// Present for almost complete intersections of height at least 2.
    pub kty: Option<KtyClassification>,
}

pub fn classify(ideal: &MonomialIdeal) -> Result<Classification> {
    let is_ci = is_complete_intersection(ideal);
    let height = ideal.height();
    let is_aci = height + 1 == ideal.num_gens();
    let aci_split = if is_aci { aci_decompose(ideal)? } else { None };
    let dominant_flags = dominant_flags(ideal);
    let non_dominant = dominant_flags.iter().filter(|d| !**d).count();

    let kty = if is_aci && height >= 2 {
        if ideal.is_squarefree() {
            Some(KtyClassification {
                form: kty_form(ideal)?,
                vars: ideal.vars().clone(),
                polarized: false,
            })
        } else {
            let (polarized, _) = polarize(ideal);
            Some(KtyClassification {
                form: kty_form(&polarized)?,
                vars: polarized.vars().clone(),
                polarized: true,
            })
        }
    } else {
        None
    };

    Ok(Classification {
        is_ci,
        is_aci,
        height,
        aci_split,
        is_dominant: non_dominant == 0,
        is_semidominant: non_dominant <= 1,
        dominant_flags,
        kty,
    })
}
