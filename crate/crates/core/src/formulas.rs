//! Closed-form total Betti numbers of `R/I` for complete and almost complete
//! intersections, and of powers of complete intersections.
//!
//! All totals are indexed by homological degree of `R/I` (so `β_0 = 1`).
//! Results stated for the ideal itself are available through
//! [`FormulaResult::ideal_totals`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classify::{
    is_almost_complete_intersection, is_complete_intersection, kty_form, pairwise_disjoint, KtyForm,
    KtyTag,
};
use crate::error::{domain_err, input_err, invariant_err, Result};
use crate::ideal::{polarize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::resolutions::chain::subset_lcms;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

fn ibinomial(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaRule {
    /// Koszul complex of a complete intersection.
    CiKoszul,
    /// Almost complete intersection where `v` divides the lcm of two `u`'s.
    P1,
    /// Almost complete intersection with smallest covering subset size `s`.
    T1,
    /// Star form (i).
    T2a,
    /// Dominant forms (ii) and (vi): the Taylor resolution is minimal.
    T2b,
    /// Triangle forms (iii), (iv), (v).
    T2c,
    /// Eagon–Northcott numbers for a power of a complete intersection.
    EnPower,
}

impl FormulaRule {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaRule::CiKoszul => "CI-Koszul",
            FormulaRule::P1 => "P1",
            FormulaRule::T1 => "T1",
            FormulaRule::T2a => "T2a",
            FormulaRule::T2b => "T2b",
            FormulaRule::T2c => "T2c",
            FormulaRule::EnPower => "EN-power",
        }
    }
}

impl fmt::Display for FormulaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormulaParams {
    /// Number of generators minus one for almost complete intersections,
    /// number of generators for complete intersections.
    pub q: usize,
    pub s: Option<usize>,
    pub form: Option<KtyTag>,
    /// Exponent `s` of `I^s` for the Eagon–Northcott rule.
    pub power: Option<u32>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    /// `β_i(R/I)` for `i = 0..`.
    pub totals: Vec<BigUint>,
    pub rule: FormulaRule,
    /// The rule was applied to the polarization.
    pub via_polarization: bool,
    pub params: FormulaParams,
}

impl FormulaResult {
    fn new(totals: Vec<BigUint>, rule: FormulaRule, params: FormulaParams) -> Result<Self> {
        let mut totals = totals;
        while totals.len() > 1 && totals.last().is_some_and(Zero::is_zero) {
            totals.pop();
        }
        let result = FormulaResult {
            totals,
            rule,
            via_polarization: false,
            params,
        };
        result.check()?;
        Ok(result)
    }

    /// `β_0 = 1` and the alternating sum vanishes.
    pub fn check(&self) -> Result<()> {
        if self.totals.first() != Some(&BigUint::one()) {
            return Err(invariant_err!("{}: β_0 is not 1", self.rule));
        }
        if !self.alternating_sum().is_zero() {
            return Err(invariant_err!("{}: alternating sum of totals is not zero", self.rule));
        }
        Ok(())
    }

    pub fn alternating_sum(&self) -> BigInt {
        self.totals
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { BigInt::from(b.clone()) } else { -BigInt::from(b.clone()) })
            .sum()
    }

    /// `β_i(I) = β_{i+1}(R/I)`.
    pub fn ideal_totals(&self) -> &[BigUint] {
        &self.totals[1..]
    }

    /// Totals as machine integers, when they fit.
    pub fn totals_u64(&self) -> Option<Vec<u64>> {
        self.totals.iter().map(ToPrimitive::to_u64).collect()
    }
}

fn to_unsigned(values: Vec<BigInt>, rule: FormulaRule) -> Result<Vec<BigUint>> {
    values
        .into_iter()
        .map(|b| {
            if b.is_negative() {
                Err(invariant_err!("{rule}: negative Betti number"))
            } else {
                Ok(b.to_biguint().expect("nonnegative"))
            }
        })
        .collect()
}

/// Complete intersection with `q` generators: `β_i = C(q, i)`.
pub fn betti_ci(q: usize) -> Result<FormulaResult> {
    if q == 0 {
        return Err(input_err!("a complete intersection needs at least one generator"));
    }
    let q_i = q as i64;
    FormulaResult::new(
        (0..=q_i).map(|i| binomial(q_i, i)).collect(),
        FormulaRule::CiKoszul,
        FormulaParams { q, ..Default::default() },
    )
}

/// Smallest number of `u`'s whose lcm is divisible by `v`.
///
/// Found by exhaustive search over subsets of increasing size and checked
/// against the count of `u`'s sharing a variable with `v`, which must agree
/// because the `u`'s are pairwise coprime.
pub fn smallest_s(ci_part: &[Monomial], v: &Monomial) -> Result<usize> {
    if !pairwise_disjoint(ci_part) {
        return Err(domain_err!("complete intersection part has overlapping supports"));
    }
    if ci_part.iter().any(|u| v.divides(u) || u.divides(v)) {
        return Err(domain_err!("v and the complete intersection part are not a minimal generating set"));
    }
    let sharing = ci_part.iter().filter(|u| u.shares_support(v)).count();
    let lcm_all = ci_part.iter().fold(Monomial::one(), |a, u| a.lcm(u));
    if !v.divides(&lcm_all) {
        return Err(domain_err!("v divides the lcm of no subset of the complete intersection part"));
    }
    if ci_part.len() <= 20 {
        let exhaustive = subset_lcms(ci_part)
            .iter()
            .enumerate()
            .filter(|(_, l)| v.divides(l))
            .map(|(mask, _)| mask.count_ones() as usize)
            .min()
            .expect("the full subset works");
        if exhaustive != sharing {
            return Err(invariant_err!(
                "exhaustive search gives s = {exhaustive}, support count gives {sharing}"
            ));
        }
    }
    Ok(sharing)
}

/// `β_i = C(q+1, i)` for `i < s` and `C(q+1, q+1-i) - C(q+1-s, q+1-i)` for
/// `s <= i <= q`.
pub fn betti_aci_general(q: usize, s: usize) -> Result<FormulaResult> {
    if s < 2 || s > q {
        return Err(input_err!("need 2 <= s <= q, got q = {q}, s = {s}"));
    }
    let (q_i, s_i) = (q as i64, s as i64);
    let values = (0..=q_i)
        .map(|i| {
            if i < s_i {
                ibinomial(q_i + 1, i)
            } else {
                ibinomial(q_i + 1, q_i + 1 - i) - ibinomial(q_i + 1 - s_i, q_i + 1 - i)
            }
        })
        .collect();
    FormulaResult::new(
        to_unsigned(values, FormulaRule::T1)?,
        FormulaRule::T1,
        FormulaParams { q, s: Some(s), ..Default::default() },
    )
}

/// The `s = 2` case, computed from its own closed form and checked against
/// [`betti_aci_general`].
pub fn betti_aci_pair(q: usize) -> Result<FormulaResult> {
    if q < 2 {
        return Err(input_err!("need q >= 2, got {q}"));
    }
    let q_i = q as i64;
    let values = (0..=q_i)
        .map(|i| {
            if i <= 1 {
                ibinomial(q_i + 1, i)
            } else {
                ibinomial(q_i + 1, q_i + 1 - i) - ibinomial(q_i - 1, q_i + 1 - i)
            }
        })
        .collect();
    let pair = FormulaResult::new(
        to_unsigned(values, FormulaRule::P1)?,
        FormulaRule::P1,
        FormulaParams { q, s: Some(2), ..Default::default() },
    )?;
    if pair.totals != betti_aci_general(q, 2)?.totals {
        return Err(invariant_err!("pair formula disagrees with the general formula at q = {q}"));
    }
    Ok(pair)
}

/// Totals for an ideal in one of the six structural forms with
/// `total_gens = q + 1` generators.
pub fn betti_kty(form: &KtyForm, total_gens: usize) -> Result<FormulaResult> {
    if total_gens < 3 {
        return Err(input_err!("the structural forms have at least 3 generators"));
    }
    let q = total_gens - 1;
    let q_i = q as i64;
    let params = FormulaParams { q, form: Some(form.tag), ..Default::default() };
    match form.tag {
        KtyTag::I => {
            let r = form.r.ok_or_else(|| input_err!("form (i) without r"))?;
            let mut result = betti_aci_general(q, r)?;
            result.rule = FormulaRule::T2a;
            result.params.form = Some(KtyTag::I);
            Ok(result)
        }
        KtyTag::II | KtyTag::VI => FormulaResult::new(
            (0..=q_i + 1).map(|i| binomial(q_i + 1, i)).collect(),
            FormulaRule::T2b,
            params,
        ),
        KtyTag::III | KtyTag::IV | KtyTag::V => {
            let values = (0..=q_i)
                .map(|i| ibinomial(q_i + 1, i) - ibinomial(q_i - 1, i - 2))
                .collect();
            FormulaResult::new(to_unsigned(values, FormulaRule::T2c)?, FormulaRule::T2c, params)
        }
    }
}

/// Betti numbers of `R/I^s` for a complete intersection `I` with `q`
/// generators, from `β_i(I^s) = C(q+s-1, s+i) · C(s+i-1, i)`.
pub fn betti_ci_power(q: usize, s: u32) -> Result<FormulaResult> {
    if q == 0 || s == 0 {
        return Err(input_err!("need q >= 1 and s >= 1"));
    }
    let (q_i, s_i) = (q as i64, i64::from(s));
    let mut totals = vec![BigUint::one()];
    totals.extend((0..q_i).map(|i| binomial(q_i + s_i - 1, s_i + i) * binomial(s_i + i - 1, i)));
    FormulaResult::new(
        totals,
        FormulaRule::EnPower,
        FormulaParams { q, power: Some(s), ..Default::default() },
    )
}

/// Picks the applicable closed form for `I`.
///
/// Complete intersections use the Koszul numbers. Almost complete
/// intersections are polarized when not squarefree, matched to a structural
/// form, and routed to the matching case; form (i) goes through
/// [`smallest_s`] and [`betti_aci_general`]. Anything else is a domain error,
/// and the caller should fall back to the homology oracle.
pub fn betti_formula_dispatch(ideal: &MonomialIdeal) -> Result<FormulaResult> {
    if is_complete_intersection(ideal) {
        return betti_ci(ideal.num_gens());
    }
    if !is_almost_complete_intersection(ideal) {
        return Err(domain_err!(
            "no closed form applies: neither a complete nor an almost complete intersection"
        ));
    }
    let (target, via_polarization) = if ideal.is_squarefree() {
        (ideal.clone(), false)
    } else {
        (polarize(ideal).0, true)
    };
    let form = kty_form(&target)?;
    let total_gens = target.num_gens();
    let mut result = match form.tag {
        KtyTag::I => {
            let center = form.generators().pop().expect("form has generators");
            let ci_part: Vec<Monomial> = target.gens().iter().filter(|g| **g != center).cloned().collect();
            let s = smallest_s(&ci_part, &center)?;
            let r = form.r.expect("star forms record r");
            if s != r {
                return Err(invariant_err!("smallest covering subset has size {s} but the star has {r} leaves"));
            }
            let mut result = betti_kty(&form, total_gens)?;
            let general = betti_aci_general(total_gens - 1, s)?;
            if general.totals != result.totals {
                return Err(invariant_err!("form (i) totals differ from the general formula"));
            }
            if s == 2 && betti_aci_pair(total_gens - 1)?.totals != result.totals {
                return Err(invariant_err!("form (i) totals differ from the pair formula"));
            }
            result.params.s = Some(s);
            result.params.notes.push(format!("range bound p read as r = s = {s}"));
            result
        }
        _ => betti_kty(&form, total_gens)?,
    };
    result.via_polarization = via_polarization;
    Ok(result)
}
