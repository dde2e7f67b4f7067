//! Invariant suite run over a corpus of ideals.
//!
//! Every check is evaluated independently per ideal and recorded as passed,
//! failed or skipped (a resource cap was hit or the check does not apply
//! and counting it would be meaningless). The report is a pure function of
//! the corpus and the limits, so it serializes byte-identically.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    aci_decompose, aci_equivalence_report, cohen_macaulay_aci, has_linear_quotients,
    is_complete_intersection, is_dominant, is_semidominant, kty_form,
};
use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};
use crate::formulas::{betti_formula_dispatch, binomial};
use crate::ideal::{
    alexander_dual, associated_primes, ideal_power, minimal_primes, minimal_primes_exhaustive,
    minimalize, polarize, product, MonomialIdeal,
};
use crate::limits::Limits;
use crate::resolutions::{is_taylor_minimal, l_counts, lcm_lattice, oracle_betti, scarf_betti, BettiTable};

/// Names of all checks, in report order.
pub const CHECKS: &[&str] = &[
    "minimalize_canonical",
    "primes",
    "ci_height",
    "alternating_sum",
    "taylor_bound",
    "brun_romer_bound",
    "lcm_support",
    "monotone_truncation",
    "dominance_taylor",
    "scarf_oracle",
    "polarization",
    "dual_involution",
    "formula_oracle",
    "aci_equivalence",
    "l_counts",
    "kty_dominance",
    "dual_linear_quotients",
    "power_associativity",
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub label: String,
    pub ideal: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ideals: usize,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Resource errors skip a check; any other error fails it.
fn guarded(f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    match f() {
        Ok(o) => o,
        Err(Error::Resource(_)) => Outcome::Skip,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

/// Runs every check on every ideal. Resource caps come from `limits`; the
/// polarization check uses the larger of `limits` and [`Limits::generous`]
/// since polarizing multiplies the variable count.
pub fn verify_corpus(corpus: &[CorpusEntry], limits: &Limits) -> VerifyReport {
    let per_ideal: Vec<Vec<(&'static str, Outcome)>> =
        corpus.par_iter().map(|e| check_ideal(&e.ideal, limits)).collect();

    let mut checks: BTreeMap<String, CheckTally> =
        CHECKS.iter().map(|c| (c.to_string(), CheckTally::default())).collect();
    let mut failures = Vec::new();
    for (entry, outcomes) in corpus.iter().zip(per_ideal) {
        for (name, outcome) in outcomes {
            let tally = checks.get_mut(name).expect("registered check");
            match outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Skip => tally.skipped += 1,
                Outcome::Fail(detail) => {
                    tally.failed += 1;
                    failures.push(Failure {
                        label: entry.label.clone(),
                        ideal: entry.ideal.to_string(),
                        check: name.to_string(),
                        detail,
                    });
                }
            }
        }
    }
    VerifyReport {
        ideals: corpus.len(),
        checks,
        failures,
    }
}

fn binom(n: usize, k: usize) -> u64 {
    binomial(n as i64, k as i64).try_into().unwrap_or(u64::MAX)
}

fn widen(limits: &Limits) -> Limits {
    let g = Limits::generous();
    Limits {
        oracle_gens: limits.oracle_gens.max(g.oracle_gens),
        oracle_vars: limits.oracle_vars.max(g.oracle_vars),
        ..*limits
    }
}

fn check_ideal(ideal: &MonomialIdeal, limits: &Limits) -> Vec<(&'static str, Outcome)> {
    let mut out = Vec::with_capacity(CHECKS.len());
    let q = ideal.num_gens();
    let oracle = oracle_betti(ideal, limits);

    out.push(("minimalize_canonical", guarded(|| {
        let mut shuffled: Vec<_> = ideal.gens().iter().rev().cloned().collect();
        shuffled.extend(ideal.gens().iter().map(|g| g.mul(g)));
        let again = minimalize(shuffled, ideal.vars())?;
        Ok(expect(&again == ideal, || format!("re-minimalized to {again}")))
    })));

    out.push(("primes", guarded(|| {
        let min = minimal_primes(ideal);
        let ass = associated_primes(ideal);
        let exhaustive = minimal_primes_exhaustive(ideal)?;
        Ok(expect(
            min == exhaustive
                && min.is_subset(&ass)
                && ass.iter().all(|p| min.iter().any(|m| m.vars.is_subset(&p.vars))),
            || "minimal primes disagree with the exhaustive search or with Ass".into(),
        ))
    })));

    out.push(("ci_height", expect(is_complete_intersection(ideal) == (ideal.height() == q), || {
        format!("height {} with {q} generators", ideal.height())
    })));

    let Ok(table) = &oracle else {
        let skip = matches!(oracle, Err(Error::Resource(_)));
        let detail = oracle.as_ref().err().map(ToString::to_string).unwrap_or_default();
        for name in &CHECKS[3..] {
            out.push((name, if skip { Outcome::Skip } else { Outcome::Fail(detail.clone()) }));
        }
        return out;
    };
    let totals = table.totals();
    let pd = table.projective_dimension();

    out.push(("alternating_sum", expect(table.alternating_sum() == 0, || format!("totals {totals:?}"))));
    out.push(("taylor_bound", expect(
        totals.iter().enumerate().all(|(i, &b)| b <= binom(q, i)),
        || format!("totals {totals:?} exceed C({q}, i)"),
    )));
    out.push(("brun_romer_bound", expect(
        totals.iter().enumerate().all(|(i, &b)| b >= binom(pd, i)),
        || format!("totals {totals:?} below C({pd}, i)"),
    )));
    out.push(("lcm_support", check_lcm_support(ideal, table)));

    let full: Vec<bool> = (0..=q).map(|i| totals.get(i).copied().unwrap_or(0) == binom(q, i)).collect();
    out.push(("monotone_truncation", expect(
        (0..=q).all(|i| !full[i] || full[..i].iter().all(|&f| f)),
        || format!("totals {totals:?}"),
    )));

    out.push(("dominance_taylor", guarded(|| {
        let dominant = is_dominant(ideal);
        let minimal = is_taylor_minimal(ideal, limits)?;
        let all_full = full.iter().all(|&f| f) && totals.len() == q + 1;
        Ok(expect(dominant == minimal && minimal == all_full, || {
            format!("dominant {dominant}, Taylor minimal {minimal}, totals {totals:?}")
        }))
    })));

    out.push(("scarf_oracle", if is_semidominant(ideal) {
        guarded(|| {
            let scarf = scarf_betti(ideal, limits)?;
            Ok(expect(&scarf == table, || format!("Scarf totals {:?}", scarf.totals())))
        })
    } else {
        Outcome::Skip
    }));

    out.push(("polarization", if ideal.is_squarefree() {
        Outcome::Skip
    } else {
        guarded(|| {
            let (pol, _) = polarize(ideal);
            let pt = oracle_betti(&pol, &widen(limits))?.totals();
            Ok(expect(pol.num_gens() == q && pt == totals, || format!("polarized totals {pt:?}")))
        })
    }));

    out.push(("dual_involution", if ideal.is_squarefree() {
        guarded(|| {
            let dual = alexander_dual(ideal)?;
            let back = alexander_dual(&dual)?;
            let count = minimal_primes(ideal).len();
            Ok(expect(&back == ideal && dual.num_gens() == count, || format!("dual {dual}, double dual {back}")))
        })
    } else {
        Outcome::Skip
    }));

    out.push(("formula_oracle", match betti_formula_dispatch(ideal) {
        Ok(f) => expect(f.totals_u64().as_deref() == Some(&totals[..]), || {
            format!("{} gives {:?}, oracle {totals:?}", f.rule, f.totals)
        }),
        Err(_) => Outcome::Skip,
    }));

    let split = aci_decompose(ideal).ok().flatten();

    out.push(("aci_equivalence", if split.is_some() {
        guarded(|| {
            let cm = cohen_macaulay_aci(ideal, limits)?;
            let report = aci_equivalence_report(ideal, limits)?;
            Ok(expect(cm.cohen_macaulay == report.unmixed && report.agree, || format!("{report:?}")))
        })
    } else {
        Outcome::Skip
    }));

    out.push(("l_counts", match &split {
        Some(s) => guarded(|| {
            let l = l_counts(&s.ci_part, &s.v)?;
            let rebuilt: Vec<u64> = (0..=q)
                .map(|i| l.get(i).copied().unwrap_or(0) + if i > 0 { l.get(i - 1).copied().unwrap_or(0) } else { 0 })
                .collect();
            let padded: Vec<u64> = (0..=q).map(|i| totals.get(i).copied().unwrap_or(0)).collect();
            Ok(expect(rebuilt == padded, || format!("#L gives {rebuilt:?}, oracle {padded:?}")))
        }),
        None => Outcome::Skip,
    }));

    let aci_height_two = q == ideal.height() + 1 && ideal.height() >= 2;

    out.push(("kty_dominance", if aci_height_two {
        guarded(|| {
            let pol = if ideal.is_squarefree() { ideal.clone() } else { polarize(ideal).0 };
            let form = kty_form(&pol)?;
            Ok(expect(form.tag.is_dominant() == is_dominant(ideal), || format!("form {}", form.tag)))
        })
    } else {
        Outcome::Skip
    }));

    out.push(("dual_linear_quotients", if ideal.is_squarefree() {
        guarded(|| {
            let dual = alexander_dual(ideal)?;
            Ok(match has_linear_quotients(&dual, limits)? {
                Some(_) => expect(associated_primes(ideal) == minimal_primes(ideal), || "Ass differs from Min".into()),
                None => Outcome::Skip,
            })
        })
    } else {
        Outcome::Skip
    }));

    out.push(("power_associativity", guarded(|| {
        let p1 = ideal_power(ideal, 1)?;
        let p2 = ideal_power(ideal, 2)?;
        let p3 = ideal_power(ideal, 3)?;
        let via = product(&p2, &p1)?;
        Ok(expect(&p1 == ideal && via == p3, || format!("I^2 * I = {via}, I^3 = {p3}")))
    })));

    out
}

fn check_lcm_support(ideal: &MonomialIdeal, table: &BettiTable) -> Outcome {
    let lattice = lcm_lattice(ideal);
    let one_ok = table.get(0, &crate::Monomial::one()) == 1 && table.total(0) == 1;
    let gens_ok = table.total(1) == ideal.num_gens() as u64 && ideal.gens().iter().all(|g| table.get(1, g) == 1);
    let lattice_ok = table.entries().keys().all(|(i, b)| *i == 0 || lattice.contains(b));
    expect(one_ok && gens_ok && lattice_ok, || "multidegrees outside the lcm lattice".into())
}
