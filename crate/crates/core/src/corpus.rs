//! Seeded random ideals for cross-checking.
//!
//! Every generator takes an explicit RNG; [`generate`] derives one from a
//! `u64` seed so that a corpus is fully reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{KtyForm, KtyTag};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Monomial, Variables};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub ideal: MonomialIdeal,
}

/// Hands out fresh variable indices.
#[derive(Default)]
struct Fresh(usize);

impl Fresh {
    fn take(&mut self, n: usize) -> Vec<usize> {
        let vars = (self.0..self.0 + n).collect();
        self.0 += n;
        vars
    }
}

/// Uniformly random monomials, minimalized. Sizes are upper bounds.
pub fn random_ideal(rng: &mut CorpusRng, max_gens: usize, max_vars: usize, max_exp: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars.max(1));
    let vars = Variables::numbered("x", n);
    loop {
        let count = rng.gen_range(1..=max_gens.max(1));
        let gens: Vec<Monomial> = (0..count)
            .map(|_| {
                Monomial::from_exponents(
                    (0..n)
                        .map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..=max_exp) } else { 0 })
                        .collect(),
                )
            })
            .filter(|m| !m.is_one())
            .collect();
        if let Ok(ideal) = minimalize(gens, &vars) {
            return ideal;
        }
    }
}

/// How the extra generator of a `(CI, v)` ideal relates to the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarKind {
    /// `v` divides the lcm of the `u`'s it meets (the non-dominant case).
    Divisible,
    /// `v` carries a private variable (the dominant case).
    Private,
}

/// A random almost complete intersection `(u_1, ..., u_q, v)` with
/// `u_1, ..., u_q` pairwise coprime and `v` meeting at least two of them.
///
/// Uses at most `max_vars` variables; exponents are at most `max_exp`, so
/// `max_exp = 1` gives squarefree ideals.
pub fn random_star_aci(
    rng: &mut CorpusRng,
    q: usize,
    max_exp: u32,
    kind: StarKind,
    max_vars: usize,
) -> MonomialIdeal {
    assert!(q >= 2, "need at least two complete intersection generators");
    let budget = max_vars.saturating_sub(usize::from(kind == StarKind::Private));
    assert!(2 * 2 + (q - 2) <= budget || max_exp > 1, "variable budget too small");
    loop {
        let mut fresh = Fresh::default();
        let s = rng.gen_range(2..=q);
        let mut ci = Vec::with_capacity(q);
        let mut v_pairs: Vec<(usize, u32)> = Vec::new();
        for k in 0..q {
            let shared = k < s;
            // A shared u must not divide v, so it needs a second variable or
            // an exponent above 1.
            let size = if shared && max_exp == 1 { 2 } else { rng.gen_range(1..=2) };
            let vars = fresh.take(size);
            let mut exps: Vec<u32> = vars.iter().map(|_| rng.gen_range(1..=max_exp)).collect();
            if shared && size == 1 && exps[0] == 1 {
                exps[0] = 2;
            }
            if shared {
                let mut chosen: Vec<(usize, u32)> = Vec::new();
                for (i, &x) in vars.iter().enumerate() {
                    if rng.gen_bool(0.7) {
                        chosen.push((x, rng.gen_range(1..=exps[i])));
                    }
                }
                if chosen.is_empty() {
                    chosen.push((vars[0], rng.gen_range(1..=exps[0])));
                }
                let full = chosen.len() == size && chosen.iter().zip(&exps).all(|((_, e), u)| e == u);
                if full {
                    // Lower one exponent or drop one variable so u does not divide v.
                    if let Some(i) = (0..size).find(|&i| exps[i] > 1) {
                        chosen[i].1 = exps[i] - 1;
                    } else {
                        chosen.pop();
                    }
                }
                v_pairs.extend(chosen);
            }
            ci.push(Monomial::from_pairs(vars.into_iter().zip(exps)));
        }
        if kind == StarKind::Private {
            let x = fresh.take(1)[0];
            v_pairs.push((x, rng.gen_range(1..=max_exp)));
        }
        if fresh.0 > max_vars {
            continue;
        }
        ci.shuffle(rng);
        let mut gens = ci;
        gens.push(Monomial::from_pairs(v_pairs));
        let vars = Variables::numbered("x", fresh.0);
        let ideal = minimalize(gens, &vars).expect("nonempty proper");
        if ideal.num_gens() == q + 1 {
            return ideal;
        }
    }
}

/// A squarefree ideal in the given structural form with `q + 1` generators,
/// together with the form it was built from.
///
/// Parts get one variable each, occasionally two; instances using more than
/// `max_vars` variables are redrawn.
pub fn random_kty(rng: &mut CorpusRng, tag: KtyTag, q: usize, max_vars: usize) -> (MonomialIdeal, KtyForm) {
    assert!(q >= 2, "structural forms need height at least 2");
    loop {
        let mut fresh = Fresh::default();
        let mut part = |rng: &mut CorpusRng| {
            let size = if rng.gen_bool(0.2) { 2 } else { 1 };
            Monomial::squarefree(fresh.take(size))
        };
        let form = match tag {
            KtyTag::I | KtyTag::II => {
                let r = rng.gen_range(2..=q);
                let v_parts: Vec<Monomial> = (0..r).map(|_| part(rng)).collect();
                let n_u = if tag == KtyTag::I { q } else { q + 1 };
                let u_parts: Vec<Monomial> = (0..n_u).map(|_| part(rng)).collect();
                KtyForm { tag, u_parts, v_parts, r: Some(r) }
            }
            _ => {
                let nontrivial = match tag {
                    KtyTag::III => 0,
                    KtyTag::IV => 1,
                    KtyTag::V => 2,
                    _ => 3,
                };
                let v_parts: Vec<Monomial> = (0..3).map(|_| part(rng)).collect();
                let mut u_parts: Vec<Monomial> = (0..3)
                    .map(|k| if k < nontrivial { part(rng) } else { Monomial::one() })
                    .collect();
                u_parts.extend((3..=q).map(|_| part(rng)));
                KtyForm { tag, u_parts, v_parts, r: None }
            }
        };
        if fresh.0 > max_vars {
            continue;
        }
        let vars = Variables::numbered("x", fresh.0);
        let ideal = minimalize(form.generators(), &vars).expect("nonempty proper");
        return (ideal, form);
    }
}

/// Mixed corpus used by the invariant suite: unstructured ideals, `(CI, v)`
/// almost complete intersections of both kinds, and every structural form.
pub fn generate(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (label, ideal) = match k % 4 {
            0 | 1 => ("random", random_ideal(&mut rng, 6, 6, 3)),
            2 => {
                let q = rng.gen_range(2..=4);
                let max_exp = rng.gen_range(1..=3);
                let kind = if rng.gen_bool(0.5) { StarKind::Divisible } else { StarKind::Private };
                let label = match kind {
                    StarKind::Divisible => "star-divisible",
                    StarKind::Private => "star-private",
                };
                (label, random_star_aci(&mut rng, q, max_exp, kind, 10))
            }
            _ => {
                let tag = KtyTag::ALL[rng.gen_range(0..6)];
                let q = rng.gen_range(2..=4);
                ("kty", random_kty(&mut rng, tag, q, 10).0)
            }
        };
        out.push(CorpusEntry {
            label: format!("{label}-{k}"),
            ideal,
        });
    }
    out
}
