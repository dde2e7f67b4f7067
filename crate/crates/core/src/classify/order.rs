//! Order-dependent exchange conditions: weak polymatroidality (an ordering of
//! the variables) and linear quotients (an ordering of the generators).

use std::collections::{BTreeSet, HashSet};

use crate::error::{input_err, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;

/// Checks the exchange condition for one decided pair: `u` beats `v` at
/// variable `t`, and `after` lists the variables ordered after `t`.
fn exchange_holds(ideal: &MonomialIdeal, v: &Monomial, t: usize, after: &[usize]) -> bool {
    after.iter().any(|&j| {
        v.exponent(j) > 0
            && ideal.contains(&v.div(&Monomial::var(j, 1)).unwrap().mul(&Monomial::var(t, 1)))
    })
}

/// Weak polymatroidality with respect to `order` (a permutation of all
/// variable indices, most significant first).
///
/// For every `u, v ∈ G(I)` agreeing on the variables before `x_t` with
/// `deg_t u > deg_t v`, some `x_j` after `x_t` must satisfy
/// `x_t (v / x_j) ∈ I`.
pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    let n = ideal.vars().len();
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if order.len() != n || distinct.len() != n || distinct.iter().any(|&v| v >= n) {
        return Err(input_err!("variable order must list each of the {n} variables exactly once"));
    }
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            let Some(pos) = order.iter().position(|&x| u.exponent(x) != v.exponent(x)) else {
                continue;
            };
            let t = order[pos];
            if u.exponent(t) > v.exponent(t) && !exchange_holds(ideal, v, t, &order[pos + 1..]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches all orderings of the used variables for one under which the
/// ideal is weakly polymatroidal. Unused variables go last, in index order.
///
/// The search is exhaustive, so `None` means no ordering works. Prefixes are
/// pruned as soon as a pair's first difference falls on a variable whose
/// exchange condition fails, which is decided once that variable is placed.
pub fn find_weakly_polymatroidal_order(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    let used: Vec<usize> = ideal.used_vars().into_iter().collect();
    Limits::check("variables for the order search", used.len(), limits.order_search_vars)?;
    let gens = ideal.gens();
    let pairs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|a| (0..gens.len()).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();

    fn extend(
        ideal: &MonomialIdeal,
        prefix: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        tied: &[(usize, usize)],
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        let gens = ideal.gens();
        for k in 0..remaining.len() {
            let t = remaining.remove(k);
            let mut still_tied = Vec::with_capacity(tied.len());
            let mut ok = true;
            for &(a, b) in tied {
                let (ua, vb) = (&gens[a], &gens[b]);
                if ua.exponent(t) == vb.exponent(t) {
                    still_tied.push((a, b));
                } else if ua.exponent(t) > vb.exponent(t) && !exchange_holds(ideal, vb, t, remaining) {
                    ok = false;
                    break;
                }
            }
            if ok {
                prefix.push(t);
                if extend(ideal, prefix, remaining, &still_tied) {
                    remaining.insert(k, t);
                    return true;
                }
                prefix.pop();
            }
            remaining.insert(k, t);
        }
        false
    }

    let mut prefix = Vec::with_capacity(ideal.vars().len());
    let mut remaining = used.clone();
    if !extend(ideal, &mut prefix, &mut remaining, &pairs) {
        return Ok(None);
    }
    let used_set: BTreeSet<usize> = used.into_iter().collect();
    prefix.extend((0..ideal.vars().len()).filter(|v| !used_set.contains(v)));
    debug_assert!(is_weakly_polymatroidal(ideal, &prefix).unwrap_or(false));
    Ok(Some(prefix))
}

/// `(placed) : u` is generated by variables.
fn linear_colon(placed: &[&Monomial], u: &Monomial) -> bool {
    // Minimal generators are all variables iff every quotient is divisible
    // by a degree-one quotient.
    let quotients: Vec<Monomial> = placed.iter().map(|p| p.colon(u)).collect();
    let variables: Vec<&Monomial> = quotients.iter().filter(|m| m.degree() == 1).collect();
    quotients
        .iter()
        .all(|m| m.degree() == 1 || variables.iter().any(|x| x.divides(m)))
}

/// An ordering of `G(I)` with linear quotients, if one exists.
///
/// Exhaustive search over generator orderings; whether a generator may come
/// next depends only on the set already placed, so failed sets are memoized.
pub fn has_linear_quotients(ideal: &MonomialIdeal, limits: &Limits) -> Result<Option<Vec<Monomial>>> {
    let q = ideal.num_gens();
    Limits::check("generators for the linear quotient search", q, limits.order_search_gens)?;
    Limits::check("generators for the linear quotient search", q, 30)?;
    let gens = ideal.gens();

    fn search(gens: &[Monomial], placed: u32, order: &mut Vec<usize>, dead: &mut HashSet<u32>) -> bool {
        if order.len() == gens.len() {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for k in 0..gens.len() {
            if placed >> k & 1 == 1 {
                continue;
            }
            let prior: Vec<&Monomial> = order.iter().map(|&j| &gens[j]).collect();
            if !prior.is_empty() && !linear_colon(&prior, &gens[k]) {
                continue;
            }
            order.push(k);
            if search(gens, placed | 1 << k, order, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert(placed);
        false
    }

    let mut order = Vec::with_capacity(q);
    let mut dead = HashSet::new();
    if search(gens, 0, &mut order, &mut dead) {
        Ok(Some(order.into_iter().map(|k| gens[k].clone()).collect()))
    } else {
        Ok(None)
    }
}
