//! Cross-checks against independent brute-force computations.

use std::collections::{BTreeMap, BTreeSet};

use monres::corpus::{self, StarKind};
use monres::ideal::{associated_primes, minimalize, MonomialPrime};
use monres::resolutions::linalg::rank_dense;
use monres::resolutions::{oracle_betti, taylor_complex};
use monres::{Limits, Monomial, MonomialIdeal, Variables};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ideal_from(n: usize, gens: Vec<Vec<u32>>) -> Option<MonomialIdeal> {
    let vars = Variables::numbered("x", n);
    let gens: Vec<Monomial> = gens.into_iter().map(Monomial::from_exponents).filter(|m| !m.is_one()).collect();
    minimalize(gens, &vars).ok()
}

fn small_ideal(max_vars: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)))
        .prop_filter_map("unit or empty", |(n, g)| ideal_from(n, g))
}

/// `Ass(I)` as the set of primes of the form `I : w`. Exponents of `w` above
/// the largest exponent in `G(I)` never change the colon, so a box suffices.
fn ass_by_colons(ideal: &MonomialIdeal) -> BTreeSet<MonomialPrime> {
    let n = ideal.vars().len();
    let bounds: Vec<u32> = (0..n).map(|x| ideal.gens().iter().map(|g| g.exponent(x)).max().unwrap_or(0)).collect();
    let mut out = BTreeSet::new();
    let mut w = vec![0u32; n];
    loop {
        let m = Monomial::from_exponents(w.clone());
        if !ideal.contains(&m) {
            let colon: Vec<Monomial> = ideal.gens().iter().map(|g| g.colon(&m)).collect();
            let colon = minimalize(colon, ideal.vars()).expect("w is not in I");
            if colon.gens().iter().all(|g| g.degree() == 1) {
                out.insert(MonomialPrime::new(colon.gens().iter().flat_map(|g| g.support())));
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if w[k] < bounds[k] {
                w[k] += 1;
                break;
            }
            w[k] = 0;
            k += 1;
        }
    }
}

fn rank_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() * &inv;
                for k in c..cols {
                    let d = m[rank][k].clone() * &f;
                    m[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `β_{i,b} = dim H_i(T ⊗ k)_b`: in each multidegree only the Taylor
/// differential entries with ratio 1 survive.
fn betti_from_taylor(ideal: &MonomialIdeal) -> BTreeMap<(usize, Monomial), u64> {
    let t = taylor_complex(ideal, &Limits::default()).unwrap();
    let mut degrees: BTreeSet<Monomial> = BTreeSet::new();
    for b in &t.bases {
        degrees.extend(b.iter().map(|e| e.multidegree.clone()));
    }
    let mut out = BTreeMap::new();
    for b in degrees {
        let idx: Vec<Vec<usize>> =
            t.bases.iter().map(|basis| (0..basis.len()).filter(|&k| basis[k].multidegree == b).collect()).collect();
        // rank of the strand of d_i : F_i -> F_{i-1}
        let rank = |i: usize| -> usize {
            if i == 0 || i >= t.bases.len() || idx[i].is_empty() || idx[i - 1].is_empty() {
                return 0;
            }
            let d = &t.differentials[i - 1];
            let mut m = vec![vec![0i64; idx[i].len()]; idx[i - 1].len()];
            for e in &d.entries {
                if let (Some(r), Some(c)) =
                    (idx[i - 1].iter().position(|&x| x == e.row), idx[i].iter().position(|&x| x == e.col))
                {
                    assert!(e.ratio.is_one());
                    m[r][c] = e.coeff;
                }
            }
            let r = rank_q(&m);
            assert_eq!(r, rank_dense(&m));
            r
        };
        for i in 0..t.bases.len() {
            let h = idx[i].len() - rank(i) - rank(i + 1);
            if h > 0 {
                out.insert((i, b.clone()), h as u64);
            }
        }
    }
    out
}

#[test]
fn ass_matches_colon_search_on_paper_example() {
    let vars = Variables::new(["x", "y", "z"]).unwrap();
    let i = minimalize(
        vec![
            Monomial::from_exponents(vec![4]),
            Monomial::from_exponents(vec![0, 3, 2]),
            Monomial::from_exponents(vec![2, 4, 1]),
        ],
        &vars,
    )
    .unwrap();
    let ass = associated_primes(&i);
    assert_eq!(ass, ass_by_colons(&i));
    assert!(ass.contains(&MonomialPrime::new([0, 1, 2])));
}

#[test]
fn star_instances_against_taylor_strands() {
    let mut rng = corpus::rng(5);
    for k in 0..20 {
        let kind = if k % 2 == 0 { StarKind::Divisible } else { StarKind::Private };
        let i = corpus::random_star_aci(&mut rng, 2 + k % 3, 2, kind, 8);
        assert_eq!(oracle_betti(&i, &Limits::default()).unwrap().entries(), &betti_from_taylor(&i), "{i}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn associated_primes_match_colon_search(i in small_ideal(4, 5, 3)) {
        prop_assert_eq!(associated_primes(&i), ass_by_colons(&i));
    }

    #[test]
    fn oracle_matches_taylor_strands(i in small_ideal(5, 6, 2)) {
        let oracle = oracle_betti(&i, &Limits::default()).unwrap();
        prop_assert_eq!(oracle.entries(), &betti_from_taylor(&i));
    }
}
