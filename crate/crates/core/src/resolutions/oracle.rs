//! Multigraded Betti numbers from the upper Koszul simplicial complexes.
//!
//! For a multidegree `b`, `K^b(I)` is the complex of squarefree `τ ≤ b` with
//! `x^b / x^τ ∈ I`, and `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))`. Nonzero Betti
//! numbers only occur at lcms of generator subsets, so only those are
//! scanned. This route shares nothing with the Taylor/Scarf code or the
//! closed-form formulas.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;
use crate::resolutions::betti::BettiTable;
use crate::resolutions::chain::subset_lcms;
use crate::resolutions::simplicial::SimplicialComplex;

/// `K^b(I)` together with the variable behind each vertex.
///
/// `τ` is a face iff some generator `g | x^b` has `g_x < b_x` for every
/// `x ∈ τ`, so the complex is generated by those sets.
pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    b: &Monomial,
) -> Result<(SimplicialComplex, Vec<usize>)> {
    let vertices: Vec<usize> = b.iter().map(|(v, _)| v).collect();
    let facets = ideal.gens().iter().filter(|g| g.divides(b)).map(|g| {
        vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| g.exponent(v) < b.exponent(v))
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    });
    let complex = SimplicialComplex::from_facets(vertices.len(), facets)?;
    Ok((complex, vertices))
}

/// Candidate multidegrees: distinct lcms of nonempty generator subsets.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Monomial> {
    subset_lcms(ideal.gens()).into_iter().skip(1).collect()
}

fn check_size(ideal: &MonomialIdeal, limits: &Limits) -> Result<()> {
    Limits::check("generators for the homology oracle", ideal.num_gens(), limits.oracle_gens)?;
    Limits::check("generators for the homology oracle", ideal.num_gens(), 24)?;
    Limits::check(
        "variables for the homology oracle",
        ideal.used_vars().len(),
        limits.oracle_vars.min(crate::resolutions::simplicial::MAX_VERTICES),
    )
}

/// `β_{i,b}(R/I)` over a field of characteristic zero.
pub fn oracle_betti(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    check_size(ideal, limits)?;
    let lattice: Vec<Monomial> = lcm_lattice(ideal).into_iter().collect();
    let per_degree: Vec<(Monomial, Vec<(isize, usize)>)> = lattice
        .into_par_iter()
        .map(|b| {
            let (complex, _) = upper_koszul_complex(ideal, &b)?;
            let homology = complex.reduced_homology().into_iter().collect();
            Ok((b, homology))
        })
        .collect::<Result<_>>()?;

    let mut table = BettiTable::new();
    table.add(0, Monomial::one(), 1);
    for (b, homology) in per_degree {
        for (k, dim) in homology {
            // H̃_k(K^b) gives β_{k+1,b}(I) = β_{k+2,b}(R/I).
            table.add((k + 2) as usize, b.clone(), dim as u64);
        }
    }
    Ok(table)
}

/// Length of the minimal free resolution of `R/I`, from the oracle.
pub fn projective_dimension(ideal: &MonomialIdeal, limits: &Limits) -> Result<usize> {
    Ok(oracle_betti(ideal, limits)?.projective_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Variables;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            &Variables::numbered("x", n),
            gens.iter().map(|g| Monomial::from_exponents(g.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn koszul_totals() {
        let t = oracle_betti(&ideal(2, &[&[1], &[0, 1]]), &Limits::default()).unwrap();
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert_eq!(t.get(2, &Monomial::from_exponents(vec![1, 1])), 1);
    }

    #[test]
    fn aci_pair_totals() {
        // (x^2, y^2, xy)
        let i = ideal(2, &[&[2], &[0, 2], &[1, 1]]);
        let t = oracle_betti(&i, &Limits::default()).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(projective_dimension(&i, &Limits::default()).unwrap(), 2);
    }

    #[test]
    fn triangle_totals() {
        let t = oracle_betti(&ideal(3, &[&[1, 1], &[1, 0, 1], &[0, 1, 1]]), &Limits::default())
            .unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        let xyz = Monomial::from_exponents(vec![1, 1, 1]);
        assert_eq!(t.get(2, &xyz), 2);
    }

    #[test]
    fn generator_multidegree_gives_empty_face_complex() {
        let i = ideal(2, &[&[2], &[1, 1]]);
        let (k, verts) = upper_koszul_complex(&i, &Monomial::from_exponents(vec![2])).unwrap();
        assert_eq!(verts, vec![0]);
        assert_eq!(k.facets(), &[0]);
    }

    #[test]
    fn caps() {
        let i = ideal(3, &[&[1], &[0, 1], &[0, 0, 1]]);
        let l = Limits { oracle_vars: 2, ..Limits::default() };
        assert!(matches!(oracle_betti(&i, &l), Err(crate::Error::Resource(_))));
        let l = Limits { oracle_gens: 2, ..Limits::default() };
        assert!(matches!(oracle_betti(&i, &l), Err(crate::Error::Resource(_))));
    }
}
