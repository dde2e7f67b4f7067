//! Free resolutions: Taylor and Scarf complexes, and the homology oracle.

pub mod betti;
pub mod chain;
pub mod linalg;
pub mod oracle;
pub mod simplicial;

pub use betti::BettiTable;
pub use chain::{
    is_taylor_minimal, scarf_betti, scarf_chain_complex, scarf_complex, taylor_complex,
    BasisElement, ChainComplex, Differential, DifferentialEntry,
};
pub use oracle::{lcm_lattice, oracle_betti, projective_dimension, upper_koszul_complex};
pub use simplicial::{simplicial_homology_dim, SimplicialComplex};

use crate::error::{domain_err, Result};
use crate::monomial::Monomial;

/// `#L_i` for `i = 0..=q`: the number of `i`-subsets of the complete
/// intersection part whose lcm is not divisible by `v`.
pub fn l_counts(ci_part: &[Monomial], v: &Monomial) -> Result<Vec<u64>> {
    for (a, u) in ci_part.iter().enumerate() {
        for w in &ci_part[a + 1..] {
            if u.shares_support(w) {
                return Err(domain_err!("complete intersection part has overlapping supports"));
            }
        }
    }
    let q = ci_part.len();
    if q > 30 {
        return Err(crate::error::resource_err!("#L enumeration over {q} generators"));
    }
    let lcms = chain::subset_lcms(ci_part);
    let mut counts = vec![0u64; q + 1];
    for (mask, lcm) in lcms.iter().enumerate() {
        if !v.divides(lcm) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_count_examples() {
        let x2 = Monomial::var(0, 2);
        let y2 = Monomial::var(1, 2);
        let xy = Monomial::from_exponents(vec![1, 1]);
        assert_eq!(l_counts(&[x2.clone(), y2], &xy).unwrap(), vec![1, 2, 0]);

        // (x_i y_i) for i = 1..5 with v = y_1 y_2; x_i is var 2i, y_i var 2i+1.
        let ci: Vec<Monomial> = (0..5).map(|i| Monomial::squarefree([2 * i, 2 * i + 1])).collect();
        let v = Monomial::squarefree([1, 3]);
        let counts = l_counts(&ci, &v).unwrap();
        assert_eq!(counts[2], 10 - 1);
        assert_eq!(counts, vec![1, 5, 9, 7, 2, 0]);

        let private = Monomial::var(20, 1);
        assert_eq!(l_counts(&ci, &private).unwrap(), vec![1, 5, 10, 10, 5, 1]);

        assert!(l_counts(&[x2.clone(), x2], &xy).is_err());
    }
}
