//! Taylor and Scarf complexes.
//!
//! Basis elements are subsets `σ` of the generator list, encoded as bitmasks
//! and labelled by `u_σ = lcm(u_i : i ∈ σ)`. The differential is
//!
//! `d(e_σ) = Σ_{i∈σ} sign(i,σ) · (u_σ / u_{σ∖i}) · e_{σ∖i}`
//!
//! with `sign(i,σ) = (-1)^(j+1)` when `i` is the `j`-th element of `σ`.
//! Bases in each homological degree are listed in colex order.

use std::collections::HashMap;

use crate::classify::is_semidominant;
use crate::error::{domain_err, invariant_err, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;
use crate::resolutions::betti::BettiTable;
use crate::resolutions::simplicial::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// Bitmask over generator positions.
    pub subset: u32,
    pub multidegree: Monomial,
}

impl BasisElement {
    /// Generator positions in increasing order.
    pub fn members(&self) -> Vec<usize> {
        (0..32).filter(|i| self.subset >> i & 1 == 1).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: i64,
    /// Monomial part of the entry, `u_σ / u_{σ∖i}`.
    pub ratio: Monomial,
}

/// `d_i : F_i -> F_{i-1}` as a sparse matrix, entries sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<DifferentialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    /// `bases[i]` spans `F_i`.
    pub bases: Vec<Vec<BasisElement>>,
    /// `differentials[i - 1]` is `d_i`, for `i >= 1`.
    pub differentials: Vec<Differential>,
}

impl ChainComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn differential(&self, degree: usize) -> Option<&Differential> {
        degree.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    /// Checks `d_{i-1} ∘ d_i = 0` for every `i`.
    ///
    /// The monomial part of every term landing on `e_ρ` from `e_σ` is
    /// `u_σ / u_ρ`, so it suffices to check that the integer coefficients
    /// cancel.
    pub fn verify_square_zero(&self) -> Result<()> {
        for i in 2..self.bases.len() {
            let upper = &self.differentials[i - 1];
            let lower = &self.differentials[i - 2];
            let mut lower_cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); lower.cols];
            for e in &lower.entries {
                lower_cols[e.col].push((e.row, e.coeff));
            }
            let mut current: Option<usize> = None;
            let mut acc: HashMap<usize, i64> = HashMap::new();
            let flush = |col: Option<usize>, acc: &mut HashMap<usize, i64>| -> Result<()> {
                if let Some(c) = col {
                    if let Some((r, _)) = acc.iter().find(|(_, &v)| v != 0) {
                        return Err(invariant_err!(
                            "d_{} ∘ d_{} has a nonzero entry at ({r}, {c})",
                            i - 1,
                            i
                        ));
                    }
                }
                acc.clear();
                Ok(())
            };
            for e in &upper.entries {
                if current != Some(e.col) {
                    flush(current, &mut acc)?;
                    current = Some(e.col);
                }
                for &(r, c) in &lower_cols[e.row] {
                    *acc.entry(r).or_insert(0) += e.coeff * c;
                }
            }
            flush(current, &mut acc)?;
        }
        Ok(())
    }
}

/// `lcm` of every subset of generators, indexed by bitmask.
pub(crate) fn subset_lcms(gens: &[Monomial]) -> Vec<Monomial> {
    let mut lcms = vec![Monomial::one(); 1 << gens.len()];
    for mask in 1usize..lcms.len() {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
    }
    lcms
}

fn check_size(ideal: &MonomialIdeal, limits: &Limits) -> Result<()> {
    Limits::check("generators for Taylor/Scarf enumeration", ideal.num_gens(), limits.complex_gens)?;
    Limits::check("generators for Taylor/Scarf enumeration", ideal.num_gens(), 31)
}

/// The complex on the given (subset-closed) family of generator subsets.
fn complex_on(faces: &[u32], lcms: &[Monomial], q: usize) -> Result<ChainComplex> {
    let mut bases: Vec<Vec<BasisElement>> = vec![Vec::new(); q + 1];
    let mut sorted = faces.to_vec();
    sorted.sort_unstable();
    for s in sorted {
        bases[s.count_ones() as usize].push(BasisElement {
            subset: s,
            multidegree: lcms[s as usize].clone(),
        });
    }
    while bases.len() > 1 && bases.last().is_some_and(Vec::is_empty) {
        bases.pop();
    }
    let mut differentials = Vec::new();
    for i in 1..bases.len() {
        let index: HashMap<u32, usize> = bases[i - 1]
            .iter()
            .enumerate()
            .map(|(k, b)| (b.subset, k))
            .collect();
        let mut entries = Vec::new();
        for (col, b) in bases[i].iter().enumerate() {
            for (pos, g) in b.members().into_iter().enumerate() {
                let face = b.subset & !(1 << g);
                let row = *index
                    .get(&face)
                    .ok_or_else(|| invariant_err!("face family is not closed under subsets"))?;
                let ratio = lcms[b.subset as usize]
                    .div(&lcms[face as usize])
                    .expect("lcm of a subset divides the lcm of the superset");
                entries.push(DifferentialEntry {
                    row,
                    col,
                    coeff: if pos % 2 == 0 { 1 } else { -1 },
                    ratio,
                });
            }
        }
        differentials.push(Differential {
            rows: bases[i - 1].len(),
            cols: bases[i].len(),
            entries,
        });
    }
    let complex = ChainComplex { bases, differentials };
    complex.verify_square_zero()?;
    Ok(complex)
}

/// Taylor complex on all subsets of the minimal generators.
pub fn taylor_complex(ideal: &MonomialIdeal, limits: &Limits) -> Result<ChainComplex> {
    check_size(ideal, limits)?;
    let q = ideal.num_gens();
    let lcms = subset_lcms(ideal.gens());
    let all: Vec<u32> = (0..(1u32 << q)).collect();
    complex_on(&all, &lcms, q)
}

fn scarf_faces(lcms: &[Monomial]) -> Vec<u32> {
    let mut count: HashMap<&Monomial, u32> = HashMap::with_capacity(lcms.len());
    for m in lcms {
        *count.entry(m).or_insert(0) += 1;
    }
    (0..lcms.len() as u32)
        .filter(|&s| count[&lcms[s as usize]] == 1)
        .collect()
}

/// Scarf complex: subsets whose lcm is attained by no other subset.
pub fn scarf_complex(ideal: &MonomialIdeal, limits: &Limits) -> Result<SimplicialComplex> {
    check_size(ideal, limits)?;
    let lcms = subset_lcms(ideal.gens());
    SimplicialComplex::from_faces(ideal.num_gens(), scarf_faces(&lcms).into_iter().map(u64::from))
}

/// The Taylor differential restricted to the Scarf faces.
pub fn scarf_chain_complex(ideal: &MonomialIdeal, limits: &Limits) -> Result<ChainComplex> {
    check_size(ideal, limits)?;
    let lcms = subset_lcms(ideal.gens());
    complex_on(&scarf_faces(&lcms), &lcms, ideal.num_gens())
}

/// Betti numbers read off the Scarf complex. Only valid (and only allowed)
/// for semidominant ideals, where the Scarf complex is a minimal resolution.
pub fn scarf_betti(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    if !is_semidominant(ideal) {
        return Err(domain_err!(
            "the Scarf complex is only known to be minimal for semidominant ideals"
        ));
    }
    check_size(ideal, limits)?;
    let lcms = subset_lcms(ideal.gens());
    let mut table = BettiTable::new();
    for s in scarf_faces(&lcms) {
        table.add(s.count_ones() as usize, lcms[s as usize].clone(), 1);
    }
    Ok(table)
}

/// True iff no entry of the Taylor differential has a unit monomial part.
pub fn is_taylor_minimal(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    let taylor = taylor_complex(ideal, limits)?;
    Ok(taylor
        .differentials
        .iter()
        .flat_map(|d| &d.entries)
        .all(|e| !e.ratio.is_one()))
}
