use std::collections::BTreeMap;

use crate::monomial::Monomial;

/// Multigraded Betti numbers `β_{i,b}(R/I)`.
///
/// Only nonzero entries are stored; totals are derived as row sums.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` to `β_{degree, multidegree}`.
    pub fn add(&mut self, degree: usize, multidegree: Monomial, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((degree, multidegree)).or_insert(0) += count;
    }

    pub fn get(&self, degree: usize, multidegree: &Monomial) -> u64 {
        self.entries
            .get(&(degree, multidegree.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    /// `β_i(R/I)` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut totals = vec![0u64; len];
        for ((i, _), &n) in &self.entries {
            totals[*i] += n;
        }
        totals
    }

    pub fn total(&self, degree: usize) -> u64 {
        self.totals().get(degree).copied().unwrap_or(0)
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.totals().len().saturating_sub(1)
    }

    /// Multidegrees occurring in homological degree `i`.
    pub fn multidegrees(&self, degree: usize) -> impl Iterator<Item = &Monomial> {
        self.entries
            .keys()
            .filter(move |(i, _)| *i == degree)
            .map(|(_, b)| b)
    }

    /// `Σ (-1)^i β_i`.
    pub fn alternating_sum(&self) -> i128 {
        self.totals()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i128 } else { -(b as i128) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_are_row_sums() {
        let mut t = BettiTable::new();
        t.add(0, Monomial::one(), 1);
        t.add(1, Monomial::var(0, 1), 1);
        t.add(1, Monomial::var(1, 1), 1);
        t.add(2, Monomial::from_exponents(vec![1, 1]), 1);
        t.add(2, Monomial::from_exponents(vec![2, 2]), 0);
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(t.alternating_sum(), 0);
        assert_eq!(t.multidegrees(1).count(), 2);
    }
}
