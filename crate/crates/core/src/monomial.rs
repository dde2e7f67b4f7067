//! Monomials as exponent vectors over an interned variable list.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{input_err, Result};

/// An ordered, interned list of variable names.
///
/// Monomials refer to variables by their position in this list, so two
/// monomials are only comparable in the context of the same `Variables`.
#[derive(Clone)]
pub struct Variables {
    names: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl Variables {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(input_err!("empty variable name"));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(input_err!("variable `{name}` declared twice"));
            }
        }
        Ok(Variables {
            names: names.into(),
            index: Arc::new(index),
        })
    }

    /// `prefix1, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

impl PartialEq for Variables {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Variables {}

impl fmt::Debug for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}`.
///
/// Stored as a dense exponent vector with trailing zeros trimmed, so the
/// monomial `1` is the empty vector and equality does not depend on the
/// ambient number of variables.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables
    /// multiply.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut exps = Vec::new();
        for (var, e) in pairs {
            if exps.len() <= var {
                exps.resize(var + 1, 0);
            }
            exps[var] += e;
        }
        Self::from_exponents(exps)
    }

    pub fn var(var: usize, exp: u32) -> Self {
        Self::from_pairs([(var, exp)])
    }

    /// Product of the given variables, each to the first power.
    pub fn squarefree<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    /// Exponent vector; its length is one past the last variable that occurs.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Nonzero `(variable, exponent)` pairs in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v, e))
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.iter().map(|(v, _)| v).collect()
    }

    pub fn shares_support(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .any(|(&a, &b)| a > 0 && b > 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n)
            .map(|v| self.exponent(v).max(other.exponent(v)))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Self::from_exponents(exps)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n)
            .map(|v| self.exponent(v) + other.exponent(v))
            .collect();
        Monomial { exps }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(v, &a)| a - other.exponent(v))
            .collect();
        Some(Self::from_exponents(exps))
    }

    /// Quotient `self / gcd(self, other)`; the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(v, &a)| a.saturating_sub(other.exponent(v)))
            .collect();
        Self::from_exponents(exps)
    }

    /// Keeps only the exponents of variables in `vars`.
    pub fn restrict(&self, vars: &BTreeSet<usize>) -> Monomial {
        Self::from_pairs(self.iter().filter(|(v, _)| vars.contains(v)))
    }

    /// Largest variable index that occurs, plus one.
    pub fn span(&self) -> usize {
        self.exps.len()
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

/// Graded order: lower total degree first, ties broken lexicographically
/// with the first declared variable most significant (so `x^2 < x*y < y^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for v in 0..n {
                match self.exponent(v).cmp(&other.exponent(v)) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a Variables,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.mono.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.vars.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Componentwise maximum of a nonempty list.
pub fn lcm_of<'a, I>(ms: I) -> Result<Monomial>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut iter = ms.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| input_err!("lcm of an empty list of monomials"))?;
    Ok(iter.fold(first.clone(), |acc, m| acc.lcm(m)))
}

pub fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.divides(b)
}

pub fn support(m: &Monomial) -> BTreeSet<usize> {
    m.support()
}
