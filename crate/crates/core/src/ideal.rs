//! Monomial ideals: minimal generators, primes, duality, polarization, powers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{domain_err, input_err, Result};
use crate::monomial::{Monomial, Variables};

/// A proper, nonzero monomial ideal given by its minimal generators.
///
/// Generators form an antichain under divisibility, none equals `1`, and they
/// are kept sorted in graded-lex order over the declared variable order.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Variables,
    gens: Vec<Monomial>,
}

/// A monomial prime ideal, i.e. a set of variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    pub vars: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        MonomialPrime {
            vars: vars.into_iter().collect(),
        }
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// Product of the variables.
    pub fn monomial(&self) -> Monomial {
        Monomial::squarefree(self.vars.iter().copied())
    }

    pub fn display<'a>(&'a self, vars: &'a Variables) -> impl fmt::Display + 'a {
        PrimeDisplay { prime: self, vars }
    }
}

struct PrimeDisplay<'a> {
    prime: &'a MonomialPrime,
    vars: &'a Variables,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.prime.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.vars.name(*v))?;
        }
        write!(f, ")")
    }
}

/// Minimal generators of the ideal generated by `gens`, in canonical order.
pub fn minimalize(gens: Vec<Monomial>, vars: &Variables) -> Result<MonomialIdeal> {
    for g in &gens {
        if g.span() > vars.len() {
            return Err(input_err!(
                "generator uses variable index {} but only {} variables are declared",
                g.span() - 1,
                vars.len()
            ));
        }
    }
    if gens.is_empty() {
        return Err(domain_err!("the zero ideal is not a supported monomial ideal"));
    }
    if gens.iter().any(Monomial::is_one) {
        return Err(domain_err!("the unit ideal is not a supported monomial ideal"));
    }
    Ok(MonomialIdeal {
        vars: vars.clone(),
        gens: antichain(gens),
    })
}

/// Sorts, dedups and drops every monomial divisible by another one.
fn antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Graded order puts divisors before their multiples.
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(vars: &Variables, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens, vars)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Ideal membership of a monomial.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Variables occurring in some generator.
    pub fn used_vars(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    pub fn lcm_all(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(), |acc, g| acc.lcm(g))
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.gens.iter().position(|g| g == m)
    }

    /// Minimal generators of `I : m`, or `None` when `m ∈ I` (unit colon).
    pub fn colon(&self, m: &Monomial) -> Option<Vec<Monomial>> {
        if self.contains(m) {
            return None;
        }
        Some(antichain(self.gens.iter().map(|g| g.colon(m)).collect()))
    }

    /// Same generators over a different (compatible) variable list.
    pub fn with_vars(&self, vars: &Variables) -> Result<Self> {
        minimalize(self.gens.clone(), vars)
    }

    pub fn minimal_primes(&self) -> BTreeSet<MonomialPrime> {
        minimal_primes(self)
    }

    pub fn height(&self) -> usize {
        height(self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Minimal primes of `I`: the inclusion-minimal transversals of the
/// hypergraph of generator supports.
///
/// Uses Berge's incremental transversal construction: after adding each
/// edge, every current transversal either already meets it or is extended
/// by one of its vertices, and non-minimal candidates are discarded.
pub fn minimal_primes(ideal: &MonomialIdeal) -> BTreeSet<MonomialPrime> {
    let mut edges: Vec<BTreeSet<usize>> = ideal.gens.iter().map(Monomial::support).collect();
    edges.sort_by_key(BTreeSet::len);
    edges.dedup();

    let mut covers: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for edge in &edges {
        let mut next = Vec::with_capacity(covers.len());
        for cover in covers {
            if !cover.is_disjoint(edge) {
                next.push(cover);
                continue;
            }
            for &v in edge {
                let mut extended = cover.clone();
                extended.insert(v);
                next.push(extended);
            }
        }
        covers = inclusion_minimal(next);
    }
    covers.into_iter().map(|vars| MonomialPrime { vars }).collect()
}

fn inclusion_minimal(mut sets: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<BTreeSet<usize>> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// Brute-force minimal primes: every subset of the used variables that meets
/// each generator support, filtered to the inclusion-minimal ones.
///
/// Exponential in the number of used variables; refuses more than 20.
pub fn minimal_primes_exhaustive(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    let used: Vec<usize> = ideal.used_vars().into_iter().collect();
    if used.len() > 20 {
        return Err(crate::error::resource_err!(
            "exhaustive transversal search over {} variables",
            used.len()
        ));
    }
    let supports: Vec<u32> = ideal
        .gens
        .iter()
        .map(|g| {
            used.iter()
                .enumerate()
                .filter(|(_, &v)| g.exponent(v) > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let transversals: Vec<u32> = (0u32..(1 << used.len()))
        .filter(|&s| supports.iter().all(|&e| e & s != 0))
        .collect();
    Ok(transversals
        .iter()
        .filter(|&&s| !transversals.iter().any(|&t| t != s && t & s == t))
        .map(|&s| MonomialPrime::new((0..used.len()).filter(|i| s >> i & 1 == 1).map(|i| used[i])))
        .collect())
}

/// Smallest size of a minimal prime.
pub fn height(ideal: &MonomialIdeal) -> usize {
    minimal_primes(ideal)
        .iter()
        .map(MonomialPrime::height)
        .min()
        .expect("a proper nonzero ideal has a minimal prime")
}

/// Correspondence between variables and their polarized copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    /// `(original variable, slot >= 1)` to polarized variable.
    pub forward: BTreeMap<(usize, u32), usize>,
    /// Polarized variable to `(original variable, slot)`.
    pub backward: Vec<(usize, u32)>,
    pub source: Variables,
    pub target: Variables,
}

impl PolarizationMap {
    /// Collapses each polarized variable onto its original variable.
    pub fn depolarize(&self, m: &Monomial) -> Monomial {
        Monomial::from_pairs(m.iter().map(|(v, e)| (self.backward[v].0, e)))
    }

    pub fn depolarize_prime(&self, p: &MonomialPrime) -> MonomialPrime {
        MonomialPrime::new(p.vars.iter().map(|&v| self.backward[v].0))
    }

    pub fn polarize_monomial(&self, m: &Monomial) -> Monomial {
        Monomial::squarefree(
            m.iter()
                .flat_map(|(v, e)| (1..=e).map(move |slot| self.forward[&(v, slot)])),
        )
    }
}

/// Standard polarization `x^a -> x_1 x_2 ... x_a`.
///
/// Every variable occurring in a generator with maximal exponent `a` gets the
/// slots `1..=a`, named `<name>_<slot>`; when such a name would clash with an
/// existing variable, underscores are appended to the base name until it does
/// not. Variables occurring in no generator are dropped.
pub fn polarize(ideal: &MonomialIdeal) -> (MonomialIdeal, PolarizationMap) {
    let vars = ideal.vars();
    let mut max_exp = vec![0u32; vars.len()];
    for g in ideal.gens() {
        for (v, e) in g.iter() {
            max_exp[v] = max_exp[v].max(e);
        }
    }

    let mut taken: BTreeSet<String> = vars.names().iter().cloned().collect();
    let mut names = Vec::new();
    let mut forward = BTreeMap::new();
    let mut backward = Vec::new();
    for (v, &a) in max_exp.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mut base = format!("{}_", vars.name(v));
        while (1..=a).any(|slot| taken.contains(&format!("{base}{slot}"))) {
            base.push('_');
        }
        for slot in 1..=a {
            let name = format!("{base}{slot}");
            taken.insert(name.clone());
            forward.insert((v, slot), names.len());
            backward.push((v, slot));
            names.push(name);
        }
    }
    let target = Variables::new(names).expect("polarized names are distinct");
    let map = PolarizationMap {
        forward,
        backward,
        source: vars.clone(),
        target: target.clone(),
    };
    let gens = ideal.gens().iter().map(|g| map.polarize_monomial(g)).collect();
    let polarized = minimalize(gens, &target).expect("polarization keeps the ideal proper");
    (polarized, map)
}

/// Associated primes, read off as the depolarized minimal primes of the
/// polarization.
pub fn associated_primes(ideal: &MonomialIdeal) -> BTreeSet<MonomialPrime> {
    if ideal.is_squarefree() {
        return minimal_primes(ideal);
    }
    let (polarized, map) = polarize(ideal);
    minimal_primes(&polarized)
        .iter()
        .map(|p| map.depolarize_prime(p))
        .collect()
}

/// Every associated prime has the height of the ideal.
pub fn is_unmixed(ideal: &MonomialIdeal) -> bool {
    let h = height(ideal);
    associated_primes(ideal).iter().all(|p| p.height() == h)
}

/// Alexander dual of a squarefree ideal: products of its minimal primes.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(domain_err!("Alexander duality needs a squarefree ideal"));
    }
    let gens = minimal_primes(ideal).iter().map(MonomialPrime::monomial).collect();
    minimalize(gens, ideal.vars())
}

/// `I^s` for `s >= 1`.
pub fn ideal_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(input_err!("ideal power needs s >= 1 (I^0 is the unit ideal)"));
    }
    let mut power = ideal.clone();
    for _ in 1..s {
        power = product(&power, ideal)?;
    }
    Ok(power)
}

/// `I * J` over the variables of `I`.
pub fn product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    let gens = a
        .gens()
        .iter()
        .flat_map(|g| b.gens().iter().map(move |h| g.mul(h)))
        .collect();
    minimalize(gens, a.vars())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Variables {
        Variables::new(["x", "y", "z"]).unwrap()
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    fn ideal(gens: &[&[(usize, u32)]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| mono(g)).collect(), &xyz()).unwrap()
    }

    fn primes(sets: &[&[usize]]) -> BTreeSet<MonomialPrime> {
        sets.iter().map(|s| MonomialPrime::new(s.iter().copied())).collect()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(&[&[(0, 2)], &[(0, 3)], &[(1, 1)]]);
        assert_eq!(i.gens(), &[mono(&[(1, 1)]), mono(&[(0, 2)])]);

        let i = ideal(&[&[(0, 2), (1, 1)], &[(0, 2), (1, 1)]]);
        assert_eq!(i.gens(), &[mono(&[(0, 2), (1, 1)])]);

        let i = ideal(&[
            &[(0, 1), (1, 1)],
            &[(1, 1), (2, 1)],
            &[(0, 1), (2, 1)],
            &[(0, 1), (1, 1), (2, 1)],
        ]);
        assert_eq!(i.to_string(), "x*y, x*z, y*z");
    }

    #[test]
    fn minimalize_errors() {
        let vars = xyz();
        assert!(matches!(
            minimalize(vec![mono(&[(5, 1)])], &vars),
            Err(crate::Error::Input(_))
        ));
        assert!(matches!(minimalize(vec![], &vars), Err(crate::Error::Domain(_))));
        assert!(matches!(
            minimalize(vec![Monomial::one(), mono(&[(0, 1)])], &vars),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn minimal_primes_examples() {
        let i = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]]);
        assert_eq!(minimal_primes(&i), primes(&[&[1], &[0, 2]]));
        assert_eq!(height(&i), 1);

        let i = ideal(&[&[(0, 1), (1, 1)], &[(0, 1), (2, 1)], &[(1, 1), (2, 1)]]);
        assert_eq!(minimal_primes(&i), primes(&[&[0, 1], &[0, 2], &[1, 2]]));

        let i = ideal(&[&[(0, 1)], &[(1, 1)], &[(2, 1)]]);
        assert_eq!(height(&i), 3);
    }

    // (x^4, y^3 z^2, x^2 y^4 z)
    fn not_clean() -> MonomialIdeal {
        ideal(&[&[(0, 4)], &[(1, 3), (2, 2)], &[(0, 2), (1, 4), (2, 1)]])
    }

    #[test]
    fn non_clean_example_primes() {
        let i = not_clean();
        let expected = primes(&[&[0, 1], &[0, 2]]);
        assert_eq!(minimal_primes_exhaustive(&i).unwrap(), expected);
        assert_eq!(minimal_primes(&i), expected);
        assert_eq!(height(&i), 2);
        let ass = associated_primes(&i);
        assert!(ass.is_superset(&expected));
        assert!(ass.len() > expected.len());
        assert!(ass.contains(&MonomialPrime::new([0, 1, 2])));
        assert!(!is_unmixed(&i));
    }

    #[test]
    fn associated_primes_examples() {
        let i = ideal(&[&[(0, 2)], &[(1, 2)]]);
        assert_eq!(associated_primes(&i), primes(&[&[0, 1]]));
        let sq = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]]);
        assert_eq!(associated_primes(&sq), minimal_primes(&sq));
    }

    #[test]
    fn unmixed_examples() {
        assert!(!is_unmixed(&ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]])));
        assert!(is_unmixed(&ideal(&[
            &[(0, 1), (1, 1)],
            &[(0, 1), (2, 1)],
            &[(1, 1), (2, 1)]
        ])));
    }

    #[test]
    fn polarize_examples() {
        let vars = Variables::new(["x", "y"]).unwrap();
        let i = minimalize(vec![mono(&[(0, 2)])], &vars).unwrap();
        let (p, _) = polarize(&i);
        assert_eq!(p.to_string(), "x_1*x_2");

        let i = minimalize(vec![mono(&[(0, 2)]), mono(&[(0, 1), (1, 1)])], &vars).unwrap();
        let (p, map) = polarize(&i);
        assert_eq!(p.to_string(), "x_1*x_2, x_1*y_1");
        assert!(p.is_squarefree());
        let back: BTreeSet<Monomial> = p.gens().iter().map(|g| map.depolarize(g)).collect();
        assert_eq!(back, i.gens().iter().cloned().collect());
        for (v, &(orig, slot)) in map.backward.iter().enumerate() {
            assert_eq!(map.forward[&(orig, slot)], v);
        }
    }

    #[test]
    fn polarization_avoids_name_clash() {
        let vars = Variables::new(["x", "x_1"]).unwrap();
        let i = minimalize(vec![mono(&[(0, 2)]), mono(&[(1, 1)])], &vars).unwrap();
        let (p, _) = polarize(&i);
        assert_eq!(p.vars().names(), &["x__1", "x__2", "x_1_1"]);
    }

    #[test]
    fn alexander_dual_examples() {
        let i = ideal(&[&[(0, 1), (1, 1)], &[(1, 1), (2, 1)]]);
        assert_eq!(alexander_dual(&i).unwrap().to_string(), "y, x*z");
        let t = ideal(&[&[(0, 1), (1, 1)], &[(0, 1), (2, 1)], &[(1, 1), (2, 1)]]);
        assert_eq!(alexander_dual(&t).unwrap(), t);
        assert!(matches!(
            alexander_dual(&not_clean()),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn power_examples() {
        let i = ideal(&[&[(0, 1)], &[(1, 1)]]);
        assert_eq!(ideal_power(&i, 2).unwrap().to_string(), "x^2, x*y, y^2");
        assert_eq!(ideal_power(&i, 1).unwrap(), i);
        let ci = ideal(&[&[(0, 2)], &[(1, 3)]]);
        assert_eq!(ideal_power(&ci, 2).unwrap().to_string(), "x^4, x^2*y^3, y^6");
        assert!(matches!(ideal_power(&i, 0), Err(crate::Error::Input(_))));
    }
}
