//! Structural matcher for squarefree almost complete intersections.
//!
//! Such an ideal of height `q >= 2` has one of six shapes, where all `u`'s
//! and `v`'s are pairwise coprime squarefree monomials:
//!
//! * (i)   `u_1 v_1, ..., u_r v_r, u_{r+1}, ..., u_q, v_1 ... v_r`
//! * (ii)  `u_1 v_1, ..., u_r v_r, u_{r+1}, ..., u_q, u_{q+1} v_1 ... v_r`
//! * (iii) `v_1 v_2, v_1 v_3, v_2 v_3, u_4, ..., u_{q+1}`
//! * (iv)  `u_1 v_1 v_2, v_1 v_3, v_2 v_3, u_4, ...`
//! * (v)   `u_1 v_1 v_2, u_2 v_1 v_3, v_2 v_3, u_4, ...`
//! * (vi)  `u_1 v_1 v_2, u_2 v_1 v_3, u_3 v_2 v_3, u_4, ...`
//!
//! The generators that share a variable with another generator form either a
//! star (forms i, ii) or a triangle (forms iii to vi); everything else is an
//! isolated `u_k`.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify::{is_almost_complete_intersection, pairwise_disjoint};
use crate::error::{domain_err, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KtyTag {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl KtyTag {
    pub const ALL: [KtyTag; 6] = [KtyTag::I, KtyTag::II, KtyTag::III, KtyTag::IV, KtyTag::V, KtyTag::VI];

    pub fn is_star(self) -> bool {
        matches!(self, KtyTag::I | KtyTag::II)
    }

    /// Forms (ii) and (vi) are the dominant ones.
    pub fn is_dominant(self) -> bool {
        matches!(self, KtyTag::II | KtyTag::VI)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            KtyTag::I => "i",
            KtyTag::II => "ii",
            KtyTag::III => "iii",
            KtyTag::IV => "iv",
            KtyTag::V => "v",
            KtyTag::VI => "vi",
        }
    }
}

impl fmt::Display for KtyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parts of an ideal in one of the six shapes.
///
/// `u_parts` holds `u_1, ..., u_q` for form (i) and `u_1, ..., u_{q+1}` for
/// the others; in the triangle forms `u_1, u_2, u_3` may be `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtyForm {
    pub tag: KtyTag,
    pub u_parts: Vec<Monomial>,
    pub v_parts: Vec<Monomial>,
    /// Number of paired generators in the star forms.
    pub r: Option<usize>,
}

fn product<'a, I: IntoIterator<Item = &'a Monomial>>(ms: I) -> Monomial {
    ms.into_iter().fold(Monomial::one(), |acc, m| acc.mul(m))
}

impl KtyForm {
    /// Reassembles the generators from the template of the form.
    pub fn generators(&self) -> Vec<Monomial> {
        let (u, v) = (&self.u_parts, &self.v_parts);
        match self.tag {
            KtyTag::I | KtyTag::II => {
                let r = self.r.unwrap_or(v.len());
                let q = if self.tag == KtyTag::I { u.len() } else { u.len() - 1 };
                let mut gens: Vec<Monomial> = (0..r).map(|k| u[k].mul(&v[k])).collect();
                gens.extend(u[r..q].iter().cloned());
                let center = product(v);
                gens.push(if self.tag == KtyTag::I { center } else { u[q].mul(&center) });
                gens
            }
            _ => {
                let mut gens = vec![
                    u[0].mul(&v[0]).mul(&v[1]),
                    u[1].mul(&v[0]).mul(&v[2]),
                    u[2].mul(&v[1]).mul(&v[2]),
                ];
                gens.extend(u[3..].iter().cloned());
                gens
            }
        }
    }

    /// All nontrivial parts, which must be pairwise coprime.
    pub fn parts(&self) -> Vec<Monomial> {
        self.u_parts
            .iter()
            .chain(&self.v_parts)
            .filter(|m| !m.is_one())
            .cloned()
            .collect()
    }
}

/// Identifies the form of a squarefree almost complete intersection of
/// height at least 2.
///
/// A single shared pair of generators is accepted as form (ii) with `r = 1`.
pub fn kty_form(ideal: &MonomialIdeal) -> Result<KtyForm> {
    if !ideal.is_squarefree() {
        return Err(domain_err!("the structural matcher needs a squarefree ideal"));
    }
    if !is_almost_complete_intersection(ideal) {
        return Err(domain_err!("not an almost complete intersection"));
    }
    if ideal.height() < 2 {
        return Err(domain_err!("height must be at least 2"));
    }
    let gens = ideal.gens();
    let n = gens.len();
    let adjacent = |a: usize, b: usize| a != b && gens[a].shares_support(&gens[b]);
    let degree: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| adjacent(a, b)).count()).collect();
    let linked: Vec<usize> = (0..n).filter(|&a| degree[a] > 0).collect();
    let isolated: Vec<Monomial> = (0..n).filter(|&a| degree[a] == 0).map(|a| gens[a].clone()).collect();

    let form = if linked.len() == 3 && linked.iter().all(|&a| degree[a] == 2) {
        triangle(gens, &linked, isolated)?
    } else {
        star(gens, &linked, &degree, isolated)?
    };

    let rebuilt: BTreeSet<Monomial> = form.generators().into_iter().collect();
    let actual: BTreeSet<Monomial> = gens.iter().cloned().collect();
    if rebuilt != actual || !pairwise_disjoint(&form.parts()) {
        return Err(domain_err!("generators do not fit any of the six almost complete intersection forms"));
    }
    Ok(form)
}

fn star(
    gens: &[Monomial],
    linked: &[usize],
    degree: &[usize],
    isolated: Vec<Monomial>,
) -> Result<KtyForm> {
    let leaves = linked.len().saturating_sub(1);
    // With a single shared pair either end can serve as the center; take the last.
    let center = linked
        .iter()
        .rev()
        .copied()
        .find(|&a| degree[a] == leaves && leaves >= 1)
        .ok_or_else(|| domain_err!("sharing graph is neither a star nor a triangle"))?;
    if linked.iter().any(|&a| a != center && degree[a] != 1) {
        return Err(domain_err!("sharing graph is neither a star nor a triangle"));
    }
    let w = &gens[center];
    let w_support = w.support();
    let mut u_parts = Vec::new();
    let mut v_parts = Vec::new();
    for &leaf in linked.iter().filter(|&&a| a != center) {
        let v = gens[leaf].restrict(&w_support);
        u_parts.push(gens[leaf].div(&v).expect("restriction divides"));
        v_parts.push(v);
    }
    let r = v_parts.len();
    u_parts.extend(isolated);
    let rest = w.div(&product(&v_parts)).ok_or_else(|| domain_err!("star center is not squarefree-compatible"))?;
    let tag = if rest.is_one() { KtyTag::I } else { KtyTag::II };
    if tag == KtyTag::II {
        u_parts.push(rest);
    } else if r < 2 {
        return Err(domain_err!("star with a single leaf and no private center part"));
    }
    Ok(KtyForm {
        tag,
        u_parts,
        v_parts,
        r: Some(r),
    })
}

fn triangle(gens: &[Monomial], linked: &[usize], isolated: Vec<Monomial>) -> Result<KtyForm> {
    let mut corners: Vec<Monomial> = linked.iter().map(|&a| gens[a].clone()).collect();
    let private = |k: usize, c: &[Monomial]| -> Monomial {
        let others: BTreeSet<usize> = c
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .flat_map(|(_, m)| m.support())
            .collect();
        let shared = c[k].restrict(&others);
        c[k].div(&shared).expect("restriction divides")
    };
    // Corners with a nontrivial private part come first.
    let mut keyed: Vec<(bool, Monomial)> = (0..3)
        .map(|k| (private(k, &corners).is_one(), corners[k].clone()))
        .collect();
    keyed.sort_by_key(|k| k.0);
    corners = keyed.into_iter().map(|(_, m)| m).collect();

    let v1 = corners[0].gcd(&corners[1]);
    let v2 = corners[0].gcd(&corners[2]);
    let v3 = corners[1].gcd(&corners[2]);
    let mut u_parts: Vec<Monomial> = (0..3).map(|k| private(k, &corners)).collect();
    let trivial = u_parts.iter().filter(|u| u.is_one()).count();
    let tag = match trivial {
        3 => KtyTag::III,
        2 => KtyTag::IV,
        1 => KtyTag::V,
        _ => KtyTag::VI,
    };
    u_parts.extend(isolated);
    Ok(KtyForm {
        tag,
        u_parts,
        v_parts: vec![v1, v2, v3],
        r: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::polarize;
    use crate::monomial::Variables;

    fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(
            &Variables::numbered("x", n),
            gens.iter().map(|g| Monomial::squarefree(g.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pure_triangle() {
        let f = kty_form(&sq(3, &[&[0, 1], &[0, 2], &[1, 2]])).unwrap();
        assert_eq!(f.tag, KtyTag::III);
        let vs: BTreeSet<Monomial> = f.v_parts.iter().cloned().collect();
        assert_eq!(vs, (0..3).map(|v| Monomial::var(v, 1)).collect());
        assert!(f.u_parts.iter().all(Monomial::is_one));
    }

    #[test]
    fn star_form_one() {
        // (x1 y1, x2 y2, y1 y2): vars x1=0, y1=1, x2=2, y2=3.
        let f = kty_form(&sq(4, &[&[0, 1], &[2, 3], &[1, 3]])).unwrap();
        assert_eq!(f.tag, KtyTag::I);
        assert_eq!(f.r, Some(2));
    }

    #[test]
    fn single_shared_pair_is_form_two() {
        // (xy, yz, w)
        let f = kty_form(&sq(4, &[&[0, 1], &[1, 2], &[3]])).unwrap();
        assert_eq!(f.tag, KtyTag::II);
        assert_eq!(f.r, Some(1));
    }

    #[test]
    fn polarized_final_example_is_form_five() {
        // x1^2 x2 x3^3, x5 x2 x4^5, x3^3 x4^5, x6 x7^3, x8 x9^2
        let vars = Variables::numbered("x", 9);
        let m = |pairs: &[(usize, u32)]| Monomial::from_pairs(pairs.iter().map(|&(v, e)| (v - 1, e)));
        let i = MonomialIdeal::new(
            &vars,
            vec![
                m(&[(1, 2), (2, 1), (3, 3)]),
                m(&[(5, 1), (2, 1), (4, 5)]),
                m(&[(3, 3), (4, 5)]),
                m(&[(6, 1), (7, 3)]),
                m(&[(8, 1), (9, 2)]),
            ],
        )
        .unwrap();
        let (p, _) = polarize(&i);
        let f = kty_form(&p).unwrap();
        assert_eq!(f.tag, KtyTag::V);
        assert!(f.u_parts[2].is_one());
        assert!(!f.u_parts[0].is_one() && !f.u_parts[1].is_one());
        assert_eq!(f.u_parts.len(), 5);
    }

    #[test]
    fn rejects_bad_input() {
        let not_aci = sq(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        assert!(kty_form(&not_aci).is_err());
        let vars = Variables::numbered("x", 2);
        let non_sq = MonomialIdeal::new(&vars, vec![Monomial::var(0, 2), Monomial::var(1, 1)]).unwrap();
        assert!(kty_form(&non_sq).is_err());
    }
}
