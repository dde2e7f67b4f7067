//! Finite simplicial complexes on at most 64 vertices and their reduced
//! homology over a field of characteristic zero.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{invariant_err, resource_err, Result};
use crate::resolutions::linalg::rank_sparse;

pub const MAX_VERTICES: usize = 64;

/// Faces are bitmasks over the vertex set. Only the facets are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<u64>,
}

fn mask_vertices(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// Colex order on faces of equal size, smaller faces first.
fn face_order(a: &u64, b: &u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then(a.cmp(b))
}

impl SimplicialComplex {
    /// The complex generated by `facets`. Non-maximal entries are dropped.
    ///
    /// With no facets at all this is the void complex, which has no faces
    /// (not even the empty one).
    pub fn from_facets<I: IntoIterator<Item = u64>>(n_vertices: usize, facets: I) -> Result<Self> {
        if n_vertices > MAX_VERTICES {
            return Err(resource_err!(
                "simplicial complex on {n_vertices} vertices (max {MAX_VERTICES})"
            ));
        }
        let mut all: Vec<u64> = facets.into_iter().collect();
        let bound = if n_vertices == 64 { u64::MAX } else { (1u64 << n_vertices) - 1 };
        if all.iter().any(|f| f & !bound != 0) {
            return Err(invariant_err!("facet uses a vertex outside 0..{n_vertices}"));
        }
        all.sort_by(|a, b| face_order(b, a));
        all.dedup();
        let mut facets: Vec<u64> = Vec::with_capacity(all.len());
        for f in all {
            if !facets.iter().any(|g| f & g == f) {
                facets.push(f);
            }
        }
        facets.sort_by(face_order);
        Ok(SimplicialComplex { n_vertices, facets })
    }

    /// Builds a complex from an explicit face list, checking that it is
    /// closed under taking subsets.
    pub fn from_faces<I: IntoIterator<Item = u64>>(n_vertices: usize, faces: I) -> Result<Self> {
        let faces: HashSet<u64> = faces.into_iter().collect();
        for &f in &faces {
            for v in mask_vertices(f) {
                if !faces.contains(&(f & !(1 << v))) {
                    return Err(invariant_err!(
                        "face {f:#b} is present but its facet without vertex {v} is not"
                    ));
                }
            }
        }
        let complex = Self::from_facets(n_vertices, faces.iter().copied())?;
        debug_assert_eq!(complex.faces().len(), faces.len());
        Ok(complex)
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::from_facets(n, [full])
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_vertices(f).collect()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// Every face, including the empty face, sorted by size then colex.
    pub fn faces(&self) -> Vec<u64> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_by(face_order);
        faces
    }

    /// Nerve of the facet cover: one vertex per facet, a face for each set
    /// of facets with a common vertex. Homotopy equivalent to `self`.
    pub fn nerve(&self) -> Result<Self> {
        let m = self.facets.len();
        if m > MAX_VERTICES {
            return Err(resource_err!("nerve on {m} facets (max {MAX_VERTICES})"));
        }
        if self.facets.contains(&0) {
            // Only the complex {∅} has an empty facet; its nerve is itself.
            return Ok(self.clone());
        }
        let mut maximal = Vec::new();
        let mut stack: Vec<(u64, u64, usize)> = vec![(0, u64::MAX, 0)];
        while let Some((set, meet, start)) = stack.pop() {
            let mut extended = false;
            for j in start..m {
                let next = meet & self.facets[j];
                if next != 0 {
                    stack.push((set | 1 << j, next, j + 1));
                    extended = true;
                }
            }
            if !extended {
                maximal.push(set);
            }
        }
        Self::from_facets(m, maximal)
    }

    /// Reduced homology dimensions `dim H̃_i` for every `i` where it is
    /// nonzero.
    pub fn reduced_homology(&self) -> BTreeMap<isize, usize> {
        if self.is_void() {
            return BTreeMap::new();
        }
        if self.facets == [0] {
            return BTreeMap::from([(-1, 1)]);
        }
        // A cone over a vertex common to all facets is contractible.
        if self.facets.iter().fold(u64::MAX, |acc, &f| acc & f) != 0 {
            return BTreeMap::new();
        }
        let direct_cost: f64 = self.facets.iter().map(|f| 2f64.powi(f.count_ones() as i32)).sum();
        if self.facets.len() <= MAX_VERTICES && 2f64.powi(self.facets.len() as i32) < direct_cost {
            if let Ok(nerve) = self.nerve() {
                return nerve.reduced_homology_direct();
            }
        }
        self.reduced_homology_direct()
    }

    /// Reduced homology computed from the boundary matrices of `self`
    /// itself, without any homotopy reduction.
    pub fn reduced_homology_direct(&self) -> BTreeMap<isize, usize> {
        let faces = self.faces();
        if faces.is_empty() {
            return BTreeMap::new();
        }
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let index: Vec<HashMap<u64, usize>> = by_size
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();

        // rank[k] = rank of the boundary from k-vertex faces to (k-1)-vertex faces.
        let mut rank = vec![0usize; top + 2];
        for k in 1..=top {
            let lower = &index[k - 1];
            rank[k] = rank_sparse(by_size[k].iter().map(|&f| {
                mask_vertices(f)
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (lower[&(f & !(1 << v))], sign)
                    })
                    .collect()
            }));
        }
        let mut dims = BTreeMap::new();
        for k in 0..=top {
            let d = by_size[k].len() - rank[k] - rank[k + 1];
            if d > 0 {
                dims.insert(k as isize - 1, d);
            }
        }
        dims
    }
}

/// `dim H̃_i(K)` over a field of characteristic zero.
pub fn simplicial_homology_dim(complex: &SimplicialComplex, i: isize) -> usize {
    complex.reduced_homology().get(&i).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_boundary_is_a_circle() {
        let k = SimplicialComplex::from_facets(3, [0b011, 0b101, 0b110]).unwrap();
        assert_eq!(simplicial_homology_dim(&k, 1), 1);
        assert_eq!(simplicial_homology_dim(&k, 0), 0);
        assert_eq!(k.reduced_homology_direct(), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn full_simplex_is_acyclic() {
        for n in 1..6 {
            let k = SimplicialComplex::simplex(n).unwrap();
            assert!(k.reduced_homology().is_empty());
            assert!(k.reduced_homology_direct().is_empty());
        }
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_facets(2, [0b01, 0b10]).unwrap();
        assert_eq!(simplicial_homology_dim(&k, 0), 1);
    }

    #[test]
    fn empty_face_only() {
        let k = SimplicialComplex::from_facets(3, [0]).unwrap();
        assert_eq!(k.reduced_homology(), BTreeMap::from([(-1, 1)]));
        let void = SimplicialComplex::from_facets(3, []).unwrap();
        assert!(void.reduced_homology().is_empty());
        assert!(void.faces().is_empty());
    }

    #[test]
    fn faces_and_closure() {
        let k = SimplicialComplex::from_facets(3, [0b011, 0b100, 0b001]).unwrap();
        assert_eq!(k.facets(), &[0b100, 0b011]);
        assert_eq!(k.faces(), vec![0, 0b001, 0b010, 0b100, 0b011]);
        assert!(SimplicialComplex::from_faces(3, [0, 1, 2, 3]).is_ok());
        assert!(SimplicialComplex::from_faces(3, [0, 1, 3]).is_err());
    }

    #[test]
    fn octahedron_is_a_sphere() {
        // Boundary of the cross-polytope on {0,1},{2,3},{4,5}.
        let mut facets = vec![];
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(1u64 << a | 1 << b | 1 << c);
                }
            }
        }
        let k = SimplicialComplex::from_facets(6, facets).unwrap();
        assert_eq!(k.reduced_homology(), BTreeMap::from([(2, 1)]));
        assert_eq!(k.reduced_homology_direct(), BTreeMap::from([(2, 1)]));
    }

    proptest! {
        #[test]
        fn nerve_preserves_homology(facets in prop::collection::vec(1u64..256, 1..7)) {
            let k = SimplicialComplex::from_facets(8, facets).unwrap();
            let nerve = k.nerve().unwrap();
            prop_assert_eq!(nerve.reduced_homology_direct(), k.reduced_homology_direct());
            prop_assert_eq!(k.reduced_homology(), k.reduced_homology_direct());
        }

        #[test]
        fn euler_characteristic(facets in prop::collection::vec(0u64..128, 1..6)) {
            let k = SimplicialComplex::from_facets(7, facets).unwrap();
            let mut chi: i64 = 0;
            for f in k.faces() {
                chi += if f.count_ones() % 2 == 1 { 1 } else { -1 };
            }
            // Reduced Euler characteristic with the empty face counted in degree -1.
            let homology: i64 = k
                .reduced_homology_direct()
                .iter()
                .map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
                .sum();
            prop_assert_eq!(chi, homology);
        }
    }
}
