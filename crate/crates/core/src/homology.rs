//! Reduced simplicial homology over `Q` and `F_p`.
//!
//! The engine works on an explicit face list (bitmasks, including the empty
//! face). It first shrinks the complex by elementary collapses — repeatedly
//! removing a *free pair* `(σ, τ)` where `τ` is the only face properly
//! containing `σ` — which preserves homology over every field, then builds
//! the boundary matrices of the remaining core and takes exact ranks.
//!
//! Degree convention: the returned vector `dims` satisfies
//! `dims[k] = dim H̃_{k-1}`, so `dims[0]` is the degree −1 homology (1 for
//! the complex `{∅}`, 0 otherwise) and `dims[k]` for `k ≥ 1` is the usual
//! reduced homology in dimension `k - 1`. The void complex returns an empty
//! vector: all its homology is zero.

use crate::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::linalg;
use std::collections::{HashMap, HashSet};

/// Reduced homology dimensions of a complex given by its full face list
/// (which must be subset-closed and include `0` for the empty face unless
/// the complex is void). `n` bounds the vertex indices.
pub fn homology_from_faces(n: usize, faces: &[u64], field: FieldSpec) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut present: HashSet<u64> = faces.iter().copied().collect();
    debug_assert!(present.contains(&0), "non-void complex must contain the empty face");

    // immediate coface counts
    let mut counts: HashMap<u64, u32> = HashMap::with_capacity(present.len());
    for &f in &present {
        let mut c = 0;
        for v in 0..n {
            if f >> v & 1 == 0 && present.contains(&(f | 1 << v)) {
                c += 1;
            }
        }
        counts.insert(f, c);
    }

    // collapse free pairs until none remain
    let mut queue: Vec<u64> = counts.iter().filter(|&(_, &c)| c == 1).map(|(&f, _)| f).collect();
    queue.sort_unstable();
    while let Some(sigma) = queue.pop() {
        if !present.contains(&sigma) || counts[&sigma] != 1 {
            continue;
        }
        let tau = (0..n)
            .map(|v| sigma | 1 << v)
            .find(|t| *t != sigma && present.contains(t))
            .expect("coface count said one exists");
        present.remove(&sigma);
        present.remove(&tau);
        counts.remove(&sigma);
        counts.remove(&tau);
        for parent in [sigma, tau] {
            for v in 0..n {
                if parent >> v & 1 == 0 {
                    continue;
                }
                let sub = parent & !(1 << v);
                if let Some(c) = counts.get_mut(&sub) {
                    *c -= 1;
                    if *c == 1 {
                        queue.push(sub);
                    }
                }
            }
        }
    }

    let mut dims = vec![0usize; top + 1];
    if present.is_empty() {
        // collapsed to nothing: contractible
        return dims;
    }

    // group the core by face size
    let core_top = present.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); core_top + 1];
    for &f in &present {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // boundary ranks: boundary_rank[s] = rank of ∂ : C_s -> C_{s-1}
    let mut boundary_rank = vec![0usize; core_top + 2];
    for s in 1..=core_top {
        let cols = &by_size[s];
        let rows = &by_size[s - 1];
        if cols.is_empty() || rows.is_empty() {
            continue;
        }
        let mut entries: Vec<linalg::Entry> = Vec::with_capacity(cols.len() * s);
        for (j, &f) in cols.iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..n {
                if f >> v & 1 == 0 {
                    continue;
                }
                let sub = f & !(1 << v);
                // every subface of a core face is in the core
                let i = index[s - 1][&sub];
                entries.push((i, j, sign));
                sign = -sign;
            }
        }
        boundary_rank[s] = linalg::rank(field, rows.len(), cols.len(), &entries);
    }

    for (s, level) in by_size.iter().enumerate() {
        let h = level.len() as i64 - boundary_rank[s] as i64 - boundary_rank[s + 1] as i64;
        assert!(h >= 0, "boundary ranks exceed chain dimension");
        dims[s] = h as usize;
    }
    dims
}

/// Reduced homology of a complex; see [`homology_from_faces`] for the
/// degree convention.
pub fn homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    homology_from_faces(complex.vertex_count(), &complex.faces(), field)
}

/// Convenience accessor: `dim H̃_degree` from a `homology_dims` vector,
/// where `degree` starts at −1.
pub fn betti_at(dims: &[usize], degree: i64) -> usize {
    let idx = degree + 1;
    if idx < 0 {
        return 0;
    }
    dims.get(idx as usize).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_from_ideal;
    use crate::textio::parse_ideal;

    fn fields() -> Vec<FieldSpec> {
        vec![FieldSpec::Q, FieldSpec::F2, FieldSpec::F3]
    }

    fn complex(n: usize, facets: Vec<Vec<usize>>) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets).unwrap()
    }

    #[test]
    fn void_complex_has_no_homology() {
        for f in fields() {
            assert!(homology_dims(&SimplicialComplex::void(3), f).is_empty());
        }
    }

    #[test]
    fn empty_complex_has_degree_minus_one() {
        for f in fields() {
            let dims = homology_dims(&SimplicialComplex::empty_complex(3), f);
            assert_eq!(betti_at(&dims, -1), 1);
            assert_eq!(dims.iter().sum::<usize>(), 1);
        }
    }

    #[test]
    fn simplex_is_contractible() {
        for f in fields() {
            let dims = homology_dims(&SimplicialComplex::simplex(4).unwrap(), f);
            assert!(dims.iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn two_points_have_h0() {
        let c = complex(2, vec![vec![0], vec![1]]);
        for f in fields() {
            let dims = homology_dims(&c, f);
            assert_eq!(betti_at(&dims, 0), 1);
            assert_eq!(betti_at(&dims, -1), 0);
        }
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c = complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        for f in fields() {
            let dims = homology_dims(&c, f);
            assert_eq!(betti_at(&dims, 0), 0);
            assert_eq!(betti_at(&dims, 1), 1);
        }
    }

    #[test]
    fn hollow_simplex_boundary_is_a_sphere() {
        // boundary of the 3-simplex: S^2
        let facets: Vec<Vec<usize>> = (0..4)
            .map(|skip| (0..4).filter(|&v| v != skip).collect())
            .collect();
        let c = complex(4, facets);
        for f in fields() {
            let dims = homology_dims(&c, f);
            assert_eq!(betti_at(&dims, 0), 0);
            assert_eq!(betti_at(&dims, 1), 0);
            assert_eq!(betti_at(&dims, 2), 1);
        }
    }

    #[test]
    fn projective_plane_homology_depends_on_characteristic() {
        // 6-vertex triangulation via its Stanley-Reisner ideal
        let i = parse_ideal(
            "a*b*d\na*b*f\na*c*e\na*d*c\na*e*f\nb*d*e\nb*c*f\nb*c*e\nc*d*f\nd*e*f",
            Some(6),
        )
        .unwrap();
        let c = complex_from_ideal(&i).unwrap();
        assert_eq!(c.facets().len(), 10);
        assert_eq!(c.dim(), Some(2));
        let q = homology_dims(&c, FieldSpec::Q);
        assert_eq!(betti_at(&q, 1), 0);
        assert_eq!(betti_at(&q, 2), 0);
        let f2 = homology_dims(&c, FieldSpec::F2);
        assert_eq!(betti_at(&f2, 1), 1);
        assert_eq!(betti_at(&f2, 2), 1);
        let f3 = homology_dims(&c, FieldSpec::F3);
        assert_eq!(betti_at(&f3, 1), 0);
        assert_eq!(betti_at(&f3, 2), 0);
    }

    #[test]
    fn disjoint_circles_add_up() {
        // two hollow triangles on 6 vertices
        let c = complex(
            6,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]],
        );
        for f in fields() {
            let dims = homology_dims(&c, f);
            assert_eq!(betti_at(&dims, 0), 1);
            assert_eq!(betti_at(&dims, 1), 2);
        }
    }

    #[test]
    fn cones_are_acyclic() {
        // cone over the hollow triangle: vertex 3 joined to every facet
        let c = complex(4, vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]]);
        for f in fields() {
            let dims = homology_dims(&c, f);
            assert!(dims.iter().all(|&d| d == 0), "cone must be acyclic over {f}");
        }
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        // alternating face-count sum equals alternating homology sum
        let cases = vec![
            complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
            complex(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]]),
            complex(5, vec![vec![0, 1], vec![2, 3], vec![4]]),
        ];
        for c in cases {
            let faces = c.faces();
            let mut chi = 0i64; // reduced Euler characteristic
            for &f in &faces {
                let s = f.count_ones() as usize;
                chi += if s % 2 == 0 { -1 } else { 1 }; // (-1)^(dim) = (-1)^(s-1)
            }
            for field in fields() {
                let dims = homology_dims(&c, field);
                let mut hsum = 0i64;
                for (s, &d) in dims.iter().enumerate() {
                    hsum += if s % 2 == 0 { -1 } else { 1 } * d as i64;
                }
                assert_eq!(chi, hsum, "Euler characteristic mismatch over {field}");
            }
        }
    }
}
