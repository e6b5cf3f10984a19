//! Lattice polytopes with paired vertex and facet descriptions.
//!
//! Hulls are computed by the double description method in exact integer
//! arithmetic: the facets of `conv(S)` are the extreme rays of the dual
//! of the cone over the homogenized points `(s, 1)`. Lattice points are
//! enumerated by bounding box plus membership filtering, which is
//! adequate at the instance sizes targeted here but does not scale to
//! large volumes.

use num_traits::{One, Signed, Zero};

use crate::error::PolytopeError;
use crate::matrix::{dot, int, neg_vec, primitive_vec, sub_vec, Int, IntMatrix};

pub(crate) mod dd {
    //! Incremental double description: extreme rays of `{y : <y,g> >= 0}`.

    use super::*;

    /// Builds the dual cone of a growing list of integer vectors. After
    /// inserting `g_1, ..., g_k` the builder holds a minimal double
    /// description pair (lineality basis + extreme rays) of
    /// `{y : <y, g_i> >= 0 for all i}`.
    pub(crate) struct DualConeBuilder {
        dim: usize,
        constraints: Vec<Vec<Int>>,
        lineality: Vec<Vec<Int>>,
        rays: Vec<Vec<Int>>,
    }

    impl DualConeBuilder {
        pub fn new(dim: usize) -> Self {
            let lineality = (0..dim)
                .map(|i| {
                    let mut e = vec![Int::zero(); dim];
                    e[i] = Int::one();
                    e
                })
                .collect();
            DualConeBuilder {
                dim,
                constraints: Vec::new(),
                lineality,
                rays: Vec::new(),
            }
        }

        pub fn rays(&self) -> &[Vec<Int>] {
            &self.rays
        }

        pub fn lineality(&self) -> &[Vec<Int>] {
            &self.lineality
        }

        /// Tightness pattern of every processed constraint on `v`.
        fn zero_set(&self, v: &[Int]) -> Vec<bool> {
            self.constraints.iter().map(|c| dot(c, v).is_zero()).collect()
        }

        pub fn insert(&mut self, a: Vec<Int>) {
            assert_eq!(a.len(), self.dim);
            let lin_vals: Vec<Int> = self.lineality.iter().map(|l| dot(&a, l)).collect();
            if let Some(k) = lin_vals.iter().position(|v| !v.is_zero()) {
                // the constraint cuts the lineality space
                let mut pivot = self.lineality.remove(k);
                if dot(&a, &pivot).is_negative() {
                    pivot = neg_vec(&pivot);
                }
                let pv = dot(&a, &pivot);
                for l in &mut self.lineality {
                    let lv = dot(&a, l);
                    if !lv.is_zero() {
                        let combined: Vec<Int> = l
                            .iter()
                            .zip(&pivot)
                            .map(|(x, p)| x * &pv - &lv * p)
                            .collect();
                        *l = primitive_vec(&combined);
                    }
                }
                for r in &mut self.rays {
                    let rv = dot(&a, r);
                    if !rv.is_zero() {
                        let combined: Vec<Int> = r
                            .iter()
                            .zip(&pivot)
                            .map(|(x, p)| x * &pv - &rv * p)
                            .collect();
                        *r = primitive_vec(&combined);
                    }
                }
                self.rays.push(pivot);
                self.constraints.push(a);
                return;
            }

            let vals: Vec<Int> = self.rays.iter().map(|r| dot(&a, r)).collect();
            if vals.iter().all(|v| !v.is_negative()) {
                self.constraints.push(a);
                return;
            }

            let zeros: Vec<Vec<bool>> = self.rays.iter().map(|r| self.zero_set(r)).collect();
            let mut next: Vec<Vec<Int>> = Vec::new();
            for (r, v) in self.rays.iter().zip(&vals) {
                if !v.is_negative() {
                    next.push(r.clone());
                }
            }
            for (pi, pv) in vals.iter().enumerate() {
                if !pv.is_positive() {
                    continue;
                }
                for (ni, nv) in vals.iter().enumerate() {
                    if !nv.is_negative() {
                        continue;
                    }
                    if !self.adjacent(&zeros, pi, ni) {
                        continue;
                    }
                    let p = &self.rays[pi];
                    let n = &self.rays[ni];
                    let combined: Vec<Int> = n
                        .iter()
                        .zip(p)
                        .map(|(nc, pc)| pv * nc - nv * pc)
                        .collect();
                    let combined = primitive_vec(&combined);
                    debug_assert!(dot(&a, &combined).is_zero());
                    if !next.contains(&combined) {
                        next.push(combined);
                    }
                }
            }
            self.rays = next;
            self.constraints.push(a);
        }

        /// Combinatorial adjacency: rays `i` and `j` are adjacent iff no
        /// third ray is tight on every constraint tight at both.
        fn adjacent(&self, zeros: &[Vec<bool>], i: usize, j: usize) -> bool {
            let common: Vec<usize> = (0..self.constraints.len())
                .filter(|&c| zeros[i][c] && zeros[j][c])
                .collect();
            for (k, z) in zeros.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                if common.iter().all(|&c| z[c]) {
                    return false;
                }
            }
            true
        }
    }

    /// Extreme rays and lineality basis of `{y : <y,g> >= 0 for g in gens}`,
    /// inserting constraints in lexicographic order.
    pub(crate) fn dual_cone(dim: usize, gens: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
        let mut sorted: Vec<Vec<Int>> = gens.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut builder = DualConeBuilder::new(dim);
        for g in sorted {
            builder.insert(g);
        }
        let mut rays = builder.rays.clone();
        rays.sort();
        let mut lineality = builder.lineality.clone();
        lineality.sort();
        (rays, lineality)
    }
}

/// One facet inequality `normal . x <= rhs` with primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacetInequality {
    pub normal: Vec<Int>,
    pub rhs: Int,
}

/// One affine equation `normal . x = rhs`; present only on polytopes of
/// less than full dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineEquation {
    pub normal: Vec<Int>,
    pub rhs: Int,
}

/// The lattice points of a polytope, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePointSet {
    pub points: Vec<Vec<Int>>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[Int]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }
}

/// A lattice polytope with both a vertex and a facet description.
///
/// Vertices are stored in lexicographic order and the facet list is
/// irredundant with primitive normals, so structurally equal polytopes
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vec<Int>>,
    facets: Vec<FacetInequality>,
    equations: Vec<AffineEquation>,
}

impl Polytope {
    /// Convex hull of a nonempty set of integer points. Non-vertex input
    /// points are dropped; lower-dimensional hulls are allowed and carry
    /// their affine hull as a list of equations.
    pub fn hull_from_vertices(points: Vec<Vec<Int>>) -> Result<Polytope, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::EmptyInput);
        }
        let d = points[0].len();
        if d == 0 {
            return Err(PolytopeError::EmptyInput);
        }
        for p in &points {
            if p.len() != d {
                return Err(PolytopeError::DimensionMismatch {
                    expected: d,
                    got: p.len(),
                });
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();

        let base = points[0].clone();
        let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| sub_vec(p, &base)).collect();
        if diffs.is_empty() {
            let equations = (0..d)
                .map(|i| {
                    let mut normal = vec![Int::zero(); d];
                    normal[i] = Int::one();
                    AffineEquation {
                        rhs: base[i].clone(),
                        normal,
                    }
                })
                .collect();
            return Ok(Polytope {
                ambient_dim: d,
                dim: 0,
                vertices: points,
                facets: Vec::new(),
                equations,
            });
        }

        let diff_matrix = IntMatrix::from_rows(diffs);
        let (h, _) = diff_matrix.hnf();
        let mut pivot_cols = Vec::new();
        for r in 0..h.rows() {
            if let Some(c) = (0..h.cols()).find(|&c| !h.at(r, c).is_zero()) {
                pivot_cols.push(c);
            }
        }
        let dim = pivot_cols.len();

        let mut equations = Vec::new();
        if dim < d {
            for a in diff_matrix.kernel_basis() {
                let mut a = primitive_vec(&a);
                if let Some(first) = a.iter().find(|x| !x.is_zero()) {
                    if first.is_negative() {
                        a = neg_vec(&a);
                    }
                }
                let rhs = dot(&a, &base);
                equations.push(AffineEquation { normal: a, rhs });
            }
            equations.sort();
        }

        // facets via double description in the projected full-rank coordinates
        let projected: Vec<Vec<Int>> = points
            .iter()
            .map(|p| pivot_cols.iter().map(|&c| p[c].clone()).collect())
            .collect();
        let homogenized: Vec<Vec<Int>> = projected
            .iter()
            .map(|q| {
                let mut h = q.clone();
                h.push(Int::one());
                h
            })
            .collect();
        let (rays, lineality) = dd::dual_cone(dim + 1, &homogenized);
        debug_assert!(lineality.is_empty(), "projected points must span affinely");

        let mut facets = Vec::new();
        for ray in &rays {
            let (w, w0) = ray.split_at(dim);
            let mut normal = vec![Int::zero(); d];
            for (t, &c) in pivot_cols.iter().enumerate() {
                normal[c] = -w[t].clone();
            }
            facets.push(FacetInequality {
                normal,
                rhs: w0[0].clone(),
            });
        }
        facets.sort();

        // a point is a vertex iff its tight facet normals span the
        // projected space
        let mut vertices = Vec::new();
        for (p, q) in points.iter().zip(&projected) {
            let tight: Vec<Vec<Int>> = rays
                .iter()
                .filter(|ray| {
                    let (w, w0) = ray.split_at(dim);
                    (dot(w, q) + &w0[0]).is_zero()
                })
                .map(|ray| ray[..dim].to_vec())
                .collect();
            if tight.len() >= dim && IntMatrix::from_rows(tight).rank() == dim {
                vertices.push(p.clone());
            }
        }

        Ok(Polytope {
            ambient_dim: d,
            dim,
            vertices,
            facets,
            equations,
        })
    }

    pub fn from_i64_vertices(points: &[&[i64]]) -> Polytope {
        Polytope::hull_from_vertices(
            points
                .iter()
                .map(|p| p.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
        .expect("valid vertex data")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.facets
    }

    pub fn equations(&self) -> &[AffineEquation] {
        &self.equations
    }

    /// Vertices lying on facet `i`.
    pub fn vertices_on_facet(&self, i: usize) -> Vec<Vec<Int>> {
        let f = &self.facets[i];
        self.vertices
            .iter()
            .filter(|v| dot(&f.normal, v) == f.rhs)
            .cloned()
            .collect()
    }

    fn require_full_dimensional(&self) -> Result<(), PolytopeError> {
        if !self.is_full_dimensional() {
            return Err(PolytopeError::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            });
        }
        Ok(())
    }

    /// The polar dual `{x : <x, y> <= 1 for all y in P}`, which must come
    /// out as a lattice polytope to be representable here. The dual's
    /// vertices are the facet normals of `P` divided by their right-hand
    /// sides, so with primitive normals the dual is a lattice polytope
    /// exactly when every facet has right-hand side 1.
    pub fn dual_polytope(&self) -> Result<Polytope, PolytopeError> {
        self.require_full_dimensional()?;
        for f in &self.facets {
            if !f.rhs.is_positive() {
                return Err(PolytopeError::OriginNotInterior);
            }
        }
        for f in &self.facets {
            if !f.rhs.is_one() {
                return Err(PolytopeError::NonLatticeDual);
            }
        }
        Polytope::hull_from_vertices(self.facets.iter().map(|f| f.normal.clone()).collect())
    }

    /// A full-dimensional lattice polytope is reflexive iff the origin is
    /// interior and every facet inequality is `a . x <= 1` with integer
    /// (primitive) `a`.
    pub fn is_reflexive(&self) -> Result<bool, PolytopeError> {
        self.require_full_dimensional()?;
        Ok(self.facets.iter().all(|f| f.rhs.is_one()))
    }

    /// True iff `x` lies in the `n`-th dilation of the polytope.
    pub fn contains_dilated(&self, x: &[Int], n: u64) -> bool {
        assert_eq!(x.len(), self.ambient_dim);
        let n = int(n as i64);
        self.equations
            .iter()
            .all(|e| dot(&e.normal, x) == &e.rhs * &n)
            && self.facets.iter().all(|f| dot(&f.normal, x) <= &f.rhs * &n)
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.contains_dilated(x, 1)
    }

    /// All lattice points of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> LatticePointSet {
        let d = self.ambient_dim;
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices {
            for i in 0..d {
                if v[i] < lo[i] {
                    lo[i] = v[i].clone();
                }
                if v[i] > hi[i] {
                    hi[i] = v[i].clone();
                }
            }
        }
        let mut points = Vec::new();
        let mut current = lo.clone();
        'outer: loop {
            if self.contains(&current) {
                points.push(current.clone());
            }
            // odometer, least significant coordinate last keeps lex order
            let mut i = d;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                current[i] += 1;
                if current[i] <= hi[i] {
                    break;
                }
                current[i] = lo[i].clone();
            }
        }
        LatticePointSet { points }
    }

    /// The bipyramid: embed at height zero and add the two apexes
    /// `(0, ..., 0, +-1)`. Meaningful for polytopes that are
    /// full-dimensional in their ambient space.
    pub fn bipyramid(&self) -> Polytope {
        let d = self.ambient_dim;
        let mut points: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(Int::zero());
                w
            })
            .collect();
        for s in [1i64, -1] {
            let mut apex = vec![Int::zero(); d + 1];
            apex[d] = int(s);
            points.push(apex);
        }
        Polytope::hull_from_vertices(points).expect("bipyramid hull")
    }

    /// The lattice pyramid: embed at height zero and add the apex
    /// `(0, ..., 0, 1)`.
    pub fn lattice_pyramid(&self) -> Polytope {
        let d = self.ambient_dim;
        let mut points: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(Int::zero());
                w
            })
            .collect();
        let mut apex = vec![Int::zero(); d + 1];
        apex[d] = Int::one();
        points.push(apex);
        Polytope::hull_from_vertices(points).expect("pyramid hull")
    }

    /// The prism `P x [-1,1]^k`; `k = 0` returns the polytope unchanged.
    pub fn product_with_cube(&self, k: usize) -> Polytope {
        if k == 0 {
            return self.clone();
        }
        let mut points = Vec::new();
        for v in &self.vertices {
            for mask in 0..(1u64 << k) {
                let mut w = v.clone();
                for bit in 0..k {
                    w.push(if mask >> bit & 1 == 1 {
                        Int::one()
                    } else {
                        -Int::one()
                    });
                }
                points.push(w);
            }
        }
        Polytope::hull_from_vertices(points).expect("product hull")
    }

    /// Canonical one-line description (dims, counts, vertex list).
    pub fn describe(&self) -> String {
        let verts: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", coords.join(","))
            })
            .collect();
        format!(
            "dim {} in R^{}, {} vertices: {}",
            self.dim,
            self.ambient_dim,
            self.vertices.len(),
            verts.join(" ")
        )
    }
}

pub fn points_from_i64(points: &[&[i64]]) -> Vec<Vec<Int>> {
    points
        .iter()
        .map(|p| p.iter().map(|&x| Int::from(x)).collect())
        .collect()
}

/// Embeds each point at an extra final coordinate with the given value.
pub fn append_coord(points: &[Vec<Int>], value: i64) -> Vec<Vec<Int>> {
    points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(int(value));
            q
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit_simplex(d: usize) -> Polytope {
        let mut pts = vec![vec![0i64; d]];
        for i in 0..d {
            let mut e = vec![0i64; d];
            e[i] = 1;
            pts.push(e);
        }
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        Polytope::from_i64_vertices(&refs)
    }

    fn cube(d: usize) -> Polytope {
        let mut pts = Vec::new();
        for mask in 0..(1u64 << d) {
            let p: Vec<i64> = (0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            pts.push(p);
        }
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        Polytope::from_i64_vertices(&refs)
    }

    fn cross_polytope(d: usize) -> Polytope {
        let mut pts = Vec::new();
        for i in 0..d {
            for s in [1i64, -1] {
                let mut e = vec![0i64; d];
                e[i] = s;
                pts.push(e);
            }
        }
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        Polytope::from_i64_vertices(&refs)
    }

    #[test]
    fn unit_simplex_has_five_facets_in_dim_four() {
        let p = unit_simplex(4);
        assert_eq!(p.dim(), 4);
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.vertices().len(), 5);
    }

    #[test]
    fn interior_point_dropped_from_vertices() {
        let p = Polytope::from_i64_vertices(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1], &[0, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert!(!p.vertices().contains(&vec![Int::zero(), Int::zero()]));
    }

    #[test]
    fn cross_polytope_dual_is_cube() {
        let p = cross_polytope(4);
        assert_eq!(p.dual_polytope().unwrap(), cube(4));
    }

    #[test]
    fn cube_and_cross_are_reflexive() {
        assert!(cube(4).is_reflexive().unwrap());
        assert!(cross_polytope(4).is_reflexive().unwrap());
        assert!(cube(4).dual_polytope().unwrap().is_reflexive().unwrap());
    }

    #[test]
    fn stretched_cross_is_not_reflexive() {
        let p = Polytope::from_i64_vertices(&[&[2, 0], &[-2, 0], &[0, 1], &[0, -1]]);
        assert!(!p.is_reflexive().unwrap());
        assert_eq!(p.dual_polytope(), Err(PolytopeError::NonLatticeDual));
    }

    #[test]
    fn square_lattice_points() {
        let p = cube(2);
        assert_eq!(p.lattice_points().len(), 9);
    }

    #[test]
    fn lattice_points_are_lex_sorted_and_exact() {
        let p = Polytope::from_i64_vertices(&[&[0, 0], &[3, 1], &[1, 3]]);
        let pts = p.lattice_points();
        let mut sorted = pts.points.clone();
        sorted.sort();
        assert_eq!(pts.points, sorted);
        for q in &pts.points {
            assert!(p.contains(q));
        }
    }

    #[test]
    fn dilation_membership() {
        let p = cube(2);
        assert!(p.contains_dilated(&[int(2), int(2)], 2));
        assert!(!p.contains_dilated(&[int(3), int(0)], 2));
        assert!(p.contains_dilated(&[int(0), int(0)], 1));
    }

    #[test]
    fn bipyramid_of_segment_is_diamond() {
        let seg = Polytope::from_i64_vertices(&[&[-1], &[1]]);
        let diamond = seg.bipyramid();
        assert_eq!(diamond, cross_polytope(2));
    }

    #[test]
    fn pyramid_over_unit_segment_is_unimodular_triangle() {
        let seg = Polytope::from_i64_vertices(&[&[0], &[1]]);
        let tri = seg.lattice_pyramid();
        assert_eq!(tri.dim(), 2);
        assert_eq!(tri.vertices().len(), 3);
        assert_eq!(tri.lattice_points().len(), 3);
    }

    #[test]
    fn pyramid_adds_one_lattice_point() {
        let p = cube(2);
        assert_eq!(
            p.lattice_pyramid().lattice_points().len(),
            p.lattice_points().len() + 1
        );
    }

    #[test]
    fn product_with_cube_counts() {
        let p = cube(2);
        assert_eq!(p.product_with_cube(0), p);
        let q = p.product_with_cube(2);
        assert_eq!(q.dim(), 4);
        assert_eq!(q.vertices().len(), 16);
        assert_eq!(q.lattice_points().len(), 81);
    }

    #[test]
    fn dual_dual_roundtrip() {
        for p in [cube(3), cross_polytope(3), cube(4)] {
            let dd = p.dual_polytope().unwrap().dual_polytope().unwrap();
            assert_eq!(dd, p);
        }
    }

    #[test]
    fn vertex_facet_duality_counts() {
        for p in [cube(3), cross_polytope(4)] {
            let d = p.dual_polytope().unwrap();
            assert_eq!(d.vertices().len(), p.facets().len());
            assert_eq!(d.facets().len(), p.vertices().len());
        }
    }

    #[test]
    fn lower_dimensional_hull_flagged() {
        let p = Polytope::hull_from_vertices(points_from_i64(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]))
            .unwrap();
        assert_eq!(p.dim(), 2);
        assert!(!p.is_full_dimensional());
        assert_eq!(p.equations().len(), 1);
        assert!(matches!(
            p.dual_polytope(),
            Err(PolytopeError::NotFullDimensional { .. })
        ));
        assert!(matches!(
            p.is_reflexive(),
            Err(PolytopeError::NotFullDimensional { .. })
        ));
        // membership still works through the equations
        assert!(p.contains(&[int(0), int(0), int(1)]));
        assert!(!p.contains(&[int(0), int(0), int(0)]));
        assert_eq!(p.lattice_points().len(), 3);
    }

    #[test]
    fn single_point_hull() {
        let p = Polytope::hull_from_vertices(points_from_i64(&[&[2, -1]])).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.lattice_points().len(), 1);
    }

    #[test]
    fn hull_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..40 {
            let d = rng.gen_range(2..=3usize);
            let n = rng.gen_range(d + 1..=d + 5);
            let pts: Vec<Vec<Int>> = (0..n)
                .map(|_| (0..d).map(|_| int(rng.gen_range(-3..=3i64))).collect())
                .collect();
            let p = Polytope::hull_from_vertices(pts).unwrap();
            let q = Polytope::hull_from_vertices(p.vertices().to_vec()).unwrap();
            assert_eq!(p, q);
            for v in p.vertices() {
                assert!(p.contains(v));
            }
            // every facet supports at least dim affinely independent vertices
            for (i, _) in p.facets().iter().enumerate() {
                assert!(p.vertices_on_facet(i).len() >= p.dim());
            }
        }
    }

    #[test]
    fn facets_are_primitive_and_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let pts: Vec<Vec<Int>> = (0..6)
                .map(|_| (0..3).map(|_| int(rng.gen_range(-2..=2i64))).collect())
                .collect();
            let p = Polytope::hull_from_vertices(pts).unwrap();
            for f in p.facets() {
                assert!(crate::matrix::gcd_vec(&f.normal).is_one());
            }
            let mut sorted = p.facets().to_vec();
            sorted.dedup();
            assert_eq!(sorted.len(), p.facets().len());
        }
    }

    #[test]
    fn box_points_outside_polytope_violate_a_facet() {
        let p = Polytope::from_i64_vertices(&[&[0, 0], &[2, 1], &[1, 2]]);
        let pts = p.lattice_points();
        for x in 0..=2i64 {
            for y in 0..=2i64 {
                let q = vec![int(x), int(y)];
                let inside = p.contains(&q);
                assert_eq!(inside, pts.contains(&q));
                if !inside {
                    assert!(p
                        .facets()
                        .iter()
                        .any(|f| dot(&f.normal, &q) > f.rhs));
                }
            }
        }
    }
}
