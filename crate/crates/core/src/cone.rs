//! Affine semigroups of pointed rational cones.
//!
//! The central computation is the Hilbert basis: triangulate the cone
//! into simplicial subcones by placing (lexicographic insertion),
//! enumerate the lattice points of each fundamental parallelepiped via
//! the Smith normal form, and reduce the union together with the
//! generators to the irreducible elements. Normality (the integer
//! decomposition property), very ampleness and the lattice-spanning
//! condition are all answered on top of that.

use std::collections::{BTreeSet, HashSet};


use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ConeError;
use crate::matrix::{
    add_vec, dot, int, is_zero_vec, primitive_vec, scale_vec, sub_vec, Int, IntMatrix, RatMatrix,
    RatVector, SolveOutcome,
};
use crate::polytope::{dd::DualConeBuilder, LatticePointSet, Polytope};

/// A rational polyhedral cone given by primitive integer generators,
/// together with its facet description.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<Vec<Int>>,
    /// Inner facet normals: `a . x >= 0` for every `a`.
    dual_rays: Vec<Vec<Int>>,
    /// Basis of `span(C)^perp`; membership requires zero on each.
    dual_lineality: Vec<Vec<Int>>,
    pointed: bool,
}

impl Cone {
    /// Builds the cone spanned by the given vectors. Zero vectors are
    /// dropped and generators are stored primitive, sorted and deduped.
    pub fn from_generators(ambient_dim: usize, generators: Vec<Vec<Int>>) -> Cone {
        let mut gens: Vec<Vec<Int>> = generators
            .into_iter()
            .filter(|g| !is_zero_vec(g))
            .map(|g| primitive_vec(&g))
            .collect();
        gens.sort();
        gens.dedup();
        for g in &gens {
            assert_eq!(g.len(), ambient_dim);
        }

        let mut builder = DualConeBuilder::new(ambient_dim);
        for g in &gens {
            builder.insert(g.clone());
        }
        let dual_rays = builder.rays().to_vec();
        let dual_lineality = builder.lineality().to_vec();

        // pointed iff the dual cone spans the ambient space
        let mut span_rows: Vec<Vec<Int>> = dual_rays.clone();
        span_rows.extend(dual_lineality.iter().cloned());
        let pointed = if gens.is_empty() {
            true
        } else {
            !span_rows.is_empty() && IntMatrix::from_rows(span_rows).rank() == ambient_dim
        };

        Cone {
            ambient_dim,
            generators: gens,
            dual_rays,
            dual_lineality,
            pointed,
        }
    }

    /// The cone over a polytope: generators `(v, 1)` for each vertex.
    pub fn over_polytope(p: &Polytope) -> Cone {
        let gens: Vec<Vec<Int>> = p
            .vertices()
            .iter()
            .map(|v| {
                let mut g = v.clone();
                g.push(Int::one());
                g
            })
            .collect();
        Cone::from_generators(p.ambient_dim() + 1, gens)
    }

    /// The cone of a vertex: generated by `q - v` for every lattice
    /// point `q` of the polytope.
    pub fn vertex_cone(p: &Polytope, vertex: &[Int], points: &LatticePointSet) -> Cone {
        debug_assert!(p.vertices().iter().any(|v| v == vertex));
        let gens: Vec<Vec<Int>> = points.points.iter().map(|q| sub_vec(q, vertex)).collect();
        Cone::from_generators(p.ambient_dim(), gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.dual_lineality.iter().all(|l| dot(l, x).is_zero())
            && self.dual_rays.iter().all(|a| !dot(a, x).is_negative())
    }

    /// Simplicial cover of the cone by placing generators in
    /// lexicographic order; every piece is spanned by a linearly
    /// independent subset of the generators.
    fn triangulate(&self) -> Vec<Vec<usize>> {
        let mut simplices: Vec<Vec<usize>> = Vec::new();
        let mut builder = DualConeBuilder::new(self.ambient_dim);
        for (idx, g) in self.generators.iter().enumerate() {
            let in_span = builder.lineality().iter().all(|l| dot(l, g).is_zero());
            if in_span {
                let vals: Vec<Int> = builder.rays().iter().map(|a| dot(a, g)).collect();
                if vals.iter().all(|v| !v.is_negative()) {
                    // already inside: the cone and its cover are unchanged
                    continue;
                }
                let mut fresh: BTreeSet<Vec<usize>> = BTreeSet::new();
                for (a, v) in builder.rays().iter().zip(&vals) {
                    if !v.is_negative() {
                        continue;
                    }
                    // facet visible from g: extend its boundary simplices
                    for s in &simplices {
                        let tight: Vec<usize> = s
                            .iter()
                            .copied()
                            .filter(|&j| dot(a, &self.generators[j]).is_zero())
                            .collect();
                        if tight.len() + 1 == s.len() {
                            let mut t = tight;
                            t.push(idx);
                            t.sort();
                            fresh.insert(t);
                        }
                    }
                }
                simplices.extend(fresh);
            } else {
                // rank grows: join the new generator to the whole cover
                if simplices.is_empty() {
                    simplices.push(vec![idx]);
                } else {
                    for s in &mut simplices {
                        s.push(idx);
                    }
                }
            }
            builder.insert(g.clone());
        }
        simplices
    }

    /// Lattice points of the half-open fundamental parallelepiped of a
    /// linearly independent set of generators.
    fn parallelepiped_points(&self, simplex: &[usize]) -> Vec<Vec<Int>> {
        let cols: Vec<Vec<Int>> = simplex.iter().map(|&i| self.generators[i].clone()).collect();
        let w = IntMatrix::from_cols(cols.clone());
        let smith = w.snf();
        let k = simplex.len();
        let factors: Vec<Int> = (0..k).map(|i| smith.d.at(i, i).clone()).collect();
        debug_assert!(factors.iter().all(|f| f.is_positive()), "independent generators");

        // U^{-1} re-embeds class representatives into the ambient lattice;
        // invert the unimodular U by solving.
        let u_rat = smith.u.to_rational();
        // W as an (ambient x k) matrix for the reduction solves
        let w_matrix = {
            let rows: Vec<Vec<Int>> = (0..self.ambient_dim)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            RatMatrix::from_int_rows(&rows)
        };

        let mut points = Vec::new();
        let mut counter = vec![Int::zero(); k];
        loop {
            // representative y0 = U^{-1} (counter, 0, ..., 0)
            let mut target = vec![BigRational::zero(); self.ambient_dim];
            for (i, c) in counter.iter().enumerate() {
                target[i] = BigRational::from_integer(c.clone());
            }
            let y0 = match u_rat.solve_exact(&RatVector(target)) {
                SolveOutcome::Unique(v) => v.to_ints().expect("unimodular inverse is integral"),
                _ => unreachable!("U is unimodular"),
            };
            // reduce into the parallelepiped: y = y0 - W floor(lambda)
            let y_rat = RatVector(
                y0.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect(),
            );
            match w_matrix.solve_exact(&y_rat) {
                SolveOutcome::Unique(lambda) => {
                    let mut y = y0;
                    for (i, l) in lambda.0.iter().enumerate() {
                        let f = l.floor().to_integer();
                        if !f.is_zero() {
                            y = sub_vec(&y, &scale_vec(&f, &cols[i]));
                        }
                    }
                    debug_assert!(self.contains(&y));
                    points.push(y);
                }
                _ => unreachable!("simplex generators are independent"),
            }

            // odometer over the invariant-factor classes
            let mut i = 0;
            loop {
                if i == k {
                    return points;
                }
                counter[i] += 1;
                if counter[i] < factors[i] {
                    break;
                }
                counter[i] = Int::zero();
                i += 1;
            }
        }
    }

    /// The unique minimal generating set of `C` intersected with the
    /// ambient lattice, sorted by last coordinate then lexicographically.
    pub fn hilbert_basis(&self) -> Result<HilbertBasisResult, ConeError> {
        if !self.pointed {
            return Err(ConeError::NotPointed);
        }
        let mut candidates: BTreeSet<Vec<Int>> = self.generators.iter().cloned().collect();
        for simplex in self.triangulate() {
            for p in self.parallelepiped_points(&simplex) {
                if !is_zero_vec(&p) {
                    candidates.insert(p);
                }
            }
        }
        let all: Vec<Vec<Int>> = candidates.iter().cloned().collect();
        let mut elements: Vec<Vec<Int>> = Vec::new();
        for x in &all {
            let reducible = all.iter().any(|c| c != x && self.contains(&sub_vec(x, c)));
            if !reducible {
                elements.push(x.clone());
            }
        }
        elements.sort_by(|a, b| {
            let ha = a.last().expect("nonempty");
            let hb = b.last().expect("nonempty");
            ha.cmp(hb).then_with(|| a.cmp(b))
        });
        let heights = elements
            .iter()
            .map(|e| e.last().expect("nonempty").clone())
            .collect();
        Ok(HilbertBasisResult { elements, heights })
    }
}

/// Minimal generating set of an affine semigroup, with the last
/// coordinate of each element recorded as its height (meaningful for
/// homogenized cones, where height 1 means "a lattice point of P").
#[derive(Clone, Debug)]
pub struct HilbertBasisResult {
    pub elements: Vec<Vec<Int>>,
    pub heights: Vec<Int>,
}

impl HilbertBasisResult {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_height(&self) -> Option<&Int> {
        self.heights.iter().max()
    }
}

/// Outcome of the normality check. A false verdict carries a witness
/// `(point, N)`: a lattice point of `N P` that is not a sum of `N`
/// lattice points of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub verdict: bool,
    pub witness: Option<(Vec<Int>, u64)>,
}

/// A lattice polytope is normal (has the integer decomposition
/// property) iff every Hilbert basis element of the cone over it, taken
/// with respect to the full lattice, sits at height 1.
pub fn is_normal(p: &Polytope) -> NormalityCertificate {
    assert!(p.is_full_dimensional(), "normality needs a full-dimensional polytope");
    let cone = Cone::over_polytope(p);
    let hb = cone.hilbert_basis().expect("cone over a polytope is pointed");
    let mut witness: Option<(Vec<Int>, u64)> = None;
    for e in &hb.elements {
        let h = e.last().expect("nonempty");
        if *h > Int::one() {
            // elements are sorted by height then lex: first hit is minimal
            let point = e[..e.len() - 1].to_vec();
            let n = u64::try_from(h.clone()).expect("witness height fits u64");
            witness = Some((point, n));
            break;
        }
    }
    NormalityCertificate {
        verdict: witness.is_none(),
        witness,
    }
}

/// Per-vertex outcome of the very-ampleness check: Hilbert basis
/// elements of the vertex cone that are not differences of lattice
/// points.
#[derive(Clone, Debug)]
pub struct VeryAmpleness {
    pub very_ample: bool,
    pub failures: Vec<VertexFailure>,
}

#[derive(Clone, Debug)]
pub struct VertexFailure {
    pub vertex: Vec<Int>,
    pub missing: Vec<Vec<Int>>,
}

/// A polytope is very ample iff for every vertex `v` the Hilbert basis
/// of the cone generated by `{q - v : q in P cap Z^d}` consists of such
/// differences only.
pub fn is_very_ample(p: &Polytope) -> VeryAmpleness {
    assert!(p.is_full_dimensional(), "very ampleness needs a full-dimensional polytope");
    let points = p.lattice_points();
    let diff_set = |v: &[Int]| -> HashSet<Vec<Int>> {
        points.points.iter().map(|q| sub_vec(q, v)).collect()
    };
    let mut failures = Vec::new();
    for v in p.vertices() {
        let cone = Cone::vertex_cone(p, v, &points);
        let hb = cone.hilbert_basis().expect("vertex cones are pointed");
        let diffs = diff_set(v);
        let missing: Vec<Vec<Int>> = hb
            .elements
            .into_iter()
            .filter(|e| !diffs.contains(e))
            .collect();
        if !missing.is_empty() {
            failures.push(VertexFailure {
                vertex: v.clone(),
                missing,
            });
        }
    }
    VeryAmpleness {
        very_ample: failures.is_empty(),
        failures,
    }
}

/// Whether the homogenized lattice points `(a, 1)` span all of
/// `Z^{d+1}`: every Smith invariant factor of the point matrix is 1.
pub fn spans_lattice(p: &Polytope) -> bool {
    let points = p.lattice_points();
    let cols: Vec<Vec<Int>> = points
        .points
        .iter()
        .map(|q| {
            let mut c = q.clone();
            c.push(Int::one());
            c
        })
        .collect();
    let matrix = IntMatrix::from_cols(cols);
    let factors = matrix.snf().invariant_factors();
    factors.len() == p.ambient_dim() + 1 && factors.iter().all(|f| f.is_one())
}

/// Searches for a decomposition of `x` into `n` lattice points of `p`.
/// Exhaustive search over lex-nonincreasing sequences, memoizing failed
/// subproblems; returns `None` when no decomposition exists.
pub fn decompose_point(
    x: &[Int],
    n: u64,
    p: &Polytope,
) -> Result<Option<Vec<Vec<Int>>>, ConeError> {
    assert!(n >= 1);
    if !p.contains_dilated(x, n) {
        return Err(ConeError::PointNotInDilation);
    }
    let points = p.lattice_points();
    let mut failed: HashSet<(Vec<Int>, u64, usize)> = HashSet::new();

    fn search(
        target: &[Int],
        n: u64,
        max_idx: usize,
        points: &[Vec<Int>],
        p: &Polytope,
        failed: &mut HashSet<(Vec<Int>, u64, usize)>,
    ) -> Option<Vec<Vec<Int>>> {
        if n == 1 {
            let hit = points[..max_idx].iter().any(|q| q.as_slice() == target);
            return hit.then(|| vec![target.to_vec()]);
        }
        let key = (target.to_vec(), n, max_idx);
        if failed.contains(&key) {
            return None;
        }
        for (i, q) in points[..max_idx].iter().enumerate() {
            let rest = sub_vec(target, q);
            if !p.contains_dilated(&rest, n - 1) {
                continue;
            }
            if let Some(mut parts) = search(&rest, n - 1, i + 1, points, p, failed) {
                parts.push(q.clone());
                return Some(parts);
            }
        }
        failed.insert(key);
        None
    }

    Ok(search(x, n, points.points.len(), &points.points, p, &mut failed))
}

/// Brute-force IDP oracle for small instances: checks by direct sumset
/// computation that every lattice point of `N P` splits into `N` points
/// of `P`, for each `N` in the given range.
pub fn idp_holds_by_sumsets(p: &Polytope, dilations: &[u64]) -> bool {
    let points = p.lattice_points();
    for &n in dilations {
        let mut sums: BTreeSet<Vec<Int>> = points.points.iter().cloned().collect();
        for _ in 1..n {
            let mut next = BTreeSet::new();
            for s in &sums {
                for q in &points.points {
                    next.insert(add_vec(s, q));
                }
            }
            sums = next;
        }
        // enumerate N P cap Z^d via the dilated bounding box
        let d = p.ambient_dim();
        let verts = p.vertices();
        let mut lo = scale_vec(&int(n as i64), &verts[0]);
        let mut hi = lo.clone();
        for v in verts {
            let w = scale_vec(&int(n as i64), v);
            for i in 0..d {
                if w[i] < lo[i] {
                    lo[i] = w[i].clone();
                }
                if w[i] > hi[i] {
                    hi[i] = w[i].clone();
                }
            }
        }
        let mut current = lo.clone();
        'outer: loop {
            if p.contains_dilated(&current, n) && !sums.contains(&current) {
                return false;
            }
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
    }
    true
}
