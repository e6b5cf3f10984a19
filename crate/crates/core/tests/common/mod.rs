//! Shared test instances.

use polydepth_core::matrix::Int;
use polydepth_core::polytope::points_from_i64;
use polydepth_core::Polytope;

/// The non-normal very ample reflexive 4-polytope with 9 vertices.
pub fn witness_4d() -> Polytope {
    Polytope::from_i64_vertices(&[
        &[0, 0, 0, 1],
        &[1, 0, 0, 1],
        &[0, 1, 0, 1],
        &[0, 0, 1, 1],
        &[1, 0, 1, 1],
        &[0, 1, 1, 1],
        &[1, 1, 4, 1],
        &[1, 1, 5, 1],
        &[-1, -1, -3, -2],
    ])
}

/// Its nine facet inequalities `a . x <= 1`, as published.
pub fn witness_4d_facet_normals() -> Vec<Vec<Int>> {
    points_from_i64(&[
        &[0, 0, 0, 1],
        &[-3, 0, 0, 1],
        &[0, -3, 0, 1],
        &[0, 0, -1, 1],
        &[4, 4, -1, -3],
        &[3, 0, 0, -2],
        &[0, 3, 0, -2],
        &[-4, 0, 1, 0],
        &[0, -4, 1, 0],
    ])
}

/// Its twelve lattice points: the vertices, the origin and (0,0,+-1,0).
pub fn witness_4d_lattice_points() -> Vec<Vec<Int>> {
    points_from_i64(&[
        &[0, 0, 0, 1],
        &[1, 0, 0, 1],
        &[0, 1, 0, 1],
        &[0, 0, 1, 1],
        &[1, 0, 1, 1],
        &[0, 1, 1, 1],
        &[1, 1, 4, 1],
        &[1, 1, 5, 1],
        &[-1, -1, -3, -2],
        &[0, 0, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, -1, 0],
    ])
}

/// Reflexive 4-polytope whose toric ring has depth 2.
pub fn depth_two_4d() -> Polytope {
    Polytope::from_i64_vertices(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[0, -1, -1, 0],
        &[1, 0, 1, 0],
        &[1, -1, -1, 0],
        &[-2, -1, 0, -1],
        &[-3, -1, 0, -1],
    ])
}

/// Reflexive 4-polytope whose toric ring has depth 3.
pub fn depth_three_4d() -> Polytope {
    Polytope::from_i64_vertices(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-3, -2, 0, 0],
        &[3, -1, -3, -1],
    ])
}

/// Reflexive 4-polytope whose toric ring has depth 4.
pub fn depth_four_4d() -> Polytope {
    Polytope::from_i64_vertices(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-1, -1, -1, 0],
        &[-2, -1, 2, -2],
    ])
}

/// The cube `[-1,1]^d`.
pub fn cube(d: usize) -> Polytope {
    let mut pts = Vec::new();
    for mask in 0..(1u64 << d) {
        let p: Vec<i64> = (0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
        pts.push(p);
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    Polytope::from_i64_vertices(&refs)
}

/// conv{0, e_1, ..., e_d}.
pub fn unit_simplex(d: usize) -> Polytope {
    let mut pts = vec![vec![0i64; d]];
    for i in 0..d {
        let mut e = vec![0i64; d];
        e[i] = 1;
        pts.push(e);
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    Polytope::from_i64_vertices(&refs)
}

/// The segment [0, 2] on the line.
pub fn segment_0_2() -> Polytope {
    Polytope::from_i64_vertices(&[&[0], &[2]])
}
