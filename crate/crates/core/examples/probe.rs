use polydepth_core::cone::{is_normal, is_very_ample};
use polydepth_core::Polytope;
use std::time::Instant;

fn witness_4d() -> Polytope {
    Polytope::from_i64_vertices(&[
        &[0, 0, 0, 1], &[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1], &[1, 0, 1, 1],
        &[0, 1, 1, 1], &[1, 1, 4, 1], &[1, 1, 5, 1], &[-1, -1, -3, -2],
    ])
}

fn main() {
    let p = witness_4d();
    let t = Instant::now();
    let b = p.bipyramid();
    println!("bipyr: {} vertices dim {} | normal {} ({:?})", b.vertices().len(), b.dim(), is_normal(&b).verdict, t.elapsed());
    let t = Instant::now();
    let va = is_very_ample(&b);
    println!("bipyr very ample: {} ({} failing vertices) ({:?})", va.very_ample, va.failures.len(), t.elapsed());

    let t = Instant::now();
    let py = p.lattice_pyramid();
    println!("pyr: normal {} ({:?})", is_normal(&py).verdict, t.elapsed());
    let t = Instant::now();
    let va = is_very_ample(&py);
    println!("pyr very ample: {} ({:?})", va.very_ample, t.elapsed());

    let t = Instant::now();
    let q = p.product_with_cube(1);
    let cert = is_normal(&q);
    println!("prism: normal {} witness {:?} ({:?})", cert.verdict, cert.witness, t.elapsed());
    let t = Instant::now();
    let va = is_very_ample(&q);
    println!("prism very ample: {} ({:?})", va.very_ample, t.elapsed());

    // duals of the depth examples must be normal
    for (name, p) in [
        ("witness", witness_4d()),
        ("P1", Polytope::from_i64_vertices(&[&[1,0,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1],&[0,-1,-1,0],&[1,0,1,0],&[1,-1,-1,0],&[-2,-1,0,-1],&[-3,-1,0,-1]])),
        ("P2", Polytope::from_i64_vertices(&[&[1,0,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1],&[-3,-2,0,0],&[3,-1,-3,-1]])),
        ("P3", Polytope::from_i64_vertices(&[&[1,0,0,0],&[0,1,0,0],&[0,0,1,0],&[0,0,0,1],&[-1,-1,-1,0],&[-2,-1,2,-2]])),
    ] {
        let t = Instant::now();
        let dual = p.dual_polytope().unwrap();
        let cert = is_normal(&dual);
        println!("{name} dual: {} lattice points, normal {} ({:?})", dual.lattice_points().len(), cert.verdict, t.elapsed());
        println!("{name}: normal {} very_ample {} spans {}", is_normal(&p).verdict, is_very_ample(&p).very_ample, polydepth_core::cone::spans_lattice(&p));
    }
}
