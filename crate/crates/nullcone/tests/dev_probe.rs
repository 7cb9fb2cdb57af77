// temporary development probe - prints computed values for cross-checking
use nullcone::algebra::StructureConstants;
use nullcone::geometry::{CurvaturePack, NullFrameMetric, scalar_invariants};
use nullcone::scalar::{self, int, rat, Scalar};

fn show(name: &str, t: &nullcone::Tensor) {
    let mut parts = Vec::new();
    for (idx, v) in t.iter() {
        if idx[0] <= idx[1] {
            let coeff = if idx[0] == idx[1] { v.clone() } else { v + v };
            parts.push(format!("{} t{}t{}", scalar::format(&coeff), idx[0] + 1, idx[1] + 1));
        }
    }
    println!("  {} = {}", name, if parts.is_empty() { "0".into() } else { parts.join(" + ") });
}

fn sl2n31(a: i64, b: i64, p: usize, k: usize) {
    let mut mu = StructureConstants::new(6);
    mu.set(2, 0, 4, int(1)).unwrap();
    mu.set(1, 3, 5, int(a)).unwrap();
    mu.set(5, 0, 3, int(-b)).unwrap();
    mu.set(0, 0, 2, int(2)).unwrap();
    mu.set(4, 4, 2, int(-2)).unwrap();
    mu.set(3, 2, 3, int(b)).unwrap();
    mu.set(5, 2, 5, int(-b)).unwrap();
    mu.set(3, 4, 5, int(b)).unwrap();
    println!("sl2n31 a={a} b={b} ({p},{k}): jacobi={}", mu.is_lie_algebra());
    let g = NullFrameMetric::new(p, k).unwrap();
    let pack = CurvaturePack::compute(&mu, &g, 1);
    show("Ric", &pack.ric);
    show("B", &pack.killing);
    println!("  jordan ric={:?} killing={:?}", pack.ricci_op.jordan_type(), pack.killing_op.jordan_type());
}

#[test]
fn probe() {
    for (a, b) in [(1i64, 1i64), (0, 1), (1, 0), (0, 0), (2, 3)] {
        sl2n31(a, b, 2, 2);
    }
    sl2n31(1, 1, 3, 0);

    // case111 sl2 adjoint
    let mut mu = StructureConstants::new(6);
    mu.set(0, 0, 2, int(-2)).unwrap();
    mu.set(4, 2, 4, int(-2)).unwrap();
    mu.set(2, 0, 4, int(1)).unwrap();
    mu.set(1, 0, 3, int(-2)).unwrap();
    mu.set(3, 0, 5, int(1)).unwrap();
    mu.set(1, 1, 2, int(-2)).unwrap();
    mu.set(5, 2, 5, int(-2)).unwrap();
    mu.set(3, 1, 4, int(1)).unwrap();
    mu.set(5, 3, 4, int(-2)).unwrap();
    println!("case111-adjoint: jacobi={}", mu.is_lie_algebra());
    let g = NullFrameMetric::new(3, 0).unwrap();
    let pack = CurvaturePack::compute(&mu, &g, 1);
    show("Ric", &pack.ric);
    show("B", &pack.killing);
    println!("  jordan ric={:?} killing={:?}", pack.ricci_op.jordan_type(), pack.killing_op.jordan_type());
    println!("  invariants all zero: {}", scalar_invariants(&pack).iter().all(|(_, v)| v == &Scalar::from(num_bigint::BigInt::from(0))));

    // sl3R o55 corrected
    let mut mu = StructureConstants::new(10);
    let h = rat(1, 2);
    for (a, b, c, v) in [
        (1, 1, 7, int(-2)), (6, 6, 7, int(2)), (7, 1, 6, int(1)),
        (3, 3, 7, int(-1)), (5, 5, 7, int(-1)), (8, 7, 8, int(-1)), (10, 7, 10, int(-1)),
        (3, 1, 8, int(1)), (5, 1, 10, int(-1)), (8, 3, 6, int(-1)), (10, 5, 6, int(1)),
        (3, 3, 9, int(-3)), (8, 8, 9, int(-3)), (10, 9, 10, int(-3)), (5, 5, 9, int(3)),
        (7, 3, 10, h.clone()), (9, 3, 10, h.clone()),
        (1, 3, 5, int(1)), (6, 8, 10, int(1)),
        (7, 5, 8, h.clone()), (9, 5, 8, -h.clone()),
    ] {
        mu.set(a - 1, b - 1, c - 1, v).unwrap();
    }
    println!("sl3R-o55: jacobi={}", mu.is_lie_algebra());
    let g = NullFrameMetric::new(5, 0).unwrap();
    let pack = CurvaturePack::compute(&mu, &g, 1);
    show("Ric", &pack.ric);
    show("B", &pack.killing);
    println!("  jordan ric={:?} killing={:?}", pack.ricci_op.jordan_type(), pack.killing_op.jordan_type());
    println!("  invariants: {:?}", scalar_invariants(&pack).iter().filter(|(_, v)| !num_traits::Zero::is_zero(v)).count());
    let cert = nullcone::nullcone::membership_with_permutations(&mu, &g).unwrap();
    println!("  cert: {:?}", cert.map(|c| c.weights));

    // s3_3 control at alpha = 0,1,2 (order a2,a3,a1)
    for al in [0i64, 1, 2] {
        let mut mu = StructureConstants::new(3);
        mu.set(0, 0, 2, int(al)).unwrap();
        mu.set(1, 0, 2, int(-1)).unwrap();
        mu.set(0, 1, 2, int(1)).unwrap();
        mu.set(1, 1, 2, int(al)).unwrap();
        let g = NullFrameMetric::new(1, 1).unwrap();
        let pack = CurvaturePack::compute(&mu, &g, 1);
        println!("s3_3-control alpha={al}: jacobi={}", mu.is_lie_algebra());
        show("Ric", &pack.ric);
        show("B", &pack.killing);
        for (n, v) in scalar_invariants(&pack) {
            if !num_traits::Zero::is_zero(&v) {
                println!("    {} = {}", n, scalar::format(&v));
            }
        }
    }
}

#[test]
fn probe_undetermined() {
    use nullcone::algebra::BasisChange;
    use nullcone::matrix::DenseMatrix;
    let mut mu = StructureConstants::new(4);
    mu.set(0, 0, 2, int(2)).unwrap();
    mu.set(3, 2, 3, int(2)).unwrap();
    mu.set(2, 0, 3, int(1)).unwrap();
    let g = NullFrameMetric::new(2, 0).unwrap();
    // null-rotation generators in O(2,2), as column maps
    let candidates: Vec<Vec<i64>> = vec![
        // f1 = e1+e3, f4 = e4-e2
        vec![1,0,0,0,  0,1,0,-1,  1,0,1,0,  0,0,0,1],
        // f3 = e3+e1, f2 = e2-e4
        vec![1,0,1,0,  0,1,0,0,  0,0,1,0,  0,-1,0,1],
        // f1 = e1+2e3, f4 = e4-2e2
        vec![1,0,0,0,  0,1,0,-2,  2,0,1,0,  0,0,0,1],
        // f2 = e2+e3, f4 = e4-e1
        vec![1,0,0,-1,  0,1,0,0,  0,1,1,0,  0,0,0,1],
        // f2 = e2+e4, f3 = e3-e1
        vec![1,0,-1,0,  0,1,0,0,  0,0,1,0,  0,1,0,1],
    ];
    let gm = g.matrix();
    let mut found = false;
    for (i, flat) in candidates.iter().enumerate() {
        for (j, flat2) in candidates.iter().enumerate() {
            let a1 = DenseMatrix::from_i64(4, 4, flat);
            let a2 = DenseMatrix::from_i64(4, 4, flat2);
            let a = a1.mul(&a2);
            if a.transpose().mul(&gm).mul(&a) != gm { println!("candidate ({i},{j}) not isometry"); continue; }
            let change = BasisChange::new(a).unwrap();
            let scrambled = mu.change_basis(&change).unwrap();
            assert!(scrambled.is_lie_algebra());
            let pack = CurvaturePack::compute(&scrambled, &g, 1);
            let inv_zero = scalar_invariants(&pack).iter().all(|(_, v)| num_traits::Zero::is_zero(v));
            let cert = nullcone::nullcone::membership_with_permutations(&scrambled, &g).unwrap();
            if inv_zero && cert.is_none() && !found {
                found = true;
                println!("UNDETERMINED with pair ({i},{j}):");
                for (aa, b, c, v) in scrambled.iter_canonical() {
                    println!("  {{\"a\":{},\"b\":{},\"c\":{},\"coeff\":\"{}\"}},", aa + 1, b + 1, c + 1, scalar::format(v));
                }
            }
        }
    }
    println!("search done, found={found}");
}
