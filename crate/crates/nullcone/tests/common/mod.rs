//! Independent oracles for integration tests. These recompute the same
//! quantities as the library through different formulas and stay
//! deliberately naive: correctness over speed.

use nullcone::algebra::StructureConstants;
use nullcone::geometry::NullFrameMetric;
use nullcone::matrix::DenseMatrix;
use nullcone::scalar::{int, Scalar};
use nullcone::tensor::{Slot, Tensor};

use num_traits::Zero;

/// Koszul route to the connection: 2 g(∇_{e_x} e_y, e_z) =
/// g([e_x,e_y],e_z) − g([e_y,e_z],e_x) + g([e_z,e_x],e_y). Returns the
/// maps ∇_{e_x} as matrices (column y holds ∇_{e_x} e_y).
pub fn koszul_nabla(mu: &StructureConstants, g: &NullFrameMetric) -> Vec<DenseMatrix> {
    let n = g.dim();
    let gm = g.matrix();
    let basis = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = nullcone::scalar::one();
        v
    };
    let pair = |u: &[Scalar], w: &[Scalar]| -> Scalar {
        let gu = gm.mul_vec(u);
        let mut acc = Scalar::zero();
        for i in 0..n {
            acc += &gu[i] * &w[i];
        }
        acc
    };
    (0..n)
        .map(|x| {
            let ex = basis(x);
            let mut m = DenseMatrix::zeros(n, n);
            for y in 0..n {
                let ey = basis(y);
                // 2 g(∇_x e_y, ·) solved against the metric
                let mut rhs = vec![Scalar::zero(); n];
                for z in 0..n {
                    let ez = basis(z);
                    let t1 = pair(&mu.bracket(&ex, &ey).unwrap(), &ez);
                    let t2 = pair(&mu.bracket(&ey, &ez).unwrap(), &ex);
                    let t3 = pair(&mu.bracket(&ez, &ex).unwrap(), &ey);
                    rhs[z] = (t1 - t2 + t3) / int(2);
                }
                // g(v, e_z) = rhs_z  ⇒  v = g⁻¹ rhs (g is its own inverse)
                let v = gm.mul_vec(&rhs);
                for i in 0..n {
                    m.set(i, y, v[i].clone());
                }
            }
            m
        })
        .collect()
}

/// Ricci tensor through the operator definition R(X,Y)Z =
/// (∇_X ∇_Y − ∇_Y ∇_X − ∇_{[X,Y]}) Z and the trace
/// Ric(Z, Y) = Σ_a ⟨θ^a, R(e_a, e_Y) e_Z⟩.
pub fn koszul_ricci(mu: &StructureConstants, g: &NullFrameMetric) -> Tensor {
    let n = g.dim();
    let nablas = koszul_nabla(mu, g);
    let basis = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = nullcone::scalar::one();
        v
    };
    let mut ric = Tensor::new(n, vec![Slot::Down, Slot::Down]);
    for b in 0..n {
        for d in 0..n {
            let mut acc = Scalar::zero();
            for a in 0..n {
                // R(e_a, e_d) e_b, component a
                let eb = basis(b);
                let t1 = nablas[a].mul_vec(&nablas[d].mul_vec(&eb));
                let t2 = nablas[d].mul_vec(&nablas[a].mul_vec(&eb));
                let ea = basis(a);
                let ed = basis(d);
                let lie = mu.bracket(&ea, &ed).unwrap();
                let mut t3 = vec![Scalar::zero(); n];
                for (e, coef) in lie.iter().enumerate() {
                    if !coef.is_zero() {
                        let img = nablas[e].mul_vec(&eb);
                        for i in 0..n {
                            t3[i] += coef * &img[i];
                        }
                    }
                }
                acc += &t1[a] - &t2[a] - &t3[a];
            }
            ric.add_to(&[b as u8, d as u8], acc);
        }
    }
    ric
}

/// Killing form straight from the double-sum formula
/// B_{ab} = Σ_{c,d} C^c_{ad} C^d_{bc}.
pub fn killing_by_sum(mu: &StructureConstants) -> Tensor {
    let n = mu.dim();
    let mut t = Tensor::new(n, vec![Slot::Down, Slot::Down]);
    for a in 0..n {
        for b in 0..n {
            let mut acc = Scalar::zero();
            for c in 0..n {
                for d in 0..n {
                    acc += mu.get(c, a, d) * mu.get(d, b, c);
                }
            }
            t.add_to(&[a as u8, b as u8], acc);
        }
    }
    t
}

/// Jordan partition through kernel dimensions: the number of blocks of
/// size ≥ j is dim ker(M^j) − dim ker(M^(j−1)).
pub fn jordan_by_kernels(m: &DenseMatrix) -> Option<Vec<usize>> {
    let n = m.rows();
    let mut kdims = vec![0usize];
    let mut p = DenseMatrix::identity(n);
    for _ in 0..n {
        p = p.mul(m);
        kdims.push(p.kernel().len());
    }
    if *kdims.last().unwrap() != n {
        return None; // not nilpotent
    }
    let idx = (1..=n).find(|&j| kdims[j] == n).unwrap();
    let blocks_ge: Vec<usize> = (1..=idx).map(|j| kdims[j] - kdims[j - 1]).collect();
    let mut partition = Vec::new();
    for j in (1..=idx).rev() {
        let count = blocks_ge[j - 1] - if j < idx { blocks_ge[j] } else { 0 };
        for _ in 0..count {
            partition.push(j);
        }
    }
    partition.sort_unstable_by(|a, b| b.cmp(a));
    Some(partition)
}
