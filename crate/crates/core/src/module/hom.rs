//! Duals, diagonal tensor products and conjugation Hom modules.
//!
//! Coordinates: `M ⊗ N` has `m_i ⊗ n_j` at index `i * dim N + j`, and
//! `Hom_k(M, N)` stores a `dim N × dim M` matrix row-major.

use alloc::vec::Vec;

use super::{ModuleMap, ModuleRep};
use crate::matrix::FpMatrix;

/// `M* = Hom_k(M, k)` with `(g·φ)(m) = φ(g⁻¹m)`; in the dual basis `g` acts
/// by the transpose of `action(g⁻¹)`.
pub fn dual_module(m: &ModuleRep) -> ModuleRep {
    let g = m.algebra().group();
    let action = g
        .elements()
        .map(|x| m.action(g.inv(x)).transpose())
        .collect();
    ModuleRep::new(m.algebra().clone(), m.dim(), action)
}

/// Evaluation `M → M**`, `m ↦ (φ ↦ φ(m))`. In dual-of-dual coordinates this
/// is the identity matrix; the returned map has passed the linearity check.
pub fn double_dual_evaluation(m: &ModuleRep) -> ModuleMap {
    let dd = dual_module(&dual_module(m));
    ModuleMap::new(m.clone(), dd, FpMatrix::identity(m.field(), m.dim()))
        .expect("evaluation is k[G]-linear")
}

/// `M ⊗ N` with the diagonal action `g(m ⊗ n) = gm ⊗ gn`.
pub fn tensor_diagonal(m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
    assert_eq!(m.algebra(), n.algebra(), "modules over different algebras");
    let action = m
        .actions()
        .iter()
        .zip(n.actions())
        .map(|(a, b)| a.kron(b))
        .collect();
    ModuleRep::new(m.algebra().clone(), m.dim() * n.dim(), action)
}

/// The twist `M ⊗ N → N ⊗ M`, `m ⊗ n ↦ n ⊗ m`.
pub fn twist_map(m: &ModuleRep, n: &ModuleRep) -> ModuleMap {
    let (a, b) = (m.dim(), n.dim());
    let mut t = FpMatrix::zeros(m.field(), a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            t.set(j * a + i, i * b + j, 1);
        }
    }
    ModuleMap::new(tensor_diagonal(m, n), tensor_diagonal(n, m), t).expect("twist is k[G]-linear")
}

/// `Hom_k(M, N)` with the conjugation action `(g·α)(m) = g α(g⁻¹ m)`.
pub fn hom_module(m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
    assert_eq!(m.algebra(), n.algebra(), "modules over different algebras");
    let g = m.algebra().group();
    // vec(A X B) = (A ⊗ Bᵀ) vec(X) for row-major vec.
    let action = g
        .elements()
        .map(|x| n.action(x).kron(&m.action(g.inv(x)).transpose()))
        .collect();
    ModuleRep::new(m.algebra().clone(), m.dim() * n.dim(), action)
}

/// A basis of `Hom_{k[G]}(M, N)`, as the kernel of `X ↦ N(s)X − XM(s)` over
/// the group generators `s`.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Vec<ModuleMap> {
    assert_eq!(m.algebra(), n.algebra(), "modules over different algebras");
    let f = m.field();
    let (a, b) = (m.dim(), n.dim());
    let unknowns = a * b;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for s in m.algebra().group().generators() {
        let sys = n
            .action(s)
            .kron(&FpMatrix::identity(f, a))
            .sub(&FpMatrix::identity(f, b).kron(&m.action(s).transpose()));
        rows.extend((0..sys.rows()).map(|i| sys.row(i).to_vec()));
    }
    let kernel = if rows.is_empty() {
        FpMatrix::identity(f, unknowns)
    } else {
        FpMatrix::from_rows(f, &rows).kernel_basis()
    };
    kernel
        .columns()
        .into_iter()
        .map(|v| ModuleMap::new_unchecked(m.clone(), n.clone(), FpMatrix::from_vec(f, b, a, v)))
        .collect()
}

/// The natural map `N ⊗ M* → Hom_k(M, N)`, `n ⊗ φ ↦ (m ↦ φ(m) n)`.
pub fn tensor_dual_to_hom(m: &ModuleRep, n: &ModuleRep) -> ModuleMap {
    let source = tensor_diagonal(n, &dual_module(m));
    let target = hom_module(m, n);
    // n_i ⊗ φ_j is the matrix unit E_ij, which sits at row-major index i * dim M + j.
    let id = FpMatrix::identity(m.field(), m.dim() * n.dim());
    ModuleMap::new(source, target, id).expect("N ⊗ M* → Hom(M, N) is k[G]-linear")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::alg;
    use crate::module::{invariants, is_projective};

    fn sample(a: &crate::algebra::GroupAlgebra) -> ModuleRep {
        // k[G]/(y^2) with y = s - 1 for the first generator s
        let r = ModuleRep::free(a, 1);
        let y = a.sub(&a.basis(a.group().generators()[0]), &a.one());
        let y2 = a.mul(&y, &y);
        r.quotient(&[y2.coeffs]).0
    }

    #[test]
    fn duals() {
        let a = alg("C4", 2);
        let k = ModuleRep::trivial(&a);
        assert_eq!(dual_module(&k), k);
        let m = sample(&a);
        assert!(double_dual_evaluation(&m).is_bijective());
        let s3 = alg("S3", 3);
        assert!(double_dual_evaluation(&ModuleRep::free(&s3, 1)).is_bijective());
    }

    #[test]
    fn tensors_and_twist() {
        let a = alg("S3", 2);
        let k = ModuleRep::trivial(&a);
        let f = ModuleRep::free(&a, 1);
        assert_eq!(tensor_diagonal(&k, &f), f);
        assert!(twist_map(&f, &sample(&a)).is_bijective());
        assert_eq!(tensor_diagonal(&sample(&a), &f).dim(), 12);
    }

    #[test]
    fn hom_spaces() {
        let a = alg("C2", 2);
        let r = ModuleRep::free(&a, 1);
        assert_eq!(hom_space(&r, &r).len(), 2);
        let k = ModuleRep::trivial(&a);
        assert_eq!(hom_space(&k, &k).len(), 1);
        assert_eq!(hom_module(&k, &r), r);
        let s3 = alg("S3", 3);
        let m = sample(&s3);
        let h = hom_module(&m, &ModuleRep::free(&s3, 1));
        assert_eq!(
            invariants(&h).cols(),
            hom_space(&m, &ModuleRep::free(&s3, 1)).len()
        );
        assert!(tensor_dual_to_hom(&m, &sample(&s3)).is_bijective());
    }

    #[test]
    fn free_tensor_is_projective() {
        let a = alg("Klein", 2);
        let x = sample(&a);
        assert!(is_projective(&tensor_diagonal(&ModuleRep::free(&a, 1), &x)).projective);
    }
}
