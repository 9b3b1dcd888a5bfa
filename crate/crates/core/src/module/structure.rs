//! Invariants, socle and radical layers, derivations, restriction and induction.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::ModuleRep;
use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::SubgroupData;
use crate::matrix::{EchelonBasis, FpMatrix};

fn stacked_kernel(m: &ModuleRep, blocks: impl Iterator<Item = FpMatrix>) -> FpMatrix {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for b in blocks {
        rows.extend((0..b.rows()).map(|i| b.row(i).to_vec()));
    }
    if rows.is_empty() {
        return FpMatrix::identity(m.field(), m.dim());
    }
    FpMatrix::from_rows(m.field(), &rows).kernel_basis()
}

/// `M^G` as a column basis.
pub fn invariants(m: &ModuleRep) -> FpMatrix {
    let id = FpMatrix::identity(m.field(), m.dim());
    let gens = m.algebra().group().generators();
    stacked_kernel(m, gens.into_iter().map(|s| m.action(s).sub(&id)))
}

/// `J·M` as an echelon basis, for algebras whose radical is available.
pub fn radical_layer(m: &ModuleRep) -> Result<EchelonBasis> {
    let g = m.algebra().group();
    let mut span = EchelonBasis::new(m.field(), m.dim());
    if g.is_p_group(m.algebra().p()) {
        // J = Σ (s − 1)k[G] over generators s, so J·M = Σ (s − 1)M
        let id = FpMatrix::identity(m.field(), m.dim());
        for s in g.generators() {
            for v in m.action(s).sub(&id).columns() {
                span.insert(&v);
            }
        }
        return Ok(span);
    }
    let j = m.algebra().jacobson_radical()?;
    for c in j.columns() {
        let a = m.act(&m.algebra().element(c));
        for v in a.columns() {
            span.insert(&v);
        }
    }
    Ok(span)
}

/// `(soc M, J·M)` as column bases; the socle is the annihilator of `J`.
pub fn socle_and_radical(m: &ModuleRep) -> Result<(FpMatrix, FpMatrix)> {
    let j = m.algebra().jacobson_radical()?;
    let alg = m.algebra();
    let socle = stacked_kernel(m, j.columns().into_iter().map(|c| m.act(&alg.element(c))));
    Ok((socle, radical_layer(m)?.to_columns()))
}

/// Derivations `θ: G → M` with `θ(gh) = θ(g) + gθ(h)`, the inner ones
/// `g ↦ (g − 1)m`, and `dim H¹(G, M)`.
///
/// Vectors have length `|G| · dim M`, with `θ(g)` in the block starting at
/// `g * dim M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub der_basis: FpMatrix,
    pub inn_basis: FpMatrix,
    pub h1_dim: usize,
}

impl DerivationSpace {
    /// Checks the Leibniz rule for a vector of the form above.
    pub fn is_derivation(m: &ModuleRep, theta: &[u32]) -> bool {
        let g = m.algebra().group();
        let d = m.dim();
        let f = m.field();
        let at = |x: usize| &theta[x * d..(x + 1) * d];
        g.elements().all(|a| {
            g.elements().all(|b| {
                let rhs = m.action(a).mul_vec(at(b));
                let lhs = at(g.mul(a, b));
                (0..d).all(|i| lhs[i] == f.add(at(a)[i], rhs[i]))
            })
        })
    }
}

pub fn derivations_h1(m: &ModuleRep) -> DerivationSpace {
    let g = m.algebra().group();
    let f = m.field();
    let (n, d) = (g.order(), m.dim());
    let unknowns = n * d;
    let mut system = FpMatrix::zeros(f, n * n * d, unknowns);
    for a in g.elements() {
        for b in g.elements() {
            let row0 = (a * n + b) * d;
            let ab = g.mul(a, b);
            let ma = m.action(a);
            for i in 0..d {
                let r = row0 + i;
                // θ(ab) − θ(a) − aθ(b) = 0
                let add = |sys: &mut FpMatrix, col: usize, v: u32| {
                    let cur = sys.get(r, col);
                    sys.set(r, col, f.add(cur, v));
                };
                add(&mut system, ab * d + i, 1);
                add(&mut system, a * d + i, f.neg(1));
                for k in 0..d {
                    add(&mut system, b * d + k, f.neg(ma.get(i, k)));
                }
            }
        }
    }
    let der_basis = if unknowns == 0 {
        FpMatrix::zeros(f, 0, 0)
    } else {
        system.kernel_basis()
    };
    let id = FpMatrix::identity(f, d);
    let inner = g
        .elements()
        .map(|x| m.action(x).sub(&id))
        .reduce(|acc, b| acc.vstack(&b))
        .expect("nonempty group");
    let inn_basis = inner.column_space();
    let h1_dim = der_basis.cols() - inn_basis.cols();
    DerivationSpace {
        der_basis,
        inn_basis,
        h1_dim,
    }
}

fn check_parent(m: &ModuleRep, h: &SubgroupData) -> Result<()> {
    if **h.parent() != **m.algebra().group() {
        return Err(Error::NotSubgroup);
    }
    Ok(())
}

/// `M` viewed as a `k[H]`-module. Subgroup element `i` is `h.members()[i]`.
pub fn restrict(m: &ModuleRep, h: &SubgroupData) -> Result<ModuleRep> {
    check_parent(m, h)?;
    let (sub, embedding) = h.as_group();
    let alg = GroupAlgebra::new(Arc::new(sub), m.field().p())?;
    let action = embedding.iter().map(|&x| m.action(x).clone()).collect();
    Ok(ModuleRep::new(alg, m.dim(), action))
}

/// `k[G] ⊗_{k[H]} N` on blocks indexed by the left coset representatives
/// `t_i` of `H`: if `g t_i = t_j u` with `u ∈ H`, then `g` maps block `i` to
/// block `j` by `N(u)`.
pub fn induce(n: &ModuleRep, h: &SubgroupData, algebra: &GroupAlgebra) -> Result<ModuleRep> {
    if **h.parent() != **algebra.group() || n.field() != algebra.field() {
        return Err(Error::NotSubgroup);
    }
    let (sub, _) = h.as_group();
    if sub != **n.algebra().group() {
        return Err(Error::NotSubgroup);
    }
    let g = algebra.group();
    let reps = h.left_coset_reps();
    let r = reps.len();
    let d = n.dim();
    let f = algebra.field();
    let mut coset_of = vec![0; g.order()];
    for (i, &t) in reps.iter().enumerate() {
        for &u in h.members() {
            coset_of[g.mul(t, u)] = i;
        }
    }
    let action = g
        .elements()
        .map(|x| {
            let mut a = FpMatrix::zeros(f, r * d, r * d);
            for (i, &t) in reps.iter().enumerate() {
                let gt = g.mul(x, t);
                let j = coset_of[gt];
                let u = g.mul(g.inv(reps[j]), gt);
                let idx = h.members().binary_search(&u).expect("coset decomposition");
                let block = n.action(idx);
                for p in 0..d {
                    for q in 0..d {
                        a.set(j * d + p, i * d + q, block.get(p, q));
                    }
                }
            }
            a
        })
        .collect();
    Ok(ModuleRep::new(algebra.clone(), r * d, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroup_generated;
    use crate::module::are_isomorphic;
    use crate::module::tests::alg;

    #[test]
    fn invariant_dims() {
        let a = alg("Klein", 2);
        let inv = invariants(&ModuleRep::free(&a, 1));
        assert_eq!(inv.cols(), 1);
        assert_eq!(inv.column(0), vec![1, 1, 1, 1]);
        assert_eq!(invariants(&ModuleRep::trivial(&a)).cols(), 1);
    }

    #[test]
    fn socles() {
        let a = alg("Klein", 2);
        let (soc, rad) = socle_and_radical(&ModuleRep::free(&a, 1)).unwrap();
        assert_eq!((soc.cols(), rad.cols()), (1, 3));
        let (soc, rad) = socle_and_radical(&ModuleRep::trivial(&a)).unwrap();
        assert_eq!((soc.cols(), rad.cols()), (1, 0));
        assert!(socle_and_radical(&ModuleRep::trivial(&alg("S3", 3))).is_err());
    }

    #[test]
    fn h1_of_trivial_coefficients() {
        for (spec, p, h1) in [
            ("C2", 2, 1),
            ("Klein", 2, 2),
            ("S3", 3, 0),
            ("S3", 2, 1),
            ("C3", 2, 0),
        ] {
            let a = alg(spec, p);
            let der = derivations_h1(&ModuleRep::trivial(&a));
            assert_eq!(der.h1_dim, h1, "{spec} p={p}");
            assert_eq!(der.inn_basis.cols(), 0);
            for v in der.der_basis.columns() {
                assert!(DerivationSpace::is_derivation(&ModuleRep::trivial(&a), &v));
            }
        }
        // free modules have no first cohomology
        let a = alg("C4", 2);
        assert_eq!(derivations_h1(&ModuleRep::free(&a, 1)).h1_dim, 0);
    }

    #[test]
    fn induction_and_restriction() {
        let a = alg("S3", 3);
        let g = a.group().clone();
        let h = subgroup_generated(&g, &[g.find_label("a").unwrap()]).unwrap();
        let (hg, _) = h.as_group();
        let ha = GroupAlgebra::new(Arc::new(hg), 3).unwrap();
        let triv = induce(&ModuleRep::trivial(&ha), &h, &a).unwrap();
        let sign = induce(&ModuleRep::character(&ha, &[1, 2]).unwrap(), &h, &a).unwrap();
        assert_eq!((triv.dim(), sign.dim()), (3, 3));
        assert_ne!(invariants(&triv).cols(), invariants(&sign).cols());
        assert!(!are_isomorphic(&triv, &sign).unwrap());
        let res = restrict(&ModuleRep::free(&a, 1), &h).unwrap();
        assert!(are_isomorphic(&res, &ModuleRep::free(&ha, 3)).unwrap());
    }
}
