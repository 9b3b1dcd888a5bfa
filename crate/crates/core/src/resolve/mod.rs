//! Minimal free resolutions over local group algebras and the normalized bar
//! complex.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::GroupAlgebra;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::module::{radical_layer, LocalProjective, ModuleMap, ModuleRep};

mod bar;

pub use bar::{bar_resolution, BarComplex, BAR_MAX_DEGREE, BAR_MAX_ORDER};

/// `… → F_1 → F_0 → M → 0` with every `F_n` a sum of copies of one
/// indecomposable projective, computed through degree `length()`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    module: ModuleRep,
    projective: LocalProjective,
    terms: Vec<ModuleRep>,
    ranks: Vec<usize>,
    augmentation: ModuleMap,
    /// `differentials[n - 1]` is `∂_n: F_n → F_{n-1}`.
    differentials: Vec<ModuleMap>,
}

impl FreeResolution {
    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        self.module.algebra()
    }

    pub fn projective(&self) -> &LocalProjective {
        &self.projective
    }

    /// The cutoff `D`: terms `F_0 .. F_D` are available.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// `b_0 .. b_D`, the number of copies of the projective in each term.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn term(&self, n: usize) -> &ModuleRep {
        &self.terms[n]
    }

    pub fn augmentation(&self) -> &ModuleMap {
        &self.augmentation
    }

    /// `∂_n: F_n → F_{n-1}` for `1 ≤ n ≤ D`.
    pub fn differential(&self, n: usize) -> &ModuleMap {
        assert!(
            n >= 1 && n <= self.length(),
            "differential index out of range"
        );
        &self.differentials[n - 1]
    }

    /// `∂∂ = 0`, the augmentation is onto, and image equals kernel at every
    /// computed stage.
    pub fn is_exact(&self) -> bool {
        let aug = &self.augmentation.matrix;
        if aug.rank() != self.module.dim() {
            return false;
        }
        let mut prev_rank = aug.rank();
        let mut prev_dim = self.terms[0].dim();
        let mut prev = aug;
        for d in &self.differentials {
            if !prev.mul(&d.matrix).is_zero() {
                return false;
            }
            let r = d.matrix.rank();
            if prev_dim - prev_rank != r {
                return false;
            }
            prev_rank = r;
            prev_dim = d.source.dim();
            prev = &d.matrix;
        }
        true
    }

    /// Every differential lands in `J F_{n-1}` and `F_0/JF_0 ≅ M/JM`.
    pub fn is_minimal(&self) -> bool {
        let top = |m: &ModuleRep| radical_layer(m).map(|j| m.dim() - j.dim());
        match (top(&self.terms[0]), top(&self.module)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => return false,
        }
        self.differentials
            .iter()
            .all(|d| match radical_layer(&d.target) {
                Ok(j) => d.matrix.columns().iter().all(|c| j.contains(c)),
                Err(_) => false,
            })
    }
}

/// Minimal resolution of `M` through degree `cutoff`. Each step covers the
/// previous kernel with the deterministic generator choice of
/// [`LocalProjective::cover`].
pub fn minimal_resolution(m: &ModuleRep, cutoff: usize) -> Result<FreeResolution> {
    let projective = LocalProjective::for_module(m)?;
    let cover = projective.cover(m)?;
    let (mut kernel, mut kernel_basis) = cover.kernel();
    let mut terms = alloc::vec![cover.map.source.clone()];
    let mut ranks = alloc::vec![cover.rank()];
    let mut differentials = Vec::with_capacity(cutoff);
    for n in 1..=cutoff {
        let c = projective.cover(&kernel)?;
        let matrix = kernel_basis.mul(&c.map.matrix);
        let source = c.map.source.clone();
        differentials.push(ModuleMap::new_unchecked(
            source.clone(),
            terms[n - 1].clone(),
            matrix,
        ));
        (kernel, kernel_basis) = c.kernel();
        ranks.push(c.rank());
        terms.push(source);
    }
    Ok(FreeResolution {
        module: m.clone(),
        projective,
        terms,
        ranks,
        augmentation: cover.map,
        differentials,
    })
}

/// `b_0 .. b_D` for the trivial module: the ranks of its minimal resolution.
pub fn betti_numbers(group: &Arc<FiniteGroup>, p: u32, cutoff: usize) -> Result<Vec<usize>> {
    let alg = GroupAlgebra::new(group.clone(), p)?;
    Ok(minimal_resolution(&ModuleRep::trivial(&alg), cutoff)?
        .ranks()
        .to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::matrix::FpMatrix;

    fn arc(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(spec).unwrap())
    }

    #[test]
    fn cyclic_two_group_periodicity() {
        let alg = GroupAlgebra::new(arc("C4"), 2).unwrap();
        let res = minimal_resolution(&ModuleRep::trivial(&alg), 6).unwrap();
        assert_eq!(res.ranks(), [1; 7]);
        assert!(res.is_exact() && res.is_minimal());
        let f = alg.field();
        let y = alg.sub(&alg.basis(1), &alg.one());
        let y3 = alg.mul(&alg.mul(&y, &y), &y);
        assert_eq!(res.differential(1).matrix, alg.left_mult_matrix(&y));
        assert_eq!(res.differential(2).matrix, alg.left_mult_matrix(&y3));
        for n in 1..=4 {
            assert_eq!(res.differential(n).matrix, res.differential(n + 2).matrix);
        }
        assert_eq!(
            res.augmentation().matrix,
            FpMatrix::from_rows(f, &[vec![1; 4]])
        );
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(&arc("C9"), 3, 6).unwrap(), [1; 7]);
        assert_eq!(
            betti_numbers(&arc("Klein"), 2, 5).unwrap(),
            [1, 2, 3, 4, 5, 6]
        );
        assert_eq!(betti_numbers(&arc("C2"), 2, 5).unwrap(), [1; 6]);
        assert_eq!(betti_numbers(&arc("C4xC2"), 2, 4).unwrap(), [1, 2, 3, 4, 5]);
        assert!(betti_numbers(&arc("S3"), 3, 2).is_err());
    }

    #[test]
    fn free_and_block_modules() {
        let alg = GroupAlgebra::new(arc("Klein"), 2).unwrap();
        let res = minimal_resolution(&ModuleRep::free(&alg, 2), 3).unwrap();
        assert_eq!(res.ranks(), [2, 0, 0, 0]);
        assert!(res.is_exact());
        // trivial module of C6 in characteristic 3 lives in the block F_3[x]/((x-1)^3)
        let res = minimal_resolution(
            &ModuleRep::trivial(&GroupAlgebra::new(arc("C6"), 3).unwrap()),
            4,
        )
        .unwrap();
        assert_eq!(res.ranks(), [1; 5]);
        assert_eq!(res.term(1).dim(), 3);
        assert!(res.is_exact() && res.is_minimal());
    }
}
