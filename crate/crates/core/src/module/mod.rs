//! Finite-dimensional `k[G]`-modules as explicit matrix representations.
//!
//! A module stores one invertible matrix per group element. Module maps are
//! plain matrices on the underlying spaces together with a commutation check.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::field::PrimeField;
use crate::matrix::{EchelonBasis, FpMatrix};

mod census;
mod decompose;
mod hom;
mod klein;
mod structure;

pub use census::{
    cyclic_p_complement, distinct_indecomposables, projective_census, ProjectiveEntry,
    ProjectiveSource,
};
pub use decompose::{
    are_isomorphic, indecomposable_summands, is_indecomposable, is_projective, projective_cover,
    split_summand, strip_projective_summands, syzygy, LocalProjective, ProjectiveCover,
    ProjectivityReport, ENUMERATION_CAP,
};
pub use hom::{
    double_dual_evaluation, dual_module, hom_module, hom_space, tensor_diagonal,
    tensor_dual_to_hom, twist_map,
};
pub use klein::klein_v_family;
pub use structure::{
    derivations_h1, induce, invariants, radical_layer, restrict, socle_and_radical, DerivationSpace,
};

/// A left `k[G]`-module of finite dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    algebra: GroupAlgebra,
    dim: usize,
    action: Arc<[FpMatrix]>,
}

impl ModuleRep {
    /// Wraps one action matrix per group element.
    ///
    /// # Panics
    /// Panics if the matrices have the wrong shape or (with debug assertions)
    /// do not form a representation.
    pub fn new(algebra: GroupAlgebra, dim: usize, action: Vec<FpMatrix>) -> Self {
        assert_eq!(action.len(), algebra.dim(), "one matrix per group element");
        assert!(action.iter().all(|m| m.rows() == dim && m.cols() == dim));
        let m = Self {
            algebra,
            dim,
            action: action.into(),
        };
        debug_assert!(m.is_representation(), "action is not a representation");
        m
    }

    /// Extends the action of generators to the whole group by walking products.
    /// Returns `None` if the generator matrices do not define a representation.
    pub fn from_generators(
        algebra: GroupAlgebra,
        dim: usize,
        generators: &[(usize, FpMatrix)],
    ) -> Option<Self> {
        let g = algebra.group().clone();
        let field = algebra.field();
        let mut action: Vec<Option<FpMatrix>> = vec![None; g.order()];
        action[g.identity()] = Some(FpMatrix::identity(field, dim));
        let mut frontier = vec![g.identity()];
        while let Some(x) = frontier.pop() {
            for (s, ms) in generators {
                let y = g.mul(*s, x);
                let my = ms.mul(action[x].as_ref().unwrap());
                match &action[y] {
                    Some(existing) if *existing != my => return None,
                    Some(_) => {}
                    None => {
                        action[y] = Some(my);
                        frontier.push(y);
                    }
                }
            }
        }
        let action: Option<Vec<FpMatrix>> = action.into_iter().collect();
        let m = Self {
            algebra,
            dim,
            action: action?.into(),
        };
        m.is_representation().then_some(m)
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, g: usize) -> &FpMatrix {
        &self.action[g]
    }

    pub fn actions(&self) -> &[FpMatrix] {
        &self.action
    }

    /// `action(1) = I` and `action(g)action(h) = action(gh)` on all pairs.
    pub fn is_representation(&self) -> bool {
        let g = self.algebra.group();
        if self.action[g.identity()] != FpMatrix::identity(self.field(), self.dim) {
            return false;
        }
        g.elements().all(|a| {
            g.elements()
                .all(|b| self.action[a].mul(&self.action[b]) == self.action[g.mul(a, b)])
        })
    }

    /// Matrix of an algebra element `Σ a_g g` acting on the module.
    pub fn act(&self, a: &AlgebraElement) -> FpMatrix {
        let f = self.field();
        let mut m = FpMatrix::zeros(f, self.dim, self.dim);
        for (g, &c) in a.coeffs.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[g].scale(c));
            }
        }
        m
    }

    /// The trivial module `k`.
    pub fn trivial(algebra: &GroupAlgebra) -> Self {
        let one = FpMatrix::identity(algebra.field(), 1);
        Self::new(algebra.clone(), 1, vec![one; algebra.dim()])
    }

    /// `k[G]^r`; copy `j`, group element `g` sits at index `j * |G| + g`.
    pub fn free(algebra: &GroupAlgebra, rank: usize) -> Self {
        let action = algebra
            .group()
            .elements()
            .map(|g| {
                let reg = algebra.regular_action(g);
                (1..rank).fold(
                    if rank == 0 {
                        FpMatrix::zeros(algebra.field(), 0, 0)
                    } else {
                        reg.clone()
                    },
                    |acc, _| acc.direct_sum(&reg),
                )
            })
            .collect();
        Self::new(algebra.clone(), rank * algebra.dim(), action)
    }

    pub fn zero(algebra: &GroupAlgebra) -> Self {
        Self::free(algebra, 0)
    }

    /// A one-dimensional module given by a character `G → F_p^*`.
    pub fn character(algebra: &GroupAlgebra, values: &[u32]) -> Option<Self> {
        let f = algebra.field();
        if values.len() != algebra.dim() {
            return None;
        }
        let action: Vec<FpMatrix> = values
            .iter()
            .map(|&v| FpMatrix::from_vec(f, 1, 1, vec![v]))
            .collect();
        let m = Self {
            algebra: algebra.clone(),
            dim: 1,
            action: action.into(),
        };
        m.is_representation().then_some(m)
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        assert_eq!(self.algebra, other.algebra);
        let action = self
            .action
            .iter()
            .zip(other.action.iter())
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        ModuleRep::new(self.algebra.clone(), self.dim + other.dim, action)
    }

    /// The same module in the basis given by the columns of an invertible `basis`:
    /// new action `basis^-1 · action(g) · basis`.
    pub fn change_basis(&self, basis: &FpMatrix) -> Option<ModuleRep> {
        let inv = basis.inverse()?;
        let action = self.action.iter().map(|a| inv.mul(a).mul(basis)).collect();
        Some(ModuleRep::new(self.algebra.clone(), self.dim, action))
    }

    /// Restriction of the action to a `G`-stable subspace with the given
    /// column basis. Returns `None` if the subspace is not stable.
    pub fn restrict_to_subspace(&self, basis: &FpMatrix) -> Option<ModuleRep> {
        let k = basis.cols();
        if let Some(rows) = identity_rows(basis) {
            return self.restrict_on_identity_rows(basis, &rows);
        }
        let solver = basis.solver();
        if solver.rank() != k {
            return None;
        }
        let mut action = Vec::with_capacity(self.action.len());
        for a in self.action.iter() {
            let image = a.mul(basis);
            let mut cols = Vec::with_capacity(k);
            for c in image.columns() {
                cols.push(solver.solve(&c)?);
            }
            action.push(FpMatrix::from_columns(self.field(), k, &cols));
        }
        Some(ModuleRep::new(self.algebra.clone(), k, action))
    }

    /// Restriction when `basis` restricted to `rows` is the identity: the
    /// coordinates of a vector in the span are its entries on those rows.
    fn restrict_on_identity_rows(&self, basis: &FpMatrix, rows: &[usize]) -> Option<ModuleRep> {
        let k = basis.cols();
        // stability under generators is enough
        let gens = self.algebra.group().generators();
        let mut action = Vec::with_capacity(self.action.len());
        for (g, a) in self.action.iter().enumerate() {
            let image = a.mul(basis);
            let coords = image.select_rows(rows);
            if gens.contains(&g) && basis.mul(&coords) != image {
                return None;
            }
            action.push(coords);
        }
        Some(ModuleRep::new(self.algebra.clone(), k, action))
    }

    /// Span of `k[G]·v` for the given vectors: a column basis in echelon order.
    pub fn submodule_span(&self, vectors: &[Vec<u32>]) -> EchelonBasis {
        let mut span = EchelonBasis::new(self.field(), self.dim);
        let mut queue: Vec<Vec<u32>> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if span.insert(&v) {
                for a in self.action.iter() {
                    queue.push(a.mul_vec(&v));
                }
            }
        }
        span
    }

    /// The submodule generated by `vectors`, with its basis (as columns of the
    /// ambient space).
    pub fn submodule(&self, vectors: &[Vec<u32>]) -> (ModuleRep, FpMatrix) {
        let basis = self.submodule_span(vectors).to_columns();
        let sub = self.restrict_to_subspace(&basis).expect("span is G-stable");
        (sub, basis)
    }

    /// `M / (k[G]·vectors)`, on the basis of coordinates not hit by the
    /// echelon pivots of the submodule, plus the quotient map.
    pub fn quotient(&self, vectors: &[Vec<u32>]) -> (ModuleRep, FpMatrix) {
        let span = self.submodule_span(vectors);
        let keep: Vec<usize> = (0..self.dim)
            .filter(|c| span.pivots().binary_search(c).is_err())
            .collect();
        let f = self.field();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = span.reduce(v);
            keep.iter().map(|&c| r[c]).collect()
        };
        let q = keep.len();
        let quotient_map = FpMatrix::from_columns(
            f,
            q,
            &(0..self.dim)
                .map(|i| {
                    let mut e = vec![0; self.dim];
                    e[i] = 1;
                    project(&e)
                })
                .collect::<Vec<_>>(),
        );
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<u32>> = keep
                    .iter()
                    .map(|&c| {
                        let mut e = vec![0; self.dim];
                        e[c] = 1;
                        project(&a.mul_vec(&e))
                    })
                    .collect();
                FpMatrix::from_columns(f, q, &cols)
            })
            .collect();
        (
            ModuleRep::new(self.algebra.clone(), q, action),
            quotient_map,
        )
    }
}

/// A `k[G]`-linear map `source → target` (`target.dim × source.dim` matrix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub matrix: FpMatrix,
}

impl ModuleMap {
    /// `None` unless `matrix · source(g) = target(g) · matrix` for every `g`.
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: FpMatrix) -> Option<Self> {
        assert_eq!((matrix.rows(), matrix.cols()), (target.dim(), source.dim()));
        let m = Self {
            source,
            target,
            matrix,
        };
        m.is_linear().then_some(m)
    }

    pub(crate) fn new_unchecked(source: ModuleRep, target: ModuleRep, matrix: FpMatrix) -> Self {
        debug_assert!(Self {
            source: source.clone(),
            target: target.clone(),
            matrix: matrix.clone()
        }
        .is_linear());
        Self {
            source,
            target,
            matrix,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.source.algebra().group().elements().all(|g| {
            self.matrix.mul(self.source.action(g)) == self.target.action(g).mul(&self.matrix)
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        }
    }
}

/// Rows `r_0, .., r_{k-1}` with `basis[r_j]` the `j`-th unit row, if they
/// exist.
fn identity_rows(basis: &FpMatrix) -> Option<Vec<usize>> {
    let mut rows = vec![usize::MAX; basis.cols()];
    for r in 0..basis.rows() {
        let row = basis.row(r);
        let mut nz = row.iter().enumerate().filter(|(_, &v)| v != 0);
        if let (Some((j, &1)), None) = (nz.next(), nz.next()) {
            if rows[j] == usize::MAX {
                rows[j] = r;
            }
        }
    }
    rows.iter().all(|&r| r != usize::MAX).then_some(rows)
}
