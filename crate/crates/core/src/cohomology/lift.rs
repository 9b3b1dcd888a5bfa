//! Cohomology classes over a minimal resolution of `k`, chain-map lifts and
//! the composition product.
//!
//! Over a minimal resolution every cochain `F_n → k` is a cocycle and none is
//! a coboundary, so a class is just its values on the generators of `F_n`.
//! A degree-`n` class lifts to maps `α_m: F_m → F_{m−n}` with
//! `∂α_m = (−1)ⁿ α_{m−1}∂` and `ε α_n` equal to the class. The product is
//! `x · y = x ∘ α^y_{|x|+|y|}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{FpMatrix, LinearSolver};
use crate::module::{ModuleMap, ModuleRep};
use crate::resolve::FreeResolution;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub degree: usize,
    /// Values on the generators of `F_degree`.
    pub coords: Vec<u32>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// The `i`-th canonical basis class of `Extⁿ`.
    pub fn basis(res: &FreeResolution, degree: usize, i: usize) -> Self {
        let mut coords = alloc::vec![0; res.ranks()[degree]];
        coords[i] = 1;
        Self { degree, coords }
    }
}

/// A chain map lifting a class; `maps[i]` is `α_{n+i}: F_{n+i} → F_i`.
#[derive(Debug, Clone)]
pub struct ChainMapLift {
    pub class: CohomologyClass,
    maps: Vec<ModuleMap>,
}

impl ChainMapLift {
    /// Highest source degree available.
    pub fn top_degree(&self) -> usize {
        self.class.degree + self.maps.len() - 1
    }

    /// `α_m: F_m → F_{m−n}`.
    pub fn component(&self, m: usize) -> &ModuleMap {
        &self.maps[m - self.class.degree]
    }

    /// Checks `∂α_m = (−1)ⁿ α_{m−1}∂` for every stored degree and that the
    /// augmentation recovers the class.
    pub fn is_chain_map(&self, res: &FreeResolution) -> bool {
        let n = self.class.degree;
        let f = res.algebra().field();
        let sign = if n.is_multiple_of(2) { 1 } else { f.neg(1) };
        let eps = &res.augmentation().matrix;
        let top = self.component(n);
        if cochain_values(res, n, &eps.mul(&top.matrix)) != self.class.coords {
            return false;
        }
        (n + 1..=self.top_degree()).all(|m| {
            let lhs = res
                .differential(m - n)
                .matrix
                .mul(&self.component(m).matrix);
            let rhs = self
                .component(m - 1)
                .matrix
                .mul(&res.differential(m).matrix)
                .scale(sign);
            lhs == rhs
        })
    }
}

fn check_shape(res: &FreeResolution) -> Result<()> {
    let alg = res.algebra();
    let local = alg.group().is_p_group(alg.p());
    if !local || *res.module() != ModuleRep::trivial(alg) {
        return Err(Error::UnsupportedShape(
            "cohomology products need a resolution of k over a p-group".into(),
        ));
    }
    Ok(())
}

/// Values of a row functional `F_n → k` on the generators of `F_n`.
fn cochain_values(res: &FreeResolution, n: usize, functional: &FpMatrix) -> Vec<u32> {
    let order = res.algebra().dim();
    let id = res.algebra().group().identity();
    (0..res.ranks()[n])
        .map(|j| functional.get(0, j * order + id))
        .collect()
}

/// Extends generator images `x_j ∈ target` to the `k[G]`-linear map on `F`.
fn extend_linearly(source: &ModuleRep, target: &ModuleRep, images: &[Vec<u32>]) -> ModuleMap {
    let g = source.algebra().group();
    let mut cols = Vec::with_capacity(source.dim());
    for x in images {
        for h in g.elements() {
            cols.push(target.action(h).mul_vec(x));
        }
    }
    let matrix = FpMatrix::from_columns(source.field(), target.dim(), &cols);
    ModuleMap::new_unchecked(source.clone(), target.clone(), matrix)
}

/// Lifts `c` through source degree `cutoff`. With a `seed`, every solution is
/// shifted by a pseudo-random element of the differential's kernel, giving a
/// different lift of the same class.
pub fn lift_cocycle_seeded(
    res: &FreeResolution,
    c: &CohomologyClass,
    cutoff: usize,
    seed: Option<u64>,
) -> Result<ChainMapLift> {
    check_shape(res)?;
    let n = c.degree;
    if cutoff > res.length() || n > cutoff {
        return Err(Error::CutoffExceeded {
            degree: cutoff.max(n),
            cutoff: res.length(),
        });
    }
    let alg = res.algebra();
    let f = alg.field();
    let order = alg.dim();
    let id = alg.group().identity();
    let mut state = seed.unwrap_or(0);
    let mut next = || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        ((state >> 33) % u64::from(f.p())) as u32
    };
    let mut maps: Vec<ModuleMap> = Vec::with_capacity(cutoff - n + 1);
    if n == 0 {
        for m in 0..=cutoff {
            let term = res.term(m);
            let matrix = FpMatrix::identity(f, term.dim()).scale(c.coords[0]);
            maps.push(ModuleMap::new_unchecked(term.clone(), term.clone(), matrix));
        }
        return Ok(ChainMapLift {
            class: c.clone(),
            maps,
        });
    }
    // α_n sends generator j to c_j times the generator of F_0 = k[G].
    let images: Vec<Vec<u32>> = c
        .coords
        .iter()
        .map(|&cj| {
            let mut v = alloc::vec![0; order];
            v[id] = cj;
            v
        })
        .collect();
    maps.push(extend_linearly(res.term(n), res.term(0), &images));
    let sign = if n.is_multiple_of(2) { 1 } else { f.neg(1) };
    let mut solvers: Vec<Option<LinearSolver>> = alloc::vec![None; cutoff + 1];
    for m in n + 1..=cutoff {
        let target_deg = m - n;
        let solver =
            solvers[target_deg].get_or_insert_with(|| res.differential(target_deg).matrix.solver());
        let d_m = &res.differential(m).matrix;
        let prev = &maps[m - 1 - n].matrix;
        let mut images = Vec::with_capacity(res.ranks()[m]);
        for j in 0..res.ranks()[m] {
            let boundary = d_m.column(j * order + id);
            let rhs: Vec<u32> = prev
                .mul_vec(&boundary)
                .into_iter()
                .map(|v| f.mul(v, sign))
                .collect();
            let mut x = solver.solve(&rhs).ok_or(Error::LiftFailed { degree: m })?;
            if seed.is_some() {
                for k in solver.kernel().columns() {
                    let a = next();
                    for (xi, ki) in x.iter_mut().zip(&k) {
                        *xi = f.add(*xi, f.mul(a, *ki));
                    }
                }
            }
            images.push(x);
        }
        maps.push(extend_linearly(res.term(m), res.term(target_deg), &images));
    }
    Ok(ChainMapLift {
        class: c.clone(),
        maps,
    })
}

/// The deterministic lift of `c` through source degree `cutoff`.
pub fn lift_cocycle(
    res: &FreeResolution,
    c: &CohomologyClass,
    cutoff: usize,
) -> Result<ChainMapLift> {
    lift_cocycle_seeded(res, c, cutoff, None)
}

/// `x · y` given a lift of `y` reaching degree `|x| + |y|`.
pub fn product_with_lift(
    res: &FreeResolution,
    x: &CohomologyClass,
    y: &ChainMapLift,
) -> Result<CohomologyClass> {
    let degree = x.degree + y.class.degree;
    if degree > y.top_degree() {
        return Err(Error::CutoffExceeded {
            degree,
            cutoff: y.top_degree(),
        });
    }
    let alg = res.algebra();
    let f = alg.field();
    let order = alg.dim();
    // x as a functional on F_{|x|}: sum of coefficients in each copy, weighted.
    let mut functional = FpMatrix::zeros(f, 1, res.term(x.degree).dim());
    for (t, &xt) in x.coords.iter().enumerate() {
        for g in 0..order {
            functional.set(0, t * order + g, xt);
        }
    }
    let composite = functional.mul(&y.component(degree).matrix);
    Ok(CohomologyClass {
        degree,
        coords: cochain_values(res, degree, &composite),
    })
}

/// The composition product `x · y`.
pub fn multiply_classes(
    res: &FreeResolution,
    x: &CohomologyClass,
    y: &CohomologyClass,
) -> Result<CohomologyClass> {
    let degree = x.degree + y.degree;
    if degree > res.length() {
        return Err(Error::CutoffExceeded {
            degree,
            cutoff: res.length(),
        });
    }
    let lift = lift_cocycle(res, y, degree)?;
    product_with_lift(res, x, &lift)
}
