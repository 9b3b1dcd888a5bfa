//! Projectivity, projective covers, syzygies and the brute-force
//! decomposition and isomorphism tests.
//!
//! Maps `M → k[G]` are parametrized by functionals: every `k[G]`-linear
//! `ρ: M → k[G]` has the form `ρ(m) = Σ_g φ(g⁻¹m) g` for a unique `φ ∈ M*`.
//! This turns section and retraction searches into small linear systems.
//!
//! Idempotent and isomorphism sweeps run over the image of `Hom` in the maps
//! between the tops `M/JM` when the radical is available. The kernel of
//! `End(M) → End(M/JM)` is nilpotent, so idempotents lift and a map is an
//! isomorphism iff it is one on tops.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::hom::{dual_module, hom_space};
use super::structure::{invariants, radical_layer};
use super::{ModuleMap, ModuleRep};
use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{EchelonBasis, FpMatrix};
use crate::poly::FpPoly;

/// Largest number of candidates an exhaustive sweep may visit.
pub const ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectivityReport {
    pub projective: bool,
    /// Projectivity of the dual; agrees with `projective` over group algebras.
    pub injective: bool,
    /// Number of generators of the free cover that was tested.
    pub cover_rank: usize,
}

/// Greedy generators: the first basis vectors not already in the submodule
/// generated by the earlier choices (and by `seed`).
fn greedy_generators(
    m: &ModuleRep,
    seed: EchelonBasis,
    step: impl Fn(&mut EchelonBasis, &[u32]),
) -> Vec<Vec<u32>> {
    let mut span = seed;
    let mut gens = Vec::new();
    for i in 0..m.dim() {
        if span.dim() == m.dim() {
            break;
        }
        let mut e = vec![0; m.dim()];
        e[i] = 1;
        if !span.contains(&e) {
            step(&mut span, &e);
            gens.push(e);
        }
    }
    gens
}

fn insert_orbit(m: &ModuleRep, span: &mut EchelonBasis, v: &[u32]) {
    for a in m.actions() {
        span.insert(&a.mul_vec(v));
    }
}

/// Whether the free cover `k[G]^b → M`, `e_i ↦ m_i`, has a `k[G]`-linear
/// section `s`. With `s_i(m) = Σ_g φ_i(g⁻¹m) g`, the condition `π s = id`
/// reads `Σ_i Σ_g M(g) m_i φ_i M(g⁻¹) = I`, linear in the `φ_i`.
fn free_cover_splits(m: &ModuleRep) -> (bool, usize) {
    let d = m.dim();
    if d == 0 {
        return (true, 0);
    }
    let f = m.field();
    let g = m.algebra().group();
    let gens = greedy_generators(m, EchelonBasis::new(f, d), |s, v| {
        for x in m.submodule_span(&[v.to_vec()]).vectors() {
            s.insert(x);
        }
    });
    let b = gens.len();
    let p = u64::from(f.p());
    let mut acc = vec![0u64; d * d * b * d];
    let cols = b * d;
    for (i, mi) in gens.iter().enumerate() {
        for x in g.elements() {
            let u = m.action(x).mul_vec(mi);
            let w = m.action(g.inv(x));
            for r in 0..d {
                if u[r] == 0 {
                    continue;
                }
                for c in 0..d {
                    let row = (r * d + c) * cols + i * d;
                    for k in 0..d {
                        acc[row + k] += u64::from(u[r]) * u64::from(w.get(k, c));
                    }
                }
            }
        }
    }
    let data = acc.into_iter().map(|v| (v % p) as u32).collect();
    let system = FpMatrix::from_vec(f, d * d, cols, data);
    let id = FpMatrix::identity(f, d);
    (system.solve_linear(id.data()).is_ok(), b)
}

/// Projectivity by solving for a section of a free cover; injectivity as the
/// projectivity of the dual.
pub fn is_projective(m: &ModuleRep) -> ProjectivityReport {
    let (projective, cover_rank) = free_cover_splits(m);
    let (injective, _) = free_cover_splits(&dual_module(m));
    ProjectivityReport {
        projective,
        injective,
        cover_rank,
    }
}

/// An indecomposable projective `P = k[G]e` over a local algebra (`e = 1`)
/// or over one block of a cyclic group algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalProjective {
    module: ModuleRep,
    /// Basis of `k[G]e` inside `k[G]`; column `t` is basis vector `t` of `P`.
    basis: Vec<AlgebraElement>,
    idempotent: AlgebraElement,
    /// Spans the socle of `P`; a module has `P` as a summand iff this element
    /// acts nonzero on it.
    socle: AlgebraElement,
    top_dim: usize,
}

impl LocalProjective {
    /// `k[G]` itself, for a `p`-group `G`.
    pub fn regular(algebra: &GroupAlgebra) -> Result<Self> {
        let g = algebra.group();
        if !g.is_p_group(algebra.p()) {
            return Err(Error::UnsupportedShape(format!(
                "k[G] is not local for |G| = {} in characteristic {}",
                g.order(),
                algebra.p()
            )));
        }
        Ok(Self {
            module: ModuleRep::free(algebra, 1),
            basis: g.elements().map(|x| algebra.basis(x)).collect(),
            idempotent: algebra.one(),
            socle: algebra.element(vec![1; g.order()]),
            top_dim: 1,
        })
    }

    /// `k[G]e_i` for block `i` of a cyclic group algebra.
    pub fn block(algebra: &GroupAlgebra, index: usize) -> Result<Self> {
        let dec = algebra.crt_decompose()?;
        let block = dec
            .blocks
            .get(index)
            .ok_or_else(|| Error::UnsupportedShape(format!("no block {index} in k[G]")))?;
        let e = dec.idempotents(algebra).swap_remove(index);
        let g = algebra.group();
        let f = algebra.field();
        let mut span = EchelonBasis::new(f, algebra.dim());
        for x in g.elements() {
            span.insert(&algebra.mul(&algebra.basis(x), &e).coeffs);
        }
        let basis_cols = span.to_columns();
        let module = ModuleRep::free(algebra, 1)
            .restrict_to_subspace(&basis_cols)
            .expect("k[G]e is a left ideal");
        // f^(p^a - 1) evaluated at the generator, times e
        let s_poly = block.factor.pow(block.exponent as u64 - 1);
        let socle = algebra.mul(&eval_at_generator(algebra, &s_poly, &dec.exponent_of), &e);
        let basis = basis_cols
            .columns()
            .into_iter()
            .map(|c| algebra.element(c))
            .collect();
        let top_dim = block.factor.degree().expect("irreducible factor");
        Ok(Self {
            module,
            basis,
            idempotent: e,
            socle,
            top_dim,
        })
    }

    /// The indecomposable projective whose block contains `m`.
    pub fn for_module(m: &ModuleRep) -> Result<Self> {
        let alg = m.algebra();
        if alg.group().is_p_group(alg.p()) {
            return Self::regular(alg);
        }
        if !alg.group().is_cyclic() {
            return Err(Error::UnsupportedShape(format!(
                "modules over non-local, non-cyclic k[G] (|G| = {}, p = {})",
                alg.dim(),
                alg.p()
            )));
        }
        let dec = alg.crt_decompose()?;
        let id = FpMatrix::identity(alg.field(), m.dim());
        let index = dec
            .idempotents(alg)
            .iter()
            .position(|e| m.act(e) == id)
            .ok_or_else(|| Error::UnsupportedShape("module spans several blocks".into()))?;
        Self::block(alg, index)
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }

    pub fn idempotent(&self) -> &AlgebraElement {
        &self.idempotent
    }

    pub fn socle_element(&self) -> &AlgebraElement {
        &self.socle
    }

    /// Dimension of `P/JP`.
    pub fn top_dim(&self) -> usize {
        self.top_dim
    }

    /// `P^b`, copy `j` occupying coordinates `j * dim P ..`.
    pub fn power(&self, b: usize) -> ModuleRep {
        let alg = self.module.algebra();
        if self.basis.len() == alg.dim() && self.idempotent == alg.one() {
            return ModuleRep::free(alg, b);
        }
        (0..b).fold(ModuleRep::zero(alg), |acc, _| acc.direct_sum(&self.module))
    }

    /// Minimal cover `P^b → M` for a module in the block of `P`. Generators
    /// are the first standard basis vectors of `M` independent modulo `JM`
    /// plus the images of earlier generators.
    pub fn cover(&self, m: &ModuleRep) -> Result<ProjectiveCover> {
        let jm = radical_layer(m)?;
        let top = m.dim() - jm.dim();
        let generators = greedy_generators(m, jm, |s, v| insert_orbit(m, s, v));
        debug_assert_eq!(generators.len() * self.top_dim, top);
        let map = self.map_to(m, &generators);
        Ok(ProjectiveCover {
            projective: self.clone(),
            generators,
            map,
        })
    }

    /// The map `P^b → M` sending generator `j` (the image of `e` in copy `j`)
    /// to `gens[j]`.
    pub fn map_to(&self, m: &ModuleRep, gens: &[Vec<u32>]) -> ModuleMap {
        let mut cols = Vec::with_capacity(gens.len() * self.dim());
        for v in gens {
            for a in &self.basis {
                cols.push(m.act(a).mul_vec(v));
            }
        }
        let matrix = FpMatrix::from_columns(m.field(), m.dim(), &cols);
        ModuleMap::new_unchecked(self.power(gens.len()), m.clone(), matrix)
    }
}

fn eval_at_generator(alg: &GroupAlgebra, poly: &FpPoly, exponent_of: &[usize]) -> AlgebraElement {
    let r = poly.rem(&FpPoly::x_pow_minus_one(alg.field(), alg.dim()));
    alg.element(exponent_of.iter().map(|&j| r.coeff(j)).collect())
}

/// A minimal projective cover `P^b → M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub projective: LocalProjective,
    pub generators: Vec<Vec<u32>>,
    pub map: ModuleMap,
}

impl ProjectiveCover {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `ker(P^b → M)` as a module, with its basis as columns of `P^b`.
    pub fn kernel(&self) -> (ModuleRep, FpMatrix) {
        let basis = self.map.matrix.kernel_basis();
        let k = self
            .map
            .source
            .restrict_to_subspace(&basis)
            .expect("kernel of a module map is a submodule");
        (k, basis)
    }
}

/// Minimal cover of a module over a local algebra or a single cyclic block.
pub fn projective_cover(m: &ModuleRep) -> Result<ProjectiveCover> {
    LocalProjective::for_module(m)?.cover(m)
}

/// Splits off projective summands `P`; returns the complement and the number
/// of copies removed.
pub fn strip_projective_summands(m: &ModuleRep) -> Result<(ModuleRep, usize)> {
    let mut cur = m.clone();
    let mut count = 0;
    loop {
        if cur.dim() == 0 {
            return Ok((cur, count));
        }
        let lp = LocalProjective::for_module(&cur)?;
        let s = cur.act(lp.socle_element());
        let Some(c) = (0..cur.dim()).find(|&c| s.column(c).iter().any(|&v| v != 0)) else {
            return Ok((cur, count));
        };
        let mut v = vec![0; cur.dim()];
        v[c] = 1;
        let v = cur.act(lp.idempotent()).mul_vec(&v);
        // Retraction ρ with ρ(v) = e: rows (g⁻¹v)ᵀ φ = e_g.
        let g = cur.algebra().group();
        let rows: Vec<Vec<u32>> = g
            .elements()
            .map(|x| cur.action(g.inv(x)).mul_vec(&v))
            .collect();
        let phi = FpMatrix::from_rows(cur.field(), &rows)
            .solve_linear(&lp.idempotent().coeffs)
            .map_err(|_| Error::UnsupportedShape("projective summand without retraction".into()))?;
        let rho = FpMatrix::from_rows(
            cur.field(),
            &g.elements()
                .map(|x| {
                    let w = cur.action(g.inv(x));
                    (0..cur.dim())
                        .map(|c| {
                            (0..cur.dim()).fold(0, |acc, k| {
                                cur.field().add(acc, cur.field().mul(phi[k], w.get(k, c)))
                            })
                        })
                        .collect()
                })
                .collect::<Vec<_>>(),
        );
        let complement = rho.kernel_basis();
        debug_assert_eq!(complement.cols(), cur.dim() - lp.dim());
        cur = cur
            .restrict_to_subspace(&complement)
            .expect("kernel of ρ is a submodule");
        count += 1;
    }
}

/// `Ωⁿ M`: `n > 0` iterates minimal cover kernels, `n < 0` dualizes,
/// `n = 0` removes projective summands.
pub fn syzygy(m: &ModuleRep, n: i64) -> Result<ModuleRep> {
    if n < 0 {
        return Ok(dual_module(&syzygy(&dual_module(m), -n)?));
    }
    let (mut cur, _) = strip_projective_summands(m)?;
    for _ in 0..n {
        if cur.dim() == 0 {
            break;
        }
        cur = projective_cover(&cur)?.kernel().0;
    }
    Ok(cur)
}

/// The top `M → M/JM` as (quotient map, section) or `None` without a radical.
fn top_maps(m: &ModuleRep) -> Option<(FpMatrix, FpMatrix)> {
    let jm = radical_layer(m).ok()?;
    let keep: Vec<usize> = (0..m.dim())
        .filter(|c| jm.pivots().binary_search(c).is_err())
        .collect();
    let f = m.field();
    let cols: Vec<Vec<u32>> = (0..m.dim())
        .map(|i| {
            let mut e = vec![0; m.dim()];
            e[i] = 1;
            let r = jm.reduce(&e);
            keep.iter().map(|&c| r[c]).collect()
        })
        .collect();
    let q = FpMatrix::from_columns(f, keep.len(), &cols);
    let s = FpMatrix::from_fn(f, m.dim(), keep.len(), |i, j| u32::from(keep[j] == i));
    Some((q, s))
}

/// Linearly independent matrices spanning the induced maps on tops (or the
/// maps themselves when `tops` is `None`).
fn reduced_span(
    maps: &[ModuleMap],
    tops: Option<(&(FpMatrix, FpMatrix), &(FpMatrix, FpMatrix))>,
    field: PrimeField,
) -> Vec<FpMatrix> {
    let images: Vec<FpMatrix> = maps
        .iter()
        .map(|phi| match tops {
            Some(((_, s_src), (q_tgt, _))) => q_tgt.mul(&phi.matrix).mul(s_src),
            None => phi.matrix.clone(),
        })
        .collect();
    let Some(first) = images.first() else {
        return Vec::new();
    };
    let (r, c) = (first.rows(), first.cols());
    let mut span = EchelonBasis::new(field, r * c);
    let mut out = Vec::new();
    for im in images {
        if span.insert(im.data()) {
            out.push(im);
        }
    }
    out
}

/// Tries `tries` combinations `Σ c_i B_i` with coefficients from a fixed
/// linear congruential sequence; any hit is a certificate.
fn probe(
    basis: &[FpMatrix],
    field: PrimeField,
    tries: usize,
    pred: impl Fn(&FpMatrix) -> bool,
) -> Option<FpMatrix> {
    let first = basis.first()?;
    let zero = FpMatrix::zeros(field, first.rows(), first.cols());
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    for _ in 0..tries {
        let x = basis.iter().fold(zero.clone(), |acc, b| {
            state = state
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            acc.add(&b.scale(((state >> 33) % u64::from(field.p())) as u32))
        });
        if pred(&x) {
            return Some(x);
        }
    }
    None
}

/// Visits `Σ c_i B_i` over all coefficient vectors in lexicographic order and
/// returns the first one satisfying `pred`.
fn sweep(
    basis: &[FpMatrix],
    field: PrimeField,
    pred: impl Fn(&FpMatrix) -> bool,
) -> Result<Option<FpMatrix>> {
    let p = u64::from(field.p());
    let r = basis.len();
    let fits = u32::try_from(r)
        .ok()
        .and_then(|r| p.checked_pow(r))
        .is_some_and(|n| n <= ENUMERATION_CAP);
    if !fits {
        return Err(Error::TooLargeToDecide { size_log_p: r });
    }
    let Some(first) = basis.first() else {
        return Ok(None);
    };
    let zero = FpMatrix::zeros(field, first.rows(), first.cols());
    let mut coeffs = vec![0u32; r];
    loop {
        let x = basis
            .iter()
            .zip(&coeffs)
            .filter(|(_, &c)| c != 0)
            .fold(zero.clone(), |acc, (b, &c)| acc.add(&b.scale(c)));
        if pred(&x) {
            return Ok(Some(x));
        }
        // increment, last coordinate fastest
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < field.p() {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// No idempotent other than `0` and `1` in `End_{k[G]}(M)`.
pub fn is_indecomposable(m: &ModuleRep) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let f = m.field();
    let endo = hom_space(m, m);
    let tops = top_maps(m);
    let basis = reduced_span(&endo, tops.as_ref().map(|t| (t, t)), f);
    let size = basis.first().map_or(0, FpMatrix::rows);
    let id = FpMatrix::identity(f, size);
    let witness = sweep(&basis, f, |x| !x.is_zero() && *x != id && x.mul(x) == *x)?;
    Ok(witness.is_none())
}

/// A Fitting decomposition `M = im φᴺ ⊕ ker φᴺ` from an endomorphism that is
/// neither nilpotent nor invertible, or `None` when `M` is indecomposable.
pub fn split_summand(m: &ModuleRep) -> Result<Option<(ModuleRep, ModuleRep)>> {
    let f = m.field();
    let basis: Vec<FpMatrix> = reduced_span(&hom_space(m, m), None, f);
    let power = |x: &FpMatrix| (1..m.dim()).fold(x.clone(), |acc, _| acc.mul(x));
    let useful = |x: &FpMatrix| !x.is_invertible() && !power(x).is_zero();
    let phi = match probe(&basis, f, 64, useful) {
        Some(x) => x,
        None => match sweep(&basis, f, useful)? {
            Some(x) => x,
            None => return Ok(None),
        },
    };
    let psi = power(&phi);
    let image = psi.column_space();
    let kernel = psi.kernel_basis();
    let a = m
        .restrict_to_subspace(&image)
        .expect("images of endomorphisms are submodules");
    let b = m
        .restrict_to_subspace(&kernel)
        .expect("kernels of endomorphisms are submodules");
    Ok(Some((a, b)))
}

/// Indecomposable summands of `M` by repeated Fitting splitting, in the order
/// they are found.
pub fn indecomposable_summands(m: &ModuleRep) -> Result<Vec<ModuleRep>> {
    let mut todo = vec![m.clone()];
    let mut out = Vec::new();
    while let Some(x) = todo.pop() {
        if x.dim() == 0 {
            continue;
        }
        match split_summand(&x)? {
            Some((a, b)) => {
                todo.push(b);
                todo.push(a);
            }
            None => out.push(x),
        }
    }
    Ok(out)
}

/// Whether some `k[G]`-linear map `M → N` is bijective. A short
/// pseudo-random probe runs first; the exhaustive sweep is only needed to
/// rule isomorphism out.
pub fn are_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    assert_eq!(m.algebra(), n.algebra(), "modules over different algebras");
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    if invariants(m).cols() != invariants(n).cols() {
        return Ok(false);
    }
    let tops = match (top_maps(m), top_maps(n)) {
        (Some(a), Some(b)) => {
            if a.0.rows() != b.0.rows() {
                return Ok(false);
            }
            Some((a, b))
        }
        _ => None,
    };
    let homs = hom_space(m, n);
    let basis = reduced_span(&homs, tops.as_ref().map(|(a, b)| (a, b)), m.field());
    if probe(&basis, m.field(), 64, FpMatrix::is_invertible).is_some() {
        return Ok(true);
    }
    Ok(sweep(&basis, m.field(), FpMatrix::is_invertible)?.is_some())
}
