//! The group algebra `k[G]` over `F_p`.
//!
//! Elements are coefficient vectors on the group basis. `k[G] ⊗ k[G]` is
//! identified with `k[G × G]`, basis `(g, h)` at index `g * |G| + h`, which is
//! the indexing used by [`crate::group::direct_product`].

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::{self, FiniteGroup, SubgroupData};
use crate::matrix::{EchelonBasis, FpMatrix};
use crate::poly::{factor_xq_minus_1, FpPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
    field: PrimeField,
}

/// An element `Σ a_g g` of `k[G]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coeffs: Vec<u32>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl GroupAlgebra {
    pub fn new(group: Arc<FiniteGroup>, p: u32) -> Result<Self> {
        Ok(Self {
            group,
            field: PrimeField::new(p)?,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn basis(&self, g: usize) -> AlgebraElement {
        let mut e = self.zero();
        e.coeffs[g] = 1;
        e
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group.identity())
    }

    pub fn element(&self, coeffs: Vec<u32>) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.dim());
        let p = self.p();
        AlgebraElement {
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        }
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| f.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| f.sub(x, y))
                .collect(),
        }
    }

    pub fn scale(&self, a: &AlgebraElement, c: u32) -> AlgebraElement {
        let f = self.field;
        AlgebraElement {
            coeffs: a.coeffs.iter().map(|&x| f.mul(x, c % f.p())).collect(),
        }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        let mut out = self.zero();
        for (g, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (h, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    let gh = self.group.mul(g, h);
                    out.coeffs[gh] = f.add(out.coeffs[gh], f.mul(x, y));
                }
            }
        }
        out
    }

    /// `ε(Σ a_g g) = Σ a_g`.
    pub fn augmentation(&self, a: &AlgebraElement) -> u32 {
        a.coeffs.iter().fold(0, |acc, &c| self.field.add(acc, c))
    }

    /// Matrix of `v ↦ a v` on the group basis (the regular representation).
    pub fn left_mult_matrix(&self, a: &AlgebraElement) -> FpMatrix {
        let n = self.dim();
        let mut m = FpMatrix::zeros(self.field, n, n);
        for h in 0..n {
            let col = self.mul(a, &self.basis(h));
            for (i, &c) in col.coeffs.iter().enumerate() {
                m.set(i, h, c);
            }
        }
        m
    }

    /// Permutation matrix of left multiplication by a group element.
    pub fn regular_action(&self, g: usize) -> FpMatrix {
        let n = self.dim();
        let mut m = FpMatrix::zeros(self.field, n, n);
        for h in 0..n {
            m.set(self.group.mul(g, h), h, 1);
        }
        m
    }

    pub fn is_unit(&self, a: &AlgebraElement) -> bool {
        self.left_mult_matrix(a).is_invertible()
    }

    /// Basis `{g - 1 : g ≠ 1}` of the augmentation ideal `I(G)`, as columns.
    pub fn augmentation_ideal_basis(&self) -> FpMatrix {
        let e = self.group.identity();
        let cols: Vec<Vec<u32>> = self
            .group
            .elements()
            .filter(|&g| g != e)
            .map(|g| self.sub(&self.basis(g), &self.one()).coeffs)
            .collect();
        FpMatrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Span of all products `a b` with `a` in the column span of `x`, `b` in that of `y`.
    pub fn product_span(&self, x: &FpMatrix, y: &FpMatrix) -> EchelonBasis {
        let mut span = EchelonBasis::new(self.field, self.dim());
        for a in x.columns() {
            for b in y.columns() {
                span.insert(&self.mul(&self.element(a.clone()), &self.element(b)).coeffs);
            }
        }
        span
    }

    /// Smallest `m` with `I^m = 0` for the ideal spanned by the columns of
    /// `ideal`, or `None` if no power up to `|G| + 1` vanishes.
    pub fn nilpotency_index(&self, ideal: &FpMatrix) -> Option<usize> {
        let mut power = EchelonBasis::from_columns(ideal);
        for m in 1..=self.dim() + 1 {
            if power.dim() == 0 {
                return Some(m);
            }
            power = self.product_span(&power.to_columns(), ideal);
        }
        None
    }

    pub fn hopf_maps(&self) -> HopfMaps {
        let n = self.dim();
        let g = &self.group;
        let f = self.field;
        let diagonal = FpMatrix::from_fn(f, n * n, n, |i, j| u32::from(i == j * n + j));
        let antipode = FpMatrix::from_fn(f, n, n, |i, j| u32::from(i == g.inv(j)));
        let counit = FpMatrix::from_fn(f, 1, n, |_, _| 1);
        HopfMaps {
            diagonal,
            antipode,
            counit,
        }
    }

    /// Checks Hopf axioms (a)-(d) on every basis element with the genuine
    /// antipode.
    pub fn hopf_axioms_check(&self) -> HopfReport {
        self.hopf_axioms_check_with(&self.hopf_maps().antipode)
    }

    /// Same checks with a caller-supplied antipode matrix.
    pub fn hopf_axioms_check_with(&self, antipode: &FpMatrix) -> HopfReport {
        let n = self.dim();
        let f = self.field;
        let maps = self.hopf_maps();
        let delta = &maps.diagonal;
        let eps = &maps.counit;
        let id = FpMatrix::identity(f, n);
        let e = self.group.identity();
        let col = |m: &FpMatrix, j: usize| m.column(j);
        let first_failure = |pred: &dyn Fn(usize) -> bool| (0..n).find(|&g| !pred(g));

        // (a) Δ(gh) = Δ(g)Δ(h) and ε(Δ(g)) = ε(g)
        let multiplicative = (0..n).find(|&a| {
            (0..n).any(|b| {
                let lhs = col(delta, self.group.mul(a, b));
                lhs != self.tensor_square_mul(&col(delta, a), &col(delta, b))
            }) || col(delta, a).iter().fold(0, |acc, &c| f.add(acc, c)) != 1
        });
        let mut unit_pair = vec![0; n * n];
        unit_pair[e * n + e] = 1;
        let unital = col(delta, e) == unit_pair;
        let axiom_a = match (multiplicative, unital) {
            (None, true) => None,
            (Some(w), _) => Some(w),
            (None, false) => Some(e),
        };

        let delta_of = |g: usize| col(delta, g);

        // (b) (Δ⊗1)Δ = (1⊗Δ)Δ
        let axiom_b = first_failure(&|g| {
            let d = delta_of(g);
            kron_apply(f, delta, &id, &d) == kron_apply(f, &id, delta, &d)
        });

        // (c) (ε⊗1)Δ = id = (1⊗ε)Δ
        let axiom_c = first_failure(&|g| {
            let d = delta_of(g);
            let unit = col(&id, g);
            kron_apply(f, eps, &id, &d) == unit && kron_apply(f, &id, eps, &d) == unit
        });

        // (d) μ(σ⊗1)Δ = ηε = μ(1⊗σ)Δ
        let mu = |v: &[u32]| {
            let mut out = vec![0; n];
            for (j, &c) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
                let k = self.group.mul(j / n, j % n);
                out[k] = f.add(out[k], c);
            }
            out
        };
        let mut unit_counit = vec![0; n];
        unit_counit[e] = 1;
        let axiom_d = first_failure(&|g| {
            let d = delta_of(g);
            mu(&kron_apply(f, antipode, &id, &d)) == unit_counit
                && mu(&kron_apply(f, &id, antipode, &d)) == unit_counit
        });

        // σ_{G×G} Δ = Δ σ
        let commutes = first_failure(&|g| {
            kron_apply(f, antipode, antipode, &delta_of(g)) == delta.mul_vec(&col(antipode, g))
        });

        HopfReport {
            results: vec![
                AxiomResult {
                    axiom: HopfAxiom::Multiplicative,
                    witness: axiom_a,
                },
                AxiomResult {
                    axiom: HopfAxiom::Coassociative,
                    witness: axiom_b,
                },
                AxiomResult {
                    axiom: HopfAxiom::Counit,
                    witness: axiom_c,
                },
                AxiomResult {
                    axiom: HopfAxiom::Antipode,
                    witness: axiom_d,
                },
                AxiomResult {
                    axiom: HopfAxiom::AntipodeCommutesWithDiagonal,
                    witness: commutes,
                },
            ],
        }
    }

    /// Product in `k[G] ⊗ k[G] = k[G × G]`: `(a, b)(c, d) = (ac, bd)`.
    fn tensor_square_mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.dim();
        let f = self.field;
        let mut out = vec![0; n * n];
        for (i, &u) in x.iter().enumerate().filter(|(_, &u)| u != 0) {
            for (j, &v) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                let k = self.group.mul(i / n, j / n) * n + self.group.mul(i % n, j % n);
                out[k] = f.add(out[k], f.mul(u, v));
            }
        }
        out
    }

    /// The Jacobson radical as a column basis, for the supported shapes:
    /// `p ∤ |G|` (zero), `p`-groups (the augmentation ideal), cyclic groups
    /// (sum of the radicals of the CRT blocks) and abelian groups (the ideal
    /// generated by `I(P)` for the Sylow `p`-subgroup `P`).
    pub fn jacobson_radical(&self) -> Result<FpMatrix> {
        let n = self.dim();
        let p = self.p();
        let g = &self.group;
        let radical = if !n.is_multiple_of(p as usize) {
            FpMatrix::zeros(self.field, n, 0)
        } else if g.is_p_group(p) {
            self.augmentation_ideal_basis()
        } else if g.is_cyclic() {
            self.crt_decompose()?.radical_preimage(self)
        } else if g.is_abelian() {
            let sylow = group::sylow_subgroup(g, p);
            let mut span = EchelonBasis::new(self.field, n);
            for &u in sylow.members() {
                for h in g.elements() {
                    let v = self.sub(&self.basis(g.mul(u, h)), &self.basis(h));
                    span.insert(&v.coeffs);
                }
            }
            span.to_columns()
        } else {
            return Err(Error::UnsupportedShape(format!(
                "radical of k[G] for non-abelian G of order {n} in characteristic {p}"
            )));
        };
        assert!(
            self.nilpotency_index(&radical).is_some(),
            "radical must be nilpotent"
        );
        Ok(radical)
    }

    /// CRT decomposition of `k[C_n] = F_p[x]/(x^n - 1)` into local blocks
    /// `F_p[x]/(f_i^(p^a))`, one per irreducible factor `f_i` of `x^q - 1`
    /// where `n = p^a q`.
    pub fn crt_decompose(&self) -> Result<BlockDecomposition> {
        let g = &self.group;
        let x = g.cyclic_generator().ok_or(Error::NotCyclic)?;
        let n = g.order();
        let p = self.p();
        let ppart = group::p_part(n, p);
        let q = n / ppart;
        let field = self.field;
        // exponent_of[h] = j with h = x^j
        let mut exponent_of = vec![0; n];
        let mut cur = g.identity();
        for j in 0..n {
            exponent_of[cur] = j;
            cur = g.mul(cur, x);
        }
        let mut blocks = Vec::new();
        for factor in factor_xq_minus_1(q, p)? {
            let modulus = factor.pow(ppart as u64);
            let d = modulus.degree().expect("nonzero modulus");
            let mut proj = FpMatrix::zeros(field, d, n);
            for h in g.elements() {
                let r = FpPoly::monomial(field, exponent_of[h]).rem(&modulus);
                for i in 0..d {
                    proj.set(i, h, r.coeff(i));
                }
            }
            blocks.push(Block {
                factor,
                exponent: ppart,
                modulus,
                projection: proj,
            });
        }
        let one_minus = FpPoly::new(field, vec![field.neg(1), 1]);
        let trivial_block_index = blocks
            .iter()
            .position(|b| b.factor == one_minus)
            .expect("x - 1 always divides x^q - 1");
        let dec = BlockDecomposition {
            generator: x,
            exponent_of,
            blocks,
            trivial_block_index,
        };
        dec.verify(self);
        Ok(dec)
    }

    /// `gcd(p, |G|) = 1`, cross-checked against an explicit splitting of
    /// `0 → I(G) → k[G] → k → 0`: a section exists iff some `v ∈ k[G]` is
    /// fixed by every group element and has `ε(v) = 1`.
    pub fn is_semisimple(&self) -> SemisimplicityReport {
        let n = self.dim();
        let arithmetic = !n.is_multiple_of(self.p() as usize);
        // Unknown v (n coordinates): (g - 1)v = 0 for each generator g, ε(v) = 1.
        let gens = self.group.generators();
        let mut rows = Vec::new();
        for &g in &gens {
            let m = self
                .regular_action(g)
                .sub(&FpMatrix::identity(self.field, n));
            for i in 0..n {
                rows.push(m.row(i).to_vec());
            }
        }
        rows.push(vec![1; n]);
        let mut rhs = vec![0; rows.len()];
        *rhs.last_mut().unwrap() = 1;
        let system = FpMatrix::from_rows(self.field, &rows);
        let section = system.solve_linear(&rhs).ok().map(|v| self.element(v));
        assert_eq!(
            arithmetic,
            section.is_some(),
            "Maschke: arithmetic test and split test disagree"
        );
        SemisimplicityReport {
            semisimple: arithmetic,
            section,
        }
    }

    /// `k[G]` is local iff `G` is a `p`-group; then `I(G)` is nilpotent.
    pub fn is_local(&self) -> LocalityReport {
        let local = self.group.is_p_group(self.p());
        let nilpotency_index = if local {
            let idx = self.nilpotency_index(&self.augmentation_ideal_basis());
            assert!(
                matches!(idx, Some(m) if m <= self.dim()),
                "I(G) must be nilpotent"
            );
            idx
        } else {
            None
        };
        LocalityReport {
            local,
            nilpotency_index,
        }
    }

    /// `k[G] → k[G/N]` as a matrix, with the quotient algebra.
    pub fn quotient_algebra(&self, normal: &SubgroupData) -> Result<(GroupAlgebra, FpMatrix)> {
        let (quotient, projection) = group::quotient_group(&self.group, normal)?;
        let qa = GroupAlgebra {
            group: Arc::new(quotient),
            field: self.field,
        };
        let surj = FpMatrix::from_fn(self.field, qa.dim(), self.dim(), |i, j| {
            u32::from(projection[j] == i)
        });
        // Kernel equals the ideal generated by {n - 1 : n ∈ N}.
        let kernel = EchelonBasis::from_columns(&surj.kernel_basis());
        let mut ideal = EchelonBasis::new(self.field, self.dim());
        for g in self.group.elements() {
            for &m in normal.members() {
                let v = self.sub(&self.basis(self.group.mul(g, m)), &self.basis(g));
                ideal.insert(&v.coeffs);
            }
        }
        assert_eq!(kernel.dim(), self.dim() - qa.dim());
        assert!(ideal.is_subspace_of(&kernel) && kernel.is_subspace_of(&ideal));
        Ok((qa, surj))
    }
}

/// `Δ`, `σ` and `ε` as matrices on the group basis.
#[derive(Debug, Clone)]
pub struct HopfMaps {
    /// `|G|^2 × |G|`, into the basis of `k[G × G]`.
    pub diagonal: FpMatrix,
    pub antipode: FpMatrix,
    /// `1 × |G|`.
    pub counit: FpMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfAxiom {
    /// (a) Δ is a map of augmented algebras.
    Multiplicative,
    /// (b)
    Coassociative,
    /// (c)
    Counit,
    /// (d) σ is the convolution inverse of the identity.
    Antipode,
    AntipodeCommutesWithDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: HopfAxiom,
    /// First failing basis element, if any.
    pub witness: Option<usize>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfReport {
    pub results: Vec<AxiomResult>,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn result(&self, axiom: HopfAxiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub semisimple: bool,
    /// `v` with `gv = v` and `ε(v) = 1`; the image of `1` under a section.
    pub section: Option<AlgebraElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalityReport {
    pub local: bool,
    /// Smallest `m` with `I(G)^m = 0` when local.
    pub nilpotency_index: Option<usize>,
}

/// One local factor `F_p[x]/(f^e)` of a cyclic group algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub factor: FpPoly,
    /// `p^a`, the `p`-part of `|G|`.
    pub exponent: usize,
    /// `factor^exponent`.
    pub modulus: FpPoly,
    /// `dim × |G|`: group element `x^j` goes to `x^j mod modulus`.
    pub projection: FpMatrix,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// The generator `x` of the cyclic group.
    pub generator: usize,
    /// `exponent_of[h] = j` where `h = x^j`.
    pub exponent_of: Vec<usize>,
    pub blocks: Vec<Block>,
    pub trivial_block_index: usize,
}

impl BlockDecomposition {
    /// All block projections stacked; an isomorphism `k[G] → ∏ blocks`.
    pub fn stacked_projection(&self) -> FpMatrix {
        let mut it = self.blocks.iter();
        let first = it.next().expect("at least one block").projection.clone();
        it.fold(first, |acc, b| acc.vstack(&b.projection))
    }

    /// Primitive idempotents `e_i`: `π_i(e_i) = 1`, `π_j(e_i) = 0`.
    pub fn idempotents(&self, algebra: &GroupAlgebra) -> Vec<AlgebraElement> {
        let stacked = self.stacked_projection();
        let mut offset = 0;
        self.blocks
            .iter()
            .map(|b| {
                let mut target = vec![0; stacked.rows()];
                target[offset] = 1;
                offset += b.dim();
                let v = stacked.solve_linear(&target).expect("CRT map is bijective");
                algebra.element(v)
            })
            .collect()
    }

    /// Preimage in `k[G]` of `∏ rad(block_i)`, i.e. elements whose image in
    /// every block is divisible by that block's irreducible factor.
    pub fn radical_preimage(&self, algebra: &GroupAlgebra) -> FpMatrix {
        let field = algebra.field();
        let n = algebra.dim();
        // For each block, the map k[G] → F_p[x]/(f_i): reduce the block image mod f_i.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for b in &self.blocks {
            let d = b.factor.degree().unwrap();
            let mut reduce = FpMatrix::zeros(field, d, b.dim());
            for j in 0..b.dim() {
                let r = FpPoly::monomial(field, j).rem(&b.factor);
                for i in 0..d {
                    reduce.set(i, j, r.coeff(i));
                }
            }
            let m = reduce.mul(&b.projection);
            for i in 0..m.rows() {
                rows.push(m.row(i).to_vec());
            }
        }
        if rows.is_empty() {
            return FpMatrix::identity(field, n);
        }
        FpMatrix::from_rows(field, &rows).kernel_basis()
    }

    fn verify(&self, algebra: &GroupAlgebra) {
        let n = algebra.dim();
        let total: usize = self.blocks.iter().map(Block::dim).sum();
        assert_eq!(total, n, "block dimensions must sum to |G|");
        assert!(
            self.stacked_projection().is_invertible(),
            "CRT map must be injective"
        );
        let g = algebra.group();
        let field = algebra.field();
        for b in &self.blocks {
            // Multiplicativity on the basis: π(gh) = π(g)π(h) mod the block modulus.
            for a in g.elements() {
                for c in g.elements() {
                    let pa = FpPoly::new(field, b.projection.column(a));
                    let pc = FpPoly::new(field, b.projection.column(c));
                    let lhs = FpPoly::new(field, b.projection.column(g.mul(a, c)));
                    assert_eq!(
                        pa.mul(&pc).rem(&b.modulus),
                        lhs,
                        "block projection not multiplicative"
                    );
                }
            }
        }
    }
}

/// `(a ⊗ b) v` without forming the Kronecker product.
fn kron_apply(f: PrimeField, a: &FpMatrix, b: &FpMatrix, v: &[u32]) -> Vec<u32> {
    let bc = b.cols();
    let br = b.rows();
    let mut out = vec![0; a.rows() * br];
    for (k, &c) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
        let (x, y) = (a.column(k / bc), b.column(k % bc));
        for (i, &u) in x.iter().enumerate().filter(|(_, &u)| u != 0) {
            let cu = f.mul(c, u);
            for (j, &w) in y.iter().enumerate().filter(|(_, &w)| w != 0) {
                let t = i * br + j;
                out[t] = f.add(out[t], f.mul(cu, w));
            }
        }
    }
    out
}
