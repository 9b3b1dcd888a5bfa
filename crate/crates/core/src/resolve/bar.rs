//! The normalized bar resolution `B_n = k[G] ⊗ k[Ḡ^n]`, `Ḡ = G \ {1}`, and
//! its cochains with trivial coefficients.
//!
//! Conventions:
//! `∂(h[g_1|…|g_n]) = hg_1[g_2|…|g_n] + Σ_{i<n} (−1)^i h[…|g_i g_{i+1}|…] + (−1)^n h[g_1|…|g_{n−1}]`,
//! with symbols containing `1` set to zero, and the Alexander–Whitney cup
//! product `(f ⌣ g)[g_1|…|g_{m+n}] = f[g_1|…|g_m] · g[g_{m+1}|…|g_{m+n}]`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::FiniteGroup;
use crate::matrix::{EchelonBasis, FpMatrix, LinearSolver};

pub const BAR_MAX_ORDER: usize = 6;
pub const BAR_MAX_DEGREE: usize = 3;

#[derive(Debug, Clone)]
pub struct BarComplex {
    algebra: GroupAlgebra,
    cutoff: usize,
    /// Non-identity elements in index order; symbol digits index into this.
    letters: Vec<usize>,
    /// `digit_of[g]` for `g ≠ 1`.
    digit_of: Vec<usize>,
    /// Per degree `n ≤ D`: cocycle representatives of a basis of `Hⁿ`, and a
    /// solver for coordinates against `[coboundaries | representatives]`.
    classes: Vec<(Vec<Vec<u32>>, LinearSolver, usize)>,
}

/// Builds the complex through degree `cutoff ≤ 3` for `|G| ≤ 6`.
pub fn bar_resolution(group: &Arc<FiniteGroup>, p: u32, cutoff: usize) -> Result<BarComplex> {
    if group.order() > BAR_MAX_ORDER || cutoff > BAR_MAX_DEGREE {
        return Err(Error::TooLarge {
            order: group.order(),
        });
    }
    let algebra = GroupAlgebra::new(group.clone(), p)?;
    let letters: Vec<usize> = group
        .elements()
        .filter(|&g| g != group.identity())
        .collect();
    let mut digit_of = vec![usize::MAX; group.order()];
    for (i, &g) in letters.iter().enumerate() {
        digit_of[g] = i;
    }
    let mut bar = BarComplex {
        algebra,
        cutoff,
        letters,
        digit_of,
        classes: Vec::new(),
    };
    for n in 0..=cutoff {
        let f = bar.field();
        let cocycles = bar.cochain_differential(n).kernel_basis();
        let coboundaries = if n == 0 {
            FpMatrix::zeros(f, 1, 0)
        } else {
            bar.cochain_differential(n - 1).column_space()
        };
        let mut span = EchelonBasis::from_columns(&coboundaries);
        let reps: Vec<Vec<u32>> = cocycles
            .columns()
            .into_iter()
            .filter(|z| span.insert(z))
            .collect();
        let stacked = if reps.is_empty() {
            coboundaries.clone()
        } else {
            coboundaries.hstack(&FpMatrix::from_columns(f, bar.symbol_count(n), &reps))
        };
        bar.classes
            .push((reps, stacked.solver(), coboundaries.cols()));
    }
    Ok(bar)
}

impl BarComplex {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// `(|G| − 1)^n`.
    pub fn symbol_count(&self, n: usize) -> usize {
        self.letters.len().pow(n as u32)
    }

    /// Symbol `[g_1|…|g_n]` for an index, first letter most significant.
    pub fn symbol(&self, n: usize, mut index: usize) -> Vec<usize> {
        let base = self.letters.len();
        let mut s = vec![0; n];
        for slot in s.iter_mut().rev() {
            *slot = self.letters[index % base];
            index /= base;
        }
        s
    }

    /// Index of a symbol, or `None` when it contains the identity.
    pub fn symbol_index(&self, s: &[usize]) -> Option<usize> {
        let base = self.letters.len();
        s.iter().try_fold(0, |acc, &g| {
            let d = self.digit_of[g];
            (d != usize::MAX).then(|| acc * base + d)
        })
    }

    /// The `k[G]`-linear `∂_n: B_n → B_{n−1}`; copy `j` of `k[G]` is symbol `j`.
    pub fn differential(&self, n: usize) -> FpMatrix {
        assert!(n >= 1);
        let g = self.algebra.group();
        let f = self.field();
        let order = g.order();
        let mut d = FpMatrix::zeros(
            f,
            order * self.symbol_count(n - 1),
            order * self.symbol_count(n),
        );
        for (j, h, term, sign) in self.boundary_terms(n) {
            for x in g.elements() {
                let (row, col) = (term * order + g.mul(x, h), j * order + x);
                d.set(row, col, f.add(d.get(row, col), sign));
            }
        }
        d
    }

    /// `(symbol j, left coefficient h, symbol term, sign)` for each face of
    /// each symbol in degree `n`.
    fn boundary_terms(&self, n: usize) -> Vec<(usize, usize, usize, u32)> {
        let g = self.algebra.group();
        let f = self.field();
        let sign = |i: usize| if i.is_multiple_of(2) { 1 } else { f.neg(1) };
        let mut out = Vec::new();
        for j in 0..self.symbol_count(n) {
            let s = self.symbol(n, j);
            if let Some(t) = self.symbol_index(&s[1..]) {
                out.push((j, s[0], t, 1));
            }
            for i in 1..n {
                let mut merged = s[..i - 1].to_vec();
                merged.push(g.mul(s[i - 1], s[i]));
                merged.extend_from_slice(&s[i + 1..]);
                if let Some(t) = self.symbol_index(&merged) {
                    out.push((j, g.identity(), t, sign(i)));
                }
            }
            if let Some(t) = self.symbol_index(&s[..n - 1]) {
                out.push((j, g.identity(), t, sign(n)));
            }
        }
        out
    }

    /// Augmentation `B_0 = k[G] → k`.
    pub fn augmentation(&self) -> FpMatrix {
        FpMatrix::from_rows(self.field(), &[vec![1; self.algebra.dim()]])
    }

    /// `δⁿ: Cⁿ → C^{n+1}` on `Cⁿ = Hom_{k[G]}(B_n, k)`, functions on symbols.
    pub fn cochain_differential(&self, n: usize) -> FpMatrix {
        let f = self.field();
        let mut d = FpMatrix::zeros(f, self.symbol_count(n + 1), self.symbol_count(n));
        for (j, _, t, sign) in self.boundary_terms(n + 1) {
            d.set(j, t, f.add(d.get(j, t), sign));
        }
        d
    }

    /// `∂_{n}∂_{n+1} = 0` for `1 ≤ n < D` and `ε∂_1 = 0`.
    pub fn is_complex(&self) -> bool {
        if self.cutoff == 0 {
            return true;
        }
        if !self.augmentation().mul(&self.differential(1)).is_zero() {
            return false;
        }
        (1..self.cutoff).all(|n| {
            self.differential(n)
                .mul(&self.differential(n + 1))
                .is_zero()
        })
    }

    /// `B_1 → B_0 → k → 0` is exact.
    pub fn is_exact_in_degree_zero(&self) -> bool {
        let aug = self.augmentation();
        let kernel = self.algebra.dim() - aug.rank();
        self.cutoff >= 1 && self.differential(1).rank() == kernel
    }

    /// `dim Hⁿ(G, k)` for `n ≤ D`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.classes.iter().map(|(reps, _, _)| reps.len()).collect()
    }

    /// Cocycles representing the chosen basis of `Hⁿ`.
    pub fn class_representatives(&self, n: usize) -> &[Vec<u32>] {
        &self.classes[n].0
    }

    /// Coordinates of a cocycle's class in the chosen basis; `None` for
    /// cochains that are not cocycles.
    pub fn class_coords(&self, n: usize, cocycle: &[u32]) -> Option<Vec<u32>> {
        let (_, solver, offset) = &self.classes[n];
        solver.solve(cocycle).map(|x| x[*offset..].to_vec())
    }

    /// Alexander–Whitney cup product of cochains of degrees `m` and `n`.
    pub fn cup(&self, m: usize, a: &[u32], n: usize, b: &[u32]) -> Vec<u32> {
        let f = self.field();
        let inner = self.symbol_count(n);
        (0..self.symbol_count(m + n))
            .map(|i| f.mul(a[i / inner], b[i % inner]))
            .collect()
    }

    /// Product of basis classes `i` of `H^m` and `j` of `H^n`, in coordinates
    /// of `H^{m+n}`.
    pub fn cup_classes(&self, m: usize, i: usize, n: usize, j: usize) -> Result<Vec<u32>> {
        if m + n > self.cutoff {
            return Err(Error::CutoffExceeded {
                degree: m + n,
                cutoff: self.cutoff,
            });
        }
        let prod = self.cup(m, &self.classes[m].0[i], n, &self.classes[n].0[j]);
        Ok(self
            .class_coords(m + n, &prod)
            .expect("a cup of cocycles is a cocycle"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn bar(spec: &str, p: u32, d: usize) -> BarComplex {
        bar_resolution(&Arc::new(build_group(spec).unwrap()), p, d).unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(bar("C2", 2, 3).cohomology_dims(), [1, 1, 1, 1]);
        assert_eq!(bar("S3", 3, 3).cohomology_dims(), [1, 0, 0, 1]);
        assert_eq!(bar("C3", 2, 3).cohomology_dims(), [1, 0, 0, 0]);
        assert_eq!(bar("Klein", 2, 3).cohomology_dims(), [1, 2, 3, 4]);
    }

    #[test]
    fn complex_and_cochains_agree() {
        let b = bar("S3", 2, 3);
        assert!(b.is_complex());
        assert!(b.is_exact_in_degree_zero());
        // δⁿ is ∂_{n+1} followed by the augmentation on each copy
        let f = b.field();
        let order = b.algebra().dim();
        for n in 0..3 {
            let d = b.differential(n + 1);
            let collapse = FpMatrix::from_fn(f, b.symbol_count(n), d.rows(), |i, r| {
                u32::from(r / order == i)
            });
            let via_free = collapse.mul(&d);
            let direct = b.cochain_differential(n);
            for j in 0..b.symbol_count(n + 1) {
                for i in 0..b.symbol_count(n) {
                    assert_eq!(via_free.get(i, j * order), direct.get(j, i));
                }
            }
        }
    }

    #[test]
    fn cup_products_commute() {
        let b = bar("C3", 3, 3);
        // H¹ ⌣ H¹ vanishes, H¹ ⌣ H² spans H³
        assert_eq!(b.cup_classes(1, 0, 1, 0).unwrap(), [0]);
        let x = b.cup_classes(1, 0, 2, 0).unwrap();
        let y = b.cup_classes(2, 0, 1, 0).unwrap();
        assert_ne!(x, [0]);
        assert_eq!(x, y);
        let k = bar("Klein", 2, 3);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    k.cup_classes(1, i, 1, j).unwrap(),
                    k.cup_classes(1, j, 1, i).unwrap()
                );
            }
        }
        assert!(matches!(
            b.cup_classes(2, 0, 2, 0),
            Err(Error::CutoffExceeded { .. })
        ));
    }
}
