//! Univariate polynomials over `F_p` and the factorization of `x^q - 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A polynomial over `F_p`, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.p();
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::new(field, vec![1])
    }

    /// The monomial `x^n`.
    pub fn monomial(field: PrimeField, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        Self { field, coeffs: c }
    }

    /// `x^q - 1`.
    pub fn x_pow_minus_one(field: PrimeField, q: usize) -> Self {
        let mut c = vec![0; q + 1];
        c[q] = 1;
        c[0] = field.neg(1);
        Self::new(field, c)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    /// Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.add(rem[k + j], f.mul(neg, d));
            }
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(self.field).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let f = self.monic();
        let x = Self::monomial(self.field, 1);
        let p = self.field.p() as u64;
        // frob[i] = x^(p^i) mod f
        let mut frob = vec![x.rem(&f)];
        for i in 1..=n {
            let next = frob[i - 1].pow_mod(p, &f);
            frob.push(next);
        }
        if !frob[n].sub(&x).rem(&f).is_zero() {
            return false;
        }
        prime_factors(n)
            .into_iter()
            .all(|r| frob[n / r].sub(&x).gcd(&f).degree() == Some(0))
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.field.p())
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Minimal linear congruential generator; drives the equal-degree splitting so
/// factor lists are reproducible.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

/// Splits a squarefree monic `f` whose irreducible factors all have degree `d`.
fn equal_degree_split(f: &FpPoly, d: usize, rng: &mut Lcg, out: &mut Vec<FpPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.clone());
        return;
    }
    let field = f.field();
    let p = field.p() as u64;
    loop {
        let a = FpPoly::new(field, (0..n).map(|_| (rng.next() % p) as u32).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                acc = acc.mul(&t).rem(f);
            }
            acc.pow_mod((p - 1) / 2, f).sub(&FpPoly::one(field))
        };
        let g = probe.gcd(f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).0.monic();
            equal_degree_split(&g, d, rng, out);
            equal_degree_split(&h, d, rng, out);
            return;
        }
    }
}

/// Factors `x^q - 1` into distinct monic irreducibles over `F_p` (`p ∤ q`).
///
/// Distinct-degree factorization via `gcd(x^(p^i) - x, f)`, then equal-degree
/// splitting. The linear factor `x - 1` comes first; the rest are ordered by
/// degree and then by coefficients from the top down.
pub fn factor_xq_minus_1(q: usize, p: u32) -> Result<Vec<FpPoly>> {
    let field = PrimeField::new(p)?;
    if q == 0 || q.is_multiple_of(p as usize) {
        return Err(Error::NonCoprime { q, p });
    }
    let mut rest = FpPoly::x_pow_minus_one(field, q);
    let x = FpPoly::monomial(field, 1);
    let mut frob = x.clone();
    let mut rng = Lcg(0x5eed_0000_0000_0001 ^ ((q as u64) << 8) ^ p as u64);
    let mut factors = Vec::new();
    let mut i = 0;
    while rest.degree().unwrap_or(0) > 0 {
        i += 1;
        if 2 * i > rest.degree().unwrap() {
            factors.push(rest.monic());
            break;
        }
        frob = frob.pow_mod(p as u64, &rest);
        let g = frob.sub(&x).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            equal_degree_split(&g, i, &mut rng, &mut factors);
            rest = rest.div_rem(&g).0;
            frob = frob.rem(&rest);
        }
    }
    let one = field.neg(1);
    factors.sort_by(|a, b| {
        let key = |f: &FpPoly| {
            let is_trivial = f.coeffs() == [one, 1];
            (
                !is_trivial,
                f.degree(),
                f.coeffs().iter().rev().copied().collect::<Vec<_>>(),
            )
        };
        key(a).cmp(&key(b))
    });
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn cube_roots_of_unity_mod_two() {
        let fs = factor_xq_minus_1(3, 2).unwrap();
        let shown: Vec<_> = fs.iter().map(|f| alloc::format!("{f}")).collect();
        assert_eq!(shown, ["x + 1", "x^2 + x + 1"]);
    }

    #[test]
    fn trivial_and_small_cases() {
        let fs = factor_xq_minus_1(1, 5).unwrap();
        assert_eq!(fs, vec![FpPoly::new(f(5), vec![4, 1])]);
        // Trial division by all monic linears over F_3: x - 1 and x + 1 both divide x^2 - 1.
        let field = f(3);
        let target = FpPoly::x_pow_minus_one(field, 2);
        let linear_divisors: Vec<_> = (0..3)
            .map(|c| FpPoly::new(field, vec![c, 1]))
            .filter(|l| l.divides(&target))
            .collect();
        assert_eq!(linear_divisors.len(), 2);
        let fs = factor_xq_minus_1(2, 3).unwrap();
        assert_eq!(fs.len(), 2);
        for l in linear_divisors {
            assert!(fs.contains(&l));
        }
        assert_eq!(fs[0], FpPoly::new(field, vec![2, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(
            factor_xq_minus_1(6, 3),
            Err(Error::NonCoprime { q: 6, p: 3 })
        );
        assert_eq!(factor_xq_minus_1(3, 4), Err(Error::UnsupportedModulus(4)));
        assert!(matches!(
            factor_xq_minus_1(0, 5),
            Err(Error::NonCoprime { .. })
        ));
    }

    #[test]
    fn large_equal_degree_parts_split() {
        // x^59 - 1 over F_7 has two degree-29 factors.
        let fs = factor_xq_minus_1(59, 7).unwrap();
        let degs: Vec<_> = fs.iter().map(|f| f.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 29, 29]);
        let prod = fs.iter().fold(FpPoly::one(f(7)), |acc, g| acc.mul(g));
        assert_eq!(prod, FpPoly::x_pow_minus_one(f(7), 59));
    }

    #[test]
    fn division_identity() {
        let field = f(5);
        let a = FpPoly::new(field, vec![1, 2, 3, 4, 1]);
        let b = FpPoly::new(field, vec![3, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }
}
