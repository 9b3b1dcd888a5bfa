//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! structural algorithms it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use grpcoh_core::{build_group, FiniteGroup, GroupAlgebra, ModuleRep, PrimeField};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_group(spec).unwrap_or_else(|e| panic!("{spec}: {e}")))
}

pub fn algebra(spec: &str, p: u32) -> GroupAlgebra {
    GroupAlgebra::new(group(spec), p).unwrap()
}

/// Every group spec the builders accept with order at most `max`, one spec per
/// ordered factor list (so `C2xC3` and `C3xC2` both appear), plus the named
/// groups.
pub fn built_groups(max: usize) -> Vec<String> {
    fn extend(prefix: &mut Vec<String>, order: usize, max: usize, out: &mut Vec<String>) {
        if !prefix.is_empty() {
            out.push(prefix.join("x"));
        }
        let factors = (2..=max)
            .map(|n| (format!("C{n}"), n))
            .chain([("S3".to_string(), 6)]);
        for (name, n) in factors {
            if order * n <= max && prefix.len() < 3 {
                prefix.push(name);
                extend(prefix, order * n, max, out);
                prefix.pop();
            }
        }
    }
    let mut out = vec!["C1".to_string(), "Klein".to_string()];
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Multiplication in `k[G]` straight from the Cayley table.
pub fn convolve(g: &FiniteGroup, f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len()];
    for (x, &u) in a.iter().enumerate().filter(|(_, &u)| u != 0) {
        for (y, &v) in b.iter().enumerate().filter(|(_, &v)| v != 0) {
            let k = g.mul(x, y);
            out[k] = f.add(out[k], f.mul(u, v));
        }
    }
    out
}

/// Whether `y` is a unit of `k[G]`: its left multiplication matrix has full
/// rank, by plain Gaussian elimination.
fn is_unit(g: &FiniteGroup, f: PrimeField, y: &[u32]) -> bool {
    let n = y.len();
    let mut rows: Vec<Vec<u32>> = vec![vec![0; n]; n];
    for (x, &c) in y.iter().enumerate().filter(|(_, &c)| c != 0) {
        for h in 0..n {
            rows[g.mul(x, h)][h] = f.add(rows[g.mul(x, h)][h], c);
        }
    }
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| rows[r][col] != 0) else {
            return false;
        };
        rows.swap(col, pivot);
        let inv = f.inv(rows[col][col]);
        for r in col + 1..n {
            let factor = f.mul(rows[r][col], inv);
            if factor != 0 {
                for k in col..n {
                    let t = f.mul(factor, rows[col][k]);
                    rows[r][k] = f.sub(rows[r][k], t);
                }
            }
        }
    }
    true
}

/// All vectors of `F_p^n`, in lexicographic order.
pub fn all_vectors(p: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as usize).pow(n as u32);
    (0..total).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = (i % p as usize) as u32;
                i /= p as usize;
                d
            })
            .collect()
    })
}

/// The radical by quasi-regularity: `x ∈ J` iff `1 − a·x` is a unit for
/// every `a`. Scans all of `k[G]`, so only for tiny algebras.
pub fn brute_force_radical(alg: &GroupAlgebra) -> BTreeSet<Vec<u32>> {
    let g = alg.group();
    let f = alg.field();
    let n = alg.dim();
    let one = alg.one().coeffs;
    let all: Vec<Vec<u32>> = all_vectors(f.p(), n).collect();
    let quasi_regular = |x: &Vec<u32>, a: &Vec<u32>| {
        let ax = convolve(g, f, a, x);
        let y: Vec<u32> = one.iter().zip(&ax).map(|(&u, &v)| f.sub(u, v)).collect();
        is_unit(g, f, &y)
    };
    all.iter()
        .filter(|x| all.iter().all(|a| quasi_regular(x, a)))
        .cloned()
        .collect()
}

/// Every linear combination of `columns`.
pub fn span_elements(f: PrimeField, len: usize, columns: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    all_vectors(f.p(), columns.len())
        .map(|c| {
            let mut v = vec![0; len];
            for (col, &k) in columns.iter().zip(&c) {
                for (o, &x) in v.iter_mut().zip(col) {
                    *o = f.add(*o, f.mul(k, x));
                }
            }
            v
        })
        .collect()
}

/// A `G`-fixed element of `k[G]` with augmentation 1, found by scanning the
/// multiples of the norm element; it exists iff `k → k[G]` splits `ε`.
pub fn augmentation_splitting(alg: &GroupAlgebra) -> Option<Vec<u32>> {
    let f = alg.field();
    let n = alg.dim();
    (1..f.p())
        .map(|c| vec![c; n])
        .find(|v| v.iter().fold(0, |acc, &x| f.add(acc, x)) == 1)
}

/// `h_d` of `Λ[x_a] ⊗ k[y_b]` by counting monomials `x^i y^j`, `i ≤ 1`.
pub fn exterior_polynomial_hilbert(a: usize, b: usize, cutoff: usize) -> Vec<usize> {
    (0..=cutoff)
        .map(|d| {
            (0..=1)
                .filter(|i| d >= i * a && (d - i * a).is_multiple_of(b))
                .count()
        })
        .collect()
}

fn random_vector(rng: &mut ChaCha8Rng, p: u32, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

/// A module built from a free module of rank 1 or 2 by one of: the
/// submodule generated by random vectors, the quotient by it, or either
/// summed with the trivial module.
pub fn random_module(alg: &GroupAlgebra, rng: &mut ChaCha8Rng) -> ModuleRep {
    let p = alg.p();
    let rank = rng.gen_range(1..=2);
    let free = ModuleRep::free(alg, rank);
    let count = rng.gen_range(1..=2);
    let vectors: Vec<Vec<u32>> = (0..count)
        .map(|_| random_vector(rng, p, free.dim()))
        .collect();
    let m = if rng.gen_bool(0.5) {
        free.submodule(&vectors).0
    } else {
        free.quotient(&vectors).0
    };
    if rng.gen_bool(0.25) {
        m.direct_sum(&ModuleRep::trivial(alg))
    } else {
        m
    }
}

/// Searches for an isomorphism `g → h` by sending the generators of `g` to
/// every tuple of elements of `h` with matching orders.
pub fn brute_force_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let gens = g.generators();
    let mut images = vec![0; gens.len()];
    fn extend(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; g.order()];
        map[g.identity()] = h.identity();
        let mut queue = vec![g.identity()];
        while let Some(x) = queue.pop() {
            for (&s, &t) in gens.iter().zip(images) {
                let (y, image) = (g.mul(x, s), h.mul(map[x], t));
                if map[y] == usize::MAX {
                    map[y] = image;
                    queue.push(y);
                } else if map[y] != image {
                    return None;
                }
            }
        }
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        (distinct.len() == g.order()).then_some(map)
    }
    fn search(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
        i: usize,
    ) -> bool {
        if i == gens.len() {
            return extend(g, h, gens, images).is_some();
        }
        for t in h.elements() {
            if h.element_order(t) == g.element_order(gens[i]) {
                images[i] = t;
                if search(g, h, gens, images, i + 1) {
                    return true;
                }
            }
        }
        false
    }
    search(g, h, &gens, &mut images, 0)
}
