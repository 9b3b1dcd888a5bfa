//! Graded-commutative presentations: generators with degrees, homogeneous
//! relations, and Hilbert coefficients up to a cutoff.
//!
//! Monomials are exponent vectors over the generator list and stand for the
//! ordered product with generator indices non-decreasing. Multiplying two
//! monomials reorders factors with the Koszul sign `(−1)^{|x||y|}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::EchelonBasis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Exterior,
    Polynomial,
}

impl GeneratorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::Exterior => "exterior",
            GeneratorKind::Polynomial => "polynomial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    pub kind: GeneratorKind,
}

/// A homogeneous element of the free graded-commutative algebra on the
/// generators: `Σ c · monomial`, monomials of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Vec<u32>, u32)>,
}

impl Relation {
    /// Drops zero terms, merges duplicates and scales the leading term to 1.
    pub fn normalized(field: PrimeField, terms: impl IntoIterator<Item = (Vec<u32>, u32)>) -> Self {
        let mut acc: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        let mut terms: Vec<(Vec<u32>, u32)> =
            acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        if let Some(&(_, lead)) = terms.first() {
            let s = field.inv(lead);
            for t in &mut terms {
                t.1 = field.mul(t.1, s);
            }
        }
        Self { terms }
    }

    pub fn degree(&self, generators: &[Generator]) -> usize {
        self.terms
            .first()
            .map_or(0, |(m, _)| monomial_degree(m, generators))
    }

    /// Text such as `e1_0^2` or `e1_0*e2_0 + 2*e3_0`.
    pub fn display<'a>(&'a self, generators: &'a [Generator]) -> impl fmt::Display + 'a {
        RelationDisplay {
            relation: self,
            generators,
        }
    }

    pub(crate) fn padded(&self, len: usize) -> Relation {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.resize(len, 0);
                (m, *c)
            })
            .collect();
        Relation { terms }
    }
}

struct RelationDisplay<'a> {
    relation: &'a Relation,
    generators: &'a [Generator],
}

impl fmt::Display for RelationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, c)) in self.relation.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{}", monomial_string(m, self.generators))?;
        }
        Ok(())
    }
}

pub fn monomial_string(m: &[u32], generators: &[Generator]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                generators[i].name.clone()
            } else {
                format!("{}^{e}", generators[i].name)
            }
        })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

pub fn monomial_degree(m: &[u32], generators: &[Generator]) -> usize {
    m.iter()
        .zip(generators)
        .map(|(&e, g)| e as usize * g.degree)
        .sum()
}

/// `a · b = sign · (a + b)`; the sign collects `(−1)^{|x||y|}` for every
/// factor of `b` moved left past a factor of `a` with larger index.
pub fn monomial_product(
    field: PrimeField,
    a: &[u32],
    b: &[u32],
    degrees: &[usize],
) -> (u32, Vec<u32>) {
    let mut odd_swaps = 0u64;
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate().take(i) {
            if degrees[i] % 2 == 1 && degrees[j] % 2 == 1 {
                odd_swaps += u64::from(ai) * u64::from(bj);
            }
        }
    }
    let sign = if odd_swaps.is_multiple_of(2) { 1 } else { field.neg(1) };
    (sign, a.iter().zip(b).map(|(x, y)| x + y).collect())
}

/// All exponent vectors of total degree `d`, in lexicographic order with the
/// first generator's exponent largest first.
pub fn monomials_of_degree(degrees: &[usize], d: usize) -> Vec<Vec<u32>> {
    fn rec(degrees: &[usize], i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = left / degrees[i];
        for e in (0..=max).rev() {
            cur.push(e as u32);
            rec(degrees, i + 1, left - e * degrees[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, d, &mut Vec::new(), &mut out);
    out
}

/// `dim` of the degree-`d` span of `{m · r}` for monomials `m` and relations
/// `r`, as vectors over the degree-`d` monomial basis.
pub(crate) fn ideal_span(
    field: PrimeField,
    degrees: &[usize],
    relations: &[(usize, Relation)],
    d: usize,
    basis: &[Vec<u32>],
) -> EchelonBasis {
    let index: BTreeMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let mut span = EchelonBasis::new(field, basis.len());
    for (rd, rel) in relations {
        if *rd > d {
            continue;
        }
        for m in monomials_of_degree(degrees, d - rd) {
            let mut v = vec![0; basis.len()];
            for (t, c) in &rel.terms {
                let (s, prod) = monomial_product(field, &m, t, degrees);
                let k = index[prod.as_slice()];
                v[k] = field.add(v[k], field.mul(s, *c));
            }
            span.insert(&v);
        }
    }
    span
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRingPresentation {
    pub p: u32,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    /// `h_0 .. h_cutoff`.
    pub hilbert: Vec<usize>,
    pub cutoff: usize,
    /// No generator sits in the top `⌈cutoff/2⌉` degrees.
    pub stabilized: bool,
}

impl GradedRingPresentation {
    /// Builds a presentation, computing Hilbert coefficients from the
    /// relations and renaming generators `e{degree}_{index}`.
    pub fn new(
        p: u32,
        generators: Vec<(usize, GeneratorKind)>,
        relations: Vec<Relation>,
        cutoff: usize,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut gens: Vec<Generator> = generators
            .into_iter()
            .map(|(degree, kind)| Generator {
                name: String::new(),
                degree,
                kind,
            })
            .collect();
        assign_names(&mut gens);
        let n = gens.len();
        let relations = relations
            .into_iter()
            .map(|r| Relation::normalized(field, r.padded(n).terms))
            .collect();
        let mut out = Self {
            p,
            generators: gens,
            relations,
            hilbert: Vec::new(),
            cutoff,
            stabilized: false,
        };
        out.hilbert = hilbert_coeffs(&out, cutoff);
        out.stabilized = generators_stabilized(&out.generators, cutoff);
        Ok(out)
    }

    /// The ring `k` concentrated in degree 0.
    pub fn trivial(p: u32, cutoff: usize) -> Result<Self> {
        Self::new(p, Vec::new(), Vec::new(), cutoff)
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated at construction")
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| format!("{}", r.display(&self.generators)))
            .collect()
    }

    /// `(degree, kind)` pairs, sorted.
    pub fn generator_signature(&self) -> Vec<(usize, GeneratorKind)> {
        let mut v: Vec<_> = self.generators.iter().map(|g| (g.degree, g.kind)).collect();
        v.sort_unstable();
        v
    }
}

pub(crate) fn generators_stabilized(generators: &[Generator], cutoff: usize) -> bool {
    let top = cutoff - cutoff.div_ceil(2);
    generators.iter().all(|g| g.degree <= top)
}

fn assign_names(gens: &mut [Generator]) {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in gens.iter_mut() {
        let c = counts.entry(g.degree).or_insert(0);
        g.name = format!("e{}_{}", g.degree, c);
        *c += 1;
    }
}

/// `h_0 .. h_D`: monomials of each degree modulo the relation ideal.
pub fn hilbert_coeffs(r: &GradedRingPresentation, cutoff: usize) -> Vec<usize> {
    let field = r.field();
    let degrees = r.degrees();
    let rels: Vec<(usize, Relation)> = r
        .relations
        .iter()
        .map(|x| (x.degree(&r.generators), x.clone()))
        .collect();
    (0..=cutoff)
        .map(|d| {
            let basis = monomials_of_degree(&degrees, d);
            basis.len() - ideal_span(field, &degrees, &rels, d, &basis).dim()
        })
        .collect()
}

/// The tensor product over `k`: generators and relations side by side,
/// generators then stably sorted by degree.
pub fn kunneth_tensor(
    a: &GradedRingPresentation,
    b: &GradedRingPresentation,
) -> Result<GradedRingPresentation> {
    if a.p != b.p {
        return Err(Error::ModulusMismatch {
            left: a.p,
            right: b.p,
        });
    }
    let (na, nb) = (a.generators.len(), b.generators.len());
    let mut order: Vec<usize> = (0..na + nb).collect();
    let all: Vec<&Generator> = a.generators.iter().chain(&b.generators).collect();
    order.sort_by_key(|&i| all[i].degree);
    // position of old index i in the new order
    let mut pos = vec![0; na + nb];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let remap = |r: &Relation, offset: usize| Relation {
        terms: r
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; na + nb];
                for (i, &x) in m.iter().enumerate() {
                    e[pos[offset + i]] = x;
                }
                (e, *c)
            })
            .collect(),
    };
    // Each side lists generators by degree, so the stable sort keeps the
    // order within a side and the relation signs stay valid.
    debug_assert!(a.degrees().is_sorted() && b.degrees().is_sorted());
    let relations: Vec<Relation> = a
        .relations
        .iter()
        .map(|r| remap(r, 0))
        .chain(b.relations.iter().map(|r| remap(r, na)))
        .collect();
    let gens = order
        .iter()
        .map(|&i| (all[i].degree, all[i].kind))
        .collect();
    let cutoff = a.cutoff.min(b.cutoff);
    let out = GradedRingPresentation::new(a.p, gens, relations, cutoff)?;
    let series: Vec<usize> = (0..=cutoff)
        .map(|d| (0..=d).map(|i| a.hilbert[i] * b.hilbert[d - i]).sum())
        .collect();
    debug_assert_eq!(out.hilbert, series, "Hilbert series must multiply");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorKind::*;

    fn poly1(p: u32, d: usize) -> GradedRingPresentation {
        GradedRingPresentation::new(p, vec![(1, Polynomial)], vec![], d).unwrap()
    }

    fn ext_sym(p: u32, d: usize) -> GradedRingPresentation {
        let sq = Relation {
            terms: vec![(vec![2, 0], 1)],
        };
        GradedRingPresentation::new(p, vec![(1, Exterior), (2, Polynomial)], vec![sq], d).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        let sq = Relation {
            terms: vec![(vec![2, 0], 1)],
        };
        let r = GradedRingPresentation::new(3, vec![(3, Exterior), (4, Polynomial)], vec![sq], 8)
            .unwrap();
        assert_eq!(r.hilbert, [1, 0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(poly1(2, 6).hilbert, [1; 7]);
        assert_eq!(
            GradedRingPresentation::trivial(5, 3).unwrap().hilbert,
            [1, 0, 0, 0]
        );
        assert_eq!(r.relation_strings(), ["e3_0^2"]);
    }

    #[test]
    fn tensor_products() {
        let t = kunneth_tensor(&poly1(2, 6), &poly1(2, 6)).unwrap();
        assert_eq!(t.hilbert, [1, 2, 3, 4, 5, 6, 7]);
        let k = GradedRingPresentation::trivial(2, 6).unwrap();
        assert_eq!(kunneth_tensor(&ext_sym(2, 6), &k).unwrap(), ext_sym(2, 6));
        assert_eq!(ext_sym(3, 6).hilbert, [1; 7]);
        let z = kunneth_tensor(&ext_sym(2, 6), &poly1(2, 6)).unwrap();
        assert_eq!(z.degrees(), [1, 1, 2]);
        assert_eq!(z.relation_strings(), ["e1_0^2"]);
        assert!(matches!(
            kunneth_tensor(&poly1(2, 3), &poly1(3, 3)),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn koszul_signs() {
        let f = PrimeField::new(3).unwrap();
        let degs = [1, 1];
        assert_eq!(
            monomial_product(f, &[0, 1], &[1, 0], &degs),
            (2, vec![1, 1])
        );
        assert_eq!(
            monomial_product(f, &[1, 0], &[0, 1], &degs),
            (1, vec![1, 1])
        );
        assert_eq!(monomials_of_degree(&[1, 2], 3), [vec![3, 0], vec![1, 1]]);
    }
}
