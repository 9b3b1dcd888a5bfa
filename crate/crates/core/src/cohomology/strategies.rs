//! Closed forms and reduction strategies for groups that are not handled by
//! direct discovery: the coprime case, abelian groups, quotients by normal
//! `p′`-subgroups and invariants under a coprime action on a cyclic Sylow.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::discover::{discover, ring_presentation, GradedModel};
use super::presentation::{
    ideal_span, kunneth_tensor, monomial_product, monomials_of_degree, GeneratorKind,
    GradedRingPresentation, Relation,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::{
    abelian_p_invariants, p_prime_core, quotient_group, sylow_subgroup, FiniteGroup,
};
use crate::matrix::EchelonBasis;
use crate::resolve::betti_numbers;

/// `H*(ℤⁿ × ∏ C_{p^{e_i}} × G′, k)` with `p ∤ |G′|`, as a tensor product of
/// one exterior degree-1 factor per free rank and one cyclic factor per
/// exponent.
pub fn abelian_closed_form(
    free_rank: usize,
    p_exponents: &[u32],
    p: u32,
    cutoff: usize,
) -> Result<GradedRingPresentation> {
    let field = PrimeField::new(p)?;
    let exterior = Relation::normalized(field, [(vec![2], 1)]);
    let lambda1 = GradedRingPresentation::new(
        p,
        vec![(1, GeneratorKind::Exterior)],
        vec![exterior],
        cutoff,
    )?;
    let mut acc = GradedRingPresentation::trivial(p, cutoff)?;
    for _ in 0..free_rank {
        acc = kunneth_tensor(&acc, &lambda1)?;
    }
    for &e in p_exponents {
        acc = kunneth_tensor(&acc, &cyclic_p_group_ring(p, e, cutoff)?)?;
    }
    Ok(acc)
}

/// `H*(C_{p^e}, k)`: `k[x₁]` for `p^e = 2`, otherwise `Λ(x₁) ⊗ k[x₂]`.
fn cyclic_p_group_ring(p: u32, e: u32, cutoff: usize) -> Result<GradedRingPresentation> {
    if e == 0 {
        return GradedRingPresentation::trivial(p, cutoff);
    }
    if p == 2 && e == 1 {
        return GradedRingPresentation::new(
            p,
            vec![(1, GeneratorKind::Polynomial)],
            Vec::new(),
            cutoff,
        );
    }
    let sq = Relation {
        terms: vec![(vec![2, 0], 1)],
    };
    GradedRingPresentation::new(
        p,
        vec![(1, GeneratorKind::Exterior), (2, GeneratorKind::Polynomial)],
        vec![sq],
        cutoff,
    )
}

/// [`abelian_closed_form`] for a finite abelian group, reading the
/// exponents of its Sylow `p`-subgroup.
pub fn abelian_closed_form_of(
    group: &FiniteGroup,
    p: u32,
    cutoff: usize,
) -> Result<GradedRingPresentation> {
    if !group.is_abelian() {
        return Err(Error::UnsupportedShape(
            "closed form needs an abelian group".into(),
        ));
    }
    PrimeField::new(p)?;
    abelian_closed_form(0, &abelian_p_invariants(group, p), p, cutoff)
}

/// Scalars by which a generator of a cyclic quotient acts on the degree-1
/// and degree-2 generators of the cohomology of a cyclic `p`-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterActionData {
    pub p: u32,
    pub lambda: u32,
    /// Multiplicative order of `lambda` in `F_p^×`.
    pub order: usize,
    pub degree1: u32,
    pub degree2: u32,
}

impl CharacterActionData {
    /// Equal scalars in degrees 1 and 2.
    pub fn new(p: u32, lambda: u32) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let lambda = f.reduce(u64::from(lambda));
        if lambda == 0 {
            return Err(Error::ZeroParameter);
        }
        Ok(Self {
            p,
            lambda,
            order: f.order(lambda) as usize,
            degree1: lambda,
            degree2: lambda,
        })
    }
}

/// Invariants of a cyclic group acting diagonally on a presentation with
/// generators in degrees 1 and 2, reduced modulo the relations.
struct InvariantModel {
    field: PrimeField,
    degrees: Vec<usize>,
    weights: Vec<u32>,
    bases: Vec<Vec<Vec<u32>>>,
    ideals: Vec<EchelonBasis>,
    generators: Vec<(usize, Vec<u32>)>,
}

impl InvariantModel {
    fn new(r: &GradedRingPresentation, weights: Vec<u32>) -> Self {
        let field = r.field();
        let degrees = r.degrees();
        let rels: Vec<(usize, Relation)> = r
            .relations
            .iter()
            .map(|x| (x.degree(&r.generators), x.clone()))
            .collect();
        let bases: Vec<_> = (0..=r.cutoff)
            .map(|d| monomials_of_degree(&degrees, d))
            .collect();
        let ideals = bases
            .iter()
            .enumerate()
            .map(|(d, b)| ideal_span(field, &degrees, &rels, d, b))
            .collect();
        Self {
            field,
            degrees,
            weights,
            bases,
            ideals,
            generators: Vec::new(),
        }
    }

    fn weight(&self, m: &[u32]) -> u32 {
        m.iter().zip(&self.weights).fold(1, |acc, (&e, &w)| {
            self.field.mul(acc, self.field.pow(w, u64::from(e)))
        })
    }
}

impl GradedModel for InvariantModel {
    fn field(&self) -> PrimeField {
        self.field
    }

    fn ambient_dim(&self, d: usize) -> usize {
        self.bases[d].len()
    }

    fn degree_span(&self, d: usize) -> Vec<Vec<u32>> {
        let n = self.bases[d].len();
        self.bases[d]
            .iter()
            .enumerate()
            .filter(|(_, m)| self.weight(m) == 1)
            .map(|(i, _)| {
                let mut v = vec![0; n];
                v[i] = 1;
                self.ideals[d].reduce(&v)
            })
            .filter(|v| v.iter().any(|&c| c != 0))
            .collect()
    }

    fn unit(&self) -> Vec<u32> {
        vec![1]
    }

    fn adjoin(&mut self, d: usize, v: Vec<u32>) -> Result<()> {
        self.generators.push((d, v));
        Ok(())
    }

    fn times_generator(&self, x: &[u32], dx: usize, i: usize) -> Result<Vec<u32>> {
        let f = self.field;
        let (dg, g) = &self.generators[i];
        let d = dx + dg;
        let target = &self.bases[d];
        let mut out = vec![0; target.len()];
        for (a, &xa) in x.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (b, &gb) in g.iter().enumerate().filter(|(_, c)| **c != 0) {
                let (sign, m) =
                    monomial_product(f, &self.bases[dx][a], &self.bases[*dg][b], &self.degrees);
                let k = target
                    .binary_search_by(|t| m.cmp(t))
                    .expect("product has the target degree");
                out[k] = f.add(out[k], f.mul(sign, f.mul(xa, gb)));
            }
        }
        Ok(self.ideals[d].reduce(&out))
    }
}

/// The subring of `R` fixed by the action; `R` must be `Λ(u₁) ⊗ k[u₂]` or
/// `k[u₁]`, the cohomology of a cyclic `p`-group.
pub fn invariant_subring_cyclic(
    r: &GradedRingPresentation,
    action: &CharacterActionData,
) -> Result<GradedRingPresentation> {
    use GeneratorKind::*;
    if action.p != r.p {
        return Err(Error::ModulusMismatch {
            left: r.p,
            right: action.p,
        });
    }
    let shape = r.generator_signature();
    let trivial = action.degree1 == 1 && action.degree2 == 1;
    match shape.as_slice() {
        [(1, Exterior), (2, Polynomial)] => {}
        [(1, Polynomial)] if trivial => {}
        [] if trivial => {}
        _ => {
            return Err(Error::UnsupportedShape(
                "expected the cohomology ring of a cyclic p-group".into(),
            ))
        }
    }
    if trivial {
        return Ok(r.clone());
    }
    let weights = r
        .degrees()
        .iter()
        .map(|&d| {
            if d == 1 {
                action.degree1
            } else {
                action.degree2
            }
        })
        .collect();
    let mut model = InvariantModel::new(r, weights);
    discover(&mut model, r.p, r.cutoff)
}

/// Which reduction [`lhs_strategy`] applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// `p ∤ |G|`: cohomology is `k` in degree 0.
    Coprime,
    Abelian,
    /// `G/N` is a `p`-group for the normal `p′`-subgroup `N`.
    QuotientByCore {
        core_order: usize,
    },
    /// Normal cyclic Sylow `p`-subgroup; the quotient acts through `lambda`.
    CyclicSylow {
        sylow_order: usize,
        lambda: u32,
    },
}

fn cyclic_sylow_action(
    group: &Arc<FiniteGroup>,
    p: u32,
) -> Option<(FiniteGroup, CharacterActionData)> {
    let sylow = sylow_subgroup(group, p);
    if !sylow.is_normal() || !sylow.is_cyclic() {
        return None;
    }
    let n0 = sylow
        .members()
        .iter()
        .copied()
        .find(|&x| group.element_order(x) == sylow.order())?;
    let f = PrimeField::new(p).ok()?;
    // (y·θ)(n₀) = θ(y⁻¹n₀y) = k·θ(n₀)
    let mut lambda = 1;
    let mut best = 1;
    for y in group.elements() {
        let conj = group.mul(group.inv(y), group.mul(n0, y));
        let k = (0..sylow.order()).find(|&k| group.pow(n0, k) == conj)?;
        let l = f.reduce(k as u64);
        let ord = f.order(l) as usize;
        if ord > best {
            best = ord;
            lambda = l;
        }
    }
    let (n, _) = sylow.as_group();
    Some((n, CharacterActionData::new(p, lambda).ok()?))
}

/// The first applicable strategy, in the order coprime, abelian, quotient by
/// the `p′`-core, cyclic Sylow.
pub fn select_strategy(group: &Arc<FiniteGroup>, p: u32) -> Result<Strategy> {
    PrimeField::new(p)?;
    if !group.order().is_multiple_of(p as usize) {
        return Ok(Strategy::Coprime);
    }
    if group.is_abelian() {
        return Ok(Strategy::Abelian);
    }
    let core = p_prime_core(group, p);
    if group.order() / core.order() == crate::group::p_part(group.order(), p) {
        return Ok(Strategy::QuotientByCore {
            core_order: core.order(),
        });
    }
    if let Some((n, action)) = cyclic_sylow_action(group, p) {
        return Ok(Strategy::CyclicSylow {
            sylow_order: n.order(),
            lambda: action.lambda,
        });
    }
    Err(Error::UnsupportedGroup(
        "no reduction applies to this group and prime".into(),
    ))
}

/// `H*(G, k)` through degree `cutoff` via the first applicable strategy.
pub fn lhs_strategy(
    group: &Arc<FiniteGroup>,
    p: u32,
    cutoff: usize,
) -> Result<GradedRingPresentation> {
    match select_strategy(group, p)? {
        Strategy::Coprime => GradedRingPresentation::trivial(p, cutoff),
        Strategy::Abelian => abelian_closed_form_of(group, p, cutoff),
        Strategy::QuotientByCore { .. } => {
            let core = p_prime_core(group, p);
            let (q, _) = quotient_group(group, &core)?;
            ring_presentation(&Arc::new(q), p, cutoff)
        }
        Strategy::CyclicSylow { .. } => {
            let (n, action) = cyclic_sylow_action(group, p).expect("strategy was selected");
            let r = ring_presentation(&Arc::new(n), p, cutoff)?;
            invariant_subring_cyclic(&r, &action)
        }
    }
}

/// `dim Hⁿ(G, k)` for `n ≤ cutoff`.
pub fn ext_dims(group: &Arc<FiniteGroup>, p: u32, cutoff: usize) -> Result<Vec<usize>> {
    PrimeField::new(p)?;
    if !group.order().is_multiple_of(p as usize) {
        let mut v = vec![0; cutoff + 1];
        v[0] = 1;
        return Ok(v);
    }
    if group.is_p_group(p) {
        return betti_numbers(group, p, cutoff);
    }
    Ok(lhs_strategy(group, p, cutoff)?.hilbert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use GeneratorKind::*;

    fn arc(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(spec).unwrap())
    }

    #[test]
    fn closed_forms() {
        let z2 = abelian_closed_form(2, &[], 5, 4).unwrap();
        assert_eq!(z2.hilbert, [1, 2, 1, 0, 0]);
        let c6 = abelian_closed_form_of(&build_group("C6").unwrap(), 2, 6).unwrap();
        assert_eq!(c6.generator_signature(), [(1, Polynomial)]);
        let zc4 = abelian_closed_form(1, &[2], 2, 6).unwrap();
        assert_eq!(
            zc4.generator_signature(),
            [(1, Exterior), (1, Exterior), (2, Polynomial)]
        );
        assert_eq!(zc4.relations.len(), 2);
        assert_eq!(zc4.hilbert, [1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn invariant_subrings() {
        let r = cyclic_p_group_ring(3, 1, 8).unwrap();
        let inv = invariant_subring_cyclic(&r, &CharacterActionData::new(3, 2).unwrap()).unwrap();
        assert_eq!(inv.generator_signature(), [(3, Exterior), (4, Polynomial)]);
        assert_eq!(inv.relation_strings(), ["e3_0^2"]);
        assert_eq!(inv.hilbert, [1, 0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(
            invariant_subring_cyclic(&r, &CharacterActionData::new(3, 1).unwrap()).unwrap(),
            r
        );
        let sym = GradedRingPresentation::new(3, vec![(1, Polynomial)], vec![], 4).unwrap();
        assert!(matches!(
            invariant_subring_cyclic(&sym, &CharacterActionData::new(3, 2).unwrap()),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn symmetric_group_cases() {
        let g = arc("S3");
        assert_eq!(select_strategy(&g, 5).unwrap(), Strategy::Coprime);
        assert_eq!(
            select_strategy(&g, 2).unwrap(),
            Strategy::QuotientByCore { core_order: 3 }
        );
        assert_eq!(
            select_strategy(&g, 3).unwrap(),
            Strategy::CyclicSylow {
                sylow_order: 3,
                lambda: 2
            }
        );
        assert_eq!(
            lhs_strategy(&g, 2, 6).unwrap().generator_signature(),
            [(1, Polynomial)]
        );
        assert_eq!(ext_dims(&g, 3, 8).unwrap(), [1, 0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(ext_dims(&arc("C6"), 5, 4).unwrap(), [1, 0, 0, 0, 0]);
        assert_eq!(
            ext_dims(&arc("S3xC2"), 3, 8).unwrap(),
            [1, 0, 0, 1, 1, 0, 0, 1, 1]
        );
        assert_eq!(ext_dims(&arc("S3xC2"), 2, 4).unwrap(), [1, 2, 3, 4, 5]);
    }
}
