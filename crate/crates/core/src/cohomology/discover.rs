//! Degree-by-degree generator and relation discovery for a graded-commutative
//! algebra given by a multiplication oracle.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::lift::{lift_cocycle, product_with_lift, ChainMapLift, CohomologyClass};
use super::presentation::{
    ideal_span, monomials_of_degree, GeneratorKind, GradedRingPresentation, Relation,
};
use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::FiniteGroup;
use crate::matrix::{EchelonBasis, FpMatrix};
use crate::module::ModuleRep;
use crate::resolve::{minimal_resolution, FreeResolution};

/// A graded algebra with elements as coordinate vectors per degree.
pub(crate) trait GradedModel {
    fn field(&self) -> PrimeField;
    fn ambient_dim(&self, d: usize) -> usize;
    /// Vectors spanning the degree-`d` piece, in order of preference for
    /// new generators.
    fn degree_span(&self, d: usize) -> Vec<Vec<u32>>;
    fn unit(&self) -> Vec<u32>;
    /// Records a new generator of degree `d`; it gets the next index.
    fn adjoin(&mut self, d: usize, v: Vec<u32>) -> Result<()>;
    /// `x · g_i` for `x` of degree `dx`.
    fn times_generator(&self, x: &[u32], dx: usize, i: usize) -> Result<Vec<u32>>;
}

struct Values {
    degrees: Vec<usize>,
    memo: BTreeMap<Vec<u32>, Vec<u32>>,
}

impl Values {
    /// The ordered product `g_0^{m_0} ⋯ g_k^{m_k}`, peeling off the last factor.
    fn of(&mut self, model: &impl GradedModel, m: &[u32]) -> Result<Vec<u32>> {
        let len = m.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        let key = &m[..len];
        if let Some(v) = self.memo.get(key) {
            return Ok(v.clone());
        }
        let Some(last) = len.checked_sub(1) else {
            return Ok(model.unit());
        };
        let mut prev = key.to_vec();
        prev[last] -= 1;
        let x = self.of(model, &prev)?;
        let dx: usize = prev
            .iter()
            .zip(&self.degrees)
            .map(|(&e, &d)| e as usize * d)
            .sum();
        let v = model.times_generator(&x, dx, last)?;
        self.memo.insert(key.to_vec(), v.clone());
        Ok(v)
    }
}

/// Walks degrees `1..=cutoff`: monomials in the known generators are
/// evaluated, kernel vectors outside the ideal of earlier relations become
/// relations, and an echelon complement of the image becomes new generators.
pub(crate) fn discover(
    model: &mut impl GradedModel,
    p: u32,
    cutoff: usize,
) -> Result<GradedRingPresentation> {
    let f = model.field();
    let mut values = Values {
        degrees: Vec::new(),
        memo: BTreeMap::new(),
    };
    let mut relations: Vec<(usize, Relation)> = Vec::new();
    let mut dims = vec![1];
    for d in 1..=cutoff {
        let n = model.ambient_dim(d);
        let span = model.degree_span(d);
        dims.push(EchelonBasis::from_vectors(f, n, span.iter().map(Vec::as_slice)).dim());
        let basis = monomials_of_degree(&values.degrees, d);
        let mut columns = Vec::with_capacity(basis.len());
        for m in &basis {
            columns.push(values.of(model, m)?);
        }
        let mut ideal = ideal_span(f, &values.degrees, &relations, d, &basis);
        for k in FpMatrix::from_columns(f, n, &columns)
            .kernel_basis()
            .columns()
        {
            if ideal.insert(&k) {
                relations.push((d, Relation::normalized(f, basis.iter().cloned().zip(k))));
            }
        }
        let mut image = EchelonBasis::from_vectors(f, n, columns.iter().map(Vec::as_slice));
        for v in span {
            if image.insert(&v) {
                model.adjoin(d, v)?;
                values.degrees.push(d);
            }
        }
        let len = values.degrees.len();
        for (_, r) in &mut relations {
            *r = r.padded(len);
        }
    }
    let degrees = values.degrees.clone();
    let mut gens = Vec::with_capacity(degrees.len());
    for (i, &d) in degrees.iter().enumerate() {
        let kind = if p % 2 == 1 && d % 2 == 1 {
            GeneratorKind::Exterior
        } else if 2 * d <= cutoff {
            let mut sq = vec![0; degrees.len()];
            sq[i] = 2;
            if values.of(model, &sq)?.iter().all(|&c| c == 0) {
                GeneratorKind::Exterior
            } else {
                GeneratorKind::Polynomial
            }
        } else {
            GeneratorKind::Polynomial
        };
        gens.push((d, kind));
    }
    let out = GradedRingPresentation::new(
        p,
        gens,
        relations.into_iter().map(|(_, r)| r).collect(),
        cutoff,
    )?;
    if let Some(degree) = out.hilbert.iter().zip(&dims).position(|(a, b)| a != b) {
        return Err(Error::LiftFailed { degree });
    }
    Ok(out)
}

struct ExtModel<'a> {
    res: &'a FreeResolution,
    cutoff: usize,
    lifts: Vec<ChainMapLift>,
}

impl GradedModel for ExtModel<'_> {
    fn field(&self) -> PrimeField {
        self.res.algebra().field()
    }

    fn ambient_dim(&self, d: usize) -> usize {
        self.res.ranks()[d]
    }

    fn degree_span(&self, d: usize) -> Vec<Vec<u32>> {
        (0..self.ambient_dim(d))
            .map(|i| CohomologyClass::basis(self.res, d, i).coords)
            .collect()
    }

    fn unit(&self) -> Vec<u32> {
        vec![1]
    }

    fn adjoin(&mut self, d: usize, v: Vec<u32>) -> Result<()> {
        let lift = lift_cocycle(
            self.res,
            &CohomologyClass {
                degree: d,
                coords: v,
            },
            self.cutoff,
        )?;
        self.lifts.push(lift);
        Ok(())
    }

    fn times_generator(&self, x: &[u32], dx: usize, i: usize) -> Result<Vec<u32>> {
        let x = CohomologyClass {
            degree: dx,
            coords: x.to_vec(),
        };
        Ok(product_with_lift(self.res, &x, &self.lifts[i])?.coords)
    }
}

/// Generators and relations of `H*(G, k)` through degree `cutoff`, found by
/// composing chain-map lifts over the minimal resolution of `k`.
pub fn ring_presentation(
    group: &Arc<FiniteGroup>,
    p: u32,
    cutoff: usize,
) -> Result<GradedRingPresentation> {
    if !group.is_p_group(p) {
        return Err(Error::UnsupportedShape(
            "ring discovery needs a p-group".into(),
        ));
    }
    if cutoff < 2 {
        return Err(Error::UnsupportedShape(
            "ring discovery needs a cutoff of at least 2".into(),
        ));
    }
    let alg = GroupAlgebra::new(group.clone(), p)?;
    let res = minimal_resolution(&ModuleRep::trivial(&alg), cutoff)?;
    ring_presentation_from(&res)
}

/// As [`ring_presentation`], over an existing resolution of `k`.
pub fn ring_presentation_from(res: &FreeResolution) -> Result<GradedRingPresentation> {
    let cutoff = res.length();
    let mut model = ExtModel {
        res,
        cutoff,
        lifts: Vec::new(),
    };
    discover(&mut model, res.algebra().p(), cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use GeneratorKind::*;

    fn ring(spec: &str, p: u32, d: usize) -> GradedRingPresentation {
        ring_presentation(&Arc::new(build_group(spec).unwrap()), p, d).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        let r = ring("C2", 2, 8);
        assert_eq!(r.generator_signature(), [(1, Polynomial)]);
        assert!(r.relations.is_empty());
        for (spec, p) in [("C4", 2), ("C3", 3), ("C9", 3)] {
            let r = ring(spec, p, 8);
            assert_eq!(
                r.generator_signature(),
                [(1, Exterior), (2, Polynomial)],
                "{spec}"
            );
            assert_eq!(r.relation_strings(), ["e1_0^2"], "{spec}");
            assert!(r.stabilized);
        }
    }

    #[test]
    fn klein_and_rank_three() {
        let r = ring("Klein", 2, 6);
        assert_eq!(r.generator_signature(), [(1, Polynomial), (1, Polynomial)]);
        assert!(r.relations.is_empty());
        assert_eq!(r.hilbert, [1, 2, 3, 4, 5, 6, 7]);
        let r = ring("C4xC2", 2, 6);
        assert_eq!(r.degrees(), [1, 1, 2]);
        assert_eq!(r.relations.len(), 1);
        assert_eq!(r.hilbert, [1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn rejects_non_p_groups() {
        let g = Arc::new(build_group("S3").unwrap());
        assert!(matches!(
            ring_presentation(&g, 2, 4),
            Err(Error::UnsupportedShape(_))
        ));
        let g = Arc::new(build_group("C2").unwrap());
        assert!(ring_presentation(&g, 2, 1).is_err());
    }
}
