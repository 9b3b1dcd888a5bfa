//! Indecomposable projective `k[G]`-modules for the shapes where they can be
//! written down directly: `p`-groups, cyclic groups, and groups with a cyclic
//! subgroup of order `|G|/|G|_p`, from which the simple modules are induced.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{
    are_isomorphic, indecomposable_summands, induce, invariants, is_indecomposable,
    LocalProjective, ModuleRep,
};
use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::{p_part, subgroup_generated, SubgroupData};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectiveSource {
    /// `k[G]` for a `p`-group.
    Regular,
    /// `k[G]e` for a block of a cyclic group algebra.
    Block,
    /// Induced from a simple module of a cyclic `p′`-subgroup.
    Induced,
}

impl ProjectiveSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ProjectiveSource::Regular => "regular",
            ProjectiveSource::Block => "block",
            ProjectiveSource::Induced => "induced",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProjectiveEntry {
    pub module: ModuleRep,
    pub source: ProjectiveSource,
    /// `None` when the endomorphism sweep is too large to decide.
    pub indecomposable: Option<bool>,
    pub invariant_dim: usize,
    /// Indecomposable summands; `None` when splitting was too large to decide.
    pub summands: Option<Vec<ModuleRep>>,
}

impl ProjectiveEntry {
    pub fn rank(&self) -> usize {
        self.module.dim()
    }
}

/// A cyclic subgroup of order `|G| / |G|_p`, if one exists.
pub fn cyclic_p_complement(algebra: &GroupAlgebra) -> Option<SubgroupData> {
    let g = algebra.group();
    let m = g.order() / p_part(g.order(), algebra.p());
    let x = g.elements().find(|&x| g.element_order(x) == m)?;
    subgroup_generated(g, &[x]).ok()
}

fn entry(module: ModuleRep, source: ProjectiveSource) -> ProjectiveEntry {
    let indecomposable = is_indecomposable(&module).ok();
    let invariant_dim = invariants(&module).cols();
    let summands = match indecomposable {
        Some(true) => Some(alloc::vec![module.clone()]),
        _ => indecomposable_summands(&module).ok(),
    };
    ProjectiveEntry {
        module,
        source,
        indecomposable,
        invariant_dim,
        summands,
    }
}

/// Projectives built directly: `k[G]` itself, the block projectives of a
/// cyclic group algebra, or inductions of the simple modules of a cyclic
/// `p′`-complement. Each entry records its indecomposable summands.
pub fn projective_census(algebra: &GroupAlgebra) -> Result<Vec<ProjectiveEntry>> {
    let g = algebra.group();
    let p = algebra.p();
    if g.is_p_group(p) {
        return Ok(alloc::vec![entry(
            ModuleRep::free(algebra, 1),
            ProjectiveSource::Regular
        )]);
    }
    if g.is_cyclic() {
        let blocks = algebra.crt_decompose()?.blocks.len();
        return (0..blocks)
            .map(|i| {
                Ok(entry(
                    LocalProjective::block(algebra, i)?.module().clone(),
                    ProjectiveSource::Block,
                ))
            })
            .collect();
    }
    let h = cyclic_p_complement(algebra).ok_or_else(|| {
        Error::UnsupportedShape(format!(
            "no cyclic subgroup of order |G|/|G|_{p} to induce from"
        ))
    })?;
    let (sub, _) = h.as_group();
    let sub_alg = GroupAlgebra::new(Arc::new(sub), p)?;
    let blocks = sub_alg.crt_decompose()?.blocks.len();
    (0..blocks)
        .map(|i| {
            let simple = LocalProjective::block(&sub_alg, i)?.module().clone();
            Ok(entry(
                induce(&simple, &h, algebra)?,
                ProjectiveSource::Induced,
            ))
        })
        .collect()
}

/// One representative per isomorphism class among all summands of the
/// census entries.
pub fn distinct_indecomposables(census: &[ProjectiveEntry]) -> Result<Vec<ModuleRep>> {
    let mut out: Vec<ModuleRep> = Vec::new();
    for e in census {
        let parts = e.summands.as_ref().ok_or(Error::TooLargeToDecide {
            size_log_p: e.rank(),
        })?;
        for x in parts {
            let mut seen = false;
            for y in &out {
                if are_isomorphic(x, y)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(x.clone());
            }
        }
    }
    Ok(out)
}
