//! The rank-2 modules `V_(α₁,α₂) = R/(α₁x₁ + α₂x₂, x₁x₂)` over
//! `R = F_2[C2 × C2] = F_2[x₁, x₂]/(x₁², x₂²)`, where `x_i = g_i − 1`.

use alloc::vec;

use super::ModuleRep;
use crate::algebra::GroupAlgebra;
use crate::error::{Error, Result};
use crate::matrix::FpMatrix;

/// `V_(α₁,α₂)` on the quotient basis `{1, w}`, where `w` is `x₂` when
/// `α₁ ≠ 0` and `x₁` otherwise. Each `x_i` sends `1` to a multiple of `w`
/// and kills `w`; for `(1, 0)` that makes `x₁` act as zero and `x₂` as the
/// Jordan block.
///
/// The algebra must be the Klein group as built from `"Klein"` or `"C2xC2"`
/// (generators labelled `x1`, `x2`) in characteristic 2.
pub fn klein_v_family(algebra: &GroupAlgebra, a1: u32, a2: u32) -> Result<ModuleRep> {
    let f = algebra.field();
    if f.p() != 2 {
        return Err(Error::UnsupportedShape(
            "the V family is defined over F_2".into(),
        ));
    }
    let g = algebra.group();
    let (Some(g1), Some(g2)) = (g.find_label("x1"), g.find_label("x2")) else {
        return Err(Error::UnsupportedGroup(
            "expected the Klein group with generators x1, x2".into(),
        ));
    };
    if g.order() != 4 || g.element_order(g1) != 2 || g.element_order(g2) != 2 {
        return Err(Error::UnsupportedGroup("expected the Klein group".into()));
    }
    let (a1, a2) = (f.reduce(u64::from(a1)), f.reduce(u64::from(a2)));
    // x_i · 1 = c_i w modulo α₁x₁ + α₂x₂
    let (c1, c2) = match (a1, a2) {
        (0, 0) => return Err(Error::ZeroParameter),
        (0, _) => (1, 0),
        _ => (f.neg(f.mul(a2, f.inv(a1))), 1),
    };
    let gen = |c: u32| FpMatrix::from_rows(f, &[vec![1, 0], vec![c, 1]]);
    ModuleRep::from_generators(algebra.clone(), 2, &[(g1, gen(c1)), (g2, gen(c2))])
        .ok_or_else(|| Error::UnsupportedGroup("generators x1, x2 do not commute".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::alg;
    use crate::module::{are_isomorphic, is_indecomposable};

    #[test]
    fn one_zero_kills_x1() {
        let a = alg("Klein", 2);
        let v = klein_v_family(&a, 1, 0).unwrap();
        let g = a.group();
        let id = FpMatrix::identity(a.field(), 2);
        assert_eq!(*v.action(g.find_label("x1").unwrap()), id);
        let x2 = v.action(g.find_label("x2").unwrap()).sub(&id);
        assert_eq!(
            x2,
            FpMatrix::from_rows(a.field(), &[vec![0, 0], vec![1, 0]])
        );
    }

    #[test]
    fn three_classes() {
        let a = alg("Klein", 2);
        let vs: alloc::vec::Vec<_> = [(1, 0), (0, 1), (1, 1)]
            .iter()
            .map(|&(x, y)| klein_v_family(&a, x, y).unwrap())
            .collect();
        for (i, v) in vs.iter().enumerate() {
            assert!(is_indecomposable(v).unwrap());
            for (j, w) in vs.iter().enumerate() {
                assert_eq!(are_isomorphic(v, w).unwrap(), i == j);
            }
        }
        assert!(matches!(
            klein_v_family(&a, 0, 0),
            Err(Error::ZeroParameter)
        ));
        assert!(klein_v_family(&alg("Klein", 3), 1, 0).is_err());
    }
}
