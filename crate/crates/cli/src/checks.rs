//! The `check` subcommand: consistency suites for one algebra.

use grpcoh_core::cohomology::{
    abelian_closed_form_of, ext_dims, lhs_strategy, lift_cocycle, lift_cocycle_seeded,
    product_with_lift, ring_presentation, ChainMapLift, CohomologyClass,
};
use grpcoh_core::group::{abelian_p_invariants, FiniteGroup};
use grpcoh_core::module::{derivations_h1, is_projective, projective_census, tensor_diagonal};
use grpcoh_core::resolve::{bar_resolution, minimal_resolution, FreeResolution, BAR_MAX_ORDER};
use grpcoh_core::{Error, GroupAlgebra, ModuleRep};
use serde_json::{json, Value};

enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail(detail())
    }
}

/// Unsupported shapes skip the check; anything else is a failure.
fn from_error(e: Error) -> Status {
    match e {
        Error::UnsupportedGroup(_)
        | Error::UnsupportedShape(_)
        | Error::NotCyclic
        | Error::TooLargeToDecide { .. } => Status::Skip(e.to_string()),
        other => Status::Fail(other.to_string()),
    }
}

fn attempt(f: impl FnOnce() -> Result<Status, Error>) -> Status {
    f().unwrap_or_else(from_error)
}

/// Largest degree `d ≤ maxdeg` whose resolution stays within `budget`
/// columns, estimating the ranks of a `p`-group of `p`-rank `r` by
/// `C(d + r − 1, r − 1)`.
fn degree_budget(g: &FiniteGroup, p: u32, maxdeg: usize, budget: usize) -> usize {
    let r = if g.is_abelian() {
        abelian_p_invariants(g, p).len()
    } else {
        // log_p of the number of solutions of x^p = 1 bounds the p-rank
        let n = g
            .elements()
            .filter(|&x| g.pow(x, p as usize) == g.identity())
            .count();
        (n as f64).log(p as f64).floor() as usize
    }
    .max(1);
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    (0..=maxdeg)
        .take_while(|&d| g.order() * binom(d + r - 1, r - 1) <= budget)
        .last()
        .unwrap_or(0)
}

/// Columns allowed in resolutions used by the degree-wise checks.
const RESOLUTION_BUDGET: usize = 1500;

/// Highest degree used for product checks; the number of class pairs grows
/// with the degree as well.
fn product_degree(g: &FiniteGroup, p: u32, maxdeg: usize) -> usize {
    let cap = match g.order() {
        0..=8 => 6,
        9..=16 => 3,
        _ => 2,
    };
    degree_budget(g, p, maxdeg.min(cap), RESOLUTION_BUDGET / 2)
}

struct Classes<'a> {
    res: &'a FreeResolution,
    basis: Vec<CohomologyClass>,
    lifts: Vec<ChainMapLift>,
}

impl<'a> Classes<'a> {
    fn new(res: &'a FreeResolution) -> Result<Self, Error> {
        let d = res.length();
        let mut basis = Vec::new();
        let mut lifts = Vec::new();
        for n in 0..=d {
            for i in 0..res.ranks()[n] {
                let c = CohomologyClass::basis(res, n, i);
                lifts.push(lift_cocycle(res, &c, d)?);
                basis.push(c);
            }
        }
        Ok(Self { res, basis, lifts })
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let d = self.res.length();
        let n = self.basis.len();
        (0..n)
            .flat_map(move |i| (0..n).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.basis[i].degree + self.basis[j].degree <= d)
    }

    fn times(&self, x: &CohomologyClass, j: usize) -> Result<CohomologyClass, Error> {
        product_with_lift(self.res, x, &self.lifts[j])
    }
}

fn graded_commutativity(c: &Classes) -> Result<Status, Error> {
    let f = c.res.algebra().field();
    for (i, j) in c.pairs() {
        let (x, y) = (&c.basis[i], &c.basis[j]);
        let xy = c.times(x, j)?;
        let yx = c.times(y, i)?;
        let sign = if (x.degree * y.degree) % 2 == 0 {
            1
        } else {
            f.neg(1)
        };
        let signed: Vec<u32> = yx.coords.iter().map(|&v| f.mul(sign, v)).collect();
        if xy.coords != signed {
            return Ok(Status::Fail(format!(
                "classes {i} and {j} do not graded-commute"
            )));
        }
    }
    Ok(Status::Pass)
}

fn odd_squares(c: &Classes) -> Result<Status, Error> {
    for (i, x) in c.basis.iter().enumerate() {
        if x.degree % 2 == 1 && 2 * x.degree <= c.res.length() && !c.times(x, i)?.is_zero() {
            return Ok(Status::Fail(format!(
                "class {i} of odd degree squares to a nonzero class"
            )));
        }
    }
    Ok(Status::Pass)
}

/// Triples of positive-degree basis classes, capped at this many.
const ASSOCIATIVITY_SAMPLE: usize = 200;

fn associativity(c: &Classes) -> Result<Status, Error> {
    let d = c.res.length();
    let n = c.basis.len();
    let mut tested = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (&c.basis[i], &c.basis[j], &c.basis[k]);
                if x.degree == 0
                    || y.degree == 0
                    || z.degree == 0
                    || x.degree + y.degree + z.degree > d
                {
                    continue;
                }
                if tested == ASSOCIATIVITY_SAMPLE {
                    return Ok(Status::Pass);
                }
                tested += 1;
                // (xy)z against x(yz), with yz lifted afresh
                let left = c.times(&c.times(x, j)?, k)?;
                let yz = c.times(y, k)?;
                let right = product_with_lift(c.res, x, &lift_cocycle(c.res, &yz, d)?)?;
                if left != right {
                    return Ok(Status::Fail(format!(
                        "classes {i}, {j}, {k} do not associate"
                    )));
                }
            }
        }
    }
    Ok(Status::Pass)
}

fn lift_independence(c: &Classes) -> Result<Status, Error> {
    let d = c.res.length();
    for (j, y) in c.basis.iter().enumerate().filter(|(_, y)| y.degree >= 1) {
        let other = lift_cocycle_seeded(c.res, y, d, Some(0x5eed + j as u64))?;
        if !other.is_chain_map(c.res) {
            return Ok(Status::Fail(format!(
                "perturbed lift of class {j} is not a chain map"
            )));
        }
        for x in c.basis.iter().filter(|x| x.degree + y.degree <= d) {
            if c.times(x, j)? != product_with_lift(c.res, x, &other)? {
                return Ok(Status::Fail(format!(
                    "products with class {j} depend on the lift"
                )));
            }
        }
    }
    Ok(Status::Pass)
}

pub(crate) fn run_checks(alg: &GroupAlgebra, maxdeg: usize) -> Value {
    let g = alg.group().clone();
    let p = alg.p();
    let pgroup = g.is_p_group(p) && g.order() > 1;
    let coprime = !g.order().is_multiple_of(p as usize);
    let mut out: Vec<(&str, Status)> = Vec::new();

    let hopf = alg.hopf_axioms_check();
    out.push((
        "hopf_axioms",
        verdict(hopf.all_pass(), || "an axiom has a witness".into()),
    ));

    let low = if pgroup {
        degree_budget(&g, p, 4, RESOLUTION_BUDGET).max(1)
    } else {
        4
    };
    let dims4 = ext_dims(&g, p, low);
    out.push((
        "maschke",
        match &dims4 {
            Ok(d) => {
                let vanish = d[1..].iter().all(|&x| x == 0);
                let semisimple = alg.is_semisimple().semisimple;
                verdict(semisimple == coprime && vanish == coprime, || {
                    format!("H^1..{low} = {:?}", &d[1..])
                })
            }
            Err(e) => from_error(e.clone()),
        },
    ));

    out.push((
        "radical",
        attempt(|| {
            let r = alg.jacobson_radical()?;
            Ok(verdict((r.cols() == 0) == coprime, || {
                format!("radical of dimension {}", r.cols())
            }))
        }),
    ));

    out.push((
        "h1_coherence",
        match &dims4 {
            Ok(d) => {
                let h1 = derivations_h1(&ModuleRep::trivial(alg)).h1_dim;
                verdict(h1 == d[1], || {
                    format!("derivations give {h1}, ext gives {}", d[1])
                })
            }
            Err(e) => from_error(e.clone()),
        },
    ));

    out.push((
        "bar_oracle",
        if g.order() > BAR_MAX_ORDER {
            Status::Skip(format!("bar complex limited to order {BAR_MAX_ORDER}"))
        } else {
            attempt(|| {
                let bar = bar_resolution(&g, p, 3)?;
                let dims = ext_dims(&g, p, 3)?;
                Ok(verdict(bar.cohomology_dims() == dims, || {
                    format!("bar {:?} vs {dims:?}", bar.cohomology_dims())
                }))
            })
        },
    ));

    out.push((
        "tensor_ideal",
        attempt(|| {
            let free = ModuleRep::free(alg, 1);
            let k = ModuleRep::trivial(alg);
            // free ⊗ free has |G|^2 dimensions
            let second = if g.order() <= 16 {
                free.clone()
            } else {
                k.direct_sum(&k)
            };
            let ok = [k, second]
                .iter()
                .all(|x| is_projective(&tensor_diagonal(&free, x)).projective);
            Ok(verdict(ok, || {
                "free tensor a module is not projective".into()
            }))
        }),
    ));

    out.push((
        "sylow_divisibility",
        attempt(|| {
            let sylow = grpcoh_core::group::sylow_subgroup(&g, p).order();
            let census = projective_census(alg)?;
            Ok(verdict(
                census.iter().all(|e| e.rank() % sylow == 0),
                || "a projective rank is not divisible".into(),
            ))
        }),
    ));

    let stab_degree = if pgroup {
        degree_budget(&g, p, maxdeg, RESOLUTION_BUDGET)
    } else {
        maxdeg
    };
    out.push((
        "generator_stabilization",
        if stab_degree < 2 || coprime {
            Status::Skip("needs a cutoff of at least 2 and p dividing |G|".into())
        } else {
            attempt(|| {
                let r = if pgroup {
                    ring_presentation(&g, p, stab_degree)?
                } else {
                    lhs_strategy(&g, p, stab_degree)?
                };
                // a late generator only means the cutoff is too low to tell
                Ok(if r.stabilized {
                    Status::Pass
                } else {
                    Status::Skip(format!(
                        "generator degrees {:?} reach the top half of the cutoff",
                        r.degrees()
                    ))
                })
            })
        },
    ));

    out.push((
        "dispatcher_coherence",
        if !(pgroup && g.is_abelian()) || maxdeg < 2 {
            Status::Skip("needs an abelian p-group".into())
        } else {
            attempt(|| {
                let d = product_degree(&g, p, maxdeg).max(2);
                let lifted = ring_presentation(&g, p, d)?;
                let closed = abelian_closed_form_of(&g, p, d)?;
                let mut a = lifted.degrees();
                let mut b = closed.degrees();
                a.sort_unstable();
                b.sort_unstable();
                Ok(verdict(lifted.hilbert == closed.hilbert && a == b, || {
                    "lifting and closed form differ".into()
                }))
            })
        },
    ));

    let d = product_degree(&g, p, maxdeg);
    if pgroup {
        let res = minimal_resolution(&ModuleRep::trivial(alg), d);
        match res {
            Ok(res) => {
                out.push((
                    "resolution",
                    verdict(res.is_exact() && res.is_minimal(), || {
                        "resolution is not exact and minimal".into()
                    }),
                ));
                match Classes::new(&res) {
                    Ok(c) => {
                        out.push(("graded_commutativity", attempt(|| graded_commutativity(&c))));
                        out.push((
                            "odd_squares",
                            if p == 2 {
                                Status::Skip("p = 2".into())
                            } else {
                                attempt(|| odd_squares(&c))
                            },
                        ));
                        out.push(("associativity", attempt(|| associativity(&c))));
                        out.push(("lift_independence", attempt(|| lift_independence(&c))));
                    }
                    Err(e) => out.push(("lifting", from_error(e))),
                }
            }
            Err(e) => out.push(("resolution", from_error(e))),
        }
    } else {
        for name in [
            "resolution",
            "graded_commutativity",
            "odd_squares",
            "associativity",
            "lift_independence",
        ] {
            out.push((name, Status::Skip("k[G] is not local".into())));
        }
    }

    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    let checks: Vec<Value> = out
        .into_iter()
        .map(|(name, s)| {
            let (status, detail) = match s {
                Status::Pass => {
                    pass += 1;
                    ("pass", Value::Null)
                }
                Status::Fail(d) => {
                    fail += 1;
                    ("fail", Value::from(d))
                }
                Status::Skip(d) => {
                    skip += 1;
                    ("skip", Value::from(d))
                }
            };
            json!({ "name": name, "status": status, "detail": detail })
        })
        .collect();
    json!({
        "checks": checks,
        "counts": { "pass": pass, "fail": fail, "skip": skip },
        "product_degree": if pgroup { Value::from(d) } else { Value::Null },
        "stabilization_degree": if coprime { Value::Null } else { Value::from(stab_degree) },
    })
}
