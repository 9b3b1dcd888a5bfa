//! Finite groups as Cayley tables: builders, subgroups, quotients, Sylow data.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest group order the table representation accepts.
pub const MAX_ORDER: usize = 64;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table, `table[i * n + j] = g_i g_j`.
    ///
    /// Checks the Latin-square property, a two-sided identity, inverses, and
    /// associativity on all triples.
    pub fn from_table(table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Parse("empty group".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge { order: n });
        }
        if table.len() != n * n || table.iter().any(|&v| v >= n) {
            return Err(Error::Parse("table has the wrong shape".into()));
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[table[i * n + j]] = true;
                col_seen[table[j * n + i]] = true;
            }
            if !row_seen.iter().all(|&s| s) || !col_seen.iter().all(|&s| s) {
                return Err(Error::Parse("table is not a Latin square".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e * n + g] == g && table[g * n + e] == g))
            .ok_or_else(|| Error::Parse("no identity element".into()))?;
        let mut inverses = vec![0; n];
        for g in 0..n {
            inverses[g] = (0..n)
                .find(|&h| table[g * n + h] == identity && table[h * n + g] == identity)
                .ok_or_else(|| Error::Parse("missing inverse".into()))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::Parse("table is not associative".into()));
                    }
                }
            }
        }
        Ok(Self {
            order: n,
            table,
            labels,
            identity,
            inverses,
        })
    }

    /// The cyclic group `C_n` with elements `1, x, x^2, ...`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_named(n, "x")
    }

    fn cyclic_named(n: usize, generator: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("C0 is not a group".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge { order: n });
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let labels = (0..n).map(|k| power_label(generator, k)).collect();
        Self::from_table(table, labels)
    }

    /// `Σ_3 = <a, b | a^2 = b^3 = 1, ba = ab^2>`, elements `1, b, b^2, a, ab, ab^2`.
    pub fn symmetric3() -> Self {
        Self::symmetric3_named("a", "b")
    }

    fn symmetric3_named(a: &str, b: &str) -> Self {
        // a^i b^j · a^k b^l = a^(i+k) b^((-1)^k j + l), index 3i + j.
        let mut table = vec![0; 36];
        for x in 0..6 {
            for y in 0..6 {
                let (i, j) = (x / 3, x % 3);
                let (k, l) = (y / 3, y % 3);
                let jj = if k == 0 { j } else { (3 - j) % 3 };
                table[x * 6 + y] = 3 * ((i + k) % 2) + (jj + l) % 3;
            }
        }
        let labels = (0..6)
            .map(|x| {
                let (i, j) = (x / 3, x % 3);
                let bl = power_label(b, j);
                match (i, j) {
                    (0, _) => bl,
                    (_, 0) => a.to_string(),
                    _ => format!("{a}{bl}"),
                }
            })
            .collect();
        Self::from_table(table, labels).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// `g h g^-1`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }

    /// First element (in index order) generating the whole group.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order).find(|&g| self.element_order(g) == self.order)
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order, p as usize)
    }

    /// Greedy generating set: elements in index order that are not already in
    /// the subgroup generated by the earlier picks.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        for g in 0..self.order {
            if !span[g] {
                gens.push(g);
                for m in closure(self, &gens) {
                    span[m] = true;
                }
            }
        }
        gens
    }

    /// The multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|g| self.element_order(g)).collect();
        v.sort_unstable();
        v
    }
}

fn power_label(generator: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => generator.into(),
        _ => format!("{generator}^{k}"),
    }
}

fn product_label(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.into(),
        (_, "1") => a.into(),
        _ => format!("{a}*{b}"),
    }
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: u32) -> usize {
    let p = p as usize;
    let mut acc = 1;
    while n.is_multiple_of(p) {
        n /= p;
        acc *= p;
    }
    acc
}

/// Sorted closure of `seeds ∪ {1}` under multiplication (finite, so also under inverses).
fn closure(g: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order];
    inside[g.identity] = true;
    let mut members = vec![g.identity];
    let mut frontier = vec![g.identity];
    while let Some(x) = frontier.pop() {
        for &s in seeds {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                members.push(y);
                frontier.push(y);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Componentwise product; element `(i, j)` has index `i * |G2| + j`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let (n1, n2) = (g1.order, g2.order);
    let n = n1.saturating_mul(n2);
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n });
    }
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
        }
    }
    let labels = (0..n)
        .map(|a| product_label(g1.label(a / n2), g2.label(a % n2)))
        .collect();
    FiniteGroup::from_table(table, labels)
}

/// Parses a group spec: `term ("x" term)*` with `term := "C" digits | "S3" | "Klein"`.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    #[derive(Clone, Copy)]
    enum Term {
        Cyclic(usize),
        S3,
    }
    if spec.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut terms = Vec::new();
    for raw in spec.split('x') {
        match raw {
            "S3" => terms.push(Term::S3),
            "Klein" => {
                terms.push(Term::Cyclic(2));
                terms.push(Term::Cyclic(2));
            }
            _ => {
                let digits = raw
                    .strip_prefix('C')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| Error::Parse(format!("bad term {raw:?} in {spec:?}")))?;
                let n: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad order in {raw:?}")))?;
                if n == 0 {
                    return Err(Error::Parse("C0 is not a group".into()));
                }
                terms.push(Term::Cyclic(n));
            }
        }
    }
    let mut total: usize = 1;
    for t in &terms {
        let n = match t {
            Term::Cyclic(n) => *n,
            Term::S3 => 6,
        };
        total = total.saturating_mul(n);
    }
    if total > MAX_ORDER {
        return Err(Error::TooLarge { order: total });
    }
    let many = terms.len() > 1;
    let mut acc: Option<FiniteGroup> = None;
    for (i, t) in terms.iter().enumerate() {
        let factor = match (*t, many) {
            (Term::Cyclic(n), false) => FiniteGroup::cyclic(n)?,
            (Term::Cyclic(n), true) => FiniteGroup::cyclic_named(n, &format!("x{}", i + 1))?,
            (Term::S3, false) => FiniteGroup::symmetric3(),
            (Term::S3, true) => {
                FiniteGroup::symmetric3_named(&format!("a{}", i + 1), &format!("b{}", i + 1))
            }
        };
        acc = Some(match acc {
            None => factor,
            Some(g) => direct_product(&g, &factor)?,
        });
    }
    Ok(acc.expect("at least one term"))
}

/// A subgroup of a parent group, as a sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupData {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    is_normal: bool,
}

impl SubgroupData {
    /// Wraps an explicit member set, checking closure.
    pub fn from_members(parent: Arc<FiniteGroup>, members: &[usize]) -> Result<Self> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&x| x >= parent.order()) || closure(&parent, &m) != m {
            return Err(Error::NotSubgroup);
        }
        Ok(Self::new_closed(parent, m))
    }

    fn new_closed(parent: Arc<FiniteGroup>, members: Vec<usize>) -> Self {
        assert_eq!(parent.order() % members.len(), 0, "Lagrange violated");
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            inside[m] = true;
        }
        let is_normal = parent
            .elements()
            .all(|g| members.iter().all(|&h| inside[parent.conjugate(g, h)]));
        Self {
            parent,
            members,
            is_normal,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_cyclic(&self) -> bool {
        self.members
            .iter()
            .any(|&g| self.parent.element_order(g) == self.members.len())
    }

    /// The subgroup as a group in its own right, with the embedding
    /// `embedding[i]` = parent index of subgroup element `i`.
    pub fn as_group(&self) -> (FiniteGroup, Vec<usize>) {
        let n = self.members.len();
        let pos = |g: usize| self.members.binary_search(&g).expect("closed subgroup");
        let mut table = vec![0; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * n + j] = pos(self.parent.mul(a, b));
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&g| self.parent.label(g).to_string())
            .collect();
        let group = FiniteGroup::from_table(table, labels).expect("subgroup table is a group");
        (group, self.members.clone())
    }

    /// Left coset representatives `t_i` (the least element of each `t_i H`), in
    /// increasing order.
    pub fn left_coset_reps(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for t in g.elements() {
            if seen[t] {
                continue;
            }
            reps.push(t);
            for &h in &self.members {
                seen[g.mul(t, h)] = true;
            }
        }
        reps
    }
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_generated(g: &Arc<FiniteGroup>, seeds: &[usize]) -> Result<SubgroupData> {
    if seeds.iter().any(|&s| s >= g.order()) {
        return Err(Error::NotSubgroup);
    }
    let members = closure(g, seeds);
    Ok(SubgroupData::new_closed(g.clone(), members))
}

/// `G/N` and the projection `element -> coset index`. Cosets are numbered by
/// their least element; each coset is labelled by that representative.
pub fn quotient_group(g: &Arc<FiniteGroup>, n: &SubgroupData) -> Result<(FiniteGroup, Vec<usize>)> {
    if !Arc::ptr_eq(g, &n.parent) && **g != *n.parent {
        return Err(Error::NotSubgroup);
    }
    if !n.is_normal {
        return Err(Error::NotNormal);
    }
    let reps = n.left_coset_reps();
    let mut projection = vec![usize::MAX; g.order()];
    for (ci, &t) in reps.iter().enumerate() {
        for &h in &n.members {
            projection[g.mul(t, h)] = ci;
        }
    }
    let q = reps.len();
    let mut table = vec![0; q * q];
    for i in 0..q {
        for j in 0..q {
            table[i * q + j] = projection[g.mul(reps[i], reps[j])];
        }
    }
    let labels = reps.iter().map(|&t| g.label(t).to_string()).collect();
    let quotient = FiniteGroup::from_table(table, labels)?;
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(
                projection[g.mul(a, b)],
                quotient.mul(projection[a], projection[b]),
                "projection is not a homomorphism"
            );
        }
    }
    Ok((quotient, projection))
}

/// A Sylow `p`-subgroup, grown deterministically: starting from the trivial
/// subgroup, repeatedly adjoin the first element (in index order) that
/// normalizes the current `p`-subgroup and keeps it a `p`-group.
pub fn sylow_subgroup(g: &Arc<FiniteGroup>, p: u32) -> SubgroupData {
    let target = p_part(g.order(), p);
    let mut members = vec![g.identity()];
    while members.len() < target {
        let inside = |x: usize, m: &[usize]| m.binary_search(&x).is_ok();
        let next = g.elements().find_map(|x| {
            if inside(x, &members) || !is_power_of(g.element_order(x), p as usize) {
                return None;
            }
            let normalizes = members.iter().all(|&h| inside(g.conjugate(x, h), &members));
            if !normalizes {
                return None;
            }
            let mut seeds = members.clone();
            seeds.push(x);
            let grown = closure(g, &seeds);
            is_power_of(grown.len(), p as usize).then_some(grown)
        });
        members = next.expect("a proper p-subgroup has a p-element in its normalizer");
    }
    SubgroupData::new_closed(g.clone(), members)
}

/// Whether the Sylow `p`-subgroup is cyclic (equivalently, `k[G]` has finitely
/// many indecomposable modules in characteristic `p`).
pub fn finite_type_predicate(g: &Arc<FiniteGroup>, p: u32) -> bool {
    sylow_subgroup(g, p).is_cyclic()
}

/// Subgroup generated by all elements of order prime to `p`.
pub fn p_prime_core(g: &Arc<FiniteGroup>, p: u32) -> SubgroupData {
    let seeds: Vec<usize> = g
        .elements()
        .filter(|&x| !g.element_order(x).is_multiple_of(p as usize))
        .collect();
    let members = closure(g, &seeds);
    SubgroupData::new_closed(g.clone(), members)
}

/// Exponents `e_i` with `Sylow_p(G) ≅ ∏ C_{p^e_i}` for abelian `G`, sorted
/// decreasingly. Read off from the sizes of the `p^i`-torsion subgroups.
pub fn abelian_p_invariants(g: &FiniteGroup, p: u32) -> Vec<u32> {
    assert!(g.is_abelian(), "abelian invariants need an abelian group");
    let p = p as usize;
    // log_p |G[p^i]| for i = 0, 1, ...
    let mut logs = vec![0usize];
    let mut i = 1;
    loop {
        let pi = p.pow(i as u32);
        let count = g
            .elements()
            .filter(|&x| pi.is_multiple_of(g.element_order(x)))
            .count();
        let mut l = 0;
        let mut c = count;
        while c % p == 0 && c > 1 {
            c /= p;
            l += 1;
        }
        if l == *logs.last().unwrap() {
            break;
        }
        logs.push(l);
        i += 1;
    }
    // Number of cyclic factors of order >= p^i is logs[i] - logs[i-1].
    let mut exps = Vec::new();
    let at_least: Vec<usize> = (1..logs.len()).map(|i| logs[i] - logs[i - 1]).collect();
    for (i, &cnt) in at_least.iter().enumerate() {
        let next = at_least.get(i + 1).copied().unwrap_or(0);
        for _ in 0..(cnt - next) {
            exps.push(i as u32 + 1);
        }
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(spec).unwrap())
    }

    #[test]
    fn s3_relations() {
        let g = FiniteGroup::symmetric3();
        let a = g.find_label("a").unwrap();
        let b = g.find_label("b").unwrap();
        assert_eq!(g.labels(), ["1", "b", "b^2", "a", "ab", "ab^2"]);
        assert_eq!(g.mul(a, a), g.identity());
        assert_eq!(g.pow(b, 3), g.identity());
        assert_eq!(g.mul(b, a), g.mul(a, g.mul(b, b)));
        assert!(!g.is_abelian());
    }

    #[test]
    fn spec_grammar() {
        assert_eq!(build_group("C6").unwrap().order(), 6);
        assert_eq!(build_group("C2xC2xC3").unwrap().order(), 12);
        let k = build_group("Klein").unwrap();
        assert_eq!(k, build_group("C2xC2").unwrap());
        assert_eq!(k.labels(), ["1", "x2", "x1", "x1*x2"]);
        assert!(k.elements().all(|g| k.element_order(g) <= 2));
        for bad in ["", "C0", "C", "c4", "C4x", "C 4", "S4", "xC2", "C2*C2"] {
            assert!(matches!(build_group(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert_eq!(build_group("C65"), Err(Error::TooLarge { order: 65 }));
        assert_eq!(build_group("C8xC3xC3"), Err(Error::TooLarge { order: 72 }));
    }

    #[test]
    fn subgroups_of_s3() {
        let g = arc("S3");
        let a = g.find_label("a").unwrap();
        let b = g.find_label("b").unwrap();
        let h = subgroup_generated(&g, &[a]).unwrap();
        assert_eq!(h.members(), [0, a]);
        assert!(!h.is_normal());
        let n = subgroup_generated(&g, &[b]).unwrap();
        assert_eq!(n.order(), 3);
        assert!(n.is_normal());
        assert_eq!(subgroup_generated(&g, &[]).unwrap().order(), 1);
    }

    #[test]
    fn quotients() {
        let g = arc("S3");
        let n = subgroup_generated(&g, &[1]).unwrap();
        let (q, proj) = quotient_group(&g, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, [0, 0, 0, 1, 1, 1]);
        let h = subgroup_generated(&g, &[3]).unwrap();
        assert_eq!(quotient_group(&g, &h).unwrap_err(), Error::NotNormal);
        let triv = subgroup_generated(&g, &[]).unwrap();
        assert_eq!(quotient_group(&g, &triv).unwrap().0, *g);
    }

    #[test]
    fn sylow_data() {
        let g = arc("S3");
        assert_eq!(sylow_subgroup(&g, 3).members(), [0, 1, 2]);
        assert_eq!(sylow_subgroup(&g, 2).members(), [0, 3]);
        assert_eq!(sylow_subgroup(&arc("C6"), 5).order(), 1);
        // needs three generators
        assert_eq!(sylow_subgroup(&arc("C2xC2xC2xC3"), 2).order(), 8);
        assert!(finite_type_predicate(&g, 3));
        assert!(!finite_type_predicate(&arc("Klein"), 2));
        assert!(finite_type_predicate(&arc("Klein"), 3));
    }

    #[test]
    fn abelian_invariants() {
        assert_eq!(
            abelian_p_invariants(&build_group("C4xC2xC3").unwrap(), 2),
            [2, 1]
        );
        assert_eq!(abelian_p_invariants(&build_group("C9").unwrap(), 3), [2]);
        assert!(abelian_p_invariants(&build_group("C5").unwrap(), 2).is_empty());
    }
}
