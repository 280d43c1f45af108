//! Finite groups given by multiplication tables, their subgroups, cosets and
//! conjugation.

pub mod catalog;
pub mod sl2;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Groups up to this order have associativity checked over all triples; larger
/// tables use Light's test over a generating set.
pub const ASSOCIATIVITY_EXHAUSTIVE_CAP: usize = 256;
/// Largest group whose full subgroup lattice is enumerated.
pub const SUBGROUP_ENUMERATION_CAP: usize = 192;

/// Index of an element in its group's table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub struct FinGroup {
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverse: Vec<Elem>,
    labels: Option<Vec<String>>,
}

pub type GroupRef = Arc<FinGroup>;

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinGroup(order {})", self.order)
    }
}

impl PartialEq for FinGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for FinGroup {}

/// Group JSON: `{order, table, labels?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Smallest subgroup containing `gens`, by closure under right multiplication.
fn closure(table: &[u32], n: usize, identity: Elem, gens: &[Elem]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[identity.idx()] = true;
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = table[x.idx() * n + s.idx()] as usize;
            if !seen[y] {
                seen[y] = true;
                queue.push_back(Elem(y as u32));
            }
        }
    }
    seen
}

impl FinGroup {
    /// Validates a multiplication table: entries in range, Latin square,
    /// two-sided identity, associativity.
    pub fn from_table(rows: Vec<Vec<u32>>) -> Result<GroupRef> {
        Self::from_table_labeled(rows, None)
    }

    pub fn from_table_labeled(rows: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<GroupRef> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::Input(format!("{} labels for a group of order {n}", l.len())));
            }
        }
        let table: Vec<u32> = rows.into_iter().flatten().collect();
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(Error::EntryOutOfRange(bad));
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let x = table[i * n + j] as usize;
                if seen[x] {
                    return Err(Error::NotLatin(i));
                }
                seen[x] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let x = table[i * n + j] as usize;
                if seen[x] {
                    return Err(Error::NotLatin(j));
                }
                seen[x] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .map(|e| Elem(e as u32))
            .ok_or(Error::NoIdentity)?;
        Self::check_associative(&table, n, identity)?;
        let mut inverse = vec![identity; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            let y = (0..n).find(|&y| table[x * n + y] == identity.0).expect("Latin square row hits identity");
            *inv = Elem(y as u32);
        }
        Ok(Arc::new(FinGroup { order: n, table, identity, inverse, labels }))
    }

    fn check_associative(table: &[u32], n: usize, identity: Elem) -> Result<()> {
        let m = |a: usize, b: usize| table[a * n + b] as usize;
        let middles: Vec<usize> = if n <= ASSOCIATIVITY_EXHAUSTIVE_CAP {
            (0..n).collect()
        } else {
            // Light's test: elements a with (xa)y = x(ay) for all x, y form a set closed
            // under products, so checking a generating set of the magma suffices.
            let mut gens = Vec::new();
            let mut reached = closure(table, n, identity, &[]);
            for g in 0..n {
                if !reached[g] {
                    gens.push(Elem(g as u32));
                    reached = closure(table, n, identity, &gens);
                }
            }
            gens.into_iter().map(Elem::idx).collect()
        };
        for &a in &middles {
            for x in 0..n {
                let xa = m(x, a);
                for y in 0..n {
                    if m(xa, y) != m(x, m(a, y)) {
                        return Err(Error::NotAssociative(x, a, y));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a group from a trusted closed multiplication rule (catalog constructions).
    pub(crate) fn from_fn(
        n: usize,
        mul: impl Fn(usize, usize) -> usize,
        labels: Option<Vec<String>>,
    ) -> Result<GroupRef> {
        let rows = (0..n).map(|i| (0..n).map(|j| mul(i, j) as u32).collect()).collect();
        Self::from_table_labeled(rows, labels)
    }

    pub fn from_json(j: &GroupJson) -> Result<GroupRef> {
        if j.table.len() != j.order {
            return Err(Error::Input(format!("order {} but table has {} rows", j.order, j.table.len())));
        }
        Self::from_table_labeled(j.table.clone(), j.labels.clone())
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.order,
            table: self.table.chunks(self.order).map(<[u32]>::to_vec).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    pub fn elem(&self, i: u32) -> Result<Elem> {
        if (i as usize) < self.order {
            Ok(Elem(i))
        } else {
            Err(Error::BadElement(i))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.idx() * self.order + b.idx()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a.idx()]
    }

    /// `g x g⁻¹`.
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.elem_order(g)).fold(1, lcm)
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a.idx()].clone(),
            None => a.0.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.as_ref()?.iter().position(|l| l == label).map(|i| Elem(i as u32))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// True when `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(n: usize, p: usize) -> bool {
    let mut m = n;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

struct SubInner {
    group: GroupRef,
    members: Vec<Elem>,
    /// Position of each element of the parent in `members`, `u32::MAX` if absent.
    pos: Vec<u32>,
    gens: OnceLock<Vec<Elem>>,
}

/// A subgroup of a [`FinGroup`]; members are kept sorted by index.
#[derive(Clone)]
pub struct Subgroup(Arc<SubInner>);

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (same_group(&self.0.group, &other.0.group) && self.0.members == other.0.members)
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.0.members.iter().map(|e| e.0).collect::<Vec<_>>())
    }
}

pub(crate) fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Subgroup {
    fn from_mask(group: &GroupRef, mask: &[bool]) -> Self {
        let members: Vec<Elem> = (0..group.order).filter(|&i| mask[i]).map(|i| Elem(i as u32)).collect();
        let mut pos = vec![u32::MAX; group.order];
        for (k, m) in members.iter().enumerate() {
            pos[m.idx()] = k as u32;
        }
        Subgroup(Arc::new(SubInner { group: group.clone(), members, pos, gens: OnceLock::new() }))
    }

    /// Smallest subgroup containing `gens`.
    pub fn generate(group: &GroupRef, gens: &[Elem]) -> Self {
        let mask = closure(&group.table, group.order, group.identity, gens);
        Self::from_mask(group, &mask)
    }

    pub fn whole(group: &GroupRef) -> Self {
        Self::from_mask(group, &vec![true; group.order])
    }

    pub fn trivial(group: &GroupRef) -> Self {
        Self::generate(group, &[])
    }

    /// Validates that `members` is closed under the group law.
    pub fn from_members(group: &GroupRef, members: &[Elem]) -> Result<Self> {
        if let Some(bad) = members.iter().find(|m| m.idx() >= group.order) {
            return Err(Error::BadElement(bad.0));
        }
        let s = Self::generate(group, members);
        let mut sorted = members.to_vec();
        sorted.sort();
        sorted.dedup();
        if s.0.members != sorted {
            return Err(Error::NotContained(format!("{:?} is not closed", sorted)));
        }
        Ok(s)
    }

    pub fn group(&self) -> &GroupRef {
        &self.0.group
    }

    pub fn order(&self) -> usize {
        self.0.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.0.members
    }

    pub fn member_indices(&self) -> Vec<u32> {
        self.0.members.iter().map(|e| e.0).collect()
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        self.0.pos[g.idx()] != u32::MAX
    }

    /// Position of `g` within [`Self::members`].
    #[inline]
    pub fn position(&self, g: Elem) -> Option<usize> {
        let p = self.0.pos[g.idx()];
        (p != u32::MAX).then_some(p as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// A small generating set: members scanned in index order, each kept when it is
    /// not already generated by the earlier picks.
    pub fn generators(&self) -> &[Elem] {
        self.0.gens.get_or_init(|| {
            let g = &self.0.group;
            let mut gens = Vec::new();
            let mut reached = closure(&g.table, g.order, g.identity, &gens);
            for &m in &self.0.members {
                if !reached[m.idx()] {
                    gens.push(m);
                    reached = closure(&g.table, g.order, g.identity, &gens);
                }
            }
            gens
        })
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        same_group(&self.0.group, &other.0.group)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.0.members.iter().all(|&m| other.contains(m))
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order() / self.order()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = (0..self.0.group.order)
            .map(|i| self.0.pos[i] != u32::MAX && other.0.pos[i] != u32::MAX)
            .collect();
        Self::from_mask(&self.0.group, &mask)
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let grp = &self.0.group;
        let mut mask = vec![false; grp.order];
        for &h in &self.0.members {
            mask[grp.conj(g, h).idx()] = true;
        }
        Self::from_mask(grp, &mask)
    }

    /// Subgroup generated by `self ∪ other`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(other.generators());
        Self::generate(&self.0.group, &gens)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.0.group;
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Normal in `universe` (which must contain `self`).
    pub fn is_normal_in(&self, universe: &Subgroup) -> bool {
        universe.generators().iter().all(|&g| self.conjugate(g) == *self)
    }

    /// Every element commutes with every element of the parent group.
    pub fn is_central(&self) -> bool {
        let whole = Subgroup::whole(&self.0.group);
        let g = &self.0.group;
        self.generators()
            .iter()
            .all(|&c| whole.generators().iter().all(|&x| g.mul(c, x) == g.mul(x, c)))
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        is_power_of(self.order(), p)
    }

    pub fn to_json(&self) -> Vec<u32> {
        self.member_indices()
    }
}

/// Coset representatives `U\G` (cosets `Ug`) for `U ≤ G`, together with the coset
/// index of every element of `G`.
#[derive(Clone, Debug)]
pub struct Transversal {
    reps: Vec<Elem>,
    coset_of: Vec<u32>,
}

impl Transversal {
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset `Ug` containing `g`.
    #[inline]
    pub fn coset_of(&self, g: Elem) -> usize {
        let c = self.coset_of[g.idx()];
        debug_assert!(c != u32::MAX, "element outside the universe");
        c as usize
    }
}

/// Cosets `U g`, `g ∈ universe`. Representatives are the minimal-index member of
/// each coset, listed in increasing order.
pub fn right_cosets(universe: &Subgroup, u: &Subgroup) -> Transversal {
    let grp = universe.group();
    let mut coset_of = vec![u32::MAX; grp.order()];
    let mut reps = Vec::new();
    for &x in universe.members() {
        if coset_of[x.idx()] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &m in u.members() {
            coset_of[grp.mul(m, x).idx()] = id;
        }
    }
    Transversal { reps, coset_of }
}

/// Like [`right_cosets`] but the coset `U` itself is represented by the identity,
/// which is the convention the induced-module bases use.
pub fn induction_transversal(universe: &Subgroup, u: &Subgroup) -> Transversal {
    let mut t = right_cosets(universe, u);
    let e = universe.group().identity();
    let c = t.coset_of(e);
    t.reps[c] = e;
    t
}

/// Double coset representatives of `U\G/H`, minimal index per double coset, increasing.
pub fn double_cosets(universe: &Subgroup, u: &Subgroup, h: &Subgroup) -> Vec<Elem> {
    let grp = universe.group();
    let mut seen = vec![false; grp.order()];
    let mut reps = Vec::new();
    for &x in universe.members() {
        if seen[x.idx()] {
            continue;
        }
        reps.push(x);
        for &a in u.members() {
            let ax = grp.mul(a, x);
            for &b in h.members() {
                seen[grp.mul(ax, b).idx()] = true;
            }
        }
    }
    reps
}

/// Coset data: `U\G` representatives when `h` is `None`, else `U\G/H`.
pub fn coset_data(universe: &Subgroup, u: &Subgroup, h: Option<&Subgroup>) -> Vec<Elem> {
    match h {
        None => right_cosets(universe, u).reps,
        Some(h) => double_cosets(universe, u, h),
    }
}

/// `K ∩ g H g⁻¹`.
pub fn conjugate_intersect(k: &Subgroup, h: &Subgroup, g: Elem) -> Subgroup {
    k.intersect(&h.conjugate(g))
}

pub fn center(universe: &Subgroup) -> Subgroup {
    let grp = universe.group();
    let gens = universe.generators();
    let mask: Vec<bool> = (0..grp.order())
        .map(|i| {
            let z = Elem(i as u32);
            universe.contains(z) && gens.iter().all(|&g| grp.mul(z, g) == grp.mul(g, z))
        })
        .collect();
    Subgroup::from_mask(grp, &mask)
}

/// One Sylow `p`-subgroup, grown greedily: a `p`-subgroup that is not Sylow always
/// admits some element extending it to a larger `p`-subgroup.
pub fn sylow(universe: &Subgroup, p: usize) -> Subgroup {
    let grp = universe.group();
    let mut target = 1;
    let mut n = universe.order();
    while n.is_multiple_of(p) {
        n /= p;
        target *= p;
    }
    let mut cur = Subgroup::trivial(grp);
    while cur.order() < target {
        let next = universe
            .members()
            .iter()
            .filter(|&&g| !cur.contains(g) && is_power_of(grp.elem_order(g), p))
            .map(|&g| {
                let mut gens = cur.generators().to_vec();
                gens.push(g);
                Subgroup::generate(grp, &gens)
            })
            .find(|s| s.is_p_group(p))
            .expect("non-Sylow p-subgroups extend");
        cur = next;
    }
    cur
}

/// All subgroups of `universe`, built bottom-up by cyclic extension and sorted by
/// `(order, members)`.
pub fn all_subgroups(universe: &Subgroup) -> Result<Vec<Subgroup>> {
    if universe.order() > SUBGROUP_ENUMERATION_CAP {
        return Err(Error::CapExceeded { order: universe.order(), cap: SUBGROUP_ENUMERATION_CAP });
    }
    let grp = universe.group();
    let start = Subgroup::trivial(grp);
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([start.members().to_vec()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for &g in universe.members() {
            if s.contains(g) {
                continue;
            }
            let mut gens = s.generators().to_vec();
            gens.push(g);
            let t = Subgroup::generate(grp, &gens);
            if seen.insert(t.members().to_vec()) {
                out.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct GroupInvariants {
    pub center: Subgroup,
    pub sylow_p: Subgroup,
    pub is_p_group: bool,
    pub all_subgroups: Vec<Subgroup>,
}

pub fn group_invariants(universe: &Subgroup, p: usize) -> Result<GroupInvariants> {
    Ok(GroupInvariants {
        center: center(universe),
        sylow_p: sylow(universe, p),
        is_p_group: universe.is_p_group(p),
        all_subgroups: all_subgroups(universe)?,
    })
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;

    #[test]
    fn c2_from_table() {
        let g = FinGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), Elem(0));
    }

    #[test]
    fn klein_exponent() {
        let g = catalog::klein_four();
        assert_eq!(g.order(), 4);
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn row_repetition_rejected() {
        let err = FinGroup::from_table(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotLatin(_)));
    }

    #[test]
    fn nonassociative_latin_square_rejected() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FinGroup::from_table(t), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn missing_identity_rejected() {
        let t = vec![vec![1, 0], vec![0, 1]];
        // Column/row Latin but row 0 is not the identity row; element 1 is the identity.
        assert!(FinGroup::from_table(t).is_ok());
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        assert!(FinGroup::from_table(t).is_ok());
        let t = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        assert!(matches!(FinGroup::from_table(t), Err(Error::NoIdentity)));
    }

    #[test]
    fn generate_in_s3() {
        let g = catalog::s3();
        let r = g.find_label("(123)").unwrap();
        let t = g.find_label("(12)").unwrap();
        assert!(Subgroup::generate(&g, &[]).is_trivial());
        assert_eq!(Subgroup::generate(&g, &[r]).order(), 3);
        assert_eq!(Subgroup::generate(&g, &[t, r]).order(), 6);
    }

    #[test]
    fn coset_examples() {
        let g = catalog::s3();
        let whole = Subgroup::whole(&g);
        assert_eq!(coset_data(&whole, &whole, None), vec![g.identity()]);
        let c3 = Subgroup::generate(&g, &[g.find_label("(123)").unwrap()]);
        assert_eq!(coset_data(&whole, &c3, Some(&c3)).len(), 2);
        let c2 = Subgroup::generate(&g, &[g.find_label("(12)").unwrap()]);
        assert_eq!(coset_data(&whole, &c2, None).len(), 3);
    }

    #[test]
    fn conjugate_intersect_s3() {
        let g = catalog::s3();
        let k = Subgroup::generate(&g, &[g.find_label("(12)").unwrap()]);
        let r = g.find_label("(123)").unwrap();
        assert!(conjugate_intersect(&k, &k, r).is_trivial());
        assert_eq!(conjugate_intersect(&k, &k, g.identity()), k);
        let c3 = Subgroup::generate(&g, &[r]);
        for x in g.elements() {
            assert_eq!(conjugate_intersect(&k, &c3, x), k.intersect(&c3));
        }
    }

    #[test]
    fn invariants_c4() {
        let g = catalog::cyclic(4);
        let inv = group_invariants(&Subgroup::whole(&g), 2).unwrap();
        assert_eq!(inv.center.order(), 4);
        assert!(inv.is_p_group);
        let orders: Vec<_> = inv.all_subgroups.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn invariants_s3() {
        let g = catalog::s3();
        let inv = group_invariants(&Subgroup::whole(&g), 3).unwrap();
        assert!(inv.center.is_trivial());
        assert_eq!(inv.sylow_p.order(), 3);
        assert!(!inv.is_p_group);
        assert_eq!(inv.all_subgroups.len(), 6);
    }

    #[test]
    fn subgroup_counts_of_catalog() {
        // Known subgroup counts: D4 10, Q8 6, A4 10, C2xC2 5, C9 3.
        for (g, n) in [
            (catalog::dihedral(4), 10),
            (catalog::quaternion(), 6),
            (catalog::a4(), 10),
            (catalog::klein_four(), 5),
            (catalog::cyclic(9), 3),
        ] {
            assert_eq!(all_subgroups(&Subgroup::whole(&g)).unwrap().len(), n);
        }
    }

    #[test]
    fn sylow_subgroups_of_a4() {
        let g = catalog::a4();
        let w = Subgroup::whole(&g);
        assert_eq!(sylow(&w, 2).order(), 4);
        assert_eq!(sylow(&w, 3).order(), 3);
        assert!(sylow(&w, 2).is_normal_in(&w));
    }

    #[test]
    fn enumeration_cap() {
        let g = catalog::cyclic(200);
        assert!(matches!(all_subgroups(&Subgroup::whole(&g)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn from_members_validates_closure() {
        let g = catalog::cyclic(4);
        assert!(Subgroup::from_members(&g, &[Elem(0), Elem(2)]).is_ok());
        assert!(Subgroup::from_members(&g, &[Elem(0), Elem(1)]).is_err());
    }

    #[test]
    fn json_roundtrip_preserves_table() {
        let g = catalog::quaternion();
        let back = FinGroup::from_json(&g.to_json()).unwrap();
        assert_eq!(*back, *g);
    }
}
