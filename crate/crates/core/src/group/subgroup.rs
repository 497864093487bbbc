use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup as a membership bitmask, with normality recorded at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: FixedBitSet,
    normal: bool,
}

impl SubgroupSet {
    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn index_in(&self, g: &FiniteGroup) -> usize {
        g.order() / self.order()
    }
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupSet{:?}", self.elements())
    }
}

impl FiniteGroup {
    fn wrap(&self, members: FixedBitSet) -> SubgroupSet {
        let normal = members
            .ones()
            .all(|h| (0..self.order()).all(|g| members.contains(self.conjugate(h, g))));
        SubgroupSet { members, normal }
    }

    /// Validates that `elems` form a subgroup.
    pub fn subgroup(&self, elems: &[usize]) -> Result<SubgroupSet> {
        let mut members = FixedBitSet::with_capacity(self.order());
        for &e in elems {
            if e >= self.order() {
                return Err(Error::NotASubgroup);
            }
            members.insert(e);
        }
        if !members.contains(0) {
            return Err(Error::NotASubgroup);
        }
        for a in members.ones() {
            for b in members.ones() {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(self.wrap(members))
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> SubgroupSet {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members.put(y) {
                    frontier.push(y);
                }
            }
        }
        self.wrap(members)
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet {
        self.generate(&[])
    }

    pub fn whole(&self) -> SubgroupSet {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        SubgroupSet { members, normal: true }
    }

    pub fn center(&self) -> SubgroupSet {
        self.centralizer(&(0..self.order()).collect::<Vec<_>>())
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer(&self, s: &[usize]) -> SubgroupSet {
        let mut members = FixedBitSet::with_capacity(self.order());
        for g in 0..self.order() {
            if s.iter().all(|&x| self.mul(g, x) == self.mul(x, g)) {
                members.insert(g);
            }
        }
        self.wrap(members)
    }

    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut classes = Vec::new();
        for a in 0..self.order() {
            if seen.contains(a) {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order()).map(|g| self.conjugate(a, g)).collect();
            for &c in &class {
                seen.insert(c);
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// `[A, B]`, generated by all `[a, b]`.
    pub fn commutator_subgroup(&self, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
        let comms: BTreeSet<usize> =
            a.members.ones().flat_map(|x| b.members.ones().map(move |y| (x, y))).map(|(x, y)| self.commutator(x, y)).collect();
        self.generate(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn derived_subgroup(&self) -> SubgroupSet {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    /// `γ₁ = G, γᵢ₊₁ = [γᵢ, G]` up to and including the first repeated term.
    pub fn lower_central_series(&self) -> Vec<SubgroupSet> {
        let g = self.whole();
        let mut series = vec![g.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &g);
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// `Z₀ = 1, Zᵢ/Zᵢ₋₁ = Z(G/Zᵢ₋₁)` until it stabilizes.
    pub fn upper_central_series(&self) -> Vec<SubgroupSet> {
        let mut series = vec![self.trivial_subgroup()];
        loop {
            let prev = series.last().unwrap();
            let mut members = FixedBitSet::with_capacity(self.order());
            for a in 0..self.order() {
                if (0..self.order()).all(|x| prev.contains(self.commutator(a, x))) {
                    members.insert(a);
                }
            }
            let next = self.wrap(members);
            if &next == prev {
                return series;
            }
            series.push(next);
        }
    }

    /// Least `m` with `Z_m = G`; `None` if the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let upper = self.upper_central_series();
        (upper.last().unwrap().order() == self.order()).then(|| upper.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn derived_series(&self) -> Vec<SubgroupSet> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    /// Least `n` with `G⁽ⁿ⁾ = 1`, if solvable.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().unwrap().is_trivial().then(|| s.len() - 1)
    }

    /// `G/N` with cosets numbered by their least element, and the projection.
    pub fn quotient(&self, n: &SubgroupSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let mut proj = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if proj[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for h in n.members.ones() {
                proj[self.mul(g, h)] = idx;
            }
        }
        let k = reps.len();
        let table = reps.iter().flat_map(|&a| reps.iter().map(move |&b| (a, b))).map(|(a, b)| proj[self.mul(a, b)]).collect();
        let q = FiniteGroup::from_flat(k, table, format!("{}/N", self.label()))?;
        Ok((q, proj))
    }

    /// Greedy generating set: elements in index order that enlarge the span.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for g in 1..self.order() {
            if !span.contains(g) {
                gens.push(g);
                span = self.generate(&gens);
            }
        }
        gens
    }

    /// Every subgroup, ordered by size and then membership.
    pub fn all_subgroups(&self) -> Vec<SubgroupSet> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut layer: Vec<SubgroupSet> = Vec::new();
        for g in 0..self.order() {
            let s = self.generate(&[g]);
            if found.insert(s.elements()) {
                layer.push(s);
            }
        }
        let cyclic = layer.clone();
        let mut all = layer.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for s in &layer {
                for c in &cyclic {
                    if c.is_subset_of(s) {
                        continue;
                    }
                    let mut gens = s.elements();
                    gens.extend(c.elements());
                    let j = self.generate(&gens);
                    if found.insert(j.elements()) {
                        next.push(j);
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by_key(|s| (s.order(), s.elements()));
        all
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupSet> {
        self.all_subgroups().into_iter().filter(SubgroupSet::is_normal).collect()
    }

    /// Subgroups of index at most 2.
    pub fn small_index_subgroups(&self) -> Vec<SubgroupSet> {
        self.all_subgroups().into_iter().filter(|s| s.index_in(self) <= 2).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        assert!(g.center().is_trivial());
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 3);
        assert!(d.is_normal());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(g.nilpotency_class(), None);
        assert_eq!(g.upper_central_series().len(), 1);
        assert_eq!(g.derived_length(), Some(2));
        assert!(g.is_p_abelian(3));
        assert!(!g.is_p_abelian(2));
    }

    #[test]
    fn quaternion_series() {
        let q = FiniteGroup::quaternion8();
        let upper = q.upper_central_series();
        let sizes: Vec<usize> = upper.iter().map(SubgroupSet::order).collect();
        assert_eq!(sizes, vec![1, 2, 8]);
        assert_eq!(q.nilpotency_class(), Some(2));
        let lower: Vec<usize> = q.lower_central_series().iter().map(SubgroupSet::order).collect();
        assert_eq!(lower, vec![8, 2, 1]);
    }

    #[test]
    fn dihedral_center() {
        assert_eq!(FiniteGroup::dihedral(4).unwrap().center().order(), 2);
        assert_eq!(FiniteGroup::dihedral(5).unwrap().center().order(), 1);
    }

    #[test]
    fn abelian_class() {
        assert_eq!(FiniteGroup::cyclic(6).unwrap().nilpotency_class(), Some(1));
        assert_eq!(FiniteGroup::trivial().nilpotency_class(), Some(0));
        assert_eq!(FiniteGroup::heisenberg(3).unwrap().nilpotency_class(), Some(2));
    }

    #[test]
    fn quotient_s3_by_a3() {
        let g = s3();
        let (q, proj) = g.quotient(&g.derived_subgroup()).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_abelian());
        assert_eq!(proj[0], 0);
        let h = g.generate(&[1]);
        assert_eq!(h.order(), 2);
        assert!(matches!(g.quotient(&h), Err(Error::NotNormal)));
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        assert!(g.subgroup(&[0, 1]).is_ok());
        assert!(g.subgroup(&[0, 1, 2]).is_err());
        assert!(g.subgroup(&[1]).is_err());
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(s3().all_subgroups().len(), 6);
        assert_eq!(FiniteGroup::quaternion8().all_subgroups().len(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().all_subgroups().len(), 30);
        assert_eq!(FiniteGroup::abelian(&[2, 2]).unwrap().small_index_subgroups().len(), 4);
        assert_eq!(FiniteGroup::alternating(4).unwrap().small_index_subgroups().len(), 1);
    }

    #[test]
    fn generating_sets_generate() {
        for g in [s3(), FiniteGroup::quaternion8(), FiniteGroup::abelian(&[2, 2, 2]).unwrap()] {
            let gens = g.generating_set();
            assert_eq!(g.generate(&gens).order(), g.order());
        }
    }

    #[test]
    fn structural_invariants() {
        let groups = vec![
            s3(),
            FiniteGroup::quaternion8(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
            FiniteGroup::heisenberg(3).unwrap(),
            FiniteGroup::abelian(&[2, 4]).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ];
        for g in groups {
            let abelian = g.is_abelian();
            assert_eq!(g.derived_subgroup().is_trivial(), abelian);
            assert_eq!(g.center().order() == g.order(), abelian);
            let classes = g.conjugacy_classes();
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
            assert!(classes.iter().all(|c| g.order() % c.len() == 0));
            let lower = g.lower_central_series();
            let reaches_one = lower.last().unwrap().is_trivial();
            assert_eq!(reaches_one, g.nilpotency_class().is_some(), "{}", g.label());
            if reaches_one {
                assert_eq!(lower.len() - 1, g.nilpotency_class().unwrap());
            }
        }
    }
}
