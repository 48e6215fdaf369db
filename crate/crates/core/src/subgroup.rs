//! Subgroups as bit vectors keyed to the parent's element indices.

use std::cmp::Ordering;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A subset of a parent group closed under product and inverse.
///
/// Equality is equality of member sets. Ordering is by order first, then by
/// bit pattern (lowest differing index wins).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    members: ElementSet,
}

impl Subgroup {
    pub(crate) fn from_set(members: ElementSet) -> Self {
        debug_assert!(members.contains(0));
        Subgroup { members }
    }

    pub fn trivial_of(parent_order: usize) -> Self {
        Subgroup::from_set(ElementSet::from_indices(parent_order, [0]))
    }

    pub fn whole_of(parent_order: usize) -> Self {
        Subgroup::from_set(ElementSet::full(parent_order))
    }

    /// Checks that `indices` form a subgroup of `g`.
    pub fn from_indices(g: &GroupTable, indices: &[usize]) -> Result<Self> {
        let n = g.order();
        if let Some(&x) = indices.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidParameter(format!("element {x} out of range")));
        }
        let set = ElementSet::from_indices(n, indices.iter().copied());
        if !set.contains(0) {
            return Err(Error::InvalidParameter(
                "subset does not contain the identity".into(),
            ));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(g.mul(a, b)) {
                    return Err(Error::InvalidParameter(format!(
                        "subset is not closed: {a} * {b} = {}",
                        g.mul(a, b)
                    )));
                }
            }
        }
        Ok(Subgroup::from_set(set))
    }

    pub fn parent_order(&self) -> usize {
        self.members.width()
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    /// Ascending member indices; the serialized form of a subgroup.
    pub fn to_indices(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order()
    }

    pub fn is_proper_nontrivial(&self) -> bool {
        !self.is_trivial() && !self.is_whole()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// True when the two subgroups share a non-identity element.
    pub fn meets_nontrivially(&self, other: &Subgroup) -> bool {
        self.members.meets_beyond_identity(&other.members)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp_pattern(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Incremental subgroup closure: a subgroup with a generating set that
/// grows one generator at a time, adding whole right cosets of the current
/// subgroup.
#[derive(Clone, Debug)]
pub(crate) struct Closure {
    pub set: ElementSet,
    pub elements: Vec<usize>,
    pub gens: Vec<usize>,
}

impl Closure {
    pub fn trivial(n: usize) -> Self {
        Closure {
            set: ElementSet::from_indices(n, [0]),
            elements: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn with_generators(g: &GroupTable, gens: &[usize]) -> Self {
        let mut c = Closure::trivial(g.order());
        for &x in gens {
            c.add_generator(g, x);
        }
        c
    }

    /// Replaces the subgroup `H` by `<H, x>`. Returns false if `x` was
    /// already a member.
    pub fn add_generator(&mut self, g: &GroupTable, x: usize) -> bool {
        if self.set.contains(x) {
            return false;
        }
        let base = self.elements.clone();
        self.gens.push(x);
        let mut reps = vec![0];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for gi in 0..self.gens.len() {
                let e = g.mul(r, self.gens[gi]);
                if !self.set.contains(e) {
                    reps.push(e);
                    for &h in &base {
                        let y = g.mul(h, e);
                        self.set.insert(y);
                        self.elements.push(y);
                    }
                }
            }
            i += 1;
        }
        true
    }

    pub fn into_subgroup(self) -> Subgroup {
        Subgroup::from_set(self.set)
    }
}

/// The smallest subgroup of `g` containing every element of `seed`.
pub fn generated_subgroup(g: &GroupTable, seed: &[usize]) -> Subgroup {
    Closure::with_generators(g, seed).into_subgroup()
}

/// A generating set for `s`, chosen greedily by ascending element index.
pub fn generators(g: &GroupTable, s: &Subgroup) -> Vec<usize> {
    let mut c = Closure::trivial(g.order());
    for x in s.iter() {
        if c.elements.len() == s.order() {
            break;
        }
        c.add_generator(g, x);
    }
    c.gens
}

fn same_parent(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if a.parent_order() != b.parent_order() {
        return Err(Error::ParentMismatch {
            left: a.parent_order(),
            right: b.parent_order(),
        });
    }
    Ok(())
}

pub fn meet(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    same_parent(a, b)?;
    Ok(Subgroup::from_set(a.members.intersection(&b.members)))
}

pub fn join(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    same_parent(a, b)?;
    let mut c = Closure::with_generators(g, &generators(g, a));
    for x in generators(g, b) {
        c.add_generator(g, x);
    }
    Ok(c.into_subgroup())
}

/// Whether `g s g^-1` stays in `s` for every `g` in the group.
///
/// Conjugating a generating set of `s` is enough: conjugation is an
/// automorphism, so the image of `s` is generated by the images of its
/// generators.
pub fn is_normal(g: &GroupTable, s: &Subgroup) -> bool {
    is_normal_with_generators(g, s, &generators(g, s))
}

pub(crate) fn is_normal_with_generators(g: &GroupTable, s: &Subgroup, gens: &[usize]) -> bool {
    if s.is_whole() {
        return true;
    }
    (0..g.order()).all(|x| gens.iter().all(|&y| s.contains(g.conjugate(x, y))))
}

pub fn is_abelian_subgroup(g: &GroupTable, s: &Subgroup) -> bool {
    let gens = generators(g, s);
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}
