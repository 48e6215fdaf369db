//! Subgroup lattice enumeration and the lattice-based predicates built on
//! it: normality, minimal normality and essentiality.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arith::{is_prime, prime_of_power};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::subgroup::{is_normal_with_generators, Closure, Subgroup};

/// Deduplicated subgroups of one parent, sorted by (order, bit pattern).
#[derive(Clone, Debug)]
pub struct SubgroupList<'g> {
    parent: &'g GroupTable,
    subgroups: Vec<Subgroup>,
    generators: Vec<Vec<usize>>,
}

impl<'g> SubgroupList<'g> {
    fn from_parts(parent: &'g GroupTable, mut items: Vec<(Subgroup, Vec<usize>)>) -> Self {
        items.sort_by(|a, b| a.0.cmp(&b.0));
        items.dedup_by(|a, b| a.0 == b.0);
        let (subgroups, generators) = items.into_iter().unzip();
        SubgroupList {
            parent,
            subgroups,
            generators,
        }
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn as_slice(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.subgroups.iter()
    }

    pub fn contains(&self, s: &Subgroup) -> bool {
        self.subgroups.binary_search(s).is_ok()
    }

    pub fn into_vec(self) -> Vec<Subgroup> {
        self.subgroups
    }

    fn filtered(&self, keep: impl Fn(&Subgroup, &[usize]) -> bool + Sync) -> SubgroupList<'g> {
        let items = self
            .subgroups
            .par_iter()
            .zip(self.generators.par_iter())
            .filter(|(s, gens)| keep(s, gens))
            .map(|(s, gens)| (s.clone(), gens.clone()))
            .collect();
        SubgroupList::from_parts(self.parent, items)
    }

    pub fn normal_subgroups(&self) -> SubgroupList<'g> {
        let g = self.parent;
        self.filtered(|s, gens| is_normal_with_generators(g, s, gens))
    }

    /// Nontrivial normal subgroups containing no smaller nontrivial normal
    /// subgroup.
    pub fn minimal_normals(&self) -> SubgroupList<'g> {
        let normals = self.normal_subgroups();
        let mut minimal: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        // ascending order: any smaller normal subgroup inside N contains a
        // minimal normal subgroup that has already been collected
        for (n, gens) in normals.subgroups.iter().zip(&normals.generators) {
            if n.is_trivial() {
                continue;
            }
            if minimal.iter().all(|(m, _)| !m.is_subgroup_of(n)) {
                minimal.push((n.clone(), gens.clone()));
            }
        }
        SubgroupList::from_parts(self.parent, minimal)
    }

    /// Definitional essentiality: `e` is proper, nontrivial, and meets every
    /// nontrivial subgroup of the parent in more than the identity.
    pub fn is_essential(&self, e: &Subgroup) -> bool {
        e.is_proper_nontrivial()
            && self
                .subgroups
                .iter()
                .filter(|h| !h.is_trivial())
                .all(|h| e.meets_nontrivially(h))
    }

    pub fn proper_essentials(&self) -> SubgroupList<'g> {
        self.filtered(|s, _| self.is_essential(s))
    }
}

/// Every subgroup of `g`, with the default enumeration cap.
pub fn all_subgroups(g: &GroupTable) -> Result<SubgroupList<'_>> {
    all_subgroups_capped(g, Limits::default().lattice_cap)
}

/// Every subgroup of `g`.
///
/// Starts from the cyclic subgroups and closes under joins with cyclic
/// subgroups of prime-power order. A subgroup `S` is only extended by
/// elements `x` outside `S` with `x^p` inside `S`; every strictly larger
/// subgroup contains such an element, so each subgroup is still reached
/// from the trivial one by a chain of these joins. When a join has prime
/// index over `S`, the other elements it contains give the same join and are
/// skipped.
pub fn all_subgroups_capped(g: &GroupTable, cap: usize) -> Result<SubgroupList<'_>> {
    let n = g.order();
    if n > cap {
        return Err(Error::LatticeCap { order: n, cap });
    }

    // one prime-power generator per cyclic subgroup, with its prime
    let mut cyclic: HashMap<ElementSet, (usize, usize)> = HashMap::new();
    for x in 1..n {
        let Some(p) = prime_of_power(g.element_order(x)) else {
            continue;
        };
        let c = Closure::with_generators(g, &[x]);
        cyclic.entry(c.set).or_insert((x, p));
    }
    let mut steps: Vec<(usize, usize)> = cyclic.values().copied().collect();
    steps.sort_unstable();

    let mut known: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut frontier: Vec<Closure> = vec![Closure::trivial(n)];
    frontier.extend(
        steps
            .iter()
            .map(|&(x, _)| Closure::with_generators(g, &[x])),
    );
    for c in &frontier {
        known.insert(c.set.clone(), c.gens.clone());
    }

    while !frontier.is_empty() {
        let found: Vec<Closure> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                // a join of prime index over s contains no other subgroup
                // strictly above s, so its elements need no join of their own
                let mut covered = s.set.clone();
                let mut out = Vec::new();
                for &(x, p) in &steps {
                    if covered.contains(x) || !s.set.contains(g.pow(x, p as u64)) {
                        continue;
                    }
                    let mut c = s.clone();
                    c.add_generator(g, x);
                    if is_prime(c.elements.len() / s.elements.len()) {
                        covered.union_with(&c.set);
                    }
                    out.push(c);
                }
                out
            })
            .collect();
        frontier = Vec::new();
        for c in found {
            if !known.contains_key(&c.set) {
                known.insert(c.set.clone(), c.gens.clone());
                frontier.push(c);
            }
        }
    }

    let items = known
        .into_iter()
        .map(|(set, gens)| (Subgroup::from_set(set), gens))
        .collect();
    Ok(SubgroupList::from_parts(g, items))
}

pub fn minimal_normal_subgroups(g: &GroupTable) -> Result<SubgroupList<'_>> {
    Ok(all_subgroups(g)?.minimal_normals())
}

/// Checks `e` against every nontrivial subgroup of `g`.
pub fn is_essential_definitional(g: &GroupTable, e: &Subgroup) -> Result<bool> {
    if !e.is_proper_nontrivial() {
        return Ok(false);
    }
    Ok(all_subgroups(g)?.is_essential(e))
}

/// `e` is proper essential iff it is proper, nontrivial and contains every
/// element of prime order: a subgroup of prime order meets `e` nontrivially
/// only by lying inside it, and every nontrivial subgroup has one.
pub fn is_essential_fast(g: &GroupTable, e: &Subgroup) -> bool {
    e.is_proper_nontrivial()
        && (1..g.order()).all(|x| !is_prime(g.element_order(x)) || e.contains(x))
}

pub fn proper_essential_subgroups(g: &GroupTable) -> Result<SubgroupList<'_>> {
    Ok(all_subgroups(g)?.proper_essentials())
}
