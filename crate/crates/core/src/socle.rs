//! Socle, prime socle and the intersection of the proper essential
//! subgroups, each by exhaustive search and by a structural shortcut.

use serde::Serialize;

use crate::arith::is_prime;
use crate::dedekind::{decompose_hamiltonian, HamiltonianDecomposition};
use crate::error::Result;
use crate::group::GroupTable;
use crate::invariants::{subgroup_invariants, AbelianInvariants};
use crate::lattice::{all_subgroups, SubgroupList};
use crate::subgroup::{generated_subgroup, generators, meet, Closure, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocleMethod {
    Brute,
    HamiltonianFast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    pub socle: Subgroup,
    pub minimal_normals: Vec<Subgroup>,
    pub method: SocleMethod,
    /// Present only when the socle is abelian.
    pub invariants: Option<AbelianInvariants>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReportJson {
    pub socle: Vec<usize>,
    pub order: usize,
    pub method: SocleMethod,
    pub invariants: Option<AbelianInvariants>,
    pub minimal_normals: Vec<Vec<usize>>,
}

impl SocleReport {
    pub fn to_json(&self) -> SocleReportJson {
        SocleReportJson {
            socle: self.socle.to_indices(),
            order: self.socle.order(),
            method: self.method,
            invariants: self.invariants.clone(),
            minimal_normals: self
                .minimal_normals
                .iter()
                .map(Subgroup::to_indices)
                .collect(),
        }
    }
}

fn prime_order_elements<'a>(
    g: &'a GroupTable,
    within: &'a Subgroup,
) -> impl Iterator<Item = usize> + 'a {
    within.iter().filter(move |&x| is_prime(g.element_order(x)))
}

/// Subgroup generated by the elements of prime order.
pub fn prime_socle(g: &GroupTable) -> Subgroup {
    prime_socle_within(g, &g.whole())
}

/// Subgroup generated by the prime-order elements of `s`.
pub fn prime_socle_within(g: &GroupTable, s: &Subgroup) -> Subgroup {
    let seed: Vec<usize> = prime_order_elements(g, s).collect();
    generated_subgroup(g, &seed)
}

fn join_all<'a>(g: &GroupTable, parts: impl IntoIterator<Item = &'a Subgroup>) -> Subgroup {
    let mut c = Closure::trivial(g.order());
    for s in parts {
        for x in generators(g, s) {
            c.add_generator(g, x);
        }
    }
    c.into_subgroup()
}

pub fn socle_bruteforce(g: &GroupTable) -> Result<SocleReport> {
    Ok(socle_from_lattice(&all_subgroups(g)?))
}

/// Join of the minimal normal subgroups; trivial for the trivial group.
pub fn socle_from_lattice(lattice: &SubgroupList<'_>) -> SocleReport {
    let g = lattice.parent();
    let minimal_normals = lattice.minimal_normals().into_vec();
    let socle = join_all(g, &minimal_normals);
    let invariants = subgroup_invariants(g, &socle).ok();
    SocleReport {
        socle,
        minimal_normals,
        method: SocleMethod::Brute,
        invariants,
    }
}

pub fn delta_definitional(g: &GroupTable) -> Result<Subgroup> {
    Ok(delta_from_lattice(&all_subgroups(g)?))
}

/// Intersection of all proper essential subgroups, or the whole group when
/// there are none.
pub fn delta_from_lattice(lattice: &SubgroupList<'_>) -> Subgroup {
    let g = lattice.parent();
    lattice
        .proper_essentials()
        .iter()
        .fold(g.whole(), |acc, e| meet(&acc, e).expect("same parent"))
}

/// `P(G)` when that is a proper subgroup (it is then itself the smallest
/// proper essential subgroup), otherwise `G`.
pub fn delta_fast(g: &GroupTable) -> Subgroup {
    let p = prime_socle(g);
    if p.is_whole() {
        g.whole()
    } else {
        p
    }
}

pub fn socle_hamiltonian_fast(g: &GroupTable) -> Result<SocleReport> {
    let dec = decompose_hamiltonian(g)?;
    Ok(socle_from_decomposition(g, &dec))
}

/// The socle of `Q ⊕ B ⊕ D`: the involution of `Q`, all of `B`, and the
/// prime socle of `D`.
///
/// Minimal normal subgroups of a Dedekind group are exactly its subgroups of
/// prime order, so they are listed directly.
pub fn socle_from_decomposition(g: &GroupTable, dec: &HamiltonianDecomposition) -> SocleReport {
    let z = dec.central_involution(g);
    let pd = prime_socle_within(g, &dec.d);
    let mut seed = vec![z];
    seed.extend(dec.b.iter().filter(|&x| x != 0));
    seed.extend(prime_order_elements(g, &pd));
    let socle = generated_subgroup(g, &seed);

    let mut minimal_normals: Vec<Subgroup> = prime_order_elements(g, &socle)
        .map(|x| generated_subgroup(g, &[x]))
        .collect();
    minimal_normals.sort();
    minimal_normals.dedup();

    let b_invariants = AbelianInvariants::from_divisors(vec![2; dec.b_rank() as usize]);
    let pd_invariants = subgroup_invariants(g, &pd).expect("D part is abelian");
    let invariants = AbelianInvariants::from_divisors(vec![2])
        .sum(&b_invariants)
        .sum(&pd_invariants);

    SocleReport {
        socle,
        minimal_normals,
        method: SocleMethod::HamiltonianFast,
        invariants: Some(invariants),
    }
}
