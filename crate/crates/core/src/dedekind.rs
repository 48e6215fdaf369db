//! Recognition of Dedekind and Hamiltonian groups, and the splitting of a
//! Hamiltonian group into a quaternion factor, an elementary abelian
//! 2-group and an abelian group of odd order.

use serde::Serialize;

use crate::arith::{factorize, is_prime, prime_of_power};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::invariants::{subgroup_invariants, AbelianInvariants};
use crate::subgroup::{generated_subgroup, join, meet, Closure, Subgroup};

/// Every cyclic subgroup is normal.
///
/// This is equivalent to every subgroup being normal: a subgroup is the
/// join of its cyclic subgroups, and conjugation maps each of those into
/// itself.
pub fn is_dedekind(g: &GroupTable) -> bool {
    (1..g.order()).all(|x| {
        let cyclic = generated_subgroup(g, &[x]);
        (0..g.order()).all(|h| cyclic.contains(g.conjugate(h, x)))
    })
}

pub fn is_hamiltonian(g: &GroupTable) -> bool {
    !g.is_abelian() && is_dedekind(g)
}

/// Order 8, non-abelian, exactly one involution. Separates Q8 from D4.
pub fn recognize_q8(g: &GroupTable, s: &Subgroup) -> bool {
    if s.order() != 8 {
        return false;
    }
    let members = s.to_indices();
    let abelian = members
        .iter()
        .all(|&a| members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let involutions = members.iter().filter(|&&x| g.element_order(x) == 2).count();
    !abelian && involutions == 1
}

pub fn recognize_q8_group(g: &GroupTable) -> bool {
    recognize_q8(g, &g.whole())
}

/// Elements whose order is a power of `p`, when they form a subgroup.
pub fn primary_part(g: &GroupTable, p: usize) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let o = g.element_order(x);
            o == 1 || prime_of_power(o) == Some(p)
        })
        .collect();
    let subset = Subgroup::from_set(crate::bitset::ElementSet::from_indices(
        g.order(),
        members.iter().copied(),
    ));
    for &a in &members {
        for &b in &members {
            if !subset.contains(g.mul(a, b)) {
                return Err(Error::NotClosed {
                    prime: p as u64,
                    a,
                    b,
                });
            }
        }
    }
    Ok(subset)
}

/// Join of the odd primary parts, checked against the set of all elements
/// of odd order.
pub fn odd_part(g: &GroupTable) -> Result<Subgroup> {
    let mut odd = g.trivial();
    for (p, _) in factorize(g.order()) {
        if p != 2 {
            odd = join(g, &odd, &primary_part(g, p)?)?;
        }
    }
    let odd_elements: Vec<usize> = (0..g.order())
        .filter(|&x| g.element_order(x) % 2 == 1)
        .collect();
    if odd.to_indices() != odd_elements {
        return Err(Error::Decomposition(
            "join of odd primary parts differs from the set of odd-order elements".into(),
        ));
    }
    Ok(odd)
}

/// The subgroup generated by the first non-commuting pair `(x, y)` of `p2`,
/// taken in ascending index order.
///
/// In `Q8 ⊕ B` any two non-commuting elements have order 4, share their
/// square and invert each other under conjugation, so they generate a
/// quaternion subgroup.
pub fn find_q8(g: &GroupTable, p2: &Subgroup) -> Result<Subgroup> {
    let members = p2.to_indices();
    let pair = members.iter().enumerate().find_map(|(i, &x)| {
        members[i + 1..]
            .iter()
            .find(|&&y| g.mul(x, y) != g.mul(y, x))
            .map(|&y| (x, y))
    });
    let (x, y) = pair.ok_or(Error::NoNonCommutingPair)?;
    let q = generated_subgroup(g, &[x, y]);
    if !recognize_q8(g, &q) {
        return Err(Error::Decomposition(format!(
            "<{}, {}> is not a quaternion group",
            g.label(x),
            g.label(y)
        )));
    }
    Ok(q)
}

fn is_elementary_abelian_2(g: &GroupTable, s: &Subgroup) -> bool {
    s.iter().all(|x| g.mul(x, x) == 0)
}

/// A complement to `<z>` inside an elementary abelian 2-group, found by
/// extending `{z}` to a basis over GF(2) in ascending index order.
pub fn complement_in_elementary_abelian(
    g: &GroupTable,
    omega: &Subgroup,
    z: usize,
) -> Result<Subgroup> {
    // x^2 = 1 for all x forces commutativity
    if !is_elementary_abelian_2(g, omega) {
        return Err(Error::NotElementaryAbelian);
    }
    if z == 0 || !omega.contains(z) {
        return Err(Error::NotInSubgroup(z));
    }
    let mut span = Closure::with_generators(g, &[z]);
    let mut added = Vec::new();
    for x in omega.iter() {
        if span.add_generator(g, x) {
            added.push(x);
        }
    }
    Ok(generated_subgroup(g, &added))
}

/// `G = Q ⊕ B ⊕ D` as internal subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianDecomposition {
    pub q8: Subgroup,
    pub b: Subgroup,
    pub d: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionJson {
    pub q8: Vec<usize>,
    pub b: Vec<usize>,
    pub b_rank: u32,
    pub d: Vec<usize>,
    pub d_invariants: AbelianInvariants,
}

impl HamiltonianDecomposition {
    pub fn b_rank(&self) -> u32 {
        self.b.order().trailing_zeros()
    }

    /// The unique involution of the quaternion factor.
    pub fn central_involution(&self, g: &GroupTable) -> usize {
        self.q8
            .iter()
            .find(|&x| g.element_order(x) == 2)
            .expect("verified quaternion factor has an involution")
    }

    pub fn d_invariants(&self, g: &GroupTable) -> AbelianInvariants {
        subgroup_invariants(g, &self.d).expect("verified D part is abelian")
    }

    pub fn to_json(&self, g: &GroupTable) -> DecompositionJson {
        DecompositionJson {
            q8: self.q8.to_indices(),
            b: self.b.to_indices(),
            b_rank: self.b_rank(),
            d: self.d.to_indices(),
            d_invariants: self.d_invariants(g),
        }
    }
}

pub fn decompose_hamiltonian(g: &GroupTable) -> Result<HamiltonianDecomposition> {
    if !is_hamiltonian(g) {
        return Err(Error::NotHamiltonian);
    }
    let d = odd_part(g)?;
    let p2 = primary_part(g, 2)?;
    let q8 = find_q8(g, &p2)?;
    let omega = Subgroup::from_set(crate::bitset::ElementSet::from_indices(
        g.order(),
        p2.iter().filter(|&x| g.mul(x, x) == 0),
    ));
    let z = q8
        .iter()
        .find(|&x| g.element_order(x) == 2)
        .ok_or_else(|| Error::Decomposition("quaternion factor has no involution".into()))?;
    let b = complement_in_elementary_abelian(g, &omega, z)?;
    let dec = HamiltonianDecomposition { q8, b, d };
    verify_decomposition(g, &dec)?;
    Ok(dec)
}

/// Checks the part types and the internal direct sum witness.
pub fn verify_decomposition(g: &GroupTable, dec: &HamiltonianDecomposition) -> Result<()> {
    let fail = |what: &str| Err(Error::Decomposition(what.to_string()));
    let parts = [&dec.q8, &dec.b, &dec.d];
    if parts.iter().any(|s| s.parent_order() != g.order()) {
        return fail("parts belong to a different parent");
    }
    if !recognize_q8(g, &dec.q8) {
        return fail("q8 part is not a quaternion group");
    }
    if !is_elementary_abelian_2(g, &dec.b) {
        return fail("b part is not elementary abelian of exponent 2");
    }
    if dec.d.iter().any(|x| g.element_order(x).is_multiple_of(2)) {
        return fail("d part has an element of even order");
    }
    if subgroup_invariants(g, &dec.d).is_err() {
        return fail("d part is not abelian");
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let commute = a
                .iter()
                .all(|x| b.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
            if !commute {
                return fail("parts do not commute elementwise");
            }
        }
    }
    for i in 0..3 {
        let others = join(g, parts[(i + 1) % 3], parts[(i + 2) % 3])?;
        if !meet(parts[i], &others)?.is_trivial() {
            return fail("a part meets the join of the other two nontrivially");
        }
    }
    if parts.iter().map(|s| s.order()).product::<usize>() != g.order() {
        return fail("part orders do not multiply to the group order");
    }
    Ok(())
}
