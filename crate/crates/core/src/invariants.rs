//! Elementary divisors of finite abelian groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::Subgroup;

/// Ascending multiset of prime powers `p^k`; two finite abelian groups are
/// isomorphic iff these agree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianInvariants(Vec<usize>);

impl AbelianInvariants {
    pub fn from_divisors(mut divisors: Vec<usize>) -> Self {
        divisors.sort_unstable();
        AbelianInvariants(divisors)
    }

    pub fn divisors(&self) -> &[usize] {
        &self.0
    }

    /// Order of a group with these invariants.
    pub fn product(&self) -> usize {
        self.0.iter().product()
    }

    /// Invariants of the direct sum.
    pub fn sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        AbelianInvariants::from_divisors(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn abelian_invariants(g: &GroupTable) -> Result<AbelianInvariants> {
    subgroup_invariants(g, &g.whole())
}

/// Elementary divisors of an abelian subgroup, read off from how many
/// elements are killed by each power `p^k`.
pub fn subgroup_invariants(g: &GroupTable, s: &Subgroup) -> Result<AbelianInvariants> {
    let members = s.to_indices();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                return Err(Error::NotAbelian { a, b });
            }
        }
    }
    let orders: Vec<usize> = members.iter().map(|&x| g.element_order(x)).collect();

    let mut divisors = Vec::new();
    for (p, total) in factorize(members.len()) {
        // c[k] = log_p |{x : x^(p^k) = 1}|
        let mut c = vec![0u32];
        let mut pk = 1;
        while *c.last().unwrap() < total {
            pk *= p;
            let killed = orders.iter().filter(|&&o| pk % o == 0).count();
            c.push(log_exact(killed, p));
        }
        c.push(total);
        for k in 1..c.len() - 1 {
            let factors = (c[k] - c[k - 1]) - (c[k + 1] - c[k]);
            let size = p.pow(k as u32);
            divisors.extend(std::iter::repeat_n(size, factors as usize));
        }
    }
    Ok(AbelianInvariants::from_divisors(divisors))
}

fn log_exact(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        e += 1;
    }
    e
}

pub fn is_isomorphic_abelian(a: &GroupTable, b: &GroupTable) -> Result<bool> {
    Ok(abelian_invariants(a)? == abelian_invariants(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_sum, make_cyclic, make_elementary_abelian_2, make_quaternion};

    fn inv(g: &GroupTable) -> Vec<usize> {
        abelian_invariants(g).unwrap().divisors().to_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(inv(&make_cyclic(6).unwrap()), vec![2, 3]);
        let z2z4 = direct_sum(&make_cyclic(2).unwrap(), &make_cyclic(4).unwrap())
            .unwrap()
            .group;
        assert_eq!(inv(&z2z4), vec![2, 4]);
        assert_eq!(inv(&make_cyclic(1).unwrap()), Vec::<usize>::new());
        assert_eq!(inv(&make_elementary_abelian_2(3).unwrap()), vec![2, 2, 2]);
        assert_eq!(inv(&make_cyclic(360).unwrap()), vec![5, 8, 9]);
    }

    #[test]
    fn isomorphism_examples() {
        let z6 = make_cyclic(6).unwrap();
        let z2z3 = direct_sum(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap())
            .unwrap()
            .group;
        assert!(is_isomorphic_abelian(&z6, &z2z3).unwrap());
        let z4 = make_cyclic(4).unwrap();
        let v4 = make_elementary_abelian_2(2).unwrap();
        assert!(!is_isomorphic_abelian(&z4, &v4).unwrap());
        assert!(is_isomorphic_abelian(&z4, &z4).unwrap());
    }

    #[test]
    fn rejects_non_abelian() {
        assert!(matches!(
            abelian_invariants(&make_quaternion()),
            Err(Error::NotAbelian { .. })
        ));
    }

    #[test]
    fn subgroup_of_nonabelian_group() {
        let q = make_quaternion();
        let center = Subgroup::from_indices(&q, &[0, 1]).unwrap();
        assert_eq!(subgroup_invariants(&q, &center).unwrap().divisors(), &[2]);
    }
}
