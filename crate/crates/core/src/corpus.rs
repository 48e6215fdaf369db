//! The sweep corpus: one abelian group per isomorphism class, the
//! `Q8 x E2^a x D` family, and fixed non-Dedekind controls.

use crate::arith::factorize;
use crate::expr::{Atom, GroupExpr};
use crate::invariants::AbelianInvariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    Abelian,
    Hamiltonian,
    Control,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub expr: GroupExpr,
    pub kind: CorpusKind,
    /// Elementary divisors of the abelian group, or of the `D` factor for
    /// Hamiltonian entries.
    pub divisors: AbelianInvariants,
    /// Rank of the elementary abelian factor (Hamiltonian entries only).
    pub b_rank: usize,
}

impl CorpusEntry {
    pub fn name(&self) -> String {
        self.expr.to_string()
    }

    pub fn order(&self) -> usize {
        self.expr.order() as usize
    }
}

/// Partitions of `n` into non-increasing positive parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Elementary divisor multisets of every abelian group of order `n`.
pub fn abelian_classes(n: usize) -> Vec<AbelianInvariants> {
    let mut classes = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let options: Vec<Vec<usize>> = partitions(e)
            .into_iter()
            .map(|parts| parts.into_iter().map(|k| p.pow(k)).collect())
            .collect();
        classes = classes
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |opt| {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend(opt);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<AbelianInvariants> = classes
        .into_iter()
        .map(AbelianInvariants::from_divisors)
        .collect();
    out.sort();
    out
}

fn cyclic_atoms(divisors: &AbelianInvariants) -> Vec<Atom> {
    divisors
        .divisors()
        .iter()
        .map(|&d| Atom::Cyclic(d))
        .collect()
}

pub fn abelian_corpus(max_order: usize) -> Vec<CorpusEntry> {
    (1..=max_order)
        .flat_map(|n| abelian_classes(n).into_iter())
        .map(|divisors| {
            let mut atoms = cyclic_atoms(&divisors);
            if atoms.is_empty() {
                atoms.push(Atom::Cyclic(1));
            }
            CorpusEntry {
                expr: GroupExpr::from_atoms(&atoms).expect("nonempty"),
                kind: CorpusKind::Abelian,
                divisors,
                b_rank: 0,
            }
        })
        .collect()
}

/// `Q8 x E2^a x D` for every odd abelian `D` (one per class) with total
/// order at most `max_order`.
pub fn hamiltonian_corpus(max_order: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut a = 0;
    while 8usize << a <= max_order {
        let base = 8usize << a;
        for m in (1..=max_order / base).filter(|m| m % 2 == 1) {
            for divisors in abelian_classes(m) {
                let mut atoms = vec![Atom::Quaternion];
                if a > 0 {
                    atoms.push(Atom::ElemAbelian2(a));
                }
                atoms.extend(cyclic_atoms(&divisors));
                out.push(CorpusEntry {
                    expr: GroupExpr::from_atoms(&atoms).expect("nonempty"),
                    kind: CorpusKind::Hamiltonian,
                    divisors,
                    b_rank: a,
                });
            }
        }
        a += 1;
    }
    out.sort_by_key(|e| (e.order(), e.b_rank, e.divisors.clone()));
    out
}

/// S3, D4 and A4.
pub fn controls() -> Vec<CorpusEntry> {
    [Atom::Symmetric(3), Atom::Dihedral(4), Atom::Alternating(4)]
        .into_iter()
        .map(|a| CorpusEntry {
            expr: GroupExpr::Atom(a),
            kind: CorpusKind::Control,
            divisors: AbelianInvariants::default(),
            b_rank: 0,
        })
        .collect()
}

/// Abelian classes, then the Hamiltonian family, then the controls, all of
/// order at most `max_order`.
pub fn full_corpus(max_order: usize) -> Vec<CorpusEntry> {
    let mut out = abelian_corpus(max_order);
    out.extend(hamiltonian_corpus(max_order));
    out.extend(controls().into_iter().filter(|e| e.order() <= max_order));
    out
}
