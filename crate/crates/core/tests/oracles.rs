//! Implementation paths checked against independent brute-force oracles.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use soclekit::arith::factorize;
use soclekit::corpus::{abelian_corpus, controls, full_corpus, hamiltonian_corpus, CorpusEntry};
use soclekit::dedekind::{decompose_hamiltonian, is_dedekind, primary_part, recognize_q8};
use soclekit::expr::build_from_expr;
use soclekit::group::{
    direct_sum, make_cyclic, make_elementary_abelian_2, make_quaternion, validate_table,
    GroupTable, Limits,
};
use soclekit::invariants::{abelian_invariants, is_isomorphic_abelian, subgroup_invariants};
use soclekit::lattice::{all_subgroups, all_subgroups_capped};
use soclekit::perm::{alternating, dihedral, symmetric};
use soclekit::socle::{delta_fast, delta_from_lattice, socle_from_lattice};
use soclekit::subgroup::{generated_subgroup, is_normal, meet};

fn build(e: &CorpusEntry) -> GroupTable {
    build_from_expr(
        &e.expr,
        &Limits {
            lattice_cap: 360,
            ..Limits::default()
        },
    )
    .unwrap()
}

fn corpus_groups(max: usize) -> Vec<(String, GroupTable)> {
    full_corpus(max)
        .iter()
        .map(|e| (e.name(), build(e)))
        .collect()
}

fn extra_small_groups() -> Vec<(String, GroupTable)> {
    vec![
        ("D5".into(), dihedral(5).unwrap()),
        ("D6".into(), dihedral(6).unwrap()),
        ("A4".into(), alternating(4).unwrap()),
        ("S4".into(), symmetric(4).unwrap()),
        ("D12".into(), dihedral(12).unwrap()),
    ]
}

/// Closure by repeated multiplication until nothing new appears.
fn naive_closure(g: &GroupTable, seed: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .chain(set.iter().copied())
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn lattice_sets(g: &GroupTable, cap: usize) -> BTreeSet<Vec<usize>> {
    all_subgroups_capped(g, cap)
        .unwrap()
        .iter()
        .map(|s| s.to_indices())
        .collect()
}

#[test]
fn lattice_matches_exhaustive_subset_search_up_to_order_12() {
    let mut groups = corpus_groups(12);
    groups.extend(
        extra_small_groups()
            .into_iter()
            .filter(|(_, g)| g.order() <= 12),
    );
    for (name, g) in groups {
        let n = g.order();
        let mut brute = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                brute.insert(members);
            }
        }
        assert_eq!(lattice_sets(&g, 12), brute, "{name}");
    }
}

#[test]
fn lattice_contains_sampled_closures_up_to_order_24() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut groups: Vec<_> = corpus_groups(24)
        .into_iter()
        .filter(|(_, g)| g.order() > 12)
        .collect();
    groups.extend(
        extra_small_groups()
            .into_iter()
            .filter(|(_, g)| g.order() > 12),
    );
    for (name, g) in groups {
        let sets = lattice_sets(&g, 24);
        for s in &sets {
            assert_eq!(
                naive_closure(&g, s).into_iter().collect::<Vec<_>>(),
                *s,
                "{name}: not closed"
            );
        }
        for _ in 0..300 {
            let k = rng.random_range(0..4);
            let seed: Vec<usize> = (0..k).map(|_| rng.random_range(0..g.order())).collect();
            let closure: Vec<usize> = naive_closure(&g, &seed).into_iter().collect();
            assert!(sets.contains(&closure), "{name}: missing <{seed:?}>");
            assert_eq!(generated_subgroup(&g, &seed).to_indices(), closure);
        }
    }
}

#[test]
fn known_lattice_sizes() {
    assert_eq!(all_subgroups(&symmetric(4).unwrap()).unwrap().len(), 30);
    assert_eq!(all_subgroups(&alternating(4).unwrap()).unwrap().len(), 10);
    assert_eq!(all_subgroups(&dihedral(4).unwrap()).unwrap().len(), 10);
    assert_eq!(all_subgroups(&alternating(5).unwrap()).unwrap().len(), 59);
    assert_eq!(
        all_subgroups_capped(&make_elementary_abelian_2(7).unwrap(), 128)
            .unwrap()
            .len(),
        29212
    );
}

#[test]
fn normality_matches_full_conjugation() {
    let mut groups = corpus_groups(24);
    groups.extend(extra_small_groups());
    for (name, g) in groups {
        for s in all_subgroups(&g).unwrap().iter() {
            let full = (0..g.order()).all(|x| s.iter().all(|y| s.contains(g.conjugate(x, y))));
            assert_eq!(is_normal(&g, s), full, "{name}: {:?}", s.to_indices());
        }
    }
}

#[test]
fn dedekind_test_matches_all_subgroups_normal() {
    let mut groups = corpus_groups(128);
    groups.extend(extra_small_groups());
    for (name, g) in groups {
        let lattice = all_subgroups_capped(&g, 128).unwrap();
        let oracle = lattice.iter().all(|s| is_normal(&g, s));
        assert_eq!(is_dedekind(&g), oracle, "{name}");
    }
}

#[test]
fn every_non_commuting_pair_generates_a_quaternion_group() {
    for e in hamiltonian_corpus(64) {
        let g = build(&e);
        let p2 = primary_part(&g, 2).unwrap().to_indices();
        let mut pairs = 0;
        for &x in &p2 {
            for &y in &p2 {
                if g.mul(x, y) != g.mul(y, x) {
                    pairs += 1;
                    assert!(
                        recognize_q8(&g, &generated_subgroup(&g, &[x, y])),
                        "{}: ({x}, {y})",
                        e.name()
                    );
                }
            }
        }
        assert!(pairs > 0);
    }
}

#[test]
fn primary_parts_have_sylow_order() {
    let dedekind: Vec<CorpusEntry> = abelian_corpus(200)
        .into_iter()
        .chain(hamiltonian_corpus(200))
        .collect();
    for e in dedekind {
        let g = build(&e);
        for (p, k) in factorize(g.order()) {
            assert_eq!(
                primary_part(&g, p).unwrap().order(),
                p.pow(k),
                "{} p={p}",
                e.name()
            );
        }
    }
}

#[test]
fn decomposition_rebuilds_a_group_of_the_same_shape() {
    for e in hamiltonian_corpus(360) {
        let g = build(&e);
        let dec = decompose_hamiltonian(&g).unwrap();
        let b_inv = subgroup_invariants(&g, &dec.b).unwrap();
        let d_inv = dec.d_invariants(&g);
        assert_eq!(
            b_inv.divisors(),
            vec![2; e.b_rank].as_slice(),
            "{}",
            e.name()
        );
        assert_eq!(d_inv, e.divisors, "{}", e.name());

        let mut rebuilt = make_quaternion();
        if dec.b_rank() > 0 {
            rebuilt = direct_sum(
                &rebuilt,
                &make_elementary_abelian_2(dec.b_rank() as usize).unwrap(),
            )
            .unwrap()
            .group;
        }
        for &d in d_inv.divisors() {
            rebuilt = direct_sum(&rebuilt, &make_cyclic(d).unwrap())
                .unwrap()
                .group;
        }
        assert_eq!(rebuilt.order(), g.order());
    }
}

#[test]
fn proper_essentials_are_closed_under_meet() {
    for (name, g) in corpus_groups(64) {
        let lattice = all_subgroups_capped(&g, 64).unwrap();
        let ess = lattice.proper_essentials();
        for a in ess.iter() {
            for b in ess.iter() {
                assert!(lattice.is_essential(&meet(a, b).unwrap()), "{name}");
            }
        }
    }
}

#[test]
fn proper_essentials_restrict_to_summands() {
    let small: Vec<(String, GroupTable)> = corpus_groups(12)
        .into_iter()
        .filter(|(_, g)| g.order() > 1)
        .collect();
    for (na, a) in &small {
        for (nb, b) in &small {
            if a.order() * b.order() > 96 {
                continue;
            }
            let sum = direct_sum(a, b).unwrap();
            let lattice = all_subgroups_capped(&sum.group, 96).unwrap();
            let la = all_subgroups(a).unwrap();
            let k = b.order();
            for e in lattice.proper_essentials().iter() {
                let m = meet(e, &sum.left).unwrap();
                let back: Vec<usize> = m.iter().map(|x| x / k).collect();
                let back = soclekit::Subgroup::from_indices(a, &back).unwrap();
                assert!(
                    sum.left.is_subgroup_of(e) || la.is_essential(&back),
                    "{na} + {nb}: {:?}",
                    e.to_indices()
                );
            }
        }
    }
}

#[test]
fn minimal_normals_match_normal_subgroup_list() {
    let mut groups = corpus_groups(48);
    groups.extend(extra_small_groups());
    for (name, g) in groups {
        let lattice = all_subgroups_capped(&g, 48).unwrap();
        let normals: Vec<_> = lattice
            .iter()
            .filter(|s| is_normal(&g, s) && !s.is_trivial())
            .collect();
        let expected: Vec<Vec<usize>> = normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .map(|n| n.to_indices())
            .collect();
        let mut got: Vec<Vec<usize>> = lattice
            .minimal_normals()
            .iter()
            .map(|s| s.to_indices())
            .collect();
        let mut expected = expected;
        got.sort();
        expected.sort();
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn lagrange_and_socle_normality() {
    for (name, g) in corpus_groups(200) {
        for x in 0..g.order() {
            assert_eq!(g.order() % g.element_order(x), 0, "{name}");
        }
        let lattice = all_subgroups(&g).unwrap();
        for s in lattice.iter() {
            assert_eq!(g.order() % s.order(), 0, "{name}");
        }
        let socle = socle_from_lattice(&lattice);
        assert!(is_normal(&g, &socle.socle), "{name}");
        assert_eq!(delta_fast(&g), delta_from_lattice(&lattice), "{name}");
    }
}

#[test]
fn direct_sum_embeddings_commute_and_meet_trivially() {
    let groups = corpus_groups(12);
    for (_, a) in groups.iter().take(12) {
        for (_, b) in controls()
            .iter()
            .map(|e| (e.name(), build(e)))
            .collect::<Vec<_>>()
            .iter()
        {
            let sum = direct_sum(a, b).unwrap();
            assert_eq!(sum.group.order(), a.order() * b.order());
            assert!(meet(&sum.left, &sum.right).unwrap().is_trivial());
            for x in sum.left.iter() {
                for y in sum.right.iter() {
                    assert_eq!(sum.group.mul(x, y), sum.group.mul(y, x));
                }
            }
        }
    }
}

#[test]
fn constructor_outputs_revalidate() {
    let mut groups = corpus_groups(64);
    groups.extend(extra_small_groups());
    for (name, g) in groups {
        let back = validate_table(&g.rows()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back.rows(), g.rows());
    }
}

#[test]
fn invariants_recover_the_constructing_multiset() {
    for e in abelian_corpus(200) {
        let g = build(&e);
        let inv = abelian_invariants(&g).unwrap();
        assert_eq!(inv, e.divisors, "{}", e.name());
        assert_eq!(inv.product(), g.order());
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let groups: Vec<GroupTable> = abelian_corpus(16).iter().map(build).collect();
    let z2 = make_cyclic(2).unwrap();
    let z3 = make_cyclic(3).unwrap();
    let z6a = direct_sum(&z2, &z3).unwrap().group;
    let z6b = direct_sum(&z3, &z2).unwrap().group;
    let z6c = make_cyclic(6).unwrap();
    assert!(is_isomorphic_abelian(&z6a, &z6b).unwrap());
    assert!(is_isomorphic_abelian(&z6b, &z6c).unwrap());
    assert!(is_isomorphic_abelian(&z6a, &z6c).unwrap());
    for a in &groups {
        assert!(is_isomorphic_abelian(a, a).unwrap());
        for b in &groups {
            assert_eq!(
                is_isomorphic_abelian(a, b).unwrap(),
                is_isomorphic_abelian(b, a).unwrap()
            );
        }
    }
}
