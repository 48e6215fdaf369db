//! Per-group and per-pair theorem checks, and the corpus sweep.

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::factorize;
use crate::corpus::{full_corpus, CorpusEntry};
use crate::dedekind::{decompose_hamiltonian, is_dedekind, HamiltonianDecomposition};
use crate::error::{Error, Result};
use crate::expr::build_from_expr;
use crate::group::{direct_sum_capped, DirectSum, GroupTable, Limits};
use crate::invariants::{subgroup_invariants, AbelianInvariants};
use crate::lattice::{all_subgroups_capped, is_essential_fast, SubgroupList};
use crate::socle::{
    delta_fast, delta_from_lattice, prime_socle, prime_socle_within, socle_from_decomposition,
    socle_from_lattice, SocleReport,
};
use crate::subgroup::{is_normal, meet, Subgroup};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Value,
}

impl Check {
    fn new(name: &str, pass: bool, witness: Value) -> Self {
        Check {
            name: name.to_string(),
            pass,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub order: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(group: String, order: usize, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerifyReport {
            group,
            order,
            checks,
            pass,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Skip every check that needs the subgroup lattice.
    pub fast_only: bool,
    pub limits: Limits,
}

fn idx(s: &Subgroup) -> Value {
    json!(s.to_indices())
}

/// A socle element whose order is not squarefree, i.e. a witness that the
/// socle is not a product of elementary abelian p-groups.
fn elementary_socle_violation(g: &GroupTable, socle: &Subgroup) -> Option<usize> {
    socle
        .iter()
        .skip(1)
        .find(|&x| factorize(g.element_order(x)).iter().any(|&(_, e)| e > 1))
}

/// Runs every applicable check on `g`.
///
/// With the lattice available: δ by definition against `P(G)`-based δ,
/// essentiality of δ, fast against definitional essentiality, normality of
/// the socle, δ against the socle, and for Hamiltonian groups the
/// decomposition and the structural socle formula.
pub fn cmd_verify(name: &str, g: &GroupTable, opts: &VerifyOptions) -> Result<VerifyReport> {
    let dedekind = is_dedekind(g);
    let abelian = g.is_abelian();
    let hamiltonian = dedekind && !abelian;
    let classification = json!({
        "abelian": abelian,
        "dedekind": dedekind,
        "hamiltonian": hamiltonian,
    });

    let mut checks = Vec::new();
    let lattice = if opts.fast_only {
        None
    } else {
        Some(all_subgroups_capped(g, opts.limits.lattice_cap)?)
    };

    match &lattice {
        Some(lattice) => {
            let all_normal = lattice.iter().all(|s| is_normal(g, s));
            let mut w = classification.clone();
            w["all_subgroups_normal"] = json!(all_normal);
            checks.push(Check::new("classification", all_normal == dedekind, w));
            checks.extend(lattice_checks(g, lattice, dedekind));
        }
        None => checks.push(Check::new("classification", true, classification)),
    }

    if hamiltonian {
        checks.extend(hamiltonian_checks(g, lattice.as_ref()));
    } else if dedekind && lattice.is_none() {
        let socle = prime_socle(g);
        let bad = elementary_socle_violation(g, &socle);
        checks.push(Check::new(
            "elementary_socle",
            bad.is_none(),
            bad.map_or(
                json!({"socle_order": socle.order()}),
                |x| json!({"element": x}),
            ),
        ));
    }

    Ok(VerifyReport::new(name.to_string(), g.order(), checks))
}

fn lattice_checks(g: &GroupTable, lattice: &SubgroupList<'_>, dedekind: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    let essentials = lattice.proper_essentials();
    let delta = delta_from_lattice(lattice);
    let fast = delta_fast(g);
    checks.push(Check::new(
        "delta_agreement",
        delta == fast,
        json!({"definitional": idx(&delta), "fast": idx(&fast)}),
    ));

    if essentials.is_empty() {
        checks.push(Check::new(
            "delta_essential",
            delta.is_whole(),
            json!({"proper_essentials": 0, "delta_is_whole": delta.is_whole()}),
        ));
    } else {
        let p = prime_socle(g);
        checks.push(Check::new(
            "delta_essential",
            lattice.is_essential(&delta) && delta == p,
            json!({
                "proper_essentials": essentials.len(),
                "delta": idx(&delta),
                "prime_socle": idx(&p),
            }),
        ));
    }

    let mismatch = lattice
        .iter()
        .filter(|s| s.is_proper_nontrivial())
        .find(|s| is_essential_fast(g, s) != lattice.is_essential(s));
    checks.push(Check::new(
        "essential_fast_agreement",
        mismatch.is_none(),
        mismatch.map_or(
            json!({"subgroups": lattice.len()}),
            |s| json!({"subgroup": idx(s)}),
        ),
    ));

    let report = socle_from_lattice(lattice);
    checks.push(Check::new(
        "socle_normal",
        is_normal(g, &report.socle),
        json!({"socle": idx(&report.socle), "invariants": report.invariants}),
    ));

    let equal = delta == report.socle;
    if dedekind {
        checks.push(Check::new(
            "delta_equals_socle",
            equal,
            json!({"delta": idx(&delta), "socle": idx(&report.socle)}),
        ));
        let bad = elementary_socle_violation(g, &report.socle);
        checks.push(Check::new(
            "elementary_socle",
            bad.is_none(),
            bad.map_or(
                json!({"socle_order": report.socle.order()}),
                |x| json!({"element": x}),
            ),
        ));
    } else {
        // outside the Dedekind hypothesis the comparison is informational
        checks.push(Check::new(
            "delta_equals_socle",
            true,
            json!({
                "delta": idx(&delta),
                "socle": idx(&report.socle),
                "expected_negative": !equal,
            }),
        ));
    }
    checks
}

/// Expected socle invariants `[2] ⊎ inv(B) ⊎ inv(P(D))`, computed from the
/// parts without reference to the socle itself.
fn formula_invariants(g: &GroupTable, dec: &HamiltonianDecomposition) -> Option<AbelianInvariants> {
    let b = subgroup_invariants(g, &dec.b).ok()?;
    let pd = subgroup_invariants(g, &prime_socle_within(g, &dec.d)).ok()?;
    Some(AbelianInvariants::from_divisors(vec![2]).sum(&b).sum(&pd))
}

fn hamiltonian_checks(g: &GroupTable, lattice: Option<&SubgroupList<'_>>) -> Vec<Check> {
    let dec = match decompose_hamiltonian(g) {
        Ok(dec) => dec,
        Err(e) => {
            return vec![Check::new(
                "decomposition",
                false,
                json!({"error": e.to_string()}),
            )];
        }
    };
    let mut checks = vec![Check::new("decomposition", true, json!(dec.to_json(g)))];
    let fast: SocleReport = socle_from_decomposition(g, &dec);
    let expected = formula_invariants(g, &dec);
    let actual = subgroup_invariants(g, &fast.socle).ok();
    let mut pass = fast.invariants.is_some() && fast.invariants == expected && expected == actual;
    let mut witness = json!({
        "socle": idx(&fast.socle),
        "invariants": fast.invariants,
        "expected_invariants": expected,
    });
    match lattice {
        Some(lattice) => {
            let brute = socle_from_lattice(lattice);
            pass &= brute.socle == fast.socle;
            witness["brute_socle"] = idx(&brute.socle);
        }
        None => {
            let delta = delta_fast(g);
            pass &= delta == fast.socle;
            witness["delta_fast"] = idx(&delta);
        }
    }
    checks.push(Check::new("hamiltonian_socle", pass, witness));
    if lattice.is_none() {
        let bad = elementary_socle_violation(g, &fast.socle);
        checks.push(Check::new(
            "elementary_socle",
            bad.is_none(),
            bad.map_or(
                json!({"socle_order": fast.socle.order()}),
                |x| json!({"element": x}),
            ),
        ));
    }
    checks
}

/// Pulls a subgroup of the left summand back to the left factor's indices.
fn restrict_left(sum: &DirectSum, s: &Subgroup, left_order: usize) -> Subgroup {
    let k = sum.group.order() / left_order;
    Subgroup::from_set(crate::bitset::ElementSet::from_indices(
        left_order,
        s.iter().filter(|x| x % k == 0).map(|x| x / k),
    ))
}

fn restrict_right(sum: &DirectSum, s: &Subgroup, left_order: usize) -> Subgroup {
    let k = sum.group.order() / left_order;
    Subgroup::from_set(crate::bitset::ElementSet::from_indices(
        k,
        s.iter().filter(|&x| x < k),
    ))
}

/// Direct-sum checks on `G ⊕ H`: essential subgroups exist in the sum iff
/// they exist in a summand, δ of the sum is the sum of the δs, and every
/// proper essential subgroup restricts to each summand as a proper
/// essential subgroup or contains it.
pub fn cmd_verify_pair(
    left_name: &str,
    left: &GroupTable,
    right_name: &str,
    right: &GroupTable,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let cap = opts.limits.lattice_cap;
    let sum = direct_sum_capped(left, right, opts.limits.order_cap)?;
    let g = &sum.group;
    let name = format!("({left_name}) + ({right_name})");
    let expected_fast = sum.internal_sum(&delta_fast(left), &delta_fast(right));
    let fast = delta_fast(g);
    let mut checks = Vec::new();

    if opts.fast_only {
        checks.push(Check::new(
            "delta_direct_sum",
            fast == expected_fast,
            json!({"delta": idx(&fast), "expected": idx(&expected_fast)}),
        ));
        return Ok(VerifyReport::new(name, g.order(), checks));
    }

    let lat_l = all_subgroups_capped(left, cap)?;
    let lat_r = all_subgroups_capped(right, cap)?;
    let lat = all_subgroups_capped(g, cap)?;
    let (ess_l, ess_r, ess) = (
        lat_l.proper_essentials(),
        lat_r.proper_essentials(),
        lat.proper_essentials(),
    );

    checks.push(Check::new(
        "essential_existence",
        !ess.is_empty() == (!ess_l.is_empty() || !ess_r.is_empty()),
        json!({"sum": ess.len(), "left": ess_l.len(), "right": ess_r.len()}),
    ));

    let delta = delta_from_lattice(&lat);
    let expected = sum.internal_sum(&delta_from_lattice(&lat_l), &delta_from_lattice(&lat_r));
    checks.push(Check::new(
        "delta_direct_sum",
        delta == expected && fast == expected_fast && delta == fast,
        json!({"delta": idx(&delta), "expected": idx(&expected), "delta_fast": idx(&fast)}),
    ));

    let bad = ess.iter().find(|e| {
        let on_left = restrict_left(
            &sum,
            &meet(e, &sum.left).expect("same parent"),
            left.order(),
        );
        let on_right = restrict_right(
            &sum,
            &meet(e, &sum.right).expect("same parent"),
            left.order(),
        );
        let ok_left = sum.left.is_subgroup_of(e) || lat_l.is_essential(&on_left);
        let ok_right = sum.right.is_subgroup_of(e) || lat_r.is_essential(&on_right);
        !(ok_left && ok_right)
    });
    checks.push(Check::new(
        "essential_restriction",
        bad.is_none(),
        bad.map_or(
            json!({"checked": ess.len()}),
            |e| json!({"subgroup": idx(e)}),
        ),
    ));

    Ok(VerifyReport::new(name, g.order(), checks))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_order: usize,
    pub seed: u64,
    pub pairs: usize,
    pub verify: VerifyOptions,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub groups: usize,
    pub pairs: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub reports: Vec<VerifyReport>,
    pub summary: SweepSummary,
}

impl SweepResult {
    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Seeded random corpus pairs `(G, H)` with `|G| |H| <= bound`, both
/// nontrivial.
pub fn sample_pairs(
    corpus: &[CorpusEntry],
    bound: usize,
    count: usize,
    seed: u64,
) -> Vec<(usize, usize)> {
    let eligible: Vec<(usize, usize)> = (0..corpus.len())
        .flat_map(|i| (0..corpus.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (a, b) = (corpus[i].order(), corpus[j].order());
            a > 1 && b > 1 && a * b <= bound
        })
        .collect();
    if eligible.is_empty() {
        return Vec::new();
    }
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| eligible[rng.random_range(0..eligible.len())])
        .collect()
}

pub fn cmd_sweep(opts: &SweepOptions) -> Result<SweepResult> {
    let v = &opts.verify;
    if !v.fast_only && opts.max_order > v.limits.lattice_cap {
        return Err(Error::LatticeCap {
            order: opts.max_order,
            cap: v.limits.lattice_cap,
        });
    }
    let corpus = full_corpus(opts.max_order);
    let groups = corpus
        .iter()
        .map(|e| build_from_expr(&e.expr, &v.limits))
        .collect::<Result<Vec<_>>>()?;

    let mut reports = corpus
        .par_iter()
        .zip(groups.par_iter())
        .map(|(e, g)| cmd_verify(&e.name(), g, v))
        .collect::<Result<Vec<_>>>()?;

    let pairs = sample_pairs(&corpus, opts.max_order, opts.pairs, opts.seed);
    let pair_reports = pairs
        .par_iter()
        .map(|&(i, j)| {
            cmd_verify_pair(
                &corpus[i].name(),
                &groups[i],
                &corpus[j].name(),
                &groups[j],
                v,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    reports.extend(pair_reports);

    let passed = reports.iter().filter(|r| r.pass).count();
    let summary = SweepSummary {
        groups: corpus.len(),
        pairs: pairs.len(),
        passed,
        failed: reports.len() - passed,
    };
    Ok(SweepResult { reports, summary })
}
