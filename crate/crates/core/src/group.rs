//! Finite groups stored as validated Cayley tables.
//!
//! Element indices are plain `usize` values relative to one table, and
//! index 0 is always the identity.

use crate::bitset::ElementSet;
use crate::error::{Error, Line, Result, TableError};
use crate::subgroup::Subgroup;

pub const DEFAULT_ORDER_CAP: usize = 1024;
pub const DEFAULT_LATTICE_CAP: usize = 200;
pub const DEFAULT_RANK_CAP: usize = 7;

/// Environment variable overriding [`DEFAULT_ORDER_CAP`].
pub const ORDER_CAP_ENV: &str = "SOCLEKIT_MAX_ORDER";

/// Size guards for construction and subgroup enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub lattice_cap: usize,
    pub rank_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_ORDER_CAP,
            lattice_cap: DEFAULT_LATTICE_CAP,
            rank_cap: DEFAULT_RANK_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the order cap taken from `SOCLEKIT_MAX_ORDER` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
        {
            limits.order_cap = cap;
        }
        limits
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Builds a table known to satisfy the group axioms.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert_eq!(labels.len(), order);
        let mut inverses = vec![0; order];
        for (a, inv) in inverses.iter_mut().enumerate() {
            let row = &table[a * order..(a + 1) * order];
            *inv = row
                .iter()
                .position(|&x| x == 0)
                .expect("row without identity");
        }
        GroupTable {
            order,
            table,
            inverses,
            labels,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let (mut acc, mut base, mut k) = (0, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Smallest `m >= 1` with `x^m` equal to the identity.
    pub fn element_order(&self, x: usize) -> usize {
        let mut m = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            m += 1;
        }
        m
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|a| (a + 1..self.order).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::full(self.order))
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(self.order, [0]))
    }
}

/// The cyclic group `Z_n` under addition mod `n`.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    make_cyclic_capped(n, Limits::default().order_cap)
}

pub fn make_cyclic_capped(n: usize, order_cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be at least 1".into(),
        ));
    }
    if n > order_cap {
        return Err(Error::OrderCap {
            order: n as u128,
            cap: order_cap,
        });
    }
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    let labels = (0..n).map(|a| a.to_string()).collect();
    Ok(GroupTable::from_trusted(n, table, labels))
}

pub const QUATERNION_LABELS: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];

/// The quaternion group with elements indexed as `2 * unit + sign`,
/// units ordered `1, i, j, k`.
pub fn make_quaternion() -> GroupTable {
    // product of units: (negated, unit)
    fn unit_mul(u: usize, v: usize) -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, w) = unit_mul(a / 2, b / 2);
            let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
            table.push(2 * w + sign);
        }
    }
    let labels = QUATERNION_LABELS.iter().map(|s| s.to_string()).collect();
    GroupTable::from_trusted(8, table, labels)
}

/// `(Z_2)^r`; element `x` is the bit vector of its index.
pub fn make_elementary_abelian_2(r: usize) -> Result<GroupTable> {
    make_elementary_abelian_2_capped(r, Limits::default().rank_cap)
}

pub fn make_elementary_abelian_2_capped(r: usize, rank_cap: usize) -> Result<GroupTable> {
    if r > rank_cap {
        return Err(Error::RankCap {
            rank: r,
            cap: rank_cap,
        });
    }
    let n = 1usize << r;
    let table = (0..n).flat_map(|a| (0..n).map(move |b| a ^ b)).collect();
    let labels = (0..n)
        .map(|a| {
            if r == 0 {
                "0".to_string()
            } else {
                format!("{a:0width$b}", width = r)
            }
        })
        .collect();
    Ok(GroupTable::from_trusted(n, table, labels))
}

/// `G ⊕ H` together with the canonical embeddings of both factors.
///
/// The element `(g, h)` has index `g * |H| + h`.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub group: GroupTable,
    pub left: Subgroup,
    pub right: Subgroup,
    right_order: usize,
}

impl DirectSum {
    pub fn pair_index(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    pub fn embed_left(&self, s: &Subgroup) -> Subgroup {
        self.internal_sum(s, &Subgroup::trivial_of(self.right_order))
    }

    pub fn embed_right(&self, s: &Subgroup) -> Subgroup {
        let left_order = self.group.order() / self.right_order;
        self.internal_sum(&Subgroup::trivial_of(left_order), s)
    }

    /// The set `{(a, b) : a in A, b in B}` as a subgroup of the sum, where
    /// `a` and `b` are subgroups of the left and right factors.
    pub fn internal_sum(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let n = self.group.order();
        assert!(
            a.parent_order() * self.right_order == n && b.parent_order() == self.right_order,
            "internal_sum takes subgroups of the factors"
        );
        let set = ElementSet::from_indices(
            n,
            a.iter()
                .flat_map(|g| b.iter().map(move |h| (g, h)))
                .map(|(g, h)| self.pair_index(g, h)),
        );
        Subgroup::from_set(set)
    }

    pub fn into_group(self) -> GroupTable {
        self.group
    }
}

pub fn direct_sum(g: &GroupTable, h: &GroupTable) -> Result<DirectSum> {
    direct_sum_capped(g, h, Limits::default().order_cap)
}

pub fn direct_sum_capped(g: &GroupTable, h: &GroupTable, order_cap: usize) -> Result<DirectSum> {
    let (m, k) = (g.order(), h.order());
    let n = m as u128 * k as u128;
    if n > order_cap as u128 {
        return Err(Error::OrderCap {
            order: n,
            cap: order_cap,
        });
    }
    let n = m * k;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        let (ag, ah) = (a / k, a % k);
        for b in 0..n {
            let (bg, bh) = (b / k, b % k);
            table.push(g.mul(ag, bg) * k + h.mul(ah, bh));
        }
    }
    let labels = (0..n)
        .map(|a| format!("({},{})", g.label(a / k), h.label(a % k)))
        .collect();
    let group = GroupTable::from_trusted(n, table, labels);
    let left = Subgroup::from_set(ElementSet::from_indices(n, (0..m).map(|a| a * k)));
    let right = Subgroup::from_set(ElementSet::from_indices(n, 0..k));
    Ok(DirectSum {
        group,
        left,
        right,
        right_order: k,
    })
}

/// Checks the group axioms on a raw table; index 0 must be the identity.
pub fn validate_table(raw: &[Vec<usize>]) -> std::result::Result<GroupTable, TableError> {
    let labels = (0..raw.len()).map(|a| a.to_string()).collect();
    validate_table_with_labels(raw, labels)
}

pub fn validate_table_with_labels(
    raw: &[Vec<usize>],
    labels: Vec<String>,
) -> std::result::Result<GroupTable, TableError> {
    let n = raw.len();
    if n == 0 {
        return Err(TableError::NotSquare { row: 0, len: 0 });
    }
    if labels.len() != n {
        return Err(TableError::LabelCount {
            expected: n,
            found: labels.len(),
        });
    }
    for (row, r) in raw.iter().enumerate() {
        if r.len() != n {
            return Err(TableError::NotSquare { row, len: r.len() });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(TableError::OutOfRange { row, col, value });
        }
    }
    let at = |a: usize, b: usize| raw[a][b];

    for a in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for b in 0..n {
            let v = at(a, b);
            if std::mem::replace(&mut seen_row[v], true) {
                return Err(TableError::NotLatinSquare {
                    line: Line::Row,
                    index: a,
                    value: v,
                });
            }
            let v = at(b, a);
            if std::mem::replace(&mut seen_col[v], true) {
                return Err(TableError::NotLatinSquare {
                    line: Line::Column,
                    index: a,
                    value: v,
                });
            }
        }
    }
    if let Some(element) = (0..n).find(|&x| at(0, x) != x || at(x, 0) != x) {
        return Err(TableError::IdentityLaw { element });
    }
    for (x, row) in raw.iter().enumerate() {
        let y = row
            .iter()
            .position(|&v| v == 0)
            .expect("Latin row contains 0");
        if at(y, x) != 0 {
            return Err(TableError::MissingInverse { element: x });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(TableError::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(GroupTable::from_trusted(n, raw.concat(), labels))
}
