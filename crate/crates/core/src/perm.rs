//! Permutation groups, closed into Cayley tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};

/// A permutation of `0..degree`, stored as its image array.
///
/// Products act left to right: `(a * b)(x) = b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if x >= degree || next >= degree {
                    return None;
                }
                images[x] = next;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x.to_string());
                x = self.0[x];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Closes `gens` under composition and returns the Cayley table of the
/// generated group. Elements appear in breadth-first discovery order from
/// the identity; labels are cycle notation.
pub fn from_generators(gens: &[Vec<usize>], degree: usize) -> Result<GroupTable> {
    from_generators_capped(gens, degree, Limits::default().order_cap)
}

pub fn from_generators_capped(
    gens: &[Vec<usize>],
    degree: usize,
    order_cap: usize,
) -> Result<GroupTable> {
    if degree == 0 {
        return Err(Error::InvalidParameter(
            "permutation degree must be at least 1".into(),
        ));
    }
    let gens = gens
        .iter()
        .enumerate()
        .map(|(index, images)| {
            if images.len() != degree {
                return Err(Error::MalformedPermutation { index, degree });
            }
            Permutation::from_images(images.clone())
                .ok_or(Error::MalformedPermutation { index, degree })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for s in &gens {
            let p = elements[i].then(s);
            if !index.contains_key(&p) {
                if elements.len() == order_cap {
                    return Err(Error::OrderCap {
                        order: elements.len() as u128 + 1,
                        cap: order_cap,
                    });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }

    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)]);
        }
    }
    let labels = elements.iter().map(ToString::to_string).collect();
    Ok(GroupTable::from_trusted(n, table, labels))
}

fn images(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    Permutation::from_cycles(degree, cycles)
        .expect("canonical generator")
        .0
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    dihedral_capped(n, Limits::default().order_cap)
}

pub fn dihedral_capped(n: usize, order_cap: usize) -> Result<GroupTable> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral group D{n} needs n >= 3"
        )));
    }
    let rotation: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
    from_generators_capped(&[rotation, reflection], n, order_cap)
}

/// Symmetric group on `n` points, generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric(n: usize) -> Result<GroupTable> {
    symmetric_capped(n, Limits::default().order_cap)
}

pub fn symmetric_capped(n: usize, order_cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "symmetric group needs n >= 1".into(),
        ));
    }
    let gens = if n == 1 {
        Vec::new()
    } else {
        let long: Vec<usize> = (0..n).collect();
        vec![images(n, &[&[0, 1]]), images(n, &[&long])]
    };
    from_generators_capped(&gens, n, order_cap)
}

/// Alternating group on `n` points, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> Result<GroupTable> {
    alternating_capped(n, Limits::default().order_cap)
}

pub fn alternating_capped(n: usize, order_cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "alternating group needs n >= 1".into(),
        ));
    }
    let gens: Vec<Vec<usize>> = (2..n).map(|k| images(n, &[&[0, 1, k]])).collect();
    from_generators_capped(&gens, n, order_cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_orders(g: &GroupTable, pred: impl Fn(usize) -> bool) -> usize {
        g.element_orders().into_iter().filter(|&o| pred(o)).count()
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let gens = vec![images(3, &[&[0, 1]]), images(3, &[&[0, 1, 2]])];
        let s3 = from_generators(&gens, 3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(count_orders(&s3, |o| o == 3), 2);
        assert_eq!(count_orders(&s3, |o| o == 2), 3);
        assert_eq!(s3.label(0), "()");
        assert!(s3.index_of_label("(0 1)").is_some());
    }

    #[test]
    fn d4_has_five_elements_of_order_at_most_two() {
        let gens = vec![images(4, &[&[0, 1, 2, 3]]), images(4, &[&[1, 3]])];
        let d4 = from_generators(&gens, 4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(count_orders(&d4, |o| o <= 2), 6);
        assert_eq!(count_orders(&d4, |o| o == 2), 5);
        assert_eq!(dihedral(4).unwrap().order(), 8);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        assert_eq!(from_generators(&[], 5).unwrap().order(), 1);
    }

    #[test]
    fn malformed_and_capped_inputs() {
        assert!(matches!(
            from_generators(&[vec![0, 0, 1]], 3),
            Err(Error::MalformedPermutation {
                index: 0,
                degree: 3
            })
        ));
        assert!(matches!(
            from_generators(&[vec![1, 0]], 3),
            Err(Error::MalformedPermutation { .. })
        ));
        assert!(matches!(symmetric(7), Err(Error::OrderCap { .. })));
        assert_eq!(symmetric_capped(5, 120).unwrap().order(), 120);
    }

    #[test]
    fn named_families() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(2).unwrap().order(), 2);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn constructed_tables_revalidate() {
        for g in [
            symmetric(4).unwrap(),
            alternating(4).unwrap(),
            dihedral(6).unwrap(),
        ] {
            crate::group::validate_table(&g.rows()).unwrap();
        }
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_cycles(5, &[&[0, 2], &[1, 3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(0 2)(1 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
