//! Group expressions such as `Q8 x E2^2 x Z9`.
//!
//! ```text
//! EXPR := TERM ("x" TERM)*
//! TERM := "Q8" | "Z" INT | "E2^" INT | "D" INT | "S" INT | "A" INT
//! ```
//!
//! Letters are case-insensitive and whitespace may surround terms. `Dn` is
//! the dihedral group of order `2n`; `Sn` and `An` act on `n` points.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{
    direct_sum_capped, make_cyclic_capped, make_elementary_abelian_2_capped, make_quaternion,
    GroupTable, Limits,
};
use crate::perm::{alternating_capped, dihedral_capped, symmetric_capped};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Cyclic(usize),
    Quaternion,
    ElemAbelian2(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
}

impl Atom {
    /// Group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        let factorial = |n: usize| (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
        match *self {
            Atom::Cyclic(n) => n as u128,
            Atom::Quaternion => 8,
            Atom::ElemAbelian2(r) => 1u128.checked_shl(r as u32).unwrap_or(u128::MAX),
            Atom::Dihedral(n) => 2 * n as u128,
            Atom::Symmetric(n) => factorial(n),
            Atom::Alternating(n) => (factorial(n) / 2).max(1),
        }
    }

    fn check_range(&self, limits: &Limits) -> std::result::Result<(), String> {
        match *self {
            Atom::Cyclic(0) | Atom::Symmetric(0) | Atom::Alternating(0) => {
                Err(format!("{self}: parameter must be at least 1"))
            }
            Atom::ElemAbelian2(r) if r == 0 || r > limits.rank_cap => Err(format!(
                "{self}: rank must be between 1 and {}",
                limits.rank_cap
            )),
            Atom::Dihedral(n) if n < 3 => {
                Err(format!("{self}: dihedral parameter must be at least 3"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<GroupTable> {
        let cap = limits.order_cap;
        if self.order() > cap as u128 {
            return Err(Error::OrderCap {
                order: self.order(),
                cap,
            });
        }
        match *self {
            Atom::Cyclic(n) => make_cyclic_capped(n, cap),
            Atom::Quaternion => Ok(make_quaternion()),
            Atom::ElemAbelian2(r) => make_elementary_abelian_2_capped(r, limits.rank_cap),
            Atom::Dihedral(n) => dihedral_capped(n, cap),
            Atom::Symmetric(n) => symmetric_capped(n, cap),
            Atom::Alternating(n) => alternating_capped(n, cap),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::Quaternion => f.write_str("Q8"),
            Atom::ElemAbelian2(r) => write!(f, "E2^{r}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
        }
    }
}

/// Atoms combined by left-nested direct sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom(Atom),
    DirectSum(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn from_atoms(atoms: &[Atom]) -> Option<GroupExpr> {
        let (first, rest) = atoms.split_first()?;
        Some(rest.iter().fold(GroupExpr::Atom(*first), |acc, a| {
            GroupExpr::DirectSum(Box::new(acc), Box::new(GroupExpr::Atom(*a)))
        }))
    }

    /// Atoms in left-to-right order.
    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            GroupExpr::Atom(a) => vec![*a],
            GroupExpr::DirectSum(l, r) => {
                let mut v = l.atoms();
                v.extend(r.atoms());
                v
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.atoms()
            .iter()
            .fold(1u128, |acc, a| acc.saturating_mul(a.order()))
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::DirectSum(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).map(u8::to_ascii_lowercase)
    }

    fn expect(&mut self, literal: &[u8]) -> Result<()> {
        for &c in literal {
            if self.peek() != Some(c) {
                return self.syntax(format!("expected '{}'", c as char));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: format!("integer {digits} is too large"),
        })
    }

    fn term(&mut self) -> Result<Atom> {
        let Some(c) = self.peek() else {
            return self.syntax("expected a group term");
        };
        self.pos += 1;
        Ok(match c {
            b'q' => {
                self.expect(b"8")?;
                Atom::Quaternion
            }
            b'z' => Atom::Cyclic(self.int()?),
            b'e' => {
                self.expect(b"2^")?;
                Atom::ElemAbelian2(self.int()?)
            }
            b'd' => Atom::Dihedral(self.int()?),
            b's' => Atom::Symmetric(self.int()?),
            b'a' => Atom::Alternating(self.int()?),
            _ => {
                self.pos -= 1;
                return self.syntax("expected one of Q8, Z, E2^, D, S, A");
            }
        })
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    parse_group_expr_with(text, &Limits::default())
}

pub fn parse_group_expr_with(text: &str, limits: &Limits) -> Result<GroupExpr> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    let mut atoms = Vec::new();
    loop {
        p.skip_ws();
        let start = p.pos;
        let atom = p.term()?;
        atom.check_range(limits)
            .map_err(|msg| Error::InvalidParameter(format!("at offset {start}: {msg}")))?;
        atoms.push(atom);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'x') => p.pos += 1,
            Some(_) => return p.syntax("expected 'x' between terms"),
        }
    }
    let expr = GroupExpr::from_atoms(&atoms).expect("at least one term");
    let order = expr.order();
    if order > limits.order_cap as u128 {
        return Err(Error::OrderCap {
            order,
            cap: limits.order_cap,
        });
    }
    Ok(expr)
}

/// Builds the atoms and folds direct sums left to right.
pub fn build_from_expr(expr: &GroupExpr, limits: &Limits) -> Result<GroupTable> {
    match expr {
        GroupExpr::Atom(a) => a.build(limits),
        GroupExpr::DirectSum(l, r) => {
            let left = build_from_expr(l, limits)?;
            let right = build_from_expr(r, limits)?;
            Ok(direct_sum_capped(&left, &right, limits.order_cap)?.group)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::abelian_invariants;

    #[test]
    fn parses_left_folded_sums() {
        let e = parse_group_expr("Q8 x Z2 x Z9").unwrap();
        let expect = GroupExpr::DirectSum(
            Box::new(GroupExpr::DirectSum(
                Box::new(GroupExpr::Atom(Atom::Quaternion)),
                Box::new(GroupExpr::Atom(Atom::Cyclic(2))),
            )),
            Box::new(GroupExpr::Atom(Atom::Cyclic(9))),
        );
        assert_eq!(e, expect);
        assert_eq!(e.order(), 144);
        assert_eq!(e.to_string(), "Q8 x Z2 x Z9");
    }

    #[test]
    fn case_and_whitespace() {
        assert_eq!(
            parse_group_expr("z6").unwrap(),
            GroupExpr::Atom(Atom::Cyclic(6))
        );
        assert_eq!(
            parse_group_expr("  q8X e2^3 ").unwrap().atoms(),
            vec![Atom::Quaternion, Atom::ElemAbelian2(3)]
        );
    }

    #[test]
    fn syntax_errors_report_offsets() {
        assert!(matches!(
            parse_group_expr("Q8 y Z2"),
            Err(Error::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_group_expr(""),
            Err(Error::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_group_expr("Z"),
            Err(Error::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse_group_expr("Q9"),
            Err(Error::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse_group_expr("Z2 x"),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_group_expr("E3^2"),
            Err(Error::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn range_and_cap_errors() {
        assert!(matches!(
            parse_group_expr("Z0"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_group_expr("E2^8"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_group_expr("D2"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_group_expr("S7"),
            Err(Error::OrderCap { order: 5040, .. })
        ));
        assert!(matches!(
            parse_group_expr("Z32 x Z33"),
            Err(Error::OrderCap { .. })
        ));
        assert!(matches!(
            parse_group_expr("S40"),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn builds_expected_groups() {
        let limits = Limits::default();
        let q = build_from_expr(&parse_group_expr("Q8").unwrap(), &limits).unwrap();
        assert_eq!(q.order(), 8);
        let s3 = build_from_expr(&parse_group_expr("S3").unwrap(), &limits).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let a = build_from_expr(&parse_group_expr("Z2 x Z2 x Z2").unwrap(), &limits).unwrap();
        let b = build_from_expr(&parse_group_expr("E2^3").unwrap(), &limits).unwrap();
        assert_eq!(
            abelian_invariants(&a).unwrap(),
            abelian_invariants(&b).unwrap()
        );
        assert_eq!(abelian_invariants(&b).unwrap().divisors(), &[2, 2, 2]);
        let big = Limits {
            order_cap: 5040,
            ..limits
        };
        assert_eq!(
            build_from_expr(&parse_group_expr_with("S7", &big).unwrap(), &big)
                .unwrap()
                .order(),
            5040
        );
    }
}
