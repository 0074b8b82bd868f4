//! The infinite dihedral group `D = <a, b | a^2 = b^2 = 1>`.
//!
//! Every element has a unique normal form `(ab)^n a^e` with `n` an integer
//! and `e` in `{0, 1}`. Multiplication uses the fact that conjugating by `a`
//! inverts the translation subgroup `Z = <ab>`:
//!
//! ```text
//! (n1, e1) (n2, e2) = (n1 + (-1)^e1 n2, e1 xor e2)
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// An element `(ab)^trans a^refl` of the infinite dihedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DihedralElement {
    trans: i64,
    refl: bool,
}

/// Order of an element in a group where only 1, 2 and infinity occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    One,
    Two,
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::One => f.write_str("1"),
            Order::Two => f.write_str("2"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl DihedralElement {
    pub const IDENTITY: Self = Self { trans: 0, refl: false };
    pub const A: Self = Self { trans: 0, refl: true };
    pub const B: Self = Self { trans: -1, refl: true };
    /// The translation `ab`.
    pub const AB: Self = Self { trans: 1, refl: false };
    /// `(ba)^2 = (ab)^-2`, the generator of the derived subgroup appearing in layer commutators.
    pub const BA_SQUARED: Self = Self { trans: -2, refl: false };

    pub const fn new(trans: i64, refl: bool) -> Self {
        Self { trans, refl }
    }

    pub fn trans(self) -> i64 {
        self.trans
    }

    pub fn refl(self) -> bool {
        self.refl
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let moved = if self.refl { rhs.trans.checked_neg() } else { Some(rhs.trans) };
        let trans = moved.and_then(|m| self.trans.checked_add(m)).ok_or(Error::Overflow)?;
        Ok(Self { trans, refl: self.refl ^ rhs.refl })
    }

    /// Inverse. Reflections are involutions; translations negate.
    ///
    /// `(i64::MIN, false)` has no representable inverse; its negation saturates.
    pub fn inv(self) -> Self {
        if self.refl {
            self
        } else {
            Self { trans: self.trans.saturating_neg(), refl: false }
        }
    }

    pub fn order(self) -> Order {
        if self.refl {
            Order::Two
        } else if self.trans == 0 {
            Order::One
        } else {
            Order::Infinite
        }
    }

    /// `(phi_a(x), phi_b(x))`: parities of the number of `a`'s and `b`'s in
    /// any word for `x`.
    pub fn phi(self) -> (u8, u8) {
        let n = self.trans.rem_euclid(2) as u8;
        ((n + self.refl as u8) % 2, n)
    }

    /// Membership in the derived subgroup `D' = <(ab)^2>`.
    pub fn in_derived(self) -> bool {
        !self.refl && self.trans % 2 == 0
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.trans, self.refl) {
            (0, false) => f.write_str("e"),
            (0, true) => f.write_str("a"),
            (n, false) => write!(f, "(ab)^{n}"),
            (n, true) => write!(f, "(ab)^{n} a"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(n: i64, e: u8) -> DihedralElement {
        DihedralElement::new(n, e == 1)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(d(0, 1).checked_mul(d(0, 1)).unwrap(), d(0, 0));
        assert_eq!(d(-1, 1).checked_mul(d(0, 1)).unwrap(), d(-1, 0));
        assert_eq!(d(-1, 0).checked_mul(d(-1, 0)).unwrap(), d(-2, 0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(d(0, 0).inv(), d(0, 0));
        assert_eq!(d(5, 0).inv(), d(-5, 0));
        assert_eq!(d(3, 1).inv(), d(3, 1));
        assert!(d(3, 1).checked_mul(d(3, 1)).unwrap().is_identity());
    }

    #[test]
    fn order_examples() {
        assert_eq!(d(0, 0).order(), Order::One);
        assert_eq!(d(7, 1).order(), Order::Two);
        assert_eq!(d(-2, 0).order(), Order::Infinite);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(DihedralElement::A.phi(), (1, 0));
        assert_eq!(DihedralElement::B.phi(), (0, 1));
        assert_eq!(DihedralElement::BA_SQUARED.phi(), (0, 0));
    }

    #[test]
    fn derived_examples() {
        assert!(d(-2, 0).in_derived());
        assert!(!d(1, 0).in_derived());
        assert!(!d(0, 1).in_derived());
    }

    #[test]
    fn overflow_is_reported() {
        let big = d(i64::MAX, 0);
        assert_eq!(big.checked_mul(DihedralElement::AB), Err(Error::Overflow));
        assert_eq!(d(0, 1).checked_mul(d(i64::MIN, 0)), Err(Error::Overflow));
    }

    #[test]
    fn infinite_order_when_both_phis_are_one() {
        for n in -100..=100 {
            for e in 0..2 {
                let x = d(n, e);
                if x.phi() == (1, 1) {
                    assert_eq!(x.order(), Order::Infinite, "{x}");
                }
                if x.order() == Order::Two {
                    assert!(matches!(x.phi(), (1, 0) | (0, 1)), "{x}");
                }
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(d(0, 0).to_string(), "e");
        assert_eq!(d(-2, 0).to_string(), "(ab)^-2");
        assert_eq!(d(3, 1).to_string(), "(ab)^3 a");
    }

    fn elem() -> impl Strategy<Value = DihedralElement> {
        (-1000i64..1000, any::<bool>()).prop_map(|(n, e)| DihedralElement::new(n, e))
    }

    proptest! {
        #[test]
        fn associativity(x in elem(), y in elem(), z in elem()) {
            let left = x.checked_mul(y).unwrap().checked_mul(z).unwrap();
            let right = x.checked_mul(y.checked_mul(z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_and_identity(x in elem()) {
            prop_assert!(x.checked_mul(x.inv()).unwrap().is_identity());
            prop_assert_eq!(DihedralElement::IDENTITY.checked_mul(x).unwrap(), x);
        }

        #[test]
        fn phi_is_a_homomorphism(x in elem(), y in elem()) {
            let (xa, xb) = x.phi();
            let (ya, yb) = y.phi();
            prop_assert_eq!(x.checked_mul(y).unwrap().phi(), ((xa + ya) % 2, (xb + yb) % 2));
        }

        #[test]
        fn derived_elements_vanish_under_phi(n in -1000i64..1000) {
            let x = DihedralElement::new(2 * n, false);
            prop_assert!(x.in_derived());
            prop_assert_eq!(x.phi(), (0, 0));
        }
    }
}
