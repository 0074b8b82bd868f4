//! The lamplighter group `C2 wr Z`.
//!
//! An element is a finitely supported configuration of lamps on `Z` together
//! with a shift. The product is
//! `(cfg1, m1)(cfg2, m2) = (cfg1 + shift_m1(cfg2), m1 + m2)` where
//! `shift_m(cfg)(x) = cfg(x - m)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::dihedral::Order;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LampElement {
    /// Positions whose lamp is lit. Never contains unlit positions.
    config: BTreeSet<i64>,
    shift: i64,
}

impl LampElement {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds an element from a list of positions; repeated positions cancel in pairs.
    pub fn new(positions: impl IntoIterator<Item = i64>, shift: i64) -> Self {
        let mut config = BTreeSet::new();
        for p in positions {
            toggle(&mut config, p);
        }
        Self { config, shift }
    }

    /// The Dirac configuration at `pos`, with zero shift.
    pub fn dirac(pos: i64) -> Self {
        Self::new([pos], 0)
    }

    pub fn shift_only(shift: i64) -> Self {
        Self { config: BTreeSet::new(), shift }
    }

    pub fn config(&self) -> &BTreeSet<i64> {
        &self.config
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.config.is_empty()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut config = self.config.clone();
        for &p in &rhs.config {
            toggle(&mut config, p.checked_add(self.shift).ok_or(Error::Overflow)?);
        }
        let shift = self.shift.checked_add(rhs.shift).ok_or(Error::Overflow)?;
        Ok(Self { config, shift })
    }

    pub fn inv(&self) -> Result<Self> {
        let shift = self.shift.checked_neg().ok_or(Error::Overflow)?;
        let config = self
            .config
            .iter()
            .map(|&p| p.checked_add(shift).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { config, shift })
    }

    pub fn order(&self) -> Order {
        if self.shift != 0 {
            Order::Infinite
        } else if self.config.is_empty() {
            Order::One
        } else {
            Order::Two
        }
    }
}

fn toggle(config: &mut BTreeSet<i64>, pos: i64) {
    if !config.remove(&pos) {
        config.insert(pos);
    }
}

impl fmt::Display for LampElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("({")?;
        for (i, p) in self.config.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}, {})", self.shift)
    }
}
