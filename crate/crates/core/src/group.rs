//! The group `G = <s, t>` inside `Z × ∏ H_n`.
//!
//! Elements are handled through the normal form
//! `s_{i_1}^{e_1} ... s_{i_k}^{e_k} t^m` with `s_i = t^i s t^-i`. From it we
//! read off the image in `C2 wr Z` (exponent parities per index, plus `m`),
//! the `Z`-coordinate (the exponent sum) and each layer projection (`s_i`
//! maps to the involution `r_i`).
//!
//! The word problem is decided by combining these: an element is trivial iff
//! its lamplighter image is trivial, its `Z`-coordinate vanishes, and its
//! projections to layers `1..=B` are trivial, where `B` is the support bound.

use std::collections::BTreeMap;
use std::fmt;

use crate::dihedral::{DihedralElement, Order};
use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::layers::{LayerElement, LayerParams};
use crate::params::GroupParams;
use crate::word::{Letter, Word};

/// `s_{i_1}^{e_1} ... s_{i_k}^{e_k} t^m` with adjacent indices distinct and
/// nonzero exponents. Exponents stay integral: the `Z`-coordinate needs the
/// full sum, the layers only its parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SWord {
    pairs: Vec<(i64, i64)>,
    m: i64,
}

impl SWord {
    pub fn new(pairs: Vec<(i64, i64)>, m: i64) -> Self {
        let mut sw = SWord { pairs: Vec::with_capacity(pairs.len()), m };
        for (i, e) in pairs {
            sw.push(i, e);
        }
        sw
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    fn push(&mut self, index: i64, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.pairs.last_mut() {
            Some((i, e)) if *i == index => {
                *e += exp;
                if *e == 0 {
                    self.pairs.pop();
                }
            }
            _ => self.pairs.push((index, exp)),
        }
    }

    /// `max index - min index` over all pairs, 0 when there are none.
    pub fn span(&self) -> u64 {
        let lo = self.pairs.iter().map(|p| p.0).min();
        let hi = self.pairs.iter().map(|p| p.0).max();
        match (lo, hi) {
            (Some(lo), Some(hi)) => hi.abs_diff(lo),
            _ => 0,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn quotient_image(&self) -> LampElement {
        LampElement::new(self.pairs.iter().filter(|p| p.1 % 2 != 0).map(|p| p.0), self.m)
    }

    /// Projection to a layer: the product of `r_i` over pairs with odd exponent, then `t^m`.
    pub fn project(&self, p: &LayerParams) -> Result<LayerElement> {
        let mut acc = LayerElement::identity(p);
        for &(i, e) in &self.pairs {
            if e % 2 != 0 {
                acc.mul_r_in_place(p, i)?;
            }
        }
        let coords = acc.coords().to_vec();
        LayerElement::from_parts(coords, self.m)
    }
}

impl fmt::Display for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in &self.pairs {
            write!(f, "s_{i}^{e} ")?;
        }
        write!(f, "t^{}", self.m)
    }
}

/// Decomposition of an element of the FC-center `A = <σ0^2> ⊕ ⨁_n (D')^{k_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FCDecomposition {
    /// The `Z`-coordinate; always even.
    pub z: i64,
    /// Nontrivial layer projections, each with all coordinates in `D'`.
    pub layers: BTreeMap<usize, Vec<DihedralElement>>,
}

impl fmt::Display for FCDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={}", self.z)?;
        for (n, coords) in &self.layers {
            write!(f, "\nlayer {n}: ")?;
            let layer = LayerElement::from_parts(coords.clone(), 0).map_err(|_| fmt::Error)?;
            write!(f, "{layer}")?;
        }
        Ok(())
    }
}

/// Scans the word keeping the running `t`-exponent `c`; each `s^{±1}` seen
/// at offset `c` contributes `s_c^{±1}`.
pub fn normal_form(w: &Word) -> SWord {
    let mut sw = SWord::default();
    let mut c = 0i64;
    for &l in w.reduce().letters() {
        match l {
            Letter::S => sw.push(c, 1),
            Letter::SInv => sw.push(c, -1),
            Letter::T => c += 1,
            Letter::TInv => c -= 1,
        }
    }
    sw.m = c;
    sw
}

/// The `Z`-coordinate: exponent sum of `s`.
pub fn pi0(w: &Word) -> i64 {
    w.exponent_sums().0
}

pub fn quotient_image(w: &Word) -> LampElement {
    normal_form(w).quotient_image()
}

pub fn support_bound(sw: &SWord, gp: &GroupParams) -> Result<usize> {
    gp.support_bound(sw.span())
}

/// Projection of `w` to layer `n`.
pub fn project(w: &Word, n: usize, gp: &GroupParams) -> Result<LayerElement> {
    LayerElement::project_word(&gp.layer(n)?, &w.reduce())
}

pub fn is_identity(w: &Word, gp: &GroupParams) -> Result<bool> {
    is_identity_sword(&normal_form(w), gp)
}

fn is_identity_sword(sw: &SWord, gp: &GroupParams) -> Result<bool> {
    if sw.m != 0 || sw.exponent_sum() != 0 || !sw.quotient_image().is_identity() {
        return Ok(false);
    }
    let bound = support_bound(sw, gp)?;
    for n in 1..=bound {
        if !sw.project(&gp.layer(n)?)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order of `w`; only 1, 2 or infinity can occur in this family.
pub fn order(w: &Word, gp: &GroupParams) -> Result<Order> {
    let w = w.reduce();
    match quotient_image(&w).order() {
        Order::Infinite => Ok(Order::Infinite),
        // the kernel A is free abelian
        Order::One => Ok(if is_identity(&w, gp)? { Order::One } else { Order::Infinite }),
        Order::Two => Ok(if is_identity(&w.mul(&w), gp)? { Order::Two } else { Order::Infinite }),
    }
}

/// Decomposes `w` in the FC-center, or `None` if `w` is not a member.
pub fn fc_membership(w: &Word, gp: &GroupParams) -> Result<Option<FCDecomposition>> {
    let sw = normal_form(w);
    if !sw.quotient_image().is_identity() {
        return Ok(None);
    }
    let z = sw.exponent_sum();
    if z % 2 != 0 {
        return Err(Error::Internal(format!("odd Z-coordinate {z} for a kernel element")));
    }
    let mut layers = BTreeMap::new();
    for n in 1..=support_bound(&sw, gp)? {
        let proj = sw.project(&gp.layer(n)?)?;
        if let Some(bad) = proj.coords().iter().find(|c| !c.in_derived()) {
            return Err(Error::Internal(format!("layer {n} coordinate {bad} lies outside D'")));
        }
        if !proj.is_identity() {
            layers.insert(n, proj.coords().to_vec());
        }
    }
    Ok(Some(FCDecomposition { z, layers }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn comm(x: &Word, y: &Word) -> Word {
        Word::commutator(x, y)
    }

    fn s_i(i: i64) -> Word {
        Word::s_i(i)
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&Word::from_letters([T, S, TInv]));
        assert_eq!((nf.pairs(), nf.m()), (&[(1, 1)][..], 0));
        let nf = normal_form(&Word::from_letters([S, T, S, T]));
        assert_eq!((nf.pairs(), nf.m()), (&[(0, 1), (1, 1)][..], 2));
        let nf = normal_form(&Word::t().pow(3));
        assert_eq!((nf.pairs(), nf.m()), (&[][..], 3));
    }

    #[test]
    fn normal_form_merges_adjacent_indices() {
        let nf = normal_form(&Word::from_letters([S, T, TInv, S]));
        assert_eq!(nf.pairs(), &[(0, 2)]);
        let nf = normal_form(&Word::from_letters([S, T, S, SInv, TInv, SInv]));
        assert!(nf.pairs().is_empty());
    }

    #[test]
    fn pi0_examples() {
        assert_eq!(pi0(&Word::from_letters([S, S, SInv])), 1);
        assert_eq!(pi0(&comm(&Word::s(), &s_i(4))), 0);
        assert_eq!(pi0(&Word::s().pow(2)), 2);
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_image(&Word::s()), LampElement::dirac(0));
        assert!(quotient_image(&comm(&Word::s(), &s_i(1))).is_identity());
        assert_eq!(quotient_image(&Word::from_letters([S, T])), LampElement::new([0], 1));
    }

    #[test]
    fn support_bound_examples() {
        let gp = GroupParams::paper();
        assert_eq!(support_bound(&normal_form(&comm(&Word::s(), &s_i(1))), &gp).unwrap(), 1);
        assert_eq!(support_bound(&normal_form(&Word::s().pow(2)), &gp).unwrap(), 0);
        assert_eq!(support_bound(&normal_form(&comm(&Word::s(), &s_i(3))), &gp).unwrap(), 3);
        let c3 = comm(&Word::s(), &s_i(3));
        assert!(!project(&c3, 3, &gp).unwrap().is_identity());
        assert!(project(&c3, 4, &gp).unwrap().is_identity());
        let c1 = comm(&Word::s(), &s_i(1));
        assert!(project(&c1, 2, &gp).unwrap().is_identity());
        assert!(project(&c1, 3, &gp).unwrap().is_identity());
    }

    #[test]
    fn identity_examples() {
        let gp = GroupParams::paper();
        assert!(is_identity(&Word::empty(), &gp).unwrap());
        assert!(!is_identity(&comm(&Word::s(), &s_i(1)), &gp).unwrap());
        let nested = comm(&comm(&Word::s(), &s_i(1)), &comm(&Word::s(), &s_i(2)));
        assert!(is_identity(&nested, &gp).unwrap());
        for n in 1..=10 {
            assert!(project(&nested, n, &gp).unwrap().is_identity());
        }
    }

    #[test]
    fn order_examples() {
        let gp = GroupParams::paper();
        assert_eq!(order(&Word::t(), &gp).unwrap(), Order::Infinite);
        assert_eq!(order(&Word::s(), &gp).unwrap(), Order::Infinite);
        assert_eq!(order(&Word::empty(), &gp).unwrap(), Order::One);
        assert_eq!(order(&comm(&Word::s(), &s_i(1)), &gp).unwrap(), Order::Infinite);
    }

    #[test]
    fn fc_examples() {
        let gp = GroupParams::paper();
        let sq = fc_membership(&Word::s().pow(2), &gp).unwrap().unwrap();
        assert_eq!(sq.z, 2);
        assert!(sq.layers.is_empty());

        let c = fc_membership(&comm(&Word::s(), &s_i(1)), &gp).unwrap().unwrap();
        assert_eq!(c.z, 0);
        assert_eq!(c.layers.len(), 1);
        let layer1 = &c.layers[&1];
        assert_eq!(layer1[1], DihedralElement::BA_SQUARED);
        assert_eq!(layer1.iter().filter(|x| !x.is_identity()).count(), 1);

        assert_eq!(fc_membership(&Word::s(), &gp).unwrap(), None);
    }

    #[test]
    fn conjugation_shifts_indices() {
        let w = Word::from_letters([S, T, SInv, SInv, T, S, TInv]);
        let conj = Word::t().mul(&w).mul(&Word::t().inv());
        let a = normal_form(&w);
        let b = normal_form(&conj);
        assert_eq!(a.m(), b.m());
        let shifted: Vec<_> = a.pairs().iter().map(|&(i, e)| (i + 1, e)).collect();
        assert_eq!(b.pairs(), &shifted[..]);
    }

    #[test]
    fn s_squared_is_central() {
        let gp = GroupParams::paper();
        let s2 = Word::s().pow(2);
        for x in [Word::s(), Word::t()] {
            let c = comm(&s2, &x);
            assert!(is_identity(&c, &gp).unwrap());
            for n in 1..=20 {
                assert!(project(&c, n, &gp).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn sword_projection_matches_word_projection() {
        let gp = GroupParams::paper();
        let w = Word::from_letters([S, T, S, T, T, SInv, TInv, S, S, TInv, TInv, SInv]);
        for n in 1..=5 {
            let layer = gp.layer(n).unwrap();
            assert_eq!(normal_form(&w).project(&layer).unwrap(), project(&w, n, &gp).unwrap());
        }
    }

    #[test]
    fn explicit_lists_propagate_certification_errors() {
        let gp = GroupParams::lists(vec![2, 3], vec![4, 6]).unwrap();
        let c = comm(&Word::s(), &s_i(5));
        assert!(matches!(is_identity(&c, &gp), Err(Error::BoundNotCertified { .. })));
        assert!(is_identity(&comm(&Word::s(), &s_i(1)), &gp).is_ok());
    }
}
