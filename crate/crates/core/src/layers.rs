//! Layer groups `H = D^k ⋊ C_k`, where `C_k` cyclically permutes the `k`
//! dihedral coordinates.
//!
//! Coordinates are stored 0-based. The 1-based position `p` used when
//! printing (and in the definitions of `sigma` and `r_i`) lives at index
//! `(p - 1) mod k`.
//!
//! The shift acts by `(c ▹ f)(x) = f(x - c)`, so conjugating by the image of
//! `t` moves a coordinate from position `x` to `x + 1`. With this orientation
//! `t^i σ t^-i` has `a` at position `i + 1` and `b` at position `d + i`.

use std::fmt;

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Parameters `(n, d_n, k_n)` of a single layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayerParams {
    n: usize,
    d: usize,
    k: usize,
}

impl LayerParams {
    pub fn new(n: usize, d: usize, k: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidParams(format!("layer index and d must be positive (n={n}, d={d})")));
        }
        if n == 1 && d < 2 {
            return Err(Error::InvalidParams(format!("d_1 must exceed 1, got {d}")));
        }
        if k < 2 * d {
            return Err(Error::InvalidParams(format!("k_{n} = {k} is smaller than 2 d_{n} = {}", 2 * d)));
        }
        Ok(Self { n, d, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// 0-based index of the (possibly out-of-range) 1-based position `pos`.
    pub fn index_of(&self, pos: i64) -> usize {
        (pos - 1).rem_euclid(self.k as i64) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayerElement {
    coords: Vec<DihedralElement>,
    shift: usize,
}

impl LayerElement {
    pub fn identity(p: &LayerParams) -> Self {
        Self { coords: vec![DihedralElement::IDENTITY; p.k], shift: 0 }
    }

    /// Builds an element from raw coordinates; `shift` is reduced mod the length.
    pub fn from_parts(coords: Vec<DihedralElement>, shift: i64) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParams("layer element needs at least one coordinate".into()));
        }
        let shift = shift.rem_euclid(coords.len() as i64) as usize;
        Ok(Self { coords, shift })
    }

    /// Image of `t`: trivial coordinates, shift 1.
    pub fn t(p: &LayerParams) -> Self {
        Self { coords: vec![DihedralElement::IDENTITY; p.k], shift: 1 % p.k }
    }

    /// Image of `s`: `a` at position 1, `b` at position `d`.
    pub fn sigma(p: &LayerParams) -> Self {
        Self::r_elem(p, 0)
    }

    /// Image of `s_i = t^i s t^-i`: `a` at position `i + 1`, `b` at position `d + i`.
    pub fn r_elem(p: &LayerParams, i: i64) -> Self {
        let mut e = Self::identity(p);
        e.coords[p.index_of(i + 1)] = DihedralElement::A;
        e.coords[p.index_of(p.d as i64 + i)] = DihedralElement::B;
        e
    }

    pub fn coords(&self) -> &[DihedralElement] {
        &self.coords
    }

    /// Coordinate at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> DihedralElement {
        self.coords[(pos - 1) % self.coords.len()]
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.coords.iter().all(|c| c.is_identity())
    }

    /// Number of nontrivial coordinates.
    pub fn support_size(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_identity()).count()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let k = self.k();
        if rhs.k() != k {
            return Err(Error::ParamMismatch { expected: k, found: rhs.k() });
        }
        let coords = (0..k)
            .map(|x| self.coords[x].checked_mul(rhs.coords[(x + k - self.shift) % k]))
            .collect::<Result<_>>()?;
        Ok(Self { coords, shift: (self.shift + rhs.shift) % k })
    }

    pub fn inv(&self) -> Self {
        // (f, c)^-1 = ((-c) ▹ f^-1, -c)
        let k = self.k();
        let coords = (0..k).map(|x| self.coords[(x + self.shift) % k].inv()).collect();
        Self { coords, shift: (k - self.shift) % k }
    }

    /// Right-multiplies in place by `r_i`, the image of `s_i`.
    pub(crate) fn mul_r_in_place(&mut self, p: &LayerParams, i: i64) -> Result<()> {
        // (f, c)(r_i, 0) = (f · (c ▹ r_i), c): r_i's letters land `c` positions later.
        let c = self.shift as i64;
        let a_idx = p.index_of(i + 1 + c);
        let b_idx = p.index_of(p.d as i64 + i + c);
        self.coords[a_idx] = self.coords[a_idx].checked_mul(DihedralElement::A)?;
        self.coords[b_idx] = self.coords[b_idx].checked_mul(DihedralElement::B)?;
        Ok(())
    }

    /// Projection of a word: the left-to-right product of the images of its letters.
    pub fn project_word(p: &LayerParams, w: &Word) -> Result<Self> {
        let mut acc = Self::identity(p);
        for &l in w.letters() {
            match l {
                // σ is an involution
                Letter::S | Letter::SInv => acc.mul_r_in_place(p, 0)?,
                Letter::T => acc.shift = (acc.shift + 1) % p.k,
                Letter::TInv => acc.shift = (acc.shift + p.k - 1) % p.k,
            }
        }
        Ok(acc)
    }
}

/// `[pos:elt, ...]; shift=c`, listing nontrivial coordinates at 1-based positions.
impl fmt::Display for LayerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_identity() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}:{}", i + 1, c)?;
        }
        write!(f, "]; shift={}", self.shift)
    }
}
