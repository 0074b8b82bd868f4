//! Words over the generators `s, t` and their inverses.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S,
    SInv,
    T,
    TInv,
}

impl Letter {
    /// Alphabet in enumeration order `s < s^-1 < t < t^-1`.
    pub const ALL: [Letter; 4] = [Letter::S, Letter::SInv, Letter::T, Letter::TInv];

    pub fn inv(self) -> Self {
        match self {
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    /// `(s-exponent, t-exponent)` contributed by this letter.
    pub fn exponents(self) -> (i64, i64) {
        match self {
            Letter::S => (1, 0),
            Letter::SInv => (-1, 0),
            Letter::T => (0, 1),
            Letter::TInv => (0, -1),
        }
    }

    fn base(self) -> char {
        match self {
            Letter::S | Letter::SInv => 's',
            Letter::T | Letter::TInv => 't',
        }
    }
}

/// A word in `s^{+-1}, t^{+-1}`. Not necessarily freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Self { letters: letters.into_iter().collect() }
    }

    pub fn s() -> Self {
        Self { letters: vec![Letter::S] }
    }

    pub fn t() -> Self {
        Self { letters: vec![Letter::T] }
    }

    /// `t^i s t^-i`.
    pub fn s_i(i: i64) -> Self {
        let t_i = Self::t().pow(i);
        t_i.mul(&Self::s()).mul(&t_i.inv())
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &Word, y: &Word) -> Self {
        x.mul(y).mul(&x.inv()).mul(&y.inv()).reduce()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation, freely reduced at the seam only.
    pub fn mul(&self, rhs: &Word) -> Self {
        let mut letters = self.letters.clone();
        for &l in &rhs.letters {
            push_reduced(&mut letters, l);
        }
        Self { letters }
    }

    pub fn inv(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Free reduction: cancels adjacent inverse pairs until none remain.
    pub fn reduce(&self) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut letters, l);
        }
        Self { letters }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// `(s-exponent sum, t-exponent sum)`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.letters.iter().fold((0, 0), |(s, t), l| {
            let (ds, dt) = l.exponents();
            (s + ds, t + dt)
        })
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inv()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Renders runs of equal letters as powers, e.g. `s t^2 s^-1`; the empty word is `e`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        for run in self.letters.chunk_by(|a, b| a == b) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let l = run[0];
            let exp = if matches!(l, Letter::S | Letter::T) { run.len() as i64 } else { -(run.len() as i64) };
            if exp == 1 {
                write!(f, "{}", l.base())?;
            } else {
                write!(f, "{}^{}", l.base(), exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(Word::from_letters([S, SInv, T]).reduce(), Word::from_letters([T]));
        assert_eq!(Word::empty().reduce(), Word::empty());
        assert_eq!(Word::from_letters([T, TInv, S, S]).reduce(), Word::from_letters([S, S]));
        assert_eq!(Word::from_letters([S, T, TInv, SInv]).reduce(), Word::empty());
    }

    #[test]
    fn conjugate_sugar() {
        assert_eq!(Word::s_i(2), Word::from_letters([T, T, S, TInv, TInv]));
        assert_eq!(Word::s_i(-1), Word::from_letters([TInv, S, T]));
        assert_eq!(Word::s_i(0), Word::s());
    }

    #[test]
    fn commutator_expansion() {
        let c = Word::commutator(&Word::s(), &Word::s_i(1));
        assert_eq!(c, Word::from_letters([S, T, S, TInv, SInv, T, SInv, TInv]));
        assert!(Word::commutator(&Word::s(), &Word::s()).is_empty());
    }

    #[test]
    fn render() {
        assert_eq!(Word::from_letters([S, T, T, SInv]).to_string(), "s t^2 s^-1");
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!(Word::from_letters([TInv, TInv, TInv]).to_string(), "t^-3");
    }

    #[test]
    fn powers() {
        let w = Word::from_letters([S, T]);
        assert_eq!(w.pow(2), Word::from_letters([S, T, S, T]));
        assert_eq!(w.pow(-1), Word::from_letters([TInv, SInv]));
        assert!(w.pow(0).is_empty());
    }
}
