//! Parameter sequences `(d_n)` and `(k_n)` selecting a member of the family.

use std::fmt;

use crate::error::{Error, Result};
use crate::layers::LayerParams;

/// A rule producing the `n`-th term of a sequence, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqRule {
    /// `slope * n + offset`.
    Affine { slope: i64, offset: i64 },
    /// Explicit terms for `n = 1..=len`; undefined beyond.
    List(Vec<usize>),
}

impl SeqRule {
    pub fn term(&self, n: usize) -> Option<usize> {
        match self {
            SeqRule::Affine { slope, offset } => usize::try_from(slope * n as i64 + offset).ok(),
            SeqRule::List(v) => n.checked_sub(1).and_then(|i| v.get(i)).copied(),
        }
    }

    /// Number of defined terms, `None` when unbounded.
    pub fn defined_terms(&self) -> Option<usize> {
        match self {
            SeqRule::Affine { .. } => None,
            SeqRule::List(v) => Some(v.len()),
        }
    }
}

impl fmt::Display for SeqRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqRule::Affine { slope, offset } => write!(f, "{slope}n{offset:+}"),
            SeqRule::List(v) => {
                let terms: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", terms.join(","))
            }
        }
    }
}

/// The sequences `(d_n)` and `(k_n)`, validated: both strictly increasing,
/// `d_1 > 1` and `k_n >= 2 d_n` wherever both are defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupParams {
    d: SeqRule,
    k: SeqRule,
}

impl GroupParams {
    pub fn new(d: SeqRule, k: SeqRule) -> Result<Self> {
        let gp = Self { d, k };
        gp.validate()?;
        Ok(gp)
    }

    /// `d_n = n + 1`, `k_n = 2n + 2`: the choice for which the group is torsion-free.
    pub fn paper() -> Self {
        Self {
            d: SeqRule::Affine { slope: 1, offset: 1 },
            k: SeqRule::Affine { slope: 2, offset: 2 },
        }
    }

    pub fn affine(d_slope: i64, d_offset: i64, k_slope: i64, k_offset: i64) -> Result<Self> {
        Self::new(
            SeqRule::Affine { slope: d_slope, offset: d_offset },
            SeqRule::Affine { slope: k_slope, offset: k_offset },
        )
    }

    pub fn lists(d: Vec<usize>, k: Vec<usize>) -> Result<Self> {
        Self::new(SeqRule::List(d), SeqRule::List(k))
    }

    pub fn d_rule(&self) -> &SeqRule {
        &self.d
    }

    pub fn k_rule(&self) -> &SeqRule {
        &self.k
    }

    /// Number of layers for which both sequences are defined; `None` when unbounded.
    pub fn defined_layers(&self) -> Option<usize> {
        match (self.d.defined_terms(), self.k.defined_terms()) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    pub fn layer(&self, n: usize) -> Result<LayerParams> {
        let available = self.defined_layers().unwrap_or(usize::MAX);
        if n == 0 {
            return Err(Error::InvalidParams("layers are indexed from 1".into()));
        }
        if n > available {
            return Err(Error::BoundNotCertified { needed: n, available });
        }
        let d = self.d.term(n).ok_or(Error::Overflow)?;
        let k = self.k.term(n).ok_or(Error::Overflow)?;
        LayerParams::new(n, d, k)
    }

    /// Largest `n` with `d_n <= span + 1` (0 if none).
    ///
    /// Beyond this layer every element with trivial lamplighter image whose
    /// `s`-indices span at most `span` projects trivially.
    pub fn support_bound(&self, span: u64) -> Result<usize> {
        let limit = span.saturating_add(1);
        let available = self.defined_layers();
        let mut n = 0usize;
        loop {
            let next = n + 1;
            if available.is_some_and(|len| next > len) {
                return Err(Error::BoundNotCertified { needed: next, available: n });
            }
            let d = self.d.term(next).ok_or(Error::Overflow)? as u64;
            if d > limit {
                return Ok(n);
            }
            n = next;
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        for (name, rule) in [("d", &self.d), ("k", &self.k)] {
            match rule {
                SeqRule::Affine { slope, offset } => {
                    if *slope < 1 {
                        return bad(format!("{name}_n must be strictly increasing (slope {slope})"));
                    }
                    if slope + offset < 1 {
                        return bad(format!("{name}_1 must be positive"));
                    }
                }
                SeqRule::List(v) => {
                    if v.is_empty() {
                        return bad(format!("{name} list is empty"));
                    }
                    if v[0] == 0 {
                        return bad(format!("{name}_1 must be positive"));
                    }
                    if let Some(w) = v.windows(2).find(|w| w[0] >= w[1]) {
                        return bad(format!("{name} list is not strictly increasing at {} -> {}", w[0], w[1]));
                    }
                }
            }
        }
        if self.d.term(1).is_some_and(|d1| d1 <= 1) {
            return bad("d_1 must exceed 1".into());
        }
        match (&self.d, &self.k) {
            (SeqRule::Affine { slope: a, offset: b }, SeqRule::Affine { slope: c, offset: e }) => {
                // (c - 2a) n + (e - 2b) >= 0 for every n >= 1
                if c - 2 * a < 0 || (c - 2 * a) + (e - 2 * b) < 0 {
                    return bad(format!("k_n >= 2 d_n fails for d = {}, k = {}", self.d, self.k));
                }
            }
            _ => {
                let len = self.defined_layers().unwrap_or(0);
                for n in 1..=len {
                    let d = self.d.term(n).ok_or(Error::Overflow)?;
                    let k = self.k.term(n).ok_or(Error::Overflow)?;
                    if k < 2 * d {
                        return bad(format!("k_{n} = {k} is smaller than 2 d_{n} = {}", 2 * d));
                    }
                }
            }
        }
        Ok(())
    }
}

impl Default for GroupParams {
    fn default() -> Self {
        Self::paper()
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} k={}", self.d, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_preset() {
        let gp = GroupParams::paper();
        for n in 1..30 {
            let l = gp.layer(n).unwrap();
            assert_eq!((l.d(), l.k()), (n + 1, 2 * n + 2));
        }
        assert_eq!(gp.support_bound(0).unwrap(), 0);
        assert_eq!(gp.support_bound(1).unwrap(), 1);
        assert_eq!(gp.support_bound(3).unwrap(), 3);
    }

    #[test]
    fn affine_validation() {
        assert!(GroupParams::affine(2, 0, 4, 0).is_ok());
        assert!(GroupParams::affine(1, 0, 2, 0).is_err()); // d_1 = 1
        assert!(GroupParams::affine(0, 3, 6, 0).is_err()); // constant d
        assert!(GroupParams::affine(2, 0, 3, 10).is_err()); // k grows too slowly
        assert!(GroupParams::affine(1, 1, 2, 1).is_err()); // k_n = 2n+1 < 2n+2
        assert!(GroupParams::affine(1, 2, 2, 5).is_ok());
    }

    #[test]
    fn list_validation() {
        assert!(GroupParams::lists(vec![2, 3, 5], vec![4, 6, 10]).is_ok());
        assert!(GroupParams::lists(vec![2, 2], vec![4, 6]).is_err());
        assert!(GroupParams::lists(vec![2, 3], vec![4, 5]).is_err());
        assert!(GroupParams::lists(vec![1, 3], vec![4, 6]).is_err());
        assert!(GroupParams::lists(vec![], vec![]).is_err());
    }

    #[test]
    fn short_lists_refuse_uncertified_bounds() {
        let gp = GroupParams::lists(vec![2, 3, 4], vec![4, 6, 8]).unwrap();
        assert_eq!(gp.support_bound(2).unwrap(), 2);
        assert_eq!(gp.support_bound(3), Err(Error::BoundNotCertified { needed: 4, available: 3 }));
        assert!(gp.layer(4).is_err());
    }

    #[test]
    fn mixed_rules() {
        let gp = GroupParams::new(SeqRule::Affine { slope: 1, offset: 1 }, SeqRule::List(vec![4, 6])).unwrap();
        assert_eq!(gp.defined_layers(), Some(2));
        assert!(gp.support_bound(5).is_err());
    }
}
