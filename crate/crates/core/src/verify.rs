//! Desk-scale checks of the structural facts about `G`, an independent
//! identity oracle, and an exhaustive torsion search.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::dihedral::{DihedralElement, Order};
use crate::error::{Error, Result};
use crate::group::{fc_membership, order, pi0, quotient_image};
use crate::layers::LayerElement;
use crate::params::GroupParams;
use crate::parallel::in_pool;
use crate::word::{Letter, Word};

/// Outcome of a check. The verdict is `fail` exactly when there are witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub range: String,
    pub witnesses: Vec<Word>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    fn new(name: &str, range: String, witnesses: impl IntoIterator<Item = Word>) -> Self {
        // keep first-seen order, drop duplicates
        let mut seen = BTreeSet::new();
        let witnesses = witnesses.into_iter().filter(|w| seen.insert(w.clone())).collect();
        Self { name: name.to_string(), range, witnesses }
    }
}

/// `CHECK <name> RANGE <range> VERDICT <pass|fail>` then one `WITNESS <word>` line per witness.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "fail" };
        write!(f, "CHECK {} RANGE {} VERDICT {}", self.name, self.range, verdict)?;
        for w in &self.witnesses {
            write!(f, "\nWITNESS {w}")?;
        }
        Ok(())
    }
}

/// Decides triviality by evaluating `w` letter by letter in the truncated
/// product `Z × H_1 × ... × H_N`, never forming the normal form.
///
/// `N` is the support bound for the raw span of `w` (the spread of `t`-offsets
/// at which `s`-letters occur) plus `extra`, raised if needed until
/// `k_N` exceeds the absolute `t`-exponent so a nonzero shift stays visible.
pub fn oracle_is_identity(w: &Word, gp: &GroupParams, extra: usize) -> Result<bool> {
    let mut offset = 0i64;
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for &l in w.letters() {
        match l {
            Letter::S | Letter::SInv => {
                lo = lo.min(offset);
                hi = hi.max(offset);
            }
            Letter::T => offset += 1,
            Letter::TInv => offset -= 1,
        }
    }
    let span = if lo <= hi { hi.abs_diff(lo) } else { 0 };
    let t_sum = offset.unsigned_abs();
    let mut layers = gp.support_bound(span)? + extra;
    while t_sum > 0 && (layers == 0 || gp.layer(layers)?.k() as u64 <= t_sum) {
        layers += 1;
    }

    let mut z = 0i64;
    let mut state = Vec::with_capacity(layers);
    for n in 1..=layers {
        let p = gp.layer(n)?;
        let t = LayerElement::t(&p);
        state.push((LayerElement::identity(&p), [LayerElement::sigma(&p), t.inv(), t]));
    }
    for &l in w.letters() {
        match l {
            Letter::S => z = z.checked_add(1).ok_or(Error::Overflow)?,
            Letter::SInv => z = z.checked_sub(1).ok_or(Error::Overflow)?,
            _ => {}
        }
        let slot = match l {
            Letter::S | Letter::SInv => 0,
            Letter::TInv => 1,
            Letter::T => 2,
        };
        for (acc, gens) in state.iter_mut() {
            *acc = acc.checked_mul(&gens[slot])?;
        }
    }
    Ok(z == 0 && state.iter().all(|(acc, _)| acc.is_identity()))
}

/// For `n <= n_max`, `0 <= i <= i_max`, checks that the projection of
/// `[s, s_i]` to layer `n` has all coordinates in `D'`, equals `(ba)^2` at
/// position `d_n` (and is trivial elsewhere) when `d_n - 1 = i`, and is
/// trivial when `d_n - 1 > i`.
pub fn check_basis_lemma(gp: &GroupParams, n_max: usize, i_max: i64) -> Result<Report> {
    let mut witnesses = Vec::new();
    for n in 1..=n_max {
        let layer = gp.layer(n)?;
        let d = layer.d() as i64;
        for i in 0..=i_max {
            let c = Word::commutator(&Word::s(), &Word::s_i(i));
            let proj = LayerElement::project_word(&layer, &c)?;
            let derived = proj.shift() == 0 && proj.coords().iter().all(|x| x.in_derived());
            let exact = if d - 1 == i {
                proj.support_size() == 1 && proj.at(layer.d()) == DihedralElement::BA_SQUARED
            } else if d - 1 > i {
                proj.is_identity()
            } else {
                true
            };
            if !(derived && exact) {
                witnesses.push(c);
            }
        }
    }
    Ok(Report::new("basis", format!("n<={n_max},i<={i_max}"), witnesses))
}

/// Checks that `[s^2, s]` and `[s^2, t]` have trivial `Z`-coordinate and
/// trivial projections to every layer `n <= n_max`.
pub fn check_center(gp: &GroupParams, n_max: usize) -> Result<Report> {
    let s2 = Word::s().pow(2);
    let mut witnesses = Vec::new();
    for x in [Word::s(), Word::t()] {
        let c = s2.mul(&x).mul(&s2.inv()).mul(&x.inv());
        let mut ok = pi0(&c) == 0;
        for n in 1..=n_max {
            ok &= LayerElement::project_word(&gp.layer(n)?, &c)?.is_identity();
        }
        if !ok {
            witnesses.push(c);
        }
    }
    Ok(Report::new("center", format!("n<={n_max}"), witnesses))
}

/// Checks the relations of `C2 wr Z` among the images of `s` and `s_i`,
/// that `s^2` and `[s, s_i]` lie in the FC-center, and that the image of
/// `s_i` is not in the span of the images of `s_0, ..., s_{i-1}`.
pub fn check_quotient_relations(gp: &GroupParams, i_max: i64) -> Result<Report> {
    let mut witnesses = Vec::new();
    let s2 = Word::s().pow(2);
    if !quotient_image(&s2).is_identity() || fc_membership(&s2, gp)?.is_none() {
        witnesses.push(s2);
    }
    let mut span = Gf2Span::default();
    for i in 0..=i_max {
        let c = Word::commutator(&Word::s(), &Word::s_i(i));
        if !quotient_image(&c).is_identity() || fc_membership(&c, gp)?.is_none() {
            witnesses.push(c);
        }
        let image = quotient_image(&Word::s_i(i));
        if image.shift() != 0 || !span.insert(image.config().clone()) {
            witnesses.push(Word::s_i(i));
        }
    }
    Ok(Report::new("quotient", format!("i<={i_max}"), witnesses))
}

/// Runs the basis, center and quotient checks with the given ranges.
pub fn check_all(gp: &GroupParams, basis_n_max: usize, i_max: i64, center_n_max: usize, quotient_i_max: i64) -> Result<Vec<Report>> {
    Ok(vec![
        check_basis_lemma(gp, basis_n_max, i_max)?,
        check_center(gp, center_n_max)?,
        check_quotient_relations(gp, quotient_i_max)?,
    ])
}

/// Row-reduced basis of a subspace of finitely supported `Z -> C2` functions.
#[derive(Default)]
struct Gf2Span {
    // pivot (largest position) -> vector
    rows: std::collections::BTreeMap<i64, BTreeSet<i64>>,
}

impl Gf2Span {
    /// Adds `v`; returns false if it was already in the span.
    fn insert(&mut self, mut v: BTreeSet<i64>) -> bool {
        while let Some(&top) = v.last() {
            match self.rows.get(&top) {
                Some(row) => v = v.symmetric_difference(row).copied().collect(),
                None => {
                    self.rows.insert(top, v);
                    return true;
                }
            }
        }
        false
    }
}

/// Exhaustive search for elements of order 2 among cyclically reduced words
/// of length `<= max_len`, in lexicographic order `s < s^-1 < t < t^-1`.
///
/// Order is a conjugacy invariant and every word is conjugate to a cyclically
/// reduced word that is no longer, so the pruning keeps every witness up to
/// conjugacy. Each witness is re-verified with [`oracle_is_identity`].
pub fn torsion_search(gp: &GroupParams, max_len: usize, threads: Option<usize>) -> Result<Report> {
    torsion_search_with_alphabet(gp, max_len, Letter::ALL, threads)
}

/// [`torsion_search`] with a caller-chosen enumeration order. The witness
/// set does not depend on the order; the report lists witnesses in the
/// lexicographic order induced by `alphabet`.
pub fn torsion_search_with_alphabet(
    gp: &GroupParams,
    max_len: usize,
    alphabet: [Letter; 4],
    threads: Option<usize>,
) -> Result<Report> {
    if max_len == 0 {
        return Err(Error::InvalidParams("max_len must be at least 1".into()));
    }
    // top of the tree: all reduced prefixes of length <= 2
    let mut prefixes: Vec<Vec<Letter>> = Vec::new();
    for &a in &alphabet {
        prefixes.push(vec![a]);
        if max_len >= 2 {
            for &b in &alphabet {
                if b != a.inv() {
                    prefixes.push(vec![a, b]);
                }
            }
        }
    }
    let found = in_pool(threads, || {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut out = Vec::new();
                let mut buf = prefix.clone();
                // length-1 prefixes are leaves only; length-2 prefixes own their subtrees
                let descend = prefix.len() == 2;
                search_subtree(gp, &mut buf, max_len, &alphabet, descend, &mut out).map(|_| out)
            })
            .collect::<Result<Vec<_>>>()
    })??;

    let rank = |l: &Letter| alphabet.iter().position(|x| x == l).unwrap_or(0);
    let mut witnesses: Vec<Word> = found.into_iter().flatten().collect();
    witnesses.sort_by(|a, b| a.letters().iter().map(rank).cmp(b.letters().iter().map(rank)));

    for w in &witnesses {
        let confirmed = oracle_is_identity(&w.mul(w), gp, 10)? && !oracle_is_identity(w, gp, 10)?;
        if !confirmed {
            return Err(Error::Internal(format!("oracle rejects order-2 witness {w}")));
        }
    }
    Ok(Report::new("torsion-search", format!("max_len<={max_len}"), witnesses))
}

fn search_subtree(
    gp: &GroupParams,
    buf: &mut Vec<Letter>,
    max_len: usize,
    alphabet: &[Letter; 4],
    descend: bool,
    out: &mut Vec<Word>,
) -> Result<()> {
    let cyclically_reduced = buf.len() == 1 || buf[0] != buf[buf.len() - 1].inv();
    if cyclically_reduced {
        let w = Word::from_letters(buf.iter().copied());
        if order(&w, gp)? == Order::Two {
            out.push(w);
        }
    }
    if !descend || buf.len() >= max_len {
        return Ok(());
    }
    let last = buf[buf.len() - 1];
    for &l in alphabet {
        if l == last.inv() {
            continue;
        }
        buf.push(l);
        search_subtree(gp, buf, max_len, alphabet, true, out)?;
        buf.pop();
    }
    Ok(())
}
