#![allow(dead_code)]

use fcwreath::{Letter, Word};
use rand::Rng;

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]))
}

/// A random element of the kernel of `G -> C2 wr Z`, built from conjugated
/// commutators `t^c [s_i^e, s_j^f] t^-c`, squares `s_i^{±2}` and
/// conjugates of those by `s_l`, with all indices in `[lo, lo + span]`.
pub fn random_kernel_word(rng: &mut impl Rng, span: i64) -> Word {
    let lo = rng.gen_range(-5..=5);
    let idx = |rng: &mut dyn rand::RngCore| lo + rng.gen_range(0..=span);
    let sign = |rng: &mut dyn rand::RngCore| if rng.gen_bool(0.5) { 1 } else { -1 };
    let factors = rng.gen_range(1..=5);
    let mut w = Word::empty();
    for _ in 0..factors {
        let mut f = if rng.gen_bool(0.8) {
            let c = rng.gen_range(-3..=3);
            let i = idx(rng) - c;
            let j = idx(rng) - c;
            let inner = Word::commutator(&Word::s_i(i).pow(sign(rng)), &Word::s_i(j).pow(sign(rng)));
            let tc = Word::t().pow(c);
            tc.mul(&inner).mul(&tc.inv())
        } else {
            Word::s_i(idx(rng)).pow(2 * sign(rng))
        };
        if rng.gen_bool(0.3) {
            let l = Word::s_i(idx(rng));
            f = l.mul(&f).mul(&l.inv());
        }
        w = w.mul(&f);
    }
    w
}
