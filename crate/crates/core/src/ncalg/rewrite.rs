//! Normal-ordering rewriting for the sphere relations.
//!
//! The rule set straightens arbitrary words into the spanning monomials
//! `z4*^{n4} z3*^{n3} z2*^{n2} z1*^{n1} z1^{m1} z2^{m2} z3^{m3} z4^{m4}`
//! with `n4 m4 = 0`:
//!
//! - R1  `z_j z_i   -> q^-1 z_i z_j`          for j > i (plain pair)
//! - R2  `z_i* z_j* -> q^-1 z_j* z_i*`        for i < j (starred pair)
//! - R3  `z_i z_j*  -> q^-1 z_j* z_i`         for i != j
//! - R4  `z_k z_k*  -> z_k* z_k - (1-q^2) sum_{j<k} z_j z_j*`   for k <= 3
//! - R5  `z_4 z_4*  -> 1 - z_1 z_1* - z_2 z_2* - z_3 z_3*`
//! - R6  `z_4* W z_4 -> q^{|W|} (1 - q^2 sum_{j<4} z_j z_j*) W`
//!   whenever the letters of `W` avoid `z_4` and `z_4*` (each such letter
//!   satisfies `l z_4 = q z_4 l`).
//!
//! Reduction terminates for any strategy; the default deterministic strategy
//! is leftmost-innermost. Strategy independence (confluence on the supported
//! relations) is exercised by randomized tests rather than assumed.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::QRational;

use super::monomial::{Letter, NormalMonomial, Word};

/// How the next redex is picked while reducing a word.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Deterministic default: smallest redex position, preferring adjacent
    /// rules before the long-range contraction R6.
    LeftmostInnermost,
    /// Uniformly random redex choice, driven by the seed.
    Random(u64),
}

/// Counters from one reduction run.
#[derive(Clone, Copy, Debug, Default)]
pub struct RewriteStats {
    /// Number of rule applications.
    pub steps: usize,
}

#[derive(Clone, Debug)]
enum Redex {
    Adjacent(usize),
    /// `Contract(p, r)`: positions of a `z4*`/`z4` pair with only
    /// non-`z4`-type letters strictly between.
    Contract(usize, usize),
}

fn find_redexes(w: &Word) -> Vec<Redex> {
    let letters = &w.0;
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (x, y) = (letters[i], letters[i + 1]);
        let reducible = match (x.starred, y.starred) {
            (false, false) => x.index > y.index,
            (true, true) => x.index < y.index,
            (false, true) => true, // R3 (i != j) or R4/R5 (i == j)
            (true, false) => false,
        };
        if reducible {
            out.push(Redex::Adjacent(i));
        }
    }
    // Long-range z4* ... z4 pairs.
    for p in 0..letters.len() {
        if letters[p] != Letter::z_star(4) {
            continue;
        }
        for r in p + 1..letters.len() {
            if letters[r].index == 4 {
                if !letters[r].starred {
                    out.push(Redex::Contract(p, r));
                }
                break; // nearer z4-type letter shadows anything beyond
            }
        }
    }
    out
}

/// Applies one rule at the redex, returning the replacement terms.
fn apply_redex(w: &Word, redex: &Redex) -> Vec<(QRational, Word)> {
    let letters = &w.0;
    match *redex {
        Redex::Adjacent(i) => {
            let (x, y) = (letters[i], letters[i + 1]);
            match (x.starred, y.starred) {
                (false, true) if x.index == y.index => {
                    if x.index == 4 {
                        // R5
                        let mut terms = vec![(QRational::one(), splice(w, i, &[]))];
                        for j in 1..=3u8 {
                            terms.push((
                                QRational::from_integer(-1),
                                splice(w, i, &[Letter::z(j), Letter::z_star(j)]),
                            ));
                        }
                        terms
                    } else {
                        // R4
                        let k = x.index;
                        let mut terms = vec![(
                            QRational::one(),
                            splice(w, i, &[Letter::z_star(k), Letter::z(k)]),
                        )];
                        let c = QRational::one_minus_q_pow(2).neg();
                        for j in 1..k {
                            terms.push((
                                c.clone(),
                                splice(w, i, &[Letter::z(j), Letter::z_star(j)]),
                            ));
                        }
                        terms
                    }
                }
                _ => {
                    // R1/R2/R3: swap with a factor q^-1
                    let mut v = letters.clone();
                    v.swap(i, i + 1);
                    vec![(QRational::q_power(-1), Word(v))]
                }
            }
        }
        Redex::Contract(p, r) => {
            let mid_len = (r - p - 1) as i64;
            let mut base: Vec<Letter> = Vec::with_capacity(letters.len() - 2);
            base.extend_from_slice(&letters[..p]);
            let tail: Vec<Letter> = letters[p + 1..r]
                .iter()
                .chain(letters[r + 1..].iter())
                .copied()
                .collect();
            let mut terms = Vec::with_capacity(4);
            let mut plain = base.clone();
            plain.extend_from_slice(&tail);
            terms.push((QRational::q_power(mid_len), Word(plain)));
            for j in 1..=3u8 {
                let mut v = base.clone();
                v.push(Letter::z(j));
                v.push(Letter::z_star(j));
                v.extend_from_slice(&tail);
                terms.push((QRational::q_power(mid_len + 2).neg(), Word(v)));
            }
            terms
        }
    }
}

fn splice(w: &Word, i: usize, repl: &[Letter]) -> Word {
    let mut v = Vec::with_capacity(w.0.len() - 2 + repl.len());
    v.extend_from_slice(&w.0[..i]);
    v.extend_from_slice(repl);
    v.extend_from_slice(&w.0[i + 2..]);
    Word(v)
}

/// Reduces a linear combination of words to normal form.
pub struct Rewriter {
    rng: Option<ChaCha8Rng>,
    step_limit: usize,
    pub stats: RewriteStats,
}

impl Rewriter {
    pub fn new(strategy: &Strategy) -> Self {
        let rng = match strategy {
            Strategy::LeftmostInnermost => None,
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        };
        Rewriter { rng, step_limit: 100_000_000, stats: RewriteStats::default() }
    }

    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = limit;
        self
    }

    /// Normal form of a single word as a map monomial -> coefficient.
    pub fn reduce_word(&mut self, w: &Word) -> BTreeMap<NormalMonomial, QRational> {
        self.reduce_terms(vec![(QRational::one(), w.clone())])
    }

    pub fn reduce_terms(
        &mut self,
        terms: Vec<(QRational, Word)>,
    ) -> BTreeMap<NormalMonomial, QRational> {
        let mut pending: BTreeMap<Word, QRational> = BTreeMap::new();
        for (c, w) in terms {
            accumulate_word(&mut pending, w, c);
        }
        let mut result: BTreeMap<NormalMonomial, QRational> = BTreeMap::new();
        while let Some(word) = self.pick_pending(&pending) {
            let coeff = pending.remove(&word).expect("picked key exists");
            if coeff.is_zero() {
                continue;
            }
            let redexes = find_redexes(&word);
            if redexes.is_empty() {
                let m = NormalMonomial::from_normal_word(&word)
                    .expect("redex-free word is normal");
                accumulate(&mut result, m, coeff);
                continue;
            }
            let redex = self.pick_redex(&redexes);
            self.stats.steps += 1;
            assert!(
                self.stats.steps <= self.step_limit,
                "rewrite step limit exceeded; possible divergence"
            );
            for (factor, w2) in apply_redex(&word, redex) {
                accumulate_word(&mut pending, w2, coeff.mul(&factor));
            }
        }
        result.retain(|_, c| !c.is_zero());
        result
    }

    fn pick_pending(&mut self, pending: &BTreeMap<Word, QRational>) -> Option<Word> {
        if pending.is_empty() {
            return None;
        }
        match &mut self.rng {
            None => pending.keys().next().cloned(),
            Some(rng) => {
                let i = rng.gen_range(0..pending.len());
                pending.keys().nth(i).cloned()
            }
        }
    }

    fn pick_redex<'a>(&mut self, redexes: &'a [Redex]) -> &'a Redex {
        match &mut self.rng {
            None => &redexes[0],
            Some(rng) => &redexes[rng.gen_range(0..redexes.len())],
        }
    }
}

fn accumulate(map: &mut BTreeMap<NormalMonomial, QRational>, key: NormalMonomial, c: QRational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(QRational::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        map.remove(&key);
    }
}

fn accumulate_word(map: &mut BTreeMap<Word, QRational>, key: Word, c: QRational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key.clone()).or_insert_with(QRational::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        map.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reduce(letters: Vec<Letter>) -> BTreeMap<NormalMonomial, QRational> {
        Rewriter::new(&Strategy::LeftmostInnermost).reduce_word(&Word(letters))
    }

    #[test]
    fn plain_swap() {
        // z2 z1 -> q^-1 z1 z2
        let r = reduce(vec![Letter::z(2), Letter::z(1)]);
        assert_eq!(r.len(), 1);
        let m = NormalMonomial::new([0; 4], [1, 1, 0, 0]);
        assert_eq!(r[&m], QRational::q_power(-1));
    }

    #[test]
    fn z1_pair_commutes() {
        // z1 z1* -> z1* z1
        let r = reduce(vec![Letter::z(1), Letter::z_star(1)]);
        let m = NormalMonomial::new([1, 0, 0, 0], [1, 0, 0, 0]);
        assert_eq!(r.len(), 1);
        assert!(r[&m].is_one());
    }

    #[test]
    fn z4_z4star_sphere_relation() {
        // z4 z4* = 1 - q^4 z1* z1 - q^2 z2* z2 - z3* z3
        let r = reduce(vec![Letter::z(4), Letter::z_star(4)]);
        let unit = NormalMonomial::unit();
        assert!(r[&unit].is_one());
        let m1 = NormalMonomial::new([1, 0, 0, 0], [1, 0, 0, 0]);
        let m2 = NormalMonomial::new([0, 1, 0, 0], [0, 1, 0, 0]);
        let m3 = NormalMonomial::new([0, 0, 1, 0], [0, 0, 1, 0]);
        assert_eq!(r[&m1], QRational::q_power(4).neg());
        assert_eq!(r[&m2], QRational::q_power(2).neg());
        assert_eq!(r[&m3], QRational::from_integer(-1));
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn z4star_z4_contraction() {
        // z4* z4 = 1 - q^6 z1* z1 - q^4 z2* z2 - q^2 z3* z3
        let r = reduce(vec![Letter::z_star(4), Letter::z(4)]);
        let unit = NormalMonomial::unit();
        assert!(r[&unit].is_one());
        let m1 = NormalMonomial::new([1, 0, 0, 0], [1, 0, 0, 0]);
        let m3 = NormalMonomial::new([0, 0, 1, 0], [0, 0, 1, 0]);
        assert_eq!(r[&m1], QRational::q_power(6).neg());
        assert_eq!(r[&m3], QRational::q_power(2).neg());
    }

    #[test]
    fn long_range_contraction_picks_up_commutation_factor() {
        // z4* z1 z4 = q (z4* z4) z1 = q (1 - q^2 sum z_j z_j*) z1
        let r = reduce(vec![Letter::z_star(4), Letter::z(1), Letter::z(4)]);
        let z1 = NormalMonomial::new([0; 4], [1, 0, 0, 0]);
        assert_eq!(r[&z1], QRational::q_power(1));
    }
}
