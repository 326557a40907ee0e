//! Letters, free words, and normal-ordered monomials of the quantum 7-sphere
//! algebra.

use std::fmt;

/// A single generator `z_i` or its adjoint `z_i*`, with `index` in 1..=4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub index: u8,
    pub starred: bool,
}

impl Letter {
    pub fn new(index: u8, starred: bool) -> Self {
        assert!((1..=4).contains(&index), "generator index out of range");
        Letter { index, starred }
    }

    pub fn z(index: u8) -> Self {
        Self::new(index, false)
    }

    pub fn z_star(index: u8) -> Self {
        Self::new(index, true)
    }

    pub fn adjoint(self) -> Self {
        Letter { starred: !self.starred, ..self }
    }

    /// Circle weight of the twistor action: `z_1, z_4` carry +1 and
    /// `z_2, z_3` carry -1; adjoints negate.
    pub fn mu_weight(self) -> i64 {
        let base = match self.index {
            1 | 4 => 1,
            _ => -1,
        };
        if self.starred {
            -base
        } else {
            base
        }
    }

    /// Gauge weight: +1 per plain generator, -1 per adjoint.
    pub fn gauge_weight(self) -> i64 {
        if self.starred {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}{}", self.index, if self.starred { "'" } else { "" })
    }
}

/// A word in the free *-monoid on the generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.adjoint()).collect())
    }

    pub fn mu_weight(&self) -> i64 {
        self.0.iter().map(|l| l.mu_weight()).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// A normal-ordered monomial
/// `z4*^{n4} z3*^{n3} z2*^{n2} z1*^{n1} z1^{m1} z2^{m2} z3^{m3} z4^{m4}`.
///
/// `star[i-1] = n_i`, `unstar[i-1] = m_i`. The sphere relation eliminates
/// simultaneous `z4*`/`z4` powers, so `n4 * m4 = 0` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NormalMonomial {
    pub star: [u32; 4],
    pub unstar: [u32; 4],
}

impl NormalMonomial {
    pub fn new(star: [u32; 4], unstar: [u32; 4]) -> Self {
        assert!(
            star[3] == 0 || unstar[3] == 0,
            "normal monomial cannot carry both z4* and z4"
        );
        NormalMonomial { star, unstar }
    }

    pub fn unit() -> Self {
        NormalMonomial::default()
    }

    pub fn is_unit(&self) -> bool {
        self.star == [0; 4] && self.unstar == [0; 4]
    }

    pub fn degree(&self) -> u32 {
        self.star.iter().sum::<u32>() + self.unstar.iter().sum::<u32>()
    }

    pub fn adjoint(&self) -> Self {
        NormalMonomial { star: self.unstar, unstar: self.star }
    }

    pub fn mu_weight(&self) -> i64 {
        let mut w = 0i64;
        for i in 0..4 {
            let base: i64 = if i == 0 || i == 3 { 1 } else { -1 };
            w += base * (self.unstar[i] as i64 - self.star[i] as i64);
        }
        w
    }

    pub fn gauge_weight(&self) -> i64 {
        (self.unstar.iter().sum::<u32>() as i64) - (self.star.iter().sum::<u32>() as i64)
    }

    /// True when some killed generator occurs (starred or not).
    pub fn touches(&self, kill: &[u8]) -> bool {
        kill.iter().any(|&i| {
            let i = (i - 1) as usize;
            self.star[i] > 0 || self.unstar[i] > 0
        })
    }

    /// The word spelling of the monomial in its defining order.
    pub fn to_word(&self) -> Word {
        let mut v = Vec::with_capacity(self.degree() as usize);
        for i in (0..4).rev() {
            for _ in 0..self.star[i] {
                v.push(Letter::z_star(i as u8 + 1));
            }
        }
        for i in 0..4 {
            for _ in 0..self.unstar[i] {
                v.push(Letter::z(i as u8 + 1));
            }
        }
        Word(v)
    }

    /// Recognizes a word already in normal order (stars by descending index,
    /// then plain letters by ascending index, no simultaneous z4*/z4).
    pub fn from_normal_word(w: &Word) -> Option<Self> {
        let mut star = [0u32; 4];
        let mut unstar = [0u32; 4];
        let mut pos = 0usize;
        let letters = &w.0;
        let mut prev: Option<u8> = None;
        while pos < letters.len() && letters[pos].starred {
            let idx = letters[pos].index;
            if let Some(p) = prev {
                if idx > p {
                    return None;
                }
            }
            prev = Some(idx);
            star[(idx - 1) as usize] += 1;
            pos += 1;
        }
        prev = None;
        while pos < letters.len() {
            let l = letters[pos];
            if l.starred {
                return None;
            }
            if let Some(p) = prev {
                if l.index < p {
                    return None;
                }
            }
            prev = Some(l.index);
            unstar[(l.index - 1) as usize] += 1;
            pos += 1;
        }
        if star[3] > 0 && unstar[3] > 0 {
            return None;
        }
        Some(NormalMonomial { star, unstar })
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        write!(f, "{}", self.to_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_of_normal_monomial_is_normal() {
        let m = NormalMonomial::new([1, 0, 2, 0], [3, 1, 0, 2]);
        let a = m.adjoint();
        assert_eq!(a.star, [3, 1, 0, 2]);
        assert_eq!(a.unstar, [1, 0, 2, 0]);
        assert_eq!(a.adjoint(), m);
    }

    #[test]
    fn word_round_trip() {
        let m = NormalMonomial::new([1, 2, 0, 1], [0, 0, 3, 0]);
        assert_eq!(NormalMonomial::from_normal_word(&m.to_word()), Some(m));
        // z1 z1* is not normal
        let w = Word(vec![Letter::z(1), Letter::z_star(1)]);
        assert_eq!(NormalMonomial::from_normal_word(&w), None);
    }

    #[test]
    fn weights() {
        // z1 z2 has mu-weight 0, z1 z1* gauge weight 0
        let w = Word(vec![Letter::z(1), Letter::z(2)]);
        assert_eq!(w.mu_weight(), 0);
        let m = NormalMonomial::new([1, 0, 0, 0], [1, 0, 0, 0]);
        assert_eq!(m.gauge_weight(), 0);
        assert_eq!(m.mu_weight(), 0);
        let z1 = NormalMonomial::new([0; 4], [1, 0, 0, 0]);
        assert_eq!(z1.mu_weight(), 1);
    }
}
