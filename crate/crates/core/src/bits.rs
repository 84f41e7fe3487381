//! Fixed-length bitsets backed by `u64` words.
//!
//! Used both for hypothesis label rows (one bit per pool point) and for
//! version spaces (one bit per hypothesis row), so that restriction and
//! unanimity checks run word-parallel.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![!0u64; len.div_ceil(WORD)],
        };
        b.mask_tail();
        b
    }

    // Keep bits beyond `len` zero so Eq/Hash stay canonical.
    fn mask_tail(&mut self) {
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * WORD + bit)
                }
            })
        })
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromIterator<bool> for Bits {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let values: Vec<bool> = iter.into_iter().collect();
        let mut b = Bits::zeros(values.len());
        for (i, v) in values.into_iter().enumerate() {
            if v {
                b.set(i, true);
            }
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = Bits::zeros(70);
        a.set(0, true);
        a.set(69, true);
        assert!(a.get(0) && a.get(69) && !a.get(1));
        assert_eq!(a.count_ones(), 2);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(a.first_one(), Some(0));

        let ones = Bits::ones(70);
        assert_eq!(ones.count_ones(), 70);
        assert!(a.is_subset(&ones));
        assert!(!ones.is_subset(&a));
        assert_eq!(ones.and(&a), a);
        assert_eq!(ones.and_not(&a).count_ones(), 68);
        assert!(ones.and_not(&a).iter_ones().all(|i| i != 0 && i != 69));
    }

    #[test]
    fn tail_bits_stay_canonical() {
        let a = Bits::ones(65);
        let mut b = Bits::zeros(65);
        for i in 0..65 {
            b.set(i, true);
        }
        assert_eq!(a, b);
        assert_eq!(a.count_ones(), 65);
    }

    #[test]
    fn empty_set() {
        let a = Bits::zeros(10);
        assert!(a.is_empty());
        assert_eq!(a.first_one(), None);
        assert_eq!(a.iter_ones().count(), 0);
    }
}
