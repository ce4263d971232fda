//! Wavelet matrix over the `P(n)` sequence: counts how many of the first
//! `x` entries are `<= y` in `O(log max P)` per query.

#[derive(Debug, Clone)]
struct RankBits {
    words: Vec<u64>,
    // Number of ones before each word.
    before: Vec<u32>,
}

impl RankBits {
    fn from_bits(bits: impl Iterator<Item = bool>, len: usize) -> Self {
        let mut words = vec![0u64; len / 64 + 1];
        for (i, b) in bits.enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut before = Vec::with_capacity(words.len());
        let mut acc = 0u32;
        for w in &words {
            before.push(acc);
            acc += w.count_ones();
        }
        RankBits { words, before }
    }

    /// Ones in positions `[0, i)`.
    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let (w, b) = (i / 64, i % 64);
        let mask = if b == 0 { 0 } else { u64::MAX >> (64 - b) };
        self.before[w] as usize + (self.words[w] & mask).count_ones() as usize
    }
}

#[derive(Debug, Clone)]
pub struct PsiIndex {
    levels: Vec<RankBits>,
    zeros: Vec<usize>,
    width: u32,
    len: usize,
}

impl PsiIndex {
    pub fn new(values: &[u32]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let width = 32 - max.leading_zeros();
        let len = values.len();
        let mut cur = values.to_vec();
        let mut levels = Vec::with_capacity(width as usize);
        let mut zeros = Vec::with_capacity(width as usize);
        for level in 0..width {
            let b = width - 1 - level;
            let bits = RankBits::from_bits(cur.iter().map(|v| (v >> b) & 1 == 1), len);
            let (z, o): (Vec<u32>, Vec<u32>) = cur.iter().partition(|&&v| (v >> b) & 1 == 0);
            zeros.push(z.len());
            levels.push(bits);
            cur = z;
            cur.extend(o);
        }
        PsiIndex { levels, zeros, width, len }
    }

    /// Number of entries among the first `prefix` whose value is `<= y`.
    pub fn count_le(&self, prefix: usize, y: u64) -> u64 {
        let prefix = prefix.min(self.len);
        let bound = y.saturating_add(1);
        if self.width == 0 || bound >= 1u64 << self.width {
            return prefix as u64;
        }
        let (mut l, mut r) = (0usize, prefix);
        let mut acc = 0usize;
        for (level, bits) in self.levels.iter().enumerate() {
            let b = self.width - 1 - level as u32;
            let (l1, r1) = (bits.rank1(l), bits.rank1(r));
            let (l0, r0) = (l - l1, r - r1);
            if (bound >> b) & 1 == 1 {
                acc += r0 - l0;
                l = self.zeros[level] + l1;
                r = self.zeros[level] + r1;
            } else {
                l = l0;
                r = r0;
            }
        }
        acc as u64
    }
}
