use crate::error::{Error, Result};

/// Ordered block sizes `a_1, ..., a_m`, each at least 1.
///
/// Block sizes of equal runs of a partition give the signature of a parabolic
/// subgroup and the factors `GL_{a_i}` of its Levi factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    blocks: Vec<u32>,
}

impl Composition {
    pub fn new(blocks: Vec<u32>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidComposition(blocks));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn rank(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// Partial sums `offset, offset + a_1, ..., offset + rank`.
    pub fn cumulative(&self, offset: u32) -> Vec<u32> {
        std::iter::once(offset)
            .chain(self.blocks.iter().scan(offset, |acc, &a| {
                *acc += a;
                Some(*acc)
            }))
            .collect()
    }
}

/// Finite part `(λ_{r-k+1}, ..., λ_r)` of an orbit index `λ` whose first
/// `r - k` entries are infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionTail {
    r: u32,
    k: u32,
    entries: Vec<u32>,
}

impl PartitionTail {
    pub fn new(r: u32, k: u32, entries: Vec<u32>) -> Result<Self> {
        let ok = k <= r && entries.len() == k as usize && entries.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartitionTail { r, k, entries });
        }
        Ok(Self { r, k, entries })
    }

    pub fn zero(r: u32, k: u32) -> Self {
        Self::new(r, k, vec![0; k as usize]).expect("zero tail is valid")
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn largest(&self) -> u32 {
        self.entries.first().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&x| x as u64).sum()
    }

    /// Pairs `(i, λ_i)` with the absolute matrix position `i` running over
    /// `r-k+1, ..., r`.
    pub fn indexed(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let first = self.r - self.k + 1;
        self.entries
            .iter()
            .enumerate()
            .map(move |(j, &v)| (first + j as u32, v))
    }

    /// Block sizes of the equal runs (a trailing zero run is a block of its
    /// own) and the cumulative list starting at `i_0 = r - k`.
    pub fn composition(&self) -> (Composition, Vec<u32>) {
        let mut blocks: Vec<u32> = Vec::new();
        let mut prev = None;
        for &v in &self.entries {
            if prev == Some(v) {
                *blocks.last_mut().expect("run started") += 1;
            } else {
                blocks.push(1);
                prev = Some(v);
            }
        }
        let comp = Composition { blocks };
        let cumulative = comp.cumulative(self.r - self.k);
        (comp, cumulative)
    }
}

/// All weakly decreasing tuples of length `len` with entries in `0..=max`, in
/// colexicographic order starting from the zero tuple.
#[derive(Clone, Debug)]
pub struct DecreasingTuples {
    max: u32,
    current: Option<Vec<u32>>,
}

impl DecreasingTuples {
    pub fn new(len: usize, max: u32) -> Self {
        Self {
            max,
            current: Some(vec![0; len]),
        }
    }
}

impl Iterator for DecreasingTuples {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut nxt = out.clone();
        // Rightmost entry that can still grow without breaking monotonicity.
        let pos = (0..nxt.len()).rev().find(|&i| {
            let cap = if i == 0 { self.max } else { nxt[i - 1] };
            nxt[i] < cap
        });
        if let Some(i) = pos {
            nxt[i] += 1;
            for v in &mut nxt[i + 1..] {
                *v = 0;
            }
            self.current = Some(nxt);
        }
        Some(out)
    }
}

/// Weakly decreasing tuples of length `len` summing to `n` (zeros allowed).
pub fn partitions_of(n: u32, len: usize) -> impl Iterator<Item = Vec<u32>> {
    let max = if len == 0 { 0 } else { n };
    DecreasingTuples::new(len, max).filter(move |t| t.iter().sum::<u32>() == n)
}

/// Binomial coefficient as `u128`; small arguments only.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_of_documented_example() {
        let t = PartitionTail::new(5, 5, vec![3, 3, 1, 1, 0]).unwrap();
        let (c, cum) = t.composition();
        assert_eq!(c.blocks(), &[2, 2, 1]);
        assert_eq!(cum, vec![0, 2, 4, 5]);
    }

    #[test]
    fn composition_of_constant_tail() {
        let (c, cum) = PartitionTail::zero(6, 4).composition();
        assert_eq!(c.blocks(), &[4]);
        assert_eq!(cum, vec![2, 6]);
    }

    #[test]
    fn composition_of_strict_tail() {
        let t = PartitionTail::new(3, 2, vec![2, 1]).unwrap();
        let (c, cum) = t.composition();
        assert_eq!(c.blocks(), &[1, 1]);
        assert_eq!(cum, vec![1, 2, 3]);
    }

    #[test]
    fn invalid_tails_and_compositions() {
        assert!(PartitionTail::new(3, 2, vec![1, 2]).is_err());
        assert!(PartitionTail::new(3, 2, vec![1]).is_err());
        assert!(PartitionTail::new(2, 3, vec![0, 0, 0]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Composition::new(vec![]).unwrap().rank(), 0);
    }

    #[test]
    fn tuple_enumeration_counts() {
        // weakly decreasing len-tuples bounded by max: C(max + len, len)
        for len in 0..5usize {
            for max in 0..6u32 {
                let all: Vec<_> = DecreasingTuples::new(len, max).collect();
                assert_eq!(
                    all.len() as u128,
                    binomial(max as u64 + len as u64, len as u64)
                );
                assert!(all.iter().all(|t| t.windows(2).all(|w| w[0] >= w[1])));
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }

    #[test]
    fn partitions_into_bounded_parts() {
        // partitions of 6 into at most 3 parts: 7
        assert_eq!(partitions_of(6, 3).count(), 7);
        assert_eq!(partitions_of(0, 4).collect::<Vec<_>>(), vec![vec![0; 4]]);
        assert_eq!(partitions_of(3, 0).count(), 0);
        assert_eq!(partitions_of(0, 0).count(), 1);
    }
}
