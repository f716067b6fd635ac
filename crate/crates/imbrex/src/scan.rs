//! Scan policies for the checkers: exhaustive on desk-scale geometries,
//! deterministic seeded sampling above a point-count threshold.

/// Default point-count threshold separating exhaustive from sampled scans.
pub const EXHAUSTIVE_THRESHOLD: usize = 500;

/// Default number of sampled cases for large geometries.
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Debug, Clone, Copy)]
pub struct ScanPolicy {
    /// Geometries with at most this many points are scanned exhaustively.
    pub exhaustive_threshold: usize,
    /// Number of sampled cases above the threshold.
    pub samples: u64,
    /// Seed for the deterministic sampler; recorded so failures replay.
    pub seed: u64,
    /// Collect every witness instead of short-circuiting on the first.
    pub collect_all: bool,
}

impl Default for ScanPolicy {
    fn default() -> Self {
        ScanPolicy {
            exhaustive_threshold: EXHAUSTIVE_THRESHOLD,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            collect_all: false,
        }
    }
}

impl ScanPolicy {
    pub fn exhaustive() -> ScanPolicy {
        ScanPolicy {
            exhaustive_threshold: usize::MAX,
            ..ScanPolicy::default()
        }
    }

    pub fn sampled(samples: u64, seed: u64) -> ScanPolicy {
        ScanPolicy {
            exhaustive_threshold: 0,
            samples,
            seed,
            collect_all: false,
        }
    }

    pub fn is_exhaustive(&self, point_count: usize) -> bool {
        point_count <= self.exhaustive_threshold
    }

    pub fn rng(&self) -> SplitMix64 {
        SplitMix64::new(self.seed)
    }
}

/// SplitMix64: a tiny deterministic generator, identical on every
/// platform, so recorded seeds replay sampled scans exactly.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough index in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(0);
        let mut b = SplitMix64::new(0);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        // fixed reference value so cross-platform drift would be caught
        assert_eq!(SplitMix64::new(0).next_u64(), 0xe220a8397b1dcdaf);
    }
}
