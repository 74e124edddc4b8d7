//! Streaming statistics: Welford mean/variance accumulation with parallel
//! merge, and Neumaier compensated summation.

/// Single-pass mean and variance accumulator (Welford's algorithm).
///
/// Stores the running mean and the sum of squared deviations `m2`, so a
/// million-realization ensemble needs O(1) memory per tracked quantity.
/// Two accumulators over disjoint samples combine with [`Welford::merge`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Welford {
    pub fn new() -> Self {
        Self::default()
    }

    /// Folds one observation into the accumulator.
    pub fn push(&mut self, value: f64) {
        self.count += 1;
        let delta = value - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (value - self.mean);
    }

    /// Folds another accumulator over a disjoint sample into this one
    /// (Chan et al. update).
    pub fn merge(&mut self, other: &Welford) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let na = self.count as f64;
        let nb = other.count as f64;
        let n = count as f64;
        self.mean += delta * (nb / n);
        self.m2 += other.m2 + delta * delta * (na * nb / n);
        self.count = count;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Sample mean; NaN when no observations have been folded in.
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            f64::NAN
        } else {
            self.mean
        }
    }

    /// Unbiased sample variance; NaN below two observations.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            f64::NAN
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    /// Standard error of the mean; NaN below two observations.
    pub fn sem(&self) -> f64 {
        if self.count < 2 {
            f64::NAN
        } else {
            crate::float::sqrt(self.variance() / self.count as f64)
        }
    }
}

/// Neumaier compensated summation.
///
/// Keeps a correction term for the low-order bits lost when adding values of
/// very different magnitude, so edge sums over large graphs stay accurate to
/// a few ulps regardless of accumulation order.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if crate::float::abs(self.sum) >= crate::float::abs(value) {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
