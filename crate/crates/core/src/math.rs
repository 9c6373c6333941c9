//! Small numeric helpers shared across modules.

/// Compensated (Neumaier) accumulator.
///
/// Used wherever a sum feeds an identity that must hold to a few ulp,
/// e.g. the spectrum mass identity and the Plancherel checks. The
/// compensation keeps the result within O(1) ulp of the exact sum
/// independently of the number of terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of an iterator of f64.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for x in iter {
        acc.add(x);
    }
    acc.value()
}

/// Distance between two finite f64 in units of ulp of the larger magnitude.
pub fn ulp_distance(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        return 0.0;
    }
    (a - b).abs() / (scale * f64::EPSILON)
}

/// Relative difference |a - b| / max(|a|, |b|), zero when both vanish.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_handles_cancellation() {
        let mut s = NeumaierSum::new();
        s.add(1e16);
        s.add(1.0);
        s.add(-1e16);
        assert_eq!(s.value(), 1.0);
    }

    #[test]
    fn neumaier_matches_exact_on_positive_terms() {
        let xs: Vec<f64> = (1..=100_000).map(|i| 1.0 / i as f64).collect();
        let fwd = compensated_sum(xs.iter().copied());
        let rev = compensated_sum(xs.iter().rev().copied());
        assert!(ulp_distance(fwd, rev) <= 1.0);
    }

    #[test]
    fn ulp_distance_is_symmetric_and_small_for_neighbors() {
        let a = 1.0_f64;
        let b = f64::from_bits(a.to_bits() + 1);
        assert!(ulp_distance(a, b) <= 1.0);
        assert_eq!(ulp_distance(a, b), ulp_distance(b, a));
    }
}
