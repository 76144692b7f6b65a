//! Small numeric helpers: pairwise summation and nearest-rank percentiles.
//!
//! Ensemble statistics that end up in reports must be reproducible across
//! thread counts, so reductions happen on index-ordered vectors with pairwise
//! summation rather than in whatever order a parallel reduce would visit.

/// Pairwise (cascade) summation. Error grows as O(log n) instead of O(n),
/// and the result depends only on the slice contents, not on chunking.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    pairwise_sum(values) / values.len() as f64
}

/// Sample standard deviation (n - 1 denominator), pairwise-accumulated.
pub fn sample_std(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let sq: Vec<f64> = values.iter().map(|v| (v - m) * (v - m)).collect();
    (pairwise_sum(&sq) / (values.len() - 1) as f64).sqrt()
}

/// Sample variance (n - 1 denominator).
pub fn sample_variance(values: &[f64]) -> f64 {
    let s = sample_std(values);
    s * s
}

/// Nearest-rank percentile: the value at rank `ceil(p * n)` (1-based) of the
/// ascending sort. No interpolation, so the result is always an element of
/// `values` and identical across implementations.
pub fn percentile_nearest_rank(values: &[f64], p: f64) -> f64 {
    assert!(!values.is_empty(), "percentile of empty slice");
    assert!((0.0..=1.0).contains(&p), "percentile level out of range");
    let mut sorted: Vec<f64> = values.to_vec();
    // Stable merge sort with a total order keeps ties deterministic.
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len();
    let rank = ((p * n as f64).ceil() as usize).clamp(1, n);
    sorted[rank - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pairwise_sum_matches_naive_on_small_input() {
        let v: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 5050.0);
    }

    #[test]
    fn pairwise_sum_is_chunking_independent() {
        let v: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.1).sin() * 1e-3).collect();
        let total = pairwise_sum(&v);
        // Summing the same data after a round trip through halves must agree
        // bit-for-bit because the recursion splits at fixed midpoints.
        assert_eq!(total, pairwise_sum(&v.clone()));
    }

    #[test]
    fn sample_std_basic() {
        let v = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0];
        assert_relative_eq!(sample_std(&v), (32.0f64 / 7.0).sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn nearest_rank_1_to_100() {
        let v: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(percentile_nearest_rank(&v, 0.025), 3.0);
        assert_eq!(percentile_nearest_rank(&v, 0.975), 98.0);
        assert_eq!(percentile_nearest_rank(&v, 1.0), 100.0);
    }

    #[test]
    fn nearest_rank_matches_selection_oracle() {
        // Independent oracle: k-th smallest by repeated minimum extraction.
        fn kth_smallest(values: &[f64], k: usize) -> f64 {
            let mut pool = values.to_vec();
            let mut out = f64::NAN;
            for _ in 0..k {
                let (idx, _) = pool
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .unwrap();
                out = pool.swap_remove(idx);
            }
            out
        }

        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for n in [1usize, 7, 40, 173] {
            let v: Vec<f64> = (0..n).map(|_| next() * 10.0 - 5.0).collect();
            for p in [0.025, 0.5, 0.975] {
                let rank = ((p * n as f64).ceil() as usize).clamp(1, n);
                assert_eq!(
                    percentile_nearest_rank(&v, p),
                    kth_smallest(&v, rank),
                    "n={n} p={p}"
                );
            }
        }
    }
}
