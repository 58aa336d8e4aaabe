//! Time-series container and rank (pseudo-observation) computation.

use crate::error::{Error, Result};

/// An observed real-valued time series X_0, ..., X_{n-1}.
///
/// Immutable after construction; every entry is finite and n >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    observations: Vec<f64>,
}

impl TimeSeries {
    pub fn new(observations: Vec<f64>) -> Result<Self> {
        if observations.len() < 2 {
            return Err(Error::InvalidSeries(format!(
                "need at least 2 observations, got {}",
                observations.len()
            )));
        }
        if let Some((t, x)) = observations.iter().enumerate().find(|(_, x)| !x.is_finite()) {
            return Err(Error::InvalidSeries(format!("non-finite observation {x} at index {t}")));
        }
        Ok(Self { observations })
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.observations
    }

    /// Series obtained by taking `self[positions[t]]` for each t.
    pub fn resampled(&self, positions: &[usize]) -> TimeSeries {
        let obs = positions.iter().map(|&p| self.observations[p]).collect();
        TimeSeries { observations: obs }
    }
}

/// Ranks r_t = #{s : X_s <= X_t}; ties receive their maximal rank.
///
/// Equivalently n * Fhat_n(X_t) for the empirical distribution function
/// Fhat_n(x) = n^{-1} sum_t I{X_t <= x}, so ranks run in 1..=n.
pub fn empirical_ranks(series: &TimeSeries) -> Vec<usize> {
    let xs = series.values();
    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.iter()
        .map(|&x| sorted.partition_point(|&s| s <= x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(xs: &[f64]) -> TimeSeries {
        TimeSeries::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn rejects_short_and_nonfinite() {
        assert!(TimeSeries::new(vec![1.0]).is_err());
        assert!(TimeSeries::new(vec![1.0, f64::NAN]).is_err());
        assert!(TimeSeries::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(TimeSeries::new(vec![0.0, 0.0]).is_ok());
    }

    #[test]
    fn ranks_of_distinct_values() {
        assert_eq!(empirical_ranks(&ts(&[3.0, 1.0, 2.0, 0.0])), vec![4, 2, 3, 1]);
    }

    #[test]
    fn ties_take_maximal_rank() {
        assert_eq!(empirical_ranks(&ts(&[1.0, 1.0])), vec![2, 2]);
        assert_eq!(empirical_ranks(&ts(&[5.0, -2.0, 5.0, 0.0])), vec![4, 1, 4, 2]);
    }

    #[test]
    fn ranks_against_counting_oracle() {
        let xs = [0.3, -1.2, 0.3, 7.0, -1.2, 0.0, 2.5, 0.3];
        let series = ts(&xs);
        let expected: Vec<usize> = xs
            .iter()
            .map(|&xt| xs.iter().filter(|&&xs_| xs_ <= xt).count())
            .collect();
        assert_eq!(empirical_ranks(&series), expected);
    }
}
