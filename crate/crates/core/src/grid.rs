//! Fourier frequency grid, frequency folding, and level grids.

use crate::error::{Error, Result};

use std::f64::consts::PI;

const TAU: f64 = 2.0 * PI;

/// Relative tolerance for matching a frequency to the grid, in units of the
/// grid spacing 2*pi/n.
const FREQ_TOL: f64 = 1e-8;

/// Tolerance for matching user-supplied levels against stored ones.
pub(crate) const LEVEL_TOL: f64 = 1e-12;

/// The Fourier frequencies omega_s = 2*pi*s/n, s = 0..=floor(n/2), of a
/// length-n series. Values beyond pi are reachable through folding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierGrid {
    n: usize,
}

impl FourierGrid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "grid needs n >= 2");
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored frequencies, floor(n/2) + 1.
    pub fn len(&self) -> usize {
        self.n / 2 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn frequency(&self, s: usize) -> f64 {
        TAU * s as f64 / self.n as f64
    }

    /// All stored frequencies in [0, pi].
    pub fn frequencies(&self) -> Vec<f64> {
        (0..self.len()).map(|s| self.frequency(s)).collect()
    }
}

/// Match a frequency to its grid index in [0, n) after reduction modulo 2*pi.
pub fn grid_index(omega: f64, n: usize) -> Result<usize> {
    let spacing = TAU / n as f64;
    let steps = omega / spacing;
    let nearest = steps.round();
    if (steps - nearest).abs() > FREQ_TOL {
        return Err(Error::NonFourierFrequency { omega, n });
    }
    Ok((nearest as i64).rem_euclid(n as i64) as usize)
}

/// Reduce an arbitrary frequency onto the stored grid index in [0, floor(n/2)].
///
/// Returns `(s, conjugate)`: the frequency is first reduced modulo 2*pi; if
/// the result exceeds pi the mirror index n - s is returned with
/// `conjugate = true`, exploiting d(omega) = conj(d(2*pi - omega)) and
/// d(omega) = d(omega + 2*pi*j).
pub fn fold_frequency(omega: f64, n: usize) -> Result<(usize, bool)> {
    let s = grid_index(omega, n)?;
    if s <= n / 2 {
        Ok((s, false))
    } else {
        Ok((n - s, true))
    }
}

/// The level sets (tau_1, tau_2) of a quantile spectral quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelGrid {
    levels1: Vec<f64>,
    levels2: Vec<f64>,
}

impl LevelGrid {
    /// Both level axes equal (the common case).
    pub fn symmetric(levels: Vec<f64>) -> Result<Self> {
        Self::new(levels.clone(), levels)
    }

    pub fn new(levels1: Vec<f64>, levels2: Vec<f64>) -> Result<Self> {
        validate_sorted(&levels1)?;
        validate_sorted(&levels2)?;
        Ok(Self { levels1, levels2 })
    }

    pub fn levels1(&self) -> &[f64] {
        &self.levels1
    }

    pub fn levels2(&self) -> &[f64] {
        &self.levels2
    }

    pub fn is_symmetric(&self) -> bool {
        self.levels1 == self.levels2
    }

    pub fn k1(&self) -> usize {
        self.levels1.len()
    }

    pub fn k2(&self) -> usize {
        self.levels2.len()
    }
}

fn validate_sorted(levels: &[f64]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::InvalidLevels("empty level set".into()));
    }
    if levels.iter().any(|l| !l.is_finite()) {
        return Err(Error::InvalidLevels("non-finite level".into()));
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidLevels("levels must be strictly increasing".into()));
    }
    Ok(())
}

/// Require every level to lie strictly inside (0, 1) (quantile-regression use).
pub fn validate_unit_open(levels: &[f64]) -> Result<()> {
    match levels.iter().find(|&&l| l <= 0.0 || l >= 1.0) {
        Some(&l) => Err(Error::InvalidLevels(format!("level {l} outside (0, 1)"))),
        None => Ok(()),
    }
}

/// Require every level to lie in [0, 1] (rank-based clipping).
pub fn validate_unit_closed(levels: &[f64]) -> Result<()> {
    match levels.iter().find(|&&l| !(0.0..=1.0).contains(&l)) {
        Some(&l) => Err(Error::LevelOutOfRange(l)),
        None => Ok(()),
    }
}

/// Index of `level` in `stored`, matched within an absolute 1e-12 tolerance.
pub(crate) fn find_level(stored: &[f64], level: f64) -> Result<usize> {
    stored
        .iter()
        .position(|&l| (l - level).abs() <= LEVEL_TOL)
        .ok_or(Error::UnknownLevel(level))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_frequencies_are_evenly_spaced() {
        let g = FourierGrid::new(8);
        let f = g.frequencies();
        assert_eq!(f.len(), 5);
        assert_eq!(f[0], 0.0);
        assert!((f[4] - PI).abs() < 1e-15);
        for w in f.windows(2) {
            assert!((w[1] - w[0] - TAU / 8.0).abs() < 1e-15);
        }
    }

    #[test]
    fn fold_mirrors_above_pi() {
        // 2*pi*7/8 folds onto 2*pi/8 with conjugation.
        assert_eq!(fold_frequency(TAU * 7.0 / 8.0, 8).unwrap(), (1, true));
    }

    #[test]
    fn fold_reduces_modulo_two_pi() {
        assert_eq!(fold_frequency(2.0 * TAU, 8).unwrap(), (0, false));
        assert_eq!(fold_frequency(TAU * 3.0 / 8.0 + TAU, 8).unwrap(), (3, false));
    }

    #[test]
    fn fold_handles_negative_frequencies() {
        assert_eq!(fold_frequency(-TAU / 8.0, 8).unwrap(), (1, true));
    }

    #[test]
    fn fold_rejects_off_grid() {
        assert!(matches!(
            fold_frequency(0.1, 8),
            Err(Error::NonFourierFrequency { .. })
        ));
    }

    #[test]
    fn fold_is_idempotent() {
        for n in [7usize, 8, 33] {
            for s in 0..n {
                let (idx, _) = fold_frequency(TAU * s as f64 / n as f64, n).unwrap();
                let (again, conj) = fold_frequency(TAU * idx as f64 / n as f64, n).unwrap();
                assert_eq!(again, idx);
                assert!(!conj);
            }
        }
    }

    #[test]
    fn level_grid_requires_strictly_increasing() {
        assert!(LevelGrid::symmetric(vec![0.25, 0.5, 0.75]).is_ok());
        assert!(LevelGrid::symmetric(vec![0.5, 0.25]).is_err());
        assert!(LevelGrid::symmetric(vec![0.5, 0.5]).is_err());
        assert!(LevelGrid::symmetric(vec![]).is_err());
    }

    #[test]
    fn level_lookup_uses_tolerance() {
        let stored = [0.25, 0.5, 0.75];
        assert_eq!(find_level(&stored, 0.5 + 5e-13).unwrap(), 1);
        assert!(find_level(&stored, 0.51).is_err());
    }
}
