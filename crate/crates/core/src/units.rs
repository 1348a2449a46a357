//! Decibel/linear conversions. Everything inside the library works on
//! linear-scale quantities; dB exists only at the boundary.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UnitsError {
    #[error("cannot convert non-positive linear value {0} to dB")]
    NonPositiveLinearValue(f64),
}

/// Power ratio from decibels: `10^(x/10)`.
pub fn db_to_linear(x_db: f64) -> f64 {
    10f64.powf(x_db / 10.0)
}

/// Decibels from a positive power ratio: `10 log10(x)`.
pub fn linear_to_db(x: f64) -> Result<f64, UnitsError> {
    if x <= 0.0 {
        return Err(UnitsError::NonPositiveLinearValue(x));
    }
    Ok(10.0 * x.log10())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_db_is_unity() {
        assert_eq!(db_to_linear(0.0), 1.0);
    }

    #[test]
    fn twenty_db_is_hundred() {
        assert!((db_to_linear(20.0) - 100.0).abs() < 1e-12);
    }

    #[test]
    fn si_suppression_reading() {
        // 74 dB of power suppression corresponds to kappa^2 = 4e-8
        // (kappa = 2e-4), i.e. -73.98 dB maps to 4.0e-8 within 0.1%.
        let k2 = db_to_linear(-73.98);
        assert!((k2 - 4.0e-8).abs() / 4.0e-8 < 1e-3, "got {k2}");
    }

    #[test]
    fn nonpositive_rejected() {
        assert_eq!(
            linear_to_db(0.0),
            Err(UnitsError::NonPositiveLinearValue(0.0))
        );
        assert!(linear_to_db(-3.0).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_within_1e12(x_db in -100.0f64..100.0) {
            let back = linear_to_db(db_to_linear(x_db)).unwrap();
            let denom = x_db.abs().max(1.0);
            prop_assert!((back - x_db).abs() / denom < 1e-12);
        }
    }
}
