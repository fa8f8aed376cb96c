//! Exact rational timestamps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Timestamps and distances are exact rationals.
pub type Time = BigRational;

/// `n / d` as an exact rational. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Time {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A natural number as a rational.
pub fn nat(n: u64) -> Time {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest integer `≤ t`.
pub fn floor(t: &Time) -> Time {
    t.floor()
}

/// Smallest integer `≥ t`.
pub fn ceil(t: &Time) -> Time {
    t.ceil()
}

/// Lossy conversion for reporting only.
pub fn approx_f64(t: &Time) -> f64 {
    t.to_f64().unwrap_or(f64::NAN)
}

/// Renders a rational as a terminating decimal when one exists and as `p/q` otherwise.
pub fn format_time(t: &Time) -> String {
    let mut denom = t.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut twos = 0usize;
    let mut fives = 0usize;
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", t.numer(), t.denom());
    }
    let digits = twos.max(fives);
    if digits == 0 {
        return t.numer().to_string();
    }
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (t * BigRational::from_integer(scale.clone())).to_integer();
    let neg = scaled.is_negative();
    let abs = scaled.abs().to_string();
    let padded = format!("{:0>width$}", abs, width = digits + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_decimals_and_fractions() {
        assert_eq!(format_time(&rat(3, 10)), "0.3");
        assert_eq!(format_time(&rat(11, 10)), "1.1");
        assert_eq!(format_time(&rat(2, 1)), "2");
        assert_eq!(format_time(&rat(1, 3)), "1/3");
        assert_eq!(format_time(&rat(1, 40)), "0.025");
        assert_eq!(format_time(&rat(-1, 2)), "-0.5");
    }
}
