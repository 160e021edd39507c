//! High-precision logarithms of exact rationals, for reporting only.

use dashu_float::FBig;
use dashu_int::IBig;

use crate::geometry::Rational;

/// Working precision in bits for every logarithm in reports.
pub const PRECISION_BITS: usize = 256;

fn to_ibig(n: &num_bigint::BigInt) -> IBig {
    n.to_string().parse().expect("decimal integers round-trip")
}

fn to_fbig(n: &num_bigint::BigInt) -> FBig {
    FBig::from_parts(to_ibig(n), 0)
        .with_precision(PRECISION_BITS)
        .value()
}

/// `q` as a binary float at [`PRECISION_BITS`].
pub fn fbig(q: &Rational) -> FBig {
    to_fbig(q.numer()) / to_fbig(q.denom())
}

/// `ln q` for `q > 0`.
pub fn ln(q: &Rational) -> FBig {
    assert!(q.is_positive(), "logarithm of a non-positive number");
    to_fbig(q.numer()).ln() - to_fbig(q.denom()).ln()
}

/// `ln a / ln b`.
pub fn log_ratio(a: &Rational, b: &Rational) -> FBig {
    ln(a) / ln(b)
}

/// Nearest `f64`, rounded through a 25-digit decimal since the binary
/// conversion can land one ulp low.
pub fn to_f64(x: &FBig) -> f64 {
    to_decimal_string(x, 25)
        .parse()
        .unwrap_or_else(|_| x.to_f64().value())
}

/// Decimal rendering with `digits` significant digits.
pub fn to_decimal_string(x: &FBig, digits: usize) -> String {
    x.to_decimal()
        .value()
        .with_precision(digits)
        .value()
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_of_powers() {
        let v = log_ratio(&Rational::new(1, 8), &Rational::new(1, 2));
        assert_eq!(to_f64(&v), 3.0);
        let err = v - fbig(&Rational::integer(3));
        assert!(to_f64(&err).abs() < 1e-60);
    }

    #[test]
    fn decimal_rendering() {
        let v = log_ratio(&Rational::new(1, 3), &Rational::new(1, 2));
        assert!(to_decimal_string(&v, 20).starts_with("1.584962500721156181"));
    }
}
