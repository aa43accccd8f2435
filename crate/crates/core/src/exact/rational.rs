use num::{BigInt, BigRational, ToPrimitive};
use serde_json::Value;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

/// `[numerator, denominator]`; entries fall back to decimal strings when they
/// do not fit in 64 bits.
pub fn rational_json(r: &Rational) -> Value {
    Value::Array(vec![bigint_json(r.numer()), bigint_json(r.denom())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{Signed, Zero};

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(r.denom().is_positive());
        assert!(rat(0, -7).is_zero());
        assert_eq!(rat(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn json_pair() {
        assert_eq!(rational_json(&rat(-3, 6)).to_string(), "[-1,2]");
    }
}
