//! Stable JSON encodings shared by the reports.
//!
//! Integers of any size are emitted as bare JSON numbers, rationals as
//! `{"num": .., "den": ..}` in lowest terms, and floats rounded to twelve
//! significant digits so repeated runs produce byte-identical output.

use std::fmt::Display;

use serde_json::{Number, Value};

use crate::Rational;

/// Significant digits kept for every float in JSON output.
pub const FLOAT_DIGITS: usize = 12;

pub fn integer<T: Display>(value: &T) -> Value {
    Value::Number(
        value
            .to_string()
            .parse::<Number>()
            .expect("integer renders as a JSON number"),
    )
}

pub fn rational(r: &Rational) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("num".into(), integer(r.numer()));
    map.insert("den".into(), integer(r.denom()));
    Value::Object(map)
}

pub fn opt_rational(r: Option<&Rational>) -> Value {
    r.map_or(Value::Null, rational)
}

/// Rounds to [`FLOAT_DIGITS`] significant digits; non-finite values map to
/// `null`.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{:.*e}", FLOAT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    // fold -0.0 into 0.0
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rationals_are_reduced_objects() {
        let r = Rational::new(BigInt::from(28), BigInt::from(10));
        assert_eq!(rational(&r).to_string(), r#"{"num":14,"den":5}"#);
    }

    #[test]
    fn large_integers_stay_exact() {
        let big = BigInt::from(3).pow(80);
        let text = integer(&big).to_string();
        assert_eq!(text, big.to_string());
    }

    #[test]
    fn floats_are_rounded() {
        assert_eq!(float(std::f64::consts::PI).to_string(), "3.14159265359");
        assert_eq!(float(6f64.ln()).to_string(), "1.79175946923");
        assert_eq!(float(-0.0).to_string(), "0.0");
        assert_eq!(float(f64::NEG_INFINITY), Value::Null);
        assert_eq!(float(1e-20).to_string(), "1e-20");
    }
}
