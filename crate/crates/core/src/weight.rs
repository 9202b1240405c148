//! Fixed-point edge weights and path distances.
//!
//! Weights are stored as integer counts of micro-units (10^-6 of the input's
//! decimal unit), so every path length is computed exactly and independent of
//! summation order.

use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// Micro-units per whole input unit.
pub const SCALE: u64 = 1_000_000;

const FRACTION_DIGITS: usize = 6;

/// A non-negative edge weight in micro-units.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u64);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const UNIT: Weight = Weight(SCALE);

    pub const fn from_micros(micros: u64) -> Self {
        Weight(micros)
    }

    pub const fn from_units(units: u64) -> Self {
        Weight(units * SCALE)
    }

    pub const fn micros(self) -> u64 {
        self.0
    }

    /// Parses a non-negative decimal with at most six fractional digits.
    pub fn parse_decimal(text: &str) -> Result<Self, WeightParseError> {
        parse_fixed(text).map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_fixed(f, self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightParseError {
    Negative,
    Malformed,
    TooPrecise,
    Overflow,
}

impl fmt::Display for WeightParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            WeightParseError::Negative => "negative weight",
            WeightParseError::Malformed => "malformed decimal",
            WeightParseError::TooPrecise => "more than 6 fractional digits",
            WeightParseError::Overflow => "weight too large",
        };
        f.write_str(msg)
    }
}

fn parse_fixed(text: &str) -> Result<u64, WeightParseError> {
    let text = text.trim();
    let body = match text.strip_prefix('-') {
        Some(rest) => {
            // "-0" and "-0.000" are still zero, anything else is negative.
            let v = parse_fixed(rest)?;
            return if v == 0 {
                Ok(0)
            } else {
                Err(WeightParseError::Negative)
            };
        }
        None => text.strip_prefix('+').unwrap_or(text),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(WeightParseError::Malformed);
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(WeightParseError::Malformed);
    }
    if frac_part.len() > FRACTION_DIGITS {
        return Err(WeightParseError::TooPrecise);
    }
    let whole: u64 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| WeightParseError::Overflow)?
    };
    let mut frac: u64 = 0;
    for (i, b) in frac_part.bytes().enumerate() {
        frac += u64::from(b - b'0') * 10u64.pow((FRACTION_DIGITS - 1 - i) as u32);
    }
    whole
        .checked_mul(SCALE)
        .and_then(|w| w.checked_add(frac))
        .filter(|&v| v < u64::MAX)
        .ok_or(WeightParseError::Overflow)
}

fn write_fixed(f: &mut fmt::Formatter<'_>, micros: u64) -> fmt::Result {
    write!(f, "{}.{:06}", micros / SCALE, micros % SCALE)
}

/// A shortest-path length, or `UNREACHABLE`.
///
/// `UNREACHABLE` compares greater than every finite distance and absorbs
/// addition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(u64);

impl Distance {
    pub const ZERO: Distance = Distance(0);
    pub const UNREACHABLE: Distance = Distance(u64::MAX);

    pub const fn from_micros(micros: u64) -> Self {
        debug_assert!(micros != u64::MAX);
        Distance(micros)
    }

    pub const fn from_units(units: u64) -> Self {
        Distance(units * SCALE)
    }

    pub const fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    pub fn finite(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    /// Raw micro-unit value. Only meaningful for finite distances.
    pub const fn micros(self) -> u64 {
        self.0
    }

    /// `2 * self`, used by every halving test in integer form.
    pub fn doubled(self) -> Distance {
        self + self
    }
}

impl From<Weight> for Distance {
    fn from(w: Weight) -> Self {
        Distance(w.0)
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        if !self.is_finite() || !rhs.is_finite() {
            return Distance::UNREACHABLE;
        }
        match self.0.checked_add(rhs.0) {
            Some(v) if v != u64::MAX => Distance(v),
            _ => panic!("path length overflow"),
        }
    }
}

impl Add<Weight> for Distance {
    type Output = Distance;

    fn add(self, rhs: Weight) -> Distance {
        self + Distance::from(rhs)
    }
}

impl fmt::Display for Distance {
    /// Six fractional digits, `-` when unreachable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write_fixed(f, self.0)
        } else {
            f.write_str("-")
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.finite() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals() {
        assert_eq!(Weight::parse_decimal("1.0").unwrap(), Weight::from_units(1));
        assert_eq!(Weight::parse_decimal("5").unwrap().micros(), 5_000_000);
        assert_eq!(Weight::parse_decimal("0.000001").unwrap().micros(), 1);
        assert_eq!(Weight::parse_decimal(".5").unwrap().micros(), 500_000);
        assert_eq!(Weight::parse_decimal("3.").unwrap().micros(), 3_000_000);
        assert_eq!(Weight::parse_decimal("-0.0").unwrap(), Weight::ZERO);
    }

    #[test]
    fn rejects_bad_decimals() {
        assert_eq!(
            Weight::parse_decimal("-1.5"),
            Err(WeightParseError::Negative)
        );
        assert_eq!(
            Weight::parse_decimal("1.0000001"),
            Err(WeightParseError::TooPrecise)
        );
        assert_eq!(
            Weight::parse_decimal("1e5"),
            Err(WeightParseError::Malformed)
        );
        assert_eq!(Weight::parse_decimal("."), Err(WeightParseError::Malformed));
        assert_eq!(Weight::parse_decimal(""), Err(WeightParseError::Malformed));
        assert_eq!(
            Weight::parse_decimal("99999999999999999999"),
            Err(WeightParseError::Overflow)
        );
    }

    #[test]
    fn formats_six_digits() {
        assert_eq!(Weight::from_micros(4_000_000).to_string(), "4.000000");
        assert_eq!(Distance::from_micros(1_500_001).to_string(), "1.500001");
        assert_eq!(Distance::UNREACHABLE.to_string(), "-");
    }

    #[test]
    fn unreachable_absorbs() {
        let d = Distance::from_units(3);
        assert_eq!(d + Distance::UNREACHABLE, Distance::UNREACHABLE);
        assert_eq!(Distance::UNREACHABLE + Weight::UNIT, Distance::UNREACHABLE);
        assert_eq!(d + Weight::UNIT, Distance::from_units(4));
        assert!(Distance::from_micros(u64::MAX - 1) < Distance::UNREACHABLE);
        assert_eq!(Distance::UNREACHABLE.doubled(), Distance::UNREACHABLE);
    }
}
