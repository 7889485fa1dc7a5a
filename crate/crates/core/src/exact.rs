//! Exact rational helpers. Every threshold comparison in the crate goes
//! through these; no acceptance decision is made in floating point.

use crate::error::{Error, Result};

pub type Ratio = num_rational::Ratio<i64>;

/// `count <= r * mult`, exactly.
pub fn le_scaled(count: u64, r: Ratio, mult: u64) -> bool {
    (count as i128) * (*r.denom() as i128) <= (*r.numer() as i128) * (mult as i128)
}

/// `count > r * mult`, exactly.
pub fn gt_scaled(count: u64, r: Ratio, mult: u64) -> bool {
    !le_scaled(count, r, mult)
}

/// `⌈r · n⌉` for nonnegative `r`.
pub fn ceil_mul(r: Ratio, n: u64) -> u64 {
    let num = (*r.numer() as i128) * (n as i128);
    let den = *r.denom() as i128;
    debug_assert!(num >= 0 && den > 0);
    ((num + den - 1) / den) as u64
}

/// `⌊r · n⌋` for nonnegative `r`.
pub fn floor_mul(r: Ratio, n: u64) -> u64 {
    let num = (*r.numer() as i128) * (n as i128);
    (num / *r.denom() as i128) as u64
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_ratio(s: &str) -> Result<Ratio> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(num, den))
}

/// Always `"num/den"`, including integers (`"1/1"`).
pub fn format_ratio(r: Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `C(s, 2)`.
pub fn pairs(s: usize) -> u64 {
    let s = s as u64;
    s * s.saturating_sub(1) / 2
}

/// Checks `0 <= r <= 1`.
pub fn check_unit(name: &str, r: Ratio) -> Result<()> {
    if *r.numer() < 0 || r > Ratio::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "{name} = {} not in [0, 1]",
            format_ratio(r)
        )));
    }
    Ok(())
}

/// Serde adapter writing rationals as `"num/den"` strings.
pub mod serde_ratio {
    use super::{format_ratio, parse_ratio, Ratio};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(*r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_comparisons_are_exact() {
        // 3 <= (1/10) * 45 = 4.5
        assert!(le_scaled(3, Ratio::new(1, 10), 45));
        // 1 > (1/10) * 6 = 0.6
        assert!(gt_scaled(1, Ratio::new(1, 10), 6));
        assert!(le_scaled(2, Ratio::new(1, 3), 6));
        assert!(gt_scaled(3, Ratio::new(1, 3), 6));
    }

    #[test]
    fn ceil_and_floor() {
        assert_eq!(ceil_mul(Ratio::new(1, 30), 40), 2);
        assert_eq!(ceil_mul(Ratio::new(1, 30), 30), 1);
        assert_eq!(ceil_mul(Ratio::new(1, 4), 0), 0);
        assert_eq!(floor_mul(Ratio::new(1, 15), 10), 0);
        assert_eq!(floor_mul(Ratio::new(2, 3), 9), 6);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_ratio("1/30").unwrap(), Ratio::new(1, 30));
        assert_eq!(parse_ratio(" 2 / 4 ").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_ratio("1").unwrap(), Ratio::from_integer(1));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
        assert_eq!(format_ratio(Ratio::from_integer(1)), "1/1");
    }
}
