use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use crate::error::Error;

/// Gold, silver and bronze counts for one nation at one event or Games.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct MedalCounts {
    pub gold: u32,
    pub silver: u32,
    pub bronze: u32,
}

impl MedalCounts {
    pub const fn new(gold: u32, silver: u32, bronze: u32) -> Self {
        Self {
            gold,
            silver,
            bronze,
        }
    }

    pub const fn total(&self) -> u32 {
        self.gold + self.silver + self.bronze
    }

    pub const fn is_empty(&self) -> bool {
        self.total() == 0
    }
}

impl Add for MedalCounts {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.gold + rhs.gold,
            self.silver + rhs.silver,
            self.bronze + rhs.bronze,
        )
    }
}

impl Sum for MedalCounts {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Add::add)
    }
}

impl fmt::Display for MedalCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}+{}+{}={}",
            self.gold,
            self.silver,
            self.bronze,
            self.total()
        )
    }
}

/// Point totals with half-point resolution, stored as a count of halves.
///
/// Shared placements split points, so printed totals such as `254.5` occur.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Points(u32);

impl Points {
    pub const fn from_halves(halves: u32) -> Self {
        Self(halves)
    }

    pub const fn whole(points: u32) -> Self {
        Self(points * 2)
    }

    pub const fn halves(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl Add for Points {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sum for Points {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Add::add)
    }
}

impl FromStr for Points {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("{s:?} is not a half-point value"));
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let whole: u32 = int.parse().map_err(|_| bad())?;
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        whole
            .checked_mul(2)
            .and_then(|h| h.checked_add(half))
            .map(Self)
            .ok_or_else(bad)
    }
}

impl fmt::Display for Points {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 2, if self.0 % 2 == 1 { 5 } else { 0 })
    }
}

/// A percentage printed to one decimal, stored in tenths of a percent.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tenths(u32);

impl Tenths {
    pub const fn from_tenths(tenths: u32) -> Self {
        Self(tenths)
    }

    /// `100 * num / den` rounded half-up to one decimal, in exact integer
    /// arithmetic.
    pub fn from_ratio(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let tenths = (2000 * num + den) / (2 * den);
        Self(u32::try_from(tenths).expect("percentage out of range"))
    }

    pub const fn tenths(self) -> u32 {
        self.0
    }

    pub fn percent(self) -> f64 {
        f64::from(self.0) / 10.0
    }
}

impl FromStr for Tenths {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("{s:?} is not a one-decimal percentage"));
        let (int, frac) = s.split_once('.').unwrap_or((s, "0"));
        if frac.len() != 1 {
            return Err(bad());
        }
        let whole: u32 = int.parse().map_err(|_| bad())?;
        let digit: u32 = frac.parse().map_err(|_| bad())?;
        Ok(Self(whole * 10 + digit))
    }
}

impl fmt::Display for Tenths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 10, self.0 % 10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn medal_total() {
        assert_eq!(MedalCounts::new(18, 12, 11).total(), 41);
        assert!(MedalCounts::default().is_empty());
    }

    #[test]
    fn points_parse_and_display() {
        assert_eq!("254.5".parse::<Points>().unwrap().halves(), 509);
        assert_eq!("295.0".parse::<Points>().unwrap(), Points::whole(295));
        assert_eq!("3".parse::<Points>().unwrap(), Points::whole(3));
        assert!("254.3".parse::<Points>().is_err());
        assert!("-1".parse::<Points>().is_err());
        assert_eq!(Points::from_halves(509).to_string(), "254.5");
        assert_eq!(Points::whole(7).to_string(), "7.0");
    }

    #[test]
    fn tenths_rounding() {
        assert_eq!(Tenths::from_ratio(17, 48).to_string(), "35.4");
        assert_eq!(Tenths::from_ratio(41, 348).to_string(), "11.8");
        // 1/8 = 12.5% exactly, 1/16 = 6.25% rounds half up
        assert_eq!(Tenths::from_ratio(1, 16).to_string(), "6.3");
        assert_eq!("11.8".parse::<Tenths>().unwrap().tenths(), 118);
        assert!("11.85".parse::<Tenths>().is_err());
    }

    proptest! {
        #[test]
        fn points_round_trip(halves in 0u32..1_000_000) {
            let p = Points::from_halves(halves);
            prop_assert_eq!(p.to_string().parse::<Points>().unwrap(), p);
        }

        #[test]
        fn tenths_match_float_rounding(num in 0u64..5000, den in 1u64..5000) {
            let exact = Tenths::from_ratio(num, den).percent();
            let float = 100.0 * num as f64 / den as f64;
            prop_assert!((exact - float).abs() <= 0.05 + 1e-9);
        }
    }
}
