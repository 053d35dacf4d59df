use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// A root of unity `exp(2πi·k/N)`, stored as the reduced fraction `k/N` with `0 <= k < N`.
///
/// The trivial root is `0/1`. Equality is equality of reduced exponents, so
/// `zeta(4)^2` and `zeta(2)^1` are the same value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };

    /// `ζ_n^k` for any integer `k`.
    pub fn new(k: i64, n: u64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroOrder);
        }
        Ok(Self::from_parts(k as i128, n as i128))
    }

    /// Like [`RootOfUnity::new`] for callers that already know `n > 0`.
    pub fn zeta(n: u64, k: i64) -> Self {
        Self::new(k, n).expect("root order must be positive")
    }

    /// The primitive root `ζ_n`.
    pub fn primitive(n: u64) -> Self {
        Self::zeta(n, 1)
    }

    fn from_parts(k: i128, n: i128) -> Self {
        let k = k.rem_euclid(n);
        let g = k.gcd(&n);
        let (num, den) = if k == 0 { (0, 1) } else { (k / g, n / g) };
        RootOfUnity {
            num: num as u64,
            den: den as u64,
        }
    }

    /// Numerator of the reduced exponent.
    pub fn num(&self) -> u64 {
        self.num
    }

    /// Denominator of the reduced exponent, which is also the multiplicative order.
    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn inv(self) -> Self {
        Self::from_parts(-(self.num as i128), self.den as i128)
    }

    pub fn pow(self, e: i64) -> Self {
        let k = (self.num as i128) * (e as i128 % self.den as i128);
        Self::from_parts(k, self.den as i128)
    }

    /// Exponent of `self` written over the denominator `n`, if `self^n = 1`.
    pub fn exponent_over(&self, n: u64) -> Option<u64> {
        if n.is_multiple_of(self.den) {
            Some(self.num * (n / self.den))
        } else {
            None
        }
    }
}

impl Default for RootOfUnity {
    fn default() -> Self {
        RootOfUnity::ONE
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: Self) -> Self {
        let den = (self.den as i128).lcm(&(rhs.den as i128));
        let k = self.num as i128 * (den / self.den as i128) + rhs.num as i128 * (den / rhs.den as i128);
        Self::from_parts(k, den)
    }
}

impl Div for RootOfUnity {
    type Output = RootOfUnity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl std::iter::Product for RootOfUnity {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RootOfUnity::ONE, |a, b| a * b)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({})^{}", self.den, self.num)
    }
}

/// Parses either `k/N` or `zeta(N)^k`.
impl FromStr for RootOfUnity {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ExactError::Parse(s.to_string());
        if let Some(rest) = s.strip_prefix("zeta(") {
            let (n, k) = rest.split_once(")^").ok_or_else(bad)?;
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            let k: i64 = k.trim().parse().map_err(|_| bad())?;
            return RootOfUnity::new(k, n);
        }
        match s.split_once('/') {
            Some((k, n)) => {
                let k: i64 = k.trim().parse().map_err(|_| bad())?;
                let n: u64 = n.trim().parse().map_err(|_| bad())?;
                RootOfUnity::new(k, n)
            }
            None => {
                let k: i64 = s.parse().map_err(|_| bad())?;
                RootOfUnity::new(k, 1)
            }
        }
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.num, self.den))
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All `n` solutions `r` of `r^n = target`, namely `(t + s)/n` for `s = 0..n`.
pub fn nth_root_solutions(n: u64, target: RootOfUnity) -> Result<Vec<RootOfUnity>, ExactError> {
    if n == 0 {
        return Err(ExactError::ZeroDegree);
    }
    let den = target.den as i128 * n as i128;
    Ok((0..n as i128)
        .map(|s| RootOfUnity::from_parts(target.num as i128 + s * target.den as i128, den))
        .collect())
}
