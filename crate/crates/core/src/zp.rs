//! Truncated p-adic integers `Z/p^N` as base-`p` digit vectors.
//!
//! Digit `i` is the coefficient of `p^i`. Addition is schoolbook carry
//! propagation where every carry is the value of [`carry_cocycle`]; the
//! remaining ring operations go through the residue in `[0, p^N)`.
//! Binary operations return the smaller of the two precisions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `p^precision` must stay below this so residue products fit in `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// `p^precision`, or an error when it exceeds [`MAX_MODULUS`].
pub fn modulus_for(p: u32, precision: u32) -> Result<u64> {
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    match (p as u64).checked_pow(precision) {
        Some(m) if m <= MAX_MODULUS => Ok(m),
        _ => Err(Error::PrecisionTooLarge { p, precision }),
    }
}

/// The carry 2-cocycle `c_p(x, y)`: 1 when `x + y >= p`, else 0.
pub fn carry_cocycle(x: u32, y: u32, p: u32) -> Result<u32> {
    for d in [x, y] {
        if d >= p {
            return Err(Error::DigitOutOfRange { digit: d, p });
        }
    }
    Ok(u32::from(x + y >= p))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PAdicInt {
    p: u32,
    /// Little-endian; the length is the absolute precision.
    digits: Vec<u32>,
}

impl PAdicInt {
    /// Builds from explicit digits; the precision is `digits.len()`.
    pub fn from_digits(p: u32, digits: Vec<u32>) -> Result<Self> {
        modulus_for(p, digits.len() as u32)?;
        if let Some(&d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::DigitOutOfRange { digit: d, p });
        }
        Ok(PAdicInt { p, digits })
    }

    /// `k mod p^N`, negative `k` reduced into `[0, p^N)`.
    pub fn from_integer(k: i64, p: u32, precision: u32) -> Result<Self> {
        let m = modulus_for(p, precision)?;
        let r = (k as i128).rem_euclid(m as i128) as u64;
        Ok(Self::from_residue(r, p, precision))
    }

    /// `k mod p^N` for an arbitrary-size integer.
    pub fn from_bigint(k: &BigInt, p: u32, precision: u32) -> Result<Self> {
        let m = BigInt::from(modulus_for(p, precision)?);
        let mut r = k % &m;
        if r.is_negative() {
            r += &m;
        }
        Ok(Self::from_residue(r.to_u64().unwrap(), p, precision))
    }

    /// Caller guarantees `r < p^precision` and that the modulus is valid.
    pub(crate) fn from_residue(mut r: u64, p: u32, precision: u32) -> Self {
        let digits = (0..precision)
            .map(|_| {
                let d = (r % p as u64) as u32;
                r /= p as u64;
                d
            })
            .collect();
        PAdicInt { p, digits }
    }

    pub fn zero(p: u32, precision: u32) -> Result<Self> {
        Self::from_integer(0, p, precision)
    }

    pub fn one(p: u32, precision: u32) -> Result<Self> {
        Self::from_integer(1, p, precision)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// `p^N` for this element's precision.
    pub fn modulus(&self) -> u64 {
        (self.p as u64).pow(self.precision())
    }

    /// The representative in `[0, p^N)`.
    pub fn residue(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }

    /// The representative in `(-p^N / 2, p^N / 2]`.
    pub fn symmetric(&self) -> i64 {
        let r = self.residue();
        let m = self.modulus();
        if r > m / 2 {
            r as i64 - m as i64
        } else {
            r as i64
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.digits[0] != 0
    }

    /// Truncates to a lower precision.
    pub fn reduce(&self, precision: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        if precision > self.precision() {
            return Err(Error::InsufficientPrecision);
        }
        Ok(PAdicInt {
            p: self.p,
            digits: self.digits[..precision as usize].to_vec(),
        })
    }

    /// Pads with zero digits, i.e. picks the representative in `[0, p^N)`
    /// as a value at higher precision.
    pub fn extend(&self, precision: u32) -> Result<Self> {
        modulus_for(self.p, precision)?;
        let mut digits = self.digits.clone();
        digits.resize(precision.max(self.precision()) as usize, 0);
        Ok(PAdicInt { p: self.p, digits })
    }

    fn common(&self, other: &Self) -> Result<u32> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(self.precision().min(other.precision()))
    }

    /// Digit-wise addition with carries; each carry is `c_p` of the two
    /// digits plus the incoming carry.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let prec = self.common(other)? as usize;
        let p = self.p;
        let mut digits = Vec::with_capacity(prec);
        let mut carry = 0;
        for i in 0..prec {
            let (a, b) = (self.digits[i], other.digits[i]);
            let s = (a + b) % p;
            let c1 = carry_cocycle(a, b, p)?;
            let c2 = carry_cocycle(s, carry, p)?;
            digits.push((s + carry) % p);
            carry = c1 + c2;
        }
        Ok(PAdicInt { p, digits })
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus();
        Self::from_residue((m - self.residue()) % m, self.p, self.precision())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let prec = self.common(other)?;
        let m = (self.p as u64).pow(prec) as u128;
        let a = self.residue() as u128 % m;
        let b = other.residue() as u128 % m;
        Ok(Self::from_residue(((a * b) % m) as u64, self.p, prec))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::from_residue(1 % self.modulus(), self.p, self.precision());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse of a unit by Newton iteration
    /// `y <- y (2 - x y)`, starting from the inverse mod `p`.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let p = self.p as u64;
        let m = self.modulus() as u128;
        let x = self.residue() as u128;
        let mut y = crate::gfq::pow_mod(self.digits[0] as u64, p - 2, p) as u128;
        let mut correct = 1;
        while correct < self.precision() {
            let xy = (x * y) % m;
            let two_minus = (2 + m - xy) % m;
            y = (y * two_minus) % m;
            correct *= 2;
        }
        Ok(Self::from_residue(y as u64, self.p, self.precision()))
    }

    /// Exact division by `p`, losing one digit of precision.
    pub fn div_exact_by_p(&self) -> Result<Self> {
        if self.digits[0] != 0 {
            return Err(Error::NotDivisible);
        }
        if self.precision() == 1 {
            return Err(Error::PrecisionExhausted);
        }
        Ok(PAdicInt {
            p: self.p,
            digits: self.digits[1..].to_vec(),
        })
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.residue())
    }
}

/// Buium's carry polynomial `C_p(x, y) = (x^p + y^p - (x + y)^p) / p`,
/// evaluated exactly on the representatives in `[0, p^N)` and reduced to
/// precision `N - 1`.
pub fn buium_carry(x: &PAdicInt, y: &PAdicInt) -> Result<PAdicInt> {
    let prec = x.common(y)?;
    if prec < 2 {
        return Err(Error::InsufficientPrecision);
    }
    let p = x.p;
    let a = x.reduce(prec)?.to_bigint();
    let b = y.reduce(prec)?.to_bigint();
    let numer = a.pow(p) + b.pow(p) - (&a + &b).pow(p);
    let pb = BigInt::from(p);
    debug_assert!((&numer % &pb).is_zero());
    PAdicInt::from_bigint(&(numer / pb), p, prec - 1)
}

impl fmt::Display for PAdicInt {
    /// Canonical form `p=5;N=3;digits=2,1,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "p={};N={};digits={}",
            self.p,
            self.precision(),
            digits.join(",")
        )
    }
}

pub(crate) fn parse_field<'a>(part: Option<&'a str>, key: &str) -> Result<&'a str> {
    let part = part.ok_or_else(|| Error::Parse(format!("missing {key}")))?;
    part.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected {key}=..., found {part:?}")))
}

pub(crate) fn parse_u32(s: &str) -> Result<u32> {
    s.parse::<u32>()
        .map_err(|_| Error::Parse(format!("not a nonnegative integer: {s:?}")))
}

impl FromStr for PAdicInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(';');
        let p = parse_u32(parse_field(parts.next(), "p")?)?;
        let n = parse_u32(parse_field(parts.next(), "N")?)?;
        let digits = parse_field(parts.next(), "digits")?
            .split(',')
            .map(parse_u32)
            .collect::<Result<Vec<_>>>()?;
        if parts.next().is_some() {
            return Err(Error::Parse("trailing fields".into()));
        }
        if !crate::gfq::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if digits.len() != n as usize {
            return Err(Error::Parse(format!(
                "N={n} but {} digits given",
                digits.len()
            )));
        }
        PAdicInt::from_digits(p, digits)
    }
}
