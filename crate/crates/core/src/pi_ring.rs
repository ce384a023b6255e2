//! The totally ramified ring `Z_p[pi] / (pi^{p-1} + p)` truncated at `p^N`.
//!
//! An element is `sum_{i < p-1} c_i pi^i` with `c_i` in `Z/p^N`. Since
//! `pi^{p-1} = -p`, valuations are measured in units of `1/(p-1)`:
//! `v_pi(c pi^i) = (p-1) v_p(c) + i`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::zp::{modulus_for, PAdicInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiRing {
    p: u32,
    precision: u32,
    modulus: u64,
}

impl PiRing {
    pub fn new(p: u32, precision: u32) -> Result<PiRing> {
        if !crate::gfq::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        let modulus = modulus_for(p, precision)?;
        Ok(PiRing {
            p,
            precision,
            modulus,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of `pi`-coefficients, `p - 1`.
    pub fn rank(&self) -> usize {
        self.p as usize - 1
    }

    pub fn with_precision(&self, precision: u32) -> Result<PiRing> {
        PiRing::new(self.p, precision)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<PiRingElem> {
        if coeffs.len() > self.rank() {
            return Err(Error::Parse(format!(
                "{} coefficients for a rank-{} pi-ring",
                coeffs.len(),
                self.rank()
            )));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % self.modulus).collect();
        c.resize(self.rank(), 0);
        Ok(PiRingElem {
            ring: *self,
            coeffs: c,
        })
    }

    pub fn from_int(&self, k: i64) -> PiRingElem {
        let mut coeffs = vec![0; self.rank()];
        coeffs[0] = (k as i128).rem_euclid(self.modulus as i128) as u64;
        PiRingElem {
            ring: *self,
            coeffs,
        }
    }

    /// Embeds `Z/p^M` for `M >= N`.
    pub fn from_padic(&self, x: &PAdicInt) -> Result<PiRingElem> {
        if x.p() != self.p {
            return Err(Error::PrimeMismatch(x.p(), self.p));
        }
        if x.precision() < self.precision {
            return Err(Error::InsufficientPrecision);
        }
        Ok(self.from_int(0).with_constant(x.residue() % self.modulus))
    }

    pub fn zero(&self) -> PiRingElem {
        self.from_int(0)
    }

    pub fn one(&self) -> PiRingElem {
        self.from_int(1)
    }

    /// `pi^k = (-p)^{k div (p-1)} pi^{k mod (p-1)}`.
    pub fn pi_pow(&self, k: u64) -> PiRingElem {
        let d = self.rank() as u64;
        let (e, r) = (k / d, (k % d) as usize);
        let mut coeffs = vec![0; self.rank()];
        coeffs[r] = neg_p_pow(self.p, e, self.modulus);
        PiRingElem {
            ring: *self,
            coeffs,
        }
    }

    pub fn pi(&self) -> PiRingElem {
        self.pi_pow(1)
    }
}

/// `(-p)^e mod m`.
fn neg_p_pow(p: u32, e: u64, m: u64) -> u64 {
    let mag = crate::gfq::pow_mod(p as u64, e, m);
    if e % 2 == 1 {
        (m - mag) % m
    } else {
        mag
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRingElem {
    ring: PiRing,
    coeffs: Vec<u64>,
}

/// JSON payload: coefficients of `pi^0 .. pi^{p-2}` as little-endian digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiPayload {
    pub p: u32,
    pub n: u32,
    #[serde(rename = "N")]
    pub precision: u32,
    pub pi_coeffs: Vec<Vec<u32>>,
}

impl PiRingElem {
    pub fn ring(&self) -> PiRing {
        self.ring
    }

    pub fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeffs(&self) -> Vec<PAdicInt> {
        self.coeffs
            .iter()
            .map(|&c| PAdicInt::from_residue(c, self.ring.p, self.ring.precision))
            .collect()
    }

    pub fn payload(&self) -> PiPayload {
        PiPayload {
            p: self.ring.p,
            n: 1,
            precision: self.ring.precision,
            pi_coeffs: self.coeffs().iter().map(|c| c.digits().to_vec()).collect(),
        }
    }

    fn with_constant(mut self, c: u64) -> PiRingElem {
        self.coeffs[0] = c;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `pi`-adic valuation in units of `1/(p-1)`; `None` for zero.
    pub fn valuation(&self) -> Option<u64> {
        let d = self.ring.rank() as u64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut v = 0;
                let mut c = c;
                while c % self.ring.p as u64 == 0 {
                    c /= self.ring.p as u64;
                    v += 1;
                }
                d * v + i as u64
            })
            .min()
    }

    /// A unit has nonzero constant digit.
    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_multiple_of(self.ring.p as u64)
    }

    fn check(&self, other: &PiRingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else if self.ring.p != other.ring.p {
            Err(Error::PrimeMismatch(self.ring.p, other.ring.p))
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u64>) -> PiRingElem {
        PiRingElem {
            ring: self.ring,
            coeffs,
        }
    }

    pub fn add(&self, other: &PiRingElem) -> Result<PiRingElem> {
        self.check(other)?;
        let m = self.ring.modulus as u128;
        Ok(self.with(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| ((a as u128 + b as u128) % m) as u64)
                .collect(),
        ))
    }

    pub fn neg(&self) -> PiRingElem {
        let m = self.ring.modulus;
        self.with(self.coeffs.iter().map(|&a| (m - a) % m).collect())
    }

    pub fn sub(&self, other: &PiRingElem) -> Result<PiRingElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> PiRingElem {
        let m = self.ring.modulus as u128;
        let k = k as u128 % m;
        self.with(
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * k) % m) as u64)
                .collect(),
        )
    }

    /// Polynomial product with `pi^{p-1+j} -> -p pi^j`.
    pub fn mul(&self, other: &PiRingElem) -> Result<PiRingElem> {
        self.check(other)?;
        let d = self.ring.rank();
        let m = self.ring.modulus as u128;
        let p = self.ring.p as u128;
        let mut prod = vec![0u128; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u128 * b as u128) % m;
            }
        }
        let mut out: Vec<u64> = prod[..d].iter().map(|&c| c as u64).collect();
        for (k, &c) in prod.iter().enumerate().skip(d) {
            let t = (c * p) % m;
            out[k - d] = ((out[k - d] as u128 + m - t) % m) as u64;
        }
        Ok(self.with(out))
    }

    pub fn pow(&self, mut e: u64) -> PiRingElem {
        let mut result = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        result
    }

    pub fn reduce(&self, precision: u32) -> Result<PiRingElem> {
        if precision > self.ring.precision {
            return Err(Error::InsufficientPrecision);
        }
        let ring = self.ring.with_precision(precision)?;
        Ok(PiRingElem {
            coeffs: self.coeffs.iter().map(|&c| c % ring.modulus).collect(),
            ring,
        })
    }

    /// Inverse of a unit by Newton iteration from the inverse of the constant digit.
    pub fn unit_inverse(&self) -> Result<PiRingElem> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let p = self.ring.p as u64;
        let c0 = crate::gfq::pow_mod(self.coeffs[0] % p, p - 2, p);
        let mut y = self.ring.from_int(c0 as i64);
        let two = self.ring.from_int(2);
        // Each step doubles the number of correct pi-adic places.
        let target = self.ring.precision as u64 * self.ring.rank() as u64;
        let mut correct = 1;
        while correct < target {
            y = y.mul(&two.sub(&self.mul(&y)?)?)?;
            correct *= 2;
        }
        Ok(y)
    }

    /// Exact division by `pi^v`. With `e = ceil(v / (p-1))` this is
    /// `x pi^{e(p-1) - v} / (-p)^e`, so the result has precision `N - e`.
    pub fn div_pi_pow(&self, v: u64) -> Result<PiRingElem> {
        let d = self.ring.rank() as u64;
        let e = v.div_ceil(d);
        if e == 0 {
            return Ok(self.clone());
        }
        if e >= self.ring.precision as u64 {
            return Err(Error::PrecisionExhausted);
        }
        let shifted = self.mul(&self.ring.pi_pow(e * d - v))?;
        let pe = (self.ring.p as u64).pow(e as u32);
        if shifted.coeffs.iter().any(|&c| c % pe != 0) {
            return Err(Error::NotDivisible);
        }
        let ring = self.ring.with_precision(self.ring.precision - e as u32)?;
        let quotient = PiRingElem {
            coeffs: shifted
                .coeffs
                .iter()
                .map(|&c| (c / pe) % ring.modulus)
                .collect(),
            ring,
        };
        Ok(if e % 2 == 1 { quotient.neg() } else { quotient })
    }

    /// `self / other` for nonzero `other`, at the precision that survives
    /// removing `other`'s valuation.
    pub fn div(&self, other: &PiRingElem) -> Result<PiRingElem> {
        self.check(other)?;
        let v = other.valuation().ok_or(Error::DivisionByZero)?;
        let unit = other.div_pi_pow(v)?;
        let num = self.div_pi_pow(v)?;
        num.mul(&unit.reduce(num.ring.precision)?.unit_inverse()?)
    }
}

impl fmt::Display for PiRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}*pi^{i}"))
            .collect();
        write!(
            f,
            "{} mod {}^{} (pi^{}=-{})",
            terms.join(" + "),
            self.ring.p,
            self.ring.precision,
            self.ring.rank(),
            self.ring.p
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_relation() {
        for p in [3u32, 5, 7, 11] {
            let r = PiRing::new(p, 4).unwrap();
            let pi = r.pi();
            assert_eq!(pi.pow(p as u64 - 1), r.from_int(-(p as i64)));
            assert_eq!(pi.pow(3 * (p as u64 - 1)), r.from_int(-(p as i64).pow(3)));
            for k in 0..3 * p as u64 {
                assert_eq!(pi.pow(k), r.pi_pow(k));
                if k < 4 * (p as u64 - 1) {
                    assert_eq!(r.pi_pow(k).valuation(), Some(k));
                }
            }
        }
    }

    #[test]
    fn ring_axioms_sampled() {
        let r = PiRing::new(5, 3).unwrap();
        let elems: Vec<PiRingElem> = (0..20u64)
            .map(|i| {
                r.from_coeffs(&[i * 7 + 1, i * i + 3, 11 * i, 2 * i + 5])
                    .unwrap()
            })
            .collect();
        for a in &elems {
            for b in &elems {
                assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                for c in elems.iter().step_by(3) {
                    let left = a.mul(b).unwrap().mul(c).unwrap();
                    let right = a.mul(&b.mul(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                    let dist = a.mul(&b.add(c).unwrap()).unwrap();
                    assert_eq!(dist, a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn unit_inverse_and_division() {
        let r = PiRing::new(7, 4).unwrap();
        let u = r.from_coeffs(&[3, 5, 0, 1, 2, 9]).unwrap();
        assert_eq!(u.mul(&u.unit_inverse().unwrap()).unwrap(), r.one());
        assert_eq!(r.pi().unit_inverse().unwrap_err(), Error::NotAUnit);
        // (u pi^3) / pi^3 = u, one p-digit lost.
        let x = u.mul(&r.pi_pow(3)).unwrap();
        assert_eq!(x.div_pi_pow(3).unwrap(), u.reduce(3).unwrap());
        // (u pi^8) / (u pi^2) = pi^6 = -7
        let y = u.mul(&r.pi_pow(8)).unwrap();
        let w = u.mul(&r.pi_pow(2)).unwrap();
        assert_eq!(y.div(&w).unwrap(), r.from_int(-7).reduce(3).unwrap());
        assert_eq!(r.one().div(&r.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn even_prime_rejected() {
        assert_eq!(PiRing::new(2, 3).unwrap_err(), Error::EvenPrime);
    }
}
