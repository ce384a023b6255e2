//! Truncated Witt vectors `Z_q = W(F_q) mod p^N`.
//!
//! Elements are polynomials over `Z/p^N` modulo the field modulus with its
//! coefficients re-read in `[0, p)`. The Witt structure is recovered through
//! Teichmüller digits: every `x` is uniquely `sum tau(x_i) p^i`, and the
//! canonical Frobenius lift acts by `x_i -> x_i^p` on those digits.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfq::{FqElem, FqField};
use crate::zp::{modulus_for, parse_field, parse_u32, PAdicInt};

/// Teichmüller lifts are tabulated per ring up to this field order.
const TEICH_TABLE_LIMIT: u32 = 1 << 12;

pub struct ZqRing {
    field: Arc<FqField>,
    precision: u32,
    modulus: u64,
    lifted_modulus: Vec<u64>,
    teich_table: OnceLock<Vec<Vec<u64>>>,
}

impl fmt::Debug for ZqRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZqRing")
            .field("p", &self.field.p())
            .field("n", &self.field.degree())
            .field("N", &self.precision)
            .finish()
    }
}

impl PartialEq for ZqRing {
    fn eq(&self, other: &Self) -> bool {
        self.precision == other.precision && *self.field == *other.field
    }
}

impl ZqRing {
    pub fn new(field: &Arc<FqField>, precision: u32) -> Result<Arc<ZqRing>> {
        let modulus = modulus_for(field.p(), precision)?;
        let lifted_modulus = field.modulus().iter().map(|&c| c as u64).collect();
        Ok(Arc::new(ZqRing {
            field: Arc::clone(field),
            precision,
            modulus,
            lifted_modulus,
            teich_table: OnceLock::new(),
        }))
    }

    /// The same extension at another precision.
    pub fn with_precision(&self, precision: u32) -> Result<Arc<ZqRing>> {
        ZqRing::new(&self.field, precision)
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^N`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lifted_modulus(&self) -> &[u64] {
        &self.lifted_modulus
    }

    fn raw(self: &Arc<Self>, coeffs: Vec<u64>) -> ZqElem {
        ZqElem {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    pub fn from_int(self: &Arc<Self>, k: i64) -> ZqElem {
        let mut coeffs = vec![0; self.degree() as usize];
        coeffs[0] = (k as i128).rem_euclid(self.modulus as i128) as u64;
        self.raw(coeffs)
    }

    pub fn zero(self: &Arc<Self>) -> ZqElem {
        self.from_int(0)
    }

    pub fn one(self: &Arc<Self>) -> ZqElem {
        self.from_int(1)
    }

    /// Builds from residues in `[0, p^N)`, reducing larger values.
    pub fn from_residues(self: &Arc<Self>, coeffs: &[u64]) -> Result<ZqElem> {
        if coeffs.len() > self.degree() as usize {
            return Err(Error::Parse(format!(
                "{} coefficients for degree {}",
                coeffs.len(),
                self.degree()
            )));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % self.modulus).collect();
        c.resize(self.degree() as usize, 0);
        Ok(self.raw(c))
    }

    pub fn from_padics(self: &Arc<Self>, coeffs: &[PAdicInt]) -> Result<ZqElem> {
        for c in coeffs {
            if c.p() != self.p() {
                return Err(Error::PrimeMismatch(c.p(), self.p()));
            }
            if c.precision() != self.precision {
                return Err(Error::RingMismatch);
            }
        }
        let residues: Vec<u64> = coeffs.iter().map(PAdicInt::residue).collect();
        self.from_residues(&residues)
    }

    /// Coefficient-wise lift of `v` with digits in `[0, p)`.
    pub fn lift(self: &Arc<Self>, v: &FqElem) -> ZqElem {
        self.raw(v.coeffs().iter().map(|&c| c as u64).collect())
    }

    /// The Teichmüller lift `tau(v)`: the unique `t = v mod p` with `t^q = t`.
    pub fn teichmuller(self: &Arc<Self>, v: &FqElem) -> Result<ZqElem> {
        if **v.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if self.field.order() <= TEICH_TABLE_LIMIT {
            let table = self.teich_table.get_or_init(|| {
                self.field
                    .elements()
                    .map(|u| self.teichmuller_by_iteration(&u).coeffs)
                    .collect()
            });
            return Ok(self.raw(table[v.index() as usize].clone()));
        }
        Ok(self.teichmuller_by_iteration(v))
    }

    /// Iterates `x -> x^q` from the naive lift until it is fixed. Each step
    /// gains at least one `p`-adic digit, so `N + 2` steps always suffice.
    pub fn teichmuller_by_iteration(self: &Arc<Self>, v: &FqElem) -> ZqElem {
        let q = self.field.order() as u64;
        let mut x = self.lift(v);
        for _ in 0..self.precision + 2 {
            let next = x.pow(q);
            if next == x {
                return x;
            }
            x = next;
        }
        panic!("Teichmüller iteration did not converge for {v:?}");
    }

    /// `sum tau(digits[i]) p^i`.
    pub fn from_teich_digits(self: &Arc<Self>, digits: &[FqElem]) -> Result<ZqElem> {
        if digits.len() > self.precision as usize {
            return Err(Error::InsufficientPrecision);
        }
        let mut acc = self.zero();
        let mut p_pow = 1u64;
        for d in digits {
            let t = self.teichmuller(d)?;
            acc = acc.add(&t.scale(p_pow))?;
            p_pow = ((p_pow as u128 * self.p() as u128) % self.modulus as u128) as u64;
        }
        Ok(acc)
    }
}

#[derive(Clone)]
pub struct ZqElem {
    ring: Arc<ZqRing>,
    coeffs: Vec<u64>,
}

impl PartialEq for ZqElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.ring == *other.ring
    }
}

impl Eq for ZqElem {}

impl fmt::Debug for ZqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zq(N={}){:?}", self.ring.precision, self.coeffs)
    }
}

/// JSON payload: explicit `p`, `n`, `N` and little-endian digit vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZqPayload {
    pub p: u32,
    pub n: u32,
    #[serde(rename = "N")]
    pub precision: u32,
    pub coeffs: Vec<Vec<u32>>,
}

impl ZqElem {
    pub fn ring(&self) -> &Arc<ZqRing> {
        &self.ring
    }

    pub fn precision(&self) -> u32 {
        self.ring.precision
    }

    /// Coefficients as residues in `[0, p^N)`.
    pub fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeffs(&self) -> Vec<PAdicInt> {
        self.coeffs
            .iter()
            .map(|&r| PAdicInt::from_residue(r, self.ring.p(), self.ring.precision))
            .collect()
    }

    pub fn payload(&self) -> ZqPayload {
        ZqPayload {
            p: self.ring.p(),
            n: self.ring.degree(),
            precision: self.ring.precision,
            coeffs: self.coeffs().iter().map(|c| c.digits().to_vec()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The element lies in `Z/p^N`, i.e. only the constant coefficient is set.
    pub fn as_scalar(&self) -> Option<PAdicInt> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(PAdicInt::from_residue(
                self.coeffs[0],
                self.ring.p(),
                self.ring.precision,
            ))
        } else {
            None
        }
    }

    fn check(&self, other: &ZqElem) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u64>) -> ZqElem {
        ZqElem {
            ring: Arc::clone(&self.ring),
            coeffs,
        }
    }

    pub fn add(&self, other: &ZqElem) -> Result<ZqElem> {
        self.check(other)?;
        let m = self.ring.modulus;
        Ok(self.with(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| ((a as u128 + b as u128) % m as u128) as u64)
                .collect(),
        ))
    }

    pub fn neg(&self) -> ZqElem {
        let m = self.ring.modulus;
        self.with(self.coeffs.iter().map(|&a| (m - a) % m).collect())
    }

    pub fn sub(&self, other: &ZqElem) -> Result<ZqElem> {
        self.add(&other.neg())
    }

    /// Multiplication by an integer.
    pub fn scale(&self, k: u64) -> ZqElem {
        let m = self.ring.modulus as u128;
        let k = k as u128 % m;
        self.with(
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * k) % m) as u64)
                .collect(),
        )
    }

    pub fn mul(&self, other: &ZqElem) -> Result<ZqElem> {
        self.check(other)?;
        let n = self.ring.degree() as usize;
        let m = self.ring.modulus as u128;
        let mut prod = vec![0u128; 2 * n - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u128 * b as u128) % m;
            }
        }
        // Reduce by the monic lifted modulus from the top degree down.
        let f = &self.ring.lifted_modulus;
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &fi) in f[..n].iter().enumerate() {
                let t = (c * fi as u128) % m;
                prod[k - n + i] = (prod[k - n + i] + m - t) % m;
            }
        }
        Ok(self.with(prod[..n].iter().map(|&c| c as u64).collect()))
    }

    pub fn pow(&self, mut e: u64) -> ZqElem {
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

    /// Coefficient-wise digit 0.
    pub fn reduce_mod_p(&self) -> FqElem {
        let p = self.ring.p() as u64;
        let digits: Vec<u32> = self.coeffs.iter().map(|&c| (c % p) as u32).collect();
        self.ring
            .field
            .elem(&digits)
            .expect("digits are below p by construction")
    }

    /// Inverse by Newton iteration seeded with the inverse in `F_q`.
    pub fn inv(&self) -> Result<ZqElem> {
        let v = self.reduce_mod_p();
        if v.is_zero() {
            return Err(Error::NotAUnit);
        }
        let mut y = self.ring.lift(&v.inv()?);
        let two = self.ring.from_int(2);
        let mut correct = 1;
        while correct < self.ring.precision {
            y = y.mul(&two.sub(&self.mul(&y)?)?)?;
            correct *= 2;
        }
        Ok(y)
    }

    /// Truncates to a lower precision.
    pub fn reduce(&self, precision: u32) -> Result<ZqElem> {
        if precision > self.ring.precision {
            return Err(Error::InsufficientPrecision);
        }
        let ring = self.ring.with_precision(precision)?;
        let m = ring.modulus;
        Ok(ZqElem {
            coeffs: self.coeffs.iter().map(|&c| c % m).collect(),
            ring,
        })
    }

    /// Exact division by `p` into the ring of precision `N - 1`.
    pub fn div_exact_by_p(&self) -> Result<ZqElem> {
        let p = self.ring.p() as u64;
        if self.coeffs.iter().any(|&c| c % p != 0) {
            return Err(Error::NotDivisible);
        }
        if self.ring.precision == 1 {
            return Err(Error::PrecisionExhausted);
        }
        let ring = self.ring.with_precision(self.ring.precision - 1)?;
        Ok(ZqElem {
            coeffs: self.coeffs.iter().map(|&c| c / p).collect(),
            ring,
        })
    }

    /// Greedy Teichmüller expansion `x = sum tau(x_i) p^i`, `N` digits.
    pub fn teich_digits(&self) -> Vec<FqElem> {
        let p = self.ring.p() as u64;
        let mut digits = Vec::with_capacity(self.ring.precision as usize);
        let mut cur = self.clone();
        for _ in 0..self.ring.precision {
            let d = cur.reduce_mod_p();
            let t = self.ring.teichmuller(&d).expect("same field");
            let rest = cur.sub(&t).expect("same ring");
            // rest is divisible by p; its quotient is exact modulo p^{N-1},
            // and each later digit only needs one more p-adic place.
            cur = rest.with(rest.coeffs.iter().map(|&c| c / p).collect());
            digits.push(d);
        }
        digits
    }

    /// The canonical Frobenius lift `sum tau(x_i) p^i -> sum tau(x_i^p) p^i`.
    pub fn frobenius_lift(&self) -> ZqElem {
        let digits: Vec<FqElem> = self.teich_digits().iter().map(FqElem::frobenius).collect();
        self.ring
            .from_teich_digits(&digits)
            .expect("N digits fit precision N")
    }
}

impl fmt::Display for ZqElem {
    /// Canonical form `p=3;n=2;N=4;coeffs=[2,1,0,0|0,1,0,0]`: one
    /// little-endian digit list per polynomial coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self
            .coeffs()
            .iter()
            .map(|c| {
                c.digits()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(
            f,
            "p={};n={};N={};coeffs=[{}]",
            self.ring.p(),
            self.ring.degree(),
            self.ring.precision,
            coeffs.join("|")
        )
    }
}

impl FromStr for ZqElem {
    type Err = Error;

    /// Parses the canonical form in the canonical field `F_{p^n}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(';');
        let p = parse_u32(parse_field(parts.next(), "p")?)?;
        let n = parse_u32(parse_field(parts.next(), "n")?)?;
        let prec = parse_u32(parse_field(parts.next(), "N")?)?;
        let body = parse_field(parts.next(), "coeffs")?;
        if parts.next().is_some() {
            return Err(Error::Parse("trailing fields".into()));
        }
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("coeffs must be bracketed".into()))?;
        let field = FqField::new(p as u64, n)?;
        let ring = ZqRing::new(&field, prec)?;
        let coeffs = body
            .split('|')
            .map(|c| {
                let digits = c.split(',').map(parse_u32).collect::<Result<Vec<_>>>()?;
                if digits.len() != prec as usize {
                    return Err(Error::Parse(format!(
                        "N={prec} but {} digits given",
                        digits.len()
                    )));
                }
                PAdicInt::from_digits(p, digits)
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != n as usize {
            return Err(Error::Parse(format!(
                "n={n} but {} coefficients given",
                coeffs.len()
            )));
        }
        ring.from_padics(&coeffs)
    }
}
