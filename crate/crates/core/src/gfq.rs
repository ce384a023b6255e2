//! Finite fields `F_q`, `q = p^n`, in a polynomial basis.
//!
//! The modulus is the lexicographically smallest monic irreducible
//! polynomial of degree `n`, comparing coefficients from the constant term
//! upward, and the generator of `F_q^×` is the smallest element of order
//! `q - 1` when coefficient vectors are read as base-`p` integers. Both
//! choices are deterministic, so every table derived from a field is
//! reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `k`, ascending.
pub fn prime_factors(mut k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            out.push(d);
            while k.is_multiple_of(d) {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// Splits a prime power `q` into `(p, n)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut n = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        n += 1;
    }
    Ok((p, n))
}

// Dense polynomials over F_p, lowest coefficient first, no trailing zeros.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let mut out: Vec<u32> = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        super::pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
    }

    /// Remainder of `a` modulo a nonzero `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let factor = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
            for (i, &c) in m.iter().enumerate() {
                let t = (factor * c as u64) % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        rem(&out, m, p)
    }

    pub fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut result = vec![1];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
            e >>= 1;
        }
        result
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            result = ((result as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        e >>= 1;
    }
    result
}

/// Rabin's test: `f` of degree `n` is irreducible over `F_p` iff
/// `X^{p^n} = X mod f` and `gcd(X^{p^d} - X, f) = 1` for every proper
/// divisor `d` of `n`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // powers[d] = X^{p^d} mod f
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(poly::rem(&x, f, p));
    for d in 1..=n {
        let prev: &Vec<u32> = &powers[d - 1];
        powers.push(poly::pow_mod(prev, p as u64, f, p));
    }
    if !poly::sub(&powers[n], &x, p).is_empty() {
        return false;
    }
    (1..n).filter(|d| n.is_multiple_of(*d)).all(|d| {
        let diff = poly::sub(&powers[d], &x, p);
        poly::gcd(f, &diff, p).len() == 1
    })
}

pub struct FqField {
    p: u32,
    n: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length `n + 1`.
    modulus: Vec<u32>,
    generator: Vec<u32>,
    exp_table: Vec<u32>,
    log_table: Vec<u32>,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FqField")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for FqField {}

fn digits_of(mut index: u64, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (index % p as u64) as u32;
            index /= p as u64;
            d
        })
        .collect()
}

fn index_of(coeffs: &[u32], p: u32) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| acc * p as u64 + c as u64)
}

impl FqField {
    /// Builds `F_{p^n}` with the canonical modulus and generator.
    pub fn new(p: u64, n: u32) -> Result<Arc<FqField>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, n });
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, n);

        let mut field = FqField {
            p,
            n,
            q,
            modulus,
            generator: Vec::new(),
            exp_table: Vec::new(),
            log_table: Vec::new(),
        };
        let order = (q - 1) as u64;
        let cofactors: Vec<u64> = prime_factors(order).iter().map(|l| order / l).collect();
        let one = {
            let mut v = vec![0; n as usize];
            v[0] = 1;
            v
        };
        for index in 1..q as u64 {
            let cand = digits_of(index, p, n);
            if cofactors.iter().all(|&e| field.raw_pow(&cand, e) != one) {
                field.generator = cand;
                break;
            }
        }
        debug_assert!(!field.generator.is_empty());

        let mut exp_table = Vec::with_capacity(order as usize);
        let mut log_table = vec![0u32; q as usize];
        let mut cur = one;
        for k in 0..order {
            let idx = index_of(&cur, p);
            exp_table.push(idx as u32);
            log_table[idx as usize] = k as u32;
            cur = field.raw_mul(&cur, &field.generator);
        }
        field.exp_table = exp_table;
        field.log_table = log_table;
        Ok(Arc::new(field))
    }

    /// Builds the field of order `q`.
    pub fn with_order(q: u64) -> Result<Arc<FqField>> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let (p, n) = prime_power(q)?;
        FqField::new(p, n)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn raw_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut r = poly::mul_mod(a, b, &self.modulus, self.p);
        r.resize(self.n as usize, 0);
        r
    }

    fn raw_pow(&self, a: &[u32], e: u64) -> Vec<u32> {
        let mut r = poly::pow_mod(a, e, &self.modulus, self.p);
        r.resize(self.n as usize, 0);
        r
    }

    pub fn elem(self: &Arc<Self>, coeffs: &[u32]) -> Result<FqElem> {
        if coeffs.len() > self.n as usize {
            return Err(Error::Parse(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.n
            )));
        }
        if let Some(&d) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::DigitOutOfRange {
                digit: d,
                p: self.p,
            });
        }
        let mut c = coeffs.to_vec();
        c.resize(self.n as usize, 0);
        Ok(FqElem {
            field: Arc::clone(self),
            coeffs: c,
        })
    }

    /// The element whose coefficient vector is the base-`p` expansion of `index`.
    pub fn from_index(self: &Arc<Self>, index: u64) -> FqElem {
        FqElem {
            field: Arc::clone(self),
            coeffs: digits_of(index % self.q as u64, self.p, self.n),
        }
    }

    /// The image of the integer `k` under `Z -> F_p -> F_q`.
    pub fn from_int(self: &Arc<Self>, k: i64) -> FqElem {
        let r = k.rem_euclid(self.p as i64) as u32;
        let mut coeffs = vec![0; self.n as usize];
        coeffs[0] = r;
        FqElem {
            field: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zero(self: &Arc<Self>) -> FqElem {
        self.from_index(0)
    }

    pub fn one(self: &Arc<Self>) -> FqElem {
        self.from_index(1)
    }

    pub fn generator(self: &Arc<Self>) -> FqElem {
        FqElem {
            field: Arc::clone(self),
            coeffs: self.generator.clone(),
        }
    }

    /// `generator^k`.
    pub fn exp(self: &Arc<Self>, k: u64) -> FqElem {
        let idx = self.exp_table[(k % (self.q as u64 - 1)) as usize];
        self.from_index(idx as u64)
    }

    /// All elements in index order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q as u64).map(move |i| self.from_index(i))
    }
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    // Lexicographic in (c_0, c_1, ..., c_{n-1}): c_0 varies slowest.
    let count = (p as u64).pow(n);
    for k in 0..count {
        let mut f: Vec<u32> = digits_of(k, p, n).into_iter().rev().collect();
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: Arc<FqField>,
    coeffs: Vec<u32>,
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq{:?}", self.coeffs)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FqElem {
    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Base-`p` integer reading of the coefficient vector.
    pub fn index(&self) -> u64 {
        index_of(&self.coeffs, self.field.p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &FqElem) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u32>) -> FqElem {
        FqElem {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    pub fn try_add(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        let p = self.field.p;
        Ok(self.with(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &FqElem) -> Result<FqElem> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.with(self.field.raw_mul(&self.coeffs, &other.coeffs)))
    }

    pub fn neg(&self) -> FqElem {
        let p = self.field.p;
        self.with(self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    /// Square-and-multiply.
    pub fn pow(&self, e: u64) -> FqElem {
        self.with(self.field.raw_pow(&self.coeffs, e))
    }

    pub fn inv(&self) -> Result<FqElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.q as u64 - 2))
    }

    /// The absolute Frobenius `x -> x^p`.
    pub fn frobenius(&self) -> FqElem {
        self.pow(self.field.p as u64)
    }

    /// The exponent `k` in `[0, q - 1)` with `generator^k = self`.
    pub fn discrete_log(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(self.field.log_table[self.index() as usize] as u64)
    }
}

impl Add for &FqElem {
    type Output = FqElem;
    fn add(self, rhs: &FqElem) -> FqElem {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &FqElem {
    type Output = FqElem;
    fn sub(self, rhs: &FqElem) -> FqElem {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &FqElem {
    type Output = FqElem;
    fn mul(self, rhs: &FqElem) -> FqElem {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        FqElem::neg(self)
    }
}
