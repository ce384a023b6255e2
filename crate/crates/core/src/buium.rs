//! Buium's p-derivation `delta_p(x) = (phi(x) - x^p) / p` and checks of its
//! sum and product laws.
//!
//! `phi` is [`ZqElem::frobenius_lift`] and the carry polynomial is
//! [`crate::zp::buium_carry`] on `Z/p^N`, extended here to `Z_q` through its
//! binomial expansion.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::{Report, ToPayload};
use crate::witt::ZqElem;
use crate::zp::{modulus_for, PAdicInt};

/// `delta_p(x)` at precision `N - 1`.
pub fn p_derivation(x: &ZqElem) -> Result<ZqElem> {
    if x.precision() < 2 {
        return Err(Error::InsufficientPrecision);
    }
    let p = x.ring().p() as u64;
    let diff = x.frobenius_lift().sub(&x.pow(p))?;
    diff.div_exact_by_p()
}

/// `delta_p` on `Z/p^N`, where the Frobenius lift is the identity.
pub fn p_derivation_zp(x: &PAdicInt) -> Result<PAdicInt> {
    if x.precision() < 2 {
        return Err(Error::InsufficientPrecision);
    }
    let n = x.precision();
    let k = x.to_bigint();
    let numer = &k - k.pow(x.p());
    PAdicInt::from_bigint(&(numer / BigInt::from(x.p())), x.p(), n - 1)
}

/// Fermat quotient `(k - k^p) / p mod p^{N-1}` over exact integers.
pub fn fermat_quotient(k: i64, p: u32, precision: u32) -> Result<PAdicInt> {
    if !crate::gfq::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if precision < 2 {
        return Err(Error::InsufficientPrecision);
    }
    modulus_for(p, precision)?;
    let k = BigInt::from(k);
    let numer = &k - k.pow(p);
    PAdicInt::from_bigint(&(numer / BigInt::from(p)), p, precision - 1)
}

/// `C(p, k) / p mod m` for `0 < k < p`.
fn reduced_binomial(p: u32, k: u32, m: u64) -> u64 {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(p - i) / BigInt::from(i + 1);
    }
    ((c / BigInt::from(p)) % BigInt::from(m)).to_u64().unwrap()
}

/// `C_p(x, y) = -sum_{0<k<p} (C(p,k)/p) x^k y^{p-k}` in `Z_q`, at precision `N - 1`.
pub fn carry_zq(x: &ZqElem, y: &ZqElem) -> Result<ZqElem> {
    let ring = x.ring();
    if x.precision() < 2 {
        return Err(Error::InsufficientPrecision);
    }
    let p = ring.p();
    let m = ring.modulus();
    let mut acc = ring.zero();
    let mut x_pow = x.clone();
    for k in 1..p {
        let term = x_pow.mul(&y.pow((p - k) as u64))?;
        acc = acc.add(&term.scale(reduced_binomial(p, k, m)))?;
        x_pow = x_pow.mul(x)?;
    }
    acc.neg().reduce(x.precision() - 1)
}

fn pair_inputs(x: &ZqElem, y: &ZqElem) -> serde_json::Value {
    json!({ "x": x.to_payload(), "y": y.to_payload() })
}

fn compare(report: Report, lhs: &ZqElem, rhs: &ZqElem) -> Report {
    let residual = lhs.sub(rhs).expect("same ring");
    let pass = residual.is_zero();
    report.sides(
        lhs.to_payload(),
        rhs.to_payload(),
        residual.to_payload(),
        pass,
    )
}

/// `delta(x + y) = delta(x) + delta(y) + C_p(x, y)`.
pub fn verify_sum_rule(x: &ZqElem, y: &ZqElem) -> Report {
    let report = Report::new("buium::sum_rule", pair_inputs(x, y));
    let sides = || -> Result<(ZqElem, ZqElem)> {
        let lhs = p_derivation(&x.add(y)?)?;
        let rhs = p_derivation(x)?
            .add(&p_derivation(y)?)?
            .add(&carry_zq(x, y)?)?;
        Ok((lhs, rhs))
    };
    match sides() {
        Ok((lhs, rhs)) => compare(report, &lhs, &rhs),
        Err(e) => report.failed(e),
    }
}

/// `delta(xy) = x^p delta(y) + delta(x) y^p + p delta(x) delta(y)`.
pub fn verify_product_rule(x: &ZqElem, y: &ZqElem) -> Report {
    let report = Report::new("buium::product_rule", pair_inputs(x, y));
    let sides = || -> Result<(ZqElem, ZqElem)> {
        let p = x.ring().p() as u64;
        let low = x.precision() - 1;
        let lhs = p_derivation(&x.mul(y)?)?;
        let dx = p_derivation(x)?;
        let dy = p_derivation(y)?;
        let xp = x.pow(p).reduce(low)?;
        let yp = y.pow(p).reduce(low)?;
        let rhs = xp
            .mul(&dy)?
            .add(&dx.mul(&yp)?)?
            .add(&dx.mul(&dy)?.scale(p))?;
        Ok((lhs, rhs))
    };
    match sides() {
        Ok((lhs, rhs)) => compare(report, &lhs, &rhs),
        Err(e) => report.failed(e),
    }
}

/// `phi(x) = x^p + p delta(x)` at precision `N - 1`.
pub fn verify_lift_reconstruction(x: &ZqElem) -> Report {
    let report = Report::new("buium::lift_reconstruction", json!({ "x": x.to_payload() }));
    let sides = || -> Result<(ZqElem, ZqElem)> {
        let low = x.precision() - 1;
        let p = x.ring().p() as u64;
        let lhs = x.frobenius_lift().reduce(low)?;
        let delta = p_derivation(x)?;
        // p * delta is known modulo p^N; reduce after scaling.
        let ring_n = x.ring();
        let lifted = ring_n
            .from_residues(delta.residues())?
            .scale(p)
            .reduce(low)?;
        let rhs = x.pow(p).reduce(low)?.add(&lifted)?;
        Ok((lhs, rhs))
    };
    match sides() {
        Ok((lhs, rhs)) => compare(report, &lhs, &rhs),
        Err(e) => report.failed(e),
    }
}
