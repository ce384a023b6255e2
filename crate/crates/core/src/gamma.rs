//! Morita's p-adic Gamma function and the p-adic Beta function.
//!
//! `Gamma_p(m) = (-1)^m prod_{0<j<m, p∤j} j` on nonnegative integers; a
//! residue `x mod p^N` is evaluated at its representative in `[0, p^N)`,
//! which is well defined because `Gamma_p` is continuous for odd `p`.

use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::report::{Report, ToPayload};
use crate::zp::{modulus_for, PAdicInt};

/// Upper bound on `p^N` for a single evaluation.
pub const MAX_GAMMA_MODULUS: u64 = 10_000_000;

fn check_prime(p: u32) -> Result<()> {
    if !crate::gfq::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    Ok(())
}

/// `Gamma_p(m) mod p^N` by direct product.
pub fn gamma_p_integer(m: i64, p: u32, precision: u32) -> Result<PAdicInt> {
    check_prime(p)?;
    if m < 0 {
        return Err(Error::NegativeArgument(m));
    }
    let modulus = modulus_for(p, precision)? as u128;
    let mut acc: u128 = 1 % modulus;
    for j in 1..m as u64 {
        if j % p as u64 != 0 {
            acc = acc * (j as u128 % modulus) % modulus;
        }
    }
    if m % 2 == 1 {
        acc = (modulus - acc) % modulus;
    }
    Ok(PAdicInt::from_residue(acc as u64, p, precision))
}

/// `Gamma_p(x)` at the precision of `x`.
pub fn gamma_p(x: &PAdicInt) -> Result<PAdicInt> {
    check_prime(x.p())?;
    if x.modulus() > MAX_GAMMA_MODULUS {
        return Err(Error::GammaTooLarge(x.modulus()));
    }
    gamma_p_integer(x.residue() as i64, x.p(), x.precision())
}

/// All of `Gamma_p(0), ..., Gamma_p(len - 1)` mod `p^N` by a running product.
pub fn gamma_table(len: u64, p: u32, precision: u32) -> Result<Vec<PAdicInt>> {
    check_prime(p)?;
    let modulus = modulus_for(p, precision)? as u128;
    let mut out = Vec::with_capacity(len as usize);
    // prod_{0<j<m, p∤j} j, without the sign
    let mut unsigned: u128 = 1 % modulus;
    for m in 0..len {
        if m >= 2 && (m - 1) % p as u64 != 0 {
            unsigned = unsigned * ((m - 1) as u128 % modulus) % modulus;
        }
        let signed = if m % 2 == 1 {
            (modulus - unsigned) % modulus
        } else {
            unsigned
        };
        out.push(PAdicInt::from_residue(signed as u64, p, precision));
    }
    Ok(out)
}

/// `B_p(a, b) = Gamma_p(a) Gamma_p(b) / Gamma_p(a + b)`.
pub fn beta_p(a: &PAdicInt, b: &PAdicInt) -> Result<PAdicInt> {
    let ga = gamma_p(a)?;
    let gb = gamma_p(b)?;
    let gab = gamma_p(&a.add(b)?)?;
    ga.mul(&gb)?.mul(&gab.unit_inverse()?)
}

/// `Gamma_p(x + 1) = -x Gamma_p(x)` for units `x`, `-Gamma_p(x)` otherwise.
pub fn functional_equation_check(x: &PAdicInt) -> Report {
    let report = Report::new("gamma::functional_equation", json!({ "x": x.to_payload() }));
    let sides = || -> Result<(PAdicInt, PAdicInt)> {
        let one = PAdicInt::one(x.p(), x.precision())?;
        let lhs = gamma_p(&x.add(&one)?)?;
        let gx = gamma_p(x)?;
        let rhs = if x.is_unit() {
            x.neg().mul(&gx)?
        } else {
            gx.neg()
        };
        Ok((lhs, rhs))
    };
    match sides() {
        Ok((lhs, rhs)) => {
            let residual = lhs.sub(&rhs).expect("same prime");
            let pass = residual.is_zero();
            report.sides(
                lhs.to_payload(),
                rhs.to_payload(),
                residual.to_payload(),
                pass,
            )
        }
        Err(e) => report.failed(e),
    }
}

/// Sign `s` with `Gamma_p(x) Gamma_p(1 - x) = s`: `(-1)^{x_0}` where
/// `x_0` in `{1, ..., p}` is congruent to `x` mod `p`.
pub fn reflection_sign(x: &PAdicInt) -> i64 {
    let r = x.digits()[0];
    let x0 = if r == 0 { x.p() } else { r };
    if x0 % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Counts violations of `Gamma_p(m) = Gamma_p(n) mod p^k` over all
/// `m = n mod p^k` with `m, n < p^limit_exp`, for `k = 1..=max_k`.
pub fn continuity_violations(p: u32, max_k: u32, limit_exp: u32, exec: Execution) -> Result<u64> {
    let len = (p as u64).pow(limit_exp);
    let table = gamma_table(len, p, max_k.max(1))?;
    let per_k = |k: u32| -> u64 {
        let pk = (p as u64).pow(k);
        // Congruence is an equivalence relation, so comparing every m with
        // its class representative m mod p^k covers all pairs.
        exec.map_range(len, |m| {
            let a = table[m as usize].reduce(k).unwrap();
            let b = table[(m % pk) as usize].reduce(k).unwrap();
            u64::from(a != b)
        })
        .into_iter()
        .sum()
    };
    Ok((1..=max_k).map(per_k).sum())
}
