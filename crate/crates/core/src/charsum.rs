//! Teichmüller-valued characters and character sums.
//!
//! Multiplicative characters are `chi_a = tau^a` on `F_q^×` with values in
//! `Z_q`. Jacobi sums are the convolutions `(chi_a * chi_b)(1)`. Gauss sums
//! pair `chi_a` with the additive character `psi(c) = theta(tau(c))`, where
//! `theta(X) = exp(pi X - pi X^p)` is Dwork's exponential and
//! `pi^{p-1} = -p`; they live in the ramified [`PiRing`].

use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gamma::gamma_p;
use crate::gfq::FqElem;
use crate::gfq::FqField;
use crate::pi_ring::{PiRing, PiRingElem};
use crate::report::{Report, ToPayload};
use crate::witt::{ZqElem, ZqRing};
use crate::zp::PAdicInt;

/// `chi_a = tau^a`, the exponent taken mod `q - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultChar {
    field: Arc<FqField>,
    exponent: u64,
}

impl MultChar {
    pub fn new(field: &Arc<FqField>, exponent: i64) -> MultChar {
        let order = field.order() as i64 - 1;
        MultChar {
            field: Arc::clone(field),
            exponent: exponent.rem_euclid(order) as u64,
        }
    }

    /// A character of exact order `m`; requires `m | q - 1`.
    pub fn of_order(field: &Arc<FqField>, m: u64) -> Result<MultChar> {
        let order = field.order() as u64 - 1;
        if m == 0 || !order.is_multiple_of(m) {
            return Err(Error::DegreeDoesNotDivide {
                m,
                q_minus_one: order,
            });
        }
        Ok(MultChar::new(field, (order / m) as i64))
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn pow(&self, k: i64) -> MultChar {
        let order = self.field.order() as i128 - 1;
        let e = (self.exponent as i128 * k as i128).rem_euclid(order);
        MultChar::new(&self.field, e as i64)
    }
}

/// Powers of `tau(generator)` in one `Z_q`, so that
/// `chi_a(x) = tau(g)^{a log x}`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    ring: Arc<ZqRing>,
    tau_g_powers: Vec<ZqElem>,
}

impl CharacterTable {
    pub fn new(ring: &Arc<ZqRing>) -> Result<CharacterTable> {
        let field = ring.field();
        let tau_g = ring.teichmuller(&field.generator())?;
        let order = field.order() as usize - 1;
        let mut tau_g_powers = Vec::with_capacity(order);
        let mut cur = ring.one();
        for _ in 0..order {
            tau_g_powers.push(cur.clone());
            cur = cur.mul(&tau_g)?;
        }
        Ok(CharacterTable {
            ring: Arc::clone(ring),
            tau_g_powers,
        })
    }

    pub fn ring(&self) -> &Arc<ZqRing> {
        &self.ring
    }

    /// `chi(x)`, with `chi(0) = 0` for every character.
    pub fn eval(&self, chi: &MultChar, x: &FqElem) -> Result<ZqElem> {
        if **chi.field() != **self.ring.field() || **x.field() != **chi.field() {
            return Err(Error::FieldMismatch);
        }
        if x.is_zero() {
            return Ok(self.ring.zero());
        }
        let order = self.tau_g_powers.len() as u128;
        let k = (chi.exponent() as u128 * x.discrete_log()? as u128) % order;
        Ok(self.tau_g_powers[k as usize].clone())
    }

    /// `sum_{x + y = z} c(x) c'(y)`.
    pub fn convolution(
        &self,
        c: &MultChar,
        c2: &MultChar,
        z: &FqElem,
        exec: Execution,
    ) -> Result<ZqElem> {
        if **c.field() != **c2.field() {
            return Err(Error::FieldMismatch);
        }
        let field = self.ring.field();
        let q = field.order() as u64;
        let terms = exec.map_range(q, |i| -> Result<ZqElem> {
            let x = field.from_index(i);
            let y = z.try_sub(&x)?;
            self.eval(c, &x)?.mul(&self.eval(c2, &y)?)
        });
        terms
            .into_iter()
            .try_fold(self.ring.zero(), |acc, t| acc.add(&t?))
    }

    /// `J(chi_a, chi_b) = (chi_a * chi_b)(1)`.
    pub fn jacobi(&self, a: i64, b: i64, exec: Execution) -> Result<ZqElem> {
        let field = self.ring.field();
        self.convolution(
            &MultChar::new(field, a),
            &MultChar::new(field, b),
            &field.one(),
            exec,
        )
    }
}

/// `chi(x)` in `Z_q` at precision `N`.
pub fn char_eval(chi: &MultChar, x: &FqElem, precision: u32) -> Result<ZqElem> {
    let ring = ZqRing::new(chi.field(), precision)?;
    CharacterTable::new(&ring)?.eval(chi, x)
}

pub fn char_convolution(c: &MultChar, c2: &MultChar, z: &FqElem, precision: u32) -> Result<ZqElem> {
    let ring = ZqRing::new(c.field(), precision)?;
    CharacterTable::new(&ring)?.convolution(c, c2, z, Execution::default())
}

pub fn jacobi_sum(a: i64, b: i64, field: &Arc<FqField>, precision: u32) -> Result<ZqElem> {
    let ring = ZqRing::new(field, precision)?;
    CharacterTable::new(&ring)?.jacobi(a, b, Execution::default())
}

/// `pi^k / k!` for `k = 0..=terms`. Writing `k! = p^v u` with `u` prime to
/// `p` (both exact, factor by factor), `pi^k / k! = (-1)^e p^{e-v} pi^r / u`
/// with `k = e (p-1) + r`; `v <= e` keeps every coefficient integral.
fn exp_pi_coefficients(ring: &PiRing, terms: u64) -> Result<Vec<PiRingElem>> {
    let p = ring.p() as u64;
    let d = ring.rank() as u64;
    let m = ring.modulus();
    let mut out = Vec::with_capacity(terms as usize + 1);
    let mut v = 0u64;
    let mut unit = 1u64 % m;
    for k in 0..=terms {
        if k > 0 {
            let mut f = k;
            while f % p == 0 {
                f /= p;
                v += 1;
            }
            unit = ((unit as u128 * (f % m) as u128) % m as u128) as u64;
        }
        let (e, r) = (k / d, k % d);
        debug_assert!(v <= e);
        let unit_inv = PAdicInt::from_residue(unit, ring.p(), ring.precision())
            .unit_inverse()?
            .residue();
        let p_part = crate::gfq::pow_mod(p, e - v, m);
        let mut c = ((p_part as u128 * unit_inv as u128) % m as u128) as u64;
        if e % 2 == 1 {
            c = (m - c) % m;
        }
        let mut coeffs = vec![0; ring.rank()];
        coeffs[r as usize] = c;
        out.push(ring.from_coeffs(&coeffs)?);
    }
    Ok(out)
}

/// Coefficients `c_0..=c_K` of `theta(X) = exp(pi X) exp(-pi X^p)`.
pub fn dwork_theta(terms: usize, p: u32, precision: u32) -> Result<Vec<PiRingElem>> {
    let ring = PiRing::new(p, precision)?;
    let exp_pi = exp_pi_coefficients(&ring, terms as u64)?;
    let p = p as usize;
    let mut out = Vec::with_capacity(terms + 1);
    for m in 0..=terms {
        let mut acc = ring.zero();
        for j in 0..=m / p {
            // (-pi)^j / j! times pi^{m - pj} / (m - pj)!
            let mut second = exp_pi[j].clone();
            if j % 2 == 1 {
                second = second.neg();
            }
            acc = acc.add(&exp_pi[m - p * j].mul(&second)?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Default initial number of series terms.
pub fn default_terms(p: u32) -> usize {
    2 * p as usize
}

/// Hard cap on series terms.
pub fn term_cap(p: u32, requested: usize) -> usize {
    (64 * p as usize).max(requested)
}

fn psi_values(coeffs: &[PiRingElem], teich: &[u64], ring: &PiRing) -> Result<Vec<PiRingElem>> {
    teich
        .iter()
        .map(|&t| {
            // Horner evaluation of theta at tau(c).
            let mut acc = ring.zero();
            for c in coeffs.iter().rev() {
                acc = acc.scale(t).add(c)?;
            }
            Ok(acc)
        })
        .collect()
}

/// The additive character `psi(c) = theta(tau(c))` for all `c` in `F_p`.
#[derive(Debug, Clone)]
pub struct AdditiveCharacter {
    ring: PiRing,
    /// Number of series terms that gave a stable result.
    terms: usize,
    values: Vec<PiRingElem>,
}

impl AdditiveCharacter {
    /// Evaluates with `terms`, doubling until two successive truncations
    /// agree and `psi(1)` is a nontrivial `p`-th root of unity.
    pub fn new(p: u32, precision: u32, terms: usize) -> Result<AdditiveCharacter> {
        let ring = PiRing::new(p, precision)?;
        let zp = ZqRing::new(&FqField::new(p as u64, 1)?, precision)?;
        let teich: Vec<u64> = zp
            .field()
            .elements()
            .map(|c| zp.teichmuller(&c).map(|t| t.residues()[0]))
            .collect::<Result<_>>()?;
        let cap = term_cap(p, terms);
        let mut k = terms.max(1);
        let mut prev: Option<Vec<PiRingElem>> = None;
        loop {
            let coeffs = dwork_theta(k, p, precision)?;
            let values = psi_values(&coeffs, &teich, &ring)?;
            if prev.as_ref() == Some(&values) {
                let psi1 = &values[1];
                if *psi1 != ring.one() && psi1.pow(p as u64) == ring.one() {
                    return Ok(AdditiveCharacter {
                        ring,
                        terms: k,
                        values,
                    });
                }
            }
            prev = Some(values);
            if k >= cap {
                return Err(Error::SeriesTruncation(cap));
            }
            k = (2 * k).min(cap);
        }
    }

    pub fn ring(&self) -> PiRing {
        self.ring
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn value(&self, c: u64) -> &PiRingElem {
        &self.values[(c % self.ring.p() as u64) as usize]
    }

    pub fn values(&self) -> &[PiRingElem] {
        &self.values
    }

    /// `g(chi_a) = sum_{x != 0} tau(x)^a psi(x)`.
    pub fn gauss_sum(&self, a: i64) -> Result<PiRingElem> {
        let p = self.ring.p();
        let field = FqField::new(p as u64, 1)?;
        let zp = ZqRing::new(&field, self.ring.precision())?;
        let table = CharacterTable::new(&zp)?;
        let chi = MultChar::new(&field, a);
        let mut acc = self.ring.zero();
        for x in 1..p as u64 {
            let chi_x = table.eval(&chi, &field.from_index(x))?.residues()[0];
            acc = acc.add(&self.value(x).scale(chi_x))?;
        }
        Ok(acc)
    }
}

/// `psi(c)` at precision `N`, starting from `terms` series terms.
pub fn additive_character(c: u64, p: u32, precision: u32, terms: usize) -> Result<PiRingElem> {
    Ok(AdditiveCharacter::new(p, precision, terms)?
        .value(c)
        .clone())
}

/// The Gauss sum of `chi_a = tau^a` over the prime field `F_p`.
pub fn gauss_sum(a: i64, p: u32, precision: u32, terms: usize) -> Result<PiRingElem> {
    AdditiveCharacter::new(p, precision, terms)?.gauss_sum(a)
}

/// Rejects pairs where `a`, `b` or `a + b` is `0 mod order`.
pub fn admissible(a: i64, b: i64, order: i64) -> Result<()> {
    if a.rem_euclid(order) == 0 || b.rem_euclid(order) == 0 || (a + b).rem_euclid(order) == 0 {
        return Err(Error::NotAdmissible(format!(
            "a={a}, b={b}, a+b must be nonzero mod {order}"
        )));
    }
    Ok(())
}

/// `g(a) g(b) / g(a + b)` in the pi-ring at precision `N`.
pub fn gauss_coboundary(
    a: i64,
    b: i64,
    p: u32,
    precision: u32,
    terms: usize,
) -> Result<PiRingElem> {
    admissible(a, b, p as i64 - 1)?;
    // g(a + b) has pi-valuation below p - 1, so dividing costs at most one digit.
    let psi = AdditiveCharacter::new(p, precision + 1, terms)?;
    let ga = psi.gauss_sum(a)?;
    let gb = psi.gauss_sum(b)?;
    let gab = psi.gauss_sum(a + b)?;
    ga.mul(&gb)?.div(&gab)?.reduce(precision)
}

/// Checks `J(chi_a, chi_b) = g(a) g(b) / g(a + b)` in the pi-ring.
pub fn verify_gauss_jacobi(a: i64, b: i64, p: u32, precision: u32, terms: usize) -> Report {
    let report = Report::new(
        "charsum::gauss_coboundary",
        json!({ "p": p, "n": 1, "N": precision, "K": terms, "a": a, "b": b }),
    );
    let sides = || -> Result<(PiRingElem, PiRingElem)> {
        let field = FqField::new(p as u64, 1)?;
        let ring = PiRing::new(p, precision)?;
        let j = jacobi_sum(a, b, &field, precision)?;
        let j = ring.from_padic(&j.as_scalar().ok_or(Error::RingMismatch)?)?;
        Ok((j, gauss_coboundary(a, b, p, precision, terms)?))
    };
    pi_compare(report, sides())
}

fn pi_compare(report: Report, sides: Result<(PiRingElem, PiRingElem)>) -> Report {
    match sides {
        Ok((lhs, rhs)) => {
            let residual = lhs.sub(&rhs).expect("same ring");
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

/// Gross–Koblitz: `g(chi^{-a}) = -pi^a Gamma_p(a / (p - 1))` for `0 < a < p - 1`.
pub fn gross_koblitz_check(a: i64, p: u32, precision: u32, terms: usize) -> Report {
    let report = Report::new(
        "charsum::gross_koblitz",
        json!({ "p": p, "n": 1, "N": precision, "K": terms, "a": a }),
    );
    let sides = || -> Result<(PiRingElem, PiRingElem)> {
        if a <= 0 || a >= p as i64 - 1 {
            return Err(Error::NotAdmissible(format!("need 0 < a < {}", p - 1)));
        }
        let psi = AdditiveCharacter::new(p, precision, terms)?;
        let lhs = psi.gauss_sum(-a)?;
        let ring = psi.ring();
        let arg = PAdicInt::from_integer(a, p, precision)?
            .mul(&PAdicInt::from_integer(p as i64 - 1, p, precision)?.unit_inverse()?)?;
        let gamma = ring.from_padic(&gamma_p(&arg)?)?;
        let rhs = ring.pi_pow(a as u64).mul(&gamma)?.neg();
        Ok((lhs, rhs))
    };
    pi_compare(report, sides())
}

/// Affine points of `x^m + y^m = 1` over `F_q` by double loop.
pub fn count_fermat_brute(q: u64, m: u64, exec: Execution) -> Result<u64> {
    let field = FqField::with_order(q)?;
    MultChar::of_order(&field, m)?;
    let powers: Vec<FqElem> = field.elements().map(|x| x.pow(m)).collect();
    let one = field.one();
    let counts = exec.map_range(q, |i| {
        let xm = &powers[i as usize];
        powers.iter().filter(|ym| (xm + ym) == one).count() as u64
    });
    Ok(counts.into_iter().sum())
}

/// Smallest `N` with `p^N > 4 m^2 q`.
pub fn fermat_precision(q: u64, m: u64) -> Result<u32> {
    let (p, _) = crate::gfq::prime_power(q)?;
    let bound = 4 * m * m * q;
    let mut n = 1;
    let mut pn = p;
    while pn <= bound {
        pn *= p;
        n += 1;
    }
    Ok(n)
}

/// `q + sum_{a,b=1}^{m-1} J(chi^a, chi^b)` with `chi` of exact order `m`,
/// lifted from `Z_q` to the integer in `(-p^N/2, p^N/2]`.
pub fn count_fermat_jacobi(q: u64, m: u64, precision: u32, exec: Execution) -> Result<i64> {
    let field = FqField::with_order(q)?;
    let chi = MultChar::of_order(&field, m)?;
    let ring = ZqRing::new(&field, precision)?;
    let bound = 4 * m * m * q;
    if ring.modulus() <= bound {
        return Err(Error::CannotIdentifyInteger {
            modulus: ring.modulus(),
            bound,
        });
    }
    let table = CharacterTable::new(&ring)?;
    let e = chi.exponent() as i64;
    let mut total = ring.zero();
    for a in 1..m as i64 {
        for b in 1..m as i64 {
            total = total.add(&table.jacobi(a * e, b * e, exec)?)?;
        }
    }
    let scalar = total.as_scalar().ok_or(Error::CannotIdentifyInteger {
        modulus: ring.modulus(),
        bound,
    })?;
    Ok(q as i64 + scalar.symmetric())
}

/// Checks `J(a, b) J(-a, -b) = q` in `Z_q`.
pub fn verify_jacobi_norm(table: &CharacterTable, a: i64, b: i64, exec: Execution) -> Report {
    let ring = table.ring();
    let q = ring.field().order() as i64;
    let report = Report::new(
        "charsum::jacobi_norm",
        json!({
            "p": ring.p(), "n": ring.degree(), "N": ring.precision(), "a": a, "b": b
        }),
    );
    let sides = || -> Result<(ZqElem, ZqElem)> {
        admissible(a, b, q - 1)?;
        let lhs = table
            .jacobi(a, b, exec)?
            .mul(&table.jacobi(-a, -b, exec)?)?;
        Ok((lhs, ring.from_int(q)))
    };
    match sides() {
        Ok((lhs, rhs)) => {
            let residual = lhs.sub(&rhs).expect("same ring");
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

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, n: u32) -> Arc<FqField> {
        FqField::new(p, n).unwrap()
    }

    #[test]
    fn char_eval_examples() {
        let f5 = f(5, 1);
        let triv = MultChar::new(&f5, 0);
        for x in 1..5 {
            let v = char_eval(&triv, &f5.from_index(x), 3).unwrap();
            assert_eq!(v.as_scalar().unwrap().residue(), 1);
        }
        assert!(char_eval(&triv, &f5.zero(), 3).unwrap().is_zero());
        let quad = MultChar::of_order(&f5, 2).unwrap();
        assert_eq!(
            char_eval(&quad, &f5.from_int(4), 3)
                .unwrap()
                .as_scalar()
                .unwrap()
                .residue(),
            1
        );
        assert_eq!(
            char_eval(&quad, &f5.from_int(2), 3)
                .unwrap()
                .as_scalar()
                .unwrap()
                .residue(),
            124
        );
        let f9 = f(3, 2);
        let ring = ZqRing::new(&f9, 3).unwrap();
        let chi = MultChar::new(&f9, 3);
        let tau_g = ring.teichmuller(&f9.generator()).unwrap();
        assert_eq!(char_eval(&chi, &f9.generator(), 3).unwrap(), tau_g.pow(3));
    }

    /// Brute-force oracle for a Jacobi sum over F_p with integer arithmetic
    /// on Teichmüller residues, independent of CharacterTable.
    fn jacobi_oracle(a: u64, b: u64, p: u64, precision: u32) -> u64 {
        let m = p.pow(precision);
        let teich = |x: u64| {
            let mut t = x % m;
            for _ in 0..precision + 2 {
                t = crate::gfq::pow_mod(t, p, m);
            }
            t
        };
        let chi = |e: u64, x: u64| {
            if x.is_multiple_of(p) {
                0
            } else {
                crate::gfq::pow_mod(teich(x), e, m)
            }
        };
        (0..p).fold(0, |acc, x| (acc + chi(a, x) * chi(b, (1 + p - x) % p)) % m)
    }

    #[test]
    fn jacobi_examples() {
        let f5 = f(5, 1);
        let j = jacobi_sum(2, 2, &f5, 3).unwrap();
        assert_eq!(j.as_scalar().unwrap().symmetric(), -1);
        for (p, n) in [(5, 1), (7, 1), (3, 2)] {
            let field = f(p, n);
            let q = field.order() as i64;
            let j = jacobi_sum(0, 0, &field, 3).unwrap();
            assert_eq!(j, ZqRing::new(&field, 3).unwrap().from_int(q - 2));
        }
        for p in [5u64, 7] {
            let field = f(p, 1);
            for a in 0..p - 1 {
                for b in 0..p - 1 {
                    let j = jacobi_sum(a as i64, b as i64, &field, 3).unwrap();
                    assert_eq!(
                        j.residues()[0],
                        jacobi_oracle(a, b, p, 3),
                        "p={p} a={a} b={b}"
                    );
                }
                if a != 0 {
                    let j = jacobi_sum(a as i64, -(a as i64), &field, 3).unwrap();
                    let chi_minus_one =
                        char_eval(&MultChar::new(&field, a as i64), &field.from_int(-1), 3)
                            .unwrap();
                    assert_eq!(j, chi_minus_one.neg());
                }
            }
        }
    }

    #[test]
    fn convolution_over_f2_is_plain_loop() {
        let f2 = f(2, 1);
        let triv = MultChar::new(&f2, 0);
        // Only x = y = 1 is nonzero; 1 + 1 = 0 in F_2.
        let v = char_convolution(&triv, &triv, &f2.zero(), 2).unwrap();
        assert_eq!(v.as_scalar().unwrap().residue(), 1);
        let v = char_convolution(&triv, &triv, &f2.one(), 2).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn convolution_rejects_mixed_fields() {
        let a = MultChar::new(&f(5, 1), 1);
        let b = MultChar::new(&f(7, 1), 1);
        assert_eq!(
            char_convolution(&a, &b, &f(5, 1).one(), 2).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn theta_coefficients() {
        for p in [3u32, 5, 7] {
            let ring = PiRing::new(p, 3).unwrap();
            let c = dwork_theta(2 * p as usize, p, 3).unwrap();
            assert_eq!(c[0], ring.one());
            assert_eq!(c[1], ring.pi());
            // pi^p / p! - pi
            let fact: u64 = (1..=p as u64).product();
            let unit = PAdicInt::from_integer((fact / p as u64) as i64, p, 3)
                .unwrap()
                .unit_inverse()
                .unwrap()
                .residue();
            // pi^p / p! = pi^{p-1} pi / (p (p-1)!) = -pi / (p-1)!
            let expected = ring.pi().scale(unit).neg().sub(&ring.pi()).unwrap();
            assert_eq!(c[p as usize], expected);
        }
        // Frozen from an independent evaluation: c_5 = 25 pi mod 5^3.
        let c = dwork_theta(5, 5, 3).unwrap();
        assert_eq!(c[5].residues(), &[0, 25, 0, 0]);
    }

    #[test]
    fn additive_character_gates() {
        for p in [3u32, 5, 7, 11] {
            let psi = AdditiveCharacter::new(p, 4, default_terms(p)).unwrap();
            let ring = psi.ring();
            assert_eq!(psi.value(0), &ring.one());
            assert_ne!(psi.value(1), &ring.one());
            assert_eq!(psi.value(1).pow(p as u64), ring.one());
            let total = psi
                .values()
                .iter()
                .try_fold(ring.zero(), |acc, v| acc.add(v))
                .unwrap();
            assert!(total.is_zero());
            for a in 0..p as u64 {
                for b in 0..p as u64 {
                    assert_eq!(psi.value(a).mul(psi.value(b)).unwrap(), *psi.value(a + b));
                }
            }
        }
    }

    #[test]
    fn psi_frozen_values() {
        // Independent evaluation of theta(tau(1)) at N = 4.
        let psi = AdditiveCharacter::new(5, 4, 10).unwrap();
        assert_eq!(psi.value(1).residues(), &[156, 151, 358, 186]);
        let psi = AdditiveCharacter::new(7, 4, 14).unwrap();
        assert_eq!(psi.value(1).residues(), &[400, 820, 298, 2001, 1993, 78]);
    }

    #[test]
    fn truncation_cap_is_an_error() {
        // Starting at the cap leaves no room for a stability comparison.
        assert_eq!(
            AdditiveCharacter::new(5, 4, 320).unwrap_err(),
            Error::SeriesTruncation(320)
        );
        assert_eq!(term_cap(5, 1), 320);
    }

    #[test]
    fn gauss_sum_examples() {
        for p in [5u32, 7] {
            let psi = AdditiveCharacter::new(p, 4, default_terms(p)).unwrap();
            let ring = psi.ring();
            assert_eq!(psi.gauss_sum(0).unwrap(), ring.from_int(-1));
            let field = f(p as u64, 1);
            for a in 1..p as i64 - 1 {
                let prod = psi
                    .gauss_sum(a)
                    .unwrap()
                    .mul(&psi.gauss_sum(-a).unwrap())
                    .unwrap();
                let sign = char_eval(&MultChar::new(&field, a), &field.from_int(-1), 4)
                    .unwrap()
                    .as_scalar()
                    .unwrap()
                    .symmetric();
                assert_eq!(prod, ring.from_int(p as i64 * sign));
            }
        }
    }

    #[test]
    fn coboundary_examples() {
        let j = jacobi_sum(1, 1, &f(5, 1), 4).unwrap().as_scalar().unwrap();
        let g = gauss_coboundary(1, 1, 5, 4, 10).unwrap();
        assert_eq!(g, PiRing::new(5, 4).unwrap().from_padic(&j).unwrap());
        assert_eq!(
            gauss_coboundary(2, 3, 7, 4, 14).unwrap(),
            gauss_coboundary(3, 2, 7, 4, 14).unwrap()
        );
        assert!(matches!(
            gauss_coboundary(2, 2, 5, 4, 10),
            Err(Error::NotAdmissible(_))
        ));
        assert!(verify_gauss_jacobi(1, 2, 7, 4, 14).pass);
    }

    #[test]
    fn gross_koblitz_examples() {
        assert!(gross_koblitz_check(1, 5, 3, 10).pass);
        assert!(gross_koblitz_check(2, 5, 3, 10).pass);
        for a in 1..6 {
            assert!(gross_koblitz_check(a, 7, 3, 14).pass);
        }
        assert!(!gross_koblitz_check(0, 7, 3, 14).pass);
    }

    #[test]
    fn fermat_counts() {
        let exec = Execution::Sequential;
        assert_eq!(count_fermat_brute(5, 2, exec).unwrap(), 4);
        assert_eq!(count_fermat_jacobi(5, 2, 3, exec).unwrap(), 4);
        for (q, m) in [(5, 4), (7, 3), (13, 3), (13, 4), (9, 4), (9, 8), (25, 3)] {
            let n = fermat_precision(q, m).unwrap();
            let brute = count_fermat_brute(q, m, exec).unwrap() as i64;
            assert_eq!(
                count_fermat_jacobi(q, m, n, exec).unwrap(),
                brute,
                "q={q} m={m}"
            );
        }
        assert!(matches!(
            count_fermat_brute(7, 4, exec),
            Err(Error::DegreeDoesNotDivide { .. })
        ));
        assert!(matches!(
            count_fermat_jacobi(5, 2, 2, exec),
            Err(Error::CannotIdentifyInteger { .. })
        ));
    }

    #[test]
    fn jacobi_norm_relation() {
        for (p, n) in [(5, 1), (7, 1), (3, 2)] {
            let ring = ZqRing::new(&f(p, n), 3).unwrap();
            let table = CharacterTable::new(&ring).unwrap();
            let order = ring.field().order() as i64 - 1;
            for a in 1..order {
                for b in 1..order {
                    if (a + b) % order != 0 {
                        assert!(verify_jacobi_norm(&table, a, b, Execution::Sequential).pass);
                    }
                }
            }
        }
    }
}
