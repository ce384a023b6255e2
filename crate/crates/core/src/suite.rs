//! Reproducible verification suites.
//!
//! A suite runs a fixed list of checks and tallies the per-case
//! [`Report`]s. Randomized checks draw from [`CounterRng`]: coordinate `c`
//! of argument `j` in sample `i` is `below((i * arity + j) * n + c, p^N)` on
//! stream `16 * check_id + param_index`, so the sample set depends only on
//! the seed. Cases are evaluated through an [`Execution`] and collected in
//! order, so the report is identical for either execution mode.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::buium::{
    fermat_quotient, verify_lift_reconstruction, verify_product_rule, verify_sum_rule,
};
use crate::charsum::{
    admissible, count_fermat_brute, count_fermat_jacobi, default_terms, fermat_precision,
    gross_koblitz_check, verify_gauss_jacobi, verify_jacobi_norm, AdditiveCharacter,
    CharacterTable,
};
use crate::cohomo::{coboundary2, cocycle2_check, Digit, GroupValuedMap};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gamma::{beta_p, functional_equation_check, gamma_p, gamma_table, reflection_sign};
use crate::gfq::{is_prime, FqField};
use crate::report::{Report, ToPayload};
use crate::rng::CounterRng;
use crate::witt::{ZqElem, ZqRing};
use crate::zp::{buium_carry, carry_cocycle, modulus_for, PAdicInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Carry,
    Buium,
    Gamma,
    Charsum,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Carry => "carry",
            Suite::Buium => "buium",
            Suite::Gamma => "gamma",
            Suite::Charsum => "charsum",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "carry" => Ok(Suite::Carry),
            "buium" => Ok(Suite::Buium),
            "gamma" => Ok(Suite::Gamma),
            "charsum" => Ok(Suite::Charsum),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!(
                "unknown suite {s:?}; expected carry, buium, gamma, charsum or all"
            ))),
        }
    }
}

/// Suite parameters. `None` selects the built-in parameter sets; setting
/// `p` replaces them with a single set built from `p`, `n` and `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: u64,
    pub p: Option<u32>,
    pub n: Option<u32>,
    #[serde(rename = "N")]
    pub precision: Option<u32>,
    #[serde(rename = "K")]
    pub terms: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 1000,
            p: None,
            n: None,
            precision: None,
            terms: None,
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig {
            seed,
            ..SuiteConfig::default()
        }
    }

    fn primes(&self, defaults: &[u32]) -> Vec<u32> {
        match self.p {
            Some(p) => vec![p],
            None => defaults.to_vec(),
        }
    }

    /// `(p, n, N)` triples.
    fn params(
        &self,
        defaults: &[(u32, u32, u32)],
        default_n: u32,
        default_precision: u32,
    ) -> Vec<(u32, u32, u32)> {
        match self.p {
            Some(p) => vec![(
                p,
                self.n.unwrap_or(default_n),
                self.precision.unwrap_or(default_precision),
            )],
            None => defaults.to_vec(),
        }
    }

    fn validate(&self) -> Result<()> {
        if let Some(p) = self.p {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p as u64));
            }
        }
        if self.n == Some(0) {
            return Err(Error::ZeroDegree);
        }
        if self.precision == Some(0) {
            return Err(Error::ZeroPrecision);
        }
        Ok(())
    }
}

/// Tally of one check over all of its cases.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub pass: bool,
    pub first_failure: Option<Report>,
}

impl CheckSummary {
    fn from_reports(name: &str, reports: Vec<Report>) -> CheckSummary {
        let cases = reports.len() as u64;
        let failures = reports.iter().filter(|r| !r.pass).count() as u64;
        CheckSummary {
            name: name.to_string(),
            cases,
            failures,
            pass: failures == 0 && cases > 0,
            first_failure: reports.into_iter().find(|r| !r.pass),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub config: SuiteConfig,
    pub checks: Vec<CheckSummary>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run(suite: Suite, config: &SuiteConfig, exec: Execution) -> Result<SuiteReport> {
    config.validate()?;
    let mut checks = Vec::new();
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::Carry, Suite::Buium, Suite::Gamma, Suite::Charsum],
        _ => std::slice::from_ref(&suite),
    };
    for part in parts {
        let mut list = match part {
            Suite::Carry => carry_suite(config, exec)?,
            Suite::Buium => buium_suite(config, exec)?,
            Suite::Gamma => gamma_suite(config, exec)?,
            Suite::Charsum => charsum_suite(config, exec)?,
            Suite::All => unreachable!(),
        };
        checks.append(&mut list);
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        seed: config.seed,
        config: config.clone(),
        checks,
        pass,
    })
}

/// A report comparing two already computed payloads.
fn equality(check: &str, inputs: Value, lhs: Value, rhs: Value) -> Report {
    let pass = lhs == rhs;
    let residual = if pass { json!(0) } else { json!("differ") };
    Report::new(check, inputs).sides(lhs, rhs, residual, pass)
}

fn from_result(check: &str, inputs: Value, sides: Result<(Value, Value)>) -> Report {
    match sides {
        Ok((lhs, rhs)) => equality(check, inputs, lhs, rhs),
        Err(e) => Report::new(check, inputs).failed(e),
    }
}

struct Sampler {
    rng: CounterRng,
    arity: u64,
}

impl Sampler {
    fn new(seed: u64, check_id: u32, param_index: usize, arity: u64) -> Sampler {
        Sampler {
            rng: CounterRng::new(seed).stream(16 * check_id + param_index as u32),
            arity,
        }
    }

    fn zq(&self, ring: &Arc<ZqRing>, sample: u64, arg: u64) -> ZqElem {
        let n = ring.degree() as u64;
        let modulus = ring.modulus();
        let coeffs: Vec<u64> = (0..n)
            .map(|c| self.rng.below((sample * self.arity + arg) * n + c, modulus))
            .collect();
        ring.from_residues(&coeffs).expect("reduced residues")
    }

    fn zp(&self, p: u32, precision: u32, sample: u64, arg: u64) -> Result<PAdicInt> {
        let modulus = modulus_for(p, precision)?;
        let r = self.rng.below(sample * self.arity + arg, modulus);
        PAdicInt::from_integer(r as i64, p, precision)
    }
}

fn ring(p: u32, n: u32, precision: u32) -> Result<Arc<ZqRing>> {
    ZqRing::new(&FqField::new(p as u64, n)?, precision)
}

fn carry_suite(config: &SuiteConfig, exec: Execution) -> Result<Vec<CheckSummary>> {
    let mut out = Vec::new();

    let carry = GroupValuedMap::additive("c_p", |a: &Digit, b: &Digit| {
        carry_cocycle(a.value, b.value, a.p).map(i64::from)
    });
    let mut reports = Vec::new();
    for p in config.primes(&[2, 3, 5, 7, 11, 13]) {
        let triples: Vec<(u32, u32, u32)> = (0..p * p * p)
            .map(|i| (i % p, i / p % p, i / (p * p)))
            .collect();
        reports.extend(exec.map(&triples, |&(a, b, c)| {
            let d = |v| Digit { value: v, p };
            cocycle2_check(&carry, &d(a), &d(b), &d(c))
        }));
    }
    out.push(CheckSummary::from_reports("zp::carry_cocycle", reports));

    // (a0, a1) * (b0, b1) = (a0 + b0, a1 + b1 + c_p(a0, b0)) mod p.
    let mut reports = Vec::new();
    for p in config.primes(&[3, 5]) {
        let p2 = p * p;
        let pairs: Vec<(u32, u32)> = (0..p2 * p2).map(|i| (i % p2, i / p2)).collect();
        reports.extend(exec.map(&pairs, |&(a, b)| {
            let inputs = json!({ "p": p, "n": 1, "N": 2, "a": a, "b": b });
            let sides = || -> Result<(Value, Value)> {
                let (a0, a1, b0, b1) = (a % p, a / p, b % p, b / p);
                let star = [(a0 + b0) % p, (a1 + b1 + carry_cocycle(a0, b0, p)?) % p];
                let x = PAdicInt::from_integer(a as i64, p, 2)?;
                let y = PAdicInt::from_integer(b as i64, p, 2)?;
                let sum = PAdicInt::from_integer(((a + b) % p2) as i64, p, 2)?;
                if x.add(&y)? != sum {
                    return Err(Error::Parse(format!(
                        "PAdicInt addition disagrees at {a} + {b}"
                    )));
                }
                Ok((json!(star), json!(sum.digits())))
            };
            from_result("zp::star_product", inputs, sides())
        }));
    }
    out.push(CheckSummary::from_reports("zp::star_product", reports));

    let carry_poly =
        GroupValuedMap::additive("C_p", |x: &PAdicInt, y: &PAdicInt| buium_carry(x, y));
    let mut reports = Vec::new();
    for (k, (p, _, precision)) in config
        .params(&[(3, 1, 4), (5, 1, 4), (7, 1, 3)], 1, 4)
        .into_iter()
        .enumerate()
    {
        let s = Sampler::new(config.seed, 1, k, 3);
        modulus_for(p, precision)?;
        reports.extend(exec.map_range(config.samples, |i| {
            let args = (0..3)
                .map(|j| s.zp(p, precision, i, j))
                .collect::<Result<Vec<_>>>();
            match args {
                Ok(v) => cocycle2_check(&carry_poly, &v[0], &v[1], &v[2]),
                Err(e) => Report::new("cohomo::cocycle2[C_p]", json!({ "p": p, "N": precision }))
                    .failed(e),
            }
        }));
    }
    out.push(CheckSummary::from_reports(
        "zp::buium_carry_cocycle",
        reports,
    ));
    Ok(out)
}

fn buium_suite(config: &SuiteConfig, exec: Execution) -> Result<Vec<CheckSummary>> {
    let mut out = Vec::new();
    let spots = config.p.is_none();

    if spots {
        let r = ring(5, 1, 2)?;
        let t = r.teichmuller(&r.field().from_int(2))?;
        let report = equality(
            "witt::teichmuller",
            json!({ "p": 5, "n": 1, "N": 2, "v": 2 }),
            json!(t.coeffs()[0].digits()),
            json!([2, 1]),
        );
        out.push(CheckSummary::from_reports(
            "witt::teichmuller_spot",
            vec![report],
        ));
    }

    let teich_params = config.params(&[(5, 1, 4), (7, 1, 4), (3, 2, 4), (5, 2, 4)], 1, 4);
    let mut roots = Vec::new();
    let mut sections = Vec::new();
    let mut mult = Vec::new();
    for &(p, n, precision) in &teich_params {
        let r = ring(p, n, precision)?;
        let q = r.field().order() as u64;
        let lifts: Vec<ZqElem> = r
            .field()
            .elements()
            .map(|v| r.teichmuller(&v))
            .collect::<Result<_>>()?;
        let inputs = |v: u64| json!({ "p": p, "n": n, "N": precision, "v": v });
        for v in 1..q {
            let t = &lifts[v as usize];
            roots.push(equality(
                "witt::teichmuller_root_of_unity",
                inputs(v),
                t.pow(q - 1).to_payload(),
                r.one().to_payload(),
            ));
        }
        for v in 0..q {
            let back = lifts[v as usize].reduce_mod_p().index();
            sections.push(equality(
                "witt::teichmuller_section",
                inputs(v),
                json!(back),
                json!(v),
            ));
        }
        let field = r.field();
        mult.extend(exec.map_range(q * q, |i| {
            let (u, v) = (i % q, i / q);
            let uv = field
                .from_index(u)
                .try_mul(&field.from_index(v))
                .expect("same field");
            let lhs = lifts[u as usize]
                .mul(&lifts[v as usize])
                .expect("same ring");
            equality(
                "witt::teichmuller_multiplicative",
                json!({ "p": p, "n": n, "N": precision, "u": u, "v": v }),
                lhs.to_payload(),
                lifts[uv.index() as usize].to_payload(),
            )
        }));
    }
    out.push(CheckSummary::from_reports(
        "witt::teichmuller_root_of_unity",
        roots,
    ));
    out.push(CheckSummary::from_reports(
        "witt::teichmuller_section",
        sections,
    ));
    out.push(CheckSummary::from_reports(
        "witt::teichmuller_multiplicative",
        mult,
    ));

    let mut additive = Vec::new();
    let mut multiplicative = Vec::new();
    let mut mod_p = Vec::new();
    let mut order = Vec::new();
    for (k, (p, n, precision)) in config
        .params(&[(3, 2, 4), (5, 2, 4)], 2, 4)
        .into_iter()
        .enumerate()
    {
        let r = ring(p, n, precision)?;
        let s = Sampler::new(config.seed, 2, k, 2);
        let cases = exec.map_range(config.samples, |i| {
            let x = s.zq(&r, i, 0);
            let y = s.zq(&r, i, 1);
            let inputs = json!({ "x": x.to_payload(), "y": y.to_payload() });
            let (fx, fy) = (x.frobenius_lift(), y.frobenius_lift());
            let sum = equality(
                "witt::frobenius_lift(x + y)",
                inputs.clone(),
                x.add(&y).expect("same ring").frobenius_lift().to_payload(),
                fx.add(&fy).expect("same ring").to_payload(),
            );
            let prod = equality(
                "witt::frobenius_lift(x y)",
                inputs,
                x.mul(&y).expect("same ring").frobenius_lift().to_payload(),
                fx.mul(&fy).expect("same ring").to_payload(),
            );
            let red = equality(
                "witt::frobenius_lift mod p",
                json!({ "x": x.to_payload() }),
                json!(fx.reduce_mod_p().coeffs()),
                json!(x.reduce_mod_p().frobenius().coeffs()),
            );
            let mut iter = x.clone();
            for _ in 0..n {
                iter = iter.frobenius_lift();
            }
            let ord = equality(
                "witt::frobenius_lift^n",
                json!({ "x": x.to_payload(), "n": n }),
                iter.to_payload(),
                x.to_payload(),
            );
            (sum, prod, red, ord)
        });
        for (a, b, c, d) in cases {
            additive.push(a);
            multiplicative.push(b);
            mod_p.push(c);
            order.push(d);
        }
    }
    out.push(CheckSummary::from_reports(
        "witt::frobenius_additive",
        additive,
    ));
    out.push(CheckSummary::from_reports(
        "witt::frobenius_multiplicative",
        multiplicative,
    ));
    out.push(CheckSummary::from_reports("witt::frobenius_mod_p", mod_p));
    out.push(CheckSummary::from_reports("witt::frobenius_order", order));

    let mut sums = Vec::new();
    let mut products = Vec::new();
    let mut lifts = Vec::new();
    for (k, (p, n, precision)) in config
        .params(&[(5, 1, 4), (3, 2, 4), (7, 1, 3)], 1, 4)
        .into_iter()
        .enumerate()
    {
        let r = ring(p, n, precision)?;
        let s = Sampler::new(config.seed, 3, k, 2);
        let cases = exec.map_range(config.samples, |i| {
            let x = s.zq(&r, i, 0);
            let y = s.zq(&r, i, 1);
            (
                verify_sum_rule(&x, &y),
                verify_product_rule(&x, &y),
                verify_lift_reconstruction(&x),
            )
        });
        for (a, b, c) in cases {
            sums.push(a);
            products.push(b);
            lifts.push(c);
        }
    }
    out.push(CheckSummary::from_reports("buium::sum_rule", sums));
    out.push(CheckSummary::from_reports("buium::product_rule", products));
    out.push(CheckSummary::from_reports(
        "buium::lift_reconstruction",
        lifts,
    ));

    if spots {
        let report = from_result(
            "buium::fermat_quotient",
            json!({ "p": 5, "N": 3, "k": 2 }),
            fermat_quotient(2, 5, 3).map(|d| (json!(d.residue() % 25), json!(19))),
        );
        out.push(CheckSummary::from_reports(
            "buium::fermat_quotient_spot",
            vec![report],
        ));
    }
    Ok(out)
}

fn gamma_suite(config: &SuiteConfig, exec: Execution) -> Result<Vec<CheckSummary>> {
    let mut out = Vec::new();
    let params = config.params(&[(3, 1, 3), (5, 1, 3), (7, 1, 3)], 1, 3);

    let mut functional = Vec::new();
    let mut reflection = Vec::new();
    for &(p, _, precision) in &params {
        let len = modulus_for(p, precision)?;
        let xs = exec.map_range(len, |x| PAdicInt::from_integer(x as i64, p, precision));
        let xs = xs.into_iter().collect::<Result<Vec<_>>>()?;
        functional.extend(exec.map(&xs, functional_equation_check));
        reflection.extend(exec.map(&xs, |x| {
            let sides = || -> Result<(Value, Value)> {
                let one = PAdicInt::one(p, precision)?;
                let lhs = gamma_p(x)?.mul(&gamma_p(&one.sub(x)?)?)?;
                let rhs = PAdicInt::from_integer(reflection_sign(x), p, precision)?;
                Ok((lhs.to_payload(), rhs.to_payload()))
            };
            from_result("gamma::reflection", json!({ "x": x.to_payload() }), sides())
        }));
    }
    out.push(CheckSummary::from_reports(
        "gamma::functional_equation",
        functional,
    ));
    out.push(CheckSummary::from_reports("gamma::reflection", reflection));

    // Continuity below p^4 for k <= 3, and units, from one table per prime.
    let mut continuity = Vec::new();
    let mut units = Vec::new();
    for &(p, _, _) in &params {
        let len = modulus_for(p, 4)?;
        let table = gamma_table(len, p, 3)?;
        for k in 1..=3u32 {
            let pk = (p as u64).pow(k);
            continuity.extend(exec.map_range(len, |m| {
                let rep = m % pk;
                equality(
                    "gamma::continuity",
                    json!({ "p": p, "k": k, "m": m, "n": rep }),
                    table[m as usize].reduce(k).expect("k <= 3").to_payload(),
                    table[rep as usize].reduce(k).expect("k <= 3").to_payload(),
                )
            }));
        }
        units.extend(exec.map_range(len, |m| {
            equality(
                "gamma::unit",
                json!({ "p": p, "m": m }),
                json!(table[m as usize].is_unit()),
                json!(true),
            )
        }));
    }
    out.push(CheckSummary::from_reports("gamma::continuity", continuity));
    out.push(CheckSummary::from_reports("gamma::units", units));

    let gamma = GroupValuedMap::multiplicative("gamma_p", gamma_p);
    let beta = GroupValuedMap::multiplicative("beta_p", |a: &PAdicInt, b: &PAdicInt| beta_p(a, b));
    let mut coboundary = Vec::new();
    let mut cocycle = Vec::new();
    for (k, &(p, _, precision)) in params.iter().enumerate() {
        let s = Sampler::new(config.seed, 5, k, 3);
        modulus_for(p, precision)?;
        let cases = exec.map_range(config.samples, |i| {
            let args = (0..3)
                .map(|j| s.zp(p, precision, i, j))
                .collect::<Result<Vec<_>>>();
            let v = match args {
                Ok(v) => v,
                Err(e) => {
                    let r =
                        Report::new("gamma::beta_p", json!({ "p": p, "N": precision })).failed(e);
                    return (r.clone(), r);
                }
            };
            let inputs = json!({ "a": v[0].to_payload(), "b": v[1].to_payload() });
            let sides = || -> Result<(Value, Value)> {
                Ok((
                    beta_p(&v[0], &v[1])?.to_payload(),
                    coboundary2(&gamma, &v[0], &v[1])?.to_payload(),
                ))
            };
            (
                from_result("gamma::beta_p = d gamma_p", inputs, sides()),
                cocycle2_check(&beta, &v[0], &v[1], &v[2]),
            )
        });
        for (a, b) in cases {
            coboundary.push(a);
            cocycle.push(b);
        }
    }
    out.push(CheckSummary::from_reports(
        "gamma::beta_coboundary",
        coboundary,
    ));
    out.push(CheckSummary::from_reports("gamma::beta_cocycle", cocycle));
    Ok(out)
}

fn admissible_pairs(order: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 1..order {
        for b in 1..order {
            if admissible(a, b, order).is_ok() {
                out.push((a, b));
            }
        }
    }
    out
}

/// Divisors `m` of `q - 1` with `2 <= m <= 4`.
fn fermat_degrees(q: u64) -> Vec<u64> {
    (2..=4).filter(|m| (q - 1).is_multiple_of(*m)).collect()
}

fn charsum_suite(config: &SuiteConfig, exec: Execution) -> Result<Vec<CheckSummary>> {
    let mut out = Vec::new();
    let spots = config.p.is_none();

    if spots {
        let inputs = json!({ "p": 5, "n": 1, "N": 4, "a": 2, "b": 2 });
        let sides = || -> Result<(Value, Value)> {
            let r = ring(5, 1, 4)?;
            let j = CharacterTable::new(&r)?.jacobi(2, 2, exec)?;
            Ok((j.to_payload(), r.from_int(-1).to_payload()))
        };
        let report = from_result("charsum::jacobi_sum", inputs, sides());
        out.push(CheckSummary::from_reports(
            "charsum::jacobi_quadratic_spot",
            vec![report],
        ));
    }

    let mut norms = Vec::new();
    for (p, n, precision) in config.params(&[(5, 1, 4), (7, 1, 4), (13, 1, 4)], 1, 4) {
        let r = ring(p, n, precision)?;
        let table = CharacterTable::new(&r)?;
        let q = r.field().order() as i64;
        let pairs = admissible_pairs(q - 1);
        // The convolutions parallelize internally; the pairs run in order.
        norms.extend(
            pairs
                .iter()
                .map(|&(a, b)| verify_jacobi_norm(&table, a, b, exec)),
        );
    }
    out.push(CheckSummary::from_reports("charsum::jacobi_norm", norms));

    let prime_params = config.params(&[(5, 1, 4), (7, 1, 4)], 1, 4);
    let mut nontrivial = Vec::new();
    let mut root = Vec::new();
    let mut total = Vec::new();
    let mut coboundary = Vec::new();
    let mut gk = Vec::new();
    for &(p, _, precision) in &prime_params {
        let terms = config.terms.unwrap_or_else(|| default_terms(p));
        let inputs = json!({ "p": p, "n": 1, "N": precision, "K": terms });
        match AdditiveCharacter::new(p, precision, terms) {
            Ok(psi) => {
                let ring = psi.ring();
                let psi1 = psi.value(1);
                nontrivial.push(equality(
                    "charsum::additive_character",
                    inputs.clone(),
                    json!(psi1 != &ring.one()),
                    json!(true),
                ));
                root.push(equality(
                    "charsum::additive_character",
                    inputs.clone(),
                    psi1.pow(p as u64).to_payload(),
                    ring.one().to_payload(),
                ));
                let sum = psi
                    .values()
                    .iter()
                    .try_fold(ring.zero(), |acc, v| acc.add(v))?;
                total.push(equality(
                    "charsum::additive_character",
                    inputs,
                    sum.to_payload(),
                    ring.zero().to_payload(),
                ));
            }
            Err(e) => {
                let r = Report::new("charsum::additive_character", inputs).failed(e);
                nontrivial.push(r.clone());
                root.push(r.clone());
                total.push(r);
            }
        }
        let pairs = admissible_pairs(p as i64 - 1);
        coboundary.extend(exec.map(&pairs, |&(a, b)| {
            verify_gauss_jacobi(a, b, p, precision, terms)
        }));
        let exps: Vec<i64> = (1..p as i64 - 1).collect();
        gk.extend(exec.map(&exps, |&a| gross_koblitz_check(a, p, precision, terms)));
    }
    out.push(CheckSummary::from_reports(
        "charsum::psi_nontrivial",
        nontrivial,
    ));
    out.push(CheckSummary::from_reports(
        "charsum::psi_root_of_unity",
        root,
    ));
    out.push(CheckSummary::from_reports("charsum::psi_sum", total));
    out.push(CheckSummary::from_reports(
        "charsum::gauss_coboundary",
        coboundary,
    ));
    out.push(CheckSummary::from_reports("charsum::gross_koblitz", gk));

    let cases: Vec<(u64, u64)> = match config.p {
        Some(p) => {
            let q = (p as u64).pow(config.n.unwrap_or(1));
            fermat_degrees(q).into_iter().map(|m| (q, m)).collect()
        }
        None => vec![(5, 2), (5, 4), (7, 2), (7, 3), (13, 3), (13, 4)],
    };
    let mut counts = Vec::new();
    for (q, m) in cases {
        let inputs = json!({ "q": q, "m": m });
        let sides = || -> Result<(Value, Value)> {
            let brute = count_fermat_brute(q, m, exec)?;
            let jacobi = count_fermat_jacobi(q, m, fermat_precision(q, m)?, exec)?;
            Ok((json!(jacobi), json!(brute)))
        };
        counts.push(from_result("charsum::count_fermat", inputs, sides()));
    }
    out.push(CheckSummary::from_reports("charsum::fermat_count", counts));

    if spots {
        let report = from_result(
            "charsum::count_fermat_brute",
            json!({ "q": 5, "m": 2 }),
            count_fermat_brute(5, 2, exec).map(|c| (json!(c), json!(4))),
        );
        out.push(CheckSummary::from_reports(
            "charsum::fermat_spot",
            vec![report],
        ));
    }
    Ok(out)
}
