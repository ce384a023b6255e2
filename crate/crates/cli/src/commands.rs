use serde_json::{json, Value};

use padic_deform::buium::p_derivation;
use padic_deform::charsum::{
    count_fermat_brute, count_fermat_jacobi, default_terms, fermat_precision, gross_koblitz_check,
    AdditiveCharacter, CharacterTable,
};
use padic_deform::gamma::{beta_p, gamma_p, gamma_table};
use padic_deform::report::ToPayload;
use padic_deform::suite::{self, Suite, SuiteConfig};
use padic_deform::{Error, Execution, FqField, PAdicInt, Result, ZqElem, ZqRing};

use crate::{Cli, Command, Failure, RunConfig};

const DEFAULT_PRECISION: u32 = 4;

/// A command result: the JSON value, an optional table for CSV, a one-line
/// human summary and the verdict.
pub struct Output {
    pub value: Value,
    pub table: Option<Table>,
    pub summary: String,
    pub pass: bool,
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    fn value(value: Value, summary: String) -> Output {
        Output {
            value,
            table: None,
            summary,
            pass: true,
        }
    }
}

impl RunConfig {
    fn prime(&self) -> Result<u32> {
        self.p.ok_or_else(|| Error::Parse("missing -p".into()))
    }

    fn degree(&self) -> u32 {
        self.n.unwrap_or(1)
    }

    fn precision_or(&self, default: u32) -> u32 {
        self.precision.unwrap_or(default)
    }

    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }

    fn ring(&self) -> Result<std::sync::Arc<ZqRing>> {
        let field = FqField::new(self.prime()? as u64, self.degree())?;
        ZqRing::new(&field, self.precision_or(DEFAULT_PRECISION))
    }

    fn terms(&self, p: u32) -> usize {
        self.terms.unwrap_or_else(|| default_terms(p))
    }
}

/// Parses `"3,1"` into the element `3 + t` of `ring`.
fn parse_zq(ring: &std::sync::Arc<ZqRing>, s: &str) -> Result<ZqElem> {
    let (p, precision, n) = (ring.p(), ring.precision(), ring.degree() as usize);
    let mut coeffs = s
        .split(',')
        .map(|c| {
            let k: i64 = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            PAdicInt::from_integer(k, p, precision)
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() > n {
        return Err(Error::Parse(format!(
            "{} coefficients for degree {n}",
            coeffs.len()
        )));
    }
    coeffs.resize(n, PAdicInt::zero(p, precision)?);
    ring.from_padics(&coeffs)
}

pub fn dispatch(cli: &Cli) -> std::result::Result<Output, Failure> {
    let cfg = &cli.config;
    let out = match &cli.command {
        Command::Teich { v } => teich(cfg, *v)?,
        Command::Frobenius { x } => {
            let ring = cfg.ring()?;
            let x = parse_zq(&ring, x)?;
            let phi = x.frobenius_lift();
            let summary = format!("phi({x}) = {phi}");
            Output::value(
                json!({ "x": x.to_payload(), "frobenius": phi.to_payload() }),
                summary,
            )
        }
        Command::Delta { x } => {
            let ring = cfg.ring()?;
            let x = parse_zq(&ring, x)?;
            let d = p_derivation(&x)?;
            let summary = format!("delta({x}) = {d}");
            Output::value(
                json!({ "x": x.to_payload(), "delta": d.to_payload() }),
                summary,
            )
        }
        Command::Gamma { x, upto } => gamma(cfg, *x, *upto)?,
        Command::Beta { a, b } => {
            let (p, precision) = (cfg.prime()?, cfg.precision_or(3));
            let a = PAdicInt::from_integer(*a, p, precision)?;
            let b = PAdicInt::from_integer(*b, p, precision)?;
            let beta = beta_p(&a, &b)?;
            let summary = format!(
                "B_{p}({}, {}) = {} mod {}",
                a.residue(),
                b.residue(),
                beta.residue(),
                beta.modulus()
            );
            Output::value(
                json!({ "a": a.to_payload(), "b": b.to_payload(), "beta": beta.to_payload() }),
                summary,
            )
        }
        Command::Jacobi { a, b } => {
            let ring = cfg.ring()?;
            let j = CharacterTable::new(&ring)?.jacobi(*a, *b, cfg.exec())?;
            let summary = format!("J(tau^{a}, tau^{b}) = {j}");
            Output::value(json!({ "a": a, "b": b, "jacobi": j.to_payload() }), summary)
        }
        Command::Gauss { a } => {
            let p = cfg.prime()?;
            let precision = cfg.precision_or(DEFAULT_PRECISION);
            let psi = AdditiveCharacter::new(p, precision, cfg.terms(p))?;
            let g = psi.gauss_sum(*a)?;
            let summary = format!("g(tau^{a}) = {g}");
            Output::value(
                json!({ "a": a, "K": psi.terms(), "gauss": g.to_payload() }),
                summary,
            )
        }
        Command::GkCheck { a } => {
            let p = cfg.prime()?;
            let precision = cfg.precision_or(DEFAULT_PRECISION);
            let exps: Vec<i64> = match a {
                Some(a) => vec![*a],
                None => (1..p as i64 - 1).collect(),
            };
            let reports: Vec<_> = exps
                .iter()
                .map(|&a| gross_koblitz_check(a, p, precision, cfg.terms(p)))
                .collect();
            let passed = reports.iter().filter(|r| r.pass).count();
            let pass = passed == reports.len();
            Output {
                table: Some(Table {
                    header: vec!["check", "a", "pass"],
                    rows: reports
                        .iter()
                        .map(|r| {
                            vec![
                                r.check.clone(),
                                r.inputs["a"].to_string(),
                                r.pass.to_string(),
                            ]
                        })
                        .collect(),
                }),
                value: json!({ "checks": reports, "pass": pass }),
                summary: format!(
                    "gross-koblitz p={p} N={precision}: {passed}/{} pass",
                    exps.len()
                ),
                pass,
            }
        }
        Command::Fermat { q, m } => {
            let exec = cfg.exec();
            let precision = match cfg.precision {
                Some(n) => n,
                None => fermat_precision(*q, *m)?,
            };
            let brute = count_fermat_brute(*q, *m, exec)?;
            let jacobi = count_fermat_jacobi(*q, *m, precision, exec)?;
            let matched = jacobi >= 0 && jacobi as u64 == brute;
            Output {
                value: json!({ "brute": brute, "jacobi": jacobi, "match": matched }),
                table: None,
                summary: format!("x^{m} + y^{m} = 1 over F_{q}: brute {brute}, jacobi {jacobi}"),
                pass: matched,
            }
        }
        Command::Verify {
            suite: name,
            samples,
        } => verify(cfg, name, *samples)?,
    };
    Ok(out)
}

fn teich(cfg: &RunConfig, v: u64) -> Result<Output> {
    let ring = cfg.ring()?;
    let q = ring.field().order() as u64;
    if v >= q {
        return Err(Error::Parse(format!(
            "-v {v} is not an index below q = {q}"
        )));
    }
    let t = ring.teichmuller(&ring.field().from_index(v))?;
    let mut value = json!({ "v": v, "teichmuller": t.to_payload() });
    if let Some(scalar) = t.as_scalar().filter(|_| ring.degree() == 1) {
        value["digits"] = json!(scalar.digits());
        value["residue"] = json!(scalar.residue());
    }
    let summary = format!("tau({v}) = {t}");
    Ok(Output::value(value, summary))
}

fn gamma(cfg: &RunConfig, x: Option<i64>, upto: Option<u64>) -> Result<Output> {
    let (p, precision) = (cfg.prime()?, cfg.precision_or(3));
    if let Some(x) = x {
        let x = PAdicInt::from_integer(x, p, precision)?;
        let g = gamma_p(&x)?;
        let summary = format!(
            "Gamma_{p}({}) = {} mod {}",
            x.residue(),
            g.residue(),
            g.modulus()
        );
        return Ok(Output::value(
            json!({ "x": x.to_payload(), "gamma": g.to_payload() }),
            summary,
        ));
    }
    let len = upto.expect("clap requires -x or --upto");
    let table = gamma_table(len, p, precision)?;
    let rows = table
        .iter()
        .enumerate()
        .map(|(m, g)| {
            let digits: Vec<String> = g.digits().iter().map(u32::to_string).collect();
            vec![m.to_string(), g.residue().to_string(), digits.join(" ")]
        })
        .collect();
    Ok(Output {
        value: json!({
            "p": p, "n": 1, "N": precision,
            "values": table.iter().map(|g| g.residue()).collect::<Vec<_>>(),
        }),
        table: Some(Table {
            header: vec!["x", "gamma", "digits"],
            rows,
        }),
        summary: format!("Gamma_{p}(0..{len}) mod {p}^{precision}"),
        pass: true,
    })
}

fn verify(cfg: &RunConfig, name: &str, samples: u64) -> Result<Output> {
    let suite: Suite = name.parse()?;
    let config = SuiteConfig {
        seed: cfg.seed,
        samples,
        p: cfg.p,
        n: cfg.n,
        precision: cfg.precision,
        terms: cfg.terms,
    };
    let report = suite::run(suite, &config, cfg.exec())?;
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    let summary = if failed.is_empty() {
        format!("suite {suite}: {} checks pass", report.checks.len())
    } else {
        format!("suite {suite}: FAILED {}", failed.join(", "))
    };
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.cases.to_string(),
                c.failures.to_string(),
                c.pass.to_string(),
            ]
        })
        .collect();
    Ok(Output {
        pass: report.pass,
        value: serde_json::to_value(&report).expect("plain struct"),
        table: Some(Table {
            header: vec!["check", "cases", "failures", "pass"],
            rows,
        }),
        summary,
    })
}
