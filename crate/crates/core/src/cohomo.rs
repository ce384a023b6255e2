//! Cocycle and coboundary checkers for maps out of an abelian group.
//!
//! Cochains use the trivial action: the coboundary of a 1-cochain is
//! `df(a, b) = f(a) + f(b) - f(a + b)` and a 2-cochain `F` is a cocycle when
//! `F(a, b) + F(a + b, c) = F(b, c) + F(a, b + c)`. In the multiplicative
//! flavor `+` becomes `*` and `-` becomes division by a unit. Every identity
//! in this crate that has the shape "this map is a coboundary" or "this map
//! is a 2-cocycle" is checked through these functions.
//!
//! Maps handed to the checkers must be pure; the sweeps may evaluate them
//! from several threads.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pi_ring::PiRingElem;
use crate::report::{Report, ToPayload};
use crate::witt::ZqElem;
use crate::zp::PAdicInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Additive,
    Multiplicative,
}

/// Arguments: elements of an abelian group.
pub trait GroupArg: Clone + ToPayload {
    fn plus(&self, other: &Self) -> Result<Self>;
}

/// Values: a commutative ring whose additive group or unit group carries
/// the cochain.
pub trait CochainValue: Clone + PartialEq + ToPayload {
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn unit_inverse(&self) -> Result<Self>;
    fn is_unit(&self) -> bool;
    /// The neutral element of `flavor` in the same ring as `self`.
    fn neutral(&self, flavor: Flavor) -> Self;
}

/// A residue mod `p` under addition, e.g. a single base-`p` digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Digit {
    pub value: u32,
    pub p: u32,
}

impl Digit {
    pub fn new(value: u32, p: u32) -> Result<Digit> {
        if value >= p {
            return Err(Error::DigitOutOfRange { digit: value, p });
        }
        Ok(Digit { value, p })
    }
}

impl ToPayload for Digit {
    fn to_payload(&self) -> Value {
        json!({ "p": self.p, "digit": self.value })
    }
}

impl GroupArg for Digit {
    fn plus(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(Digit {
            value: (self.value + other.value) % self.p,
            p: self.p,
        })
    }
}

impl GroupArg for PAdicInt {
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
}

impl GroupArg for ZqElem {
    fn plus(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }
}

impl CochainValue for i64 {
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(self - other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn unit_inverse(&self) -> Result<Self> {
        if self.is_unit() {
            Ok(*self)
        } else {
            Err(Error::NotAUnit)
        }
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn neutral(&self, flavor: Flavor) -> Self {
        match flavor {
            Flavor::Additive => 0,
            Flavor::Multiplicative => 1,
        }
    }
}

impl CochainValue for PAdicInt {
    fn add(&self, other: &Self) -> Result<Self> {
        PAdicInt::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        PAdicInt::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        PAdicInt::mul(self, other)
    }
    fn unit_inverse(&self) -> Result<Self> {
        PAdicInt::unit_inverse(self)
    }
    fn is_unit(&self) -> bool {
        PAdicInt::is_unit(self)
    }
    fn neutral(&self, flavor: Flavor) -> Self {
        let k = match flavor {
            Flavor::Additive => 0,
            Flavor::Multiplicative => 1,
        };
        PAdicInt::from_integer(k, self.p(), self.precision()).expect("valid precision")
    }
}

impl CochainValue for ZqElem {
    fn add(&self, other: &Self) -> Result<Self> {
        ZqElem::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        ZqElem::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        ZqElem::mul(self, other)
    }
    fn unit_inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn is_unit(&self) -> bool {
        !self.reduce_mod_p().is_zero()
    }
    fn neutral(&self, flavor: Flavor) -> Self {
        match flavor {
            Flavor::Additive => self.ring().zero(),
            Flavor::Multiplicative => self.ring().one(),
        }
    }
}

impl CochainValue for PiRingElem {
    fn add(&self, other: &Self) -> Result<Self> {
        PiRingElem::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        PiRingElem::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        PiRingElem::mul(self, other)
    }
    fn unit_inverse(&self) -> Result<Self> {
        PiRingElem::unit_inverse(self)
    }
    fn is_unit(&self) -> bool {
        PiRingElem::is_unit(self)
    }
    fn neutral(&self, flavor: Flavor) -> Self {
        match flavor {
            Flavor::Additive => self.ring().zero(),
            Flavor::Multiplicative => self.ring().one(),
        }
    }
}

/// A named map with one or two group arguments and a value flavor.
/// `F` is `Fn(&A) -> Result<V>` for 1-cochains and `Fn(&A, &A) -> Result<V>`
/// for 2-cochains.
pub struct GroupValuedMap<F> {
    name: String,
    flavor: Flavor,
    f: F,
}

impl<F> GroupValuedMap<F> {
    pub fn new(name: impl Into<String>, flavor: Flavor, f: F) -> Self {
        GroupValuedMap {
            name: name.into(),
            flavor,
            f,
        }
    }

    pub fn additive(name: impl Into<String>, f: F) -> Self {
        Self::new(name, Flavor::Additive, f)
    }

    pub fn multiplicative(name: impl Into<String>, f: F) -> Self {
        Self::new(name, Flavor::Multiplicative, f)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn checked<V: CochainValue>(&self, v: V) -> Result<V> {
        if self.flavor == Flavor::Multiplicative && !v.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(v)
    }

    pub fn eval<A, V>(&self, a: &A) -> Result<V>
    where
        F: Fn(&A) -> Result<V>,
        V: CochainValue,
    {
        self.checked((self.f)(a)?)
    }

    pub fn eval2<A, V>(&self, a: &A, b: &A) -> Result<V>
    where
        F: Fn(&A, &A) -> Result<V>,
        V: CochainValue,
    {
        self.checked((self.f)(a, b)?)
    }
}

fn op<V: CochainValue>(flavor: Flavor, x: &V, y: &V) -> Result<V> {
    match flavor {
        Flavor::Additive => x.add(y),
        Flavor::Multiplicative => x.mul(y),
    }
}

/// `x - y` or `x / y`.
fn op_inv<V: CochainValue>(flavor: Flavor, x: &V, y: &V) -> Result<V> {
    match flavor {
        Flavor::Additive => x.sub(y),
        Flavor::Multiplicative => x.mul(&y.unit_inverse()?),
    }
}

/// `(df)(a, b)`: `f(a) + f(b) - f(a + b)`, or `f(a) f(b) / f(a + b)`.
pub fn coboundary2<A, V, F>(f: &GroupValuedMap<F>, a: &A, b: &A) -> Result<V>
where
    A: GroupArg,
    V: CochainValue,
    F: Fn(&A) -> Result<V>,
{
    let fa = f.eval(a)?;
    let fb = f.eval(b)?;
    let fab = f.eval(&a.plus(b)?)?;
    op_inv(f.flavor, &op(f.flavor, &fa, &fb)?, &fab)
}

fn triple_inputs<A: ToPayload>(name: &str, flavor: Flavor, a: &A, b: &A, c: &A) -> Value {
    json!({
        "map": name,
        "flavor": flavor,
        "a": a.to_payload(),
        "b": b.to_payload(),
        "c": c.to_payload(),
    })
}

fn cocycle_sides<A, V, G>(flavor: Flavor, eval: G, a: &A, b: &A, c: &A) -> Result<(V, V)>
where
    A: GroupArg,
    V: CochainValue,
    G: Fn(&A, &A) -> Result<V>,
{
    let lhs = op(flavor, &eval(a, b)?, &eval(&a.plus(b)?, c)?)?;
    let rhs = op(flavor, &eval(b, c)?, &eval(a, &b.plus(c)?)?)?;
    Ok((lhs, rhs))
}

fn finish<V: CochainValue>(report: Report, flavor: Flavor, sides: Result<(V, V)>) -> Report {
    match sides.and_then(|(l, r)| Ok((op_inv(flavor, &l, &r)?, l, r))) {
        Ok((residual, lhs, rhs)) => {
            let pass = lhs == rhs;
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

/// `F(a, b) F(a + b, c) = F(b, c) F(a, b + c)` in the declared flavor.
pub fn cocycle2_check<A, V, F>(map: &GroupValuedMap<F>, a: &A, b: &A, c: &A) -> Report
where
    A: GroupArg,
    V: CochainValue,
    F: Fn(&A, &A) -> Result<V>,
{
    let report = Report::new(
        format!("cohomo::cocycle2[{}]", map.name),
        triple_inputs(&map.name, map.flavor, a, b, c),
    );
    let sides = cocycle_sides(map.flavor, |x: &A, y: &A| map.eval2(x, y), a, b, c);
    finish(report, map.flavor, sides)
}

/// `d(df)(a, b, c)` equals the neutral element.
pub fn coboundary_of_coboundary_is_trivial<A, V, F>(
    f: &GroupValuedMap<F>,
    a: &A,
    b: &A,
    c: &A,
) -> Report
where
    A: GroupArg,
    V: CochainValue,
    F: Fn(&A) -> Result<V>,
{
    let report = Report::new(
        format!("cohomo::ddf[{}]", f.name),
        triple_inputs(&f.name, f.flavor, a, b, c),
    );
    let flavor = f.flavor;
    let value = || -> Result<(V, V)> {
        let (lhs, rhs) = cocycle_sides(flavor, |x: &A, y: &A| coboundary2(f, x, y), a, b, c)?;
        let ddf = op_inv(flavor, &lhs, &rhs)?;
        let neutral = ddf.neutral(flavor);
        Ok((ddf, neutral))
    };
    finish(report, flavor, value())
}
