//! The ring of zeta-value expressions: rational combinations of monomials
//! `pi^k * g_1 * ... * g_m` over a fixed set of generators. Even Riemann zeta
//! values never appear as generators; they are turned into powers of `pi` on
//! construction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bernoulli::bernoulli;
use super::rational::{factorial, format_rational, pow2, Rational};
use crate::error::{Error, Result};
use crate::numeric::bigfloat::BigFloat;

/// Variant order is the serialization order: odd zetas first, then double,
/// double sharp, triple, triple sharp; ties broken by the arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZetaGenerator {
    OddZeta(u32),
    DoubleZeta(u32, u32),
    DoubleZetaSharp(u32, u32),
    TripleZeta(u32, u32, u32),
    TripleZetaSharp(u32, u32, u32),
}

impl ZetaGenerator {
    pub fn odd_zeta(n: u32) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "zeta({n}) is not an odd zeta generator (need odd n >= 3)"
            )));
        }
        Ok(Self::OddZeta(n))
    }

    pub fn double(a: u32, b: u32) -> Result<Self> {
        check_args(&[a, b])?;
        Ok(Self::DoubleZeta(a, b))
    }

    pub fn double_sharp(a: u32, b: u32) -> Result<Self> {
        check_args(&[a, b])?;
        Ok(Self::DoubleZetaSharp(a, b))
    }

    pub fn triple(a: u32, b: u32, c: u32) -> Result<Self> {
        check_args(&[a, b, c])?;
        Ok(Self::TripleZeta(a, b, c))
    }

    pub fn triple_sharp(a: u32, b: u32, c: u32) -> Result<Self> {
        check_args(&[a, b, c])?;
        Ok(Self::TripleZetaSharp(a, b, c))
    }

    pub fn weight(&self) -> u32 {
        self.args().iter().sum()
    }

    pub fn args(&self) -> Vec<u32> {
        match *self {
            Self::OddZeta(n) => vec![n],
            Self::DoubleZeta(a, b) | Self::DoubleZetaSharp(a, b) => vec![a, b],
            Self::TripleZeta(a, b, c) | Self::TripleZetaSharp(a, b, c) => vec![a, b, c],
        }
    }

    pub fn is_sharp(&self) -> bool {
        matches!(self, Self::DoubleZetaSharp(..) | Self::TripleZetaSharp(..))
    }

    fn name(&self) -> &'static str {
        match self {
            Self::OddZeta(_) => "zeta",
            Self::DoubleZeta(..) => "ez2",
            Self::DoubleZetaSharp(..) => "ez2s",
            Self::TripleZeta(..) => "ez3",
            Self::TripleZetaSharp(..) => "ez3s",
        }
    }

    fn from_name(name: &str, args: &[u32]) -> Option<Result<Self>> {
        Some(match (name, args) {
            ("zeta", &[n]) => Self::odd_zeta(n),
            ("ez2", &[a, b]) => Self::double(a, b),
            ("ez2s", &[a, b]) => Self::double_sharp(a, b),
            ("ez3", &[a, b, c]) => Self::triple(a, b, c),
            ("ez3s", &[a, b, c]) => Self::triple_sharp(a, b, c),
            _ => return None,
        })
    }
}

fn check_args(args: &[u32]) -> Result<()> {
    if args.iter().any(|&s| s == 0) || *args.last().unwrap() < 2 {
        return Err(Error::InvalidArgument(format!(
            "divergent index {args:?}: entries must be >= 1 and the last >= 2"
        )));
    }
    Ok(())
}

impl fmt::Display for ZetaGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args().iter().map(u32::to_string).collect();
        write!(f, "{}({})", self.name(), args.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ZetaMonomial {
    /// Sorted ascending; repeated generators encode powers.
    pub factors: Vec<ZetaGenerator>,
    pub pi_power: u32,
}

impl ZetaMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn pi(k: u32) -> Self {
        Self {
            factors: Vec::new(),
            pi_power: k,
        }
    }

    pub fn generator(g: ZetaGenerator) -> Self {
        Self {
            factors: vec![g],
            pi_power: 0,
        }
    }

    pub fn weight(&self) -> u32 {
        self.pi_power + self.factors.iter().map(ZetaGenerator::weight).sum::<u32>()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        factors.sort();
        Self {
            factors,
            pi_power: self.pi_power + other.pi_power,
        }
    }
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.pi_power {
            0 => {}
            1 => parts.push("pi".to_string()),
            k => parts.push(format!("pi^{k}")),
        }
        let mut i = 0;
        while i < self.factors.len() {
            let g = &self.factors[i];
            let run = self.factors[i..].iter().take_while(|h| *h == g).count();
            parts.push(if run == 1 {
                g.to_string()
            } else {
                format!("{g}^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finite rational combination of monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZetaExpression {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(ZetaMonomial::one(), c)
    }

    pub fn term(m: ZetaMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `c * pi^k`.
    pub fn pi_multiple(c: Rational, k: u32) -> Self {
        Self::term(ZetaMonomial::pi(k), c)
    }

    pub fn generator(g: ZetaGenerator) -> Self {
        Self::term(ZetaMonomial::generator(g), Rational::one())
    }

    /// `zeta(n)` for any `n >= 0` other than 1: even values become powers of
    /// `pi` (with `zeta(0) = -1/2`), odd ones are generators.
    pub fn zeta(n: u32) -> Result<Self> {
        if n % 2 == 0 {
            zeta_even(n)
        } else {
            Ok(Self::generator(ZetaGenerator::odd_zeta(n)?))
        }
    }

    /// Euler-Zagier double zeta symbol. Must converge.
    pub fn ez2(a: u32, b: u32) -> Result<Self> {
        Ok(Self::generator(ZetaGenerator::double(a, b)?))
    }

    pub fn ez2s(a: u32, b: u32) -> Result<Self> {
        Ok(Self::generator(ZetaGenerator::double_sharp(a, b)?))
    }

    pub fn ez3(a: u32, b: u32, c: u32) -> Result<Self> {
        Ok(Self::generator(ZetaGenerator::triple(a, b, c)?))
    }

    pub fn ez3s(a: u32, b: u32, c: u32) -> Result<Self> {
        Ok(Self::generator(ZetaGenerator::triple_sharp(a, b, c)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// If the expression is `c * pi^k` (or zero), returns `(c, k)`.
    pub fn as_pi_multiple(&self) -> Option<(Rational, u32)> {
        match self.terms.len() {
            0 => Some((Rational::zero(), 0)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.factors.is_empty().then(|| (c.clone(), m.pi_power))
            }
            _ => None,
        }
    }

    pub fn generators(&self) -> Vec<ZetaGenerator> {
        let mut out: Vec<ZetaGenerator> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn add_term(&mut self, m: ZetaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    /// Replace every occurrence of generator `g` by `value`.
    pub fn substitute(&self, g: &ZetaGenerator, value: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = ZetaMonomial {
                factors: Vec::new(),
                pi_power: m.pi_power,
            };
            let mut power = 0;
            for f in &m.factors {
                if f == g {
                    power += 1;
                } else {
                    rest.factors.push(f.clone());
                }
            }
            let mut t = Self::term(rest, c.clone());
            for _ in 0..power {
                t = &t * value;
            }
            out += &t;
        }
        out
    }

    /// Numeric value `sum c * pi^p * prod v(g)` with propagated error.
    pub fn numeric<F>(&self, pi: &BigFloat, mut valuation: F) -> Result<BigFloat>
    where
        F: FnMut(&ZetaGenerator) -> Option<BigFloat>,
    {
        let bits = pi.bits();
        let mut total = BigFloat::zero(bits);
        let mut pi_powers: BTreeMap<u32, BigFloat> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut v = BigFloat::from_rational(c, bits);
            if m.pi_power > 0 {
                let p = pi_powers
                    .entry(m.pi_power)
                    .or_insert_with(|| pi.powu(m.pi_power))
                    .clone();
                v = v.mul(&p);
            }
            for g in &m.factors {
                let gv = valuation(g).ok_or_else(|| Error::MissingValuation(g.to_string()))?;
                v = v.mul(&gv);
            }
            total = total.add(&v);
        }
        Ok(total)
    }

    /// [`Self::numeric`] with an explicit lookup table.
    pub fn numeric_with_table(
        &self,
        pi: &BigFloat,
        table: &BTreeMap<ZetaGenerator, BigFloat>,
    ) -> Result<BigFloat> {
        self.numeric(pi, |g| table.get(g).cloned())
    }
}

/// `zeta(2k) = -B_{2k} (2 pi i)^{2k} / (2 (2k)!)`, and `zeta(0) = -1/2`.
pub fn zeta_even(m: u32) -> Result<ZetaExpression> {
    if m % 2 == 1 {
        return Err(Error::InvalidArgument(format!("zeta_even({m}): odd argument")));
    }
    if m == 0 {
        return Ok(ZetaExpression::constant(Rational::new((-1).into(), 2.into())));
    }
    let k = m / 2;
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let c = bernoulli(m as usize) * pow2(m as i64) * Rational::from_integer(BigInt::from(sign))
        / Rational::from_integer(factorial(m as usize) * 2);
    Ok(ZetaExpression::pi_multiple(c, m))
}

/// `phi(m) = (2^{1-m} - 1) zeta(m)` at even `m`.
pub fn phi_even(m: u32) -> Result<ZetaExpression> {
    let z = zeta_even(m)?;
    Ok(z.scale(&(pow2(1 - m as i64) - Rational::one())))
}

impl AddAssign<&ZetaExpression> for ZetaExpression {
    fn add_assign(&mut self, rhs: &ZetaExpression) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &ZetaExpression {
    type Output = ZetaExpression;
    fn add(self, rhs: &ZetaExpression) -> ZetaExpression {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ZetaExpression {
    type Output = ZetaExpression;
    fn add(mut self, rhs: ZetaExpression) -> ZetaExpression {
        self += &rhs;
        self
    }
}

impl Neg for &ZetaExpression {
    type Output = ZetaExpression;
    fn neg(self) -> ZetaExpression {
        ZetaExpression {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for ZetaExpression {
    type Output = ZetaExpression;
    fn neg(self) -> ZetaExpression {
        -&self
    }
}

impl Sub for &ZetaExpression {
    type Output = ZetaExpression;
    fn sub(self, rhs: &ZetaExpression) -> ZetaExpression {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for ZetaExpression {
    type Output = ZetaExpression;
    fn sub(self, rhs: ZetaExpression) -> ZetaExpression {
        &self - &rhs
    }
}

impl Mul for &ZetaExpression {
    type Output = ZetaExpression;
    fn mul(self, rhs: &ZetaExpression) -> ZetaExpression {
        let mut out = ZetaExpression::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for ZetaExpression {
    type Output = ZetaExpression;
    fn mul(self, rhs: ZetaExpression) -> ZetaExpression {
        &self * &rhs
    }
}

impl Mul<&Rational> for &ZetaExpression {
    type Output = ZetaExpression;
    fn mul(self, rhs: &Rational) -> ZetaExpression {
        self.scale(rhs)
    }
}

impl fmt::Display for ZetaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_unit = m.factors.is_empty() && m.pi_power == 0;
            if is_unit {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl FromStr for ZetaExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small(&mut self) -> Result<u32> {
        let d = self.digits()?;
        d.parse().or_else(|_| self.err(format!("number {d} out of range")))
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            if start == self.pos && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn parse(mut self) -> Result<ZetaExpression> {
        let mut out = ZetaExpression::zero();
        let mut negative = self.eat(b'-');
        loop {
            let t = self.term()?;
            out.add_scaled(&t, &Rational::from_integer(if negative { -1 } else { 1 }.into()));
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            }
        }
    }

    fn term(&mut self) -> Result<ZetaExpression> {
        let mut coeff = Rational::one();
        let mut mono = ZetaMonomial::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n: BigInt = self.digits()?.parse().unwrap();
                    let mut r = Rational::from_integer(n);
                    if self.eat(b'/') {
                        let d: BigInt = self.digits()?.parse().unwrap();
                        if d.is_zero() {
                            return self.err("zero denominator");
                        }
                        r /= Rational::from_integer(d);
                    }
                    coeff *= r;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = self.ident();
                    if name == "pi" {
                        let k = if self.eat(b'^') { self.small()? } else { 1 };
                        mono.pi_power += k;
                    } else {
                        self.expect(b'(')?;
                        let mut args = vec![self.small()?];
                        while self.eat(b',') {
                            args.push(self.small()?);
                        }
                        self.expect(b')')?;
                        let g = match ZetaGenerator::from_name(name, &args) {
                            Some(g) => g?,
                            None => return self.err(format!("unknown symbol {name}/{}", args.len())),
                        };
                        let k = if self.eat(b'^') { self.small()? } else { 1 };
                        for _ in 0..k {
                            mono.factors.push(g.clone());
                        }
                    }
                }
                _ => return self.err("expected a factor"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        mono.factors.sort();
        Ok(ZetaExpression::term(mono, coeff))
    }
}
