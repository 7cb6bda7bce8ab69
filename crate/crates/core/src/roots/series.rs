//! Sparse multivariate polynomials and truncated power series over the
//! rationals, with exact division by linear forms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{format_rational, Rational};
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_linear(form: &LinearForm) -> Self {
        let n = form.coefficients.len();
        let mut p = Self::zero(n);
        for (i, c) in form.coefficients.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, k: &Rational) {
        if k.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * k);
        }
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        let mut p = Poly::zero(self.nvars);
        p.add_scaled(self, k);
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product keeping total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: u32) -> Poly {
        let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da.saturating_add(db) > max_degree {
                    continue;
                }
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by a linear form; a nonzero remainder is an error.
    pub fn div_linear(&self, form: &LinearForm) -> Result<Poly> {
        let p = form
            .coefficients
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidArgument("division by the zero form".into()))?;
        let lead = form.coefficients[p].clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        loop {
            // Term with the largest power of the pivot variable.
            let Some((e, c)) = rem
                .terms
                .iter()
                .filter(|(e, _)| e[p] > 0)
                .max_by_key(|(e, _)| e[p])
                .map(|(e, c)| (e.clone(), c.clone()))
            else {
                break;
            };
            let mut qe = e.clone();
            qe[p] -= 1;
            let qc = c / &lead;
            for (i, a) in form.coefficients.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut te = qe.clone();
                te[i] += 1;
                rem.add_term(te, -(&qc * a));
            }
            quot.add_term(qe, qc);
        }
        if !rem.is_zero() {
            return Err(Error::NonzeroRemainder(format!(
                "dividing by {form}: {} remainder terms",
                rem.terms.len()
            )));
        }
        Ok(quot)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("linear form is identically zero".into()));
        }
        Ok(Self { coefficients })
    }

    /// Split as `scale * primitive`, where `primitive` has coprime integer
    /// coefficients and a positive first nonzero entry.
    pub fn normalized(&self) -> (Rational, LinearForm) {
        use num_integer::Integer;
        let mut lcm = num_bigint::BigInt::one();
        for c in &self.coefficients {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .coefficients
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = num_bigint::BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        let first_neg = self
            .coefficients
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if first_neg {
            g = -g;
        }
        let prim: Vec<Rational> = ints
            .iter()
            .map(|x| Rational::from_integer(x / &g))
            .collect();
        let scale = Rational::new(g, lcm);
        (scale, LinearForm { coefficients: prim })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*t{}", format_rational(c), i + 1))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Truncated power series in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    pub variables: Vec<String>,
    pub max_total_degree: u32,
    pub coefficients: BTreeMap<Exponent, Rational>,
}

impl MultiSeries {
    pub fn zero(variables: Vec<String>, max_total_degree: u32) -> Self {
        Self {
            variables,
            max_total_degree,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_poly(variables: Vec<String>, max_total_degree: u32, p: &Poly) -> Self {
        let coefficients = p
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= max_total_degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self {
            variables,
            max_total_degree,
            coefficients,
        }
    }

    pub fn to_poly(&self) -> Poly {
        Poly {
            nvars: self.variables.len(),
            terms: self.coefficients.clone(),
        }
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.coefficients.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.max_total_degree.min(other.max_total_degree);
        let mut p = self.to_poly();
        p.add_assign(&other.to_poly());
        Self::from_poly(self.variables.clone(), n, &p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.max_total_degree.min(other.max_total_degree);
        let p = self.to_poly().mul_truncated(&other.to_poly(), n);
        Self::from_poly(self.variables.clone(), n, &p)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_poly(self.variables.clone(), self.max_total_degree, &self.to_poly().scale(k))
    }

    /// Exact division by a linear form: succeeds when the truncated
    /// series is divisible degree by degree. The quotient is exact through
    /// degree `N - 1`.
    pub fn div_linear(&self, form: &LinearForm) -> Result<Self> {
        let mut q = Poly::zero(self.variables.len());
        for d in 0..=self.max_total_degree {
            let part = self.to_poly().homogeneous_part(d);
            q.add_assign(&part.div_linear(form)?);
        }
        Ok(Self::from_poly(
            self.variables.clone(),
            self.max_total_degree.saturating_sub(1),
            &q,
        ))
    }

    /// One `(e_1,...,e_n) : p/q` line per nonzero coefficient, sorted.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.coefficients {
            let ev: Vec<String> = e.iter().map(u32::to_string).collect();
            out.push_str(&format!("({}) : {}\n", ev.join(","), format_rational(c)));
        }
        out
    }
}
