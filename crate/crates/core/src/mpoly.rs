//! Exact sparse polynomials over the rationals in the variables
//! `x, u, y, v, z`.
//!
//! Terms live in a `BTreeMap` keyed by the exponent vector, and no stored
//! coefficient is ever zero, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    U,
    Y,
    V,
    Z,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::U, Var::Y, Var::V, Var::Z];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::U => 'u',
            Var::Y => 'y',
            Var::V => 'v',
            Var::Z => 'z',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

/// Exponents of `x, u, y, v, z`, in that order.
pub type Exponents = [u32; 5];

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, [0; 5])
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(integer(n))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::monomial(v, 1)
    }

    /// `v^e` with coefficient one.
    pub fn monomial(v: Var, e: u32) -> Self {
        let mut exps = [0; 5];
        exps[v.index()] = e;
        Polynomial::term(Rational::one(), exps)
    }

    pub fn term(coef: Rational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exps, coef);
        }
        Polynomial { terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`, applied `order` times.
    pub fn partial_derivative(&self, v: Var, order: u32) -> Polynomial {
        let i = v.index();
        let mut out = Polynomial::zero();
        for (exps, coef) in &self.terms {
            let e = exps[i];
            if e < order {
                continue;
            }
            // falling factorial e (e-1) ... (e-order+1)
            let factor = (0..order).fold(BigInt::one(), |acc, k| acc * BigInt::from(e - k));
            let mut new_exps = *exps;
            new_exps[i] = e - order;
            out.add_term(new_exps, coef * Rational::from_integer(factor));
        }
        out
    }

    /// Simultaneous substitution; unbound variables are left in place.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Polynomial>) -> Polynomial {
        let mut power_cache: BTreeMap<(Var, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (exps, coef) in &self.terms {
            let mut product = Polynomial::constant(coef.clone());
            let mut kept = [0u32; 5];
            for v in Var::ALL {
                let e = exps[v.index()];
                if e == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    Some(b) => {
                        let p = power_cache
                            .entry((v, e))
                            .or_insert_with(|| b.pow(e))
                            .clone();
                        product = &product * &p;
                    }
                    None => kept[v.index()] = e,
                }
            }
            if kept != [0; 5] {
                product = product.shift(&kept);
            }
            out += product;
        }
        out
    }

    /// Multiply every term by the monomial with exponents `by`.
    fn shift(&self, by: &Exponents) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut n = *e;
                    for k in 0..5 {
                        n[k] += by[k];
                    }
                    (n, c.clone())
                })
                .collect(),
        }
    }

    /// Exact value at a point; every variable that occurs must be bound.
    pub fn evaluate(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (exps, coef) in &self.terms {
            let mut value = coef.clone();
            for v in Var::ALL {
                let e = exps[v.index()];
                if e == 0 {
                    continue;
                }
                let base = point.get(&v).ok_or(Error::UnboundVariable(v.name()))?;
                value *= num_traits::pow(base.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Coefficient of `Π v^e` over the listed variables, as a polynomial in
    /// the remaining ones.
    pub fn coefficient_of(&self, powers: &[(Var, u32)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (exps, coef) in &self.terms {
            if powers.iter().all(|&(v, e)| exps[v.index()] == e) {
                let mut rest = *exps;
                for &(v, _) in powers {
                    rest[v.index()] = 0;
                }
                out.add_term(rest, coef.clone());
            }
        }
        out
    }

    /// Terms in display order: total degree descending, then exponent
    /// vectors descending lexicographically in the order x, u, y, v, z.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    /// Deterministic text form, e.g. `x^2 + x*y + y^2 + x + y`.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (exps, coef)) in self.sorted_terms().into_iter().enumerate() {
            let negative = coef.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coef.abs();
            let factors: Vec<String> = Var::ALL
                .iter()
                .filter(|v| exps[v.index()] > 0)
                .map(|v| match exps[v.index()] {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            if factors.is_empty() {
                f.write_str(&render_rational(&magnitude))?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{}*", render_rational(&magnitude))?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::int(n)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for k in 0..5 {
                    e[k] += eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        Parser::new(s).parse()
    }
}

/// Recursive-descent parser for the rendering grammar:
/// `term ::= [coef "*"] factor {"*" factor} | coef`,
/// `factor ::= var ["^" int]`, terms joined by `+` or `-`.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::PolynomialSyntax {
            position: self.pos,
            message: message.into(),
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut negative = self.eat(b'-');
        loop {
            let t = self.term()?;
            if negative {
                out -= &t;
            } else {
                out += t;
            }
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
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut coef = Rational::one();
        let mut exps = [0u32; 5];
        let mut expect_factor = true;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.integer()?;
            let denom = if self.eat(b'/') {
                self.integer()?
            } else {
                BigInt::one()
            };
            if denom.is_zero() {
                return self.err("zero denominator");
            }
            coef = Rational::new(numer, denom);
            expect_factor = self.eat(b'*');
        }
        while expect_factor {
            let c = match self.peek() {
                Some(c) => c as char,
                None => return self.err("expected a variable"),
            };
            let v = match Var::from_name(c) {
                Some(v) => v,
                None => return self.err(format!("unknown variable `{}`", c)),
            };
            self.pos += 1;
            let e = if self.eat(b'^') {
                let e = self.integer()?;
                match u32::try_from(e) {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent too large"),
                }
            } else {
                1
            };
            exps[v.index()] += e;
            expect_factor = self.eat(b'*');
        }
        Ok(Polynomial::term(coef, exps))
    }
}

/// Build a binding map from `(variable, polynomial)` pairs.
pub fn bindings<I: IntoIterator<Item = (Var, Polynomial)>>(pairs: I) -> BTreeMap<Var, Polynomial> {
    pairs.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn x() -> Polynomial {
        Polynomial::var(Var::X)
    }

    fn u() -> Polynomial {
        Polynomial::var(Var::U)
    }

    fn y() -> Polynomial {
        Polynomial::var(Var::Y)
    }

    fn v() -> Polynomial {
        Polynomial::var(Var::V)
    }

    #[test]
    fn difference_of_squares() {
        let a = &x() + &Polynomial::one();
        let b = &x() - &Polynomial::one();
        assert_eq!(&a * &b, p("x^2 - 1"));
    }

    #[test]
    fn self_cancellation() {
        let t = p("x^2 + x*y + y^2 + x + y");
        assert!((&t - &t).is_zero());
        assert_eq!((&t - &t).to_string(), "0");
    }

    #[test]
    fn table2_caption_expansion() {
        let xu = &x() + &u();
        let yv = &y() + &v();
        let total = xu.pow(2) + &xu * &yv + yv.pow(2) + &xu + &yv;
        assert_eq!(total.len(), 14);
        // the 16 monomials listed row by row in the activity table of M1
        let listed = [
            "x^2", "x*y", "y^2", "x", "y", "x*u", "x*u", "u*y", "u", "x*v", "y*v", "y*v", "v",
            "u^2", "u*v", "v^2",
        ];
        let sum: Polynomial = listed.iter().map(|s| p(s)).sum();
        assert_eq!(total, sum);
    }

    #[test]
    fn derivatives_of_m1_polynomial() {
        let t = p("x^2 + x*y + y^2 + x + y");
        assert_eq!(t.partial_derivative(Var::X, 1), p("2*x + y + 1"));
        assert_eq!(t.partial_derivative(Var::Y, 1), p("x + 2*y + 1"));
        assert!(Polynomial::int(7).partial_derivative(Var::X, 1).is_zero());
        assert_eq!(t.partial_derivative(Var::X, 2), Polynomial::int(2));
        assert_eq!(t, t.partial_derivative(Var::Z, 0));
    }

    #[test]
    fn substitution_examples() {
        let shift = bindings([
            (Var::X, p("x - 1")),
            (Var::U, Polynomial::one()),
            (Var::Y, p("y - 1")),
            (Var::V, Polynomial::one()),
        ]);
        assert_eq!(p("u^2").substitute(&shift), Polynomial::one());
        assert_eq!(p("x^2").substitute(&shift), p("x^2 - 2*x + 1"));

        let t = p("x^2 + x*y + y^2 + x + y");
        assert_eq!(t.substitute(&bindings([(Var::X, x())])), t);

        let halves = bindings([
            (Var::X, p("1/2*x")),
            (Var::U, p("1/2*x")),
            (Var::Y, p("1/2*y")),
            (Var::V, p("1/2*y")),
        ]);
        assert_eq!(p("x*u").substitute(&halves), p("1/4*x^2"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let swap = bindings([(Var::X, y()), (Var::Y, x())]);
        assert_eq!(p("x^2*y").substitute(&swap), p("x*y^2"));
    }

    #[test]
    fn evaluation() {
        let t = p("x^2 + x*y + y^2 + x + y");
        let pt: BTreeMap<Var, Rational> = [(Var::X, integer(2)), (Var::Y, integer(2))].into();
        assert_eq!(t.evaluate(&pt).unwrap(), integer(16));

        let zero: BTreeMap<Var, Rational> = Var::ALL.iter().map(|&v| (v, integer(0))).collect();
        assert_eq!(p("3*x*z + 5/2").evaluate(&zero).unwrap(), rational(5, 2));

        let t2 = p("x^2*z^2 + 3*x*z^2 + y*z^2 + 3*z^2 + 2*x*z + 2*y*z + 5*z + y + 2");
        let at: BTreeMap<Var, Rational> =
            [(Var::X, integer(0)), (Var::Y, integer(0)), (Var::Z, integer(1))].into();
        assert_eq!(t2.evaluate(&at).unwrap(), integer(10));

        let partial: BTreeMap<Var, Rational> = [(Var::X, integer(1))].into();
        assert_eq!(t.evaluate(&partial).unwrap_err(), Error::UnboundVariable('y'));
    }

    #[test]
    fn canonical_rendering() {
        let t = &(&(&x().pow(2) + &(&x() * &y())) + &y().pow(2)) + &(&x() + &y());
        assert_eq!(t.canonical_text(), "x^2 + x*y + y^2 + x + y");
        assert_eq!(Polynomial::zero().canonical_text(), "0");
        assert_eq!(x().scale(&rational(1, 2)).canonical_text(), "1/2*x");
        assert_eq!(p("1 - x").canonical_text(), "-x + 1");
        assert_eq!(p("-3/4*y*z^2 - 2").canonical_text(), "-3/4*y*z^2 - 2");
        assert_eq!(p("z^2+2*z+1").canonical_text(), "z^2 + 2*z + 1");
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!("x +".parse::<Polynomial>().is_err());
        assert!("w".parse::<Polynomial>().is_err());
        assert!("1/0*x".parse::<Polynomial>().is_err());
        assert!("x y".parse::<Polynomial>().is_err());
        assert_eq!(p("  2 * x ^ 2 *y  "), p("2*x^2*y"));
        assert_eq!(p("x*x"), p("x^2"));
    }

    #[test]
    fn coefficient_extraction() {
        let q = p("3*u^2*v*x + u^2*v + x*y");
        assert_eq!(q.coefficient_of(&[(Var::U, 2), (Var::V, 1)]), p("3*x + 1"));
        assert_eq!(q.coefficient_of(&[(Var::U, 0), (Var::V, 0)]), p("x*y"));
    }
}
