//! The coefficient group: roots of unity times rational powers of `q` and of
//! formal Satake symbols `z1, z2, ...`.
//!
//! Symbols are unitary, so the real part of a monomial is carried by the
//! exponent of `q` alone.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Div, Mul};
use core::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational exponents.
pub type Q = Ratio<i64>;

/// `zeta * q^a * prod z_i^{b_i}` in canonical form.
///
/// The angle of `zeta` is kept in `[0, 1)`, zero symbol exponents are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    zeta: Q,
    q: Q,
    syms: BTreeMap<u32, Q>,
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { zeta: Q::zero(), q: Q::zero(), syms: BTreeMap::new() }
    }

    /// `q^e`.
    pub fn q_pow(e: Q) -> Self {
        Monomial { q: e, ..Self::one() }
    }

    /// The value `|.|^u (varpi) = q^-u`.
    pub fn abs_pow(u: Q) -> Self {
        Self::q_pow(-u)
    }

    /// `exp(2 pi i angle)`.
    pub fn root_of_unity(angle: Q) -> Self {
        Monomial { zeta: frac(angle), ..Self::one() }
    }

    /// `exp(2 pi i j / n)`.
    pub fn zeta(j: i64, n: i64) -> Self {
        Self::root_of_unity(Q::new(j, n))
    }

    pub fn minus_one() -> Self {
        Self::zeta(1, 2)
    }

    /// The symbol `z_id`.
    pub fn symbol(id: u32) -> Self {
        Self::symbol_pow(id, Q::one())
    }

    pub fn symbol_pow(id: u32, e: Q) -> Self {
        let mut m = Self::one();
        if !e.is_zero() {
            m.syms.insert(id, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.zeta.is_zero() && self.q.is_zero() && self.syms.is_empty()
    }

    /// Angle of the root-of-unity part, in `[0, 1)`.
    pub fn angle(&self) -> Q {
        self.zeta
    }

    pub fn q_exp(&self) -> Q {
        self.q
    }

    pub fn symbols(&self) -> &BTreeMap<u32, Q> {
        &self.syms
    }

    /// True when only a root of unity remains.
    pub fn is_root_of_unity(&self) -> bool {
        self.q.is_zero() && self.syms.is_empty()
    }

    /// Real part of the unramified character taking this value at a
    /// uniformizer.
    pub fn real_part(&self) -> Q {
        -self.q
    }

    pub fn is_unitary(&self) -> bool {
        self.q.is_zero()
    }

    pub fn inv(&self) -> Self {
        self.pow_q(-Q::one())
    }

    pub fn pow(&self, n: i64) -> Self {
        self.pow_q(Q::from_integer(n))
    }

    /// Rational power taken on the canonical representative. Only a group
    /// homomorphism for integer exponents.
    pub fn pow_q(&self, e: Q) -> Self {
        Monomial {
            zeta: frac(self.zeta * e),
            q: self.q * e,
            syms: self.syms.iter().map(|(&k, &v)| (k, v * e)).filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Canonical square root: all exponents and the angle are halved.
    pub fn sqrt(&self) -> Self {
        self.pow_q(Q::new(1, 2))
    }

    /// Drops the part of the angle that is a multiple of `1/f`, so that
    /// values differing by an `f`-th root of unity share a representative.
    pub fn reduce_mod_roots(&self, f: u32) -> Self {
        let step = Q::new(1, f as i64);
        let k = (self.zeta / step).floor();
        Monomial { zeta: self.zeta - k * step, ..self.clone() }
    }

    /// If `self` is a root of unity whose order divides `f`, nothing else.
    pub fn is_root_of_order_dividing(&self, f: u32) -> bool {
        self.is_root_of_unity() && (self.zeta * Q::from_integer(f as i64)).is_integer()
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut syms = self.syms.clone();
        for (&k, &v) in &rhs.syms {
            let e = syms.entry(k).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                syms.remove(&k);
            }
        }
        Monomial { zeta: frac(self.zeta + rhs.zeta), q: self.q + rhs.q, syms }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl Mul<&Monomial> for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        &self * rhs
    }
}

impl Div for &Monomial {
    type Output = Monomial;
    fn div(self, rhs: &Monomial) -> Monomial {
        self * &rhs.inv()
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        &self / &rhs
    }
}

impl core::iter::Product for Monomial {
    fn product<I: Iterator<Item = Monomial>>(iter: I) -> Monomial {
        iter.fold(Monomial::one(), |a, b| a * b)
    }
}

fn write_exp(f: &mut fmt::Formatter<'_>, e: Q) -> fmt::Result {
    if e.is_one() {
        Ok(())
    } else if e.is_integer() && e.is_positive() {
        write!(f, "^{}", e.numer())
    } else if e.is_integer() {
        write!(f, "^({})", e.numer())
    } else {
        write!(f, "^({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(" * ")
            }
        };
        if !self.zeta.is_zero() {
            sep(f)?;
            write!(f, "zeta({}/{})", self.zeta.numer(), self.zeta.denom())?;
        }
        if !self.q.is_zero() {
            sep(f)?;
            f.write_str("q")?;
            write_exp(f, self.q)?;
        }
        for (&k, &v) in &self.syms {
            sep(f)?;
            write!(f, "z{k}")?;
            write_exp(f, v)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of monomial", self.pos))
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let neg = self.eat(b'-');
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let v: i64 = core::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer overflow"))?;
        Ok(if neg { -v } else { v })
    }

    fn rational(&mut self) -> Result<Q> {
        let n = self.int()?;
        if self.eat(b'/') {
            let d = self.int()?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            Ok(Q::new(n, d))
        } else {
            Ok(Q::from_integer(n))
        }
    }

    fn exponent(&mut self) -> Result<Q> {
        if !self.eat(b'^') {
            return Ok(Q::one());
        }
        if self.eat(b'(') {
            let e = self.rational()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(e)
        } else {
            Ok(Q::from_integer(self.int()?))
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        match self.peek() {
            Some(b'z') if self.s[self.pos..].starts_with(b"zeta") => {
                self.pos += 4;
                if !self.eat(b'(') {
                    return Err(self.err("expected '(' after zeta"));
                }
                let a = self.rational()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                let e = self.exponent()?;
                Ok(Monomial::root_of_unity(a * e))
            }
            Some(b'z') => {
                self.pos += 1;
                let id = self.int()?;
                if id < 0 {
                    return Err(self.err("negative symbol index"));
                }
                let e = self.exponent()?;
                Ok(Monomial::symbol_pow(id as u32, e))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Monomial::q_pow(self.exponent()?))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Monomial::one())
            }
            Some(b'i') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(Monomial::root_of_unity(Q::new(1, 4) * e))
            }
            _ => Err(self.err("expected factor")),
        }
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut m = if self.eat(b'-') { Monomial::minus_one() } else { Monomial::one() };
        m = m * self.factor()?;
        while self.eat(b'*') {
            m = m * self.factor()?;
        }
        Ok(m)
    }
}

/// Parses a monomial from the front of `s`, returning it and the number of
/// bytes consumed.
pub fn parse_prefix(s: &str) -> Result<(Monomial, usize)> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    let m = c.monomial()?;
    Ok((m, c.pos))
}

impl FromStr for Monomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor { s: s.as_bytes(), pos: 0 };
        let m = c.monomial()?;
        if c.peek().is_some() {
            return Err(c.err("trailing input"));
        }
        Ok(m)
    }
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_q(x: Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a` or `a/b`.
pub fn parse_q(s: &str) -> Result<Q> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    let x = c.rational()?;
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(x)
}

/// Lowest common multiple of denominators, used when sizing root packs.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
