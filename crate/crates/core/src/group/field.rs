//! Finite fields GF(p^d) with table-driven multiplication.
//!
//! Elements are encoded as integers `c0 + c1*p + ... + c_{d-1}*p^(d-1)`, where
//! `c_i` is the coefficient of `x^i` in the polynomial representative. The
//! additive structure is therefore digit-wise addition modulo `p`, and the
//! enumeration order of the field is the natural order of the codes.

use std::fmt;

use crate::error::{Error, Result};

/// Moduli the catalog tuples were published against. Tuples for these fields
/// are representation dependent, so any other choice would break them.
const PINNED_MODULI: &[(u32, u32, &[u32])] = &[
    (5, 2, &[2, 1, 1]),  // x^2 + x + 2
    (7, 2, &[1, 0, 1]),  // x^2 + 1
    (11, 2, &[1, 0, 1]), // x^2 + 1
];

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    /// Monic modulus, coefficients `c0..=c_d` with `c_d == 1`.
    modulus: Vec<u32>,
    order: u32,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({})", self.descriptor())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, d)` with `q = p^d`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut d = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

/// Maximal prime power factors of `n`, ascending by prime.
pub fn prime_power_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if p * p > n {
            out.push(n);
            break;
        }
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    out
}

impl FiniteField {
    /// GF(q) with the default representation: the pinned modulus for 25, 49
    /// and 121, otherwise the lexicographically least monic irreducible.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, d) = prime_power(q)
            .ok_or_else(|| Error::InvalidDescriptor(format!("{q} is not a prime power")))?;
        Self::new(p, d, None)
    }

    pub fn new(p: u32, degree: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!("characteristic {p} is not prime")));
        }
        if degree == 0 {
            return Err(Error::InvalidDescriptor("field degree must be at least 1".into()));
        }
        let order = p
            .checked_pow(degree)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::InvalidDescriptor(format!("GF({p}^{degree}) is too large")))?;
        let modulus = match modulus {
            Some(mut m) => {
                if m.len() == degree as usize {
                    m.push(1);
                }
                if m.len() != degree as usize + 1 || m[degree as usize] != 1 {
                    return Err(Error::InvalidDescriptor(format!(
                        "modulus for GF({p}^{degree}) must be monic of degree {degree}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidDescriptor("modulus coefficient out of range".into()));
                }
                if !is_irreducible(p, &m) {
                    return Err(Error::ReduciblePolynomial(render_poly(&m)));
                }
                m
            }
            None if degree == 1 => vec![0, 1],
            None => default_modulus(p, degree),
        };

        let mut field = Self {
            p,
            degree,
            modulus,
            order,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables()?;
        Ok(field)
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.order;
        if q == 2 {
            self.generator = 1;
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        for g in 1..q {
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut cur = 1;
            loop {
                exp.push(cur);
                cur = self.slow_mul(cur, g);
                if cur == 1 || exp.len() >= q as usize {
                    break;
                }
            }
            if exp.len() == (q - 1) as usize && cur == 1 {
                let mut log = vec![0; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.generator = g;
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        Err(Error::ReduciblePolynomial(render_poly(&self.modulus)))
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0; self.degree as usize];
        for c in out.iter_mut() {
            *c = a % self.p;
            a /= self.p;
        }
        out
    }

    fn code(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let d = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * d];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (d..2 * d).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..d {
                let sub = c * self.modulus[j] % p;
                prod[i - d + j] = (prod[i - d + j] + p - sub) % p;
            }
        }
        self.code(&prod[..d])
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest primitive element.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0, 1);
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let (mut out, mut scale) = (0, 1);
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        let l = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[l as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.order - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = u64::from(self.order - 1);
        let l = u64::from(self.log[a as usize]) * (e % n) % n;
        self.exp[l as usize]
    }

    /// Discrete logarithm to the base [`Self::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.order - 1;
        Some(n / gcd(n, l))
    }

    /// Canonical descriptor, e.g. `GF(13)` or `GF(5^2;poly=2,1,1)`.
    pub fn descriptor(&self) -> String {
        if self.degree == 1 {
            format!("GF({})", self.p)
        } else {
            let poly: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
            format!("GF({}^{};poly={})", self.p, self.degree, poly.join(","))
        }
    }

    pub fn render(&self, a: u32) -> String {
        if self.degree == 1 {
            return a.to_string();
        }
        render_poly_terms(&self.digits(a))
    }

    /// Parses an element written as its integer code (constants included) or
    /// as a polynomial in `x` such as `3+2x` or `x^2+1`.
    pub fn parse(&self, s: &str) -> Result<u32> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if self.degree == 1 {
            let n: i64 = s
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad field element `{s}`")))?;
            return Ok(n.rem_euclid(i64::from(self.p)) as u32);
        }
        if !s.contains('x') {
            let n: u32 = s
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad field element `{s}`")))?;
            if n >= self.order {
                return Err(Error::InvalidInput(format!("{n} is outside {}", self.descriptor())));
            }
            return Ok(n);
        }
        let mut digits = vec![0u32; self.degree as usize];
        for term in s.split('+').filter(|t| !t.is_empty()) {
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(i) => {
                    let coef = if i == 0 { "1" } else { &term[..i] };
                    let rest = &term[i + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| Error::InvalidInput(format!("bad term `{term}`")))?
                    };
                    (coef, power)
                }
            };
            let c: u32 = coef
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient in `{term}`")))?;
            if power >= digits.len() {
                return Err(Error::InvalidInput(format!("degree too high in `{s}`")));
            }
            digits[power] = (digits[power] + c) % self.p;
        }
        Ok(self.code(&digits))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn default_modulus(p: u32, degree: u32) -> Vec<u32> {
    if let Some((_, _, m)) = PINNED_MODULI.iter().find(|(pp, d, _)| *pp == p && *d == degree) {
        return m.to_vec();
    }
    let count = p.pow(degree);
    for code in 0..count {
        let mut m = Vec::with_capacity(degree as usize + 1);
        let mut c = code;
        for _ in 0..degree {
            m.push(c % p);
            c /= p;
        }
        m.push(1);
        if is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// Trial division by every monic polynomial of degree `1..=d/2`.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let d = poly.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for fd in 1..=d / 2 {
        let count = p.pow(fd as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(fd + 1);
            let mut c = code;
            for _ in 0..fd {
                f.push(c % p);
                c /= p;
            }
            f.push(1);
            if poly_rem_is_zero(p, poly, &f) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, num: &[u32], den: &[u32]) -> bool {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for j in 0..=dd {
            let sub = c * den[j] % p;
            r[i - dd + j] = (r[i - dd + j] + p - sub) % p;
        }
    }
    r[..dd].iter().all(|&c| c == 0)
}

fn render_poly_terms(digits: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in digits.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn render_poly(coeffs: &[u32]) -> String {
    render_poly_terms(coeffs)
}
