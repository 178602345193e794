//! Arithmetic in GF(p^m).
//!
//! Elements are dense indices in `[0, q)`. The base-`p` digits of an index,
//! least significant first, are the coefficients of the element viewed as a
//! polynomial over GF(p) reduced modulo the field's defining polynomial.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order for which the full addition/multiplication tables are cached.
const TABLE_LIMIT: u32 = 256;

/// Returns `(p, m)` with `q = p^m` and `p` prime, or `None`.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// An element of a finite field, identified by its index in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The canonical field of order `q = p^m`.
///
/// For `m > 1` the defining polynomial is the lexicographically smallest
/// monic irreducible of degree `m` (coefficients compared constant term
/// first).
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    tables: Option<Tables>,
}

#[derive(Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Builds GF(q). Fails with [`Error::NotPrimePower`] unless `q = p^m`.
    pub fn new(q: u32) -> Result<Self> {
        let (p, m) = is_prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
        if q > 1 << 16 {
            return Err(Error::ParameterOutOfRange(format!(
                "field order {q} exceeds 2^16"
            )));
        }
        let p = p as u32;
        let modulus = (m > 1).then(|| smallest_irreducible(p, m));
        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial, constant term first, monic
    /// leading term included. `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    /// Wraps `value` as an element; panics if `value >= q`.
    pub fn element(&self, value: u32) -> FieldElement {
        assert!(value < self.q, "{value} is not an element of GF({})", self.q);
        FieldElement(value)
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.add[self.idx(a, b)]),
            None => FieldElement(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.map_digits(a.0, |d| (self.p - d) % self.p))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.mul[self.idx(a, b)]),
            None => FieldElement(self.mul_poly(a.0, b.0)),
        }
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] for zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.q));
        }
        Ok(match &self.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize]),
            // a^(q-2) = a^-1 in the multiplicative group of order q-1
            None => self.pow(a, (self.q - 2) as u64),
        })
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial with coefficients `coeffs` (constant first)
    /// at `x` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
        coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    #[inline]
    fn idx(&self, a: FieldElement, b: FieldElement) -> usize {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        (a.0 * self.q + b.0) as usize
    }

    fn build_tables(&self) -> Tables {
        let q = self.q;
        let mut add = Vec::with_capacity((q * q) as usize);
        let mut mul = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                add.push(self.add_digits(a, b));
                mul.push(self.mul_poly(a, b));
            }
        }
        let mut inv = vec![0; q as usize];
        for a in 1..q {
            let b = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .expect("nonzero element has an inverse");
            inv[a as usize] = b;
        }
        Tables { add, mul, inv }
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn map_digits(&self, v: u32, f: impl Fn(u32) -> u32) -> u32 {
        let d: Vec<u32> = self.digits(v).into_iter().map(f).collect();
        self.undigits(&d)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u32> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.undigits(&sum)
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if self.m == 1 {
            return ((a as u64 * b as u64) % p as u64) as u32;
        }
        let prod = poly_mul(&self.digits(a), &self.digits(b), p);
        let modulus = self.modulus.as_ref().expect("extension field has modulus");
        let rem = poly_rem(prod, modulus, p);
        let mut d = rem;
        d.resize(self.m as usize, 0);
        self.undigits(&d)
    }
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            // subtract lead * x^shift * m (the monic top term was popped)
            a[shift + i] = (a[shift + i] + (p - (lead * c) % p)) % p;
        }
    }
    a
}

fn is_zero_poly(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Monic polynomials of the given degree over GF(p), in lexicographic order of
/// their coefficient sequence compared constant term first.
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |idx| {
        let mut coeffs = vec![0u32; degree as usize + 1];
        let mut rest = idx;
        // the constant term is the most significant digit of the ordering
        for i in (0..degree as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[degree as usize] = 1;
        coeffs
    })
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = (poly.len() - 1) as u32;
    (1..=degree / 2).all(|d| monic_polys(p, d).all(|f| !is_zero_poly(&poly_rem(poly.to_vec(), &f, p))))
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
