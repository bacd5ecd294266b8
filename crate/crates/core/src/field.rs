//! Finite fields `F_p` and `F_{p^k}`.
//!
//! Elements are encoded as integers `sum c_i p^i` where `c_0..c_{k-1}` are the
//! coefficients of the residue modulo the defining polynomial. The prime
//! subfield therefore has the same encoding (`0..p`) in every extension, so
//! prime-field constants can be used in any field of the same characteristic
//! without conversion.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Encoded field element. Only meaningful together with its [`Field`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

const TABLE_LIMIT: u64 = 1 << 20;
const ADD_TABLE_LIMIT: u64 = 1024;

struct LogTables {
    /// exp[i] = g^i for i in 0..2(q-1)
    exp: Vec<u32>,
    /// log[a] for a != 0
    log: Vec<u32>,
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low degree first, length k+1. `[0, 1]` for prime fields.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
    add_table: Option<Vec<u32>>,
}

/// A finite field, cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}{:?}", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.k)
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Plain polynomial helpers over F_p on coefficient vectors (low degree first),
// used only for modulus search before a Field value exists.
fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let inv_lead = fp_inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * inv_lead as u64 % p as u64) as u32;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let v: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
    fp_rem(&v, m, p)
}

fn fp_powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = fp_mulmod(&result, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

fn fp_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Rabin irreducibility test for a monic polynomial of degree k over F_p.
pub(crate) fn fp_is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^{p^j} mod m
    let frob = |j: usize| -> Vec<u32> {
        let mut h = x.clone();
        for _ in 0..j {
            h = fp_powmod(&h, p as u64, m, p);
        }
        h
    };
    let sub_x = |mut h: Vec<u32>| -> Vec<u32> {
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        fp_trim(&mut h);
        h
    };
    let full = sub_x(frob(k));
    if !full.is_empty() {
        return false;
    }
    for r in prime_factors(k as u64) {
        let h = sub_x(frob(k / r as usize));
        let g = fp_gcd(m, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree k over F_p, where
/// coefficient vectors are compared from the constant term upwards.
pub(crate) fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let mut low = vec![0u32; k];
    loop {
        let mut m = low.clone();
        m.push(1);
        if m[0] != 0 && fp_is_irreducible(&m, p) {
            return m;
        }
        // increment with the highest non-leading coefficient fastest
        let mut i = k;
        loop {
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            assert!(i > 0, "no irreducible polynomial found");
        }
    }
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    /// F_{p^k} with the canonical (smallest) modulus.
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p as u64) || p >= 1 << 16 {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::Invalid("extension degree must be >= 1".into()));
        }
        let modulus = if k == 1 { vec![0, 1] } else { smallest_irreducible(p, k) };
        Field::build(p, k, modulus)
    }

    /// F_{p^k} defined by an explicit monic irreducible modulus (low degree first).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p as u64) || p >= 1 << 16 {
            return Err(Error::NotPrime(p as u64));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus(format!("{modulus:?}")));
        }
        let k = (modulus.len() - 1) as u32;
        if k == 1 {
            return Field::build(p, 1, vec![0, 1]);
        }
        if !fp_is_irreducible(&modulus, p) {
            return Err(Error::BadModulus(format!("{modulus:?} is reducible over F_{p}")));
        }
        Field::build(p, k, modulus)
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Result<Field> {
        let q = (p as u64).checked_pow(k).filter(|&q| q < 1u64 << 31).ok_or(Error::FieldTooLarge { p, k })?;
        let mut data = FieldData { p, k, q: q as u32, modulus, tables: None, add_table: None };
        if k > 1 {
            if q <= ADD_TABLE_LIMIT {
                let mut t = vec![0u32; (q * q) as usize];
                for a in 0..q as u32 {
                    for b in 0..q as u32 {
                        t[(a as u64 * q + b as u64) as usize] = slow_add(&data, a, b);
                    }
                }
                data.add_table = Some(t);
            }
            if q <= TABLE_LIMIT {
                data.tables = Some(build_tables(&data));
            }
        }
        Ok(Field(Arc::new(data)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn degree(&self) -> u32 {
        self.0.k
    }
    pub fn order(&self) -> u32 {
        self.0.q
    }
    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }
    /// Defining polynomial (low degree first); `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.0.k == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The class of the polynomial variable `t` (a generator over F_p).
    pub fn gen(&self) -> Fe {
        if self.0.k == 1 {
            Fe(0)
        } else {
            Fe(self.0.p)
        }
    }

    pub fn from_i64(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut v = a.0;
        for _ in 0..self.0.k {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fe> {
        if c.len() > self.0.k as usize || c.iter().any(|&x| x >= self.0.p) {
            return Err(Error::Invalid(format!("{c:?} is not an element of {self}")));
        }
        let mut v = 0u32;
        for &x in c.iter().rev() {
            v = v * self.0.p + x;
        }
        Ok(Fe(v))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let d = &*self.0;
        if d.k == 1 {
            let s = a.0 + b.0;
            Fe(if s >= d.p { s - d.p } else { s })
        } else if let Some(t) = &d.add_table {
            Fe(t[(a.0 as usize) * d.q as usize + b.0 as usize])
        } else {
            Fe(slow_add(d, a.0, b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let d = &*self.0;
        if d.k == 1 {
            Fe(if a.0 == 0 { 0 } else { d.p - a.0 })
        } else {
            let mut v = a.0;
            let mut out = 0u32;
            let mut w = 1u32;
            for _ in 0..d.k {
                let c = v % d.p;
                v /= d.p;
                out += if c == 0 { 0 } else { (d.p - c) * w };
                w = w.wrapping_mul(d.p);
            }
            Fe(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let d = &*self.0;
        if d.k == 1 {
            Fe(((a.0 as u64 * b.0 as u64) % d.p as u64) as u32)
        } else if a.0 == 0 || b.0 == 0 {
            Fe(0)
        } else if let Some(t) = &d.tables {
            Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
        } else {
            Fe(slow_mul(d, a.0, b.0))
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = &*self.0;
        if let Some(t) = &d.tables {
            let l = t.log[a.0 as usize];
            return Ok(Fe(t.exp[((d.q - 1 - l) % (d.q - 1)) as usize]));
        }
        Ok(self.pow(a, d.q as u64 - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut r = Fe::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.0.p as u64)
    }

    /// `dst[i] += c * src[i]`
    #[inline]
    pub fn axpy(&self, dst: &mut [Fe], c: Fe, src: &[Fe]) {
        if c.is_zero() {
            return;
        }
        let d = &*self.0;
        if d.k == 1 {
            let p = d.p as u64;
            let c = c.0 as u64;
            for (x, &y) in dst.iter_mut().zip(src) {
                if y.0 != 0 {
                    x.0 = ((x.0 as u64 + c * y.0 as u64) % p) as u32;
                }
            }
        } else {
            for (x, &y) in dst.iter_mut().zip(src) {
                if y.0 != 0 {
                    *x = self.add(*x, self.mul(c, y));
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [Fe], c: Fe) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Fe], b: &[Fe]) -> Fe {
        let mut s = Fe::ZERO;
        for (&x, &y) in a.iter().zip(b) {
            if x.0 != 0 && y.0 != 0 {
                s = self.add(s, self.mul(x, y));
            }
        }
        s
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.0.p, k: self.0.k, modulus: self.modulus().map(|m| m.to_vec()) }
    }

    /// Whether `self` is a subfield of `other` (same characteristic, degree divides).
    pub fn divides(&self, other: &Field) -> bool {
        self.0.p == other.0.p && other.0.k % self.0.k == 0
    }

    /// Canonical embedding into an extension: the generator goes to the
    /// smallest (by encoding) root of this field's modulus in `target`.
    pub fn embedding_into(&self, target: &Field) -> Result<Embedding> {
        if !self.divides(target) {
            return Err(Error::NotAnExtension { from: self.to_string(), to: target.to_string() });
        }
        if self.0.k == 1 || self == target {
            let image = if self == target { self.gen() } else { Fe(0) };
            return Ok(Embedding { source: self.clone(), target: target.clone(), gen_powers: powers(target, image, self.0.k) });
        }
        let m = crate::poly::Poly::new(target.clone(), self.0.modulus.iter().map(|&c| Fe(c)).collect());
        let roots = m.roots();
        let r = roots.iter().map(|(r, _)| *r).min().ok_or_else(|| Error::NotAnExtension {
            from: self.to_string(),
            to: target.to_string(),
        })?;
        Ok(Embedding { source: self.clone(), target: target.clone(), gen_powers: powers(target, r, self.0.k) })
    }
}

fn powers(f: &Field, r: Fe, k: u32) -> Vec<Fe> {
    let mut out = Vec::with_capacity(k as usize);
    let mut x = Fe::ONE;
    for _ in 0..k {
        out.push(x);
        x = f.mul(x, r);
    }
    out
}

/// Field homomorphism `F_{p^k} -> F_{p^m}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    gen_powers: Vec<Fe>,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.source
    }
    pub fn target(&self) -> &Field {
        &self.target
    }
    pub fn map(&self, a: Fe) -> Fe {
        if self.source.is_prime_field() {
            return a;
        }
        let mut out = Fe::ZERO;
        for (c, &g) in self.source.coeffs(a).into_iter().zip(&self.gen_powers) {
            if c != 0 {
                out = self.target.add(out, self.target.mul(Fe(c), g));
            }
        }
        out
    }
    pub fn map_vec(&self, v: &[Fe]) -> Vec<Fe> {
        v.iter().map(|&a| self.map(a)).collect()
    }
}

fn slow_add(d: &FieldData, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0u32;
    let mut w = 1u32;
    for _ in 0..d.k {
        let c = (a % d.p + b % d.p) % d.p;
        a /= d.p;
        b /= d.p;
        out += c * w;
        w = w.wrapping_mul(d.p);
    }
    out
}

fn digits(d: &FieldData, mut a: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(d.k as usize);
    for _ in 0..d.k {
        out.push(a % d.p);
        a /= d.p;
    }
    out
}

fn slow_mul(d: &FieldData, a: u32, b: u32) -> u32 {
    let r = fp_mulmod(&digits(d, a), &digits(d, b), &d.modulus, d.p);
    let mut v = 0u32;
    for &x in r.iter().rev() {
        v = v * d.p + x;
    }
    v
}

fn build_tables(d: &FieldData) -> LogTables {
    let q = d.q as u64;
    let factors = prime_factors(q - 1);
    let slow_pow = |a: u32, mut e: u64| {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = slow_mul(d, r, b);
            }
            b = slow_mul(d, b, b);
            e >>= 1;
        }
        r
    };
    let g = (2..d.q)
        .find(|&g| factors.iter().all(|&r| slow_pow(g, (q - 1) / r) != 1))
        .expect("multiplicative group is cyclic");
    let n = (q - 1) as usize;
    let mut exp = vec![0u32; 2 * n];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i] = x;
        log[x as usize] = i as u32;
        x = slow_mul(d, x, g);
    }
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    LogTables { exp, log }
}

/// Serialized field: `{"p": 3, "k": 2, "modulus": [1,0,1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one_u32")]
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one_u32() -> u32 {
    1
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        match &self.modulus {
            Some(m) if self.k > 1 => {
                if m.len() != self.k as usize + 1 {
                    return Err(Error::BadModulus(format!("degree of {m:?} is not {}", self.k)));
                }
                Field::with_modulus(self.p, m.clone())
            }
            _ => Field::new(self.p, self.k),
        }
    }
}

/// An element together with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    pub field: Field,
    pub value: Fe,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// `a^e` with the exponent taken from `b`'s integer encoding.
    Pow,
    Frobenius,
}

impl Scalar {
    pub fn new(field: &Field, value: Fe) -> Scalar {
        Scalar { field: field.clone(), value }
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Binary field arithmetic on [`Scalar`]s with field checking.
pub fn field_arith(a: &Scalar, b: &Scalar, op: FieldOp) -> Result<Scalar> {
    let f = &a.field;
    if op != FieldOp::Frobenius && op != FieldOp::Pow && a.field != b.field {
        return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    let v = match op {
        FieldOp::Add => f.add(a.value, b.value),
        FieldOp::Sub => f.sub(a.value, b.value),
        FieldOp::Mul => f.mul(a.value, b.value),
        FieldOp::Div => f.div(a.value, b.value)?,
        FieldOp::Pow => f.pow(a.value, b.value.0 as u64),
        FieldOp::Frobenius => f.frobenius(a.value),
    };
    Ok(Scalar::new(f, v))
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn f3_products() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.mul(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f.inv(Fe(1)).unwrap(), Fe(1));
        assert_eq!(f.inv(Fe(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn f9_modulus_and_t_squared() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 0, 1][..]));
        let t = f.gen();
        // t^2 = -1 = 2
        assert_eq!(f.mul(t, t), Fe(2));
    }

    #[test]
    fn modulus_is_deterministic() {
        for (p, k) in [(2, 3), (3, 3), (5, 2), (7, 2), (3, 6)] {
            let a = Field::new(p, k).unwrap();
            let b = Field::new(p, k).unwrap();
            assert_eq!(a.modulus(), b.modulus());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::new(3, 2).unwrap();
        let r = field_arith(&Scalar::new(&f3, Fe(1)), &Scalar::new(&f9, Fe(1)), FieldOp::Add);
        assert!(matches!(r, Err(Error::FieldMismatch(..))));
        let r = field_arith(&Scalar::new(&f3, Fe(1)), &Scalar::new(&f3, Fe(0)), FieldOp::Div);
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Field::with_modulus(3, vec![2, 0, 1]).is_err()); // t^2 - 1
        assert!(Field::with_modulus(3, vec![1, 0, 1]).is_ok());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn inverse_and_frobenius_additivity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for (p, k) in [(3, 1), (3, 2), (5, 2), (2, 4), (3, 5), (7, 3), (3, 13)] {
            let f = Field::new(p, k).unwrap();
            for _ in 0..100 {
                let a = Fe(rng.gen_range(0..f.order()));
                let b = Fe(rng.gen_range(0..f.order()));
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                let lhs = f.frobenius(f.add(a, b));
                let rhs = f.add(f.frobenius(a), f.frobenius(b));
                assert_eq!(lhs, rhs);
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f9 = Field::new(3, 2).unwrap();
        let f81 = Field::new(3, 4).unwrap();
        let e = f9.embedding_into(&f81).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                assert_eq!(e.map(f9.mul(a, b)), f81.mul(e.map(a), e.map(b)));
                assert_eq!(e.map(f9.add(a, b)), f81.add(e.map(a), e.map(b)));
            }
        }
        assert!(f9.embedding_into(&Field::new(3, 3).unwrap()).is_err());
    }
}
