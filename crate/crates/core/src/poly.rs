//! Univariate polynomials over a [`Field`], factorization and splitting fields.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Embedding, Fe, Field};

/// Polynomial with coefficients low degree first; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.coeffs(*c);
            let cstr = if self.field.is_prime_field() { format!("{}", cs[0]) } else { format!("{cs:?}") };
            match i {
                0 => write!(f, "{cstr}")?,
                1 => write!(f, "{cstr}*T")?,
                _ => write!(f, "{cstr}*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// From integer coefficients reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field.clone(), coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }
    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![Fe::ONE] }
    }
    /// The monomial `T`.
    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![Fe::ZERO, Fe::ONE] }
    }
    pub fn constant(field: &Field, c: Fe) -> Poly {
        Poly::new(field.clone(), vec![c])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }
    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fe::ONE
    }
    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(f.clone(), (0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(f.clone(), (0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn scale(&self, c: Fe) -> Poly {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            f.axpy(&mut out[i..i + o.coeffs.len()], a, &o.coeffs);
        }
        Poly::new(f.clone(), out)
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv = f.inv(d.lead())?;
        let mut q = vec![Fe::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], inv);
            if c.is_zero() {
                continue;
            }
            q[top - dd] = c;
            let nc = f.neg(c);
            f.axpy(&mut r[top - dd..=top], nc, &d.coeffs);
        }
        r.truncate(dd);
        Ok((Poly::new(f.clone(), q), Poly::new(f.clone(), r)))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).expect("nonzero divisor").1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).unwrap();
        self.scale(inv)
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f.clone(),
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.from_i64(i as i64))).collect(),
        )
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mulmod(&self, o: &Poly, m: &Poly) -> Poly {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut r = Poly::one(&self.field).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mulmod(&b, m);
            }
            b = b.mulmod(&b, m);
            e >>= 1;
        }
        r
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut r = Poly::one(&self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Map coefficients through a field embedding.
    pub fn embed(&self, e: &Embedding) -> Poly {
        Poly::new(e.target().clone(), e.map_vec(&self.coeffs))
    }

    /// Irreducible monic factors with multiplicities, sorted by degree then
    /// by coefficients from the constant term up. Uses seed 0.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        self.factor_seeded(0)
    }

    pub fn factor_seeded(&self, seed: u64) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<(Poly, usize)> = Vec::new();
        for (sqf, mult) in square_free(&self.monic()) {
            for (g, d) in distinct_degree(&sqf) {
                for h in equal_degree(&g, d, &mut rng) {
                    out.push((h, mult));
                }
            }
        }
        // merge repeated factors coming from different square-free layers
        out.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (p, m) in out {
            match merged.last_mut() {
                Some((q, n)) if *q == p => *n += m,
                _ => merged.push((p, m)),
            }
        }
        Ok(merged)
    }

    fn sort_key(&self) -> (usize, Vec<u32>) {
        (self.coeffs.len(), self.coeffs.iter().map(|c| c.0).collect())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let f = self.factor()?;
        Ok(f.len() == 1 && f[0].1 == 1 && self.degree() > 0)
    }

    /// Roots in the coefficient field with multiplicities.
    pub fn roots(&self) -> Vec<(Fe, usize)> {
        let Ok(factors) = self.factor() else { return Vec::new() };
        let f = &self.field;
        let mut out: Vec<(Fe, usize)> =
            factors.into_iter().filter(|(g, _)| g.degree() == 1).map(|(g, m)| (f.neg(g.coeff(0)), m)).collect();
        out.sort();
        out
    }

    /// p-th root of a polynomial in `T^p`.
    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        // a^(1/p) = a^(p^(k-1))
        let e = (f.order() / f.p()) as u64;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pow(c, e)).collect();
        Poly::new(f.clone(), coeffs)
    }
}

fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree() <= 0 {
        return out;
    }
    let p = f.field.p() as usize;
    let d = f.derivative();
    if d.is_zero() {
        for (g, m) in square_free(&f.pth_root()) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        for (g, m) in square_free(&c.pth_root().monic()) {
            out.push((g, m * p));
        }
    }
    out
}

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = &f.field;
    let q = field.order() as u64;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree() >= 2 * d as isize {
        h = h.powmod(q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            out.push((g, d));
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let deg = rest.degree() as usize;
        out.push((rest.monic(), deg));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree() as usize;
    if n == d {
        return vec![f.monic()];
    }
    let field = &f.field;
    let q = field.order() as u64;
    loop {
        let a = Poly::new(field.clone(), (0..n).map(|_| Fe(rng.gen_range(0..field.order()))).collect());
        if a.degree() < 1 {
            continue;
        }
        let b = if field.p() == 2 {
            // absolute trace a + a^2 + ... + a^(2^(k d - 1))
            let steps = field.degree() as usize * d;
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mulmod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.powmod(q, f);
                acc = acc.mulmod(&t, f);
            }
            acc.powmod((q - 1) / 2, f).sub(&Poly::one(field))
        };
        let g = b.gcd(f);
        if g.degree() > 0 && g.degree() < n as isize {
            let h = f.div_exact(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Degree of the splitting field of `f` over its coefficient field.
pub fn splitting_degree(f: &Poly) -> Result<u32> {
    Ok(f.factor()?.iter().fold(1u64, |acc, (g, _)| lcm(acc, g.degree() as u64)) as u32)
}

/// Smallest extension (presented over F_p) of `f`'s field over which `f` splits.
pub fn splitting_extension(f: &Poly) -> Result<Field> {
    let d = splitting_degree(f)?;
    let base = f.field();
    if d == 1 {
        return Ok(base.clone());
    }
    Field::new(base.p(), base.degree() * d)
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    lcm(a as u64, b as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn t3_minus_t_splits() {
        let f = Poly::from_ints(&f3(), &[0, -1, 0, 1]);
        let fac = f.factor().unwrap();
        assert_eq!(fac.len(), 3);
        assert!(fac.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
        assert_eq!(splitting_extension(&f).unwrap(), f3());
    }

    #[test]
    fn t2_plus_1_irreducible() {
        let f = Poly::from_ints(&f3(), &[1, 0, 1]);
        assert!(f.is_irreducible().unwrap());
        assert_eq!(splitting_extension(&f).unwrap(), Field::new(3, 2).unwrap());
    }

    #[test]
    fn t3_minus_t_minus_1_irreducible() {
        let f = Poly::from_ints(&f3(), &[-1, -1, 0, 1]);
        assert!(f.is_irreducible().unwrap());
    }

    #[test]
    fn lcm_splitting_degree() {
        let a = Poly::from_ints(&f3(), &[1, 0, 1]);
        let b = Poly::from_ints(&f3(), &[-1, -1, 0, 1]);
        let f = a.mul(&b);
        assert_eq!(splitting_extension(&f).unwrap().degree(), 6);
    }

    #[test]
    fn zero_polynomial_errors() {
        assert_eq!(Poly::zero(&f3()).factor().unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn inseparable_powers() {
        // (T+1)^3 (T^2+1)^6 over F_3
        let a = Poly::from_ints(&f3(), &[1, 1]).pow(3);
        let b = Poly::from_ints(&f3(), &[1, 0, 1]).pow(6);
        let fac = a.mul(&b).factor().unwrap();
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].1, 3);
        assert_eq!(fac[1].1, 6);
    }

    #[test]
    fn factors_over_extensions_and_char_two() {
        let f9 = Field::new(3, 2).unwrap();
        // T^2 - 2 splits over F_9
        let g = Poly::from_ints(&f9, &[-2, 0, 1]);
        assert_eq!(g.roots().len(), 2);
        let f2 = Field::prime(2).unwrap();
        // T^4 + T = T (T+1)(T^2+T+1)
        let h = Poly::from_ints(&f2, &[0, 1, 0, 0, 1]);
        let fac = h.factor().unwrap();
        assert_eq!(fac.iter().map(|(g, _)| g.degree()).collect::<Vec<_>>(), vec![1, 1, 2]);
    }
}
