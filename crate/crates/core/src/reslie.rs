//! Restricted Lie algebras, PBW arithmetic in `U(L)`, reduced enveloping
//! algebras `U_λ` and the restricted enveloping Hopf algebra `u(L)`.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::{SCAlgebra, Violation, DEFAULT_DIM_CAP};
use crate::field::{Fe, Field};
use crate::galois::{ComoduleAlgebra, Splitting};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::linalg::Matrix;

/// Restricted Lie algebra over `F_p` with `[e_i, e_j] = Σ_k bracket[(i n + j) n + k] e_k`
/// and `e_i^[p] = Σ_k pmap[i][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLie {
    field: Field,
    labels: Vec<String>,
    bracket: Vec<Fe>,
    pmap: Vec<Vec<Fe>>,
}

impl RestrictedLie {
    pub fn new(field: Field, labels: Vec<String>, bracket: Vec<Fe>, pmap: Vec<Vec<Fe>>) -> Result<Self> {
        if !field.is_prime_field() {
            return Err(Error::Invalid("restricted Lie algebras are defined over the prime field".into()));
        }
        let n = labels.len();
        if bracket.len() != n * n * n || pmap.len() != n || pmap.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("bracket or p-map does not match {n} basis elements")));
        }
        Ok(RestrictedLie { field, labels, bracket, pmap })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn p(&self) -> u32 {
        self.field.p()
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn bracket(&self, i: usize, j: usize) -> &[Fe] {
        let n = self.dim();
        &self.bracket[(i * n + j) * n..(i * n + j + 1) * n]
    }
    pub fn pmap(&self, i: usize) -> &[Fe] {
        &self.pmap[i]
    }

    pub fn bracket_vec(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![Fe::ZERO; n];
        for i in 0..n {
            for j in 0..n {
                let c = f.mul(x[i], y[j]);
                if !c.is_zero() {
                    f.axpy(&mut out, c, self.bracket(i, j));
                }
            }
        }
        out
    }

    /// Matrix of `ad x` (column j is `[x, e_j]`).
    pub fn ad(&self, x: &[Fe]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Fe>> = (0..n).map(|j| self.bracket_vec(x, &unit_vec(n, j))).collect();
        Matrix::from_cols(&cols, n)
    }

    /// Antisymmetry, Jacobi and `ad(e_i^[p]) = (ad e_i)^p`.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.dim();
        let f = &self.field;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let a = self.bracket(i, j);
                let b = self.bracket(j, i);
                if a.iter().zip(b).any(|(&x, &y)| !f.add(x, y).is_zero()) {
                    out.push(Violation::new("antisymmetry", &[i, j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                    let t1 = self.bracket_vec(&ei, &self.bracket_vec(&ej, &ek));
                    let t2 = self.bracket_vec(&ej, &self.bracket_vec(&ek, &ei));
                    let t3 = self.bracket_vec(&ek, &self.bracket_vec(&ei, &ej));
                    if (0..n).any(|t| !f.add(f.add(t1[t], t2[t]), t3[t]).is_zero()) {
                        out.push(Violation::new("jacobi", &[i, j, k]));
                    }
                }
            }
        }
        for i in 0..n {
            let lhs = self.ad(&self.pmap[i]);
            let rhs = self.ad(&unit_vec(n, i)).pow(f, self.p() as u64);
            if lhs != rhs {
                out.push(Violation::new("restrictedness", &[i]));
            }
        }
        out
    }

    fn require_restricted(&self) -> Result<()> {
        let v = self.verify();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("not a restricted Lie algebra: {} at {:?}", v[0].axiom, v[0].indices)))
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    v[i] = Fe::ONE;
    v
}

/// `{"p": 3, "basis": ["e","h","f"], "bracket": {"e,f": {"h": 1}}, "pmap": {"h": {"h": 1}}}`.
/// Omitted pairs are zero and `[b,a] = -[a,b]` is filled in when only one
/// order is given.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieJson {
    pub p: u32,
    pub basis: Vec<String>,
    #[serde(default)]
    pub bracket: BTreeMap<String, BTreeMap<String, i64>>,
    #[serde(default)]
    pub pmap: BTreeMap<String, BTreeMap<String, i64>>,
}

impl LieJson {
    pub fn build(&self) -> Result<RestrictedLie> {
        let field = Field::prime(self.p)?;
        let n = self.basis.len();
        let idx = |name: &str| -> Result<usize> {
            self.basis
                .iter()
                .position(|b| b == name.trim())
                .ok_or_else(|| Error::Invalid(format!("unknown basis element {name:?}")))
        };
        let mut given = vec![false; n * n];
        let mut bracket = vec![Fe::ZERO; n * n * n];
        for (pair, value) in &self.bracket {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Invalid(format!("bracket key {pair:?} is not of the form \"a,b\"")))?;
            let (i, j) = (idx(a)?, idx(b)?);
            given[i * n + j] = true;
            for (k, &c) in value {
                let k = idx(k)?;
                bracket[(i * n + j) * n + k] = field.from_i64(c);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !given[i * n + j] && given[j * n + i] {
                    for k in 0..n {
                        bracket[(i * n + j) * n + k] = field.neg(bracket[(j * n + i) * n + k]);
                    }
                }
            }
        }
        let mut pmap = vec![vec![Fe::ZERO; n]; n];
        for (a, value) in &self.pmap {
            let i = idx(a)?;
            for (k, &c) in value {
                pmap[i][idx(k)?] = field.from_i64(c);
            }
        }
        RestrictedLie::new(field, self.basis.clone(), bracket, pmap)
    }

    pub fn from_lie(l: &RestrictedLie) -> LieJson {
        let n = l.dim();
        let f = &l.field;
        let signed = |c: Fe| -> i64 {
            let v = c.0 as i64;
            if v > f.p() as i64 / 2 {
                v - f.p() as i64
            } else {
                v
            }
        };
        let mut bracket = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let v: BTreeMap<String, i64> = l
                    .bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, &c)| (l.labels[k].clone(), signed(c)))
                    .collect();
                if !v.is_empty() {
                    bracket.insert(format!("{},{}", l.labels[i], l.labels[j]), v);
                }
            }
        }
        let mut pmap = BTreeMap::new();
        for i in 0..n {
            let v: BTreeMap<String, i64> = l.pmap[i]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, &c)| (l.labels[k].clone(), signed(c)))
                .collect();
            if !v.is_empty() {
                pmap.insert(l.labels[i].clone(), v);
            }
        }
        LieJson { p: l.p(), basis: l.labels.clone(), bracket, pmap }
    }
}

impl Serialize for RestrictedLie {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LieJson::from_lie(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RestrictedLie {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LieJson::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}

/// PBW exponent vector.
pub type Mono = Vec<u32>;

/// Element of `U(L)` in PBW coordinates; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UEnvElement {
    pub terms: BTreeMap<Mono, Fe>,
}

impl UEnvElement {
    pub fn zero() -> Self {
        UEnvElement::default()
    }

    pub fn monomial(m: Mono, c: Fe) -> Self {
        let mut e = UEnvElement::zero();
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn one(n: usize) -> Self {
        UEnvElement::monomial(vec![0; n], Fe::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: &Field, m: &Mono, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(v) => {
                *v = f.add(*v, c);
                if v.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c);
            }
        }
    }

    pub fn add_scaled(&mut self, f: &Field, other: &UEnvElement, c: Fe) {
        for (m, &v) in &other.terms {
            self.add_term(f, m, f.mul(c, v));
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn to_string_with(&self, f: &Field, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, &c)| {
                let coef = f.coeffs(c).iter().map(|d| d.to_string()).collect::<Vec<_>>().join(":");
                format!("{coef}*{}", mono_label(m, labels))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn mono_label(m: &[u32], labels: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(labels)
        .filter(|(&a, _)| a > 0)
        .map(|(&a, l)| if a == 1 { l.clone() } else { format!("{l}^{a}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// PBW straightening in `U(L)` with coefficients in `field` (an extension of
/// the Lie algebra's prime field), memoizing `e_i · e^α`.
pub struct Pbw {
    lie: RestrictedLie,
    field: Field,
    memo: HashMap<(usize, Mono), UEnvElement>,
}

pub const MAX_WORD_LEN: usize = 32;

impl Pbw {
    pub fn new(lie: &RestrictedLie, field: &Field) -> Pbw {
        Pbw { lie: lie.clone(), field: field.clone(), memo: HashMap::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lie(&self) -> &RestrictedLie {
        &self.lie
    }

    /// `e_i · e^m`.
    pub fn gen_mono(&mut self, i: usize, m: &Mono) -> UEnvElement {
        let first = m.iter().position(|&a| a > 0);
        match first {
            None => {
                let mut r = m.clone();
                r[i] += 1;
                return UEnvElement::monomial(r, Fe::ONE);
            }
            Some(j) if i <= j => {
                let mut r = m.clone();
                r[i] += 1;
                return UEnvElement::monomial(r, Fe::ONE);
            }
            _ => {}
        }
        let key = (i, m.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let j = first.unwrap();
        let mut rest = m.clone();
        rest[j] -= 1;
        // e_i e_j e^rest = e_j (e_i e^rest) + [e_i, e_j] e^rest
        let inner = self.gen_mono(i, &rest);
        let mut out = self.left_gen(j, &inner);
        let br: Vec<Fe> = self.lie.bracket(i, j).to_vec();
        for (k, &c) in br.iter().enumerate() {
            if !c.is_zero() {
                let t = self.gen_mono(k, &rest);
                out.add_scaled(&self.field.clone(), &t, c);
            }
        }
        self.memo.insert(key, out.clone());
        out
    }

    /// `e_i · x`.
    pub fn left_gen(&mut self, i: usize, x: &UEnvElement) -> UEnvElement {
        let f = self.field.clone();
        let mut out = UEnvElement::zero();
        for (m, &c) in &x.terms {
            let t = self.gen_mono(i, m);
            out.add_scaled(&f, &t, c);
        }
        out
    }

    /// `(Σ v_k e_k) · x`.
    pub fn left_vec(&mut self, v: &[Fe], x: &UEnvElement) -> UEnvElement {
        let f = self.field.clone();
        let mut out = UEnvElement::zero();
        for (k, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                let t = self.left_gen(k, x);
                out.add_scaled(&f, &t, c);
            }
        }
        out
    }

    /// `e^m · x`.
    pub fn mono_mul(&mut self, m: &[u32], x: &UEnvElement) -> UEnvElement {
        let mut y = x.clone();
        for i in (0..m.len()).rev() {
            for _ in 0..m[i] {
                y = self.left_gen(i, &y);
            }
        }
        y
    }

    pub fn mul(&mut self, x: &UEnvElement, y: &UEnvElement) -> UEnvElement {
        let f = self.field.clone();
        let mut out = UEnvElement::zero();
        for (m, &c) in &x.terms {
            let t = self.mono_mul(m, y);
            out.add_scaled(&f, &t, c);
        }
        out
    }

    /// PBW normal form of `c · e_{w_0} e_{w_1} ⋯`.
    pub fn normalize_word(&mut self, word: &[usize], c: Fe) -> Result<UEnvElement> {
        let n = self.lie.dim();
        if word.len() > MAX_WORD_LEN {
            return Err(Error::Invalid(format!("word of length {} exceeds {MAX_WORD_LEN} letters", word.len())));
        }
        if let Some(&bad) = word.iter().find(|&&i| i >= n) {
            return Err(Error::Invalid(format!("generator index {bad} out of range")));
        }
        let mut y = UEnvElement::monomial(vec![0; n], c);
        for &i in word.iter().rev() {
            y = self.left_gen(i, &y);
        }
        Ok(y)
    }

    /// `S(e^m) = (-1)^{|m|} e_n^{m_n} ⋯ e_1^{m_1}` in `U(L)`.
    pub fn antipode_mono(&mut self, m: &[u32]) -> UEnvElement {
        let n = self.lie.dim();
        let deg: u32 = m.iter().sum();
        let sign = if deg % 2 == 0 { Fe::ONE } else { self.field.neg(Fe::ONE) };
        let mut y = UEnvElement::monomial(vec![0; n], sign);
        // reversed word e_n^{m_n} ⋯ e_1^{m_1}, applied right to left
        for (i, &a) in m.iter().enumerate() {
            for _ in 0..a {
                y = self.left_gen(i, &y);
            }
        }
        y
    }

    pub fn commutator(&mut self, x: &UEnvElement, y: &UEnvElement) -> UEnvElement {
        let a = self.mul(x, y);
        let b = self.mul(y, x);
        let mut out = a;
        out.add_scaled(&self.field.clone(), &b, self.field.neg(Fe::ONE));
        out
    }

    /// `e_i^p − e_i^[p]`.
    pub fn central_z(&mut self, i: usize) -> UEnvElement {
        let n = self.lie.dim();
        let p = self.lie.p();
        let mut m = vec![0; n];
        m[i] = p;
        let mut z = UEnvElement::monomial(m, Fe::ONE);
        let f = self.field.clone();
        for (k, &c) in self.lie.pmap(i).to_vec().iter().enumerate() {
            let mut e = vec![0; n];
            e[k] = 1;
            z.add_term(&f, &e, f.neg(c));
        }
        z
    }
}

/// Strategy for the independent word-rewriting normalizer.
#[derive(Copy, Clone, Debug)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Normal form by rewriting `e_b e_a → e_a e_b + [e_b, e_a]` (for `a < b`)
/// on words until every word is sorted; independent of [`Pbw`].
pub fn normalize_by_rewriting(
    lie: &RestrictedLie,
    field: &Field,
    word: &[usize],
    c: Fe,
    strategy: RewriteStrategy,
) -> UEnvElement {
    let n = lie.dim();
    let mut rng = match strategy {
        RewriteStrategy::Random(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    let mut pending: BTreeMap<Vec<usize>, Fe> = BTreeMap::new();
    let mut done = UEnvElement::zero();
    if !c.is_zero() {
        pending.insert(word.to_vec(), c);
    }
    let add = |map: &mut BTreeMap<Vec<usize>, Fe>, w: Vec<usize>, v: Fe| {
        if v.is_zero() {
            return;
        }
        let e = map.entry(w.clone()).or_insert(Fe::ZERO);
        *e = field.add(*e, v);
        if e.is_zero() {
            map.remove(&w);
        }
    };
    while !pending.is_empty() {
        let key = match rng.as_mut() {
            Some(r) => {
                let k = r.gen_range(0..pending.len());
                pending.keys().nth(k).unwrap().clone()
            }
            None => pending.keys().next().unwrap().clone(),
        };
        let coef = pending.remove(&key).unwrap();
        let descents: Vec<usize> = (0..key.len().saturating_sub(1)).filter(|&k| key[k] > key[k + 1]).collect();
        if descents.is_empty() {
            let mut m = vec![0u32; n];
            for &i in &key {
                m[i] += 1;
            }
            done.add_term(field, &m, coef);
            continue;
        }
        let pos = match strategy {
            RewriteStrategy::Leftmost => descents[0],
            RewriteStrategy::Rightmost => *descents.last().unwrap(),
            RewriteStrategy::Random(_) => descents[rng.as_mut().unwrap().gen_range(0..descents.len())],
        };
        let (b, a) = (key[pos], key[pos + 1]);
        let mut swapped = key.clone();
        swapped.swap(pos, pos + 1);
        add(&mut pending, swapped, coef);
        for (k, &bc) in lie.bracket(b, a).iter().enumerate() {
            if !bc.is_zero() {
                let mut w = key[..pos].to_vec();
                w.push(k);
                w.extend_from_slice(&key[pos + 2..]);
                add(&mut pending, w, field.mul(coef, bc));
            }
        }
    }
    done
}

/// A point of the spectrum of the `p`-center: `λ_i` is the value of
/// `z_i = e_i^p − e_i^[p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPoint {
    pub field: Field,
    pub lambda: Vec<Fe>,
}

impl FiberPoint {
    pub fn new(field: &Field, lambda: Vec<Fe>) -> FiberPoint {
        FiberPoint { field: field.clone(), lambda }
    }

    pub fn zero(field: &Field, n: usize) -> FiberPoint {
        FiberPoint::new(field, vec![Fe::ZERO; n])
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(|x| x.is_zero())
    }

    pub fn coeffs(&self) -> Vec<Vec<u32>> {
        self.lambda.iter().map(|&x| self.field.coeffs(x)).collect()
    }
}

/// `λ_i = χ_i^p`: the classical `χ` parametrization translated to values of `z_i`.
pub fn chi_convention(field: &Field, chi: &[Fe]) -> FiberPoint {
    FiberPoint::new(field, chi.iter().map(|&c| field.frobenius(c)).collect())
}

pub(crate) fn binom_mod(p: u32, a: u32, b: u32) -> Fe {
    if b > a {
        return Fe::ZERO;
    }
    // Lucas: a, b < p in all uses, so direct product suffices
    let mut num: u64 = 1;
    let mut den: u64 = 1;
    let pp = p as u64;
    for i in 0..b as u64 {
        num = num * ((a as u64 - i) % pp) % pp;
        den = den * ((i + 1) % pp) % pp;
    }
    if den == 0 {
        return binom_lucas(p, a, b);
    }
    let inv = mod_pow(den, pp - 2, pp);
    Fe((num * inv % pp) as u32)
}

fn binom_lucas(p: u32, mut a: u32, mut b: u32) -> Fe {
    let mut r = Fe::ONE;
    let f = Field::prime(p).unwrap();
    while a > 0 || b > 0 {
        let (x, y) = (a % p, b % p);
        r = f.mul(r, binom_mod(p, x, y));
        a /= p;
        b /= p;
    }
    r
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Sub-monomials `β ≤ α` with coefficient `Π binom(α_i, β_i)`.
pub(crate) fn binomial_split(p: u32, alpha: &[u32]) -> Vec<(Mono, Mono, Fe)> {
    let f = Field::prime(p).unwrap();
    let mut out = vec![(Vec::new(), Vec::new(), Fe::ONE)];
    for &a in alpha {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for (b, r, c) in &out {
            for bi in 0..=a {
                let k = binom_mod(p, a, bi);
                if k.is_zero() {
                    continue;
                }
                let mut b2 = b.clone();
                b2.push(bi);
                let mut r2 = r.clone();
                r2.push(a - bi);
                next.push((b2, r2, f.mul(*c, k)));
            }
        }
        out = next;
    }
    out
}

/// Reduction `U(L) → U_λ` on PBW monomials, memoized.
pub struct Reducer {
    pub pbw: Pbw,
    lambda: Vec<Fe>,
    p: u32,
    dim: usize,
    memo: HashMap<Mono, Vec<Fe>>,
}

impl Reducer {
    pub fn new(lie: &RestrictedLie, point: &FiberPoint) -> Reducer {
        let n = lie.dim();
        let p = lie.p();
        Reducer {
            pbw: Pbw::new(lie, &point.field),
            lambda: point.lambda.clone(),
            p,
            dim: (p as usize).pow(n as u32),
            memo: HashMap::new(),
        }
    }

    pub fn index(&self, m: &[u32]) -> usize {
        m.iter().fold(0usize, |acc, &a| acc * self.p as usize + a as usize)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn reduce_mono(&mut self, m: &Mono) -> Vec<Fe> {
        if let Some(i) = m.iter().position(|&a| a >= self.p) {
            if let Some(v) = self.memo.get(m) {
                return v.clone();
            }
            let f = self.pbw.field.clone();
            let n = m.len();
            let p = self.p;
            let mut lowered = m.clone();
            lowered[i] -= p;
            // z_i is central: e^m = λ_i e^{m - p ε_i} + e^{m<i} e_i^{m_i - p} e_i^[p] e^{m>i}
            let mut out = vec![Fe::ZERO; self.dim];
            if !self.lambda[i].is_zero() {
                let v = self.reduce_mono(&lowered);
                f.axpy(&mut out, self.lambda[i], &v);
            }
            let mut tail = vec![0u32; n];
            tail[i + 1..].copy_from_slice(&m[i + 1..]);
            let mut y = UEnvElement::monomial(tail, Fe::ONE);
            let pm = self.pbw.lie.pmap(i).to_vec();
            y = self.pbw.left_vec(&pm, &y);
            let mut head = vec![0u32; n];
            head[..i].copy_from_slice(&m[..i]);
            head[i] = m[i] - p;
            y = self.pbw.mono_mul(&head, &y);
            let v = self.reduce(&y);
            f.axpy(&mut out, Fe::ONE, &v);
            self.memo.insert(m.clone(), out.clone());
            out
        } else {
            let mut v = vec![Fe::ZERO; self.dim];
            v[self.index(m)] = Fe::ONE;
            v
        }
    }

    pub fn reduce(&mut self, x: &UEnvElement) -> Vec<Fe> {
        let f = self.pbw.field.clone();
        let mut out = vec![Fe::ZERO; self.dim];
        for (m, &c) in &x.terms {
            if m.iter().all(|&a| a < self.p) {
                let i = self.index(m);
                out[i] = f.add(out[i], c);
            } else {
                let v = self.reduce_mono(m);
                f.axpy(&mut out, c, &v);
            }
        }
        out
    }
}

/// The reduced enveloping algebra `U_λ` on its PBW basis.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub lie: RestrictedLie,
    pub point: FiberPoint,
    pub alg: SCAlgebra,
    pub monos: Vec<Mono>,
}

pub fn all_monos(n: usize, p: u32) -> Vec<Mono> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut t| {
            let mut m = vec![0u32; n];
            for i in (0..n).rev() {
                m[i] = (t % p as usize) as u32;
                t /= p as usize;
            }
            m
        })
        .collect()
}

/// Build `U_λ`; the dimension `p^n` is checked against `cap` first.
pub fn fiber_algebra_capped(lie: &RestrictedLie, point: &FiberPoint, cap: usize) -> Result<Fiber> {
    lie.require_restricted()?;
    let n = lie.dim();
    let p = lie.p();
    if point.lambda.len() != n {
        return Err(Error::ShapeMismatch(format!("point has {} coordinates, expected {n}", point.lambda.len())));
    }
    if point.field.p() != p {
        return Err(Error::NotAnExtension { from: lie.field().to_string(), to: point.field.to_string() });
    }
    let dim = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if dim > cap as u64 {
        return Err(Error::DimCapExceeded { dim: dim.min(usize::MAX as u64) as usize, cap });
    }
    let dim = dim as usize;
    let f = point.field.clone();
    let mut red = Reducer::new(lie, point);
    let monos = all_monos(n, p);
    // left multiplication by each generator, sparse by column
    let gens: Vec<Vec<Vec<(usize, Fe)>>> = (0..n)
        .map(|k| {
            monos
                .iter()
                .map(|m| {
                    let prod = red.pbw.gen_mono(k, m);
                    let v = red.reduce(&prod);
                    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i, c)).collect()
                })
                .collect()
        })
        .collect();
    let mut mul = vec![Fe::ZERO; dim * dim * dim];
    for b in 0..dim {
        mul[b * dim + b] = Fe::ONE; // row α = 0
    }
    let strides: Vec<usize> = (0..n).map(|i| (p as usize).pow((n - 1 - i) as u32)).collect();
    for a in 1..dim {
        let m = &monos[a];
        let k = m.iter().position(|&x| x > 0).unwrap();
        let prev = a - strides[k];
        let (done, rest) = mul.split_at_mut(a * dim * dim);
        let src = &done[prev * dim * dim..(prev + 1) * dim * dim];
        let dst = &mut rest[..dim * dim];
        for b in 0..dim {
            let v = &src[b * dim..(b + 1) * dim];
            let out = &mut dst[b * dim..(b + 1) * dim];
            for (g, &c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &(i, gc) in &gens[k][g] {
                    out[i] = f.add(out[i], f.mul(c, gc));
                }
            }
        }
    }
    let mut unit = vec![Fe::ZERO; dim];
    unit[0] = Fe::ONE;
    let labels = monos.iter().map(|m| mono_label(m, lie.labels())).collect();
    let alg = SCAlgebra::with_cap(f, dim, mul, unit, Some(labels), cap)?;
    Ok(Fiber { lie: lie.clone(), point: point.clone(), alg, monos })
}

pub fn fiber_algebra(lie: &RestrictedLie, point: &FiberPoint) -> Result<Fiber> {
    fiber_algebra_capped(lie, point, DEFAULT_DIM_CAP)
}

impl Fiber {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn p(&self) -> u32 {
        self.lie.p()
    }

    pub fn index(&self, m: &[u32]) -> usize {
        let p = self.p() as usize;
        m.iter().fold(0usize, |acc, &a| acc * p + a as usize)
    }

    /// Basis vector of the generator `e_i`.
    pub fn generator(&self, i: usize) -> Vec<Fe> {
        let mut m = vec![0; self.lie.dim()];
        m[i] = 1;
        self.alg.basis_vec(self.index(&m))
    }

    /// `ρ(e^α) = Σ binom(α, β) e^β ⊗ e^{α−β}` onto `u(L)`.
    pub fn coaction_terms(&self) -> Vec<Vec<(usize, usize, Fe)>> {
        let p = self.p();
        self.monos
            .iter()
            .map(|m| binomial_split(p, m).into_iter().map(|(b, r, c)| (self.index(&b), self.index(&r), c)).collect())
            .collect()
    }

    /// `π_λ(S(e^α))` for each basis monomial (the convolution inverse of the PBW splitting).
    pub fn antipode_image(&self) -> Matrix {
        let mut red = Reducer::new(&self.lie, &self.point);
        let cols: Vec<Vec<Fe>> = self
            .monos
            .iter()
            .map(|m| {
                let s = red.pbw.antipode_mono(m);
                red.reduce(&s)
            })
            .collect();
        Matrix::from_cols(&cols, self.dim())
    }

    /// Reduce an element of `U(L)` (with coefficients in the fiber's field) into `U_λ`.
    pub fn reducer(&self) -> Reducer {
        Reducer::new(&self.lie, &self.point)
    }
}

/// `u(L)` over `field` with `Δ(e_i) = e_i⊗1 + 1⊗e_i`, `ε(e_i) = 0`, `S(e_i) = −e_i`.
pub fn u_restricted_over(lie: &RestrictedLie, field: &Field) -> Result<HopfAlgebra> {
    let zero = FiberPoint::zero(field, lie.dim());
    let fib = fiber_algebra(lie, &zero)?;
    Ok(hopf_from_zero_fiber(&fib))
}

pub fn u_restricted(lie: &RestrictedLie) -> Result<HopfAlgebra> {
    u_restricted_over(lie, lie.field())
}

fn hopf_from_zero_fiber(fib: &Fiber) -> HopfAlgebra {
    let n = fib.dim();
    let mut counit = vec![Fe::ZERO; n];
    counit[0] = Fe::ONE;
    let coalg = Coalgebra { field: fib.field().clone(), comul: fib.coaction_terms(), counit };
    let antipode = fib.antipode_image();
    HopfAlgebra::new(fib.alg.clone(), coalg, antipode).expect("shapes agree")
}

/// The fiber as a right `u(L)`-comodule algebra.
pub fn fiber_coaction(fib: &Fiber) -> Result<ComoduleAlgebra> {
    let h = u_restricted_over(&fib.lie, fib.field())?;
    ComoduleAlgebra::new(fib.alg.clone(), h, fib.coaction_terms())
}

/// Same as [`fiber_coaction`] with `u(L)` supplied (it depends only on the field).
pub fn fiber_coaction_with(fib: &Fiber, u: &HopfAlgebra) -> Result<ComoduleAlgebra> {
    ComoduleAlgebra::new(fib.alg.clone(), u.clone(), fib.coaction_terms())
}

/// `γ(e^α) = e^α` with `γ⁻¹ = π_λ ∘ S`, both identities verified.
pub fn pbw_splitting(fib: &Fiber, ca: ComoduleAlgebra) -> Result<Splitting> {
    let n = fib.dim();
    Splitting::with_inverse(ca, Matrix::identity(n), fib.antipode_image())
}

/// How [`Prop30`] evaluates `σ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum SigmaMode {
    /// Products taken in `U(L)`, reduced afterwards, non-scalar parts rejected.
    #[default]
    Lifted,
    /// Factors reduced first and only the coefficient of `1` computed.
    Projected,
}

/// `σ(x⊗y) = γ(x₁)γ(y₁)S(γ(x₂y₂))` computed in `U(L)`, then reduced into
/// `U_λ` and required to be a scalar; `x`, `y` are PBW basis indices.
pub struct Prop30 {
    fiber: Fiber,
    u0: SCAlgebra,
    red: Reducer,
    antipodes: HashMap<usize, UEnvElement>,
    sigma: HashMap<(usize, usize), Fe>,
    projected: HashMap<(usize, usize), Fe>,
    mode: SigmaMode,
    // row i, column w: coefficient of 1 in e^i · γ⁻¹(e^w)
    unit_form: Option<Matrix>,
}

impl Prop30 {
    pub fn new(fiber: &Fiber) -> Result<Prop30> {
        let zero = FiberPoint::zero(fiber.field(), fiber.lie.dim());
        let u0 = fiber_algebra(&fiber.lie, &zero)?.alg;
        Ok(Prop30 {
            fiber: fiber.clone(),
            u0,
            red: fiber.reducer(),
            antipodes: HashMap::new(),
            sigma: HashMap::new(),
            projected: HashMap::new(),
            mode: SigmaMode::Lifted,
            unit_form: None,
        })
    }

    pub fn with_mode(mut self, mode: SigmaMode) -> Prop30 {
        self.mode = mode;
        self
    }

    fn unit_form(&mut self) -> &Matrix {
        if self.unit_form.is_none() {
            let n = self.fiber.dim();
            let f = self.fiber.field().clone();
            let ginv = self.fiber.antipode_image();
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let c0 = self.fiber.alg.product(i, j)[0];
                    if c0.is_zero() {
                        continue;
                    }
                    for w in 0..n {
                        let g = ginv.get(j, w);
                        if !g.is_zero() {
                            m.set(i, w, f.add(m.get(i, w), f.mul(c0, g)));
                        }
                    }
                }
            }
            self.unit_form = Some(m);
        }
        self.unit_form.as_ref().unwrap()
    }

    /// Coefficient of `1` in `σ(x⊗y)`, computed inside `U_λ`.
    pub fn sigma_projected(&mut self, x: usize, y: usize) -> Fe {
        let f = self.fiber.field().clone();
        let p = self.fiber.p();
        self.unit_form();
        let form = self.unit_form.as_ref().unwrap();
        let mx = self.fiber.monos[x].clone();
        let my = self.fiber.monos[y].clone();
        let mut total = Fe::ZERO;
        for (b1, b2, c1) in binomial_split(p, &mx) {
            for (d1, d2, c2) in binomial_split(p, &my) {
                let a = self.fiber.alg.product(self.fiber.index(&b1), self.fiber.index(&d1));
                let v = self.u0.product(self.fiber.index(&b2), self.fiber.index(&d2));
                let mut t = Fe::ZERO;
                for (i, &ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (w, &vw) in v.iter().enumerate() {
                        if !vw.is_zero() {
                            t = f.add(t, f.mul(ai, f.mul(form.get(i, w), vw)));
                        }
                    }
                }
                total = f.add(total, f.mul(t, f.mul(c1, c2)));
            }
        }
        total
    }

    fn sigma_by_mode(&mut self, x: usize, y: usize) -> Result<Fe> {
        match self.mode {
            SigmaMode::Lifted => self.sigma(x, y),
            SigmaMode::Projected => {
                if let Some(&s) = self.projected.get(&(x, y)) {
                    return Ok(s);
                }
                let s = self.sigma_projected(x, y);
                self.projected.insert((x, y), s);
                Ok(s)
            }
        }
    }

    fn antipode_lift(&mut self, w: usize) -> UEnvElement {
        if let Some(s) = self.antipodes.get(&w) {
            return s.clone();
        }
        let m = self.fiber.monos[w].clone();
        let s = self.red.pbw.antipode_mono(&m);
        self.antipodes.insert(w, s.clone());
        s
    }

    pub fn sigma(&mut self, x: usize, y: usize) -> Result<Fe> {
        if let Some(&s) = self.sigma.get(&(x, y)) {
            return Ok(s);
        }
        let f = self.fiber.field().clone();
        let p = self.fiber.p();
        let mx = self.fiber.monos[x].clone();
        let my = self.fiber.monos[y].clone();
        let mut total = vec![Fe::ZERO; self.fiber.dim()];
        for (b1, b2, c1) in binomial_split(p, &mx) {
            for (d1, d2, c2) in binomial_split(p, &my) {
                let c = f.mul(c1, c2);
                // x₂y₂ in u(L), lifted through γ and the U(L) antipode
                let w = self.u0.product(self.fiber.index(&b2), self.fiber.index(&d2)).to_vec();
                let mut s = UEnvElement::zero();
                for (wi, &wc) in w.iter().enumerate() {
                    if !wc.is_zero() {
                        let a = self.antipode_lift(wi);
                        s.add_scaled(&f, &a, wc);
                    }
                }
                let left = self.red.pbw.mono_mul(&b1, &UEnvElement::monomial(d1.clone(), Fe::ONE));
                let prod = self.red.pbw.mul(&left, &s);
                let v = self.red.reduce(&prod);
                f.axpy(&mut total, c, &v);
            }
        }
        let s = total[0];
        if total[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotScalar(format!(
                "σ({} ⊗ {}) has non-scalar part",
                self.fiber.alg.label(x),
                self.fiber.alg.label(y)
            )));
        }
        self.sigma.insert((x, y), s);
        Ok(s)
    }

    /// `x ∘ y = σ(x₁⊗y₁) x₂y₂` with `x₂y₂` in `u(L)`, as a vector on the PBW basis of `U_λ`.
    pub fn multiply(&mut self, x: usize, y: usize) -> Result<Vec<Fe>> {
        let f = self.fiber.field().clone();
        let p = self.fiber.p();
        let mx = self.fiber.monos[x].clone();
        let my = self.fiber.monos[y].clone();
        let mut out = vec![Fe::ZERO; self.fiber.dim()];
        for (b1, b2, c1) in binomial_split(p, &mx) {
            for (d1, d2, c2) in binomial_split(p, &my) {
                let s = self.sigma_by_mode(self.fiber.index(&b1), self.fiber.index(&d1))?;
                if s.is_zero() {
                    continue;
                }
                let w = self.u0.product(self.fiber.index(&b2), self.fiber.index(&d2));
                f.axpy(&mut out, f.mul(s, f.mul(c1, c2)), w);
            }
        }
        Ok(out)
    }

    pub fn fiber(&self) -> &Fiber {
        &self.fiber
    }
}

pub fn prop30_sigma(fib: &Fiber, x: usize, y: usize) -> Result<Fe> {
    Prop30::new(fib)?.sigma(x, y)
}

pub fn prop30_multiply(fib: &Fiber, x: usize, y: usize) -> Result<Vec<Fe>> {
    Prop30::new(fib)?.multiply(x, y)
}

/// A one-dimensional representation `α̃` of `U_λ`, given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimRep {
    pub field: Field,
    pub values: Vec<Fe>,
}

/// Search for a one-dimensional representation: `α̃` kills `[L, L]` and
/// satisfies `α̃(e_i)^p − α̃(e_i^[p]) = λ_i`. The linear part is solved
/// exactly; the remaining coordinates are searched over the point's field
/// and then its quadratic extension.
pub fn find_one_dim_rep(lie: &RestrictedLie, point: &FiberPoint) -> Result<OneDimRep> {
    let n = lie.dim();
    let base = &point.field;
    let prime = lie.field();
    // functionals vanishing on [L, L]
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(lie.bracket(i, j).to_vec());
        }
    }
    let space = if rows.is_empty() {
        crate::linalg::Subspace::full(n)
    } else {
        Matrix::from_rows(rows, n).kernel(prime)
    };
    let d = space.dim();
    let mut fields = vec![base.clone()];
    if let Ok(ext) = Field::new(base.p(), base.degree() * 2) {
        fields.push(ext);
    }
    for fld in fields {
        let emb = base.embedding_into(&fld)?;
        let lambda: Vec<Fe> = point.lambda.iter().map(|&x| emb.map(x)).collect();
        let q = fld.order() as u64;
        let total = q.checked_pow(d as u32).unwrap_or(u64::MAX);
        if total > 1 << 22 {
            return Err(Error::Invalid(format!("one-dimensional representation search over {total} candidates")));
        }
        for t in 0..total {
            let mut coords = Vec::with_capacity(d);
            let mut r = t;
            for _ in 0..d {
                coords.push(Fe((r % q) as u32));
                r /= q;
            }
            let mut values = vec![Fe::ZERO; n];
            for (c, b) in coords.iter().zip(space.basis()) {
                fld.axpy(&mut values, *c, b);
            }
            let ok = (0..n).all(|i| {
                let pv = fld.dot(lie.pmap(i), &values);
                fld.sub(fld.pow(values[i], lie.p() as u64), pv) == lambda[i]
            });
            if ok {
                return Ok(OneDimRep { field: fld, values });
            }
        }
    }
    Err(Error::NoOneDimRep)
}

/// The winding map `x ↦ α̃(x₁) x₂` from `U_λ` to `u(L)` (over the field of
/// `α̃`), verified to be an algebra isomorphism.
pub fn winding_iso(fib: &Fiber, rep: &OneDimRep) -> Result<(Matrix, SCAlgebra, SCAlgebra)> {
    let fld = &rep.field;
    let src = fib.alg.extend_scalars(fld)?;
    let u = u_restricted_over(&fib.lie, fld)?.alg;
    let n = fib.dim();
    let cols: Vec<Vec<Fe>> = fib
        .monos
        .iter()
        .map(|m| {
            let mut v = vec![Fe::ZERO; n];
            for (b, r, c) in binomial_split(fib.p(), m) {
                let mut a = c;
                for (i, &e) in b.iter().enumerate() {
                    a = fld.mul(a, fld.pow(rep.values[i], e as u64));
                }
                let idx = fib.index(&r);
                v[idx] = fld.add(v[idx], a);
            }
            v
        })
        .collect();
    let w = Matrix::from_cols(&cols, n);
    if !src.is_algebra_map(&w, &u) {
        return Err(Error::NotAlgebraMap("winding map is not multiplicative".into()));
    }
    if w.rank(fld) != n {
        return Err(Error::NotAlgebraMap("winding map is not bijective".into()));
    }
    Ok((w, src, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(p: u32) -> RestrictedLie {
        // e, h, f with [e,f] = h, [h,e] = -2e, [h,f] = 2f
        let json = format!(
            r#"{{"p": {p}, "basis": ["e","h","f"], "bracket": {{"e,f": {{"h": 1}}, "h,e": {{"e": -2}}, "h,f": {{"f": 2}}}}, "pmap": {{"h": {{"h": 1}}}}}}"#
        );
        serde_json::from_str::<LieJson>(&json).unwrap().build().unwrap()
    }

    #[test]
    fn sl2_is_restricted() {
        assert!(sl2(3).verify().is_empty());
        assert!(sl2(5).verify().is_empty());
        let mut j = LieJson::from_lie(&sl2(3));
        j.pmap.clear();
        let v = j.build().unwrap().verify();
        assert!(v.iter().any(|x| x.axiom == "restrictedness"));
    }

    #[test]
    fn normalize_examples() {
        let l = sl2(3);
        let f = l.field().clone();
        let mut pbw = Pbw::new(&l, &f);
        // f·e = ef − h
        let fe = pbw.normalize_word(&[2, 0], Fe::ONE).unwrap();
        let mut expect = UEnvElement::monomial(vec![1, 0, 1], Fe::ONE);
        expect.add_term(&f, &vec![0, 1, 0], f.neg(Fe::ONE));
        assert_eq!(fe, expect);
        // h·e = eh − 2e
        let he = pbw.normalize_word(&[1, 0], Fe::ONE).unwrap();
        let mut expect = UEnvElement::monomial(vec![1, 1, 0], Fe::ONE);
        expect.add_term(&f, &vec![1, 0, 0], f.from_i64(-2));
        assert_eq!(he, expect);
        assert_eq!(pbw.normalize_word(&[0, 0], Fe::ONE).unwrap(), UEnvElement::monomial(vec![2, 0, 0], Fe::ONE));
        assert!(pbw.normalize_word(&[0; 33], Fe::ONE).is_err());
    }

    #[test]
    fn rewriting_agrees_with_engine() {
        let l = sl2(3);
        let f = l.field().clone();
        let mut pbw = Pbw::new(&l, &f);
        let word = [2, 2, 1, 0, 0, 1];
        let a = pbw.normalize_word(&word, Fe::ONE).unwrap();
        for s in [RewriteStrategy::Leftmost, RewriteStrategy::Rightmost, RewriteStrategy::Random(7)] {
            assert_eq!(normalize_by_rewriting(&l, &f, &word, Fe::ONE, s), a);
        }
    }

    #[test]
    fn z_is_central() {
        for p in [3, 5] {
            let l = sl2(p);
            let mut pbw = Pbw::new(&l, l.field());
            for i in 0..3 {
                let z = pbw.central_z(i);
                for j in 0..3 {
                    let mut e = vec![0; 3];
                    e[j] = 1;
                    let g = UEnvElement::monomial(e, Fe::ONE);
                    assert!(pbw.commutator(&z, &g).is_zero(), "p={p} z_{i} vs e_{j}");
                }
            }
        }
    }

    #[test]
    fn fiber_relations() {
        let l = sl2(3);
        let f = l.field().clone();
        let point = FiberPoint::new(&f, vec![Fe(1), Fe(0), Fe(2)]);
        let fib = fiber_algebra(&l, &point).unwrap();
        assert_eq!(fib.dim(), 27);
        assert!(fib.alg.verify().is_empty());
        let e = fib.generator(0);
        let e3 = fib.alg.pow_vec(&e, 3);
        assert_eq!(e3, fib.alg.scale_vec(fib.alg.unit(), Fe(1)));
        let h = fib.generator(1);
        let z = fib.alg.sub_vec(&fib.alg.pow_vec(&h, 3), &h);
        assert_eq!(z, fib.alg.zero_vec());
        let f3 = fib.alg.pow_vec(&fib.generator(2), 3);
        assert_eq!(f3, fib.alg.scale_vec(fib.alg.unit(), Fe(2)));
    }

    #[test]
    fn u_sl2_is_hopf() {
        let u = u_restricted(&sl2(3)).unwrap();
        assert_eq!(u.dim(), 27);
        assert!(u.verify().is_empty());
        assert!(u.is_cocommutative());
        // Δ(e²) = e²⊗1 + 2 e⊗e + 1⊗e²
        let e2 = 2 * 9;
        let e1 = 9;
        let mut terms = u.coalg.comul[e2].clone();
        terms.sort();
        assert_eq!(terms, vec![(0, e2, Fe(1)), (e1, e1, Fe(2)), (e2, 0, Fe(1))]);
    }

    #[test]
    fn chi_shift() {
        let f9 = Field::new(3, 2).unwrap();
        let a = f9.gen();
        let pt = chi_convention(&f9, &[Fe(0), Fe(0), a]);
        assert_eq!(pt.lambda[2], f9.neg(a));
    }

    #[test]
    fn prop30_small() {
        let l = sl2(3);
        let f = l.field().clone();
        let fib = fiber_algebra(&l, &FiberPoint::new(&f, vec![Fe(1), Fe(0), Fe(0)])).unwrap();
        let mut engine = Prop30::new(&fib).unwrap();
        assert_eq!(engine.sigma(0, 0).unwrap(), Fe::ONE);
        for x in 0..27 {
            let expect = if x == 0 { Fe::ONE } else { Fe::ZERO };
            assert_eq!(engine.sigma(x, 0).unwrap(), expect);
        }
        for (x, y) in [(9, 9), (1, 9), (3, 13), (26, 26)] {
            assert_eq!(engine.multiply(x, y).unwrap(), fib.alg.product(x, y).to_vec());
        }
        let mut fast = Prop30::new(&fib).unwrap().with_mode(SigmaMode::Projected);
        for x in 0..27 {
            for y in [0, 4, 13, 26] {
                assert_eq!(fast.sigma_projected(x, y), engine.sigma(x, y).unwrap());
            }
        }
        assert_eq!(fast.multiply(26, 26).unwrap(), fib.alg.product(26, 26).to_vec());
    }

    #[test]
    fn winding_for_borel_and_none_for_sl2() {
        let borel: RestrictedLie = serde_json::from_str(
            r#"{"p": 3, "basis": ["h","e"], "bracket": {"h,e": {"e": 1}}, "pmap": {"h": {"h": 1}}}"#,
        )
        .unwrap();
        let f9 = Field::new(3, 2).unwrap();
        let a = f9.gen();
        let lam_h = f9.sub(f9.pow(a, 3), a);
        let point = FiberPoint::new(&f9, vec![lam_h, Fe::ZERO]);
        let fib = fiber_algebra(&borel, &point).unwrap();
        let rep = find_one_dim_rep(&borel, &point).unwrap();
        assert!(winding_iso(&fib, &rep).is_ok());
        let l = sl2(3);
        let reg = FiberPoint::new(l.field(), vec![Fe(0), Fe(1), Fe(0)]);
        assert_eq!(find_one_dim_rep(&l, &reg), Err(Error::NoOneDimRep));
    }
}
