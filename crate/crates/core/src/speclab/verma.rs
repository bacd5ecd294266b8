use crate::error::{Error, Result};
use crate::fdalg::SCAlgebra;
use crate::field::{Fe, Field};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{splitting_degree, Poly};
use crate::reslie::FiberPoint;

use super::{generated_algebra, submodule_generated};

/// A finite-dimensional `sl₂`-module given by the matrices of `e`, `h`, `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlModule {
    pub field: Field,
    pub e: Matrix,
    pub h: Matrix,
    pub f: Matrix,
}

impl SlModule {
    pub fn dim(&self) -> usize {
        self.e.rows
    }

    fn gens(&self) -> Vec<Matrix> {
        vec![self.e.clone(), self.h.clone(), self.f.clone()]
    }

    /// Bracket relations and `e^p = λ_e`, `f^p = λ_f`, `h^p − h = λ_h`.
    pub fn check_relations(&self, point: &FiberPoint) -> Result<()> {
        let k = &self.field;
        let p = k.p() as u64;
        let n = self.dim();
        let id = Matrix::identity(n);
        let comm = |a: &Matrix, b: &Matrix| a.mul(k, b).sub(k, &b.mul(k, a));
        let emb = point.field.embedding_into(k)?;
        let lam: Vec<Fe> = point.lambda.iter().map(|&x| emb.map(x)).collect();
        let checks = [
            ("[e,f] = h", comm(&self.e, &self.f) == self.h),
            ("[h,e] = -2e", comm(&self.h, &self.e) == self.e.scaled(k, k.from_i64(-2))),
            ("[h,f] = 2f", comm(&self.h, &self.f) == self.f.scaled(k, k.from_i64(2))),
            ("e^p = λ_e", self.e.pow(k, p) == id.scaled(k, lam[0])),
            ("f^p = λ_f", self.f.pow(k, p) == id.scaled(k, lam[2])),
            ("h^p - h = λ_h", self.h.pow(k, p).sub(k, &self.h) == id.scaled(k, lam[1])),
        ];
        match checks.iter().find(|c| !c.1) {
            Some((name, _)) => Err(Error::RelationCheckFailed(name.to_string())),
            None => Ok(()),
        }
    }

    /// Dimension of the algebra generated by the action.
    pub fn generated_dim(&self) -> usize {
        generated_algebra(&self.field, &self.gens()).len()
    }

    /// Absolutely simple: the action generates all of `End(M)`.
    pub fn is_simple(&self) -> bool {
        let n = self.dim();
        n > 0 && self.generated_dim() == n * n
    }

    /// `M / J M` where `J` is the radical of the generated algebra.
    pub fn head(&self) -> Result<SlModule> {
        let k = &self.field;
        let n = self.dim();
        let words = generated_algebra(k, &self.gens());
        let d = words.len();
        if d == n * n {
            // the action is all of End(M), whose radical is zero
            return Ok(self.clone());
        }
        let flat = Subspace::span(k, n * n, words.iter().map(|m| m.data.clone()));
        // structure constants are taken on the echelon basis of the span
        let basis: Vec<Matrix> =
            flat.basis().iter().map(|v| Matrix { rows: n, cols: n, data: v.clone() }).collect();
        let coords = |m: &Matrix| flat.coords(k, &m.data).expect("closed under products");
        let mut mul = Vec::with_capacity(d * d * d);
        for a in &basis {
            for b in &basis {
                mul.extend(coords(&a.mul(k, b)));
            }
        }
        let unit = coords(&Matrix::identity(n));
        let alg = SCAlgebra::new(k.clone(), d, mul, unit, None)?;
        let rad = alg.radical();
        let mut vecs = Vec::new();
        for c in rad.basis() {
            let mut m = Matrix::zeros(n, n);
            for (i, &ci) in c.iter().enumerate() {
                if !ci.is_zero() {
                    m = m.add(k, &basis[i].scaled(k, ci));
                }
            }
            for j in 0..n {
                vecs.push(m.col(j));
            }
        }
        let jm = Subspace::span(k, n, vecs);
        Ok(self.quotient(&jm))
    }

    /// Action on `M / W` for a submodule `W`, on the non-pivot coordinates.
    pub fn quotient(&self, w: &Subspace) -> SlModule {
        let k = &self.field;
        let free = w.complement_indices();
        let q = free.len();
        let act = |m: &Matrix| {
            let mut out = Matrix::zeros(q, q);
            for (c, &j) in free.iter().enumerate() {
                let v = w.reduce(k, &m.col(j));
                for (r, &i) in free.iter().enumerate() {
                    out.set(r, c, v[i]);
                }
            }
            out
        };
        SlModule { field: k.clone(), e: act(&self.e), h: act(&self.h), f: act(&self.f) }
    }

    /// `dim Hom(self, other)` as modules.
    pub fn hom_dim(&self, other: &SlModule) -> usize {
        let k = &self.field;
        let (m, n) = (self.dim(), other.dim());
        // unknown X (n × m) with X A = B X, X[r][c] at r*m + c
        let mut rows = Vec::new();
        for (a, b) in [(&self.e, &other.e), (&self.h, &other.h), (&self.f, &other.f)] {
            for r in 0..n {
                for c in 0..m {
                    let mut row = vec![Fe::ZERO; n * m];
                    for t in 0..m {
                        let v = a.get(t, c);
                        if !v.is_zero() {
                            row[r * m + t] = k.add(row[r * m + t], v);
                        }
                    }
                    for t in 0..n {
                        let v = b.get(r, t);
                        if !v.is_zero() {
                            row[t * m + c] = k.sub(row[t * m + c], v);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        if n * m == 0 {
            return 0;
        }
        Matrix::from_rows(rows, n * m).kernel(k).dim()
    }

    pub fn submodule(&self, vs: &[Vec<Fe>]) -> Subspace {
        submodule_generated(&self.field, &self.gens(), vs)
    }
}

/// Roots of `T^p − T − λ_h`, over the smallest extension of the point's field containing them.
pub fn baby_verma_weights(point: &FiberPoint) -> Result<(Field, Vec<Fe>)> {
    let k = &point.field;
    let p = k.p() as usize;
    let mut c = vec![Fe::ZERO; p + 1];
    c[p] = Fe::ONE;
    c[1] = k.neg(Fe::ONE);
    c[0] = k.neg(point.lambda[1]);
    let m = Poly::new(k.clone(), c);
    let ext = crate::poly::splitting_extension(&m)?;
    let emb = k.embedding_into(&ext)?;
    let mut roots: Vec<Fe> = m.embed(&emb).roots().into_iter().map(|r| r.0).collect();
    roots.sort();
    Ok((ext, roots))
}

/// `c_i = a_i + λ_e c_0`; returns `a` with `a_0 = 0`.
fn f_offsets(k: &Field, p: usize, mu: Fe) -> Vec<Fe> {
    let mut a = vec![Fe::ZERO; p];
    a[1] = k.neg(mu);
    for i in 1..p - 1 {
        a[i + 1] = k.add(k.sub(a[i], mu), k.from_i64(2 * i as i64));
    }
    a
}

/// `c_0 · Π_{i≥1} (a_i + λ_e c_0) − λ_f` as a polynomial in `c_0`.
fn c0_polynomial(k: &Field, lam: &[Fe], a: &[Fe]) -> Poly {
    let mut prod = Poly::x(k);
    for &ai in &a[1..] {
        prod = prod.mul(&Poly::new(k.clone(), vec![ai, lam[0]]));
    }
    prod.sub(&Poly::constant(k, lam[2]))
}

/// Parameters after the `e ↔ f`, `h ↦ −h` flip when `λ_e = 0 ≠ λ_f`.
fn oriented(k: &Field, lam: &[Fe], weight: Fe) -> (bool, Vec<Fe>, Fe) {
    if lam[0].is_zero() && !lam[2].is_zero() {
        (true, vec![lam[2], k.neg(lam[1]), lam[0]], k.neg(weight))
    } else {
        (false, lam.to_vec(), weight)
    }
}

fn c0_choices_poly(k: &Field, lam: &[Fe], weight: Fe) -> Poly {
    let (_, lam, mu) = oriented(k, lam, weight);
    c0_polynomial(k, &lam, &f_offsets(k, k.p() as usize, mu))
}

fn build(k: &Field, lam: &[Fe], weight: Fe, c0: Fe) -> SlModule {
    let p = k.p() as usize;
    let a = f_offsets(k, p, weight);
    let mut e = Matrix::zeros(p, p);
    let mut h = Matrix::zeros(p, p);
    let mut f = Matrix::zeros(p, p);
    for i in 0..p {
        let s = if i == p - 1 { lam[0] } else { Fe::ONE };
        e.set((i + 1) % p, i, s);
        h.set(i, i, k.sub(weight, k.from_i64(2 * i as i64)));
        let c = if i == 0 { c0 } else { k.add(a[i], k.mul(lam[0], c0)) };
        f.set((i + p - 1) % p, i, c);
    }
    SlModule { field: k.clone(), e, h, f }
}

/// All modules of the shape below for one weight, one per admissible `c_0`.
pub fn baby_verma_family(field: &Field, point: &FiberPoint, weight: Fe) -> Result<Vec<SlModule>> {
    let k = field;
    if k.p() <= 2 {
        return Err(Error::BadPrime(k.p()));
    }
    let emb = point.field.embedding_into(k)?;
    let lam: Vec<Fe> = point.lambda.iter().map(|&x| emb.map(x)).collect();
    let (flip, olam, mu) = oriented(k, &lam, weight);
    let poly = c0_polynomial(k, &olam, &f_offsets(k, k.p() as usize, mu));
    let c0s: Vec<Fe> = if poly.is_zero() { vec![Fe::ZERO] } else { poly.roots().into_iter().map(|r| r.0).collect() };
    if c0s.is_empty() {
        return Err(Error::Invalid(format!("baby Verma module needs an extension of {k}")));
    }
    let mut out = Vec::with_capacity(c0s.len());
    for c0 in c0s {
        let m = build(k, &olam, mu, c0);
        let m = if flip { SlModule { field: k.clone(), e: m.f, h: m.h.scaled(k, k.neg(Fe::ONE)), f: m.e } } else { m };
        m.check_relations(point)?;
        out.push(m);
    }
    Ok(out)
}

/// The `p`-dimensional module `v_0, …, v_{p−1}` with `h v_i = (μ − 2i) v_i`,
/// `e v_i = v_{i+1}` (and `e v_{p−1} = λ_e v_0`), `f v_i = c_i v_{i−1}` with
/// the `c_i` forced by `[e,f] = h` up to the choice of `c_0`, which is fixed by
/// `f^p = λ_f` (the first admissible value is taken). When `λ_e = 0 ≠ λ_f`
/// the roles of `e` and `f` are exchanged. The relations are checked before
/// returning.
pub fn baby_verma_oracle(field: &Field, point: &FiberPoint, weight: Fe) -> Result<SlModule> {
    Ok(baby_verma_family(field, point, weight)?.remove(0))
}

/// Dimensions of the pairwise non-isomorphic simple heads of all baby Verma
/// modules at the point, sorted.
pub fn baby_verma_simple_dims(point: &FiberPoint) -> Result<Vec<usize>> {
    let (mut k, mut weights) = baby_verma_weights(point)?;
    let emb = point.field.embedding_into(&k)?;
    let lam: Vec<Fe> = point.lambda.iter().map(|&x| emb.map(x)).collect();
    let mut degree = 1u32;
    for &mu in &weights {
        let poly = c0_choices_poly(&k, &lam, mu);
        if poly.degree() > 0 {
            degree = crate::poly::lcm_u32(degree, splitting_degree(&poly)?);
        }
    }
    if degree > 1 {
        let big = Field::new(k.p(), k.degree() * degree)?;
        let e2 = k.embedding_into(&big)?;
        weights = weights.iter().map(|&w| e2.map(w)).collect();
        k = big;
    }
    let mut heads: Vec<SlModule> = Vec::new();
    for &mu in &weights {
        for m in baby_verma_family(&k, point, mu)? {
            let head = m.head()?;
            if !head.is_simple() {
                return Err(Error::RelationCheckFailed("head of a baby Verma module is not simple".into()));
            }
            if !heads.iter().any(|h| h.dim() == head.dim() && h.hom_dim(&head) > 0) {
                heads.push(head);
            }
        }
    }
    let mut dims: Vec<usize> = heads.iter().map(|h| h.dim()).collect();
    dims.sort_unstable();
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(k: &Field, v: [u32; 3]) -> FiberPoint {
        FiberPoint::new(k, v.iter().map(|&x| Fe(x)).collect())
    }

    #[test]
    fn relations_hold_and_regular_is_simple() {
        let k = Field::prime(3).unwrap();
        let point = pt(&k, [0, 1, 0]);
        let (ext, weights) = baby_verma_weights(&point).unwrap();
        assert_eq!(weights.len(), 3);
        for &mu in &weights {
            let m = baby_verma_oracle(&ext, &point, mu).unwrap();
            assert!(m.is_simple());
        }
    }

    #[test]
    fn simple_dims_by_stratum() {
        let k = Field::prime(3).unwrap();
        assert_eq!(baby_verma_simple_dims(&pt(&k, [0, 0, 0])).unwrap(), vec![1, 2, 3]);
        assert_eq!(baby_verma_simple_dims(&pt(&k, [1, 0, 0])).unwrap(), vec![3, 3]);
        assert_eq!(baby_verma_simple_dims(&pt(&k, [0, 1, 0])).unwrap(), vec![3, 3, 3]);
        assert_eq!(baby_verma_simple_dims(&pt(&k, [1, 1, 2])).unwrap(), vec![3, 3, 3]);
        assert_eq!(baby_verma_simple_dims(&pt(&k, [0, 0, 1])).unwrap(), vec![3, 3]);
        assert_eq!(baby_verma_simple_dims(&pt(&k, [0, 1, 1])).unwrap(), vec![3, 3, 3]);
    }

    #[test]
    fn broken_module_is_caught() {
        let k = Field::prime(3).unwrap();
        let point = pt(&k, [0, 0, 0]);
        let mut m = baby_verma_oracle(&k, &point, Fe(0)).unwrap();
        m.f.set(0, 1, Fe(1));
        assert!(matches!(m.check_relations(&point), Err(Error::RelationCheckFailed(_))));
    }
}
