//! Finite-dimensional associative algebras given by structure constants.
//!
//! Everything here is exact and valid in positive characteristic. The
//! radical uses the iterated generalized-trace method on the left regular
//! representation (over the prime field, restricting scalars when needed).
//! Central idempotents come from the subalgebra of the center fixed by
//! `x -> x^q`, which is a product of copies of the base field with one
//! factor per block.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::poly::{lcm_u32, Poly};

pub const DEFAULT_DIM_CAP: usize = 512;
pub const DEFAULT_SPLITTING_CAP: u32 = 12;

/// A failed axiom check, naming the axiom and the basis indices involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: &str, indices: &[usize]) -> Violation {
        Violation { axiom: axiom.to_string(), indices: indices.to_vec() }
    }
}

/// Associative unital algebra with basis `b_0..b_{n-1}` and
/// `b_i b_j = sum_k mul[(i n + j) n + k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCAlgebra {
    field: Field,
    dim: usize,
    mul: Vec<Fe>,
    unit: Vec<Fe>,
    labels: Option<Vec<String>>,
}

impl SCAlgebra {
    pub fn new(field: Field, dim: usize, mul: Vec<Fe>, unit: Vec<Fe>, labels: Option<Vec<String>>) -> Result<Self> {
        SCAlgebra::with_cap(field, dim, mul, unit, labels, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(
        field: Field,
        dim: usize,
        mul: Vec<Fe>,
        unit: Vec<Fe>,
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self> {
        if dim > cap {
            return Err(Error::DimCapExceeded { dim, cap });
        }
        if mul.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!("mul has {} entries, expected {}", mul.len(), dim * dim * dim)));
        }
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has {} entries, expected {dim}", unit.len())));
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(Error::ShapeMismatch(format!("{} labels for dimension {dim}", l.len())));
            }
        }
        Ok(SCAlgebra { field, dim, mul, unit, labels })
    }

    /// Build from a product function on basis indices.
    pub fn from_fn(
        field: Field,
        dim: usize,
        unit: Vec<Fe>,
        labels: Option<Vec<String>>,
        mut product: impl FnMut(usize, usize) -> Vec<Fe>,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                debug_assert_eq!(v.len(), dim);
                mul.extend(v);
            }
        }
        SCAlgebra::new(field, dim, mul, unit, labels)
    }

    /// The one-dimensional algebra `F`.
    pub fn scalars(field: &Field) -> SCAlgebra {
        SCAlgebra { field: field.clone(), dim: 1, mul: vec![Fe::ONE], unit: vec![Fe::ONE], labels: None }
    }

    /// `ext` regarded as an algebra over its prime field, basis `1, t, .., t^(k-1)`.
    pub fn field_over_prime(ext: &Field) -> Result<SCAlgebra> {
        let prime = Field::prime(ext.p())?;
        let k = ext.degree() as usize;
        let t = ext.gen();
        let basis: Vec<Fe> = (0..k).map(|a| ext.pow(t, a as u64)).collect();
        let mut unit = vec![Fe::ZERO; k];
        unit[0] = Fe::ONE;
        SCAlgebra::from_fn(prime, k, unit, None, |i, j| {
            ext.coeffs(ext.mul(basis[i], basis[j])).into_iter().map(Fe).collect()
        })
    }

    /// The full matrix algebra `M_m(F)` on elementary matrices `E_{rc}` (index `r m + c`).
    pub fn matrix_algebra(field: &Field, m: usize) -> Result<SCAlgebra> {
        let n = m * m;
        let mut unit = vec![Fe::ZERO; n];
        for r in 0..m {
            unit[r * m + r] = Fe::ONE;
        }
        let labels = (0..n).map(|i| format!("E{}{}", i / m, i % m)).collect();
        SCAlgebra::from_fn(field.clone(), n, unit, Some(labels), |i, j| {
            let mut v = vec![Fe::ZERO; n];
            let (a, b) = (i / m, i % m);
            let (c, d) = (j / m, j % m);
            if b == c {
                v[a * m + d] = Fe::ONE;
            }
            v
        })
    }

    /// `F[T]/(f)` on the basis `1, T, .., T^(deg-1)`.
    pub fn poly_quotient(f: &Poly) -> Result<SCAlgebra> {
        if f.degree() < 1 {
            return Err(Error::Invalid("quotient by a constant".into()));
        }
        let field = f.field().clone();
        let d = f.degree() as usize;
        let mut unit = vec![Fe::ZERO; d];
        unit[0] = Fe::ONE;
        let monic = f.monic();
        SCAlgebra::from_fn(field.clone(), d, unit, None, |i, j| {
            let mut c = vec![Fe::ZERO; i + j + 1];
            c[i + j] = Fe::ONE;
            let r = Poly::new(field.clone(), c).rem(&monic);
            (0..d).map(|k| r.coeff(k)).collect()
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[Fe] {
        &self.unit
    }
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
    pub fn structure_constants(&self) -> &[Fe] {
        &self.mul
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map(|l| l[i].clone()).unwrap_or_else(|| format!("b{i}"))
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[Fe] {
        let n = self.dim;
        &self.mul[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.dim];
        v[i] = Fe::ONE;
        v
    }

    pub fn zero_vec(&self) -> Vec<Fe> {
        vec![Fe::ZERO; self.dim]
    }

    pub fn mul_vec(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.dim];
        let ynz: Vec<usize> = (0..self.dim).filter(|&j| !y[j].is_zero()).collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ynz {
                f.axpy(&mut out, f.mul(xi, y[j]), self.product(i, j));
            }
        }
        out
    }

    pub fn add_vec(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub_vec(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale_vec(&self, x: &[Fe], c: Fe) -> Vec<Fe> {
        x.iter().map(|&a| self.field.mul(a, c)).collect()
    }

    pub fn pow_vec(&self, x: &[Fe], mut e: u64) -> Vec<Fe> {
        let mut r = self.unit.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_vec(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul_vec(&b, &b);
            }
        }
        r
    }

    /// Matrix of `y -> x y` (column j is `x b_j`).
    pub fn left_matrix(&self, x: &[Fe]) -> Matrix {
        let n = self.dim;
        let f = &self.field;
        let mut m = Matrix::zeros(n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, &c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, j);
                        m.set(k, j, f.add(v, f.mul(xi, c)));
                    }
                }
            }
        }
        m
    }

    /// Matrix of `y -> y x`.
    pub fn right_matrix(&self, x: &[Fe]) -> Matrix {
        let n = self.dim;
        let f = &self.field;
        let mut m = Matrix::zeros(n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, &c) in self.product(j, i).iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, j);
                        m.set(k, j, f.add(v, f.mul(xi, c)));
                    }
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn commutes_with_all(&self, x: &[Fe]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vec(i);
            self.mul_vec(x, &b) == self.mul_vec(&b, x)
        })
    }

    /// Associativity and unit axioms; empty iff both hold.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.dim;
        let f = &self.field;
        let mut out = Vec::new();
        for i in 0..n {
            let b = self.basis_vec(i);
            if self.mul_vec(&self.unit, &b) != b || self.mul_vec(&b, &self.unit) != b {
                out.push(Violation::new("unit", &[i]));
            }
        }
        let mut lhs = vec![Fe::ZERO; n];
        let mut rhs = vec![Fe::ZERO; n];
        for i in 0..n {
            for j in 0..n {
                let bij = self.product(i, j);
                let nz: Vec<usize> = (0..n).filter(|&m| !bij[m].is_zero()).collect();
                for k in 0..n {
                    lhs.iter_mut().for_each(|x| *x = Fe::ZERO);
                    rhs.iter_mut().for_each(|x| *x = Fe::ZERO);
                    for &m in &nz {
                        f.axpy(&mut lhs, bij[m], self.product(m, k));
                    }
                    let bjk = self.product(j, k);
                    for (m, &c) in bjk.iter().enumerate() {
                        if !c.is_zero() {
                            f.axpy(&mut rhs, c, self.product(i, m));
                        }
                    }
                    if lhs != rhs {
                        out.push(Violation::new("associativity", &[i, j, k]));
                    }
                }
            }
        }
        out
    }

    /// The center `{x : x b_i = b_i x for all i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let f = &self.field;
        let mut e = Echelon::new(n);
        'outer: for i in 0..n {
            for k in 0..n {
                let row: Vec<Fe> = (0..n).map(|j| f.sub(self.product(j, i)[k], self.product(i, j)[k])).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    e.insert(f, row);
                    if e.rank() == n {
                        break 'outer;
                    }
                }
            }
        }
        e.kernel(f)
    }

    /// Algebra on a subspace closed under multiplication, with the given unit.
    pub fn restrict(&self, sub: &Subspace, unit: &[Fe]) -> Result<SCAlgebra> {
        let f = &self.field;
        let d = sub.dim();
        let unit_c = sub.coords(f, unit).ok_or_else(|| Error::Invalid("unit not in subspace".into()))?;
        let basis = sub.basis().to_vec();
        let mut mul = Vec::with_capacity(d * d * d);
        for a in &basis {
            for b in &basis {
                let c = sub
                    .coords(f, &self.mul_vec(a, b))
                    .ok_or_else(|| Error::Invalid("subspace not closed under multiplication".into()))?;
                mul.extend(c);
            }
        }
        SCAlgebra::with_cap(f.clone(), d, mul, unit_c, None, usize::MAX)
    }

    /// Quotient by a two-sided ideal, on the standard complement of the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<SCAlgebra> {
        let comp = ideal.complement_indices();
        let d = comp.len();
        let f = &self.field;
        let project = |v: &[Fe]| -> Vec<Fe> {
            let r = ideal.reduce(f, v);
            comp.iter().map(|&i| r[i]).collect()
        };
        let mut mul = Vec::with_capacity(d * d * d);
        for &a in &comp {
            for &b in &comp {
                mul.extend(project(self.product(a, b)));
            }
        }
        let labels = self.labels.as_ref().map(|l| comp.iter().map(|&i| l[i].clone()).collect());
        SCAlgebra::with_cap(f.clone(), d, mul, project(&self.unit), labels, usize::MAX)
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let f = &self.field;
        sub.basis().iter().all(|v| {
            (0..self.dim).all(|i| {
                let b = self.basis_vec(i);
                sub.contains(f, &self.mul_vec(v, &b)) && sub.contains(f, &self.mul_vec(&b, v))
            })
        })
    }

    /// Product `I J` of subspaces.
    pub fn subspace_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let f = &self.field;
        let mut e = Echelon::new(self.dim);
        for x in a.basis() {
            for y in b.basis() {
                e.insert(f, self.mul_vec(x, y));
            }
        }
        e.into_subspace()
    }

    pub fn is_nilpotent_subspace(&self, sub: &Subspace) -> bool {
        let mut power = sub.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return true;
            }
            power = self.subspace_product(&power, sub);
        }
        power.dim() == 0
    }

    /// Minimal polynomial of `x` in the subalgebra with identity `one`
    /// (normally the unit; an idempotent for a corner `eAe`).
    pub fn min_poly_with_unit(&self, x: &[Fe], one: &[Fe]) -> Poly {
        let f = &self.field;
        let n = self.dim;
        let width = n + n + 2;
        let mut e = Echelon::new(width);
        let mut power = one.to_vec();
        for d in 0..=n + 1 {
            let mut row = power.clone();
            row.resize(width, Fe::ZERO);
            row[n + d] = Fe::ONE;
            let red = e.reduce(f, row.clone());
            if red[..n].iter().all(|c| c.is_zero()) {
                let tail = &red[n..n + d + 1];
                return Poly::new(f.clone(), tail.to_vec()).monic();
            }
            e.insert(f, row);
            power = self.mul_vec(&power, x);
        }
        unreachable!("Cayley-Hamilton bounds the degree")
    }

    pub fn min_poly(&self, x: &[Fe]) -> Poly {
        self.min_poly_with_unit(x, &self.unit.clone())
    }

    /// Jacobson radical.
    pub fn radical(&self) -> Subspace {
        if self.field.is_prime_field() {
            return radical_prime(self);
        }
        let f = &self.field;
        let k = f.degree() as usize;
        let restricted = self.restrict_scalars();
        let rad_p = radical_prime(&restricted);
        let vectors = rad_p.basis().iter().map(|u| {
            (0..self.dim)
                .map(|i| {
                    let digits: Vec<u32> = (0..k).map(|a| u[i * k + a].0).collect();
                    f.from_coeffs(&digits).expect("digits in range")
                })
                .collect::<Vec<Fe>>()
        });
        let rad = Subspace::span(f, self.dim, vectors);
        debug_assert_eq!(rad.dim() * k, rad_p.dim());
        rad
    }

    /// The same algebra over the prime field, basis `t^a b_i` at index `i k + a`.
    pub fn restrict_scalars(&self) -> SCAlgebra {
        let f = &self.field;
        let prime = Field::prime(f.p()).unwrap();
        let k = f.degree() as usize;
        let n = self.dim;
        let t_pows: Vec<Fe> = (0..k).map(|a| f.pow(f.gen(), a as u64)).collect();
        let to_prime = |v: &[Fe]| -> Vec<Fe> { v.iter().flat_map(|&x| f.coeffs(x).into_iter().map(Fe)).collect() };
        let nn = n * k;
        let mut mul = Vec::with_capacity(nn * nn * nn);
        for i in 0..n {
            for a in 0..k {
                for j in 0..n {
                    for c in 0..k {
                        let s = f.mul(t_pows[a], t_pows[c]);
                        let v = self.scale_vec(self.product(i, j), s);
                        mul.extend(to_prime(&v));
                    }
                }
            }
        }
        // the loop above orders products by (i, a, j, c), matching index i*k+a
        SCAlgebra { field: prime, dim: nn, mul, unit: to_prime(&self.unit), labels: None }
    }

    pub fn radical_dim(&self) -> usize {
        self.radical().dim()
    }

    /// Whether the algebra is separable (the base field is perfect, so this is
    /// equivalent to a zero radical).
    pub fn is_separable(&self) -> bool {
        self.radical().dim() == 0
    }

    /// `x -> x^q` on a commutative subalgebra, in coordinates of `sub`.
    fn frobenius_on(&self, sub: &Subspace) -> Matrix {
        let f = &self.field;
        let q = f.order() as u64;
        let cols: Vec<Vec<Fe>> =
            sub.basis().iter().map(|z| sub.coords(f, &self.pow_vec(z, q)).expect("subalgebra closed")).collect();
        Matrix::from_cols(&cols, sub.dim())
    }

    fn from_coords(&self, sub: &Subspace, c: &[Fe]) -> Vec<Fe> {
        let mut v = self.zero_vec();
        for (row, &ci) in sub.basis().iter().zip(c) {
            self.field.axpy(&mut v, ci, row);
        }
        v
    }

    /// Complete set of orthogonal primitive central idempotents, sorted by
    /// coordinate vector.
    pub fn central_idempotents(&self) -> Vec<Vec<Fe>> {
        let z = self.center();
        self.idempotents_of_commutative(&z)
    }

    /// Primitive idempotents of a commutative unital subalgebra `sub`.
    fn idempotents_of_commutative(&self, sub: &Subspace) -> Vec<Vec<Fe>> {
        let f = &self.field;
        let frob = self.frobenius_on(sub);
        let fixed = frob.sub(f, &Matrix::identity(sub.dim())).kernel(f);
        let target = fixed.dim();
        let fixed_vecs: Vec<Vec<Fe>> = fixed.basis().iter().map(|c| self.from_coords(sub, c)).collect();
        let mut idems = vec![self.unit.clone()];
        for w in &fixed_vecs {
            if idems.len() == target {
                break;
            }
            let mut next = Vec::new();
            for e in &idems {
                let x = self.mul_vec(e, w);
                let mp = self.min_poly_with_unit(&x, e);
                let roots: Vec<Fe> = mp.roots().into_iter().map(|(r, _)| r).collect();
                debug_assert_eq!(roots.len() as isize, mp.degree());
                if roots.len() <= 1 {
                    next.push(e.clone());
                    continue;
                }
                for (ai, &a) in roots.iter().enumerate() {
                    let mut acc = e.clone();
                    for (bi, &b) in roots.iter().enumerate() {
                        if ai == bi {
                            continue;
                        }
                        let factor = self.sub_vec(&x, &self.scale_vec(e, b));
                        let inv = f.inv(f.sub(a, b)).unwrap();
                        acc = self.scale_vec(&self.mul_vec(&acc, &factor), inv);
                    }
                    next.push(acc);
                }
            }
            idems = next;
        }
        idems.sort();
        idems
    }

    /// Two-sided block decomposition by primitive central idempotents.
    pub fn block_decompose(&self) -> Blocks {
        let idems = self.central_idempotents();
        let dims = idems.iter().map(|e| self.ideal_generated_by_central(e).dim()).collect();
        Blocks { idempotents: idems, dims }
    }

    /// `eA` for a central element `e`.
    pub fn ideal_generated_by_central(&self, e: &[Fe]) -> Subspace {
        Subspace::span(&self.field, self.dim, (0..self.dim).map(|j| self.mul_vec(e, &self.basis_vec(j))))
    }

    /// Dimensions of simple modules: over the minimal splitting extension
    /// when `allow_extension`, otherwise over the base field.
    pub fn simples(&self, allow_extension: bool, cap: u32) -> Result<Simples> {
        let rad = self.radical();
        self.simples_given_radical(&rad, allow_extension, cap)
    }

    fn simples_given_radical(&self, rad: &Subspace, allow_extension: bool, cap: u32) -> Result<Simples> {
        let s = if rad.dim() == 0 { self.clone() } else { self.quotient(rad)? };
        let f = &s.field;
        let zs = s.center();
        let idems = s.idempotents_of_commutative(&zs);
        let mut dims = Vec::new();
        let mut degree = 1u32;
        for e in &idems {
            let center_part = Subspace::span(f, s.dim, zs.basis().iter().map(|z| s.mul_vec(e, z)));
            let d = center_part.dim();
            let block = s.ideal_generated_by_central(e).dim();
            let m2 = block / d;
            let m = (m2 as f64).sqrt().round() as usize;
            if m * m * d != block {
                return Err(Error::Invalid(format!("block of dim {block} over a center of dim {d} is not a matrix algebra")));
            }
            if allow_extension {
                dims.extend(std::iter::repeat(m).take(d));
                degree = lcm_u32(degree, d as u32);
            } else {
                dims.push(m * d);
            }
        }
        let needed = degree * self.field.degree();
        if needed > cap {
            return Err(Error::SplittingCapExceeded { needed, cap });
        }
        dims.sort_unstable();
        Ok(Simples { dims, splitting_degree: degree })
    }

    /// Block dimensions after extending scalars to a splitting field: each
    /// block splits into as many blocks as the residue degree of its center.
    fn split_block_dims(&self, z: &Subspace, idems: &[Vec<Fe>], block_dims: &[usize]) -> Vec<usize> {
        let f = &self.field;
        let q = f.order() as u64;
        let frob = self.frobenius_on(z);
        let mut m = 1;
        let mut reach = q;
        while (reach as usize) < z.dim().max(1) {
            reach = reach.saturating_mul(q);
            m += 1;
        }
        let nil = frob.pow(f, m).kernel(f);
        let nil_vecs: Vec<Vec<Fe>> = nil.basis().iter().map(|c| self.from_coords(z, c)).collect();
        let mut out = Vec::new();
        for (e, &dim) in idems.iter().zip(block_dims) {
            let ez = Subspace::span(f, self.dim, z.basis().iter().map(|v| self.mul_vec(e, v)));
            let erad = Subspace::span(f, self.dim, nil_vecs.iter().map(|v| self.mul_vec(e, v)));
            let d = ez.dim() - erad.dim();
            out.extend(std::iter::repeat(dim / d).take(d));
        }
        out.sort_unstable();
        out
    }

    /// Center, radical, blocks and simple modules in one pass.
    pub fn analyze(&self, splitting_cap: u32) -> Result<BlockReport> {
        let z = self.center();
        let rad = self.radical();
        let idems = self.idempotents_of_commutative(&z);
        let blocks: Vec<usize> = idems.iter().map(|e| self.ideal_generated_by_central(e).dim()).collect();
        let split_blocks = self.split_block_dims(&z, &idems, &blocks);
        let simples = self.simples_given_radical(&rad, true, splitting_cap)?;
        Ok(BlockReport {
            center_dim: z.dim(),
            radical_dim: rad.dim(),
            semisimple: rad.dim() == 0,
            blocks,
            split_blocks,
            simple_dims: simples.dims,
            splitting_degree: simples.splitting_degree,
        })
    }

    /// Reinterpret the structure constants over an extension field.
    pub fn extend_scalars(&self, target: &Field) -> Result<SCAlgebra> {
        let emb = self.field.embedding_into(target)?;
        Ok(SCAlgebra {
            field: target.clone(),
            dim: self.dim,
            mul: emb.map_vec(&self.mul),
            unit: emb.map_vec(&self.unit),
            labels: self.labels.clone(),
        })
    }

    /// Opposite algebra.
    pub fn opposite(&self) -> SCAlgebra {
        let n = self.dim;
        let mut mul = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                mul.extend_from_slice(self.product(j, i));
            }
        }
        SCAlgebra { mul, ..self.clone() }
    }

    /// Whether a linear map (columns = images of basis vectors) is a unital
    /// algebra homomorphism into `target`.
    pub fn is_algebra_map(&self, map: &Matrix, target: &SCAlgebra) -> bool {
        let f = &self.field;
        if map.cols != self.dim || map.rows != target.dim {
            return false;
        }
        if map.mul_vec(f, &self.unit) != target.unit {
            return false;
        }
        let img: Vec<Vec<Fe>> = (0..self.dim).map(|j| map.col(j)).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| map.mul_vec(f, self.product(i, j)) == target.mul_vec(&img[i], &img[j]))
        })
    }
}

/// Primitive central idempotents and the dimensions of the corresponding blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub idempotents: Vec<Vec<Fe>>,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simples {
    pub dims: Vec<usize>,
    pub splitting_degree: u32,
}

/// Structure summary of a finite-dimensional algebra.
///
/// `blocks` are over the base field; `split_blocks` and `simple_dims` are
/// over the minimal splitting extension of degree `splitting_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub center_dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    pub blocks: Vec<usize>,
    pub split_blocks: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub splitting_degree: u32,
}

/// Radical over a prime field by iterated generalized traces of the left
/// regular representation.
fn radical_prime(a: &SCAlgebra) -> Subspace {
    let f = &a.field;
    let p = f.p() as u64;
    let n = a.dim;
    if n == 0 {
        return Subspace::zero(0);
    }
    // level 0: kernel of the trace form
    let traces: Vec<Fe> = (0..n)
        .map(|m| {
            let mut t = Fe::ZERO;
            for j in 0..n {
                t = f.add(t, a.product(m, j)[j]);
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            form.set(j, i, f.dot(a.product(i, j), &traces));
        }
    }
    let mut ideal = form.kernel(f);
    let mut levels = 0u32;
    let mut reach = p;
    while reach <= n as u64 {
        levels += 1;
        reach *= p;
    }
    let lefts: Vec<Vec<u64>> = (0..n).map(|j| lift(&a.left_matrix(&a.basis_vec(j)))).collect();
    for level in 1..=levels {
        if ideal.dim() == 0 {
            break;
        }
        let modulus = p.pow(level + 1);
        let scale = p.pow(level);
        // g_level on the current basis
        let g: Vec<Fe> = ideal
            .basis()
            .iter()
            .map(|c| {
                let mut m = vec![0u64; n * n];
                for (j, &cj) in c.iter().enumerate() {
                    if cj.0 != 0 {
                        for (x, &y) in m.iter_mut().zip(&lefts[j]) {
                            *x = (*x + cj.0 as u64 * y) % modulus;
                        }
                    }
                }
                let mut power = m;
                for _ in 0..level {
                    power = int_matrix_pow(&power, n, p, modulus);
                }
                let tr = (0..n).fold(0u64, |s, i| (s + power[i * n + i]) % modulus);
                debug_assert_eq!(tr % scale, 0, "generalized trace not divisible");
                Fe(((tr / scale) % p) as u32)
            })
            .collect();
        let d = ideal.dim();
        let mut cons = Matrix::zeros(n, d);
        for (r, c) in ideal.basis().iter().enumerate() {
            for j in 0..n {
                let prod = a.mul_vec(c, &a.basis_vec(j));
                let coords = ideal.coords(f, &prod).expect("ideal closed under right multiplication");
                cons.set(j, r, f.dot(&coords, &g));
            }
        }
        let k = cons.kernel(f);
        let basis = ideal.basis().to_vec();
        ideal = Subspace::span(
            f,
            n,
            k.basis().iter().map(|u| {
                let mut v = vec![Fe::ZERO; n];
                for (r, &ur) in u.iter().enumerate() {
                    f.axpy(&mut v, ur, &basis[r]);
                }
                v
            }),
        );
    }
    ideal
}

fn lift(m: &Matrix) -> Vec<u64> {
    m.data.iter().map(|x| x.0 as u64).collect()
}

fn int_matmul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        let row = &mut out[i * n..(i + 1) * n];
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            let brow = &b[k * n..(k + 1) * n];
            for (o, &y) in row.iter_mut().zip(brow) {
                *o += x * y;
            }
        }
        for o in row.iter_mut() {
            *o %= modulus;
        }
    }
    out
}

fn int_matrix_pow(m: &[u64], n: usize, mut e: u64, modulus: u64) -> Vec<u64> {
    let mut result: Option<Vec<u64>> = None;
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => int_matmul(&r, &base, n, modulus),
            });
        }
        e >>= 1;
        if e > 0 {
            base = int_matmul(&base, &base, n, modulus);
        }
    }
    result.unwrap_or_else(|| {
        let mut id = vec![0u64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        id
    })
}

/// Square matrix of field values for a bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilForm {
    pub field: Field,
    pub matrix: Matrix,
}

impl BilForm {
    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }
}

/// Exact rank and non-degeneracy of a bilinear form.
pub fn form_rank(s: &BilForm) -> (usize, bool) {
    let r = s.matrix.rank(&s.field);
    (r, r == s.matrix.rows && s.matrix.rows == s.matrix.cols)
}
