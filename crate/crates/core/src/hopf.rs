//! Coalgebras, Hopf algebras, convolution and integrals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::{SCAlgebra, Violation};
use crate::field::{Fe, Field, FieldSpec};
use crate::json::{matrix_in, tensor_in, tensor_out, vec_in, vec_out, AlgebraJson, ScalarRepr};
use crate::linalg::{Echelon, Matrix};

/// A linear map between coordinate spaces; column `j` is the image of basis vector `j`.
pub type LinMap = Matrix;

/// A finite-dimensional coalgebra with sparse comultiplication:
/// `Δ(b_i) = Σ c b_j ⊗ b_k` over the triples `(j, k, c)` in `comul[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: Field,
    pub comul: Vec<Vec<(usize, usize, Fe)>>,
    pub counit: Vec<Fe>,
}

impl Coalgebra {
    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn from_dense(field: &Field, dim: usize, dense: &[Fe], counit: Vec<Fe>) -> Coalgebra {
        let comul = (0..dim)
            .map(|i| {
                let mut terms = Vec::new();
                for j in 0..dim {
                    for k in 0..dim {
                        let c = dense[(i * dim + j) * dim + k];
                        if !c.is_zero() {
                            terms.push((j, k, c));
                        }
                    }
                }
                terms
            })
            .collect();
        Coalgebra { field: field.clone(), comul, counit }
    }

    pub fn to_dense(&self) -> Vec<Fe> {
        let n = self.dim();
        let mut out = vec![Fe::ZERO; n * n * n];
        for (i, terms) in self.comul.iter().enumerate() {
            for &(j, k, c) in terms {
                out[(i * n + j) * n + k] = c;
            }
        }
        out
    }

    /// `Δ` applied to a vector, as a dense `n x n` tensor (index `j n + k`).
    pub fn comul_vec(&self, x: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let f = &self.field;
        let mut out = vec![Fe::ZERO; n * n];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, k, c) in &self.comul[i] {
                let t = &mut out[j * n + k];
                *t = f.add(*t, f.mul(xi, c));
            }
        }
        out
    }

    /// The tensor square `C ⊗ C` with basis `b_i ⊗ b_j` at index `i n + j`.
    pub fn tensor_square(&self) -> Coalgebra {
        let n = self.dim();
        let f = &self.field;
        let mut comul = Vec::with_capacity(n * n);
        let mut counit = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut terms = Vec::with_capacity(self.comul[i].len() * self.comul[j].len());
                for &(a, b, c1) in &self.comul[i] {
                    for &(c, d, c2) in &self.comul[j] {
                        terms.push((a * n + c, b * n + d, f.mul(c1, c2)));
                    }
                }
                comul.push(terms);
                counit.push(f.mul(self.counit[i], self.counit[j]));
            }
        }
        Coalgebra { field: f.clone(), comul, counit }
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.comul_vec(&unit_vec(n, i));
            (0..n).all(|j| (0..n).all(|k| d[j * n + k] == d[k * n + j]))
        })
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    v[i] = Fe::ONE;
    v
}

/// Hopf algebra: algebra, coalgebra and antipode on the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub alg: SCAlgebra,
    pub coalg: Coalgebra,
    /// Column `i` is `S(b_i)`.
    pub antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(alg: SCAlgebra, coalg: Coalgebra, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = alg.dim();
        if coalg.dim() != n || coalg.comul.len() != n {
            return Err(Error::ShapeMismatch(format!("coalgebra of dim {} on an algebra of dim {n}", coalg.dim())));
        }
        if antipode.rows != n || antipode.cols != n {
            return Err(Error::ShapeMismatch(format!("antipode is {}x{}, expected {n}x{n}", antipode.rows, antipode.cols)));
        }
        if alg.field() != &coalg.field {
            return Err(Error::FieldMismatch(alg.field().to_string(), coalg.field.to_string()));
        }
        Ok(HopfAlgebra { alg, coalg, antipode })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn counit(&self) -> &[Fe] {
        &self.coalg.counit
    }

    pub fn counit_of(&self, x: &[Fe]) -> Fe {
        self.field().dot(x, &self.coalg.counit)
    }

    pub fn antipode_of(&self, x: &[Fe]) -> Vec<Fe> {
        self.antipode.mul_vec(self.field(), x)
    }

    /// `(η∘ε)` as a map into `target`.
    pub fn conv_unit(&self, target: &SCAlgebra) -> LinMap {
        conv_unit(&self.coalg, target)
    }

    pub fn identity_map(&self) -> LinMap {
        Matrix::identity(self.dim())
    }

    /// `Δ(x) Δ(y)` computed in `H ⊗ H` (dense, index `j n + k`).
    fn tensor_mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let f = self.field();
        let nz = |v: &[Fe]| -> Vec<(usize, usize, Fe)> {
            let mut t = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if !v[j * n + k].is_zero() {
                        t.push((j, k, v[j * n + k]));
                    }
                }
            }
            t
        };
        let (xs, ys) = (nz(x), nz(y));
        let mut out = vec![Fe::ZERO; n * n];
        for &(a, b, c1) in &xs {
            for &(c, d, c2) in &ys {
                let s = f.mul(c1, c2);
                let l = self.alg.product(a, c);
                let r = self.alg.product(b, d);
                for (u, &lu) in l.iter().enumerate() {
                    if lu.is_zero() {
                        continue;
                    }
                    let su = f.mul(s, lu);
                    f.axpy(&mut out[u * n..(u + 1) * n], su, r);
                }
            }
        }
        out
    }

    /// All Hopf algebra axioms; empty iff they hold.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.dim();
        let f = self.field().clone();
        let mut out = self.alg.verify();
        let c = &self.coalg;
        // coassociativity
        for i in 0..n {
            let mut lhs = vec![Fe::ZERO; n * n * n];
            let mut rhs = vec![Fe::ZERO; n * n * n];
            for &(m, l, c1) in &c.comul[i] {
                for &(j, k, c2) in &c.comul[m] {
                    let t = &mut lhs[(j * n + k) * n + l];
                    *t = f.add(*t, f.mul(c1, c2));
                }
            }
            for &(j, m, c1) in &c.comul[i] {
                for &(k, l, c2) in &c.comul[m] {
                    let t = &mut rhs[(j * n + k) * n + l];
                    *t = f.add(*t, f.mul(c1, c2));
                }
            }
            if lhs != rhs {
                out.push(Violation::new("coassociativity", &[i]));
            }
        }
        // counit
        for i in 0..n {
            let mut left = vec![Fe::ZERO; n];
            let mut right = vec![Fe::ZERO; n];
            for &(j, k, cf) in &c.comul[i] {
                left[k] = f.add(left[k], f.mul(cf, c.counit[j]));
                right[j] = f.add(right[j], f.mul(cf, c.counit[k]));
            }
            let e = unit_vec(n, i);
            if left != e || right != e {
                out.push(Violation::new("counit", &[i]));
            }
        }
        // Δ and ε are unital algebra maps
        let one = self.alg.unit().to_vec();
        let d1 = c.comul_vec(&one);
        let mut one_one = vec![Fe::ZERO; n * n];
        for j in 0..n {
            for k in 0..n {
                one_one[j * n + k] = f.mul(one[j], one[k]);
            }
        }
        if d1 != one_one {
            out.push(Violation::new("comultiplication unital", &[]));
        }
        if self.counit_of(&one) != Fe::ONE {
            out.push(Violation::new("counit unital", &[]));
        }
        let deltas: Vec<Vec<Fe>> = (0..n).map(|i| c.comul_vec(&unit_vec(n, i))).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = self.alg.product(i, j);
                if c.comul_vec(prod) != self.tensor_mul(&deltas[i], &deltas[j]) {
                    out.push(Violation::new("comultiplication multiplicative", &[i, j]));
                }
                if self.counit_of(prod) != f.mul(c.counit[i], c.counit[j]) {
                    out.push(Violation::new("counit multiplicative", &[i, j]));
                }
            }
        }
        // antipode
        let s_cols: Vec<Vec<Fe>> = (0..n).map(|i| self.antipode.col(i)).collect();
        for i in 0..n {
            let mut left = vec![Fe::ZERO; n];
            let mut right = vec![Fe::ZERO; n];
            for &(j, k, cf) in &c.comul[i] {
                f.axpy(&mut left, cf, &self.alg.mul_vec(&s_cols[j], &unit_vec(n, k)));
                f.axpy(&mut right, cf, &self.alg.mul_vec(&unit_vec(n, j), &s_cols[k]));
            }
            let expect = self.alg.scale_vec(&one, c.counit[i]);
            if left != expect || right != expect {
                out.push(Violation::new("antipode", &[i]));
            }
        }
        out
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalg.is_cocommutative()
    }

    /// The dual Hopf algebra on the dual basis (transposed structure tensors).
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let f = self.field().clone();
        let dense = self.coalg.to_dense();
        let alg = SCAlgebra::with_cap(f.clone(), n, dense, self.coalg.counit.clone(), None, usize::MAX)
            .expect("shapes agree");
        let mut comul = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                for (i, &c) in self.alg.product(a, b).iter().enumerate() {
                    if !c.is_zero() {
                        comul[i].push((a, b, c));
                    }
                }
            }
        }
        let coalg = Coalgebra { field: f, comul, counit: self.alg.unit().to_vec() };
        HopfAlgebra { alg, coalg, antipode: self.antipode.transpose() }
    }

    /// Whether `S` reverses products on every pair of basis elements.
    pub fn antipode_is_antihomomorphism(&self) -> bool {
        let n = self.dim();
        let f = self.field();
        let s: Vec<Vec<Fe>> = (0..n).map(|i| self.antipode.col(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| self.antipode.mul_vec(f, self.alg.product(i, j)) == self.alg.mul_vec(&s[j], &s[i]))
        })
    }
}

/// `η∘ε : C → A`.
pub fn conv_unit(c: &Coalgebra, target: &SCAlgebra) -> LinMap {
    let cols: Vec<Vec<Fe>> = c.counit.iter().map(|&e| target.scale_vec(target.unit(), e)).collect();
    Matrix::from_cols(&cols, target.dim())
}

/// `(f ∗ g)(x) = f(x₁) g(x₂)` for maps out of a coalgebra into an algebra.
pub fn convolution(c: &Coalgebra, target: &SCAlgebra, f: &LinMap, g: &LinMap) -> Result<LinMap> {
    let n = c.dim();
    let m = target.dim();
    for (name, map) in [("f", f), ("g", g)] {
        if map.cols != n || map.rows != m {
            return Err(Error::ShapeMismatch(format!(
                "convolution operand {name} is {}x{}, expected {m}x{n}",
                map.rows, map.cols
            )));
        }
    }
    let fl = target.field();
    let fc: Vec<Vec<Fe>> = (0..n).map(|j| f.col(j)).collect();
    let gc: Vec<Vec<Fe>> = (0..n).map(|j| g.col(j)).collect();
    let cols: Vec<Vec<Fe>> = (0..n)
        .map(|i| {
            let mut acc = vec![Fe::ZERO; m];
            for &(j, k, cf) in &c.comul[i] {
                let prod = target.mul_vec(&fc[j], &gc[k]);
                fl.axpy(&mut acc, cf, &prod);
            }
            acc
        })
        .collect();
    Ok(Matrix::from_cols(&cols, m))
}

/// Convolution inverse, from the minimal polynomial of `f` in the
/// convolution algebra `Hom(C, A)`.
pub fn conv_inverse(c: &Coalgebra, target: &SCAlgebra, f: &LinMap) -> Result<LinMap> {
    let fl = target.field().clone();
    let size = f.rows * f.cols;
    let unit = conv_unit(c, target);
    if f.rows != target.dim() || f.cols != c.dim() {
        return Err(Error::ShapeMismatch(format!("map is {}x{}", f.rows, f.cols)));
    }
    let max_deg = size + 1;
    let width = size + max_deg + 1;
    let mut ech = Echelon::new(width);
    let mut powers: Vec<LinMap> = Vec::new();
    let mut current = unit.clone();
    for d in 0..=max_deg {
        let mut row = current.data.clone();
        row.resize(width, Fe::ZERO);
        row[size + d] = Fe::ONE;
        let red = ech.reduce(&fl, row.clone());
        if red[..size].iter().all(|x| x.is_zero()) {
            let rel = &red[size..size + d + 1];
            let c0 = rel[0];
            if c0.is_zero() {
                return Err(Error::NotConvInvertible);
            }
            // f^{-1} = -c0^{-1} Σ_{i≥1} rel[i] f^{i-1}
            let scale = fl.neg(fl.inv(c0)?);
            let mut acc = Matrix::zeros(f.rows, f.cols);
            for (i, &ci) in rel.iter().enumerate().skip(1) {
                if !ci.is_zero() {
                    fl.axpy(&mut acc.data, fl.mul(scale, ci), &powers[i - 1].data);
                }
            }
            debug_assert_eq!(convolution(c, target, f, &acc)?, unit);
            return Ok(acc);
        }
        ech.insert(&fl, row);
        powers.push(current.clone());
        current = convolution(c, target, &current, f)?;
    }
    Err(Error::NotConvInvertible)
}

/// Left integral of `H*`: `(id ⊗ Λ)Δ(h) = Λ(h)1`, normalized so the first
/// nonzero coordinate is 1.
pub fn left_integral_dual(h: &HopfAlgebra) -> Result<Vec<Fe>> {
    integral_dual(h, true)
}

/// Right integral of `H*`: `(Λ ⊗ id)Δ(h) = Λ(h)1`.
pub fn right_integral_dual(h: &HopfAlgebra) -> Result<Vec<Fe>> {
    integral_dual(h, false)
}

fn integral_equations(h: &HopfAlgebra, left: bool) -> Echelon {
    let n = h.dim();
    let f = h.field();
    let unit = h.alg.unit();
    let mut ech = Echelon::new(n);
    for i in 0..n {
        // coefficient of b_j in (id⊗Λ)Δ(b_i) − Λ_i 1
        let mut rows = vec![vec![Fe::ZERO; n]; n];
        for &(j, k, c) in &h.coalg.comul[i] {
            let (out, var) = if left { (j, k) } else { (k, j) };
            rows[out][var] = f.add(rows[out][var], c);
        }
        for (j, row) in rows.iter_mut().enumerate() {
            row[i] = f.sub(row[i], unit[j]);
            if row.iter().any(|x| !x.is_zero()) {
                ech.insert(f, row.clone());
                if ech.rank() == n {
                    return ech;
                }
            }
        }
    }
    ech
}

fn integral_dual(h: &HopfAlgebra, left: bool) -> Result<Vec<Fe>> {
    let f = h.field();
    let space = integral_equations(h, left).kernel(f);
    let side = if left { "left" } else { "right" };
    if space.dim() != 1 {
        return Err(Error::IntegralNotFound(format!("{side} integral space has dimension {}", space.dim())));
    }
    let mut v = space.basis()[0].clone();
    let lead = *v.iter().find(|x| !x.is_zero()).expect("nonzero basis vector");
    let inv = f.inv(lead)?;
    f.scale(&mut v, inv);
    Ok(v)
}

/// Whether `Λ` satisfies the left (or right) integral equations exactly.
pub fn is_integral_dual(h: &HopfAlgebra, lambda: &[Fe], left: bool) -> bool {
    let n = h.dim();
    let f = h.field();
    (0..n).all(|i| {
        let mut acc = vec![Fe::ZERO; n];
        for &(j, k, c) in &h.coalg.comul[i] {
            let (out, var) = if left { (j, k) } else { (k, j) };
            acc[out] = f.add(acc[out], f.mul(c, lambda[var]));
        }
        acc == h.alg.scale_vec(h.alg.unit(), lambda[i])
    })
}

/// `(unimodular, S² = id, Λ(xy) = Λ(yx))`.
pub fn is_unimodular_s2(h: &HopfAlgebra) -> Result<(bool, bool, bool)> {
    let f = h.field();
    let n = h.dim();
    let lambda = left_integral_dual(h)?;
    let unimodular = is_integral_dual(h, &lambda, false);
    let s2 = h.antipode.mul(f, &h.antipode) == Matrix::identity(n);
    let symmetric = (0..n).all(|i| (0..n).all(|j| f.dot(&lambda, h.alg.product(i, j)) == f.dot(&lambda, h.alg.product(j, i))));
    Ok((unimodular, s2, symmetric))
}

/// Group algebra from a multiplication table on `0..n`.
pub fn group_algebra(field: &Field, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup(format!("row {i} is not a list of {n} elements below {n}")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inv = vec![0; n];
    for (x, slot) in inv.iter_mut().enumerate() {
        *slot = (0..n)
            .find(|&y| table[x][y] == e && table[y][x] == e)
            .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))?;
    }
    let alg = SCAlgebra::from_fn(field.clone(), n, unit_vec(n, e), None, |i, j| unit_vec(n, table[i][j]))?;
    let coalg = Coalgebra { field: field.clone(), comul: (0..n).map(|g| vec![(g, g, Fe::ONE)]).collect(), counit: vec![Fe::ONE; n] };
    let antipode = Matrix::from_cols(&(0..n).map(|g| unit_vec(n, inv[g])).collect::<Vec<_>>(), n);
    HopfAlgebra::new(alg, coalg, antipode)
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Multiplication table of the symmetric group on three letters; element 0
/// is the identity and elements 0, 1, 2 form the alternating subgroup.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let (pa, pb) = (perms[a], perms[b]);
                    index([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
                })
                .collect()
        })
        .collect()
}

/// `{"order": n, "table": [[...]]}` with an optional field (default `F_3`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
}

impl GroupJson {
    pub fn build(&self) -> Result<HopfAlgebra> {
        if self.table.len() != self.order {
            return Err(Error::NotAGroup(format!("order {} but {} table rows", self.order, self.table.len())));
        }
        let field = match &self.field {
            Some(s) => s.build()?,
            None => Field::prime(3)?,
        };
        group_algebra(&field, &self.table)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(flatten)]
    pub alg: AlgebraJson,
    pub comul: Vec<Vec<Vec<ScalarRepr>>>,
    pub counit: Vec<ScalarRepr>,
    /// Row `i` is `S(b_i)`.
    pub antipode: Vec<Vec<ScalarRepr>>,
}

impl HopfJson {
    pub fn build(&self) -> Result<HopfAlgebra> {
        let alg = self.alg.build()?;
        let f = alg.field().clone();
        let n = alg.dim();
        let dense = tensor_in(&f, &self.comul, n, "comul")?;
        let counit = vec_in(&f, &self.counit, n, "counit")?;
        let s = matrix_in(&f, &self.antipode, n, n, "antipode")?;
        let coalg = Coalgebra::from_dense(&f, n, &dense, counit);
        HopfAlgebra::new(alg, coalg, Matrix::from_cols(&s, n))
    }

    pub fn from_hopf(h: &HopfAlgebra) -> HopfJson {
        let f = h.field();
        let n = h.dim();
        HopfJson {
            alg: AlgebraJson::from_algebra(&h.alg),
            comul: tensor_out(f, &h.coalg.to_dense(), n),
            counit: vec_out(f, &h.coalg.counit),
            antipode: (0..n).map(|i| vec_out(f, &h.antipode.col(i))).collect(),
        }
    }
}

impl Serialize for HopfAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HopfJson::from_hopf(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HopfAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        HopfJson::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn group_algebras_verify() {
        for table in [cyclic_table(2), cyclic_table(4), s3_table()] {
            let h = group_algebra(&f3(), &table).unwrap();
            assert!(h.verify().is_empty());
            assert!(h.is_cocommutative());
            assert!(h.antipode_is_antihomomorphism());
        }
        let s3 = group_algebra(&f3(), &s3_table()).unwrap();
        assert!(!s3.alg.is_commutative());
    }

    #[test]
    fn identity_antipode_is_caught() {
        let mut h = group_algebra(&f3(), &cyclic_table(3)).unwrap();
        h.antipode = Matrix::identity(3);
        let v = h.verify();
        assert!(v.iter().any(|x| x.axiom == "antipode"));
    }

    #[test]
    fn not_a_group() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_algebra(&f3(), &bad), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn convolution_unit_and_antipode() {
        let h = group_algebra(&f3(), &s3_table()).unwrap();
        let id = h.identity_map();
        let unit = h.conv_unit(&h.alg);
        assert_eq!(convolution(&h.coalg, &h.alg, &id, &h.antipode).unwrap(), unit);
        assert_eq!(convolution(&h.coalg, &h.alg, &unit, &id).unwrap(), id);
        assert_eq!(conv_inverse(&h.coalg, &h.alg, &id).unwrap(), h.antipode);
        assert_eq!(conv_inverse(&h.coalg, &h.alg, &unit).unwrap(), unit);
    }

    #[test]
    fn integral_of_cyclic_group() {
        let h = group_algebra(&f3(), &cyclic_table(4)).unwrap();
        let l = left_integral_dual(&h).unwrap();
        assert_eq!(l, vec![Fe(1), Fe(0), Fe(0), Fe(0)]);
        assert_eq!(is_unimodular_s2(&h).unwrap(), (true, true, true));
    }

    #[test]
    fn dual_of_s3_is_not_cocommutative() {
        let h = group_algebra(&Field::prime(5).unwrap(), &s3_table()).unwrap();
        let d = h.dual();
        assert!(d.verify().is_empty());
        assert!(!d.is_cocommutative());
    }

    #[test]
    fn hopf_json_round_trip() {
        let h = group_algebra(&f3(), &cyclic_table(2)).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        let back: HopfAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(h, back);
        let g: GroupJson = serde_json::from_str(r#"{"order": 2, "table": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(g.build().unwrap(), h);
    }
}
