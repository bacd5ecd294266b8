//! Comodule algebras, the Galois condition, cocycles and twisted products,
//! cleft splittings, equivariance, and Frobenius forms from integrals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::{BilForm, SCAlgebra, Violation};
use crate::field::{Fe, Field, FieldSpec};
use crate::hopf::{conv_inverse, convolution, group_algebra, Coalgebra, GroupJson, HopfAlgebra, HopfJson, LinMap};
use crate::json::{vec_in, vec_out, AlgebraJson, ScalarRepr};
use crate::linalg::{Echelon, Matrix, Subspace};

/// Argument order of the twisted product.
///
/// `Standard`: `(a⊗h)(b⊗g) = ab σ(h₁,g₁) ⊗ h₂g₂`.
/// `Paper`: `(a⊗g)(b⊗h) = ab σ(h₁,g₁) ⊗ h₂g₂`, the opposite algebra of `Standard`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Eq3Convention {
    #[default]
    Paper,
    Standard,
}

impl std::str::FromStr for Eq3Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Eq3Convention::Paper),
            "standard" => Ok(Eq3Convention::Standard),
            _ => Err(Error::Invalid(format!("unknown convention {s:?}, expected paper or standard"))),
        }
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    v[i] = Fe::ONE;
    v
}

/// Right `H`-comodule algebra `A` with `ρ(a_i) = Σ c a_j ⊗ h_k` over the
/// triples `(j, k, c)` in `coaction[i]`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub alg: SCAlgebra,
    pub hopf: HopfAlgebra,
    pub coaction: Vec<Vec<(usize, usize, Fe)>>,
}

impl ComoduleAlgebra {
    pub fn new(alg: SCAlgebra, hopf: HopfAlgebra, coaction: Vec<Vec<(usize, usize, Fe)>>) -> Result<Self> {
        let (m, n) = (alg.dim(), hopf.dim());
        if coaction.len() != m || coaction.iter().flatten().any(|&(j, k, _)| j >= m || k >= n) {
            return Err(Error::ShapeMismatch("coaction indices out of range".into()));
        }
        if alg.field() != hopf.field() {
            return Err(Error::FieldMismatch(alg.field().to_string(), hopf.field().to_string()));
        }
        Ok(ComoduleAlgebra { alg, hopf, coaction })
    }

    /// `ρ(x) = x ⊗ 1`.
    pub fn trivial(alg: SCAlgebra, hopf: HopfAlgebra) -> Result<Self> {
        let one = hopf.alg.unit().to_vec();
        let coaction = (0..alg.dim())
            .map(|i| one.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (i, k, c)).collect())
            .collect();
        ComoduleAlgebra::new(alg, hopf, coaction)
    }

    /// A Hopf algebra coacting on itself by its comultiplication.
    pub fn regular(hopf: &HopfAlgebra) -> ComoduleAlgebra {
        ComoduleAlgebra { alg: hopf.alg.clone(), hopf: hopf.clone(), coaction: hopf.coalg.comul.clone() }
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    /// `ρ(x)` as a dense `m x n` array (index `j n + k`).
    pub fn coaction_vec(&self, x: &[Fe]) -> Vec<Fe> {
        let n = self.hopf.dim();
        let f = self.field();
        let mut out = vec![Fe::ZERO; self.alg.dim() * n];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, k, c) in &self.coaction[i] {
                let t = &mut out[j * n + k];
                *t = f.add(*t, f.mul(xi, c));
            }
        }
        out
    }

    fn tensor_mul(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let (m, n) = (self.alg.dim(), self.hopf.dim());
        let f = self.field();
        let nz = |v: &[Fe]| -> Vec<(usize, usize, Fe)> {
            (0..m * n).filter(|&t| !v[t].is_zero()).map(|t| (t / n, t % n, v[t])).collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        let mut out = vec![Fe::ZERO; m * n];
        for &(a, u, c1) in &xs {
            for &(b, v, c2) in &ys {
                let s = f.mul(c1, c2);
                let l = self.alg.product(a, b);
                let r = self.hopf.alg.product(u, v);
                for (j, &lj) in l.iter().enumerate() {
                    if !lj.is_zero() {
                        f.axpy(&mut out[j * n..(j + 1) * n], f.mul(s, lj), r);
                    }
                }
            }
        }
        out
    }

    /// Counit law, coassociativity and multiplicativity of the coaction.
    pub fn verify(&self) -> Vec<Violation> {
        let (m, n) = (self.alg.dim(), self.hopf.dim());
        let f = self.field().clone();
        let mut out = Vec::new();
        let eps = self.hopf.counit();
        for i in 0..m {
            let mut v = vec![Fe::ZERO; m];
            for &(j, k, c) in &self.coaction[i] {
                v[j] = f.add(v[j], f.mul(c, eps[k]));
            }
            if v != unit_vec(m, i) {
                out.push(Violation::new("coaction counit", &[i]));
            }
            let mut lhs = vec![Fe::ZERO; m * n * n];
            let mut rhs = vec![Fe::ZERO; m * n * n];
            for &(j, k, c) in &self.coaction[i] {
                for &(a, u, c2) in &self.coaction[j] {
                    let t = &mut lhs[(a * n + u) * n + k];
                    *t = f.add(*t, f.mul(c, c2));
                }
                for &(u, v, c2) in &self.hopf.coalg.comul[k] {
                    let t = &mut rhs[(j * n + u) * n + v];
                    *t = f.add(*t, f.mul(c, c2));
                }
            }
            if lhs != rhs {
                out.push(Violation::new("coaction coassociativity", &[i]));
            }
        }
        let rhos: Vec<Vec<Fe>> = (0..m).map(|i| self.coaction_vec(&unit_vec(m, i))).collect();
        let one = self.alg.unit().to_vec();
        let mut one_one = vec![Fe::ZERO; m * n];
        for j in 0..m {
            for k in 0..n {
                one_one[j * n + k] = f.mul(one[j], self.hopf.alg.unit()[k]);
            }
        }
        if self.coaction_vec(&one) != one_one {
            out.push(Violation::new("coaction unital", &[]));
        }
        for i in 0..m {
            for j in 0..m {
                if self.coaction_vec(self.alg.product(i, j)) != self.tensor_mul(&rhos[i], &rhos[j]) {
                    out.push(Violation::new("coaction multiplicative", &[i, j]));
                }
            }
        }
        out
    }

    /// `{x : ρ(x) = x ⊗ 1}`.
    pub fn coinvariants(&self) -> Subspace {
        let (m, n) = (self.alg.dim(), self.hopf.dim());
        let f = self.field();
        let one = self.hopf.alg.unit();
        let cols: Vec<Vec<Fe>> = (0..m)
            .map(|i| {
                let mut v = self.coaction_vec(&unit_vec(m, i));
                for (k, &c) in one.iter().enumerate() {
                    v[i * n + k] = f.sub(v[i * n + k], c);
                }
                v
            })
            .collect();
        let mut ech = Echelon::new(m);
        for t in 0..m * n {
            let row: Vec<Fe> = cols.iter().map(|c| c[t]).collect();
            if row.iter().any(|x| !x.is_zero()) {
                ech.insert(f, row);
                if ech.rank() == m {
                    break;
                }
            }
        }
        ech.kernel(f)
    }

    /// The coinvariant subalgebra as an algebra in its echelon basis.
    pub fn coinvariant_algebra(&self) -> Result<(SCAlgebra, Subspace)> {
        let b = self.coinvariants();
        Ok((self.alg.restrict(&b, self.alg.unit())?, b))
    }

    /// `(x ⊗ 1)ρ(y)` for basis elements.
    fn can_image(&self, i: usize, l: usize) -> Vec<Fe> {
        let n = self.hopf.dim();
        let f = self.field();
        let mut v = vec![Fe::ZERO; self.alg.dim() * n];
        for &(j, k, c) in &self.coaction[l] {
            for (u, &p) in self.alg.product(i, j).iter().enumerate() {
                if !p.is_zero() {
                    let t = &mut v[u * n + k];
                    *t = f.add(*t, f.mul(c, p));
                }
            }
        }
        v
    }

    /// Surjectivity of `can: A ⊗ A → A ⊗ H` when the coinvariants are the scalars.
    pub fn galois_check(&self) -> Result<bool> {
        let b = self.coinvariants();
        if b.dim() != 1 {
            return Err(Error::InvariantsNotCentralScalars(b.dim()));
        }
        let (m, n) = (self.alg.dim(), self.hopf.dim());
        let f = self.field();
        let mut ech = Echelon::new(m * n);
        for i in 0..m {
            for l in 0..m {
                ech.insert(f, self.can_image(i, l));
                if ech.rank() == m * n {
                    return Ok(true);
                }
            }
        }
        Ok(ech.rank() == m * n)
    }

    /// The canonical map over the coinvariant subalgebra `B`, with `A ⊗_B A`
    /// built as a quotient of `A ⊗ A`.
    pub fn galois_check_relative(&self) -> RelativeGalois {
        let (m, n) = (self.alg.dim(), self.hopf.dim());
        let f = self.field().clone();
        let b = self.coinvariants();
        let mut rel = Echelon::new(m * m);
        for bv in b.basis() {
            for x in 0..m {
                for y in 0..m {
                    let xb = self.alg.mul_vec(&unit_vec(m, x), bv);
                    let by = self.alg.mul_vec(bv, &unit_vec(m, y));
                    let mut v = vec![Fe::ZERO; m * m];
                    for (u, &c) in xb.iter().enumerate() {
                        v[u * m + y] = f.add(v[u * m + y], c);
                    }
                    for (u, &c) in by.iter().enumerate() {
                        v[x * m + u] = f.sub(v[x * m + u], c);
                    }
                    rel.insert(&f, v);
                }
            }
        }
        let relations = rel.into_subspace();
        let tensor_dim = m * m - relations.dim();
        // can factors through the quotient: check it kills the relations, then take the rank
        let can = |v: &[Fe]| -> Vec<Fe> {
            let mut out = vec![Fe::ZERO; m * n];
            for (t, &c) in v.iter().enumerate() {
                if !c.is_zero() {
                    f.axpy(&mut out, c, &self.can_image(t / m, t % m));
                }
            }
            out
        };
        let well_defined = relations.basis().iter().all(|r| can(r).iter().all(|x| x.is_zero()));
        let mut img = Echelon::new(m * n);
        for t in relations.complement_indices() {
            img.insert(&f, self.can_image(t / m, t % m));
        }
        RelativeGalois {
            invariant_dim: b.dim(),
            relative_tensor_dim: tensor_dim,
            can_rank: img.rank(),
            target_dim: m * n,
            well_defined,
            surjective: img.rank() == m * n,
            bijective: well_defined && img.rank() == m * n && tensor_dim == m * n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeGalois {
    pub invariant_dim: usize,
    pub relative_tensor_dim: usize,
    pub can_rank: usize,
    pub target_dim: usize,
    pub well_defined: bool,
    pub surjective: bool,
    pub bijective: bool,
}

/// `H`-valued `R`-cocycle: `values[h n + g] = σ(h ⊗ g) ∈ R`.
#[derive(Clone, Debug)]
pub struct Cocycle {
    pub hopf: HopfAlgebra,
    pub target: SCAlgebra,
    pub values: Vec<Vec<Fe>>,
}

impl Cocycle {
    pub fn new(hopf: HopfAlgebra, target: SCAlgebra, values: Vec<Vec<Fe>>) -> Result<Cocycle> {
        let n = hopf.dim();
        if values.len() != n * n || values.iter().any(|v| v.len() != target.dim()) {
            return Err(Error::ShapeMismatch(format!("cocycle needs {} values of length {}", n * n, target.dim())));
        }
        if hopf.field() != target.field() {
            return Err(Error::FieldMismatch(hopf.field().to_string(), target.field().to_string()));
        }
        Ok(Cocycle { hopf, target, values })
    }

    /// `ε ⊗ ε · 1`.
    pub fn trivial(hopf: &HopfAlgebra, target: &SCAlgebra) -> Cocycle {
        let n = hopf.dim();
        let f = hopf.field();
        let eps = hopf.counit();
        let values = (0..n * n).map(|t| target.scale_vec(target.unit(), f.mul(eps[t / n], eps[t % n]))).collect();
        Cocycle { hopf: hopf.clone(), target: target.clone(), values }
    }

    pub fn value(&self, h: usize, g: usize) -> &[Fe] {
        &self.values[h * self.hopf.dim() + g]
    }

    /// `σ` extended bilinearly to `x ⊗ y`.
    pub fn eval(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let f = self.target.field();
        let mut out = self.target.zero_vec();
        for (h, &xh) in x.iter().enumerate() {
            if xh.is_zero() {
                continue;
            }
            for (g, &yg) in y.iter().enumerate() {
                if !yg.is_zero() {
                    f.axpy(&mut out, f.mul(xh, yg), self.value(h, g));
                }
            }
        }
        out
    }

    /// `σ` as a map `H ⊗ H → R` (column `h n + g`).
    pub fn as_map(&self) -> LinMap {
        Matrix::from_cols(&self.values, self.target.dim())
    }

    pub fn from_map(hopf: &HopfAlgebra, target: &SCAlgebra, map: &LinMap) -> Cocycle {
        let values = (0..map.cols).map(|c| map.col(c)).collect();
        Cocycle { hopf: hopf.clone(), target: target.clone(), values }
    }

    /// `Σ σ(h₁,g₁) ⊗ h₂g₂ ∈ R ⊗ H`, dense (index `r n + u`).
    fn twisted_basis_product(&self, h: usize, g: usize) -> Vec<Fe> {
        let n = self.hopf.dim();
        let r = self.target.dim();
        let f = self.target.field();
        let mut out = vec![Fe::ZERO; r * n];
        for &(h1, h2, c1) in &self.hopf.coalg.comul[h] {
            for &(g1, g2, c2) in &self.hopf.coalg.comul[g] {
                let c = f.mul(c1, c2);
                let s = self.value(h1, g1);
                let prod = self.hopf.alg.product(h2, g2);
                for (a, &sa) in s.iter().enumerate() {
                    if !sa.is_zero() {
                        f.axpy(&mut out[a * n..(a + 1) * n], f.mul(c, sa), prod);
                    }
                }
            }
        }
        out
    }

    /// Normalization, the cocycle identity on all basis triples,
    /// commutativity of the target and convolution invertibility.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.hopf.dim();
        let r = self.target.dim();
        let f = self.target.field().clone();
        let mut out = Vec::new();
        if !self.target.is_commutative() {
            out.push(Violation::new("target commutative", &[]));
        }
        let one = self.hopf.alg.unit().to_vec();
        let eps = self.hopf.counit();
        for h in 0..n {
            let e = unit_vec(n, h);
            let expect = self.target.scale_vec(self.target.unit(), eps[h]);
            if self.eval(&e, &one) != expect || self.eval(&one, &e) != expect {
                out.push(Violation::new("normalization", &[h]));
            }
        }
        // σ(h₁,g₁)σ(h₂g₂,k) = σ(g₁,k₁)σ(h,g₂k₂)
        let products: Vec<Vec<Fe>> =
            (0..n * n).map(|t| self.twisted_basis_product(t / n, t % n)).collect();
        let contract_left = |p: &[Fe], k: usize| -> Vec<Fe> {
            let mut acc = vec![Fe::ZERO; r];
            for a in 0..r {
                for u in 0..n {
                    let c = p[a * n + u];
                    if !c.is_zero() {
                        let prod = self.target.mul_vec(&unit_vec(r, a), self.value(u, k));
                        f.axpy(&mut acc, c, &prod);
                    }
                }
            }
            acc
        };
        let contract_right = |p: &[Fe], h: usize| -> Vec<Fe> {
            let mut acc = vec![Fe::ZERO; r];
            for a in 0..r {
                for u in 0..n {
                    let c = p[a * n + u];
                    if !c.is_zero() {
                        let prod = self.target.mul_vec(&unit_vec(r, a), self.value(h, u));
                        f.axpy(&mut acc, c, &prod);
                    }
                }
            }
            acc
        };
        for h in 0..n {
            for g in 0..n {
                for k in 0..n {
                    let lhs = contract_left(&products[h * n + g], k);
                    let rhs = contract_right(&products[g * n + k], h);
                    if lhs != rhs {
                        out.push(Violation::new("cocycle", &[h, g, k]));
                    }
                }
            }
        }
        let sq = self.hopf.coalg.tensor_square();
        if conv_inverse(&sq, &self.target, &self.as_map()).is_err() {
            out.push(Violation::new("convolution invertible", &[]));
        }
        out
    }

    pub fn inverse_map(&self) -> Result<LinMap> {
        conv_inverse(&self.hopf.coalg.tensor_square(), &self.target, &self.as_map())
    }
}

/// The algebra `R_σ[H]` on `r_a ⊗ h_u` (index `a n + u`).
pub fn twisted_product(sigma: &Cocycle, convention: Eq3Convention) -> Result<SCAlgebra> {
    let v = sigma.verify();
    if !v.is_empty() {
        return Err(Error::CocycleInvalid(describe(&v)));
    }
    twisted_product_unchecked(sigma, convention)
}

fn twisted_product_unchecked(sigma: &Cocycle, convention: Eq3Convention) -> Result<SCAlgebra> {
    let n = sigma.hopf.dim();
    let r = sigma.target.dim();
    let f = sigma.target.field().clone();
    let dim = r * n;
    let products: Vec<Vec<Fe>> = (0..n * n).map(|t| sigma.twisted_basis_product(t / n, t % n)).collect();
    let mut unit = vec![Fe::ZERO; dim];
    for (a, &ra) in sigma.target.unit().iter().enumerate() {
        for (u, &hu) in sigma.hopf.alg.unit().iter().enumerate() {
            unit[a * n + u] = f.mul(ra, hu);
        }
    }
    let labels = Some(
        (0..dim).map(|t| format!("{}#{}", sigma.target.label(t / n), sigma.hopf.alg.label(t % n))).collect(),
    );
    let alg = SCAlgebra::from_fn(f.clone(), dim, unit, labels, |x, y| {
        let (x, y) = match convention {
            Eq3Convention::Standard => (x, y),
            Eq3Convention::Paper => (y, x),
        };
        let (a, h) = (x / n, x % n);
        let (b, g) = (y / n, y % n);
        let ab = sigma.target.product(a, b);
        let p = &products[h * n + g];
        let mut out = vec![Fe::ZERO; dim];
        for c in 0..r {
            for u in 0..n {
                let coef = p[c * n + u];
                if coef.is_zero() {
                    continue;
                }
                let rc = sigma.target.mul_vec(ab, &unit_vec(r, c));
                for (d, &rd) in rc.iter().enumerate() {
                    if !rd.is_zero() {
                        let t = &mut out[d * n + u];
                        *t = f.add(*t, f.mul(coef, rd));
                    }
                }
            }
        }
        out
    })?;
    let v = alg.verify();
    if !v.is_empty() {
        return Err(Error::CocycleInvalid(format!("twisted product not associative: {}", describe(&v))));
    }
    Ok(alg)
}

fn describe(v: &[Violation]) -> String {
    let shown: Vec<String> = v.iter().take(5).map(|x| format!("{} at {:?}", x.axiom, x.indices)).collect();
    format!("{} violation(s): {}", v.len(), shown.join("; "))
}

/// `τ(h⊗g) = u⁻¹(g₁)u⁻¹(h₁)σ(h₂⊗g₂)u(h₃g₃)` and the isomorphism
/// `a⊗h ↦ a u(h₁) ⊗ h₂` from `R_σ[H]` to `R_τ[H]`.
pub fn cocycle_transform(sigma: &Cocycle, u: &LinMap, convention: Eq3Convention) -> Result<(Cocycle, LinMap)> {
    let h = &sigma.hopf;
    let rr = &sigma.target;
    let n = h.dim();
    let r = rr.dim();
    let f = rr.field().clone();
    let u_inv = conv_inverse(&h.coalg, rr, u)?;
    let ucols: Vec<Vec<Fe>> = (0..n).map(|i| u.col(i)).collect();
    let uicols: Vec<Vec<Fe>> = (0..n).map(|i| u_inv.col(i)).collect();
    let u_of = |x: &[Fe]| u.mul_vec(&f, x);
    let mut values = Vec::with_capacity(n * n);
    for hh in 0..n {
        for gg in 0..n {
            let mut acc = vec![Fe::ZERO; r];
            for &(h1, h23, c1) in &h.coalg.comul[hh] {
                for &(h2, h3, c2) in &h.coalg.comul[h23] {
                    for &(g1, g23, c3) in &h.coalg.comul[gg] {
                        for &(g2, g3, c4) in &h.coalg.comul[g23] {
                            let c = f.mul(f.mul(c1, c2), f.mul(c3, c4));
                            let mut v = rr.mul_vec(&uicols[g1], &uicols[h1]);
                            v = rr.mul_vec(&v, sigma.value(h2, g2));
                            v = rr.mul_vec(&v, &u_of(h.alg.product(h3, g3)));
                            f.axpy(&mut acc, c, &v);
                        }
                    }
                }
            }
            values.push(acc);
        }
    }
    let tau = Cocycle::new(h.clone(), rr.clone(), values)?;
    let dim = r * n;
    let cols: Vec<Vec<Fe>> = (0..dim)
        .map(|t| {
            let (a, hh) = (t / n, t % n);
            let mut out = vec![Fe::ZERO; dim];
            for &(h1, h2, c) in &h.coalg.comul[hh] {
                let au = rr.mul_vec(&unit_vec(r, a), &ucols[h1]);
                for (d, &x) in au.iter().enumerate() {
                    if !x.is_zero() {
                        let s = &mut out[d * n + h2];
                        *s = f.add(*s, f.mul(c, x));
                    }
                }
            }
            out
        })
        .collect();
    let iso = Matrix::from_cols(&cols, dim);
    let src = twisted_product(sigma, convention)?;
    let dst = twisted_product(&tau, convention)?;
    if !src.is_algebra_map(&iso, &dst) || iso.rank(&f) != dim {
        return Err(Error::NotAlgebraMap("transform map is not an algebra isomorphism".into()));
    }
    Ok((tau, iso))
}

/// `f ∘ σ` for a unital algebra map `f: R → S` (columns = images of the basis of R).
pub fn cocycle_pushforward(sigma: &Cocycle, map: &LinMap, target: &SCAlgebra) -> Result<Cocycle> {
    if !sigma.target.is_algebra_map(map, target) {
        return Err(Error::NotAlgebraMap("pushforward map is not a unital algebra map".into()));
    }
    if !target.is_commutative() {
        return Err(Error::NotAlgebraMap("target of the pushforward is not commutative".into()));
    }
    let f = target.field();
    let values = sigma.values.iter().map(|v| map.mul_vec(f, v)).collect();
    let tau = Cocycle::new(sigma.hopf.clone(), target.clone(), values)?;
    let v = tau.verify();
    if !v.is_empty() {
        return Err(Error::CocycleInvalid(describe(&v)));
    }
    Ok(tau)
}

/// Pushforward along a field inclusion `F → E`, with both regarded as
/// one-dimensional algebras; the cocycle is re-expressed over `E`.
pub fn cocycle_extend_field(sigma: &Cocycle, ext: &Field) -> Result<Cocycle> {
    let emb = sigma.target.field().embedding_into(ext)?;
    let hopf = extend_hopf(&sigma.hopf, ext)?;
    let target = sigma.target.extend_scalars(ext)?;
    let values = sigma.values.iter().map(|v| emb.map_vec(v)).collect();
    Cocycle::new(hopf, target, values)
}

pub fn extend_hopf(h: &HopfAlgebra, ext: &Field) -> Result<HopfAlgebra> {
    let emb = h.field().embedding_into(ext)?;
    let alg = h.alg.extend_scalars(ext)?;
    let comul = h.coalg.comul.iter().map(|t| t.iter().map(|&(j, k, c)| (j, k, emb.map(c))).collect()).collect();
    let coalg = Coalgebra { field: ext.clone(), comul, counit: emb.map_vec(&h.coalg.counit) };
    let antipode = Matrix { rows: h.antipode.rows, cols: h.antipode.cols, data: emb.map_vec(&h.antipode.data) };
    HopfAlgebra::new(alg, coalg, antipode)
}

/// A convolution-invertible right comodule map `γ: H → A`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub ca: ComoduleAlgebra,
    pub gamma: LinMap,
    pub gamma_inv: LinMap,
}

impl Splitting {
    pub fn new(ca: ComoduleAlgebra, gamma: LinMap) -> Result<Splitting> {
        let inv = conv_inverse(&ca.hopf.coalg, &ca.alg, &gamma)?;
        Splitting::with_inverse(ca, gamma, inv)
    }

    /// Checks the comodule-map identity and both convolution products.
    pub fn with_inverse(ca: ComoduleAlgebra, gamma: LinMap, gamma_inv: LinMap) -> Result<Splitting> {
        let s = Splitting { ca, gamma, gamma_inv };
        if !s.is_comodule_map() {
            return Err(Error::Invalid("splitting is not a right comodule map".into()));
        }
        let unit = s.ca.hopf.conv_unit(&s.ca.alg);
        let c = &s.ca.hopf.coalg;
        if convolution(c, &s.ca.alg, &s.gamma, &s.gamma_inv)? != unit
            || convolution(c, &s.ca.alg, &s.gamma_inv, &s.gamma)? != unit
        {
            return Err(Error::NotConvInvertible);
        }
        Ok(s)
    }

    /// `ρ∘γ = (γ⊗id)∘Δ`.
    pub fn is_comodule_map(&self) -> bool {
        let (m, n) = (self.ca.alg.dim(), self.ca.hopf.dim());
        let f = self.ca.field();
        (0..n).all(|i| {
            let lhs = self.ca.coaction_vec(&self.gamma.col(i));
            let mut rhs = vec![Fe::ZERO; m * n];
            for &(j, k, c) in &self.ca.hopf.coalg.comul[i] {
                for (a, &g) in self.gamma.col(j).iter().enumerate() {
                    if !g.is_zero() {
                        let t = &mut rhs[a * n + k];
                        *t = f.add(*t, f.mul(c, g));
                    }
                }
            }
            lhs == rhs
        })
    }

    fn gamma_of(&self, x: &[Fe]) -> Vec<Fe> {
        self.gamma.mul_vec(self.ca.field(), x)
    }

    fn gamma_inv_of(&self, x: &[Fe]) -> Vec<Fe> {
        self.gamma_inv.mul_vec(self.ca.field(), x)
    }

    /// `γ(h₁)aγ⁻¹(h₂)` for basis `h` and `a ∈ A`.
    pub fn cleft_action(&self, h: usize, a: &[Fe]) -> Vec<Fe> {
        let f = self.ca.field();
        let alg = &self.ca.alg;
        let mut out = alg.zero_vec();
        for &(h1, h2, c) in &self.ca.hopf.coalg.comul[h] {
            let v = alg.mul_vec(&alg.mul_vec(&self.gamma.col(h1), a), &self.gamma_inv.col(h2));
            f.axpy(&mut out, c, &v);
        }
        out
    }

    /// Whether the cleft action on the coinvariants is `h·a = ε(h)a`.
    pub fn cleft_action_is_trivial(&self) -> bool {
        let b = self.ca.coinvariants();
        let eps = self.ca.hopf.counit();
        (0..self.ca.hopf.dim())
            .all(|h| b.basis().iter().all(|a| self.cleft_action(h, a) == self.ca.alg.scale_vec(a, eps[h])))
    }

    /// Whether `o ⊗ h ↦ o γ(h)` is a linear bijection `B ⊗ H → A`.
    pub fn normal_basis_map(&self) -> (Subspace, LinMap) {
        let b = self.ca.coinvariants();
        let n = self.ca.hopf.dim();
        let alg = &self.ca.alg;
        let cols: Vec<Vec<Fe>> = (0..b.dim() * n)
            .map(|t| alg.mul_vec(&b.basis()[t / n], &self.gamma.col(t % n)))
            .collect();
        (b, Matrix::from_cols(&cols, alg.dim()))
    }

    pub fn is_cleft_bijective(&self) -> bool {
        let (_, m) = self.normal_basis_map();
        m.rows == m.cols && m.rank(self.ca.field()) == m.rows
    }
}

/// `σ(h⊗g) = γ(h₁)γ(g₁)γ⁻¹(h₂g₂)`, valued in the coinvariant subalgebra.
pub fn splitting_to_cocycle(s: &Splitting) -> Result<Cocycle> {
    let h = &s.ca.hopf;
    let alg = &s.ca.alg;
    let n = h.dim();
    let f = alg.field().clone();
    let (b_alg, b) = s.ca.coinvariant_algebra()?;
    let mut values = Vec::with_capacity(n * n);
    for hh in 0..n {
        for gg in 0..n {
            let mut acc = alg.zero_vec();
            for &(h1, h2, c1) in &h.coalg.comul[hh] {
                for &(g1, g2, c2) in &h.coalg.comul[gg] {
                    let v = alg.mul_vec(&alg.mul_vec(&s.gamma.col(h1), &s.gamma.col(g1)), &s.gamma_inv_of(h.alg.product(h2, g2)));
                    f.axpy(&mut acc, f.mul(c1, c2), &v);
                }
            }
            let coords = b.coords(&f, &acc).ok_or_else(|| {
                Error::ValuesNotInvariant(format!("σ({}, {}) is not coinvariant", h.alg.label(hh), h.alg.label(gg)))
            })?;
            values.push(coords);
        }
    }
    Cocycle::new(h.clone(), b_alg, values)
}

/// The map `o ⊗ h ↦ o γ(h)` from `B_σ[H]` (basis of `B` as returned by
/// [`ComoduleAlgebra::coinvariant_algebra`]) to `A`.
pub fn reconstruction_map(s: &Splitting) -> LinMap {
    s.normal_basis_map().1
}

/// `(a₁ b S(a₂)) ⊗ a₃` for basis `a`, `b`, as a dense vector on `H ⊗ H`.
fn adjoint_triple(h: &HopfAlgebra, a: usize, b: usize) -> Vec<Fe> {
    let n = h.dim();
    let f = h.field();
    let mut out = vec![Fe::ZERO; n * n];
    for &(a1, a23, c1) in &h.coalg.comul[a] {
        for &(a2, a3, c2) in &h.coalg.comul[a23] {
            let left = h.alg.mul_vec(h.alg.product(a1, b), &h.antipode.col(a2));
            let c = f.mul(c1, c2);
            for (u, &x) in left.iter().enumerate() {
                if !x.is_zero() {
                    let t = &mut out[u * n + a3];
                    *t = f.add(*t, f.mul(c, x));
                }
            }
        }
    }
    out
}

/// `α(a⊗b) = α(a₁bS(a₂)⊗a₃)` on all basis pairs, for `α: H ⊗ H → A`.
pub fn is_equivariant_map(h: &HopfAlgebra, alpha: &LinMap) -> Result<bool> {
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let n = h.dim();
    if alpha.cols != n * n {
        return Err(Error::ShapeMismatch(format!("map has {} columns, expected {}", alpha.cols, n * n)));
    }
    let f = h.field();
    Ok((0..n).all(|a| (0..n).all(|b| alpha.col(a * n + b) == alpha.mul_vec(f, &adjoint_triple(h, a, b)))))
}

/// Both equivariance tests for a splitting: the defining identity
/// `γ(h₁gS(h₂)) = γ(h₁)γ(g)γ⁻¹(h₂)` and the cocycle criterion.
pub fn equivariance_paths(s: &Splitting) -> Result<(bool, bool)> {
    let h = &s.ca.hopf;
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let n = h.dim();
    let f = h.field().clone();
    let alg = &s.ca.alg;
    let direct = (0..n).all(|hh| {
        (0..n).all(|g| {
            let mut lhs = alg.zero_vec();
            let mut rhs = alg.zero_vec();
            for &(h1, h2, c) in &h.coalg.comul[hh] {
                let x = h.alg.mul_vec(h.alg.product(h1, g), &h.antipode.col(h2));
                f.axpy(&mut lhs, c, &s.gamma_of(&x));
                let y = alg.mul_vec(&alg.mul_vec(&s.gamma.col(h1), &s.gamma.col(g)), &s.gamma_inv.col(h2));
                f.axpy(&mut rhs, c, &y);
            }
            lhs == rhs
        })
    });
    let sigma = splitting_to_cocycle(s)?;
    let via_cocycle = is_equivariant_map(h, &sigma.as_map())?;
    Ok((direct, via_cocycle))
}

pub fn is_equivariant_splitting(s: &Splitting) -> Result<bool> {
    let (direct, via) = equivariance_paths(s)?;
    if direct != via {
        return Err(Error::PredictionFailed(format!(
            "equivariance: direct identity gives {direct}, cocycle criterion gives {via}"
        )));
    }
    Ok(direct)
}

/// Whether `x` is central in `R_σ[H]`.
pub fn is_central_in_twisted(sigma: &Cocycle, x: &[Fe], convention: Eq3Convention) -> Result<bool> {
    let a = twisted_product(sigma, convention)?;
    Ok(a.commutes_with_all(x))
}

/// Centrality of `x` in `A_τ[H]` and in `A_π[H]`, given that `τ ∗ π⁻¹` is equivariant.
pub fn lemma25_transfer_check(tau: &Cocycle, pi: &Cocycle, x: &[Fe], convention: Eq3Convention) -> Result<(bool, bool)> {
    let h = &tau.hopf;
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let sq = h.coalg.tensor_square();
    let pi_inv = pi.inverse_map()?;
    let quotient = convolution(&sq, &tau.target, &tau.as_map(), &pi_inv)?;
    if !is_equivariant_map(h, &quotient)? {
        return Err(Error::PremiseFailed("τ ∗ π⁻¹ is not equivariant".into()));
    }
    Ok((is_central_in_twisted(tau, x, convention)?, is_central_in_twisted(pi, x, convention)?))
}

/// `T = (id ⊗ Λ)∘ρ` on each basis element of `A`.
fn trace_values(ca: &ComoduleAlgebra, lambda: &[Fe]) -> Vec<Vec<Fe>> {
    let f = ca.field();
    (0..ca.alg.dim())
        .map(|i| {
            let mut v = ca.alg.zero_vec();
            for &(j, k, c) in &ca.coaction[i] {
                v[j] = f.add(v[j], f.mul(c, lambda[k]));
            }
            v
        })
        .collect()
}

/// `s(x,y) = x₀y₀Λ(x₁y₁)`, every value checked to be a scalar.
pub fn frobenius_form(ca: &ComoduleAlgebra, lambda: &[Fe]) -> Result<BilForm> {
    let f = ca.field().clone();
    let m = ca.alg.dim();
    let unit = ca.alg.unit();
    let pivot = unit.iter().position(|x| !x.is_zero()).expect("nonzero unit");
    let inv = f.inv(unit[pivot])?;
    let t: Vec<Fe> = trace_values(ca, lambda)
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let s = f.mul(v[pivot], inv);
            if ca.alg.scale_vec(unit, s) == v {
                Ok(s)
            } else {
                Err(Error::ValueNotInvariant(format!("T({}) is not a scalar", ca.alg.label(k))))
            }
        })
        .collect::<Result<_>>()?;
    let mut mat = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            mat.set(i, j, f.dot(ca.alg.product(i, j), &t));
        }
    }
    Ok(BilForm { field: f, matrix: mat })
}

/// The form `s(x,y) = T(xy)` valued in the coinvariants `B`, reported as
/// the rank of `x ↦ s(x, ·)` over the base field.
pub fn frobenius_form_relative(ca: &ComoduleAlgebra, lambda: &[Fe]) -> Result<RelativeForm> {
    let f = ca.field().clone();
    let m = ca.alg.dim();
    let b = ca.coinvariants();
    let t: Vec<Vec<Fe>> = trace_values(ca, lambda)
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            b.coords(&f, &v)
                .ok_or_else(|| Error::ValueNotInvariant(format!("T({}) is not coinvariant", ca.alg.label(k))))
        })
        .collect::<Result<_>>()?;
    let r = b.dim();
    let mut rows = Vec::with_capacity(m);
    let mut symmetric = true;
    for i in 0..m {
        let mut row = Vec::with_capacity(m * r);
        for j in 0..m {
            let mut v = vec![Fe::ZERO; r];
            for (k, &c) in ca.alg.product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    f.axpy(&mut v, c, &t[k]);
                }
            }
            row.extend(v);
        }
        rows.push(row);
    }
    for i in 0..m {
        for j in 0..m {
            if rows[i][j * r..(j + 1) * r] != rows[j][i * r..(i + 1) * r] {
                symmetric = false;
            }
        }
    }
    let rank = Matrix::from_rows(rows, m * r).rank(&f);
    Ok(RelativeForm { invariant_dim: r, rank, dim: m, symmetric })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeForm {
    pub invariant_dim: usize,
    pub rank: usize,
    pub dim: usize,
    pub symmetric: bool,
}

/// `kG` coacted on by `k[G/N]` through the quotient map, together with the
/// splitting sending each coset to a chosen representative.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    pub group: HopfAlgebra,
    pub quotient: HopfAlgebra,
    /// Coset index of each group element.
    pub coset: Vec<usize>,
    pub representatives: Vec<usize>,
    pub ca: ComoduleAlgebra,
}

impl GroupExtension {
    /// `subgroup` lists the elements of a normal subgroup; cosets are ordered
    /// by their smallest element, and `section` (default: smallest element)
    /// picks the representatives.
    pub fn new(field: &Field, table: &[Vec<usize>], subgroup: &[usize], section: Option<&[usize]>) -> Result<Self> {
        let group = group_algebra(field, table)?;
        let n = table.len();
        let mut sub = subgroup.to_vec();
        sub.sort_unstable();
        sub.dedup();
        if sub.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("subgroup element out of range".into()));
        }
        for &a in &sub {
            for &b in &sub {
                if sub.binary_search(&table[a][b]).is_err() {
                    return Err(Error::NotAGroup("subgroup is not closed".into()));
                }
            }
        }
        let mut coset = vec![usize::MAX; n];
        let mut mins = Vec::new();
        for g in 0..n {
            if coset[g] != usize::MAX {
                continue;
            }
            let idx = mins.len();
            mins.push(g);
            for &s in &sub {
                coset[table[g][s]] = idx;
            }
        }
        // normality: left cosets equal right cosets
        for g in 0..n {
            for &s in &sub {
                if coset[table[s][g]] != coset[g] {
                    return Err(Error::NotAGroup("subgroup is not normal".into()));
                }
            }
        }
        let q = mins.len();
        let qtable: Vec<Vec<usize>> =
            (0..q).map(|a| (0..q).map(|b| coset[table[mins[a]][mins[b]]]).collect()).collect();
        let quotient = group_algebra(field, &qtable)?;
        let representatives = match section {
            Some(sec) => {
                if sec.len() != q || sec.iter().enumerate().any(|(i, &g)| g >= n || coset[g] != i) {
                    return Err(Error::Invalid("section does not pick one element per coset".into()));
                }
                sec.to_vec()
            }
            None => mins,
        };
        let coaction = (0..n).map(|g| vec![(g, coset[g], Fe::ONE)]).collect();
        let ca = ComoduleAlgebra::new(group.alg.clone(), quotient.clone(), coaction)?;
        Ok(GroupExtension { group, quotient, coset, representatives, ca })
    }

    pub fn splitting(&self) -> Result<Splitting> {
        let n = self.group.dim();
        let cols: Vec<Vec<Fe>> = self.representatives.iter().map(|&g| unit_vec(n, g)).collect();
        Splitting::new(self.ca.clone(), Matrix::from_cols(&cols, n))
    }

    /// A splitting with each representative scaled by the given nonzero factor.
    pub fn scaled_splitting(&self, scales: &[Fe]) -> Result<Splitting> {
        let n = self.group.dim();
        let cols: Vec<Vec<Fe>> = self
            .representatives
            .iter()
            .zip(scales)
            .map(|(&g, &c)| {
                let mut v = vec![Fe::ZERO; n];
                v[g] = c;
                v
            })
            .collect();
        Splitting::new(self.ca.clone(), Matrix::from_cols(&cols, n))
    }
}

/// Cocycle JSON: `{"hopf": …, "target": …, "values": [[…]]}`; `values[h][g]`
/// is the coordinate vector of `σ(h ⊗ g)` in the target algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    pub hopf: HopfSource,
    pub target: AlgebraJson,
    pub values: Vec<Vec<Vec<ScalarRepr>>>,
}

/// A Hopf algebra given in full or as a group table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfSource {
    Group(GroupJson),
    Full(Box<HopfJson>),
}

impl HopfSource {
    pub fn build(&self) -> Result<HopfAlgebra> {
        match self {
            HopfSource::Group(g) => g.build(),
            HopfSource::Full(h) => h.build(),
        }
    }
}

impl CocycleJson {
    pub fn build(&self) -> Result<Cocycle> {
        let hopf = self.hopf.build()?;
        let target = self.target.build()?;
        let f = target.field().clone();
        let n = hopf.dim();
        if self.values.len() != n {
            return Err(Error::ShapeMismatch(format!("values has {} rows, expected {n}", self.values.len())));
        }
        let mut values = Vec::with_capacity(n * n);
        for (h, row) in self.values.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!("values[{h}] has {} entries, expected {n}", row.len())));
            }
            for (g, v) in row.iter().enumerate() {
                values.push(vec_in(&f, v, target.dim(), &format!("values[{h}][{g}]"))?);
            }
        }
        Cocycle::new(hopf, target, values)
    }

    pub fn from_cocycle(c: &Cocycle) -> CocycleJson {
        let f = c.target.field();
        let n = c.hopf.dim();
        CocycleJson {
            hopf: HopfSource::Full(Box::new(HopfJson::from_hopf(&c.hopf))),
            target: AlgebraJson::from_algebra(&c.target),
            values: (0..n).map(|h| (0..n).map(|g| vec_out(f, c.value(h, g))).collect()).collect(),
        }
    }
}

/// Splitting JSON for group extensions:
/// `{"order", "table", "field"?, "subgroup": […], "section"?: […]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSplittingJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub subgroup: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Vec<usize>>,
    /// Optional scale factor per coset applied to the section.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scales: Option<Vec<ScalarRepr>>,
}

impl GroupSplittingJson {
    pub fn build(&self) -> Result<(GroupExtension, Splitting)> {
        if self.table.len() != self.order {
            return Err(Error::NotAGroup(format!("order {} but {} table rows", self.order, self.table.len())));
        }
        let field = match &self.field {
            Some(s) => s.build()?,
            None => Field::prime(3)?,
        };
        let ext = GroupExtension::new(&field, &self.table, &self.subgroup, self.section.as_deref())?;
        let split = match &self.scales {
            Some(s) => {
                let q = ext.quotient.dim();
                let scales = vec_in(&field, s, q, "scales")?;
                ext.scaled_splitting(&scales)?
            }
            None => ext.splitting()?,
        };
        Ok((ext, split))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_table, left_integral_dual, s3_table};

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn z2_cocycle(c: u32) -> Cocycle {
        let h = group_algebra(&f3(), &cyclic_table(2)).unwrap();
        let r = SCAlgebra::scalars(&f3());
        let values = vec![vec![Fe(1)], vec![Fe(1)], vec![Fe(1)], vec![Fe(c)]];
        Cocycle::new(h, r, values).unwrap()
    }

    #[test]
    fn z2_cocycles_verify() {
        assert!(z2_cocycle(2).verify().is_empty());
        assert!(z2_cocycle(1).verify().is_empty());
        let mut bad = z2_cocycle(2);
        bad.values[0] = vec![Fe(2)];
        assert!(!bad.verify().is_empty());
    }

    #[test]
    fn twisted_z2_is_f9() {
        for conv in [Eq3Convention::Paper, Eq3Convention::Standard] {
            let a = twisted_product(&z2_cocycle(2), conv).unwrap();
            let g = a.basis_vec(1);
            let mp = a.min_poly(&g);
            assert_eq!(mp, crate::poly::Poly::from_ints(&f3(), &[-2, 0, 1]));
            assert!(mp.is_irreducible().unwrap());
        }
    }

    #[test]
    fn z4_over_z2() {
        let ext = GroupExtension::new(&f3(), &cyclic_table(4), &[0, 2], None).unwrap();
        assert!(ext.ca.verify().is_empty());
        let b = ext.ca.coinvariants();
        assert_eq!(b.dim(), 2);
        let s = ext.splitting().unwrap();
        let sigma = splitting_to_cocycle(&s).unwrap();
        assert!(sigma.verify().is_empty());
        // σ(ḡ, ḡ) = g² in the basis of B = span{1, g²}
        assert_eq!(sigma.value(1, 1), &[Fe(0), Fe(1)]);
        let rebuilt = twisted_product(&sigma, Eq3Convention::Standard).unwrap();
        assert!(rebuilt.is_algebra_map(&reconstruction_map(&s), &ext.ca.alg));
        assert!(s.is_cleft_bijective());
        assert!(is_equivariant_splitting(&s).unwrap());
        assert!(s.cleft_action_is_trivial());
        let rel = ext.ca.galois_check_relative();
        assert!(rel.bijective);
    }

    #[test]
    fn s3_over_a3_has_nontrivial_action() {
        let ext = GroupExtension::new(&f3(), &s3_table(), &[0, 1, 2], None).unwrap();
        let s = ext.splitting().unwrap();
        assert!(!s.cleft_action_is_trivial());
    }

    #[test]
    fn scaled_sections_of_abelian_quotient_stay_equivariant() {
        let ext = GroupExtension::new(&Field::prime(5).unwrap(), &s3_table(), &[0, 1, 2], None).unwrap();
        let s = ext.scaled_splitting(&[Fe(1), Fe(2)]).unwrap();
        assert_eq!(equivariance_paths(&s).unwrap(), (true, true));
    }

    #[test]
    fn non_central_representative_breaks_equivariance() {
        // identity coset sent to a 3-cycle, which conjugation by a transposition moves
        let ext = GroupExtension::new(&f3(), &s3_table(), &[0, 1, 2], Some(&[1, 3])).unwrap();
        let s = ext.splitting().unwrap();
        assert_eq!(equivariance_paths(&s).unwrap(), (false, false));
    }

    #[test]
    fn trivial_coaction_invariants_and_galois() {
        let h = group_algebra(&f3(), &cyclic_table(2)).unwrap();
        let a = SCAlgebra::matrix_algebra(&f3(), 2).unwrap();
        let ca = ComoduleAlgebra::trivial(a, h.clone()).unwrap();
        assert_eq!(ca.coinvariants().dim(), 4);
        assert_eq!(ca.galois_check(), Err(Error::InvariantsNotCentralScalars(4)));
        let reg = ComoduleAlgebra::regular(&h);
        assert!(reg.galois_check().unwrap());
    }

    #[test]
    fn relative_frobenius_rank_for_z4() {
        let ext = GroupExtension::new(&f3(), &cyclic_table(4), &[0, 2], None).unwrap();
        let lambda = left_integral_dual(&ext.quotient).unwrap();
        let r = frobenius_form_relative(&ext.ca, &lambda).unwrap();
        assert_eq!((r.rank, r.dim, r.invariant_dim), (4, 4, 2));
        assert!(r.symmetric);
    }

    #[test]
    fn cocycle_json_round_trip() {
        let c = z2_cocycle(2);
        let text = serde_json::to_string(&CocycleJson::from_cocycle(&c)).unwrap();
        let back: CocycleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap().values, c.values);
        let short = r#"{"hopf": {"order": 2, "table": [[0,1],[1,0]]}, "target": {"field": {"p": 3}, "dim": 1, "unit": [1], "mul": [[[1]]]}, "values": [[[1],[1]],[[1],[2]]]}"#;
        let parsed: CocycleJson = serde_json::from_str(short).unwrap();
        assert!(parsed.build().unwrap().verify().is_empty());
    }
}
