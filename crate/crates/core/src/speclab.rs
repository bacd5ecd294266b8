//! Worked examples over `sl₂` and the two-dimensional Borel algebra, the
//! spectrum scanner and an independent baby Verma oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, Fe, Field};
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::poly::{splitting_extension, Poly};
use crate::reslie::{Fiber, FiberPoint, RestrictedLie};

mod bundle;
mod scan;
mod verma;

pub use bundle::{group_bundle, z9_over_z3, BundleFiber, GroupBundleReport};
pub use scan::{
    all_points, analyze_point, center_summary, reports_to_csv, scan, CenterSummary, FiberReport, PointJson, ScanContext,
    ScanOptions, ScanResult, CSV_HEADER, MAX_POINTS,
};
pub use verma::{baby_verma_family, baby_verma_oracle, baby_verma_simple_dims, baby_verma_weights, SlModule};

fn check_prime(p: u32) -> Result<Field> {
    if p <= 2 || !is_prime(p as u64) {
        return Err(Error::BadPrime(p));
    }
    Field::prime(p)
}

/// `sl₂` on the basis `e, h, f` with `[e,f] = h`, `[h,e] = −2e`, `[h,f] = 2f`,
/// `e^[p] = f^[p] = 0`, `h^[p] = h`. With these signs `(h+1)² − 4ef` is
/// central in `U(sl₂)`.
pub fn sl2_algebra(p: u32) -> Result<RestrictedLie> {
    let f = check_prime(p)?;
    let n = 3;
    let mut bracket = vec![Fe::ZERO; n * n * n];
    let mut set = |i: usize, j: usize, k: usize, c: i64| {
        bracket[(i * n + j) * n + k] = f.from_i64(c);
        bracket[(j * n + i) * n + k] = f.from_i64(-c);
    };
    set(0, 2, 1, 1);
    set(1, 0, 0, -2);
    set(1, 2, 2, 2);
    let mut pmap = vec![vec![Fe::ZERO; n]; n];
    pmap[1][1] = Fe::ONE;
    RestrictedLie::new(f.clone(), vec!["e".into(), "h".into(), "f".into()], bracket, pmap)
}

/// The nonabelian two-dimensional algebra on `h, e` with `[h,e] = e`,
/// `h^[p] = h`, `e^[p] = 0`.
pub fn borel_algebra(p: u32) -> Result<RestrictedLie> {
    let f = check_prime(p)?;
    let n = 2;
    let mut bracket = vec![Fe::ZERO; n * n * n];
    // [h,e] = e, [e,h] = -e
    bracket[n + 1] = Fe::ONE;
    bracket[n * n + 1] = f.neg(Fe::ONE);
    let mut pmap = vec![vec![Fe::ZERO; n]; n];
    pmap[0][0] = Fe::ONE;
    RestrictedLie::new(f, vec!["h".into(), "e".into()], bracket, pmap)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieKind {
    Sl2,
    Borel,
    Other,
}

impl std::str::FromStr for LieKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<LieKind> {
        match s {
            "sl2" => Ok(LieKind::Sl2),
            "borel" => Ok(LieKind::Borel),
            other => Err(Error::UnknownKind(other.into())),
        }
    }
}

/// Recognize the built-in algebras by exact equality of their structure.
pub fn kind_of(lie: &RestrictedLie) -> LieKind {
    let p = lie.p();
    if sl2_algebra(p).map(|l| &l == lie).unwrap_or(false) {
        LieKind::Sl2
    } else if borel_algebra(p).map(|l| &l == lie).unwrap_or(false) {
        LieKind::Borel
    } else {
        LieKind::Other
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    Regular,
    Cone,
    Zero,
}

/// `x = λ_e`, `y = λ_f`, `z = λ_h`: regular when `z² − 4xy ≠ 0`, cone when
/// it vanishes at a nonzero point.
pub fn classify_point(kind: LieKind, point: &FiberPoint) -> Result<Stratum> {
    if kind != LieKind::Sl2 {
        return Err(Error::UnknownKind(format!("{kind:?} has no stratification")));
    }
    if point.lambda.len() != 3 {
        return Err(Error::ShapeMismatch(format!("sl2 point needs 3 coordinates, got {}", point.lambda.len())));
    }
    if point.is_zero() {
        Ok(Stratum::Zero)
    } else if sl2_discriminant(point).is_zero() {
        Ok(Stratum::Cone)
    } else {
        Ok(Stratum::Regular)
    }
}

/// `z² − 4xy` at the point.
pub fn sl2_discriminant(point: &FiberPoint) -> Fe {
    let f = &point.field;
    let (x, z, y) = (point.lambda[0], point.lambda[1], point.lambda[2]);
    f.sub(f.mul(z, z), f.mul(f.from_i64(4), f.mul(x, y)))
}

#[derive(Clone, Debug)]
pub struct CentralElements {
    pub x: Fe,
    pub y: Fe,
    pub z: Fe,
    /// `(h+1)² − 4ef` as an element of the fiber.
    pub t: Vec<Fe>,
    /// Left multiplication by `t`.
    pub t_matrix: Matrix,
}

fn require_sl2(fib: &Fiber) -> Result<()> {
    if kind_of(&fib.lie) != LieKind::Sl2 {
        return Err(Error::UnknownKind("fiber is not over the built-in sl2".into()));
    }
    Ok(())
}

fn scalar_of(a: &crate::fdalg::SCAlgebra, v: &[Fe], what: &str) -> Result<Fe> {
    let s = v[0];
    if a.scale_vec(a.unit(), s) != v {
        return Err(Error::RelationCheckFailed(format!("{what} is not a scalar")));
    }
    Ok(s)
}

pub fn sl2_central_elements(fib: &Fiber) -> Result<CentralElements> {
    require_sl2(fib)?;
    let a = &fib.alg;
    let f = a.field();
    let p = fib.p() as u64;
    let (e, h, fv) = (fib.generator(0), fib.generator(1), fib.generator(2));
    let x = scalar_of(a, &a.pow_vec(&e, p), "e^p")?;
    let y = scalar_of(a, &a.pow_vec(&fv, p), "f^p")?;
    let z = scalar_of(a, &a.sub_vec(&a.pow_vec(&h, p), &h), "h^p - h")?;
    let h1 = a.add_vec(&h, a.unit());
    let ef = a.mul_vec(&e, &fv);
    let t = a.sub_vec(&a.mul_vec(&h1, &h1), &a.scale_vec(&ef, f.from_i64(4)));
    if !a.commutes_with_all(&t) {
        return Err(Error::RelationCheckFailed("t is not central".into()));
    }
    let t_matrix = a.left_matrix(&t);
    Ok(CentralElements { x, y, z, t, t_matrix })
}

/// `T^p − 2T^{(p+1)/2} + T − d` over the point's field.
pub fn eq4_polynomial(field: &Field, p: u32, d: Fe) -> Poly {
    let mut c = vec![Fe::ZERO; p as usize + 1];
    c[p as usize] = Fe::ONE;
    let mid = (p as usize + 1) / 2;
    c[mid] = field.add(c[mid], field.from_i64(-2));
    c[1] = field.add(c[1], Fe::ONE);
    c[0] = field.neg(d);
    Poly::new(field.clone(), c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eq4Check {
    pub pass: bool,
    /// Field over which the roots are listed.
    pub root_field: crate::field::FieldSpec,
    /// Roots as coefficient vectors, with multiplicity.
    pub roots: Vec<(Vec<u32>, usize)>,
}

impl Eq4Check {
    pub fn distinct_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.roots.iter().map(|r| r.1).collect();
        m.sort_unstable();
        m
    }
}

/// Whether `t` satisfies its degree `p` relation over the `p`-center, and
/// the root profile of that relation.
pub fn sl2_eq4_check(fib: &Fiber) -> Result<Eq4Check> {
    let c = sl2_central_elements(fib)?;
    let a = &fib.alg;
    let f = a.field();
    let p = fib.p();
    let d = f.sub(f.mul(c.z, c.z), f.mul(f.from_i64(4), f.mul(c.x, c.y)));
    let m = eq4_polynomial(f, p, d);
    // evaluate m(t) in the algebra
    let mut acc = a.zero_vec();
    let mut power = a.unit().to_vec();
    for (i, &coef) in m.coeffs().iter().enumerate() {
        if i > 0 {
            power = a.mul_vec(&power, &c.t);
        }
        if !coef.is_zero() {
            acc = a.add_vec(&acc, &a.scale_vec(&power, coef));
        }
    }
    let pass = acc.iter().all(|x| x.is_zero());
    let ext = splitting_extension(&m)?;
    let emb = f.embedding_into(&ext)?;
    let roots = m.embed(&emb).roots().into_iter().map(|(r, k)| (ext.coeffs(r), k)).collect();
    Ok(Eq4Check { pass, root_field: ext.spec(), roots })
}

/// Span of all products of the given square matrices, including the identity.
pub fn generated_algebra(f: &Field, gens: &[Matrix]) -> Vec<Matrix> {
    let n = gens.first().map(|g| g.rows).unwrap_or(0);
    let mut ech = Echelon::new(n * n);
    let mut basis = vec![];
    let mut frontier = vec![Matrix::identity(n)];
    while let Some(m) = frontier.pop() {
        if ech.insert(f, m.data.clone()) {
            for g in gens {
                frontier.push(g.mul(f, &m));
            }
            basis.push(m);
        }
    }
    basis
}

/// Subspace of column vectors spanned by the images of `vs` under all products of `gens`.
pub fn submodule_generated(f: &Field, gens: &[Matrix], vs: &[Vec<Fe>]) -> Subspace {
    let n = gens.first().map(|g| g.rows).unwrap_or(0);
    let mut ech = Echelon::new(n);
    let mut frontier: Vec<Vec<Fe>> = vs.to_vec();
    let mut basis = vec![];
    while let Some(v) = frontier.pop() {
        if ech.insert(f, v.clone()) {
            for g in gens {
                frontier.push(g.mul_vec(f, &v));
            }
            basis.push(v);
        }
    }
    Subspace::span(f, n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_restricted() {
        for p in [3, 5, 7] {
            assert!(sl2_algebra(p).unwrap().verify().is_empty());
            assert!(borel_algebra(p).unwrap().verify().is_empty());
        }
        assert_eq!(sl2_algebra(2), Err(Error::BadPrime(2)));
        assert_eq!(borel_algebra(9), Err(Error::BadPrime(9)));
        assert_eq!(kind_of(&sl2_algebra(5).unwrap()), LieKind::Sl2);
        assert_eq!(kind_of(&borel_algebra(3).unwrap()), LieKind::Borel);
    }

    #[test]
    fn bracket_from_straightening() {
        use crate::reslie::{Pbw, UEnvElement};
        let l = sl2_algebra(3).unwrap();
        let f = l.field().clone();
        let mut pbw = Pbw::new(&l, &f);
        let he = pbw.normalize_word(&[1, 0], Fe::ONE).unwrap();
        let eh = pbw.normalize_word(&[0, 1], Fe::ONE).unwrap();
        let mut diff = he;
        diff.add_scaled(&f, &eh, f.neg(Fe::ONE));
        assert_eq!(diff, UEnvElement::monomial(vec![1, 0, 0], f.from_i64(-2)));
    }

    #[test]
    fn strata() {
        let f = Field::prime(3).unwrap();
        let pt = |v: [u32; 3]| FiberPoint::new(&f, v.iter().map(|&x| Fe(x)).collect());
        assert_eq!(classify_point(LieKind::Sl2, &pt([0, 1, 0])).unwrap(), Stratum::Regular);
        assert_eq!(classify_point(LieKind::Sl2, &pt([1, 0, 0])).unwrap(), Stratum::Cone);
        assert_eq!(classify_point(LieKind::Sl2, &pt([0, 0, 0])).unwrap(), Stratum::Zero);
        assert!(matches!(classify_point(LieKind::Borel, &pt([0, 0, 0])), Err(Error::UnknownKind(_))));
        assert!(matches!("gl3".parse::<LieKind>(), Err(Error::UnknownKind(_))));
    }

    #[test]
    fn central_elements_and_relation() {
        let l = sl2_algebra(3).unwrap();
        let f = l.field().clone();
        let point = FiberPoint::new(&f, vec![Fe(0), Fe(1), Fe(0)]);
        let fib = crate::reslie::fiber_algebra(&l, &point).unwrap();
        let c = sl2_central_elements(&fib).unwrap();
        assert_eq!((c.x, c.z, c.y), (Fe(0), Fe(1), Fe(0)));
        let chk = sl2_eq4_check(&fib).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.multiplicities(), vec![1, 1, 1]);

        let cone = FiberPoint::new(&f, vec![Fe(1), Fe(0), Fe(0)]);
        let fib = crate::reslie::fiber_algebra(&l, &cone).unwrap();
        let chk = sl2_eq4_check(&fib).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.roots, vec![(vec![0], 1), (vec![1], 2)]);
    }

    #[test]
    fn t_at_zero_expands_by_straightening() {
        let l = sl2_algebra(3).unwrap();
        let f = l.field().clone();
        let fib = crate::reslie::fiber_algebra(&l, &FiberPoint::zero(&f, 3)).unwrap();
        let c = sl2_central_elements(&fib).unwrap();
        // t = h² + 2h + 1 − ef with 4 ≡ 1
        let mut expect = fib.alg.zero_vec();
        expect[fib.index(&[0, 2, 0])] = Fe(1);
        expect[fib.index(&[0, 1, 0])] = Fe(2);
        expect[0] = Fe(1);
        expect[fib.index(&[1, 0, 1])] = Fe(2);
        assert_eq!(c.t, expect);
    }
}
