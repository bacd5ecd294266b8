#![allow(dead_code)]

use hopfgal::fdalg::form_rank;
use hopfgal::galois::frobenius_form;
use hopfgal::hopf::left_integral_dual;
use hopfgal::linalg::Subspace;
use hopfgal::reslie::{
    fiber_coaction_with, normalize_by_rewriting, u_restricted_over, Fiber, Pbw, RewriteStrategy,
};
use hopfgal::speclab::{borel_algebra, sl2_algebra};
use hopfgal::{Fe, Field, HopfAlgebra, Matrix, RestrictedLie, SCAlgebra};

pub type Check = Result<(), String>;

pub fn sl2(p: u32) -> RestrictedLie {
    sl2_algebra(p).unwrap()
}

pub fn borel(p: u32) -> RestrictedLie {
    borel_algebra(p).unwrap()
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The memoized engine and three rewriting orders agree on a word.
pub fn check_confluence(lie: &RestrictedLie, word: &[usize], seed: u64) -> Check {
    let f = lie.field().clone();
    let mut pbw = Pbw::new(lie, &f);
    let engine = pbw.normalize_word(word, Fe::ONE).map_err(|e| e.to_string())?;
    for s in [RewriteStrategy::Leftmost, RewriteStrategy::Rightmost, RewriteStrategy::Random(seed)] {
        let other = normalize_by_rewriting(lie, &f, word, Fe::ONE, s);
        ensure(other == engine, || format!("word {word:?}: {s:?} disagrees with the engine"))?;
    }
    Ok(())
}

fn is_nilpotent(a: &SCAlgebra, ideal: &Subspace) -> bool {
    let f = a.field();
    let mut power = ideal.clone();
    for _ in 0..=a.dim() {
        if power.dim() == 0 {
            return true;
        }
        power = Subspace::span(
            f,
            a.dim(),
            power.basis().iter().flat_map(|x| ideal.basis().iter().map(move |y| a.mul_vec(x, y))),
        );
    }
    power.dim() == 0
}

/// Dimension of `{x ∈ eZ : x^q = x}`, the number of primitive idempotents of `eZ`.
fn fixed_dim(a: &SCAlgebra, center: &Subspace, e: &[Fe]) -> usize {
    let f = a.field();
    let q = f.order() as u64;
    let ez = Subspace::span(f, a.dim(), center.basis().iter().map(|z| a.mul_vec(e, z)));
    let cols: Vec<Vec<Fe>> = ez.basis().iter().map(|x| a.sub_vec(&a.pow_vec(x, q), x)).collect();
    if cols.is_empty() {
        return 0;
    }
    ez.dim() - Matrix::from_cols(&cols, a.dim()).rank(f)
}

/// Radical, central idempotent and Wedderburn identities.
pub fn check_block_invariants(a: &SCAlgebra, splitting_cap: u32) -> Check {
    let f = a.field().clone();
    let n = a.dim();
    let rad = a.radical();
    ensure(a.is_ideal(&rad), || "radical is not a two-sided ideal".into())?;
    ensure(is_nilpotent(a, &rad), || "radical is not nilpotent".into())?;
    if rad.dim() < n {
        let quot = a.quotient(&rad).map_err(|e| e.to_string())?;
        ensure(quot.radical_dim() == 0, || "A/rad A has a nonzero radical".into())?;
    }

    let center = a.center();
    let idem = a.central_idempotents();
    let mut sum = a.zero_vec();
    for (i, e) in idem.iter().enumerate() {
        ensure(a.mul_vec(e, e) == *e, || format!("idempotent {i} is not idempotent"))?;
        ensure(a.commutes_with_all(e), || format!("idempotent {i} is not central"))?;
        for (j, g) in idem.iter().enumerate().skip(i + 1) {
            ensure(a.mul_vec(e, g).iter().all(|x| x.is_zero()), || format!("idempotents {i},{j} not orthogonal"))?;
        }
        ensure(fixed_dim(a, &center, e) == 1, || format!("idempotent {i} is not primitive"))?;
        sum = a.add_vec(&sum, e);
    }
    ensure(sum == a.unit(), || "idempotents do not sum to 1".into())?;

    let report = a.analyze(splitting_cap).map_err(|e| e.to_string())?;
    ensure(report.radical_dim == rad.dim(), || "analyze disagrees with radical()".into())?;
    ensure(report.blocks.len() == idem.len(), || "block count differs from the idempotent count".into())?;
    ensure(report.blocks.iter().sum::<usize>() == n, || "block dims do not sum to dim".into())?;
    ensure(report.split_blocks.iter().sum::<usize>() == n, || "split block dims do not sum to dim".into())?;
    let sq: usize = report.simple_dims.iter().map(|d| d * d).sum();
    ensure(sq + report.radical_dim == n, || format!("Σ d² = {sq}, radical {}, dim {n}", report.radical_dim))?;
    ensure(report.center_dim == a.center().dim(), || "center dim mismatch".into())?;

    // simples are stable one degree past the splitting field
    let deg = f.degree() * report.splitting_degree * 2;
    if (f.p() as u64).pow(deg) < 1 << 20 && n <= 27 {
        let big = Field::new(f.p(), deg).map_err(|e| e.to_string())?;
        let ext = a.extend_scalars(&big).map_err(|e| e.to_string())?;
        let r2 = ext.analyze(splitting_cap).map_err(|e| e.to_string())?;
        ensure(r2.simple_dims == report.simple_dims, || "simples change past the splitting field".into())?;
        ensure(r2.radical_dim == report.radical_dim, || "radical dim changes under extension".into())?;
        ensure(r2.center_dim == report.center_dim, || "center dim changes under extension".into())?;
    }
    Ok(())
}

/// The Frobenius form of a fiber is associative, and nondegenerate.
pub fn check_frobenius(fib: &Fiber, u: &HopfAlgebra, lambda: &[Fe], samples: &[(usize, usize, usize)]) -> Check {
    let ca = fiber_coaction_with(fib, u).map_err(|e| e.to_string())?;
    let form = frobenius_form(&ca, lambda).map_err(|e| e.to_string())?;
    let a = &fib.alg;
    let f = a.field();
    let n = a.dim();
    let s = |x: &[Fe], y: &[Fe]| -> Fe {
        let mut acc = Fe::ZERO;
        for i in 0..n {
            for j in 0..n {
                if !x[i].is_zero() && !y[j].is_zero() {
                    acc = f.add(acc, f.mul(f.mul(x[i], y[j]), form.matrix.get(i, j)));
                }
            }
        }
        acc
    };
    for &(i, j, k) in samples {
        let (x, y, z) = (a.basis_vec(i % n), a.basis_vec(j % n), a.basis_vec(k % n));
        ensure(s(&a.mul_vec(&x, &y), &z) == s(&x, &a.mul_vec(&y, &z)), || format!("s(xy,z) ≠ s(x,yz) at {i},{j},{k}"))?;
    }
    let (rank, _) = form_rank(&form);
    ensure(rank == n, || format!("form rank {rank} < {n}"))
}

/// Left integrals of `H*` by an independent kernel computation: one-dimensional
/// and spanned by `left_integral_dual`.
pub fn check_integral_uniqueness(h: &HopfAlgebra) -> Check {
    let f = h.field().clone();
    let n = h.dim();
    let comul = h.coalg.to_dense();
    // Σ_k c_{i,j,k} λ_k − λ_i u_j = 0 for every i, j
    let mut sys = Matrix::zeros(n * n, n);
    let unit = h.alg.unit();
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                let c = comul[(i * n + j) * n + k];
                sys.set(row, k, f.add(sys.get(row, k), c));
            }
            sys.set(row, i, f.sub(sys.get(row, i), unit[j]));
        }
    }
    let ker = sys.kernel(&f);
    ensure(ker.dim() == 1, || format!("space of left integrals has dim {}", ker.dim()))?;
    let lambda = left_integral_dual(h).map_err(|e| e.to_string())?;
    ensure(ker.contains(&f, &lambda), || "left_integral_dual is not in the solution space".into())?;
    ensure(lambda.iter().find(|x| !x.is_zero()) == Some(&Fe::ONE), || "integral is not normalized".into())
}

pub fn u_of(lie: &RestrictedLie, field: &Field) -> HopfAlgebra {
    u_restricted_over(lie, field).unwrap()
}
