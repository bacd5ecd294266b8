#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::{form_rank, DEFAULT_DIM_CAP, DEFAULT_SPLITTING_CAP};
use crate::field::{Fe, Field, FieldSpec};
use crate::galois::{frobenius_form, is_equivariant_splitting};
use crate::hopf::{is_integral_dual, left_integral_dual, HopfAlgebra};
use crate::reslie::{fiber_algebra_capped, fiber_coaction_with, pbw_splitting, u_restricted_over, FiberPoint, RestrictedLie};

use super::{classify_point, kind_of, sl2_eq4_check, LieKind, Stratum};

pub const MAX_POINTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ScanOptions {
    pub dim_cap: usize,
    pub splitting_cap: u32,
    /// Also evaluate whether the PBW splitting is equivariant (recorded, never asserted).
    pub record_equivariance: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { dim_cap: DEFAULT_DIM_CAP, splitting_cap: DEFAULT_SPLITTING_CAP, record_equivariance: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub field: FieldSpec,
    /// Coordinates as coefficient vectors, low degree first.
    pub lambda: Vec<Vec<u32>>,
}

impl PointJson {
    pub fn from_point(p: &FiberPoint) -> PointJson {
        PointJson { field: p.field.spec(), lambda: p.coeffs() }
    }

    pub fn build(&self) -> Result<FiberPoint> {
        let f = self.field.build()?;
        let lambda = self.lambda.iter().map(|c| f.from_coeffs(c)).collect::<Result<_>>()?;
        Ok(FiberPoint::new(&f, lambda))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub point: PointJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<Stratum>,
    pub dim: usize,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    /// Number of blocks over a splitting field.
    pub blocks: usize,
    pub block_dims: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub frobenius_rank: usize,
    pub frobenius_symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eq4_pass: Option<bool>,
    pub splitting_degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pbw_equivariant: Option<bool>,
}

pub const CSV_HEADER: [&str; 14] = [
    "point",
    "stratum",
    "dim",
    "center_dim",
    "radical_dim",
    "semisimple",
    "blocks",
    "block_dims",
    "simple_dims",
    "frobenius_rank",
    "frobenius_symmetric",
    "eq4_pass",
    "splitting_degree",
    "pbw_equivariant",
];

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

impl FiberReport {
    /// One CSV row; coordinates are `c0:c1:…` joined by `;`, lists by `;`.
    pub fn csv_row(&self) -> Vec<String> {
        let point = self.point.lambda.iter().map(|c| join(c, ":")).collect::<Vec<_>>().join(";");
        let stratum = self.stratum.map(|s| format!("{s:?}").to_lowercase()).unwrap_or_default();
        vec![
            point,
            stratum,
            self.dim.to_string(),
            self.center_dim.to_string(),
            self.radical_dim.to_string(),
            self.semisimple.to_string(),
            self.blocks.to_string(),
            join(&self.block_dims, ";"),
            join(&self.simple_dims, ";"),
            self.frobenius_rank.to_string(),
            self.frobenius_symmetric.to_string(),
            opt(&self.eq4_pass),
            self.splitting_degree.to_string(),
            opt(&self.pbw_equivariant),
        ]
    }

    /// Same report with the point removed, for comparing points of one stratum.
    pub fn invariants(&self) -> FiberReport {
        let mut r = self.clone();
        r.point.lambda.clear();
        r
    }
}

pub fn reports_to_csv(reports: &[FiberReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in reports {
        w.write_record(r.csv_row()).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Shared per-field data: `u(L)` over the field and its integral.
pub struct ScanContext {
    pub lie: RestrictedLie,
    pub kind: LieKind,
    pub field: Field,
    pub u: HopfAlgebra,
    pub integral: Vec<Fe>,
    pub options: ScanOptions,
}

impl ScanContext {
    pub fn new(lie: &RestrictedLie, field: &Field, options: ScanOptions) -> Result<ScanContext> {
        let n = lie.dim();
        let dim = (lie.p() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        if dim > options.dim_cap as u64 {
            return Err(Error::DimCapExceeded { dim: dim.min(usize::MAX as u64) as usize, cap: options.dim_cap });
        }
        let u = u_restricted_over(lie, field)?;
        // the top PBW coefficient is an integral of the binomial coalgebra
        let mut integral = vec![Fe::ZERO; u.dim()];
        integral[u.dim() - 1] = Fe::ONE;
        if !is_integral_dual(&u, &integral, true) {
            integral = left_integral_dual(&u)?;
        }
        Ok(ScanContext { lie: lie.clone(), kind: kind_of(lie), field: field.clone(), u, integral, options })
    }
}

pub fn analyze_point(ctx: &ScanContext, point: &FiberPoint) -> Result<FiberReport> {
    let emb = point.field.embedding_into(&ctx.field)?;
    let point = FiberPoint::new(&ctx.field, point.lambda.iter().map(|&x| emb.map(x)).collect());
    let fib = fiber_algebra_capped(&ctx.lie, &point, ctx.options.dim_cap)?;
    let br = fib.alg.analyze(ctx.options.splitting_cap)?;
    let ca = fiber_coaction_with(&fib, &ctx.u)?;
    let form = frobenius_form(&ca, &ctx.integral)?;
    let (rank, symmetric) = form_rank(&form);
    if rank != fib.dim() {
        return Err(Error::PredictionFailed(format!(
            "Frobenius form has rank {rank} on a fiber of dimension {} at {:?}",
            fib.dim(),
            point.coeffs()
        )));
    }
    let (stratum, eq4_pass) = if ctx.kind == LieKind::Sl2 {
        (Some(classify_point(LieKind::Sl2, &point)?), Some(sl2_eq4_check(&fib)?.pass))
    } else {
        (None, None)
    };
    let pbw_equivariant = if ctx.options.record_equivariance {
        Some(is_equivariant_splitting(&pbw_splitting(&fib, ca)?)?)
    } else {
        None
    };
    Ok(FiberReport {
        point: PointJson::from_point(&point),
        stratum,
        dim: fib.dim(),
        center_dim: br.center_dim,
        radical_dim: br.radical_dim,
        semisimple: br.semisimple,
        blocks: br.split_blocks.len(),
        block_dims: br.split_blocks,
        simple_dims: br.simple_dims,
        frobenius_rank: rank,
        frobenius_symmetric: symmetric,
        eq4_pass,
        splitting_degree: br.splitting_degree,
        pbw_equivariant,
    })
}

/// All points of `field^n`, the lowest coordinate varying fastest.
pub fn all_points(field: &Field, n: usize) -> Result<Vec<FiberPoint>> {
    let q = field.order() as u64;
    let total = q.checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > MAX_POINTS as u64 {
        return Err(Error::TooManyPoints(total.min(usize::MAX as u64) as usize));
    }
    Ok((0..total)
        .map(|mut t| {
            let mut lambda = Vec::with_capacity(n);
            for _ in 0..n {
                lambda.push(Fe((t % q) as u32));
                t /= q;
            }
            FiberPoint::new(field, lambda)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterSummary {
    /// `(center_dim, number of points)`, sorted by dimension.
    pub counts: Vec<(usize, usize)>,
    pub constant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub reports: Vec<FiberReport>,
    pub center_summary: CenterSummary,
}

pub fn center_summary(reports: &[FiberReport]) -> CenterSummary {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for r in reports {
        match counts.iter_mut().find(|c| c.0 == r.center_dim) {
            Some(c) => c.1 += 1,
            None => counts.push((r.center_dim, 1)),
        }
    }
    counts.sort_unstable();
    let constant = counts.len() <= 1;
    CenterSummary { counts, constant }
}

/// Analyze every point (all of `field^n` when `points` is `None`) in
/// parallel; reports come back sorted by coordinates.
pub fn scan(lie: &RestrictedLie, field: &Field, points: Option<Vec<FiberPoint>>, options: ScanOptions) -> Result<ScanResult> {
    let mut points = match points {
        Some(p) => {
            if p.len() > MAX_POINTS {
                return Err(Error::TooManyPoints(p.len()));
            }
            p
        }
        None => all_points(field, lie.dim())?,
    };
    let ctx = ScanContext::new(lie, field, options)?;
    points.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    #[cfg(feature = "parallel")]
    let reports = points.par_iter().map(|p| analyze_point(&ctx, p)).collect::<Result<Vec<_>>>()?;
    #[cfg(not(feature = "parallel"))]
    let reports = points.iter().map(|p| analyze_point(&ctx, p)).collect::<Result<Vec<_>>>()?;
    let center_summary = center_summary(&reports);
    Ok(ScanResult { reports, center_summary })
}
