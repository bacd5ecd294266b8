use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::galois::{is_equivariant_splitting, GroupExtension};
use crate::hopf::cyclic_table;
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleFiber {
    /// Character values on the subgroup elements, in subgroup order.
    pub character: Vec<u32>,
    pub dim: usize,
    pub center_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupBundleReport {
    /// The splitting by coset representatives is equivariant.
    pub equivariant: bool,
    pub fibers: Vec<BundleFiber>,
    pub center_dim_constant: bool,
}

/// Characters `N → F^×` by exhaustive search over images.
fn characters(field: &Field, table: &[Vec<usize>], subgroup: &[usize]) -> Result<Vec<Vec<Fe>>> {
    let units: Vec<Fe> = field.elements().filter(|x| !x.is_zero()).collect();
    let total = (units.len() as u64).checked_pow(subgroup.len() as u32).unwrap_or(u64::MAX);
    if total > 1 << 20 {
        return Err(Error::Invalid(format!("character search over {total} assignments")));
    }
    let pos = |g: usize| subgroup.iter().position(|&x| x == g);
    let mut out = Vec::new();
    for mut t in 0..total {
        let mut chi = Vec::with_capacity(subgroup.len());
        for _ in subgroup {
            chi.push(units[(t % units.len() as u64) as usize]);
            t /= units.len() as u64;
        }
        let ok = subgroup.iter().enumerate().all(|(i, &a)| {
            subgroup.iter().enumerate().all(|(j, &b)| match pos(table[a][b]) {
                Some(k) => chi[k] == field.mul(chi[i], chi[j]),
                None => false,
            })
        });
        if ok {
            out.push(chi);
        }
    }
    Ok(out)
}

/// Fibers `kG ⊗_{kN} k_χ` of a group algebra over a central subgroup
/// algebra, together with the equivariance of the representative splitting.
pub fn group_bundle(field: &Field, table: &[Vec<usize>], subgroup: &[usize], section: Option<&[usize]>) -> Result<GroupBundleReport> {
    let ext = GroupExtension::new(field, table, subgroup, section)?;
    let equivariant = is_equivariant_splitting(&ext.splitting()?)?;
    let kg = &ext.group.alg;
    let n = table.len();
    let mut fibers = Vec::new();
    for chi in characters(field, table, subgroup)? {
        // ideal generated by n − χ(n)·1; kN is central so one-sided products suffice
        let mut gens = Vec::new();
        for (i, &a) in subgroup.iter().enumerate() {
            let mut v = kg.basis_vec(a);
            v[0] = field.sub(v[0], chi[i]);
            for g in 0..n {
                gens.push(kg.mul_vec(&kg.basis_vec(g), &v));
            }
        }
        let ideal = Subspace::span(field, n, gens);
        if !kg.is_ideal(&ideal) {
            return Err(Error::Invalid("subgroup is not central".into()));
        }
        let fib = kg.quotient(&ideal)?;
        fibers.push(BundleFiber {
            character: chi.iter().map(|&c| c.0).collect(),
            dim: fib.dim(),
            center_dim: fib.center().dim(),
        });
    }
    let center_dim_constant = fibers.windows(2).all(|w| w[0].center_dim == w[1].center_dim);
    Ok(GroupBundleReport { equivariant, fibers, center_dim_constant })
}

/// `F_7[Z/9]` over `F_7[3Z/9]`: three characters, `g³ ↦ 1, 2, 4`.
pub fn z9_over_z3() -> Result<GroupBundleReport> {
    let f7 = Field::prime(7)?;
    group_bundle(&f7, &cyclic_table(9), &[0, 3, 6], None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z9_bundle() {
        let r = z9_over_z3().unwrap();
        assert!(r.equivariant);
        let mut images: Vec<u32> = r.fibers.iter().map(|f| f.character[1]).collect();
        images.sort_unstable();
        assert_eq!(images, vec![1, 2, 4]);
        assert!(r.fibers.iter().all(|f| f.dim == 3 && f.center_dim == 3));
        assert!(r.center_dim_constant);
    }
}
