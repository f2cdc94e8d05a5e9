//! The Coxeter transformation on the Grothendieck group.
//!
//! `C` is the integer matrix with `C · dim P_i = -dim I_i`.

use alloc::vec::Vec;

use crate::ar_quiver::ARQuiver;
use crate::derived::{DerivedQuiver, DerivedVertex};
use crate::dynkin::DynkinClass;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Largest Coxeter order searched for, twice the largest table entry.
pub const ORDER_BOUND: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterData {
    /// Columns `dim P_i`.
    pub cartan: IntMatrix,
    /// Columns `dim I_i`.
    pub inj: IntMatrix,
    pub cox: IntMatrix,
    pub order: u32,
}

impl CoxeterData {
    /// `C^t`, also for negative `t`.
    pub fn power(&self, t: i64) -> Result<IntMatrix> {
        let e = t.rem_euclid(i64::from(self.order)) as u32;
        self.cox.checked_pow(e)
    }

    pub fn inverse(&self) -> Result<IntMatrix> {
        self.power(-1)
    }
}

pub fn coxeter_matrix(arq: &ARQuiver) -> Result<CoxeterData> {
    let n = arq.n();
    let column = |v| arq.dim_vector(v).map(<[i64]>::to_vec);
    let p_cols = arq
        .q
        .vertices()
        .map(|i| column(arq.projective(i)))
        .collect::<Result<Vec<_>>>()?;
    let i_cols = arq
        .q
        .vertices()
        .map(|i| column(arq.injective(i)))
        .collect::<Result<Vec<_>>>()?;
    let cartan = IntMatrix::from_columns(n, &p_cols);
    let inj = IntMatrix::from_columns(n, &i_cols);

    let order: Vec<usize> = arq
        .q
        .topological_order()?
        .into_iter()
        .map(|v| v - 1)
        .collect();
    let cartan_inv = cartan
        .unitriangular_inverse(&order)?
        .ok_or(Error::SingularCartan)?;
    let cox = inj.checked_neg()?.checked_mul(&cartan_inv)?;

    let mut power = cox.clone();
    let mut found = None;
    for t in 1..=ORDER_BOUND {
        if power.is_identity() {
            found = Some(t);
            break;
        }
        power = power.checked_mul(&cox)?;
    }
    let order = found.ok_or(Error::OrderBoundExceeded { bound: ORDER_BOUND })?;
    Ok(CoxeterData {
        cartan,
        inj,
        cox,
        order,
    })
}

/// Coxeter order from the type alone.
pub fn table_order(dynkin: &DynkinClass) -> u32 {
    dynkin.ty.coxeter_order()
}

/// `m(i) + m(ρ(i)) + 2 = |C|` for every `i`, and `|C|` matches the table.
pub fn order_identity_check(arq: &ARQuiver, cd: &CoxeterData) -> bool {
    cd.order == table_order(&arq.dynkin)
        && arq
            .q
            .vertices()
            .all(|i| arq.m_of(i) + arq.m_of(arq.rho_of(i)) + 2 == cd.order)
}

/// For each sample `(v, t)`, compares the signed dimension vector of
/// `τ_D^t v` with `C^t` applied to the signed dimension vector of `v`.
pub fn derived_dim_check(
    arq: &ARQuiver,
    cd: &CoxeterData,
    samples: &[(DerivedVertex, i64)],
) -> Result<bool> {
    let dq = DerivedQuiver::new(arq)?;
    for &(v, t) in samples {
        let w = dq.tau_power(v, t)?;
        let lhs = dq.signed_dim(w)?;
        let rhs = cd.power(t)?.checked_mul_vec(&dq.signed_dim(v)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
