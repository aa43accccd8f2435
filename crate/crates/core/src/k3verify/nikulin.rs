use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::permgrp::PermGroup;

/// Euler number of a K3 surface; the identity fixes everything.
pub const K3_EULER_NUMBER: i64 = 24;

/// Number of fixed points of a symplectic automorphism of each finite order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NikulinTable {
    fixed: BTreeMap<usize, u64>,
}

impl Default for NikulinTable {
    fn default() -> Self {
        NikulinTable::standard()
    }
}

impl NikulinTable {
    pub fn standard() -> NikulinTable {
        let fixed = [(2, 8), (3, 6), (4, 4), (5, 4), (6, 2), (7, 3), (8, 2)]
            .into_iter()
            .collect();
        NikulinTable { fixed }
    }

    /// Fixed-point count for a nonidentity order.
    pub fn fixed_points(&self, order: usize) -> Option<u64> {
        self.fixed.get(&order).copied()
    }

    /// Topological Euler number of the fixed locus.
    pub fn euler_of_fixed_locus(&self, order: usize) -> Result<i64> {
        if order == 1 {
            return Ok(K3_EULER_NUMBER);
        }
        self.fixed_points(order)
            .map(|n| n as i64)
            .ok_or(Error::MissingOrder(order))
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.fixed.keys().copied()
    }

    /// Orders in the table that no element of `g` has.
    pub fn unused_orders(&self, g: &PermGroup) -> Vec<usize> {
        let present = g.conjugacy_classes().element_orders();
        self.orders().filter(|o| !present.contains(o)).collect()
    }

    /// Removes an entry; used to exercise the missing-order error.
    pub fn without(mut self, order: usize) -> NikulinTable {
        self.fixed.remove(&order);
        self
    }
}

/// Average of χ_top(X^g) over the group, the rank of the invariant part of
/// H⁰ ⊕ H² ⊕ H⁴.
pub fn lefschetz_invariant_rank(g: &PermGroup, nikulin: &NikulinTable) -> Result<Rational> {
    let mut total = Rational::zero();
    for c in g.conjugacy_classes().classes() {
        let e = nikulin.euler_of_fixed_locus(c.element_order)?;
        total += int(e) * int(c.size as i64);
    }
    Ok(total / int(g.order() as i64))
}
