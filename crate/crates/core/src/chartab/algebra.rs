use crate::error::{Error, Result};
use crate::permgrp::{ConjClassData, Perm, PermGroup};

/// Largest group order for exhaustive pair counting.
pub const ALGEBRA_ORDER_GUARD: usize = 10_000;

/// Structure constants of the class algebra:
/// `a[i][j][k] = #{(x, y) ∈ Cᵢ × Cⱼ : xy = z}` for a fixed `z ∈ Cₖ`.
#[derive(Debug, Clone)]
pub struct ClassAlgebra {
    pub classes: Vec<ConjClassData>,
    pub constants: Vec<Vec<Vec<u64>>>,
}

impl ClassAlgebra {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.constants[i][j][k]
    }

    /// The matrix of multiplication by the i-th class sum:
    /// `(Mᵢ)_{jk} = a[i][j][k]`.
    pub fn class_matrix(&self, i: usize) -> &[Vec<u64>] {
        &self.constants[i]
    }

    /// Checks Σₖ a[i][j][k]·|Cₖ| = |Cᵢ|·|Cⱼ| for every pair.
    pub fn consistent(&self) -> bool {
        let sizes: Vec<u64> = self.classes.iter().map(|c| c.size as u64).collect();
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| {
                let lhs: u64 = (0..self.len()).map(|k| self.constants[i][j][k] * sizes[k]).sum();
                lhs == sizes[i] * sizes[j]
            })
        })
    }
}

/// Counts, for each `x ∈ Cᵢ`, the class of `x⁻¹z`.
fn count_with(g: &PermGroup, i: usize, z: &Perm, out: &mut [u64]) {
    let cc = g.conjugacy_classes();
    for x in cc.members(i) {
        let y = x.inverse().compose(z);
        out[cc.class_of(&y).expect("product lies in the group")] += 1;
    }
}

pub fn structure_constants(g: &PermGroup) -> Result<ClassAlgebra> {
    if g.order() > ALGEBRA_ORDER_GUARD {
        return Err(Error::TableGuard {
            classes: g.conjugacy_classes().len(),
            order: g.order(),
        });
    }
    let cc = g.conjugacy_classes();
    let r = cc.len();
    let mut constants = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = &cc.classes()[k].representative;
        for (i, row) in constants.iter_mut().enumerate() {
            let mut counts = vec![0u64; r];
            count_with(g, i, z, &mut counts);
            for (j, c) in counts.into_iter().enumerate() {
                row[j][k] = c;
            }
        }
    }
    Ok(ClassAlgebra {
        classes: cc.classes().to_vec(),
        constants,
    })
}

/// `a[i][·][k]` recomputed with an arbitrary witness `z` in class k.
pub fn structure_column_at(g: &PermGroup, i: usize, z: &Perm) -> Vec<u64> {
    let mut counts = vec![0u64; g.conjugacy_classes().len()];
    count_with(g, i, z, &mut counts);
    counts
}
