use std::fmt;

use serde::Serialize;

use super::nikulin::NikulinTable;
use crate::chartab::{class_labels, format_value, CharacterTable};
use crate::error::{Error, Result};
use crate::exact::{CycloNum, Rational};

/// Rank of the transcendental lattice plus H⁰ ⊕ H⁴: the part of the
/// Lefschetz sum outside S(X) when g acts trivially there.
pub const TRACE_OFFSET: i64 = 4;

/// Multiplicities a₂..a₇ of the nontrivial characters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultiplicityVector(pub Vec<u64>);

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl MultiplicityVector {
    /// Names of the characters present, χ₁ always first.
    pub fn components(&self) -> Vec<String> {
        let mut out = vec!["chi1".to_string()];
        for (i, &a) in self.0.iter().enumerate() {
            match a {
                0 => {}
                1 => out.push(format!("chi{}", i + 2)),
                _ => out.push(format!("{a}*chi{}", i + 2)),
            }
        }
        out
    }
}

/// `lhs = 1 + Σ aᵢ·coeffs[i]` for one conjugacy class.
#[derive(Debug, Clone)]
pub struct Equation {
    pub class_label: String,
    pub lhs: Rational,
    pub coeffs: Vec<CycloNum>,
}

impl Equation {
    pub fn rhs(&self, a: &[u64]) -> CycloNum {
        let order = self.coeffs.first().map_or(1, CycloNum::order);
        let mut acc = CycloNum::from_int(order, 1).unwrap();
        for (c, &k) in self.coeffs.iter().zip(a) {
            if k != 0 {
                acc = &acc + &c.scale(&Rational::from_integer(k.into()));
            }
        }
        acc
    }

    pub fn holds(&self, a: &[u64]) -> bool {
        self.rhs(a).as_rational().as_ref() == Some(&self.lhs)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = 1", self.class_label, self.lhs)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = format_value(c);
            match v.as_str() {
                "1" => write!(f, " + a{}", i + 2)?,
                "-1" => write!(f, " - a{}", i + 2)?,
                _ if v.starts_with('-') && !v.contains("sqrt") => {
                    write!(f, " - {}*a{}", &v[1..], i + 2)?
                }
                _ => write!(f, " + {v}*a{}", i + 2)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionSystem {
    pub equations: Vec<Equation>,
    pub degrees: Vec<u64>,
}

impl DecompositionSystem {
    /// Moves the identity equation's left side, for negative controls.
    pub fn with_identity_target(mut self, lhs: i64) -> Self {
        self.equations[0].lhs = Rational::from_integer(lhs.into());
        self
    }

    /// Upper bounds from the identity equation: aᵢ ≤ (lhs − 1)/deg χᵢ.
    pub fn bounds(&self) -> Vec<u64> {
        let budget = self.equations[0].lhs.to_integer() - 1;
        let budget = u64::try_from(budget).unwrap_or(0);
        self.degrees[1..].iter().map(|d| budget / d).collect()
    }

    pub fn search_space(&self) -> u64 {
        self.bounds().iter().map(|b| b + 1).product()
    }
}

/// One equation per class: χ_top(X^g) = 4 + tr(g*|S(X)) with
/// S(X) ⊗ C = χ₁ ⊕ Σ aᵢχᵢ.
pub fn decomposition_system(
    table: &CharacterTable,
    nikulin: &NikulinTable,
) -> Result<DecompositionSystem> {
    let labels = class_labels(table);
    let degrees = table.degrees();
    if degrees.first() != Some(&1) {
        return Err(Error::Precondition("first row must be the trivial character".into()));
    }
    let equations = table
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let euler = nikulin.euler_of_fixed_locus(c.element_order)?;
            Ok(Equation {
                class_label: labels[i].clone(),
                lhs: Rational::from_integer((euler - TRACE_OFFSET).into()),
                coeffs: table.rows[1..].iter().map(|row| row[i].clone()).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionSystem { equations, degrees })
}

/// All nonnegative solutions, by enumerating the box cut out by the
/// identity equation and checking every equation exactly.
pub fn solve_decomposition(system: &DecompositionSystem) -> Vec<MultiplicityVector> {
    let bounds = system.bounds();
    let mut solutions = Vec::new();
    let mut a = vec![0u64; bounds.len()];
    loop {
        if system.equations.iter().all(|e| e.holds(&a)) {
            solutions.push(MultiplicityVector(a.clone()));
        }
        let mut i = 0;
        loop {
            if i == a.len() {
                return solutions;
            }
            if a[i] < bounds[i] {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}
