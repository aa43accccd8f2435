use std::cmp::Ordering;

use log::debug;
use num::{BigInt, ToPrimitive, Zero};

use super::algebra::{structure_constants, ClassAlgebra, ALGEBRA_ORDER_GUARD};
use super::modp;
use crate::error::{Error, Result};
use crate::exact::{CycloNum, Rational};
use crate::permgrp::{ConjClassData, PermGroup};

pub const MAX_CLASSES: usize = 16;

/// Exact irreducible characters of a finite group.
///
/// Rows are sorted by degree, then by descending values in class order.
/// Every value lives in Q(ζₑ) with e the group exponent.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub classes: Vec<ConjClassData>,
    pub exponent: u32,
    pub prime: u64,
    pub rows: Vec<Vec<CycloNum>>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| r[0].as_integer().and_then(|d| d.to_u64()).expect("degree"))
            .collect()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &CycloNum {
        &self.rows[row][class]
    }

    fn inverse_class(&self, i: usize) -> usize {
        self.classes[i].power_map[self.exponent as usize - 1]
    }

    /// Checks both orthogonality relations, Σ χ(1)² = |G| and positivity of
    /// the degree column, all in exact arithmetic.
    pub fn verify(&self) -> Result<()> {
        let r = self.num_classes();
        if self.rows.len() != r {
            return Err(Error::Orthogonality(format!(
                "{} rows for {r} classes",
                self.rows.len()
            )));
        }
        let order = Rational::from_integer(BigInt::from(self.group_order));
        let e = self.exponent;
        for (a, row) in self.rows.iter().enumerate() {
            match row[0].as_integer() {
                Some(d) if d > BigInt::zero() => {}
                _ => return Err(Error::Orthogonality(format!("row {a} has a bad degree"))),
            }
        }
        let sum_sq: BigInt = self
            .rows
            .iter()
            .map(|row| {
                let d = row[0].as_integer().unwrap();
                &d * &d
            })
            .sum();
        if sum_sq != BigInt::from(self.group_order) {
            return Err(Error::Orthogonality(format!("sum of squared degrees is {sum_sq}")));
        }
        for a in 0..r {
            for b in a..r {
                let mut acc = CycloNum::zero(e)?;
                for i in 0..r {
                    let term = &self.rows[a][i] * &self.rows[b][self.inverse_class(i)];
                    acc = &acc + &term.scale(&Rational::from_integer(self.classes[i].size.into()));
                }
                let expected = if a == b { order.clone() } else { Rational::zero() };
                if acc.as_rational() != Some(expected) {
                    return Err(Error::Orthogonality(format!("rows {a} and {b}")));
                }
            }
        }
        for i in 0..r {
            for j in i..r {
                let mut acc = CycloNum::zero(e)?;
                for row in &self.rows {
                    acc = &acc + &(&row[i] * &row[self.inverse_class(j)]);
                }
                let expected = if i == j {
                    Rational::new(self.group_order.into(), self.classes[i].size.into())
                } else {
                    Rational::zero()
                };
                if acc.as_rational() != Some(expected) {
                    return Err(Error::Orthogonality(format!("columns {i} and {j}")));
                }
            }
        }
        Ok(())
    }
}

/// Smallest prime p ≡ 1 (mod e) with p > 2√|G|.
pub fn dixon_prime(g: &PermGroup) -> u64 {
    admissible_prime_after(g.exponent() as u64, g.order() as u64, 0)
}

/// Least prime p ≡ 1 (mod exponent), p² > 4·order, p > `after`.
pub fn admissible_prime_after(exponent: u64, order: u64, after: u64) -> u64 {
    let mut p = exponent + 1;
    while p <= after || p * p <= 4 * order || !modp::is_prime(p) {
        p += exponent;
        assert!(p < 1_000_000, "prime search guard");
    }
    p
}

pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    let mut p = dixon_prime(g);
    let mut last = None;
    for _ in 0..4 {
        match character_table_with_prime(g, p) {
            Err(e @ Error::SplitFailure { .. }) => {
                debug!("splitting failed modulo {p}; retrying");
                last = Some(e);
                p = admissible_prime_after(g.exponent() as u64, g.order() as u64, p);
            }
            other => return other,
        }
    }
    Err(last.unwrap())
}

/// Dixon–Schneider computation modulo a caller-chosen admissible prime.
pub fn character_table_with_prime(g: &PermGroup, p: u64) -> Result<CharacterTable> {
    let cc = g.conjugacy_classes();
    let r = cc.len();
    if r > MAX_CLASSES || g.order() > ALGEBRA_ORDER_GUARD {
        return Err(Error::TableGuard {
            classes: r,
            order: g.order(),
        });
    }
    let e = cc.exponent() as u64;
    let order = g.order() as u64;
    if !modp::is_prime(p) || !(p - 1).is_multiple_of(e) || p * p <= 4 * order {
        return Err(Error::Precondition(format!("{p} is not an admissible prime")));
    }
    let algebra = structure_constants(g)?;
    let omegas = central_characters(&algebra, p)?;
    let theta = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
    let classes = cc.classes();
    let inverse: Vec<usize> = (0..r).map(|i| cc.inverse_class(i)).collect();

    let mut rows = Vec::with_capacity(r);
    for omega in omegas {
        // 1/χ(1)² = (1/|G|) Σ ωᵢ ω_{i'} / |Cᵢ|
        let s = (0..r).fold(0, |acc, i| {
            let term = modp::mul(omega[i], omega[inverse[i]], p);
            let term = modp::mul(term, modp::inv(modp::from_usize(classes[i].size, p), p), p);
            modp::add(acc, term, p)
        });
        let target = modp::mul(order % p, modp::inv(s, p), p);
        let degree = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|&d| order.is_multiple_of(d) && modp::mul(d, d, p) == target)
            .ok_or_else(|| Error::Internal("no degree matches modulo p".into()))?;
        let values_p: Vec<u64> = (0..r)
            .map(|i| {
                let x = modp::mul(omega[i], degree, p);
                modp::mul(x, modp::inv(modp::from_usize(classes[i].size, p), p), p)
            })
            .collect();
        let mut row = Vec::with_capacity(r);
        for (i, class) in classes.iter().enumerate() {
            row.push(lift_value(class, i, &values_p, degree, e, theta, p)?);
        }
        rows.push(row);
    }
    rows.sort_by(|a, b| {
        let da = a[0].as_integer();
        let db = b[0].as_integer();
        da.cmp(&db).then_with(|| {
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| y.canonical_cmp(x))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    });
    let table = CharacterTable {
        group_order: g.order(),
        classes: classes.to_vec(),
        exponent: e as u32,
        prime: p,
        rows,
    };
    table.verify()?;
    Ok(table)
}

/// Recovers χ(g) = Σ mₛ ζ_o^s from residues of χ on the powers of g, where o
/// is the order of g and mₛ the multiplicity of the eigenvalue ζ_o^s.
fn lift_value(
    class: &ConjClassData,
    index: usize,
    values_p: &[u64],
    degree: u64,
    e: u64,
    theta: u64,
    p: u64,
) -> Result<CycloNum> {
    let o = class.element_order as u64;
    let step = e / o;
    let theta_o = modp::pow(theta, step, p);
    let theta_o_inv = modp::inv(theta_o, p);
    let o_inv = modp::inv(o % p, p);
    let mut terms = Vec::new();
    for s in 0..o {
        let base = modp::pow(theta_o_inv, s, p);
        let mut acc = 0;
        let mut w = 1;
        for j in 0..o as usize {
            acc = modp::add(acc, modp::mul(values_p[class.power_map[j]], w, p), p);
            w = modp::mul(w, base, p);
        }
        let m = modp::mul(acc, o_inv, p);
        if m > degree {
            return Err(Error::LiftOutOfRange {
                class: index,
                value: m,
                degree,
            });
        }
        if m != 0 {
            terms.push(((s * step) as i64, Rational::from_integer(m.into())));
        }
    }
    CycloNum::from_terms(e as u32, terms)
}

/// Common eigenvectors of all class matrices modulo p, each normalised so its
/// identity-class entry is 1. These are the central characters ω_χ.
fn central_characters(algebra: &ClassAlgebra, p: u64) -> Result<Vec<Vec<u64>>> {
    let r = algebra.len();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = algebra.class_matrix(i);
        let mut refined = Vec::new();
        for mut space in spaces {
            if space.len() == 1 {
                refined.push(space);
                continue;
            }
            let pivots = modp::rref(&mut space, p);
            let d = space.len();
            // images of the basis vectors under Mᵢ, in basis coordinates
            let images: Vec<Vec<u64>> = space.iter().map(|w| mat_vec(m, w, p)).collect();
            let restricted: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][pivots[row]]).collect())
                .collect();
            let cp = modp::charpoly(&restricted, p);
            let mut found = 0;
            for lambda in 0..p {
                if modp::eval(&cp, lambda, p) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = restricted
                    .iter()
                    .enumerate()
                    .map(|(a, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(b, &x)| if a == b { modp::sub(x, lambda, p) } else { x })
                            .collect()
                    })
                    .collect();
                let kernel = modp::nullspace(&shifted, d, p);
                found += kernel.len();
                let vectors: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (coef, w) in c.iter().zip(space.iter()) {
                            for (x, &y) in v.iter_mut().zip(w) {
                                *x = modp::add(*x, modp::mul(*coef, y, p), p);
                            }
                        }
                        v
                    })
                    .collect();
                refined.push(vectors);
            }
            if found != d {
                return Err(Error::SplitFailure { prime: p });
            }
        }
        spaces = refined;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::SplitFailure { prime: p });
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::SplitFailure { prime: p });
            }
            let s = modp::inv(v[0], p);
            Ok(v.into_iter().map(|x| modp::mul(x, s, p)).collect())
        })
        .collect()
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| modp::add(acc, modp::mul(a % p, b, p), p))
        })
        .collect()
}

