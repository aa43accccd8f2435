use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::integer::lcm;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree-1}`, stored as its image sequence.
///
/// The derived `Ord` is lexicographic on images, which is the canonical
/// element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotABijection(n));
            }
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || std::mem::replace(&mut touched[p], true) {
                    return Err(Error::NotABijection(degree));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4 5)` or `(1,2)`.
    /// `()` denotes the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        let err = |reason: &str| Error::CycleParse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unterminated cycle"))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| err("point is not an integer"))?;
                    if p == 0 || p > degree {
                        return Err(err("point out of range"));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles).map_err(|_| err("points repeat"))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// `p ∘ self ∘ p⁻¹`.
    pub fn conjugate_by(&self, p: &Perm) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[p.images[i]] = p.images[j];
        }
        Perm { images }
    }

    /// `self ∘ other ∘ self⁻¹ ∘ other⁻¹`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a] == self.images[b])
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }

    /// The permutation acting as `self` on the first `degree()` points and as
    /// `other` on the following `other.degree()` points.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.degree();
        let images = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&j| j + shift))
            .collect();
        Perm { images }
    }

    /// Fixes the extra points `degree()..degree`.
    pub fn extend_to(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        self.direct_sum(&Perm::identity(degree - self.degree()))
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

/// 1-based cycle notation; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"6:(1 2)(3 4 5)"`.
impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Perm> {
        let (deg, cycles) = s.split_once(':').ok_or_else(|| Error::CycleParse {
            input: s.to_string(),
            reason: "expected '<degree>:<cycles>'".to_string(),
        })?;
        let degree = deg.trim().parse().map_err(|_| Error::CycleParse {
            input: s.to_string(),
            reason: "degree is not an integer".to_string(),
        })?;
        Perm::parse(cycles, degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse("(1 2)(3 4 5)", 6).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2, 5]);
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("(1,2)", 3).unwrap().to_string(), "(1 2)");
        assert_eq!(Perm::parse("()", 4).unwrap(), Perm::identity(4));
        assert_eq!("5:(2 5)".parse::<Perm>().unwrap().apply(1), 4);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse("(1 2", 3).is_err());
        assert!(Perm::parse("(1 7)", 3).is_err());
        assert!(Perm::parse("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse("1 2", 3).is_err());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn composition_applies_right_first() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        // a∘b sends 1 -> 1 -> 2, 2 -> 3, 3 -> 2 -> 1
        assert_eq!((&a * &b).to_string(), "(1 2 3)");
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let x = Perm::parse("(1 2 3)", 4).unwrap();
        let p = Perm::parse("(1 4)", 4).unwrap();
        assert_eq!(x.conjugate_by(&p), p.compose(&x).compose(&p.inverse()));
        assert_eq!(x.conjugate_by(&p).to_string(), "(2 3 4)");
    }

    #[test]
    fn powers_and_fixed_points() {
        let p = Perm::parse("(1 2 3 4)(5 6)", 6).unwrap();
        let sq = p.pow(2);
        assert_eq!(sq.to_string(), "(1 3)(2 4)");
        assert_eq!(sq.fixed_points(), 2);
        assert!(p.pow(4).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn direct_sum_shifts_points() {
        let a = Perm::parse("(1 2)", 2).unwrap();
        let z = Perm::parse("(1 2 3 4)", 4).unwrap();
        assert_eq!(a.direct_sum(&z).to_string(), "(1 2)(3 4 5 6)");
    }
}
