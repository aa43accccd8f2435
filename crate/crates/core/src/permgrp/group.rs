use std::collections::{HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use num::integer::lcm;
use rand::seq::SliceRandom;
use rand::Rng;

use super::classes::ClassPartition;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Enumeration guard on group orders.
pub const ORDER_GUARD: usize = 1_000_000;

/// A finite permutation group with its full, canonically sorted element list.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    classes: OnceLock<Arc<ClassPartition>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn enumerate(degree: usize, generators: &[Perm]) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = s.compose(&x);
            if !seen.contains(&y) {
                if seen.len() >= ORDER_GUARD {
                    return Err(Error::OrderGuard(ORDER_GUARD));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

impl PermGroup {
    /// Closure of a non-empty generating set.
    pub fn generate(generators: Vec<Perm>) -> Result<PermGroup> {
        let degree = generators
            .first()
            .map(Perm::degree)
            .ok_or(Error::EmptyGenerators)?;
        PermGroup::generate_with_degree(degree, generators)
    }

    pub fn generate_with_degree(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let mut generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        generators.dedup();
        let elements = enumerate(degree, &generators)?;
        Ok(PermGroup {
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
            classes: OnceLock::new(),
        }
    }

    /// Wraps an element set already known to be a subgroup of `self`,
    /// choosing generators greedily in canonical order.
    pub(crate) fn subgroup_from_elements(&self, mut elements: Vec<Perm>) -> Result<PermGroup> {
        elements.sort_unstable();
        elements.dedup();
        if !self.order().is_multiple_of(elements.len()) {
            return Err(Error::Internal(format!(
                "subset of size {} violates Lagrange in a group of order {}",
                elements.len(),
                self.order()
            )));
        }
        let mut generators: Vec<Perm> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for x in &elements {
            if current.order() == elements.len() {
                break;
            }
            if !current.contains(x) {
                generators.push(x.clone());
                current = PermGroup::generate_with_degree(self.degree, generators.clone())?;
            }
        }
        if current.elements != elements {
            return Err(Error::Internal("element set is not closed".into()));
        }
        Ok(current)
    }

    /// Closure of `generators` inside `self`, with the Lagrange check.
    pub fn subgroup(&self, generators: Vec<Perm>) -> Result<PermGroup> {
        if generators.iter().any(|g| !self.contains(g)) {
            return Err(Error::NotASubgroup);
        }
        let h = PermGroup::generate_with_degree(self.degree, generators)?;
        if !self.order().is_multiple_of(h.order()) {
            return Err(Error::Internal("Lagrange check failed".into()));
        }
        Ok(h)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        if x.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.index_of(x).is_some()
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Normality verified by conjugating generators.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn exponent(&self) -> usize {
        self.conjugacy_classes()
            .classes()
            .iter()
            .map(|c| c.element_order)
            .fold(1, lcm)
    }

    /// Conjugacy classes, computed once and cached.
    pub fn conjugacy_classes(&self) -> Arc<ClassPartition> {
        self.classes
            .get_or_init(|| Arc::new(ClassPartition::compute(self)))
            .clone()
    }

    /// The same abstract group with every point relabelled by `p`.
    pub fn conjugate_by(&self, p: &Perm) -> PermGroup {
        let generators = self.generators.iter().map(|g| g.conjugate_by(p)).collect();
        let mut elements: Vec<Perm> = self.elements.iter().map(|g| g.conjugate_by(p)).collect();
        elements.sort_unstable();
        PermGroup {
            degree: self.degree,
            generators,
            elements,
            classes: OnceLock::new(),
        }
    }

    /// A fresh random generating set for the same element set.
    pub fn with_random_generators<R: Rng + ?Sized>(&self, rng: &mut R) -> PermGroup {
        let mut generators = Vec::new();
        loop {
            generators.push(self.elements.choose(rng).expect("non-empty").clone());
            if generators.len() < 2 {
                continue;
            }
            let h = PermGroup::generate_with_degree(self.degree, generators.clone())
                .expect("subgroup of a guarded group");
            if h.order() == self.order() {
                return h;
            }
        }
    }
}
