//! The groups between PSL(2,9) and PΓL(2,9), realised on the ten points of
//! the projective line over F9.
//!
//! Point 0 is [1:0]; point 1 + k is [x:1] where x is the k-th element of F9
//! in index order.

mod field;

use serde::Serialize;

pub use field::F9Elem;

use crate::error::{Error, Result};
use crate::permgrp::{
    conjugation_image, derived_subgroup, fusion_type, index2_overgroups, FusionType, Perm,
    PermGroup,
};

pub const LINE_SIZE: usize = 10;

/// A point of P¹(F9), normalised to [1:0] or [x:1].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    x: F9Elem,
    y: F9Elem,
}

impl ProjPoint {
    /// Normalises a nonzero homogeneous pair.
    pub fn new(x: F9Elem, y: F9Elem) -> Option<ProjPoint> {
        if y.is_zero() {
            (!x.is_zero()).then_some(ProjPoint {
                x: F9Elem::ONE,
                y: F9Elem::ZERO,
            })
        } else {
            let s = y.inv()?;
            Some(ProjPoint {
                x: x * s,
                y: F9Elem::ONE,
            })
        }
    }

    pub fn all() -> Vec<ProjPoint> {
        (0..LINE_SIZE).map(ProjPoint::from_index).collect()
    }

    pub fn from_index(k: usize) -> ProjPoint {
        if k == 0 {
            ProjPoint {
                x: F9Elem::ONE,
                y: F9Elem::ZERO,
            }
        } else {
            ProjPoint {
                x: F9Elem::from_index(k - 1),
                y: F9Elem::ONE,
            }
        }
    }

    pub fn index(self) -> usize {
        if self.y.is_zero() {
            0
        } else {
            1 + self.x.index()
        }
    }

    pub fn coords(self) -> (F9Elem, F9Elem) {
        (self.x, self.y)
    }
}

/// The 2×2 matrix `[[a, b], [c, d]]` acting by [x:y] ↦ [ax+by : cx+dy].
/// `None` when the matrix is singular.
pub fn mobius(a: F9Elem, b: F9Elem, c: F9Elem, d: F9Elem) -> Option<Perm> {
    if (a * d - b * c).is_zero() {
        return None;
    }
    let images = ProjPoint::all()
        .into_iter()
        .map(|p| {
            let (x, y) = p.coords();
            ProjPoint::new(a * x + b * y, c * x + d * y)
                .expect("invertible matrix")
                .index()
        })
        .collect();
    Some(Perm::from_images(images).expect("projective action is bijective"))
}

/// Coordinate-wise Frobenius [x:y] ↦ [x³:y³].
pub fn frobenius_perm() -> Perm {
    let images = ProjPoint::all()
        .into_iter()
        .map(|p| {
            let (x, y) = p.coords();
            ProjPoint::new(x.frobenius(), y.frobenius()).unwrap().index()
        })
        .collect();
    Perm::from_images(images).unwrap()
}

fn pgl_generators() -> Vec<Perm> {
    let (zero, one) = (F9Elem::ZERO, F9Elem::ONE);
    vec![
        mobius(one, one, zero, one).unwrap(),
        mobius(F9Elem::primitive(), zero, zero, one).unwrap(),
        mobius(zero, one, one, zero).unwrap(),
    ]
}

pub fn build_pgl29() -> PermGroup {
    PermGroup::generate(pgl_generators()).expect("PGL(2,9) is small")
}

pub fn build_pgammal29() -> PermGroup {
    let mut gens = pgl_generators();
    gens.push(frobenius_perm());
    PermGroup::generate(gens).expect("PΓL(2,9) is small")
}

/// PSL(2,9) as the derived subgroup of PGL(2,9).
pub fn build_psl29() -> PermGroup {
    derived_subgroup(&build_pgl29())
}

/// The three index-2 overgroups of PSL(2,9) inside PΓL(2,9), labelled by how
/// they fuse the order-3 and order-5 classes of PSL(2,9).
#[derive(Debug, Clone)]
pub struct Overgroups {
    pub psl: PermGroup,
    pub pgammal: PermGroup,
    pub s6: PermGroup,
    pub pgl: PermGroup,
    pub m10: PermGroup,
    /// Fusion pattern of each overgroup, in `index2_overgroups` order.
    pub patterns: Vec<FusionType>,
}

pub fn classify_overgroups() -> Result<Overgroups> {
    let o = classify_overgroups_in(&build_pgammal29())?;
    if !o.pgl.same_elements(&build_pgl29()) {
        return Err(Error::Internal(
            "overgroup fusing only order-3 classes is not PGL(2,9)".into(),
        ));
    }
    Ok(o)
}

/// Classification inside any copy of PΓL(2,9) on the standard ten points.
pub fn classify_overgroups_in(pgammal: &PermGroup) -> Result<Overgroups> {
    let psl = derived_subgroup(pgammal);
    let overgroups = index2_overgroups(pgammal, &psl)?;
    let mut patterns = Vec::with_capacity(3);
    let (mut s6, mut pgl, mut m10) = (None, None, None);
    for h in overgroups {
        let image = conjugation_image(&h, &psl)?.image;
        let f = fusion_type(&image, &psl)?;
        patterns.push(f);
        let slot = match (f.swaps_3, f.swaps_5) {
            (false, true) => &mut s6,
            (true, false) => &mut pgl,
            (true, true) => &mut m10,
            (false, false) => {
                return Err(Error::Internal(
                    "overgroup acts by inner automorphisms only".into(),
                ))
            }
        };
        if slot.replace(h).is_some() {
            return Err(Error::Internal("fusion patterns are not distinct".into()));
        }
    }
    let (Some(s6), Some(pgl), Some(m10)) = (s6, pgl, m10) else {
        return Err(Error::Internal("missing fusion pattern".into()));
    };
    Ok(Overgroups {
        psl,
        pgammal: pgammal.clone(),
        s6,
        pgl,
        m10,
        patterns,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M10CosetReport {
    pub coset_size: usize,
    pub involutions_outside: usize,
    pub order4_outside: usize,
    pub order4_outside_one_class: bool,
}

/// Order statistics of the nontrivial coset M10 ∖ PSL(2,9).
pub fn m10_order4_class_check(m10: &PermGroup, psl: &PermGroup) -> Result<M10CosetReport> {
    if !psl.is_subgroup_of(m10) || m10.order() != 2 * psl.order() {
        return Err(Error::Precondition("psl must have index 2 in m10".into()));
    }
    let classes = m10.conjugacy_classes();
    let outside: Vec<&Perm> = m10.elements().iter().filter(|x| !psl.contains(x)).collect();
    let involutions_outside = outside.iter().filter(|x| x.order() == 2).count();
    let order4: Vec<usize> = outside
        .iter()
        .filter(|x| x.order() == 4)
        .map(|x| classes.class_of(x).expect("element has a class"))
        .collect();
    let one_class = !order4.is_empty() && order4.iter().all(|&c| c == order4[0]);
    Ok(M10CosetReport {
        coset_size: outside.len(),
        involutions_outside,
        order4_outside: order4.len(),
        order4_outside_one_class: one_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{center, has_a6_certificate, A6_CLASS_SIZES};

    #[test]
    fn projective_line_has_ten_points() {
        let pts = ProjPoint::all();
        assert_eq!(pts.len(), 10);
        for (k, p) in pts.iter().enumerate() {
            assert_eq!(p.index(), k);
        }
        // rescaling a representative does not move the point
        for p in &pts {
            let (x, y) = p.coords();
            for s in F9Elem::all().filter(|s| !s.is_zero()) {
                assert_eq!(ProjPoint::new(x * s, y * s), Some(*p));
            }
        }
    }

    #[test]
    fn mobius_action_is_faithful_modulo_scalars() {
        let mut trivial = 0;
        let mut invertible = 0;
        for a in F9Elem::all() {
            for b in F9Elem::all() {
                for c in F9Elem::all() {
                    for d in F9Elem::all() {
                        if let Some(p) = mobius(a, b, c, d) {
                            invertible += 1;
                            if p.is_identity() {
                                assert!(b.is_zero() && c.is_zero() && a == d);
                                trivial += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(invertible, 80 * 72);
        assert_eq!(trivial, 8);
    }

    #[test]
    fn group_orders() {
        let pgl = build_pgl29();
        assert_eq!(pgl.order(), 720);
        assert_eq!(pgl.order(), 9 * (81 - 1));
        assert!(pgl.elements().iter().any(|x| x.order() == 10));
        assert_eq!(build_pgammal29().order(), 1440);
        let psl = build_psl29();
        assert_eq!(psl.order(), 360);
        assert_eq!(psl.conjugacy_classes().sizes(), A6_CLASS_SIZES.to_vec());
        assert!(has_a6_certificate(&psl));
        assert_eq!(center(&pgl).order(), 1);
    }

    #[test]
    fn pgammal_tower() {
        let g = build_pgammal29();
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 360);
        assert!(has_a6_certificate(&d));
        assert!(d.same_elements(&build_psl29()));
        // quotient is C2 x C2: every square lies in PSL and the index is 4
        assert!(g.elements().iter().all(|x| d.contains(&x.compose(x))));
    }

    #[test]
    fn overgroups_classified() {
        let o = classify_overgroups().unwrap();
        assert_eq!(o.patterns.len(), 3);
        assert!(o.pgl.same_elements(&build_pgl29()));
        for h in [&o.s6, &o.pgl, &o.m10] {
            assert_eq!(h.order(), 720);
        }
        assert!(!o.s6.same_elements(&o.m10));
        let r = m10_order4_class_check(&o.m10, &o.psl).unwrap();
        assert_eq!(r.coset_size, 360);
        assert_eq!(r.involutions_outside, 0);
        assert!(r.order4_outside_one_class);
    }
}
