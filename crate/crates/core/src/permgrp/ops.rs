use std::collections::HashSet;

use serde::Serialize;

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Class sizes of A6 in canonical class order.
pub const A6_CLASS_SIZES: [usize; 7] = [1, 45, 40, 40, 90, 72, 72];

pub fn center(g: &PermGroup) -> PermGroup {
    let elements = g
        .elements()
        .iter()
        .filter(|x| g.generators().iter().all(|s| x.commutes_with(s)))
        .cloned()
        .collect();
    g.subgroup_from_elements(elements)
        .expect("the center is a subgroup")
}

/// Normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut seeds: Vec<Perm> = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    let mut h = g.subgroup(seeds.clone()).expect("commutators lie in g");
    'grow: loop {
        for a in h.generators().to_vec() {
            for s in gens {
                let c = a.conjugate_by(s);
                if !h.contains(&c) {
                    seeds.push(c);
                    h = g.subgroup(seeds.clone()).expect("conjugates lie in g");
                    continue 'grow;
                }
            }
        }
        break;
    }
    assert!(h.is_normal_in(g), "derived subgroup must be normal");
    h
}

pub fn is_perfect(g: &PermGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

/// Certificate used for "isomorphic to A6": perfect, order 360 and class
/// sizes {1, 45, 40, 40, 90, 72, 72}.
pub fn has_a6_certificate(g: &PermGroup) -> bool {
    if g.order() != 360 {
        return false;
    }
    let mut sizes = g.conjugacy_classes().sizes();
    let mut expected = A6_CLASS_SIZES.to_vec();
    sizes.sort_unstable();
    expected.sort_unstable();
    sizes == expected && is_perfect(g)
}

pub fn centralizer_of_subgroup(g: &PermGroup, a: &PermGroup) -> Result<PermGroup> {
    if !a.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let elements = g
        .elements()
        .iter()
        .filter(|x| a.generators().iter().all(|s| x.commutes_with(s)))
        .cloned()
        .collect();
    g.subgroup_from_elements(elements)
}

/// Conjugation action of `g` on the elements of a normal subgroup `a`.
///
/// Point `i` of the image stands for `a.elements()[i]`; `map[k]` is the image
/// of `g.elements()[k]`.
#[derive(Debug, Clone)]
pub struct ConjugationImage {
    pub image: PermGroup,
    pub map: Vec<Perm>,
}

impl ConjugationImage {
    /// Elements of `g` acting trivially, as indices into `g.elements()`.
    pub fn kernel_indices(&self) -> Vec<usize> {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_identity())
            .map(|(i, _)| i)
            .collect()
    }
}

/// The permutation `a_i ↦ x a_i x⁻¹` of `a`'s element list.
pub fn conjugation_action(x: &Perm, a: &PermGroup) -> Perm {
    let images = a
        .elements()
        .iter()
        .map(|y| {
            a.index_of(&y.conjugate_by(x))
                .expect("a is normalised by x")
        })
        .collect();
    Perm::from_images(images).expect("conjugation is a bijection")
}

fn check_normal(g: &PermGroup, a: &PermGroup) -> Result<()> {
    if !a.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    if !a.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

pub fn conjugation_image(g: &PermGroup, a: &PermGroup) -> Result<ConjugationImage> {
    check_normal(g, a)?;
    let map: Vec<Perm> = g.elements().iter().map(|x| conjugation_action(x, a)).collect();
    let gens = g
        .generators()
        .iter()
        .map(|s| map[g.index_of(s).expect("generator is an element")].clone())
        .collect();
    let image = PermGroup::generate_with_degree(a.order(), gens)?;
    Ok(ConjugationImage { image, map })
}

/// Only the image group, from the images of generators.
pub fn conjugation_image_group(g: &PermGroup, a: &PermGroup) -> Result<PermGroup> {
    check_normal(g, a)?;
    let gens = g.generators().iter().map(|s| conjugation_action(s, a)).collect();
    PermGroup::generate_with_degree(a.order(), gens)
}

/// Whether automorphisms merge the two classes of elements of order 3 and
/// the two classes of elements of order 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FusionType {
    pub swaps_3: bool,
    pub swaps_5: bool,
}

/// Induced action of `image` (acting on `a`'s element list) on the
/// conjugacy classes of `a`.
pub fn fusion_type(image: &PermGroup, a: &PermGroup) -> Result<FusionType> {
    if image.degree() != a.order() {
        return Err(Error::DegreeMismatch {
            expected: a.order(),
            found: image.degree(),
        });
    }
    let classes = a.conjugacy_classes();
    let class_of_point: Vec<usize> = a
        .elements()
        .iter()
        .map(|x| classes.class_of(x).expect("element has a class"))
        .collect();
    let n = classes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for gamma in image.generators() {
        let mut induced: Vec<Option<usize>> = vec![None; n];
        for (pt, &cls) in class_of_point.iter().enumerate() {
            let target = class_of_point[gamma.apply(pt)];
            match induced[cls] {
                None => induced[cls] = Some(target),
                Some(t) if t == target => {}
                Some(_) => {
                    return Err(Error::Internal(
                        "image does not preserve the class partition".into(),
                    ))
                }
            }
        }
        for (cls, t) in induced.into_iter().enumerate() {
            let (x, y) = (find(&mut parent, cls), find(&mut parent, t.unwrap()));
            parent[x] = y;
        }
    }
    let orders = classes.element_orders();
    let mut merges = |d: usize| {
        let idx: Vec<usize> = (0..n).filter(|&i| orders[i] == d).collect();
        let roots: HashSet<usize> = idx.iter().map(|&i| find(&mut parent, i)).collect();
        roots.len() < idx.len()
    };
    Ok(FusionType {
        swaps_3: merges(3),
        swaps_5: merges(5),
    })
}

/// The three subgroups strictly between `a` and `g` when `g/a` is C2×C2.
/// Returned in order of their least element outside `a`.
pub fn index2_overgroups(g: &PermGroup, a: &PermGroup) -> Result<Vec<PermGroup>> {
    check_normal(g, a)?;
    if g.order() != 4 * a.order() || g.elements().iter().any(|x| !a.contains(&x.compose(x))) {
        return Err(Error::NotKleinQuotient);
    }
    let mut assigned: HashSet<Perm> = HashSet::new();
    let mut cosets: Vec<Vec<Perm>> = Vec::new();
    for x in g.elements() {
        if assigned.contains(x) {
            continue;
        }
        let coset: Vec<Perm> = a.elements().iter().map(|y| x.compose(y)).collect();
        assigned.extend(coset.iter().cloned());
        cosets.push(coset);
    }
    debug_assert_eq!(cosets.len(), 4);
    // cosets[0] is `a` itself since the identity is the least element.
    let mut out = Vec::with_capacity(3);
    for coset in &cosets[1..] {
        let mut elements = a.elements().to_vec();
        elements.extend(coset.iter().cloned());
        let h = g.subgroup_from_elements(elements)?;
        debug_assert_eq!(h.order(), 2 * a.order());
        out.push(h);
    }
    Ok(out)
}
