use std::collections::HashMap;

use num::integer::lcm;
use serde::Serialize;

use super::group::PermGroup;
use super::perm::Perm;

/// One conjugacy class. `power_map[j]` is the index of the class containing
/// `representative^j`, for `j` below the group exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjClassData {
    #[serde(serialize_with = "serialize_perm")]
    pub representative: Perm,
    pub size: usize,
    pub element_order: usize,
    pub power_map: Vec<usize>,
}

fn serialize_perm<S: serde::Serializer>(p: &Perm, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// The conjugacy classes of a group in canonical order (element order, then
/// size, then least representative), with membership lookup.
#[derive(Debug)]
pub struct ClassPartition {
    classes: Vec<ConjClassData>,
    members: Vec<Vec<Perm>>,
    class_of: HashMap<Perm, usize>,
    exponent: usize,
}

impl ClassPartition {
    pub(crate) fn compute(group: &PermGroup) -> ClassPartition {
        let mut assigned: HashMap<Perm, usize> = HashMap::with_capacity(group.order());
        let mut raw: Vec<Vec<Perm>> = Vec::new();
        for x in group.elements() {
            if assigned.contains_key(x) {
                continue;
            }
            let id = raw.len();
            let mut orbit = vec![x.clone()];
            assigned.insert(x.clone(), id);
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head].clone();
                head += 1;
                for s in group.generators() {
                    let z = y.conjugate_by(s);
                    if !assigned.contains_key(&z) {
                        assigned.insert(z.clone(), id);
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }

        // Elements are visited in canonical order, so orbit[0] is the least
        // member of each class.
        let mut order: Vec<usize> = (0..raw.len()).collect();
        let elt_order: Vec<usize> = raw.iter().map(|c| c[0].order()).collect();
        order.sort_by(|&a, &b| {
            (elt_order[a], raw[a].len(), &raw[a][0]).cmp(&(elt_order[b], raw[b].len(), &raw[b][0]))
        });
        let mut renumber = vec![0; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let class_of: HashMap<Perm, usize> = assigned
            .into_iter()
            .map(|(p, old)| (p, renumber[old]))
            .collect();
        let mut members: Vec<Option<Vec<Perm>>> = raw.into_iter().map(Some).collect();
        let members: Vec<Vec<Perm>> = order.iter().map(|&old| members[old].take().unwrap()).collect();

        let exponent = members.iter().map(|c| c[0].order()).fold(1, lcm);
        let classes = members
            .iter()
            .map(|c| {
                let rep = c[0].clone();
                let mut power = Perm::identity(rep.degree());
                let mut power_map = Vec::with_capacity(exponent);
                for _ in 0..exponent {
                    power_map.push(class_of[&power]);
                    power = power.compose(&rep);
                }
                ConjClassData {
                    element_order: rep.order(),
                    size: c.len(),
                    representative: rep,
                    power_map,
                }
            })
            .collect::<Vec<_>>();

        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, group.order(), "class equation");
        assert!(classes.iter().all(|c| group.order().is_multiple_of(c.size)));

        ClassPartition {
            classes,
            members,
            class_of,
            exponent,
        }
    }

    pub fn classes(&self) -> &[ConjClassData] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn members(&self, class: usize) -> &[Perm] {
        &self.members[class]
    }

    pub fn class_of(&self, x: &Perm) -> Option<usize> {
        self.class_of.get(x).copied()
    }

    /// Index of the class of inverses.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.classes[class].power_map[self.exponent - 1]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.element_order).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_classes() {
        let g = PermGroup::generate(vec![
            Perm::parse("(1 2)", 3).unwrap(),
            Perm::parse("(1 2 3)", 3).unwrap(),
        ])
        .unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.sizes(), vec![1, 3, 2]);
        assert_eq!(cc.element_orders(), vec![1, 2, 3]);
        assert_eq!(cc.exponent(), 6);
        // 3-cycles square to the other 3-cycle, which is in the same class.
        assert_eq!(cc.classes()[2].power_map, vec![0, 2, 2, 0, 2, 2]);
        assert_eq!(cc.inverse_class(2), 2);
        assert_eq!(cc.classes()[1].power_map[1], 1);
    }

    #[test]
    fn cyclic_group_has_singleton_classes() {
        let g = PermGroup::generate(vec![Perm::parse("(1 2 3 4)", 4).unwrap()]).unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.len(), 4);
        assert_eq!(cc.element_orders(), vec![1, 2, 4, 4]);
        // the two generators of C4 are mutually inverse
        assert_eq!(cc.inverse_class(2), 3);
    }
}
