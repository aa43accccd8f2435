//! The four groups of shape A₆.μ₄ as subgroups of N × μ₄.
//!
//! μ₄ acts as a 4-cycle on four points appended after N's points, so
//! ζ₄ is the permutation (n n+1 n+2 n+3) in 0-based labels.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::permgrp::{
    conjugation_image, conjugation_image_group, derived_subgroup, fingerprint, fusion_type,
    has_a6_certificate, Fingerprint, FusionType, Perm, PermGroup,
};
use crate::pgl9::{build_pgl29, build_psl29, classify_overgroups};

pub const EXTENSION_ORDER: usize = 1440;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[allow(non_camel_case_types)]
pub enum ExtensionKind {
    A6_4,
    S6_2,
    PGL29_2,
    M10_2,
}

impl ExtensionKind {
    pub const ALL: [ExtensionKind; 4] = [
        ExtensionKind::A6_4,
        ExtensionKind::S6_2,
        ExtensionKind::PGL29_2,
        ExtensionKind::M10_2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::A6_4 => "A6_4",
            ExtensionKind::S6_2 => "S6_2",
            ExtensionKind::PGL29_2 => "PGL29_2",
            ExtensionKind::M10_2 => "M10_2",
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            ExtensionKind::A6_4 => "A6(4)",
            ExtensionKind::S6_2 => "S6(2)",
            ExtensionKind::PGL29_2 => "PGL(2,9)(2)",
            ExtensionKind::M10_2 => "M10(2)",
        }
    }

    /// Degree of the model of N.
    pub fn base_degree(self) -> usize {
        match self {
            ExtensionKind::A6_4 | ExtensionKind::S6_2 => 6,
            ExtensionKind::PGL29_2 | ExtensionKind::M10_2 => 10,
        }
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ExtensionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExtensionKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown extension kind {s:?}")))
    }
}

/// ζ₄ as a 4-cycle on the points `offset..offset + 4`.
pub fn mu4_generator(offset: usize) -> Perm {
    Perm::from_cycles(offset + 4, &[(offset..offset + 4).collect()]).unwrap()
}

/// A group G with |G| = 1440, its distinguished A₆ and a chosen g̃.
#[derive(Debug, Clone)]
pub struct ExtensionCandidate {
    pub kind: ExtensionKind,
    pub group: PermGroup,
    pub a6: PermGroup,
    pub gtilde: Perm,
    /// α(x) as an exponent of ζ₄, aligned with `group.elements()`.
    pub alpha: Vec<u8>,
    /// c(x) on the elements of `a6`, aligned with `group.elements()`.
    pub conj: Vec<Perm>,
    pub conj_image_order: usize,
    pub fusion: FusionType,
}

impl ExtensionCandidate {
    /// Validates `group` and derives everything else from it and `gtilde`.
    pub fn assemble(kind: ExtensionKind, group: PermGroup, gtilde: Perm) -> Result<Self> {
        if group.order() != EXTENSION_ORDER {
            return Err(Error::Precondition(format!(
                "group has order {}, expected {EXTENSION_ORDER}",
                group.order()
            )));
        }
        if !group.contains(&gtilde) || gtilde.order() != 4 {
            return Err(Error::Precondition("gtilde must be an order-4 element of the group".into()));
        }
        let a6 = derived_subgroup(&group);
        if !has_a6_certificate(&a6) {
            return Err(Error::Precondition("derived subgroup is not A6".into()));
        }
        let powers: Vec<Perm> = (0..4).map(|k| gtilde.pow(-k)).collect();
        let alpha = group
            .elements()
            .iter()
            .map(|x| {
                (0..4u8)
                    .find(|&k| a6.contains(&powers[k as usize].compose(x)))
                    .ok_or_else(|| Error::Precondition("gtilde does not generate G/A6".into()))
            })
            .collect::<Result<Vec<u8>>>()?;
        let ci = conjugation_image(&group, &a6)?;
        let fusion = fusion_type(&ci.image, &a6)?;
        Ok(ExtensionCandidate {
            kind,
            conj_image_order: ci.image.order(),
            conj: ci.map,
            group,
            a6,
            gtilde,
            alpha,
            fusion,
        })
    }

    pub fn alpha_of(&self, x: &Perm) -> Option<u8> {
        self.group.index_of(x).map(|i| self.alpha[i])
    }

    pub fn conj_of(&self, x: &Perm) -> Option<&Perm> {
        self.group.index_of(x).map(|i| &self.conj[i])
    }

    /// Whether g̃² centralises A₆.
    pub fn gtilde_square_centralizes(&self) -> bool {
        let sq = self.gtilde.pow(2);
        self.a6.generators().iter().all(|a| a.commutes_with(&sq))
    }

    pub fn fingerprint(&self) -> Fingerprint {
        fingerprint(&self.group)
    }

    /// The group with points shuffled by a random relabelling and a fresh
    /// generating set, together with the relabelling.
    pub fn relabeled_group<R: Rng + ?Sized>(&self, rng: &mut R) -> (PermGroup, Perm) {
        let mut images: Vec<usize> = (0..self.group.degree()).collect();
        images.shuffle(rng);
        let p = Perm::from_images(images).expect("shuffled points");
        (self.group.conjugate_by(&p).with_random_generators(rng), p)
    }

    /// The same candidate after `relabeled_group`.
    pub fn relabel<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Self> {
        let (group, p) = self.relabeled_group(rng);
        ExtensionCandidate::assemble(self.kind, group, self.gtilde.conjugate_by(&p))
    }

    pub fn describe(&self) -> Value {
        json!({
            "kind": self.kind,
            "notation": self.kind.notation(),
            "degree": self.group.degree(),
            "generators": self.group.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "gtilde": self.gtilde.to_string(),
            "conj_image_order": self.conj_image_order,
            "fusion": self.fusion,
            "fingerprint": self.fingerprint(),
        })
    }
}

fn a6_on_six() -> Vec<Perm> {
    vec![
        Perm::parse("(1 2 3)", 6).unwrap(),
        Perm::parse("(2 3 4 5 6)", 6).unwrap(),
    ]
}

/// The element g ∈ N paired with ζ₄, and generators of the A₆ inside N.
fn default_parts(kind: ExtensionKind) -> (Vec<Perm>, Perm) {
    match kind {
        ExtensionKind::A6_4 => (a6_on_six(), Perm::identity(6)),
        ExtensionKind::S6_2 => (a6_on_six(), Perm::parse("(1 2)", 6).unwrap()),
        ExtensionKind::PGL29_2 => {
            let h = build_pgl29()
                .elements()
                .iter()
                .find(|x| x.order() == 10)
                .expect("PGL(2,9) has elements of order 10")
                .clone();
            (build_psl29().generators().to_vec(), h.pow(5))
        }
        ExtensionKind::M10_2 => {
            let o = classify_overgroups().expect("overgroup classification");
            let g = o
                .m10
                .elements()
                .iter()
                .find(|x| x.order() == 4 && !o.psl.contains(x))
                .expect("M10 has order-4 elements outside PSL(2,9)")
                .clone();
            (o.psl.generators().to_vec(), g)
        }
    }
}

/// ⟨A₆ × 1, (g, ζ₄)⟩ inside N × μ₄.
pub fn build_from_parts(kind: ExtensionKind, a6_gens: &[Perm], g: &Perm) -> Result<ExtensionCandidate> {
    let n = g.degree();
    let z = mu4_generator(0);
    let one = Perm::identity(4);
    let gtilde = g.direct_sum(&z);
    let mut gens: Vec<Perm> = a6_gens.iter().map(|a| a.direct_sum(&one)).collect();
    gens.push(gtilde.clone());
    let group = PermGroup::generate_with_degree(n + 4, gens)?;
    ExtensionCandidate::assemble(kind, group, gtilde)
}

pub fn build_candidate(kind: ExtensionKind) -> ExtensionCandidate {
    let (gens, g) = default_parts(kind);
    build_from_parts(kind, &gens, &g).expect("the standard construction has order 1440")
}

/// M10(2) built from an arbitrary order-4 element of M10 ∖ PSL(2,9).
pub fn build_m10_with(g: &Perm) -> Result<ExtensionCandidate> {
    let o = classify_overgroups()?;
    if !o.m10.contains(g) || o.psl.contains(g) || g.order() != 4 {
        return Err(Error::Precondition("g must have order 4 in M10 outside PSL(2,9)".into()));
    }
    build_from_parts(ExtensionKind::M10_2, o.psl.generators(), g)
}

pub fn build_all() -> Vec<ExtensionCandidate> {
    ExtensionKind::ALL.into_iter().map(build_candidate).collect()
}

/// Recovers the kind from the abstract group alone: the order of the image
/// of c and, when that is 720, the fusion pattern on A₆'s classes.
pub fn identify_group(group: &PermGroup) -> Result<ExtensionKind> {
    let a6 = derived_subgroup(group);
    if group.order() != EXTENSION_ORDER || !has_a6_certificate(&a6) {
        return Err(Error::Precondition("not an extension of A6 of order 1440".into()));
    }
    let image = conjugation_image_group(group, &a6)?;
    match image.order() {
        360 => Ok(ExtensionKind::A6_4),
        720 => match fusion_type(&image, &a6)? {
            FusionType { swaps_3: false, swaps_5: true } => Ok(ExtensionKind::S6_2),
            FusionType { swaps_3: true, swaps_5: false } => Ok(ExtensionKind::PGL29_2),
            FusionType { swaps_3: true, swaps_5: true } => Ok(ExtensionKind::M10_2),
            f => Err(Error::Internal(format!("unexpected fusion pattern {f:?}"))),
        },
        k => Err(Error::Internal(format!("conjugation image of order {k}"))),
    }
}

pub fn identify(c: &ExtensionCandidate) -> Result<ExtensionKind> {
    identify_group(&c.group)
}

/// Distinct fingerprints and distinct identified kinds.
pub fn pairwise_nonisomorphic(candidates: &[ExtensionCandidate]) -> bool {
    let prints: HashSet<Fingerprint> = candidates.iter().map(|c| c.fingerprint()).collect();
    let kinds: HashSet<ExtensionKind> = candidates.iter().filter_map(|c| identify(c).ok()).collect();
    prints.len() == candidates.len() && kinds.len() == candidates.len()
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub kind: ExtensionKind,
    /// (c, α) is injective on G.
    pub injective: bool,
    /// A central involution outside A₆ with α = 2 and trivial c.
    pub central_involution: Option<String>,
    pub f_conj_trivial: bool,
    pub f_alpha: Option<u8>,
    /// α⁻¹(μ₂) = A₆ ∪ A₆·f.
    pub product_decomposition: bool,
    /// c(h) outside the inner part forces α(h) odd.
    pub outer_implies_odd: bool,
    /// ⟨g̃⟩ ∩ A₆ = 1.
    pub splits: bool,
    pub witness: Option<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.central_involution.is_some()
            && self.f_conj_trivial
            && self.f_alpha == Some(2)
            && self.product_decomposition
            && self.outer_implies_odd
            && self.splits
    }
}

pub fn verify_structure(c: &ExtensionCandidate) -> StructureReport {
    let elements = c.group.elements();
    let mut witness = None;

    let mut seen = HashSet::new();
    let mut injective = true;
    for (i, x) in elements.iter().enumerate() {
        if !seen.insert((&c.conj[i], c.alpha[i])) {
            injective = false;
            witness.get_or_insert_with(|| format!("c~ repeats at {x}"));
            break;
        }
    }

    let f = elements.iter().enumerate().find(|(i, x)| {
        c.alpha[*i] == 2 && c.conj[*i].is_identity() && x.order() == 2 && !c.a6.contains(x)
    });
    let (mut central, mut f_conj_trivial, mut f_alpha, mut product) = (None, false, None, false);
    match f {
        Some((i, f)) => {
            central = Some(f.to_string());
            f_conj_trivial = c.conj[i].is_identity();
            f_alpha = Some(c.alpha[i]);
            let even: HashSet<&Perm> = elements
                .iter()
                .enumerate()
                .filter(|(k, _)| c.alpha[*k].is_multiple_of(2))
                .map(|(_, x)| x)
                .collect();
            let product_set: HashSet<Perm> = c
                .a6
                .elements()
                .iter()
                .flat_map(|a| [a.clone(), a.compose(f)])
                .collect();
            product = even.len() == product_set.len() && product_set.iter().all(|x| even.contains(x));
            if !product {
                witness.get_or_insert_with(|| "alpha^-1(mu2) differs from A6 x <f>".into());
            }
        }
        None => {
            witness.get_or_insert_with(|| "no central involution with alpha = 2".into());
        }
    }

    let inner: HashSet<&Perm> = elements
        .iter()
        .enumerate()
        .filter(|(k, _)| c.alpha[*k] == 0)
        .map(|(k, _)| &c.conj[k])
        .collect();
    let mut outer_implies_odd = true;
    for (i, x) in elements.iter().enumerate() {
        if !inner.contains(&c.conj[i]) && c.alpha[i].is_multiple_of(2) {
            outer_implies_odd = false;
            witness.get_or_insert_with(|| format!("{x} is outer with even alpha"));
            break;
        }
    }

    let splits = c.gtilde.order() == 4 && !c.a6.contains(&c.gtilde.pow(2));
    if !splits {
        witness.get_or_insert_with(|| "<gtilde> meets A6".into());
    }

    StructureReport {
        kind: c.kind,
        injective,
        central_involution: central,
        f_conj_trivial,
        f_alpha,
        product_decomposition: product,
        outer_implies_odd,
        splits,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::center;
    use rand::SeedableRng;

    #[test]
    fn orders_and_quotients() {
        for c in build_all() {
            assert_eq!(c.group.order(), 1440, "{}", c.kind);
            assert_eq!(c.a6.order(), 360);
            assert_eq!(c.alpha_of(&c.gtilde), Some(1));
            // α is constant on cosets and additive on generators
            for (i, x) in c.group.elements().iter().enumerate() {
                for s in c.group.generators() {
                    let xs = x.compose(s);
                    assert_eq!(c.alpha_of(&xs).unwrap(), (c.alpha[i] + c.alpha_of(s).unwrap()) % 4);
                }
            }
        }
    }

    #[test]
    fn a6_4_is_direct() {
        let c = build_candidate(ExtensionKind::A6_4);
        assert_eq!(center(&c.group).order(), 4);
        assert_eq!(c.conj_image_order, 360);
        let s = build_candidate(ExtensionKind::S6_2);
        assert_eq!(center(&s.group).order(), 2);
    }

    #[test]
    fn square_dichotomy() {
        for c in build_all() {
            assert_eq!(c.gtilde_square_centralizes(), c.kind != ExtensionKind::M10_2, "{}", c.kind);
        }
    }

    #[test]
    fn structure_holds() {
        for c in build_all() {
            let r = verify_structure(&c);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn rejects_wrong_order() {
        let mut gens = a6_on_six()
            .iter()
            .map(|a| a.direct_sum(&Perm::identity(2)))
            .collect::<Vec<_>>();
        let t = Perm::identity(6).direct_sum(&Perm::parse("(1 2)", 2).unwrap());
        gens.push(t.clone());
        let g = PermGroup::generate(gens).unwrap();
        assert_eq!(g.order(), 720);
        assert!(matches!(
            ExtensionCandidate::assemble(ExtensionKind::A6_4, g, t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn identify_after_relabel() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for c in build_all() {
            assert_eq!(identify(&c).unwrap(), c.kind);
            let r = c.relabel(&mut rng).unwrap();
            assert_eq!(identify_group(&r.group).unwrap(), c.kind);
        }
    }

    #[test]
    fn nonisomorphic_and_choice_independent() {
        let all = build_all();
        assert!(pairwise_nonisomorphic(&all));
        let o = classify_overgroups().unwrap();
        let last = o
            .m10
            .elements()
            .iter()
            .rev()
            .find(|x| x.order() == 4 && !o.psl.contains(x))
            .unwrap();
        let other = build_m10_with(last).unwrap();
        assert_ne!(other.gtilde, all[3].gtilde);
        assert_eq!(other.fingerprint(), all[3].fingerprint());
        assert_eq!(identify(&other).unwrap(), ExtensionKind::M10_2);
    }
}
