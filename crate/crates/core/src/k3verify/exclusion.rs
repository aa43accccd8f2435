use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::decomposition::MultiplicityVector;
use super::nikulin::NikulinTable;
use crate::chartab::{class_labels, format_value, CharacterTable};
use crate::error::{Error, Result};
use crate::exact::{int, CycloNum};
use crate::extbuild::{ExtensionCandidate, ExtensionKind};
use crate::permgrp::{Perm, PermGroup};
use crate::pgl9::build_pgl29;

/// Fixed locus of an antisymplectic involution commuting with A₆:
/// its Euler number is ≤ 0, and 0 only when the locus is empty.
pub const AXIOM_A1: &str = "A1: chi_top(X^iota) <= 0, with equality iff X^iota is empty";
/// Composites ισ with σ ∈ A₆ of order 3 or 5 have finite fixed loci.
pub const AXIOM_A2: &str = "A2: chi_top(X^(iota sigma)) >= 0 for sigma in A6 of order 3 or 5";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ContradictionFound,
    NoContradiction,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::ContradictionFound => "contradiction_found",
            Status::NoContradiction => "no_contradiction",
            Status::NotApplicable => "not_applicable",
        })
    }
}

/// Signs of ι* on χ₂, χ₃ and χ₆.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignCase {
    pub eps2: i8,
    pub eps3: i8,
    pub eps6: i8,
}

impl SignCase {
    pub const fn new(eps2: i8, eps3: i8, eps6: i8) -> SignCase {
        SignCase { eps2, eps3, eps6 }
    }

    pub fn all() -> Vec<SignCase> {
        let s = [1i8, -1];
        let mut out = Vec::with_capacity(8);
        for a in s {
            for b in s {
                for c in s {
                    out.push(SignCase::new(a, b, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for SignCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.eps2, self.eps3, self.eps6)
    }
}

/// χ_top(X^ι) = 1 + 5(ε₂ + ε₃) + 9ε₆.
pub fn euler_iota(case: SignCase) -> i64 {
    1 + 5 * (case.eps2 as i64 + case.eps3 as i64) + 9 * case.eps6 as i64
}

/// Sign cases allowed by axiom A1, in enumeration order.
pub fn admissible_cases() -> Vec<SignCase> {
    SignCase::all().into_iter().filter(|c| euler_iota(*c) <= 0).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ArgumentOutcome {
    pub argument: String,
    pub status: Status,
    pub witnesses: Value,
    pub axioms_used: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl ArgumentOutcome {
    fn not_applicable(argument: &str, reason: &str) -> Self {
        ArgumentOutcome {
            argument: argument.into(),
            status: Status::NotApplicable,
            witnesses: Value::Null,
            axioms_used: Vec::new(),
            reason: Some(reason.into()),
        }
    }
}

/// Rows of the degree-5, degree-5 and degree-9 characters.
fn rows_2_3_6(table: &CharacterTable) -> Result<[usize; 3]> {
    let d = table.degrees();
    if d != [1, 5, 5, 8, 8, 9, 10] {
        return Err(Error::Precondition("expected the A6 character degrees".into()));
    }
    Ok([1, 2, 5])
}

/// 1 + Σ εᵢ aᵢ χᵢ(c) for the summands χ₂, χ₃, χ₆ of `solution`.
pub fn twisted_trace(
    table: &CharacterTable,
    solution: &MultiplicityVector,
    case: SignCase,
    class: usize,
) -> Result<CycloNum> {
    let rows = rows_2_3_6(table)?;
    let mut acc = CycloNum::from_int(table.exponent, 1)?;
    for (r, eps) in rows.into_iter().zip([case.eps2, case.eps3, case.eps6]) {
        let a = solution.0[r - 1] as i64 * eps as i64;
        acc = &acc + &table.rows[r][class].scale(&int(a));
    }
    Ok(acc)
}

/// For cases (−1,1,−1) and (1,−1,−1): the trace of ισ on S(X) at an
/// order-3 σ is the Euler number of X^{ισ}, and it goes negative.
pub fn argument_3class_trace(
    case: SignCase,
    table: &CharacterTable,
    solution: &MultiplicityVector,
) -> ArgumentOutcome {
    const NAME: &str = "three_class_trace";
    if case != SignCase::new(-1, 1, -1) && case != SignCase::new(1, -1, -1) {
        return ArgumentOutcome::not_applicable(NAME, "case outside (-1,1,-1), (1,-1,-1)");
    }
    let labels = class_labels(table);
    let mut best: Option<(usize, CycloNum)> = None;
    for (i, c) in table.classes.iter().enumerate() {
        if c.element_order != 3 {
            continue;
        }
        let v = match twisted_trace(table, solution, case, i) {
            Ok(v) => v,
            Err(e) => return ArgumentOutcome::not_applicable(NAME, &e.to_string()),
        };
        if best.as_ref().is_none_or(|(_, b)| v.as_rational() < b.as_rational()) {
            best = Some((i, v));
        }
    }
    let Some((class, value)) = best else {
        return ArgumentOutcome::not_applicable(NAME, "no class of order 3");
    };
    let negative = value.as_rational().is_some_and(|r| r < int(0));
    ArgumentOutcome {
        argument: NAME.into(),
        status: if negative { Status::ContradictionFound } else { Status::NoContradiction },
        witnesses: json!({
            "class": labels[class],
            "euler_number": format_value(&value),
        }),
        axioms_used: vec![AXIOM_A2.into()],
        reason: None,
    }
}

/// Candidate values of χ_top(X^g̃) in case (−1,−1,−1): 3 + (d − 2n)ζ₄,
/// where d = 9 when g̃ swaps χ₂ and χ₃ and d = 5 + 5 + 9 otherwise.
pub fn nonintegral_candidates(swap23: bool) -> Vec<CycloNum> {
    let d: i64 = if swap23 { 9 } else { 5 + 5 + 9 };
    (0..=d)
        .map(|n| {
            let three = CycloNum::from_int(4, 3).unwrap();
            &three + &CycloNum::zeta_pow(4, 1).unwrap().scale(&int(d - 2 * n))
        })
        .collect()
}

pub fn argument_nonintegral(case: SignCase, swap23: bool) -> ArgumentOutcome {
    const NAME: &str = "nonintegral_euler_number";
    if case != SignCase::new(-1, -1, -1) {
        return ArgumentOutcome::not_applicable(NAME, "case is not (-1,-1,-1)");
    }
    let values = nonintegral_candidates(swap23);
    let integral: Vec<String> = values
        .iter()
        .filter(|v| v.as_rational().is_some())
        .map(ToString::to_string)
        .collect();
    ArgumentOutcome {
        argument: NAME.into(),
        status: if integral.is_empty() { Status::ContradictionFound } else { Status::NoContradiction },
        witnesses: json!({
            "swap23": swap23,
            "values_checked": values.len(),
            "integral_values": integral,
        }),
        axioms_used: vec![AXIOM_A1.into()],
        reason: None,
    }
}

/// Least number of fixed points of p² over permutations p of `n` points
/// with p⁴ = 1, and how many such p there are.
pub fn min_square_fixed_points(n: usize) -> (usize, usize) {
    let sym = if n < 2 {
        PermGroup::trivial(n)
    } else {
        let t = Perm::from_cycles(n, &[vec![0, 1]]).unwrap();
        let c = Perm::from_cycles(n, &[(0..n).collect()]).unwrap();
        PermGroup::generate(vec![t, c]).expect("symmetric group")
    };
    let mut min = n;
    let mut count = 0;
    for p in sym.elements() {
        let sq = p.compose(p);
        if sq.compose(&sq).is_identity() {
            count += 1;
            min = min.min(sq.fixed_points());
        }
    }
    (min, count)
}

/// For A6(4) and S6(2) in case (−1,−1,1): g̃ permutes the fixed points of
/// τ = (4 5 6), so ι = g̃² fixes some of them, yet X^ι must be empty.
pub fn argument_pigeonhole(c: &ExtensionCandidate, nikulin: &NikulinTable) -> ArgumentOutcome {
    const NAME: &str = "pigeonhole_fixed_points";
    if !matches!(c.kind, ExtensionKind::A6_4 | ExtensionKind::S6_2) {
        return ArgumentOutcome::not_applicable(NAME, "kind is not A6_4 or S6_2");
    }
    let tau = Perm::parse("(4 5 6)", c.group.degree()).unwrap();
    let in_a6 = c.a6.contains(&tau);
    let commutes = tau.commutes_with(&c.gtilde);
    let set_size = nikulin.fixed_points(3).unwrap_or(0) as usize;
    let (min_fixed, scanned) = min_square_fixed_points(set_size);
    let ok = in_a6 && commutes && min_fixed > 0;
    ArgumentOutcome {
        argument: NAME.into(),
        status: if ok { Status::ContradictionFound } else { Status::NoContradiction },
        witnesses: json!({
            "tau": tau.to_string(),
            "tau_in_a6": in_a6,
            "tau_commutes_with_gtilde": commutes,
            "fixed_set_size": set_size,
            "permutations_with_p4_identity": scanned,
            "min_fixed_points_of_p2": min_fixed,
        }),
        axioms_used: vec![AXIOM_A1.into()],
        reason: None,
    }
}

/// Traces of Galois-stable multisets of 5th roots of unity of size `k`:
/// some copies of 1 and whole orbits {ζ, ζ², ζ³, ζ⁴}.
pub fn stable_traces_order5(k: usize) -> BTreeSet<i64> {
    let orbit = (1..5).fold(CycloNum::zero(5).unwrap(), |acc, i| {
        &acc + &CycloNum::zeta_pow(5, i).unwrap()
    });
    (0..=k / 4)
        .map(|j| {
            let ones = CycloNum::from_int(5, (k - 4 * j) as i64).unwrap();
            let t = &ones + &orbit.scale(&int(j as i64));
            t.as_integer().expect("stable multisets have rational trace").try_into().unwrap()
        })
        .collect()
}

/// For PGL(2,9)(2) in case (−1,−1,1): σ = h² splits χ₆ into rational
/// blocks of sizes 9 − s and s, whose traces cannot sum to χ₆(σ) = −1.
pub fn argument_order5_blocks(c: &ExtensionCandidate, table: &CharacterTable) -> ArgumentOutcome {
    const NAME: &str = "order5_blocks";
    if c.kind != ExtensionKind::PGL29_2 {
        return ArgumentOutcome::not_applicable(NAME, "kind is not PGL29_2");
    }
    let h = build_pgl29()
        .elements()
        .iter()
        .find(|x| x.order() == 10)
        .expect("order-10 element")
        .clone();
    let z = crate::extbuild::mu4_generator(0);
    if h.pow(5).direct_sum(&z) != c.gtilde {
        return ArgumentOutcome::not_applicable(NAME, "gtilde is not (h^5, zeta4)");
    }
    let sigma = h.pow(2).direct_sum(&Perm::identity(4));
    let sigma_ok = c.a6.contains(&sigma)
        && c.alpha_of(&sigma) == Some(0)
        && sigma.order() == 5
        && sigma.commutes_with(&c.gtilde);

    // χ_top(X^g̃) = 2 + 1 + (9 − 2s) vanishes because X^ι is empty
    let s = (2 + 1 + 9) / 2;
    let block_sizes = [9 - s, s];
    let a = stable_traces_order5(block_sizes[0]);
    let b = stable_traces_order5(block_sizes[1]);
    let totals: BTreeSet<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();

    let required = rows_2_3_6(table).ok().and_then(|rows| {
        let class = table.classes.iter().position(|k| k.element_order == 5)?;
        table.rows[rows[2]][class].as_integer()
    });
    let required: Option<i64> = required.and_then(|r| r.try_into().ok());
    let contradiction = sigma_ok && required.is_some_and(|r| !totals.contains(&r));
    ArgumentOutcome {
        argument: NAME.into(),
        status: if contradiction { Status::ContradictionFound } else { Status::NoContradiction },
        witnesses: json!({
            "h": h.to_string(),
            "sigma": sigma.to_string(),
            "sigma_valid": sigma_ok,
            "s": s,
            "block_sizes": block_sizes,
            "traces_block_a": a,
            "traces_block_b": b,
            "achievable_totals": totals,
            "required_total": required,
        }),
        axioms_used: vec![AXIOM_A1.into()],
        reason: None,
    }
}

/// A free C₄ action would make 4 divide the holomorphic Euler number.
pub fn argument_free_c4(euler_number: i64) -> ArgumentOutcome {
    ArgumentOutcome {
        argument: "free_c4".into(),
        status: if euler_number % 4 != 0 {
            Status::ContradictionFound
        } else {
            Status::NoContradiction
        },
        witnesses: json!({ "euler_number": euler_number, "modulus": 4 }),
        axioms_used: vec![AXIOM_A1.into()],
        reason: None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionRecord {
    pub kind: ExtensionKind,
    pub case: SignCase,
    #[serde(flatten)]
    pub outcome: ArgumentOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionReport {
    pub admissible_cases: Vec<SignCase>,
    pub records: Vec<ExclusionRecord>,
    pub excluded: Vec<ExtensionKind>,
    pub survivors: Vec<ExtensionKind>,
    /// Every excluded kind has a contradiction in every admissible case.
    pub complete: bool,
    pub verdict: Option<ExtensionKind>,
}

impl ExclusionReport {
    pub fn records_for(&self, kind: ExtensionKind) -> impl Iterator<Item = &ExclusionRecord> {
        self.records.iter().filter(move |r| r.kind == kind)
    }
}

/// The case analysis for every candidate. Kinds whose g̃² centralises A₆
/// must reach a contradiction in each admissible sign case; the others
/// are outside the argument and survive.
pub fn run_exclusion(
    candidates: &[ExtensionCandidate],
    table: &CharacterTable,
    nikulin: &NikulinTable,
    solution: &MultiplicityVector,
) -> ExclusionReport {
    let cases = admissible_cases();
    let mut records = Vec::new();
    let mut excluded = Vec::new();
    let mut survivors = Vec::new();
    let mut complete = true;
    for c in candidates {
        let premise = c.gtilde_square_centralizes() && c.alpha_of(&c.gtilde.pow(2)) == Some(2);
        if !premise {
            for &case in &cases {
                records.push(ExclusionRecord {
                    kind: c.kind,
                    case,
                    outcome: ArgumentOutcome::not_applicable("premise", "c(g̃²) ≠ 1"),
                });
            }
            survivors.push(c.kind);
            continue;
        }
        let mut all_cases = true;
        for &case in &cases {
            let outcomes = match (case.eps2, case.eps3, case.eps6) {
                (-1, 1, -1) | (1, -1, -1) => vec![argument_3class_trace(case, table, solution)],
                (-1, -1, -1) => vec![argument_nonintegral(case, c.fusion.swaps_3)],
                _ => {
                    let primary = match c.kind {
                        ExtensionKind::PGL29_2 => argument_order5_blocks(c, table),
                        _ => argument_pigeonhole(c, nikulin),
                    };
                    vec![primary, argument_free_c4(2)]
                }
            };
            if outcomes[0].status != Status::ContradictionFound {
                all_cases = false;
            }
            records.extend(outcomes.into_iter().map(|outcome| ExclusionRecord {
                kind: c.kind,
                case,
                outcome,
            }));
        }
        if all_cases {
            excluded.push(c.kind);
        } else {
            complete = false;
            survivors.push(c.kind);
        }
    }
    let verdict = (survivors.len() == 1).then(|| survivors[0]);
    ExclusionReport {
        admissible_cases: cases,
        records,
        excluded,
        survivors,
        complete,
        verdict,
    }
}
