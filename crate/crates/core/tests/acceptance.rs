//! End-to-end acceptance criteria. Each `criterion_NN_*` test is one line of
//! the pass/fail summary printed by the test harness.

use std::collections::{BTreeSet, HashSet};

use a6ext_core::chartab::{
    admissible_prime_after, character_table, character_table_with_prime, half_sqrt5,
    match_reference_table, CharacterTable,
};
use a6ext_core::exact::{int, CycloNum, Rational};
use a6ext_core::extbuild::{
    build_all, identify, identify_group, pairwise_nonisomorphic, verify_structure, ExtensionKind,
};
use a6ext_core::k3verify::{
    admissible_cases, argument_free_c4, argument_order5_blocks, decomposition_system, euler_iota,
    lattice_checks, lefschetz_invariant_rank, min_square_fixed_points, run_exclusion,
    solve_decomposition, MultiplicityVector, NikulinTable, SignCase, Status,
};
use a6ext_core::permgrp::{fingerprint, Perm, PermGroup};
use a6ext_core::pgl9::{build_pgammal29, build_pgl29, classify_overgroups, m10_order4_class_check};
use num::complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: [u8; 32] = *b"a6ext acceptance fixed seed 0001";
const CASES: u32 = 128;

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &SEED),
    )
}

fn psl_table() -> CharacterTable {
    character_table(&classify_overgroups().unwrap().psl).unwrap()
}

fn expected_solution() -> MultiplicityVector {
    MultiplicityVector(vec![1, 1, 0, 0, 1, 0])
}

#[test]
fn criterion_01_group_tower() {
    // |PGL(2,q)| = q³ − q, and Frobenius doubles it for q = 9
    let q: usize = 9;
    assert_eq!(build_pgl29().order(), q.pow(3) - q);
    assert_eq!(build_pgammal29().order(), 2 * (q.pow(3) - q));
    let o = classify_overgroups().unwrap();
    assert_eq!(o.patterns.len(), 3);
    let got: HashSet<(bool, bool)> = o.patterns.iter().map(|f| (f.swaps_3, f.swaps_5)).collect();
    let want: HashSet<(bool, bool)> = [(false, true), (true, false), (true, true)].into();
    assert_eq!(got, want);
}

#[test]
fn criterion_02_character_table() {
    let psl = classify_overgroups().unwrap().psl;
    let t = character_table(&psl).unwrap();
    assert_eq!(t.degrees(), vec![1, 5, 5, 8, 8, 9, 10]);
    assert!(match_reference_table(&t));
    let minus = half_sqrt5(1, -1);
    let plus = half_sqrt5(1, 1);
    let fives: Vec<usize> = (0..7).filter(|&c| t.classes[c].element_order == 5).collect();
    for r in [3, 4] {
        let vals: HashSet<String> = fives.iter().map(|&c| t.rows[r][c].to_string()).collect();
        let want: HashSet<String> = [minus.to_string(), plus.to_string()].into();
        assert_eq!(
            fives.iter().filter(|&&c| t.rows[r][c] == minus || t.rows[r][c] == plus).count(),
            2
        );
        assert_eq!(vals.len(), want.len());
    }
    let q = admissible_prime_after(t.exponent as u64, t.group_order as u64, t.prime);
    let again = character_table_with_prime(&psl, q).unwrap();
    assert_ne!(q, t.prime);
    assert_eq!(again.rows, t.rows);
}

#[test]
fn criterion_03_extensions() {
    let all = build_all();
    assert!(all.iter().all(|c| c.group.order() == 1440));
    let prints: HashSet<_> = all.iter().map(|c| fingerprint(&c.group)).collect();
    assert_eq!(prints.len(), 4);
    assert!(pairwise_nonisomorphic(&all));
    let mut rng = ChaCha8Rng::from_seed(SEED);
    for c in &all {
        assert_eq!(identify(c).unwrap(), c.kind);
        for _ in 0..20 {
            let (g, _) = c.relabeled_group(&mut rng);
            assert_eq!(identify_group(&g).unwrap(), c.kind);
        }
        let r = verify_structure(c);
        assert!(r.passed(), "{r:?}");
        // c̃(f) = (1, −1): trivial conjugation and α(f) = 2
        let f = Perm::parse(r.central_involution.as_deref().unwrap(), c.group.degree()).unwrap();
        assert!(c.conj_of(&f).unwrap().is_identity());
        assert_eq!(c.alpha_of(&f), Some(2));
        assert!(c.a6.elements().iter().all(|a| a.commutes_with(&f)));
    }
}

#[test]
fn criterion_04_m10_coset() {
    let o = classify_overgroups().unwrap();
    let r = m10_order4_class_check(&o.m10, &o.psl).unwrap();
    // independent scan: conjugate one order-4 coset element by all of M10
    let outside: Vec<&Perm> = o.m10.elements().iter().filter(|x| !o.psl.contains(x)).collect();
    assert_eq!(outside.iter().filter(|x| x.order() == 2).count(), 0);
    let order4: BTreeSet<&Perm> = outside.iter().copied().filter(|x| x.order() == 4).collect();
    let first = *order4.iter().next().unwrap();
    let orbit: BTreeSet<Perm> = o.m10.elements().iter().map(|y| first.conjugate_by(y)).collect();
    assert!(order4.iter().all(|x| orbit.contains(*x)));
    assert_eq!(r.involutions_outside, 0);
    assert!(r.order4_outside_one_class);
}

#[test]
fn criterion_05_lefschetz_rank() {
    let n = NikulinTable::standard();
    let psl = classify_overgroups().unwrap().psl;
    // element-by-element sum instead of class sums
    let total: i64 = psl
        .elements()
        .iter()
        .map(|g| match g.order() {
            1 => 24,
            d => n.fixed_points(d).unwrap() as i64,
        })
        .sum();
    assert_eq!(Rational::new(total.into(), 360.into()), int(5));
    assert_eq!(lefschetz_invariant_rank(&psl, &n).unwrap(), int(5));
}

/// Float evaluation of every equation over the search box, using the
/// reference table with √5 as a float.
fn float_solutions(identity_lhs: f64) -> Vec<Vec<u64>> {
    let r5 = 5f64.sqrt();
    let (m, p) = ((1.0 - r5) / 2.0, (1.0 + r5) / 2.0);
    let rows: [[f64; 7]; 6] = [
        [5., 1., 2., -1., -1., 0., 0.],
        [5., 1., -1., 2., -1., 0., 0.],
        [8., 0., -1., -1., 0., m, p],
        [8., 0., -1., -1., 0., p, m],
        [9., 1., 0., 0., 1., -1., -1.],
        [10., -2., 1., 1., 0., 0., 0.],
    ];
    let lhs = [identity_lhs, 4., 2., 2., 0., 0., 0.];
    let bounds = [5u64, 5, 3, 3, 3, 2];
    let mut out = Vec::new();
    let mut a = [0u64; 6];
    loop {
        let ok = (0..7).all(|c| {
            let v = 1.0 + (0..6).map(|i| a[i] as f64 * rows[i][c]).sum::<f64>();
            (v - lhs[c]).abs() < 1e-9
        });
        if ok {
            out.push(a.to_vec());
        }
        let mut i = 0;
        while i < 6 && a[i] == bounds[i] {
            a[i] = 0;
            i += 1;
        }
        if i == 6 {
            return out;
        }
        a[i] += 1;
    }
}

#[test]
fn criterion_06_decomposition() {
    let t = psl_table();
    let sys = decomposition_system(&t, &NikulinTable::standard()).unwrap();
    let sols = solve_decomposition(&sys);
    assert_eq!(sols, vec![expected_solution()]);
    assert_eq!(float_solutions(20.0), vec![expected_solution().0]);
    assert!(solve_decomposition(&sys.with_identity_target(21)).is_empty());
    assert!(float_solutions(21.0).is_empty());
}

#[test]
fn criterion_07_sign_cases() {
    let got: BTreeSet<SignCase> = admissible_cases().into_iter().collect();
    let want: BTreeSet<SignCase> = [
        SignCase::new(-1, 1, -1),
        SignCase::new(1, -1, -1),
        SignCase::new(-1, -1, -1),
        SignCase::new(-1, -1, 1),
    ]
    .into();
    assert_eq!(got, want);
    for c in SignCase::all() {
        let direct = 1 + 5 * (c.eps2 + c.eps3) as i64 + 9 * c.eps6 as i64;
        assert_eq!(euler_iota(c), direct);
    }

    let t = psl_table();
    let r = run_exclusion(&build_all(), &t, &NikulinTable::standard(), &expected_solution());
    for kind in [ExtensionKind::A6_4, ExtensionKind::S6_2, ExtensionKind::PGL29_2] {
        for case in &want {
            let designated = match (case.eps2, case.eps3, case.eps6) {
                (-1, -1, -1) => "nonintegral_euler_number",
                (-1, -1, 1) if kind == ExtensionKind::PGL29_2 => "order5_blocks",
                (-1, -1, 1) => "pigeonhole_fixed_points",
                _ => "three_class_trace",
            };
            assert!(
                r.records_for(kind).any(|x| x.case == *case
                    && x.outcome.argument == designated
                    && x.outcome.status == Status::ContradictionFound),
                "{kind} {case}"
            );
        }
    }
    assert_eq!(r.verdict, Some(ExtensionKind::M10_2));
    assert_eq!(argument_free_c4(2).status, Status::ContradictionFound);
}

#[test]
fn criterion_08_order5_blocks() {
    // multisets of exponents mod 5, closed under k ↦ 2k
    fn stable_totals(size: usize) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        let mut counts = [0usize; 5];
        fn rec(i: usize, left: usize, counts: &mut [usize; 5], out: &mut BTreeSet<i64>) {
            if i == 5 {
                if left == 0 && (1..5).all(|k| counts[k] == counts[(2 * k) % 5]) {
                    let tr: f64 = (0..5)
                        .map(|k| counts[k] as f64 * (2.0 * std::f64::consts::PI * k as f64 / 5.0).cos())
                        .sum();
                    out.insert(tr.round() as i64);
                }
                return;
            }
            for c in 0..=left {
                counts[i] = c;
                rec(i + 1, left - c, counts, out);
            }
            counts[i] = 0;
        }
        rec(0, size, &mut counts, &mut out);
        out
    }
    let a = stable_totals(3);
    let b = stable_totals(6);
    assert_eq!(a, [3].into());
    assert_eq!(b, [1, 6].into());
    let totals: BTreeSet<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
    assert_eq!(totals, [4, 9].into());
    assert!(!totals.contains(&-1));

    let pgl = build_all().into_iter().find(|c| c.kind == ExtensionKind::PGL29_2).unwrap();
    let o = argument_order5_blocks(&pgl, &psl_table());
    assert_eq!(o.status, Status::ContradictionFound);
    assert_eq!(o.witnesses["achievable_totals"], serde_json::json!([4, 9]));
    assert_eq!(o.witnesses["required_total"], -1);
}

#[test]
fn criterion_09_pigeonhole() {
    // Heap's algorithm over all arrangements of six points
    fn heap(k: usize, a: &mut [usize; 6], visit: &mut dyn FnMut(&[usize; 6])) {
        if k == 1 {
            visit(a);
            return;
        }
        for i in 0..k {
            heap(k - 1, a, visit);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a = [0, 1, 2, 3, 4, 5];
    let (mut seen, mut qualifying, mut min) = (0, 0, usize::MAX);
    heap(6, &mut a, &mut |p| {
        seen += 1;
        let sq: Vec<usize> = (0..6).map(|i| p[p[i]]).collect();
        if (0..6).all(|i| sq[sq[i]] == i) {
            qualifying += 1;
            min = min.min((0..6).filter(|&i| sq[i] == i).count());
        }
    });
    assert_eq!(seen, 720);
    assert_eq!(min, 2);
    assert_eq!(min_square_fixed_points(6), (min, qualifying));
}

#[test]
fn criterion_10_lattices() {
    let checks = lattice_checks();
    let k3 = checks.iter().find(|c| c.rank == 22).unwrap();
    assert_eq!(k3.signature, (3, 19));
    assert_eq!(k3.determinant.abs(), 1);
    assert!(k3.even);
    let t = checks.iter().find(|c| c.name == "T").unwrap();
    assert_eq!(t.determinant, 36);
    assert!(t.even);
    assert_eq!(t.signature, (2, 0));
    assert!(checks.iter().all(|c| c.passed));
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn small_group(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (2..=max_degree).prop_flat_map(|n| {
        (perm_strategy(n), perm_strategy(n))
            .prop_map(move |(a, b)| PermGroup::generate_with_degree(n, vec![a, b]).unwrap())
    })
}

fn cyclo_strategy() -> impl Strategy<Value = (u32, CycloNum)> {
    (1u32..=24).prop_flat_map(|n| {
        proptest::collection::vec((0..n as i64, -4i64..=4, 1i64..=3), 0..6).prop_map(move |terms| {
            let x = CycloNum::from_terms(
                n,
                terms.into_iter().map(|(k, a, b)| (k, Rational::new(a.into(), b.into()))),
            )
            .unwrap();
            (n, x)
        })
    })
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-6 * (1.0 + a.norm().max(b.norm()))
}

#[test]
fn criterion_11_properties() {
    // class equation
    runner()
        .run(&small_group(6), |g| {
            let cc = g.conjugacy_classes();
            prop_assert_eq!(cc.sizes().iter().sum::<usize>(), g.order());
            prop_assert!(cc.sizes().iter().all(|s| g.order() % s == 0));
            Ok(())
        })
        .unwrap();

    // orthogonality, checked numerically against the exact engine
    runner()
        .run(&small_group(5), |g| {
            let t = character_table(&g).unwrap();
            let r = t.rows.len();
            let inv: Vec<usize> = (0..r)
                .map(|i| t.classes[i].power_map[t.exponent as usize - 1])
                .collect();
            for a in 0..r {
                for b in 0..r {
                    let s: Complex64 = (0..r)
                        .map(|i| {
                            t.rows[a][i].to_complex() * t.rows[b][inv[i]].to_complex()
                                * t.classes[i].size as f64
                        })
                        .sum();
                    let want = if a == b { t.group_order as f64 } else { 0.0 };
                    prop_assert!(close(s, want.into()), "rows {} {}", a, b);
                    let c: Complex64 = t.rows.iter().map(|row| row[a].to_complex() * row[inv[b]].to_complex()).sum();
                    let want = if a == b { t.group_order as f64 / t.classes[a].size as f64 } else { 0.0 };
                    prop_assert!(close(c, want.into()), "columns {} {}", a, b);
                }
            }
            Ok(())
        })
        .unwrap();

    // cyclotomic ring axioms, with complex embedding as oracle
    runner()
        .run(&(cyclo_strategy(), cyclo_strategy(), cyclo_strategy()), |((_, x), (_, y), (_, z))| {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x - &x).is_zero());
            prop_assert!(close((&x * &y).to_complex(), x.to_complex() * y.to_complex()));
            prop_assert!(close((&x + &z).to_complex(), x.to_complex() + z.to_complex()));
            Ok(())
        })
        .unwrap();

    // Galois equivariance on numbers and on character tables
    runner()
        .run(&(cyclo_strategy(), cyclo_strategy(), 1i64..200), |((n, x), (_, y), k)| {
            let m = num::integer::lcm(num::integer::lcm(x.order(), y.order()), n);
            let x = x.embed(m).unwrap();
            let y = y.embed(m).unwrap();
            if num::integer::gcd(k, m as i64) != 1 {
                prop_assert!(x.galois(k).is_err());
                return Ok(());
            }
            let gx = x.galois(k).unwrap();
            prop_assert_eq!((&x * &y).galois(k).unwrap(), &gx * &y.galois(k).unwrap());
            prop_assert_eq!((&x + &y).galois(k).unwrap(), &gx + &y.galois(k).unwrap());
            // σ_k acts on the complex embedding coefficientwise as ζ ↦ ζᵏ
            let zeta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / m as f64);
            let oracle: Complex64 = x
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let c: f64 = num::ToPrimitive::to_f64(c).unwrap();
                    zeta.powi((j as i64 * k).rem_euclid(m as i64) as i32) * c
                })
                .sum();
            prop_assert!(close(gx.to_complex(), oracle));
            Ok(())
        })
        .unwrap();

    runner()
        .run(&(small_group(5), 1i64..100), |(g, k)| {
            let t = character_table(&g).unwrap();
            let e = t.exponent as i64;
            if num::integer::gcd(k, e) != 1 {
                return Ok(());
            }
            for row in &t.rows {
                for (i, c) in t.classes.iter().enumerate() {
                    let j = c.power_map[(k % e) as usize];
                    prop_assert_eq!(&row[i].galois(k).unwrap(), &row[j]);
                }
            }
            Ok(())
        })
        .unwrap();
}
