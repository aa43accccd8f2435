//! The A₆ character table as a fixed reference, plus matching and rendering.

use num::{Integer, One, Signed, Zero};
use serde_json::{json, Value};

use super::table::CharacterTable;
use crate::exact::{int, rat, CycloNum, Rational};

pub const A6_CLASS_NAMES: [&str; 7] = ["1A", "2A", "3A", "3B", "4A", "5A", "5B"];
const A6_CLASS_ORDERS: [usize; 7] = [1, 2, 3, 3, 4, 5, 5];
const A6_CLASS_SIZES: [usize; 7] = [1, 45, 40, 40, 90, 72, 72];

/// A labelled reference table. Columns carry (element order, class size).
#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub class_names: Vec<String>,
    pub class_orders: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub rows: Vec<Vec<CycloNum>>,
    /// Column permutations allowed when matching, each paired with the row
    /// permutation it induces.
    pub symmetries: Vec<(Vec<usize>, Vec<usize>)>,
}

/// √5 = 1 + 2(ζ₅ + ζ₅⁴).
pub fn sqrt5() -> CycloNum {
    CycloNum::from_terms(5, [(0, int(1)), (1, int(2)), (4, int(2))]).unwrap()
}

fn golden_ratio_pair() -> (CycloNum, CycloNum) {
    let minus = CycloNum::from_terms(5, [(1, int(-1)), (4, int(-1))]).unwrap();
    let plus = CycloNum::from_terms(5, [(0, int(1)), (1, int(1)), (4, int(1))]).unwrap();
    (minus, plus)
}

pub fn reference_a6_table() -> GoldenTable {
    let (m, p) = golden_ratio_pair();
    let i = |v: i64| CycloNum::from_int(5, v).unwrap();
    let rows = vec![
        vec![i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
        vec![i(5), i(1), i(2), i(-1), i(-1), i(0), i(0)],
        vec![i(5), i(1), i(-1), i(2), i(-1), i(0), i(0)],
        vec![i(8), i(0), i(-1), i(-1), i(0), m.clone(), p.clone()],
        vec![i(8), i(0), i(-1), i(-1), i(0), p, m],
        vec![i(9), i(1), i(0), i(0), i(1), i(-1), i(-1)],
        vec![i(10), i(-2), i(1), i(1), i(0), i(0), i(0)],
    ];
    let id: Vec<usize> = (0..7).collect();
    let swap = |v: &[usize], a: usize, b: usize| {
        let mut w = v.to_vec();
        w.swap(a, b);
        w
    };
    let mut symmetries = Vec::new();
    for s3 in [false, true] {
        for s5 in [false, true] {
            let mut cols = id.clone();
            let mut rows_perm = id.clone();
            if s3 {
                cols = swap(&cols, 2, 3);
                rows_perm = swap(&rows_perm, 1, 2);
            }
            if s5 {
                cols = swap(&cols, 5, 6);
                rows_perm = swap(&rows_perm, 3, 4);
            }
            symmetries.push((cols, rows_perm));
        }
    }
    GoldenTable {
        class_names: A6_CLASS_NAMES.iter().map(|s| s.to_string()).collect(),
        class_orders: A6_CLASS_ORDERS.to_vec(),
        class_sizes: A6_CLASS_SIZES.to_vec(),
        rows,
        symmetries,
    }
}

/// True iff `t` equals the golden table up to its listed symmetries, after
/// each side's rows are put in some order. Both column relabelling and the
/// induced row relabelling are tried independently, since the computed row
/// order depends on the computed column order.
pub fn match_table(t: &CharacterTable, golden: &GoldenTable) -> bool {
    let n = golden.rows.len();
    if t.rows.len() != n || t.num_classes() != golden.class_orders.len() {
        return false;
    }
    let labels_ok = t.classes.iter().enumerate().all(|(i, c)| {
        c.element_order == golden.class_orders[i] && c.size == golden.class_sizes[i]
    });
    if !labels_ok {
        return false;
    }
    for (cols, _) in &golden.symmetries {
        for (_, rows_perm) in &golden.symmetries {
            let ok = (0..n).all(|r| {
                let golden_row = &golden.rows[rows_perm[r]];
                (0..n).all(|c| t.rows[r][cols[c]] == golden_row[c])
            });
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn match_reference_table(t: &CharacterTable) -> bool {
    match_table(t, &reference_a6_table())
}

/// Writes x + y√5 when `v` lies in Q(√5), as "(a+b·sqrt5)/c".
fn sqrt5_form(v: &CycloNum) -> Option<String> {
    let v5 = v.restrict(5)?;
    let s = sqrt5();
    // v − σ₂(v) = 2y√5, so (v − σ₂(v))·√5 = 10y
    let y = (&(&v5 - &v5.galois(2).ok()?) * &s).as_rational()? / int(10);
    let x = (&v5 - &s.scale(&y)).as_rational()?;
    if y.is_zero() {
        return None;
    }
    let c = x.denom().lcm(y.denom());
    let a = (x * Rational::from_integer(c.clone())).to_integer();
    let b = (y * Rational::from_integer(c.clone())).to_integer();
    let mut out = String::new();
    if !a.is_zero() {
        out.push_str(&a.to_string());
    }
    let sign = if b.is_negative() {
        "-"
    } else if a.is_zero() {
        ""
    } else {
        "+"
    };
    out.push_str(sign);
    if !b.abs().is_one() {
        out.push_str(&b.abs().to_string());
    }
    out.push_str("sqrt5");
    if c.is_one() {
        Some(out)
    } else if a.is_zero() && b.abs().is_one() {
        Some(format!("{out}/{c}"))
    } else {
        Some(format!("({out})/{c}"))
    }
}

pub fn format_value(v: &CycloNum) -> String {
    if let Some(r) = v.as_rational() {
        return r.to_string();
    }
    sqrt5_form(v).unwrap_or_else(|| v.minimal_restriction().to_string())
}

/// Labels such as 3A, 3B in class order.
pub fn class_labels(t: &CharacterTable) -> Vec<String> {
    let mut seen = std::collections::HashMap::new();
    t.classes
        .iter()
        .map(|c| {
            let k = seen.entry(c.element_order).or_insert(0u8);
            let letter = (b'A' + *k) as char;
            *k += 1;
            format!("{}{}", c.element_order, letter)
        })
        .collect()
}

/// Plain-text grid with Atlas-style column headers.
pub fn render_text(t: &CharacterTable) -> String {
    let labels = class_labels(t);
    let cells: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|row| row.iter().map(format_value).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .chain(labels.iter())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = format!("{:<5}", "");
    for l in &labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:<5}", format!("X.{}", i + 1)));
        for c in row {
            out.push_str(&format!(" {c:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn render_json(t: &CharacterTable) -> Value {
    let labels = class_labels(t);
    json!({
        "group_order": t.group_order,
        "exponent": t.exponent,
        "prime": t.prime,
        "classes": t.classes.iter().zip(&labels).map(|(c, l)| json!({
            "label": l,
            "size": c.size,
            "element_order": c.element_order,
            "representative": c.representative.to_string(),
        })).collect::<Vec<_>>(),
        "degrees": t.degrees(),
        "rows": t.rows.iter().map(|row| row.iter().map(|v| json!({
            "text": format_value(v),
            "exact": v.minimal_restriction(),
        })).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// Half-sum used by tests: (a + b√5)/2.
pub fn half_sqrt5(a: i64, b: i64) -> CycloNum {
    let a = CycloNum::from_rational(5, rat(a, 2)).unwrap();
    &a + &sqrt5().scale(&rat(b, 2))
}
