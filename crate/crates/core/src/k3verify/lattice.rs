use num::{Signed, Zero};
use serde::Serialize;

use crate::exact::{int, Rational};

/// An integral symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(name: &str, gram: Vec<Vec<i64>>) -> GramLattice {
        let n = gram.len();
        assert!(gram.iter().all(|r| r.len() == n), "square matrix");
        assert!((0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i])), "symmetric");
        GramLattice { name: name.into(), gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    pub fn direct_sum(&self, other: &GramLattice, name: &str) -> GramLattice {
        let (n, m) = (self.rank(), other.rank());
        let mut g = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            g[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            g[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        GramLattice::new(name, g)
    }

    fn rational(&self) -> Vec<Vec<Rational>> {
        self.gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        let mut a = self.rational();
        let n = a.len();
        let mut det = int(1);
        for c in 0..n {
            let Some(k) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return int(0);
            };
            if k != c {
                a.swap(k, c);
                det = -det;
            }
            det *= a[c][c].clone();
            for i in c + 1..n {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
        det
    }

    /// (positive, negative) inertia by symmetric pivoting. A zero diagonal
    /// with a nonzero off-diagonal b is handled as the block [[0,b],[b,0]],
    /// which has one eigenvalue of each sign.
    pub fn signature(&self) -> (usize, usize) {
        let mut a = self.rational();
        let (mut pos, mut neg) = (0, 0);
        while !a.is_empty() {
            let n = a.len();
            if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
                if a[p][p].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                a = schur_complement(&a, &[p]);
            } else if let Some((i, j)) = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                pos += 1;
                neg += 1;
                a = schur_complement(&a, &[i, j]);
            } else {
                break;
            }
        }
        (pos, neg)
    }
}

/// A_rest − C B⁻¹ Cᵀ where B is the principal block on `piv` (size 1 or 2).
fn schur_complement(a: &[Vec<Rational>], piv: &[usize]) -> Vec<Vec<Rational>> {
    let rest: Vec<usize> = (0..a.len()).filter(|i| !piv.contains(i)).collect();
    let binv: Vec<Vec<Rational>> = match piv {
        [p] => vec![vec![int(1) / &a[*p][*p]]],
        [p, q] => {
            let (w, x, y, z) = (&a[*p][*p], &a[*p][*q], &a[*q][*p], &a[*q][*q]);
            let d = w * z - x * y;
            vec![vec![z / &d, -(x / &d)], vec![-(y / &d), w / &d]]
        }
        _ => unreachable!("pivot blocks have size 1 or 2"),
    };
    rest.iter()
        .map(|&i| {
            rest.iter()
                .map(|&j| {
                    let mut v = a[i][j].clone();
                    for (s, &p) in piv.iter().enumerate() {
                        for (t, &q) in piv.iter().enumerate() {
                            v -= &a[i][p] * &binv[s][t] * &a[q][j];
                        }
                    }
                    v
                })
                .collect()
        })
        .collect()
}

pub fn hyperbolic_plane() -> GramLattice {
    GramLattice::new("U", vec![vec![0, 1], vec![1, 0]])
}

/// The negative definite E₈, as minus the Cartan matrix.
pub fn e8_negative() -> GramLattice {
    // Dynkin diagram: chain 0-2-3-4-5-6-7 with 1 attached to 3
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = vec![vec![0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (i, j) in edges {
        g[i][j] = 1;
        g[j][i] = 1;
    }
    GramLattice::new("E8(-1)", g)
}

/// U³ ⊕ E₈(−1)², the second cohomology lattice of a K3 surface.
pub fn k3_lattice() -> GramLattice {
    let u = hyperbolic_plane();
    let e8 = e8_negative();
    let l = u.direct_sum(&u, "U2").direct_sum(&u, "U3");
    l.direct_sum(&e8, "").direct_sum(&e8, "U^3+E8(-1)^2")
}

pub fn transcendental_diag66() -> GramLattice {
    GramLattice::new("T", vec![vec![6, 0], vec![0, 6]])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCheck {
    pub name: String,
    pub rank: usize,
    pub determinant: i64,
    pub even: bool,
    pub signature: (usize, usize),
    pub expected_rank: usize,
    pub expected_abs_det: i64,
    pub expected_signature: (usize, usize),
    pub passed: bool,
}

fn check(l: &GramLattice, rank: usize, abs_det: i64, signature: (usize, usize)) -> LatticeCheck {
    let det = l.determinant().to_integer();
    let det: i64 = det.try_into().expect("small determinant");
    let sig = l.signature();
    LatticeCheck {
        name: l.name.clone(),
        rank: l.rank(),
        determinant: det,
        even: l.is_even(),
        signature: sig,
        expected_rank: rank,
        expected_abs_det: abs_det,
        expected_signature: signature,
        passed: l.rank() == rank && det.abs() == abs_det && l.is_even() && sig == signature,
    }
}

pub fn lattice_checks() -> Vec<LatticeCheck> {
    vec![
        check(&hyperbolic_plane(), 2, 1, (1, 1)),
        check(&e8_negative(), 8, 1, (0, 8)),
        check(&k3_lattice(), 22, 1, (3, 19)),
        check(&transcendental_diag66(), 2, 36, (2, 0)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_lattices() {
        for c in lattice_checks() {
            assert!(c.passed, "{c:?}");
        }
        assert_eq!(hyperbolic_plane().determinant(), int(-1));
        assert_eq!(e8_negative().determinant(), int(1));
        assert_eq!(transcendental_diag66().determinant(), int(36));
    }

    #[test]
    fn signature_matches_float_eigenvalues() {
        // oracle: count eigenvalue signs of small symmetric matrices via
        // the characteristic polynomial's sign changes (Descartes, exact for
        // real-rooted polynomials)
        let cases = vec![
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]],
            vec![vec![2, 1], vec![1, 2]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![1, 2, 3], vec![2, 0, 1], vec![3, 1, -4]],
        ];
        for m in cases {
            let l = GramLattice::new("m", m.clone());
            let (p, n) = l.signature();
            let evals = jacobi_eigenvalues(&m);
            let fp = evals.iter().filter(|&&e| e > 1e-9).count();
            let fn_ = evals.iter().filter(|&&e| e < -1e-9).count();
            assert_eq!((p, n), (fp, fn_), "{m:?}");
        }
    }

    fn jacobi_eigenvalues(m: &[Vec<i64>]) -> Vec<f64> {
        let n = m.len();
        let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        for _ in 0..200 {
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() < 1e-14 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][i]).collect()
    }
}
