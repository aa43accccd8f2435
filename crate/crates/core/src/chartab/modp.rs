//! Arithmetic and linear algebra over F_p for word-sized primes.

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub(crate) fn from_usize(x: usize, p: u64) -> u64 {
    (x as u64) % p
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least primitive root modulo the prime `p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_divisors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Row-reduces in place; returns pivot columns. Zero rows are dropped.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let s = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul(*x, s, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = sub(rows[i][j], mul(f, rows[r][j], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of {v : m·v = 0} for a square or rectangular matrix `m`.
pub(crate) fn nullspace(m: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub(0, rows[r][f], p);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial det(xI − m), lowest coefficient first, via
/// reduction to upper Hessenberg form.
pub(crate) fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let pinv = inv(h[j + 1][j], p);
        for k in j + 2..n {
            let u = mul(h[k][j], pinv, p);
            if u == 0 {
                continue;
            }
            // row_k -= u·row_{j+1}; then col_{j+1} += u·col_k keeps similarity
            for c in 0..n {
                h[k][c] = sub(h[k][c], mul(u, h[j + 1][c], p), p);
            }
            for row in h.iter_mut() {
                row[j + 1] = add(row[j + 1], mul(u, row[k], p), p);
            }
        }
    }
    // polys[m] = charpoly of the leading m×m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mi in 1..=n {
        let d = mi - 1;
        // (x − h[d][d])·polys[d]
        let prev = &polys[d];
        let mut next = vec![0u64; mi + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add(next[k + 1], c, p);
            next[k] = sub(next[k], mul(h[d][d], c, p), p);
        }
        let mut t = 1u64;
        for i in 1..=d {
            t = mul(t, h[d - i + 1][d - i], p);
            let coef = mul(t, h[d - i][d], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[d - i].iter().enumerate() {
                next[k] = sub(next[k], mul(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(m: &[Vec<u64>], p: u64) -> u64 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1u64;
        for c in 0..n {
            let Some(k) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if k != c {
                a.swap(k, c);
                d = sub(0, d, p);
            }
            d = mul(d, a[c][c], p);
            let s = inv(a[c][c], p);
            for i in c + 1..n {
                let f = mul(a[i][c], s, p);
                for j in c..n {
                    a[i][j] = sub(a[i][j], mul(f, a[c][j], p), p);
                }
            }
        }
        d
    }

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(61));
        assert!(!is_prime(91));
        assert_eq!(primitive_root(61), 2);
        assert_eq!(primitive_root(7), 3);
    }

    #[test]
    fn charpoly_matches_determinant_oracle() {
        let p = 61;
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) % p
        };
        for n in 1..7 {
            for _ in 0..20 {
                let m: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
                let cp = charpoly(&m, p);
                assert_eq!(cp.len(), n + 1);
                assert_eq!(cp[n], 1);
                for x in [0, 1, 5, 17, 60] {
                    let shifted: Vec<Vec<u64>> = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    let v = sub(0, m[i][j], p);
                                    if i == j {
                                        add(v, x, p)
                                    } else {
                                        v
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    assert_eq!(eval(&cp, x, p), det(&shifted, p));
                }
            }
        }
    }

    #[test]
    fn nullspace_dimension() {
        let p = 7;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot = row.iter().zip(&v).fold(0, |acc, (&a, &b)| add(acc, mul(a, b, p), p));
                assert_eq!(dot, 0);
            }
        }
    }
}
