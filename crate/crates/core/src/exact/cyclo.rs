use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::complex::Complex64;
use num::integer::{gcd, lcm};
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::rational::{rational_json, Rational};
use crate::error::{Error, Result};

/// Largest supported cyclotomic order. Character values here never need more
/// than the exponent of a group with at most 10^4 elements.
const MAX_ORDER: u32 = 10_000;

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Obtained by dividing x^n - 1 by every Φ_d with d a proper divisor.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for deg in (dn..num.len()).rev() {
        let c = rem[deg];
        quot[deg - dn] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                let idx = deg - dn + j;
                rem[idx] = rem[idx]
                    .checked_sub(c.checked_mul(dj).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

#[derive(Debug, PartialEq, Eq)]
struct Field {
    order: u32,
    modulus: Vec<i64>,
}

impl Field {
    fn new(order: u32) -> Result<Arc<Field>> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Arc::new(Field {
            order,
            modulus: cyclotomic_polynomial(order),
        }))
    }

    fn dim(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduce a polynomial in ζ of arbitrary length modulo Φ_n.
    fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let dim = self.dim();
        for deg in (dim..poly.len()).rev() {
            if poly[deg].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[deg], Rational::zero());
            for (j, &mj) in self.modulus[..dim].iter().enumerate() {
                if mj != 0 {
                    poly[deg - dim + j] -= &c * BigInt::from(mj);
                }
            }
        }
        poly.resize(dim, Rational::zero());
        poly
    }
}

/// An exact element of Q(ζ_n), stored in the power basis 1, ζ, …, ζ^{φ(n)-1}
/// modulo the cyclotomic polynomial Φ_n.
///
/// Values are never demoted to a smaller field. Equality between different
/// orders is decided in the field of the lcm.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(order: u32) -> Result<Self> {
        let field = Field::new(order)?;
        let coeffs = vec![Rational::zero(); field.dim()];
        Ok(CycloNum { field, coeffs })
    }

    pub fn from_rational(order: u32, value: Rational) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    pub fn from_int(order: u32, value: i64) -> Result<Self> {
        Self::from_rational(order, Rational::from_integer(value.into()))
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self> {
        Self::from_terms(order, [(k, Rational::one())])
    }

    /// Σ c·ζ_n^k over the given (k, c) terms; exponents are taken mod n.
    pub fn from_terms<I>(order: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let field = Field::new(order)?;
        let mut poly = vec![Rational::zero(); order as usize];
        for (k, c) in terms {
            let e = k.rem_euclid(order as i64) as usize;
            poly[e] += c;
        }
        let coeffs = field.reduce(poly);
        Ok(CycloNum { field, coeffs })
    }

    /// Interprets `coeffs` as a polynomial in ζ_n of any length and reduces it.
    pub fn from_power_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let field = Field::new(order)?;
        let coeffs = field.reduce(coeffs);
        Ok(CycloNum { field, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Coefficients in the canonical power basis; length φ(order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when every coefficient of ζ^i, i ≥ 1, vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Same as [`as_rational`](Self::as_rational) but additionally requires an
    /// integer value.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Image in Q(ζ_m) for a multiple m of the current order.
    pub fn embed(&self, m: u32) -> Result<Self> {
        let n = self.order();
        if m == 0 || !m.is_multiple_of(n) {
            return Err(Error::InvalidOrder(m));
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as usize;
        let field = Field::new(m)?;
        let mut poly = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        let coeffs = field.reduce(poly);
        Ok(CycloNum { field, coeffs })
    }

    /// Preimage in Q(ζ_n) for a divisor n of the current order, if the value
    /// lies in that subfield.
    pub fn restrict(&self, n: u32) -> Option<Self> {
        let m = self.order();
        if n == 0 || !m.is_multiple_of(n) {
            return None;
        }
        if n == m {
            return Some(self.clone());
        }
        let dim_n = euler_phi(n);
        // Columns: images of ζ_n^i in the order-m basis.
        let columns: Vec<Vec<Rational>> = (0..dim_n)
            .map(|i| {
                Self::zeta_pow(n, i as i64)
                    .and_then(|z| z.embed(m))
                    .expect("divisor order is valid")
                    .coeffs
            })
            .collect();
        let solution = solve_linear(&columns, &self.coeffs)?;
        Self::from_power_coeffs(n, solution).ok()
    }

    /// Smallest divisor d of the order such that the value lies in Q(ζ_d).
    pub fn minimal_restriction(&self) -> Self {
        let m = self.order();
        (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find_map(|d| self.restrict(d))
            .expect("restriction to own order always succeeds")
    }

    /// The automorphism ζ ↦ ζ^k, k coprime to the order.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order();
        if gcd(k.rem_euclid(n as i64), n as i64) != 1 {
            return Err(Error::NotCoprime { k, order: n });
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((i as i64) * k, c.clone()));
        Self::from_terms(n, terms)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every order")
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(self.order(), 1).expect("order already valid");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerical value at ζ_n = exp(2πi/n).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    /// Total order on values: lexicographic on coefficient sequences after
    /// embedding both operands into a common field.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = reconcile(self, other);
        a.coeffs.cmp(&b.coeffs)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let (a, b) = reconcile(self, other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| f(x, y))
            .collect();
        CycloNum {
            field: a.field.clone(),
            coeffs,
        }
    }

    fn multiply(&self, other: &Self) -> Self {
        let (a, b) = reconcile(self, other);
        let n = a.field.order as usize;
        let mut poly = vec![Rational::zero(); 2 * a.coeffs.len().max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        // ζ^n = 1 keeps the intermediate polynomial short before reduction.
        if poly.len() > n {
            let (low, high) = poly.split_at_mut(n);
            for (i, c) in high.iter_mut().enumerate() {
                let c = std::mem::replace(c, Rational::zero());
                low[i % n] += c;
            }
            poly.truncate(n);
        }
        let coeffs = a.field.reduce(poly);
        CycloNum {
            field: a.field.clone(),
            coeffs,
        }
    }
}

fn reconcile(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
    if a.order() == b.order() {
        return (a.clone(), b.clone());
    }
    let m = lcm(a.order(), b.order());
    (
        a.embed(m).expect("lcm order is valid"),
        b.embed(m).expect("lcm order is valid"),
    )
}

/// Solves Σ x_j·columns[j] = target over Q; `None` if inconsistent.
fn solve_linear(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=cols {
                    let delta = &f * &m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = reconcile(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({})", self)
    }
}

/// Renders `a0 + a1*z5 + a2*z5^2 ...`, omitting zero terms.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let basis = match i {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{mag}*{basis}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(rational_json).collect();
        let mut s = serializer.serialize_struct("CycloNum", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &'a CycloNum) -> CycloNum {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        self.multiply(rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn z(n: u32, k: i64) -> CycloNum {
        CycloNum::zeta_pow(n, k).unwrap()
    }

    #[test]
    fn phi_and_polynomials() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn additive_inverse_of_i() {
        assert!((z(4, 1) + (-z(4, 1))).is_zero());
    }

    #[test]
    fn fifth_roots_sum_to_zero() {
        let s = (0..5).fold(CycloNum::zero(5).unwrap(), |acc, k| acc + z(5, k));
        assert!(s.is_zero());
    }

    #[test]
    fn golden_pair_sum() {
        // float check: 2cos(2π/5) + 2cos(4π/5) = -1
        let a = z(5, 1) + z(5, 4);
        let b = z(5, 2) + z(5, 3);
        let expected = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos()
            + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((expected + 1.0).abs() < 1e-12);
        assert_eq!((a + b).as_rational(), Some(int(-1)));
    }

    #[test]
    fn products() {
        assert_eq!((z(4, 1) * z(4, 1)).as_rational(), Some(int(-1)));
        assert_eq!((z(5, 1) * z(5, 4)).as_rational(), Some(int(1)));
        let x = z(5, 1) + z(5, 4);
        let one = CycloNum::from_int(5, 1).unwrap();
        assert!((&(&x * &x) + &x - one).is_zero());
        let xf = x.to_complex();
        assert!((xf * xf + xf - 1.0).norm() < 1e-12);
    }

    #[test]
    fn rationality_scan() {
        assert_eq!(CycloNum::from_int(4, 3).unwrap().as_rational(), Some(int(3)));
        let v = CycloNum::from_terms(4, [(0, int(3)), (1, int(9))]).unwrap();
        assert_eq!(v.as_rational(), None);
        let w = z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4);
        assert_eq!(w.as_rational(), Some(int(-1)));
    }

    #[test]
    fn galois_action() {
        assert_eq!(z(4, 1).galois(3).unwrap(), -z(4, 1));
        assert_eq!((z(5, 1) + z(5, 4)).galois(2).unwrap(), z(5, 2) + z(5, 3));
        let seven = CycloNum::from_int(12, 7).unwrap();
        assert_eq!(seven.galois(5).unwrap(), seven);
        assert!(matches!(z(4, 1).galois(2), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn cross_order_equality_and_restriction() {
        assert_eq!(z(4, 1), z(12, 3));
        assert_eq!(z(5, 1).embed(60).unwrap(), z(60, 12));
        let sqrt5 = (z(5, 1) + z(5, 4)).scale(&int(2)) + CycloNum::from_int(5, 1).unwrap();
        let big = sqrt5.embed(60).unwrap();
        assert_eq!(big.restrict(5).unwrap().coeffs(), sqrt5.coeffs());
        assert!(z(60, 1).restrict(5).is_none());
        assert_eq!(big.minimal_restriction().order(), 5);
        assert_eq!((&sqrt5 * &sqrt5).as_rational(), Some(int(5)));
    }

    #[test]
    fn rendering() {
        let v = CycloNum::from_terms(5, [(0, int(1)), (1, rat(-1, 2)), (3, int(2))]).unwrap();
        assert_eq!(v.to_string(), "1 - 1/2*z5 + 2*z5^3");
        assert_eq!(CycloNum::zero(4).unwrap().to_string(), "0");
        assert_eq!((-z(4, 1)).to_string(), "-z4");
        let json = serde_json::to_string(&CycloNum::from_terms(4, [(1, rat(1, 2))]).unwrap()).unwrap();
        assert_eq!(json, r#"{"order":4,"coeffs":[[0,1],[1,2]]}"#);
    }
}
