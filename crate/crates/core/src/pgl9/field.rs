use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element a + b·i of F9 = F3[i]/(i² + 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct F9Elem {
    a: u8,
    b: u8,
}

impl F9Elem {
    pub const ZERO: F9Elem = F9Elem { a: 0, b: 0 };
    pub const ONE: F9Elem = F9Elem { a: 1, b: 0 };
    pub const I: F9Elem = F9Elem { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> F9Elem {
        F9Elem {
            a: a.rem_euclid(3) as u8,
            b: b.rem_euclid(3) as u8,
        }
    }

    /// The nine elements, ordered by `a + 3b`.
    pub fn all() -> impl Iterator<Item = F9Elem> {
        (0..9).map(F9Elem::from_index)
    }

    pub fn from_index(k: usize) -> F9Elem {
        assert!(k < 9);
        F9Elem {
            a: (k % 3) as u8,
            b: (k / 3) as u8,
        }
    }

    pub fn index(self) -> usize {
        self.a as usize + 3 * self.b as usize
    }

    pub fn is_zero(self) -> bool {
        self == F9Elem::ZERO
    }

    pub fn pow(self, mut e: u32) -> F9Elem {
        let mut acc = F9Elem::ONE;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<F9Elem> {
        (!self.is_zero()).then(|| self.pow(7))
    }

    /// x ↦ x³, which here is a + b·i ↦ a − b·i.
    pub fn frobenius(self) -> F9Elem {
        F9Elem::new(self.a as i64, -(self.b as i64))
    }

    pub fn multiplicative_order(self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        (1..=8).find(|&k| self.pow(k) == F9Elem::ONE)
    }

    /// Least generator of the multiplicative group in index order.
    pub fn primitive() -> F9Elem {
        F9Elem::all()
            .find(|x| x.multiplicative_order() == Some(8))
            .expect("F9* is cyclic")
    }
}

impl Add for F9Elem {
    type Output = F9Elem;
    fn add(self, o: F9Elem) -> F9Elem {
        F9Elem::new((self.a + o.a) as i64, (self.b + o.b) as i64)
    }
}

impl Neg for F9Elem {
    type Output = F9Elem;
    fn neg(self) -> F9Elem {
        F9Elem::new(-(self.a as i64), -(self.b as i64))
    }
}

impl Sub for F9Elem {
    type Output = F9Elem;
    fn sub(self, o: F9Elem) -> F9Elem {
        self + (-o)
    }
}

impl Mul for F9Elem {
    type Output = F9Elem;
    fn mul(self, o: F9Elem) -> F9Elem {
        let (a, b, c, d) = (self.a as i64, self.b as i64, o.a as i64, o.b as i64);
        F9Elem::new(a * c - b * d, a * d + b * c)
    }
}

impl fmt::Display for F9Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}
