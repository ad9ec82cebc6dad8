//! Integral and rational cycles supported on the exceptional set.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Identifies the graph a cycle lives on. Structurally identical graphs share a tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphTag {
    hash: u64,
    len: usize,
}

impl GraphTag {
    pub(crate) fn new(hash: u64, len: usize) -> Self {
        GraphTag { hash, len }
    }
}

/// An integer combination of exceptional curves, in the graph's vertex order.
///
/// Arithmetic operators panic when the operands come from different graphs;
/// fallible operations on [`crate::DualGraph`] report [`crate::Error::GraphMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    tag: GraphTag,
    coeffs: Vec<i64>,
}

impl Cycle {
    pub(crate) fn from_parts(tag: GraphTag, coeffs: Vec<i64>) -> Self {
        debug_assert_eq!(tag.len, coeffs.len());
        Cycle { tag, coeffs }
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Effective and nonzero.
    pub fn is_positive(&self) -> bool {
        self.is_effective() && !self.is_zero()
    }

    /// All coefficients in {0, 1}.
    pub fn is_reduced(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0 || c == 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_mask(&self) -> Vec<bool> {
        self.coeffs.iter().map(|&c| c != 0).collect()
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Cycle {
        Cycle::from_parts(self.tag, self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// Coefficient-wise minimum.
    pub fn meet(&self, other: &Cycle) -> Cycle {
        self.zip_with(other, i64::min)
    }

    fn zip_with(&self, other: &Cycle, f: impl Fn(i64, i64) -> i64) -> Cycle {
        assert_eq!(self.tag, other.tag, "cycles belong to different graphs");
        Cycle::from_parts(
            self.tag,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

/// Coefficient-wise partial order; cycles on different graphs are incomparable.
impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Cycle) -> Option<Ordering> {
        if self.tag != other.tag {
            return None;
        }
        let mut le = true;
        let mut ge = true;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Cycle {
    type Output = Cycle;
    fn add(self, rhs: Cycle) -> Cycle {
        &self + &rhs
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Cycle {
    type Output = Cycle;
    fn sub(self, rhs: Cycle) -> Cycle {
        &self - &rhs
    }
}

impl Neg for &Cycle {
    type Output = Cycle;
    fn neg(self) -> Cycle {
        self.scaled(-1)
    }
}

impl Mul<&Cycle> for i64 {
    type Output = Cycle;
    fn mul(self, rhs: &Cycle) -> Cycle {
        rhs.scaled(self)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A rational combination of exceptional curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QCycle {
    tag: GraphTag,
    coeffs: Vec<BigRational>,
}

impl QCycle {
    pub(crate) fn from_parts(tag: GraphTag, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(tag.len, coeffs.len());
        QCycle { tag, coeffs }
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The integral cycle with the same coefficients, if there is one.
    pub fn to_cycle(&self) -> Option<Cycle> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| Cycle::from_parts(self.tag, coeffs))
    }
}

impl From<&Cycle> for QCycle {
    fn from(c: &Cycle) -> Self {
        QCycle::from_parts(
            c.tag,
            c.coeffs
                .iter()
                .map(|&k| BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }
}

/// `p/q` in lowest terms with `q > 0`; integers are written `p/1`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Some(r)
}
