//! Intersection-theoretic arithmetic on a fixed dual graph.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cycle::{Cycle, QCycle};
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::linalg;

impl DualGraph {
    /// The intersection number `D·F`.
    pub fn intersect(&self, d: &Cycle, f: &Cycle) -> Result<i64> {
        self.check(d)?;
        self.check(f)?;
        Ok(self
            .products_unchecked(d)
            .iter()
            .zip(f.coeffs())
            .map(|(p, c)| p * c)
            .sum())
    }

    pub fn intersect_rational(&self, d: &QCycle, f: &QCycle) -> Result<BigRational> {
        if d.tag() != self.tag() || f.tag() != self.tag() {
            return Err(Error::GraphMismatch);
        }
        let mut total = BigRational::zero();
        for (i, di) in d.coeffs().iter().enumerate() {
            if di.is_zero() {
                continue;
            }
            for (j, fj) in f.coeffs().iter().enumerate() {
                let m = self.entry(i, j);
                if m != 0 {
                    total += di * fj * BigRational::from_integer(BigInt::from(m));
                }
            }
        }
        Ok(total)
    }

    /// The vector `(D·E_i)_i`.
    pub fn products(&self, d: &Cycle) -> Result<Vec<i64>> {
        self.check(d)?;
        Ok(self.products_unchecked(d))
    }

    pub(crate) fn products_unchecked(&self, d: &Cycle) -> Vec<i64> {
        self.matrix()
            .iter()
            .map(|row| row.iter().zip(d.coeffs()).map(|(m, c)| m * c).sum())
            .collect()
    }

    pub fn self_intersection(&self, d: &Cycle) -> Result<i64> {
        self.intersect(d, d)
    }

    /// `K·D`.
    pub fn canonical_degree(&self, d: &Cycle) -> Result<i64> {
        self.check(d)?;
        Ok(self
            .canonical_intersections()
            .iter()
            .zip(d.coeffs())
            .map(|(k, c)| k * c)
            .sum())
    }

    /// `χ(D) = -(D² + K·D)/2` for an effective cycle.
    pub fn euler_chi(&self, d: &Cycle) -> Result<i64> {
        if !d.is_effective() {
            return Err(Error::domain(format!(
                "χ needs an effective cycle, got {d}"
            )));
        }
        let twice = self.self_intersection(d)? + self.canonical_degree(d)?;
        assert!(twice % 2 == 0, "D² + K·D must be even (adjunction)");
        Ok(-twice / 2)
    }

    /// `p_a(D) = 1 - χ(D)` for a positive cycle.
    pub fn arithmetic_genus(&self, d: &Cycle) -> Result<i64> {
        if !d.is_positive() {
            return Err(Error::domain(format!(
                "p_a needs a positive cycle, got {d}"
            )));
        }
        Ok(1 - self.euler_chi(d)?)
    }

    /// The canonical cycle `Z_K`, the rational cycle with `(K + Z_K)·E_i = 0` for all `i`.
    pub fn canonical_cycle(&self) -> Result<QCycle> {
        self.ensure_negative_definite()?;
        let rhs: Vec<i64> = self.canonical_intersections().iter().map(|k| -k).collect();
        let solution = linalg::solve(self.matrix(), &rhs)
            .expect("negative definite intersection matrix is invertible");
        Ok(QCycle::from_parts(self.tag(), solution))
    }

    /// `Z_K` has integer coefficients.
    pub fn is_numerically_gorenstein(&self) -> Result<bool> {
        Ok(self.canonical_cycle()?.is_integral())
    }

    /// Reduced cycle on the vertices `E_i` with `D·E_i = 0`.
    pub fn d_perp(&self, d: &Cycle) -> Result<Cycle> {
        if !d.is_effective() {
            return Err(Error::domain(format!(
                "D^⊥ needs an effective cycle, got {d}"
            )));
        }
        let zeros: Vec<usize> = self
            .products(d)?
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == 0)
            .map(|(i, _)| i)
            .collect();
        Ok(self.reduced(&zeros))
    }
}
