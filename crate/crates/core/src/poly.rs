//! Dense univariate polynomials over a [`Field`], just enough for the
//! pencil search: interpolation, gcd and exact root finding in low degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Field;

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn eval(&self, t: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * t + c)
    }

    fn lead(&self) -> &F {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().checked_inv().expect("nonzero lead");
        Poly::new(self.coeffs.iter().map(|c| c.clone() * &inv).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &F::from_i64(k as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().checked_inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty").clone() * &inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - &(c.clone() * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The polynomial of degree `< points.len()` through the given points.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::new(vec![F::one()]);
            let mut denom = F::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Poly::new(vec![-xj.clone(), F::one()]));
                    denom = denom * &(xi.clone() - xj);
                }
            }
            let scale = yi.checked_div(&denom).expect("distinct nodes");
            acc = acc.add(&basis.scale(&scale));
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(F::zero);
                    match other.coeffs.get(k) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Roots in the field, each listed once. `None` when the polynomial has
    /// a factor whose roots these methods cannot decide.
    pub fn roots(&self) -> Option<Vec<F>> {
        if self.is_zero() {
            return None;
        }
        let sf = self.square_free();
        let mut roots = Vec::new();
        let rest = match sf.degree()? {
            0 => return Some(roots),
            1 | 2 => sf,
            _ => {
                let rational = rational_roots(&sf)?;
                let mut rest = sf;
                for r in rational {
                    rest = rest.div_rem(&Poly::new(vec![-r.clone(), F::one()])).0;
                    roots.push(r);
                }
                rest
            }
        };
        match rest.degree()? {
            0 => {}
            1 => {
                let m = rest.monic();
                roots.push(-m.coeffs[0].clone());
            }
            2 => {
                let m = rest.monic();
                let (c, b) = (&m.coeffs[0], &m.coeffs[1]);
                let disc = b.square() - &(c.clone() * &F::from_i64(4));
                // No square root in the field means no root in the field.
                if let Some(s) = disc.sqrt_exact() {
                    let half = F::from_ratio(1, 2);
                    roots.push((-b.clone() + &s) * &half);
                    if !s.is_zero() {
                        roots.push((-b.clone() - &s) * &half);
                    }
                }
            }
            _ => return None,
        }
        Some(roots)
    }

    fn square_free(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        self.div_rem(&g).0.monic()
    }
}

/// Largest integer magnitude for which divisors are enumerated.
const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000;

/// Rational roots via the rational root theorem; `None` if the coefficients
/// are not rational or too large to enumerate divisors of.
fn rational_roots<F: Field>(p: &Poly<F>) -> Option<Vec<F>> {
    let rat: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| c.to_rational())
        .collect::<Option<_>>()?;
    let lcm = rat.iter().fold(BigInt::one(), |acc, r| {
        num_integer::lcm(acc, r.denom().clone())
    });
    let ints: Vec<BigInt> = rat.iter().map(|r| (r * &lcm).to_integer()).collect();
    let lead = ints.last()?.abs().to_u64()?;
    // Strip zero roots first.
    let mut out = Vec::new();
    let first = ints.iter().position(|c| !c.is_zero())?;
    if first > 0 {
        out.push(F::zero());
    }
    let constant = ints[first].abs().to_u64()?;
    if constant > DIVISOR_SEARCH_LIMIT || lead > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    for num in divisors(constant) {
        for den in divisors(lead) {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                let cand = F::from_rational(&r);
                if !out.contains(&cand) && p.eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    Some(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .collect();
    let big: Vec<u64> = out
        .iter()
        .rev()
        .map(|d| n / d)
        .filter(|&d| d * d != n)
        .collect();
    out.extend(big);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    fn p(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&x| Q::from_int(x)).collect())
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, -2, 0, 1]);
        let pts: Vec<(Q, Q)> = (0..4)
            .map(|k| (Q::from_int(k), f.eval(&Q::from_int(k))))
            .collect();
        assert_eq!(Poly::interpolate(&pts), f);
    }

    #[test]
    fn gcd_and_roots() {
        // (t - 2)(t + 3)(t^2 + 1)
        let f = p(&[-2, 1]).mul(&p(&[3, 1])).mul(&p(&[1, 0, 1]));
        let g = p(&[-2, 1]).mul(&p(&[5, 1]));
        assert_eq!(f.gcd(&g), p(&[-2, 1]));
        let mut roots: Vec<String> = f.roots().unwrap().iter().map(|r| r.to_string()).collect();
        roots.sort();
        assert_eq!(roots, vec!["-3", "0+-1*i", "0+1*i", "2"]);
        // t^2 + 1 has roots ±i in ℚ(i).
        assert_eq!(p(&[1, 0, 1]).roots().unwrap().len(), 2);
        assert_eq!(p(&[-2, 0, 1]).roots(), Some(vec![]));
    }

    #[test]
    fn repeated_roots_listed_once() {
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(f.roots().unwrap().len(), 2);
    }
}
