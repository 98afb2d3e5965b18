//! The affine Hecke algebra of type B₂ in Bernstein normal form.
//!
//! An element is a finite sum `Σ c·T_w X^λ`. Products are normalized by
//! moving `X`'s to the right past `Tᵢ` with
//!
//! ```text
//! X^λ Tᵢ = Tᵢ X^{sᵢλ} + (qᵢ - qᵢ⁻¹)·(X^λ - X^{sᵢλ}) / (1 - X^{-αᵢ∨})
//! ```
//!
//! where the fraction is expanded as a finite geometric sum, and by the
//! length rule `T_w Tᵢ = T_{wsᵢ}` (ascent) or `T_{wsᵢ} + (qᵢ - qᵢ⁻¹)T_w`
//! (descent). The parameters are `q₁ = q` and `q₂ = p`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::weyl::{Simple, WeightVector, WeylElem};

/// The pair of Hecke parameters `(p, q)`: `p` rides on T₂, `q` on T₁.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parameters<F> {
    p: F,
    q: F,
}

impl<F: Field> Parameters<F> {
    /// Rejects zero and roots of unity.
    pub fn new(p: F, q: F) -> Result<Self> {
        for (name, v) in [("p", &p), ("q", &q)] {
            if v.is_zero() {
                return Err(Error::InvalidParameters(format!("{name} = 0")));
            }
            if v.is_root_of_unity() {
                return Err(Error::InvalidParameters(format!(
                    "{name} = {v} is a root of unity"
                )));
            }
        }
        Ok(Parameters { p, q })
    }

    pub fn p(&self) -> &F {
        &self.p
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `qᵢ`: q for T₁, p for T₂.
    pub fn of(&self, i: Simple) -> &F {
        match i {
            Simple::S1 => &self.q,
            Simple::S2 => &self.p,
        }
    }

    /// `qᵢ - qᵢ⁻¹`.
    pub fn gap(&self, i: Simple) -> F {
        let x = self.of(i);
        x.clone() - &x.checked_inv().expect("parameters are nonzero")
    }

    /// The parameters after `p ↦ -p`.
    pub fn negate_p(&self) -> Self {
        Parameters {
            p: -self.p.clone(),
            q: self.q.clone(),
        }
    }
}

impl<F: Field> fmt::Display for Parameters<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p, q) = ({}, {})", self.p, self.q)
    }
}

/// The named algebra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T1,
    T2,
    X1,
    X2,
    X1Inv,
    X2Inv,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::T1,
        Generator::T2,
        Generator::X1,
        Generator::X2,
        Generator::X1Inv,
        Generator::X2Inv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::T1 => "T1",
            Generator::T2 => "T2",
            Generator::X1 => "X1",
            Generator::X2 => "X2",
            Generator::X1Inv => "X1^-1",
            Generator::X2Inv => "X2^-1",
        }
    }
}

type Key = (WeylElem, WeightVector);

/// `Σ c·T_w X^λ` with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<F> {
    terms: BTreeMap<Key, F>,
    params: Parameters<F>,
}

impl<F: Field> HeckeElement<F> {
    pub fn zero(params: &Parameters<F>) -> Self {
        HeckeElement {
            terms: BTreeMap::new(),
            params: params.clone(),
        }
    }

    pub fn one(params: &Parameters<F>) -> Self {
        Self::monomial(params, F::one(), WeylElem::E, WeightVector::ZERO)
    }

    pub fn monomial(params: &Parameters<F>, c: F, w: WeylElem, lambda: WeightVector) -> Self {
        let mut e = Self::zero(params);
        e.add_term(w, lambda, c);
        e
    }

    pub fn t(params: &Parameters<F>, w: WeylElem) -> Self {
        Self::monomial(params, F::one(), w, WeightVector::ZERO)
    }

    pub fn x(params: &Parameters<F>, lambda: WeightVector) -> Self {
        Self::monomial(params, F::one(), WeylElem::E, lambda)
    }

    pub fn generator(g: Generator, params: &Parameters<F>) -> Self {
        match g {
            Generator::T1 => Self::t(params, WeylElem::S1),
            Generator::T2 => Self::t(params, WeylElem::S2),
            Generator::X1 => Self::x(params, WeightVector::E1),
            Generator::X2 => Self::x(params, WeightVector::E2),
            Generator::X1Inv => Self::x(params, -WeightVector::E1),
            Generator::X2Inv => Self::x(params, -WeightVector::E2),
        }
    }

    pub fn params(&self) -> &Parameters<F> {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (WeylElem, WeightVector, &F)> {
        self.terms.iter().map(|(&(w, l), c)| (w, l, c))
    }

    pub fn coefficient(&self, w: WeylElem, lambda: WeightVector) -> F {
        self.terms
            .get(&(w, lambda))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, w: WeylElem, lambda: WeightVector, c: F) {
        if c.is_zero() {
            return;
        }
        let key = (w, lambda);
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_params(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParameterMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let mut out = self.clone();
        for (&(w, l), c) in &other.terms {
            out.add_term(w, l, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.params);
        for (&(w, l), a) in &self.terms {
            out.add_term(w, l, a.clone() * c);
        }
        out
    }

    /// `self · Tᵢ`.
    pub fn mul_t(&self, i: Simple) -> Self {
        let gap = self.params.gap(i);
        let alpha = i.coroot();
        let mut out = Self::zero(&self.params);
        for (&(v, kappa), c) in &self.terms {
            // (T_v T_i) X^{s_i κ}
            let reflected = i.reflect(kappa);
            let vs = v.multiply(i.elem());
            out.add_term(vs, reflected, c.clone());
            if !v.right_ascent(i) {
                out.add_term(v, reflected, c.clone() * &gap);
            }
            // T_v · (divided difference of X^κ)
            let k = i.pairing(kappa);
            let cg = c.clone() * &gap;
            if k > 0 {
                for j in 0..k {
                    out.add_term(v, kappa - alpha.scaled(j), cg.clone());
                }
            } else if k < 0 {
                for j in 1..=-k {
                    out.add_term(v, kappa + alpha.scaled(j), -cg.clone());
                }
            }
        }
        out
    }

    /// `self · X^μ`.
    pub fn mul_x(&self, mu: WeightVector) -> Self {
        HeckeElement {
            terms: self
                .terms
                .iter()
                .map(|(&(w, l), c)| ((w, l + mu), c.clone()))
                .collect(),
            params: self.params.clone(),
        }
    }

    /// Product in normal form: each right-hand monomial `T_{w'}X^μ` is applied
    /// letter by letter along the canonical reduced word of `w'`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let mut out = Self::zero(&self.params);
        for (&(w2, mu), c2) in &other.terms {
            let mut acc = self.scale(c2);
            for i in w2.letters() {
                acc = acc.mul_t(i);
            }
            for (&(w, l), c) in &acc.mul_x(mu).terms {
                out.add_term(w, l, c.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        (0..e).try_fold(Self::one(&self.params), |acc, _| acc.mul(self))
    }
}

impl<F: Field> fmt::Display for HeckeElement<F> {
    /// `coef * T[word] * X[a,b]` terms joined by ` + `, ordered by word
    /// (length-lexicographic) and then by `(a, b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, l), c)| format!("{c} * T[{w}] * X[{},{}]", l.a, l.b))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Parses the text form produced by `Display`, attaching the given parameters.
pub fn parse_element<F: Field>(s: &str, params: &Parameters<F>) -> Result<HeckeElement<F>> {
    let mut out = HeckeElement::zero(params);
    let s = s.trim();
    if s == "0" {
        return Ok(out);
    }
    let bad = |t: &str| Error::Parse(format!("bad Hecke term {t:?}"));
    for term in s.split(" + ") {
        let pieces: Vec<&str> = term.split(" * ").collect();
        let [coef, t, x] = pieces.as_slice() else {
            return Err(bad(term));
        };
        let c = coef.parse::<F>().map_err(|_| bad(term))?;
        let w = t
            .strip_prefix("T[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad(term))
            .and_then(WeylElem::from_str)?;
        let (a, b) = x
            .strip_prefix("X[")
            .and_then(|r| r.strip_suffix(']'))
            .and_then(|r| r.split_once(','))
            .ok_or_else(|| bad(term))?;
        let a: i64 = a.trim().parse().map_err(|_| bad(term))?;
        let b: i64 = b.trim().parse().map_err(|_| bad(term))?;
        out.add_term(w, WeightVector::new(a, b), c);
    }
    Ok(out)
}
