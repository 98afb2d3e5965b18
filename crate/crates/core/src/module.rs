//! Finite-dimensional modules given by generator matrices, and the
//! constructions that produce them: principal series, induction from the
//! rank-one subalgebras, twists, subquotients and weight decompositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hecke::{Generator, HeckeElement, Parameters};
use crate::linalg::{canonical_basis, Basis, Matrix, Vector};
use crate::weyl::{min_coset_reps, split_coset, Simple, WeightVector, WeylElem};

/// A point of the torus: the values on `X₁` and `X₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character<F> {
    x1: F,
    x2: F,
    params: Parameters<F>,
}

impl<F: Field> Character<F> {
    pub fn new(x1: F, x2: F, params: &Parameters<F>) -> Result<Self> {
        if x1.is_zero() || x2.is_zero() {
            return Err(Error::InvalidParameters(
                "character values must be nonzero".into(),
            ));
        }
        Ok(Character {
            x1,
            x2,
            params: params.clone(),
        })
    }

    pub fn x1(&self) -> &F {
        &self.x1
    }

    pub fn x2(&self) -> &F {
        &self.x2
    }

    pub fn values(&self) -> (F, F) {
        (self.x1.clone(), self.x2.clone())
    }

    pub fn params(&self) -> &Parameters<F> {
        &self.params
    }

    /// `χ(X^λ) = x1^a · x2^b`.
    pub fn eval(&self, lambda: WeightVector) -> F {
        let a = self.x1.checked_pow(lambda.a).expect("nonzero");
        let b = self.x2.checked_pow(lambda.b).expect("nonzero");
        a * &b
    }

    /// `(w·χ)(X^λ) = χ(X^{w⁻¹λ})`.
    pub fn act(&self, w: WeylElem) -> Self {
        let inv = w.inverse();
        Character {
            x1: self.eval(inv.act(WeightVector::E1)),
            x2: self.eval(inv.act(WeightVector::E2)),
            params: self.params.clone(),
        }
    }

    /// Distinct members of the W-orbit, in the order of [`WeylElem::all`].
    pub fn orbit(&self) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(8);
        for w in WeylElem::all() {
            let c = self.act(w);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    pub fn negate(&self) -> Self {
        negate_character(self)
    }
}

impl<F: Field> fmt::Display for Character<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

/// `(-χ)(Xᵢ) = -χ(Xᵢ)`.
pub fn negate_character<F: Field>(chi: &Character<F>) -> Character<F> {
    Character {
        x1: -chi.x1.clone(),
        x2: -chi.x2.clone(),
        params: chi.params.clone(),
    }
}

/// A one-dimensional representation of `⟨Tᵢ, X₁, X₂⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimRep<F> {
    subalgebra: Simple,
    x1: F,
    x2: F,
    t: F,
    params: Parameters<F>,
}

impl<F: Field> OneDimRep<F> {
    /// Checks the scalar shadows of `T₁X₂T₁ = X₁` / `T₂X₂⁻¹T₂ = X₂` and the
    /// quadratic relation.
    pub fn new(subalgebra: Simple, x1: F, x2: F, t: F, params: &Parameters<F>) -> Result<Self> {
        if x1.is_zero() || x2.is_zero() {
            return Err(Error::IncompatibleRep("X-values must be nonzero".into()));
        }
        let qi = params.of(subalgebra).clone();
        let minus_inv = -qi.checked_inv().expect("nonzero");
        if t != qi && t != minus_inv {
            return Err(Error::IncompatibleRep(format!(
                "T{} = {t} is neither {qi} nor {minus_inv}",
                subalgebra.index()
            )));
        }
        let ok = match subalgebra {
            Simple::S1 => x1 == t.square() * &x2,
            Simple::S2 => x2.square() == t.square(),
        };
        if !ok {
            return Err(Error::IncompatibleRep(format!(
                "(X1, X2, T{}) = ({x1}, {x2}, {t}) violates the commutation relation",
                subalgebra.index()
            )));
        }
        Ok(OneDimRep {
            subalgebra,
            x1,
            x2,
            t,
            params: params.clone(),
        })
    }

    pub fn subalgebra(&self) -> Simple {
        self.subalgebra
    }

    pub fn x1(&self) -> &F {
        &self.x1
    }

    pub fn x2(&self) -> &F {
        &self.x2
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    pub fn params(&self) -> &Parameters<F> {
        &self.params
    }

    pub fn character(&self) -> Character<F> {
        Character {
            x1: self.x1.clone(),
            x2: self.x2.clone(),
            params: self.params.clone(),
        }
    }

    /// Value on `T_u X^λ` for `u ∈ {e, sᵢ}`.
    fn eval(&self, u: WeylElem, lambda: WeightVector) -> F {
        let x = self.character().eval(lambda);
        if u == WeylElem::E {
            x
        } else {
            debug_assert_eq!(u, self.subalgebra.elem());
            x * &self.t
        }
    }

    /// The same representation composed with `X ↦ -X`.
    pub fn negate(&self) -> Self {
        OneDimRep {
            subalgebra: self.subalgebra,
            x1: -self.x1.clone(),
            x2: -self.x2.clone(),
            t: self.t.clone(),
            params: self.params.clone(),
        }
    }
}

/// Outcome of checking the defining relations on a quadruple of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<(&'static str, bool)>,
    pub x_invertible: bool,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.x_invertible && self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self
            .checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .collect();
        if !self.x_invertible {
            out.push("X invertible");
        }
        out
    }
}

/// Evaluates every defining relation as a matrix identity.
pub fn verify_relations<F: Field>(
    params: &Parameters<F>,
    t1: &Matrix<F>,
    t2: &Matrix<F>,
    x1: &Matrix<F>,
    x2: &Matrix<F>,
) -> Result<RelationReport> {
    let n = t1.rows();
    for m in [t1, t2, x1, x2] {
        if m.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                op: "verify_relations",
                left: m.shape(),
                right: (n, n),
            });
        }
    }
    let x2_inv = match (x1.inverse(), x2.inverse()) {
        (Ok(_), Ok(b)) => b,
        _ => {
            return Ok(RelationReport {
                checks: Vec::new(),
                x_invertible: false,
            })
        }
    };
    let mul = |a: &Matrix<F>, b: &Matrix<F>| a.matmul(b).expect("square");
    let quad = |t: &Matrix<F>, qi: &F| {
        let inv = qi.checked_inv().expect("nonzero");
        mul(&t.shift(qi), &t.shift(&-inv)).is_zero()
    };
    let t1t2 = mul(t1, t2);
    let t2t1 = mul(t2, t1);
    let checks = vec![
        ("(T1-q)(T1+q^-1)=0", quad(t1, params.q())),
        ("(T2-p)(T2+p^-1)=0", quad(t2, params.p())),
        ("T1T2T1T2=T2T1T2T1", mul(&t1t2, &t1t2) == mul(&t2t1, &t2t1)),
        ("T1X2T1=X1", mul(&mul(t1, x2), t1) == *x1),
        ("T2X2^-1T2=X2", mul(&mul(t2, &x2_inv), t2) == *x2),
        ("T2X1=X1T2", mul(t2, x1) == mul(x1, t2)),
        ("X1X2=X2X1", mul(x1, x2) == mul(x2, x1)),
    ];
    Ok(RelationReport {
        checks,
        x_invertible: true,
    })
}

/// A module over the affine Hecke algebra, stored as the images of
/// `T₁, T₂, X₁, X₂`. The defining relations are checked on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct HModule<F> {
    label: String,
    params: Parameters<F>,
    mats: [Matrix<F>; 6],
    seeds: Vec<(F, F)>,
}

impl<F: Field> HModule<F> {
    pub fn new(
        label: impl Into<String>,
        params: &Parameters<F>,
        t1: Matrix<F>,
        t2: Matrix<F>,
        x1: Matrix<F>,
        x2: Matrix<F>,
    ) -> Result<Self> {
        let label = label.into();
        let report = verify_relations(params, &t1, &t2, &x1, &x2)?;
        if !report.passed() {
            return Err(Error::RelationsFailed(format!(
                "{label}: {}",
                report.failures().join(", ")
            )));
        }
        let x1_inv = x1.inverse()?;
        let x2_inv = x2.inverse()?;
        Ok(HModule {
            label,
            params: params.clone(),
            mats: [t1, t2, x1, x2, x1_inv, x2_inv],
            seeds: Vec::new(),
        })
    }

    /// Records a known weight; weight decompositions scan its W-orbit.
    pub fn with_seed(mut self, x1: F, x2: F) -> Self {
        let s = (x1, x2);
        if !self.seeds.contains(&s) {
            self.seeds.push(s);
        }
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &Parameters<F> {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn seeds(&self) -> &[(F, F)] {
        &self.seeds
    }

    pub fn matrix(&self, g: Generator) -> &Matrix<F> {
        &self.mats[g as usize]
    }

    pub fn t1(&self) -> &Matrix<F> {
        &self.mats[0]
    }

    pub fn t2(&self) -> &Matrix<F> {
        &self.mats[1]
    }

    pub fn x1(&self) -> &Matrix<F> {
        &self.mats[2]
    }

    pub fn x2(&self) -> &Matrix<F> {
        &self.mats[3]
    }

    /// All six generator images, in [`Generator::ALL`] order.
    pub fn generators(&self) -> [&Matrix<F>; 6] {
        let m = &self.mats;
        [&m[0], &m[1], &m[2], &m[3], &m[4], &m[5]]
    }

    pub fn relation_report(&self) -> RelationReport {
        verify_relations(&self.params, self.t1(), self.t2(), self.x1(), self.x2())
            .expect("shapes checked on construction")
    }

    /// The matrix by which an algebra element acts.
    pub fn act(&self, h: &HeckeElement<F>) -> Result<Matrix<F>> {
        if h.params() != &self.params {
            return Err(Error::ParameterMismatch);
        }
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (w, lambda, c) in h.terms() {
            let mut m = Matrix::scalar(n, c.clone());
            for i in w.letters() {
                m = m.matmul(&self.mats[i.index() as usize - 1])?;
            }
            m = m.matmul(&self.x_power(lambda)?)?;
            out = out.matadd(&m)?;
        }
        Ok(out)
    }

    fn x_power(&self, lambda: WeightVector) -> Result<Matrix<F>> {
        let pow = |pos: &Matrix<F>, neg: &Matrix<F>, e: i64| {
            if e >= 0 {
                pos.pow(e as usize)
            } else {
                neg.pow(e.unsigned_abs() as usize)
            }
        };
        pow(&self.mats[2], &self.mats[4], lambda.a)?.matmul(&pow(
            &self.mats[3],
            &self.mats[5],
            lambda.b,
        )?)
    }

    /// `P⁻¹ g P` for every generator.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Self> {
        let p_inv = p.inverse()?;
        let conj = |g: &Matrix<F>| p_inv.matmul(g)?.matmul(p);
        let mut m = HModule::new(
            self.label.clone(),
            &self.params,
            conj(self.t1())?,
            conj(self.t2())?,
            conj(self.x1())?,
            conj(self.x2())?,
        )?;
        m.seeds = self.seeds.clone();
        Ok(m)
    }

    /// Splits along an invariant subspace into (submodule, quotient).
    pub fn split(&self, sub: &[Vector<F>]) -> Result<(Self, Self)> {
        let n = self.dim();
        let basis = canonical_basis(n, sub);
        let k = basis.len();
        if k == 0 || k == n {
            return Err(Error::DimensionMismatch {
                op: "split",
                left: (k, k),
                right: (n, n),
            });
        }
        let pivots: Vec<usize> = basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero"))
            .collect();
        let mut cols: Basis<F> = basis;
        for j in (0..n).filter(|j| !pivots.contains(j)) {
            let mut e = vec![F::zero(); n];
            e[j] = F::one();
            cols.push(e);
        }
        let p = Matrix::from_columns(n, &cols);
        let p_inv = p.inverse()?;
        let mut sub_mats = Vec::with_capacity(4);
        let mut quo_mats = Vec::with_capacity(4);
        for g in &self.mats[..4] {
            let b = p_inv.matmul(g)?.matmul(&p)?;
            for r in k..n {
                for c in 0..k {
                    if !b.get(r, c).is_zero() {
                        return Err(Error::DimensionMismatch {
                            op: "split (subspace not invariant)",
                            left: (r, c),
                            right: (n, n),
                        });
                    }
                }
            }
            sub_mats.push(block(&b, 0..k));
            quo_mats.push(block(&b, k..n));
        }
        let build = |mats: Vec<Matrix<F>>, tag: &str| -> Result<Self> {
            let [t1, t2, x1, x2]: [Matrix<F>; 4] = mats.try_into().expect("four");
            let mut m = HModule::new(
                format!("{}/{tag}", self.label),
                &self.params,
                t1,
                t2,
                x1,
                x2,
            )?;
            m.seeds = self.seeds.clone();
            Ok(m)
        };
        Ok((build(sub_mats, "sub")?, build(quo_mats, "quo")?))
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::ParameterMismatch);
        }
        let (a, b) = (self.dim(), other.dim());
        let sum = |x: &Matrix<F>, y: &Matrix<F>| {
            let mut m = Matrix::zeros(a + b, a + b);
            for i in 0..a {
                for j in 0..a {
                    m.set(i, j, x.get(i, j).clone());
                }
            }
            for i in 0..b {
                for j in 0..b {
                    m.set(a + i, a + j, y.get(i, j).clone());
                }
            }
            m
        };
        let mut m = HModule::new(
            format!("{}+{}", self.label, other.label),
            &self.params,
            sum(self.t1(), other.t1()),
            sum(self.t2(), other.t2()),
            sum(self.x1(), other.x1()),
            sum(self.x2(), other.x2()),
        )?;
        m.seeds = self.seeds.clone();
        for s in &other.seeds {
            if !m.seeds.contains(s) {
                m.seeds.push(s.clone());
            }
        }
        Ok(m)
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            label: self.label.clone(),
            dim: self.dim(),
            params: ParamsJson {
                p: self.params.p().to_string(),
                q: self.params.q().to_string(),
            },
            t1: self.t1().to_text(),
            t2: self.t2().to_text(),
            x1: self.x1().to_text(),
            x2: self.x2().to_text(),
        }
    }

    pub fn from_json(json: &ModuleJson) -> Result<Self> {
        let parse = |s: &str| s.parse::<F>().map_err(|_| Error::Parse(s.to_string()));
        let params = Parameters::new(parse(&json.params.p)?, parse(&json.params.q)?)?;
        let mat = |s: &str| s.parse::<Matrix<F>>();
        let m = HModule::new(
            json.label.clone(),
            &params,
            mat(&json.t1)?,
            mat(&json.t2)?,
            mat(&json.x1)?,
            mat(&json.x2)?,
        )?;
        if m.dim() != json.dim {
            return Err(Error::Parse(format!(
                "declared dim {} but matrices are {}",
                json.dim,
                m.dim()
            )));
        }
        Ok(m)
    }
}

impl<F: Field> fmt::Debug for HModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HModule")
            .field("label", &self.label)
            .field("params", &self.params)
            .field("T1", self.t1())
            .field("T2", self.t2())
            .field("X1", self.x1())
            .field("X2", self.x2())
            .finish()
    }
}

fn block<F: Field>(m: &Matrix<F>, range: std::ops::Range<usize>) -> Matrix<F> {
    let rows: Vec<Vec<F>> = range
        .clone()
        .map(|i| m.row(i)[range.clone()].to_vec())
        .collect();
    Matrix::from_rows(rows).expect("square block")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub p: String,
    pub q: String,
}

/// Serialized form of a module; matrices use the `;`/`,` text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub label: String,
    pub dim: usize,
    pub params: ParamsJson,
    #[serde(rename = "T1")]
    pub t1: String,
    #[serde(rename = "T2")]
    pub t2: String,
    #[serde(rename = "X1")]
    pub x1: String,
    #[serde(rename = "X2")]
    pub x2: String,
}

/// Images of the four generators on a basis of Hecke elements, where each
/// product is reduced to coordinates by `coords`.
fn action_matrices<F: Field>(
    params: &Parameters<F>,
    basis: &[WeylElem],
    coords: impl Fn(&HeckeElement<F>) -> Vector<F>,
) -> Result<[Matrix<F>; 4]> {
    let n = basis.len();
    let gens = [Generator::T1, Generator::T2, Generator::X1, Generator::X2];
    let mut out = Vec::with_capacity(4);
    for g in gens {
        let ge = HeckeElement::generator(g, params);
        let cols: Result<Vec<Vector<F>>> = basis
            .iter()
            .map(|&w| Ok(coords(&ge.mul(&HeckeElement::t(params, w))?)))
            .collect();
        out.push(Matrix::from_columns(n, &cols?));
    }
    Ok(out.try_into().expect("four generators"))
}

/// `M(χ)` on the basis `T_w ⊗ v`, `w` in [`WeylElem::all`] order.
pub fn principal_series<F: Field>(chi: &Character<F>) -> Result<HModule<F>> {
    let params = chi.params();
    let basis: Vec<WeylElem> = WeylElem::all().collect();
    let [t1, t2, x1, x2] = action_matrices(params, &basis, |h| {
        let mut v = vec![F::zero(); 8];
        for (w, lambda, c) in h.terms() {
            v[w.index()] = v[w.index()].clone() + &(c.clone() * &chi.eval(lambda));
        }
        v
    })?;
    Ok(HModule::new(format!("M{chi}"), params, t1, t2, x1, x2)?
        .with_seed(chi.x1().clone(), chi.x2().clone()))
}

/// `Ind_{Ĥᵢ} ρ` on the basis `T_w ⊗ v`, `w` in [`min_coset_reps`] order.
pub fn induce<F: Field>(rho: &OneDimRep<F>) -> Result<HModule<F>> {
    let params = rho.params();
    let i = rho.subalgebra();
    let reps = min_coset_reps(i);
    let [t1, t2, x1, x2] = action_matrices(params, &reps, |h| {
        let mut v = vec![F::zero(); reps.len()];
        for (w, lambda, c) in h.terms() {
            let (rep, rem) = split_coset(w, i);
            let k = reps.iter().position(|&r| r == rep).expect("coset rep");
            v[k] = v[k].clone() + &(c.clone() * &rho.eval(rem, lambda));
        }
        v
    })?;
    Ok(HModule::new(
        format!("Ind{}({}, {}; {})", i.index(), rho.x1(), rho.x2(), rho.t()),
        params,
        t1,
        t2,
        x1,
        x2,
    )?
    .with_seed(rho.x1().clone(), rho.x2().clone()))
}

/// The module over `(-p, q)` with `T₂` replaced by `-T₂`.
pub fn twist_t2<F: Field>(m: &HModule<F>) -> Result<HModule<F>> {
    let mut out = HModule::new(
        m.label.clone(),
        &m.params.negate_p(),
        m.t1().clone(),
        m.t2().neg(),
        m.x1().clone(),
        m.x2().clone(),
    )?;
    out.seeds = m.seeds.clone();
    Ok(out)
}

/// The same matrices read over other parameters at which they still satisfy
/// the relations (the transport `p ↦ -p⁻¹` leaves the algebra unchanged).
pub fn reparametrize<F: Field>(m: &HModule<F>, params: &Parameters<F>) -> Result<HModule<F>> {
    let mut out = HModule::new(
        m.label.clone(),
        params,
        m.t1().clone(),
        m.t2().clone(),
        m.x1().clone(),
        m.x2().clone(),
    )?;
    out.seeds = m.seeds.clone();
    Ok(out)
}

/// The module pulled back along `X ↦ -X`, which turns `M(χ)` into `M(-χ)`.
pub fn negate_x<F: Field>(m: &HModule<F>) -> Result<HModule<F>> {
    let mut out = HModule::new(
        m.label.clone(),
        &m.params,
        m.t1().clone(),
        m.t2().clone(),
        m.x1().neg(),
        m.x2().neg(),
    )?;
    out.seeds = m
        .seeds
        .iter()
        .map(|(a, b)| (-a.clone(), -b.clone()))
        .collect();
    Ok(out)
}

/// One simultaneous (generalized) eigenspace of `X₁, X₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace<F> {
    pub weight: Character<F>,
    pub eig_dim: usize,
    pub gen_dim: usize,
    pub eig_basis: Basis<F>,
    pub gen_basis: Basis<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDecomposition<F> {
    pub spaces: Vec<WeightSpace<F>>,
}

impl<F: Field> WeightDecomposition<F> {
    pub fn is_calibrated(&self) -> bool {
        self.spaces.iter().all(|s| s.eig_dim == s.gen_dim)
    }

    /// `(weight, gen_dim)` pairs sorted by their text form, for comparisons.
    pub fn multiset(&self) -> Vec<((F, F), usize)> {
        let mut out: Vec<((F, F), usize)> = self
            .spaces
            .iter()
            .map(|s| (s.weight.values(), s.gen_dim))
            .collect();
        out.sort_by_key(|((a, b), _)| (a.to_string(), b.to_string()));
        out
    }
}

/// Candidate weights: the recorded seeds, or the diagonal of triangular
/// `X₁, X₂` as a fallback.
fn weight_seeds<F: Field>(m: &HModule<F>) -> Result<Vec<(F, F)>> {
    if !m.seeds.is_empty() {
        return Ok(m.seeds.clone());
    }
    let n = m.dim();
    let upper = |a: &Matrix<F>| (0..n).all(|i| (0..i).all(|j| a.get(i, j).is_zero()));
    let lower = |a: &Matrix<F>| (0..n).all(|i| (i + 1..n).all(|j| a.get(i, j).is_zero()));
    if (upper(m.x1()) && upper(m.x2())) || (lower(m.x1()) && lower(m.x2())) {
        let mut out: Vec<(F, F)> = Vec::new();
        for i in 0..n {
            let s = (m.x1().get(i, i).clone(), m.x2().get(i, i).clone());
            if !out.contains(&s) {
                out.push(s);
            }
        }
        return Ok(out);
    }
    Err(Error::WeightDecomposition(format!(
        "{}: no recorded weight and X is not triangular",
        m.label
    )))
}

pub fn weight_decomposition<F: Field>(m: &HModule<F>) -> Result<WeightDecomposition<F>> {
    let n = m.dim();
    let mut candidates: Vec<Character<F>> = Vec::new();
    for (a, b) in weight_seeds(m)? {
        for c in Character::new(a, b, &m.params)?.orbit() {
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    }
    let mut spaces = Vec::new();
    let mut total = 0;
    for chi in candidates {
        let a = m.x1().shift(chi.x1());
        let b = m.x2().shift(chi.x2());
        let gen_basis = a.pow(n)?.vstack(&b.pow(n)?)?.kernel();
        if gen_basis.is_empty() {
            continue;
        }
        let eig_basis = a.vstack(&b)?.kernel();
        total += gen_basis.len();
        spaces.push(WeightSpace {
            weight: chi,
            eig_dim: eig_basis.len(),
            gen_dim: gen_basis.len(),
            eig_basis,
            gen_basis,
        });
    }
    if total != n {
        return Err(Error::WeightDecomposition(format!(
            "{}: scanned weights cover {total} of {n} dimensions",
            m.label
        )));
    }
    Ok(WeightDecomposition { spaces })
}

pub fn is_calibrated<F: Field>(m: &HModule<F>) -> Result<bool> {
    Ok(weight_decomposition(m)?.is_calibrated())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn params() -> Parameters<Q> {
        Parameters::new(q(5), q(3)).unwrap()
    }

    #[test]
    fn character_orbit_and_negation() {
        let chi = Character::new(q(2), q(7), &params()).unwrap();
        assert_eq!(chi.orbit().len(), 8);
        let s1 = chi.act(WeylElem::S1);
        assert_eq!(s1.values(), (q(7), q(2)));
        let s2 = chi.act(WeylElem::S2);
        assert_eq!(s2.values(), (q(2), Q::from_parts(1, 7, 0, 1)));
        assert_eq!(negate_character(&negate_character(&chi)), chi);
        assert!(Character::new(q(0), q(1), &params()).is_err());
    }

    #[test]
    fn one_dim_compatibility() {
        let p = params();
        assert!(OneDimRep::new(Simple::S1, q(45), q(5), q(3), &p).is_ok());
        assert!(OneDimRep::new(Simple::S1, q(45), q(5), q(5), &p).is_err());
        assert!(OneDimRep::new(Simple::S2, q(1), q(5), q(5), &p).is_ok());
        assert!(OneDimRep::new(Simple::S2, q(1), q(4), q(5), &p).is_err());
    }

    #[test]
    fn principal_series_basics() {
        let p = params();
        let chi = Character::new(q(2), q(7), &p).unwrap();
        let m = principal_series(&chi).unwrap();
        assert_eq!(m.dim(), 8);
        // T1 (T_e ⊗ v) = T_{s1} ⊗ v
        assert_eq!(m.t1().column(0), {
            let mut e = vec![q(0); 8];
            e[1] = q(1);
            e
        });
        // X2 (T_{s2} ⊗ v) = χ(X2)⁻¹ T_{s2} ⊗ v + (p - p⁻¹) χ(X2) T_e ⊗ v
        let col = m.x2().column(2);
        assert_eq!(col[2], Q::from_parts(1, 7, 0, 1));
        assert_eq!(col[0], Q::from_parts(24, 5, 0, 1) * q(7));
        let wd = weight_decomposition(&m).unwrap();
        assert_eq!(wd.spaces.len(), 8);
        assert!(wd.is_calibrated());
    }

    #[test]
    fn induced_restriction_and_dims() {
        let p = params();
        let rho = OneDimRep::new(Simple::S2, q(10), q(5), q(5), &p).unwrap();
        let m = induce(&rho).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.t2().get(0, 0), &q(5));
        assert_eq!(m.t2().get(1, 0), &q(0));
        assert!(is_calibrated(&m).unwrap());
    }

    #[test]
    fn twist_is_an_involution() {
        let p = params();
        let chi = Character::new(q(2), q(7), &p).unwrap();
        let m = principal_series(&chi).unwrap();
        let t = twist_t2(&m).unwrap();
        assert_eq!(t.params().p(), &q(-5));
        assert_eq!(twist_t2(&t).unwrap(), m);
    }

    #[test]
    fn perturbed_matrix_fails_relations() {
        let p = params();
        let chi = Character::new(q(2), q(7), &p).unwrap();
        let m = principal_series(&chi).unwrap();
        let mut t1 = m.t1().clone();
        t1.set(0, 0, t1.get(0, 0).clone() + q(1));
        let report = verify_relations(&p, &t1, m.t2(), m.x1(), m.x2()).unwrap();
        assert!(!report.passed());
        assert!(HModule::new(
            "bad",
            &p,
            t1,
            m.t2().clone(),
            m.x1().clone(),
            m.x2().clone()
        )
        .is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = params();
        let chi = Character::new(q(2), q(7), &p).unwrap();
        let m = principal_series(&chi).unwrap();
        let json = serde_json::to_string(&m.to_json()).unwrap();
        let back: ModuleJson = serde_json::from_str(&json).unwrap();
        let m2 = HModule::<Q>::from_json(&back).unwrap();
        assert_eq!(m2.t1(), m.t1());
        assert_eq!(m2.x2(), m.x2());
    }

    #[test]
    fn split_along_submodule() {
        let p = params();
        let a = HModule::new(
            "a",
            &p,
            Matrix::scalar(1, q(3)),
            Matrix::scalar(1, q(5)),
            Matrix::scalar(1, q(45)),
            Matrix::scalar(1, q(5)),
        )
        .unwrap();
        let b = HModule::new(
            "b",
            &p,
            Matrix::scalar(1, q(3)),
            Matrix::scalar(1, Q::from_parts(-1, 5, 0, 1)),
            Matrix::scalar(1, Q::from_parts(9, 5, 0, 1)),
            Matrix::scalar(1, Q::from_parts(1, 5, 0, 1)),
        )
        .unwrap();
        let s = a.direct_sum(&b).unwrap();
        let (sub, quo) = s.split(&[vec![q(0), q(1)]]).unwrap();
        assert_eq!(sub.x1().get(0, 0), &Q::from_parts(9, 5, 0, 1));
        assert_eq!(quo.x1().get(0, 0), &q(45));
    }
}
