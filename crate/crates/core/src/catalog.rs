//! Every explicit representation printed in the classification, as
//! expressions in `p, q` evaluated at concrete parameters, together with the
//! characters whose principal series contain them and the expected tables.
//!
//! Entries are transcriptions, never re-derivations: they are the oracle the
//! computed composition factors are matched against.

use crate::analysis::BaseRegime;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hecke::Parameters;
use crate::linalg::Matrix;
use crate::module::{induce, negate_x, Character, HModule, OneDimRep};
use crate::weyl::Simple;

/// A catalog item: a module of the full algebra or a one-dimensional
/// representation of one of the rank-one subalgebras.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Entry<F: Field> {
    Module(HModule<F>),
    Rep(OneDimRep<F>),
}

impl<F: Field> Entry<F> {
    pub fn module(self) -> Result<HModule<F>> {
        match self {
            Entry::Module(m) => Ok(m),
            Entry::Rep(r) => Err(Error::UnknownLabel(format!(
                "entry for subalgebra {} is not a module of the full algebra",
                r.subalgebra().index()
            ))),
        }
    }

    pub fn rep(self) -> Result<OneDimRep<F>> {
        match self {
            Entry::Rep(r) => Ok(r),
            Entry::Module(m) => Err(Error::UnknownLabel(format!(
                "{} is not a one-dimensional subalgebra representation",
                m.label()
            ))),
        }
    }
}

/// Evaluation context: the parameter values plus shorthand arithmetic.
struct Ev<F> {
    p: F,
    q: F,
}

impl<F: Field> Ev<F> {
    fn n(&self, k: i64) -> F {
        F::from_i64(k)
    }

    fn p(&self, e: i64) -> F {
        self.p.checked_pow(e).expect("nonzero")
    }

    fn q(&self, e: i64) -> F {
        self.q.checked_pow(e).expect("nonzero")
    }

    /// `num / den`, failing when the entry is undefined at these parameters.
    fn div(&self, num: F, den: F) -> Result<F> {
        num.checked_div(&den).ok_or_else(|| {
            Error::InvalidParameters(format!(
                "catalog entry has a vanishing denominator at (p, q) = ({}, {})",
                self.p, self.q
            ))
        })
    }
}

fn mat<F: Field>(rows: Vec<Vec<F>>) -> Result<Matrix<F>> {
    Matrix::from_rows(rows)
}

fn module<F: Field>(
    label: &str,
    params: &Parameters<F>,
    [t1, t2, x1, x2]: [Matrix<F>; 4],
    seed: (F, F),
) -> Result<HModule<F>> {
    Ok(HModule::new(label, params, t1, t2, x1, x2)?.with_seed(seed.0, seed.1))
}

fn diag<F: Field>(d: Vec<F>) -> Matrix<F> {
    Matrix::diag(d)
}

/// Which printed variant of the `U_b` matrices applies.
fn ub_variant(regime: BaseRegime) -> Option<BaseRegime> {
    match regime {
        BaseRegime::P2EqNegQ2 => None,
        other => Some(other),
    }
}

/// Labels of the `Ind ρ^{d(i)}` rows that stay irreducible in a regime.
fn d_indices(regime: BaseRegime) -> &'static [u8] {
    match regime {
        BaseRegime::Generic | BaseRegime::P2EqNegQ2 => &[1, 2, 3, 4, 5],
        BaseRegime::PEqQ => &[1, 4, 5],
        BaseRegime::PEqQ2 => &[2, 3, 5],
    }
}

/// The catalog at one specialization. `v` and `u` are the family
/// parameters of `χ_f(v)` and `χ_g(u)`.
#[derive(Clone, Debug)]
pub struct Catalog<F> {
    params: Parameters<F>,
    regime: BaseRegime,
    v: F,
    u: F,
}

impl<F: Field> Catalog<F> {
    pub fn new(params: &Parameters<F>, regime: BaseRegime, v: F, u: F) -> Result<Self> {
        check_v(params, &v)?;
        check_u(params, &u)?;
        Ok(Catalog {
            params: params.clone(),
            regime,
            v,
            u,
        })
    }

    pub fn params(&self) -> &Parameters<F> {
        &self.params
    }

    pub fn regime(&self) -> BaseRegime {
        self.regime
    }

    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    fn ev(&self) -> Ev<F> {
        Ev {
            p: self.params.p().clone(),
            q: self.params.q().clone(),
        }
    }

    /// Every label this catalog can build in its regime.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = (1..=8).map(|k| format!("onedim_{k}")).collect();
        for base in ["a", "-a"] {
            for i in 1..=2 {
                out.push(format!("U_{base}^{i}"));
            }
        }
        if ub_variant(self.regime).is_some() {
            for base in ["b", "-b"] {
                for i in 1..=2 {
                    out.push(format!("U_{base}^{i}"));
                }
            }
        }
        for i in 1..=4 {
            out.push(format!("U_c^{i}"));
        }
        out.push("Ind(rho_1^d5)/printed".to_string());
        for name in self.rho_names() {
            for j in 1..=2 {
                out.push(format!("rho_{j}^{name}"));
            }
        }
        for name in self.rho_names() {
            for j in 1..=2 {
                out.push(format!("Ind(rho_{j}^{name})"));
                // -χ_g needs no separate treatment
                if name != "g" {
                    out.push(format!("Ind(-rho_{j}^{name})"));
                }
            }
        }
        out
    }

    fn rho_names(&self) -> Vec<&'static str> {
        let mut names = vec!["a", "b", "c", "d1", "d2", "d3", "d4", "d5", "f", "g"];
        if ub_variant(self.regime).is_none() {
            names.retain(|n| *n != "b");
        }
        names
    }

    pub fn build(&self, label: &str) -> Result<Entry<F>> {
        let unknown = || Error::UnknownLabel(label.to_string());
        if let Some(k) = label.strip_prefix("onedim_") {
            let k: usize = k.parse().map_err(|_| unknown())?;
            return self.one_dim(k).map(Entry::Module);
        }
        if let Some(rest) = label.strip_prefix("U_") {
            let (name, i) = rest.split_once('^').ok_or_else(unknown)?;
            let i: usize = i.parse().map_err(|_| unknown())?;
            let m = match name {
                "a" => self.u_a(i)?,
                "-a" => negate_x(&self.u_a(i)?)?,
                "b" => self.u_b(i)?,
                "-b" => negate_x(&self.u_b(i)?)?,
                "c" => self.u_c(i)?,
                _ => return Err(unknown()),
            };
            return Ok(Entry::Module(m.with_label(label)));
        }
        if label == "Ind(rho_1^d5)/printed" {
            return self.printed_ind_d5().map(Entry::Module);
        }
        if let Some(rest) = label.strip_prefix("rho_") {
            let (j, name) = rest.split_once('^').ok_or_else(unknown)?;
            let j: usize = j.parse().map_err(|_| unknown())?;
            return self.rho(name, j).map(Entry::Rep);
        }
        if let Some(inner) = label.strip_prefix("Ind(").and_then(|s| s.strip_suffix(')')) {
            let (neg, inner) = match inner.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, inner),
            };
            let rest = inner.strip_prefix("rho_").ok_or_else(unknown)?;
            let (j, name) = rest.split_once('^').ok_or_else(unknown)?;
            let j: usize = j.parse().map_err(|_| unknown())?;
            let mut rho = self.rho(name, j)?;
            if neg {
                rho = rho.negate();
            }
            return Ok(Entry::Module(induce(&rho)?.with_label(label)));
        }
        Err(unknown())
    }

    pub fn module(&self, label: &str) -> Result<HModule<F>> {
        self.build(label)?.module()
    }

    /// The eight one-dimensional representations of the full algebra.
    fn one_dim(&self, k: usize) -> Result<HModule<F>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let pi = e.p(-1);
        let qi = e.q(-1);
        let q2 = e.q(2);
        let qm2 = e.q(-2);
        // (X1, X2, T1, T2) up to the overall sign of the X's
        let (x1, x2, t1, t2) = match (k - 1) % 4 {
            0 => (q2.clone() * p, p.clone(), q.clone(), p.clone()),
            1 => (qm2.clone() * &pi, pi.clone(), -qi.clone(), -pi.clone()),
            2 => (q2.clone() * &pi, pi.clone(), q.clone(), -pi.clone()),
            _ => (qm2.clone() * p, p.clone(), -qi.clone(), p.clone()),
        };
        if !(1..=8).contains(&k) {
            return Err(Error::UnknownLabel(format!("onedim_{k}")));
        }
        let (x1, x2) = if k > 4 { (-x1, -x2) } else { (x1, x2) };
        let s = |x: &F| Matrix::scalar(1, x.clone());
        module(
            &format!("onedim_{k}"),
            &self.params,
            [s(&t1), s(&t2), s(&x1), s(&x2)],
            (x1, x2),
        )
    }

    fn u_a(&self, i: usize) -> Result<HModule<F>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let z = F::zero;
        let p2 = e.p(2);
        let pq2 = p.clone() * &e.q(2);
        let pq2_inv = e.p(-1) * &e.q(-2);
        let d2 = p2.clone() * &e.q(2) - &e.n(1); // p²q² - 1
        let d4 = p2.clone() * &e.q(4) - &e.n(1); // p²q⁴ - 1
        let q2m1 = e.q(2) - &e.n(1);
        let t1_main = e.div(p2.clone() * q * &q2m1, d2.clone())?;
        let t1_off = e.div((p2.clone() - &e.n(1)) * &d4, d2.square())?;
        let t1_last = -e.div(q2m1.clone(), q.clone() * &d2)?;
        let t2_off = e.div(
            (e.q(4) - &e.n(1)) * &(e.p(4) * &e.q(4) - &e.n(1)),
            d4.square(),
        )?;
        let t2_last = -e.div(p2.clone() - &e.n(1), p.clone() * &d4)?;
        match i {
            1 => {
                let t2_first = e.div(p.clone() * &(p2.clone() - &e.n(1)) * &e.q(4), d4.clone())?;
                module(
                    "U_a^1",
                    &self.params,
                    [
                        mat(vec![
                            vec![-e.q(-1), z(), z()],
                            vec![z(), t1_main, t1_off],
                            vec![z(), e.n(1), t1_last],
                        ])?,
                        mat(vec![
                            vec![t2_first, t2_off, z()],
                            vec![e.n(1), t2_last, z()],
                            vec![z(), z(), p.clone()],
                        ])?,
                        diag(vec![p.clone(), p.clone(), pq2_inv.clone()]),
                        diag(vec![pq2.clone(), pq2_inv.clone(), p.clone()]),
                    ],
                    (p.clone(), pq2),
                )
            }
            2 => {
                // Printed without the factor q⁴ that the same entry of U_a^1
                // carries; the quadratic relation for T2 needs it.
                let t2_first = e.div(p.clone() * &(p2.clone() - &e.n(1)) * &e.q(4), d4.clone())?;
                let pi = e.p(-1);
                module(
                    "U_a^2",
                    &self.params,
                    [
                        mat(vec![
                            vec![t1_last, e.n(1), z()],
                            vec![t1_off, t1_main, z()],
                            vec![z(), z(), q.clone()],
                        ])?,
                        mat(vec![
                            vec![t2_first, z(), t2_off],
                            vec![z(), -pi.clone(), z()],
                            vec![e.n(1), z(), t2_last],
                        ])?,
                        diag(vec![pi.clone(), pq2.clone(), pi.clone()]),
                        diag(vec![pq2.clone(), pi.clone(), pq2_inv]),
                    ],
                    (pi, pq2),
                )
            }
            _ => Err(Error::UnknownLabel(format!("U_a^{i}"))),
        }
    }

    fn u_b(&self, i: usize) -> Result<HModule<F>> {
        let variant = ub_variant(self.regime).ok_or_else(|| {
            Error::UnknownLabel(format!("U_b^{i} is not defined when p^2 = -q^2"))
        })?;
        let label = format!("U_b^{i}");
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let z = F::zero;
        let one = || e.n(1);
        match (variant, i) {
            (BaseRegime::Generic, _) => {
                let p2 = e.p(2);
                let q2 = e.q(2);
                let q4 = e.q(4);
                let dq = q2.clone() - &p2; // q² - p²
                let dp = p2.clone() - &q4; // p² - q⁴
                let t1_a = e.div(q.clone() * &(q2.clone() - &one()), dq.clone())?;
                let t1_b = -e.div((p2.clone() - &one()) * &(q4.clone() - &p2), dq.square())?;
                let t1_c = -e.div(p2.clone() * &(q2.clone() - &one()), dq.clone() * q)?;
                let t2_a = e.div(p.clone() * &(p2.clone() - &one()), dp.clone())?;
                let t2_b = -e.div(
                    (p2.clone() - &q2) * &(q4.clone() - &one()) * &(p2.clone() + &q2),
                    dp.square(),
                )?;
                let t2_c = -e.div((p2.clone() - &one()) * &q4, p.clone() * &dp)?;
                let t2_block = |first: F| {
                    mat(vec![
                        vec![first, z(), z()],
                        vec![z(), t2_a.clone(), one()],
                        vec![z(), t2_b.clone(), t2_c.clone()],
                    ])
                };
                let pi = e.p(-1);
                let q2pi = q2.clone() * &pi;
                let pqm2 = p.clone() * &e.q(-2);
                if i == 1 {
                    module(
                        &label,
                        &self.params,
                        [
                            mat(vec![
                                vec![t1_a, z(), t1_b],
                                vec![z(), q.clone(), z()],
                                vec![one(), z(), t1_c],
                            ])?,
                            t2_block(p.clone())?,
                            diag(vec![q2pi.clone(), p.clone(), p.clone()]),
                            diag(vec![p.clone(), pqm2, q2pi.clone()]),
                        ],
                        (q2pi.clone(), p.clone()),
                    )
                } else if i == 2 {
                    // Printed without the 1/q of the mirrored entry in U_b^1;
                    // the quadratic relation for T1 needs it.
                    let t1_c2 = -e.div(p2.clone() * &(q2.clone() - &one()), dq.clone() * q)?;
                    module(
                        &label,
                        &self.params,
                        [
                            mat(vec![
                                vec![t1_c2, one(), z()],
                                vec![t1_b, t1_a, z()],
                                vec![z(), z(), -e.q(-1)],
                            ])?,
                            t2_block(-pi.clone())?,
                            diag(vec![pqm2.clone(), pi.clone(), pi.clone()]),
                            diag(vec![pi.clone(), pqm2.clone(), q2pi]),
                        ],
                        (pqm2, pi),
                    )
                } else {
                    Err(Error::UnknownLabel(label))
                }
            }
            (BaseRegime::PEqQ, 1) => {
                let qi = e.q(-1);
                let q2 = e.q(2);
                let q2m1 = q2.clone() - &one();
                module(
                    &label,
                    &self.params,
                    [
                        mat(vec![
                            vec![q.clone(), e.div(one() + &(e.n(2) * &q2), q2.clone())?, z()],
                            vec![z(), -qi.clone(), z()],
                            vec![z(), e.div(q2m1.clone(), q2.clone())?, q.clone()],
                        ])?,
                        mat(vec![
                            vec![-qi.clone(), z(), e.div(one() + &q2, q.clone() * &q2m1)?],
                            vec![one(), q.clone(), -e.div(one(), q2m1.clone())?],
                            vec![z(), z(), q.clone()],
                        ])?,
                        mat(vec![
                            vec![q.clone(), z(), z()],
                            vec![z(), q.clone(), q2.clone()],
                            vec![z(), z(), q.clone()],
                        ])?,
                        mat(vec![
                            vec![qi.clone(), z(), e.div(one() + &(e.n(2) * &q2), q.clone())?],
                            vec![z(), q.clone(), -q2.clone()],
                            vec![z(), z(), q.clone()],
                        ])?,
                    ],
                    (q.clone(), qi),
                )
            }
            (BaseRegime::PEqQ, 2) => {
                let qi = e.q(-1);
                let q2 = e.q(2);
                let q2m1 = q2.clone() - &one();
                let q3 = e.q(3);
                module(
                    &label,
                    &self.params,
                    [
                        mat(vec![
                            vec![q.clone(), z(), z()],
                            vec![q.clone() * &(e.n(2) + &q2), -qi.clone(), z()],
                            vec![-q.clone(), z(), -qi.clone()],
                        ])?,
                        mat(vec![
                            vec![-qi.clone(), qi.clone(), q.clone()],
                            vec![z(), q.clone(), q.clone() * &(q2.clone() + &one())],
                            vec![z(), z(), -qi.clone()],
                        ])?,
                        mat(vec![
                            vec![qi.clone(), z(), -e.div(q2m1.clone(), q3.clone())?],
                            vec![z(), qi.clone(), z()],
                            vec![z(), z(), qi.clone()],
                        ])?,
                        mat(vec![
                            vec![qi.clone(), z(), e.div(q2m1.clone(), q3)?],
                            vec![z(), q.clone(), e.div(q2m1 * &(q2 + &e.n(2)), q.clone())?],
                            vec![z(), z(), qi.clone()],
                        ])?,
                    ],
                    (qi.clone(), qi),
                )
            }
            (BaseRegime::PEqQ2, 1) => {
                let qi = e.q(-1);
                let q2 = e.q(2);
                let q2p1 = q2.clone() + &one();
                let r = e.div(e.q(4) - &one(), q2.clone())?;
                module(
                    &label,
                    &self.params,
                    [
                        mat(vec![
                            vec![-qi, z(), -e.div(q2p1.square(), q2.clone())?],
                            vec![one(), q.clone(), e.div(q2p1, q.clone())?],
                            vec![z(), z(), q.clone()],
                        ])?,
                        mat(vec![
                            vec![q2.clone(), z(), z()],
                            vec![z(), z(), one()],
                            vec![z(), one(), r.clone()],
                        ])?,
                        diag(vec![one(), q2.clone(), q2.clone()]),
                        mat(vec![
                            vec![q2.clone(), z(), z()],
                            vec![z(), one(), r],
                            vec![z(), z(), one()],
                        ])?,
                    ],
                    (one(), q2),
                )
            }
            (BaseRegime::PEqQ2, 2) => {
                let qi = e.q(-1);
                let q2 = e.q(2);
                let qm2 = e.q(-2);
                let q2p1 = q2.clone() + &one();
                let r = e.div(e.q(4) - &one(), q2.clone())?;
                module(
                    &label,
                    &self.params,
                    [
                        mat(vec![
                            vec![
                                -qi.clone(),
                                e.div(q2p1.clone(), q.clone())?,
                                e.div(q2p1.square(), q2.clone())?,
                            ],
                            vec![z(), -qi, z()],
                            vec![z(), one(), q.clone()],
                        ])?,
                        mat(vec![
                            vec![z(), one(), z()],
                            vec![one(), r.clone(), z()],
                            vec![z(), z(), -qm2.clone()],
                        ])?,
                        diag(vec![qm2.clone(), qm2.clone(), one()]),
                        mat(vec![
                            vec![one(), r, z()],
                            vec![z(), one(), z()],
                            vec![z(), z(), qm2.clone()],
                        ])?,
                    ],
                    (qm2, one()),
                )
            }
            _ => Err(Error::UnknownLabel(label)),
        }
    }

    fn u_c(&self, i: usize) -> Result<HModule<F>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let z = F::zero;
        let pi = e.p(-1);
        let p2 = e.p(2);
        let q2 = e.q(2);
        let q2m1 = q2.clone() - &e.n(1);
        let t1_even = || -> Result<Matrix<F>> {
            let d = e.div(q2m1.clone(), e.n(2) * q)?;
            mat(vec![
                vec![d.clone(), e.div((e.n(1) + &q2).square(), e.n(4) * &q2)?],
                vec![e.n(1), d],
            ])
        };
        let t1_odd = || -> Result<Matrix<F>> {
            let p2p1 = p2.clone() + &e.n(1);
            mat(vec![
                vec![
                    e.div(q2m1.clone(), p2p1.clone() * q)?,
                    e.div(
                        (p2.clone() + &q2) * &(e.n(1) + &(p2.clone() * &q2)),
                        p2p1.square() * &q2,
                    )?,
                ],
                vec![e.n(1), e.div(p2.clone() * &q2m1, p2p1 * q)?],
            ])
        };
        let label = format!("U_c^{i}");
        let _ = z;
        let (t1, t2, x1, x2) = match i {
            1 => (
                t1_even()?,
                diag(vec![p.clone(), p.clone()]),
                diag(vec![p.clone(), -p.clone()]),
                diag(vec![-p.clone(), p.clone()]),
            ),
            2 => (
                t1_even()?,
                diag(vec![-pi.clone(), -pi.clone()]),
                diag(vec![-pi.clone(), pi.clone()]),
                diag(vec![pi.clone(), -pi.clone()]),
            ),
            3 => (
                t1_odd()?,
                diag(vec![p.clone(), -pi.clone()]),
                diag(vec![-pi.clone(), p.clone()]),
                diag(vec![p.clone(), -pi.clone()]),
            ),
            4 => (
                t1_odd()?,
                diag(vec![p.clone(), -pi.clone()]),
                diag(vec![pi.clone(), -p.clone()]),
                diag(vec![-p.clone(), pi.clone()]),
            ),
            _ => return Err(Error::UnknownLabel(label)),
        };
        let seed = (x1.get(0, 0).clone(), x2.get(0, 0).clone());
        module(&label, &self.params, [t1, t2, x1, x2], seed)
    }

    /// The matrices printed for `Ind ρ₁^{d(5)}`, independent of [`induce`].
    fn printed_ind_d5(&self) -> Result<HModule<F>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let z = F::zero;
        let one = || e.n(1);
        let a = one() + p; // 1 + p
        let q2m1 = e.q(2) - &one();
        let w = (p.clone() + &e.q(2)) * &(one() + &(p.clone() * &e.q(2))); // (p+q²)(1+pq²)
        let pm1 = p.clone() - &one();
        let t1 = mat(vec![
            vec![
                e.div(p.clone() * &q2m1, a.clone() * q)?,
                -e.div(pm1.clone() * &q2m1, a.clone() * q)?,
                one(),
                -e.div(p.clone() * &q2m1.square(), a.square() * &e.q(2))?,
            ],
            vec![
                z(),
                e.div(p.clone() * &q2m1, a.clone() * q)?,
                z(),
                e.div(w.clone(), a.square() * &e.q(2))?,
            ],
            vec![
                e.div(w.clone(), a.square() * &e.q(2))?,
                e.div((one() - p + &e.p(2)) * &q2m1.square(), a.square() * &e.q(2))?,
                e.div(q2m1.clone(), a.clone() * q)?,
                e.div(pm1.clone() * &q2m1 * &w, a.square() * &a * &e.q(3))?,
            ],
            vec![z(), one(), z(), e.div(q2m1.clone(), a.clone() * q)?],
        ])?;
        let r = e.div(e.p(2) - &one(), p.clone())?;
        let t2 = mat(vec![
            vec![z(), one(), z(), z()],
            vec![one(), r.clone(), z(), z()],
            vec![z(), z(), p.clone(), z()],
            vec![z(), z(), z(), p.clone()],
        ])?;
        let x1 = mat(vec![
            vec![p.clone(), z(), z(), z()],
            vec![z(), p.clone(), z(), z()],
            vec![
                z(),
                z(),
                -one(),
                -e.div(pm1 * &w, p.clone() * &a * &e.q(2))?,
            ],
            vec![z(), z(), z(), -one()],
        ])?;
        let x2 = mat(vec![
            vec![-one(), -r, z(), z()],
            vec![z(), -one(), z(), z()],
            vec![z(), z(), p.clone(), z()],
            vec![z(), z(), z(), p.clone()],
        ])?;
        module(
            "Ind(rho_1^d5)/printed",
            &self.params,
            [t1, t2, x1, x2],
            (p.clone(), -one()),
        )
    }

    /// One-dimensional representations of the rank-one subalgebras. The
    /// second member of each pair is `(sᵢχ, Tᵢ = -qᵢ⁻¹)`.
    fn rho(&self, name: &str, j: usize) -> Result<OneDimRep<F>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let pi = e.p(-1);
        let qi = e.q(-1);
        let q2 = e.q(2);
        let unknown = || Error::UnknownLabel(format!("rho_{j}^{name}"));
        let (sub, x1, x2, t) = match (name, j) {
            ("a", 1) => (Simple::S2, q2.clone() * p, p.clone(), p.clone()),
            // printed with X2 = -p⁻¹
            ("a", 2) => (Simple::S2, q2.clone() * p, pi.clone(), -pi.clone()),
            ("b", 1) => (Simple::S1, q2.clone() * &pi, pi.clone(), q.clone()),
            ("b", 2) => (Simple::S1, pi.clone(), q2.clone() * &pi, -qi.clone()),
            ("c", 1) => (Simple::S2, -pi.clone(), p.clone(), p.clone()),
            // printed with X2 = -p⁻¹
            ("c", 2) => (Simple::S2, -pi.clone(), pi.clone(), -pi.clone()),
            ("d1", 1) => (Simple::S1, q2.clone(), e.n(1), q.clone()),
            ("d1", 2) => (Simple::S1, e.n(1), q2.clone(), -qi.clone()),
            ("d2", 1) => (Simple::S1, q.clone(), qi.clone(), q.clone()),
            ("d2", 2) => (Simple::S1, qi.clone(), q.clone(), -qi.clone()),
            ("d3", 1) => (Simple::S2, p.clone(), p.clone(), p.clone()),
            ("d3", 2) => (Simple::S2, p.clone(), pi.clone(), -pi.clone()),
            ("d4", 1) => (Simple::S2, e.n(1), p.clone(), p.clone()),
            ("d4", 2) => (Simple::S2, e.n(1), pi.clone(), -pi.clone()),
            ("d5", 1) => (Simple::S2, -e.n(1), p.clone(), p.clone()),
            // printed with X2 = -p⁻¹
            ("d5", 2) => (Simple::S2, -e.n(1), pi.clone(), -pi.clone()),
            ("f", 1) => (Simple::S2, p.clone() * &self.v, p.clone(), p.clone()),
            ("f", 2) => (Simple::S2, p.clone() * &self.v, pi.clone(), -pi.clone()),
            ("g", 1) => (Simple::S1, q2.clone() * &self.u, self.u.clone(), q.clone()),
            ("g", 2) => (Simple::S1, self.u.clone(), q2 * &self.u, -qi),
            _ => return Err(unknown()),
        };
        if name == "b" && ub_variant(self.regime).is_none() {
            return Err(unknown());
        }
        OneDimRep::new(sub, x1, x2, t, &self.params)
    }

    /// The `(name, χ)` pairs of the character list followed by the listed
    /// negations. `χ_b` is kept in every regime; [`table_rows`] decides which
    /// rows a table shows.
    pub fn characters(&self) -> Result<Vec<(String, Character<F>)>> {
        let e = self.ev();
        let (p, q) = (&e.p, &e.q);
        let pi = e.p(-1);
        let q2 = e.q(2);
        let list = [
            ("chi_a", q2.clone() * p, p.clone()),
            ("chi_b", q2.clone() * &pi, pi.clone()),
            ("chi_c", -pi.clone(), p.clone()),
            ("chi_d1", q2.clone(), e.n(1)),
            ("chi_d2", q.clone(), e.q(-1)),
            ("chi_d3", p.clone(), p.clone()),
            ("chi_d4", e.n(1), p.clone()),
            ("chi_d5", -e.n(1), p.clone()),
            ("chi_f", p.clone() * &self.v, p.clone()),
            ("chi_g", q2 * &self.u, self.u.clone()),
        ];
        let mut out = Vec::new();
        for (name, a, b) in list {
            out.push((name.to_string(), Character::new(a, b, &self.params)?));
        }
        let negated: Vec<(String, Character<F>)> = out
            .iter()
            .filter(|(n, _)| !matches!(n.as_str(), "chi_c" | "chi_g"))
            .map(|(n, c)| (format!("-{n}"), c.negate()))
            .collect();
        out.extend(negated);
        Ok(out)
    }

    pub fn character(&self, name: &str) -> Result<Character<F>> {
        self.characters()?
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Labels of the irreducible modules listed for this regime
    /// (besides irreducible principal series), used for identification.
    pub fn irreducible_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = (1..=8).map(|k| format!("onedim_{k}")).collect();
        let c_range: &[usize] = match self.regime {
            BaseRegime::P2EqNegQ2 => &[1, 2],
            _ => &[1, 2, 3, 4],
        };
        out.extend(c_range.iter().map(|i| format!("U_c^{i}")));
        for name in ["a", "-a"] {
            out.extend((1..=2).map(|i| format!("U_{name}^{i}")));
        }
        if ub_variant(self.regime).is_some() {
            for name in ["b", "-b"] {
                out.extend((1..=2).map(|i| format!("U_{name}^{i}")));
            }
        }
        let mut families: Vec<String> = d_indices(self.regime)
            .iter()
            .map(|i| format!("d{i}"))
            .collect();
        families.push("f".into());
        for name in &families {
            for j in 1..=2 {
                out.push(format!("Ind(rho_{j}^{name})"));
                out.push(format!("Ind(-rho_{j}^{name})"));
            }
        }
        for j in 1..=2 {
            out.push(format!("Ind(rho_{j}^g)"));
        }
        out
    }

    pub fn irreducibles(&self) -> Result<Vec<HModule<F>>> {
        self.irreducible_labels()
            .iter()
            .map(|l| self.module(l))
            .collect()
    }
}

fn pm<F: Field>(x: F) -> [F; 2] {
    [x.clone(), -x]
}

/// `v ≠ ±p⁻², ±p⁻¹, ±1, q^{±2}, q^{±2}p⁻²`.
pub fn check_v<F: Field>(params: &Parameters<F>, v: &F) -> Result<()> {
    let p = params.p();
    let q = params.q();
    let pw = |x: &F, e: i64| x.checked_pow(e).expect("nonzero");
    let mut bad: Vec<F> = Vec::new();
    bad.extend(pm(pw(p, -2)));
    bad.extend(pm(pw(p, -1)));
    bad.extend(pm(F::one()));
    bad.push(pw(q, 2));
    bad.push(pw(q, -2));
    bad.push(pw(q, 2) * &pw(p, -2));
    bad.push(pw(q, -2) * &pw(p, -2));
    if bad.contains(v) {
        return Err(Error::ExcludedFamilyParameter(format!("v = {v}")));
    }
    Ok(())
}

/// `u ≠ ±p^{±1}, ±1, ±q⁻², ±q⁻¹, ±q⁻²p^{±1}`.
pub fn check_u<F: Field>(params: &Parameters<F>, u: &F) -> Result<()> {
    let p = params.p();
    let q = params.q();
    let pw = |x: &F, e: i64| x.checked_pow(e).expect("nonzero");
    let mut bad: Vec<F> = Vec::new();
    bad.extend(pm(pw(p, 1)));
    bad.extend(pm(pw(p, -1)));
    bad.extend(pm(F::one()));
    bad.extend(pm(pw(q, -2)));
    bad.extend(pm(pw(q, -1)));
    bad.extend(pm(pw(q, -2) * p));
    bad.extend(pm(pw(q, -2) * &pw(p, -1)));
    if bad.contains(u) {
        return Err(Error::ExcludedFamilyParameter(format!("u = {u}")));
    }
    Ok(())
}

/// One row of a classification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub character: &'static str,
    pub pchi: &'static [&'static str],
    /// `(dim, calibrated)` per composition factor, in printed order.
    pub factors: &'static [(usize, bool)],
}

const A_ROW: &[(usize, bool)] = &[(1, true), (3, true), (3, true), (1, true)];
const B_DEGENERATE: &[(usize, bool)] = &[(1, true), (3, false), (3, false), (1, true)];
const C_ROW: &[(usize, bool)] = &[(2, true); 4];
const C_SPLIT: &[(usize, bool)] = &[
    (1, true),
    (1, true),
    (1, true),
    (1, true),
    (2, true),
    (2, true),
];
const NONCAL: &[(usize, bool)] = &[(4, false), (4, false)];
const CAL: &[(usize, bool)] = &[(4, true), (4, true)];

const fn row(
    character: &'static str,
    pchi: &'static [&'static str],
    factors: &'static [(usize, bool)],
) -> ExpectedRow {
    ExpectedRow {
        character,
        pchi,
        factors,
    }
}

/// The printed table for a regime.
pub fn expected_table(regime: BaseRegime) -> Vec<ExpectedRow> {
    match regime {
        BaseRegime::Generic => vec![
            row("chi_a", &["a1", "a2"], A_ROW),
            row("chi_b", &["a1", "a2"], A_ROW),
            row("chi_c", &["a2", "2a1+a2"], C_ROW),
            row("chi_d1", &["a1", "a1+a2"], NONCAL),
            row("chi_d2", &["a1"], NONCAL),
            row("chi_d3", &["a2", "2a1+a2"], NONCAL),
            row("chi_d4", &["a2"], NONCAL),
            row("chi_d5", &["a2"], NONCAL),
            row("chi_f", &["a2"], CAL),
            row("chi_g", &["a1"], CAL),
        ],
        BaseRegime::PEqQ => vec![
            row("chi_a", &["a1", "a2"], A_ROW),
            row("chi_b", &["a1", "a2", "2a1+a2"], B_DEGENERATE),
            row("chi_c", &["a2", "2a1+a2"], C_ROW),
            row("chi_d1", &["a1", "a1+a2"], NONCAL),
            row("chi_d4", &["a2"], NONCAL),
            row("chi_d5", &["a2"], NONCAL),
            row("chi_f", &["a2"], CAL),
            row("chi_g", &["a1"], CAL),
        ],
        BaseRegime::PEqQ2 => vec![
            row("chi_a", &["a1", "a2"], A_ROW),
            row("chi_b", &["a1", "a2", "a1+a2"], B_DEGENERATE),
            row("chi_c", &["a2", "2a1+a2"], C_ROW),
            row("chi_d2", &["a1"], NONCAL),
            row("chi_d3", &["a2", "2a1+a2"], NONCAL),
            row("chi_d5", &["a2"], NONCAL),
            row("chi_f", &["a2"], CAL),
            row("chi_g", &["a1"], CAL),
        ],
        BaseRegime::P2EqNegQ2 => vec![
            row("chi_a", &["a1", "a2"], A_ROW),
            row("chi_c", &["a1", "a2", "2a1+a2"], C_SPLIT),
            row("chi_d1", &["a1", "a1+a2"], NONCAL),
            row("chi_d2", &["a1"], NONCAL),
            row("chi_d3", &["a2", "2a1+a2"], NONCAL),
            row("chi_d4", &["a2"], NONCAL),
            row("chi_d5", &["a2"], NONCAL),
            row("chi_f", &["a2"], CAL),
            row("chi_g", &["a1"], CAL),
        ],
    }
}

/// Character names shown as rows of the table for a regime.
pub fn table_rows(regime: BaseRegime) -> Vec<&'static str> {
    expected_table(regime).iter().map(|r| r.character).collect()
}

/// The negated characters omitted from the earlier equal-parameter list.
pub const RAM_OMITTED_NEGATIONS: [&str; 6] = [
    "-chi_a", "-chi_b", "-chi_d1", "-chi_d4", "-chi_d5", "-chi_f",
];
