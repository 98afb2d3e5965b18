use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hecke::Parameters;

/// The four parameter regimes with their own tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BaseRegime {
    Generic,
    PEqQ,
    PEqQ2,
    P2EqNegQ2,
}

/// Parameter substitutions that leave the algebra's representation theory
/// unchanged up to a known transport of modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Transport {
    /// `p ↦ -p` together with `T₂ ↦ -T₂`.
    Twist,
    /// `p ↦ -p⁻¹`: the quadratic relation for `T₂` is literally unchanged.
    Relabel,
    /// `p ↦ p⁻¹`: the composite of the two.
    TwistRelabel,
}

impl Transport {
    /// Image of the base `p` under the substitution.
    pub fn map_p<F: Field>(self, p: &F) -> F {
        let inv = p.checked_inv().expect("nonzero");
        match self {
            Transport::Twist => -p.clone(),
            Transport::Relabel => -inv,
            Transport::TwistRelabel => inv,
        }
    }

    /// Inverse substitution (each one is an involution).
    pub fn unmap_p<F: Field>(self, p: &F) -> F {
        self.map_p(p)
    }

    pub fn twists(self) -> bool {
        matches!(self, Transport::Twist | Transport::TwistRelabel)
    }
}

/// A regime: either one of the base four or a transported copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RegimeKind {
    Base(BaseRegime),
    Transformed(BaseRegime, Transport),
}

impl RegimeKind {
    pub const ALL: [RegimeKind; 11] = [
        RegimeKind::Base(BaseRegime::Generic),
        RegimeKind::Base(BaseRegime::PEqQ),
        RegimeKind::Base(BaseRegime::PEqQ2),
        RegimeKind::Base(BaseRegime::P2EqNegQ2),
        RegimeKind::Transformed(BaseRegime::PEqQ2, Transport::Twist),
        RegimeKind::Transformed(BaseRegime::PEqQ2, Transport::TwistRelabel),
        RegimeKind::Transformed(BaseRegime::PEqQ2, Transport::Relabel),
        RegimeKind::Transformed(BaseRegime::PEqQ, Transport::Twist),
        RegimeKind::Transformed(BaseRegime::PEqQ, Transport::TwistRelabel),
        RegimeKind::Transformed(BaseRegime::PEqQ, Transport::Relabel),
        RegimeKind::Transformed(BaseRegime::P2EqNegQ2, Transport::TwistRelabel),
    ];

    pub fn name(self) -> &'static str {
        use BaseRegime::*;
        use Transport::*;
        match self {
            RegimeKind::Base(Generic) => "generic",
            RegimeKind::Base(PEqQ) => "p-eq-q",
            RegimeKind::Base(PEqQ2) => "p-eq-q2",
            RegimeKind::Base(P2EqNegQ2) => "p2-eq-neg-q2",
            RegimeKind::Transformed(PEqQ2, Twist) => "p-eq-neg-q2",
            RegimeKind::Transformed(PEqQ2, TwistRelabel) => "p-eq-qinv2",
            RegimeKind::Transformed(PEqQ2, Relabel) => "p-eq-neg-qinv2",
            RegimeKind::Transformed(PEqQ, Twist) => "p-eq-neg-q",
            RegimeKind::Transformed(PEqQ, TwistRelabel) => "p-eq-qinv",
            RegimeKind::Transformed(PEqQ, Relabel) => "p-eq-neg-qinv",
            RegimeKind::Transformed(P2EqNegQ2, TwistRelabel) => "p2-eq-neg-qinv2",
            RegimeKind::Transformed(..) => "transformed",
        }
    }

    /// Human-readable relation.
    pub fn relation(self) -> &'static str {
        match self.name() {
            "generic" => "generic",
            "p-eq-q" => "p = q",
            "p-eq-q2" => "p = q^2",
            "p2-eq-neg-q2" => "p^2 = -q^2",
            "p-eq-neg-q2" => "p = -q^2",
            "p-eq-qinv2" => "p = q^-2",
            "p-eq-neg-qinv2" => "p = -q^-2",
            "p-eq-neg-q" => "p = -q",
            "p-eq-qinv" => "p = q^-1",
            "p-eq-neg-qinv" => "p = -q^-1",
            "p2-eq-neg-qinv2" => "p^2 = -q^-2",
            _ => "transformed",
        }
    }

    pub fn base(self) -> BaseRegime {
        match self {
            RegimeKind::Base(b) | RegimeKind::Transformed(b, _) => b,
        }
    }

    pub fn transport(self) -> Option<Transport> {
        match self {
            RegimeKind::Base(_) => None,
            RegimeKind::Transformed(_, t) => Some(t),
        }
    }

    /// `(a, b, s)` with `p^a q^b = s` the defining relation.
    pub fn defining_relation(self) -> Option<(i64, i64, i64)> {
        let base = match self.base() {
            BaseRegime::Generic => return None,
            BaseRegime::PEqQ => (1, -1, 1),
            BaseRegime::PEqQ2 => (1, -2, 1),
            BaseRegime::P2EqNegQ2 => (2, -2, -1),
        };
        let (a, b, s) = base;
        Some(match self.transport() {
            None => base,
            // p' = -p: p'^a = (-1)^a p^a
            Some(Transport::Twist) => (a, b, s * if a % 2 == 0 { 1 } else { -1 }),
            // p' = -p⁻¹
            Some(Transport::Relabel) => (a, -b, s * if a % 2 == 0 { 1 } else { -1 }),
            // p' = p⁻¹
            Some(Transport::TwistRelabel) => (a, -b, s),
        })
    }

    /// Default specialization: the base defaults, transported.
    pub fn default_params<F: Field>(self) -> Parameters<F> {
        let q = F::from_i64(3);
        let p = match self.base() {
            BaseRegime::Generic => F::from_i64(5),
            BaseRegime::PEqQ => F::from_i64(3),
            BaseRegime::PEqQ2 => F::from_i64(9),
            BaseRegime::P2EqNegQ2 => F::from_i64(3) * &imaginary_unit::<F>(),
        };
        let p = match self.transport() {
            None => p,
            Some(t) => t.map_p(&p),
        };
        Parameters::new(p, q).expect("defaults are admissible")
    }
}

fn imaginary_unit<F: Field>() -> F {
    F::from_i64(-1)
        .sqrt_exact()
        .expect("regime p^2 = -q^2 needs a field containing i")
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegimeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RegimeKind::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown regime {s:?}")))
    }
}

/// A relation `p^a q^b = sign` found at a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub a: i64,
    pub b: i64,
    pub sign: i64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p^{} q^{} = {}", self.a, self.b, self.sign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regime {
    pub kind: RegimeKind,
    pub violations: Vec<String>,
}

impl Regime {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Largest exponent magnitude scanned by [`validate_regime`].
pub const EXPONENT_BOUND: i64 = 4;

/// All relations `p^a q^b = ±1` with `|a|, |b| ≤ 4`, one per `±(a, b)` pair.
pub fn multiplicative_relations<F: Field>(params: &Parameters<F>) -> Vec<Relation> {
    let one = F::one();
    let minus = -F::one();
    let mut out = Vec::new();
    for a in 0..=EXPONENT_BOUND {
        for b in -EXPONENT_BOUND..=EXPONENT_BOUND {
            if a == 0 && b <= 0 {
                continue;
            }
            let v = params.p().checked_pow(a).expect("nonzero")
                * &params.q().checked_pow(b).expect("nonzero");
            if v == one {
                out.push(Relation { a, b, sign: 1 });
            } else if v == minus {
                out.push(Relation { a, b, sign: -1 });
            }
        }
    }
    out
}

/// Accepts iff the relations holding at `params` are exactly the
/// consequences of the intended one (none, for generic), and neither
/// parameter is a root of unity.
pub fn validate_regime<F: Field>(params: &Parameters<F>, kind: RegimeKind) -> Regime {
    let mut violations = Vec::new();
    for (name, v) in [("p", params.p()), ("q", params.q())] {
        if v.is_root_of_unity() {
            violations.push(format!("{name} = {v} is a root of unity"));
        }
    }
    let found = multiplicative_relations(params);
    let intended = kind.defining_relation();
    for r in &found {
        let consequence = intended.is_some_and(|(a0, b0, s0)| {
            // (a, b) = k (a0, b0) with sign s0^k
            a0 != 0 && r.a % a0 == 0 && {
                let k = r.a / a0;
                k != 0 && r.b == k * b0 && r.sign == if k % 2 == 0 { 1 } else { s0 }
            }
        });
        if !consequence {
            violations.push(format!("unexpected relation {r}"));
        }
    }
    if let Some((a, b, sign)) = intended {
        if !found.contains(&Relation { a, b, sign }) {
            violations.push(format!(
                "intended relation {} does not hold at {params}",
                kind.relation()
            ));
        }
    }
    Regime { kind, violations }
}
