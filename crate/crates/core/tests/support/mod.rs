//! Independent oracles shared by the property and acceptance suites.
#![allow(dead_code)]

use hecke_b2::hecke::HeckeElement;
use hecke_b2::linalg::Matrix;
use hecke_b2::module::{principal_series, twist_t2, OneDimRep};
use hecke_b2::weyl::{Simple, WeightVector, WeylElem};
use hecke_b2::{Field, QCharacter, QHeckeElement, QMatrix, QModule, QParameters, Q};
use num_traits::{One, Zero};
use rand::Rng;

pub fn gaussian(rn: i64, rd: i64, in_: i64, id: i64) -> Q {
    Q::from_parts(rn, rd, in_, id)
}

/// A small nonzero Gaussian rational.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Q {
    loop {
        let z = gaussian(
            rng.gen_range(-9..=9),
            rng.gen_range(1..=5),
            rng.gen_range(-4..=4),
            rng.gen_range(1..=3),
        );
        if !z.is_zero() {
            return z;
        }
    }
}

pub fn random_monomial<R: Rng>(rng: &mut R, ps: &QParameters) -> QHeckeElement {
    let w = WeylElem::from_index(rng.gen_range(0..8)).expect("index < 8");
    let l = WeightVector::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    HeckeElement::monomial(ps, Q::from_int(rng.gen_range(1..=4)), w, l)
}

pub fn associative(a: &QHeckeElement, b: &QHeckeElement, c: &QHeckeElement) -> bool {
    let left = a.mul(b).and_then(|ab| ab.mul(c));
    let right = b.mul(c).and_then(|bc| a.mul(&bc));
    matches!((left, right), (Ok(l), Ok(r)) if l.sub(&r).is_ok_and(|d| d.is_zero()))
}

/// Field axioms on one triple, over any exact field.
pub fn field_axioms<F: Field>(a: &F, b: &F, c: &F) -> bool {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let ring = a.clone() + &b == b.clone() + &a
        && a.clone() * &b == b.clone() * &a
        && (a.clone() + &b) + &c == a.clone() + &(b.clone() + &c)
        && (a.clone() * &b) * &c == a.clone() * &(b.clone() * &c)
        && a.clone() * &(b.clone() + &c) == a.clone() * &b + &(a.clone() * &c)
        && a.clone() + &F::zero() == a
        && a.clone() * &F::one() == a
        && (a.clone() + &(-a.clone())).is_zero()
        && a.clone() - &b == a.clone() + &(-b.clone());
    let inverse = match a.checked_inv() {
        Some(inv) => !a.is_zero() && (a.clone() * &inv).is_one(),
        None => a.is_zero(),
    };
    ring && inverse
}

/// Left multiplication by `Tᵢ` on the basis `T_w` of the finite Hecke
/// algebra, straight from the length rule and the quadratic relation.
pub fn regular_left_mult(ps: &QParameters, i: Simple) -> QMatrix {
    let mut m = Matrix::zeros(8, 8);
    for w in WeylElem::all() {
        let sw = i.elem().multiply(w);
        if sw.length() > w.length() {
            m.set(sw.index(), w.index(), Q::one());
        } else {
            m.set(sw.index(), w.index(), Q::one());
            m.set(w.index(), w.index(), ps.gap(i));
        }
    }
    m
}

pub fn restricts_to_regular(chi: &QCharacter) -> bool {
    let m = principal_series(chi).expect("principal series");
    let ps = chi.params();
    *m.t1() == regular_left_mult(ps, Simple::S1) && *m.t2() == regular_left_mult(ps, Simple::S2)
}

pub fn x_commute(m: &QModule) -> bool {
    let ab = m.x1().matmul(m.x2()).expect("square");
    let ba = m.x2().matmul(m.x1()).expect("square");
    ab == ba
}

/// `twist_t2` lands on valid relations at `-p` and squares to the identity.
pub fn twist_round_trip(m: &QModule) -> bool {
    let Ok(t) = twist_t2(m) else { return false };
    let Ok(back) = twist_t2(&t) else { return false };
    t.relation_report().passed()
        && t.params().p() == &-m.params().p().clone()
        && back.params() == m.params()
        && back.generators() == m.generators()
}

/// `{wχ : w ∈ W}` with multiplicities, in the same order as
/// `WeightDecomposition::multiset`.
pub fn orbit_multiset(chi: &QCharacter) -> Vec<((Q, Q), usize)> {
    let mut out: Vec<((Q, Q), usize)> = Vec::new();
    for w in WeylElem::all() {
        let v = chi.act(w).values();
        match out.iter_mut().find(|(x, _)| *x == v) {
            Some((_, k)) => *k += 1,
            None => out.push((v, 1)),
        }
    }
    out.sort_by_key(|((a, b), _)| (a.to_string(), b.to_string()));
    out
}

/// The two one-dimensional reps of the decomposition lemma when
/// `χ(X^{αᵢ∨}) = qᵢ²`: `χ` with `Tᵢ = qᵢ`, and `sᵢχ` with `Tᵢ = -qᵢ⁻¹`.
pub fn lemma_reps(chi: &QCharacter, i: Simple) -> (OneDimRep<Q>, OneDimRep<Q>) {
    let ps = chi.params();
    let qi = ps.of(i).clone();
    let (a, b) = chi.values();
    let rho1 = OneDimRep::new(i, a, b, qi.clone(), ps).expect("ρ₁ compatible");
    let (c, d) = chi.act(i.elem()).values();
    let rho2 = OneDimRep::new(i, c, d, -qi.inv().expect("nonzero"), ps).expect("ρ₂ compatible");
    (rho1, rho2)
}

/// A random invertible matrix as a product of unit triangular factors and
/// a nonzero diagonal.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let mut lower = QMatrix::identity(n);
    let mut upper = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, Q::from_int(rng.gen_range(-2..=2)));
            upper.set(j, i, Q::from_int(rng.gen_range(-2..=2)));
        }
        upper.set(i, i, Q::from_int(rng.gen_range(1..=3)));
    }
    lower.matmul(&upper).expect("square")
}
