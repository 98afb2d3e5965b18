//! Composition series by repeated splitting along invariant subspaces.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{span_closure, Basis, Matrix, Vector};
use crate::module::{weight_decomposition, HModule};
use crate::poly::Poly;

use super::envelope::{envelope, Envelope};

/// Sample points for choosing maximal minors in the pencil search.
const PENCIL_SAMPLES: [i64; 6] = [1, 2, 3, 5, 7, 11];

fn spin<F: Field>(v: &Vector<F>, ops: &[&Matrix<F>]) -> Basis<F> {
    span_closure(std::slice::from_ref(v), ops).expect("square operators")
}

fn is_proper<F: Field>(b: &Basis<F>, n: usize) -> bool {
    !b.is_empty() && b.len() < n
}

fn combine<F: Field>(v1: &Vector<F>, v2: &Vector<F>, t: &F) -> Vector<F> {
    v1.iter()
        .zip(v2)
        .map(|(a, b)| a.clone() + &(b.clone() * t))
        .collect()
}

enum Pencil<F> {
    Found(Basis<F>),
    None,
    Undecided(String),
}

/// Looks for `t` with `v₁ + t·v₂` spinning to a proper subspace. The spin of
/// `v(t)` is spanned by the columns `B_k v(t)` over a basis `B_k` of the
/// enveloping algebra, so it is proper exactly where every maximal minor of
/// that `n × K` matrix vanishes. Those minors are polynomials of degree
/// `≤ n` in `t`; the roots of the gcd of a few of them are the candidates.
fn pencil_search<F: Field>(
    env: &[Matrix<F>],
    ops: &[&Matrix<F>],
    v1: &Vector<F>,
    v2: &Vector<F>,
) -> Pencil<F> {
    let n = v1.len();
    let c0: Vec<Vector<F>> = env.iter().map(|b| b.mul_vec(v1)).collect();
    let c1: Vec<Vector<F>> = env.iter().map(|b| b.mul_vec(v2)).collect();
    let columns_at = |t: &F, idx: &[usize]| -> Matrix<F> {
        let cols: Vec<Vector<F>> = idx.iter().map(|&k| combine(&c0[k], &c1[k], t)).collect();
        Matrix::from_columns(n, &cols)
    };
    let all: Vec<usize> = (0..env.len()).collect();
    let mut g: Option<Poly<F>> = None;
    for s in PENCIL_SAMPLES {
        let t0 = F::from_i64(s);
        let (_, pivots) = columns_at(&t0, &all).rref();
        if pivots.len() < n {
            let b = spin(&combine(v1, v2, &t0), ops);
            if is_proper(&b, n) {
                return Pencil::Found(b);
            }
            continue;
        }
        let points: Vec<(F, F)> = (0..=n as i64)
            .map(|t| {
                let t = F::from_i64(t);
                let d = columns_at(&t, &pivots).det().expect("square");
                (t, d)
            })
            .collect();
        let det = Poly::interpolate(&points);
        let next = match g {
            None => det.monic(),
            Some(prev) => prev.gcd(&det),
        };
        if next.degree() == Some(0) {
            return Pencil::None;
        }
        g = Some(next);
    }
    let Some(g) = g else {
        return Pencil::None;
    };
    let Some(roots) = g.roots() else {
        return Pencil::Undecided(format!(
            "cannot solve pencil polynomial of degree {:?}",
            g.degree()
        ));
    };
    for t in roots {
        let b = spin(&combine(v1, v2, &t), ops);
        if is_proper(&b, n) {
            return Pencil::Found(b);
        }
    }
    Pencil::None
}

/// A proper nonzero submodule of `m`, or `None` if the search finds none.
pub fn find_submodule<F: Field>(m: &HModule<F>, env: &Envelope<F>) -> Result<Option<Basis<F>>> {
    let n = m.dim();
    let wd = weight_decomposition(m)?;
    let ops: Vec<&Matrix<F>> = m.generators().to_vec();
    for space in &wd.spaces {
        for v in &space.eig_basis {
            let b = spin(v, &ops);
            if is_proper(&b, n) {
                return Ok(Some(b));
            }
        }
    }
    // Dual side: an invariant subspace W of the transposed action gives the
    // submodule annihilated by W.
    let transposed: Vec<Matrix<F>> = m.generators().iter().map(|g| g.transpose()).collect();
    let tops: Vec<&Matrix<F>> = transposed.iter().collect();
    let dual_eig: Vec<Basis<F>> = wd
        .spaces
        .iter()
        .map(|s| {
            let a = transposed[2].shift(s.weight.x1());
            let b = transposed[3].shift(s.weight.x2());
            a.vstack(&b).expect("same width").kernel()
        })
        .collect();
    let annihilator =
        |w: &Basis<F>| -> Basis<F> { Matrix::from_rows(w.clone()).expect("rectangular").kernel() };
    for basis in &dual_eig {
        for v in basis {
            let w = spin(v, &tops);
            if is_proper(&w, n) {
                return Ok(Some(annihilator(&w)));
            }
        }
    }
    let mut undecided = None;
    for space in wd.spaces.iter().filter(|s| s.eig_dim == 2) {
        match pencil_search(
            &env.matrices,
            &ops,
            &space.eig_basis[0],
            &space.eig_basis[1],
        ) {
            Pencil::Found(b) => return Ok(Some(b)),
            Pencil::None => {}
            Pencil::Undecided(why) => undecided = Some(why),
        }
    }
    let env_t: Vec<Matrix<F>> = env.matrices.iter().map(|b| b.transpose()).collect();
    for basis in dual_eig.iter().filter(|b| b.len() == 2) {
        match pencil_search(&env_t, &tops, &basis[0], &basis[1]) {
            Pencil::Found(w) => return Ok(Some(annihilator(&w))),
            Pencil::None => {}
            Pencil::Undecided(why) => undecided = Some(why),
        }
    }
    match undecided {
        Some(why) => Err(Error::Undecided(format!("{}: {why}", m.label()))),
        None => Ok(None),
    }
}

/// Composition factors from the bottom of the series up; every returned
/// module is absolutely irreducible.
pub fn composition_factors<F: Field>(m: &HModule<F>) -> Result<Vec<HModule<F>>> {
    let env = envelope(m);
    if env.is_full() {
        return Ok(vec![m.clone()]);
    }
    let Some(sub) = find_submodule(m, &env)? else {
        return Err(Error::Undecided(format!(
            "{}: enveloping algebra has dimension {} < {} but no submodule was found",
            m.label(),
            env.dim(),
            m.dim() * m.dim()
        )));
    };
    let (s, q) = m.split(&sub)?;
    let mut out = composition_factors(&s)?;
    out.extend(composition_factors(&q)?);
    Ok(out)
}
