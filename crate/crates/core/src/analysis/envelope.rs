//! The matrix algebra a module's generators span, and the linear-algebra
//! tools built on it: Burnside irreducibility, trace vectors and
//! intertwiner spaces.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hecke::Generator;
use crate::linalg::{EchelonBasis, Matrix};
use crate::module::HModule;
use crate::weyl::{Simple, WeylElem};

/// A product of generators, leftmost factor first.
pub type Word = Vec<Generator>;

pub fn word_text(w: &[Generator]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
}

/// A basis of the image of the algebra in `End(M)`, made of word images.
#[derive(Clone)]
pub struct Envelope<F> {
    pub module_dim: usize,
    pub words: Vec<Word>,
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> Envelope<F> {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.module_dim * self.module_dim
    }
}

/// Breadth-first closure of `{1}` under left multiplication by the six
/// generators.
pub fn envelope<F: Field>(m: &HModule<F>) -> Envelope<F> {
    let n = m.dim();
    let gens = m.generators();
    let mut basis = EchelonBasis::new(n * n);
    let mut words = Vec::new();
    let mut matrices = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let id = Matrix::identity(n);
    basis.insert(id.entries().to_vec());
    words.push(Vec::new());
    matrices.push(id);
    queue.push_back(0);
    while let Some(k) = queue.pop_front() {
        if basis.is_full() {
            break;
        }
        for (gi, g) in gens.iter().enumerate() {
            let prod = g.matmul(&matrices[k]).expect("square");
            if basis.insert(prod.entries().to_vec()) {
                let mut w = vec![Generator::ALL[gi]];
                w.extend_from_slice(&words[k]);
                words.push(w);
                matrices.push(prod);
                queue.push_back(matrices.len() - 1);
            }
        }
    }
    Envelope {
        module_dim: n,
        words,
        matrices,
    }
}

/// `(absolutely irreducible, dimension of the spanned matrix algebra)`.
pub fn burnside_irreducible<F: Field>(m: &HModule<F>) -> (bool, usize) {
    let env = envelope(m);
    (env.is_full(), env.dim())
}

/// Words whose images span the algebra's image on a family of modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    pub words: Vec<Word>,
    /// True when the words provably span the full image: by construction
    /// for [`bernstein_words`], by a one-letter-longer check for
    /// [`trace_words`].
    pub closed: bool,
}

/// Word-length bound for trace word sets. The search stops as soon as the
/// span closes; an irreducible 8-dimensional principal series needs words of
/// length 7, everything else closes by length 6.
pub const MAX_WORD_LENGTH: usize = 12;

/// Level-by-level search over words of length `≤ max_len`, keeping a word
/// when its image on `⊕ modules` is independent of the words kept so far.
pub fn trace_words<F: Field>(modules: &[&HModule<F>], max_len: usize) -> WordSet {
    let total: usize = modules.iter().map(|m| m.dim() * m.dim()).sum();
    let mut basis = EchelonBasis::new(total);
    let flatten = |mats: &[Matrix<F>]| -> Vec<F> {
        mats.iter()
            .flat_map(|m| m.entries().iter().cloned())
            .collect()
    };
    let ids: Vec<Matrix<F>> = modules.iter().map(|m| Matrix::identity(m.dim())).collect();
    basis.insert(flatten(&ids));
    let mut words: Vec<Word> = vec![Vec::new()];
    let mut level: Vec<(Word, Vec<Matrix<F>>)> = vec![(Vec::new(), ids)];
    // One level past the bound is generated only to certify closure.
    let mut closed = false;
    for len in 1..=max_len + 1 {
        let mut next = Vec::new();
        for (w, mats) in &level {
            for g in Generator::ALL {
                let prods: Vec<Matrix<F>> = modules
                    .iter()
                    .zip(mats)
                    .map(|(m, x)| m.matrix(g).matmul(x).expect("square"))
                    .collect();
                if basis.insert(flatten(&prods)) {
                    let mut nw = vec![g];
                    nw.extend_from_slice(w);
                    next.push((nw, prods));
                }
            }
        }
        if next.is_empty() {
            closed = true;
            break;
        }
        if len > max_len {
            break;
        }
        words.extend(next.iter().map(|(w, _)| w.clone()));
        level = next;
    }
    WordSet { words, closed }
}

/// Degree of the minimal polynomial of the generator `g` acting on `⊕ modules`.
fn minimal_degree<F: Field>(modules: &[&HModule<F>], g: Generator) -> usize {
    let total: usize = modules.iter().map(|m| m.dim() * m.dim()).sum();
    let mut basis = EchelonBasis::new(total);
    let mut powers: Vec<Matrix<F>> = modules.iter().map(|m| Matrix::identity(m.dim())).collect();
    loop {
        let flat: Vec<F> = powers
            .iter()
            .flat_map(|p| p.entries().iter().cloned())
            .collect();
        if !basis.insert(flat) {
            return basis.len();
        }
        powers = modules
            .iter()
            .zip(&powers)
            .map(|(m, p)| m.matrix(g).matmul(p).expect("square"))
            .collect();
    }
}

/// The words `T_w X₁^a X₂^b` with `a < d₁`, `b < d₂`, where `dᵢ` is the
/// degree of the minimal polynomial of `Xᵢ` on `⊕ modules`. The `T_w X^λ`
/// span the algebra and every `X^λ` acts through a polynomial of those
/// degrees, so these words span the image without any search.
pub fn bernstein_words<F: Field>(modules: &[&HModule<F>]) -> WordSet {
    let d1 = minimal_degree(modules, Generator::X1);
    let d2 = minimal_degree(modules, Generator::X2);
    let mut words = Vec::with_capacity(8 * d1 * d2);
    for w in WeylElem::all() {
        let t: Word = w
            .letters()
            .map(|s| match s {
                Simple::S1 => Generator::T1,
                Simple::S2 => Generator::T2,
            })
            .collect();
        for a in 0..d1 {
            for b in 0..d2 {
                let mut word = t.clone();
                word.extend(std::iter::repeat_n(Generator::X1, a));
                word.extend(std::iter::repeat_n(Generator::X2, b));
                words.push(word);
            }
        }
    }
    WordSet {
        words,
        closed: true,
    }
}

/// Traces of the word images, in word-set order.
pub fn trace_vector<F: Field>(m: &HModule<F>, words: &WordSet) -> Vec<F> {
    let mut cache: HashMap<&[Generator], Matrix<F>> = HashMap::new();
    cache.insert(&[], Matrix::identity(m.dim()));
    let mut out = Vec::with_capacity(words.words.len());
    for w in &words.words {
        let mat = match w.split_first() {
            None => Matrix::identity(m.dim()),
            Some((g, rest)) => {
                let tail = match cache.get(rest) {
                    Some(t) => t.clone(),
                    None => word_matrix(m, rest),
                };
                m.matrix(*g).matmul(&tail).expect("square")
            }
        };
        out.push(mat.trace());
        cache.insert(w, mat);
    }
    out
}

pub fn word_matrix<F: Field>(m: &HModule<F>, w: &[Generator]) -> Matrix<F> {
    w.iter().rev().fold(Matrix::identity(m.dim()), |acc, g| {
        m.matrix(*g).matmul(&acc).expect("square")
    })
}

/// Componentwise sum of trace vectors.
pub fn sum_traces<F: Field>(vectors: &[Vec<F>]) -> Option<Vec<F>> {
    let first = vectors.first()?;
    let mut acc = vec![F::zero(); first.len()];
    for v in vectors {
        for (a, x) in acc.iter_mut().zip(v) {
            *a = a.clone() + x;
        }
    }
    Some(acc)
}

/// Brauer–Nesbitt comparison of `m` against a multiset of modules on the
/// [`bernstein_words`] of all of them.
pub fn same_semisimplification<F: Field>(m: &HModule<F>, others: &[&HModule<F>]) -> Result<bool> {
    let mut all: Vec<&HModule<F>> = vec![m];
    all.extend_from_slice(others);
    let ws = bernstein_words(&all);
    let lhs = trace_vector(m, &ws);
    let parts: Vec<Vec<F>> = others.iter().map(|o| trace_vector(o, &ws)).collect();
    Ok(sum_traces(&parts).is_some_and(|rhs| rhs == lhs))
}

/// All `Φ` with `Φ·g_m = g_n·Φ` for the four generators; each is a
/// `dim(n) × dim(m)` matrix.
pub fn hom_space<F: Field>(m: &HModule<F>, n: &HModule<F>) -> Result<Vec<Matrix<F>>> {
    if m.params() != n.params() {
        return Err(Error::ParameterMismatch);
    }
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let gens = [Generator::T1, Generator::T2, Generator::X1, Generator::X2];
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(4 * unknowns);
    for g in gens {
        let (gm, gn) = (m.matrix(g), n.matrix(g));
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![F::zero(); unknowns];
                // (Φ g_m)_{ij} = Σ_k φ_{ik} gm_{kj}
                for k in 0..dm {
                    let c = gm.get(k, j);
                    if !c.is_zero() {
                        row[i * dm + k] = row[i * dm + k].clone() + c;
                    }
                }
                // (g_n Φ)_{ij} = Σ_k gn_{ik} φ_{kj}
                for k in 0..dn {
                    let c = gn.get(i, k);
                    if !c.is_zero() {
                        row[k * dm + j] = row[k * dm + j].clone() - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows)?;
    system
        .kernel()
        .into_iter()
        .map(|v| Matrix::new(dn, dm, v))
        .collect()
}

/// Some element of the span of `basis` with full rank `target`, trying the
/// basis itself and then a few fixed combinations.
fn element_of_rank<F: Field>(basis: &[Matrix<F>], target: usize) -> Option<Matrix<F>> {
    if let Some(b) = basis.iter().find(|b| b.rank() == target) {
        return Some(b.clone());
    }
    let (first, rest) = basis.split_first()?;
    let schemes: [fn(usize) -> i64; 3] = [
        |_| 1,
        |k| k as i64 + 1,
        |k| [2, 3, 5, 7, 11, 13, 17, 19][k % 8],
    ];
    for coef in schemes {
        let mut acc = first.scale(&F::from_i64(coef(0)));
        for (k, b) in rest.iter().enumerate() {
            acc = acc.matadd(&b.scale(&F::from_i64(coef(k + 1)))).ok()?;
        }
        if acc.rank() == target {
            return Some(acc);
        }
    }
    None
}

/// A surjective intertwiner `m → n`, if one is found.
pub fn find_surjection<F: Field>(m: &HModule<F>, n: &HModule<F>) -> Result<Option<Matrix<F>>> {
    Ok(element_of_rank(&hom_space(m, n)?, n.dim()))
}

/// An injective intertwiner `m → n`, if one is found.
pub fn find_injection<F: Field>(m: &HModule<F>, n: &HModule<F>) -> Result<Option<Matrix<F>>> {
    Ok(element_of_rank(&hom_space(m, n)?, m.dim()))
}
