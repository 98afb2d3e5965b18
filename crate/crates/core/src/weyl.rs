//! The Weyl group W(B₂) and its action on the coweight lattice ℤε₁ ⊕ ℤε₂.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple reflection index, 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Simple {
    S1,
    S2,
}

impl Simple {
    pub const ALL: [Simple; 2] = [Simple::S1, Simple::S2];

    pub fn index(self) -> u8 {
        match self {
            Simple::S1 => 1,
            Simple::S2 => 2,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Simple::S1),
            2 => Ok(Simple::S2),
            _ => Err(Error::Parse(format!(
                "simple index must be 1 or 2, got {i}"
            ))),
        }
    }

    pub fn elem(self) -> WeylElem {
        match self {
            Simple::S1 => WeylElem::S1,
            Simple::S2 => WeylElem::S2,
        }
    }

    /// `k` with `λ - sᵢλ = k·αᵢ∨`.
    pub fn pairing(self, lambda: WeightVector) -> i64 {
        match self {
            Simple::S1 => lambda.a - lambda.b,
            Simple::S2 => lambda.b,
        }
    }

    /// The simple coroot αᵢ∨.
    pub fn coroot(self) -> WeightVector {
        match self {
            Simple::S1 => WeightVector::new(1, -1),
            Simple::S2 => WeightVector::new(0, 2),
        }
    }

    pub fn reflect(self, lambda: WeightVector) -> WeightVector {
        match self {
            Simple::S1 => WeightVector::new(lambda.b, lambda.a),
            Simple::S2 => WeightVector::new(lambda.a, -lambda.b),
        }
    }
}

/// `λ = a·ε₁ + b·ε₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub a: i64,
    pub b: i64,
}

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector { a: 0, b: 0 };
    pub const E1: WeightVector = WeightVector { a: 1, b: 0 };
    pub const E2: WeightVector = WeightVector { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        WeightVector { a, b }
    }

    pub fn scaled(self, k: i64) -> Self {
        WeightVector::new(self.a * k, self.b * k)
    }
}

impl std::ops::Add for WeightVector {
    type Output = WeightVector;
    fn add(self, o: WeightVector) -> WeightVector {
        WeightVector::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, o: WeightVector) -> WeightVector {
        WeightVector::new(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector::new(-self.a, -self.b)
    }
}

/// Which Hecke parameter a coroot carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParamKind {
    Q,
    P,
}

/// The four positive coroots of B₂, named by their expansion in the simple
/// coroots α₁∨ = ε₁-ε₂ and α₂∨ = 2ε₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PositiveCoroot {
    /// ε₁ - ε₂
    Alpha1,
    /// 2ε₂
    Alpha2,
    /// ε₁ + ε₂
    Alpha1PlusAlpha2,
    /// 2ε₁
    TwoAlpha1PlusAlpha2,
}

impl PositiveCoroot {
    pub const ALL: [PositiveCoroot; 4] = [
        PositiveCoroot::Alpha1,
        PositiveCoroot::Alpha2,
        PositiveCoroot::Alpha1PlusAlpha2,
        PositiveCoroot::TwoAlpha1PlusAlpha2,
    ];

    pub fn vector(self) -> WeightVector {
        match self {
            PositiveCoroot::Alpha1 => WeightVector::new(1, -1),
            PositiveCoroot::Alpha2 => WeightVector::new(0, 2),
            PositiveCoroot::Alpha1PlusAlpha2 => WeightVector::new(1, 1),
            PositiveCoroot::TwoAlpha1PlusAlpha2 => WeightVector::new(2, 0),
        }
    }

    /// q for the orbit of ε₁-ε₂, p for the orbit of 2ε₂.
    pub fn param(self) -> ParamKind {
        match self {
            PositiveCoroot::Alpha1 | PositiveCoroot::Alpha1PlusAlpha2 => ParamKind::Q,
            PositiveCoroot::Alpha2 | PositiveCoroot::TwoAlpha1PlusAlpha2 => ParamKind::P,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PositiveCoroot::Alpha1 => "a1",
            PositiveCoroot::Alpha2 => "a2",
            PositiveCoroot::Alpha1PlusAlpha2 => "a1+a2",
            PositiveCoroot::TwoAlpha1PlusAlpha2 => "2a1+a2",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown coroot {s:?}")))
    }

    /// Whether `λ` is a positive coroot, a negative one, or neither.
    pub fn classify(lambda: WeightVector) -> Option<(PositiveCoroot, bool)> {
        Self::ALL.into_iter().find_map(|c| {
            if c.vector() == lambda {
                Some((c, true))
            } else if -c.vector() == lambda {
                Some((c, false))
            } else {
                None
            }
        })
    }
}

/// An element of W(B₂), stored by index into the fixed length-lexicographic
/// list of canonical reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElem(u8);

const WORDS: [&[u8]; 8] = [
    &[],
    &[1],
    &[2],
    &[1, 2],
    &[2, 1],
    &[1, 2, 1],
    &[2, 1, 2],
    &[1, 2, 1, 2],
];

type IntMat = [[i64; 2]; 2];

fn simple_matrix(i: u8) -> IntMat {
    match i {
        1 => [[0, 1], [1, 0]],
        _ => [[1, 0], [0, -1]],
    }
}

fn int_matmul(x: IntMat, y: IntMat) -> IntMat {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn word_matrix(word: &[u8]) -> IntMat {
    word.iter().fold([[1, 0], [0, 1]], |acc, &i| {
        int_matmul(acc, simple_matrix(i))
    })
}

struct Tables {
    matrices: [IntMat; 8],
    mul: [[u8; 8]; 8],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let matrices: [IntMat; 8] = std::array::from_fn(|k| word_matrix(WORDS[k]));
        let mut mul = [[0u8; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let prod = int_matmul(matrices[x], matrices[y]);
                mul[x][y] = matrices
                    .iter()
                    .position(|m| *m == prod)
                    .expect("the action of W(B2) is faithful") as u8;
            }
        }
        Tables { matrices, mul }
    })
}

impl WeylElem {
    pub const E: WeylElem = WeylElem(0);
    pub const S1: WeylElem = WeylElem(1);
    pub const S2: WeylElem = WeylElem(2);
    pub const LONGEST: WeylElem = WeylElem(7);

    /// All eight elements in basis order: e, 1, 2, 12, 21, 121, 212, 1212.
    pub fn all() -> impl Iterator<Item = WeylElem> {
        (0..8).map(WeylElem)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(k: usize) -> Option<Self> {
        (k < 8).then_some(WeylElem(k as u8))
    }

    pub fn word(self) -> &'static [u8] {
        WORDS[self.0 as usize]
    }

    pub fn letters(self) -> impl Iterator<Item = Simple> {
        self.word()
            .iter()
            .map(|&i| Simple::from_index(i).expect("canonical words use 1 and 2"))
    }

    pub fn length(self) -> usize {
        self.word().len()
    }

    pub fn multiply(self, other: WeylElem) -> WeylElem {
        WeylElem(tables().mul[self.index()][other.index()])
    }

    pub fn inverse(self) -> WeylElem {
        WeylElem::all()
            .find(|w| self.multiply(*w) == WeylElem::E)
            .expect("group")
    }

    /// Evaluates an arbitrary (not necessarily reduced) word.
    pub fn from_word(word: &[u8]) -> Result<Self> {
        word.iter().try_fold(WeylElem::E, |acc, &i| {
            Ok(acc.multiply(Simple::from_index(i)?.elem()))
        })
    }

    pub fn act(self, lambda: WeightVector) -> WeightVector {
        let m = tables().matrices[self.index()];
        WeightVector::new(
            m[0][0] * lambda.a + m[0][1] * lambda.b,
            m[1][0] * lambda.a + m[1][1] * lambda.b,
        )
    }

    /// True iff `ℓ(w·sᵢ) > ℓ(w)`.
    pub fn right_ascent(self, i: Simple) -> bool {
        self.multiply(i.elem()).length() > self.length()
    }

    /// True iff `ℓ(sᵢ·w) > ℓ(w)`.
    pub fn left_ascent(self, i: Simple) -> bool {
        i.elem().multiply(self).length() > self.length()
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("e");
        }
        for i in self.word() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for WeylElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "e" {
            return Ok(WeylElem::E);
        }
        let word = s
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::Parse(format!("bad Weyl word {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        WeylElem::from_word(&word)
    }
}

/// Minimal-length representatives of `W/⟨sᵢ⟩`, in basis order.
pub fn min_coset_reps(i: Simple) -> Vec<WeylElem> {
    WeylElem::all().filter(|w| w.right_ascent(i)).collect()
}

/// Splits `w = rep·rem` with `rep` a minimal coset representative for
/// `⟨sᵢ⟩` and `rem ∈ {e, sᵢ}`; lengths add.
pub fn split_coset(w: WeylElem, i: Simple) -> (WeylElem, WeylElem) {
    if w.right_ascent(i) {
        (w, WeylElem::E)
    } else {
        (w.multiply(i.elem()), i.elem())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeylElem {
        s.parse().unwrap()
    }

    #[test]
    fn order_and_braid() {
        assert_eq!(WeylElem::all().count(), 8);
        assert_eq!(w("1212"), w("2121"));
        assert_eq!(w("1212").length(), 4);
        for x in WeylElem::all() {
            assert_eq!(x.to_string().parse::<WeylElem>().unwrap(), x);
        }
    }

    #[test]
    fn simple_actions() {
        assert_eq!(
            WeylElem::S1.act(WeightVector::new(1, 0)),
            WeightVector::new(0, 1)
        );
        assert_eq!(
            WeylElem::S2.act(WeightVector::new(0, 1)),
            WeightVector::new(0, -1)
        );
        assert_eq!(
            w("1212").act(WeightVector::new(3, -7)),
            WeightVector::new(-3, 7)
        );
    }

    #[test]
    fn products() {
        assert_eq!(WeylElem::S1.multiply(WeylElem::S1), WeylElem::E);
        let s12 = WeylElem::S1.multiply(WeylElem::S2);
        assert_eq!(s12, w("12"));
        assert_eq!(s12.length(), 2);
        assert_eq!(w("121").multiply(WeylElem::S1), w("12"));
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(
            min_coset_reps(Simple::S1),
            vec![w("e"), w("2"), w("12"), w("212")]
        );
        assert_eq!(
            min_coset_reps(Simple::S2),
            vec![w("e"), w("1"), w("21"), w("121")]
        );
        assert_eq!(split_coset(w("1212"), Simple::S1), (w("212"), WeylElem::S1));
        assert_eq!(
            split_coset(WeylElem::S2, Simple::S2),
            (WeylElem::E, WeylElem::S2)
        );
        assert_eq!(
            split_coset(WeylElem::E, Simple::S1),
            (WeylElem::E, WeylElem::E)
        );
    }

    #[test]
    fn coset_factorization_is_unique_and_length_additive() {
        for i in Simple::ALL {
            let reps = min_coset_reps(i);
            for x in WeylElem::all() {
                let found: Vec<_> = reps
                    .iter()
                    .flat_map(|&r| [WeylElem::E, i.elem()].map(|u| (r, u)))
                    .filter(|(r, u)| r.multiply(*u) == x && r.length() + u.length() == x.length())
                    .collect();
                assert_eq!(found.len(), 1, "{x} over s{}", i.index());
                assert_eq!(found[0], split_coset(x, i));
            }
        }
    }

    #[test]
    fn action_is_a_group_action() {
        for x in WeylElem::all() {
            for y in WeylElem::all() {
                for a in -2..=2 {
                    for b in -2..=2 {
                        let l = WeightVector::new(a, b);
                        assert_eq!(x.multiply(y).act(l), x.act(y.act(l)));
                    }
                }
            }
        }
    }

    #[test]
    fn length_additivity_matches_reduced_concatenation() {
        // ℓ(xy) = ℓ(x)+ℓ(y) iff concatenating the canonical words gives a
        // word of the product's length (no cancellation), checked over all 64 pairs.
        for x in WeylElem::all() {
            for y in WeylElem::all() {
                let xy = x.multiply(y);
                let additive = xy.length() == x.length() + y.length();
                let mut word = x.word().to_vec();
                word.extend_from_slice(y.word());
                assert_eq!(WeylElem::from_word(&word).unwrap(), xy);
                assert_eq!(additive, word.len() == xy.length());
            }
        }
    }

    #[test]
    fn simple_reflections_make_exactly_one_positive_coroot_negative() {
        for i in Simple::ALL {
            let flipped = PositiveCoroot::ALL
                .iter()
                .filter(|c| {
                    let (_, positive) = PositiveCoroot::classify(i.elem().act(c.vector())).unwrap();
                    !positive
                })
                .count();
            assert_eq!(flipped, 1);
        }
        // s₁ fixes ε₁+ε₂ and swaps 2ε₁, 2ε₂.
        assert_eq!(
            WeylElem::S1.act(WeightVector::new(1, 1)),
            WeightVector::new(1, 1)
        );
        assert_eq!(
            WeylElem::S1.act(WeightVector::new(2, 0)),
            WeightVector::new(0, 2)
        );
    }

    #[test]
    fn pairing_matches_reflection() {
        for i in Simple::ALL {
            for a in -3..=3 {
                for b in -3..=3 {
                    let l = WeightVector::new(a, b);
                    assert_eq!(l - i.reflect(l), i.coroot().scaled(i.pairing(l)));
                    assert_eq!(i.reflect(l), i.elem().act(l));
                }
            }
        }
    }
}
