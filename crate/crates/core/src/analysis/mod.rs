//! Decision procedures on modules.

mod envelope;
mod factors;
mod identify;
mod kato;
mod regime;

pub use envelope::{
    bernstein_words, burnside_irreducible, envelope, find_injection, find_surjection, hom_space,
    same_semisimplification, sum_traces, trace_vector, trace_words, word_matrix, word_text,
    Envelope, Word, WordSet, MAX_WORD_LENGTH,
};
pub use factors::{composition_factors, find_submodule};
pub use identify::{identify_factor, UNLISTED};
pub use kato::{kato, KatoResult};
pub use regime::{
    multiplicative_relations, validate_regime, BaseRegime, Regime, RegimeKind, Relation, Transport,
    EXPONENT_BOUND,
};
