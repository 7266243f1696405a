//! Finitely presented groups: words, presentations, abelianization, bounded
//! derivation search, and quotient-map consistency.

pub mod presentation;
pub mod quotient;
pub mod search;
pub mod snf;
pub mod word;

pub use presentation::{
    coxeter_2pq2, coxeter_g5_with_definition, coxeter_gmpq, even_alphabeta_presentation,
    even_factor_presentation, even_gprime_presentation, four_gen_minus_presentation,
    four_gen_plus_augmented, four_gen_plus_presentation, longitude_word, pretzel_presentation,
    surgered_presentation, two_gen_minus_presentation, Presentation, PresentationError,
};
pub use quotient::{
    load_preset, quotient_consistency, remark_redundancy, run_preset, ConsistencyReport,
    QuotientError, RelatorStatus, WordBudget,
};
pub use search::{
    derivation_search, replay, replay_reaches_identity, CertStep, DerivationCertificate,
    SearchResult, DEFAULT_MAX_LEN, DEFAULT_MAX_STEPS,
};
pub use snf::{abelianization, in_row_lattice, smith_diagonal, AbelianGroup};
pub use word::Word;
