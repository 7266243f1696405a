//! Quotient-map consistency checks and the bundled substitution scripts.
//!
//! A substitution script names a source presentation, a target
//! presentation, and an image word for every source generator. The check
//! runs in two tiers:
//!
//! 1. abelianization level (always decidable): the exponent vector of every
//!    source relator's image must lie in the row lattice of the target's
//!    relation matrix;
//! 2. word level: a bounded derivation search per relator image, reporting
//!    proved or budget-exhausted.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

use super::presentation::{
    coxeter_2pq2, coxeter_gmpq, even_alphabeta_presentation, even_factor_presentation,
    even_gprime_presentation, four_gen_minus_presentation, four_gen_plus_augmented,
    two_gen_minus_presentation, surgered_presentation, Presentation, PresentationError,
};
use super::search::{derivation_search, SearchResult};
use super::snf::in_row_lattice;
use super::word::Word;
use crate::slope::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("no image supplied for source generator {0:?}")]
    MissingImage(String),
    #[error("image of {gen:?} uses unknown target generator {name:?}")]
    UnknownTargetGenerator { gen: String, name: String },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("unknown presentation id {0:?}")]
    UnknownPresentation(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("script data is malformed: {0}")]
    Format(String),
}

/// Word-level proof status for one relator image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorStatus {
    Proved,
    BudgetExhausted,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelatorReport {
    pub relator: usize,
    pub image_length: usize,
    pub abelian_ok: bool,
    pub word_level: RelatorStatus,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub source_generators: Vec<String>,
    pub target_generators: Vec<String>,
    pub relators: Vec<RelatorReport>,
}

impl ConsistencyReport {
    pub fn abelian_tier_passes(&self) -> bool {
        self.relators.iter().all(|r| r.abelian_ok)
    }
}

/// Budgets for the word-level tier.
#[derive(Debug, Clone, Copy)]
pub struct WordBudget {
    pub max_len: usize,
    pub max_steps: usize,
}

impl Default for WordBudget {
    fn default() -> Self {
        // image words can be long, so allow head-room above the plain
        // search default
        WordBudget { max_len: 48, max_steps: 60_000 }
    }
}

/// Check that mapping each source generator to its image word sends every
/// source relator to a trivial element of the target.
pub fn quotient_consistency(
    source: &Presentation,
    target: &Presentation,
    images: &HashMap<String, Word>,
    budget: WordBudget,
) -> Result<ConsistencyReport, QuotientError> {
    let image_vec: Vec<Word> = source
        .generators
        .iter()
        .map(|g| images.get(g).cloned().ok_or_else(|| QuotientError::MissingImage(g.clone())))
        .collect::<Result<_, _>>()?;

    let target_matrix = target.relation_matrix();
    let mut relators = Vec::new();
    for (idx, relator) in source.relators.iter().enumerate() {
        let image = relator.substitute(&image_vec);
        let sums = image.exponent_sums(target.generators.len());
        let abelian_ok = in_row_lattice(&target_matrix, &sums);
        let word_level = if !abelian_ok {
            // image is provably nontrivial; no point searching
            RelatorStatus::BudgetExhausted
        } else if image.len() > budget.max_len {
            RelatorStatus::BudgetExhausted
        } else {
            match derivation_search(target, &image, budget.max_len, budget.max_steps) {
                SearchResult::Found(_) => RelatorStatus::Proved,
                SearchResult::NotFound { .. } => RelatorStatus::BudgetExhausted,
            }
        };
        relators.push(RelatorReport {
            relator: idx,
            image_length: image.len(),
            abelian_ok,
            word_level,
        });
    }
    Ok(ConsistencyReport {
        source_generators: source.generators.clone(),
        target_generators: target.generators.clone(),
        relators,
    })
}

/// Is 2(p+q)−k surgery covered by the factor-group argument? True exactly
/// when k ≡ 1 (mod 5); the induced extra relator C^{k−1} is then a power of
/// the C⁵ relator.
pub fn remark_redundancy(k: i64) -> bool {
    k.rem_euclid(5) == 1
}

// --- bundled substitution scripts -----------------------------------------

#[derive(Debug, Deserialize)]
struct ScriptFile {
    #[allow(dead_code)]
    schema: u32,
    presets: HashMap<String, PresetEntry>,
}

#[derive(Debug, Deserialize)]
struct PresetEntry {
    description: String,
    stages: Vec<StageEntry>,
}

#[derive(Debug, Deserialize)]
struct StageEntry {
    source: String,
    target: String,
    /// generator -> list of [name, [cp, cq, cc, den]] letters, where the
    /// letter's exponent is (cp·p + cq·q + cc)/den
    images: HashMap<String, Vec<(String, [i64; 4])>>,
}

/// One resolved stage of a quotient chain.
pub struct Stage {
    pub source_id: String,
    pub target_id: String,
    pub source: Presentation,
    pub target: Presentation,
    pub images: HashMap<String, Word>,
}

pub struct QuotientChain {
    pub preset: String,
    pub description: String,
    pub stages: Vec<Stage>,
}

fn presentation_by_id(id: &str, p: i64, q: i64) -> Result<Presentation, QuotientError> {
    Ok(match id {
        "even-factor" => even_factor_presentation(p, q)?,
        "even-gprime" => even_gprime_presentation(p, q)?,
        "even-alphabeta" => even_alphabeta_presentation(p, q)?,
        "coxeter-2pq2" => coxeter_2pq2(p, q)?,
        "surgered-minus-one" => surgered_presentation(p, q, Slope::integer(2 * (p + q) - 1))?,
        "four-gen-minus" => four_gen_minus_presentation(p, q)?,
        "two-gen-minus" => two_gen_minus_presentation(p, q)?,
        "coxeter-g5" => coxeter_gmpq(5, p, q)?,
        "four-gen-plus-augmented" => four_gen_plus_augmented(p, q)?,
        "coxeter-g3" => coxeter_gmpq(3, p, q)?,
        other => return Err(QuotientError::UnknownPresentation(other.to_string())),
    })
}

fn resolve_exponent(spec: [i64; 4], p: i64, q: i64) -> Result<i64, QuotientError> {
    let [cp, cq, cc, den] = spec;
    if den == 0 {
        return Err(QuotientError::Format("zero denominator in exponent spec".into()));
    }
    let raw = cp * p + cq * q + cc;
    if raw % den != 0 {
        return Err(QuotientError::Format(format!(
            "exponent ({cp}p+{cq}q+{cc})/{den} is not integral at p={p}, q={q}"
        )));
    }
    Ok(raw / den)
}

/// Load one bundled preset ("even", "gm5", or "gm3") at parameters (p, q).
pub fn load_preset(preset: &str, p: i64, q: i64) -> Result<QuotientChain, QuotientError> {
    let file: ScriptFile = serde_json::from_str(crate::data::QUOTIENT_SCRIPTS_JSON)
        .map_err(|e| QuotientError::Format(e.to_string()))?;
    let entry =
        file.presets.get(preset).ok_or_else(|| QuotientError::UnknownPreset(preset.into()))?;
    let mut stages = Vec::new();
    for stage in &entry.stages {
        let source = presentation_by_id(&stage.source, p, q)?;
        let target = presentation_by_id(&stage.target, p, q)?;
        let mut images = HashMap::new();
        for (gen, letters) in &stage.images {
            let mut word = Word::identity();
            for (name, spec) in letters {
                let idx = target.generator_index(name).ok_or_else(|| {
                    QuotientError::UnknownTargetGenerator { gen: gen.clone(), name: name.clone() }
                })?;
                word = word.concat(&Word::generator(idx, resolve_exponent(*spec, p, q)?));
            }
            images.insert(gen.clone(), word);
        }
        for gen in &source.generators {
            if !images.contains_key(gen) {
                return Err(QuotientError::MissingImage(gen.clone()));
            }
        }
        stages.push(Stage {
            source_id: stage.source.clone(),
            target_id: stage.target.clone(),
            source,
            target,
            images,
        });
    }
    Ok(QuotientChain { preset: preset.to_string(), description: entry.description.clone(), stages })
}

/// Run every stage of a preset; returns (stage, report) pairs.
pub fn run_preset(
    preset: &str,
    p: i64,
    q: i64,
    budget: WordBudget,
) -> Result<Vec<(String, ConsistencyReport)>, QuotientError> {
    let chain = load_preset(preset, p, q)?;
    chain
        .stages
        .iter()
        .map(|stage| {
            quotient_consistency(&stage.source, &stage.target, &stage.images, budget)
                .map(|r| (format!("{} -> {}", stage.source_id, stage.target_id), r))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images_from(pairs: &[(&str, Word)]) -> HashMap<String, Word> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn even_chain_abelian_tier_passes() {
        for stage in load_preset("even", 5, 7).unwrap().stages {
            let report = quotient_consistency(
                &stage.source,
                &stage.target,
                &stage.images,
                WordBudget { max_len: 30, max_steps: 4000 },
            )
            .unwrap();
            assert!(
                report.abelian_tier_passes(),
                "stage {} -> {}: {:?}",
                stage.source_id,
                stage.target_id,
                report.relators
            );
        }
    }

    #[test]
    fn gm5_chain_abelian_tier_passes() {
        for (p, q) in [(5, 7), (5, 9), (7, 9), (5, 11)] {
            for stage in load_preset("gm5", p, q).unwrap().stages {
                let report = quotient_consistency(
                    &stage.source,
                    &stage.target,
                    &stage.images,
                    WordBudget { max_len: 0, max_steps: 0 },
                )
                .unwrap();
                assert!(
                    report.abelian_tier_passes(),
                    "({p},{q}) stage {} -> {}",
                    stage.source_id,
                    stage.target_id
                );
            }
        }
    }

    #[test]
    fn gm3_chain_abelian_tier_passes() {
        for (p, q) in [(7, 21), (9, 11), (11, 13)] {
            for stage in load_preset("gm3", p, q).unwrap().stages {
                let report = quotient_consistency(
                    &stage.source,
                    &stage.target,
                    &stage.images,
                    WordBudget { max_len: 0, max_steps: 0 },
                )
                .unwrap();
                assert!(report.abelian_tier_passes(), "({p},{q})");
            }
        }
    }

    #[test]
    fn wrong_image_fails_abelian_tier() {
        // deliberately map a to z instead of zx in the even chain
        let source = even_gprime_presentation(5, 7).unwrap();
        let target = even_factor_presentation(5, 7).unwrap();
        let x = target.generator_index("x").unwrap();
        let y = target.generator_index("y").unwrap();
        let z = target.generator_index("z").unwrap();
        let images = images_from(&[
            ("a", Word::generator(z, 1)), // should be zx
            ("b", Word::from_runs([(x, 1), (y, 1)])),
            ("c", Word::from_runs([(y, 1), (z, 1)])),
        ]);
        let report = quotient_consistency(
            &source,
            &target,
            &images,
            WordBudget { max_len: 0, max_steps: 0 },
        )
        .unwrap();
        assert!(!report.abelian_tier_passes());
    }

    #[test]
    fn even_chain_short_relators_prove_word_level() {
        let chain = load_preset("even", 5, 7).unwrap();
        let stage = &chain.stages[0]; // gprime -> factor
        let report = quotient_consistency(
            &stage.source,
            &stage.target,
            &stage.images,
            WordBudget { max_len: 24, max_steps: 30_000 },
        )
        .unwrap();
        // c^2, a^p, b^q, abc all map to short derivable words
        for r in &report.relators[..4] {
            assert_eq!(r.word_level, RelatorStatus::Proved, "relator {}", r.relator);
        }
    }

    #[test]
    fn missing_image_reported() {
        let source = even_gprime_presentation(5, 7).unwrap();
        let target = even_factor_presentation(5, 7).unwrap();
        let images = images_from(&[]);
        assert_eq!(
            quotient_consistency(&source, &target, &images, WordBudget::default()).unwrap_err(),
            QuotientError::MissingImage("a".to_string())
        );
    }

    #[test]
    fn redundancy_mod_five() {
        assert!(remark_redundancy(6));
        assert!(remark_redundancy(1));
        assert!(remark_redundancy(11));
        assert!(!remark_redundancy(3));
        assert!(!remark_redundancy(5));
    }

    #[test]
    fn unknown_preset_rejected() {
        assert!(matches!(load_preset("nope", 5, 7), Err(QuotientError::UnknownPreset(_))));
    }
}
