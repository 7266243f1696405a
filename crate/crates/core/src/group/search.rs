//! Bounded derivation search: is a word a product of conjugates of
//! relators?
//!
//! States are cyclic words (lexicographically least rotation of the
//! cyclically reduced form); a move rotates the word and appends one cyclic
//! shift of a relator or its inverse, then freely and cyclically reduces.
//! Because conjugates of trivial words are trivial, reaching the empty word
//! proves triviality of the start word; running out of budget proves
//! nothing.
//!
//! The search runs breadth-first from both ends (the start word and the
//! empty word) and meets in the middle; a found path is re-assembled into a
//! pure forward insertion certificate and validated by replay before it is
//! returned.

use serde::{Deserialize, Serialize};
use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use super::presentation::Presentation;
use super::word::Word;

/// One replayable derivation step: rotate the current cyclic word by
/// `position`, insert the chosen relator variant, then freely and
/// cyclically reduce and renormalize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertStep {
    pub position: usize,
    pub relator: usize,
    pub shift: usize,
    pub inverted: bool,
}

/// A checkable witness that a word is trivial: replaying the steps ends at
/// the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationCertificate {
    pub steps: Vec<CertStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(DerivationCertificate),
    /// Budget exhausted; NOT a proof of nontriviality.
    NotFound { expansions: usize },
}

impl SearchResult {
    pub fn certificate(&self) -> Option<&DerivationCertificate> {
        match self {
            SearchResult::Found(cert) => Some(cert),
            SearchResult::NotFound { .. } => None,
        }
    }
}

pub const DEFAULT_MAX_LEN: usize = 40;
pub const DEFAULT_MAX_STEPS: usize = 200_000;

type Letters = Vec<i8>;

#[derive(Debug, Clone)]
struct Variant {
    letters: Letters,
    relator: usize,
    shift: usize,
    inverted: bool,
}

fn to_letters(word: &Word) -> Letters {
    word.letters().iter().map(|&l| l as i8).collect()
}

fn reduce_concat(base: &[i8], tail: &[i8]) -> Letters {
    let mut stack: Letters = Vec::with_capacity(base.len() + tail.len());
    for &l in base.iter().chain(tail) {
        if stack.last().is_some_and(|&top| top == -l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

fn cyclically_reduce(mut word: Letters) -> Letters {
    while word.len() >= 2 && word[0] == -word[word.len() - 1] {
        word.pop();
        word.remove(0);
    }
    word
}

/// Lexicographically least rotation.
fn canonical_rotation(word: &[i8]) -> Letters {
    if word.len() <= 1 {
        return word.to_vec();
    }
    let mut best = 0usize;
    for k in 1..word.len() {
        for i in 0..word.len() {
            let a = word[(k + i) % word.len()];
            let b = word[(best + i) % word.len()];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    best = k;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    let mut out = Vec::with_capacity(word.len());
    out.extend_from_slice(&word[best..]);
    out.extend_from_slice(&word[..best]);
    out
}

fn canonicalize(word: Letters) -> Letters {
    canonical_rotation(&cyclically_reduce(word))
}

fn rotate(word: &[i8], k: usize) -> Letters {
    let mut out = Vec::with_capacity(word.len());
    out.extend_from_slice(&word[k..]);
    out.extend_from_slice(&word[..k]);
    out
}

fn build_variants(pres: &Presentation) -> Vec<Variant> {
    let mut seen: HashMap<Letters, ()> = HashMap::new();
    let mut variants = Vec::new();
    for (relator, word) in pres.relators.iter().enumerate() {
        let reduced = word.cyclically_reduce();
        if reduced.is_identity() {
            continue;
        }
        for inverted in [false, true] {
            let base = if inverted { to_letters(&reduced.inverse()) } else { to_letters(&reduced) };
            for shift in 0..base.len() {
                let rotated = rotate(&base, shift);
                if let Entry::Vacant(e) = seen.entry(rotated.clone()) {
                    e.insert(());
                    variants.push(Variant { letters: rotated, relator, shift, inverted });
                }
            }
        }
    }
    variants
}

fn apply_move(word: &[i8], variant: &Variant, position: usize) -> Letters {
    let rotated = rotate(word, position);
    canonicalize(reduce_concat(&rotated, &variant.letters))
}

/// Replay a certificate from `start`; returns the end word.
pub fn replay(pres: &Presentation, start: &Word, cert: &DerivationCertificate) -> Option<Word> {
    let variants = build_variants(pres);
    let mut current = canonicalize(to_letters(start));
    for step in &cert.steps {
        let variant = variants.iter().find(|v| {
            v.relator == step.relator && v.shift == step.shift && v.inverted == step.inverted
        })?;
        if step.position >= current.len().max(1) {
            return None;
        }
        current = apply_move(&current, variant, step.position);
    }
    Some(Word::from_letters(&current.iter().map(|&l| l as i32).collect::<Vec<_>>()))
}

/// True when replaying `cert` from `start` reaches the empty word.
pub fn replay_reaches_identity(
    pres: &Presentation,
    start: &Word,
    cert: &DerivationCertificate,
) -> bool {
    replay(pres, start, cert).is_some_and(|w| w.is_identity())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Forward,
    Backward,
}

struct Node {
    parent: Option<(usize, CertStep)>,
    side: Side,
}

struct Arena {
    states: Vec<Letters>,
    nodes: Vec<Node>,
    index: HashMap<Letters, usize>,
}

impl Arena {
    fn new() -> Self {
        Arena { states: Vec::new(), nodes: Vec::new(), index: HashMap::new() }
    }

    fn intern(&mut self, state: Letters, node: Node) -> (usize, bool) {
        match self.index.entry(state.clone()) {
            Entry::Occupied(e) => (*e.get(), false),
            Entry::Vacant(e) => {
                let id = self.states.len();
                e.insert(id);
                self.states.push(state);
                self.nodes.push(node);
                (id, true)
            }
        }
    }
}

/// Breadth-first derivation search with the given budgets.
///
/// `max_len` caps intermediate word lengths; `max_steps` caps the number of
/// expanded states across both search directions.
pub fn derivation_search(
    pres: &Presentation,
    target: &Word,
    max_len: usize,
    max_steps: usize,
) -> SearchResult {
    let variants = build_variants(pres);
    let start = canonicalize(to_letters(target));
    if start.is_empty() {
        return SearchResult::Found(DerivationCertificate { steps: Vec::new() });
    }
    if variants.is_empty() {
        return SearchResult::NotFound { expansions: 0 };
    }

    let mut arena = Arena::new();
    let (start_id, _) = arena.intern(start, Node { parent: None, side: Side::Forward });
    let (empty_id, fresh) = arena.intern(Vec::new(), Node { parent: None, side: Side::Backward });
    debug_assert!(fresh);

    let mut queues = [VecDeque::from([start_id]), VecDeque::from([empty_id])];
    let mut expansions = 0usize;

    while expansions < max_steps && (!queues[0].is_empty() || !queues[1].is_empty()) {
        // expand the smaller frontier first
        let side_idx = match (queues[0].front(), queues[1].front()) {
            (Some(_), Some(_)) => usize::from(queues[0].len() > queues[1].len()),
            (Some(_), None) => 0,
            (None, Some(_)) => 1,
            (None, None) => break,
        };
        let side = if side_idx == 0 { Side::Forward } else { Side::Backward };
        let id = queues[side_idx].pop_front().unwrap();
        expansions += 1;

        let state = arena.states[id].clone();
        let rotations = state.len().max(1);
        for position in 0..rotations {
            for (v_idx, variant) in variants.iter().enumerate() {
                let _ = v_idx;
                let next = apply_move(&state, variant, position);
                if next.len() > max_len {
                    continue;
                }
                let step = CertStep {
                    position,
                    relator: variant.relator,
                    shift: variant.shift,
                    inverted: variant.inverted,
                };
                let (next_id, fresh) =
                    arena.intern(next, Node { parent: Some((id, step)), side });
                if fresh {
                    queues[side_idx].push_back(next_id);
                } else if arena.nodes[next_id].side != side {
                    // the two searches met; try to assemble a certificate
                    if let Some(cert) = assemble(pres, target, &arena, &variants, id, step, next_id)
                    {
                        return SearchResult::Found(cert);
                    }
                }
            }
        }
    }
    SearchResult::NotFound { expansions }
}

/// Stitch the two half-paths of a meet into one forward certificate and
/// validate it by replay.
fn assemble(
    pres: &Presentation,
    target: &Word,
    arena: &Arena,
    variants: &[Variant],
    from_id: usize,
    bridge: CertStep,
    meet_id: usize,
) -> Option<DerivationCertificate> {
    // steps and state ids along root -> id
    let path_steps = |mut id: usize| {
        let mut steps = Vec::new();
        while let Some((parent, step)) = arena.nodes[id].parent {
            steps.push(step);
            id = parent;
        }
        steps.reverse();
        steps
    };
    let path_states = |mut id: usize| {
        let mut states = vec![arena.states[id].clone()];
        while let Some((parent, _)) = arena.nodes[id].parent {
            states.push(arena.states[parent].clone());
            id = parent;
        }
        states.reverse();
        states
    };

    // Orient the meet: forward steps run start -> meet, the backward state
    // chain runs empty -> ... -> meet.
    let (forward_steps, backward_states) = match arena.nodes[from_id].side {
        Side::Forward => {
            let mut steps = path_steps(from_id);
            steps.push(bridge);
            (steps, path_states(meet_id))
        }
        Side::Backward => {
            let mut states = path_states(from_id);
            states.push(arena.states[meet_id].clone());
            (path_steps(meet_id), states)
        }
    };

    // Invert the backward chain edge by edge into forward moves
    // meet -> ... -> empty.
    let mut steps = forward_steps;
    let mut states = backward_states;
    let mut current = states.pop()?;
    while let Some(prev) = states.pop() {
        let step = invert_edge(variants, &prev, &current)?;
        steps.push(step);
        current = prev;
    }

    let cert = DerivationCertificate { steps };
    if replay_reaches_identity(pres, target, &cert) {
        Some(cert)
    } else {
        None
    }
}

/// Find a single move carrying `from` to `to` (used to reverse backward
/// edges; such a move exists for every edge the search generates, up to
/// rare conjugator-stripping corner cases, which the caller treats as a
/// failed meet).
fn invert_edge(variants: &[Variant], to: &Letters, from: &Letters) -> Option<CertStep> {
    for position in 0..from.len().max(1) {
        for variant in variants {
            if apply_move(from, variant, position) == *to {
                return Some(CertStep {
                    position,
                    relator: variant.relator,
                    shift: variant.shift,
                    inverted: variant.inverted,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::presentation::{coxeter_g5_with_definition, coxeter_gmpq, Presentation};

    fn word(pairs: &[(usize, i64)]) -> Word {
        Word::from_runs(pairs.iter().copied())
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&[2, 1, 3]), vec![1, 3, 2]);
        assert_eq!(canonical_rotation(&[1, 1, -2]), vec![-2, 1, 1]);
        assert_eq!(canonical_rotation(&[]), Vec::<i8>::new());
    }

    #[test]
    fn trivial_target_has_empty_certificate() {
        let pres = Presentation::new(vec!["a"], vec![word(&[(0, 3)])]);
        let result = derivation_search(&pres, &Word::identity(), 10, 100);
        assert_eq!(result, SearchResult::Found(DerivationCertificate { steps: Vec::new() }));
    }

    #[test]
    fn relator_itself_is_derivable() {
        let pres = Presentation::new(vec!["a", "b"], vec![word(&[(0, 1), (1, 1), (0, 1), (1, 1)])]);
        let result = derivation_search(&pres, &word(&[(0, 1), (1, 1), (0, 1), (1, 1)]), 10, 1000);
        let cert = result.certificate().expect("relator is trivial").clone();
        assert!(replay_reaches_identity(&pres, &word(&[(0, 1), (1, 1), (0, 1), (1, 1)]), &cert));
    }

    #[test]
    fn power_of_relator() {
        // C^10 in a group where C^5 is a relator
        let pres = coxeter_gmpq(5, 5, 7).unwrap();
        let c = pres.generator_index("C").unwrap();
        let result = derivation_search(&pres, &word(&[(c as usize, 10)]), 40, 10_000);
        let cert = result.certificate().expect("C^10 = (C^5)^2").clone();
        assert!(replay_reaches_identity(&pres, &word(&[(c, 10)]), &cert));
    }

    #[test]
    fn free_group_word_is_not_found() {
        let pres = Presentation::new(vec!["a", "b"], vec![]);
        let result = derivation_search(&pres, &word(&[(0, 1), (1, 1)]), 10, 1000);
        assert!(matches!(result, SearchResult::NotFound { .. }));
    }

    #[test]
    fn nontrivial_word_budget_exhausts() {
        // ab in <a,b | a^3>: not trivial, search must come back empty-handed
        let pres = Presentation::new(vec!["a", "b"], vec![word(&[(0, 3)])]);
        let result = derivation_search(&pres, &word(&[(0, 1), (1, 1)]), 8, 2000);
        assert!(matches!(result, SearchResult::NotFound { .. }));
    }

    #[test]
    fn commutation_consequence() {
        // in <a, b | abab>: (ba)^2 is also trivial
        let pres = Presentation::new(vec!["a", "b"], vec![word(&[(0, 1), (1, 1), (0, 1), (1, 1)])]);
        let target = word(&[(1, 1), (0, 1), (1, 1), (0, 1)]);
        let result = derivation_search(&pres, &target, 12, 20_000);
        let cert = result.certificate().expect("(ba)^2 trivial").clone();
        assert!(replay_reaches_identity(&pres, &target, &cert));
    }

    #[test]
    fn c5_identity_in_g5_presentation() {
        // 1 = (A^2 B^2)^10 = C^5 in the 6-relator form of G^{5,5,7}
        let pres = coxeter_g5_with_definition(5, 7).unwrap();
        let c = pres.generator_index("C").unwrap();
        let target = word(&[(c, 5)]);
        let result = derivation_search(&pres, &target, DEFAULT_MAX_LEN, DEFAULT_MAX_STEPS);
        let cert = result.certificate().expect("C^5 derivable").clone();
        assert!(replay_reaches_identity(&pres, &target, &cert));
    }

    #[test]
    fn abc_squared_identity_in_g5_presentation() {
        let pres = coxeter_g5_with_definition(5, 7).unwrap();
        let (a, b, c) =
            (pres.generator_index("A").unwrap(), pres.generator_index("B").unwrap(), pres.generator_index("C").unwrap());
        let target = word(&[(a, 1), (b, 1), (c, 1), (a, 1), (b, 1), (c, 1)]);
        let result = derivation_search(&pres, &target, DEFAULT_MAX_LEN, DEFAULT_MAX_STEPS);
        let cert = result.certificate().expect("(ABC)^2 derivable").clone();
        assert!(replay_reaches_identity(&pres, &target, &cert));
    }
}
