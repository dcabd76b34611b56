//! Verification of the laws that hold for *every* orthoset: the Galois
//! connection between `F ↦ F^⊥` and itself, and the closure-operator laws of
//! `F ↦ F^⊥⊥`.
//!
//! These are theorems, so every report must come back `holds = true`; a false
//! report signals an implementation bug and the test suites treat it as a
//! failure. The checkers still search for counterexamples honestly instead of
//! returning a constant.
//!
//! A law quantified over k subsets costs `2^(k·n)` evaluations exhaustively
//! (`3^n` for monotony, which only needs pairs `F ⊆ G`). Each law runs
//! exhaustively iff its evaluation count fits in `exhaustive_limit`, otherwise
//! it checks a seeded pseudo-random sample and reports the sample size in
//! `checked_count`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::orthoset::Orthoset;
use crate::set::SubsetMask;

/// Default evaluation budget per law: `2^20`, which makes pair-quantified
/// laws exhaustive up to `n = 10` and single-subset laws up to `n = 20`.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Number of evaluations in sampled mode (clamped to the exhaustive limit).
pub const DEFAULT_SAMPLE_SIZE: u64 = 10_000;

/// Seed for sampled mode when the caller does not supply one.
pub const DEFAULT_SAMPLE_SEED: u64 = 0xA11CE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Symmetry,
    AntiReflexivity,
    GaloisDisjoint,
    GaloisAdjunction,
    Extensivity,
    Monotony,
    Idempotence,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Symmetry => "symmetry",
            Law::AntiReflexivity => "anti-reflexivity",
            Law::GaloisDisjoint => "galois-disjoint",
            Law::GaloisAdjunction => "galois-adjunction",
            Law::Extensivity => "extensivity",
            Law::Monotony => "monotony",
            Law::Idempotence => "idempotence",
        }
    }
}

/// Counterexample to a law; never produced for a correct implementation.
#[derive(Clone, Debug, Serialize)]
pub struct LawWitness {
    #[serde(rename = "F")]
    pub f: Vec<usize>,
    #[serde(rename = "G", skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LawWitness>,
    pub checked_count: u64,
    pub exhaustive: bool,
}

impl LawReport {
    fn theorem(law: Law, checked: u64, exhaustive: bool) -> Self {
        LawReport {
            law,
            holds: true,
            witness: None,
            checked_count: checked,
            exhaustive,
        }
    }

    fn refuted(law: Law, witness: LawWitness, checked: u64, exhaustive: bool) -> Self {
        LawReport {
            law,
            holds: false,
            witness: Some(witness),
            checked_count: checked,
            exhaustive,
        }
    }
}

/// Re-verify symmetry and anti-reflexivity on the stored relation table.
///
/// Construction already enforces both; this exists so reports and the CLI can
/// show the verdicts explicitly rather than assert them.
pub fn structural_laws(m: &Orthoset) -> Vec<LawReport> {
    let n = m.n();
    let mut sym_checked = 0u64;
    let mut sym_witness = None;
    for i in 0..n {
        for j in (i + 1)..n {
            sym_checked += 1;
            if m.is_orthogonal(i, j) != m.is_orthogonal(j, i) && sym_witness.is_none() {
                sym_witness = Some(LawWitness {
                    f: vec![i],
                    g: Some(vec![j]),
                    x: None,
                });
            }
        }
    }
    let mut refl_witness = None;
    for i in 0..n {
        if m.is_orthogonal(i, i) && refl_witness.is_none() {
            refl_witness = Some(LawWitness {
                f: vec![i],
                g: None,
                x: Some(i),
            });
        }
    }
    vec![
        match sym_witness {
            None => LawReport::theorem(Law::Symmetry, sym_checked, true),
            Some(w) => LawReport::refuted(Law::Symmetry, w, sym_checked, true),
        },
        match refl_witness {
            None => LawReport::theorem(Law::AntiReflexivity, n as u64, true),
            Some(w) => LawReport::refuted(Law::AntiReflexivity, w, n as u64, true),
        },
    ]
}

/// `F ∩ F^⊥ = ∅` and the adjunction `G ⊆ F^⊥ ⟺ F ⊆ G^⊥`, for all subsets
/// (or a seeded sample when the budget is exceeded).
pub fn check_galois(m: &Orthoset, exhaustive_limit: u64) -> Vec<LawReport> {
    check_galois_seeded(m, exhaustive_limit, DEFAULT_SAMPLE_SEED)
}

pub fn check_galois_seeded(m: &Orthoset, exhaustive_limit: u64, seed: u64) -> Vec<LawReport> {
    vec![
        check_disjoint(m, exhaustive_limit, seed),
        check_adjunction(m, exhaustive_limit, seed),
    ]
}

/// Extensivity, monotony and idempotence of `F ↦ F^⊥⊥`.
pub fn check_closure_laws(m: &Orthoset, exhaustive_limit: u64) -> Vec<LawReport> {
    check_closure_laws_seeded(m, exhaustive_limit, DEFAULT_SAMPLE_SEED)
}

pub fn check_closure_laws_seeded(
    m: &Orthoset,
    exhaustive_limit: u64,
    seed: u64,
) -> Vec<LawReport> {
    vec![
        check_extensivity(m, exhaustive_limit, seed),
        check_monotony(m, exhaustive_limit, seed),
        check_idempotence(m, exhaustive_limit, seed),
    ]
}

/// `base^n` without overflow, or `None` when it cannot fit any u64 budget.
fn eval_cost(base: u32, n: usize) -> Option<u64> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(base as u128)?;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn is_exhaustive(base: u32, n: usize, limit: u64) -> bool {
    matches!(eval_cost(base, n), Some(c) if c <= limit)
}

fn sample_count(limit: u64) -> u64 {
    DEFAULT_SAMPLE_SIZE.min(limit.max(1))
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize) -> SubsetMask {
    let mut mask = SubsetMask::empty(n);
    for i in 0..n {
        if rng.random::<bool>() {
            mask.insert(i);
        }
    }
    mask
}

fn rng_for(law: Law, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((law as u64) << 56))
}

fn check_disjoint(m: &Orthoset, limit: u64, seed: u64) -> LawReport {
    let n = m.n();
    let law = Law::GaloisDisjoint;
    let violation = |f: &SubsetMask| -> Option<LawWitness> {
        let comp = m.orthocomplement(f);
        let overlap = f.intersection(comp.mask());
        overlap.first().map(|x| LawWitness {
            f: f.to_vec(),
            g: None,
            x: Some(x),
        })
    };
    if is_exhaustive(2, n, limit) {
        let mut checked = 0u64;
        for bits in 0..(1u64 << n) {
            checked += 1;
            let f = SubsetMask::from_bits_u64(n, bits);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, checked, true);
            }
        }
        LawReport::theorem(law, checked, true)
    } else {
        let mut rng = rng_for(law, seed);
        let count = sample_count(limit);
        for k in 0..count {
            let f = random_mask(&mut rng, n);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, k + 1, false);
            }
        }
        LawReport::theorem(law, count, false)
    }
}

fn check_adjunction(m: &Orthoset, limit: u64, seed: u64) -> LawReport {
    let n = m.n();
    let law = Law::GaloisAdjunction;
    let violation = |f: &SubsetMask, g: &SubsetMask| -> Option<LawWitness> {
        let f_perp = m.orthocomplement(f);
        let g_perp = m.orthocomplement(g);
        if g.is_subset(f_perp.mask()) != f.is_subset(g_perp.mask()) {
            Some(LawWitness {
                f: f.to_vec(),
                g: Some(g.to_vec()),
                x: None,
            })
        } else {
            None
        }
    };
    if is_exhaustive(4, n, limit) {
        // Complements are shared across the pair loop.
        let comp: Vec<SubsetMask> = (0..(1u64 << n))
            .map(|bits| {
                m.orthocomplement(&SubsetMask::from_bits_u64(n, bits))
                    .into_mask()
            })
            .collect();
        let mut checked = 0u64;
        for fb in 0..(1u64 << n) {
            let f = SubsetMask::from_bits_u64(n, fb);
            for gb in 0..(1u64 << n) {
                checked += 1;
                let g = SubsetMask::from_bits_u64(n, gb);
                if g.is_subset(&comp[fb as usize]) != f.is_subset(&comp[gb as usize]) {
                    let w = LawWitness {
                        f: f.to_vec(),
                        g: Some(g.to_vec()),
                        x: None,
                    };
                    return LawReport::refuted(law, w, checked, true);
                }
            }
        }
        LawReport::theorem(law, checked, true)
    } else {
        let mut rng = rng_for(law, seed);
        let count = sample_count(limit);
        for k in 0..count {
            let f = random_mask(&mut rng, n);
            let g = random_mask(&mut rng, n);
            if let Some(w) = violation(&f, &g) {
                return LawReport::refuted(law, w, k + 1, false);
            }
        }
        LawReport::theorem(law, count, false)
    }
}

fn check_extensivity(m: &Orthoset, limit: u64, seed: u64) -> LawReport {
    let n = m.n();
    let law = Law::Extensivity;
    let violation = |f: &SubsetMask| -> Option<LawWitness> {
        let cl = m.closure(f);
        if f.is_subset(cl.mask()) {
            None
        } else {
            Some(LawWitness {
                f: f.to_vec(),
                g: None,
                x: f.difference(cl.mask()).first(),
            })
        }
    };
    if is_exhaustive(2, n, limit) {
        let mut checked = 0u64;
        for bits in 0..(1u64 << n) {
            checked += 1;
            let f = SubsetMask::from_bits_u64(n, bits);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, checked, true);
            }
        }
        LawReport::theorem(law, checked, true)
    } else {
        let mut rng = rng_for(law, seed);
        let count = sample_count(limit);
        for k in 0..count {
            let f = random_mask(&mut rng, n);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, k + 1, false);
            }
        }
        LawReport::theorem(law, count, false)
    }
}

fn check_monotony(m: &Orthoset, limit: u64, seed: u64) -> LawReport {
    let n = m.n();
    let law = Law::Monotony;
    // Exhaustive mode walks pairs F ⊆ G via submask enumeration: 3^n pairs.
    if is_exhaustive(3, n, limit) {
        let closure: Vec<SubsetMask> = (0..(1u64 << n))
            .map(|bits| m.closure(&SubsetMask::from_bits_u64(n, bits)).into_mask())
            .collect();
        let mut checked = 0u64;
        for gb in 0..(1u64 << n) {
            let mut fb = gb;
            loop {
                checked += 1;
                if !closure[fb as usize].is_subset(&closure[gb as usize]) {
                    let w = LawWitness {
                        f: SubsetMask::from_bits_u64(n, fb).to_vec(),
                        g: Some(SubsetMask::from_bits_u64(n, gb).to_vec()),
                        x: None,
                    };
                    return LawReport::refuted(law, w, checked, true);
                }
                if fb == 0 {
                    break;
                }
                fb = (fb - 1) & gb;
            }
        }
        LawReport::theorem(law, checked, true)
    } else {
        let mut rng = rng_for(law, seed);
        let count = sample_count(limit);
        for k in 0..count {
            let g = random_mask(&mut rng, n);
            let f = g.intersection(&random_mask(&mut rng, n));
            if !m.closure(&f).mask().is_subset(m.closure(&g).mask()) {
                let w = LawWitness {
                    f: f.to_vec(),
                    g: Some(g.to_vec()),
                    x: None,
                };
                return LawReport::refuted(law, w, k + 1, false);
            }
        }
        LawReport::theorem(law, count, false)
    }
}

fn check_idempotence(m: &Orthoset, limit: u64, seed: u64) -> LawReport {
    let n = m.n();
    let law = Law::Idempotence;
    let violation = |f: &SubsetMask| -> Option<LawWitness> {
        let once = m.closure(f);
        let twice = m.closure(once.mask());
        if once == twice {
            None
        } else {
            Some(LawWitness {
                f: f.to_vec(),
                g: None,
                x: None,
            })
        }
    };
    if is_exhaustive(2, n, limit) {
        let mut checked = 0u64;
        for bits in 0..(1u64 << n) {
            checked += 1;
            let f = SubsetMask::from_bits_u64(n, bits);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, checked, true);
            }
        }
        LawReport::theorem(law, checked, true)
    } else {
        let mut rng = rng_for(law, seed);
        let count = sample_count(limit);
        for k in 0..count {
            let f = random_mask(&mut rng, n);
            if let Some(w) = violation(&f) {
                return LawReport::refuted(law, w, k + 1, false);
            }
        }
        LawReport::theorem(law, count, false)
    }
}
