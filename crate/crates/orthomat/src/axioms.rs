//! The orthomatroid axioms: the Mac Lane–Steinitz Exchange Property, the
//! Straightening Property, and the orthobasis axiom, together with
//! orthoindependence, constructive orthobasis completion and rank.
//!
//! The quantification trick used throughout: `(F + y)^⊥ = F^⊥ ∩ {y}^⊥ =
//! (F^⊥⊥ + y)^⊥`, so `(F + y)^⊥⊥` depends on `F` only through its closure.
//! Each axiom is therefore checked with `F` ranging over the closed sets
//! only, which is equivalent to ranging over the whole powerset (the test
//! suite cross-validates this against a full-powerset oracle).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::closed_masks;
use crate::orthoset::Orthoset;
use crate::set::SubsetMask;

/// Largest ground set for which `rank` re-verifies well-definedness by
/// enumerating every maximal orthoindependent subset of the span.
pub const RANK_VERIFY_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Exchange,
    Straightening,
    Orthobasis,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Exchange => "exchange property",
            Axiom::Straightening => "straightening property",
            Axiom::Orthobasis => "orthobasis axiom",
        }
    }
}

/// Counterexample to an axiom.
///
/// For the exchange property the triple `(F, x, y)` violates the quantified
/// formula; for straightening, `(F, x)` has no admissible `y`; for the
/// orthobasis axiom, `J` is a maximal orthoindependent subset of `F` whose
/// closure misses `x ∈ F`.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomWitness {
    #[serde(rename = "F")]
    pub f: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AxiomWitness>,
    pub closed_sets_checked: usize,
}

/// Verdicts for the two defining orthomatroid axioms.
#[derive(Clone, Debug, Serialize)]
pub struct OrthomatroidReport {
    pub exchange: AxiomVerdict,
    pub straightening: AxiomVerdict,
}

impl OrthomatroidReport {
    pub fn holds(&self) -> bool {
        self.exchange.holds && self.straightening.holds
    }

    pub fn first_failure(&self) -> &'static str {
        if !self.exchange.holds {
            "the exchange property"
        } else if !self.straightening.holds {
            "the straightening property"
        } else {
            "nothing"
        }
    }
}

/// An orthoindependent set together with the closed set it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orthobasis {
    pub elements: SubsetMask,
    pub spans: crate::orthoset::ClosedSet,
}

/// Common cardinality of the orthobases of a closed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Rank(pub usize);

impl std::fmt::Display for Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `true` iff all distinct members of `f` are mutually orthogonal.
///
/// Orthoindependence is finitary: it suffices that every 2-subset passes.
pub fn is_orthoindependent(m: &Orthoset, f: &SubsetMask) -> bool {
    f.iter().all(|i| f.without(i).is_subset(m.neighbors(i)))
}

/// Matroid independence under the bi-orthogonal closure:
/// no member lies in the closure of the others.
pub fn is_independent(m: &Orthoset, f: &SubsetMask) -> bool {
    f.iter().all(|x| !m.closure(&f.without(x)).contains(x))
}

/// Closures of `F + y` for a closed `F`, one per element.
fn closures_plus(m: &Orthoset, f: &SubsetMask) -> Vec<SubsetMask> {
    (0..m.n())
        .map(|y| {
            if f.contains(y) {
                f.clone()
            } else {
                m.closure(&f.with(y)).into_mask()
            }
        })
        .collect()
}

/// Check the Exchange Property with `F` ranging over the given closed sets.
pub fn check_exchange_on(m: &Orthoset, closed: &[SubsetMask]) -> AxiomVerdict {
    let n = m.n();
    for f in closed {
        let plus = closures_plus(m, f);
        for x in 0..n {
            if f.contains(x) {
                continue;
            }
            for y in 0..n {
                if plus[y].contains(x) && !plus[x].contains(y) {
                    return AxiomVerdict {
                        axiom: Axiom::Exchange,
                        holds: false,
                        witness: Some(AxiomWitness {
                            f: f.to_vec(),
                            x: Some(x),
                            y: Some(y),
                            j: None,
                        }),
                        closed_sets_checked: closed.len(),
                    };
                }
            }
        }
    }
    AxiomVerdict {
        axiom: Axiom::Exchange,
        holds: true,
        witness: None,
        closed_sets_checked: closed.len(),
    }
}

pub fn check_exchange(m: &Orthoset) -> AxiomVerdict {
    check_exchange_on(m, &all_closed(m))
}

/// Check the Straightening Property with `F` ranging over the closed sets.
pub fn check_straightening_on(m: &Orthoset, closed: &[SubsetMask]) -> AxiomVerdict {
    let n = m.n();
    for f in closed {
        let f_perp = m.orthocomplement(f);
        let plus = closures_plus(m, f);
        for x in 0..n {
            if f.contains(x) {
                continue;
            }
            if !f_perp.mask().iter().any(|y| plus[y].contains(x)) {
                return AxiomVerdict {
                    axiom: Axiom::Straightening,
                    holds: false,
                    witness: Some(AxiomWitness {
                        f: f.to_vec(),
                        x: Some(x),
                        y: None,
                        j: None,
                    }),
                    closed_sets_checked: closed.len(),
                };
            }
        }
    }
    AxiomVerdict {
        axiom: Axiom::Straightening,
        holds: true,
        witness: None,
        closed_sets_checked: closed.len(),
    }
}

pub fn check_straightening(m: &Orthoset) -> AxiomVerdict {
    check_straightening_on(m, &all_closed(m))
}

/// Check the orthobasis axiom: every maximal orthoindependent subset of every
/// closed set spans it. (Equivalent to the original completion form: any
/// orthoindependent `I ⊆ F^⊥⊥` extends to a maximal one, so all of them
/// complete into orthobases iff the maximal ones already span.)
pub fn check_orthobasis_axiom_on(m: &Orthoset, closed: &[SubsetMask]) -> AxiomVerdict {
    for c in closed {
        let mut witness = None;
        for_each_maximal_orthoindependent(m, c, &mut |j| {
            let span = m.closure(j);
            if span.mask() != c {
                witness = Some(AxiomWitness {
                    f: c.to_vec(),
                    x: c.difference(span.mask()).first(),
                    y: None,
                    j: Some(j.to_vec()),
                });
                false
            } else {
                true
            }
        });
        if let Some(w) = witness {
            return AxiomVerdict {
                axiom: Axiom::Orthobasis,
                holds: false,
                witness: Some(w),
                closed_sets_checked: closed.len(),
            };
        }
    }
    AxiomVerdict {
        axiom: Axiom::Orthobasis,
        holds: true,
        witness: None,
        closed_sets_checked: closed.len(),
    }
}

pub fn check_orthobasis_axiom(m: &Orthoset) -> AxiomVerdict {
    check_orthobasis_axiom_on(m, &all_closed(m))
}

/// Both defining axioms at once.
pub fn is_orthomatroid(m: &Orthoset) -> OrthomatroidReport {
    let closed = all_closed(m);
    is_orthomatroid_on(m, &closed)
}

pub fn is_orthomatroid_on(m: &Orthoset, closed: &[SubsetMask]) -> OrthomatroidReport {
    OrthomatroidReport {
        exchange: check_exchange_on(m, closed),
        straightening: check_straightening_on(m, closed),
    }
}

fn all_closed(m: &Orthoset) -> Vec<SubsetMask> {
    closed_masks(m, None).expect("unbudgeted enumeration cannot hit the budget")
}

/// Visit every maximal orthoindependent subset of `within`, in the
/// deterministic order of Bron–Kerbosch recursion over ascending elements
/// (orthoindependent sets are the cliques of the orthogonality graph).
/// The visitor returns `false` to stop early.
pub(crate) fn for_each_maximal_orthoindependent(
    m: &Orthoset,
    within: &SubsetMask,
    visit: &mut impl FnMut(&SubsetMask) -> bool,
) {
    fn recurse(
        m: &Orthoset,
        current: &mut SubsetMask,
        mut candidates: SubsetMask,
        mut excluded: SubsetMask,
        visit: &mut impl FnMut(&SubsetMask) -> bool,
    ) -> bool {
        if candidates.is_empty() && excluded.is_empty() {
            return visit(current);
        }
        while let Some(v) = candidates.first() {
            current.insert(v);
            let keep_going = recurse(
                m,
                current,
                candidates.intersection(m.neighbors(v)),
                excluded.intersection(m.neighbors(v)),
                visit,
            );
            current.remove(v);
            if !keep_going {
                return false;
            }
            candidates.remove(v);
            excluded.insert(v);
        }
        true
    }
    let mut current = SubsetMask::empty(m.n());
    recurse(
        m,
        &mut current,
        within.clone(),
        SubsetMask::empty(m.n()),
        visit,
    );
}

/// Greedy orthobasis completion inside a closed span: extend by the smallest
/// admissible element until no candidate remains.
fn greedy_orthobasis(m: &Orthoset, span: &SubsetMask, start: &SubsetMask) -> SubsetMask {
    let mut basis = start.clone();
    loop {
        let candidates = span.intersection(m.orthocomplement(&basis).mask());
        match candidates.first() {
            Some(x) => basis.insert(x),
            None => break,
        }
    }
    basis
}

/// Complete the orthoindependent set `I` into an orthobasis of `F^⊥⊥`.
///
/// Requires `m` to be an orthomatroid (checked), `I` orthoindependent and
/// `I ⊆ F^⊥⊥`. The three postconditions — `I ⊆ B`, `B` orthoindependent,
/// `B^⊥⊥ = F^⊥⊥` — are re-checked by assertion before returning.
pub fn complete_orthobasis(
    m: &Orthoset,
    f: &SubsetMask,
    i: &SubsetMask,
) -> Result<Orthobasis> {
    let report = is_orthomatroid(m);
    if !report.holds() {
        return Err(Error::NotOrthomatroid(Box::new(report)));
    }
    if !is_orthoindependent(m, i) {
        return Err(Error::NotOrthoindependent(i.to_vec()));
    }
    let span = m.closure(f);
    if !i.is_subset(span.mask()) {
        return Err(Error::NotInClosure {
            start: i.to_vec(),
            closure: span.mask().to_vec(),
        });
    }
    let basis = greedy_orthobasis(m, span.mask(), i);
    assert!(i.is_subset(&basis));
    assert!(is_orthoindependent(m, &basis));
    assert_eq!(m.closure(&basis), span);
    Ok(Orthobasis {
        elements: basis,
        spans: span,
    })
}

/// Rank of `F^⊥⊥`: the cardinality of an orthobasis grown from the empty set.
///
/// For ground sets of at most [`RANK_VERIFY_MAX_N`] elements, every maximal
/// orthoindependent subset of the span is enumerated and asserted to have the
/// same cardinality (well-definedness of rank); above that the enumeration is
/// skipped for cost.
pub fn rank(m: &Orthoset, f: &SubsetMask) -> Result<Rank> {
    let report = is_orthomatroid(m);
    if !report.holds() {
        return Err(Error::NotOrthomatroid(Box::new(report)));
    }
    let span = m.closure(f);
    let basis = greedy_orthobasis(m, span.mask(), &SubsetMask::empty(m.n()));
    let value = basis.len();
    if m.n() <= RANK_VERIFY_MAX_N {
        for_each_maximal_orthoindependent(m, span.mask(), &mut |j| {
            assert_eq!(
                j.len(),
                value,
                "rank is not well-defined: maximal sets {:?} and {:?}",
                basis,
                j
            );
            true
        });
    }
    Ok(Rank(value))
}
