//! Irreducibility analysis of simple orthomatroids: the similarity relation
//! `x ∼ y ⟺ Card {x, y}^⊥⊥ ≠ 2`, decomposition into irreducible components,
//! and the disjoint-union construction.

use serde::Serialize;

use crate::axioms::is_orthomatroid;
use crate::error::{Error, Result};
use crate::orthoset::Orthoset;
use crate::roundtrip::simplicity_violation;
use crate::set::{ElementId, SubsetMask};

/// A partition of the ground set into ∼-classes.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentPartition {
    /// Disjoint blocks covering `E`, ordered by smallest member.
    #[serde(serialize_with = "serialize_blocks")]
    pub blocks: Vec<SubsetMask>,
    /// Block id of each element.
    pub index: Vec<usize>,
}

fn serialize_blocks<S: serde::Serializer>(
    blocks: &[SubsetMask],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(blocks.len()))?;
    for b in blocks {
        seq.serialize_element(&b.to_vec())?;
    }
    seq.end()
}

impl ComponentPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

fn ensure_simple(m: &Orthoset) -> Result<()> {
    if let Some((element, closure_size)) = simplicity_violation(m) {
        return Err(Error::NotSimple {
            element,
            closure_size,
        });
    }
    Ok(())
}

/// `x ∼ y ⟺ Card {x, y}^⊥⊥ ≠ 2`. Defined on simple orthosets only; in
/// particular `x ∼ x` (the closure is the singleton, cardinality 1).
pub fn similar(m: &Orthoset, x: ElementId, y: ElementId) -> Result<bool> {
    ensure_simple(m)?;
    assert!(x < m.n() && y < m.n(), "elements in range");
    Ok(similar_unchecked(m, x, y))
}

fn similar_unchecked(m: &Orthoset, x: ElementId, y: ElementId) -> bool {
    m.closure(&SubsetMask::from_indices(m.n(), &[x, y])).len() != 2
}

/// Partition a simple orthomatroid into its irreducible components.
///
/// Transitivity of ∼ is verified before partitioning; a violation is
/// surfaced as `NotTransitive` with the witness triple, never repaired.
pub fn components(m: &Orthoset) -> Result<ComponentPartition> {
    ensure_simple(m)?;
    let report = is_orthomatroid(m);
    if !report.holds() {
        return Err(Error::NotOrthomatroid(Box::new(report)));
    }
    let n = m.n();
    let mut rows = vec![SubsetMask::empty(n); n];
    for x in 0..n {
        rows[x].insert(x);
        for y in (x + 1)..n {
            if similar_unchecked(m, x, y) {
                rows[x].insert(y);
                rows[y].insert(x);
            }
        }
    }
    for x in 0..n {
        for y in rows[x].iter() {
            for z in rows[y].iter() {
                if !rows[x].contains(z) {
                    return Err(Error::NotTransitive { x, y, z });
                }
            }
        }
    }
    let mut blocks: Vec<SubsetMask> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for x in 0..n {
        if index[x] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        for y in rows[x].iter() {
            index[y] = id;
        }
        blocks.push(rows[x].clone());
    }
    Ok(ComponentPartition { blocks, index })
}

/// Tagged disjoint union: cross-part pairs are always orthogonal, within-part
/// relations are preserved. Elements of part `i` keep their order and are
/// labeled `"{i}.{label}"` when every part is labeled.
pub fn disjoint_union(parts: &[Orthoset]) -> Orthoset {
    let n: usize = parts.iter().map(Orthoset::n).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for p in parts {
        offsets.push(acc);
        acc += p.n();
    }
    let mut pairs = Vec::new();
    for (pi, p) in parts.iter().enumerate() {
        for (a, b) in p.pairs() {
            pairs.push((offsets[pi] + a, offsets[pi] + b));
        }
        for (qi, q) in parts.iter().enumerate().skip(pi + 1) {
            for a in 0..p.n() {
                for b in 0..q.n() {
                    pairs.push((offsets[pi] + a, offsets[qi] + b));
                }
            }
        }
    }
    let labels: Option<Vec<String>> = parts
        .iter()
        .enumerate()
        .map(|(pi, p)| {
            p.labels()
                .map(|ls| ls.iter().map(|l| format!("{}.{}", pi, l)).collect::<Vec<_>>())
        })
        .collect::<Option<Vec<Vec<String>>>>()
        .map(|per_part| per_part.into_iter().flatten().collect());
    match labels {
        Some(labels) => {
            Orthoset::with_labels(n, &pairs, labels).expect("constructed pairs are valid")
        }
        None => Orthoset::new(n, &pairs).expect("constructed pairs are valid"),
    }
}

/// `true` iff the orthoset has exactly one irreducible component (which
/// requires `n ≥ 1`).
pub fn is_irreducible(m: &Orthoset) -> Result<bool> {
    Ok(components(m)?.block_count() == 1)
}
