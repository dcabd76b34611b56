//! Finite orthosets: a ground set `{0, .., n-1}` with a symmetric,
//! anti-reflexive orthogonality relation, plus the orthogonal complement and
//! the bi-orthogonal closure operator derived from it.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementId, SubsetMask};

/// A finite orthoset `(E, ⊥)`.
///
/// The relation is stored one row per element (`rows[i]` = everything
/// orthogonal to `i`), which makes the orthogonal complement of a subset an
/// intersection of rows. Symmetry and anti-reflexivity are enforced at
/// construction and never repaired afterwards; the ground set is immutable.
#[derive(Clone, PartialEq, Eq)]
pub struct Orthoset {
    n: usize,
    rows: Vec<SubsetMask>,
    labels: Option<Vec<String>>,
}

/// A subset known to satisfy `F = F^⊥⊥`.
///
/// Values are only produced by [`Orthoset::orthocomplement`] and
/// [`Orthoset::closure`] (an orthogonal complement is always closed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSet {
    mask: SubsetMask,
}

impl ClosedSet {
    pub fn mask(&self) -> &SubsetMask {
        &self.mask
    }

    pub fn into_mask(self) -> SubsetMask {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn contains(&self, i: ElementId) -> bool {
        self.mask.contains(i)
    }

    pub(crate) fn from_mask_unchecked(mask: SubsetMask) -> Self {
        ClosedSet { mask }
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mask.fmt(f)
    }
}

impl Orthoset {
    /// Build an orthoset from a list of orthogonal pairs.
    ///
    /// Pairs may appear in either order and duplicates are tolerated; a pair
    /// `(i, i)` or an index `>= n` is rejected, never silently fixed.
    pub fn new(n: usize, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        let mut rows = vec![SubsetMask::empty(n); n];
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::OutOfRange { index: a, n });
            }
            if b >= n {
                return Err(Error::OutOfRange { index: b, n });
            }
            if a == b {
                return Err(Error::SelfOrthogonal(a));
            }
            rows[a].insert(b);
            rows[b].insert(a);
        }
        Ok(Orthoset {
            n,
            rows,
            labels: None,
        })
    }

    /// Like [`new`](Self::new), with cosmetic element labels.
    pub fn with_labels(
        n: usize,
        pairs: &[(ElementId, ElementId)],
        labels: Vec<String>,
    ) -> Result<Self> {
        if labels.len() != n {
            return Err(Error::Parse(format!(
                "{} labels for a ground set of size {}",
                labels.len(),
                n
            )));
        }
        let mut set = Orthoset::new(n, pairs)?;
        set.labels = Some(labels);
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: ElementId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(ref l) = labels {
            assert_eq!(l.len(), self.n);
        }
        self.labels = labels;
    }

    pub fn is_orthogonal(&self, a: ElementId, b: ElementId) -> bool {
        self.rows[a].contains(b)
    }

    /// Everything orthogonal to `i` (the row `{i}^⊥`).
    pub fn neighbors(&self, i: ElementId) -> &SubsetMask {
        &self.rows[i]
    }

    /// Orthogonal pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.rows[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(SubsetMask::len).sum::<usize>() / 2
    }

    pub fn empty_set(&self) -> SubsetMask {
        SubsetMask::empty(self.n)
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// The orthogonal complement `F^⊥ = { x | ∀ y ∈ F, x ⊥ y }`.
    ///
    /// `∅^⊥ = E` by vacuous quantification. The result is always closed.
    pub fn orthocomplement(&self, f: &SubsetMask) -> ClosedSet {
        debug_assert_eq!(f.universe(), self.n);
        let mut acc = SubsetMask::full(self.n);
        for i in f.iter() {
            acc.intersect_with(&self.rows[i]);
        }
        ClosedSet { mask: acc }
    }

    /// The bi-orthogonal closure `F^⊥⊥`.
    pub fn closure(&self, f: &SubsetMask) -> ClosedSet {
        self.orthocomplement(self.orthocomplement(f).mask())
    }

    /// `true` iff `F = F^⊥⊥`.
    pub fn is_closed(&self, f: &SubsetMask) -> bool {
        self.closure(f).mask() == f
    }

    /// Render a subset using labels when present, e.g. `{a1, a2p}`.
    pub fn display_set(&self, f: &SubsetMask) -> String {
        let mut out = String::from("{");
        for (k, i) in f.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            match self.label(i) {
                Some(l) => out.push_str(l),
                None => out.push_str(&i.to_string()),
            }
        }
        out.push('}');
        out
    }
}

impl fmt::Debug for Orthoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orthoset(n={}, pairs={:?})", self.n, self.pairs())
    }
}
