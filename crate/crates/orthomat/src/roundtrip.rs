//! The equivalence between orthomatroids and propositional systems: the atom
//! orthoset `O(S)` of a lattice, simplification `O(L(M))`, and decision of
//! ortho- and lattice isomorphism.

use serde::Serialize;

use crate::axioms::is_orthomatroid;
use crate::error::{Error, Result};
use crate::lattice::{check_atomistic, is_propositional_system, OrthoLattice};
use crate::orthoset::Orthoset;
use crate::set::SubsetMask;

/// A bijection between the elements of two orthosets preserving ⊥ both ways.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoIso {
    pub mapping: Vec<usize>,
}

/// A bijection between the nodes of two lattices preserving the order both
/// ways and commuting with the orthocomplement.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeIso {
    pub mapping: Vec<usize>,
}

/// The orthoset `O(S)` of atoms of a propositional system, with
/// `p ⊥ q ⟺ p ≤ q^⊥`.
///
/// The precondition that `S` is a propositional system is checked, not
/// trusted; the covering law is checked in atom form since no ground orthoset
/// is assumed.
pub fn orthoset_of_lattice(s: &OrthoLattice) -> Result<Orthoset> {
    let report = is_propositional_system(s, None);
    if !report.is_propositional_system {
        return Err(Error::NotPropositionalSystem(Box::new(report)));
    }
    let atoms = s.atoms();
    let k = atoms.len();
    let mut pairs = Vec::new();
    for (ai, &a) in atoms.iter().enumerate() {
        for (bi, &b) in atoms.iter().enumerate().skip(ai + 1) {
            let forward = s.leq(a, s.ortho(b));
            debug_assert_eq!(forward, s.leq(b, s.ortho(a)));
            if forward {
                pairs.push((ai, bi));
            }
        }
    }
    let labels: Vec<String> = atoms.iter().map(|&a| s.node_label(a)).collect();
    Orthoset::with_labels(k, &pairs, labels)
}

/// `true` iff every singleton is closed.
pub fn is_simple(m: &Orthoset) -> bool {
    simplicity_violation(m).is_none()
}

/// First element whose singleton closure is larger than itself, with the
/// closure size.
pub(crate) fn simplicity_violation(m: &Orthoset) -> Option<(usize, usize)> {
    (0..m.n()).find_map(|x| {
        let size = m.closure(&SubsetMask::singleton(m.n(), x)).len();
        (size != 1).then_some((x, size))
    })
}

/// Simplify an orthomatroid: `O(L(M))`, together with the quotient map
/// sending `x` to the atom `{x}^⊥⊥` of `L(M)`.
pub fn simplify(m: &Orthoset) -> Result<(Orthoset, Vec<usize>)> {
    let report = is_orthomatroid(m);
    if !report.holds() {
        return Err(Error::NotOrthomatroid(Box::new(report)));
    }
    let lattice = OrthoLattice::from_orthoset(m)?;
    let simple = orthoset_of_lattice(&lattice)?;
    let quotient: Vec<usize> = (0..m.n())
        .map(|x| {
            let node = lattice
                .node_of(m.closure(&SubsetMask::singleton(m.n(), x)).mask())
                .expect("singleton closure is a node");
            lattice
                .atoms()
                .binary_search(&node)
                .expect("singleton closure of an orthomatroid element is an atom")
        })
        .collect();
    Ok((simple, quotient))
}

/// Deterministic backtracking isomorphism search over adjacency rows.
/// Vertices of the first graph are assigned in ascending order; candidates
/// are tried in ascending order. The visitor returns `true` to stop.
pub(crate) fn graph_iso_search(
    rows1: &[SubsetMask],
    rows2: &[SubsetMask],
    visit: &mut impl FnMut(&[usize]) -> bool,
) {
    let n = rows1.len();
    if n != rows2.len() {
        return;
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    let degrees1: Vec<usize> = rows1.iter().map(SubsetMask::len).collect();
    let degrees2: Vec<usize> = rows2.iter().map(SubsetMask::len).collect();
    let signature = |rows: &[SubsetMask], degrees: &[usize], v: usize| -> Vec<usize> {
        let mut sig: Vec<usize> = rows[v].iter().map(|u| degrees[u]).collect();
        sig.sort_unstable();
        sig
    };
    let sig1: Vec<Vec<usize>> = (0..n).map(|v| signature(rows1, &degrees1, v)).collect();
    let sig2: Vec<Vec<usize>> = (0..n).map(|v| signature(rows2, &degrees2, v)).collect();
    {
        let mut all1 = sig1.clone();
        let mut all2 = sig2.clone();
        all1.sort_unstable();
        all2.sort_unstable();
        if all1 != all2 {
            return;
        }
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        k: usize,
        rows1: &[SubsetMask],
        rows2: &[SubsetMask],
        sig1: &[Vec<usize>],
        sig2: &[Vec<usize>],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = rows1.len();
        if k == n {
            return visit(mapping);
        }
        for candidate in 0..n {
            if used[candidate] || sig1[k] != sig2[candidate] {
                continue;
            }
            if (0..k).any(|u| rows1[k].contains(u) != rows2[candidate].contains(mapping[u])) {
                continue;
            }
            mapping[k] = candidate;
            used[candidate] = true;
            if extend(k + 1, rows1, rows2, sig1, sig2, mapping, used, visit) {
                return true;
            }
            used[candidate] = false;
            mapping[k] = usize::MAX;
        }
        false
    }

    extend(0, rows1, rows2, &sig1, &sig2, &mut mapping, &mut used, visit);
}

/// A witnessing bijection with `x ⊥₁ y ⟺ φ(x) ⊥₂ φ(y)`, or `None`.
pub fn ortho_isomorphic(m1: &Orthoset, m2: &Orthoset) -> Option<OrthoIso> {
    if m1.n() != m2.n() || m1.pair_count() != m2.pair_count() {
        return None;
    }
    let rows1: Vec<SubsetMask> = (0..m1.n()).map(|i| m1.neighbors(i).clone()).collect();
    let rows2: Vec<SubsetMask> = (0..m2.n()).map(|i| m2.neighbors(i).clone()).collect();
    let mut found = None;
    graph_iso_search(&rows1, &rows2, &mut |mapping| {
        found = Some(OrthoIso {
            mapping: mapping.to_vec(),
        });
        true
    });
    found
}

/// Short human-readable reason why two orthosets cannot be isomorphic, for
/// diagnostics; `None` when the cheap invariants all match.
pub fn ortho_iso_obstruction(m1: &Orthoset, m2: &Orthoset) -> Option<String> {
    if m1.n() != m2.n() {
        return Some(format!("element counts differ: {} vs {}", m1.n(), m2.n()));
    }
    if m1.pair_count() != m2.pair_count() {
        return Some(format!(
            "orthogonal pair counts differ: {} vs {}",
            m1.pair_count(),
            m2.pair_count()
        ));
    }
    let degs = |m: &Orthoset| {
        let mut d: Vec<usize> = (0..m.n()).map(|i| m.neighbors(i).len()).collect();
        d.sort_unstable();
        d
    };
    let d1 = degs(m1);
    let d2 = degs(m2);
    if d1 != d2 {
        return Some(format!("degree sequences differ: {:?} vs {:?}", d1, d2));
    }
    None
}

/// An order-and-ortho-preserving bijection between two lattices, or `None`.
///
/// When both lattices are atomistic, an isomorphism restricts to an
/// isomorphism of atom orthosets and is recovered from it by joins, so the
/// search runs over atom bijections; otherwise nodes are matched by direct
/// backtracking.
pub fn lattice_isomorphic(l1: &OrthoLattice, l2: &OrthoLattice) -> Option<LatticeIso> {
    let count = l1.node_count();
    if count != l2.node_count() || l1.atoms().len() != l2.atoms().len() {
        return None;
    }
    if l1.hasse().len() != l2.hasse().len() {
        return None;
    }
    if check_atomistic(l1).holds && check_atomistic(l2).holds {
        lattice_iso_by_atoms(l1, l2)
    } else {
        lattice_iso_by_nodes(l1, l2)
    }
}

fn atom_adjacency(l: &OrthoLattice) -> Option<Vec<SubsetMask>> {
    let atoms = l.atoms();
    let k = atoms.len();
    let mut rows = vec![SubsetMask::empty(k); k];
    for (ai, &a) in atoms.iter().enumerate() {
        for (bi, &b) in atoms.iter().enumerate() {
            let orthogonal = l.leq(a, l.ortho(b));
            if ai == bi && orthogonal {
                // a self-orthogonal atom: not an orthogonality relation
                return None;
            }
            if orthogonal != l.leq(b, l.ortho(a)) {
                return None;
            }
            if ai != bi && orthogonal {
                rows[ai].insert(bi);
            }
        }
    }
    Some(rows)
}

fn lattice_iso_by_atoms(l1: &OrthoLattice, l2: &OrthoLattice) -> Option<LatticeIso> {
    let (rows1, rows2) = match (atom_adjacency(l1), atom_adjacency(l2)) {
        (Some(a), Some(b)) => (a, b),
        // Ortho is not a symmetric anti-reflexive relation on atoms; fall
        // back to plain node matching.
        _ => return lattice_iso_by_nodes(l1, l2),
    };
    let mut found = None;
    graph_iso_search(&rows1, &rows2, &mut |atom_map| {
        if let Some(iso) = extend_atom_iso(l1, l2, atom_map) {
            found = Some(iso);
            true
        } else {
            false
        }
    });
    found
}

/// Extend an atom bijection to the whole lattice by joins and verify it.
fn extend_atom_iso(l1: &OrthoLattice, l2: &OrthoLattice, atom_map: &[usize]) -> Option<LatticeIso> {
    let count = l1.node_count();
    let atoms1 = l1.atoms();
    let atoms2 = l2.atoms();
    let mut mapping = vec![usize::MAX; count];
    for i in 0..count {
        let mut image = l2.bottom();
        for (ai, &a) in atoms1.iter().enumerate() {
            if l1.leq(a, i) {
                image = l2.join(image, atoms2[atom_map[ai]]);
            }
        }
        mapping[i] = image;
    }
    verify_lattice_iso(l1, l2, &mapping).then_some(LatticeIso { mapping })
}

fn verify_lattice_iso(l1: &OrthoLattice, l2: &OrthoLattice, mapping: &[usize]) -> bool {
    let count = l1.node_count();
    let mut hit = vec![false; count];
    for &img in mapping {
        if img >= count || hit[img] {
            return false;
        }
        hit[img] = true;
    }
    for (i, &img) in mapping.iter().enumerate() {
        if mapping[l1.ortho(i)] != l2.ortho(img) {
            return false;
        }
        for (j, &jmg) in mapping.iter().enumerate() {
            if l1.leq(i, j) != l2.leq(img, jmg) {
                return false;
            }
        }
    }
    true
}

fn lattice_iso_by_nodes(l1: &OrthoLattice, l2: &OrthoLattice) -> Option<LatticeIso> {
    let count = l1.node_count();
    let profile = |l: &OrthoLattice, i: usize| -> (usize, usize, bool) {
        (
            l.atoms_below(i).len(),
            (0..count).filter(|&j| l.leq(i, j)).count(),
            l.is_atom(i),
        )
    };
    let prof1: Vec<_> = (0..count).map(|i| profile(l1, i)).collect();
    let prof2: Vec<_> = (0..count).map(|i| profile(l2, i)).collect();

    let mut mapping = vec![usize::MAX; count];
    let mut used = vec![false; count];

    fn extend(
        k: usize,
        l1: &OrthoLattice,
        l2: &OrthoLattice,
        prof1: &[(usize, usize, bool)],
        prof2: &[(usize, usize, bool)],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let count = l1.node_count();
        if k == count {
            return verify_lattice_iso(l1, l2, mapping);
        }
        for candidate in 0..count {
            if used[candidate] || prof1[k] != prof2[candidate] {
                continue;
            }
            let consistent = (0..k).all(|u| {
                l1.leq(k, u) == l2.leq(candidate, mapping[u])
                    && l1.leq(u, k) == l2.leq(mapping[u], candidate)
                    && (l1.ortho(u) != k || l2.ortho(mapping[u]) == candidate)
                    && (l1.ortho(k) != u || l2.ortho(candidate) == mapping[u])
            });
            if !consistent {
                continue;
            }
            mapping[k] = candidate;
            used[candidate] = true;
            if extend(k + 1, l1, l2, prof1, prof2, mapping, used) {
                return true;
            }
            used[candidate] = false;
            mapping[k] = usize::MAX;
        }
        false
    }

    extend(0, l1, l2, &prof1, &prof2, &mut mapping, &mut used)
        .then_some(LatticeIso { mapping })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{discrete, mo};

    fn path3() -> Orthoset {
        Orthoset::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn o_of_boolean_cube_is_discrete_triangle() {
        let l = OrthoLattice::from_orthoset(&discrete(3)).unwrap();
        let o = orthoset_of_lattice(&l).unwrap();
        assert!(ortho_isomorphic(&o, &discrete(3)).is_some());
    }

    #[test]
    fn o_of_mo2_lattice_is_mo2() {
        let l = OrthoLattice::from_orthoset(&mo(2)).unwrap();
        let o = orthoset_of_lattice(&l).unwrap();
        assert!(ortho_isomorphic(&o, &mo(2)).is_some());
    }

    #[test]
    fn o6_is_rejected() {
        let o6 = crate::lattice::tests::o6();
        match orthoset_of_lattice(&o6) {
            Err(Error::NotPropositionalSystem(report)) => {
                assert!(!report.orthomodular.holds);
            }
            other => panic!("expected NotPropositionalSystem, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn simplicity_fixtures() {
        assert!(is_simple(&mo(3)));
        assert!(is_simple(&discrete(4)));
        assert!(!is_simple(&path3()));
        assert_eq!(simplicity_violation(&path3()), Some((0, 2)));
    }

    #[test]
    fn simplify_path_merges_the_closure_pair() {
        let (simple, quotient) = simplify(&path3()).unwrap();
        assert_eq!(simple.n(), 2);
        assert_eq!(simple.pair_count(), 1);
        // a and c collapse to the same atom, b to the other
        assert_eq!(quotient[0], quotient[2]);
        assert_ne!(quotient[0], quotient[1]);
    }

    #[test]
    fn simplify_fixes_simple_orthomatroids() {
        let m = mo(3);
        let (simple, quotient) = simplify(&m).unwrap();
        assert!(ortho_isomorphic(&simple, &m).is_some());
        let mut seen = quotient.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), m.n(), "quotient map is a bijection");
    }

    #[test]
    fn simplify_rejects_non_orthomatroids() {
        let m = Orthoset::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(simplify(&m), Err(Error::NotOrthomatroid(_))));
    }

    #[test]
    fn ortho_iso_finds_relabelings() {
        let m = mo(2);
        // permuted copy: swap pair roles and partners
        let p = Orthoset::new(4, &[(2, 0), (3, 1)]).unwrap();
        let iso = ortho_isomorphic(&m, &p).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(
                    m.is_orthogonal(x, y),
                    p.is_orthogonal(iso.mapping[x], iso.mapping[y])
                );
            }
        }
    }

    #[test]
    fn ortho_iso_distinguishes_non_isomorphic() {
        assert!(ortho_isomorphic(&mo(2), &discrete(4)).is_none());
        assert!(ortho_iso_obstruction(&mo(2), &discrete(4)).is_some());
        assert!(ortho_isomorphic(&discrete(3), &path3()).is_none());
    }

    #[test]
    fn lattice_round_trip_mo3() {
        let s = OrthoLattice::from_orthoset(&mo(3)).unwrap();
        let o = orthoset_of_lattice(&s).unwrap();
        let ls = OrthoLattice::from_orthoset(&o).unwrap();
        assert!(lattice_isomorphic(&ls, &s).is_some());
    }

    #[test]
    fn lattice_iso_rejects_different_shapes() {
        // Boolean 2^3 and L(MO_3) both have 8 nodes but different structure.
        let cube = OrthoLattice::from_orthoset(&discrete(3)).unwrap();
        let lantern = OrthoLattice::from_orthoset(&mo(3)).unwrap();
        assert_eq!(cube.node_count(), lantern.node_count());
        assert!(lattice_isomorphic(&cube, &lantern).is_none());
    }

    #[test]
    fn lattice_iso_identity() {
        let l = OrthoLattice::from_orthoset(&mo(2)).unwrap();
        let l2 = OrthoLattice::from_orthoset(&mo(2)).unwrap();
        let iso = lattice_isomorphic(&l, &l2).unwrap();
        assert_eq!(iso.mapping, (0..l.node_count()).collect::<Vec<_>>());
    }
}
