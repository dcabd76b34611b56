//! Property tests for the invariants that hold on every orthoset, and for
//! the generator/roundtrip contracts.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use orthomat::*;

/// Strategy: a random orthoset together with independently drawn subsets.
fn orthoset_strategy(max_n: usize) -> impl Strategy<Value = Orthoset> {
    (0..=max_n, 0u64..u64::MAX).prop_map(|(n, seed)| {
        let density = (seed % 97) as f64 / 96.0;
        random_orthoset(n, density, seed)
    })
}

fn subset_of(n: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), n)
}

fn to_mask(n: usize, picks: &[bool]) -> SubsetMask {
    let mut mask = SubsetMask::empty(n);
    for (i, &p) in picks.iter().enumerate() {
        if p {
            mask.insert(i);
        }
    }
    mask
}

proptest! {
    #[test]
    fn closure_is_extensive_monotone_idempotent(
        (m, f_picks, g_picks) in orthoset_strategy(14).prop_flat_map(|m| {
            let n = m.n();
            (Just(m), subset_of(n), subset_of(n))
        })
    ) {
        let f = to_mask(m.n(), &f_picks);
        let g = to_mask(m.n(), &g_picks).union(&f);
        let cl_f = m.closure(&f);
        prop_assert!(f.is_subset(cl_f.mask()));
        prop_assert!(cl_f.mask().is_subset(m.closure(&g).mask()));
        prop_assert_eq!(m.closure(cl_f.mask()), cl_f);
    }

    #[test]
    fn galois_adjunction_and_disjointness(
        (m, f_picks, g_picks) in orthoset_strategy(14).prop_flat_map(|m| {
            let n = m.n();
            (Just(m), subset_of(n), subset_of(n))
        })
    ) {
        let f = to_mask(m.n(), &f_picks);
        let g = to_mask(m.n(), &g_picks);
        let f_perp = m.orthocomplement(&f);
        let g_perp = m.orthocomplement(&g);
        prop_assert!(f.is_disjoint(f_perp.mask()));
        prop_assert_eq!(g.is_subset(f_perp.mask()), f.is_subset(g_perp.mask()));
        // complement only sees the closure
        prop_assert_eq!(m.orthocomplement(m.closure(&f).mask()), f_perp);
    }

    #[test]
    fn intersections_of_closed_sets_are_closed(
        (m, f_picks, g_picks) in orthoset_strategy(12).prop_flat_map(|m| {
            let n = m.n();
            (Just(m), subset_of(n), subset_of(n))
        })
    ) {
        let p = m.closure(&to_mask(m.n(), &f_picks)).into_mask();
        let q = m.closure(&to_mask(m.n(), &g_picks)).into_mask();
        prop_assert!(m.is_closed(&p.intersection(&q)));
    }

    #[test]
    fn orthoindependent_implies_independent(
        (m, picks) in orthoset_strategy(10).prop_flat_map(|m| {
            let n = m.n();
            (Just(m), subset_of(n))
        })
    ) {
        let f = to_mask(m.n(), &picks);
        if is_orthoindependent(&m, &f) {
            prop_assert!(is_independent(&m, &f));
        }
    }

    #[test]
    fn ray_canonicalization_is_scale_invariant(
        coords in prop::collection::vec(-40i64..=40, 1..=5),
        k in prop_oneof![(-7i64..=7).prop_filter("nonzero", |&k| k != 0)],
    ) {
        prop_assume!(coords.iter().any(|&c| c != 0));
        let v: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        let kv: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c * k)).collect();
        let a = Ray::new(v).unwrap();
        let b = Ray::new(kv).unwrap();
        prop_assert_eq!(&a, &b);
        // idempotence
        let again = Ray::new(a.coords().to_vec()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn gaussian_inner_products_are_conjugate_symmetric(
        a in prop::collection::vec((-9i64..=9, -9i64..=9), 3),
        b in prop::collection::vec((-9i64..=9, -9i64..=9), 3),
    ) {
        let x: Vec<GaussInt> = a.iter().map(|&(re, im)| GaussInt::new(re, im)).collect();
        let y: Vec<GaussInt> = b.iter().map(|&(re, im)| GaussInt::new(re, im)).collect();
        let xy = rays::inner(&x, &y);
        let yx = rays::inner(&y, &x);
        prop_assert_eq!(xy.conjugate(), yx);
    }

    #[test]
    fn disjoint_union_of_small_orthomatroids_is_an_orthomatroid(
        i in 0usize..8, j in 0usize..8,
    ) {
        let parts = [
            discrete(0), discrete(1), discrete(2), discrete(3),
            mo(1), mo(2), mo(3),
            Orthoset::new(3, &[(0, 1), (1, 2)]).unwrap(),
        ];
        let u = disjoint_union(&[parts[i].clone(), parts[j].clone()]);
        prop_assert!(is_orthomatroid(&u).holds());
    }

    #[test]
    fn ortho_isomorphism_is_reflexive_and_symmetric(m in orthoset_strategy(7)) {
        let identity = ortho_isomorphic(&m, &m).unwrap();
        prop_assert_eq!(identity.mapping.len(), m.n());
        // relabel by rotation and invert the found mapping
        let n = m.n();
        if n > 0 {
            let rotated_pairs: Vec<(usize, usize)> = m
                .pairs()
                .iter()
                .map(|&(a, b)| ((a + 1) % n, (b + 1) % n))
                .collect();
            let rotated = Orthoset::new(n, &rotated_pairs).unwrap();
            let forward = ortho_isomorphic(&m, &rotated).unwrap();
            let backward = ortho_isomorphic(&rotated, &m).unwrap();
            for x in 0..n {
                for y in 0..n {
                    prop_assert_eq!(
                        m.is_orthogonal(x, y),
                        rotated.is_orthogonal(forward.mapping[x], forward.mapping[y])
                    );
                    prop_assert_eq!(
                        rotated.is_orthogonal(x, y),
                        m.is_orthogonal(backward.mapping[x], backward.mapping[y])
                    );
                }
            }
        }
    }
}

#[test]
fn ortho_isomorphism_transitive_on_sampled_triples() {
    // three relabelings of the same instance: composing witnesses stays a witness
    for seed in [1u64, 9, 23] {
        let m = random_orthoset(6, 0.4, seed);
        let relabel = |shift: usize| {
            let pairs: Vec<(usize, usize)> = m
                .pairs()
                .iter()
                .map(|&(a, b)| ((a + shift) % 6, (b + shift) % 6))
                .collect();
            Orthoset::new(6, &pairs).unwrap()
        };
        let m2 = relabel(2);
        let m3 = relabel(4);
        let ab = ortho_isomorphic(&m, &m2).unwrap();
        let bc = ortho_isomorphic(&m2, &m3).unwrap();
        let composed: Vec<usize> = (0..6).map(|x| bc.mapping[ab.mapping[x]]).collect();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(
                    m.is_orthogonal(x, y),
                    m3.is_orthogonal(composed[x], composed[y])
                );
            }
        }
    }
}

#[test]
fn atoms_of_simple_orthoset_lattices_are_the_singletons() {
    for m in [mo(2), mo(4), discrete(5), common::q2_mo2_rays()] {
        assert!(is_simple(&m));
        let l = OrthoLattice::from_orthoset(&m).unwrap();
        let mut atom_sets: Vec<Vec<usize>> = l
            .atoms()
            .iter()
            .map(|&a| l.node_set(a).unwrap().to_vec())
            .collect();
        atom_sets.sort();
        let singletons: Vec<Vec<usize>> = (0..m.n()).map(|x| vec![x]).collect();
        assert_eq!(atom_sets, singletons);
    }
}

#[test]
fn mo1_lattice_is_the_four_element_boolean_algebra() {
    let l = OrthoLattice::from_orthoset(&mo(1)).unwrap();
    assert_eq!(l.node_count(), 4);
    let cube = OrthoLattice::from_orthoset(&discrete(2)).unwrap();
    assert!(lattice_isomorphic(&l, &cube).is_some());
}

#[test]
fn de_morgan_holds_over_all_closed_pairs() {
    // (P ∨ Q)^⊥ = P^⊥ ∧ Q^⊥ on lattices from orthosets, orthomatroid or not
    for m in [
        mo(3),
        discrete(4),
        Orthoset::new(3, &[(0, 1)]).unwrap(),
        random_orthoset(8, 0.3, 77),
    ] {
        let l = OrthoLattice::from_orthoset(&m).unwrap();
        for p in 0..l.node_count() {
            for q in 0..l.node_count() {
                assert_eq!(
                    l.ortho(l.join(p, q)),
                    l.meet(l.ortho(p), l.ortho(q))
                );
            }
        }
    }
}
