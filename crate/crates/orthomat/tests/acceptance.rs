//! Acceptance suite. One test per criterion; each prints a PASS line with
//! its measured scope (run with `--nocapture` to see them). Criterion 10
//! (CLI byte-determinism) lives in the CLI crate's acceptance suite.

mod common;

use std::time::Instant;

use common::PowersetOracle;
use orthomat::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DENSITIES: [f64; 4] = [0.1, 0.3, 0.5, 0.9];

#[test]
fn criterion_01_universal_law_suite() {
    let start = Instant::now();
    let mut law_reports = 0usize;
    for i in 0..200u64 {
        let n = (i % 10) as usize + 1;
        let density = DENSITIES[(i % 4) as usize];
        let m = random_orthoset(n, density, 7000 + i);
        for report in check_galois(&m, DEFAULT_EXHAUSTIVE_LIMIT)
            .into_iter()
            .chain(check_closure_laws(&m, DEFAULT_EXHAUSTIVE_LIMIT))
        {
            assert!(
                report.holds,
                "law {:?} failed on instance {} (n={}, density={})",
                report.law, i, n, density
            );
            assert!(
                report.exhaustive,
                "law {:?} was sampled at n={} — must be exhaustive for n ≤ 10",
                report.law, n
            );
            law_reports += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "universal-law suite took {elapsed:?}, budget is 10 s"
    );
    println!(
        "ACCEPTANCE 1 (universal-law suite): PASS — 200 orthosets, {law_reports} exhaustive law reports in {elapsed:?}"
    );
}

#[test]
fn criterion_02_powerset_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut run = |m: &Orthoset| {
        let oracle = PowersetOracle::build(m);
        assert_eq!(
            check_exchange(m).holds,
            oracle.exchange_holds(),
            "EP verdict mismatch on {:?}",
            m
        );
        assert_eq!(
            check_straightening(m).holds,
            oracle.straightening_holds(),
            "SP verdict mismatch on {:?}",
            m
        );
        checked += 1;
    };
    for n in 0..=5 {
        for m in enumerate_orthosets(n) {
            run(&m);
        }
    }
    for i in 0..100u64 {
        let n = 8 + (i % 5) as usize; // 8..=12
        let density = DENSITIES[(i % 4) as usize];
        run(&random_orthoset(n, density, 9000 + i));
    }
    println!(
        "ACCEPTANCE 2 (powerset-oracle equivalence): PASS — {checked} instances, exact verdict match, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_03_sp_iff_ob_under_ep() {
    let start = Instant::now();
    let mut ep_instances = 0usize;
    for n in 0..=5 {
        for m in enumerate_orthosets(n) {
            if !check_exchange(&m).holds {
                continue;
            }
            ep_instances += 1;
            let sp = check_straightening(&m);
            let ob = check_orthobasis_axiom(&m);
            assert_eq!(
                sp.holds, ob.holds,
                "SP/OB discrepancy on {:?}: SP={}, OB={}",
                m, sp.holds, ob.holds
            );
        }
    }
    println!(
        "ACCEPTANCE 3 (SP ⇔ OB under EP): PASS — {ep_instances} EP-satisfying orthosets with n ≤ 5, zero discrepancies, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_04_flagship_every_orthomatroid_lattice_is_a_propositional_system() {
    let start = Instant::now();
    let corpus = common::flagship_corpus();
    for m in &corpus {
        assert!(
            is_orthomatroid(m).holds(),
            "corpus member is not an orthomatroid: {:?}",
            m
        );
        let lattice = OrthoLattice::from_orthoset(m).unwrap();
        let report = is_propositional_system(&lattice, Some(m));
        assert!(
            report.is_propositional_system,
            "L(M) is not a propositional system for {:?}: {} fails",
            m,
            report.first_failure()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "flagship suite took {elapsed:?}, budget is 60 s"
    );
    println!(
        "ACCEPTANCE 4 (flagship theorem): PASS — {} orthomatroids, every L(M) certified, {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn criterion_05_round_trip_o_of_s_reconstructs_s() {
    let start = Instant::now();
    let corpus = common::flagship_corpus();
    for m in &corpus {
        let s = OrthoLattice::from_orthoset(m).unwrap();
        let o = orthoset_of_lattice(&s).unwrap_or_else(|e| {
            panic!("O(S) rejected for corpus member {:?}: {e}", m);
        });
        assert!(
            is_orthomatroid(&o).holds(),
            "O(S) is not an orthomatroid for {:?}",
            m
        );
        let ls = OrthoLattice::from_orthoset(&o).unwrap();
        assert!(
            lattice_isomorphic(&ls, &s).is_some(),
            "L(O(S)) is not isomorphic to S for {:?}",
            m
        );
    }
    println!(
        "ACCEPTANCE 5 (round-trip): PASS — {} systems, L(O(S)) ≅ S throughout, {:?}",
        corpus.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_06_simplification() {
    let start = Instant::now();
    let path3 = Orthoset::new(3, &[(0, 1), (1, 2)]).unwrap();
    let (simple_path, _) = simplify(&path3).unwrap();
    assert_eq!(simple_path.n(), 2);

    let corpus = common::flagship_corpus();
    for m in &corpus {
        let (simple, quotient) = simplify(m).unwrap();
        assert!(is_simple(&simple), "simplify({:?}) is not simple", m);
        assert_eq!(quotient.len(), m.n());
        // quotient preserves orthogonality
        for (a, b) in m.pairs() {
            assert!(simple.is_orthogonal(quotient[a], quotient[b]));
        }
        // closure lattices correspond node for node
        let l_m = OrthoLattice::from_orthoset(m).unwrap();
        let l_s = OrthoLattice::from_orthoset(&simple).unwrap();
        assert!(
            lattice_isomorphic(&l_s, &l_m).is_some(),
            "L(simplify(M)) ≇ L(M) for {:?}",
            m
        );
        // idempotence up to orthoisomorphism
        let (twice, _) = simplify(&simple).unwrap();
        assert!(
            ortho_isomorphic(&twice, &simple).is_some(),
            "simplify is not idempotent on {:?}",
            m
        );
    }
    println!(
        "ACCEPTANCE 6 (simplification): PASS — {} orthomatroids simplified and verified, {:?}",
        corpus.len() + 1,
        start.elapsed()
    );
}

#[test]
fn criterion_07_rank_fixtures_and_additivity() {
    let start = Instant::now();
    for n in 0..=6 {
        let m = discrete(n);
        assert_eq!(rank(&m, &m.full_set()).unwrap().0, n);
    }
    for n in 1..=5 {
        let m = mo(n);
        assert_eq!(rank(&m, &m.full_set()).unwrap().0, 2);
    }
    let catalog = common::catalog_n5();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7A77);
    for _ in 0..20 {
        let a = &catalog[rng.random_range(0..catalog.len())];
        let b = &catalog[rng.random_range(0..catalog.len())];
        let u = disjoint_union(&[a.clone(), b.clone()]);
        let rank_a = rank(a, &a.full_set()).unwrap().0;
        let rank_b = rank(b, &b.full_set()).unwrap().0;
        let rank_u = rank(&u, &u.full_set()).unwrap().0;
        assert_eq!(
            rank_u,
            rank_a + rank_b,
            "rank not additive for {:?} ⊎ {:?}",
            a,
            b
        );
    }
    println!(
        "ACCEPTANCE 7 (rank fixtures + additivity): PASS — discrete/MO fixtures and 20 random union pairs, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_08_irreducibility_fixtures() {
    let start = Instant::now();
    for n in 1..=6 {
        assert_eq!(components(&discrete(n)).unwrap().block_count(), n);
    }
    // MO_1 is the classical two-point bit (= discrete(2)) with two
    // components; the lantern is irreducible from n = 2 up.
    for n in 2..=5 {
        assert_eq!(components(&mo(n)).unwrap().block_count(), 1, "MO_{n}");
    }
    // ∼ transitivity across the corpus: no NotTransitive anywhere
    let mut partitioned = 0usize;
    for m in common::flagship_corpus() {
        match components(&m) {
            Ok(partition) => {
                partitioned += 1;
                // blocks partition E
                let mut covered = m.empty_set();
                for block in &partition.blocks {
                    assert!(covered.is_disjoint(block));
                    covered = covered.union(block);
                }
                assert_eq!(covered, m.full_set());
            }
            Err(Error::NotSimple { .. }) => {} // non-simple corpus members are out of ∼'s domain
            Err(e) => panic!("components failed on {:?}: {e}", m),
        }
    }
    println!(
        "ACCEPTANCE 8 (irreducibility fixtures): PASS — block counts verified, {partitioned} simple corpus members partitioned with zero NotTransitive errors, {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_09_negative_controls() {
    let start = Instant::now();
    // edge plus isolated vertex fails EP with the documented witness
    let m = Orthoset::new(3, &[(0, 1)]).unwrap();
    let ep = check_exchange(&m);
    assert!(!ep.holds);
    let w = ep.witness.unwrap();
    assert_eq!((w.f.as_slice(), w.x, w.y), (&[][..], Some(0), Some(2)));
    // the witness is genuine: 0 ∈ closure({2}) = E but 2 ∉ closure({0}) = {0}
    assert_eq!(m.closure(&SubsetMask::singleton(3, 2)).len(), 3);
    assert!(!m.closure(&SubsetMask::singleton(3, 0)).contains(2));

    // O6, loaded through the external lattice interface, fails orthomodularity
    let o6 = common::o6_lattice();
    let verdict = check_orthomodular(&o6);
    assert!(!verdict.holds);
    let witness = verdict.witness.unwrap();
    let (p, q) = (witness.nodes[0], witness.nodes[1]);
    assert!(o6.leq(p, q));
    assert_ne!(o6.meet(q, o6.join(p, o6.ortho(q))), p, "witness re-evaluates");
    assert_eq!(o6.node_label(p), "a");
    assert_eq!(o6.node_label(q), "b");

    // and is rejected by orthoset_of_lattice
    match orthoset_of_lattice(&o6) {
        Err(Error::NotPropositionalSystem(report)) => {
            assert!(!report.orthomodular.holds);
            assert!(!report.is_propositional_system);
        }
        other => panic!(
            "expected NotPropositionalSystem, got {:?}",
            other.map(|_| ())
        ),
    }
    println!(
        "ACCEPTANCE 9 (negative controls): PASS — EP witness (∅, x=0, y=2) and O6 orthomodularity witness (a, b) verified, {:?}",
        start.elapsed()
    );
}
