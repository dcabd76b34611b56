//! Shared test support: an independent full-powerset oracle and the
//! instance corpus.
//!
//! The oracle works on its own `u32`-bitmask representation and consults the
//! orthoset only through `is_orthogonal`, so it shares no code with the
//! closure/bitset path it cross-checks.

#![allow(dead_code)]

use orthomat::*;

/// Closure table over the full powerset: `table[f]` = bits of `f^⊥⊥`.
/// Requires `n ≤ 16`.
pub struct PowersetOracle {
    pub n: usize,
    pub complement: Vec<u32>,
    pub closure: Vec<u32>,
}

impl PowersetOracle {
    pub fn build(m: &Orthoset) -> Self {
        let n = m.n();
        assert!(n <= 16, "powerset oracle is for small n");
        let size = 1usize << n;
        let mut complement = vec![0u32; size];
        for (f, entry) in complement.iter_mut().enumerate() {
            let mut acc = 0u32;
            'candidate: for x in 0..n {
                for y in 0..n {
                    if f >> y & 1 == 1 && !m.is_orthogonal(x, y) {
                        continue 'candidate;
                    }
                }
                acc |= 1 << x;
            }
            *entry = acc;
        }
        let closure = (0..size)
            .map(|f| complement[complement[f] as usize])
            .collect();
        PowersetOracle {
            n,
            complement,
            closure,
        }
    }

    /// Exchange property quantified over the whole powerset.
    pub fn exchange_holds(&self) -> bool {
        let size = 1usize << self.n;
        for f in 0..size {
            let cl_f = self.closure[f];
            for y in 0..self.n {
                let cl_fy = self.closure[f | 1 << y];
                let mut news = cl_fy & !cl_f;
                while news != 0 {
                    let x = news.trailing_zeros() as usize;
                    news &= news - 1;
                    if self.closure[f | 1 << x] >> y & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Straightening property quantified over the whole powerset.
    pub fn straightening_holds(&self) -> bool {
        let size = 1usize << self.n;
        for f in 0..size {
            let cl_f = self.closure[f];
            let perp = self.complement[f];
            for x in 0..self.n {
                if cl_f >> x & 1 == 1 {
                    continue;
                }
                let mut candidates = perp;
                let mut reached = false;
                while candidates != 0 {
                    let y = candidates.trailing_zeros() as usize;
                    candidates &= candidates - 1;
                    if self.closure[f | 1 << y] >> x & 1 == 1 {
                        reached = true;
                        break;
                    }
                }
                if !reached {
                    return false;
                }
            }
        }
        true
    }

    fn orthoindependent(&self, m: &Orthoset, set: u32) -> bool {
        let mut rest = set;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = set & !(1 << x);
            while others != 0 {
                let y = others.trailing_zeros() as usize;
                others &= others - 1;
                if !m.is_orthogonal(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Orthobasis axiom in its original completion form, quantified over the
    /// whole powerset: every orthoindependent `I ⊆ F^⊥⊥` extends to an
    /// orthoindependent `B` with `B^⊥⊥ = F^⊥⊥`. Exponential; for tiny `n`.
    pub fn orthobasis_holds(&self, m: &Orthoset) -> bool {
        let size = 1usize << self.n;
        for f in 0..size {
            let cl_f = self.closure[f];
            // I ranges over the subsets of cl(F)
            let mut i = cl_f;
            loop {
                if self.orthoindependent(m, i) {
                    // B = I ∪ ext with ext ⊆ cl(F) \ I (B ⊆ B^⊥⊥ = cl(F))
                    let room = cl_f & !i;
                    let mut ext = room;
                    let mut completed = false;
                    loop {
                        let b = i | ext;
                        if self.orthoindependent(m, b) && self.closure[b as usize] == cl_f {
                            completed = true;
                            break;
                        }
                        if ext == 0 {
                            break;
                        }
                        ext = (ext - 1) & room;
                    }
                    if !completed {
                        return false;
                    }
                }
                if i == 0 {
                    break;
                }
                i = (i - 1) & cl_f;
            }
        }
        true
    }
}

/// Subset mask from oracle bits.
pub fn mask_of_bits(n: usize, bits: u32) -> SubsetMask {
    SubsetMask::from_bits_u64(n, bits as u64)
}

/// The labeled orthomatroid catalog for `n ≤ 5`.
pub fn catalog_n5() -> Vec<Orthoset> {
    let mut out = Vec::new();
    for n in 0..=5 {
        out.extend(
            enumerate_orthomatroids(
                n,
                EnumOptions {
                    max_n: 5,
                    reduce_iso: false,
                },
            )
            .unwrap(),
        );
    }
    out
}

/// The Q^2 ray model of MO_2.
pub fn q2_mo2_rays() -> Orthoset {
    let vectors: Vec<Vec<num_bigint::BigInt>> = [[1, 0], [0, 1], [1, 1], [1, -1]]
        .iter()
        .map(|v| v.iter().map(|&c| num_bigint::BigInt::from(c)).collect())
        .collect();
    from_rays(&vectors, 2, IsotropicPolicy::Reject).unwrap().0
}

/// The Q^3 basis model of the discrete triangle.
pub fn q3_basis_rays() -> Orthoset {
    let vectors: Vec<Vec<num_bigint::BigInt>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        .iter()
        .map(|v| v.iter().map(|&c| num_bigint::BigInt::from(c)).collect())
        .collect();
    from_rays(&vectors, 3, IsotropicPolicy::Reject).unwrap().0
}

/// Generator instances named by the flagship acceptance criterion:
/// discrete(1..6), mo(1..5), disjoint unions of the small ones, and the two
/// ray models.
pub fn generator_corpus() -> Vec<Orthoset> {
    let mut out: Vec<Orthoset> = Vec::new();
    for n in 1..=6 {
        out.push(discrete(n));
    }
    for n in 1..=5 {
        out.push(mo(n));
    }
    let small: Vec<Orthoset> = vec![
        discrete(1),
        discrete(2),
        discrete(3),
        mo(1),
        mo(2),
        mo(3),
    ];
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            out.push(disjoint_union(&[a.clone(), b.clone()]));
        }
    }
    out.push(disjoint_union(&[mo(2), discrete(1), mo(1)]));
    out.push(q2_mo2_rays());
    out.push(q3_basis_rays());
    out
}

/// The full flagship corpus: catalog plus generator instances.
pub fn flagship_corpus() -> Vec<Orthoset> {
    let mut out = catalog_n5();
    out.extend(generator_corpus());
    out
}

/// The O6 benzene ring, loaded through the external-lattice JSON interface.
pub fn o6_lattice() -> OrthoLattice {
    orthomat::io::lattice_from_json_str(
        r#"{
            "nodes": ["0", "a", "b", "bp", "ap", "1"],
            "leq_pairs": [[0,1],[1,2],[2,5],[0,3],[3,4],[4,5]],
            "ortho": [5, 4, 3, 2, 1, 0]
        }"#,
    )
    .unwrap()
}
