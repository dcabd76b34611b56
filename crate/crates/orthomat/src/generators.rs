//! Orthoset instances: the canonical families (discrete, MO_n), exact
//! ray systems over inner-product spaces, seeded random orthosets, and the
//! exhaustive small-instance catalogs used as oracle corpora.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::is_orthomatroid;
use crate::error::{Error, Result};
use crate::orthoset::Orthoset;
use crate::rays::{inner, FormKind, FormSpec, FormScalar, GaussInt, IsotropicPolicy, Ray};
use crate::roundtrip::ortho_isomorphic;

/// All distinct pairs orthogonal: the classical (Boolean) instance of rank `n`.
pub fn discrete(n: usize) -> Orthoset {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    Orthoset::new(n, &pairs).expect("generated pairs are valid")
}

/// MO_n: `2n` elements in `n` orthogonal pairs `(2i, 2i+1)` and nothing else.
/// Irreducible of rank 2 for every `n ≥ 1`.
pub fn mo(n: usize) -> Orthoset {
    assert!(n >= 1, "MO_n requires n >= 1");
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    let labels: Vec<String> = (0..n)
        .flat_map(|i| [format!("a{}", i + 1), format!("a{}p", i + 1)])
        .collect();
    Orthoset::with_labels(2 * n, &pairs, labels).expect("generated pairs are valid")
}

/// Each unordered pair orthogonal independently with probability `density`,
/// reproducible from `seed`. Pairs are drawn in lexicographic order.
pub fn random_orthoset(n: usize, density: f64, seed: u64) -> Orthoset {
    assert!((0.0..=1.0).contains(&density), "density in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < density {
                pairs.push((i, j));
            }
        }
    }
    Orthoset::new(n, &pairs).expect("generated pairs are valid")
}

/// Hard cap on `enumerate_orthosets`: `2^(n(n-1)/2)` relations must fit a u64
/// shift and stay enumerable.
const ENUM_HARD_CAP: usize = 7;

/// Every orthoset on `n` labeled elements, in lexicographic order of the
/// relation bitstring over pairs `(0,1), (0,2), …` (pairs in lexicographic
/// order, bit k = pair k).
pub fn enumerate_orthosets(n: usize) -> Vec<Orthoset> {
    assert!(
        n <= ENUM_HARD_CAP,
        "2^(n(n-1)/2) relations is out of reach for n = {n}"
    );
    let pair_list: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let bits = pair_list.len();
    (0u64..(1u64 << bits))
        .map(|code| {
            let chosen: Vec<(usize, usize)> = pair_list
                .iter()
                .enumerate()
                .filter(|&(k, _)| code >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Orthoset::new(n, &chosen).expect("enumerated pairs are valid")
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Refuse to enumerate above this ground-set size.
    pub max_n: usize,
    /// Keep one representative per orthoisomorphism class (the
    /// lexicographically least relation bitstring).
    pub reduce_iso: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_n: 5,
            reduce_iso: false,
        }
    }
}

/// All orthosets on `n` labeled elements that pass `is_orthomatroid`,
/// optionally reduced up to orthoisomorphism.
pub fn enumerate_orthomatroids(n: usize, options: EnumOptions) -> Result<Vec<Orthoset>> {
    if n > options.max_n {
        return Err(Error::EnumerationBound {
            n,
            bound: options.max_n,
        });
    }
    let mut out: Vec<Orthoset> = Vec::new();
    for m in enumerate_orthosets(n) {
        if !is_orthomatroid(&m).holds() {
            continue;
        }
        if options.reduce_iso && out.iter().any(|kept| ortho_isomorphic(kept, &m).is_some()) {
            continue;
        }
        out.push(m);
    }
    Ok(out)
}

/// Build the orthoset of a list of rays under the exact inner product.
///
/// Vectors are canonicalized to rays and deduplicated (first occurrence
/// wins); the resulting ground set is labeled with the ray coordinates.
/// A zero vector or a dimension mismatch is an error; an isotropic ray is
/// handled per `policy`.
pub fn from_rays<S: FormScalar>(
    vectors: &[Vec<S>],
    dimension: usize,
    policy: IsotropicPolicy,
) -> Result<(Orthoset, Vec<Ray<S>>)> {
    let mut rays: Vec<Ray<S>> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        if v.len() != dimension {
            return Err(Error::DimensionMismatch {
                index: idx,
                expected: dimension,
                got: v.len(),
            });
        }
        let ray = Ray::new(v.clone()).ok_or(Error::ZeroVector(idx))?;
        if inner(ray.coords(), ray.coords()).is_zero() {
            match policy {
                IsotropicPolicy::Reject => return Err(Error::IsotropicRay(ray.to_string())),
                IsotropicPolicy::Drop => continue,
            }
        }
        if !rays.contains(&ray) {
            rays.push(ray);
        }
    }
    let k = rays.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let ij = inner(rays[i].coords(), rays[j].coords()).is_zero();
            let ji = inner(rays[j].coords(), rays[i].coords()).is_zero();
            // ⟨x|y⟩ = ⟨y|x⟩* forces the two zero-tests to agree.
            assert_eq!(ij, ji, "orthogonality must be symmetric");
            if ij {
                pairs.push((i, j));
            }
        }
    }
    let labels: Vec<String> = rays.iter().map(ToString::to_string).collect();
    let orthoset = Orthoset::with_labels(k, &pairs, labels)?;
    Ok((orthoset, rays))
}

/// [`from_rays`] over raw `(re, im)` entries, dispatching on the form kind.
/// Euclidean input must have zero imaginary parts. Returns the orthoset and
/// the canonical ray labels.
pub fn from_rays_form(
    raw: &[Vec<(i64, i64)>],
    form: FormSpec,
    policy: IsotropicPolicy,
) -> Result<(Orthoset, Vec<String>)> {
    match form.kind {
        FormKind::Euclidean => {
            let mut vectors: Vec<Vec<BigInt>> = Vec::with_capacity(raw.len());
            for (idx, v) in raw.iter().enumerate() {
                let mut out = Vec::with_capacity(v.len());
                for &(re, im) in v {
                    if im != 0 {
                        return Err(Error::Parse(format!(
                            "vector {} has a Gaussian entry under the euclidean form",
                            idx
                        )));
                    }
                    out.push(BigInt::from(re));
                }
                vectors.push(out);
            }
            let (m, rays) = from_rays(&vectors, form.dimension, policy)?;
            Ok((m, rays.iter().map(ToString::to_string).collect()))
        }
        FormKind::Hermitian => {
            let vectors: Vec<Vec<GaussInt>> = raw
                .iter()
                .map(|v| v.iter().map(|&(re, im)| GaussInt::new(re, im)).collect())
                .collect();
            let (m, rays) = from_rays(&vectors, form.dimension, policy)?;
            Ok((m, rays.iter().map(ToString::to_string).collect()))
        }
    }
}

/// All 40 nonzero vectors over `{-1, 0, 1}^4` up to sign: the standard
/// desk-scale ray fixture in Q^4.
pub fn q4_pm1_rays() -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    for code in 0..81u32 {
        let mut v = Vec::with_capacity(4);
        let mut c = code;
        for _ in 0..4 {
            v.push((c % 3) as i64 - 1);
            c /= 3;
        }
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        // keep one of {v, -v}: first nonzero coordinate positive
        if v.iter().find(|&&x| x != 0).copied().unwrap() < 0 {
            continue;
        }
        out.push(v.into_iter().map(BigInt::from).collect());
    }
    out
}
