//! Finite orthosets and orthomatroids.
//!
//! An orthoset is a finite set with a symmetric, anti-reflexive orthogonality
//! relation. The map `F ↦ F^⊥⊥` is a closure operator; when it satisfies the
//! Mac Lane–Steinitz exchange property and the straightening property the
//! orthoset is an orthomatroid, its closed sets form a complete atomistic
//! orthomodular lattice with the covering law (a propositional system), and
//! that lattice is recovered from its atoms. This crate builds, verifies and
//! decomposes such structures at desk scale:
//!
//! - [`orthoset`]: ground sets, orthogonal complement, bi-orthogonal closure;
//! - [`laws`]: the Galois-connection and closure-operator laws;
//! - [`axioms`]: exchange/straightening/orthobasis checks, orthobasis
//!   completion, rank;
//! - [`lattice`]: the lattice of closed sets and the propositional-system
//!   certificate;
//! - [`roundtrip`]: atom orthosets, simplification, isomorphism;
//! - [`components`]: irreducible components and disjoint unions;
//! - [`generators`]: canonical families, random instances, exhaustive
//!   catalogs, and exact-arithmetic ray systems ([`rays`]);
//! - [`io`]: JSON formats and DOT export.

pub mod axioms;
pub mod components;
pub mod error;
pub mod generators;
pub mod io;
pub mod lattice;
pub mod laws;
pub mod orthoset;
pub mod rays;
pub mod roundtrip;
pub mod set;

pub use axioms::{
    check_exchange, check_orthobasis_axiom, check_straightening, complete_orthobasis,
    is_independent, is_orthoindependent, is_orthomatroid, rank, Axiom, AxiomVerdict,
    AxiomWitness, Orthobasis, OrthomatroidReport, Rank, RANK_VERIFY_MAX_N,
};
pub use components::{components, disjoint_union, is_irreducible, similar, ComponentPartition};
pub use error::{Error, Result};
pub use generators::{
    discrete, enumerate_orthomatroids, enumerate_orthosets, from_rays, from_rays_form, mo,
    random_orthoset, EnumOptions,
};
pub use lattice::{
    check_atom_covering, check_atom_covering_atoms, check_atomistic, check_ortholattice,
    check_orthomodular, closed_sets, is_propositional_system, LatticeVerdict, LatticeWitness,
    OrthoLattice, PropSysReport, PropertyVerdict, DEFAULT_NODE_BUDGET,
};
pub use laws::{
    check_closure_laws, check_closure_laws_seeded, check_galois, check_galois_seeded,
    structural_laws, Law, LawReport, LawWitness, DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_SAMPLE_SEED,
    DEFAULT_SAMPLE_SIZE,
};
pub use orthoset::{ClosedSet, Orthoset};
pub use rays::{FormKind, FormScalar, FormSpec, GaussInt, IsotropicPolicy, Ray};
pub use roundtrip::{
    is_simple, lattice_isomorphic, ortho_isomorphic, orthoset_of_lattice, simplify, LatticeIso,
    OrthoIso,
};
pub use set::{ElementId, SubsetMask};

/// Ray over the plain integers under the Euclidean form.
pub type EuclideanRay = Ray<num_bigint::BigInt>;
/// Ray over the Gaussian integers under the Hermitian form.
pub type HermitianRay = Ray<GaussInt>;
