//! Finite preorders and their stable category.
//!
//! The crate models finite preorders as boolean bit-relations, builds the
//! torsion theory that splits every preorder into an equivalence relation
//! and a partial order, constructs Z-kernels and Z-cokernels, and quotients
//! the category of clopen partial morphisms into a pointed stable category
//! with decidable equality via canonical forms.
//!
//! [`laws`] enumerates every labeled preorder up to a size bound and runs
//! one verification suite per categorical law, reporting deterministic
//! witnesses on failure. [`document`] and [`dot`] provide the JSON file
//! format and DOT export used by the `prestab` binary.

pub mod document;
pub mod dot;
mod error;
pub mod laws;
pub mod preord;
pub mod rel;
pub mod stab;

pub use error::{Error, Result};
pub use preord::{
    coproduct, from_endofunction, is_monotone, torsion_sequence, verify_z_universal, z_cokernel,
    z_kernel, Classification, ClopenPartition, Morphism, Preorder, ZExactSequence, ZSide,
};
pub use rel::{Carrier, FinMap, Rel, Subset};
pub use stab::{
    canonicalize, check_exact, ff_related, is_cokernel, is_kernel, is_mono_in_stab, sigma,
    stab_cokernel, stable_homs, zero_morphism, CongruenceOutcome, CongruenceWitness,
    PartialMorphism, StableMorphism,
};
