//! Finite commutative integral residuated lattices.
//!
//! An [`Algebra`] is given by its join, meet, product and implication
//! tables over element indices. On top of that this crate computes the
//! filter lattice and its distinguished members (prime, maximal, radical,
//! dense), quotients by filters, homomorphisms and isomorphism search, the
//! Boolean center and its lifting modulo the radical, direct products, CRT
//! solutions, and the decomposition of an algebra with lifting Boolean
//! center into a product of local factors.
//!
//! ```
//! use reslat_core::{fixture, max_filters, radical, has_lifting};
//!
//! let g6 = fixture("g6").unwrap();
//! assert_eq!(max_filters(&g6).len(), 2);
//! assert_eq!(radical(&g6).len(), 2);
//! assert!(!has_lifting(&g6).unwrap().holds());
//! ```

// Table code indexes several matrices by the same loop variables.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod boolean_center;
pub mod decomposition;
pub mod enumeration;
pub mod error;
pub mod filters;
pub mod fixtures;
pub mod io;
pub mod laws;
pub mod morphisms;
pub mod products;
pub mod quotients;
pub mod report;
pub mod set;
pub mod verify;

pub use algebra::{
    lattice_from_order, order_from_covers, residuum, Algebra, ElementClass, ElementId, Op, PowerSequence, Table,
};
pub use boolean_center::{
    boolean_center, congruence_restriction_check, has_lifting, lift_idempotent, relative_algebra, BooleanCenter,
    Lifting, RelativeAlgebra,
};
pub use decomposition::{
    classify, decompose, semilocal_decompose, Classification, DecompositionReport, FactorFlags, Note, SemilocalIso,
};
pub use enumeration::{canonical_form, enumerate_algebras, Catalog, EnumerationOptions};
pub use error::{Error, Result, StructureError};
pub use filters::{
    all_filters, dense_filter, f_m_filter, filter_join, generated_filter, is_filter, is_prime, is_proper, max_filters,
    radical, spec, FilterSet,
};
pub use fixtures::{fixture, FIXTURE_NAMES};
pub use io::{algebra_to_json, load_algebra, AlgebraFile};
pub use laws::{boolean_identities, check_laws, residuated_identities, LawResult, LawSuiteReport};
pub use morphisms::{
    boolean_restriction, dense_functor_map, find_isomorphism, image_filter, is_morphism, kernel, preimage_filter,
    BooleanMap, Morphism,
};
pub use products::{
    crt_solve, delta_elements, direct_product, direct_product_with_cap, over_filter, spec_max_of_product,
    ProductAlgebra, DEFAULT_SIZE_CAP,
};
pub use quotients::{
    canonical_surjection, filter_correspondence, quotient, quotient_order, second_isomorphism_check, QuotientResult,
};
pub use report::{structure_report, StructureReport};
pub use set::ElementSet;
pub use verify::{verify_axioms, Law, VerificationReport, Violation};
