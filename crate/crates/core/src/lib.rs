//! Exact computations around oppositeness incidence matrices in buildings of
//! finite groups of Lie type.
//!
//! Two independent routes to the same number live here:
//!
//! * the representation-theoretic route: [`jantzen::lambda_opp`] picks the
//!   highest weight, [`jantzen::resolve_simple`] runs the Jantzen chain method
//!   and [`characters`] evaluates Weyl dimensions, giving `dim L(λ_opp)`;
//! * the brute-force route: [`finitegeom`] enumerates flags or singular points
//!   over GF(q), builds the 0/1 oppositeness matrix, and [`exactlinalg`]
//!   computes its rank over F_p.
//!
//! All arithmetic is exact. Node labels are 1-based everywhere in the public
//! API; weight coordinate `k` (0-based) is the coefficient of `ω_{k+1}`.

pub mod characters;
pub mod error;
pub mod exactlinalg;
pub mod finitegeom;
pub mod jantzen;
pub mod rootdata;
pub mod weylgroup;

pub use error::{Error, Result};
pub use rootdata::{Family, Root, RootSystem, RootSystemSpec, Weight};
pub use weylgroup::{TypeSet, WeylWord};
