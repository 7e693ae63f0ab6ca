//! Exact and numeric verification of six-dimensional Painleve III-type
//! systems, their Backlund transformations, holomorphy charts and
//! birational equivalences.
//!
//! The crate is `no_std` with `alloc`; file formats, the command line and
//! wall-clock budgets live in the companion CLI crate.

#![no_std]

#[macro_use]
extern crate alloc;

pub mod algebra;
pub mod numeric;
pub mod report;
pub mod systems;
pub mod verify;
pub mod weyl;

/// Revision of the transcribed systems, maps and charts; bumped whenever
/// catalog data changes.
pub const CATALOG_VERSION: u32 = 1;
