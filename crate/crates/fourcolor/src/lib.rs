//! Verification toolkit for unavoidable-set / discharging proofs of the
//! four-color theorem.
//!
//! The crate is organized around three pillars:
//!
//! * reducibility — ring colorings, Kempe-chain consistency and the
//!   maximal-consistent-subset fixed point deciding D-reducibility,
//! * discharging — rules, cartwheels, parts, hubcaps and the presentation
//!   script interpreter,
//! * overcharge — the mechanized bound on charge flowing into high-degree
//!   vertices.
//!
//! Everything is built on embedded planar graphs stored as rotation systems
//! ([`graph::RotationGraph`]).

pub mod appear;
pub mod appearance;
pub mod batch;
pub mod cartwheel;
pub mod coloring;
pub mod config;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kempe;
pub mod overcharge;
pub mod part;
pub mod reduce;
pub mod rules;
pub mod script;
