pub mod aut;
pub mod certificate;
pub mod cli;
pub mod combinatorics;
pub mod dist;
pub mod error;
pub mod graph;
pub mod group_actions;
