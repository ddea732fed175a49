//! Mod-2 hit-problem indecomposables, their polynomial filtration, and
//! composition factors in Grothendieck groups of strict polynomial functors.

pub mod cli;
pub mod combinat;
pub mod functor_eval;
pub mod g0;
pub mod gf2;
pub mod steenrod;
