//! Reports, verification sweeps, family enumeration and a dense numeric
//! oracle for generalized Paley graphs, on top of `gpgraph-core`.

pub mod families;
pub mod oracle;
pub mod render;
pub mod report;
pub mod verify;
