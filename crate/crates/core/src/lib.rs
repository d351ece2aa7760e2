//! Quantum colourings of graphs.
//!
//! * [`graph`]: simple graphs, generators, homomorphisms, DIMACS/JSON I/O.
//! * [`solve`]: exact clique, independence and chromatic numbers.
//! * [`vecrep`]: orthogonal representations and the graph families built from them.
//! * [`cert`]: quantum colouring certificates, their verifiers, constructions and transforms.
//! * [`experiment`] and [`repro`]: random-graph runs and the reference example checks.
//! * [`cli`]: the `qchrom` command line.

pub mod bitset;
pub mod cert;
pub mod cli;
pub mod experiment;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod repro;
pub mod solve;
pub mod vecrep;
