pub mod chartab;
pub mod cli;
pub mod exactnum;
pub mod exclusion;
pub mod fixtures;
pub mod group;
pub mod lattice;
pub mod oliver;
