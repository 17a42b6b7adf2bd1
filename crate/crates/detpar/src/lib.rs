//! File formats, random corpora and the command-line front end around
//! [`detpar_core`].

pub mod cli;
pub mod hoa;
pub mod random;
