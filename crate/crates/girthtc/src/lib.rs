//! IO companion to `girthtc-core`: JSON/graph6/DOT/CSV formats and the
//! building blocks of the `girthtc` command-line tool.

pub mod formats;
