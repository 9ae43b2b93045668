//! Library half of the command line tool. Everything the binary can do is
//! callable from here, which is how the integration tests drive it.

pub mod algebra;
pub mod dims;
pub mod export;
pub mod realforms;
pub mod report;
pub mod suites;

pub use algebra::Algebra;
pub use report::Usage;
