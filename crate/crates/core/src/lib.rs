pub mod cli;
pub mod error;
pub mod limits;
pub mod partitions;
pub mod qfunctions;
pub mod report;
pub mod ring;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/qfunctions.md")]
    mod qfunctions {}
    #[doc = include_str!("../../../book/src/roots-of-unity.md")]
    mod roots_of_unity {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/scans-and-bounds.md")]
    mod scans_and_bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
