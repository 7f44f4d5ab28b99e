pub mod error;
pub mod scalars;
pub mod weights;

pub use error::{Error, Result};
pub mod linalg;
pub mod algebra;
pub mod zhang;
pub mod hopf;
pub mod adjoint;
pub mod hc_center;
pub mod verma;
pub mod parse;
pub mod suite;
