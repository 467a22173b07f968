//! Exact computation of integral-form Macdonald polynomials and Jack
//! polynomials through chromatic quasisymmetric functions of attacking
//! graphs.
//!
//! Functions in [`macdonald`] and [`jack`] take the diagram shape `μ` and
//! return the polynomial indexed by its conjugate `μ′`.

pub mod algebra;
pub mod chromatic;
pub mod error;
pub mod graphs;
pub mod jack;
pub mod macdonald;
pub mod shapes;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use algebra::{AlphaPoly, Coefficient, LaurentQT, Rat, RatFunQT, Var};
pub use error::{Error, Result};
pub use shapes::{Diagram, Partition};
pub use symfunc::{Basis, SymFunc};
