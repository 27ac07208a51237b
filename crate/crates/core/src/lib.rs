pub mod algebra;
pub mod braid;
pub mod equiv;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod intcat;
pub mod lmcat;
pub mod nat;
pub mod report;
pub mod xmod;

pub use braid::{BraidedXMod, LeibnizBraiding, LieBraidedXMod};
pub use algebra::{Algebra, BilinearMap, LinearMap};
pub use equiv::{BraidedCatAlgebra, Seed};
pub use error::{Error, Result};
pub use intcat::{CatAlgebra, CatBraiding};
pub use nat::{Regime, TensorProduct};
pub use exactla::{Matrix, QuotientPresentation, Scalar, Subspace, Vector};
pub use report::{Report, Violation};
pub use xmod::{CrossedModule, LeibnizAction};
