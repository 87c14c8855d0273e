//! Quantitative symplectic linear algebra.
//!
//! * [`exterior`]: covectors, wedge and interior products, coefficient and
//!   comass norms.
//! * [`symplectic`]: the defect `‖Φ*ω_0 − ω_0‖_2`, standard forms of
//!   two-forms, symplectic spectra and capacities of ellipsoids, squeezing
//!   certificates and the rigidity constants.
//! * [`polyform`]: polynomial differential forms with exact rational
//!   coefficients and the radial homotopy operator.
//! * [`moser`]: the Moser-flow correction of ε-symplectic maps.
//! * [`random`]: seeded generators; [`io`]: matrix files.
//!
//! ```
//! use epsymp::symplectic::{defect, shear_example, SympContext};
//!
//! let ctx = SympContext::new(2).unwrap();
//! let phi = shear_example(2, 0.1, 2.0).unwrap();
//! assert!((defect(&phi, &ctx).unwrap() - 0.1).abs() < 1e-12);
//! ```

pub mod error;
pub mod exterior;
pub mod io;
pub mod moser;
pub mod polyform;
pub mod random;
pub mod suite;
pub mod symplectic;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/forms.md")]
    struct Forms;
    #[doc = include_str!("../../../book/src/defect.md")]
    struct Defect;
    #[doc = include_str!("../../../book/src/certificates.md")]
    struct Certificates;
    #[doc = include_str!("../../../book/src/moser.md")]
    struct Moser;
    #[doc = include_str!("../../../book/src/homotopy.md")]
    struct Homotopy;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
