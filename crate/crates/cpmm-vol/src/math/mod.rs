pub mod normal;
pub mod quad;

pub use normal::{norm_cdf, norm_pdf};
pub use quad::{adaptive_simpson, GaussHermite};
