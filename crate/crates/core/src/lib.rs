//! Colorings of the positive integers that avoid monochromatic polynomial
//! sumset configurations `(B + P(C)) u (B + Q(C))`, a bitset search engine
//! that hunts for such configurations in arbitrary colorings, and
//! finite-window diagnostics around them.

pub mod bitvec;
pub mod coloring;
pub mod descriptor;
pub mod dynamics;
pub mod error;
pub mod poly;
pub mod real;
pub mod search;
pub mod witness;

pub use bitvec::BitVec;
pub use coloring::{ColorWindow, Coloring};
pub use descriptor::Descriptor;
pub use error::{Error, Result};
pub use poly::IntPolynomial;
