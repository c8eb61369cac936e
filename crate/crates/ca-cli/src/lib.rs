//! Interactive and batch sessions over the kernel.

pub mod session;

pub use session::{Session, StepOutput};
