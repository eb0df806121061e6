pub mod algebra;
pub mod critical;
pub mod error;
pub mod invariants;
pub mod model;
pub mod puiseux;
pub mod report;
pub mod settings;

pub use error::{Error, Result};
pub use settings::Settings;
