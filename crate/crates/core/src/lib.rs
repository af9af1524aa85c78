pub mod error;
pub mod limits;
pub mod par;
pub mod characters;
pub mod permgroups;
pub mod graphs;
pub mod symfunc;
pub mod youngsets;
pub mod wreathhopf;
pub mod graphalg;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
