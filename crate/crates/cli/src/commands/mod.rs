pub mod chain;
pub mod gronwall;
pub mod report;
pub mod verify;
pub mod yamabe;

use std::path::Path;

use crate::InputError;

pub fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}
