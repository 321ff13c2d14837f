//! Structural search with wildcard patterns and template rename.

mod pattern;
mod rename;

pub use pattern::{compile_pattern, deep_matches, match_node, shallow_match, Depth, Pattern, PatternError};
pub use rename::{RenameError, RenameTemplate};
