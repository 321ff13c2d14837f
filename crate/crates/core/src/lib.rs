//! Multi-cursor structural editing engine for MiniScript.

pub mod cursor;
pub mod forest;
pub mod miniscript;
pub mod multicursor;
pub mod search;
pub mod session;
