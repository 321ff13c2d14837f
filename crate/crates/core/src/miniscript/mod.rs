//! The MiniScript language: lexer, parser and pretty-printer.

pub mod lexer;
pub mod parser;
pub mod printer;
mod syntax;

pub use parser::{parse, parse_expression, parse_spread};
pub use printer::{print_forest, Printed};
pub use syntax::{Diagnostic, NodeKind, Span, SyntaxNode};

use crate::forest::{to_forest, IdGen};

/// Pretty-prints a syntax tree.
pub fn print(tree: &SyntaxNode) -> String {
    print_forest(&to_forest(tree, &mut IdGen::new())).text
}
