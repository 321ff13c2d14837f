use std::collections::HashMap;

use super::Span;
use crate::forest::{Content, ForestNode, ListKind, NodeId, TokenRole};

pub const INDENT: usize = 2;
pub const WIDTH: usize = 80;

/// Printed text plus the byte span of every node.
#[derive(Debug, Clone, Default)]
pub struct Printed {
    pub text: String,
    pub spans: HashMap<NodeId, Span>,
}

pub fn print_forest(root: &ForestNode) -> Printed {
    let mut p = Printer { out: String::new(), spans: Vec::new(), flat: false, record: true };
    p.top(root);
    Printed { text: p.out, spans: p.spans.into_iter().collect() }
}

/// Does an item of a statement list print with a trailing `;`?
pub fn needs_terminator(n: &ForestNode) -> bool {
    !matches!(
        n.list_kind(),
        Some(ListKind::If | ListKind::FunctionDeclaration | ListKind::Block)
    )
}

struct Printer {
    out: String,
    spans: Vec<(NodeId, Span)>,
    /// Never break lists; used to measure flat widths.
    flat: bool,
    record: bool,
}

impl Printer {
    fn s(&mut self, s: &str) {
        self.out.push_str(s);
    }

    fn pad(&mut self, indent: usize) {
        for _ in 0..indent {
            self.out.push(' ');
        }
    }

    fn column(&self) -> usize {
        let line = match self.out.rfind('\n') {
            Some(i) => &self.out[i + 1..],
            None => &self.out[..],
        };
        line.chars().count()
    }

    fn top(&mut self, root: &ForestNode) {
        let start = self.out.len();
        if root.list_kind() == Some(ListKind::StatementList) {
            for item in root.items() {
                self.statement(item, 0);
                self.s("\n");
            }
        } else {
            self.node(root, 0);
        }
        if self.record {
            self.spans.push((root.id, Span::new(start, self.out.len())));
        }
    }

    fn statement(&mut self, n: &ForestNode, indent: usize) {
        self.node(n, indent);
        if needs_terminator(n) {
            self.s(";");
        }
    }

    fn node(&mut self, n: &ForestNode, indent: usize) {
        let start = self.out.len();
        match &n.content {
            Content::Token { text, .. } => self.s(text),
            Content::List { kind, items } => self.list(*kind, items, indent),
        }
        if self.record {
            self.spans.push((n.id, Span::new(start, self.out.len())));
        }
    }

    fn joined(&mut self, items: &[ForestNode], sep: &str, indent: usize) {
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                self.s(sep);
            }
            self.node(item, indent);
        }
    }

    fn type_ref(&mut self, n: &ForestNode, indent: usize) {
        self.s(": ");
        self.node(n, indent);
    }

    fn list(&mut self, kind: ListKind, items: &[ForestNode], indent: usize) {
        use ListKind as L;
        let is_type = |n: &ForestNode| n.list_kind() == Some(L::TypeReference);
        match kind {
            L::StatementList | L::Block => {
                if items.is_empty() {
                    self.s("{}");
                    return;
                }
                self.s("{\n");
                for item in items {
                    self.pad(indent + INDENT);
                    self.statement(item, indent + INDENT);
                    self.s("\n");
                }
                self.pad(indent);
                self.s("}");
            }
            L::DeclaratorList => {
                let mut rest = items;
                if let Some(kw) = items.first().filter(|k| k.token_role() == Some(TokenRole::Keyword)) {
                    self.node(kw, indent);
                    self.s(" ");
                    rest = &items[1..];
                }
                self.joined(rest, ", ", indent);
            }
            L::Declarator | L::Parameter => {
                for (i, item) in items.iter().enumerate() {
                    if i == 0 {
                        self.node(item, indent);
                    } else if i == 1 && is_type(item) {
                        self.type_ref(item, indent);
                    } else {
                        self.s(" = ");
                        self.node(item, indent);
                    }
                }
            }
            L::Return => {
                self.s("return");
                for item in items {
                    self.s(" ");
                    self.node(item, indent);
                }
            }
            L::If => {
                for (i, item) in items.iter().enumerate() {
                    match i {
                        0 => {
                            self.s("if (");
                            self.node(item, indent);
                            self.s(") ");
                        }
                        1 => self.node(item, indent),
                        _ => {
                            self.s(" else ");
                            self.node(item, indent);
                        }
                    }
                }
            }
            L::FunctionDeclaration | L::FunctionExpression => {
                let mut rest = items;
                if let Some(kw) = items.first().filter(|k| k.token_role() == Some(TokenRole::Keyword)) {
                    self.node(kw, indent);
                    self.s(" ");
                    rest = &items[1..];
                }
                self.s("function ");
                for item in rest {
                    match item.list_kind() {
                        Some(L::TypeReference) => self.type_ref(item, indent),
                        Some(L::Block) => {
                            self.s(" ");
                            self.node(item, indent);
                        }
                        _ => self.node(item, indent),
                    }
                }
            }
            L::ArrowFunction => {
                for (i, item) in items.iter().enumerate() {
                    if i == 0 {
                        self.node(item, indent);
                    } else if i == 1 && is_type(item) {
                        self.type_ref(item, indent);
                    } else {
                        self.s(" => ");
                        self.node(item, indent);
                    }
                }
            }
            L::TypeReference | L::TightExpression => {
                let mut prev_optional = false;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 && item.is_identifier() && !prev_optional {
                        self.s(".");
                    }
                    prev_optional = item.token_role() == Some(TokenRole::OptionalChain);
                    self.node(item, indent);
                }
            }
            L::LooseExpression => self.joined(items, " ", indent),
            L::Property => self.joined(items, ": ", indent),
            L::Spread => {
                self.s("...");
                self.joined(items, "", indent);
            }
            L::Unary => {
                self.s("!");
                self.joined(items, "", indent);
            }
            L::Paren => {
                self.s("(");
                self.joined(items, "", indent);
                self.s(")");
            }
            L::TypeArguments => {
                self.s("<");
                self.joined(items, ", ", indent);
                self.s(">");
            }
            L::CallArguments | L::ParameterList | L::ArrayItems | L::ObjectProperties => {
                self.breakable(kind, items, indent)
            }
        }
    }

    fn breakable(&mut self, kind: ListKind, items: &[ForestNode], indent: usize) {
        let (open, close) = kind.delimiters().unwrap_or(("", ""));
        if items.is_empty() {
            self.s(open);
            self.s(close);
            return;
        }
        let spaced = kind == ListKind::ObjectProperties;
        if self.flat || self.column() + self.flat_width(kind, items, indent) <= WIDTH {
            self.s(open);
            if spaced {
                self.s(" ");
            }
            self.joined(items, ", ", indent);
            if spaced {
                self.s(" ");
            }
            self.s(close);
            return;
        }
        self.s(open);
        self.s("\n");
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                self.s(",\n");
            }
            self.pad(indent + INDENT);
            self.node(item, indent + INDENT);
        }
        self.s("\n");
        self.pad(indent);
        self.s(close);
    }

    /// Width of the flat rendering up to its first line break.
    fn flat_width(&self, kind: ListKind, items: &[ForestNode], indent: usize) -> usize {
        let mut p = Printer { out: String::new(), spans: Vec::new(), flat: true, record: false };
        p.breakable(kind, items, indent);
        p.out.split('\n').next().unwrap_or("").chars().count()
    }
}
