//! The editable tree.
//!
//! Binary operator chains are flattened into loose lists and member/call
//! chains into tight lists. Every other construct is a list whose items are
//! its children in text order. Keywords that carry information (`var`,
//! `let`, `const`, `export`) are token items; fixed punctuation is implied by
//! the list kind.

mod convert;
mod document;
mod reconcile;
mod repair;
mod shape;

pub use convert::{from_forest, to_forest, to_forest_with_spans, ConvertError};
pub use document::{Document, NormalizeError, Splice, SpliceResult};
pub use reconcile::{reconcile, Edit, IdRemap, ReconcileError};
pub use repair::{remove_and_repair, repair_with_placeholders, Hole, HoleTarget, RepairOutcome};
pub use shape::{check_list, Category};

use std::fmt;

use serde::Serialize;

pub const PLACEHOLDER: &str = "placeholder";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NodeId(pub u64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Monotonic id allocator; ids are never reused.
#[derive(Debug, Clone, Default)]
pub struct IdGen {
    next: u64,
}

impl IdGen {
    pub fn new() -> Self {
        IdGen { next: 1 }
    }

    pub fn fresh(&mut self) -> NodeId {
        if self.next == 0 {
            self.next = 1;
        }
        let id = NodeId(self.next);
        self.next += 1;
        id
    }

    pub fn peek(&self) -> u64 {
        self.next
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenRole {
    Identifier,
    Keyword,
    Number,
    String,
    Boolean,
    Operator,
    OptionalChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ListKind {
    StatementList,
    Block,
    DeclaratorList,
    Declarator,
    Return,
    If,
    FunctionDeclaration,
    FunctionExpression,
    ArrowFunction,
    ParameterList,
    Parameter,
    TypeReference,
    TypeArguments,
    LooseExpression,
    TightExpression,
    CallArguments,
    ArrayItems,
    ObjectProperties,
    Property,
    Spread,
    Unary,
    Paren,
}

impl ListKind {
    /// The matching delimiter pair, if any.
    pub fn delimiters(self) -> Option<(&'static str, &'static str)> {
        use ListKind::*;
        match self {
            CallArguments | ParameterList | Paren => Some(("(", ")")),
            ArrayItems => Some(("[", "]")),
            ObjectProperties | Block => Some(("{", "}")),
            TypeArguments => Some(("<", ">")),
            _ => None,
        }
    }

    /// Lists that may legitimately be selected as an empty range.
    pub fn allows_empty_selection(self) -> bool {
        self.delimiters().is_some() || self == ListKind::StatementList
    }

    pub fn holds_statements(self) -> bool {
        matches!(self, ListKind::StatementList | ListKind::Block)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Content {
    Token { text: String, role: TokenRole },
    List { kind: ListKind, items: Vec<ForestNode> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestNode {
    pub id: NodeId,
    pub content: Content,
    pub placeholder: bool,
}

impl ForestNode {
    pub fn token(id: NodeId, text: impl Into<String>, role: TokenRole) -> Self {
        ForestNode { id, content: Content::Token { text: text.into(), role }, placeholder: false }
    }

    pub fn placeholder(id: NodeId) -> Self {
        ForestNode {
            id,
            content: Content::Token { text: PLACEHOLDER.into(), role: TokenRole::Identifier },
            placeholder: true,
        }
    }

    pub fn list(id: NodeId, kind: ListKind, items: Vec<ForestNode>) -> Self {
        ForestNode { id, content: Content::List { kind, items }, placeholder: false }
    }

    pub fn items(&self) -> &[ForestNode] {
        match &self.content {
            Content::List { items, .. } => items,
            Content::Token { .. } => &[],
        }
    }

    pub fn items_mut(&mut self) -> Option<&mut Vec<ForestNode>> {
        match &mut self.content {
            Content::List { items, .. } => Some(items),
            Content::Token { .. } => None,
        }
    }

    pub fn list_kind(&self) -> Option<ListKind> {
        match &self.content {
            Content::List { kind, .. } => Some(*kind),
            Content::Token { .. } => None,
        }
    }

    pub fn token_text(&self) -> Option<&str> {
        match &self.content {
            Content::Token { text, .. } => Some(text),
            Content::List { .. } => None,
        }
    }

    pub fn token_role(&self) -> Option<TokenRole> {
        match &self.content {
            Content::Token { role, .. } => Some(*role),
            Content::List { .. } => None,
        }
    }

    pub fn is_token(&self) -> bool {
        matches!(self.content, Content::Token { .. })
    }

    pub fn is_identifier(&self) -> bool {
        self.token_role() == Some(TokenRole::Identifier)
    }

    pub fn is_operator(&self) -> bool {
        self.token_role() == Some(TokenRole::Operator)
    }

    /// Leaves are tokens and empty lists.
    pub fn is_leaf(&self) -> bool {
        self.items().is_empty()
    }

    /// Pre-order traversal.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a ForestNode)) {
        f(self);
        for c in self.items() {
            c.walk(f);
        }
    }

    pub fn walk_mut(&mut self, f: &mut impl FnMut(&mut ForestNode)) {
        f(self);
        if let Some(items) = self.items_mut() {
            for c in items {
                c.walk_mut(f);
            }
        }
    }

    pub fn count(&self) -> usize {
        1 + self.items().iter().map(|c| c.count()).sum::<usize>()
    }

    pub fn find(&self, id: NodeId) -> Option<&ForestNode> {
        if self.id == id {
            return Some(self);
        }
        self.items().iter().find_map(|c| c.find(id))
    }

    pub fn find_mut(&mut self, id: NodeId) -> Option<&mut ForestNode> {
        if self.id == id {
            return Some(self);
        }
        self.items_mut()?.iter_mut().find_map(|c| c.find_mut(id))
    }

    /// Deep copy with fresh ids; placeholder flags are kept.
    pub fn clone_fresh(&self, ids: &mut IdGen) -> ForestNode {
        let mut n = self.clone();
        n.walk_mut(&mut |m| m.id = ids.fresh());
        n
    }

    /// Structural equality ignoring ids.
    pub fn same_shape(&self, other: &ForestNode) -> bool {
        match (&self.content, &other.content) {
            (Content::Token { text: a, role: ra }, Content::Token { text: b, role: rb }) => {
                a == b && ra == rb
            }
            (Content::List { kind: ka, items: ia }, Content::List { kind: kb, items: ib }) => {
                ka == kb && ia.len() == ib.len() && ia.iter().zip(ib).all(|(x, y)| x.same_shape(y))
            }
            _ => false,
        }
    }
}

/// Match key used when reconciling identities: the list kind or token role and text.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NodeKey {
    List(ListKind),
    Token(TokenRole, String),
}

impl ForestNode {
    pub fn key(&self) -> NodeKey {
        match &self.content {
            Content::List { kind, .. } => NodeKey::List(*kind),
            Content::Token { text, role } => NodeKey::Token(*role, text.clone()),
        }
    }
}
