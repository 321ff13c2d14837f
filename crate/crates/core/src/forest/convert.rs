use std::collections::HashMap;

use super::shape::check_list;
use super::{Content, ForestNode, IdGen, ListKind, NodeId, TokenRole, PLACEHOLDER};
use crate::miniscript::parser::{binary_precedence, is_right_assoc};
use crate::miniscript::{NodeKind as K, Span, SyntaxNode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvertError {
    #[error("invalid {kind:?} list: {detail}")]
    InvalidList { kind: ListKind, detail: String },
    #[error("{0} cannot appear here")]
    Misplaced(String),
}

/// Converts a syntax tree into the editable tree with fresh ids.
pub fn to_forest(ast: &SyntaxNode, ids: &mut IdGen) -> ForestNode {
    to_forest_with_spans(ast, ids).0
}

/// Like [`to_forest`], also returning the source span of every new node.
pub fn to_forest_with_spans(ast: &SyntaxNode, ids: &mut IdGen) -> (ForestNode, HashMap<NodeId, Span>) {
    let mut spans = HashMap::new();
    let node = Builder { ids, spans: &mut spans }.node(ast);
    (node, spans)
}

struct Builder<'a> {
    ids: &'a mut IdGen,
    spans: &'a mut HashMap<NodeId, Span>,
}

impl Builder<'_> {
    fn token(&mut self, n: &SyntaxNode, role: TokenRole) -> ForestNode {
        let id = self.ids.fresh();
        self.spans.insert(id, n.span);
        let mut t = ForestNode::token(id, n.text(), role);
        t.placeholder = role == TokenRole::Identifier && n.text() == PLACEHOLDER;
        t
    }

    fn list(&mut self, kind: ListKind, items: Vec<ForestNode>, span: Span) -> ForestNode {
        let id = self.ids.fresh();
        self.spans.insert(id, span);
        ForestNode::list(id, kind, items)
    }

    fn children(&mut self, n: &SyntaxNode) -> Vec<ForestNode> {
        n.children.iter().map(|c| self.node(c)).collect()
    }

    fn node(&mut self, n: &SyntaxNode) -> ForestNode {
        let kind = match n.kind {
            K::Identifier => return self.token(n, TokenRole::Identifier),
            K::NumberLiteral => return self.token(n, TokenRole::Number),
            K::StringLiteral => return self.token(n, TokenRole::String),
            K::BooleanLiteral => return self.token(n, TokenRole::Boolean),
            K::Keyword => return self.token(n, TokenRole::Keyword),
            K::Operator => return self.token(n, TokenRole::Operator),
            K::OptionalChain => return self.token(n, TokenRole::OptionalChain),
            K::ExpressionStatement => return self.node(&n.children[0]),
            K::Binary => {
                let mut items = Vec::new();
                self.flatten_binary(n, &mut items);
                return self.list(ListKind::LooseExpression, items, n.span);
            }
            K::Call | K::Member => {
                let mut items = Vec::new();
                self.flatten_chain(n, &mut items);
                return self.list(ListKind::TightExpression, items, n.span);
            }
            K::Program => ListKind::StatementList,
            K::VarStatement => ListKind::DeclaratorList,
            K::Declarator => ListKind::Declarator,
            K::Return => ListKind::Return,
            K::If => ListKind::If,
            K::Block => ListKind::Block,
            K::FunctionDeclaration => ListKind::FunctionDeclaration,
            K::FunctionExpression => ListKind::FunctionExpression,
            K::ArrowFunction => ListKind::ArrowFunction,
            K::ParameterList => ListKind::ParameterList,
            K::Parameter => ListKind::Parameter,
            K::TypeReference => ListKind::TypeReference,
            K::TypeArguments => ListKind::TypeArguments,
            K::Arguments => ListKind::CallArguments,
            K::ArrayLiteral => ListKind::ArrayItems,
            K::ObjectLiteral => ListKind::ObjectProperties,
            K::Property => ListKind::Property,
            K::Spread => ListKind::Spread,
            K::Unary => ListKind::Unary,
            K::Paren => ListKind::Paren,
        };
        let items = self.children(n);
        self.list(kind, items, n.span)
    }

    fn flatten_binary(&mut self, n: &SyntaxNode, out: &mut Vec<ForestNode>) {
        if n.kind == K::Binary {
            self.flatten_binary(&n.children[0], out);
            out.push(self.node(&n.children[1]));
            self.flatten_binary(&n.children[2], out);
        } else {
            out.push(self.node(n));
        }
    }

    fn flatten_chain(&mut self, n: &SyntaxNode, out: &mut Vec<ForestNode>) {
        if matches!(n.kind, K::Call | K::Member) {
            self.flatten_chain(&n.children[0], out);
            for c in &n.children[1..] {
                out.push(self.node(c));
            }
        } else {
            out.push(self.node(n));
        }
    }
}

/// Rebuilds a syntax tree. Loose lists are re-associated by operator
/// precedence; tight lists become left-associative chains.
pub fn from_forest(node: &ForestNode) -> Result<SyntaxNode, ConvertError> {
    let sp = Span::default();
    let (kind, items) = match &node.content {
        Content::Token { text, role } => {
            let kind = match role {
                TokenRole::Identifier => K::Identifier,
                TokenRole::Keyword => K::Keyword,
                TokenRole::Number => K::NumberLiteral,
                TokenRole::String => K::StringLiteral,
                TokenRole::Boolean => K::BooleanLiteral,
                TokenRole::Operator => K::Operator,
                TokenRole::OptionalChain => K::OptionalChain,
            };
            return Ok(SyntaxNode::leaf(kind, text.clone(), sp));
        }
        Content::List { kind, items } => (*kind, items),
    };
    if !check_list(kind, items) {
        let detail = describe(items);
        return Err(ConvertError::InvalidList { kind, detail });
    }
    let convert_all = |items: &[ForestNode]| -> Result<Vec<SyntaxNode>, ConvertError> {
        items.iter().map(from_forest).collect()
    };
    let statements = |items: &[ForestNode]| -> Result<Vec<SyntaxNode>, ConvertError> {
        items
            .iter()
            .map(|i| {
                let s = from_forest(i)?;
                Ok(if s.kind.is_expression() {
                    SyntaxNode::branch(K::ExpressionStatement, vec![s], sp)
                } else {
                    s
                })
            })
            .collect()
    };
    let k = match kind {
        ListKind::StatementList => return Ok(SyntaxNode::branch(K::Program, statements(items)?, sp)),
        ListKind::Block => return Ok(SyntaxNode::branch(K::Block, statements(items)?, sp)),
        ListKind::LooseExpression => {
            let parts = convert_all(items)?;
            let mut pos = 0;
            return Ok(climb(&parts, &mut pos, 1));
        }
        ListKind::TightExpression => return tight(items),
        ListKind::DeclaratorList => K::VarStatement,
        ListKind::Declarator => K::Declarator,
        ListKind::Return => K::Return,
        ListKind::If => K::If,
        ListKind::FunctionDeclaration => K::FunctionDeclaration,
        ListKind::FunctionExpression => K::FunctionExpression,
        ListKind::ArrowFunction => K::ArrowFunction,
        ListKind::ParameterList => K::ParameterList,
        ListKind::Parameter => K::Parameter,
        ListKind::TypeReference => K::TypeReference,
        ListKind::TypeArguments => K::TypeArguments,
        ListKind::CallArguments => K::Arguments,
        ListKind::ArrayItems => K::ArrayLiteral,
        ListKind::ObjectProperties => K::ObjectLiteral,
        ListKind::Property => K::Property,
        ListKind::Spread => K::Spread,
        ListKind::Unary => K::Unary,
        ListKind::Paren => K::Paren,
    };
    let node = SyntaxNode::branch(k, convert_all(items)?, sp);
    node.check().map_err(ConvertError::Misplaced)?;
    Ok(node)
}

fn describe(items: &[ForestNode]) -> String {
    let parts: Vec<String> = items
        .iter()
        .map(|i| match &i.content {
            Content::Token { text, .. } => text.clone(),
            Content::List { kind, .. } => format!("{kind:?}"),
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Precedence climbing over alternating operands and operator tokens.
fn climb(parts: &[SyntaxNode], pos: &mut usize, min_prec: u8) -> SyntaxNode {
    let mut lhs = parts[*pos].clone();
    *pos += 1;
    while *pos < parts.len() {
        let op = parts[*pos].text();
        let prec = binary_precedence(op).unwrap_or(0);
        if prec < min_prec {
            break;
        }
        let op_node = parts[*pos].clone();
        *pos += 1;
        let next = if is_right_assoc(op) { prec } else { prec + 1 };
        let rhs = climb(parts, pos, next);
        lhs = SyntaxNode::branch(K::Binary, vec![lhs, op_node, rhs], Span::default());
    }
    lhs
}

fn tight(items: &[ForestNode]) -> Result<SyntaxNode, ConvertError> {
    let sp = Span::default();
    let mut acc = from_forest(&items[0])?;
    let mut optional: Option<SyntaxNode> = None;
    for item in &items[1..] {
        let part = from_forest(item)?;
        match part.kind {
            K::OptionalChain => {
                optional = Some(part);
                continue;
            }
            K::Identifier | K::Arguments => {
                let kind = if part.kind == K::Identifier { K::Member } else { K::Call };
                let mut children = vec![acc];
                children.extend(optional.take());
                children.push(part);
                acc = SyntaxNode::branch(kind, children, sp);
            }
            _ => return Err(ConvertError::Misplaced(format!("{:?} in chain", part.kind))),
        }
    }
    acc.check().map_err(ConvertError::Misplaced)?;
    Ok(acc)
}
