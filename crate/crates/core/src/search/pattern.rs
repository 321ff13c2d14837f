use std::collections::HashSet;

use crate::cursor::Selection;
use crate::forest::{to_forest, Content, Document, ForestNode, IdGen};
use crate::miniscript::{parse, parse_expression, parse_spread, Span, SyntaxNode};

pub const ANY: &str = "$_";
pub const ANY_RUN: &str = "$$_";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Deep,
    Shallow,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("pattern does not parse: {0}")]
    Syntax(String),
    #[error("pattern must be a single expression or statement")]
    NotSingle,
    #[error("at most one $$_ per list")]
    SeveralRuns,
}

/// A compiled pattern.
#[derive(Debug, Clone)]
pub enum Pattern {
    /// A lone `$$_`: any range, including an empty one.
    AnyRange,
    Node(ForestNode),
}

pub fn compile_pattern(src: &str) -> Result<Pattern, PatternError> {
    if src.trim() == ANY_RUN {
        return Ok(Pattern::AnyRange);
    }
    let mut ids = IdGen::new();
    let ast = match parse_single(src) {
        Ok(ast) => ast,
        Err(e) => {
            let terminated = terminate_runs(src);
            if terminated == src {
                return Err(e);
            }
            parse_single(&terminated).map_err(|_| e)?
        }
    };
    let node = to_forest(&ast, &mut ids);
    let node = match node.list_kind() {
        // an expression statement pattern matches the bare expression
        Some(crate::forest::ListKind::StatementList) => return Err(PatternError::NotSingle),
        _ => node,
    };
    let mut ok = true;
    node.walk(&mut |n| {
        if n.items().iter().filter(|c| c.token_text() == Some(ANY_RUN)).count() > 1 {
            ok = false;
        }
    });
    if !ok {
        return Err(PatternError::SeveralRuns);
    }
    Ok(Pattern::Node(node))
}

fn parse_single(src: &str) -> Result<SyntaxNode, PatternError> {
    if let Ok(ast) = parse_expression(src).or_else(|_| parse_spread(src)) {
        return Ok(ast);
    }
    let program = parse(src).map_err(|d| PatternError::Syntax(d[0].message.clone()))?;
    let [stmt] = program.children.as_slice() else { return Err(PatternError::NotSingle) };
    Ok(stmt.clone())
}

/// `{$$_}` as a block: a run wildcard before `}` stands for statements.
fn terminate_runs(src: &str) -> String {
    let mut out = String::new();
    let mut rest = src;
    while let Some(k) = rest.find(ANY_RUN) {
        let (head, tail) = rest.split_at(k + ANY_RUN.len());
        out.push_str(head);
        if tail.trim_start().starts_with('}') {
            out.push(';');
        }
        rest = tail;
    }
    out.push_str(rest);
    out
}

/// Does `node` match the pattern node?
pub fn match_node(pat: &ForestNode, node: &ForestNode) -> bool {
    match (&pat.content, &node.content) {
        (Content::Token { text, .. }, _) if text == ANY => true,
        (Content::Token { text: a, role: ra }, Content::Token { text: b, role: rb }) => a == b && ra == rb,
        (Content::List { kind: ka, items: pi }, Content::List { kind: kb, items: ni }) => {
            ka == kb && match_items(pi, ni)
        }
        _ => false,
    }
}

fn match_items(pat: &[ForestNode], items: &[ForestNode]) -> bool {
    match pat.iter().position(|p| p.token_text() == Some(ANY_RUN)) {
        None => pat.len() == items.len() && pat.iter().zip(items).all(|(p, n)| match_node(p, n)),
        Some(k) => {
            let suffix = pat.len() - k - 1;
            items.len() >= pat.len() - 1
                && pat[..k].iter().zip(items).all(|(p, n)| match_node(p, n))
                && pat[k + 1..].iter().zip(&items[items.len() - suffix..]).all(|(p, n)| match_node(p, n))
        }
    }
}

/// Matches the selection itself, trying every equivalent form.
pub fn shallow_match(doc: &Document, sel: Selection, pat: &Pattern) -> bool {
    let node = match pat {
        Pattern::AnyRange => return true,
        Pattern::Node(n) => n,
    };
    sel.chain(doc).iter().any(|m| match m.items(doc) {
        [item] => match_node(node, item),
        _ => false,
    })
}

/// Every node within the selection that matches, outermost first. Matches
/// may nest; equivalent matches (same text) are reported once.
pub fn deep_matches(doc: &Document, sel: Selection, pat: &Pattern) -> Vec<Selection> {
    let o = sel.outermost(doc);
    let node = match pat {
        Pattern::AnyRange => return vec![o],
        Pattern::Node(n) => n,
    };
    let mut seen: HashSet<Span> = HashSet::new();
    let mut out = Vec::new();
    for item in o.items(doc) {
        item.walk(&mut |n| {
            if match_node(node, n) {
                if let Some(s) = Selection::of_node(doc, n.id) {
                    if seen.insert(s.text_range(doc)) {
                        out.push(s);
                    }
                }
            }
        });
    }
    out
}
