use std::fmt;

use super::{Cursor, CursorError, Selection};
use crate::forest::{Document, ForestNode, ListKind};

/// Which delimiter pair a descend/ascend command looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Delim {
    Paren,
    Bracket,
    Brace,
    Angle,
    Any,
}

impl Delim {
    pub fn matches(self, kind: ListKind) -> bool {
        match (self, kind.delimiters()) {
            (_, None) => false,
            (Delim::Any, Some(_)) => true,
            (d, Some((open, _))) => d.open() == open,
        }
    }

    pub fn open(self) -> &'static str {
        match self {
            Delim::Paren => "(",
            Delim::Bracket => "[",
            Delim::Brace => "{",
            Delim::Angle => "<",
            Delim::Any => "any",
        }
    }

    pub fn close(self) -> &'static str {
        match self {
            Delim::Paren => ")",
            Delim::Bracket => "]",
            Delim::Brace => "}",
            Delim::Angle => ">",
            Delim::Any => "any",
        }
    }

    /// Parses either the opening or the closing form.
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "(" | ")" => Delim::Paren,
            "[" | "]" => Delim::Bracket,
            "{" | "}" => Delim::Brace,
            "<" | ">" => Delim::Angle,
            "any" => Delim::Any,
            _ => return None,
        })
    }
}

impl fmt::Display for Delim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delim::Any => f.write_str("delimited"),
            d => write!(f, "{}{}", d.open(), d.close()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NavCommand {
    Parent,
    LeafPrev,
    LeafNext,
    ExtendPrev,
    ExtendNext,
    ReduceToJustExtended,
    ReduceFirst,
    ReduceLast,
    ShrinkDropFirst,
    ShrinkDropLast,
    DelimDescend(Delim),
    DelimAscend(Delim),
    SelectionUndo,
    SelectionRedo,
}

/// Runs one navigation command. The document is never changed.
pub fn navigate(doc: &Document, cursor: &Cursor, cmd: NavCommand) -> Result<Cursor, CursorError> {
    let mut c = cursor.clone();
    let sel = cursor.selection;
    if !sel.is_valid(doc) {
        return Err(CursorError::Invalid);
    }
    let next = match cmd {
        NavCommand::SelectionUndo => {
            let prev = c.history.pop().ok_or(CursorError::EmptyHistory)?;
            c.redo.push(c.selection);
            c.selection = prev;
            return Ok(c);
        }
        NavCommand::SelectionRedo => {
            let next = c.redo.pop().ok_or(CursorError::EmptyHistory)?;
            c.history.push(c.selection);
            c.selection = next;
            return Ok(c);
        }
        NavCommand::Parent => parent(doc, sel)?,
        NavCommand::LeafPrev => leaf(doc, sel, false)?,
        NavCommand::LeafNext => leaf(doc, sel, true)?,
        NavCommand::ExtendPrev | NavCommand::ExtendNext => {
            let (s, added) = extend(doc, sel, cmd == NavCommand::ExtendNext)?;
            c.select(s);
            c.last_extended = Some(added);
            return Ok(c);
        }
        NavCommand::ReduceToJustExtended => {
            let id = c.last_extended.ok_or(CursorError::NothingExtended)?;
            let o = sel.outermost(doc);
            if !o.ids(doc).contains(&id) {
                return Err(CursorError::NothingExtended);
            }
            Selection::of_node(doc, id).ok_or(CursorError::Invalid)?
        }
        NavCommand::ReduceFirst => reduce(doc, sel, true)?,
        NavCommand::ReduceLast => reduce(doc, sel, false)?,
        NavCommand::ShrinkDropFirst | NavCommand::ShrinkDropLast => {
            let i = sel.innermost(doc);
            if i.len() <= 1 {
                return Err(CursorError::TooFew);
            }
            if cmd == NavCommand::ShrinkDropFirst {
                Selection::new(i.list, i.start + 1, i.end)
            } else {
                Selection::new(i.list, i.start, i.end - 1)
            }
        }
        NavCommand::DelimDescend(d) => descend(doc, sel, d)?,
        NavCommand::DelimAscend(d) => ascend(doc, sel, d)?,
    };
    c.select(next);
    Ok(c)
}

fn parent(doc: &Document, sel: Selection) -> Result<Selection, CursorError> {
    let o = sel.outermost(doc);
    let root = doc.root();
    if o.list == root.id {
        let whole = Selection::root(doc);
        return if o == whole { Err(CursorError::NoParent) } else { Ok(whole) };
    }
    Selection::of_node(doc, o.list).ok_or(CursorError::NoParent)
}

/// Tokens and empty lists in document order.
fn leaves(root: &ForestNode) -> Vec<&ForestNode> {
    let mut out = Vec::new();
    root.walk(&mut |n| {
        if n.is_leaf() && n.id != root.id {
            out.push(n);
        }
    });
    out
}

fn leaf(doc: &Document, sel: Selection, forward: bool) -> Result<Selection, CursorError> {
    let range = sel.text_range(doc);
    let all = leaves(doc.root());
    let found = if forward {
        all.into_iter().find(|n| doc.span(n.id).is_some_and(|s| s.start >= range.end && s != range))
    } else {
        all.into_iter().rev().find(|n| doc.span(n.id).is_some_and(|s| s.end <= range.start && s != range))
    };
    let n = found.ok_or(CursorError::NoLeaf)?;
    Selection::of_node(doc, n.id).ok_or(CursorError::NoLeaf)
}

fn extend(doc: &Document, sel: Selection, forward: bool) -> Result<(Selection, crate::forest::NodeId), CursorError> {
    let mut o = sel.outermost(doc);
    loop {
        let list = doc.node(o.list).ok_or(CursorError::Invalid)?;
        let n = list.items().len();
        if forward && o.end < n {
            return Ok((Selection::new(o.list, o.start, o.end + 1), list.items()[o.end].id));
        }
        if !forward && o.start > 0 {
            return Ok((Selection::new(o.list, o.start - 1, o.end), list.items()[o.start - 1].id));
        }
        if o.list == doc.root().id {
            return Err(CursorError::NoSibling);
        }
        o = Selection::of_node(doc, o.list).ok_or(CursorError::NoSibling)?.outermost(doc);
    }
}

fn reduce(doc: &Document, sel: Selection, first: bool) -> Result<Selection, CursorError> {
    let i = sel.innermost(doc);
    if i.len() >= 2 {
        return Ok(if first {
            Selection::new(i.list, i.start, i.start + 1)
        } else {
            Selection::new(i.list, i.end - 1, i.end)
        });
    }
    let item = i.items(doc).first().ok_or(CursorError::TooFew)?;
    let n = item.items().len();
    if n == 0 {
        return Err(CursorError::TooFew);
    }
    Ok(if first { Selection::new(item.id, 0, 1) } else { Selection::new(item.id, n - 1, n) })
}

fn descend(doc: &Document, sel: Selection, d: Delim) -> Result<Selection, CursorError> {
    let o = sel.outermost(doc);
    let mut found = None;
    for item in o.items(doc) {
        item.walk(&mut |n| {
            if found.is_none() && n.list_kind().is_some_and(|k| d.matches(k)) {
                found = Some(Selection::new(n.id, 0, n.items().len()));
            }
        });
        if found.is_some() {
            break;
        }
    }
    found.ok_or(CursorError::NoDescendant(d))
}

fn ascend(doc: &Document, sel: Selection, d: Delim) -> Result<Selection, CursorError> {
    let o = sel.outermost(doc);
    let mut candidates = vec![o.list];
    candidates.extend(doc.ancestors(o.list));
    for id in candidates {
        let kind = doc.node(id).and_then(|n| n.list_kind());
        if kind.is_some_and(|k| d.matches(k)) {
            return Selection::of_node(doc, id).ok_or(CursorError::NoAncestor(d));
        }
    }
    Err(CursorError::NoAncestor(d))
}
