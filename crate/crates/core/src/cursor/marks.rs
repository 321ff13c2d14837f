use super::{CursorError, Selection};
use crate::forest::{Document, NodeId};

/// A saved selection, held by node identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mark {
    Items(Vec<NodeId>),
    /// The contents of an empty list.
    EmptyList(NodeId),
}

pub fn make_mark(doc: &Document, sel: Selection) -> Mark {
    let o = sel.outermost(doc);
    if o.is_empty() {
        Mark::EmptyList(o.list)
    } else {
        Mark::Items(o.ids(doc))
    }
}

/// Resolves a mark against the current document.
pub fn jump(doc: &Document, mark: &Mark, letter: char) -> Result<Selection, CursorError> {
    let stale = CursorError::MarkStale(letter);
    match mark {
        Mark::EmptyList(list) => {
            let n = doc.node(*list).ok_or(stale)?;
            Ok(Selection::new(*list, 0, n.items().len()))
        }
        Mark::Items(ids) => {
            let first = ids.first().ok_or(stale.clone())?;
            if *first == doc.root().id {
                return Ok(Selection::root(doc));
            }
            let (list, start) = doc.parent(*first).ok_or(stale.clone())?;
            for (k, id) in ids.iter().enumerate() {
                if doc.parent(*id) != Some((list, start + k)) {
                    return Err(stale);
                }
            }
            Ok(Selection::new(list, start, start + ids.len()))
        }
    }
}
