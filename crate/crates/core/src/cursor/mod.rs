//! Single-cursor semantics: selections, navigation, editing and marks.

mod edit;
mod marks;
mod nav;
mod selection;

pub use edit::{copy, delete, insert, paste, Insertion, Side};
pub use marks::{jump, make_mark, Mark};
pub use nav::{navigate, Delim, NavCommand};
pub use selection::Selection;

use std::collections::BTreeMap;

use crate::forest::{ForestNode, NodeId};
use crate::multicursor::GroupId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CursorError {
    #[error("already at the root")]
    NoParent,
    #[error("no leaf in that direction")]
    NoLeaf,
    #[error("nothing to extend to")]
    NoSibling,
    #[error("nothing was extended")]
    NothingExtended,
    #[error("selection has too few items")]
    TooFew,
    #[error("no {0} list inside the selection")]
    NoDescendant(Delim),
    #[error("no enclosing {0} list")]
    NoAncestor(Delim),
    #[error("selection history is empty")]
    EmptyHistory,
    #[error("selection is empty")]
    EmptySelection,
    #[error("clipboard is empty")]
    EmptyClipboard,
    #[error("mark '{0}' is not set")]
    MarkUnset(char),
    #[error("mark '{0}' no longer resolves")]
    MarkStale(char),
    #[error("selection no longer exists")]
    Invalid,
    #[error("overlapping paste targets")]
    OverlappingPaste,
    #[error("no match")]
    NoMatch,
    #[error("selection is not a single identifier")]
    NotIdentifier,
    #[error("edit rejected: {0}")]
    Rejected(String),
}

/// One cursor of the editor.
#[derive(Debug, Clone, PartialEq)]
pub struct Cursor {
    pub id: u64,
    pub seq: u64,
    pub selection: Selection,
    pub marks: BTreeMap<char, Mark>,
    pub clipboard: Option<Vec<ForestNode>>,
    pub history: Vec<Selection>,
    pub redo: Vec<Selection>,
    pub lineage: Vec<GroupId>,
    /// Item added by the last extend command.
    pub last_extended: Option<NodeId>,
}

impl Cursor {
    pub fn new(id: u64, seq: u64, selection: Selection) -> Self {
        Cursor {
            id,
            seq,
            selection,
            marks: BTreeMap::new(),
            clipboard: None,
            history: Vec::new(),
            redo: Vec::new(),
            lineage: Vec::new(),
            last_extended: None,
        }
    }

    /// Moves to a new selection, recording the old one for undo.
    pub fn select(&mut self, sel: Selection) {
        if self.history.last() != Some(&self.selection) {
            self.history.push(self.selection);
        }
        self.selection = sel;
        self.redo.clear();
    }

    /// Sets the selection after a document edit; old selections no longer
    /// refer to the same text.
    pub fn reset(&mut self, sel: Selection) {
        self.selection = sel;
        self.history.clear();
        self.redo.clear();
        self.last_extended = None;
    }
}
