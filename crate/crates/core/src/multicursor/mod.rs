//! Many cursors acting on one document: broadcast under a failure mode,
//! splitting, queueing, the cursor hierarchy and explicit branching.

mod broadcast;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cursor::{Cursor, NavCommand, Selection, Side};
use crate::forest::Document;
use crate::miniscript::Diagnostic;
use crate::search::{Depth, PatternError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupId(pub u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Relaxed,
    Drop,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    First,
    Last,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremal {
    Outermost,
    Innermost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    Successful,
    Failed,
    All,
}

/// Everything a user can ask the editor to do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Nav(NavCommand),
    Insert(Side, String),
    Delete,
    Copy,
    Paste,
    Split,
    Queue,
    ActivateQueue,
    ReduceCursors(Edge),
    FilterExtremal(Extremal),
    SetMark(char),
    JumpMark(char),
    Rename(String),
    Search(String, Depth),
    SetMode(Mode),
    Branch(Keep),
    IgnoreFailure,
}

impl Command {
    pub fn edits_document(&self) -> bool {
        matches!(self, Command::Insert(..) | Command::Delete | Command::Paste | Command::Rename(_))
    }
}

/// A strict-mode command that failed for some cursors and was not applied.
#[derive(Debug, Clone, PartialEq)]
pub struct PendingBranch {
    pub command: Command,
    /// The cursors as they were before the command.
    pub saved: Vec<Cursor>,
    /// Per saved cursor: `None` if it succeeded, else why it failed.
    pub outcomes: Vec<Option<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CursorSet {
    /// Ordered by document position, then seq.
    pub cursors: Vec<Cursor>,
    /// Parent of each live group; `None` for children of the root group.
    pub groups: BTreeMap<GroupId, Option<GroupId>>,
    pub mode: Mode,
    pub pending: Option<PendingBranch>,
    pub queue: Vec<Selection>,
    next_group: u64,
    next_seq: u64,
}

impl CursorSet {
    /// One cursor selecting the whole document.
    pub fn new(doc: &Document) -> Self {
        let mut set = CursorSet {
            cursors: Vec::new(),
            groups: BTreeMap::new(),
            mode: Mode::Relaxed,
            pending: None,
            queue: Vec::new(),
            next_group: 1,
            next_seq: 0,
        };
        let c = set.fresh_cursor(Selection::root(doc));
        set.cursors.push(c);
        set
    }

    fn fresh_cursor(&mut self, sel: Selection) -> Cursor {
        let seq = self.next_seq;
        self.next_seq += 1;
        Cursor::new(seq, seq, sel)
    }

    fn fresh_group(&mut self) -> GroupId {
        let g = GroupId(self.next_group);
        self.next_group += 1;
        g
    }

    /// Restores ordering and rebuilds the group tree from cursor lineages,
    /// which prunes groups that no cursor belongs to.
    fn normalize(&mut self, doc: &Document) {
        self.cursors.sort_by_key(|c| (c.selection.text_range(doc).start, c.seq));
        self.groups.clear();
        for c in &self.cursors {
            let mut parent = None;
            for g in &c.lineage {
                self.groups.insert(*g, parent);
                parent = Some(*g);
            }
        }
    }
}

/// How a broadcast went.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Applied, possibly without some failing cursors.
    Applied,
    /// Nothing changed.
    Failed,
    /// Nothing changed; a branch decision is required.
    Pending,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub status: Status,
    /// Failing cursor ids with the reason.
    pub failures: Vec<(u64, String)>,
}

impl Outcome {
    fn applied(failures: Vec<(u64, String)>) -> Self {
        Outcome { status: Status::Applied, failures }
    }

    fn failed(failures: Vec<(u64, String)>) -> Self {
        Outcome { status: Status::Failed, failures }
    }
}

/// Commands that are refused outright; the editor state is unchanged.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EditorError {
    #[error("branch required")]
    BranchRequired,
    #[error("no pending branch")]
    NoPendingBranch,
    #[error("no cursor would remain")]
    EmptyBranch,
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// A document together with its cursors.
#[derive(Debug, Clone)]
pub struct Editor {
    pub doc: Document,
    pub set: CursorSet,
}

impl Editor {
    pub fn open(src: &str) -> Result<Self, Vec<Diagnostic>> {
        let doc = Document::parse(src)?;
        let set = CursorSet::new(&doc);
        Ok(Editor { doc, set })
    }

    pub fn text(&self) -> &str {
        self.doc.text()
    }

    /// Text ranges of all cursors, in cursor order.
    pub fn ranges(&self) -> Vec<(usize, usize)> {
        self.set
            .cursors
            .iter()
            .map(|c| {
                let r = c.selection.text_range(&self.doc);
                (r.start, r.end)
            })
            .collect()
    }
}
