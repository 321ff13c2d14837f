//! Editing sessions: snapshots, script replay and the JSON service.

mod script;
mod serve;

pub use script::{format_command, parse_line, parse_script, ScriptError};
pub use serve::{handle_message, serve, ClientMessage, ServerMessage};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cursor::jump;
use crate::miniscript::Diagnostic;
use crate::multicursor::{Command, Editor, EditorError, Mode, Outcome, Status};

/// One document being edited.
#[derive(Debug, Clone)]
pub struct Session {
    pub editor: Editor,
    last: Option<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CursorView {
    pub id: u64,
    pub seq: u64,
    /// Character offsets into the text.
    pub range: [usize; 2],
    pub depth: usize,
    /// `null` when the mark no longer resolves.
    pub marks: BTreeMap<char, Option<[usize; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendingView {
    pub cursor: u64,
    /// `succeeded` or `failed`.
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureView {
    pub cursor: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeView {
    /// `applied`, `failed` or `pending`.
    pub status: String,
    pub failures: Vec<FailureView>,
}

/// The client-visible state of a session.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub text: String,
    pub mode: String,
    pub cursors: Vec<CursorView>,
    pub pending: Option<Vec<PendingView>>,
    /// How the last command went; `null` right after opening.
    pub outcome: Option<OutcomeView>,
}

fn char_offset(text: &str, byte: usize) -> usize {
    text[..byte].chars().count()
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Relaxed => "relaxed",
        Mode::Drop => "drop",
        Mode::Strict => "strict",
    }
}

impl Session {
    pub fn open(source: &str) -> Result<Self, Vec<Diagnostic>> {
        Ok(Session { editor: Editor::open(source)?, last: None })
    }

    pub fn text(&self) -> &str {
        self.editor.text()
    }

    pub fn apply(&mut self, cmd: &Command) -> Result<&Outcome, EditorError> {
        let out = self.editor.apply(cmd)?;
        Ok(self.last.insert(out))
    }

    pub fn snapshot(&self) -> Snapshot {
        let doc = &self.editor.doc;
        let text = doc.text();
        let range = |s: crate::miniscript::Span| [char_offset(text, s.start), char_offset(text, s.end)];
        let cursors = self
            .editor
            .set
            .cursors
            .iter()
            .map(|c| CursorView {
                id: c.id,
                seq: c.seq,
                range: range(c.selection.text_range(doc)),
                depth: c.lineage.len(),
                marks: c
                    .marks
                    .iter()
                    .map(|(l, m)| (*l, jump(doc, m, *l).ok().map(|s| range(s.text_range(doc)))))
                    .collect(),
            })
            .collect();
        let pending = self.editor.set.pending.as_ref().map(|p| {
            p.saved
                .iter()
                .zip(&p.outcomes)
                .map(|(c, o)| PendingView {
                    cursor: c.id,
                    outcome: if o.is_none() { "succeeded" } else { "failed" }.to_string(),
                })
                .collect()
        });
        let outcome = self.last.as_ref().map(|o| OutcomeView {
            status: match o.status {
                Status::Applied => "applied",
                Status::Failed => "failed",
                Status::Pending => "pending",
            }
            .to_string(),
            failures: o.failures.iter().map(|(c, r)| FailureView { cursor: *c, reason: r.clone() }).collect(),
        });
        Snapshot { text: text.to_string(), mode: mode_name(self.editor.set.mode).to_string(), cursors, pending, outcome }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: usize,
    /// The script line; `null` for the initial open.
    pub command: Option<String>,
    pub snapshot: Snapshot,
}

#[derive(Debug, thiserror::Error)]
pub enum ReplayError {
    #[error("input does not parse: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    Open(Vec<Diagnostic>),
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error("step {step} (line {line}, `{command}`) rejected: {error}")]
    Rejected { step: usize, line: usize, command: String, error: EditorError },
}

#[derive(Debug, Clone)]
pub struct Replay {
    pub text: String,
    pub trace: Vec<TraceEntry>,
}

/// Runs a script against a source text, recording a snapshot per step.
pub fn replay(source: &str, script: &str) -> Result<Replay, ReplayError> {
    let commands = parse_script(script)?;
    let mut session = Session::open(source).map_err(ReplayError::Open)?;
    let mut trace = vec![TraceEntry { step: 0, command: None, snapshot: session.snapshot() }];
    for (k, (line, cmd)) in commands.iter().enumerate() {
        let step = k + 1;
        let command = format_command(cmd);
        if let Err(error) = session.apply(cmd) {
            return Err(ReplayError::Rejected { step, line: *line, command, error });
        }
        trace.push(TraceEntry { step, command: Some(command), snapshot: session.snapshot() });
    }
    Ok(Replay { text: session.text().to_string(), trace })
}

/// The trace as JSON lines.
pub fn trace_jsonl(trace: &[TraceEntry]) -> String {
    let mut out = String::new();
    for t in trace {
        out.push_str(&serde_json::to_string(t).expect("snapshots serialize"));
        out.push('\n');
    }
    out
}
