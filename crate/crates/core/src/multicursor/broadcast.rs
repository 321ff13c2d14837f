use super::{Command, Edge, Editor, EditorError, Extremal, Keep, Mode, Outcome, PendingBranch, Status};
use crate::cursor::{self, copy, jump, make_mark, navigate, Cursor, CursorError, Insertion, Selection};
use crate::forest::{Content, Document};
use crate::miniscript::Span;
use crate::search::{compile_pattern, deep_matches, shallow_match, Depth, Pattern, RenameTemplate};

/// What the mode makes of the per-cursor results.
enum Policy {
    Apply { keep_failed: bool },
    Abort,
    Pend,
}

fn policy(mode: Mode, ok: &[bool]) -> Policy {
    if ok.iter().all(|b| *b) {
        return Policy::Apply { keep_failed: true };
    }
    match mode {
        Mode::Relaxed => Policy::Apply { keep_failed: true },
        Mode::Drop if ok.iter().any(|b| *b) => Policy::Apply { keep_failed: false },
        Mode::Drop => Policy::Abort,
        Mode::Strict => Policy::Pend,
    }
}

/// A command prepared once for all cursors.
enum Prepared {
    Plain,
    Search(Pattern, Depth),
    Rename(RenameTemplate),
}

impl Editor {
    /// Runs one command for every cursor.
    pub fn apply(&mut self, cmd: &Command) -> Result<Outcome, EditorError> {
        if self.set.pending.is_some() {
            return match cmd {
                Command::Branch(keep) => self.branch(*keep),
                Command::IgnoreFailure => {
                    self.set.pending = None;
                    Ok(Outcome::applied(Vec::new()))
                }
                _ => Err(EditorError::BranchRequired),
            };
        }
        match cmd {
            Command::Branch(_) | Command::IgnoreFailure => Err(EditorError::NoPendingBranch),
            Command::SetMode(m) => {
                self.set.mode = *m;
                Ok(Outcome::applied(Vec::new()))
            }
            Command::Queue => {
                let sels: Vec<Selection> = self.set.cursors.iter().map(|c| c.selection).collect();
                self.set.queue.extend(sels);
                Ok(Outcome::applied(Vec::new()))
            }
            Command::ActivateQueue => Ok(self.activate_queue()),
            Command::ReduceCursors(edge) => {
                self.reduce_cursors(*edge);
                Ok(Outcome::applied(Vec::new()))
            }
            Command::FilterExtremal(which) => {
                self.filter_extremal(*which);
                Ok(Outcome::applied(Vec::new()))
            }
            _ => {
                let prepared = match cmd {
                    Command::Search(p, depth) => Prepared::Search(compile_pattern(p)?, *depth),
                    Command::Rename(t) => Prepared::Rename(RenameTemplate::parse(t)),
                    _ => Prepared::Plain,
                };
                if cmd.edits_document() {
                    Ok(self.broadcast_edit(cmd, &prepared))
                } else {
                    Ok(self.broadcast_cursors(cmd, &prepared))
                }
            }
        }
    }

    fn failures(&self, errs: &[Option<String>]) -> Vec<(u64, String)> {
        self.set
            .cursors
            .iter()
            .zip(errs)
            .filter_map(|(c, e)| e.clone().map(|e| (c.id, e)))
            .collect()
    }

    fn pend(&mut self, cmd: &Command, errs: Vec<Option<String>>) -> Outcome {
        let failures = self.failures(&errs);
        self.set.pending =
            Some(PendingBranch { command: cmd.clone(), saved: self.set.cursors.clone(), outcomes: errs });
        Outcome { status: Status::Pending, failures }
    }

    /// Commands that only move, create or annotate cursors.
    fn broadcast_cursors(&mut self, cmd: &Command, prepared: &Prepared) -> Outcome {
        let cursors = self.set.cursors.clone();
        let results: Vec<Result<Vec<Cursor>, CursorError>> =
            cursors.iter().map(|c| self.step(cmd, prepared, c)).collect();
        let errs: Vec<Option<String>> = results.iter().map(|r| r.as_ref().err().map(|e| e.to_string())).collect();
        let ok: Vec<bool> = errs.iter().map(Option::is_none).collect();
        match policy(self.set.mode, &ok) {
            Policy::Abort => Outcome::failed(self.failures(&errs)),
            Policy::Pend => self.pend(cmd, errs),
            Policy::Apply { keep_failed } => {
                let failures = self.failures(&errs);
                let mut next = Vec::new();
                for (old, r) in cursors.into_iter().zip(results) {
                    match r {
                        Ok(new) => next.extend(new),
                        Err(_) if keep_failed => next.push(old),
                        Err(_) => {}
                    }
                }
                self.set.cursors = next;
                self.set.normalize(&self.doc);
                Outcome::applied(failures)
            }
        }
    }

    /// One cursor's part of a non-editing command: its replacement cursors.
    fn step(&mut self, cmd: &Command, prepared: &Prepared, c: &Cursor) -> Result<Vec<Cursor>, CursorError> {
        let doc = &self.doc;
        if !c.selection.is_valid(doc) {
            return Err(CursorError::Invalid);
        }
        match (cmd, prepared) {
            (Command::Nav(nav), _) => Ok(vec![navigate(doc, c, *nav)?]),
            (Command::Copy, _) => {
                let mut c = c.clone();
                c.clipboard = Some(copy(doc, c.selection)?);
                Ok(vec![c])
            }
            (Command::SetMark(letter), _) => {
                let mut c = c.clone();
                c.marks.insert(*letter, make_mark(doc, c.selection));
                Ok(vec![c])
            }
            (Command::JumpMark(letter), _) => {
                let mark = c.marks.get(letter).ok_or(CursorError::MarkUnset(*letter))?;
                let sel = jump(doc, mark, *letter)?;
                let mut c = c.clone();
                c.select(sel);
                Ok(vec![c])
            }
            (Command::Split, _) => {
                let inner = c.selection.innermost(doc);
                if inner.is_empty() {
                    return Err(CursorError::EmptySelection);
                }
                let sels = (inner.start..inner.end).map(|k| Selection::new(inner.list, k, k + 1)).collect();
                Ok(self.children(c, sels))
            }
            (Command::Search(..), Prepared::Search(pat, Depth::Shallow)) => {
                if shallow_match(doc, c.selection, pat) {
                    Ok(vec![c.clone()])
                } else {
                    Err(CursorError::NoMatch)
                }
            }
            (Command::Search(..), Prepared::Search(pat, Depth::Deep)) => {
                let sels = deep_matches(doc, c.selection, pat);
                if sels.is_empty() {
                    return Err(CursorError::NoMatch);
                }
                Ok(self.children(c, sels))
            }
            _ => unreachable!("not a cursor command: {cmd:?}"),
        }
    }

    /// Child cursors of `c`, one per selection, in a fresh group.
    fn children(&mut self, c: &Cursor, sels: Vec<Selection>) -> Vec<Cursor> {
        let g = self.set.fresh_group();
        sels.into_iter()
            .map(|s| {
                let mut child = self.set.fresh_cursor(s);
                child.marks = c.marks.clone();
                child.clipboard = c.clipboard.clone();
                child.lineage = c.lineage.clone();
                child.lineage.push(g);
                child
            })
            .collect()
    }

    /// Edits: each cursor is tried alone, then the successful ones are
    /// applied together.
    fn broadcast_edit(&mut self, cmd: &Command, prepared: &Prepared) -> Outcome {
        let idx: Vec<usize> = (0..self.set.cursors.len()).collect();
        let errs: Vec<Option<String>> =
            idx.iter().map(|&i| self.commit(cmd, prepared, &[i]).err().map(|e| e.to_string())).collect();
        let ok: Vec<bool> = errs.iter().map(Option::is_none).collect();
        match policy(self.set.mode, &ok) {
            Policy::Abort => Outcome::failed(self.failures(&errs)),
            Policy::Pend => self.pend(cmd, errs),
            Policy::Apply { keep_failed } => {
                let failures = self.failures(&errs);
                let active: Vec<usize> = idx.iter().copied().filter(|&i| ok[i]).collect();
                let (doc, sels) = match self.commit(cmd, prepared, &active) {
                    Ok(r) => r,
                    Err(e) => {
                        let mut all = failures;
                        all.extend(active.iter().map(|&i| (self.set.cursors[i].id, e.to_string())));
                        return Outcome::failed(all);
                    }
                };
                let old = std::mem::replace(&mut self.doc, doc);
                let mut next = Vec::new();
                for (i, mut c) in std::mem::take(&mut self.set.cursors).into_iter().enumerate() {
                    if let Some(k) = active.iter().position(|&a| a == i) {
                        c.reset(sels[k]);
                        next.push(c);
                    } else if keep_failed {
                        let s = c.selection.remap(&old, &self.doc);
                        c.reset(s);
                        next.push(c);
                    }
                }
                self.set.cursors = next;
                self.set.queue = self.set.queue.iter().map(|s| s.remap(&old, &self.doc)).collect();
                self.set.normalize(&self.doc);
                Outcome::applied(failures)
            }
        }
    }

    /// Applies an edit for the cursors at `which`, without touching `self`.
    fn commit(
        &self,
        cmd: &Command,
        prepared: &Prepared,
        which: &[usize],
    ) -> Result<(Document, Vec<Selection>), CursorError> {
        let doc = &self.doc;
        let cursors: Vec<&Cursor> = which.iter().map(|&i| &self.set.cursors[i]).collect();
        if cursors.iter().any(|c| !c.selection.is_valid(doc)) {
            return Err(CursorError::Invalid);
        }
        match (cmd, prepared) {
            (Command::Insert(side, text), _) => {
                let ins: Vec<Insertion> = cursors
                    .iter()
                    .map(|c| Insertion { selection: c.selection, side: *side, text: text.clone() })
                    .collect();
                cursor::insert(doc, &ins)
            }
            (Command::Delete, _) => {
                let sels: Vec<Selection> = cursors.iter().map(|c| c.selection).collect();
                cursor::delete(doc, &sels)
            }
            (Command::Paste, _) => {
                let ops = cursors
                    .iter()
                    .map(|c| c.clipboard.clone().map(|clip| (c.selection, clip)).ok_or(CursorError::EmptyClipboard))
                    .collect::<Result<Vec<_>, _>>()?;
                cursor::paste(doc, &ops)
            }
            (Command::Rename(_), Prepared::Rename(t)) => rename(doc, t, &cursors),
            _ => unreachable!("not an edit command: {cmd:?}"),
        }
    }

    fn activate_queue(&mut self) -> Outcome {
        let valid: Vec<Selection> = self.set.queue.iter().copied().filter(|s| s.is_valid(&self.doc)).collect();
        if valid.is_empty() {
            return Outcome::failed(Vec::new());
        }
        let g = self.set.fresh_group();
        let mut next = Vec::new();
        for s in valid {
            let mut c = self.set.fresh_cursor(s);
            c.lineage = vec![g];
            next.push(c);
        }
        self.set.cursors = next;
        self.set.queue.clear();
        self.set.normalize(&self.doc);
        Outcome::applied(Vec::new())
    }

    fn reduce_cursors(&mut self, edge: Edge) {
        let cursors = std::mem::take(&mut self.set.cursors);
        let mut keep: Vec<Cursor> = Vec::new();
        let mut groups: Vec<Option<super::GroupId>> = Vec::new();
        for c in cursors {
            let g = c.lineage.last().copied();
            match groups.iter().position(|x| *x == g) {
                None => {
                    groups.push(g);
                    keep.push(c);
                }
                Some(k) if edge == Edge::Last => keep[k] = c,
                Some(_) => {}
            }
        }
        for c in &mut keep {
            c.lineage.pop();
        }
        self.set.cursors = keep;
        self.set.normalize(&self.doc);
    }

    fn filter_extremal(&mut self, which: Extremal) {
        let ranges: Vec<Span> = self.set.cursors.iter().map(|c| c.selection.text_range(&self.doc)).collect();
        let strictly = |a: Span, b: Span| a.contains(b) && a != b;
        let keep: Vec<bool> = ranges
            .iter()
            .map(|&r| {
                !ranges.iter().any(|&o| match which {
                    Extremal::Outermost => strictly(o, r),
                    Extremal::Innermost => strictly(r, o),
                })
            })
            .collect();
        let mut k = keep.into_iter();
        self.set.cursors.retain(|_| k.next().unwrap_or(true));
        self.set.normalize(&self.doc);
    }

    fn branch(&mut self, keep: Keep) -> Result<Outcome, EditorError> {
        let pending = self.set.pending.clone().expect("checked by caller");
        let chosen: Vec<Cursor> = pending
            .saved
            .iter()
            .zip(&pending.outcomes)
            .filter(|(_, o)| match keep {
                Keep::Successful => o.is_none(),
                Keep::Failed => o.is_some(),
                Keep::All => true,
            })
            .map(|(c, _)| c.clone())
            .collect();
        if chosen.is_empty() {
            return Err(EditorError::EmptyBranch);
        }
        self.set.pending = None;
        self.set.cursors = chosen;
        self.set.normalize(&self.doc);
        if keep != Keep::Successful {
            return Ok(Outcome::applied(Vec::new()));
        }
        // redo the command for the cursors that can carry it
        let mode = std::mem::replace(&mut self.set.mode, Mode::Drop);
        let out = self.apply(&pending.command);
        self.set.mode = mode;
        let out = out?;
        if out.status == Status::Failed {
            // atomic, as the same command in drop mode would have been
            self.set.cursors = pending.saved;
            self.set.normalize(&self.doc);
        }
        Ok(out)
    }
}

/// Renames the identifier each cursor selects. Node identities are kept.
fn rename(doc: &Document, t: &RenameTemplate, cursors: &[&Cursor]) -> Result<(Document, Vec<Selection>), CursorError> {
    let mut tree = doc.root().clone();
    for c in cursors {
        let inner = c.selection.innermost(doc);
        let [item] = inner.items(doc) else { return Err(CursorError::NotIdentifier) };
        if !item.is_identifier() || item.placeholder {
            return Err(CursorError::NotIdentifier);
        }
        let old = item.token_text().unwrap_or_default();
        let new = t.render(old).map_err(|e| CursorError::Rejected(e.to_string()))?;
        if let Some(Content::Token { text, .. }) = tree.find_mut(item.id).map(|n| &mut n.content) {
            *text = new;
        }
    }
    let mut new = doc.clone();
    new.set_root(tree).map_err(|e| CursorError::Rejected(e.to_string()))?;
    let sels = cursors.iter().map(|c| c.selection.remap(doc, &new)).collect();
    Ok((new, sels))
}
