use std::collections::{HashMap, HashSet};

use super::{ForestNode, NodeId, NodeKey};
use crate::miniscript::Span;

/// A text splice in old-text coordinates: `[start, end)` was replaced by
/// `inserted` bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edit {
    pub start: usize,
    pub end: usize,
    pub inserted: usize,
}

impl Edit {
    pub fn insertion(at: usize, len: usize) -> Self {
        Edit { start: at, end: at, inserted: len }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReconcileError {
    #[error("overlapping edits at {0}")]
    OverlappingEdits(usize),
    #[error("node {0} has no span")]
    MissingSpan(NodeId),
}

/// Old id to new id for every preserved node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdRemap {
    pub map: HashMap<NodeId, NodeId>,
}

impl IdRemap {
    pub fn get(&self, old: NodeId) -> Option<NodeId> {
        self.map.get(&old).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Renames matched nodes of `after` to their old ids.
    pub fn adopt(&self, after: &mut ForestNode) {
        let inverse: HashMap<NodeId, NodeId> = self.map.iter().map(|(o, n)| (*n, *o)).collect();
        after.walk_mut(&mut |n| {
            if let Some(old) = inverse.get(&n.id) {
                n.id = *old;
            }
        });
    }
}

struct Offsets<'a> {
    edits: &'a [Edit],
}

impl Offsets<'_> {
    /// New position of old offset `p`. `after_insert` decides whether a pure
    /// insertion exactly at `p` lands before it.
    fn map(&self, p: usize, after_insert: bool) -> Option<usize> {
        let mut pos = p as isize;
        for e in self.edits {
            if e.start == e.end {
                if e.start < p || (e.start == p && after_insert) {
                    pos += e.inserted as isize;
                }
            } else if e.end <= p {
                pos += e.inserted as isize - (e.end - e.start) as isize;
            } else if e.start < p {
                return None;
            }
        }
        Some(pos as usize)
    }

    /// Candidate new spans for an old span, most literal first.
    fn candidates(&self, s: Span) -> Vec<Span> {
        let mut out = Vec::with_capacity(4);
        for (a, b) in [(true, false), (false, false), (true, true), (false, true)] {
            if let (Some(x), Some(y)) = (self.map(s.start, a), self.map(s.end, b)) {
                if x <= y {
                    let c = Span::new(x, y);
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }
}

/// Matches nodes of `after` to nodes of `before`.
///
/// Children of matched lists are aligned in order by key and mapped span;
/// leftovers are matched globally when key and mapped span identify a unique
/// node. The roots always correspond.
pub fn reconcile(
    before: &ForestNode,
    before_spans: &HashMap<NodeId, Span>,
    after: &ForestNode,
    after_spans: &HashMap<NodeId, Span>,
    edits: &[Edit],
) -> Result<IdRemap, ReconcileError> {
    let mut sorted = edits.to_vec();
    sorted.sort_by_key(|e| (e.start, e.end));
    for w in sorted.windows(2) {
        if w[1].start < w[0].end {
            return Err(ReconcileError::OverlappingEdits(w[1].start));
        }
    }
    let offsets = Offsets { edits: &sorted };
    let span_of = |spans: &HashMap<NodeId, Span>, id| {
        spans.get(&id).copied().ok_or(ReconcileError::MissingSpan(id))
    };

    let mut m = Matcher { map: HashMap::new(), used: HashSet::new() };
    m.pair(before.id, after.id);

    let mut stack = vec![(before, after)];
    while let Some((old, new)) = stack.pop() {
        let mut j = 0;
        let new_items = new.items();
        for oc in old.items() {
            let cands = offsets.candidates(span_of(before_spans, oc.id)?);
            let key = oc.key();
            let found = (j..new_items.len()).find(|&k| {
                let nc = &new_items[k];
                !m.used.contains(&nc.id)
                    && nc.key() == key
                    && after_spans.get(&nc.id).is_some_and(|s| cands.contains(s))
            });
            if let Some(k) = found {
                m.pair(oc.id, new_items[k].id);
                stack.push((oc, &new_items[k]));
                j = k + 1;
            }
        }
    }

    // Global pass for nodes whose parents changed.
    let mut index: HashMap<(Span, NodeKey), Vec<NodeId>> = HashMap::new();
    after.walk(&mut |n| {
        if let Some(s) = after_spans.get(&n.id) {
            index.entry((*s, n.key())).or_default().push(n.id);
        }
    });
    let mut pending = Vec::new();
    before.walk(&mut |n| {
        if !m.map.contains_key(&n.id) {
            pending.push(n);
        }
    });
    for n in pending {
        let Some(span) = before_spans.get(&n.id) else { continue };
        let key = n.key();
        for c in offsets.candidates(*span) {
            let hits: Vec<NodeId> = index
                .get(&(c, key.clone()))
                .map(|v| v.iter().copied().filter(|id| !m.used.contains(id)).collect())
                .unwrap_or_default();
            if hits.len() == 1 {
                m.pair(n.id, hits[0]);
                break;
            }
        }
    }
    Ok(IdRemap { map: m.map })
}

struct Matcher {
    map: HashMap<NodeId, NodeId>,
    used: HashSet<NodeId>,
}

impl Matcher {
    fn pair(&mut self, old: NodeId, new: NodeId) {
        self.map.insert(old, new);
        self.used.insert(new);
    }
}
