use serde::Serialize;

use crate::forest::{Document, ForestNode, NodeId};
use crate::miniscript::Span;

/// A contiguous range `[start, end)` of the items of one list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Selection {
    pub list: NodeId,
    pub start: usize,
    pub end: usize,
}

impl Selection {
    pub fn new(list: NodeId, start: usize, end: usize) -> Self {
        Selection { list, start, end }
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    /// The whole document.
    pub fn root(doc: &Document) -> Self {
        Selection::new(doc.root().id, 0, doc.root().items().len())
    }

    /// A single node selected as an item of its parent. The root is selected
    /// as its full item range.
    pub fn of_node(doc: &Document, id: NodeId) -> Option<Self> {
        if id == doc.root().id {
            return Some(Selection::root(doc));
        }
        let (p, i) = doc.parent(id)?;
        Some(Selection::new(p, i, i + 1))
    }

    pub fn is_valid(&self, doc: &Document) -> bool {
        let Some(list) = doc.node(self.list) else { return false };
        let Some(kind) = list.list_kind() else { return false };
        self.start <= self.end
            && self.end <= list.items().len()
            && (self.start < self.end || (list.items().is_empty() && kind.allows_empty_selection()))
    }

    pub fn items<'a>(&self, doc: &'a Document) -> &'a [ForestNode] {
        match doc.node(self.list) {
            Some(n) => &n.items()[self.start.min(n.items().len())..self.end.min(n.items().len())],
            None => &[],
        }
    }

    pub fn ids(&self, doc: &Document) -> Vec<NodeId> {
        self.items(doc).iter().map(|n| n.id).collect()
    }

    /// Byte range of the selected text. An empty selection sits just inside
    /// the list's opening delimiter.
    pub fn text_range(&self, doc: &Document) -> Span {
        let items = self.items(doc);
        if let (Some(first), Some(last)) = (items.first(), items.last()) {
            let a = doc.span(first.id).unwrap_or_default();
            let b = doc.span(last.id).unwrap_or_default();
            return Span::new(a.start, b.end);
        }
        let Some(list) = doc.node(self.list) else { return Span::default() };
        let span = doc.span(self.list).unwrap_or_default();
        let offset = list.list_kind().and_then(|k| k.delimiters()).map_or(0, |(o, _)| o.len());
        Span::new(span.start + offset, span.start + offset)
    }

    /// Equivalent selection one level up, if the whole list prints exactly
    /// as this range.
    fn up(&self, doc: &Document) -> Option<Self> {
        let list = doc.node(self.list)?;
        let n = list.items().len();
        if n == 0 || self.start != 0 || self.end != n || self.list == doc.root().id {
            return None;
        }
        if doc.span(self.list)? != self.text_range(doc) {
            return None;
        }
        Selection::of_node(doc, self.list)
    }

    /// Equivalent selection one level down, if the single selected item is
    /// a list printing exactly as its items.
    fn down(&self, doc: &Document) -> Option<Self> {
        if self.len() != 1 {
            return None;
        }
        let item = &self.items(doc)[0];
        let n = item.items().len();
        if n == 0 {
            return None;
        }
        let inner = Selection::new(item.id, 0, n);
        (doc.span(item.id)? == inner.text_range(doc)).then_some(inner)
    }

    /// All equivalent selections, innermost first.
    pub fn chain(&self, doc: &Document) -> Vec<Self> {
        let mut down = vec![*self];
        while let Some(d) = down.last().unwrap().down(doc) {
            down.push(d);
        }
        down.reverse();
        while let Some(u) = down.last().unwrap().up(doc) {
            down.push(u);
        }
        down
    }

    pub fn outermost(&self, doc: &Document) -> Self {
        *self.chain(doc).last().expect("chain is never empty")
    }

    pub fn innermost(&self, doc: &Document) -> Self {
        self.chain(doc)[0]
    }

    /// The contiguous range covering the surviving `ids` that share a parent
    /// with the first survivor.
    pub fn covering(doc: &Document, ids: &[NodeId]) -> Option<Self> {
        let alive: Vec<NodeId> = ids.iter().copied().filter(|id| doc.contains(*id)).collect();
        let first = *alive.first()?;
        if first == doc.root().id {
            return Some(Selection::root(doc));
        }
        let (list, _) = doc.parent(first)?;
        let idx: Vec<usize> =
            alive.iter().filter_map(|id| doc.parent(*id)).filter(|(p, _)| *p == list).map(|(_, i)| i).collect();
        let lo = *idx.iter().min()?;
        let hi = *idx.iter().max()?;
        Some(Selection::new(list, lo, hi + 1))
    }

    /// Carries a selection from `old` over to `new`, an edited version of the
    /// same document. Falls back to the nearest surviving ancestor.
    pub fn remap(&self, old: &Document, new: &Document) -> Self {
        if self.is_empty() {
            if let Some(list) = new.node(self.list) {
                let n = list.items().len();
                return Selection::new(self.list, 0, n);
            }
        } else if let Some(s) = Selection::covering(new, &self.ids(old)) {
            return s;
        }
        Selection::fallback(old, new, self.list)
    }

    /// Selects `id` in `new`, or its closest ancestor (as known in `old`)
    /// that still exists.
    pub fn fallback(old: &Document, new: &Document, id: NodeId) -> Self {
        let mut candidates = vec![id];
        candidates.extend(old.ancestors(id));
        candidates
            .into_iter()
            .find(|c| new.contains(*c))
            .and_then(|c| Selection::of_node(new, c))
            .unwrap_or_else(|| Selection::root(new))
    }

    /// Is this selection equivalent to `other`?
    pub fn equivalent(&self, doc: &Document, other: &Selection) -> bool {
        self.chain(doc).contains(other)
    }
}
