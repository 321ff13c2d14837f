use std::collections::HashMap;

use super::{from_forest, reconcile, to_forest_with_spans, ConvertError, Edit, ForestNode, IdGen, NodeId, ReconcileError};
use crate::miniscript::printer::print_forest;
use crate::miniscript::{parse, Diagnostic, Span};

#[derive(Debug, Clone, thiserror::Error)]
pub enum NormalizeError {
    #[error("invalid tree: {0}")]
    Convert(#[from] ConvertError),
    #[error("text does not parse: {}", .0.first().map(|d| d.to_string()).unwrap_or_default())]
    Parse(Vec<Diagnostic>),
    #[error(transparent)]
    Reconcile(#[from] ReconcileError),
    #[error("printed text does not reparse: {0}")]
    Reprint(String),
}

/// A text replacement in current-text coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splice {
    pub start: usize,
    pub end: usize,
    pub text: String,
}

/// Result of [`Document::splice`]: spans of the new nodes in the spliced
/// text (before pretty-printing) and where each splice ended up there.
#[derive(Debug, Clone)]
pub struct SpliceResult {
    /// The text right after splicing, before pretty-printing.
    pub text: String,
    pub spliced_spans: HashMap<NodeId, Span>,
    pub regions: Vec<Span>,
}

/// The document: a tree, its pretty-printed text and per-node spans.
#[derive(Debug, Clone)]
pub struct Document {
    root: ForestNode,
    text: String,
    spans: HashMap<NodeId, Span>,
    parents: HashMap<NodeId, (NodeId, usize)>,
    pub ids: IdGen,
}

impl Document {
    pub fn parse(src: &str) -> Result<Self, Vec<Diagnostic>> {
        let ast = parse(src)?;
        let mut ids = IdGen::new();
        let (root, _) = to_forest_with_spans(&ast, &mut ids);
        let mut doc = Document {
            root: root.clone(),
            text: String::new(),
            spans: HashMap::new(),
            parents: HashMap::new(),
            ids,
        };
        doc.install(root);
        Ok(doc)
    }

    pub fn root(&self) -> &ForestNode {
        &self.root
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn span(&self, id: NodeId) -> Option<Span> {
        self.spans.get(&id).copied()
    }

    pub fn spans(&self) -> &HashMap<NodeId, Span> {
        &self.spans
    }

    /// Parent list and index of a node; `None` for the root or unknown ids.
    pub fn parent(&self, id: NodeId) -> Option<(NodeId, usize)> {
        self.parents.get(&id).copied()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        id == self.root.id || self.parents.contains_key(&id)
    }

    pub fn node(&self, id: NodeId) -> Option<&ForestNode> {
        let mut path = Vec::new();
        let mut cur = id;
        while cur != self.root.id {
            let (p, i) = self.parent(cur)?;
            path.push(i);
            cur = p;
        }
        let mut n = &self.root;
        for i in path.into_iter().rev() {
            n = &n.items()[i];
        }
        Some(n)
    }

    /// Ancestors from the parent up to the root.
    pub fn ancestors(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut cur = id;
        while let Some((p, _)) = self.parent(cur) {
            out.push(p);
            cur = p;
        }
        out
    }

    pub fn is_ancestor(&self, anc: NodeId, id: NodeId) -> bool {
        self.ancestors(id).contains(&anc)
    }

    fn install(&mut self, root: ForestNode) {
        let printed = print_forest(&root);
        let mut parents = HashMap::new();
        root.walk(&mut |n| {
            for (i, c) in n.items().iter().enumerate() {
                parents.insert(c.id, (n.id, i));
            }
        });
        self.root = root;
        self.text = printed.text;
        self.spans = printed.spans;
        self.parents = parents;
    }

    /// Replaces the tree after a structural edit. The tree is printed and
    /// reparsed so that it is exactly what the text means; node ids survive
    /// wherever the reparse agrees with the edited tree.
    pub fn set_root(&mut self, root: ForestNode) -> Result<(), NormalizeError> {
        from_forest(&root)?;
        let printed = print_forest(&root);
        let ast = parse(&printed.text).map_err(|d| {
            NormalizeError::Reprint(d.first().map(|d| d.to_string()).unwrap_or_default())
        })?;
        let (mut fresh, fresh_spans) = to_forest_with_spans(&ast, &mut self.ids);
        let remap = reconcile(&root, &printed.spans, &fresh, &fresh_spans, &[])?;
        remap.adopt(&mut fresh);
        self.install(fresh);
        Ok(())
    }

    /// Applies text splices, reparses and keeps the ids of every node the
    /// splices left alone.
    pub fn splice(&mut self, splices: &[Splice]) -> Result<SpliceResult, NormalizeError> {
        let mut order: Vec<usize> = (0..splices.len()).collect();
        order.sort_by_key(|&i| (splices[i].start, splices[i].end, i));
        let mut text = String::with_capacity(self.text.len());
        let mut edits = Vec::new();
        let mut regions = vec![Span::default(); splices.len()];
        let mut pos = 0;
        for &i in &order {
            let s = &splices[i];
            if s.start < pos {
                return Err(ReconcileError::OverlappingEdits(s.start).into());
            }
            text.push_str(&self.text[pos..s.start]);
            let at = text.len();
            text.push_str(&s.text);
            regions[i] = Span::new(at, text.len());
            edits.push(Edit { start: s.start, end: s.end, inserted: s.text.len() });
            pos = s.end;
        }
        text.push_str(&self.text[pos..]);

        let ast = parse(&text).map_err(NormalizeError::Parse)?;
        let spliced_text = text;
        let (mut fresh, fresh_spans) = to_forest_with_spans(&ast, &mut self.ids);
        let remap = reconcile(&self.root, &self.spans, &fresh, &fresh_spans, &edits)?;
        let inverse: HashMap<NodeId, NodeId> = remap.map.iter().map(|(o, n)| (*n, *o)).collect();
        let spliced_spans = fresh_spans
            .into_iter()
            .map(|(id, s)| (inverse.get(&id).copied().unwrap_or(id), s))
            .collect();
        remap.adopt(&mut fresh);
        self.install(fresh);
        Ok(SpliceResult { text: spliced_text, spliced_spans, regions })
    }
}
