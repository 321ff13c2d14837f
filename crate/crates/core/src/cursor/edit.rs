use std::collections::{HashMap, HashSet};

use super::{CursorError, Selection};
use crate::forest::{remove_and_repair, Document, ForestNode, HoleTarget, NodeId, Splice};
use crate::miniscript::printer::needs_terminator;
use crate::miniscript::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Before,
    After,
}

#[derive(Debug, Clone)]
pub struct Insertion {
    pub selection: Selection,
    pub side: Side,
    pub text: String,
}

fn rejected(e: impl std::fmt::Display) -> CursorError {
    CursorError::Rejected(e.to_string())
}

/// Where typed text goes for one cursor. A selected placeholder is replaced.
fn splice_for(doc: &Document, ins: &Insertion) -> Splice {
    let inner = ins.selection.innermost(doc);
    if let [item] = inner.items(doc) {
        if item.placeholder {
            let span = doc.span(item.id).unwrap_or_default();
            return Splice { start: span.start, end: span.end, text: ins.text.clone() };
        }
    }
    let o = ins.selection.outermost(doc);
    let range = o.text_range(doc);
    let at = match ins.side {
        Side::Before => range.start,
        Side::After => {
            let in_statements = doc.node(o.list).and_then(|n| n.list_kind()).is_some_and(|k| k.holds_statements());
            let terminated = o.items(doc).last().is_some_and(needs_terminator);
            range.end + usize::from(in_statements && terminated)
        }
    };
    Splice { start: at, end: at, text: ins.text.clone() }
}

/// Inserts text for every cursor, in the given order, and reparses. Each
/// cursor ends up selecting the nodes built from its own text.
pub fn insert(doc: &Document, inserts: &[Insertion]) -> Result<(Document, Vec<Selection>), CursorError> {
    let splices: Vec<Splice> = inserts.iter().map(|i| splice_for(doc, i)).collect();
    let mut new = doc.clone();
    let result = new.splice(&splices).map_err(rejected)?;
    let sels = result
        .regions
        .iter()
        .map(|r| covering_region(&new, &result.spliced_spans, &result.text, *r))
        .collect();
    Ok((new, sels))
}

/// Smallest selection covering a text region of the spliced text.
fn covering_region(doc: &Document, spans: &HashMap<NodeId, Span>, text: &str, region: Span) -> Selection {
    let slice = &text[region.start..region.end];
    let lead = slice.len() - slice.trim_start().len();
    let trail = slice.len() - slice.trim_end().len();
    let (a, b) = if lead + trail >= slice.len() {
        (region.start, region.start)
    } else {
        (region.start + lead, region.end - trail)
    };
    let contains = |n: &ForestNode| spans.get(&n.id).is_some_and(|s| s.start <= a && b <= s.end);
    let mut cur = doc.root();
    while let Some(c) = cur.items().iter().find(|c| contains(c)) {
        cur = c;
    }
    let overlapping: Vec<usize> = cur
        .items()
        .iter()
        .enumerate()
        .filter(|(_, c)| spans.get(&c.id).is_some_and(|s| s.start < b && s.end > a))
        .map(|(i, _)| i)
        .collect();
    match (overlapping.first(), overlapping.last()) {
        (Some(lo), Some(hi)) => Selection::new(cur.id, *lo, hi + 1),
        _ => Selection::of_node(doc, cur.id).unwrap_or_else(|| Selection::root(doc)),
    }
}

/// Deletes the union of all selected items, repairs the tree and places each
/// cursor near its hole.
pub fn delete(doc: &Document, sels: &[Selection]) -> Result<(Document, Vec<Selection>), CursorError> {
    let outer: Vec<Selection> = sels.iter().map(|s| s.outermost(doc)).collect();
    if outer.iter().any(|s| s.is_empty()) {
        return Err(CursorError::EmptySelection);
    }
    let targets: HashSet<NodeId> = outer.iter().flat_map(|s| s.ids(doc)).collect();
    let mut new = doc.clone();
    let out = remove_and_repair(doc.root(), &targets, &mut new.ids);
    let holes = out.holes.clone();
    new.set_root(out.root).map_err(rejected)?;

    let result = outer
        .iter()
        .map(|s| {
            let first = s.ids(doc)[0];
            let mut probe = vec![first];
            probe.extend(doc.ancestors(first));
            let hole = probe.iter().find_map(|id| holes.iter().find(|h| h.removed.contains(id)));
            let Some(hole) = hole else { return Selection::fallback(doc, &new, s.list) };
            match hole.target {
                HoleTarget::Node(id) if new.contains(id) => {
                    Selection::of_node(&new, id).unwrap_or_else(|| Selection::root(&new))
                }
                HoleTarget::EmptyList(list) if new.contains(list) => {
                    let node = new.node(list).expect("contained");
                    let kind = node.list_kind();
                    if node.items().is_empty() && !kind.is_some_and(|k| k.allows_empty_selection()) {
                        Selection::of_node(&new, list).unwrap_or_else(|| Selection::root(&new))
                    } else {
                        Selection::new(list, 0, node.items().len())
                    }
                }
                _ => Selection::fallback(doc, &new, hole.list),
            }
        })
        .collect();
    Ok((new, result))
}

/// Detached copy of the selected items.
pub fn copy(doc: &Document, sel: Selection) -> Result<Vec<ForestNode>, CursorError> {
    let o = sel.outermost(doc);
    if o.is_empty() {
        return Err(CursorError::EmptySelection);
    }
    Ok(o.items(doc).to_vec())
}

/// Replaces each selected range with fresh copies of its clipboard.
/// Nested targets are applied innermost first; identical targets paste once.
pub fn paste(doc: &Document, ops: &[(Selection, Vec<ForestNode>)]) -> Result<(Document, Vec<Selection>), CursorError> {
    let outer: Vec<Selection> = ops.iter().map(|(s, _)| s.outermost(doc)).collect();
    let ranges: Vec<Span> = outer.iter().map(|s| s.text_range(doc)).collect();
    for i in 0..ops.len() {
        if ops[i].1.is_empty() {
            return Err(CursorError::EmptyClipboard);
        }
        for j in i + 1..ops.len() {
            let (a, b) = (ranges[i], ranges[j]);
            let overlap = a.start < b.end && b.start < a.end;
            if overlap && outer[i] != outer[j] && !a.contains(b) && !b.contains(a) {
                return Err(CursorError::OverlappingPaste);
            }
        }
    }
    // first op with each distinct target does the work
    let mut owner: Vec<usize> = (0..ops.len()).collect();
    for i in 0..ops.len() {
        if let Some(j) = (0..i).find(|&j| outer[j] == outer[i]) {
            owner[i] = j;
        }
    }
    let mut order: Vec<usize> = (0..ops.len()).filter(|&i| owner[i] == i).collect();
    order.sort_by(|&x, &y| {
        let (a, b) = (ranges[x], ranges[y]);
        a.end.cmp(&b.end).then(b.start.cmp(&a.start)).then(x.cmp(&y))
    });

    let mut new = doc.clone();
    let mut tree = doc.root().clone();
    let mut pasted: Vec<Vec<NodeId>> = vec![Vec::new(); ops.len()];
    for &i in &order {
        let sel = outer[i];
        let old_ids = sel.ids(doc);
        let fresh: Vec<ForestNode> = ops[i].1.iter().map(|n| n.clone_fresh(&mut new.ids)).collect();
        pasted[i] = fresh.iter().map(|n| n.id).collect();
        let list = tree.find_mut(sel.list).ok_or(CursorError::Invalid)?;
        let items = list.items_mut().ok_or(CursorError::Invalid)?;
        let start = match old_ids.first() {
            Some(first) => items.iter().position(|n| n.id == *first).ok_or(CursorError::Invalid)?,
            None => 0,
        };
        items.splice(start..start + old_ids.len(), fresh);
    }
    new.set_root(tree).map_err(rejected)?;

    let result = (0..ops.len())
        .map(|i| {
            let o = owner[i];
            if let Some(s) = Selection::covering(&new, &pasted[o]) {
                return s;
            }
            // swallowed by an enclosing paste
            let encl = order
                .iter()
                .find(|&&k| k != o && ranges[k].contains(ranges[o]) && Selection::covering(&new, &pasted[k]).is_some());
            match encl {
                Some(&k) => Selection::covering(&new, &pasted[k]).expect("checked"),
                None => Selection::fallback(doc, &new, outer[o].list),
            }
        })
        .collect();
    Ok((new, result))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(doc: &Document, text: &str) -> NodeId {
        let mut out = None;
        doc.root().walk(&mut |n| {
            if out.is_none() && n.token_text() == Some(text) {
                out = Some(n.id);
            }
        });
        out.unwrap()
    }

    fn sel_text(doc: &Document, s: Selection) -> String {
        let r = s.text_range(doc);
        doc.text()[r.start..r.end].to_string()
    }

    fn at(doc: &Document, text: &str) -> Selection {
        Selection::of_node(doc, find(doc, text)).unwrap()
    }

    #[test]
    fn insert_after_argument() {
        let doc = Document::parse("f(x.y);").unwrap();
        let x = find(&doc, "x");
        let (tight, _) = doc.parent(x).unwrap();
        let sel = Selection::new(tight, 0, 2);
        let ins = |t: &str| Insertion { selection: sel, side: Side::After, text: t.into() };
        let (d1, s1) = insert(&doc, &[ins(".z")]).unwrap();
        assert_eq!(d1.text(), "f(x.y.z);\n");
        assert_eq!(sel_text(&d1, s1[0]), "z");
        let (d2, s2) = insert(&doc, &[ins(",z")]).unwrap();
        assert_eq!(d2.text(), "f(x.y, z);\n");
        assert_eq!(sel_text(&d2, s2[0]), "z");
        assert!(d2.contains(x));
    }

    #[test]
    fn duplicate_cursors_insert_twice() {
        let doc = Document::parse("a;").unwrap();
        let sel = Selection::root(&doc);
        let ins = Insertion { selection: sel, side: Side::After, text: "\nb;".into() };
        let (d, s) = insert(&doc, &[ins.clone(), ins]).unwrap();
        assert_eq!(d.text(), "a;\nb;\nb;\n");
        assert_ne!(s[0], s[1]);
    }

    #[test]
    fn invalid_insert_changes_nothing() {
        let doc = Document::parse("f(a);").unwrap();
        let sel = at(&doc, "a");
        let r = insert(&doc, &[Insertion { selection: sel, side: Side::After, text: "(".into() }]);
        assert!(matches!(r, Err(CursorError::Rejected(_))));
    }

    #[test]
    fn typing_over_placeholder_replaces_it() {
        let doc = Document::parse("f(placeholder);").unwrap();
        let sel = at(&doc, "placeholder");
        let (d, s) = insert(&doc, &[Insertion { selection: sel, side: Side::After, text: "g()".into() }]).unwrap();
        assert_eq!(d.text(), "f(g());\n");
        assert_eq!(sel_text(&d, s[0]), "g()");
    }

    #[test]
    fn delete_callee_leaves_placeholder() {
        let doc = Document::parse("f();").unwrap();
        let (d, s) = delete(&doc, &[at(&doc, "f")]).unwrap();
        assert_eq!(d.text(), "placeholder();\n");
        assert_eq!(sel_text(&d, s[0]), "placeholder");
    }

    #[test]
    fn delete_call_from_middle_of_chain() {
        let doc = Document::parse("myArray.map(f).filter(g);").unwrap();
        let map = at(&doc, "map");
        let sel = Selection::new(map.list, map.start, map.end + 1);
        let (d, s) = delete(&doc, &[sel]).unwrap();
        assert_eq!(d.text(), "myArray.filter(g);\n");
        assert_eq!(sel_text(&d, s[0]), "filter");
    }

    #[test]
    fn delete_sole_statement() {
        let doc = Document::parse("f();").unwrap();
        let (d, s) = delete(&doc, &[Selection::root(&doc)]).unwrap();
        assert_eq!(d.text(), "");
        assert!(s[0].is_empty());
        assert_eq!(s[0].list, d.root().id);
    }

    #[test]
    fn overlapping_delete_is_union() {
        let doc = Document::parse("x([a, b, c]);").unwrap();
        let a = at(&doc, "a");
        let s1 = Selection::new(a.list, 0, 2);
        let s2 = Selection::new(a.list, 1, 3);
        let (d, _) = delete(&doc, &[s1, s2]).unwrap();
        assert_eq!(d.text(), "x([]);\n");
    }

    #[test]
    fn paste_replaces_and_validates() {
        let doc = Document::parse("f(a + b);\ng(x);").unwrap();
        let clip = copy(&doc, at(&doc, "x")).unwrap();
        let a = at(&doc, "a");
        let loose = Selection::of_node(&doc, a.list).unwrap();
        let (d, s) = paste(&doc, &[(loose, clip.clone())]).unwrap();
        assert_eq!(d.text(), "f(x);\ng(x);\n");
        assert_eq!(sel_text(&d, s[0]), "x");

        let call = copy(&doc, Selection::new(doc.root().id, 1, 2)).unwrap();
        assert!(paste(&doc, &[(at(&doc, "+"), call)]).is_err());
        let decl = Document::parse("var q = 1;").unwrap();
        let vstmt = copy(&decl, Selection::root(&decl)).unwrap();
        let before = doc.text().to_string();
        assert!(paste(&doc, &[(at(&doc, "x"), vstmt)]).is_err());
        assert_eq!(doc.text(), before);
    }
}
