use std::collections::HashSet;

use super::shape::{assign_slots, is_expression, template, Mult};
use super::{check_list, ForestNode, IdGen, ListKind, NodeId, TokenRole};

/// Where a cursor should land after the items it selected were removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleTarget {
    /// A filler or a surviving neighbour.
    Node(NodeId),
    /// The list is now empty.
    EmptyList(NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub list: NodeId,
    pub removed: Vec<NodeId>,
    pub filler: Option<NodeId>,
    pub target: HoleTarget,
}

#[derive(Debug, Clone)]
pub struct RepairOutcome {
    pub root: ForestNode,
    pub holes: Vec<Hole>,
}

impl RepairOutcome {
    pub fn hole_for(&self, removed: NodeId) -> Option<&Hole> {
        self.holes.iter().find(|h| h.removed.contains(&removed))
    }
}

/// Removes every node in `targets` and fills the holes that the grammar
/// requires.
pub fn remove_and_repair(root: &ForestNode, targets: &HashSet<NodeId>, ids: &mut IdGen) -> RepairOutcome {
    let mut holes = Vec::new();
    let root = rebuild(root, targets, ids, &mut holes);
    RepairOutcome { root, holes }
}

/// Fills every grammar hole in a tree of unknown history.
pub fn repair_with_placeholders(tree: &ForestNode, ids: &mut IdGen) -> ForestNode {
    let mut out = tree.clone();
    repair_in_place(&mut out, ids);
    out
}

fn repair_in_place(n: &mut ForestNode, ids: &mut IdGen) {
    let Some(kind) = n.list_kind() else { return };
    let items = n.items_mut().expect("list");
    for c in items.iter_mut() {
        repair_in_place(c, ids);
    }
    if check_list(kind, items) {
        return;
    }
    let taken = std::mem::take(items);
    *items = match kind {
        ListKind::LooseExpression => fix_loose(taken, &[], ids).0,
        ListKind::TightExpression => fix_tight(taken, &[], ids).0,
        _ => fix_greedy(kind, taken, ids),
    };
}

struct RunInfo {
    removed: Vec<NodeId>,
    /// Position in the kept items where the run was.
    at: usize,
}

fn rebuild(n: &ForestNode, targets: &HashSet<NodeId>, ids: &mut IdGen, holes: &mut Vec<Hole>) -> ForestNode {
    let Some(kind) = n.list_kind() else { return n.clone() };
    let orig = n.items();
    let removed: Vec<bool> = orig.iter().map(|c| targets.contains(&c.id)).collect();
    let kept_children: Vec<ForestNode> = orig
        .iter()
        .zip(&removed)
        .filter(|(_, r)| !**r)
        .map(|(c, _)| rebuild(c, targets, ids, holes))
        .collect();
    let mut out = n.clone();
    if !removed.contains(&true) {
        *out.items_mut().expect("list") = kept_children;
        return out;
    }

    let mut runs: Vec<RunInfo> = Vec::new();
    let mut kept_count = 0;
    for (i, c) in orig.iter().enumerate() {
        if removed[i] {
            if i > 0 && removed[i - 1] {
                runs.last_mut().expect("run").removed.push(c.id);
            } else {
                runs.push(RunInfo { removed: vec![c.id], at: kept_count });
            }
        } else {
            kept_count += 1;
        }
    }
    let positions: Vec<usize> = runs.iter().map(|r| r.at).collect();

    let (items, placed) = match kind {
        ListKind::LooseExpression => fix_loose(kept_children, &positions, ids),
        ListKind::TightExpression => fix_tight(kept_children, &positions, ids),
        _ => match assign_slots(kind, orig) {
            Some(slots) => fix_slots(kind, orig, &slots, &removed, kept_children, ids),
            None => {
                let items = fix_greedy(kind, kept_children, ids);
                let placed = positions.iter().map(|p| (*p, None)).collect();
                (items, placed)
            }
        },
    };

    for (run, (index, filler)) in runs.into_iter().zip(placed) {
        let target = match filler {
            Some(f) => HoleTarget::Node(f),
            None if index < items.len() => HoleTarget::Node(items[index].id),
            None if index > 0 => HoleTarget::Node(items[index.min(items.len()) - 1].id),
            None => HoleTarget::EmptyList(n.id),
        };
        holes.push(Hole { list: n.id, removed: run.removed, filler, target });
    }
    *out.items_mut().expect("list") = items;
    out
}

/// Slot-aware repair. Returns the new items and, per removed run, the final
/// index of the hole plus any filler placed there.
fn fix_slots(
    kind: ListKind,
    orig: &[ForestNode],
    slots: &[usize],
    removed: &[bool],
    kept: Vec<ForestNode>,
    ids: &mut IdGen,
) -> (Vec<ForestNode>, Vec<(usize, Option<NodeId>)>) {
    let tpl = template(kind);
    let required = |si: usize| match tpl[si].mult {
        Mult::One => 1,
        Mult::Optional => 0,
        Mult::Many(min) => min,
    };
    let mut kept_in_slot = vec![0usize; tpl.len()];
    for (i, s) in slots.iter().enumerate() {
        if !removed[i] {
            kept_in_slot[*s] += 1;
        }
    }
    let mut filled = vec![0usize; tpl.len()];
    let mut kept = kept.into_iter();
    let mut items = Vec::with_capacity(orig.len());
    let mut placed = Vec::new();
    for i in 0..orig.len() {
        if !removed[i] {
            items.push(kept.next().expect("kept item"));
            continue;
        }
        if i == 0 || !removed[i - 1] {
            placed.push((items.len(), None));
        }
        let si = slots[i];
        if kept_in_slot[si] + filled[si] < required(si) {
            let f = tpl[si].cat.filler(ids);
            let run = placed.last_mut().expect("run");
            run.1.get_or_insert(f.id);
            items.push(f);
            filled[si] += 1;
        }
    }
    (items, placed)
}

fn fix_greedy(kind: ListKind, items: Vec<ForestNode>, ids: &mut IdGen) -> Vec<ForestNode> {
    let mut out = Vec::new();
    let mut i = 0;
    for slot in template(kind) {
        let accepts = |n: &ForestNode| slot.cat.accepts(n);
        match slot.mult {
            Mult::One => {
                if i < items.len() && accepts(&items[i]) {
                    out.push(items[i].clone());
                    i += 1;
                } else {
                    out.push(slot.cat.filler(ids));
                }
            }
            Mult::Optional => {
                if i < items.len() && accepts(&items[i]) {
                    out.push(items[i].clone());
                    i += 1;
                }
            }
            Mult::Many(min) => {
                let start = out.len();
                while i < items.len() && accepts(&items[i]) {
                    out.push(items[i].clone());
                    i += 1;
                }
                while out.len() - start < min {
                    out.push(slot.cat.filler(ids));
                }
            }
        }
    }
    out
}

type Placed = Vec<(usize, Option<NodeId>)>;

/// Restores operand/operator alternation. A missing operand becomes a
/// placeholder; an operand directly following another operand is dropped.
fn fix_loose(kept: Vec<ForestNode>, holes: &[usize], ids: &mut IdGen) -> (Vec<ForestNode>, Placed) {
    let mut out = Vec::with_capacity(kept.len() + 1);
    let mut placed: Placed = Vec::new();
    let mut expect_operand = true;
    let mut hole_iter = holes.iter().peekable();
    let n = kept.len();
    for (k, item) in kept.into_iter().enumerate() {
        let mut here = Vec::new();
        while hole_iter.peek().is_some_and(|h| **h == k) {
            hole_iter.next();
            here.push(placed.len());
            placed.push((out.len(), None));
        }
        if expect_operand && item.is_operator() {
            let p = ForestNode::placeholder(ids.fresh());
            if let Some(h) = here.first() {
                placed[*h].1 = Some(p.id);
            }
            out.push(p);
            expect_operand = false;
        }
        if expect_operand == item.is_operator() {
            continue;
        }
        out.push(item);
        expect_operand = !expect_operand;
    }
    let mut here = Vec::new();
    for h in hole_iter {
        debug_assert!(*h == n);
        here.push(placed.len());
        placed.push((out.len(), None));
    }
    if expect_operand {
        let p = ForestNode::placeholder(ids.fresh());
        if let Some(h) = here.first() {
            placed[*h].1 = Some(p.id);
        }
        out.push(p);
    }
    (out, placed)
}

fn fix_tight(kept: Vec<ForestNode>, holes: &[usize], ids: &mut IdGen) -> (Vec<ForestNode>, Placed) {
    let mut placed: Placed = holes.iter().map(|h| (*h, None)).collect();
    let mut out = kept;
    if !out.first().is_some_and(is_expression) {
        let p = ForestNode::placeholder(ids.fresh());
        for entry in placed.iter_mut() {
            if entry.0 == 0 && entry.1.is_none() {
                entry.1 = Some(p.id);
                break;
            }
        }
        for entry in placed.iter_mut().filter(|e| e.1.is_none()) {
            entry.0 += 1;
        }
        out.insert(0, p);
    }
    let mut i = 1;
    while i < out.len() {
        let dangling = out[i].token_role() == Some(TokenRole::OptionalChain)
            && !out
                .get(i + 1)
                .is_some_and(|m| m.is_identifier() || m.list_kind() == Some(ListKind::CallArguments));
        if dangling {
            let p = ForestNode::placeholder(ids.fresh());
            for entry in placed.iter_mut() {
                if entry.0 == i + 1 && entry.1.is_none() {
                    entry.1 = Some(p.id);
                } else if entry.0 > i {
                    entry.0 += 1;
                }
            }
            out.insert(i + 1, p);
        }
        i += 1;
    }
    (out, placed)
}
