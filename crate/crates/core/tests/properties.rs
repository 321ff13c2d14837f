use std::collections::BTreeSet;

use proptest::prelude::*;

use structedit::cursor::{navigate, Cursor, NavCommand, Selection};
use structedit::forest::{Document, NodeId};
use structedit::miniscript::{parse, print, Span};
use structedit::multicursor::{Command, Editor, Status};
use structedit::search::{compile_pattern, deep_matches, shallow_match};
use structedit::session::{parse_line, replay, trace_jsonl};

fn expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "b", "c", "x", "y"]).prop_map(str::to_string),
        (0u32..100).prop_map(|n| n.to_string()),
        Just("\"s\"".to_string()),
        Just("{}".to_string()),
        Just("[]".to_string()),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (prop::sample::select(vec!["f", "g", "a.b"]), prop::collection::vec(inner.clone(), 0..3))
                .prop_map(|(f, args)| format!("{f}({})", args.join(", "))),
            prop::collection::vec(inner.clone(), 0..3).prop_map(|xs| format!("[{}]", xs.join(", "))),
            (inner.clone(), prop::sample::select(vec!["+", "*", "-", "&&", "||", "==="]), inner.clone())
                .prop_map(|(l, op, r)| format!("{l} {op} {r}")),
            inner.clone().prop_map(|e| format!("!{e}")),
            inner.clone().prop_map(|e| format!("({e})")),
            inner.clone().prop_map(|e| format!("{{ k: {e}, ...z }}")),
            inner.clone().prop_map(|e| format!("(p) => g({e})")),
        ]
    })
}

fn statement() -> impl Strategy<Value = String> {
    let simple = prop_oneof![
        expr().prop_map(|e| format!("let v = {e};")),
        expr().prop_map(|e| format!("f({e});")),
        expr().prop_map(|e| format!("x = {e};")),
        (expr(), expr()).prop_map(|(a, b)| format!("const m = {a}, n = {b};")),
    ];
    simple.prop_recursive(2, 8, 3, |inner| {
        prop_oneof![
            (expr(), prop::collection::vec(inner.clone(), 0..3))
                .prop_map(|(c, body)| format!("if ({c}) {{ {} }}", body.join(" "))),
            (prop::collection::vec(inner.clone(), 0..3), expr())
                .prop_map(|(body, r)| format!("function h(p, q) {{ {} return {r}; }}", body.join(" "))),
        ]
    })
}

fn program() -> impl Strategy<Value = String> {
    prop::collection::vec(statement(), 1..5).prop_map(|s| s.join("\n"))
}

fn nav() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "parent",
        "prev",
        "next",
        "extend-prev",
        "extend-next",
        "first",
        "last",
        "drop-first",
        "drop-last",
        "descend any",
        "descend (",
        "ascend any",
        "undo",
        "redo",
    ])
}

fn script_line() -> impl Strategy<Value = &'static str> {
    prop_oneof![
        nav(),
        prop::sample::select(vec![
            "split",
            "search \"$_($$_)\" deep",
            "search \"[$$_]\" shallow",
            "insert after \", z\"",
            "insert before \"q + \"",
            "insert after \"\\nf(1);\"",
            "delete",
            "copy",
            "paste",
            "reduce first",
            "filter innermost",
            "mark a",
            "jump a",
            "rename \"$0_r\"",
            "mode drop",
            "mode relaxed",
        ]),
    ]
}

fn cmd(line: &str) -> Command {
    parse_line(line).unwrap().unwrap()
}

fn node_ids(doc: &Document) -> Vec<NodeId> {
    let mut out = Vec::new();
    doc.root().walk(&mut |n| out.push(n.id));
    out
}

fn ranges(doc: &Document, sels: &[Selection]) -> BTreeSet<Span> {
    sels.iter().map(|s| s.text_range(doc)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_is_idempotent(src in program()) {
        let ast = parse(&src).unwrap();
        let once = print(&ast);
        let again = parse(&once).unwrap();
        prop_assert!(again.same_shape(&ast));
        prop_assert_eq!(print(&again), once);
    }

    #[test]
    fn navigation_never_edits(src in program(), lines in prop::collection::vec(nav(), 1..12)) {
        let mut ed = Editor::open(&src).unwrap();
        let before = ed.doc.clone();
        ed.apply(&cmd("split")).unwrap();
        for l in lines {
            ed.apply(&cmd(l)).unwrap();
        }
        prop_assert_eq!(ed.text(), before.text());
        prop_assert_eq!(ed.doc.root(), before.root());
    }

    #[test]
    fn descend_then_ascend_returns(src in program()) {
        let doc = Document::parse(&src).unwrap();
        let mut lists = Vec::new();
        doc.root().walk(&mut |n| {
            if n.list_kind().is_some_and(|k| k.delimiters().is_some()) && n.id != doc.root().id {
                lists.push(n.id);
            }
        });
        for id in lists {
            let start = Cursor::new(0, 0, Selection::of_node(&doc, id).unwrap());
            let down = navigate(&doc, &start, cmd_nav("descend any")).unwrap();
            let up = navigate(&doc, &down, cmd_nav("ascend any")).unwrap();
            prop_assert!(up.selection.equivalent(&doc, &start.selection));
        }
    }

    #[test]
    fn undo_walks_back_to_the_start(src in program(), lines in prop::collection::vec(nav(), 1..12)) {
        let doc = Document::parse(&src).unwrap();
        let first = Cursor::new(0, 0, Selection::root(&doc));
        let mut c = first.clone();
        for l in lines.iter().filter(|l| !matches!(**l, "undo" | "redo")) {
            if let Ok(next) = navigate(&doc, &c, cmd_nav(l)) {
                c = next;
            }
        }
        while let Ok(prev) = navigate(&doc, &c, NavCommand::SelectionUndo) {
            c = prev;
        }
        prop_assert_eq!(c.selection, first.selection);
    }

    #[test]
    fn accepted_inserts_parse(
        src in program(),
        pick in any::<prop::sample::Index>(),
        text in prop::sample::select(vec![", z", " + 1", "((", "}", "\nf(1);", ": number", ".m", "q, "]),
        after in any::<bool>(),
    ) {
        let mut ed = Editor::open(&src).unwrap();
        let ids = node_ids(&ed.doc);
        let sel = Selection::of_node(&ed.doc, ids[pick.index(ids.len())]).unwrap();
        ed.set.cursors[0].selection = sel;
        let before = ed.text().to_string();
        let side = if after { "after" } else { "before" };
        let out = ed.apply(&cmd(&format!("insert {side} {}", serde_json::to_string(text).unwrap()))).unwrap();
        if out.failures.is_empty() {
            let reparsed = Document::parse(ed.text()).unwrap();
            prop_assert_eq!(reparsed.text(), ed.text());
        } else {
            prop_assert_eq!(ed.text(), before);
        }
    }

    #[test]
    fn shallow_implies_deep(src in program(), pat in prop::sample::select(vec!["$_($$_)", "[$$_]", "$_ + $_", "{$$_}", "a", "!$_"])) {
        let doc = Document::parse(&src).unwrap();
        let p = compile_pattern(pat).unwrap();
        for id in node_ids(&doc) {
            let sel = Selection::of_node(&doc, id).unwrap();
            if shallow_match(&doc, sel, &p) {
                prop_assert!(ranges(&doc, &deep_matches(&doc, sel, &p)).contains(&sel.text_range(&doc)));
            }
        }
    }

    #[test]
    fn deep_equals_shallow_everywhere(src in program(), pat in prop::sample::select(vec!["$_($$_)", "[$$_]", "$_ + $_", "{$$_}", "b", "!$_", "f($_)"])) {
        let doc = Document::parse(&src).unwrap();
        let p = compile_pattern(pat).unwrap();
        let deep = ranges(&doc, &deep_matches(&doc, Selection::root(&doc), &p));
        let brute: BTreeSet<Span> = node_ids(&doc)
            .into_iter()
            .skip(1)
            .map(|id| Selection::of_node(&doc, id).unwrap())
            .filter(|s| shallow_match(&doc, *s, &p))
            .map(|s| s.text_range(&doc))
            .collect();
        prop_assert_eq!(deep, brute);
    }

    #[test]
    fn rename_keeps_node_ids(src in program()) {
        let mut ed = Editor::open(&src).unwrap();
        let ids = node_ids(&ed.doc);
        let found = ed.apply(&cmd("search \"a\" deep")).unwrap();
        prop_assume!(found.failures.is_empty());
        let out = ed.apply(&cmd("rename \"$0_r\"")).unwrap();
        prop_assert!(out.failures.is_empty());
        prop_assert_eq!(node_ids(&ed.doc), ids);
        prop_assert!(!ed.text().split(|c: char| !c.is_alphanumeric() && c != '_').any(|w| w == "a"));
    }

    #[test]
    fn reduce_keeps_one_per_group(src in program(), lines in prop::collection::vec(prop::sample::select(vec!["split", "descend any", "first", "search \"$_\" shallow"]), 0..5)) {
        let mut ed = Editor::open(&src).unwrap();
        ed.apply(&cmd("split")).unwrap();
        for l in lines {
            ed.apply(&cmd(l)).unwrap();
        }
        let groups: BTreeSet<_> = ed.set.cursors.iter().map(|c| c.lineage.last().copied()).collect();
        let depths: Vec<usize> = ed.set.cursors.iter().map(|c| c.lineage.len()).collect();
        ed.apply(&cmd("reduce first")).unwrap();
        prop_assert_eq!(ed.set.cursors.len(), groups.len());
        let after: usize = ed.set.cursors.iter().map(|c| c.lineage.len()).sum();
        prop_assert!(after < depths.iter().sum::<usize>() || depths.iter().all(|d| *d == 0));
    }

    #[test]
    fn strict_failures_change_nothing(src in program(), edit in prop::sample::select(vec!["delete", "insert after \", z\"", "insert after \" + 1\"", "rename \"$0_r\"", "paste"])) {
        let mut ed = Editor::open(&src).unwrap();
        ed.apply(&cmd("mode strict")).unwrap();
        ed.apply(&cmd("split")).unwrap();
        ed.apply(&cmd("descend any")).ok();
        if ed.set.pending.is_some() {
            ed.apply(&cmd("branch all")).unwrap();
        }
        let before = (ed.text().to_string(), ed.ranges());
        let out = ed.apply(&cmd(edit)).unwrap();
        if out.status == Status::Pending {
            prop_assert_eq!((ed.text().to_string(), ed.ranges()), before);
        }
    }

    #[test]
    fn duplicate_cursors_insert_once_each(src in program(), k in 1usize..5) {
        let mut ed = Editor::open(&src).unwrap();
        let c = ed.set.cursors[0].clone();
        ed.set.cursors = (0..k as u64).map(|i| Cursor { id: i, seq: i, ..c.clone() }).collect();
        ed.apply(&cmd("insert after \"\\nprobe();\"")).unwrap();
        prop_assert_eq!(ed.text().matches("probe();").count(), k);
    }

    #[test]
    fn failing_cursors_do_not_affect_others(src in program(), edit in prop::sample::select(vec!["insert after \", z\"", "insert after \" + 1\"", "insert before \"q, \"", "delete"])) {
        let mut ed = Editor::open(&src).unwrap();
        ed.apply(&cmd("search \"$_($$_)\" deep")).unwrap();
        ed.apply(&cmd("descend (")).unwrap();
        ed.apply(&cmd("filter innermost")).unwrap();
        let mut only_ok = ed.clone();
        let out = ed.apply(&cmd(edit)).unwrap();
        if out.status == Status::Applied {
            let failed: BTreeSet<u64> = out.failures.iter().map(|f| f.0).collect();
            only_ok.set.cursors.retain(|c| !failed.contains(&c.id));
            if !only_ok.set.cursors.is_empty() {
                only_ok.apply(&cmd(edit)).unwrap();
                prop_assert_eq!(only_ok.text(), ed.text());
            }
        }
    }

    #[test]
    fn replay_is_deterministic(src in program(), lines in prop::collection::vec(script_line(), 0..12)) {
        let script = lines.join("\n");
        let a = replay(&src, &script);
        let b = replay(&src, &script);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(trace_jsonl(&a.trace), trace_jsonl(&b.trace));
                let last = &a.trace.last().unwrap().snapshot.text;
                let reparsed = Document::parse(last).unwrap();
                prop_assert_eq!(reparsed.text(), last.as_str());
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "replays disagree"),
        }
    }
}

fn cmd_nav(line: &str) -> NavCommand {
    match cmd(line) {
        Command::Nav(n) => n,
        other => panic!("not navigation: {other:?}"),
    }
}
