//! The line-oriented script format: one command per line.

use std::fmt::Write;

use crate::cursor::{Delim, NavCommand, Side};
use crate::multicursor::{Command, Edge, Extremal, Keep, Mode};
use crate::search::Depth;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("unknown command `{0}`")]
    Unknown(String),
    #[error("`{0}` expects {1}")]
    Arguments(String, &'static str),
    #[error("bad quoted string: {0}")]
    Quote(String),
    #[error("line {line}: {error}")]
    Line { line: usize, error: Box<ScriptError> },
}

const NAV: &[(&str, NavCommand)] = &[
    ("parent", NavCommand::Parent),
    ("prev", NavCommand::LeafPrev),
    ("next", NavCommand::LeafNext),
    ("extend-prev", NavCommand::ExtendPrev),
    ("extend-next", NavCommand::ExtendNext),
    ("reduce-extended", NavCommand::ReduceToJustExtended),
    ("first", NavCommand::ReduceFirst),
    ("last", NavCommand::ReduceLast),
    ("drop-first", NavCommand::ShrinkDropFirst),
    ("drop-last", NavCommand::ShrinkDropLast),
    ("undo", NavCommand::SelectionUndo),
    ("redo", NavCommand::SelectionRedo),
];

/// Splits a line into its keyword and arguments. Quoted arguments are JSON
/// string literals.
fn tokenize(line: &str) -> Result<Vec<String>, ScriptError> {
    let mut out = Vec::new();
    let mut rest = line.trim_start();
    while !rest.is_empty() {
        if rest.starts_with('"') {
            let mut it = serde_json::Deserializer::from_str(rest).into_iter::<String>();
            let s = it.next().ok_or_else(|| ScriptError::Quote(rest.to_string()))?;
            let s = s.map_err(|e| ScriptError::Quote(e.to_string()))?;
            out.push(s);
            rest = &rest[it.byte_offset()..];
            if !(rest.is_empty() || rest.starts_with(char::is_whitespace)) {
                return Err(ScriptError::Quote("missing space after string".into()));
            }
        } else {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            out.push(rest[..end].to_string());
            rest = &rest[end..];
        }
        rest = rest.trim_start();
    }
    Ok(out)
}

/// Parses one line. Blank lines and `#` comments give `None`.
pub fn parse_line(line: &str) -> Result<Option<Command>, ScriptError> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let words = tokenize(trimmed)?;
    let kw = words[0].as_str();
    let args: Vec<&str> = words[1..].iter().map(String::as_str).collect();
    let bad = |what: &'static str| ScriptError::Arguments(kw.to_string(), what);
    if let Some((_, nav)) = NAV.iter().find(|(k, _)| *k == kw) {
        return if args.is_empty() { Ok(Some(Command::Nav(*nav))) } else { Err(bad("no arguments")) };
    }
    let letter = |a: &[&str]| match a {
        [s] if s.chars().count() == 1 && s.chars().all(|c| c.is_ascii_alphabetic()) => s.chars().next(),
        _ => None,
    };
    let cmd = match (kw, args.as_slice()) {
        ("descend", [d]) => Command::Nav(NavCommand::DelimDescend(opening(d).ok_or(bad("( [ { < or any"))?)),
        ("ascend", [d]) => Command::Nav(NavCommand::DelimAscend(closing(d).ok_or(bad(") ] } > or any"))?)),
        ("descend", _) => return Err(bad("( [ { < or any")),
        ("ascend", _) => return Err(bad(") ] } > or any")),
        ("insert", [side, text]) => {
            let side = match *side {
                "before" => Side::Before,
                "after" => Side::After,
                _ => return Err(bad("before|after and a string")),
            };
            Command::Insert(side, text.to_string())
        }
        ("insert", _) => return Err(bad("before|after and a string")),
        ("delete", []) => Command::Delete,
        ("copy", []) => Command::Copy,
        ("paste", []) => Command::Paste,
        ("split", []) => Command::Split,
        ("queue", []) => Command::Queue,
        ("activate", []) => Command::ActivateQueue,
        ("ignore", []) => Command::IgnoreFailure,
        ("delete" | "copy" | "paste" | "split" | "queue" | "activate" | "ignore", _) => {
            return Err(bad("no arguments"))
        }
        ("reduce", ["first"]) => Command::ReduceCursors(Edge::First),
        ("reduce", ["last"]) => Command::ReduceCursors(Edge::Last),
        ("reduce", _) => return Err(bad("first|last")),
        ("filter", ["outermost"]) => Command::FilterExtremal(Extremal::Outermost),
        ("filter", ["innermost"]) => Command::FilterExtremal(Extremal::Innermost),
        ("filter", _) => return Err(bad("outermost|innermost")),
        ("mark", a) => Command::SetMark(letter(a).ok_or(bad("a letter"))?),
        ("jump", a) => Command::JumpMark(letter(a).ok_or(bad("a letter"))?),
        ("rename", [t]) => Command::Rename(t.to_string()),
        ("rename", _) => return Err(bad("a template string")),
        ("search", [p, "deep"]) => Command::Search(p.to_string(), Depth::Deep),
        ("search", [p, "shallow"]) => Command::Search(p.to_string(), Depth::Shallow),
        ("search", _) => return Err(bad("a pattern string and deep|shallow")),
        ("mode", ["relaxed"]) => Command::SetMode(Mode::Relaxed),
        ("mode", ["drop"]) => Command::SetMode(Mode::Drop),
        ("mode", ["strict"]) => Command::SetMode(Mode::Strict),
        ("mode", _) => return Err(bad("relaxed|drop|strict")),
        ("branch", ["successful"]) => Command::Branch(Keep::Successful),
        ("branch", ["failed"]) => Command::Branch(Keep::Failed),
        ("branch", ["all"]) => Command::Branch(Keep::All),
        ("branch", _) => return Err(bad("successful|failed|all")),
        _ => return Err(ScriptError::Unknown(kw.to_string())),
    };
    Ok(Some(cmd))
}

fn opening(s: &str) -> Option<Delim> {
    matches!(s, "(" | "[" | "{" | "<" | "any").then(|| Delim::parse(s)).flatten()
}

fn closing(s: &str) -> Option<Delim> {
    matches!(s, ")" | "]" | "}" | ">" | "any").then(|| Delim::parse(s)).flatten()
}

/// Parses a whole script; comments and blank lines are skipped.
pub fn parse_script(text: &str) -> Result<Vec<(usize, Command)>, ScriptError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line) {
            Ok(Some(c)) => out.push((i + 1, c)),
            Ok(None) => {}
            Err(e) => return Err(ScriptError::Line { line: i + 1, error: Box::new(e) }),
        }
    }
    Ok(out)
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// The canonical script line for a command.
pub fn format_command(cmd: &Command) -> String {
    let mut out = String::new();
    match cmd {
        Command::Nav(NavCommand::DelimDescend(d)) => write!(out, "descend {}", d.open()),
        Command::Nav(NavCommand::DelimAscend(d)) => write!(out, "ascend {}", d.close()),
        Command::Nav(nav) => {
            out.push_str(NAV.iter().find(|(_, n)| n == nav).map(|(k, _)| *k).expect("all nav commands listed"));
            Ok(())
        }
        Command::Insert(side, text) => {
            let side = if *side == Side::Before { "before" } else { "after" };
            write!(out, "insert {side} {}", quote(text))
        }
        Command::Delete => write!(out, "delete"),
        Command::Copy => write!(out, "copy"),
        Command::Paste => write!(out, "paste"),
        Command::Split => write!(out, "split"),
        Command::Queue => write!(out, "queue"),
        Command::ActivateQueue => write!(out, "activate"),
        Command::ReduceCursors(e) => write!(out, "reduce {}", if *e == Edge::First { "first" } else { "last" }),
        Command::FilterExtremal(w) => {
            write!(out, "filter {}", if *w == Extremal::Outermost { "outermost" } else { "innermost" })
        }
        Command::SetMark(c) => write!(out, "mark {c}"),
        Command::JumpMark(c) => write!(out, "jump {c}"),
        Command::Rename(t) => write!(out, "rename {}", quote(t)),
        Command::Search(p, d) => {
            write!(out, "search {} {}", quote(p), if *d == Depth::Deep { "deep" } else { "shallow" })
        }
        Command::SetMode(m) => write!(
            out,
            "mode {}",
            match m {
                Mode::Relaxed => "relaxed",
                Mode::Drop => "drop",
                Mode::Strict => "strict",
            }
        ),
        Command::Branch(k) => write!(
            out,
            "branch {}",
            match k {
                Keep::Successful => "successful",
                Keep::Failed => "failed",
                Keep::All => "all",
            }
        ),
        Command::IgnoreFailure => write!(out, "ignore"),
    }
    .expect("writing to a string");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        assert_eq!(
            parse_line(r#"search "Object.assign($$_)" deep"#).unwrap(),
            Some(Command::Search("Object.assign($$_)".into(), Depth::Deep))
        );
        assert_eq!(parse_line(r#"insert after ",z""#).unwrap(), Some(Command::Insert(Side::After, ",z".into())));
        assert_eq!(
            parse_line(r#"insert after "\nlet \"x\";""#).unwrap(),
            Some(Command::Insert(Side::After, "\nlet \"x\";".into()))
        );
        assert_eq!(parse_line("descend {").unwrap(), Some(Command::Nav(NavCommand::DelimDescend(Delim::Brace))));
        assert!(parse_line("descend }").is_err());
        assert_eq!(parse_line("  # note").unwrap(), None);
        assert!(parse_line("mark ab").is_err());
        assert!(parse_line("fly").is_err());
        assert!(parse_line(r#"rename "x"y"#).is_err());
    }

    #[test]
    fn format_round_trips() {
        for line in [
            "parent",
            "descend any",
            "ascend )",
            "insert before \"a\\tb\"",
            "reduce last",
            "filter innermost",
            "mark q",
            "search \"{$$_}\" shallow",
            "mode drop",
            "branch all",
            "ignore",
        ] {
            let cmd = parse_line(line).unwrap().unwrap();
            assert_eq!(format_command(&cmd), line);
        }
    }
}
