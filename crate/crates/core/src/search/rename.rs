use crate::miniscript::lexer::is_identifier;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenameError {
    #[error("`{0}` is not a valid identifier")]
    NotIdentifier(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Part {
    Literal(String),
    Old,
    Upper,
    Lower,
}

/// A rename template: literals mixed with `$0`, `upper($0)` and `lower($0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenameTemplate {
    parts: Vec<Part>,
}

impl RenameTemplate {
    /// Anything other than `$0`, `upper($0)` and `lower($0)` is literal text.
    pub fn parse(src: &str) -> Self {
        let mut parts = Vec::new();
        let mut lit = String::new();
        let mut rest = src;
        while !rest.is_empty() {
            let part = if let Some(r) = rest.strip_prefix("$0") {
                rest = r;
                Some(Part::Old)
            } else if let Some(r) = rest.strip_prefix("upper($0)") {
                rest = r;
                Some(Part::Upper)
            } else if let Some(r) = rest.strip_prefix("lower($0)") {
                rest = r;
                Some(Part::Lower)
            } else {
                let c = rest.chars().next().expect("non-empty");
                lit.push(c);
                rest = &rest[c.len_utf8()..];
                None
            };
            if let Some(p) = part {
                if !lit.is_empty() {
                    parts.push(Part::Literal(std::mem::take(&mut lit)));
                }
                parts.push(p);
            }
        }
        if !lit.is_empty() {
            parts.push(Part::Literal(lit));
        }
        RenameTemplate { parts }
    }

    pub fn render(&self, old: &str) -> Result<String, RenameError> {
        let out: String = self
            .parts
            .iter()
            .map(|p| match p {
                Part::Literal(s) => s.clone(),
                Part::Old => old.to_string(),
                Part::Upper => old.to_uppercase(),
                Part::Lower => old.to_lowercase(),
            })
            .collect();
        if is_identifier(&out) {
            Ok(out)
        } else {
            Err(RenameError::NotIdentifier(out))
        }
    }
}
