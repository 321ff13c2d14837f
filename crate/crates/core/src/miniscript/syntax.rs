use serde::Serialize;

/// Half-open byte range into a source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct Diagnostic {
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn new(span: Span, message: impl Into<String>) -> Self {
        Diagnostic { span, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Program,
    VarStatement,
    Declarator,
    ExpressionStatement,
    Return,
    If,
    Block,
    FunctionDeclaration,
    Identifier,
    NumberLiteral,
    StringLiteral,
    BooleanLiteral,
    /// `var`, `let`, `const` or `export`.
    Keyword,
    /// Binary operator token.
    Operator,
    /// The `?.` token inside a member access or call.
    OptionalChain,
    ArrayLiteral,
    ObjectLiteral,
    Property,
    Spread,
    ArrowFunction,
    FunctionExpression,
    Call,
    Arguments,
    Member,
    Binary,
    Unary,
    Paren,
    ParameterList,
    Parameter,
    TypeReference,
    TypeArguments,
}

impl NodeKind {
    pub fn is_leaf(self) -> bool {
        matches!(
            self,
            NodeKind::Identifier
                | NodeKind::NumberLiteral
                | NodeKind::StringLiteral
                | NodeKind::BooleanLiteral
                | NodeKind::Keyword
                | NodeKind::Operator
                | NodeKind::OptionalChain
        )
    }

    pub fn is_statement(self) -> bool {
        matches!(
            self,
            NodeKind::VarStatement
                | NodeKind::ExpressionStatement
                | NodeKind::Return
                | NodeKind::If
                | NodeKind::Block
                | NodeKind::FunctionDeclaration
        )
    }

    pub fn is_expression(self) -> bool {
        matches!(
            self,
            NodeKind::Identifier
                | NodeKind::NumberLiteral
                | NodeKind::StringLiteral
                | NodeKind::BooleanLiteral
                | NodeKind::ArrayLiteral
                | NodeKind::ObjectLiteral
                | NodeKind::ArrowFunction
                | NodeKind::FunctionExpression
                | NodeKind::Call
                | NodeKind::Member
                | NodeKind::Binary
                | NodeKind::Unary
                | NodeKind::Paren
        )
    }
}

/// Conventional syntax tree produced by the parser.
#[derive(Debug, Clone)]
pub struct SyntaxNode {
    pub kind: NodeKind,
    pub span: Span,
    pub children: Vec<SyntaxNode>,
    /// Present exactly on leaves.
    pub text: Option<String>,
}

impl SyntaxNode {
    pub fn leaf(kind: NodeKind, text: impl Into<String>, span: Span) -> Self {
        SyntaxNode { kind, span, children: Vec::new(), text: Some(text.into()) }
    }

    pub fn branch(kind: NodeKind, children: Vec<SyntaxNode>, span: Span) -> Self {
        SyntaxNode { kind, span, children, text: None }
    }

    pub fn text(&self) -> &str {
        self.text.as_deref().unwrap_or("")
    }

    /// Structural equality ignoring spans.
    pub fn same_shape(&self, other: &SyntaxNode) -> bool {
        self.kind == other.kind
            && self.text == other.text
            && self.children.len() == other.children.len()
            && self.children.iter().zip(&other.children).all(|(a, b)| a.same_shape(b))
    }

    /// Checks per-kind arity rules for this node and all descendants.
    pub fn check(&self) -> Result<(), String> {
        check_node(self)?;
        self.children.iter().try_for_each(|c| c.check())
    }

    pub fn count(&self) -> usize {
        1 + self.children.iter().map(|c| c.count()).sum::<usize>()
    }
}

fn check_node(n: &SyntaxNode) -> Result<(), String> {
    use NodeKind as K;
    let kinds: Vec<K> = n.children.iter().map(|c| c.kind).collect();
    let expr = |k: K| k.is_expression();
    let ok = match n.kind {
        _ if n.kind.is_leaf() => n.children.is_empty() && n.text.is_some(),
        K::Program | K::Block => kinds.iter().all(|k| k.is_statement()),
        K::VarStatement => {
            kinds.len() >= 2
                && kinds[0] == K::Keyword
                && matches!(n.children[0].text(), "var" | "let" | "const")
                && kinds[1..].iter().all(|k| *k == K::Declarator)
        }
        K::Declarator | K::Parameter => match kinds.as_slice() {
            [K::Identifier] => true,
            [K::Identifier, K::TypeReference] => true,
            [K::Identifier, e] => expr(*e),
            [K::Identifier, K::TypeReference, e] => expr(*e),
            _ => false,
        },
        K::ExpressionStatement | K::Unary | K::Paren | K::Spread => {
            kinds.len() == 1 && expr(kinds[0])
        }
        K::Return => kinds.is_empty() || (kinds.len() == 1 && expr(kinds[0])),
        K::If => match kinds.as_slice() {
            [c, K::Block] => expr(*c),
            [c, K::Block, K::Block | K::If] => expr(*c),
            _ => false,
        },
        K::FunctionDeclaration => {
            let rest = if kinds.first() == Some(&K::Keyword) {
                if n.children[0].text() != "export" {
                    return Err("function modifier must be export".into());
                }
                &kinds[1..]
            } else {
                &kinds[..]
            };
            matches!(
                rest,
                [K::Identifier, K::ParameterList, K::Block]
                    | [K::Identifier, K::ParameterList, K::TypeReference, K::Block]
            )
        }
        K::FunctionExpression => matches!(
            kinds.as_slice(),
            [K::ParameterList, K::Block]
                | [K::ParameterList, K::TypeReference, K::Block]
                | [K::Identifier, K::ParameterList, K::Block]
                | [K::Identifier, K::ParameterList, K::TypeReference, K::Block]
        ),
        K::ArrowFunction => match kinds.as_slice() {
            [K::ParameterList, b] => *b == K::Block || expr(*b),
            [K::ParameterList, K::TypeReference, b] => *b == K::Block || expr(*b),
            _ => false,
        },
        K::ParameterList => kinds.iter().all(|k| *k == K::Parameter),
        K::TypeReference => matches!(
            kinds.as_slice(),
            [K::Identifier] | [K::Identifier, K::TypeArguments]
        ),
        K::TypeArguments => !kinds.is_empty() && kinds.iter().all(|k| *k == K::TypeReference),
        K::Call => match kinds.as_slice() {
            [c, K::Arguments] => expr(*c),
            [c, K::OptionalChain, K::Arguments] => expr(*c),
            _ => false,
        },
        K::Member => match kinds.as_slice() {
            [o, K::Identifier] => expr(*o),
            [o, K::OptionalChain, K::Identifier] => expr(*o),
            _ => false,
        },
        K::Arguments | K::ArrayLiteral => kinds.iter().all(|k| expr(*k) || *k == K::Spread),
        K::ObjectLiteral => {
            kinds.iter().all(|k| matches!(k, K::Property | K::Identifier | K::Spread))
        }
        K::Property => match kinds.as_slice() {
            [K::Identifier | K::StringLiteral | K::NumberLiteral, v] => expr(*v),
            _ => false,
        },
        K::Binary => {
            kinds.len() == 3 && expr(kinds[0]) && kinds[1] == K::Operator && expr(kinds[2])
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(format!("malformed {:?} with children {:?}", n.kind, kinds))
    }
}
