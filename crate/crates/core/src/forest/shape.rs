use super::{ForestNode, IdGen, ListKind, TokenRole};

/// What may occupy a position in a list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Statement,
    Expression,
    ExpressionOrSpread,
    ObjectMember,
    Identifier,
    PropertyKey,
    DeclKeyword,
    ExportKeyword,
    Declarator,
    Parameter,
    Parameters,
    Block,
    ElseBranch,
    ArrowBody,
    TypeReference,
    TypeArguments,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mult {
    One,
    Optional,
    Many(usize),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Slot {
    pub cat: Category,
    pub mult: Mult,
}

/// Slot template for every list kind except loose and tight expressions.
pub(crate) fn template(kind: ListKind) -> &'static [Slot] {
    use Category as C;
    use ListKind as L;
    match kind {
        L::StatementList | L::Block => &[Slot { cat: C::Statement, mult: Mult::Many(0) }],
        L::DeclaratorList => &[Slot { cat: C::DeclKeyword, mult: Mult::One }, Slot { cat: C::Declarator, mult: Mult::Many(1) }],
        L::Declarator | L::Parameter => {
            &[Slot { cat: C::Identifier, mult: Mult::One }, Slot { cat: C::TypeReference, mult: Mult::Optional }, Slot { cat: C::Expression, mult: Mult::Optional }]
        }
        L::Return => &[Slot { cat: C::Expression, mult: Mult::Optional }],
        L::If => &[Slot { cat: C::Expression, mult: Mult::One }, Slot { cat: C::Block, mult: Mult::One }, Slot { cat: C::ElseBranch, mult: Mult::Optional }],
        L::FunctionDeclaration => &[
            Slot { cat: C::ExportKeyword, mult: Mult::Optional },
            Slot { cat: C::Identifier, mult: Mult::One },
            Slot { cat: C::Parameters, mult: Mult::One },
            Slot { cat: C::TypeReference, mult: Mult::Optional },
            Slot { cat: C::Block, mult: Mult::One },
        ],
        L::FunctionExpression => &[
            Slot { cat: C::Identifier, mult: Mult::Optional },
            Slot { cat: C::Parameters, mult: Mult::One },
            Slot { cat: C::TypeReference, mult: Mult::Optional },
            Slot { cat: C::Block, mult: Mult::One },
        ],
        L::ArrowFunction => &[Slot { cat: C::Parameters, mult: Mult::One }, Slot { cat: C::TypeReference, mult: Mult::Optional }, Slot { cat: C::ArrowBody, mult: Mult::One }],
        L::ParameterList => &[Slot { cat: C::Parameter, mult: Mult::Many(0) }],
        L::TypeReference => &[Slot { cat: C::Identifier, mult: Mult::One }, Slot { cat: C::TypeArguments, mult: Mult::Optional }],
        L::TypeArguments => &[Slot { cat: C::TypeReference, mult: Mult::Many(1) }],
        L::CallArguments | L::ArrayItems => &[Slot { cat: C::ExpressionOrSpread, mult: Mult::Many(0) }],
        L::ObjectProperties => &[Slot { cat: C::ObjectMember, mult: Mult::Many(0) }],
        L::Property => &[Slot { cat: C::PropertyKey, mult: Mult::One }, Slot { cat: C::Expression, mult: Mult::One }],
        L::Spread | L::Unary | L::Paren => &[Slot { cat: C::Expression, mult: Mult::One }],
        L::LooseExpression | L::TightExpression => &[],
    }
}

pub fn is_expression(n: &ForestNode) -> bool {
    use ListKind as L;
    match n.list_kind() {
        Some(k) => matches!(
            k,
            L::LooseExpression
                | L::TightExpression
                | L::Paren
                | L::ArrayItems
                | L::ObjectProperties
                | L::ArrowFunction
                | L::FunctionExpression
                | L::Unary
        ),
        None => matches!(
            n.token_role(),
            Some(TokenRole::Identifier | TokenRole::Number | TokenRole::String | TokenRole::Boolean)
        ),
    }
}

impl Category {
    pub fn accepts(self, n: &ForestNode) -> bool {
        use Category as C;
        use ListKind as L;
        let kind = n.list_kind();
        match self {
            C::Statement => {
                matches!(
                    kind,
                    Some(L::DeclaratorList | L::Return | L::If | L::FunctionDeclaration | L::Block)
                ) || is_expression(n)
            }
            C::Expression => is_expression(n),
            C::ExpressionOrSpread => is_expression(n) || kind == Some(L::Spread),
            C::ObjectMember => {
                n.is_identifier() || matches!(kind, Some(L::Property | L::Spread))
            }
            C::Identifier => n.is_identifier(),
            C::PropertyKey => matches!(
                n.token_role(),
                Some(TokenRole::Identifier | TokenRole::String | TokenRole::Number)
            ),
            C::DeclKeyword => {
                n.token_role() == Some(TokenRole::Keyword)
                    && matches!(n.token_text(), Some("var" | "let" | "const"))
            }
            C::ExportKeyword => {
                n.token_role() == Some(TokenRole::Keyword) && n.token_text() == Some("export")
            }
            C::Declarator => kind == Some(L::Declarator),
            C::Parameter => kind == Some(L::Parameter),
            C::Parameters => kind == Some(L::ParameterList),
            C::Block => kind == Some(L::Block),
            C::ElseBranch => matches!(kind, Some(L::Block | L::If)),
            C::ArrowBody => kind == Some(L::Block) || is_expression(n),
            C::TypeReference => kind == Some(L::TypeReference),
            C::TypeArguments => kind == Some(L::TypeArguments),
        }
    }

    /// The node that fills a required but missing slot.
    pub fn filler(self, ids: &mut IdGen) -> ForestNode {
        use Category as C;
        match self {
            C::DeclKeyword => ForestNode::token(ids.fresh(), "var", TokenRole::Keyword),
            C::ExportKeyword => ForestNode::token(ids.fresh(), "export", TokenRole::Keyword),
            C::Declarator | C::Parameter => {
                let kind = if self == C::Declarator { ListKind::Declarator } else { ListKind::Parameter };
                let name = ForestNode::placeholder(ids.fresh());
                ForestNode::list(ids.fresh(), kind, vec![name])
            }
            C::Parameters => ForestNode::list(ids.fresh(), ListKind::ParameterList, vec![]),
            C::Block | C::ElseBranch => ForestNode::list(ids.fresh(), ListKind::Block, vec![]),
            C::TypeReference => {
                let name = ForestNode::placeholder(ids.fresh());
                ForestNode::list(ids.fresh(), ListKind::TypeReference, vec![name])
            }
            C::TypeArguments => {
                let arg = C::TypeReference.filler(ids);
                ForestNode::list(ids.fresh(), ListKind::TypeArguments, vec![arg])
            }
            C::Statement
            | C::Expression
            | C::ExpressionOrSpread
            | C::ObjectMember
            | C::Identifier
            | C::PropertyKey
            | C::ArrowBody => ForestNode::placeholder(ids.fresh()),
        }
    }
}

/// Assigns every item to a slot of the kind's template, greedily.
pub(crate) fn assign_slots(kind: ListKind, items: &[ForestNode]) -> Option<Vec<usize>> {
    let tpl = template(kind);
    let mut out = Vec::with_capacity(items.len());
    let mut i = 0;
    for (si, slot) in tpl.iter().enumerate() {
        match slot.mult {
            Mult::One => {
                if i < items.len() && slot.cat.accepts(&items[i]) {
                    out.push(si);
                    i += 1;
                } else {
                    return None;
                }
            }
            Mult::Optional => {
                if i < items.len() && slot.cat.accepts(&items[i]) {
                    out.push(si);
                    i += 1;
                }
            }
            Mult::Many(min) => {
                let start = i;
                while i < items.len() && slot.cat.accepts(&items[i]) {
                    out.push(si);
                    i += 1;
                }
                if i - start < min {
                    return None;
                }
            }
        }
    }
    (i == items.len()).then_some(out)
}

fn check_loose(items: &[ForestNode]) -> bool {
    items.len() % 2 == 1
        && items.iter().enumerate().all(|(i, n)| {
            if i % 2 == 0 {
                is_expression(n)
            } else {
                n.is_operator()
            }
        })
}

fn check_tight(items: &[ForestNode]) -> bool {
    let Some(head) = items.first() else { return false };
    if !is_expression(head) {
        return false;
    }
    for (i, n) in items.iter().enumerate().skip(1) {
        let ok = match n.token_role() {
            Some(TokenRole::Identifier) => true,
            Some(TokenRole::OptionalChain) => items
                .get(i + 1)
                .is_some_and(|m| m.is_identifier() || m.list_kind() == Some(ListKind::CallArguments)),
            Some(_) => false,
            None => n.list_kind() == Some(ListKind::CallArguments),
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Does a list of this kind accept exactly these items?
pub fn check_list(kind: ListKind, items: &[ForestNode]) -> bool {
    match kind {
        ListKind::LooseExpression => check_loose(items),
        ListKind::TightExpression => check_tight(items),
        _ => assign_slots(kind, items).is_some(),
    }
}
