use super::lexer::{lex, Tok, Token};
use super::syntax::{Diagnostic, NodeKind as K, Span, SyntaxNode};

type PResult<T> = Result<T, Diagnostic>;

pub fn binary_precedence(op: &str) -> Option<u8> {
    Some(match op {
        "=" => 1,
        "||" => 2,
        "&&" => 3,
        "===" => 4,
        "<" | ">" => 5,
        "+" | "-" => 6,
        "*" | "/" => 7,
        _ => return None,
    })
}

pub fn is_right_assoc(op: &str) -> bool {
    op == "="
}

/// Parses a whole program.
pub fn parse(src: &str) -> Result<SyntaxNode, Vec<Diagnostic>> {
    let tokens = lex(src).map_err(|d| vec![d])?;
    let mut p = Parser { tokens, pos: 0 };
    p.program(src.len()).map_err(|d| vec![d])
}

/// Parses a single expression spanning the whole input.
pub fn parse_expression(src: &str) -> Result<SyntaxNode, Vec<Diagnostic>> {
    let tokens = lex(src).map_err(|d| vec![d])?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expression().map_err(|d| vec![d])?;
    p.expect_eof().map_err(|d| vec![d])?;
    Ok(e)
}

/// Parses a single spread element such as `...xs`.
pub fn parse_spread(src: &str) -> Result<SyntaxNode, Vec<Diagnostic>> {
    let tokens = lex(src).map_err(|d| vec![d])?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.spread_or_expression().map_err(|d| vec![d])?;
    p.expect_eof().map_err(|d| vec![d])?;
    if e.kind != K::Spread {
        return Err(vec![Diagnostic::new(e.span, "expected spread element")]);
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, n: usize) -> &Tok {
        let i = (self.pos + n).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn prev_end(&self) -> usize {
        if self.pos == 0 {
            0
        } else {
            self.tokens[self.pos - 1].span.end
        }
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Keyword(q) if *q == k)
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.is_punct(p) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, p: &str) -> PResult<Span> {
        if self.is_punct(p) {
            Ok(self.bump().span)
        } else {
            Err(self.error(format!("expected '{p}'")))
        }
    }

    fn expect_eof(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error("expected end of input"))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(self.span(), msg)
    }

    fn identifier(&mut self) -> PResult<SyntaxNode> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let t = self.bump();
                Ok(SyntaxNode::leaf(K::Identifier, name, t.span))
            }
            _ => Err(self.error("expected identifier")),
        }
    }

    fn program(&mut self, len: usize) -> PResult<SyntaxNode> {
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            stmts.push(self.statement()?);
        }
        Ok(SyntaxNode::branch(K::Program, stmts, Span::new(0, len)))
    }

    fn statement(&mut self) -> PResult<SyntaxNode> {
        match self.peek().clone() {
            Tok::Keyword(k @ ("var" | "let" | "const")) => {
                let kw = self.bump();
                let mut children = vec![SyntaxNode::leaf(K::Keyword, k, kw.span)];
                loop {
                    children.push(self.binding(K::Declarator)?);
                    if !self.eat_punct(",") {
                        break;
                    }
                }
                let span = Span::new(kw.span.start, self.prev_end());
                self.expect_punct(";")?;
                Ok(SyntaxNode::branch(K::VarStatement, children, span))
            }
            Tok::Keyword("return") => {
                let kw = self.bump();
                let mut children = Vec::new();
                if !self.is_punct(";") {
                    children.push(self.expression()?);
                }
                let span = Span::new(kw.span.start, self.prev_end());
                self.expect_punct(";")?;
                Ok(SyntaxNode::branch(K::Return, children, span))
            }
            Tok::Keyword("if") => self.if_statement(),
            Tok::Keyword("export") => {
                let kw = self.bump();
                if !self.is_keyword("function") {
                    return Err(self.error("expected 'function' after 'export'"));
                }
                let export = SyntaxNode::leaf(K::Keyword, "export", kw.span);
                self.function_declaration(Some(export))
            }
            Tok::Keyword("function") => self.function_declaration(None),
            Tok::Punct("{") => self.block(),
            _ => {
                let e = self.expression()?;
                let span = e.span;
                self.expect_punct(";")?;
                Ok(SyntaxNode::branch(K::ExpressionStatement, vec![e], span))
            }
        }
    }

    fn if_statement(&mut self) -> PResult<SyntaxNode> {
        let kw = self.bump();
        self.expect_punct("(")?;
        let cond = self.expression()?;
        self.expect_punct(")")?;
        let then = self.block()?;
        let mut children = vec![cond, then];
        if self.is_keyword("else") {
            self.bump();
            if self.is_keyword("if") {
                children.push(self.if_statement()?);
            } else if self.is_punct("{") {
                children.push(self.block()?);
            } else {
                return Err(self.error("expected '{' or 'if' after 'else'"));
            }
        }
        let span = Span::new(kw.span.start, self.prev_end());
        Ok(SyntaxNode::branch(K::If, children, span))
    }

    fn block(&mut self) -> PResult<SyntaxNode> {
        let open = self.expect_punct("{")?;
        let mut stmts = Vec::new();
        while !self.is_punct("}") {
            if *self.peek() == Tok::Eof {
                return Err(self.error("expected '}'"));
            }
            stmts.push(self.statement()?);
        }
        let close = self.bump();
        Ok(SyntaxNode::branch(K::Block, stmts, Span::new(open.start, close.span.end)))
    }

    fn function_declaration(&mut self, export: Option<SyntaxNode>) -> PResult<SyntaxNode> {
        let kw = self.bump();
        let start = export.as_ref().map_or(kw.span.start, |e| e.span.start);
        let mut children: Vec<SyntaxNode> = export.into_iter().collect();
        children.push(self.identifier()?);
        self.function_rest(&mut children)?;
        Ok(SyntaxNode::branch(
            K::FunctionDeclaration,
            children,
            Span::new(start, self.prev_end()),
        ))
    }

    /// Parameter list, optional return type and body block.
    fn function_rest(&mut self, children: &mut Vec<SyntaxNode>) -> PResult<()> {
        children.push(self.parameters()?);
        if self.eat_punct(":") {
            children.push(self.type_reference()?);
        }
        children.push(self.block()?);
        Ok(())
    }

    fn parameters(&mut self) -> PResult<SyntaxNode> {
        let open = self.expect_punct("(")?;
        let mut params = Vec::new();
        while !self.is_punct(")") {
            if *self.peek() == Tok::Eof {
                return Err(self.error("expected ')'"));
            }
            params.push(self.binding(K::Parameter)?);
            if !self.eat_punct(",") {
                break;
            }
        }
        let close = self.expect_punct(")")?;
        Ok(SyntaxNode::branch(K::ParameterList, params, Span::new(open.start, close.end)))
    }

    /// Declarator or parameter: `name [: Type] [= init]`.
    fn binding(&mut self, kind: K) -> PResult<SyntaxNode> {
        let name = self.identifier()?;
        let start = name.span.start;
        let mut children = vec![name];
        if self.eat_punct(":") {
            children.push(self.type_reference()?);
        }
        if self.eat_punct("=") {
            children.push(self.expression()?);
        }
        Ok(SyntaxNode::branch(kind, children, Span::new(start, self.prev_end())))
    }

    fn type_reference(&mut self) -> PResult<SyntaxNode> {
        let name = self.identifier()?;
        let start = name.span.start;
        let mut children = vec![name];
        if self.is_punct("<") {
            let open = self.bump();
            let mut args = Vec::new();
            loop {
                args.push(self.type_reference()?);
                if !self.eat_punct(",") {
                    break;
                }
            }
            let close = self.expect_punct(">")?;
            children.push(SyntaxNode::branch(
                K::TypeArguments,
                args,
                Span::new(open.span.start, close.end),
            ));
        }
        Ok(SyntaxNode::branch(K::TypeReference, children, Span::new(start, self.prev_end())))
    }

    fn expression(&mut self) -> PResult<SyntaxNode> {
        self.binary(1)
    }

    fn binary(&mut self, min_prec: u8) -> PResult<SyntaxNode> {
        let mut lhs = self.unary()?;
        while let Tok::Punct(op) = self.peek() {
            let op = *op;
            let Some(prec) = binary_precedence(op) else { break };
            if prec < min_prec {
                break;
            }
            let op_tok = self.bump();
            let next_min = if is_right_assoc(op) { prec } else { prec + 1 };
            let rhs = self.binary(next_min)?;
            let span = Span::new(lhs.span.start, rhs.span.end);
            lhs = SyntaxNode::branch(
                K::Binary,
                vec![lhs, SyntaxNode::leaf(K::Operator, op, op_tok.span), rhs],
                span,
            );
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<SyntaxNode> {
        if self.is_punct("!") {
            let bang = self.bump();
            let operand = self.unary()?;
            let span = Span::new(bang.span.start, operand.span.end);
            return Ok(SyntaxNode::branch(K::Unary, vec![operand], span));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<SyntaxNode> {
        let mut e = self.primary()?;
        loop {
            if self.is_punct(".") {
                self.bump();
                let name = self.property_name()?;
                let span = Span::new(e.span.start, name.span.end);
                e = SyntaxNode::branch(K::Member, vec![e, name], span);
            } else if self.is_punct("?.") {
                let q = self.bump();
                let chain = SyntaxNode::leaf(K::OptionalChain, "?.", q.span);
                if self.is_punct("(") {
                    let args = self.arguments()?;
                    let span = Span::new(e.span.start, args.span.end);
                    e = SyntaxNode::branch(K::Call, vec![e, chain, args], span);
                } else {
                    let name = self.property_name()?;
                    let span = Span::new(e.span.start, name.span.end);
                    e = SyntaxNode::branch(K::Member, vec![e, chain, name], span);
                }
            } else if self.is_punct("(") {
                let args = self.arguments()?;
                let span = Span::new(e.span.start, args.span.end);
                e = SyntaxNode::branch(K::Call, vec![e, args], span);
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn property_name(&mut self) -> PResult<SyntaxNode> {
        self.identifier()
    }

    fn arguments(&mut self) -> PResult<SyntaxNode> {
        let (items, span) = self.delimited("(", ")", Self::spread_or_expression)?;
        Ok(SyntaxNode::branch(K::Arguments, items, span))
    }

    fn spread_or_expression(&mut self) -> PResult<SyntaxNode> {
        if self.is_punct("...") {
            let dots = self.bump();
            let e = self.expression()?;
            let span = Span::new(dots.span.start, e.span.end);
            return Ok(SyntaxNode::branch(K::Spread, vec![e], span));
        }
        self.expression()
    }

    /// Comma separated items between delimiters; a trailing comma is accepted.
    fn delimited(
        &mut self,
        open: &str,
        close: &str,
        mut item: impl FnMut(&mut Self) -> PResult<SyntaxNode>,
    ) -> PResult<(Vec<SyntaxNode>, Span)> {
        let o = self.expect_punct(open)?;
        let mut items = Vec::new();
        while !self.is_punct(close) {
            if *self.peek() == Tok::Eof {
                return Err(self.error(format!("expected '{close}'")));
            }
            items.push(item(self)?);
            if !self.eat_punct(",") {
                break;
            }
        }
        let c = self.expect_punct(close)?;
        Ok((items, Span::new(o.start, c.end)))
    }

    fn primary(&mut self) -> PResult<SyntaxNode> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                if matches!(self.peek_at(1), Tok::Punct("=>")) {
                    let t = self.bump();
                    let param = SyntaxNode::branch(
                        K::Parameter,
                        vec![SyntaxNode::leaf(K::Identifier, name, t.span)],
                        t.span,
                    );
                    let params = SyntaxNode::branch(K::ParameterList, vec![param], t.span);
                    return self.arrow_rest(params, None);
                }
                let t = self.bump();
                Ok(SyntaxNode::leaf(K::Identifier, name, t.span))
            }
            Tok::Number(n) => {
                let t = self.bump();
                Ok(SyntaxNode::leaf(K::NumberLiteral, n, t.span))
            }
            Tok::Str(s) => {
                let t = self.bump();
                Ok(SyntaxNode::leaf(K::StringLiteral, s, t.span))
            }
            Tok::Keyword(b @ ("true" | "false")) => {
                let t = self.bump();
                Ok(SyntaxNode::leaf(K::BooleanLiteral, b, t.span))
            }
            Tok::Keyword("function") => {
                let kw = self.bump();
                let mut children = Vec::new();
                if matches!(self.peek(), Tok::Ident(_)) {
                    children.push(self.identifier()?);
                }
                self.function_rest(&mut children)?;
                let span = Span::new(kw.span.start, self.prev_end());
                Ok(SyntaxNode::branch(K::FunctionExpression, children, span))
            }
            Tok::Punct("(") => {
                if self.is_arrow_ahead() {
                    let params = self.parameters()?;
                    let ret = if self.eat_punct(":") { Some(self.type_reference()?) } else { None };
                    return self.arrow_rest(params, ret);
                }
                let open = self.bump();
                let inner = self.expression()?;
                let close = self.expect_punct(")")?;
                Ok(SyntaxNode::branch(K::Paren, vec![inner], Span::new(open.span.start, close.end)))
            }
            Tok::Punct("[") => {
                let (items, span) = self.delimited("[", "]", Self::spread_or_expression)?;
                Ok(SyntaxNode::branch(K::ArrayLiteral, items, span))
            }
            Tok::Punct("{") => {
                let (items, span) = self.delimited("{", "}", Self::object_member)?;
                Ok(SyntaxNode::branch(K::ObjectLiteral, items, span))
            }
            Tok::Eof => Err(self.error("unexpected end of input")),
            _ => Err(self.error("expected expression")),
        }
    }

    fn arrow_rest(&mut self, params: SyntaxNode, ret: Option<SyntaxNode>) -> PResult<SyntaxNode> {
        self.expect_punct("=>")?;
        let start = params.span.start;
        let mut children = vec![params];
        children.extend(ret);
        let body = if self.is_punct("{") { self.block()? } else { self.expression()? };
        let span = Span::new(start, body.span.end);
        children.push(body);
        Ok(SyntaxNode::branch(K::ArrowFunction, children, span))
    }

    /// At `(`: does the matching `)` precede `=>` or a return type?
    fn is_arrow_ahead(&self) -> bool {
        let mut depth = 0usize;
        let mut i = self.pos;
        while i < self.tokens.len() {
            match &self.tokens[i].tok {
                Tok::Punct("(" | "[" | "{") => depth += 1,
                Tok::Punct(")" | "]" | "}") => {
                    depth -= 1;
                    if depth == 0 {
                        return matches!(
                            self.tokens.get(i + 1).map(|t| &t.tok),
                            Some(Tok::Punct("=>" | ":"))
                        );
                    }
                }
                Tok::Eof => return false,
                _ => {}
            }
            i += 1;
        }
        false
    }

    fn object_member(&mut self) -> PResult<SyntaxNode> {
        if self.is_punct("...") {
            return self.spread_or_expression();
        }
        let key = match self.peek().clone() {
            Tok::Ident(name) => SyntaxNode::leaf(K::Identifier, name, self.bump().span),
            Tok::Str(s) => SyntaxNode::leaf(K::StringLiteral, s, self.bump().span),
            Tok::Number(n) => SyntaxNode::leaf(K::NumberLiteral, n, self.bump().span),
            _ => return Err(self.error("expected property")),
        };
        if !self.is_punct(":") {
            if key.kind == K::Identifier {
                return Ok(key);
            }
            return Err(self.error("expected ':'"));
        }
        self.bump();
        let value = self.expression()?;
        let span = Span::new(key.span.start, value.span.end);
        Ok(SyntaxNode::branch(K::Property, vec![key, value], span))
    }
}
