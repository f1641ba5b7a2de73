use std::collections::BTreeMap;

use super::lexer::{tokenize, Pos, Spanned, Token};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// One executed statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Ring(RingContext),
    Assign { name: String, value: MonomialIdeal },
    Eval(MonomialIdeal),
}

/// Evaluation state for a sequence of statements:
///
/// ```text
/// session := stmt (";" stmt)*
/// stmt    := "ring" name ("," name)* | name "=" expr | expr
/// expr    := expr "+" expr | expr "cap" expr | expr "*" expr | expr "^" int
///          | name | "(" monomial ("," monomial)* ")" | "(" expr ")"
/// ```
///
/// `^` binds tighter than `*`, then `cap` (or `∩`), then `+`; all are left
/// associative. A parenthesis opens a generator list when the next token is a
/// ring variable or an integer, so `(1)` is the unit ideal and `(0)` the zero
/// ideal. Declaring a ring clears all bindings.
#[derive(Clone, Debug, Default)]
pub struct Session {
    context: Option<RingContext>,
    bindings: BTreeMap<String, MonomialIdeal>,
    log: Vec<Command>,
}

/// Parses and evaluates `text` in a fresh session.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut session = Session::new();
    session.run(text)?;
    Ok(session)
}

/// Evaluates a single expression over `ring`.
pub fn parse_ideal(ring: &RingContext, text: &str) -> Result<MonomialIdeal> {
    Session::with_ring(ring.clone()).eval_expr(text)
}

/// Parses a monomial such as `x^3*y^2` or `1` over `ring`.
pub fn parse_monomial(ring: &RingContext, text: &str) -> Result<Monomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        at: 0,
    };
    let m = parser.monomial(ring)?;
    parser.expect(Token::Eof)?;
    m.ok_or_else(|| tokens[0].pos.error("expected a nonzero monomial"))
}

/// Variable names in order of first appearance, skipping names that are
/// assigned to and everything after a `ring` keyword in the same statement.
pub fn infer_ring<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<RingContext> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let tokens = tokenize(text)?;
        let mut in_ring_decl = false;
        for (i, t) in tokens.iter().enumerate() {
            match &t.token {
                Token::Ring => in_ring_decl = true,
                Token::Semi => in_ring_decl = false,
                Token::Ident(name)
                    if !in_ring_decl
                        && tokens.get(i + 1).map(|n| &n.token) != Some(&Token::Equals)
                        && !names.contains(name) =>
                {
                    names.push(name.clone());
                }
                _ => {}
            }
        }
    }
    if names.is_empty() {
        return Err(Error::InvalidArgument(
            "no variables to infer a ring from; pass --ring".into(),
        ));
    }
    RingContext::new(names)
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_ring(ring: RingContext) -> Self {
        Self {
            context: Some(ring),
            ..Self::default()
        }
    }

    pub fn context(&self) -> Option<&RingContext> {
        self.context.as_ref()
    }

    pub fn binding(&self, name: &str) -> Option<&MonomialIdeal> {
        self.bindings.get(name)
    }

    pub fn bindings(&self) -> &BTreeMap<String, MonomialIdeal> {
        &self.bindings
    }

    pub fn log(&self) -> &[Command] {
        &self.log
    }

    /// Values of bare expression statements, in order.
    pub fn outputs(&self) -> impl Iterator<Item = &MonomialIdeal> {
        self.log.iter().filter_map(|c| match c {
            Command::Eval(v) => Some(v),
            _ => None,
        })
    }

    /// The value of the last assignment or expression statement.
    pub fn last_value(&self) -> Option<&MonomialIdeal> {
        self.log.iter().rev().find_map(|c| match c {
            Command::Eval(v) | Command::Assign { value: v, .. } => Some(v),
            Command::Ring(_) => None,
        })
    }

    /// Executes every statement of `text`. On error the statements before the
    /// failing one stay applied.
    pub fn run(&mut self, text: &str) -> Result<()> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            at: 0,
        };
        loop {
            while parser.peek() == &Token::Semi {
                parser.bump();
            }
            if parser.peek() == &Token::Eof {
                return Ok(());
            }
            let command = parser.statement(self)?;
            match &command {
                Command::Ring(ring) => {
                    self.context = Some(ring.clone());
                    self.bindings.clear();
                }
                Command::Assign { name, value } => {
                    self.bindings.insert(name.clone(), value.clone());
                }
                Command::Eval(_) => {}
            }
            self.log.push(command);
            if !matches!(parser.peek(), Token::Semi | Token::Eof) {
                return Err(parser.unexpected("`;`"));
            }
        }
    }

    /// Evaluates one expression against the current ring and bindings without
    /// recording it.
    pub fn eval_expr(&self, text: &str) -> Result<MonomialIdeal> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            at: 0,
        };
        let value = parser.expr(self)?;
        parser.expect(Token::Eof)?;
        Ok(value)
    }

    fn ring_at(&self, pos: Pos) -> Result<&RingContext> {
        self.context
            .as_ref()
            .ok_or_else(|| pos.error("a `ring` declaration must come first"))
    }
}

struct Parser<'t> {
    tokens: &'t [Spanned],
    at: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> &'t Token {
        &self.tokens[self.at].token
    }

    fn peek_at(&self, k: usize) -> &'t Token {
        &self.tokens[(self.at + k).min(self.tokens.len() - 1)].token
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> &'t Spanned {
        let t = &self.tokens[self.at];
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        self.pos()
            .error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, token: Token) -> Result<()> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&token.describe()))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        let pos = self.pos();
        match self.peek() {
            Token::Ident(name) => {
                self.bump();
                Ok((name.clone(), pos))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let pos = self.pos();
        match self.peek() {
            Token::Int(n) => {
                self.bump();
                u32::try_from(*n).map_err(|_| pos.error(format!("exponent {n} overflows")))
            }
            _ => Err(self.unexpected("an integer exponent")),
        }
    }

    fn statement(&mut self, session: &Session) -> Result<Command> {
        let pos = self.pos();
        match (self.peek(), self.peek_at(1)) {
            (Token::Ring, _) => {
                self.bump();
                let mut names = vec![self.ident()?.0];
                while *self.peek() == Token::Comma {
                    self.bump();
                    names.push(self.ident()?.0);
                }
                let ring = RingContext::new(names).map_err(|e| pos.error(e.to_string()))?;
                Ok(Command::Ring(ring))
            }
            (Token::Ident(_), Token::Equals) => {
                let (name, name_pos) = self.ident()?;
                self.bump();
                let ring = session.ring_at(name_pos)?;
                if ring.index_of(&name).is_some() {
                    return Err(name_pos.error(format!(
                        "`{name}` is a ring variable and cannot be bound"
                    )));
                }
                let value = self.expr(session)?;
                Ok(Command::Assign { name, value })
            }
            _ => Ok(Command::Eval(self.expr(session)?)),
        }
    }

    fn binary(
        &mut self,
        session: &Session,
        op: Token,
        operand: fn(&mut Self, &Session) -> Result<MonomialIdeal>,
        apply: fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = operand(self, session)?;
        while *self.peek() == op {
            let pos = self.pos();
            self.bump();
            let rhs = operand(self, session)?;
            acc = apply(&acc, &rhs).map_err(|e| pos.error(e.to_string()))?;
        }
        Ok(acc)
    }

    fn expr(&mut self, session: &Session) -> Result<MonomialIdeal> {
        self.binary(session, Token::Plus, Self::cap_expr, MonomialIdeal::add)
    }

    fn cap_expr(&mut self, session: &Session) -> Result<MonomialIdeal> {
        self.binary(session, Token::Cap, Self::mul_expr, MonomialIdeal::intersect)
    }

    fn mul_expr(&mut self, session: &Session) -> Result<MonomialIdeal> {
        self.binary(session, Token::Star, Self::pow_expr, MonomialIdeal::mul)
    }

    fn pow_expr(&mut self, session: &Session) -> Result<MonomialIdeal> {
        let mut acc = self.atom(session)?;
        while *self.peek() == Token::Caret {
            let pos = self.pos();
            self.bump();
            let n = self.exponent()?;
            acc = acc.power(n).map_err(|e| pos.error(e.to_string()))?;
        }
        Ok(acc)
    }

    fn atom(&mut self, session: &Session) -> Result<MonomialIdeal> {
        let pos = self.pos();
        match self.peek() {
            Token::Ident(name) => {
                self.bump();
                if let Some(value) = session.bindings.get(name) {
                    return Ok(value.clone());
                }
                let is_var = session.context.as_ref().and_then(|r| r.index_of(name)).is_some();
                Err(pos.error(if is_var {
                    format!("variable `{name}` is not an ideal; write ({name})")
                } else {
                    format!("unknown name `{name}`")
                }))
            }
            Token::LParen => {
                let ring = session.ring_at(pos)?;
                let literal = match self.peek_at(1) {
                    Token::Int(_) => true,
                    Token::Ident(name) => ring.index_of(name).is_some(),
                    _ => false,
                };
                self.bump();
                let value = if literal {
                    let mut gens = Vec::new();
                    loop {
                        gens.extend(self.monomial(ring)?);
                        if *self.peek() != Token::Comma {
                            break;
                        }
                        self.bump();
                    }
                    MonomialIdeal::new(ring.clone(), gens)?
                } else {
                    self.expr(session)?
                };
                self.expect(Token::RParen)?;
                Ok(value)
            }
            _ => Err(self.unexpected("an ideal")),
        }
    }

    /// A product of `var^k` factors and the integer `1`; a `0` factor makes the
    /// whole monomial zero, returned as `None`.
    fn monomial(&mut self, ring: &RingContext) -> Result<Option<Monomial>> {
        let mut acc = Some(ring.one());
        loop {
            let pos = self.pos();
            match self.peek() {
                Token::Int(0) => {
                    self.bump();
                    acc = None;
                }
                Token::Int(1) => {
                    self.bump();
                }
                Token::Int(n) => {
                    return Err(pos.error(format!("coefficient {n} is not allowed in a monomial")))
                }
                Token::Ident(name) => {
                    let index = ring
                        .index_of(name)
                        .ok_or_else(|| pos.error(format!("unknown variable `{name}`")))?;
                    self.bump();
                    let e = if *self.peek() == Token::Caret {
                        self.bump();
                        self.exponent()?
                    } else {
                        1
                    };
                    let mut exps = vec![0; ring.dim()];
                    exps[index] = e;
                    if let Some(m) = &acc {
                        acc = Some(
                            m.mul(&Monomial::from_exponents(exps))
                                .map_err(|e| pos.error(e.to_string()))?,
                        );
                    }
                }
                _ => return Err(self.unexpected("a variable or 1")),
            }
            if *self.peek() != Token::Star {
                return Ok(acc);
            }
            self.bump();
        }
    }
}
