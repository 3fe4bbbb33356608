//! Recursive-descent parser for the formula grammar in the module docs.
//!
//! Errors carry the 1-based line and column of the offending token. Parsing
//! accepts sentences only: any free variable is reported (so `parse` is also
//! the scope checker).

use crate::{Error, Result};

use super::{Formula, Term};

const KEYWORDS: [&str; 6] = ["forall", "exists", "add", "mul", "inv", "neg"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
    And,
    Or,
    Not,
    Arrow,
    Iff,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Equals => "`=`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Not => "`~`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, line: usize, column: usize, message: String) -> Error {
        Error::Parse {
            line,
            column,
            message,
        }
    }

    /// Consumes `want` or errors; used for the two-character operators.
    fn expect_char(&mut self, want: char, line: usize, column: usize, op: &str) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            got => Err(self.error(
                line,
                column,
                match got {
                    Some(c) => format!("expected {op}, found `{c}` after its first character"),
                    None => format!("expected {op}, input ended after its first character"),
                },
            )),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(c) = self.bump() else {
                out.push((Tok::Eof, line, column));
                return Ok(out);
            };
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '=' => Tok::Equals,
                '~' => Tok::Not,
                '/' => {
                    self.expect_char('\\', line, column, "`/\\`")?;
                    Tok::And
                }
                '\\' => {
                    self.expect_char('/', line, column, "`\\/`")?;
                    Tok::Or
                }
                '-' => {
                    self.expect_char('>', line, column, "`->`")?;
                    Tok::Arrow
                }
                '<' => {
                    self.expect_char('-', line, column, "`<->`")?;
                    self.expect_char('>', line, column, "`<->`")?;
                    Tok::Iff
                }
                d if d.is_ascii_digit() => {
                    let mut lit = String::from(d);
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        lit.push(self.bump().expect("peeked"));
                    }
                    match lit.as_str() {
                        "0" => Tok::Zero,
                        "1" => Tok::One,
                        _ => {
                            return Err(self.error(
                                line,
                                column,
                                format!("`{lit}` is not a term; the only constants are 0 and 1"),
                            ))
                        }
                    }
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let mut name = String::from(a);
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        name.push(self.bump().expect("peeked"));
                    }
                    Tok::Ident(name)
                }
                other => {
                    return Err(self.error(line, column, format!("unexpected character `{other}`")))
                }
            };
            out.push((tok, line, column));
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, line, column) = self.tokens[self.pos];
        (line, column)
    }

    fn advance(&mut self) -> Tok {
        let tok = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error_here(&self, message: String) -> Error {
        let (line, column) = self.here();
        Error::Parse {
            line,
            column,
            message,
        }
    }

    fn expect(&mut self, want: &Tok, context: &str) -> Result<()> {
        if self.peek() == want {
            self.advance();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {} {context}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let left = self.implies()?;
        if *self.peek() == Tok::Iff {
            self.advance();
            let right = self.implies()?;
            if *self.peek() == Tok::Iff {
                return Err(self.error_here(
                    "`<->` does not chain; parenthesize one side".to_string(),
                ));
            }
            return Ok(Formula::Iff(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if *self.peek() == Tok::Arrow {
            self.advance();
            let right = self.implies()?;
            return Ok(Formula::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.advance();
            let right = self.and()?;
            left = Formula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.advance();
            let right = self.unary()?;
            left = Formula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.advance();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.formula()?;
                self.expect(&Tok::RParen, "to close the parenthesized formula")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "forall" || name == "exists" => {
                let universal = name == "forall";
                self.advance();
                let var = match self.peek().clone() {
                    Tok::Ident(v) if !KEYWORDS.contains(&v.as_str()) => {
                        self.advance();
                        v
                    }
                    other => {
                        return Err(self.error_here(format!(
                            "expected a variable name after the quantifier, found {}",
                            other.describe()
                        )))
                    }
                };
                self.expect(&Tok::Dot, "after the quantified variable (one variable per quantifier)")?;
                let body = Box::new(self.formula()?);
                Ok(if universal {
                    Formula::Forall(var, body)
                } else {
                    Formula::Exists(var, body)
                })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        if matches!(self.peek(), Tok::Ident(name) if name == "add") {
            let at = self.here();
            self.advance();
            let args = self.arguments("add", at)?;
            let mut it = args.into_iter();
            let (x, y, z) = match (it.next(), it.next(), it.next(), it.next()) {
                (Some(x), Some(y), Some(z), None) => (x, y, z),
                _ => unreachable!("arguments() enforced the arity"),
            };
            return Ok(Formula::Add(x, y, z));
        }
        let left = self.term()?;
        self.expect(&Tok::Equals, "between the terms of an equality atom")?;
        let right = self.term()?;
        Ok(Formula::Eq(left, right))
    }

    fn term(&mut self) -> Result<Term> {
        let at = self.here();
        match self.advance() {
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::Ident(name) => match name.as_str() {
                "mul" => {
                    let mut args = self.arguments("mul", at)?.into_iter();
                    Ok(Term::Mul(
                        Box::new(args.next().expect("arity checked")),
                        Box::new(args.next().expect("arity checked")),
                    ))
                }
                "inv" => {
                    let mut args = self.arguments("inv", at)?.into_iter();
                    Ok(Term::Inv(Box::new(args.next().expect("arity checked"))))
                }
                "neg" => {
                    let mut args = self.arguments("neg", at)?.into_iter();
                    Ok(Term::Neg(Box::new(args.next().expect("arity checked"))))
                }
                "add" | "forall" | "exists" => Err(Error::Parse {
                    line: at.0,
                    column: at.1,
                    message: format!("`{name}` cannot appear inside a term"),
                }),
                _ => Ok(Term::Var(name)),
            },
            other => Err(Error::Parse {
                line: at.0,
                column: at.1,
                message: format!("expected a term, found {}", other.describe()),
            }),
        }
    }

    /// Parses `"(" term {"," term} ")"` after `name` and checks the arity.
    fn arguments(&mut self, name: &str, at: (usize, usize)) -> Result<Vec<Term>> {
        let expected = match name {
            "add" => 3,
            "mul" => 2,
            _ => 1,
        };
        self.expect(&Tok::LParen, &format!("after `{name}`"))?;
        let mut args = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.advance();
            args.push(self.term()?);
        }
        self.expect(&Tok::RParen, &format!("to close the arguments of `{name}`"))?;
        if args.len() != expected {
            return Err(Error::Parse {
                line: at.0,
                column: at.1,
                message: format!(
                    "`{name}` expects {expected} argument{}, got {}",
                    if expected == 1 { "" } else { "s" },
                    args.len()
                ),
            });
        }
        Ok(args)
    }
}

/// Parses a sentence in the grammar described in the module docs.
pub fn parse(text: &str) -> Result<Formula> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, pos: 0 };
    let formula = parser.formula()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error_here(format!(
            "unexpected {} after the formula",
            parser.peek().describe()
        )));
    }
    if let Some(v) = formula.free_variable() {
        return Err(Error::FreeVariable(v.to_string()));
    }
    Ok(formula)
}
