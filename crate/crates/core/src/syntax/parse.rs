//! Recursive-descent parser for the ASCII concrete syntax.
//!
//! ```text
//! formula := disj ; disj := conj ('|' conj)* ; conj := unary ('&' unary)* ;
//! unary   := '!' unary | '<' game '>' unary | ident | '(' formula ')' ;
//! game    := seq (('u'|'n') seq)* ; seq := postfix (';' postfix)* ;
//! postfix := base ('^d'|'^*'|'^x')* ;
//! base    := ident | ident ('?'|'!') | '(' formula ')' ('?'|'!') | '(' game ')'
//! ```
//!
//! `u` and `n` are keywords; they cannot be used as identifiers.

use std::fmt;

use thiserror::Error;

use super::{is_reserved, Formula, Game};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: identifier `{name}` uses the reserved `$` namespace")]
    Reserved { line: usize, column: usize, name: String },
    #[error("{line}:{column}: unexpected character `{ch}`")]
    Lexical { line: usize, column: usize, ch: char },
}

impl ParseError {
    fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::Reserved { line, column, .. }
            | ParseError::Lexical { line, column, .. } => (*line, *column),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Accept `$`-prefixed identifiers (machine-generated names).
    pub allow_reserved: bool,
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse_formula_with(text, ParseOptions::default())
}

pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    parse_game_with(text, ParseOptions::default())
}

pub fn parse_formula_with(text: &str, options: ParseOptions) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text, options)?;
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub fn parse_game_with(text: &str, options: ParseOptions) -> Result<Game, ParseError> {
    let mut p = Parser::new(text, options)?;
    let g = p.game()?;
    p.expect_eof()?;
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bang,
    Amp,
    Bar,
    Lt,
    Gt,
    LParen,
    RParen,
    Semi,
    Question,
    PostDual,
    PostStar,
    PostCross,
    Cup,
    Cap,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Bang => f.write_str("`!`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Gt => f.write_str("`>`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Question => f.write_str("`?`"),
            Tok::PostDual => f.write_str("`^d`"),
            Tok::PostStar => f.write_str("`^*`"),
            Tok::PostCross => f.write_str("`^x`"),
            Tok::Cup => f.write_str("`u`"),
            Tok::Cap => f.write_str("`n`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Lexer<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        if c == Some('\n') {
            self.line += 1;
            self.column = 1;
        } else if c.is_some() {
            self.column += 1;
        }
        c
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut lx = Lexer { chars: text.chars().peekable(), line: 1, column: 1 };
    let mut out = Vec::new();
    while let Some(&c) = lx.chars.peek() {
        let (line, column) = (lx.line, lx.column);
        if c.is_whitespace() {
            lx.bump();
            continue;
        }
        let single = match c {
            '!' => Some(Tok::Bang),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Bar),
            '<' => Some(Tok::Lt),
            '>' => Some(Tok::Gt),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            '?' => Some(Tok::Question),
            _ => None,
        };
        let tok = if let Some(t) = single {
            lx.bump();
            t
        } else if c == '^' {
            lx.bump();
            let t = match lx.chars.peek().copied() {
                Some('d') => Tok::PostDual,
                Some('*') => Tok::PostStar,
                Some('x') => Tok::PostCross,
                other => {
                    return Err(ParseError::Syntax {
                        line: lx.line,
                        column: lx.column,
                        expected: vec!["`d`".into(), "`*`".into(), "`x`".into()],
                        found: other.map_or("end of input".into(), |ch| format!("`{ch}`")),
                    })
                }
            };
            lx.bump();
            t
        } else if c.is_ascii_alphabetic() || c == '_' || c == '$' {
            let mut name = String::new();
            name.push(c);
            lx.bump();
            while let Some(&d) = lx.chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    name.push(d);
                    lx.bump();
                } else {
                    break;
                }
            }
            match name.as_str() {
                "u" => Tok::Cup,
                "n" => Tok::Cap,
                _ => Tok::Ident(name),
            }
        } else {
            return Err(ParseError::Lexical { line, column, ch: c });
        };
        out.push(Spanned { tok, line, column });
    }
    out.push(Spanned { tok: Tok::Eof, line: lx.line, column: lx.column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    options: ParseOptions,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn new(text: &str, options: ParseOptions) -> PResult<Self> {
        Ok(Parser { toks: lex(text)?, pos: 0, options })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError::Syntax {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(&[&tok.to_string()]))
        }
    }

    fn expect_eof(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        let s = &self.toks[self.pos];
        match &s.tok {
            Tok::Ident(name) => {
                if is_reserved(name) && !self.options.allow_reserved {
                    return Err(ParseError::Reserved { line: s.line, column: s.column, name: name.clone() });
                }
                let name = name.clone();
                self.advance();
                Ok(name)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut left = self.conj()?;
        while self.eat(&Tok::Bar) {
            let right = self.conj()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conj(&mut self) -> PResult<Formula> {
        let mut left = self.unary()?;
        while self.eat(&Tok::Amp) {
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Bang => {
                self.advance();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Lt => {
                self.advance();
                let g = self.game()?;
                self.expect(Tok::Gt)?;
                Ok(Formula::dia(g, self.unary()?))
            }
            Tok::Ident(_) => Ok(Formula::Atom(self.ident()?)),
            Tok::LParen => {
                self.advance();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            _ => Err(self.error(&["`!`", "`<`", "identifier", "`(`"])),
        }
    }

    fn game(&mut self) -> PResult<Game> {
        let mut left = self.seq()?;
        loop {
            if self.eat(&Tok::Cup) {
                left = Game::cup(left, self.seq()?);
            } else if self.eat(&Tok::Cap) {
                left = Game::cap(left, self.seq()?);
            } else {
                return Ok(left);
            }
        }
    }

    fn seq(&mut self) -> PResult<Game> {
        let mut left = self.postfix()?;
        while self.eat(&Tok::Semi) {
            left = Game::seq(left, self.postfix()?);
        }
        Ok(left)
    }

    fn postfix(&mut self) -> PResult<Game> {
        let mut g = self.base()?;
        loop {
            g = match self.peek() {
                Tok::PostDual => Game::dual(g),
                Tok::PostStar => Game::star(g),
                Tok::PostCross => Game::cross(g),
                _ => return Ok(g),
            };
            self.advance();
        }
    }

    fn test_suffix(&mut self, f: Formula) -> Option<Game> {
        match self.peek() {
            Tok::Question => {
                self.advance();
                Some(Game::test(f))
            }
            Tok::Bang => {
                self.advance();
                Some(Game::dual_test(f))
            }
            _ => None,
        }
    }

    fn base(&mut self) -> PResult<Game> {
        match self.peek() {
            Tok::Ident(_) => {
                let name = self.ident()?;
                let atom = Formula::Atom(name.clone());
                Ok(self.test_suffix(atom).unwrap_or(Game::Atomic(name)))
            }
            Tok::LParen => {
                let start = self.pos;
                self.advance();
                // `(` formula `)` followed by `?`/`!` is a test, otherwise a
                // parenthesized game.
                let as_test = (|| {
                    let f = self.formula()?;
                    self.expect(Tok::RParen)?;
                    self.test_suffix(f).ok_or_else(|| self.error(&["`?`", "`!`"]))
                })();
                match as_test {
                    Ok(g) => Ok(g),
                    Err(test_err) => {
                        self.pos = start + 1;
                        let as_game: Result<Game, ParseError> = (|| {
                            let g = self.game()?;
                            self.expect(Tok::RParen)?;
                            Ok(g)
                        })();
                        match as_game {
                            Ok(g) => Ok(g),
                            Err(game_err) => {
                                if test_err.position() > game_err.position() {
                                    Err(test_err)
                                } else {
                                    Err(game_err)
                                }
                            }
                        }
                    }
                }
            }
            _ => Err(self.error(&["identifier", "`(`"])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }
    fn g(n: &str) -> Game {
        Game::atomic(n)
    }

    #[test]
    fn smallest_disjunction() {
        assert_eq!(parse_formula("p | !p").unwrap(), Formula::or(a("p"), Formula::neg(a("p"))));
    }

    #[test]
    fn cross_of_test_and_star() {
        let f = parse_formula("<(p? ; g^*)^x> e").unwrap();
        let expected = Formula::dia(Game::cross(Game::seq(Game::test(a("p")), Game::star(g("g")))), a("e"));
        assert_eq!(f, expected);
    }

    #[test]
    fn dual_modality() {
        assert_eq!(parse_formula("<g^d> p").unwrap(), Formula::dia(Game::dual(g("g")), a("p")));
    }

    #[test]
    fn game_entry_point() {
        assert_eq!(parse_game("g").unwrap(), g("g"));
        let expected = Game::cross(Game::cap(
            Game::star(g("g")),
            Game::seq(Game::test(a("p")), Game::dual_test(a("p"))),
        ));
        assert_eq!(parse_game("(g^* n (p? ; p!))^x").unwrap(), expected);
    }

    #[test]
    fn seq_binds_tighter_than_choice() {
        assert_eq!(parse_game("a u b ; c").unwrap(), Game::cup(g("a"), Game::seq(g("b"), g("c"))));
    }

    #[test]
    fn mixed_choice_groups_left() {
        assert_eq!(parse_game("a u b n c").unwrap(), Game::cap(Game::cup(g("a"), g("b")), g("c")));
    }

    #[test]
    fn parenthesised_formula_tests() {
        assert_eq!(parse_game("(p & q)?").unwrap(), Game::test(Formula::and(a("p"), a("q"))));
        assert_eq!(parse_game("(!p)!").unwrap(), Game::dual_test(Formula::neg(a("p"))));
        assert_eq!(parse_game("(p)?").unwrap(), Game::test(a("p")));
        assert_eq!(parse_game("(g)").unwrap(), g("g"));
        assert_eq!(parse_game("(<g>p)?^*").unwrap(), Game::star(Game::test(Formula::dia(g("g"), a("p")))));
    }

    #[test]
    fn reserved_names_rejected() {
        let err = parse_formula("<g>$e0").unwrap_err();
        assert!(matches!(err, ParseError::Reserved { column: 4, .. }), "{err}");
        let ok = parse_formula_with("<g>$e0", ParseOptions { allow_reserved: true }).unwrap();
        assert_eq!(ok, Formula::dia(g("g"), a("$e0")));
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        match parse_formula("p &\n  ").unwrap_err() {
            ParseError::Syntax { line, expected, found, .. } => {
                assert_eq!(line, 2);
                assert!(expected.iter().any(|e| e == "identifier"));
                assert_eq!(found, "end of input");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_formula("p % q"), Err(ParseError::Lexical { ch: '%', .. })));
        assert!(parse_formula("<g p").is_err());
        assert!(parse_game("g^q").is_err());
        assert!(parse_formula("p q").is_err());
    }
}
