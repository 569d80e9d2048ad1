//! Precedence-climbing parser. Unary operators bind tightest, then `&`,
//! `|`, and finally `->` (right-associative).

use super::Formula;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Bot,
    Top,
    Not,
    And,
    Or,
    Implies,
    Dia,
    Box,
    Ex,
    All,
    Ex1,
    All1,
    Ex2,
    All2,
    BlackDia,
    BlackBox,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    const SYMBOLS: &[(&str, Tok)] = &[
        ("#<>", Tok::BlackDia),
        ("#[]", Tok::BlackBox),
        ("<>", Tok::Dia),
        ("[]", Tok::Box),
        ("<1>", Tok::Ex1),
        ("[1]", Tok::All1),
        ("<2>", Tok::Ex2),
        ("[2]", Tok::All2),
        ("->", Tok::Implies),
        ("→", Tok::Implies),
        ("~", Tok::Not),
        ("¬", Tok::Not),
        ("&", Tok::And),
        ("∧", Tok::And),
        ("|", Tok::Or),
        ("∨", Tok::Or),
        ("(", Tok::LParen),
        (")", Tok::RParen),
        ("◇", Tok::Dia),
        ("□", Tok::Box),
        ("∃", Tok::Ex),
        ("∀", Tok::All),
        ("◆", Tok::BlackDia),
        ("■", Tok::BlackBox),
        ("⊥", Tok::Bot),
        ("⊤", Tok::Top),
    ];
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().expect("non-empty");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        for (sym, tok) in SYMBOLS {
            if rest.starts_with(sym) {
                out.push((i, tok.clone()));
                i += sym.len();
                continue 'outer;
            }
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            let word = &rest[..len];
            let tok = match word {
                "E" => Tok::Ex,
                "A" => Tok::All,
                w if w.starts_with(|ch: char| ch.is_ascii_lowercase() || ch == '_') => {
                    Tok::Var(w.to_string())
                }
                w => {
                    return Err(syntax(
                        i,
                        format!(
                        "`{w}` is not a variable (variables start lowercase; E and A are reserved)"
                    ),
                    ))
                }
            };
            out.push((i, tok));
            i += len;
            continue;
        }
        if c.is_ascii_digit() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            let tok = match &rest[..len] {
                "0" => Tok::Bot,
                "1" => Tok::Top,
                d => return Err(syntax(i, format!("unexpected number `{d}`"))),
            };
            out.push((i, tok));
            i += len;
            continue;
        }
        return Err(syntax(i, format!("unexpected character `{c}`")));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(pos, "unexpected end of input"));
        };
        self.at += 1;
        let wrap: fn(Formula) -> Formula = match tok {
            Tok::Var(v) => return Ok(Formula::Var(v)),
            Tok::Bot => return Ok(Formula::Bot),
            Tok::Top => return Ok(Formula::Top),
            Tok::LParen => {
                let inner = self.implication()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.pos(), "expected `)`"));
                }
                return Ok(inner);
            }
            Tok::Not => Formula::not,
            Tok::Dia => Formula::dia,
            Tok::Box => Formula::boxed,
            Tok::Ex => Formula::ex,
            Tok::All => Formula::all,
            Tok::Ex1 => Formula::ex1,
            Tok::All1 => Formula::all1,
            Tok::Ex2 => Formula::ex2,
            Tok::All2 => Formula::all2,
            Tok::BlackDia => Formula::black_dia,
            Tok::BlackBox => Formula::black_box,
            Tok::And | Tok::Or | Tok::Implies | Tok::RParen => {
                return Err(syntax(pos, format!("unexpected {tok:?}")))
            }
        };
        Ok(wrap(self.unary()?))
    }
}

/// Parses the ASCII formula grammar; `#<>` and `#[]` are expanded to
/// `<>E` and `[]A`.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let f = p.implication()?;
    if p.at != p.toks.len() {
        return Err(syntax(p.pos(), "trailing input"));
    }
    f.language()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    #[test]
    fn bridge_axiom() {
        assert_eq!(
            parse("<>p -> E p").unwrap(),
            Formula::implies(Formula::dia(p()), Formula::ex(p()))
        );
    }

    #[test]
    fn black_operators_expand() {
        assert_eq!(parse("#[] p").unwrap(), Formula::boxed(Formula::all(p())));
        assert_eq!(parse("#<>p").unwrap(), Formula::dia(Formula::ex(p())));
    }

    #[test]
    fn left_commutativity() {
        let f = parse("E <> p -> <> E p").unwrap();
        assert_eq!(
            f,
            Formula::implies(
                Formula::ex(Formula::dia(p())),
                Formula::dia(Formula::ex(p()))
            )
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let q = Formula::var("q");
        assert_eq!(
            parse("p | q & p").unwrap(),
            Formula::or(p(), Formula::and(q.clone(), p()))
        );
        assert_eq!(
            parse("p -> q -> p").unwrap(),
            Formula::implies(p(), Formula::implies(q.clone(), p()))
        );
        assert_eq!(
            parse("~p & q").unwrap(),
            Formula::and(Formula::not(p()), q.clone())
        );
        assert_eq!(
            parse("p | q | p").unwrap(),
            Formula::or(Formula::or(p(), q), p())
        );
    }

    #[test]
    fn constants_and_s52() {
        assert_eq!(
            parse("0 | 1").unwrap(),
            Formula::or(Formula::Bot, Formula::Top)
        );
        assert_eq!(
            parse("<1>[2]p1").unwrap(),
            Formula::ex1(Formula::all2(Formula::var("p1")))
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("p &"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(p"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("P"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("p q"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("Ep"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("p $"), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(parse("<>p & <1>p"), Err(Error::MixedLanguage));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("◇p → ∃p").unwrap(), parse("<>p -> E p").unwrap());
    }
}
