//! Expression and polynomial syntax.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' ['-'] int)?
//! atom   := rational | 'g' index | name | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `p/q` written without spaces is a single rational literal. Unary minus
//! is a node, so `-2^2` is −(2²). Offsets in errors count characters from 0.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::format_rational;
use crate::poly::RatPoly;
use crate::tower::{Tower, TowerElement};

pub const MAX_EXPONENT: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Rational(BigRational),
    Sqrt,
    Generator(usize),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Rational(q) => write!(f, "number {}", format_rational(q)),
            Token::Sqrt => f.write_str("`sqrt`"),
            Token::Generator(i) => write!(f, "`g{i}`"),
            Token::Name(n) => write!(f, "`{n}`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::Caret => f.write_str("`^`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::LBracket => f.write_str("`[`"),
            Token::RBracket => f.write_str("`]`"),
            Token::Comma => f.write_str("`,`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub offset: usize,
}

fn int_token(digits: &str) -> Token {
    Token::Rational(BigRational::from_integer(
        digits.parse::<BigInt>().expect("ascii digits"),
    ))
}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out: Vec<Spanned> = Vec::new();
    let mut i = 0;
    let digits_from = |start: usize| {
        let mut end = start;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let simple = match c {
            '+' => Some(Token::Plus),
            '-' | '−' => Some(Token::Minus),
            '*' | '×' => Some(Token::Star),
            '/' | '÷' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            ',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(token) = simple {
            out.push(Spanned { token, offset: start });
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let end = digits_from(i);
            let num: String = chars[i..end].iter().collect();
            let after_caret = matches!(out.last(), Some(Spanned { token: Token::Caret, .. }))
                || matches!(
                    out.as_slice(),
                    [.., Spanned { token: Token::Caret, .. }, Spanned { token: Token::Minus, .. }]
                );
            // `p/q` fuses into one literal when written tight and q ≠ 0.
            if !after_caret && end + 1 < chars.len() && chars[end] == '/' && chars[end + 1].is_ascii_digit() {
                let den_end = digits_from(end + 1);
                let den: String = chars[end + 1..den_end].iter().collect();
                let den = den.parse::<BigInt>().expect("ascii digits");
                if !den.is_zero() {
                    let num = num.parse::<BigInt>().expect("ascii digits");
                    out.push(Spanned {
                        token: Token::Rational(BigRational::new(num, den)),
                        offset: start,
                    });
                    i = den_end;
                    continue;
                }
            }
            out.push(Spanned {
                token: int_token(&num),
                offset: start,
            });
            i = end;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while end < chars.len() && (chars[end].is_alphanumeric() || chars[end] == '_') {
                end += 1;
            }
            let word: String = chars[i..end].iter().collect();
            let token = if word == "sqrt" {
                Token::Sqrt
            } else if let Some(index) = word
                .strip_prefix('g')
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            {
                match index.parse::<usize>() {
                    Ok(n) => Token::Generator(n),
                    Err(_) => Token::Name(word),
                }
            } else {
                Token::Name(word)
            };
            out.push(Spanned { token, offset: start });
            i = end;
            continue;
        }
        return Err(Error::Lex {
            offset: start,
            found: c,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Rational(BigRational),
    Generator(usize),
    /// A session binding such as `last`; resolved only by [`eval_expr_with`].
    Var(String),
    Sqrt(Box<ExprNode>),
    Neg(Box<ExprNode>),
    Pow(Box<ExprNode>, i64),
    BinOp(BinOp, Box<ExprNode>, Box<ExprNode>),
}

/// Fully parenthesized text that parses back to the same tree. Rational
/// literals are expected to be nonnegative, as the parser produces them.
impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprNode::Rational(q) => f.write_str(&format_rational(q)),
            ExprNode::Generator(i) => write!(f, "g{i}"),
            ExprNode::Var(name) => f.write_str(name),
            ExprNode::Sqrt(e) => write!(f, "sqrt({e})"),
            ExprNode::Neg(e) => write!(f, "-({e})"),
            ExprNode::Pow(e, n) => write!(f, "({e})^{n}"),
            ExprNode::BinOp(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Spanned],
    pos: usize,
    end_offset: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Spanned], end_offset: usize) -> Self {
        Parser {
            tokens,
            pos: 0,
            end_offset,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_offset, |s| s.offset)
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            offset: self.offset(),
            expected: expected.to_string(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), Token::to_string),
        }
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: Token) -> Result<()> {
        if self.eat(&token) {
            Ok(())
        } else {
            Err(self.error(&token.to_string()))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn expr(&mut self) -> Result<ExprNode> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => return Ok(left),
            };
            self.pos += 1;
            let right = self.term()?;
            left = ExprNode::BinOp(op, Box::new(left), Box::new(right));
        }
    }

    fn term(&mut self) -> Result<ExprNode> {
        let mut left = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Slash) => BinOp::Div,
                _ => return Ok(left),
            };
            self.pos += 1;
            let right = self.factor()?;
            left = ExprNode::BinOp(op, Box::new(left), Box::new(right));
        }
    }

    fn factor(&mut self) -> Result<ExprNode> {
        if self.eat(&Token::Minus) {
            return Ok(ExprNode::Neg(Box::new(self.factor()?)));
        }
        let atom = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(atom);
        }
        let negative = self.eat(&Token::Minus);
        let exp = match self.peek() {
            Some(Token::Rational(q)) if q.is_integer() => q.to_integer(),
            _ => return Err(self.error("integer exponent")),
        };
        self.pos += 1;
        let exp = exp
            .to_i64()
            .map(|e| if negative { -e } else { e })
            .filter(|e| e.abs() <= MAX_EXPONENT)
            .ok_or_else(|| {
                let shown = exp.to_i64().unwrap_or(i64::MAX);
                Error::ExponentTooLarge(if negative { -shown } else { shown })
            })?;
        Ok(ExprNode::Pow(Box::new(atom), exp))
    }

    fn atom(&mut self) -> Result<ExprNode> {
        let node = match self.peek() {
            Some(Token::Rational(q)) => ExprNode::Rational(q.clone()),
            Some(Token::Generator(0)) => return Err(self.error("generator index ≥ 1")),
            Some(Token::Generator(i)) => ExprNode::Generator(*i),
            Some(Token::Name(n)) => ExprNode::Var(n.clone()),
            Some(Token::Sqrt) => {
                self.pos += 1;
                self.expect(Token::LParen)?;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                return Ok(ExprNode::Sqrt(Box::new(inner)));
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                return Ok(inner);
            }
            _ => return Err(self.error("atom")),
        };
        self.pos += 1;
        Ok(node)
    }

    /// `'[' item (',' item)* ']'`
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(Token::LBracket)?;
        let mut items = vec![item(self)?];
        while self.eat(&Token::Comma) {
            items.push(item(self)?);
        }
        self.expect(Token::RBracket)?;
        Ok(items)
    }

    fn signed_rational(&mut self) -> Result<BigRational> {
        let negative = self.eat(&Token::Minus);
        match self.peek() {
            Some(Token::Rational(q)) => {
                let q = q.clone();
                self.pos += 1;
                Ok(if negative { -q } else { q })
            }
            _ => Err(self.error("rational coefficient")),
        }
    }
}

fn end_offset(input: &str) -> usize {
    input.chars().count()
}

/// Parses a token stream that must form exactly one expression.
pub fn parse_expr(tokens: &[Spanned]) -> Result<ExprNode> {
    let end = tokens.last().map_or(0, |t| t.offset + 1);
    let mut p = Parser::new(tokens, end);
    let node = p.expr()?;
    p.finish()?;
    Ok(node)
}

pub fn parse_expr_str(input: &str) -> Result<ExprNode> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, end_offset(input));
    let node = p.expr()?;
    p.finish()?;
    Ok(node)
}

/// `[c0, c1, ..., cd]` with rational entries, constant term first.
pub fn parse_poly(input: &str) -> Result<RatPoly> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, end_offset(input));
    let coeffs = p.list(Parser::signed_rational)?;
    p.finish()?;
    RatPoly::new(coeffs)
}

/// `[e0, e1, ..., ed]` with expression entries, for coefficients in a tower.
pub fn parse_expr_list(input: &str) -> Result<Vec<ExprNode>> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, end_offset(input));
    let items = p.list(Parser::expr)?;
    p.finish()?;
    Ok(items)
}

pub type Bindings = BTreeMap<String, TowerElement>;

/// Evaluates at the top level of `tower`.
pub fn eval_expr(node: &ExprNode, tower: &Tower) -> Result<TowerElement> {
    eval_expr_with(node, tower, &Bindings::new())
}

/// Evaluates at the top level of `tower`, resolving names from `bindings`.
/// Bound elements below the top level are lifted.
pub fn eval_expr_with(node: &ExprNode, tower: &Tower, bindings: &Bindings) -> Result<TowerElement> {
    let top = tower.depth();
    Ok(match node {
        ExprNode::Rational(q) => TowerElement::rational(top, q.clone()),
        ExprNode::Generator(i) => tower.generator(*i)?.lift_to(top)?,
        ExprNode::Var(name) => bindings
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.clone()))?
            .lift_to(top)?,
        ExprNode::Sqrt(inner) => {
            let value = eval_expr_with(inner, tower, bindings)?;
            let w = tower
                .is_square(&value)?
                .ok_or_else(|| Error::NotASquareInTower {
                    value: inner.to_string(),
                })?;
            // principal (nonnegative) root
            if tower.exact_sign(&w)? < 0 {
                tower.neg(&w)
            } else {
                w
            }
        }
        ExprNode::Neg(inner) => tower.neg(&eval_expr_with(inner, tower, bindings)?),
        ExprNode::Pow(inner, exp) => {
            if exp.abs() > MAX_EXPONENT {
                return Err(Error::ExponentTooLarge(*exp));
            }
            tower.pow(&eval_expr_with(inner, tower, bindings)?, *exp)?
        }
        ExprNode::BinOp(op, l, r) => {
            let l = eval_expr_with(l, tower, bindings)?;
            let r = eval_expr_with(r, tower, bindings)?;
            match op {
                BinOp::Add => tower.add(&l, &r)?,
                BinOp::Sub => tower.sub(&l, &r)?,
                BinOp::Mul => tower.mul(&l, &r)?,
                BinOp::Div => tower.div(&l, &r)?,
            }
        }
    })
}

impl ExprNode {
    pub fn rational(n: i64) -> Self {
        ExprNode::Rational(BigRational::from_integer(n.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn toks(input: &str) -> Vec<Token> {
        tokenize(input).unwrap().into_iter().map(|s| s.token).collect()
    }

    fn bin(op: BinOp, l: ExprNode, r: ExprNode) -> ExprNode {
        ExprNode::BinOp(op, Box::new(l), Box::new(r))
    }

    fn sqrt(e: ExprNode) -> ExprNode {
        ExprNode::Sqrt(Box::new(e))
    }

    fn q_sqrt2() -> Tower {
        Tower::from_squares(vec![vec![int(2)]]).unwrap()
    }

    #[test]
    fn tokenize_examples() {
        assert_eq!(
            toks("1/2 + g1"),
            vec![Token::Rational(rat(1, 2)), Token::Plus, Token::Generator(1)]
        );
        assert_eq!(
            toks("sqrt(2)"),
            vec![Token::Sqrt, Token::LParen, Token::Rational(int(2)), Token::RParen]
        );
        assert_eq!(tokenize("3@4"), Err(Error::Lex { offset: 1, found: '@' }));
        assert_eq!(
            toks("g1^2/3"),
            vec![
                Token::Generator(1),
                Token::Caret,
                Token::Rational(int(2)),
                Token::Slash,
                Token::Rational(int(3))
            ]
        );
        assert_eq!(
            toks("1/0"),
            vec![Token::Rational(int(1)), Token::Slash, Token::Rational(int(0))]
        );
        assert_eq!(toks("[-2, x]").len(), 6);
        assert_eq!(toks("4/6"), vec![Token::Rational(rat(2, 3))]);
        assert_eq!(toks("4 / 6").len(), 3);
    }

    #[test]
    fn parse_intro_expression() {
        let tree = parse_expr_str("(3 - sqrt(2)) * sqrt(2) / (sqrt(2) + 5)").unwrap();
        let two = || ExprNode::rational(2);
        let expected = bin(
            BinOp::Div,
            bin(
                BinOp::Mul,
                bin(BinOp::Sub, ExprNode::rational(3), sqrt(two())),
                sqrt(two()),
            ),
            bin(BinOp::Add, sqrt(two()), ExprNode::rational(5)),
        );
        assert_eq!(tree, expected);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_expr_str("g1^2").unwrap(),
            ExprNode::Pow(Box::new(ExprNode::Generator(1)), 2)
        );
        assert_eq!(
            parse_expr_str("1 + "),
            Err(Error::Syntax {
                offset: 4,
                expected: "atom".into(),
                found: "end of input".into()
            })
        );
        assert_eq!(
            parse_expr_str("-2^2").unwrap(),
            ExprNode::Neg(Box::new(ExprNode::Pow(Box::new(ExprNode::rational(2)), 2)))
        );
        assert_eq!(
            parse_expr_str("g1^-1").unwrap(),
            ExprNode::Pow(Box::new(ExprNode::Generator(1)), -1)
        );
        // left associativity
        assert_eq!(
            parse_expr_str("8 - 2 - 1").unwrap(),
            bin(
                BinOp::Sub,
                bin(BinOp::Sub, ExprNode::rational(8), ExprNode::rational(2)),
                ExprNode::rational(1)
            )
        );
        assert_eq!(parse_expr_str("g1^65"), Err(Error::ExponentTooLarge(65)));
        assert_eq!(parse_expr_str("g1^-65"), Err(Error::ExponentTooLarge(-65)));
        assert!(matches!(parse_expr_str("2 3"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr_str("(1"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expr_str("g0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr_str("2^g1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr_str("2^1/2"), Ok(ExprNode::BinOp(BinOp::Div, _, _))));
        assert!(matches!(parse_expr_str(""), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn eval_examples() {
        let t = q_sqrt2();
        let node = parse_expr_str("(3 - sqrt(2)) * sqrt(2) / (sqrt(2) + 5)").unwrap();
        let x = eval_expr(&node, &t).unwrap();
        assert_eq!(x.coords(), &[rat(-16, 23), rat(17, 23)]);

        let q = Tower::rationals();
        assert_eq!(
            eval_expr(&parse_expr_str("sqrt(9/4)").unwrap(), &q).unwrap(),
            TowerElement::rational(0, rat(3, 2))
        );
        let err = eval_expr(&parse_expr_str("sqrt(3)").unwrap(), &t).unwrap_err();
        assert_eq!(err.name(), "NotASquareInTower");
        assert!(err.to_string().contains("adjoin 3"));

        assert_eq!(
            eval_expr(&parse_expr_str("g2").unwrap(), &t),
            Err(Error::UnknownGenerator { index: 2, depth: 1 })
        );
        assert_eq!(
            eval_expr(&parse_expr_str("1/(g1 - sqrt(2))").unwrap(), &t),
            Err(Error::DivisionByZero)
        );
        assert_eq!(eval_expr(&parse_expr_str("1/0").unwrap(), &q), Err(Error::DivisionByZero));
        assert_eq!(
            eval_expr(&parse_expr_str("g1^0").unwrap(), &t).unwrap(),
            TowerElement::one(1)
        );
        assert_eq!(
            eval_expr(&parse_expr_str("g1^-2").unwrap(), &t).unwrap(),
            TowerElement::rational(1, rat(1, 2))
        );
        assert_eq!(
            eval_expr(&parse_expr_str("-2^2").unwrap(), &q).unwrap(),
            TowerElement::rational(0, int(-4))
        );
        // the principal root is chosen
        assert_eq!(
            eval_expr(&parse_expr_str("sqrt(3 - 2*g1)").unwrap(), &t).unwrap(),
            TowerElement::new(1, vec![int(-1), int(1)]).unwrap()
        );
    }

    #[test]
    fn eval_with_bindings() {
        let t = q_sqrt2();
        let mut b = Bindings::new();
        b.insert("last".into(), TowerElement::rational(0, int(7)));
        let x = eval_expr_with(&parse_expr_str("last * g1").unwrap(), &t, &b).unwrap();
        assert_eq!(x.coords(), &[int(0), int(7)]);
        assert_eq!(
            eval_expr(&parse_expr_str("last").unwrap(), &t),
            Err(Error::UnknownName("last".into()))
        );
    }

    #[test]
    fn parse_poly_examples() {
        assert_eq!(parse_poly("[-2, 0, 0, 1]").unwrap(), RatPoly::from_ints(&[-2, 0, 0, 1]));
        assert_eq!(parse_poly("[-1, -6, 0, 8]").unwrap(), RatPoly::from_ints(&[-1, -6, 0, 8]));
        assert_eq!(
            parse_poly("[1/2,-3/4]").unwrap().coeffs(),
            &[rat(1, 2), rat(-3, 4)]
        );
        for bad in ["[]", "[1,]", "[1 2]", "-2, 0]", "[1, g1]", "[1] 2", "[1/0]"] {
            assert!(parse_poly(bad).is_err(), "{bad}");
        }
        let list = parse_expr_list("[-1, -g1, 1]").unwrap();
        assert_eq!(list.len(), 3);
    }

    fn arb_expr() -> impl Strategy<Value = ExprNode> {
        let leaf = prop_oneof![
            (0i64..50, 1i64..9).prop_map(|(n, d)| ExprNode::Rational(rat(n, d))),
            (1usize..4).prop_map(ExprNode::Generator),
            "[a-f]{1,3}".prop_map(ExprNode::Var),
        ];
        leaf.prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| ExprNode::Sqrt(Box::new(e))),
                inner.clone().prop_map(|e| ExprNode::Neg(Box::new(e))),
                (inner.clone(), -64i64..=64).prop_map(|(e, n)| ExprNode::Pow(Box::new(e), n)),
                (
                    prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)],
                    inner.clone(),
                    inner
                )
                    .prop_map(|(op, l, r)| bin(op, l, r)),
            ]
        })
    }

    fn small_elem() -> impl Strategy<Value = TowerElement> {
        proptest::collection::vec((-9i64..9, 1i64..5), 2)
            .prop_map(|c| TowerElement::new(1, c.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn display_round_trip(e in arb_expr()) {
            prop_assert_eq!(parse_expr_str(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn eval_matches_tower_ops(a in small_elem(), b in small_elem()) {
            let t = q_sqrt2();
            let mut env = Bindings::new();
            env.insert("a".into(), a.clone());
            env.insert("b".into(), b.clone());
            let ev = |s: &str| eval_expr_with(&parse_expr_str(s).unwrap(), &t, &env);
            prop_assert_eq!(ev("a + b").unwrap(), t.add(&a, &b).unwrap());
            prop_assert_eq!(ev("a - b").unwrap(), t.sub(&a, &b).unwrap());
            prop_assert_eq!(ev("a * b").unwrap(), t.mul(&a, &b).unwrap());
            prop_assert_eq!(ev("-a").unwrap(), t.neg(&a));
            prop_assert_eq!(ev("a / b").ok(), t.div(&a, &b).ok());
        }
    }
}
