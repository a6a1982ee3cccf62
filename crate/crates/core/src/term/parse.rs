//! S-expression reader for objects and cells.

use super::{CellExpr, ObjExpr};
use crate::syntax::ParseError;

#[derive(Debug)]
enum Sexp {
    Atom { text: String, line: usize, column: usize },
    List { items: Vec<Sexp>, line: usize, column: usize },
}

impl Sexp {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sexp::Atom { line, column, .. } | Sexp::List { line, column, .. } => (*line, *column),
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.pos();
        ParseError::new(line, column, message)
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Reader<'_> {
    fn new(text: &str) -> Reader<'_> {
        Reader {
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

    fn skip_space(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn here(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    fn read(&mut self) -> Result<Sexp, ParseError> {
        self.skip_space();
        let (line, column) = (self.line, self.column);
        match self.chars.peek().copied() {
            None => Err(self.here("unexpected end of input")),
            Some(')') => Err(self.here("unexpected `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_space();
                    match self.chars.peek() {
                        None => return Err(ParseError::new(line, column, "unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sexp::List { items, line, column });
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(_) => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    if !(c.is_alphanumeric() || c == '_' || c == '*' || c == '\'') {
                        return Err(self.here(format!("unexpected character `{c}`")));
                    }
                    text.push(c);
                    self.bump();
                }
                Ok(Sexp::Atom { text, line, column })
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_space();
        if self.chars.peek().is_some() {
            Err(self.here("unexpected text after expression"))
        } else {
            Ok(())
        }
    }
}

fn read_one(text: &str) -> Result<Sexp, ParseError> {
    let mut r = Reader::new(text);
    let s = r.read()?;
    r.finish()?;
    Ok(s)
}

const OBJ_KEYWORDS: &[&str] = &["tensor"];
const CELL_KEYWORDS: &[&str] = &[
    "id", "assoc", "assoc*", "lunit", "lunit*", "runit", "runit*", "braid", "braid*", "comp", "ten",
];

fn obj(s: &Sexp) -> Result<ObjExpr, ParseError> {
    match s {
        Sexp::Atom { text, .. } if text == "I" => Ok(ObjExpr::Unit),
        Sexp::Atom { text, .. } => {
            if OBJ_KEYWORDS.contains(&text.as_str()) || CELL_KEYWORDS.contains(&text.as_str()) {
                return Err(s.err(format!("keyword `{text}` cannot be a label")));
            }
            if text.contains('*') || text.contains('\'') {
                return Err(s.err(format!("invalid label `{text}`")));
            }
            Ok(ObjExpr::Gen(text.clone()))
        }
        Sexp::List { items, .. } => {
            let (head, args) = head(s, items)?;
            match head {
                "tensor" => {
                    let [l, r] = arity(s, head, args)?;
                    Ok(ObjExpr::tensor(obj(l)?, obj(r)?))
                }
                other => Err(items[0].err(format!("expected `tensor`, found `{other}`"))),
            }
        }
    }
}

fn head<'a>(s: &Sexp, items: &'a [Sexp]) -> Result<(&'a str, &'a [Sexp]), ParseError> {
    match items.split_first() {
        Some((Sexp::Atom { text, .. }, rest)) => Ok((text.as_str(), rest)),
        Some((other, _)) => Err(other.err("expected a constructor name")),
        None => Err(s.err("empty list")),
    }
}

fn arity<'a, const N: usize>(s: &Sexp, name: &str, args: &'a [Sexp]) -> Result<&'a [Sexp; N], ParseError> {
    args.try_into().map_err(|_| {
        s.err(format!(
            "`{name}` takes {N} argument{}, found {}",
            if N == 1 { "" } else { "s" },
            args.len()
        ))
    })
}

fn cell(s: &Sexp) -> Result<CellExpr, ParseError> {
    let Sexp::List { items, .. } = s else {
        return Err(s.err("expected a cell `(...)`"));
    };
    let (name, args) = head(s, items)?;
    let o1 = |ctor: fn(ObjExpr) -> CellExpr| -> Result<CellExpr, ParseError> {
        let [x] = arity(s, name, args)?;
        Ok(ctor(obj(x)?))
    };
    let o2 = |ctor: fn(ObjExpr, ObjExpr) -> CellExpr| -> Result<CellExpr, ParseError> {
        let [x, y] = arity(s, name, args)?;
        Ok(ctor(obj(x)?, obj(y)?))
    };
    let o3 = |ctor: fn(ObjExpr, ObjExpr, ObjExpr) -> CellExpr| -> Result<CellExpr, ParseError> {
        let [x, y, z] = arity(s, name, args)?;
        Ok(ctor(obj(x)?, obj(y)?, obj(z)?))
    };
    match name {
        "id" => o1(CellExpr::Id),
        "assoc" => o3(CellExpr::Assoc),
        "assoc*" => o3(CellExpr::AssocInv),
        "lunit" => o1(CellExpr::LUnit),
        "lunit*" => o1(CellExpr::LUnitInv),
        "runit" => o1(CellExpr::RUnit),
        "runit*" => o1(CellExpr::RUnitInv),
        "braid" => o2(CellExpr::Braid),
        "braid*" => o2(CellExpr::BraidInv),
        "comp" | "ten" => {
            let [a, b] = arity(s, name, args)?;
            let (a, b) = (cell(a)?, cell(b)?);
            Ok(if name == "comp" {
                CellExpr::compose(a, b)
            } else {
                CellExpr::tensor(a, b)
            })
        }
        other => Err(items[0].err(format!("unknown cell constructor `{other}`"))),
    }
}

pub(super) fn parse_obj(text: &str) -> Result<ObjExpr, ParseError> {
    obj(&read_one(text)?)
}

pub(super) fn parse_cell(text: &str) -> Result<CellExpr, ParseError> {
    cell(&read_one(text)?)
}
