use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::Diagnostic;

const COMMANDS: [&str; 10] = [
    "resolve",
    "betti",
    "ext",
    "gdim",
    "abdim",
    "arc",
    "period",
    "socle",
    "gorenstein",
    "example",
];

/// Keywords that cannot name a ring or module.
pub fn is_reserved(name: &str) -> bool {
    COMMANDS.contains(&name)
        || ["ring", "module", "coker", "syz", "dual", "QQ", "GF"].contains(&name)
}

/// Parses and checks a session. Never panics on malformed input.
pub fn parse_session(src: &str) -> Result<Session, Diagnostic> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, at: 0 };
    let session = p.session()?;
    check(&session)?;
    Ok(session)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.at].tok.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        let pos = self.pos();
        Err(Diagnostic::Syntax {
            line: pos.line,
            col: pos.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&[&tok.describe()])
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.error(&[&format!("'{kw}'")]),
        }
    }

    fn name(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !is_reserved(&s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error(&["a name"]),
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.error(&["an integer"]),
        }
    }

    fn count(&mut self) -> PResult<usize> {
        let pos = self.pos();
        let n = self.int()?;
        n.to_usize().ok_or(Diagnostic::Syntax {
            line: pos.line,
            col: pos.col,
            expected: vec!["an integer below 2^64".into()],
            found: format!("'{n}'"),
        })
    }

    fn session(&mut self) -> PResult<Session> {
        let mut s = Session::default();
        loop {
            while *self.peek() == Tok::Sep {
                self.bump();
            }
            if *self.peek() == Tok::Eof {
                return Ok(s);
            }
            let pos = self.pos();
            let stmt = self.stmt()?;
            s.statements.push(stmt);
            s.positions.push(pos);
            match self.peek() {
                Tok::Sep | Tok::Eof => {}
                _ => return self.error(&["';'", "newline"]),
            }
        }
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let Tok::Ident(word) = self.peek().clone() else {
            return self.error(&["'ring'", "'module'", "a command"]);
        };
        match word.as_str() {
            "ring" => self.ring(),
            "module" => self.module(),
            w if COMMANDS.contains(&w) => Ok(Stmt::Command(self.command()?)),
            _ => self.error(&["'ring'", "'module'", "a command"]),
        }
    }

    fn ring(&mut self) -> PResult<Stmt> {
        self.keyword("ring")?;
        let name = self.name()?;
        self.expect(Tok::Eq)?;
        let field = self.field()?;
        self.expect(Tok::LBracket)?;
        let mut vars = vec![self.name()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            vars.push(self.name()?);
        }
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Slash)?;
        self.expect(Tok::LParen)?;
        let mut ideal = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            ideal.push(self.expr()?);
        }
        self.expect(Tok::RParen)?;
        Ok(Stmt::Ring {
            name,
            field,
            vars,
            ideal,
        })
    }

    fn field(&mut self) -> PResult<FieldSpec> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "QQ" => {
                self.bump();
                Ok(FieldSpec::Rationals)
            }
            Tok::Ident(s) if s == "GF" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let pos = self.pos();
                let p = self.int()?;
                self.expect(Tok::RParen)?;
                p.to_u64().map(FieldSpec::Prime).ok_or(Diagnostic::Syntax {
                    line: pos.line,
                    col: pos.col,
                    expected: vec!["a prime below 2^31".into()],
                    found: format!("'{p}'"),
                })
            }
            _ => self.error(&["'QQ'", "'GF'"]),
        }
    }

    fn module(&mut self) -> PResult<Stmt> {
        self.keyword("module")?;
        if matches!(self.peek(), Tok::Ident(s) if s == "k" || s == "R") {
            return self.error(&["a module name other than 'k' and 'R'"]);
        }
        let name = self.name()?;
        self.expect(Tok::Eq)?;
        let def = match self.peek().clone() {
            Tok::Ident(s) if s == "coker" => {
                self.bump();
                ModuleExpr::Coker(self.matrix()?)
            }
            Tok::Ident(s) if s == "k" => {
                self.bump();
                ModuleExpr::ResidueField
            }
            Tok::Ident(s) if s == "R" => {
                self.bump();
                ModuleExpr::Ring
            }
            Tok::Ident(s) if s == "syz" => {
                self.bump();
                let n = self.count()?;
                ModuleExpr::Syz(n, self.name()?)
            }
            Tok::Ident(s) if s == "dual" => {
                self.bump();
                ModuleExpr::Dual(self.name()?)
            }
            Tok::Ident(_) => {
                let a = self.name()?;
                self.expect(Tok::PlusPlus)?;
                ModuleExpr::Sum(a, self.name()?)
            }
            _ => return self.error(&["'coker'", "'k'", "'R'", "'syz'", "'dual'", "a name"]),
        };
        Ok(Stmt::Module { name, def })
    }

    fn matrix(&mut self) -> PResult<Vec<Vec<Expr>>> {
        self.expect(Tok::LBracket)?;
        let mut rows = vec![self.row()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            rows.push(self.row()?);
        }
        self.expect(Tok::RBracket)?;
        Ok(rows)
    }

    fn row(&mut self) -> PResult<Vec<Expr>> {
        self.expect(Tok::LBracket)?;
        let mut row = Vec::new();
        if *self.peek() != Tok::RBracket {
            row.push(self.expr()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                row.push(self.expr()?);
            }
        }
        self.expect(Tok::RBracket)?;
        Ok(row)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            let e = self.int()?;
            let e = e.to_u32().ok_or(Diagnostic::Syntax {
                line: pos.line,
                col: pos.col,
                expected: vec!["an exponent below 2^32".into()],
                found: format!("'{e}'"),
            })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.error(&["an integer", "a variable", "'('", "'-'"]),
        }
    }

    fn command(&mut self) -> PResult<Command> {
        let Tok::Ident(word) = self.bump() else {
            unreachable!("caller checked for a command keyword")
        };
        Ok(match word.as_str() {
            "resolve" => {
                let m = self.name()?;
                Command::Resolve(m, self.count()?)
            }
            "betti" => Command::Betti(self.name()?),
            "ext" => {
                let m = self.name()?;
                let n = self.name()?;
                let lo = self.count()?;
                Command::Ext(m, n, lo, self.count()?)
            }
            "gdim" => Command::Gdim(self.name()?),
            "abdim" => Command::Abdim(self.name()?),
            "arc" => Command::Arc(self.name()?),
            "period" => {
                let m = self.name()?;
                Command::Period(m, self.count()?)
            }
            "socle" => Command::Socle,
            "gorenstein" => Command::Gorenstein,
            "example" => {
                self.keyword("js")?;
                Command::ExampleJs(self.example_flags()?)
            }
            _ => unreachable!("COMMANDS is exhaustive"),
        })
    }

    fn example_flags(&mut self) -> PResult<ExampleFlags> {
        let mut flags = ExampleFlags::default();
        while let Tok::Flag(f) = self.peek().clone() {
            let at = self.pos();
            let duplicate = |set: bool| -> PResult<()> {
                if set {
                    Err(Diagnostic::Syntax {
                        line: at.line,
                        col: at.col,
                        expected: vec!["a flag not given before".into()],
                        found: format!("'--{f}'"),
                    })
                } else {
                    Ok(())
                }
            };
            match f.as_str() {
                "field" => {
                    duplicate(flags.field.is_some())?;
                    self.bump();
                    flags.field = Some(self.flag_field()?);
                }
                "alpha" => {
                    duplicate(flags.alpha.is_some())?;
                    self.bump();
                    let neg = *self.peek() == Tok::Minus;
                    if neg {
                        self.bump();
                    }
                    let a = self.int()?;
                    flags.alpha = Some(if neg { -a } else { a });
                }
                "bound" => {
                    duplicate(flags.bound.is_some())?;
                    self.bump();
                    flags.bound = Some(self.count()?);
                }
                _ => return self.error(&["'--field'", "'--alpha'", "'--bound'"]),
            }
        }
        Ok(flags)
    }

    /// `gf7`, `qq`, `GF(7)` or `QQ`.
    fn flag_field(&mut self) -> PResult<FieldSpec> {
        if let Tok::Ident(s) = self.peek().clone() {
            let lower = s.to_ascii_lowercase();
            if lower == "qq" {
                self.bump();
                return Ok(FieldSpec::Rationals);
            }
            if let Some(p) = lower.strip_prefix("gf").and_then(|d| d.parse::<u64>().ok()) {
                self.bump();
                return Ok(FieldSpec::Prime(p));
            }
            if s == "GF" {
                return self.field();
            }
        }
        self.error(&["'qq'", "'gf<p>'"])
    }
}

fn semantic(statement: usize, message: String) -> Diagnostic {
    Diagnostic::Semantic { statement, message }
}

fn vars_of(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Int(_) => {}
        Expr::Var(v) => out.push(v.clone()),
        Expr::Neg(a) | Expr::Pow(a, _) => vars_of(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            vars_of(a, out);
            vars_of(b, out);
        }
    }
}

/// Names defined before use, a single ring defined before any module,
/// known variables, rectangular matrices and well-formed ranges.
fn check(s: &Session) -> Result<(), Diagnostic> {
    let mut ring: Option<Vec<String>> = None;
    let mut modules = BTreeSet::new();
    for (idx, stmt) in s.statements.iter().enumerate() {
        let need = |name: &str, modules: &BTreeSet<String>| {
            if modules.contains(name) {
                Ok(())
            } else {
                Err(semantic(idx, format!("module '{name}' is not defined")))
            }
        };
        let check_vars = |e: &Expr, vars: &[String]| {
            let mut used = Vec::new();
            vars_of(e, &mut used);
            match used.into_iter().find(|v| !vars.contains(v)) {
                Some(v) => Err(semantic(idx, format!("unknown variable '{v}'"))),
                None => Ok(()),
            }
        };
        match stmt {
            Stmt::Ring { vars, ideal, .. } => {
                if ring.is_some() {
                    return Err(semantic(idx, "only one ring per session".into()));
                }
                let mut seen = BTreeSet::new();
                if let Some(v) = vars.iter().find(|v| !seen.insert(*v)) {
                    return Err(semantic(idx, format!("repeated variable '{v}'")));
                }
                for e in ideal {
                    check_vars(e, vars)?;
                }
                ring = Some(vars.clone());
            }
            Stmt::Module { name, def } => {
                let Some(vars) = &ring else {
                    return Err(semantic(idx, "module defined before the ring".into()));
                };
                match def {
                    ModuleExpr::Coker(rows) => {
                        let width = rows[0].len();
                        if let Some(r) = rows.iter().position(|r| r.len() != width) {
                            return Err(semantic(
                                idx,
                                format!(
                                    "row {} has {} entries, expected {width}",
                                    r + 1,
                                    rows[r].len()
                                ),
                            ));
                        }
                        for e in rows.iter().flatten() {
                            check_vars(e, vars)?;
                        }
                    }
                    ModuleExpr::ResidueField | ModuleExpr::Ring => {}
                    ModuleExpr::Syz(_, m) | ModuleExpr::Dual(m) => need(m, &modules)?,
                    ModuleExpr::Sum(a, b) => {
                        need(a, &modules)?;
                        need(b, &modules)?;
                    }
                }
                modules.insert(name.clone());
            }
            Stmt::Command(c) => {
                if ring.is_none() && !matches!(c, Command::ExampleJs(_)) {
                    return Err(semantic(idx, format!("'{}' needs a ring", c.keyword())));
                }
                for m in c.operands() {
                    need(m, &modules)?;
                }
                if let Command::Ext(_, _, lo, hi) = c {
                    if lo > hi {
                        return Err(semantic(idx, format!("empty Ext range {lo}..{hi}")));
                    }
                }
                if let Command::Period(_, 0) = c {
                    return Err(semantic(idx, "maximal period must be positive".into()));
                }
            }
        }
    }
    Ok(())
}
