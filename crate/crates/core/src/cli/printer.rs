use std::fmt;

use super::ast::*;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Var(_) => 5,
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                // `--` would lex as a flag
                wrap(f, a, 4)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "*")?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Coker(rows) => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "coker [{}]", rows.join(", "))
            }
            ModuleExpr::ResidueField => write!(f, "k"),
            ModuleExpr::Ring => write!(f, "R"),
            ModuleExpr::Syz(n, m) => write!(f, "syz {n} {m}"),
            ModuleExpr::Dual(m) => write!(f, "dual {m}"),
            ModuleExpr::Sum(a, b) => write!(f, "{a} ++ {b}"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Resolve(m, n) => write!(f, "resolve {m} {n}"),
            Command::Betti(m) => write!(f, "betti {m}"),
            Command::Ext(m, n, lo, hi) => write!(f, "ext {m} {n} {lo} {hi}"),
            Command::Gdim(m) => write!(f, "gdim {m}"),
            Command::Abdim(m) => write!(f, "abdim {m}"),
            Command::Arc(m) => write!(f, "arc {m}"),
            Command::Period(m, n) => write!(f, "period {m} {n}"),
            Command::Socle => write!(f, "socle"),
            Command::Gorenstein => write!(f, "gorenstein"),
            Command::ExampleJs(flags) => {
                write!(f, "example js")?;
                match flags.field {
                    Some(FieldSpec::Rationals) => write!(f, " --field qq")?,
                    Some(FieldSpec::Prime(p)) => write!(f, " --field gf{p}")?,
                    None => {}
                }
                if let Some(a) = &flags.alpha {
                    write!(f, " --alpha {a}")?;
                }
                if let Some(b) = flags.bound {
                    write!(f, " --bound {b}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring {
                name,
                field,
                vars,
                ideal,
            } => write!(
                f,
                "ring {name} = {field}[{}] / ({})",
                vars.join(", "),
                join(ideal)
            ),
            Stmt::Module { name, def } => write!(f, "module {name} = {def}"),
            Stmt::Command(c) => write!(f, "{c}"),
        }
    }
}

/// Canonical text of a session, one statement per line.
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
