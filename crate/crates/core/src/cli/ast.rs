use num_bigint::BigInt;

/// A polynomial expression over the ring variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    /// Rows of the presentation matrix.
    Coker(Vec<Vec<Expr>>),
    ResidueField,
    Ring,
    Syz(usize, String),
    Dual(String),
    Sum(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExampleFlags {
    pub field: Option<FieldSpec>,
    pub alpha: Option<BigInt>,
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Resolve(String, usize),
    Betti(String),
    Ext(String, String, usize, usize),
    Gdim(String),
    Abdim(String),
    Arc(String),
    Period(String, usize),
    Socle,
    Gorenstein,
    ExampleJs(ExampleFlags),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: String,
        field: FieldSpec,
        vars: Vec<String>,
        ideal: Vec<Expr>,
    },
    Module {
        name: String,
        def: ModuleExpr,
    },
    Command(Command),
}

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

/// Parsed session. Equality ignores source positions.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub statements: Vec<Stmt>,
    pub positions: Vec<Pos>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Eq for Session {}

impl Command {
    pub fn keyword(&self) -> &'static str {
        match self {
            Command::Resolve(..) => "resolve",
            Command::Betti(_) => "betti",
            Command::Ext(..) => "ext",
            Command::Gdim(_) => "gdim",
            Command::Abdim(_) => "abdim",
            Command::Arc(_) => "arc",
            Command::Period(..) => "period",
            Command::Socle => "socle",
            Command::Gorenstein => "gorenstein",
            Command::ExampleJs(_) => "example",
        }
    }

    /// Module names the command refers to.
    pub fn operands(&self) -> Vec<&str> {
        match self {
            Command::Resolve(m, _)
            | Command::Betti(m)
            | Command::Gdim(m)
            | Command::Abdim(m)
            | Command::Arc(m)
            | Command::Period(m, _) => vec![m],
            Command::Ext(m, n, ..) => vec![m, n],
            Command::Socle | Command::Gorenstein | Command::ExampleJs(_) => vec![],
        }
    }
}
