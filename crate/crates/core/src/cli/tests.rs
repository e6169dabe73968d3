use super::ast::*;
use super::*;

const HEAD: &str = "ring R = QQ[x, y] / (x^2, y^2)\n";

fn ok(src: &str) -> Session {
    parse_session(src).unwrap_or_else(|d| panic!("{src:?}: {d}"))
}

fn syntax(src: &str) -> (usize, usize, Vec<String>, String) {
    match parse_session(src) {
        Err(Diagnostic::Syntax {
            line,
            col,
            expected,
            found,
        }) => (line, col, expected, found),
        other => panic!("{src:?}: expected a syntax error, got {other:?}"),
    }
}

fn semantic(src: &str) -> (usize, String) {
    match parse_session(src) {
        Err(Diagnostic::Semantic { statement, message }) => (statement, message),
        other => panic!("{src:?}: expected a semantic error, got {other:?}"),
    }
}

fn round_trip(src: &str) {
    let s = ok(src);
    let printed = s.to_string();
    assert_eq!(ok(&printed), s, "{printed}");
    assert_eq!(ok(&printed).to_string(), printed);
}

fn quiet() -> RunOptions {
    RunOptions {
        quiet: true,
        ..RunOptions::default()
    }
}

#[test]
fn ring_statement() {
    let s = ok("ring S = GF(7)[a, b] / (a^2, a*b, b^3)");
    match &s.statements[0] {
        Stmt::Ring {
            name,
            field,
            vars,
            ideal,
        } => {
            assert_eq!(name, "S");
            assert_eq!(*field, FieldSpec::Prime(7));
            assert_eq!(vars, &["a", "b"]);
            assert_eq!(ideal.len(), 3);
        }
        other => panic!("{other:?}"),
    }
    let (line, col, expected, found) = syntax("ring S = GF(7)[a, b] (a^2)");
    assert_eq!((line, col), (1, 22));
    assert_eq!(expected, ["'/'"]);
    assert_eq!(found, "'('");
    syntax("ring S = ZZ[a] / (a^2)");
    syntax("ring S = QQ[] / (a)");
    assert!(semantic("ring S = QQ[a, a] / (a^2)").1.contains("'a'"));
    assert!(semantic("ring S = QQ[a] / (b^2)")
        .1
        .contains("unknown variable 'b'"));
    assert_eq!(
        semantic("ring S = QQ[a] / (a^2)\nring T = QQ[a] / (a^2)").0,
        1
    );
}

#[test]
fn coker_statement() {
    let s = ok(&format!("{HEAD}module M = coker [[x, y], [0, -x]]"));
    match &s.statements[1] {
        Stmt::Module {
            def: ModuleExpr::Coker(rows),
            ..
        } => assert_eq!((rows.len(), rows[0].len()), (2, 2)),
        other => panic!("{other:?}"),
    }
    let (statement, message) = semantic(&format!("{HEAD}module M = coker [[x, y], [x]]"));
    assert_eq!(statement, 1);
    assert!(message.contains("row 2 has 1 entries, expected 2"));
    assert!(semantic(&format!("{HEAD}module M = coker [[z]]"))
        .1
        .contains("'z'"));
    assert!(semantic("module M = k").1.contains("ring"));
}

#[test]
fn unterminated_matrix() {
    let src = format!("{HEAD}module M = coker [[x, y], [x, y]\nbetti M");
    let (line, _, expected, found) = syntax(&src);
    assert_eq!(line, 3);
    assert!(expected.contains(&"']'".to_string()), "{expected:?}");
    assert_eq!(found, "'betti'");
    let msg = parse_session(&src).unwrap_err().to_string();
    assert!(
        msg.starts_with("syntax error at line 3, column 1: expected"),
        "{msg}"
    );
}

#[test]
fn matrices_span_lines() {
    let s = ok(&format!(
        "{HEAD}module M = coker [\n  [x, y],\n  [y, x]\n]\nbetti M"
    ));
    assert_eq!(s.statements.len(), 3);
}

#[test]
fn derived_modules() {
    let s = ok(&format!(
        "{HEAD}module K = k\nmodule A = R\nmodule O = syz 2 K\nmodule D = dual O\nmodule S = K ++ A"
    ));
    assert_eq!(
        s.statements[1..]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>(),
        [
            "module K = k",
            "module A = R",
            "module O = syz 2 K",
            "module D = dual O",
            "module S = K ++ A"
        ]
    );
    syntax(&format!("{HEAD}module k = k"));
    syntax(&format!("{HEAD}module R = k"));
    syntax(&format!("{HEAD}module K = k\nmodule S = K + K"));
    syntax(&format!("{HEAD}module K = k\nmodule O = syz K"));
    syntax(&format!("{HEAD}module K = k\nmodule O = syz -1 K"));
    assert!(semantic(&format!("{HEAD}module D = dual X"))
        .1
        .contains("'X' is not defined"));
    assert!(semantic(&format!("{HEAD}module K = k\nmodule S = K ++ Y"))
        .1
        .contains("'Y'"));
}

#[test]
fn commands() {
    let src = format!(
        "{HEAD}module K = k\nresolve K 4; betti K; ext K K 0 3; gdim K; abdim K; arc K; period K 3; socle; gorenstein"
    );
    let s = ok(&src);
    let kws: Vec<&str> = s
        .statements
        .iter()
        .filter_map(|s| match s {
            Stmt::Command(c) => Some(c.keyword()),
            _ => None,
        })
        .collect();
    assert_eq!(
        kws,
        [
            "resolve",
            "betti",
            "ext",
            "gdim",
            "abdim",
            "arc",
            "period",
            "socle",
            "gorenstein"
        ]
    );
    for bad in [
        "resolve K",
        "betti",
        "ext K K 0",
        "gdim 3",
        "abdim",
        "arc",
        "period K",
        "socle K",
        "frobnicate K",
    ] {
        syntax(&format!("{HEAD}module K = k\n{bad}"));
    }
    assert!(semantic(&format!("{HEAD}module K = k\next K K 3 1"))
        .1
        .contains("empty Ext range"));
    assert!(semantic(&format!("{HEAD}module K = k\nperiod K 0")).0 == 2);
    assert!(semantic("socle").1.contains("'socle' needs a ring"));
    assert!(semantic(&format!("{HEAD}betti M"))
        .1
        .contains("'M' is not defined"));
}

#[test]
fn example_command() {
    let s = ok("example js --field gf13 --alpha 4 --bound 9");
    assert_eq!(
        s.statements[0],
        Stmt::Command(Command::ExampleJs(ExampleFlags {
            field: Some(FieldSpec::Prime(13)),
            alpha: Some(4.into()),
            bound: Some(9),
        }))
    );
    ok("example js");
    ok("example js --field QQ --alpha -2");
    ok("example js --field GF(5)");
    syntax("example js --field gf7 --field gf7");
    syntax("example js --colour red");
    syntax("example js --field reals");
    syntax("example xy");
}

#[test]
fn separators_and_comments() {
    let s = ok("# header\n\nring R = QQ[x] / (x^2) # trailing\n;;\nsocle ; gorenstein\n");
    assert_eq!(s.statements.len(), 3);
    assert_eq!(s.positions[1], Pos { line: 5, col: 1 });
    assert_eq!(s.positions[2], Pos { line: 5, col: 9 });
    syntax("socle gorenstein");
}

#[test]
fn expressions() {
    let s =
        ok("ring R = QQ[x, y] / (-x^2 + 2*x*y - (y - x)*y, -(x*y)^2, x - -y - x - y + x^2 - x^2)");
    let Stmt::Ring { ideal, .. } = &s.statements[0] else {
        panic!()
    };
    assert!(matches!(ideal[0], Expr::Sub(..)));
    assert!(matches!(ideal[1], Expr::Neg(_)));
    syntax("ring R = QQ[x] / (x^)");
    syntax("ring R = QQ[x] / (x^99999999999)");
    syntax("ring R = QQ[x] / (x**2)");
    syntax("ring R = QQ[x] / ((x)");
    syntax("ring R = QQ[x] / (x $ 2)");
}

#[test]
fn printing_round_trips() {
    round_trip("ring R = GF(7)[x1, x2, x3, x4] / (3*x1*x3 + x2*x3, x1*x4 + x2*x4, x3*x4, x1^2, x2^2, x3^2, x4^2)");
    round_trip("ring R = QQ[x, y] / (-x^2, -(x + y)^2, x - (y - x), -(-x), (-x)^2, 2*(x*y), (x*y)*x, x*(y*x), x - -y)");
    round_trip(&format!("{HEAD}module M = coker [[x, -y], [0, x + y]]\nmodule O = syz 3 M\nmodule S = M ++ O\next S M 0 4"));
    round_trip("example js --field qq --alpha -5 --bound 3\nexample js");
    let src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sessions/js_example.abd"
    ))
    .unwrap();
    round_trip(&src);
}

#[test]
fn diagnostics_display() {
    let d = Diagnostic::Semantic {
        statement: 0,
        message: "boom".into(),
    };
    assert_eq!(d.to_string(), "error in statement 1: boom");
    let d = Diagnostic::Syntax {
        line: 2,
        col: 3,
        expected: vec!["']'".into(), "','".into()],
        found: "'x'".into(),
    };
    assert_eq!(
        d.to_string(),
        "syntax error at line 2, column 3: expected one of ']', ',', found 'x'"
    );
}

#[test]
fn executing_sessions() {
    let src = format!("{HEAD}module K = k\nresolve K 3\next K K 0 3\nsocle; gorenstein\ngdim K");
    let out = run_session(&src, &quiet());
    assert_eq!(out.exit_code, EXIT_OK, "{:?}", out.diagnostics);
    assert!(out.diagnostics.is_empty());
    let j = &out.json;
    assert_eq!(j["schema_version"], SCHEMA_VERSION);
    assert_eq!(j["status"], "ok");
    let results = j["results"].as_array().unwrap();
    assert_eq!(results.len(), 7);
    assert_eq!(results[3]["input"], "ext K K 0 3");
    assert_eq!(
        results[3]["result"]["table"]["dims"],
        serde_json::json!([1, 2, 3, 4])
    );
    assert_eq!(results[4]["result"]["dim"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run_session("socle socle", &quiet()).exit_code, EXIT_PARSE);
    let parse = run_session("betti M", &quiet());
    assert_eq!(parse.exit_code, EXIT_PARSE);
    assert_eq!(parse.json["status"], "parse_error");
    // x - 1 is a unit, so the quotient is not a local algebra
    let comp = run_session("ring R = QQ[x] / (x^2 - 1)\nsocle", &quiet());
    assert_eq!(comp.exit_code, EXIT_COMPUTATION);
    assert_eq!(comp.json["status"], "computation_error");
    assert_eq!(comp.diagnostics.len(), 1);
    let comp = run_session("ring R = GF(4)[x] / (x^2)", &quiet());
    assert_eq!(comp.exit_code, EXIT_COMPUTATION);
    let comp = run_session("example js --alpha 7 --field gf7", &quiet());
    assert_eq!(comp.exit_code, EXIT_COMPUTATION);
}

#[test]
fn output_is_deterministic() {
    let src = format!("{HEAD}module M = coker [[x, y]]\nabdim M\nperiod M 3");
    let opts = RunOptions {
        seed: 9,
        ..RunOptions::default()
    };
    let a = run_session(&src, &opts);
    let b = run_session(&src, &opts);
    assert_eq!(a.text, b.text);
    assert_eq!(a.json_string(), b.json_string());
    assert_eq!(a.json["seed"], 9);
}
