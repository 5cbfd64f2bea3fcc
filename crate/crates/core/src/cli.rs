//! The `invsyn` command line.
//!
//! Exit codes: 0 on success, 1 when the input has no parse or the value has
//! no printed form, 2 for I/O errors, bad arguments and contract
//! violations.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cassette1::{ordinal_spec1, sprintf1, sscanf1};
use crate::cassette2::{parse2, pretty2, Descriptor2};
use crate::error::Violation;
use crate::lambda::{term_from_json, term_grammar_cassette, term_grammar_stacked, term_to_json};
use crate::stacked::{ordinal_spec3, parse3, pretty3, sprintf3, Choice, Linear};
use crate::values::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Cassette,
    Stacked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GrammarKind {
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FmtMode {
    Print,
    Scan,
}

#[derive(Debug, Parser)]
#[command(
    name = "invsyn",
    about = "Parse and print with invertible syntax descriptors"
)]
pub struct Cli {
    /// Which engine runs the grammar.
    #[arg(long, global = true, value_enum, default_value = "cassette")]
    pub engine: Engine,
    #[arg(long, global = true, value_enum, default_value = "lambda")]
    pub grammar: GrammarKind,
    /// Read from this file instead of standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse surface text and print the JSON syntax tree.
    Parse,
    /// Print a JSON syntax tree as surface text.
    Pretty,
    /// Parse, then print in canonical form.
    Roundtrip,
    /// Run the ordinal format descriptor.
    Fmt {
        #[arg(value_enum)]
        mode: FmtMode,
        /// `print`: an int and two chars. `scan`: the text to scan.
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(long, default_value = "1", value_parser = ["1", "3"])]
        tier: String,
    },
    /// Check every `*.lam` file in a directory against its sibling
    /// `*.json` and `*.canon.lam` files.
    TestCorpus { dir: PathBuf },
}

/// A command's outcome: exit code plus what to write to each stream.
struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Out {
    fn ok(stdout: impl Into<String>) -> Out {
        Out {
            code: 0,
            stdout: stdout.into(),
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Out {
        Out {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }

    fn violation(v: &Violation) -> Out {
        Out::fail(2, format!("invsyn: {v}\n"))
    }
}

/// A grammar ready to run on one engine.
enum Grammar {
    Cassette(Descriptor2),
    Stacked(Choice),
}

impl Grammar {
    fn new(engine: Engine, _kind: GrammarKind) -> Grammar {
        match engine {
            Engine::Cassette => Grammar::Cassette(term_grammar_cassette()),
            Engine::Stacked => Grammar::Stacked(term_grammar_stacked()),
        }
    }

    fn parse(&self, text: &str) -> Result<Option<Value>, Violation> {
        match self {
            Grammar::Cassette(d) => parse2(d, text),
            Grammar::Stacked(d) => parse3(d, text),
        }
    }

    fn pretty(&self, v: Value) -> Result<Option<String>, Violation> {
        match self {
            Grammar::Cassette(d) => pretty2(d, v),
            Grammar::Stacked(d) => pretty3(d, v),
        }
    }
}

fn strip_newline(s: &str) -> &str {
    match s.strip_suffix('\n') {
        Some(s) => s.strip_suffix('\r').unwrap_or(s),
        None => s,
    }
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, Out> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = fs::read_to_string(p)
                .map_err(|e| Out::fail(2, format!("invsyn: cannot read {}: {e}\n", p.display())))?
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Out::fail(2, format!("invsyn: cannot read standard input: {e}\n")))?;
        }
    }
    Ok(strip_newline(&text).to_owned())
}

fn cmd_parse(g: &Grammar, text: &str) -> Out {
    match g.parse(text) {
        Ok(Some(t)) => Out::ok(format!("{}\n", term_to_json(&t))),
        Ok(None) => Out::fail(1, "parse: input is not a term\n"),
        Err(v) => Out::violation(&v),
    }
}

fn cmd_pretty(g: &Grammar, json: &str) -> Out {
    let Some(t) = term_from_json(json) else {
        return Out::fail(1, "pretty: input is not a JSON term\n");
    };
    match g.pretty(t) {
        Ok(Some(s)) => Out::ok(format!("{s}\n")),
        Ok(None) => Out::fail(1, "pretty: term has no printed form\n"),
        Err(v) => Out::violation(&v),
    }
}

fn cmd_roundtrip(g: &Grammar, text: &str) -> Out {
    let t = match g.parse(text) {
        Ok(Some(t)) => t,
        Ok(None) => return Out::fail(1, "roundtrip: input is not a term\n"),
        Err(v) => return Out::violation(&v),
    };
    match g.pretty(t) {
        Ok(Some(s)) => Out::ok(format!("{s}\n")),
        Ok(None) => Out::fail(1, "roundtrip: term has no printed form\n"),
        Err(v) => Out::violation(&v),
    }
}

fn one_char(s: &str) -> Option<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn scanned_lines(v: &Value) -> String {
    let parts: Vec<Value> = match v {
        Value::Adt(_, parts) => parts.clone(),
        Value::List(items) => items.iter().cloned().collect(),
        other => vec![other.clone()],
    };
    parts
        .iter()
        .map(|p| match p {
            Value::Int(n) => format!("{n}\n"),
            Value::Char(c) => format!("{c}\n"),
            other => format!("{other}\n"),
        })
        .collect()
}

fn cmd_fmt(mode: FmtMode, args: &[String], tier: &str) -> Out {
    match mode {
        FmtMode::Print => {
            let [n, a, b] = args else {
                return Out::fail(2, "fmt print: expected an int and two chars\n");
            };
            let (Ok(n), Some(a), Some(b)) = (n.parse::<i64>(), one_char(a), one_char(b)) else {
                return Out::fail(2, "fmt print: expected an int and two chars\n");
            };
            let args = [Value::Int(n), Value::Char(a), Value::Char(b)];
            let printed = if tier == "1" {
                sprintf1(&ordinal_spec1(), args.to_vec())
            } else {
                sprintf3(&ordinal_spec3::<Linear>(), args)
            };
            match printed {
                Ok(s) => Out::ok(format!("{s}\n")),
                Err(v) => Out::violation(&v),
            }
        }
        FmtMode::Scan => {
            let [text] = args else {
                return Out::fail(2, "fmt scan: expected one text argument\n");
            };
            if tier == "1" {
                match sscanf1(&ordinal_spec1(), text) {
                    Ok(values) => Out::ok(scanned_lines(&Value::list(values))),
                    Err(v) => Out::violation(&v),
                }
            } else {
                match parse3(&ordinal_spec3::<Choice>(), text) {
                    Ok(Some(v)) => Out::ok(scanned_lines(&v)),
                    Ok(None) => Out::fail(1, "fmt scan: text does not match the format\n"),
                    Err(v) => Out::violation(&v),
                }
            }
        }
    }
}

/// One corpus entry's verdict; `None` means it passed.
fn check_entry(g: &Grammar, lam: &Path) -> Result<Option<String>, String> {
    let read =
        |p: &Path| fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()));
    let text = read(lam)?;
    let text = strip_newline(&text);
    let base = lam.with_extension("");
    let expected_json = read(&base.with_extension("json"))?;
    let expected_json = strip_newline(&expected_json);
    let got = g.parse(text).map_err(|v| v.to_string())?;
    let got_json = got.as_ref().map_or_else(|| "null".to_owned(), term_to_json);
    if got_json != expected_json {
        return Ok(Some(format!(
            "parse gave {got_json}, expected {expected_json}"
        )));
    }
    let Some(t) = got else {
        return Ok(None);
    };
    let canon = read(&base.with_extension("canon.lam"))?;
    let canon = strip_newline(&canon);
    match g.pretty(t).map_err(|v| v.to_string())? {
        Some(s) if s == canon => Ok(None),
        Some(s) => Ok(Some(format!("pretty gave {s:?}, expected {canon:?}"))),
        None => Ok(Some("pretty failed".to_owned())),
    }
}

/// The `*.lam` inputs of a corpus directory, sorted, without the
/// `*.canon.lam` expectations.
pub fn corpus_inputs(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        if name.ends_with(".lam") && !name.ends_with(".canon.lam") {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

fn cmd_test_corpus(g: &Grammar, dir: &Path) -> Out {
    let inputs = match corpus_inputs(dir) {
        Ok(inputs) => inputs,
        Err(e) => return Out::fail(2, format!("invsyn: cannot read {}: {e}\n", dir.display())),
    };
    let mut table = String::new();
    let (mut passed, mut failed) = (0, 0);
    for lam in &inputs {
        let name = lam.file_name().and_then(|n| n.to_str()).unwrap_or("?");
        match check_entry(g, lam) {
            Ok(None) => {
                passed += 1;
                let _ = writeln!(table, "PASS {name}");
            }
            Ok(Some(why)) => {
                failed += 1;
                let _ = writeln!(table, "FAIL {name}: {why}");
            }
            Err(e) => return Out::fail(2, format!("invsyn: {e}\n")),
        }
    }
    let _ = writeln!(table, "{passed} passed, {failed} failed");
    Out {
        code: if failed == 0 { 0 } else { 1 },
        stdout: table,
        stderr: String::new(),
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Out {
    let grammar = || Grammar::new(cli.engine, cli.grammar);
    match &cli.command {
        Command::Parse => match read_input(cli.input.as_deref(), stdin) {
            Ok(text) => cmd_parse(&grammar(), &text),
            Err(out) => out,
        },
        Command::Pretty => match read_input(cli.input.as_deref(), stdin) {
            Ok(text) => cmd_pretty(&grammar(), &text),
            Err(out) => out,
        },
        Command::Roundtrip => match read_input(cli.input.as_deref(), stdin) {
            Ok(text) => cmd_roundtrip(&grammar(), &text),
            Err(out) => out,
        },
        Command::Fmt { mode, args, tier } => cmd_fmt(*mode, args, tier),
        Command::TestCorpus { dir } => cmd_test_corpus(&grammar(), dir),
    }
}

/// Run the command line with explicit streams; returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli, stdin),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Out::fail(e.exit_code(), text)
            } else {
                Out::ok(text)
            }
        }
    };
    // a closed pipe is not worth a second error
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stderr.write_all(out.stderr.as_bytes());
    let _ = stdout.flush();
    out.code
}

/// Run against the process's standard streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run(
        args,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}
