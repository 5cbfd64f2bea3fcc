#![allow(dead_code)]

pub mod grammars;

use std::path::PathBuf;

use invsyn::lambda::{abs, app, var};
use invsyn::Value;
use rand::Rng;

/// An identifier from `{a..z}{a..z,0..9}*`, at most four chars long.
pub fn random_ident(rng: &mut impl Rng) -> String {
    const FIRST: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    const REST: &[u8] = b"abcdefghijklmnopqrstuvwxyz0123456789";
    let len = rng.gen_range(1..=4);
    let mut s = String::new();
    s.push(FIRST[rng.gen_range(0..FIRST.len())] as char);
    for _ in 1..len {
        s.push(REST[rng.gen_range(0..REST.len())] as char);
    }
    s
}

/// A term of depth at most `depth`, constructors drawn uniformly while
/// depth remains.
pub fn random_term(rng: &mut impl Rng, depth: u32) -> Value {
    let pick = if depth == 0 { 0 } else { rng.gen_range(0..3) };
    match pick {
        0 => var(&random_ident(rng)),
        1 => abs(&random_ident(rng), random_term(rng, depth - 1)),
        _ => app(random_term(rng, depth - 1), random_term(rng, depth - 1)),
    }
}

/// Surface syntax written independently of either grammar.
pub fn show_term(t: &Value) -> String {
    match t {
        Value::Adt(tag, args) => match (tag.as_str(), args.as_slice()) {
            ("Var", [Value::Text(x)]) => x.clone(),
            ("Abs", [Value::Text(x), b]) => format!("λ{x}.{}", show_term(b)),
            ("App", [f, a]) => format!("({} {})", show_term(f), show_term(a)),
            _ => panic!("not a term: {t}"),
        },
        _ => panic!("not a term: {t}"),
    }
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus/lambda")
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/cli")
}

pub struct CorpusCase {
    pub name: String,
    pub text: String,
    /// Expected JSON, or `"null"` when the input has no parse.
    pub json: String,
    pub canon: Option<String>,
}

fn read_trimmed(p: &std::path::Path) -> String {
    let s = std::fs::read_to_string(p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    s.strip_suffix('\n').map(str::to_owned).unwrap_or(s)
}

pub fn corpus() -> Vec<CorpusCase> {
    let dir = corpus_dir();
    invsyn::cli::corpus_inputs(&dir)
        .expect("corpus directory")
        .into_iter()
        .map(|lam| {
            let base = lam.with_extension("");
            let canon = base.with_extension("canon.lam");
            CorpusCase {
                name: lam.file_name().unwrap().to_string_lossy().into_owned(),
                text: read_trimmed(&lam),
                json: read_trimmed(&base.with_extension("json")),
                canon: canon.exists().then(|| read_trimmed(&canon)),
            }
        })
        .collect()
}

/// One CLI fixture compared against the binary; `Err` describes the
/// first difference.
pub fn check_cli_fixture(dir: &std::path::Path) -> Result<(), String> {
    use std::io::Write;
    use std::process::{Command, Stdio};

    let read = |name: &str| std::fs::read(dir.join(name)).ok();
    let args_text =
        String::from_utf8(read("args").ok_or("missing args")?).map_err(|e| e.to_string())?;
    let args: Vec<&str> = args_text.lines().collect();
    let mut child = Command::new(env!("CARGO_BIN_EXE_invsyn"))
        .args(&args)
        .current_dir(dir)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    let stdin = read("stdin").unwrap_or_default();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&stdin)
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by a signal")?;
    let expected_code: i32 = String::from_utf8_lossy(&read("code").ok_or("missing code")?)
        .trim()
        .parse()
        .map_err(|_| "bad code file")?;
    if code != expected_code {
        return Err(format!("exit code {code}, expected {expected_code}"));
    }
    for (name, got) in [("stdout", &out.stdout), ("stderr", &out.stderr)] {
        let want = read(name).unwrap_or_default();
        if got != &want {
            return Err(format!(
                "{name} differs:\n got: {:?}\nwant: {:?}",
                String::from_utf8_lossy(got),
                String::from_utf8_lossy(&want)
            ));
        }
    }
    Ok(())
}

pub fn cli_fixtures() -> Vec<PathBuf> {
    let mut dirs: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_dir())
        .collect();
    dirs.sort();
    dirs
}
