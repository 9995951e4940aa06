use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use boolrsk::notation::{compact, parse_sequence};
use boolrsk::uncrowded::crowding;
use boolrsk::words::{display_runs, run_decomposition};
use boolrsk::{
    all_reduced_words, count_uncrowded, f_map, g_map, heap_of, is_uncrowded_tableau, optimal_run_word,
    realize_boolean, rho_orbit, row2_from_canonical, rsk, run_statistic, ulam_sort, BinaryWord, CanonicalWord, Error,
    Permutation, RunWord, Tableau, Word,
};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::args::{BijCommand, Cli, Command, UncrowdedCommand};
use crate::envelope::Report;
use crate::selftest;

/// Largest `n` accepted by `count`.
pub const COUNT_MAX: usize = 25;

#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Library(Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) | CommandError::Library(Error::Parse { .. }) => 2,
            CommandError::Library(_) => 1,
        }
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Usage(message) => f.write_str(message),
            CommandError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Library(e)
    }
}

type Outcome = Result<Report, CommandError>;

pub fn execute(cli: &Cli) -> Outcome {
    let degree = cli.degree;
    match &cli.command {
        Command::Rsk { perm } => cmd_rsk(&permutation(perm, degree)?),
        Command::Canonical { input, from_word } => {
            if *from_word {
                cmd_canonical_word(input, degree)
            } else {
                cmd_canonical(&permutation(input, degree)?)
            }
        }
        Command::Run { perm } => cmd_run(&permutation(perm, degree)?),
        Command::Rho { perm } => cmd_rho(&permutation(perm, degree)?),
        Command::Ulam { perm } => cmd_ulam(&permutation(perm, degree)?),
        Command::Heap { perm } => cmd_heap(&permutation(perm, degree)?),
        Command::Words { perm } => cmd_words(&permutation(perm, degree)?),
        Command::Uncrowded { what } => match what {
            UncrowdedCommand::Set { set } => cmd_uncrowded_set(set),
            UncrowdedCommand::Tableau { tableau: source } => cmd_uncrowded_tableau(&tableau(source)?),
            UncrowdedCommand::Realize { set } => cmd_realize(set, degree),
        },
        Command::Count { range } => cmd_count(range),
        Command::Bij { direction } => match direction {
            BijCommand::F { word } => cmd_bij_f(word),
            BijCommand::G { tableau: source } => cmd_bij_g(&tableau(source)?),
        },
        Command::Selftest => Ok(cmd_selftest()),
    }
}

fn permutation(text: &[String], degree: Option<usize>) -> Result<Permutation, CommandError> {
    let w: Permutation = text.join(" ").parse()?;
    match degree {
        None => Ok(w),
        Some(d) if d < w.degree() => Err(CommandError::Usage(format!(
            "--degree {d} is smaller than the permutation's degree {}",
            w.degree()
        ))),
        Some(d) => {
            let mut entries = w.entries().to_vec();
            entries.extend(w.degree() + 1..=d);
            Ok(Permutation::from_one_line(entries)?)
        }
    }
}

/// A tableau from a file, from stdin (`-`), or inline with rows separated by `/`.
fn tableau(source: &str) -> Result<Tableau, CommandError> {
    let text = if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CommandError::Usage(format!("cannot read stdin: {e}")))?;
        text
    } else if Path::new(source).is_file() {
        std::fs::read_to_string(source).map_err(|e| CommandError::Usage(format!("cannot read {source}: {e}")))?
    } else if source.contains('/') || source.trim().chars().all(|c| c.is_ascii_digit() || c.is_whitespace()) {
        source.replace('/', "\n")
    } else {
        return Err(CommandError::Usage(format!("no such file: {source}")));
    };
    Ok(text.parse()?)
}

fn inline_tableau(t: &Tableau) -> String {
    t.rows().iter().map(|row| row.iter().join(" ")).join(" / ")
}

fn parse_set(text: &str) -> Result<BTreeSet<i64>, CommandError> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| CommandError::Usage(format!("'{tok}' is not an integer")))
        })
        .collect()
}

fn show_set<T: std::fmt::Display>(values: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", values.into_iter().join(", "))
}

fn runs_json<'a>(runs: impl IntoIterator<Item = &'a RunWord>) -> Value {
    json!(runs.into_iter().map(RunWord::letters).collect::<Vec<_>>())
}

fn cmd_rsk(w: &Permutation) -> Outcome {
    let (p, q) = rsk(w);
    let shape = p.shape();
    let plain = format!("P:\n{p}Q:\n{q}shape: {shape}\n");
    let result = json!({ "p": p.rows(), "q": q.rows(), "shape": shape.parts() });
    Ok(Report::new("rsk", w.to_string(), plain, result))
}

fn canonical_report(input: String, c: &CanonicalWord) -> Outcome {
    let (row2_p, row2_q) = row2_from_canonical(c);
    let plain = format!(
        "canonical: {c}\nleftmost: {}\nrightmost: {}\nrow2 P: {}\nrow2 Q: {}\n",
        show_set(c.leftmost_letters()),
        show_set(c.rightmost_letters()),
        show_set(&row2_p),
        show_set(&row2_q),
    );
    let result = json!({
        "runs": runs_json(c.runs()),
        "degree": c.degree(),
        "permutation": c.evaluate().entries(),
        "leftmost": c.leftmost_letters(),
        "rightmost": c.rightmost_letters(),
        "row2_p": row2_p,
        "row2_q": row2_q,
    });
    Ok(Report::new("canonical", input, plain, result))
}

fn cmd_canonical(w: &Permutation) -> Outcome {
    canonical_report(w.to_string(), &CanonicalWord::of(w)?)
}

fn cmd_canonical_word(text: &[String], degree: Option<usize>) -> Outcome {
    let letters = parse_sequence(&text.join(" "))?;
    let degree = degree.unwrap_or(letters.iter().max().map_or(1, |m| m + 1));
    let word = Word::new(letters, degree)?;
    canonical_report(compact(word.letters()), &CanonicalWord::from_word(&word)?)
}

fn cmd_run(w: &Permutation) -> Outcome {
    let runs = optimal_run_word(w);
    let run = run_statistic(w);
    let lambda1 = w.degree() - run;
    let plain = format!(
        "run: {run}\nlambda1: {lambda1}\nlength: {}\noptimal run word: {}\n",
        w.length(),
        display_runs(&runs)
    );
    let result = json!({
        "run": run,
        "lambda1": lambda1,
        "length": w.length(),
        "optimal_run_word": runs_json(&runs),
    });
    Ok(Report::new("run", w.to_string(), plain, result))
}

fn cmd_rho(w: &Permutation) -> Outcome {
    let orbit = rho_orbit(w);
    let mut plain = format!("w = {w} (length {})\n", w.length());
    let mut steps = Vec::new();
    for (k, step) in orbit.iter().enumerate() {
        let length = step.result.length();
        writeln!(
            plain,
            "{}) {}: {} [{}] -> {} (length {length})",
            k + 1,
            step.case,
            step.side,
            step.run,
            step.result
        )
        .unwrap();
        steps.push(json!({
            "case": step.case.to_string(),
            "side": step.side.to_string(),
            "run": step.run.letters(),
            "result": step.result.entries(),
            "length": length,
        }));
    }
    writeln!(plain, "run: {}", orbit.len()).unwrap();
    let result = json!({ "length": w.length(), "steps": steps, "run": orbit.len() });
    Ok(Report::new("rho", w.to_string(), plain, result))
}

fn cmd_ulam(w: &Permutation) -> Outcome {
    let moves = ulam_sort(w);
    let mut plain = String::new();
    let mut list = Vec::new();
    for (k, (mv, state)) in moves.iter().enumerate() {
        writeln!(plain, "{}) {mv} -> {state}", k + 1).unwrap();
        list.push(json!({
            "from_position": mv.from_position,
            "insert_after": mv.insert_after_value,
            "state": state.entries(),
        }));
    }
    writeln!(plain, "moves: {}", moves.len()).unwrap();
    let result = json!({ "moves": list, "count": moves.len() });
    Ok(Report::new("ulam", w.to_string(), plain, result))
}

fn cmd_heap(w: &Permutation) -> Outcome {
    let heap = heap_of(w)?;
    let mut plain = format!("heap: {}\n", heap.describe());
    for line in heap.edge_lines() {
        writeln!(plain, "{line}").unwrap();
    }
    plain.push('\n');
    plain.push_str(&heap.sketch());
    let result = json!({
        "elements": heap.elements(),
        "components": heap.components(),
        "covers": heap.covers(),
    });
    Ok(Report::new("heap", w.to_string(), plain, result))
}

fn cmd_words(w: &Permutation) -> Outcome {
    let words = all_reduced_words(w)?;
    let mut plain = format!("reduced words: {}\nrun: {}\n", words.len(), run_statistic(w));
    for word in &words {
        writeln!(plain, "{}", display_runs(&run_decomposition(word.letters()))).unwrap();
    }
    let list: Vec<&[usize]> = words.iter().map(Word::letters).collect();
    let result = json!({ "count": words.len(), "words": list });
    Ok(Report::new("words", w.to_string(), plain, result))
}

fn crowding_json(set: &BTreeSet<i64>) -> (String, Value) {
    match crowding(set) {
        None => ("uncrowded: true\n".to_string(), Value::Null),
        Some(c) => (
            format!(
                "uncrowded: false\ncrowded window: [{}, {}] holds {} elements\n",
                c.start, c.end, c.count
            ),
            json!([c.start, c.end, c.count]),
        ),
    }
}

fn cmd_uncrowded_set(text: &str) -> Outcome {
    let set = parse_set(text)?;
    let (verdict, window) = crowding_json(&set);
    let plain = format!("set: {}\n{verdict}", show_set(&set));
    let result = json!({ "set": set, "uncrowded": window.is_null(), "window": window });
    Ok(Report::new("uncrowded set", show_set(&set), plain, result))
}

fn cmd_uncrowded_tableau(t: &Tableau) -> Outcome {
    is_uncrowded_tableau(t)?;
    let row2: BTreeSet<i64> = t.row_set(2).into_iter().map(|v| v as i64).collect();
    let (verdict, window) = crowding_json(&row2);
    let plain = format!("{t}row2: {}\n{verdict}", show_set(&row2));
    let result = json!({ "rows": t.rows(), "uncrowded": window.is_null(), "window": window });
    Ok(Report::new("uncrowded tableau", inline_tableau(t), plain, result))
}

fn cmd_realize(text: &str, degree: Option<usize>) -> Outcome {
    let set = parse_set(text)?;
    let letters: BTreeSet<usize> = set
        .iter()
        .map(|&v| usize::try_from(v).map_err(|_| CommandError::Usage(format!("letter {v} is negative"))))
        .collect::<Result<_, _>>()?;
    let n = degree.unwrap_or(letters.last().map_or(1, |m| m + 2));
    let c = realize_boolean(&letters, n)?;
    let w = c.evaluate();
    let plain = format!(
        "letters: {}\ndegree: {n}\ncanonical: {c}\npermutation: {w}\n",
        show_set(&letters)
    );
    let result = json!({
        "letters": letters,
        "degree": n,
        "runs": runs_json(c.runs()),
        "permutation": w.entries(),
    });
    Ok(Report::new("uncrowded realize", show_set(&letters), plain, result))
}

fn parse_range(text: &str) -> Result<(usize, usize), CommandError> {
    let bad = || CommandError::Usage(format!("'{text}' is not a size or a range like 1..10"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        None => {
            let n = number(text)?;
            (n, n)
        }
        Some((lo, hi)) => (number(lo)?, number(hi.trim_start_matches('='))?),
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    if hi > COUNT_MAX {
        return Err(Error::DegreeGuard { degree: hi, max: COUNT_MAX }.into());
    }
    Ok((lo, hi))
}

fn cmd_count(text: &str) -> Outcome {
    let (lo, hi) = parse_range(text)?;
    let mut plain = format!("{:>3} {:>8} {:>8} {:>15}\n", "n", "total", "two_row", "with_n_in_row2");
    let mut rows = Vec::new();
    for n in lo..=hi {
        let c = count_uncrowded(n);
        writeln!(plain, "{:>3} {:>8} {:>8} {:>15}", c.n, c.total, c.two_row, c.with_n_in_row2).unwrap();
        rows.push(json!({ "n": c.n, "total": c.total, "two_row": c.two_row, "with_n_in_row2": c.with_n_in_row2 }));
    }
    Ok(Report::new("count", format!("{lo}..{hi}"), plain, json!({ "rows": rows })))
}

fn show_word(x: &BinaryWord) -> String {
    if x.bits().is_empty() {
        "ε".to_string()
    } else {
        x.to_string()
    }
}

fn cmd_bij_f(text: &str) -> Outcome {
    let x: BinaryWord = text.parse()?;
    let t = f_map(&x)?;
    let plain = format!(
        "n: {}\nalpha: {}\nbeta: {}\n{t}",
        x.n(),
        show_set(t.row_set(1)),
        show_set(t.row_set(2))
    );
    let result = json!({ "n": x.n(), "rows": t.rows() });
    Ok(Report::new("bij f", show_word(&x), plain, result))
}

fn cmd_bij_g(t: &Tableau) -> Outcome {
    let x = g_map(t)?;
    let plain = format!("{}\n", show_word(&x));
    let bits: Vec<u8> = x.bits().iter().map(|&b| b as u8).collect();
    let result = json!({ "n": x.n(), "bits": bits });
    Ok(Report::new("bij g", inline_tableau(t), plain, result))
}

fn cmd_selftest() -> Report {
    let outcomes = selftest::run_all();
    let mut plain = String::new();
    for o in &outcomes {
        writeln!(plain, "{o}").unwrap();
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(plain, "{passed}/{} criteria passed", outcomes.len()).unwrap();
    let list: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": o.seconds }))
        .collect();
    let mut report = Report::new("selftest", String::new(), plain, json!({ "criteria": list }));
    report.success = passed == outcomes.len();
    report
}
