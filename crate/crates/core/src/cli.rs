//! Command interpreter shared by the REPL, batch scripts and one-shot
//! subcommands.

use std::fmt;
use std::fs;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::format_rational;
use crate::parser::{eval_expr_with, parse_expr_list, parse_expr_str, parse_poly, Bindings};
use crate::poly::{constructible_root_verdict, descend_cubic_root, rational_roots_cubic, rrt_candidates};
use crate::tower::{Tower, TowerElement};

pub const DEFAULT_PRECISION: u32 = 113;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    Coords,
    Decimal,
    #[default]
    Both,
}

impl FromStr for OutputMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coords" => Ok(OutputMode::Coords),
            "decimal" => Ok(OutputMode::Decimal),
            "both" => Ok(OutputMode::Both),
            other => Err(Error::Domain(format!(
                "unknown mode {other:?} (expected coords, decimal or both)"
            ))),
        }
    }
}

impl fmt::Display for OutputMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputMode::Coords => "coords",
            OutputMode::Decimal => "decimal",
            OutputMode::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub precision: u32,
    pub mode: OutputMode,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            precision: DEFAULT_PRECISION,
            mode: OutputMode::Both,
        }
    }
}

/// Renders an element per the output mode: `[r0, r1, ...]`, a 15
/// significant digit decimal, or both joined by `≈`.
pub fn format_element(tower: &Tower, x: &TowerElement, settings: &Settings) -> Result<String> {
    let coords = || {
        let parts: Vec<String> = x.coords().iter().map(format_rational).collect();
        format!("[{}]", parts.join(", "))
    };
    let decimal = || -> Result<String> { Ok(tower.approx(x, settings.precision)?.to_significant(15)) };
    Ok(match settings.mode {
        OutputMode::Coords => coords(),
        OutputMode::Decimal => decimal()?,
        OutputMode::Both => format!("{} ≈ {}", coords(), decimal()?),
    })
}

const HELP: &str = "\
commands:
  adjoin <expr>                 extend the tower by g = +sqrt(expr)
  adjoin-root [c0,c1,c2] (+|-)  extend by a root of c0 + c1 x + c2 x^2, bound to `last`
  eval <expr>                   evaluate in the top field
  sign <expr> | is-square <expr> | member <expr> <level>
  rrt [poly] | roots [poly] | verdict [poly]
  descend [poly] <expr>         walk a tower root of a rational cubic down to Q
  let <name> = <expr>           bind a value
  save <path> | load <path> | tower
  set precision <bits> | set mode <coords|decimal|both>
expressions: + - * / ^int, sqrt(...), g1..gn, p/q; -2^2 means -(2^2)
polynomials: [c0, c1, ..., cd], constant term first";

/// A tower with named values and output settings.
#[derive(Debug, Clone, Default)]
pub struct Session {
    tower: Tower,
    bindings: Bindings,
    settings: Settings,
}

fn split_command(line: &str) -> (&str, &str) {
    let line = line.trim();
    match line.split_once(char::is_whitespace) {
        Some((cmd, rest)) => (cmd, rest.trim()),
        None => (line, ""),
    }
}

fn require_arg<'a>(arg: &'a str, usage: &str) -> Result<&'a str> {
    if arg.is_empty() {
        return Err(Error::Domain(format!("usage: {usage}")));
    }
    Ok(arg)
}

/// Splits `[ ... ] rest` at the closing bracket.
fn split_bracketed(arg: &str) -> Result<(&str, &str)> {
    let end = arg
        .find(']')
        .ok_or_else(|| Error::Domain("expected a bracketed list `[...]`".into()))?;
    Ok((&arg[..=end], arg[end + 1..].trim()))
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_');
    let is_generator = name
        .strip_prefix('g')
        .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
    head_ok && chars.all(|c| c.is_alphanumeric() || c == '_') && name != "sqrt" && !is_generator
}

fn join_rationals(values: &[num_rational::BigRational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

impl Session {
    pub fn new(tower: Tower, settings: Settings) -> Self {
        Session {
            tower,
            bindings: Bindings::new(),
            settings,
        }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn settings(&self) -> &Settings {
        &self.settings
    }

    pub fn binding(&self, name: &str) -> Option<&TowerElement> {
        self.bindings.get(name)
    }

    fn eval(&self, text: &str) -> Result<TowerElement> {
        eval_expr_with(&parse_expr_str(text)?, &self.tower, &self.bindings)
    }

    fn show(&self, x: &TowerElement) -> Result<String> {
        format_element(&self.tower, x, &self.settings)
    }

    /// Runs one command. On error the session is left untouched.
    pub fn execute(&mut self, line: &str) -> Result<String> {
        let (cmd, arg) = split_command(line);
        match cmd {
            "" => Ok(String::new()),
            c if c.starts_with('#') => Ok(String::new()),
            "help" => Ok(HELP.to_string()),
            "tower" => Ok(self.tower.to_text().trim_end().to_string()),
            "adjoin" => {
                let arg = require_arg(arg, "adjoin <expr>")?;
                let s = self.eval(arg)?;
                let tower = self.tower.adjoin_sqrt(&s)?;
                self.commit_tower(tower)?;
                let k = self.tower.depth();
                Ok(format!("adjoined g{k} = sqrt({arg}); depth {k}"))
            }
            "adjoin-root" => {
                let usage = "adjoin-root [c0, c1, c2] (+|-)";
                let (list, branch) = split_bracketed(require_arg(arg, usage)?)?;
                let positive = match branch {
                    "+" => true,
                    "-" => false,
                    _ => return Err(Error::Domain(format!("usage: {usage}"))),
                };
                let coeffs = parse_expr_list(list)?
                    .iter()
                    .map(|e| eval_expr_with(e, &self.tower, &self.bindings))
                    .collect::<Result<Vec<_>>>()?;
                let [c0, c1, c2] = coeffs.as_slice() else {
                    return Err(Error::Domain(format!(
                        "adjoin-root needs exactly 3 coefficients, found {}",
                        coeffs.len()
                    )));
                };
                let (tower, root) = self.tower.adjoin_quadratic_root([c0, c1, c2], positive)?;
                self.commit_tower(tower)?;
                self.bindings.insert("last".into(), root.clone());
                let k = self.tower.depth();
                Ok(format!(
                    "adjoined g{k} = sqrt({}); depth {k}\nlast = {}",
                    self.tower.square(k)?,
                    self.show(&root)?
                ))
            }
            "eval" => {
                let x = self.eval(require_arg(arg, "eval <expr>")?)?;
                let shown = self.show(&x)?;
                Ok(match self.settings.mode {
                    OutputMode::Decimal => format!("≈ {shown}"),
                    _ => format!("coords: {shown}"),
                })
            }
            "sign" => {
                let x = self.eval(require_arg(arg, "sign <expr>")?)?;
                let sign = self.tower.exact_sign(&x)?;
                Ok(format!("sign: {}", match sign {
                    1 => "+1",
                    -1 => "-1",
                    _ => "0",
                }))
            }
            "is-square" => {
                let x = self.eval(require_arg(arg, "is-square <expr>")?)?;
                Ok(match self.tower.is_square(&x)? {
                    Some(w) => format!("square: yes, witness {}", self.show(&w)?),
                    None => format!("square: no (not a square in level {})", x.level()),
                })
            }
            "member" => {
                let usage = "member <expr> <level>";
                let (expr, level) = require_arg(arg, usage)?
                    .rsplit_once(char::is_whitespace)
                    .ok_or_else(|| Error::Domain(format!("usage: {usage}")))?;
                let level: usize = level
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad level {level:?}")))?;
                let x = self.eval(expr)?;
                Ok(match self.tower.member_of_level(&x, level)? {
                    Some(y) => format!("in level {level}: {}", self.show(&y)?),
                    None => format!("not in level {level}"),
                })
            }
            "rrt" => {
                let p = parse_poly(require_arg(arg, "rrt [poly]")?)?;
                Ok(format!("candidates: {}", join_rationals(&rrt_candidates(&p)?)))
            }
            "roots" => {
                let p = parse_poly(require_arg(arg, "roots [poly]")?)?;
                let roots = rational_roots_cubic(&p)?;
                Ok(if roots.is_empty() {
                    "rational roots: none".to_string()
                } else {
                    format!("rational roots: {}", join_rationals(&roots))
                })
            }
            "verdict" => {
                let p = parse_poly(require_arg(arg, "verdict [poly]")?)?;
                Ok(constructible_root_verdict(&p)?.to_string())
            }
            "descend" => {
                let usage = "descend [poly] <expr>";
                let (poly, expr) = split_bracketed(require_arg(arg, usage)?)?;
                let p = parse_poly(poly)?;
                let x0 = self.eval(require_arg(expr, usage)?)?;
                let r = descend_cubic_root(&p, &self.tower, &x0)?;
                Ok(format!("rational root: {}", format_rational(&r)))
            }
            "let" => {
                let usage = "let <name> = <expr>";
                let (name, expr) = require_arg(arg, usage)?
                    .split_once('=')
                    .ok_or_else(|| Error::Domain(format!("usage: {usage}")))?;
                let name = name.trim();
                if !valid_name(name) {
                    return Err(Error::Domain(format!("invalid name {name:?}")));
                }
                let x = self.eval(require_arg(expr.trim(), usage)?)?;
                let shown = self.show(&x)?;
                self.bindings.insert(name.to_string(), x);
                Ok(format!("{name} = {shown}"))
            }
            "save" => {
                let path = require_arg(arg, "save <path>")?;
                fs::write(path, self.tower.to_text())
                    .map_err(|e| Error::Io(format!("cannot write {path}: {e}")))?;
                Ok(format!("saved tower of depth {} to {path}", self.tower.depth()))
            }
            "load" => {
                let path = require_arg(arg, "load <path>")?;
                let tower = load_tower(path)?;
                self.bindings.clear();
                self.tower = tower;
                Ok(format!("loaded tower of depth {} from {path}", self.tower.depth()))
            }
            "set" => {
                let usage = "set precision <bits> | set mode <coords|decimal|both>";
                let (key, value) = split_command(require_arg(arg, usage)?);
                match key {
                    "precision" => {
                        let bits: u32 = value
                            .parse()
                            .ok()
                            .filter(|&b| (1..=100_000).contains(&b))
                            .ok_or_else(|| Error::Domain(format!("bad precision {value:?}")))?;
                        self.settings.precision = bits;
                        Ok(format!("precision = {bits} bits"))
                    }
                    "mode" => {
                        self.settings.mode = value.parse()?;
                        Ok(format!("mode = {}", self.settings.mode))
                    }
                    _ => Err(Error::Domain(format!("usage: {usage}"))),
                }
            }
            other => Err(Error::Domain(format!(
                "unknown command {other:?}; try `help`"
            ))),
        }
    }

    fn commit_tower(&mut self, tower: Tower) -> Result<()> {
        tower.validate().into_result(&tower)?;
        self.tower = tower;
        Ok(())
    }
}

pub fn load_tower(path: &str) -> Result<Tower> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?;
    Tower::from_text(&text)
}

/// Exit status for a failed command: 2 for I/O or format errors, else 1.
pub fn exit_status(err: &Error) -> i32 {
    if err.is_io_or_format() {
        2
    } else {
        1
    }
}

/// Runs newline-separated commands, echoing each (unless `quiet`) with its
/// output. Stops at the first error and returns its exit status.
pub fn run_script(session: &mut Session, script: &str, quiet: bool) -> (i32, String) {
    let mut transcript = String::new();
    for line in script.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !quiet {
            transcript.push_str("> ");
            transcript.push_str(line);
            transcript.push('\n');
        }
        match session.execute(line) {
            Ok(out) => {
                if !out.is_empty() {
                    transcript.push_str(&out);
                    transcript.push('\n');
                }
            }
            Err(e) => {
                transcript.push_str(&e.render());
                transcript.push('\n');
                return (exit_status(&e), transcript);
            }
        }
    }
    (0, transcript)
}
