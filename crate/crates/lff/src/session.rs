//! Line-oriented session files.
//!
//! ```text
//! # comment
//! char chi { satake = z1 }
//! char eta { satake = 1, label = e^2 }
//! cuspidal rho { r = 2, twist = 1, torsion = 1, selfdual = symplectic@1 }
//! rep pi = seg(chi, k=2, e=-1/2) x seg(rho~, k=1, e=0)
//! verify-main pi
//! ```
//!
//! A trailing `~` on a cuspidal reference names its contragredient.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use lff_core::monoid::{fmt_q, parse_q};
use lff_core::reps::{CuspidalBase, FormType, Label, SelfDual};
use lff_core::{Cuspidal, GLRep, Monomial, Segment, Q};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn perr(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelDecl {
    pub gen: String,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegDecl {
    pub cusp: String,
    pub k: u32,
    pub e: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Char { id: String, satake: Monomial, label: Option<LabelDecl> },
    Cuspidal { id: String, r: u32, twist: Monomial, torsion: u32, selfdual: Option<(FormType, Monomial)>, label: Option<LabelDecl> },
    Rep { id: String, segs: Vec<SegDecl> },
}

impl Decl {
    pub fn id(&self) -> &str {
        match self {
            Decl::Char { id, .. } | Decl::Cuspidal { id, .. } | Decl::Rep { id, .. } => id,
        }
    }
}

/// An entry of a `general-position` twist list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `|.|^u`.
    Abs(Q),
    Value(Monomial),
}

impl Twist {
    pub fn value(&self) -> Monomial {
        match self {
            Twist::Abs(u) => Monomial::abs_pow(*u),
            Twist::Value(m) => m.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    LfactorLin { rep: String, alpha: Option<String> },
    LfactorPair { a: String, b: String },
    GaloisSide { rep: String },
    Classify { rep: String, alpha: Option<String> },
    VerifyMain { rep: String },
    Cosets { nbar: Vec<u32> },
    GeneralPosition { rep: String, twists: Vec<Twist>, alpha: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Decl(Decl),
    Command(Command),
}

/// A parsed and resolved session.
#[derive(Clone, Debug)]
pub struct Session {
    pub items: Vec<(usize, Item)>,
    cusps: BTreeMap<String, Cuspidal>,
    reps: BTreeMap<String, GLRep>,
}

impl Session {
    pub fn declarations(&self) -> impl Iterator<Item = &Decl> {
        self.items.iter().filter_map(|(_, i)| match i {
            Item::Decl(d) => Some(d),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = (usize, &Command)> {
        self.items.iter().filter_map(|(l, i)| match i {
            Item::Command(c) => Some((*l, c)),
            _ => None,
        })
    }

    pub fn rep(&self, id: &str) -> Option<&GLRep> {
        self.reps.get(id)
    }

    /// A declared character (for `alpha=` arguments).
    pub fn character(&self, id: &str) -> Option<&Cuspidal> {
        self.cusps.get(id).filter(|c| c.is_character())
    }
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn ident(line: usize, s: &str) -> Result<String, ParseError> {
    let ok = !s.is_empty()
        && s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
    if ok {
        Ok(s.to_string())
    } else {
        Err(perr(line, format!("invalid identifier `{s}`")))
    }
}

fn monomial(line: usize, s: &str) -> Result<Monomial, ParseError> {
    s.parse().map_err(|e| perr(line, format!("malformed monomial `{s}`: {e}")))
}

fn uint(line: usize, key: &str, s: &str) -> Result<u32, ParseError> {
    s.parse().map_err(|_| perr(line, format!("`{key}` expects a nonnegative integer, got `{s}`")))
}

fn rational(line: usize, key: &str, s: &str) -> Result<Q, ParseError> {
    parse_q(s).map_err(|_| perr(line, format!("`{key}` expects a rational number, got `{s}`")))
}

fn label(line: usize, s: &str) -> Result<LabelDecl, ParseError> {
    let (g, o) = s.split_once('^').ok_or_else(|| perr(line, format!("label `{s}` is not of the form gen^order")))?;
    Ok(LabelDecl { gen: ident(line, g.trim())?, order: uint(line, "label", o.trim())? })
}

/// `{ a = b, c = d }` into an ordered key list.
fn fields(line: usize, s: &str) -> Result<Vec<(String, String)>, ParseError> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| perr(line, "expected `{ key = value, ... }`"))?;
    let mut out: Vec<(String, String)> = Vec::new();
    for part in split_top(inner, ',').into_iter().filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| perr(line, format!("expected `key = value`, got `{part}`")))?;
        let k = k.trim().to_string();
        if out.iter().any(|(x, _)| *x == k) {
            return Err(perr(line, format!("field `{k}` given twice")));
        }
        out.push((k, v.trim().to_string()));
    }
    Ok(out)
}

fn take<'a>(fs: &'a [(String, String)], key: &str) -> Option<&'a str> {
    fs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn reject_unknown(line: usize, fs: &[(String, String)], known: &[&str]) -> Result<(), ParseError> {
    match fs.iter().find(|(k, _)| !known.contains(&k.as_str())) {
        Some((k, _)) => Err(perr(line, format!("unknown field `{k}`"))),
        None => Ok(()),
    }
}

fn parse_char(line: usize, rest: &str) -> Result<Decl, ParseError> {
    let (id, body) = rest.split_once('{').ok_or_else(|| perr(line, "expected `char <id> { satake = ... }`"))?;
    let fs = fields(line, &format!("{{{body}"))?;
    reject_unknown(line, &fs, &["satake", "label"])?;
    let satake = monomial(line, take(&fs, "satake").ok_or_else(|| perr(line, "missing field `satake`"))?)?;
    let label = take(&fs, "label").map(|l| label(line, l)).transpose()?;
    Ok(Decl::Char { id: ident(line, id.trim())?, satake, label })
}

fn parse_cuspidal(line: usize, rest: &str) -> Result<Decl, ParseError> {
    let (id, body) = rest.split_once('{').ok_or_else(|| perr(line, "expected `cuspidal <id> { r = ..., ... }`"))?;
    let fs = fields(line, &format!("{{{body}"))?;
    reject_unknown(line, &fs, &["r", "twist", "torsion", "selfdual", "label"])?;
    let r = uint(line, "r", take(&fs, "r").ok_or_else(|| perr(line, "missing field `r`"))?)?;
    let twist = take(&fs, "twist").map(|t| monomial(line, t)).transpose()?.unwrap_or_else(Monomial::one);
    let torsion = take(&fs, "torsion").map(|t| uint(line, "torsion", t)).transpose()?.unwrap_or(1);
    let selfdual = match take(&fs, "selfdual") {
        None => None,
        Some(v) => {
            let (kind, at) = v.split_once('@').unwrap_or((v, "1"));
            let kind = match kind.trim() {
                "symplectic" => FormType::Symplectic,
                "orthogonal" => FormType::Orthogonal,
                other => return Err(perr(line, format!("selfdual type must be symplectic or orthogonal, got `{other}`"))),
            };
            Some((kind, monomial(line, at.trim())?))
        }
    };
    let label = take(&fs, "label").map(|l| label(line, l)).transpose()?;
    Ok(Decl::Cuspidal { id: ident(line, id.trim())?, r, twist, torsion, selfdual, label })
}

fn parse_seg(line: usize, s: &str) -> Result<SegDecl, ParseError> {
    let inner = s
        .strip_prefix("seg(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(line, format!("expected `seg(<cusp>, k=<int>, e=<half-int>)`, got `{s}`")))?;
    let parts = split_top(inner, ',');
    let cusp = parts[0].to_string();
    let stem = cusp.strip_suffix('~').unwrap_or(&cusp);
    ident(line, stem)?;
    let mut k = None;
    let mut e = None;
    for p in &parts[1..] {
        let (key, v) = p.split_once('=').ok_or_else(|| perr(line, format!("expected `key=value`, got `{p}`")))?;
        match key.trim() {
            "k" => k = Some(uint(line, "k", v.trim())?),
            "e" => e = Some(rational(line, "e", v.trim())?),
            other => return Err(perr(line, format!("unknown segment field `{other}`"))),
        }
    }
    let k = k.ok_or_else(|| perr(line, "segment is missing `k`"))?;
    if k == 0 {
        return Err(perr(line, "segment length must be positive"));
    }
    let e = e.unwrap_or_default();
    if !(e * 2).is_integer() {
        return Err(perr(line, format!("segment exponent {} is not a half-integer", fmt_q(e))));
    }
    Ok(SegDecl { cusp, k, e })
}

fn parse_rep(line: usize, rest: &str) -> Result<Decl, ParseError> {
    let (id, body) = rest.split_once('=').ok_or_else(|| perr(line, "expected `rep <id> = seg(...) x ...`"))?;
    let mut segs = Vec::new();
    for s in split_top(body.trim(), ' ').into_iter().filter(|s| !s.is_empty() && *s != "x") {
        segs.push(parse_seg(line, s)?);
    }
    if segs.is_empty() {
        return Err(perr(line, "representation has no segments"));
    }
    Ok(Decl::Rep { id: ident(line, id.trim())?, segs })
}

fn parse_composition(line: usize, s: &str) -> Result<Vec<u32>, ParseError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(line, format!("expected a composition like (2,1), got `{s}`")))?;
    let parts: Vec<u32> = inner.split(',').map(|p| uint(line, "composition", p.trim())).collect::<Result<_, _>>()?;
    if parts.contains(&0) {
        return Err(perr(line, "composition parts must be positive"));
    }
    Ok(parts)
}

fn parse_twists(line: usize, s: &str) -> Result<Vec<Twist>, ParseError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| perr(line, format!("expected a twist list like [0, 1/3, z5], got `{s}`")))?;
    split_top(inner, ',')
        .into_iter()
        .map(|p| match parse_q(p) {
            Ok(u) => Ok(Twist::Abs(u)),
            Err(_) => monomial(line, p).map(Twist::Value),
        })
        .collect()
}

fn alpha_arg(line: usize, args: &[&str]) -> Result<Option<String>, ParseError> {
    match args {
        [] => Ok(None),
        [a] => match a.strip_prefix("alpha=") {
            Some(id) => Ok(Some(ident(line, id)?)),
            None => Err(perr(line, format!("expected `alpha=<char>`, got `{a}`"))),
        },
        _ => Err(perr(line, "too many arguments")),
    }
}

fn parse_command(line: usize, head: &str, rest: &str) -> Result<Option<Command>, ParseError> {
    let args: Vec<&str> = split_top(rest, ' ').into_iter().filter(|s| !s.is_empty()).collect();
    let one = |what: &str| -> Result<String, ParseError> {
        match args.first() {
            Some(a) => ident(line, a),
            None => Err(perr(line, format!("`{head}` expects {what}"))),
        }
    };
    let cmd = match head {
        "lfactor-lin" => Command::LfactorLin { rep: one("a representation")?, alpha: alpha_arg(line, &args[1..])? },
        "classify" => Command::Classify { rep: one("a representation")?, alpha: alpha_arg(line, &args[1..])? },
        "galois-side" | "verify-main" => {
            if args.len() != 1 {
                return Err(perr(line, format!("`{head}` expects exactly one representation")));
            }
            let rep = one("a representation")?;
            if head == "galois-side" {
                Command::GaloisSide { rep }
            } else {
                Command::VerifyMain { rep }
            }
        }
        "lfactor-pair" => match args.as_slice() {
            [a, b] => Command::LfactorPair { a: ident(line, a)?, b: ident(line, b)? },
            _ => return Err(perr(line, "`lfactor-pair` expects two representations")),
        },
        "cosets" => Command::Cosets { nbar: parse_composition(line, rest)? },
        "general-position" => match args.as_slice() {
            [r, t, a] => Command::GeneralPosition { rep: ident(line, r)?, twists: parse_twists(line, t)?, alpha: ident(line, a)? },
            _ => return Err(perr(line, "`general-position` expects <rep> [twists] <char>")),
        },
        _ => return Ok(None),
    };
    Ok(Some(cmd))
}

fn build_label(line: usize, l: &Option<LabelDecl>) -> Result<Label, ParseError> {
    match l {
        None => Ok(Label::trivial()),
        Some(l) => Label::generator(&l.gen, l.order, 1).map_err(|e| perr(line, e.to_string())),
    }
}

/// Parses and resolves a session; every identifier must be declared before
/// use.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut items = Vec::new();
    let mut sites: BTreeMap<String, usize> = BTreeMap::new();
    let mut cusps: BTreeMap<String, Cuspidal> = BTreeMap::new();
    let mut reps: BTreeMap<String, GLRep> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        let item = match head {
            "char" => Item::Decl(parse_char(line, rest)?),
            "cuspidal" => Item::Decl(parse_cuspidal(line, rest)?),
            "rep" => Item::Decl(parse_rep(line, rest)?),
            _ => match parse_command(line, head, rest)? {
                Some(c) => Item::Command(c),
                None => return Err(perr(line, format!("unknown directive `{head}`"))),
            },
        };
        match &item {
            Item::Decl(d) => {
                if let Some(first) = sites.get(d.id()) {
                    return Err(perr(line, format!("duplicate id `{}` (first declared on line {first}, again on line {line})", d.id())));
                }
                sites.insert(d.id().to_string(), line);
                resolve_decl(line, d, &mut cusps, &mut reps)?;
            }
            Item::Command(c) => check_command(line, c, &cusps, &reps)?,
        }
        items.push((line, item));
    }
    Ok(Session { items, cusps, reps })
}

fn resolve_decl(
    line: usize,
    d: &Decl,
    cusps: &mut BTreeMap<String, Cuspidal>,
    reps: &mut BTreeMap<String, GLRep>,
) -> Result<(), ParseError> {
    match d {
        Decl::Char { id, satake, label } => {
            cusps.insert(id.clone(), Cuspidal::character_labeled(satake.clone(), build_label(line, label)?));
        }
        Decl::Cuspidal { id, r, twist, torsion, selfdual, label } => {
            let sd = selfdual.as_ref().map(|(kind, at)| SelfDual { kind: *kind, at: at.clone() });
            let base = CuspidalBase::new(id, *r, *torsion, sd).map_err(|e| perr(line, e.to_string()))?;
            cusps.insert(id.clone(), Cuspidal::new(Arc::new(base), build_label(line, label)?, twist.clone()));
        }
        Decl::Rep { id, segs } => {
            let mut out = Vec::new();
            for s in segs {
                let (stem, dual) = match s.cusp.strip_suffix('~') {
                    Some(stem) => (stem, true),
                    None => (s.cusp.as_str(), false),
                };
                let c = cusps.get(stem).ok_or_else(|| perr(line, format!("unresolved cuspidal `{stem}`")))?;
                let c = if dual { c.dual() } else { c.clone() };
                out.push(Segment::new(c, s.k, s.e).map_err(|e| perr(line, e.to_string()))?);
            }
            reps.insert(id.clone(), GLRep::new(out));
        }
    }
    Ok(())
}

fn check_command(
    line: usize,
    c: &Command,
    cusps: &BTreeMap<String, Cuspidal>,
    reps: &BTreeMap<String, GLRep>,
) -> Result<(), ParseError> {
    let rep = |id: &str| {
        if reps.contains_key(id) {
            Ok(())
        } else {
            Err(perr(line, format!("unresolved representation `{id}`")))
        }
    };
    let chr = |id: &str| match cusps.get(id) {
        Some(c) if c.is_character() => Ok(()),
        Some(_) => Err(perr(line, format!("`{id}` is not a character"))),
        None => Err(perr(line, format!("unresolved character `{id}`"))),
    };
    match c {
        Command::LfactorLin { rep: r, alpha } | Command::Classify { rep: r, alpha } => {
            rep(r)?;
            if let Some(a) = alpha {
                chr(a)?;
            }
        }
        Command::LfactorPair { a, b } => {
            rep(a)?;
            rep(b)?;
        }
        Command::GaloisSide { rep: r } | Command::VerifyMain { rep: r } => rep(r)?,
        Command::Cosets { .. } => {}
        Command::GeneralPosition { rep: r, twists, alpha } => {
            rep(r)?;
            chr(alpha)?;
            let len = reps[r].len();
            if twists.len() != len {
                return Err(perr(line, format!("`{r}` has {len} segments but {} twists were given", twists.len())));
            }
        }
    }
    Ok(())
}

fn fmt_label(l: &Option<LabelDecl>) -> String {
    l.as_ref().map(|l| format!(", label = {}^{}", l.gen, l.order)).unwrap_or_default()
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Char { id, satake, label } => write!(f, "char {id} {{ satake = {satake}{} }}", fmt_label(label)),
            Decl::Cuspidal { id, r, twist, torsion, selfdual, label } => {
                write!(f, "cuspidal {id} {{ r = {r}, twist = {twist}, torsion = {torsion}")?;
                if let Some((kind, at)) = selfdual {
                    write!(f, ", selfdual = {kind}@{at}")?;
                }
                write!(f, "{} }}", fmt_label(label))
            }
            Decl::Rep { id, segs } => {
                write!(f, "rep {id} =")?;
                for (i, s) in segs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x")?;
                    }
                    write!(f, " seg({}, k={}, e={})", s.cusp, s.k, fmt_q(s.e))?;
                }
                Ok(())
            }
        }
    }
}

fn fmt_alpha(a: &Option<String>) -> String {
    a.as_ref().map(|a| format!(" alpha={a}")).unwrap_or_default()
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::LfactorLin { rep, alpha } => write!(f, "lfactor-lin {rep}{}", fmt_alpha(alpha)),
            Command::LfactorPair { a, b } => write!(f, "lfactor-pair {a} {b}"),
            Command::GaloisSide { rep } => write!(f, "galois-side {rep}"),
            Command::Classify { rep, alpha } => write!(f, "classify {rep}{}", fmt_alpha(alpha)),
            Command::VerifyMain { rep } => write!(f, "verify-main {rep}"),
            Command::Cosets { nbar } => {
                let parts: Vec<String> = nbar.iter().map(u32::to_string).collect();
                write!(f, "cosets ({})", parts.join(","))
            }
            Command::GeneralPosition { rep, twists, alpha } => {
                let ts: Vec<String> = twists
                    .iter()
                    .map(|t| match t {
                        Twist::Abs(u) => fmt_q(*u),
                        Twist::Value(m) => m.to_string(),
                    })
                    .collect();
                write!(f, "general-position {rep} [{}] {alpha}", ts.join(", "))
            }
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (_, item) in &self.items {
            match item {
                Item::Decl(d) => writeln!(f, "{d}")?,
                Item::Command(c) => writeln!(f, "{c}")?,
            }
        }
        Ok(())
    }
}
