//! Executes the commands of a session and renders the results.

use std::fmt::Write as _;

use lff_core::bflin::{is_general_position, lin_l_langlands, verify_main_theorem};
use lff_core::cosets::{chi_alpha_restriction, enumerate_relevant, modulus_identity_defect, modulus_quotient_closed_form, modulus_quotient_direct};
use lff_core::distinction::{classify_generic, ShalikaCriterion};
use lff_core::galois::WDRep;
use lff_core::pairs::pair_l_rep;
use lff_core::{Cuspidal, EulerFactor};
use serde_json::json;

use crate::session::{Command, Session};
use crate::style::Style;

#[derive(Debug, Default)]
pub struct RunReport {
    pub text: String,
    pub failures: usize,
    pub errors: usize,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.failures == 0 && self.errors == 0
    }
}

/// The root list of a factor as JSON: `[[root, multiplicity], ...]`.
pub fn roots_json(e: &EulerFactor) -> serde_json::Value {
    json!(e.roots().map(|(u, m)| json!([u.to_string(), m])).collect::<Vec<_>>())
}

fn factor(out: &mut String, name: &str, e: &EulerFactor) {
    let _ = writeln!(out, "  {name} = {e}");
}

fn roots_block(out: &mut String, fs: &[(&str, &EulerFactor)]) {
    let obj: serde_json::Map<String, serde_json::Value> = fs.iter().map(|(n, e)| (n.to_string(), roots_json(e))).collect();
    let _ = writeln!(out, "  roots {}", serde_json::Value::Object(obj));
}

/// Runs every command in order. Errors are reported with their line and do
/// not stop later commands.
pub fn run(session: &Session, style: &Style) -> RunReport {
    let mut rep = RunReport::default();
    for (line, cmd) in session.commands() {
        let _ = writeln!(rep.text, "[line {line}] {cmd}");
        let mut body = String::new();
        match exec(session, cmd, style, &mut body) {
            Ok(true) => {}
            Ok(false) => rep.failures += 1,
            Err(e) => {
                rep.errors += 1;
                let _ = writeln!(body, "  {}: line {line}: {cmd}: {e}", style.fail("error"));
            }
        }
        rep.text.push_str(&body);
    }
    rep
}

fn alpha_of(session: &Session, a: &Option<String>) -> Cuspidal {
    a.as_ref()
        .and_then(|id| session.character(id).cloned())
        .unwrap_or_else(Cuspidal::trivial_character)
}

fn exec(session: &Session, cmd: &Command, style: &Style, out: &mut String) -> lff_core::Result<bool> {
    let rep = |id: &str| session.rep(id).expect("resolved at parse time");
    let o = ShalikaCriterion;
    match cmd {
        Command::LfactorLin { rep: r, alpha } => {
            let a = alpha_of(session, alpha);
            let res = lin_l_langlands(rep(r), &a, &o)?;
            factor(out, "L", &res.l);
            factor(out, "L0", &res.l0);
            factor(out, "Lradex", &res.lradex);
            roots_block(out, &[("L", &res.l), ("L0", &res.l0), ("Lradex", &res.lradex)]);
        }
        Command::LfactorPair { a, b } => {
            let res = pair_l_rep(rep(a), rep(b))?;
            factor(out, "L", &res.l);
            factor(out, "L0", &res.l0);
            factor(out, "Lex", &res.lex);
            factor(out, "Lradex", &res.lradex);
            roots_block(out, &[("L", &res.l), ("L0", &res.l0), ("Lex", &res.lex), ("Lradex", &res.lradex)]);
        }
        Command::GaloisSide { rep: r } => {
            let pi = rep(r);
            let phi = WDRep::langlands_param(pi);
            let g = lff_core::bflin::galois_side(pi);
            let _ = writeln!(out, "  phi = {phi}");
            factor(out, "L(phi, s+1/2) L(wedge^2 phi, 2s)", &g);
            roots_block(out, &[("galois", &g)]);
        }
        Command::Classify { rep: r, alpha } => {
            let a = alpha_of(session, alpha);
            match classify_generic(rep(r), &a, &o)? {
                Some(c) => {
                    let _ = writeln!(out, "  distinguished: {c}");
                }
                None => {
                    let _ = writeln!(out, "  not distinguished");
                }
            }
        }
        Command::VerifyMain { rep: r } => {
            let res = verify_main_theorem(rep(r))?;
            factor(out, "lhs", &res.lhs);
            factor(out, "rhs", &res.rhs);
            roots_block(out, &[("lhs", &res.lhs), ("rhs", &res.rhs)]);
            if res.equal {
                let _ = writeln!(out, "  {}", style.pass("PASS"));
            } else {
                factor(out, "only lhs", &res.only_lhs);
                factor(out, "only rhs", &res.only_rhs);
                let _ = writeln!(out, "  {}", style.fail("FAIL"));
                return Ok(false);
            }
        }
        Command::Cosets { nbar } => {
            let subs = enumerate_relevant(nbar);
            let _ = writeln!(out, "  {} relevant subpartitions", subs.len());
            let mut ok = true;
            for (i, s) in subs.iter().enumerate() {
                let q = modulus_quotient_direct(s);
                let agree = q == modulus_quotient_closed_form(s) && modulus_identity_defect(s).is_trivial();
                ok &= agree;
                let mark = if agree { style.pass("ok") } else { style.fail("MISMATCH") };
                let _ = writeln!(out, "  {:>3}  {s}  quotient: {q}  chi_alpha: alpha^[{}]  {mark}", i + 1, chi_alpha_restriction(s));
            }
            return Ok(ok);
        }
        Command::GeneralPosition { rep: r, twists, alpha } => {
            let a = alpha_of(session, &Some(alpha.clone()));
            let ts: Vec<_> = twists.iter().map(|t| t.value()).collect();
            let res = is_general_position(rep(r), &ts, &a, &o)?;
            for l in res.to_string().lines() {
                let _ = writeln!(out, "  {l}");
            }
        }
    }
    Ok(true)
}
