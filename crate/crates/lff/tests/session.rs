use lff::{parse_session, run, Style};

const SAMPLE: &str = include_str!("../sessions/sample.lff");

#[test]
fn sample_parses_and_runs() {
    let session = parse_session(SAMPLE).unwrap();
    let rep = run(&session, &Style::default());
    assert!(rep.ok(), "{}", rep.text);
    assert!(rep.text.contains("PASS"));
    assert!(rep.text.contains("distinguished: pairing {(1, 2)}"));
    assert!(rep.text.contains("3 relevant subpartitions"));
    assert!(rep.text.contains("general position:"));
}

#[test]
fn canonical_form_round_trips() {
    let session = parse_session(SAMPLE).unwrap();
    let printed = session.to_string();
    let again = parse_session(&printed).unwrap();
    assert_eq!(printed, again.to_string());
}

#[test]
fn zero_length_segment() {
    let e = parse_session("char chi { satake = z1 }\nrep pi = seg(chi, k=0, e=0)\n").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(e.message.contains("segment length must be positive"), "{e}");
}

#[test]
fn duplicate_id_names_both_lines() {
    let e = parse_session("char chi { satake = z1 }\n\nchar chi { satake = z2 }\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.to_string().contains("line 1") && e.to_string().contains("line 3"), "{e}");
}

#[test]
fn unresolved_id() {
    let e = parse_session("char chi { satake = z1 }\nverify-main pi\n").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(e.message.contains("pi"), "{e}");
}

#[test]
fn non_half_integer_shift_rejected() {
    assert!(parse_session("char chi { satake = z1 }\nrep pi = seg(chi, k=1, e=-1/3)\n").is_err());
}

#[test]
fn pair_factor_output() {
    let session = parse_session("char chi { satake = z1 }\nrep pi = seg(chi, k=1, e=0)\nlfactor-pair pi pi\n").unwrap();
    let rep = run(&session, &Style::default());
    assert!(rep.ok());
    assert!(rep.text.contains("roots {"));
}

#[test]
fn color_only_when_asked() {
    let session = parse_session(SAMPLE).unwrap();
    assert!(!run(&session, &Style { color: false }).text.contains('\x1b'));
    assert!(run(&session, &Style { color: true }).text.contains("\x1b[32m"));
}

#[test]
fn ramified_character_has_trivial_factors() {
    let spec = parse_session("char eps { satake = -1, label = g^2 }\nrep e = seg(eps, k=1, e=0)\nrep s = seg(eps, k=2, e=-1/2)\nverify-main e\nverify-main s\n").unwrap();
    let rep = run(&spec, &Style::default());
    assert!(rep.ok(), "{}", rep.text);
}
