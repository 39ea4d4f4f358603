use super::*;
use std::collections::BTreeSet;

/// Every claim the registry must exercise, by label.
fn manifest() -> Vec<String> {
    let mut m: Vec<String> = (1..=168).map(|n| n.to_string()).collect();
    m.extend((1..=6).map(|n| format!("A.{n}")));
    m.extend((1..=10).map(|n| format!("B.{n}")));
    m.extend((1..=12).map(|n| format!("C.{n}")));
    m.extend((1..=15).map(|n| format!("D.{n}")));
    m
}

/// Expand a `paper_ref` string into individual labels. Tokens are
/// parenthesized labels like `(35)` or `(A.1)`; a `-` joining two
/// tokens denotes an inclusive range with a shared prefix.
fn parse_refs(s: &str) -> Vec<String> {
    let chars: Vec<char> = s.chars().collect();
    let mut tokens: Vec<(String, bool)> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '(' {
            let mut t = String::new();
            let mut j = i + 1;
            while j < chars.len() && chars[j] != ')' {
                t.push(chars[j]);
                j += 1;
            }
            let continues_range = i > 0 && chars[i - 1] == '-';
            tokens.push((t, continues_range));
            i = j + 1;
        } else {
            i += 1;
        }
    }
    let split = |t: &str| -> (String, u32) {
        match t.rfind('.') {
            Some(p) => (t[..=p].to_string(), t[p + 1..].parse().unwrap()),
            None => (String::new(), t.parse().unwrap()),
        }
    };
    let mut out = Vec::new();
    let mut k = 0;
    while k < tokens.len() {
        if k + 1 < tokens.len() && tokens[k + 1].1 {
            let (pre_a, lo) = split(&tokens[k].0);
            let (pre_b, hi) = split(&tokens[k + 1].0);
            assert_eq!(pre_a, pre_b, "range prefixes differ in {s}");
            for n in lo..=hi {
                out.push(format!("{pre_a}{n}"));
            }
            k += 2;
        } else {
            out.push(tokens[k].0.clone());
            k += 1;
        }
    }
    out
}

#[test]
fn catalog_is_well_formed() {
    let cat = catalog();
    assert!(cat.len() >= 40, "catalog has only {} identities", cat.len());
    let mut ids = BTreeSet::new();
    for rec in &cat {
        assert!(ids.insert(rec.id), "duplicate id {}", rec.id);
        assert!(rec.tolerance > 0.0, "{}: tolerance must be positive", rec.id);
        assert!(
            rec.sampler.fixed.len() + rec.sampler.random >= 5,
            "{}: needs at least 5 samples",
            rec.id
        );
        for p in &rec.sampler.fixed {
            assert_eq!(p.len(), rec.sampler.names.len(), "{}: fixed point arity", rec.id);
        }
        if rec.sampler.random > 0 {
            assert_eq!(rec.sampler.domain.len(), rec.sampler.names.len(), "{}: domain arity", rec.id);
        }
        if rec.policy == Policy::Discrepancy {
            assert!(!rec.alternates.is_empty(), "{}: discrepancy without candidates", rec.id);
        }
    }
    // every group has at least one record
    for g in 1..=20 {
        let prefix = format!("I-{g:02}");
        assert!(cat.iter().any(|r| r.id.starts_with(&prefix)), "no records in group {prefix}");
    }
}

#[test]
fn every_catalogued_claim_is_covered() {
    let cat = catalog();
    let mut covered: BTreeSet<String> = BTreeSet::new();
    for rec in &cat {
        for label in parse_refs(rec.paper_ref) {
            covered.insert(label);
        }
    }
    let missing: Vec<String> =
        manifest().into_iter().filter(|m| !covered.contains(m)).collect();
    assert!(missing.is_empty(), "uncovered claims: {missing:?}");
}

#[test]
fn ref_parser_expands_ranges() {
    assert_eq!(parse_refs("Eq. (35)"), vec!["35"]);
    assert_eq!(parse_refs("Eqs. (2)-(4)"), vec!["2", "3", "4"]);
    assert_eq!(
        parse_refs("Eqs. (93)-(94), (112)-(113)"),
        vec!["93", "94", "112", "113"]
    );
    assert_eq!(parse_refs("Eqs. (A.1)-(A.3)"), vec!["A.1", "A.2", "A.3"]);
}

#[test]
fn same_seed_gives_byte_identical_reports() {
    let r1 = run_suite(42, 1.0, Some("I-04"));
    let r2 = run_suite(42, 1.0, Some("I-04"));
    assert_eq!(r1.to_json(), r2.to_json());
    assert_eq!(r1.to_markdown(), r2.to_markdown());
    // a different seed moves the random draws
    let r3 = run_suite(43, 1.0, Some("I-04"));
    assert_ne!(r1.to_json(), r3.to_json());
}

#[test]
fn filters_select_prefixes_and_globs() {
    assert!(filter_matches("I-02a", Some("I-02")));
    assert!(filter_matches("I-02a", Some("I-0*")));
    assert!(!filter_matches("I-12a", Some("I-02")));
    assert!(filter_matches("I-12a", Some("I-1*")));
    assert!(filter_matches("anything", None));
    let sub = run_suite(7, 1.0, Some("I-05"));
    assert!(!sub.identities.is_empty());
    assert!(sub.identities.iter().all(|r| r.id.starts_with("I-05")));
}

#[test]
fn discrepancy_records_resolve_instead_of_failing() {
    let report = run_suite(11, 1.0, Some("I-05a"));
    assert_eq!(report.identities.len(), 1);
    let rec = &report.identities[0];
    assert_eq!(rec.status, Status::DiscrepancyResolved);
    assert!(rec.description.contains("resolution:"));
    assert!(rec.description.contains("as-implemented form matches"));
    assert!(rec.description.contains("deviates"));
    assert!(report.all_assert_passed());
}

#[test]
fn ambiguous_operator_record_names_the_matching_candidate() {
    let report = run_suite(11, 1.0, Some("I-11g"));
    let rec = &report.identities[0];
    assert_eq!(rec.status, Status::DiscrepancyResolved);
    assert!(rec.description.contains("as-implemented form matches"));
    assert!(rec.description.contains("'+' deviates") || rec.description.contains("+' deviates"));
    assert!(rec.description.contains("product deviates"));
}

#[test]
fn assert_identities_in_a_cheap_group_pass() {
    let report = run_suite(2024, 1.0, Some("I-04"));
    assert!(report.all_assert_passed(), "{}", report.to_markdown());
    for r in &report.identities {
        assert_eq!(r.status, Status::Pass, "{}: {}", r.id, r.description);
        assert!(r.samples.len() >= 5);
    }
}

#[test]
fn empty_report_is_valid_json_and_markdown() {
    let report = run_suite(1, 1.0, Some("ZZZ-no-match"));
    assert!(report.identities.is_empty());
    let json = report.to_json();
    serde_json::from_str::<serde_json::Value>(&json).expect("empty report must be valid JSON");
    let md = report.to_markdown();
    let rows = md.lines().filter(|l| l.starts_with("| I-")).count();
    assert_eq!(rows, 0);
}

#[test]
fn json_schema_has_the_contracted_fields() {
    let report = run_suite(5, 1.0, Some("I-05c"));
    let json = report.to_json();
    let v: serde_json::Value = serde_json::from_str(&json).expect("report must be valid JSON");
    assert_eq!(v["seed"], 5);
    assert!(v["tol_scale"].is_number());
    assert!(v["wall_ms"].is_number());
    let ids = v["identities"].as_array().unwrap();
    assert_eq!(ids.len(), report.identities.len());
    let rec = &ids[0];
    for field in ["id", "description", "paper_ref", "status", "tolerance", "samples"] {
        assert!(!rec[field].is_null(), "missing field {field}");
    }
    let sample = &rec["samples"].as_array().unwrap()[0];
    for field in ["inputs", "lhs", "rhs", "abs_err", "rel_err", "within_tol"] {
        assert!(!sample[field].is_null(), "missing sample field {field}");
    }
}

#[test]
fn markdown_has_one_row_per_identity() {
    let report = run_suite(5, 1.0, Some("I-01"));
    let md = report.to_markdown();
    let rows = md.lines().filter(|l| l.starts_with("| I-")).count();
    assert_eq!(rows, report.identities.len());
}

#[test]
fn tolerance_scaling_can_force_failures() {
    // at an absurdly tightened tolerance the quadrature-backed records fail,
    // and their failure is reported rather than raised
    let report = run_suite(9, 1e-12, Some("I-12a"));
    assert!(!report.all_assert_passed());
    assert_eq!(report.identities[0].status, Status::Fail);
}
