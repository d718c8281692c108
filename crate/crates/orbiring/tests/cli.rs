use orbiring::cli::run_captured;
use orbiring::FiniteGradedAlgebra;

#[test]
fn inertial_presentation_text_golden() {
    let (code, out, err) = run_captured(&["inertial", "--weights", "2,1,1", "--mode", "hyper"]);
    assert_eq!((code, err.as_str()), (0, ""));
    assert_eq!(
        out,
        "ring Z[u, a0..a1] mode=HYPER weights=2,1,1 order=2\n\
         a0*a0 = 1 u^0 a0\n\
         a0*a1 = 1 u^0 a1\n\
         a1*a1 = 1 u^4 a0\n"
    );
}

#[test]
fn single_product_query() {
    let (code, out, _) = run_captured(&[
        "inertial", "--weights", "2", "--mode", "symplectic", "--order", "3", "--product", "1,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 u^1 a2\n");
}

#[test]
fn cr_json_round_trips() {
    let (code, out, _) =
        run_captured(&["cr", "--weights", "4,2,3", "--mode", "hyper", "--format", "json"]);
    assert_eq!(code, 0);
    let algebra = FiniteGradedAlgebra::from_json_str(out.trim()).unwrap();
    assert_eq!(algebra.to_json_string(), out.trim());
    assert_eq!(algebra.dim(), 4 + 2 + 3);
}

#[test]
fn runs_are_deterministic() {
    for args in [
        vec!["cr", "--weights", "6,10,15", "--mode", "hyper", "--format", "json"],
        vec!["present", "--weights", "2,1,1", "--mode", "hyper"],
        vec!["check", "--seed", "11", "--trials", "20", "--max-n", "4"],
        vec!["inertial", "--weights", "3,6", "--mode", "symplectic", "--format", "latex"],
    ] {
        let first = run_captured(&args);
        let second = run_captured(&args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
}

#[test]
fn present_golden() {
    let (code, out, _) = run_captured(&["present", "--weights", "2,1,1", "--mode", "hyper"]);
    assert_eq!(code, 0);
    assert!(out.contains("J:\nu1 - u2\nu0 - 2*u2\n"));
    assert!(out.contains("K:\na0*(2 u0)(1 u1)(1 u2)\na1*(2 u0)\n"));
}

#[test]
fn rep_homotopy_verb() {
    let (code, out, _) = run_captured(&["rep-homotopy", "--weights", "1", "--weights-b", "1,0,0"]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, out, _) = run_captured(&["rep-homotopy", "--weights", "2", "--weights-b", ""]);
    assert_eq!((code, out.as_str()), (0, "false\n"));
}

#[test]
fn compare_json_schema() {
    let (code, out, _) = run_captured(&[
        "compare", "--weights", "2,1,1", "--mode", "symplectic", "--weights-b", "2,1,1",
        "--mode-b", "hyper", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "DISTINGUISHED");
    assert_eq!(v["witness"]["invariant"], "hilbert");
    assert_eq!(v["witness"]["at"], "2");
    assert_eq!(v["witness"]["values"], serde_json::json!([2, 1]));

    let (_, out, _) = run_captured(&[
        "compare", "--weights", "1,1", "--mode", "symplectic", "--weights-b", "1,1",
        "--mode-b", "hyper", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "INDISTINGUISHABLE");
    assert!(v["witness"].is_null());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["cr", "--weights", "2,oops"],
        vec!["cr"],
        vec!["unknown-verb"],
        vec!["cr", "--weights", "2,1", "--unknown-flag"],
        vec!["check", "--trials", "3"], // no seed anywhere
    ] {
        std::env::remove_var(orbiring::cli::SEED_ENV_VAR);
        let (code, _, err) = run_captured(&args);
        assert_eq!(code, 2, "args {args:?} gave {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn domain_errors_exit_3_with_name() {
    let cases = [
        (vec!["cr", "--weights", "2,0,1", "--mode", "hyper"], "PositivityRequired"),
        (vec!["cr", "--weights", "2,1,1", "--order", "4"], "OrderMismatch"),
        (vec!["present", "--weights", "-2,1"], "PositivityRequired"),
        (vec!["inertial", "--weights", "-2,1"], "ClosedFormInapplicable"),
    ];
    for (args, name) in cases {
        let (code, _, err) = run_captured(&args);
        assert_eq!(code, 3, "args {args:?}");
        assert!(err.contains(name), "missing `{name}` in `{err}`");
    }
}

#[test]
fn integral_mode_is_tagged() {
    let (code, out, _) = run_captured(&[
        "cr", "--weights", "2,1,1", "--mode", "symplectic", "--integral", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"], "Z-conjectural");
    assert_eq!(v["kernel_generators"], serde_json::json!([[0, "2", 3], [1, "2", 1]]));

    let (_, text, _) =
        run_captured(&["cr", "--weights", "2,1,1", "--mode", "symplectic", "--integral"]);
    assert!(text.contains("CONJECTURAL"));
    assert!(text.contains("[2 u^3 a0]"));
}

#[test]
fn latex_formats_render() {
    let (code, out, _) =
        run_captured(&["cr", "--weights", "2,1,1", "--mode", "symplectic", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(out.contains("\\mathbb{Q}[u, \\alpha_{1}]"));
    assert!(out.contains("\\alpha_{1} \\alpha_{1} - u^{2} \\alpha_{0}"));
    assert!(out.contains("u^{3}"));
    let (code, out, _) =
        run_captured(&["present", "--weights", "2,1,1", "--mode", "hyper", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(out.contains("\\mathcal{I}"));
    assert!(out.contains("\\mathcal{J}"));
    assert!(out.contains("\\mathcal{K}"));
}

#[test]
fn check_reports_each_suite() {
    let (code, out, _) =
        run_captured(&["check", "--seed", "3", "--trials", "8", "--max-n", "3", "--suite", "oracle"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("check suite=oracle trials=8 seed=3"));
    assert!(out.contains("suite oracle: ok"));
    assert!(out.trim_end().ends_with("all properties hold"));
}
