use monideal::{parse_ideal, verify_paper, Emit, RingContext, VerifyOptions};

#[test]
fn full_suite_passes() {
    let report = verify_paper(&VerifyOptions::default()).unwrap();
    print!("{}", report.emit_text());
    assert!(report.all_passed());
    assert!(report.items.len() >= 10);
}

#[test]
fn threaded_run_keeps_order() {
    let seq = verify_paper(&VerifyOptions::default()).unwrap();
    let par = verify_paper(&VerifyOptions { threads: 4, ..VerifyOptions::default() }).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn corrupted_example_names_its_item() {
    let ring = RingContext::new(["x", "y", "z"]).unwrap();
    let corrupted = parse_ideal(&ring, "(x^3, x*y^2, y^3)").unwrap();
    let report = verify_paper(&VerifyOptions {
        example_override: Some(corrupted),
        threads: 1,
    })
    .unwrap();
    let failed: Vec<_> = report.failures().collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].anchor.starts_with("example ideal witness"));
    println!("{}", failed[0].detail);
}
