use graytts::base::BaseLibrary;
use graytts::doubling::{construct_2v1, construct_2v2};
use graytts::ppc::{find_ppc, plan_attach, ppc_lower_bound};
use graytts::spectrum::{build, build_range, hamilton_path_exists, hamilton_path_witness, replay, route, Rule, VerdictStatus};
use graytts::tripling::{construct_3v, construct_3v1, construct_3v3};
use graytts::{validate_tts, verify_certificate, Error, HamiltonCertificate, TripleSystem};

fn base(v: u32) -> (TripleSystem, HamiltonCertificate) {
    BaseLibrary::get(v).unwrap()
}

fn check(ts: &TripleSystem, cert: &HamiltonCertificate, v: u32) {
    assert_eq!(ts.order(), v);
    assert_eq!(ts.block_count() as u32, v * (v - 1) / 3);
    assert!(validate_tts(ts).is_simple_tts());
    assert!(verify_certificate(ts, cert).unwrap());
}

#[test]
fn doubling_examples() {
    let (ts, cert) = base(7);
    let out = construct_2v1(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 15);
    let (ts, cert) = base(10);
    let out = construct_2v1(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 21);

    let (ts, cert) = base(7);
    let out = construct_2v2(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 16);
    assert_eq!(out.design.block_count(), 80);
    let (ts, cert) = base(13);
    let out = construct_2v2(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 28);
    assert_eq!(out.design.block_count(), 252);
    let (ts, cert) = base(10);
    assert!(matches!(construct_2v2(&ts, &cert), Err(Error::OrderOutOfRange { .. })));
}

#[test]
fn tripling_examples() {
    let (ts, cert) = base(4);
    let out = construct_3v(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 12);

    let (ts, cert) = base(7);
    let out = construct_3v1(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 22);
    assert_eq!(out.design.block_count(), 154);
    let out = construct_3v3(&ts, &cert).unwrap();
    check(&out.design, &out.certificate, 24);
    assert_eq!(out.design.block_count(), 184);

    let (ts, cert) = base(9);
    let out = construct_3v1(&ts, &cert).unwrap();
    assert_eq!(out.design.block_count(), 252);
    let out = construct_3v3(&ts, &cert).unwrap();
    assert_eq!(out.design.block_count(), 290);

    let (ts, cert) = base(4);
    assert!(construct_3v1(&ts, &cert).is_err());
    let (ts, cert) = base(10);
    assert!(construct_3v3(&ts, &cert).is_err());
}

#[test]
fn ppc_examples() {
    assert_eq!(ppc_lower_bound(16).unwrap(), 4);
    assert_eq!(ppc_lower_bound(7).unwrap(), 2);
    assert_eq!(ppc_lower_bound(9).unwrap(), 2);
    let (ts, _) = base(7);
    assert!(find_ppc(&ts, 2).unwrap().len() >= 2);
    assert!(matches!(find_ppc(&ts, 3), Err(Error::TargetTooLarge { .. })));
    let built = build(16).unwrap();
    assert!(find_ppc(&built.design, 4).unwrap().len() >= 4);
    let (ts, cert) = base(13);
    let plan = plan_attach(&ts, &cert).unwrap();
    assert_eq!(plan.pi.len() as u32, (2 * 13 + 1) / 3);
}

#[test]
fn spectrum_examples() {
    assert!(build(4).unwrap().trace.children.is_empty());
    assert_eq!(build(6).unwrap_err(), Error::NotConstructible(6));
    assert_eq!(build(5).unwrap_err(), Error::NotAdmissible(5));
    let b22 = build(22).unwrap();
    assert_eq!((b22.trace.rule, b22.trace.input_order), (Rule::TriplePlusOne, Some(7)));
    let b100 = build(100).unwrap();
    assert_eq!((b100.trace.rule, b100.trace.input_order), (Rule::DoublePlusTwo, Some(49)));

    let verdicts = build_range(3, 24);
    let constructed: Vec<u32> = verdicts.iter().filter(|v| v.status == VerdictStatus::Constructed).map(|v| v.order).collect();
    assert_eq!(constructed, vec![4, 7, 9, 10, 12, 13, 15, 16, 18, 19, 21, 22, 24]);
    let impossible: Vec<u32> = verdicts.iter().filter(|v| v.status == VerdictStatus::NotConstructible).map(|v| v.order).collect();
    assert_eq!(impossible, vec![3, 6]);
    assert!(verdicts.iter().all(|v| v.is_ok()));
    assert_eq!(build_range(6, 6)[0].status, VerdictStatus::NotConstructible);
}

#[test]
fn traces_replay_exactly() {
    for v in [12, 16, 22, 24, 28, 40, 64, 100] {
        let built = build(v).unwrap();
        let (ts, cert) = replay(&built.trace).unwrap();
        assert_eq!(ts.blocks(), built.design.blocks(), "v = {v}");
        assert_eq!(cert, built.certificate, "v = {v}");
        let steps = built.trace.steps();
        assert_eq!(steps.first().unwrap().0, Rule::Base);
        assert_eq!(steps.last().unwrap().1, v);
        assert_eq!(route(v).unwrap().map(|r| r.0), Some(built.trace.rule));
    }
}

#[test]
fn hamilton_paths() {
    assert!(!hamilton_path_exists(3));
    assert!(!hamilton_path_exists(5));
    assert!(hamilton_path_exists(6));
    assert!(hamilton_path_exists(12));
    let (ts, path) = hamilton_path_witness(6).unwrap();
    assert_eq!(path.len(), 10);
    let blocks = ts.blocks();
    assert!(path.windows(2).all(|w| blocks[w[0]].intersection_size(&blocks[w[1]]) == 2));
}

#[test]
fn broken_certificate_is_rejected() {
    let (ts, cert) = base(18);
    let mut order = cert.order().to_vec();
    order.swap(3, 40);
    assert!(!verify_certificate(&ts, &HamiltonCertificate::new(order)).unwrap());
    let short = HamiltonCertificate::new(cert.order()[1..].to_vec());
    assert!(verify_certificate(&ts, &short).is_err());
}
