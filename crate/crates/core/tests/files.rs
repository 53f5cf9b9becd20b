use a2zeta_core::builders::{q2_presentation, q2_trivial_complex, q2_z3_complex, TrianglePresentation};
use a2zeta_core::complex::{parse_complex, serialize_complex, validate};
use a2zeta_core::cover::{build_cover, CoverSpec};
use a2zeta_core::group::Perm;
use a2zeta_core::lfun::{self, LReport, ReportData};
use a2zeta_core::rep::{natural_representation, regular_representation, Representation, RepresentationData};

#[test]
fn complex_round_trip() {
    let z3 = q2_z3_complex();
    let cover = build_cover(&CoverSpec::natural(&z3)).unwrap().complex;
    for c in [q2_trivial_complex(), z3, cover] {
        let text = serialize_complex(&c);
        let back = parse_complex(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(serialize_complex(&back), text);
    }
}

#[test]
fn presentation_round_trip() {
    let t = q2_presentation();
    let data = t.to_data();
    let json = serde_json::to_string(&data).unwrap();
    let back = TrianglePresentation::from_data(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back.triples(), t.triples());
    assert_eq!(back.lambda(), t.lambda());
}

#[test]
fn representation_round_trip() {
    let g = q2_z3_complex().group().clone();
    for rho in [Representation::trivial(g.clone()), natural_representation(&g), regular_representation(&g)] {
        let json = serde_json::to_string(&rho.to_data()).unwrap();
        let data: RepresentationData = serde_json::from_str(&json).unwrap();
        let back = Representation::from_data(&data).unwrap();
        assert_eq!(back.dim(), rho.dim());
        for e in g.elements() {
            assert_eq!(back.matrix(back.group().elem(g.perm(e)).unwrap()), rho.matrix(e));
        }
    }
    let bad = r#"{"group": {"degree": 3, "generators": {"a": [1, 2, 0]}}, "rep": {"type": "matrix"}}"#;
    let data: RepresentationData = serde_json::from_str(bad).unwrap();
    assert!(Representation::from_data(&data).is_err());
}

#[test]
fn report_round_trip() {
    let c = q2_z3_complex();
    let r = lfun::compute_l(&c, &natural_representation(c.group())).unwrap();
    let v = vec![lfun::check_main_identity(&r)];
    let data = r.to_data(&v);
    assert_eq!(data.checks["main_identity"], true);
    let json = serde_json::to_string(&data).unwrap();
    let back: ReportData = serde_json::from_str(&json).unwrap();
    assert_eq!(back, data);
    assert_eq!(LReport::from_data(&back).unwrap(), r);
}

#[test]
fn one_sheet_cover_is_the_base() {
    let c = q2_z3_complex();
    let spec = CoverSpec {
        base: &c,
        action: c.group().generators().iter().map(|(l, _)| (l.clone(), Perm::identity(1))).collect(),
    };
    let cover = build_cover(&spec).unwrap();
    assert_eq!(cover.sheets, 1);
    // the stabiliser gets its own generator labels; everything else matches
    assert!(cover.complex.group().same_elements(c.group()));
    let (a, b) = (cover.complex.to_data(), c.to_data());
    assert_eq!(a.vertices, b.vertices);
    assert_eq!(a.edges, b.edges);
    assert_eq!(a.chambers, b.chambers);
    assert_eq!(a.edge_out, b.edge_out);
    assert_eq!(a.chamber_out, b.chamber_out);
    let rho = natural_representation(c.group());
    let rho_cover = natural_representation(cover.complex.group());
    assert_eq!(lfun::compute_l(&cover.complex, &rho_cover).unwrap(), lfun::compute_l(&c, &rho).unwrap());
}

#[test]
fn cover_counts() {
    let cover = build_cover(&CoverSpec::natural(&q2_z3_complex())).unwrap();
    assert_eq!(cover.sheets, 3);
    assert_eq!(cover.complex.counts(), [3, 21, 21]);
    assert_eq!(cover.complex.euler_characteristic(), 3);
    assert!(validate(&cover.complex).passed());
}
