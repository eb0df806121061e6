mod common;

use common::{load, EXAMPLES};
use holofourier::model::{default_constructible, validate, ComponentKind, DescriptorFile};
use holofourier::report::{run, Command, RunConfig};
use holofourier::Error;

fn one_component(kind_fields: &str) -> String {
    format!(r#"{{"dim": 2, "components": [{{{}, "mult": 1}}]}}"#, kind_fields)
}

#[test]
fn shipped_descriptors_are_valid_and_round_trip() {
    for name in EXAMPLES {
        let f = load(name);
        assert!(validate(&f.descriptor).is_empty(), "{}", name);
        let again = DescriptorFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f, again, "{}", name);
    }
}

#[test]
fn quadric_file_parses() {
    let f = DescriptorFile::from_json(&one_component(r#""kind": "conormal_hypersurface", "poly": "z1^2+z2^2-1""#)).unwrap();
    assert_eq!(f.descriptor.dim, 2);
    assert!(matches!(f.descriptor.components[0].kind, ComponentKind::ConormalHypersurface { .. }));
    assert!(validate(&f.descriptor).is_empty());
}

#[test]
fn a23_cycle_has_a_doubled_point() {
    let f = load("a23");
    let c = &f.descriptor.components;
    assert_eq!(c.len(), 2);
    assert!(matches!(c[0].kind, ComponentKind::ConormalPoint { .. }));
    assert_eq!(c[0].mult, 2);
    assert!(matches!(&c[1].kind, ComponentKind::TorusConormal { matrix, .. } if matrix == &vec![vec![2, 3]]));
    assert_eq!(c[1].mult, 1);
}

#[test]
fn malformed_polynomial_reports_its_field() {
    let err = DescriptorFile::from_json(&one_component(r#""kind": "conormal_hypersurface", "poly": "z1^^2""#)).unwrap_err();
    match &err {
        Error::Parse { location, .. } => assert!(location.contains("components[0].poly"), "{}", location),
        e => panic!("unexpected {e:?}"),
    }
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn unknown_fields_and_kinds_are_parse_errors() {
    let extra = one_component(r#""kind": "zero_section", "colour": "red""#);
    assert!(matches!(DescriptorFile::from_json(&extra), Err(Error::Parse { .. })));
    let kind = one_component(r#""kind": "conormal_blob""#);
    assert!(matches!(DescriptorFile::from_json(&kind), Err(Error::Parse { .. })));
    assert!(matches!(DescriptorFile::from_json("{\"dim\": 2,"), Err(Error::Parse { .. })));
}

#[test]
fn non_squarefree_hypersurface_is_rejected() {
    let f = DescriptorFile::from_json(&one_component(r#""kind": "conormal_hypersurface", "poly": "(z1^2+z2^2-1)^2""#)).unwrap();
    let diags = validate(&f.descriptor);
    assert_eq!(diags.len(), 1);
    assert!(diags[0].reason.contains("squarefree"));
    let err = run(&f, &RunConfig::new(Command::Rank)).unwrap_err();
    assert!(matches!(err, Error::Invalid(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn structural_problems_are_diagnosed() {
    let cases = [
        (r#""kind": "torus_conormal", "matrix": [[2, 4]]"#, "lattice"),
        (r#""kind": "torus_conormal", "matrix": [[1, 0], [0, 1], [1, 1]]"#, "more rows"),
        (r#""kind": "conormal_linear", "poly": ["z1 + z2", "2*z1 + 2*z2"]"#, "dependent"),
        (r#""kind": "conormal_hypersurface", "poly": "3""#, "constant"),
    ];
    for (fields, needle) in cases {
        let f = DescriptorFile::from_json(&one_component(fields)).unwrap();
        let d = validate(&f.descriptor);
        assert!(d.iter().any(|x| x.reason.contains(needle)), "{} -> {:?}", fields, d);
    }
}

#[test]
fn torus_strata_need_their_weight() {
    let f = DescriptorFile::from_json(&one_component(r#""kind": "torus_conormal", "matrix": [[2, 3]]"#)).unwrap();
    assert!(matches!(default_constructible(&f.descriptor), Err(Error::WeightsRequired(_))));
    let m = default_constructible(&load("a23").descriptor).unwrap();
    assert_eq!(m.pieces.iter().map(|p| p.weight).collect::<Vec<_>>(), vec![0, -1]);
}
