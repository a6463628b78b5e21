use z2fixed::classify::{generate_three, ThreePointStructure};
use z2fixed::cobordism::{tdks_f_hat, TdksVerdict};
use z2fixed::f2algebra::SymFnExpr;
use z2fixed::io::*;
use z2fixed::skeleton::builtin_rpn;
use z2fixed::Error;

const RP2: &str = r#"{"k":2,"n":2,"vertices":[
  {"label":"p","chars":["10","01"]},
  {"label":"q","chars":["10","11"]},
  {"label":"r","chars":["01","11"]}]}"#;

#[test]
fn loads_rp2() {
    let d = fixed_data_from_json(RP2).unwrap();
    assert_eq!((d.len(), d.n(), d.k()), (3, 2, 2));
    assert!(d.is_valid());
    assert_eq!(d.family(), builtin_rpn(2).unwrap().0.family());
}

#[test]
fn rejects_bad_files() {
    let zero = RP2.replace(r#"["10","01"]"#, r#"["00","10"]"#);
    let Err(Error::Input(msg)) = fixed_data_from_json(&zero) else {
        panic!("accepted a zero character")
    };
    assert!(msg.contains("vertices[0].chars[0]"), "{msg}");

    let long = RP2.replace(r#"["10","11"]"#, r#"["10","110"]"#);
    let Err(Error::Input(msg)) = fixed_data_from_json(&long) else {
        panic!("accepted a long bitstring")
    };
    assert!(msg.contains("vertices[1].chars[1]"), "{msg}");

    let short = RP2.replace(r#"["01","11"]"#, r#"["01"]"#);
    let Err(Error::Input(msg)) = fixed_data_from_json(&short) else {
        panic!("accepted a short vertex")
    };
    assert!(msg.contains("vertices[2].chars"), "{msg}");

    let Err(Error::Parse(msg)) = fixed_data_from_json("{\"k\":2,\n\"n\":}") else {
        panic!("accepted bad json")
    };
    assert!(msg.contains("line 2"), "{msg}");

    let extra = RP2.replace(r#""k":2"#, r#""k":2,"colour":1"#);
    assert!(matches!(fixed_data_from_json(&extra), Err(Error::Parse(_))));

    let dup = RP2.replace(r#""label":"q""#, r#""label":"p""#);
    assert!(matches!(fixed_data_from_json(&dup), Err(Error::Input(_))));
}

#[test]
fn store_load_is_identity_on_canonical_text() {
    let d = fixed_data_from_json(RP2).unwrap();
    let text = fixed_data_to_json(&d);
    assert_eq!(fixed_data_from_json(&text).unwrap(), d);
    assert_eq!(
        fixed_data_to_json(&fixed_data_from_json(&text).unwrap()),
        text
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rp2.json");
    store_fixed_data(&path, &d).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    assert_eq!(load_fixed_data(&path).unwrap(), d);
}

#[test]
fn skeleton_roundtrip() {
    let (_, g) = builtin_rpn(3).unwrap();
    let text = skeleton_to_json(&g);
    assert!(has_edges(&text));
    let back = skeleton_from_json(&text).unwrap();
    assert_eq!(back, g);
    assert_eq!(skeleton_to_json(&back), text);
    assert!(!has_edges(RP2));
    assert!(skeleton_from_json(RP2).is_err());
    let bad = text.replacen("\"u\": \"p0\"", "\"u\": \"nowhere\"", 1);
    assert!(matches!(skeleton_from_json(&bad), Err(Error::Input(m)) if m.contains("edges[0].u")));
}

#[test]
fn structures_and_verdicts() {
    let s = structure_from_json(r#"{"kind":"three","k":3,"ell":2,"basis":["100","010","001"]}"#)
        .unwrap();
    let Structure::Three(t) = &s else {
        panic!("wrong kind")
    };
    assert_eq!(t, &ThreePointStructure::standard(3, 2).unwrap());
    let text = structure_to_value(&s).to_string();
    assert_eq!(structure_from_json(&text).unwrap(), s);

    let f =
        structure_from_json(r#"{"kind":"four","k":3,"ell":0,"basis":["100","010","001"],"v":[1]}"#)
            .unwrap();
    assert_eq!(
        structure_from_json(&structure_to_value(&f).to_string()).unwrap(),
        f
    );
    assert!(structure_from_json(
        r#"{"kind":"four","k":3,"ell":0,"basis":["100","010","001"],"v":[3]}"#
    )
    .is_err());

    let d = generate_three(t).unwrap();
    let v = tdks_f_hat(&d, &SymFnExpr::one()).unwrap();
    assert_eq!(verdict_to_value(&v).to_string(), r#"{"polynomial":"0"}"#);
    let two = fixed_data_from_json(r#"{"k":2,"n":2,"vertices":[{"label":"a","chars":["10","01"]},{"label":"b","chars":["10","11"]}]}"#).unwrap();
    let w = tdks_f_hat(&two, &SymFnExpr::one()).unwrap();
    assert!(matches!(w, TdksVerdict::Witness { .. }));
    assert!(verdict_to_value(&w)["witness"]["form"].is_string());
}
