use std::fs;
use std::path::PathBuf;

use dirfac::construct_h::h_factorization;
use dirfac::error::Error;
use dirfac::io::{self, Format};
use dirfac::verifier::{certify_file, verify_mendelsohn, Code};

fn base_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/base")
}

#[test]
fn bundled_files_certify() {
    for m in [5, 7, 9, 11] {
        let r = certify_file(&base_dir().join(format!("m{m}.json"))).unwrap();
        assert!(r.is_ok(), "m={m}: {r}");
        assert_eq!(r.factors, 2 * m - 1);
    }
}

#[test]
fn truncated_file_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(base_dir().join("m5.json")).unwrap();
    let path = dir.path().join("cut.json");
    fs::write(&path, &text[..text.len() / 2]).unwrap();
    match certify_file(&path) {
        Err(Error::Parse { line, column, .. }) => assert!(line >= 1 && column > 0),
        other => panic!("{other:?}"),
    }
}

#[test]
fn wrong_length_field() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(base_dir().join("m5.json")).unwrap().replace("\"cycle_length\":5", "\"cycle_length\":10");
    let path = dir.path().join("len.json");
    fs::write(&path, text).unwrap();
    assert!(certify_file(&path).unwrap().has(Code::CycleLengthField));
}

#[test]
fn layered_files() {
    let dir = tempfile::tempdir().unwrap();
    let fac = h_factorization(7).unwrap();
    for format in [Format::Json, Format::Text] {
        let path = dir.path().join("h7");
        io::write_file(&path, &fac, format).unwrap();
        let r = certify_file(&path).unwrap();
        assert!(r.is_ok(), "{r}");
        assert_eq!(r.factors, 4);
        assert_eq!(io::read_file(&path).unwrap(), fac);
    }
    assert!(verify_mendelsohn(&fac).has(Code::MissingPair));
}

#[test]
fn missing_file() {
    assert!(matches!(certify_file(&base_dir().join("nope.json")), Err(Error::Io(_))));
}
