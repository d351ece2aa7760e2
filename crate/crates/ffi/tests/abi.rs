use qchrom_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn last_error() -> String {
    unsafe { CStr::from_ptr(qc_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { qc_string_free(p) };
    s
}

fn g18() -> *mut QcGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { qc_graph_generate(QcFamily::G18, 0, &mut g) }, QcStatus::Ok);
    g
}

#[test]
fn solves_g18_through_handles() {
    let g = g18();
    unsafe {
        assert_eq!((qc_graph_vertex_count(g), qc_graph_edge_count(g)), (18, 44));
        let mut value = 0;
        assert_eq!(qc_solve(g, QcParameter::Chromatic, 0, &mut value), QcStatus::Ok);
        assert_eq!(value, 5);
        assert_eq!(qc_solve(g, QcParameter::Clique, 0, &mut value), QcStatus::Ok);
        assert_eq!(value, 4);
        assert_eq!(
            qc_solve(g, QcParameter::Chromatic, 2, &mut value),
            QcStatus::Inconclusive
        );
        assert!(last_error().contains("budget"));
        qc_graph_free(g);
    }
}

#[test]
fn graph_text_round_trip() {
    let g = g18();
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(qc_graph_write(g, false, &mut text), QcStatus::Ok);
        let dimacs = CString::new(take_string(text)).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(qc_graph_parse(dimacs.as_ptr(), &mut h), QcStatus::Ok);
        assert_eq!(qc_graph_edge_count(h), 44);
        let bad = CString::new("p edge 2 1\ne 1 9\n").unwrap();
        let mut k = ptr::null_mut();
        assert_eq!(qc_graph_parse(bad.as_ptr(), &mut k), QcStatus::InvalidInput);
        assert!(k.is_null());
        qc_graph_free(g);
        qc_graph_free(h);
    }
}

#[test]
fn od_lift_certificate_verifies_and_round_trips() {
    let g = g18();
    let vectors =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/g18_vectors.json")).unwrap();
    let vectors = CString::new(vectors).unwrap();
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(
            qc_certificate_lift(g, QcLift::OrthogonalDesign, vectors.as_ptr(), &mut cert),
            QcStatus::Ok
        );
        assert_eq!(qc_certificate_colours(cert), 4);
        let mut worst = f64::NAN;
        assert_eq!(qc_certificate_verify(cert, 1e-9, &mut worst), QcStatus::Ok);
        assert!(worst <= 1e-12);
        let mut text = ptr::null_mut();
        assert_eq!(qc_certificate_write(cert, &mut text), QcStatus::Ok);
        let json = CString::new(take_string(text)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(qc_certificate_parse(json.as_ptr(), &mut back), QcStatus::Ok);
        assert_eq!(qc_certificate_verify(back, 1e-9, ptr::null_mut()), QcStatus::Ok);
        qc_certificate_free(cert);
        qc_certificate_free(back);
        qc_graph_free(g);
    }
}

#[test]
fn colourings_report_fail_and_null_pointers() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(qc_graph_generate(QcFamily::Cycle, 5, &mut g), QcStatus::Ok);
        let good = [0usize, 1, 0, 1, 2];
        let bad = [0usize, 1, 0, 1, 0];
        assert_eq!(qc_verify_colouring(g, good.as_ptr(), 5, 3), QcStatus::Ok);
        assert_eq!(qc_verify_colouring(g, bad.as_ptr(), 5, 3), QcStatus::Fail);
        assert!(last_error().contains("on edge (0,4)"), "{}", last_error());
        let mut cert = ptr::null_mut();
        assert_eq!(
            qc_certificate_classical(g, good.as_ptr(), 5, 3, &mut cert),
            QcStatus::Ok
        );
        assert_eq!(qc_certificate_verify(cert, 1e-9, ptr::null_mut()), QcStatus::Ok);
        assert_eq!(
            qc_certificate_classical(g, bad.as_ptr(), 5, 3, &mut cert),
            QcStatus::Fail
        );
        assert_eq!(
            qc_solve(ptr::null(), QcParameter::Clique, 0, ptr::null_mut()),
            QcStatus::NullPointer
        );
        assert_eq!(qc_graph_generate(QcFamily::Hadamard, 3, &mut g), QcStatus::InvalidInput);
        qc_certificate_free(cert);
        qc_graph_free(g);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/qchrom.h")).unwrap();
    for name in [
        "QcStatus",
        "QcGraph",
        "QcCertificate",
        "qc_solve",
        "qc_certificate_verify",
        "qc_last_error",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
