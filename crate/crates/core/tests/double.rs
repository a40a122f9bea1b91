use fbeta::catalog;
use fbeta::double::verify_skew_hopf;

#[test]
fn skew_pairing_on_every_double_instance() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        let rep = verify_skew_hopf(&inst, 2).unwrap();
        assert!(rep.all_pass(), "{name}:\n{}", rep.render_text());
    }
}

#[test]
fn double_certificate_on_every_double_instance() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        let d = fbeta::double::Double::new(&inst).unwrap();
        let rep = fbeta::double::verify_double(&d, 2).unwrap();
        assert!(rep.all_pass(), "{name}:\n{}", rep.render_text());
    }
}
