use fbeta::catalog;
use fbeta::double::{specialized_presentation, Double};

#[test]
fn every_preset_matches_its_printed_relations() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        let d = Double::new(&inst).unwrap();
        let out = specialized_presentation(&d).unwrap();
        assert!(out.report.all_pass(), "{name}:\n{}", out.report.render_text());
        assert!(!out.rendered.is_empty());
    }
}
