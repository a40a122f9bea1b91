use fbeta::catalog;
use fbeta::datum::{AlgebraInstance, Weight};
use fbeta::form::Form;
use fbeta::freealg::{FreeElem, Word};
use fbeta::twist::*;

fn half() -> Vec<AlgebraInstance> {
    catalog::half_instances()
        .into_iter()
        .map(|n| catalog::load(n).unwrap())
        .collect()
}

#[test]
fn printed_gamma_passes_on_every_preset() {
    for inst in half() {
        if inst.gamma.is_none() {
            continue;
        }
        let rep = verify_twist_iso(&inst, 4).unwrap();
        assert!(rep.all_pass(), "{}\n{}", inst.label, rep.render_lines());
        assert!(rep.get("twist.serre").is_some());
    }
}

#[test]
fn both_printed_gammas_pass_and_differ() {
    for name in ["a2-two-parameter", "b2-two-parameter", "a2-super", "b2-super"] {
        let printed = catalog::load_with_gamma(name, "printed").unwrap();
        let alternate = catalog::load_with_gamma(name, "alternate").unwrap();
        assert_ne!(printed.gamma, alternate.gamma, "{name}");
        for inst in [printed, alternate] {
            let rep = verify_twist_iso(&inst, 4).unwrap();
            assert!(rep.all_pass(), "{name}\n{}", rep.render_lines());
        }
    }
}

#[test]
fn canonical_gamma_passes() {
    for inst in half() {
        let inst = inst.with_gamma(inst.canonical_gamma());
        assert!(verify_twist_iso(&inst, 4).unwrap().all_pass(), "{}", inst.label);
    }
}

#[test]
fn reference_against_itself() {
    let inst = reference_instance(&catalog::load("b2-two-parameter").unwrap().datum);
    assert!(inst.validate().all_pass());
    assert!(verify_twist_iso(&inst, 4).unwrap().all_pass());
    assert_eq!(Form::new(&inst).graded_dim(&Weight::from_slice(&[3, 1])).unwrap(), 3);
}

#[test]
fn wrong_gamma_is_caught() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    // The transpose of a valid γ violates the twist condition when β ≠ 1.
    let bad = inst.with_gamma(inst.gamma_table().unwrap().transpose());
    let rep = verify_twist_iso(&bad, 3).unwrap();
    assert!(!rep.all_pass());
}

#[test]
fn star_is_associative() {
    for inst in half() {
        let words = Word::up_to_length(inst.rank(), 3);
        for x in &words {
            for y in &words {
                for z in &words {
                    if x.len() + y.len() + z.len() > 3 {
                        continue;
                    }
                    let (x, y, z) = (
                        FreeElem::word(x.clone()),
                        FreeElem::word(y.clone()),
                        FreeElem::word(z.clone()),
                    );
                    let l = star_mul(&star_mul(&x, &y, &inst).unwrap(), &z, &inst).unwrap();
                    let r = star_mul(&x, &star_mul(&y, &z, &inst).unwrap(), &inst).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn radical_is_a_star_ideal() {
    for inst in half() {
        let form = Form::new(&inst);
        for nu in Weight::of_height(2, 3) {
            let g = form.gram(&nu).unwrap();
            for k in &g.kernel_basis {
                for l in 0..2 {
                    let w = FreeElem::letter(l);
                    assert!(form.normal_form(&star_mul(k, &w, &inst).unwrap()).unwrap().is_zero());
                    assert!(form.normal_form(&star_mul(&w, k, &inst).unwrap()).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn reference_serre_coefficients_are_signed_binomials() {
    let inst = reference_instance(&catalog::load("a2-two-parameter").unwrap().datum);
    let d = twisted_serre(0, 1, &inst).unwrap();
    let two = fbeta::freealg::vi_binom(0, 2, 1, &inst);
    assert!(d.coeff(&Word::from_letters(&[1, 0, 0])).is_one());
    assert_eq!(d.coeff(&Word::from_letters(&[0, 1, 0])), two.neg());
    assert!(d.coeff(&Word::from_letters(&[0, 0, 1])).is_one());
}
