use fbeta::catalog;
use fbeta::datum::{preset, presets, AlgebraInstance, CartanDatum, FormTable, InstanceConfig, Unit, Weight};
use fbeta::scalar::Param;
use fbeta::Error;
use proptest::prelude::*;

fn weights_up_to(rank: usize, h: i64) -> Vec<Weight> {
    (0..=h).flat_map(|k| Weight::of_height(rank, k)).collect()
}

#[test]
fn every_shipped_instance_validates() {
    for name in catalog::half_instances().into_iter().chain(catalog::double_instances()) {
        let inst = catalog::load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        let rep = inst.validate();
        assert!(rep.all_pass(), "{name}\n{}", rep.render_lines());
        assert!(inst.gamma.is_some(), "{name}");
    }
}

#[test]
fn every_gamma_variant_validates() {
    for name in catalog::half_instances() {
        let cfg = catalog::config(name).unwrap();
        let p = preset(cfg.preset.as_deref().unwrap()).unwrap();
        for v in p.gamma_variants().iter().chain(&["canonical"]) {
            let inst = catalog::load_with_gamma(name, v).unwrap();
            assert!(inst.validate().all_pass(), "{name} {v}");
        }
    }
}

#[test]
fn double_instances_carry_xi() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        assert!(inst.xi.is_some(), "{name}");
    }
    assert!(catalog::load("a2-multi-super-I").unwrap().xi.is_none());
}

#[test]
fn custom_invalid_names_the_failing_pair() {
    let inst = catalog::load("a2-custom-invalid").unwrap();
    let rep = inst.validate();
    let c = rep.get("validate.beta-skew").unwrap();
    assert!(!c.pass);
    assert!(c.detail.contains("(1,2)"), "{}", c.detail);
}

#[test]
fn gamma_identically_one_fails_when_beta_is_not() {
    let base = catalog::load("a2-two-parameter").unwrap();
    let inst = base.with_gamma(FormTable::trivial(2));
    assert!(!inst.validate().get("validate.gamma-twist").unwrap().pass);
}

#[test]
fn two_parameter_canonical_gamma() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    let t = inst.params.get("t").unwrap();
    let g = inst.canonical_gamma();
    // γ(2,1) = β(1,2) = t^(Ω_21 − Ω_12) = t
    assert!(g.get(0, 1).is_one());
    assert_eq!(*g.get(1, 0), Unit::param_int(t, 1));
    assert!(inst.with_gamma(g).validate().all_pass());
    assert!(AlgebraInstance::reference(&inst.datum).canonical_gamma().is_trivial());
}

#[test]
fn super_bracket_closed_form() {
    for name in ["a2-super", "b2-super"] {
        let inst = catalog::load(name).unwrap();
        let t = inst.params.get("t").unwrap();
        let v = inst.v();
        for i in 0..2 {
            for j in 0..2 {
                let (wi, wj) = (inst.datum.unit(i), inst.datum.unit(j));
                let dot = inst.datum.dot(i, j);
                let expect = Unit::param_int(v, -dot).mul(&Unit::param_int(t, dot));
                assert_eq!(inst.bracket(&wi, &wj).unwrap(), expect);
                assert_eq!(inst.bracket(&wi, &wj).unwrap(), inst.bracket(&wj, &wi).unwrap());
            }
        }
    }
}

#[test]
fn bracket_is_bimultiplicative() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        let ws = weights_up_to(2, 2);
        for nu in &ws {
            assert!(inst.bracket(nu, &inst.datum.zero_weight()).unwrap().is_one());
            for a in &ws {
                for b in &ws {
                    let lhs = inst.bracket(nu, a).unwrap().mul(&inst.bracket(nu, b).unwrap());
                    assert_eq!(lhs, inst.bracket(nu, &(a + b)).unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn trivial_forms_give_plain_bracket() {
    let d = CartanDatum::from_matrix(vec![vec![2, -1], vec![-1, 2]], None).unwrap();
    let inst = AlgebraInstance::reference(&d);
    let (a, b) = (d.unit(0), d.unit(1));
    assert_eq!(inst.bracket(&a, &b).unwrap(), inst.v_pow(1));
    assert!(inst.g_refine(&Weight::from_slice(&[3, 2])).unwrap().is_one());
}

#[test]
fn g_refine_cocycle_and_closed_forms() {
    for name in catalog::double_instances() {
        let inst = catalog::load(name).unwrap();
        let p = preset(&inst.label).unwrap();
        let ws = weights_up_to(2, 4);
        for a in &ws {
            let ga = inst.g_refine(a).unwrap();
            assert_eq!(Some(ga.clone()), p.g_closed_form(&inst, a), "{name} {a}");
            for b in &ws {
                let lhs = inst.g_refine(&(a + b)).unwrap();
                let rhs = ga.mul(&inst.g_refine(b).unwrap()).mul(&inst.xi(b, a).unwrap());
                assert_eq!(lhs, rhs, "{name} {a} {b}");
            }
        }
    }
}

#[test]
fn preset_side_conditions_are_enforced() {
    let mut cfg = catalog::config("a2-two-parameter").unwrap();
    cfg.input.set_int("omega", 0, 1, -2);
    match cfg.build() {
        Err(Error::Config(m)) => assert!(m.contains("Ω_ij + Ω_ji"), "{m}"),
        other => panic!("{other:?}"),
    }
    let mut cfg = catalog::config("a2-multi-parameter").unwrap();
    let v = cfg.params().get("v").unwrap();
    cfg.input.set_entry("q", 0, 0, Unit::param_int(v, -4));
    assert!(matches!(cfg.build(), Err(Error::Config(_))));
    // the A2 datum with i·i = 2 cannot carry the super forms
    let src = "preset super\nindex 1 2\ndot 1 1 = 2\ndot 1 2 = -1\ndot 2 2 = 2\nparity 1 = 1\nparity 2 = 1\n";
    assert!(InstanceConfig::parse(src).unwrap().build().is_err());
}

#[test]
fn multi_parameter_gamma_uses_square_roots() {
    let inst = catalog::load("a2-multi-parameter").unwrap();
    let q = inst.params.get("q[1,2]").unwrap();
    let g = inst.gamma.as_ref().unwrap();
    assert_eq!(*g.get(1, 0), Unit::param_pow(q, num_rational::Rational64::new(1, 2)));
}

#[test]
fn config_errors_carry_positions() {
    let src = "index 1 2\ndot 1 1 = 2\ndot 1 2 = -1\ndot 2 2 = 2\nbeta 1 2 = 1 + w\n";
    match InstanceConfig::parse(src) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (5, 16)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        InstanceConfig::parse("preset nope\n"),
        Err(Error::Parse { line: 1, .. })
    ));
}

#[test]
fn registry_lists_five_presets() {
    let names: Vec<_> = presets().iter().map(|p| p.name()).collect();
    assert_eq!(
        names,
        [
            "two-parameter",
            "super",
            "multi-parameter",
            "multi-super-I",
            "multi-super-II"
        ]
    );
}

fn random_beta() -> impl Strategy<Value = (Vec<i64>, usize)> {
    (prop::collection::vec(-3i64..=3, 3), 2usize..=3)
}

proptest! {
    #[test]
    fn canonical_gamma_always_satisfies_twist_condition((ex, n) in random_beta()) {
        let dot = if n == 2 {
            vec![vec![2, -1], vec![-1, 2]]
        } else {
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        };
        let d = CartanDatum::from_matrix(dot, None).unwrap();
        let r = AlgebraInstance::reference(&d);
        let t = Param::free("t");
        let mut params = r.params.clone();
        params.declare("t", fbeta::scalar::ParamKind::Free).unwrap();
        // β(i,j) = t^{e_ij} for i < j, inverse below the diagonal
        let e = |i: usize, j: usize| ex[(i + j) % 3] * if i < j { 1 } else { -1 };
        let beta = FormTable::from_fn(n, |i, j| if i == j { Unit::one() } else { Unit::param_int(t, e(i, j)) });
        let inst = AlgebraInstance::new("custom", d, params, beta.clone(), beta, None, None).unwrap();
        let inst = inst.with_gamma(inst.canonical_gamma());
        prop_assert!(inst.validate().all_pass());
    }
}
