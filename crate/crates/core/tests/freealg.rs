use fbeta::catalog;
use fbeta::datum::{AlgebraInstance, CartanDatum, InstanceConfig, Unit};
use fbeta::freealg::*;
use fbeta::scalar::FieldElem;

fn a3_two_parameter() -> AlgebraInstance {
    InstanceConfig::parse(
        "preset two-parameter\nindex 1 2 3\n\
         dot 1 1 = 2\ndot 2 2 = 2\ndot 3 3 = 2\ndot 1 2 = -1\ndot 2 3 = -1\ndot 1 3 = 0\n\
         omega 1 1 = 1\nomega 2 2 = 1\nomega 3 3 = 1\n\
         omega 1 2 = -1\nomega 2 1 = 0\nomega 2 3 = -1\nomega 3 2 = 0\nomega 1 3 = 0\nomega 3 1 = 0\n",
    )
    .unwrap()
    .build()
    .unwrap()
}

fn rank2_instances() -> Vec<AlgebraInstance> {
    catalog::half_instances()
        .into_iter()
        .map(|n| catalog::load(n).unwrap())
        .collect()
}

#[test]
fn coproduct_is_multiplicative() {
    let mut cases = vec![(a3_two_parameter(), 5)];
    cases.extend(rank2_instances().into_iter().map(|i| (i, 4)));
    for (inst, len) in cases {
        let words = Word::up_to_length(inst.rank(), len);
        for x in &words {
            for y in &words {
                if x.len() + y.len() > len || x.is_empty() || y.is_empty() {
                    continue;
                }
                let (fx, fy) = (FreeElem::word(x.clone()), FreeElem::word(y.clone()));
                let lhs = coproduct_r(&fx.mul(&fy), &inst);
                let rhs = tensor_mul(&coproduct_r(&fx, &inst), &coproduct_r(&fy, &inst), &inst);
                assert_eq!(lhs, rhs, "{} {x} {y}", inst.label);
            }
        }
    }
}

#[test]
fn derivations_are_components_of_the_coproduct() {
    let mut insts = rank2_instances();
    insts.push(a3_two_parameter());
    for inst in insts {
        for w in Word::up_to_length(inst.rank(), 4) {
            let x = FreeElem::word(w.clone());
            let r = coproduct_r(&x, &inst);
            for i in 0..inst.rank() {
                let ri = r_right(i, &x, &inst);
                let ir = r_left(i, &x, &inst);
                for u in Word::up_to_length(inst.rank(), w.len().saturating_sub(1)) {
                    if u.len() + 1 != w.len() {
                        continue;
                    }
                    assert_eq!(r.coeff(&u, &Word::letter(i)), ri.coeff(&u), "{} {w}", inst.label);
                    assert_eq!(r.coeff(&Word::letter(i), &u), ir.coeff(&u), "{} {w}", inst.label);
                }
            }
        }
    }
}

#[test]
fn derivations_satisfy_twisted_leibniz() {
    let inst = catalog::load("b2-multi-super-II").unwrap();
    let words = Word::up_to_length(2, 3);
    for x in &words {
        for y in &words {
            let (fx, fy) = (FreeElem::word(x.clone()), FreeElem::word(y.clone()));
            let (wx, wy) = (x.weight(2), y.weight(2));
            for i in 0..2 {
                let ei = inst.datum.unit(i);
                let lhs = r_right(i, &fx.mul(&fy), &inst);
                let tw = inst.v_pow(-inst.datum.dot_w(&ei, &wy)).mul(&inst.beta(&ei, &wy));
                let rhs = r_right(i, &fx, &inst)
                    .mul(&fy)
                    .scale_unit(&tw)
                    .add(&fx.mul(&r_right(i, &fy, &inst)));
                assert_eq!(lhs, rhs);
                let lhs = r_left(i, &fx.mul(&fy), &inst);
                let tw = inst.v_pow(-inst.datum.dot_w(&ei, &wx)).mul(&inst.beta(&wx, &ei));
                let rhs = r_left(i, &fx, &inst)
                    .mul(&fy)
                    .add(&fx.mul(&r_left(i, &fy, &inst)).scale_unit(&tw));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn serre_elements_are_killed_by_all_derivations() {
    let mut insts = rank2_instances();
    insts.push(a3_two_parameter());
    for inst in insts {
        let n = inst.rank();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let d = serre_element(i, j, &inst).unwrap();
                let m = 1 - inst.datum.a(i, j);
                let expect = &inst.datum.unit(i).scale(m) + &inst.datum.unit(j);
                assert_eq!(d.weight(n), Some(expect));
                for l in 0..n {
                    assert!(r_left(l, &d, &inst).is_zero(), "{} l={l} D_{i}{j}", inst.label);
                    assert!(r_right(l, &d, &inst).is_zero(), "{} l={l} D_{i}{j}", inst.label);
                }
            }
        }
    }
}

#[test]
fn left_derivation_of_divided_powers() {
    for inst in rank2_instances() {
        for i in 0..2 {
            for n in 1..=5u32 {
                let lhs = r_left(i, &divided_power(i, n, &inst), &inst);
                let rhs = divided_power(i, n - 1, &inst).scale_unit(&inst.vi_pow(i, -(n as i64 - 1)));
                assert_eq!(lhs, rhs, "{} i={i} n={n}", inst.label);
            }
        }
    }
}

#[test]
fn serre_shapes() {
    let a1a1 = CartanDatum::from_matrix(vec![vec![2, 0], vec![0, 2]], None).unwrap();
    let mut inst = AlgebraInstance::reference(&a1a1);
    let t = fbeta::scalar::Param::free("t");
    inst.params.declare("t", fbeta::scalar::ParamKind::Free).unwrap();
    inst.beta = fbeta::datum::FormTable::from_fn(2, |i, j| match (i, j) {
        (0, 1) => Unit::param_int(t, 1),
        (1, 0) => Unit::param_int(t, -1),
        _ => Unit::one(),
    });
    // a_ij = 0: the terms k = 0, 1 give θ_jθ_i − β(i,j)^-1 θ_iθ_j
    let d = serre_element(0, 1, &inst).unwrap();
    let expect = FreeElem::word(Word::from_letters(&[1, 0]))
        .sub(&FreeElem::word(Word::from_letters(&[0, 1])).scale_unit(&Unit::param_int(t, -1)));
    assert_eq!(d, expect);
    for l in 0..2 {
        assert!(r_left(l, &d, &inst).is_zero());
    }
    assert!(serre_element(0, 0, &inst).is_err());

    let a2 = CartanDatum::from_matrix(vec![vec![2, -1], vec![-1, 2]], None).unwrap();
    let r = AlgebraInstance::reference(&a2);
    let d = serre_element(0, 1, &r).unwrap();
    let expect = divided_power(0, 2, &r)
        .mul(&FreeElem::letter(1))
        .sub(&FreeElem::word(Word::from_letters(&[0, 1, 0])))
        .add(&FreeElem::letter(1).mul(&divided_power(0, 2, &r)));
    assert_eq!(d, expect);
}

#[test]
fn small_values() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    assert_eq!(divided_power(0, 0, &inst), FreeElem::one());
    assert_eq!(divided_power(0, 1, &inst), FreeElem::letter(0));
    let two = inst.v_pow(1).to_field().add(&inst.v_pow(-1).to_field());
    assert_eq!(
        divided_power(1, 2, &inst),
        FreeElem::word(Word::from_letters(&[1, 1])).scale(&two.inv().unwrap())
    );
    // r_i(θ_jθ_i) = θ_j and ᵢr(θ_iθ_j) = θ_j
    for i in 0..2 {
        for j in 0..2 {
            let x = FreeElem::word(Word::from_letters(&[j, i]));
            if i != j {
                assert_eq!(r_right(i, &x, &inst), FreeElem::letter(j));
                let y = FreeElem::word(Word::from_letters(&[i, j]));
                assert_eq!(r_left(i, &y, &inst), FreeElem::letter(j));
            }
        }
    }
    // (1⊗θ_i)(θ_i⊗1) = v_i^-2 (θ_i⊗θ_i)
    let e = Word::empty;
    let a = Tensor2Elem::term(e(), Word::letter(1), FieldElem::one());
    let b = Tensor2Elem::term(Word::letter(1), e(), FieldElem::one());
    let p = tensor_mul(&a, &b, &inst);
    assert_eq!(
        p,
        Tensor2Elem::term(Word::letter(1), Word::letter(1), inst.vi_pow(1, -2).to_field())
    );
    // no twist when the left factor's right leg is empty
    let x = Tensor2Elem::term(Word::letter(0), e(), FieldElem::one());
    assert_eq!(
        tensor_mul(&x, &b, &inst),
        Tensor2Elem::term(Word::from_letters(&[0, 1]), e(), FieldElem::one())
    );
    assert_eq!(coproduct_r(&FreeElem::one(), &inst), Tensor2Elem::one());
}
