mod common;

use common::{kostant, positive_roots};
use fbeta::catalog;
use fbeta::datum::{AlgebraInstance, FormTable, Unit, Weight};
use fbeta::form::*;
use fbeta::freealg::*;
use fbeta::scalar::{FieldElem, Param};
use fbeta::Error;

fn half() -> Vec<AlgebraInstance> {
    catalog::half_instances()
        .into_iter()
        .map(|n| catalog::load(n).unwrap())
        .collect()
}

fn gen_value(inst: &AlgebraInstance, i: usize) -> FieldElem {
    FieldElem::one().sub(&inst.vi_pow(i, -2).to_field()).inv().unwrap()
}

fn w(ls: &[usize]) -> FreeElem {
    FreeElem::word(Word::from_letters(ls))
}

#[test]
fn generator_and_length_two_values() {
    for inst in half() {
        let n = inst.rank();
        for i in 0..n {
            assert_eq!(pair(&w(&[i]), &w(&[i]), &inst), gen_value(&inst, i));
            for j in 0..n {
                if i == j {
                    assert!(pair(&w(&[i]), &w(&[(i + 1) % n]), &inst).is_zero());
                    continue;
                }
                let (ui, uj) = (Weight::unit(n, i), Weight::unit(n, j));
                let base = gen_value(&inst, i).mul(&gen_value(&inst, j));
                let a = inst.alpha(&ui, &uj);
                assert_eq!(pair(&w(&[i, j]), &w(&[i, j]), &inst), a.scale(&base));
                let twist = inst.v_pow(-inst.datum.dot(i, j)).mul(&inst.beta(&uj, &ui));
                assert_eq!(pair(&w(&[i, j]), &w(&[j, i]), &inst), a.mul(&twist).scale(&base));
            }
        }
    }
}

#[test]
fn form_is_symmetric_and_matches_the_coproduct_route() {
    for inst in half() {
        let form = Form::new(&inst);
        let n = inst.rank();
        for h in 0..=4 {
            for nu in Weight::of_height(n, h) {
                let words = Word::of_weight(&nu);
                for a in &words {
                    for b in &words {
                        let (x, y) = (FreeElem::word(a.clone()), FreeElem::word(b.clone()));
                        let p = form.pair(&x, &y);
                        assert_eq!(p, form.pair(&y, &x), "{} symmetry {a} {b}", inst.label);
                        assert_eq!(p, pair_oracle(&x, &y, &inst), "{} oracle {a} {b}", inst.label);
                    }
                }
            }
        }
        assert!(pair_oracle(&FreeElem::one(), &FreeElem::one(), &inst).is_one());
        assert!(pair_oracle(&w(&[0, 1]), &w(&[0, 0]), &inst).is_zero());
    }
}

#[test]
fn small_gram_blocks() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    let g = gram(&Weight::from_slice(&[1, 0]), &inst).unwrap();
    assert_eq!(g.matrix, vec![vec![gen_value(&inst, 0)]]);
    assert!(g.kernel_basis.is_empty());

    let g = gram(&Weight::from_slice(&[1, 1]), &inst).unwrap();
    assert_eq!(g.basis.len(), 2);
    assert_eq!(g.dim(), 2);
    assert!(g.kernel_basis.is_empty());

    let g = gram(&Weight::from_slice(&[2, 1]), &inst).unwrap();
    assert_eq!(g.basis.len(), 3);
    assert_eq!(g.dim(), 2);
    assert_eq!(g.kernel_basis.len(), 1);
    // The single radical vector is proportional to the Serre element.
    let d = serre_element(0, 1, &inst).unwrap();
    let k = &g.kernel_basis[0];
    let (w0, c0) = k.terms().next().unwrap();
    let ratio = d.coeff(w0).div(c0).unwrap();
    assert_eq!(k.scale(&ratio), d);
}

#[test]
fn gram_invariants_hold() {
    for inst in half() {
        let form = Form::new(&inst).with_height_bound(4);
        for h in 1..=4 {
            for nu in Weight::of_height(inst.rank(), h) {
                let g = form.gram(&nu).unwrap();
                let m = g.basis.len();
                assert_eq!(g.dim() + g.kernel_basis.len(), m);
                for r in 0..m {
                    for c in 0..m {
                        assert_eq!(g.matrix[r][c], g.matrix[c][r]);
                    }
                }
                for k in &g.kernel_basis {
                    for b in &g.basis {
                        assert!(
                            form.pair(k, &FreeElem::word(b.clone())).is_zero(),
                            "{} {nu}",
                            inst.label
                        );
                    }
                }
                // Quotient words come first among independent rows: each is
                // a basis prefix choice made greedily.
                for q in &g.quotient_basis {
                    assert!(g.is_quotient_word(q));
                    assert_eq!(
                        form.normal_form(&FreeElem::word(q.clone())).unwrap(),
                        FreeElem::word(q.clone())
                    );
                }
            }
        }
    }
}

#[test]
fn quotient_basis_is_greedy_in_term_order() {
    let inst = catalog::load("b2-multi-parameter").unwrap();
    let g = gram(&Weight::from_slice(&[2, 2]), &inst).unwrap();
    // Brute force: a word is in the quotient basis iff its Gram column is
    // independent of those of all earlier words, tested by the rank of the
    // leading principal column sets through the same elimination.
    let params: Vec<Param> = inst.params.iter().collect();
    let norm = NormalizedPairing::new(&inst);
    let mut chosen = Vec::new();
    for (k, b) in g.basis.iter().enumerate() {
        let cols: Vec<usize> = chosen.iter().copied().chain([k]).collect();
        let m: Vec<Vec<_>> = g
            .basis
            .iter()
            .map(|a| cols.iter().map(|&c| norm.words(a, &g.basis[c])).collect())
            .collect();
        if column_relations(&m, &params).unwrap().pivots.len() == cols.len() {
            chosen.push(k);
        }
        let _ = b;
    }
    let expect: Vec<Word> = chosen.iter().map(|&k| g.basis[k].clone()).collect();
    assert_eq!(g.quotient_basis, expect);
}

#[test]
fn serre_elements_lie_in_the_radical() {
    for inst in half() {
        let form = Form::new(&inst);
        for (i, j) in [(0, 1), (1, 0)] {
            let cert = form.serre_in_radical(i, j).unwrap();
            assert!(cert.holds(), "{} D_{i}{j}", inst.label);
            assert_eq!(cert.pairings.len(), Word::of_weight(&cert.weight).len());
            let d = serre_element(i, j, &inst).unwrap();
            assert!(form.normal_form(&d).unwrap().is_zero());
        }
        let reference = AlgebraInstance::reference(&inst.datum);
        assert!(serre_in_radical(0, 1, &reference).unwrap().holds());
    }
}

#[test]
fn perturbed_beta_breaks_the_serre_relation() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    let d = serre_element(0, 1, &inst).unwrap();
    let mut params = inst.params.clone();
    let z = params.declare("z", fbeta::scalar::ParamKind::Free).unwrap();
    let beta = FormTable::from_fn(2, |i, j| match (i, j) {
        (0, 1) => Unit::param_int(z, 1),
        (1, 0) => Unit::param_int(z, -1),
        _ => Unit::one(),
    });
    let perturbed = AlgebraInstance::new(
        "perturbed",
        inst.datum.clone(),
        params,
        beta,
        inst.alpha.clone(),
        None,
        None,
    )
    .unwrap();
    let cert = Form::new(&perturbed).radical_certificate(&d).unwrap();
    assert!(!cert.holds());
}

#[test]
fn radical_is_a_two_sided_ideal() {
    for inst in half() {
        let form = Form::new(&inst);
        let d = serre_element(0, 1, &inst).unwrap();
        let nd = d.weight(2).unwrap();
        for k in 0..2 {
            for x in Word::of_weight(&nd.add_unit(k, 1)) {
                let x = FreeElem::word(x);
                let left = w(&[k]).mul(&d);
                let right = d.mul(&w(&[k]));
                let base = form.normal_form(&x).unwrap();
                assert_eq!(form.normal_form(&x.add(&left)).unwrap(), base, "{}", inst.label);
                assert_eq!(form.normal_form(&x.add(&right)).unwrap(), base, "{}", inst.label);
            }
        }
    }
}

#[test]
fn derivations_preserve_the_radical() {
    for inst in half() {
        let form = Form::new(&inst);
        for h in 2..=4 {
            for nu in Weight::of_height(2, h) {
                let g = form.gram(&nu).unwrap();
                for k in &g.kernel_basis {
                    for l in 0..2 {
                        assert!(form.normal_form(&r_right(l, k, &inst)).unwrap().is_zero());
                        assert!(form.normal_form(&r_left(l, k, &inst)).unwrap().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn nonzero_classes_have_a_nonzero_derivative() {
    for inst in half() {
        let form = Form::new(&inst);
        for h in 1..=4 {
            for nu in Weight::of_height(2, h) {
                let g = form.gram(&nu).unwrap();
                // Every quotient word and every sum of two of them is nonzero
                // in the quotient, so some r_i must survive.
                let mut xs: Vec<FreeElem> = g.quotient_basis.iter().map(|q| FreeElem::word(q.clone())).collect();
                for a in 0..g.quotient_basis.len() {
                    for b in a + 1..g.quotient_basis.len() {
                        xs.push(xs[a].add(&xs[b]));
                    }
                }
                for x in xs {
                    assert!(!form.normal_form(&x).unwrap().is_zero());
                    let survives = (0..2).any(|i| !form.normal_form(&r_right(i, &x, &inst)).unwrap().is_zero());
                    assert!(survives, "{} {nu}", inst.label);
                }
            }
        }
    }
}

#[test]
fn dimensions_match_root_counts_and_the_reference() {
    for inst in half() {
        let roots = positive_roots(&inst.datum);
        let reference = AlgebraInstance::reference(&inst.datum);
        let (form, rform) = (Form::new(&inst), Form::new(&reference));
        for h in 1..=4 {
            for nu in Weight::of_height(2, h) {
                let d = form.graded_dim(&nu).unwrap();
                assert_eq!(d, kostant(&roots, &nu), "{} {nu}", inst.label);
                assert_eq!(d, rform.graded_dim(&nu).unwrap());
            }
        }
    }
    let inst = catalog::load("a2-two-parameter").unwrap();
    assert_eq!(graded_dim(&Weight::from_slice(&[1, 1]), &inst).unwrap(), 2);
    assert_eq!(graded_dim(&Weight::from_slice(&[2, 1]), &inst).unwrap(), 2);
    for k in 1..=6 {
        assert_eq!(graded_dim(&Weight::from_slice(&[k, 0]), &inst).unwrap(), 1);
    }
}

#[test]
fn height_bound_is_enforced() {
    let inst = catalog::load("a2-two-parameter").unwrap();
    let err = gram(&Weight::from_slice(&[4, 3]), &inst).unwrap_err();
    assert!(matches!(err, Error::ResourceLimit(_)));
    let err = Form::new(&inst)
        .with_height_bound(2)
        .graded_dim(&Weight::from_slice(&[2, 1]));
    assert!(matches!(err, Err(Error::ResourceLimit(_))));
}

#[test]
fn disk_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let inst = catalog::load("b2-multi-super-I").unwrap();
    let nu = Weight::from_slice(&[3, 1]);
    let fresh = Form::new(&inst).with_cache_dir(dir.path()).gram(&nu).unwrap();
    let path = cache::path_for(dir.path(), &inst, &nu);
    assert!(path.exists());
    let loaded = cache::load(dir.path(), &inst, &nu).unwrap();
    assert_eq!(loaded.basis, fresh.basis);
    assert_eq!(loaded.matrix, fresh.matrix);
    assert_eq!(loaded.quotient_basis, fresh.quotient_basis);
    assert_eq!(loaded.kernel_basis, fresh.kernel_basis);
    let other = catalog::load("b2-two-parameter").unwrap();
    assert!(cache::load(dir.path(), &other, &nu).is_none());
}
