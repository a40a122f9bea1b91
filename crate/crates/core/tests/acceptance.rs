//! Acceptance suite: one `ACCEPTANCE <n> PASS|FAIL` line per criterion,
//! each with its own oracle and time budget. Exits nonzero if any fails.

mod common;

use std::cell::RefCell;
use std::time::{Duration, Instant};

use common::{kostant, positive_roots};
use fbeta::catalog;
use fbeta::datum::{AlgebraInstance, Unit, Weight};
use fbeta::double::{
    specialized_presentation, verify_double, verify_g_cocycle, verify_skew_hopf, Double, DoubleElem, DoubleMono, Torus,
};
use fbeta::form::{pair_oracle, Form};
use fbeta::freealg::{r_left, r_right, serre_element, FreeElem, Word};
use fbeta::report::Report;
use fbeta::scalar::FieldElem;
use fbeta::twist::{reference_instance, verify_twist_iso};

type Outcome = Result<String, String>;

/// Title, time budget in seconds, and the check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn load(names: Vec<&str>) -> Vec<AlgebraInstance> {
    names.into_iter().map(|n| catalog::load(n).unwrap()).collect()
}

fn half() -> Vec<AlgebraInstance> {
    load(catalog::half_instances())
}

fn doubles() -> Vec<AlgebraInstance> {
    load(catalog::double_instances())
}

fn fail_first(what: &str, bad: &[String], total: usize) -> Outcome {
    match bad.first() {
        None => Ok(format!("{total} {what}")),
        Some(first) => Err(format!("{} of {total} {what} fail, first {first}", bad.len())),
    }
}

/// Checks of `rep` whose id starts with one of `prefixes`.
fn select(label: &str, rep: &Report, prefixes: &[&str], bad: &mut Vec<String>) -> usize {
    let mut n = 0;
    for c in rep
        .checks
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
    {
        n += 1;
        if !c.pass {
            bad.push(format!("{label} {} {}", c.id, c.detail));
        }
    }
    n
}

fn quantum_int(inst: &AlgebraInstance, i: usize, k: i64) -> FieldElem {
    let num = inst.vi_pow(i, k).to_field().sub(&inst.vi_pow(i, -k).to_field());
    let den = inst.vi_pow(i, 1).to_field().sub(&inst.vi_pow(i, -1).to_field());
    num.div(&den).unwrap()
}

/// `θ_i^n / [n]_{v_i}!` built from quantum integers.
fn divided(inst: &AlgebraInstance, i: usize, n: usize) -> FreeElem {
    let fact = (1..=n as i64).fold(FieldElem::one(), |f, k| f.mul(&quantum_int(inst, i, k)));
    FreeElem::word(Word::from_letters(&vec![i; n])).scale(&fact.inv().unwrap())
}

fn c1_generator_value() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half() {
        let form = Form::new(&inst);
        for i in 0..inst.rank() {
            total += 1;
            let want = FieldElem::one().sub(&inst.vi_pow(i, -2).to_field()).inv().unwrap();
            let x = FreeElem::word(Word::letter(i));
            if form.pair(&x, &x) != want {
                bad.push(format!("{} i={i}", inst.label));
            }
        }
    }
    fail_first("generator pairings on A2 and B2 under every preset", &bad, total)
}

fn c2_dual_route() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half() {
        let form = Form::new(&inst);
        for h in 0..=4 {
            for nu in Weight::of_height(inst.rank(), h) {
                let words = Word::of_weight(&nu);
                for a in &words {
                    for b in &words {
                        total += 1;
                        let (x, y) = (FreeElem::word(a.clone()), FreeElem::word(b.clone()));
                        if form.pair(&x, &y) != pair_oracle(&x, &y, &inst) {
                            bad.push(format!("{} {a} {b}", inst.label));
                        }
                    }
                }
            }
        }
    }
    fail_first("word pairs of height ≤ 4 agree with the coproduct route", &bad, total)
}

fn c3_serre() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half() {
        let form = Form::new(&inst);
        let n = inst.rank();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                total += 1;
                let d = serre_element(i, j, &inst).unwrap();
                let killed = (0..n).all(|l| r_left(l, &d, &inst).is_zero() && r_right(l, &d, &inst).is_zero());
                if !form.serre_in_radical(i, j).unwrap().holds() || !killed {
                    bad.push(format!("{} {}", inst.label, inst.pair_label(i, j)));
                }
            }
        }
    }
    fail_first(
        "Serre elements in the radical and killed by every derivation",
        &bad,
        total,
    )
}

fn c4_divided_powers() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half() {
        for i in 0..inst.rank() {
            for n in 1..=5 {
                total += 1;
                let lhs = r_left(i, &divided(&inst, i, n), &inst);
                let rhs = divided(&inst, i, n - 1).scale_unit(&inst.vi_pow(i, -(n as i64 - 1)));
                if lhs != rhs {
                    bad.push(format!("{} i={i} n={n}", inst.label));
                }
            }
        }
    }
    fail_first("derivations of divided powers, n ≤ 5", &bad, total)
}

fn c5_dims() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half() {
        let a2 = inst.datum.a(0, 1) == -1 && inst.datum.a(1, 0) == -1;
        let height = if a2 { 5 } else { 4 };
        let reference = reference_instance(&inst.datum);
        let (form, rform) = (Form::new(&inst), Form::new(&reference));
        let roots = positive_roots(&inst.datum);
        for h in 1..=height {
            for nu in Weight::of_height(inst.rank(), h) {
                total += 1;
                let d = form.graded_dim(&nu).unwrap();
                let r = rform.graded_dim(&nu).unwrap();
                let ok = d == r && (!a2 || d == kostant(&roots, &nu));
                if !ok {
                    bad.push(format!("{} ν = {nu}: {d} versus reference {r}", inst.label));
                }
            }
        }
        if a2 {
            total += 1;
            let twos = [[1, 1], [2, 1]].map(|c| form.graded_dim(&Weight::from_slice(&c)).unwrap());
            if twos != [2, 2] {
                bad.push(format!("{} dims at i+j and 2i+j are {twos:?}", inst.label));
            }
        }
    }
    fail_first(
        "graded dimensions (A2 to height 5 with root counts, B2 to 4)",
        &bad,
        total,
    )
}

fn c6_twist() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    let mut run = |label: String, inst: &AlgebraInstance| {
        total += 1;
        let rep = verify_twist_iso(inst, 4).unwrap();
        if !rep.all_pass() {
            bad.push(format!("{label}: {}", rep.failures().next().unwrap().detail));
        }
    };
    for inst in half() {
        if inst.gamma.is_some() {
            run(format!("{} printed γ", inst.label), &inst);
        }
        run(
            format!("{} canonical γ", inst.label),
            &inst.with_gamma(inst.canonical_gamma()),
        );
    }
    for name in ["a2-two-parameter", "b2-two-parameter", "a2-super", "b2-super"] {
        let inst = catalog::load_with_gamma(name, "alternate").unwrap();
        run(format!("{name} alternate γ"), &inst);
    }
    fail_first("twist isomorphism runs at height 4", &bad, total)
}

fn c7_refinement() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for inst in half().into_iter().chain(doubles()).filter(|i| i.xi.is_some()) {
        total += 1;
        let rep = verify_g_cocycle(&inst, 4).unwrap();
        if let Some(c) = rep.failures().next() {
            bad.push(format!("{} {} {}", inst.label, c.id, c.detail));
        }
        let weights = (1..=4).flat_map(|h| Weight::of_height(inst.rank(), h));
        for nu in weights {
            let want = match inst.label.as_str() {
                "two-parameter" => Unit::one(),
                "super" => {
                    let p: i64 = (0..inst.rank())
                        .map(|i| inst.datum.parity_of(i) as i64 * nu.coeffs()[i])
                        .sum();
                    Unit::param_int(inst.params.get("t").unwrap(), p * p)
                }
                _ => continue,
            };
            if inst.g_refine(&nu).unwrap() != want {
                bad.push(format!("{} closed form at ν = {nu}", inst.label));
            }
        }
    }
    fail_first(
        "instances: cocycle at height ≤ 4, closed forms for two-parameter and super",
        &bad,
        total,
    )
}

fn c8_skew_pairing() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for inst in doubles() {
        let rep = verify_skew_hopf(&inst, 3).unwrap();
        cases += select(&inst.label, &rep, &["skew."], &mut bad);
    }
    fail_first(
        "checks at length ≤ 3 on the five doubles (coproduct axioms dressed by single torus generators)",
        &bad,
        cases,
    )
}

/// `F_jE_i` predicted by the cross-relation display.
fn display_f_e(inst: &AlgebraInstance, i: usize, j: usize) -> DoubleElem {
    let n = inst.rank();
    let (ui, uj) = (inst.datum.unit(i), inst.datum.unit(j));
    let xi = inst.xi(&uj, &ui).unwrap();
    let mut want = DoubleElem::mono(DoubleMono {
        e: Word::letter(i),
        t: Torus::one(n),
        f: Word::letter(j),
    })
    .scale_unit(&xi);
    if i == j {
        let mut k_jp = vec![0; 4 * n];
        k_jp[i] = 1;
        k_jp[3 * n + i] = 1;
        let mut j_kp = vec![0; 4 * n];
        j_kp[n + i] = 1;
        j_kp[2 * n + i] = 1;
        let den = inst.vi_pow(i, -1).to_field().sub(&inst.vi_pow(i, 1).to_field());
        let c = xi.to_field().div(&den).unwrap();
        let tori =
            DoubleElem::torus(Torus::from_exponents(n, &k_jp)).sub(&DoubleElem::torus(Torus::from_exponents(n, &j_kp)));
        want = want.add(&tori.scale(&c));
    }
    want
}

thread_local! {
    static DOUBLE_REPORTS: RefCell<Vec<(String, Report)>> = const { RefCell::new(Vec::new()) };
}

fn double_reports() -> Vec<(String, Report)> {
    DOUBLE_REPORTS.with(|r| {
        if r.borrow().is_empty() {
            for inst in doubles() {
                let d = Double::new(&inst).unwrap();
                r.borrow_mut().push((inst.label.clone(), verify_double(&d, 2).unwrap()));
            }
        }
        r.borrow().clone()
    })
}

fn c9_double() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for (label, rep) in double_reports() {
        cases += select(&label, &rep, &["double.", "pbw."], &mut bad);
    }
    for inst in doubles() {
        let d = Double::new(&inst).unwrap();
        let n = inst.rank();
        for i in 0..n {
            for j in 0..n {
                cases += 1;
                let got = d.mul(&DoubleElem::f(j, n), &DoubleElem::e(i, n)).unwrap();
                if got != display_f_e(&inst, i, j) {
                    bad.push(format!("{} F_jE_i at {}", inst.label, inst.pair_label(i, j)));
                }
            }
        }
    }
    fail_first(
        "checks: pairing route on words ≤ 2, confluence, cross-relation display",
        &bad,
        cases,
    )
}

fn c10_hopf() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for (label, rep) in double_reports() {
        cases += select(&label, &rep, &["hopf."], &mut bad);
    }
    fail_first(
        "Hopf-axiom checks on generators and length-2 products (timed with 9)",
        &bad,
        cases,
    )
}

fn c11_presentations() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for inst in doubles() {
        let d = Double::new(&inst).unwrap();
        let out = specialized_presentation(&d).unwrap();
        cases += select(&inst.label, &out.report, &["preset."], &mut bad);
    }
    fail_first(
        "checks: printed relation tables and generator maps of the five presets",
        &bad,
        cases,
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("generator pairing value", 1, c1_generator_value),
        ("dual-route form agreement", 120, c2_dual_route),
        ("Serre membership", 60, c3_serre),
        ("divided-power derivation", 5, c4_divided_powers),
        ("graded dimensions", 300, c5_dims),
        ("twist isomorphism", 300, c6_twist),
        ("quadratic refinement", 10, c7_refinement),
        ("skew-Hopf pairing", 300, c8_skew_pairing),
        ("double consistency", 120, c9_double),
        ("Hopf axioms on the double", 120, c10_hopf),
        ("specialized presentations", 120, c11_presentations),
    ];
    let mut failed = 0;
    for (k, (title, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        let (pass, detail) = match outcome {
            Ok(d) if !over => (true, d),
            Ok(d) => (false, format!("{d}, but over budget")),
            Err(d) => (false, d),
        };
        failed += !pass as usize;
        println!(
            "ACCEPTANCE {:>2} {} {title}: {detail} [{:.2}s of {budget}s]",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    println!("{} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
