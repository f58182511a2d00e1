mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use rmsynth::{
    cost_fixed, cost_mixed, fprm_transform, peephole_cancel, pprm_transform, run_circuit,
    synth_fprm, synth_mixed, synth_pprm, BasisState, Circuit, Gate, Polarity,
};

fn same_action(a: &Circuit, b: &Circuit) -> bool {
    assert_eq!(a.width(), b.width());
    (0..1u64 << a.width()).all(|s| {
        let s = BasisState::new(a.width(), s).unwrap();
        run_circuit(a, s).unwrap() == run_circuit(b, s).unwrap()
    })
}

#[test]
fn gate_counts_follow_cost_model() {
    let mut rng = common::rng(21);
    for i in 0..800 {
        let n = 1 + i % 8;
        let f = common::random_function(&mut rng, n);
        let p = Polarity::new(n, rng.random_range(0..1u32 << n)).unwrap();
        let e = fprm_transform(&f, p).unwrap();
        let cost = cost_fixed(&e);
        assert_eq!(synth_fprm(&e).unwrap().len(), cost.total);
        assert_eq!(cost.total, cost.m + 2 * cost.k);
        assert!(cost.k <= cost.k_declared && cost.k_declared <= n);

        let m = common::random_mixed(&mut rng, n);
        let cost = cost_mixed(&m);
        assert_eq!(synth_mixed(&m).unwrap().len(), cost.total);
        assert_eq!(cost.total, cost.m + 2 * cost.l);
    }
}

#[test]
fn shuffled_pprm_bodies_are_equivalent() {
    let mut rng = common::rng(22);
    for i in 0..200 {
        let n = 1 + i % 6;
        let f = common::random_function(&mut rng, n);
        let c = synth_pprm(&pprm_transform(&f)).unwrap();
        let mut gates = c.gates().to_vec();
        gates.shuffle(&mut rng);
        let shuffled = Circuit::with_gates(c.width(), gates).unwrap();
        assert!(same_action(&c, &shuffled));
    }
}

#[test]
fn inputs_are_restored() {
    let mut rng = common::rng(23);
    for i in 0..300 {
        let n = 1 + i % 6;
        let f = common::random_function(&mut rng, n);
        let p = Polarity::new(n, rng.random_range(0..1u32 << n)).unwrap();
        let circuits = [
            synth_fprm(&fprm_transform(&f, p).unwrap()).unwrap(),
            synth_mixed(&common::random_mixed(&mut rng, n)).unwrap(),
        ];
        for c in &circuits {
            for a in 0..1u64 << n {
                let out = run_circuit(c, BasisState::new(n + 1, a).unwrap()).unwrap();
                assert_eq!(out.bits() & ((1 << n) - 1), a);
            }
        }
    }
}

#[test]
fn peephole_preserves_semantics_and_is_idempotent() {
    let mut rng = common::rng(24);
    for _ in 0..300 {
        let width = rng.random_range(1..=5);
        let len = rng.random_range(0..14);
        let gates: Vec<Gate> = (0..len)
            .map(|_| {
                let target = rng.random_range(0..width);
                let controls = if rng.random_bool(0.6) {
                    0
                } else {
                    rng.random_range(0..1u64 << width) & !(1 << target)
                };
                Gate::from_mask(controls, target).unwrap()
            })
            .collect();
        let c = Circuit::with_gates(width, gates).unwrap();
        let p = peephole_cancel(&c);
        assert!(p.len() <= c.len());
        assert!(same_action(&c, &p));
        assert_eq!(peephole_cancel(&p), p);
    }

    // mixed circuits with shared literals shrink; fixed-polarity ones never grow
    let e = rmsynth::parse_expression("~x0*x1 ^ ~x0*x2 ^ ~x0", Some(3)).unwrap();
    let c = synth_mixed(&e).unwrap();
    let p = peephole_cancel(&c);
    assert_eq!((c.len(), p.len()), (9, 5));
    assert!(same_action(&c, &p));
}
