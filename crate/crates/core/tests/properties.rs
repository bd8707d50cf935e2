use std::collections::BTreeSet;

use proptest::prelude::*;

use gjl_core::algebra::{residuum, tconorm, tnorm, wneg, wneg2, TruthValue};
use gjl_core::calculus::{check_proof, internalize, lift, project_proof, JCalculus, JLogic};
use gjl_core::gen::Generator;
use gjl_core::models::{eval, eval_star, EvidenceSpec, FiniteEvidence, Model};
use gjl_core::syntax::{forgetful_projection, JFormula, JustTerm};

fn value() -> impl Strategy<Value = TruthValue> {
    (1i64..13).prop_flat_map(|d| (0..=d).prop_map(move |n| TruthValue::ratio(n, d)))
}

fn logic() -> impl Strategy<Value = JLogic> {
    proptest::sample::select(JLogic::ALL.to_vec())
}

proptest! {
    #[test]
    fn residuum_is_adjoint_to_min(a in value(), b in value(), c in value()) {
        prop_assert_eq!(tnorm(&a, &b) <= c, a <= residuum(&b, &c));
    }

    #[test]
    fn lattice_laws(a in value(), b in value()) {
        prop_assert_eq!(tnorm(&a, &tconorm(&a, &b)), a.clone());
        prop_assert_eq!(tconorm(&a, &tnorm(&a, &b)), a.clone());
        prop_assert_eq!(residuum(&a, &b).is_one(), a <= b);
    }

    #[test]
    fn negations_are_crisp(a in value()) {
        prop_assert!(wneg(&a).is_crisp());
        prop_assert_eq!(wneg2(&a).is_one(), !a.is_zero());
    }

    /// Values of formulas stay inside the set of values the model uses.
    #[test]
    fn evaluation_stays_in_the_value_set(seed in any::<u64>(), vals in proptest::collection::vec(value(), 3)) {
        let mut g = Generator::new(seed);
        let f = g.jformula(5);
        let mut ev = FiniteEvidence::new(vals[0].clone());
        let mut keys = BTreeSet::new();
        f.holds_subformulas(&mut keys);
        for (t, p) in keys {
            if g.chance(0.5) {
                ev.set(t, p, vals[1].clone());
            }
        }
        let model = Model::new(EvidenceSpec::Finite(ev), g.valuation(&vals));
        let mut allowed: BTreeSet<TruthValue> = vals.into_iter().collect();
        allowed.insert(TruthValue::zero());
        allowed.insert(TruthValue::one());
        prop_assert!(allowed.contains(&eval(&model, &f).unwrap()));
        prop_assert!(allowed.contains(&eval_star(&model, &f).unwrap()));
    }

    #[test]
    fn lifted_proofs_check(seed in any::<u64>(), logic in logic(), hyps in 0usize..3) {
        let mut g = Generator::new(seed);
        let proof = g.proof(&JCalculus::total(logic), 8, hyps);
        let conclusion = check_proof(&proof).unwrap().conclusion;
        let terms: Vec<JustTerm> = (1..=hyps as u32).map(JustTerm::var).collect();
        let lifted = lift(&proof, &terms).unwrap();
        let checked = check_proof(&lifted.proof).unwrap();
        prop_assert_eq!(checked.conclusion, JFormula::holds(lifted.term.clone(), conclusion));
        if hyps == 0 {
            prop_assert_eq!(internalize(&proof).unwrap().term, lifted.term);
        }
    }

    #[test]
    fn projected_proofs_check(seed in any::<u64>(), logic in logic()) {
        prop_assume!(logic.modal_counterpart().is_some());
        let mut g = Generator::new(seed);
        let proof = g.proof(&JCalculus::total(logic), 8, 1);
        let conclusion = check_proof(&proof).unwrap().conclusion;
        let modal = project_proof(&proof).unwrap();
        prop_assert_eq!(check_proof(&modal).unwrap().conclusion, forgetful_projection(&conclusion));
    }
}
