//! Seeded generators for terms, formulas, valuations and proofs.
//!
//! Everything is driven by a ChaCha8 stream, so a seed fixes the output on
//! every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::TruthValue;
use crate::calculus::{
    bind_antecedent, instantiate, AxiomScheme, Bindings, FMeta, JCalculus, JLogic, JProof,
    ProofBuilder, TMeta,
};
use crate::models::Valuation;
use crate::syntax::{JFormula, JustTerm, MFormula};

/// The grid `{0, 1/2, 1}`.
pub fn coarse_grid() -> Vec<TruthValue> {
    vec![
        TruthValue::zero(),
        TruthValue::ratio(1, 2),
        TruthValue::one(),
    ]
}

#[derive(Debug, Clone)]
pub struct Generator {
    rng: ChaCha8Rng,
    /// Atoms are drawn from `p1..=p{atoms}`.
    pub atoms: u32,
    pub vars: u32,
    pub consts: u32,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            atoms: 3,
            vars: 3,
            consts: 2,
        }
    }

    pub fn with_alphabet(mut self, atoms: u32, vars: u32, consts: u32) -> Self {
        self.atoms = atoms.max(1);
        self.vars = vars.max(1);
        self.consts = consts.max(1);
        self
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n.max(1))
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items
            .choose(&mut self.rng)
            .expect("pick from an empty slice")
    }

    fn atom_index(&mut self) -> u32 {
        self.rng.gen_range(1..=self.atoms)
    }

    pub fn term(&mut self, depth: usize) -> JustTerm {
        if depth == 0 || self.chance(0.4) {
            return if self.chance(0.6) {
                JustTerm::var(self.rng.gen_range(1..=self.vars))
            } else {
                JustTerm::constant(self.rng.gen_range(1..=self.consts))
            };
        }
        match self.below(4) {
            0 => JustTerm::sum(self.term(depth - 1), self.term(depth - 1)),
            1 => JustTerm::app(self.term(depth - 1), self.term(depth - 1)),
            2 => JustTerm::bang(self.term(depth - 1)),
            _ => JustTerm::query(self.term(depth - 1)),
        }
    }

    pub fn jformula(&mut self, depth: usize) -> JFormula {
        if depth == 0 || self.chance(0.25) {
            return if self.chance(0.85) {
                JFormula::atom(self.atom_index())
            } else {
                JFormula::Bottom
            };
        }
        match self.below(4) {
            0 => JFormula::implies(self.jformula(depth - 1), self.jformula(depth - 1)),
            1 => JFormula::and(self.jformula(depth - 1), self.jformula(depth - 1)),
            2 => JFormula::neg(self.jformula(depth - 1)),
            _ => {
                let t = self.term(depth.min(2) - 1);
                JFormula::holds(t, self.jformula(depth - 1))
            }
        }
    }

    pub fn mformula(&mut self, depth: usize) -> MFormula {
        if depth == 0 || self.chance(0.25) {
            return if self.chance(0.85) {
                MFormula::atom(self.atom_index())
            } else {
                MFormula::Bottom
            };
        }
        match self.below(4) {
            0 => MFormula::implies(self.mformula(depth - 1), self.mformula(depth - 1)),
            1 => MFormula::and(self.mformula(depth - 1), self.mformula(depth - 1)),
            2 => MFormula::neg(self.mformula(depth - 1)),
            _ => MFormula::boxed(self.mformula(depth - 1)),
        }
    }

    pub fn value(&mut self, grid: &[TruthValue]) -> TruthValue {
        self.pick(grid).clone()
    }

    /// A valuation with an explicit grid value for every atom in the alphabet.
    pub fn valuation(&mut self, grid: &[TruthValue]) -> Valuation {
        let mut v = Valuation::constant(self.value(grid));
        for k in 1..=self.atoms {
            v = v.with(k, self.value(grid));
        }
        v
    }

    /// Fills every metavariable not yet bound.
    fn complete(&mut self, mut b: Bindings<JFormula>, depth: usize) -> Bindings<JFormula> {
        for m in [FMeta::Phi, FMeta::Psi, FMeta::Chi] {
            if b.formula(m).is_none() {
                b.formulas.insert(m, self.jformula(depth));
            }
        }
        for m in [TMeta::T, TMeta::S] {
            if b.term(m).is_none() {
                b.terms.insert(m, self.term(1));
            }
        }
        b
    }

    /// A random instance of one of the logic's justification schemes.
    pub fn axiom_instance(&mut self, logic: JLogic, depth: usize) -> (AxiomScheme, JFormula) {
        let schemes: Vec<AxiomScheme> = logic.schemes().collect();
        let scheme = *self.pick(&schemes);
        let b = self.complete(Bindings::new(), depth);
        (
            scheme,
            instantiate(scheme, &b).expect("complete bindings instantiate"),
        )
    }

    /// `c_n:...:c_1:A` for a random axiom instance `A` and `1 <= n <= max_len`.
    pub fn cs_chain(&mut self, logic: JLogic, max_len: usize) -> JFormula {
        let (_, mut f) = self.axiom_instance(logic, 1);
        for _ in 0..self.rng.gen_range(1..=max_len.max(1)) {
            f = JFormula::holds(JustTerm::constant(self.rng.gen_range(1..=self.consts)), f);
        }
        f
    }

    /// A proof of at most `max_lines` lines from `hypotheses` random
    /// hypotheses. Steps are axiom instances, constant-specification chains
    /// (total specifications only), and modus ponens against an axiom whose
    /// antecedent is an earlier line.
    pub fn proof(&mut self, calc: &JCalculus, max_lines: usize, hypotheses: usize) -> JProof {
        let hyps: Vec<JFormula> = (0..hypotheses).map(|_| self.jformula(2)).collect();
        let mut b = ProofBuilder::with_hypotheses(calc.clone(), hyps);
        for k in 1..=hypotheses.min(max_lines) {
            b.assume(k);
        }
        let schemes: Vec<AxiomScheme> = calc.logic.schemes().collect();
        while b.len() < max_lines {
            let room = max_lines - b.len();
            let roll = self.below(10);
            if b.is_empty() || room == 1 || roll < 3 {
                if calc.cs.is_total() && roll == 0 {
                    let chain = self.cs_chain(calc.logic, 2);
                    b.cs(chain);
                } else {
                    let (scheme, f) = self.axiom_instance(calc.logic, 2);
                    b.axiom_formula(scheme, f);
                }
                continue;
            }
            let line = self.rng.gen_range(1..=b.len());
            let alpha = b.formula(line).clone();
            let usable: Vec<(AxiomScheme, Bindings<JFormula>)> = schemes
                .iter()
                .filter_map(|s| bind_antecedent(*s, &alpha).map(|bd| (*s, bd)))
                .collect();
            let Some((scheme, bd)) = usable.choose(&mut self.rng).cloned() else {
                continue;
            };
            let bd = self.complete(bd, 1);
            let f = instantiate(scheme, &bd).expect("complete bindings instantiate");
            let ax = b.axiom_formula(scheme, f);
            b.mp(ax, line);
        }
        b.finish()
    }
}
