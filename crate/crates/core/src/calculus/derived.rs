//! Fixed derivations in the propositional fragment, usable in any calculus.

use super::proof::ProofBuilder;
use super::schemes::{AxiomScheme, Bindings};
use super::system::ProofSystem;
use crate::syntax::Formula;

/// Derives `theta -> theta` in five lines and returns the last line.
pub fn identity<S: ProofSystem>(b: &mut ProofBuilder<S>, theta: &S::Formula) -> usize {
    let th = || theta.clone();
    let dup = S::Formula::mk_and(th(), th());
    let l1 = b.axiom(AxiomScheme::G4, Bindings::new().phi(th()));
    let l2 = b.axiom(AxiomScheme::A2, Bindings::new().phi(th()).psi(th()));
    let l3 = b.axiom(
        AxiomScheme::A1,
        Bindings::new().phi(th()).psi(dup).chi(th()),
    );
    let l4 = b.mp(l3, l1);
    b.mp(l4, l2)
}

/// From lines `a -> b` and `b -> c`, derives `a -> c`.
pub fn chain<S: ProofSystem>(b: &mut ProofBuilder<S>, first: usize, second: usize) -> usize {
    let (a, mid) = b
        .formula(first)
        .as_implies()
        .expect("first premise must be an implication");
    let (a, mid) = (a.clone(), mid.clone());
    let (_, c) = b
        .formula(second)
        .as_implies()
        .expect("second premise must be an implication");
    let c = c.clone();
    let ax = b.axiom(AxiomScheme::A1, Bindings::new().phi(a).psi(mid).chi(c));
    let l = b.mp(ax, first);
    b.mp(l, second)
}

/// Derives `phi -> ~~phi` in thirteen lines and returns the last line.
pub fn double_negation_intro<S: ProofSystem>(b: &mut ProofBuilder<S>, phi: &S::Formula) -> usize {
    let bot = S::Formula::bottom;
    let theta = S::Formula::mk_neg(phi.clone());
    let id = identity(b, &theta);
    let curry = b.axiom(
        AxiomScheme::A5a,
        Bindings::new()
            .phi(theta.clone())
            .psi(phi.clone())
            .chi(bot()),
    );
    let absurd = b.mp(curry, id);
    let swap = b.axiom(
        AxiomScheme::A3,
        Bindings::new().phi(phi.clone()).psi(theta.clone()),
    );
    let absurd_swapped = chain(b, swap, absurd);
    let uncurry = b.axiom(
        AxiomScheme::A5b,
        Bindings::new().phi(phi.clone()).psi(theta).chi(bot()),
    );
    b.mp(uncurry, absurd_swapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check_proof, JCalculus, JLogic, MLogic};
    use crate::syntax::{parse_jformula, parse_mformula};

    #[test]
    fn identity_checks() {
        let mut b = ProofBuilder::new(MLogic::GK);
        let theta = parse_mformula("[]p1 & p2").unwrap();
        assert_eq!(identity(&mut b, &theta), 5);
        let p = b.finish();
        let c = check_proof(&p).unwrap();
        assert_eq!(
            c.conclusion,
            parse_mformula("[]p1 & p2 -> []p1 & p2").unwrap()
        );
    }

    #[test]
    fn double_negation_checks() {
        let mut b = ProofBuilder::new(JCalculus::total(JLogic::GJ));
        let phi = parse_jformula("x1:p1").unwrap();
        assert_eq!(double_negation_intro(&mut b, &phi), 13);
        let c = check_proof(&b.finish()).unwrap();
        assert_eq!(c.conclusion, parse_jformula("x1:p1 -> ~~x1:p1").unwrap());
        assert!(c.is_theorem());
    }
}
