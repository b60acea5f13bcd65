use spheremap::degeneracy::{commutator_relations, two_variable_relation, VectorField as F};
use spheremap::scalars::ComplexRadical;

fn check_all(n: usize) -> usize {
    let relations = commutator_relations(n);
    for r in &relations {
        assert!(r.holds(), "{} with n={n} (i,j,k,l)={:?}", r.name, r.indices);
    }
    relations.len()
}

#[test]
fn relations_in_three_variables() {
    // Six ordered triples (i, j, k); l can only be k.
    assert_eq!(check_all(3), 6 * 30);
}

#[test]
fn relations_with_four_distinct_indices() {
    assert_eq!(check_all(4), 24 * 30);
}

#[test]
fn barred_third_relation_fails() {
    let (i, j, k) = (0, 1, 2);
    let bracket = F::t(3, k, i).lie_bracket(&F::lbar(3, k, j));
    assert!(!bracket.is_zero());
    assert_eq!(bracket, F::lbar(3, i, j));
}

#[test]
fn two_variable_relation_holds() {
    assert!(two_variable_relation().holds());
    // S = [L, Lbar] is minus the formula for S_12.
    let s = F::l(2, 0, 1).lie_bracket(&F::lbar(2, 0, 1));
    assert_eq!(s, -&F::s(2, 0, 1));
}

#[test]
fn bracket_is_antisymmetric() {
    let x = F::l(3, 0, 1);
    let y = F::t(3, 2, 1);
    assert_eq!(x.lie_bracket(&y), -&y.lie_bracket(&x));
    assert!(x.lie_bracket(&x).is_zero());
    let c = ComplexRadical::from_ratio(3, 2);
    assert_eq!(x.scale(&c).lie_bracket(&y), x.lie_bracket(&y).scale(&c));
}
