//! The bracket relations among `L_ij`, `Lbar_ij`, `T_kj` and `S_ij`.
//!
//! With the explicit formulas for `T` and `S`, the brackets that introduce
//! them come out as `[L_ij, Lbar_ik] = T_jk` and `[L_ij, Lbar_ij] = -S_ij`.
//! The third relation of the `L` group is `[T_ki, L_kj] = 0`; its barred
//! version is nonzero and appears in the `Lbar` group as `Lbar_ij`.

use crate::scalars::ComplexRadical;

use super::VectorField as F;

/// One instance of a relation `lhs = rhs` for fixed indices.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: &'static str,
    /// `(i, j, k, l)`.
    pub indices: [usize; 4],
    pub lhs: F,
    pub rhs: F,
}

impl Relation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Every relation for every admissible choice of indices in `n >= 3`
/// variables. The fourth index `l` avoids `i` and `j`, and also `k` unless
/// `n = 3`, where no four distinct indices exist.
pub fn commutator_relations(n: usize) -> Vec<Relation> {
    let two = ComplexRadical::from_integer(2);
    let t = |k, j| F::t(n, k, j);
    let s = |i, j| F::s(n, i, j);
    let l = |i, j| F::l(n, i, j);
    let lb = |i, j| F::lbar(n, i, j);
    let zero = F::zero(n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for k in (0..n).filter(|&k| k != i && k != j) {
                for ll in (0..n).filter(|&x| x != i && x != j && (x != k || n == 3)) {
                    let cases: Vec<(&'static str, F, F)> = vec![
                        ("[L_ij, Lbar_ik] = T_jk", l(i, j).lie_bracket(&lb(i, k)), t(j, k)),
                        ("[L_ij, Lbar_ij] = -S_ij", l(i, j).lie_bracket(&lb(i, j)), -&s(i, j)),
                        ("T_jk = -conj(T_kj)", t(j, k), -&t(k, j).conjugate()),
                        ("S_ij = S_ji", s(i, j), s(j, i)),
                        ("[T_kl, Lbar_ij] = 0", t(k, ll).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[T_kj, Lbar_ij] = 0", t(k, j).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[T_ki, Lbar_ij] = 0", t(k, i).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[T_ij, Lbar_ij] = 0", t(i, j).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[T_ji, Lbar_ij] = 0", t(j, i).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[T_jk, Lbar_ij] = Lbar_ik", t(j, k).lie_bracket(&lb(i, j)), lb(i, k)),
                        ("[T_ki, Lbar_kj] = Lbar_ij", t(k, i).lie_bracket(&lb(k, j)), lb(i, j)),
                        ("[S_kl, Lbar_ij] = 0", s(k, ll).lie_bracket(&lb(i, j)), zero.clone()),
                        ("[S_kj, Lbar_ij] = -Lbar_ij", s(k, j).lie_bracket(&lb(i, j)), -&lb(i, j)),
                        ("[S_ki, Lbar_ij] = -Lbar_ij", s(k, i).lie_bracket(&lb(i, j)), -&lb(i, j)),
                        (
                            "[S_ij, Lbar_ij] = -2 Lbar_ij",
                            s(i, j).lie_bracket(&lb(i, j)),
                            lb(i, j).scale(&-two.clone()),
                        ),
                        ("[T_kl, L_ij] = 0", t(k, ll).lie_bracket(&l(i, j)), zero.clone()),
                        ("[T_jk, L_ij] = 0", t(j, k).lie_bracket(&l(i, j)), zero.clone()),
                        ("[T_ki, L_kj] = 0", t(k, i).lie_bracket(&l(k, j)), zero.clone()),
                        ("[T_ij, L_ij] = 0", t(i, j).lie_bracket(&l(i, j)), zero.clone()),
                        ("[T_ji, L_ij] = 0", t(j, i).lie_bracket(&l(i, j)), zero.clone()),
                        ("[T_kj, L_ij] = L_ki", t(k, j).lie_bracket(&l(i, j)), l(k, i)),
                        ("[T_ki, L_ij] = L_jk", t(k, i).lie_bracket(&l(i, j)), l(j, k)),
                        ("[S_kl, L_ij] = 0", s(k, ll).lie_bracket(&l(i, j)), zero.clone()),
                        ("[S_kj, L_ij] = L_ij", s(k, j).lie_bracket(&l(i, j)), l(i, j)),
                        ("[S_ki, L_ij] = L_ij", s(k, i).lie_bracket(&l(i, j)), l(i, j)),
                        (
                            "[S_ij, L_ij] = 2 L_ij",
                            s(i, j).lie_bracket(&l(i, j)),
                            l(i, j).scale(&two),
                        ),
                        ("[S_ij, T_kl] = 0", s(i, j).lie_bracket(&t(k, ll)), zero.clone()),
                        ("[S_ij, T_ij] = 0", s(i, j).lie_bracket(&t(i, j)), zero.clone()),
                        ("[S_ij, T_jl] = T_jl", s(i, j).lie_bracket(&t(j, ll)), t(j, ll)),
                        ("[S_ij, T_il] = T_il", s(i, j).lie_bracket(&t(i, ll)), t(i, ll)),
                    ];
                    out.extend(cases.into_iter().map(|(name, lhs, rhs)| Relation {
                        name,
                        indices: [i, j, k, ll],
                        lhs,
                        rhs,
                    }));
                }
            }
        }
    }
    out
}

/// The two-variable relation `[S, Lbar] = 2 Lbar` with `S = [L, Lbar] = -S_12`.
pub fn two_variable_relation() -> Relation {
    let lb = F::lbar(2, 0, 1);
    let s = F::l(2, 0, 1).lie_bracket(&lb);
    Relation {
        name: "[S, Lbar] = 2 Lbar",
        indices: [0, 1, 0, 1],
        lhs: s.lie_bracket(&lb),
        rhs: lb.scale(&ComplexRadical::from_integer(2)),
    }
}
