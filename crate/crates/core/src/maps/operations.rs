use super::SphereMap;
use crate::error::{Error, Result};
use crate::polys::{BiPoly, PolyVector};
use crate::scalars::{ComplexRadical, RadicalReal, Sign};

/// A subspace `A` of the target space together with its orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceSelector {
    /// `A` spanned by the listed standard basis vectors.
    Coordinates(Vec<usize>),
    /// `A` spanned by the first `dim` columns of the unitary matrix `u`
    /// (given by rows), the complement by the remaining columns.
    Unitary { u: Vec<Vec<ComplexRadical>>, dim: usize },
}

/// Exact check that `conj(U)^t U = I`.
pub fn is_unitary(u: &[Vec<ComplexRadical>]) -> bool {
    let m = u.len();
    if u.iter().any(|r| r.len() != m) {
        return false;
    }
    for a in 0..m {
        for b in 0..m {
            let mut s = ComplexRadical::zero();
            for row in u {
                s += &(&row[a].conj() * &row[b]);
            }
            let expect = if a == b {
                ComplexRadical::one()
            } else {
                ComplexRadical::zero()
            };
            if s != expect {
                return false;
            }
        }
    }
    true
}

fn mat_vec(u: &[Vec<ComplexRadical>], v: &PolyVector) -> PolyVector {
    PolyVector::new(
        u.iter()
            .map(|row| {
                row.iter()
                    .zip(&v.entries)
                    .fold(BiPoly::zero(v.n()), |acc, (c, p)| &acc + &p.scale(c))
            })
            .collect(),
    )
}

fn adjoint(u: &[Vec<ComplexRadical>]) -> Vec<Vec<ComplexRadical>> {
    let m = u.len();
    (0..m).map(|i| (0..m).map(|j| u[j][i].conj()).collect()).collect()
}

impl SubspaceSelector {
    pub fn coordinates(idx: &[usize]) -> Self {
        Self::Coordinates(idx.to_vec())
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Coordinates(v) => v.len(),
            Self::Unitary { dim, .. } => *dim,
        }
    }

    fn check(&self, m: usize) -> Result<()> {
        match self {
            Self::Coordinates(idx) => {
                let mut seen = vec![false; m];
                for &i in idx {
                    if i >= m || seen[i] {
                        return Err(Error::Subspace(format!("index {i} invalid for C^{m}")));
                    }
                    seen[i] = true;
                }
                Ok(())
            }
            Self::Unitary { u, dim } => {
                if u.len() != m || *dim > m {
                    return Err(Error::Subspace(format!("basis does not live in C^{m}")));
                }
                if !is_unitary(u) {
                    return Err(Error::NotUnitary);
                }
                Ok(())
            }
        }
    }

    /// Splits a vector into its coordinates along `A` and along the complement.
    pub fn split(&self, v: &PolyVector) -> Result<(Vec<BiPoly>, Vec<BiPoly>)> {
        self.check(v.len())?;
        match self {
            Self::Coordinates(idx) => {
                let along = idx.iter().map(|&i| v.entries[i].clone()).collect();
                let rest = (0..v.len())
                    .filter(|i| !idx.contains(i))
                    .map(|i| v.entries[i].clone())
                    .collect();
                Ok((along, rest))
            }
            Self::Unitary { u, dim } => {
                let mut c = mat_vec(&adjoint(u), v).entries;
                let rest = c.split_off(*dim);
                Ok((c, rest))
            }
        }
    }
}

/// `U P / Q`.
pub fn apply_unitary(h: &SphereMap, u: &[Vec<ComplexRadical>]) -> Result<SphereMap> {
    if u.len() != h.m() || !is_unitary(u) {
        return Err(Error::NotUnitary);
    }
    SphereMap::new(
        format!("U*{}", h.name()),
        mat_vec(u, h.numerator()),
        h.denominator().clone(),
    )
}

/// The unitary matrix acting as `(a, b; -conj(b), conj(a))` on components `i`, `j`.
pub fn rotation_block(m: usize, i: usize, j: usize, a: ComplexRadical, b: ComplexRadical) -> Vec<Vec<ComplexRadical>> {
    let mut u: Vec<Vec<ComplexRadical>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| {
                    if r == c {
                        ComplexRadical::one()
                    } else {
                        ComplexRadical::zero()
                    }
                })
                .collect()
        })
        .collect();
    u[i][i] = a.clone();
    u[i][j] = b.clone();
    u[j][i] = -b.conj();
    u[j][j] = a.conj();
    u
}

/// Tensoring of numerators: `(X_A (x) R) + X_{A-perp} S` where `G = R / S`.
fn tensor_numerators(x: &PolyVector, a: &SubspaceSelector, g: &SphereMap) -> Result<PolyVector> {
    let (along, rest) = a.split(x)?;
    let mut out = Vec::new();
    for p in &along {
        for r in &g.numerator().entries {
            out.push(p * r);
        }
    }
    for p in &rest {
        out.push(p * g.denominator());
    }
    Ok(PolyVector::new(out))
}

/// `E_{(A,G)} H = (H_A (x) G) + H_{A-perp}`.
pub fn tensor_map(h: &SphereMap, a: &SubspaceSelector, g: &SphereMap) -> Result<SphereMap> {
    if h.n() != g.n() {
        return Err(Error::VariableMismatch(h.n(), g.n()));
    }
    let numerator = tensor_numerators(h.numerator(), a, g)?;
    SphereMap::new(
        format!("tensor({},{})", h.name(), g.name()),
        numerator,
        h.denominator() * g.denominator(),
    )
}

/// `T_{(A,G)} X = (X_A (x) G) + X_{A-perp}` for a deformation numerator `X'`
/// of `H`; the result is a numerator over the denominator of the tensored map.
pub fn tensor_deformation_numerator(x: &PolyVector, a: &SubspaceSelector, g: &SphereMap) -> Result<PolyVector> {
    tensor_numerators(x, a, g)
}

fn complement_of(t: &RadicalReal) -> Result<RadicalReal> {
    if t.sign() == Sign::Negative || (RadicalReal::one() - t).sign() == Sign::Negative {
        return Err(Error::InvalidArgument(format!("t = {t} is not in [0, 1]")));
    }
    let rest = RadicalReal::one() - t * t;
    let q = rest
        .as_rational()
        .ok_or_else(|| Error::InvalidArgument(format!("sqrt(1 - t^2) is not representable for t = {t}")))?;
    Ok(RadicalReal::sqrt_rational(&q)?)
}

/// `j_t(H, G) = sqrt(1 - t^2) H + t G` (direct sum).
pub fn juxtapose(h: &SphereMap, g: &SphereMap, t: &RadicalReal) -> Result<SphereMap> {
    if h.n() != g.n() {
        return Err(Error::VariableMismatch(h.n(), g.n()));
    }
    let u: ComplexRadical = complement_of(t)?.into();
    let tc: ComplexRadical = t.clone().into();
    let first = h.numerator().mul_poly(g.denominator()).scale(&u);
    let second = g.numerator().mul_poly(h.denominator()).scale(&tc);
    SphereMap::new(
        format!("juxt({},{},{})", h.name(), g.name(), t),
        first.concat(&second),
        h.denominator() * g.denominator(),
    )
}

/// The vector `-t H + sqrt(1 - t^2) G` annihilating the conjugate of the
/// juxtaposition, as a numerator over its denominator.
pub fn juxtaposition_witness(h: &SphereMap, g: &SphereMap, t: &RadicalReal) -> Result<PolyVector> {
    let u: ComplexRadical = complement_of(t)?.into();
    let tc: ComplexRadical = (-t).into();
    let first = h.numerator().mul_poly(g.denominator()).scale(&tc);
    let second = g.numerator().mul_poly(h.denominator()).scale(&u);
    Ok(first.concat(&second))
}
