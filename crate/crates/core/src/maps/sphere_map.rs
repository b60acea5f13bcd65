use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polys::{special_points, BiPoly, Point, PointGenerator, PolyVector, TermJson};
use crate::scalars::{ComplexRadical, RadicalReal, Sign};

/// A rational map `P / Q` from `C^n` to `C^m`, meant to send the unit sphere
/// to the unit sphere. Construction checks shapes only; [`SphereMap::validate`]
/// checks the sphere condition.
#[derive(Clone, PartialEq, Eq)]
pub struct SphereMap {
    name: String,
    n: usize,
    numerator: PolyVector,
    denominator: BiPoly,
    degree: u32,
}

/// Outcome of [`SphereMap::validation_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// `|P|^2 - |Q|^2` vanishes on the sphere.
    pub sphere_condition: bool,
    /// `Q` is nonzero at every grid point.
    pub denominator_nonzero_on_grid: bool,
    /// `|Q - Q(0)| < |Q(0)|` on the closed ball, from coefficient sizes.
    pub denominator_certified: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.sphere_condition && self.denominator_nonzero_on_grid
    }
}

impl SphereMap {
    /// A map with the given numerator components and denominator. A constant
    /// denominator is folded into the numerator.
    pub fn new(name: impl Into<String>, numerator: PolyVector, denominator: BiPoly) -> Result<Self> {
        let n = denominator.n();
        if numerator.is_empty() {
            return Err(Error::InvalidMap("no components".into()));
        }
        if numerator.entries.iter().any(|p| p.n() != n) {
            return Err(Error::VariableMismatch(n, numerator.n()));
        }
        if !numerator.is_holomorphic() || !denominator.is_holomorphic() {
            return Err(Error::InvalidMap("components must be holomorphic".into()));
        }
        if denominator.is_zero() {
            return Err(Error::InvalidMap("zero denominator".into()));
        }
        let (numerator, denominator) = match denominator.as_constant() {
            Some(c) if !c.is_one() => {
                let inv = c.inverse()?;
                (numerator.scale(&inv), BiPoly::one(n))
            }
            _ => (numerator, denominator),
        };
        let degree = numerator.degree().max(denominator.degree());
        Ok(Self {
            name: name.into(),
            n,
            numerator,
            denominator,
            degree,
        })
    }

    pub fn polynomial(name: impl Into<String>, components: Vec<BiPoly>) -> Result<Self> {
        let n = components
            .first()
            .map(BiPoly::n)
            .ok_or_else(|| Error::InvalidMap("no components".into()))?;
        Self::new(name, PolyVector::new(components), BiPoly::one(n))
    }

    /// Parses a component list such as `(z, z*w, w^2)`.
    pub fn parse_polynomial(name: impl Into<String>, n: usize, s: &str) -> Result<Self> {
        Self::polynomial(name, crate::polys::parse_list(n, s)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.numerator.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn numerator(&self) -> &PolyVector {
        &self.numerator
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.as_constant().is_some()
    }

    /// `H(p)`.
    pub fn evaluate(&self, p: &Point) -> Result<Vec<ComplexRadical>> {
        if p.n() != self.n {
            return Err(Error::VariableMismatch(self.n, p.n()));
        }
        let q = self.denominator.evaluate(p.coords());
        if q.is_zero() {
            return Err(Error::Pole);
        }
        let inv = q.inverse()?;
        Ok(self
            .numerator
            .evaluate(p.coords())
            .into_iter()
            .map(|v| &v * &inv)
            .collect())
    }

    /// `|P|^2 - |Q|^2`.
    pub fn sphere_defect(&self) -> BiPoly {
        let norm = self.numerator.dot(&self.numerator.conjugate());
        &norm - &(&self.denominator * &self.denominator.conjugate())
    }

    pub fn validation_report(&self) -> ValidationReport {
        let sphere_condition = self.sphere_defect().vanishes_on_sphere();
        let (grid_ok, certified) = if self.is_polynomial() {
            (true, true)
        } else {
            let mut grid = special_points(self.n, 17);
            let mut g = PointGenerator::new(29);
            grid.extend((0..16).map(|_| g.generic(self.n)));
            let grid_ok = grid.iter().all(|p| !self.denominator.evaluate(p.coords()).is_zero());
            (grid_ok, denominator_bound_certificate(&self.denominator))
        };
        ValidationReport {
            sphere_condition,
            denominator_nonzero_on_grid: grid_ok,
            denominator_certified: certified,
        }
    }

    /// True iff the map sends the sphere into the sphere and its denominator
    /// passed the grid check.
    pub fn validate(&self) -> bool {
        self.validation_report().is_valid()
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            n: self.n,
            m: self.m(),
            numerator: self.numerator.entries.iter().map(BiPoly::to_json_terms).collect(),
            denominator: self.denominator.to_json_terms(),
            name: self.name.clone(),
        }
    }

    pub fn from_json(j: &MapJson) -> Result<Self> {
        if j.numerator.len() != j.m {
            return Err(Error::InvalidMap(format!(
                "m = {} but {} components given",
                j.m,
                j.numerator.len()
            )));
        }
        let numerator = j
            .numerator
            .iter()
            .map(|t| BiPoly::from_json_terms(j.n, t))
            .collect::<Result<Vec<_>>>()?;
        let denominator = if j.denominator.is_empty() {
            BiPoly::one(j.n)
        } else {
            BiPoly::from_json_terms(j.n, &j.denominator)?
        };
        Self::new(j.name.clone(), PolyVector::new(numerator), denominator)
    }
}

/// `sum_{alpha != 0} (|Re c| + |Im c|) < |Q(0)|` forces `Q != 0` on the closed
/// unit ball, since `|z^alpha| <= 1` there.
fn denominator_bound_certificate(q: &BiPoly) -> bool {
    let n = q.n();
    let c0 = q.coeff(&crate::polys::Monomial::one(n));
    let mut tail = RadicalReal::zero();
    for (m, c) in q.terms() {
        if m.degree() > 0 {
            tail = tail + c.re.abs() + c.im.abs();
        }
    }
    (c0.norm_sq() - &tail * &tail).sign() == Sign::Positive
}

/// Serialized map definition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub n: usize,
    pub m: usize,
    pub numerator: Vec<Vec<TermJson>>,
    #[serde(default)]
    pub denominator: Vec<TermJson>,
    #[serde(default)]
    pub name: String,
}

impl std::fmt::Display for SphereMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{} / ({})", self.numerator, self.denominator)
        }
    }
}

impl std::fmt::Debug for SphereMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.name, self)
    }
}
