//! Report types written by the CLI. Every exact value carries its canonical
//! text next to the structured form, and the text renderer shows only the
//! former.

use serde::Serialize;
use spheremap::deformations::DeformationBasis;
use spheremap::degeneracy::{Classification, DegeneracyReport, StratificationReport, XClassification, XFiber};
use spheremap::maps::{SphereMap, ValidationReport};
use spheremap::polys::{BiPoly, Point, PolyVector, TermJson};
use spheremap::reflection::ReflectionMatrix;
use spheremap::scalars::{ComplexRadical, RadicalReal};

pub const SCHEMA: &str = "spheremap-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct Scalar {
    pub text: String,
    pub re: RadicalReal,
    pub im: RadicalReal,
}

impl From<&ComplexRadical> for Scalar {
    fn from(c: &ComplexRadical) -> Self {
        Self {
            text: c.to_string(),
            re: c.re.clone(),
            im: c.im.clone(),
        }
    }
}

fn scalars(v: &[ComplexRadical]) -> Vec<Scalar> {
    v.iter().map(Scalar::from).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Poly {
    pub text: String,
    /// Terms in lexicographic monomial order.
    pub terms: Vec<TermJson>,
}

impl From<&BiPoly> for Poly {
    fn from(p: &BiPoly) -> Self {
        Self {
            text: p.to_string(),
            terms: p.to_json_terms(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Vector {
    pub text: String,
    pub components: Vec<Poly>,
}

impl From<&PolyVector> for Vector {
    fn from(v: &PolyVector) -> Self {
        Self {
            text: v.to_string(),
            components: v.entries.iter().map(Poly::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointOut {
    pub text: String,
    pub coords: Vec<Scalar>,
}

impl From<&Point> for PointOut {
    fn from(p: &Point) -> Self {
        Self {
            text: p.to_string(),
            coords: scalars(p.coords()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MapSummary {
    pub key: String,
    pub formula: String,
    pub n: usize,
    pub m: usize,
    pub degree: u32,
    pub polynomial: bool,
}

impl From<&SphereMap> for MapSummary {
    fn from(h: &SphereMap) -> Self {
        Self {
            key: h.name().to_string(),
            formula: h.to_string(),
            n: h.n(),
            m: h.m(),
            degree: h.degree(),
            polynomial: h.is_polynomial(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Validation {
    pub valid: bool,
    #[serde(flatten)]
    pub checks: ValidationReport,
}

impl From<ValidationReport> for Validation {
    fn from(r: ValidationReport) -> Self {
        Self {
            valid: r.is_valid(),
            checks: r,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Reflection {
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    /// `V_H`, row by row.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vh: Vec<Vec<Poly>>,
    /// `V = Q V_H`; omitted for polynomial maps, where it equals `V_H`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<Vec<Poly>>>,
    pub fundamental_identity: bool,
    /// Both identities relating `V_H`, `H` and `H_n^d`; polynomial maps only.
    pub map_identities: Option<[bool; 2]>,
}

fn matrix(m: &spheremap::polys::PolyMatrix) -> Vec<Vec<Poly>> {
    m.entries
        .iter()
        .map(|row| row.iter().map(Poly::from).collect())
        .collect()
}

impl Reflection {
    pub fn new(r: &ReflectionMatrix, with_entries: bool) -> Self {
        let polynomial = r.map().is_polynomial();
        Self {
            rows: r.rows(),
            cols: r.cols(),
            row_labels: (0..r.rows()).map(|i| r.row_label(i)).collect(),
            vh: if with_entries { matrix(r.vh()) } else { Vec::new() },
            v: (with_entries && !polynomial).then(|| matrix(r.v())),
            fundamental_identity: r.verify_fundamental_identity(),
            map_identities: r.map_identities().ok().map(|(a, b)| [a, b]),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationOut {
    pub rows: usize,
    pub shortcut: bool,
    pub holomorphically_nondegenerate: bool,
    pub generic_rank: Option<usize>,
    pub generic_degeneracy: Option<usize>,
    pub degeneracy_lower_bound: usize,
    pub witness_point: Option<PointOut>,
    /// A nonzero `Y` with `V Y = 0`, for degenerate maps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy_witness: Option<Vector>,
}

impl ClassificationOut {
    pub fn new(c: &Classification, witness: Option<&PolyVector>) -> Self {
        Self {
            rows: c.rows,
            shortcut: c.shortcut,
            holomorphically_nondegenerate: c.holomorphically_nondegenerate,
            generic_rank: c.generic_rank,
            generic_degeneracy: c.generic_degeneracy,
            degeneracy_lower_bound: c.degeneracy_lower_bound,
            witness_point: c.witness_point.as_ref().map(PointOut::from),
            degeneracy_witness: witness.map(Vector::from),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointDegeneracy {
    pub point: PointOut,
    pub m: usize,
    /// `dim ker V(p)`.
    pub kernel_dim: usize,
    /// Degeneracy from the jet spans; equals `kernel_dim` when conclusive.
    pub jet_degeneracy: usize,
    pub jet_order: Option<usize>,
    pub label: Option<[usize; 2]>,
    pub finite_nondegenerate: bool,
    pub max_order: usize,
    pub inconclusive: bool,
    pub methods_agree: bool,
}

impl PointDegeneracy {
    pub fn new(p: &Point, reflection: &DegeneracyReport, jet: &DegeneracyReport, max_order: usize) -> Self {
        Self {
            point: p.into(),
            m: reflection.m,
            kernel_dim: reflection.kernel_dim,
            jet_degeneracy: jet.kernel_dim,
            jet_order: jet.jet_order,
            label: jet.label().map(|(k, s)| [k, s]),
            finite_nondegenerate: reflection.finite_nondegenerate,
            max_order,
            inconclusive: jet.inconclusive,
            methods_agree: jet.inconclusive || jet.kernel_dim == reflection.kernel_dim,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumOut {
    pub degeneracy: usize,
    pub rank: usize,
    pub minors: Vec<Poly>,
    pub witnesses: Vec<PointOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stratification {
    pub seed: u64,
    pub generic_rank: usize,
    pub generic_degeneracy: usize,
    pub generic_witness: PointOut,
    pub strata: Vec<StratumOut>,
    pub certified: bool,
    /// `graph`, `affine_bundle` or `exceptional_fibers`.
    pub x_variety: String,
}

impl Stratification {
    pub fn new(s: &StratificationReport, x: &XClassification, seed: u64, with_minors: bool) -> Self {
        let x_variety = match x {
            XClassification::Graph { .. } => "graph",
            XClassification::AffineBundle { .. } => "affine_bundle",
            XClassification::ExceptionalFibers { .. } => "exceptional_fibers",
        };
        Self {
            seed,
            generic_rank: s.generic_rank,
            generic_degeneracy: s.generic_degeneracy,
            generic_witness: (&s.generic_witness).into(),
            strata: s
                .strata
                .iter()
                .map(|t| StratumOut {
                    degeneracy: t.degeneracy,
                    rank: t.rank,
                    minors: if with_minors {
                        t.minors.iter().map(Poly::from).collect()
                    } else {
                        Vec::new()
                    },
                    witnesses: t.witnesses.iter().map(PointOut::from).collect(),
                })
                .collect(),
            certified: s.certified,
            x_variety: x_variety.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Fiber {
    pub point: PointOut,
    pub base: Vec<Scalar>,
    pub dim: usize,
    pub directions: Vec<Vec<Scalar>>,
}

impl From<&XFiber> for Fiber {
    fn from(f: &XFiber) -> Self {
        Self {
            point: (&f.point).into(),
            base: scalars(&f.base),
            dim: f.dim(),
            directions: f.directions.iter().map(|d| scalars(d)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Deformations {
    pub dimension: String,
    pub real_dimension: usize,
    pub aut_dimension: usize,
    pub aut_total_dimension: usize,
    pub nontrivial_dimension: usize,
    pub stabilizer_dimension: usize,
    pub truncated: bool,
    pub rigid: Option<bool>,
    /// Upper bound for polynomial maps of this degree and source dimension.
    pub bound: usize,
    /// Numerators `X'` of a real basis; the deformations are `X'/Q`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<Vector>,
}

impl Deformations {
    pub fn new(b: &DeformationBasis, with_basis: bool) -> Self {
        Self {
            dimension: b.dimension_label(),
            real_dimension: b.real_dimension,
            aut_dimension: b.aut_dimension,
            aut_total_dimension: b.aut_total_dimension,
            nontrivial_dimension: b.nontrivial_dimension,
            stabilizer_dimension: b.stabilizer_dimension,
            truncated: b.truncated,
            rigid: b.rigid(),
            bound: spheremap::deformations::dim_formula(b.n, b.degree),
            basis: if with_basis {
                b.basis.iter().map(Vector::from).collect()
            } else {
                Vec::new()
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Membership {
    pub vector: Vector,
    pub in_hol: bool,
    /// `None` when the vector is not a deformation.
    pub trivial: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub validation: Validation,
    pub reflection: Reflection,
    pub classification: ClassificationOut,
    pub stratification: Stratification,
    pub deformations: Deformations,
    pub rigid: Option<bool>,
    pub consistency: Vec<String>,
}

impl Analysis {
    /// Cross-checks between the stages. Returns the violated conditions.
    pub fn check(&self, map: &MapSummary) -> Vec<String> {
        let mut bad = Vec::new();
        let d = &self.deformations;
        let c = &self.classification;
        if self.rigid == Some(true) && d.nontrivial_dimension != 0 {
            bad.push("rigid but nontrivial deformations exist".into());
        }
        if d.aut_dimension + d.nontrivial_dimension != d.real_dimension {
            bad.push("aut and nontrivial dimensions do not add up".into());
        }
        if c.holomorphically_nondegenerate == d.truncated {
            bad.push("truncation disagrees with holomorphic degeneracy".into());
        }
        if let Some(g) = c.generic_rank {
            if g != self.stratification.generic_rank {
                bad.push("classification and stratification disagree on the generic rank".into());
            }
        }
        if !self.reflection.fundamental_identity {
            bad.push("fundamental identity fails".into());
        }
        if self.reflection.map_identities.is_some_and(|f| f != [true, true]) {
            bad.push("map identities fail".into());
        }
        if map.polynomial && !d.truncated && d.real_dimension > d.bound {
            bad.push("hol dimension exceeds the bound".into());
        }
        bad
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub key: String,
    pub description: String,
    pub origin: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holomorphically_nondegenerate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigid: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<Vec<String>>,
}

/// Top-level envelope of every report.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSummary>,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Vec<(String, u128)>>,
}
