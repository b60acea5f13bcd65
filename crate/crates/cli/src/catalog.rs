//! Named sphere maps and the small key language used to refer to them.
//!
//! Keys are either plain names (`quartic`, `whitney`) or constructor calls
//! whose arguments may themselves be keys, e.g. `juxt(H(2,1),G(2),3/5)`.

use std::path::Path;

use serde::Serialize;
use spheremap::maps::{
    apply_unitary, family_map, group_invariant_map, homogeneous_map, identity_map, isolated_point_default,
    isolated_point_map, juxtapose, pad_map, pencil_map, quartic_map, rotation_block, tensor_map, whitney_map, MapJson,
    SphereMap, SubspaceSelector,
};
use spheremap::polys::{split_top_level, BiPoly};
use spheremap::scalars::{ComplexRadical, RadicalReal, Rational};

use crate::CliError;

/// Parameters that some keys take from the command line rather than the key.
#[derive(Debug, Clone, Default)]
pub struct MapOptions {
    pub cos: Option<String>,
    pub sin: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub key: String,
    pub description: String,
    /// Where the map comes from.
    pub origin: String,
}

fn entry(key: &str, description: &str, origin: &str) -> CatalogEntry {
    CatalogEntry {
        key: key.into(),
        description: description.into(),
        origin: origin.into(),
    }
}

/// The fixed catalog, in display order.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        entry("H(2,1)", "identity of C^2", "homogeneous map"),
        entry("H(2,2)", "(z^2, sqrt(2) z w, w^2)", "homogeneous map"),
        entry("H(2,3)", "all cubic monomials with binomial weights", "homogeneous map"),
        entry(
            "H(3,2)",
            "all quadratic monomials in three variables",
            "homogeneous map",
        ),
        entry("whitney", "(z, z w, w^2)", "Whitney map"),
        entry(
            "quartic",
            "(z^4, z^3 w, sqrt(3) z w, w^3)",
            "degenerate exactly on {w = 0}",
        ),
        entry(
            "isolated",
            "isolated degenerate point, a = b = 1/sqrt(2)",
            "degeneracy example with three strata",
        ),
        entry(
            "pencil",
            "(z, c w, s z w, s w^2), c = 3/5, s = 4/5",
            "holomorphically degenerate example",
        ),
        entry("G(0)", "(z, w)", "cyclic group invariant map"),
        entry("G(1)", "(z^3, sqrt(3) z w, w^3)", "cyclic group invariant map"),
        entry(
            "G(2)",
            "(z^5, sqrt(5) z^3 w, sqrt(5) z w^2, w^5)",
            "cyclic group invariant map",
        ),
        entry(
            "G(3)",
            "(z^7, sqrt(7) z^5 w, sqrt(14) z^3 w^2, sqrt(7) z w^3, w^7)",
            "cyclic group invariant map",
        ),
        entry(
            "G(4)",
            "(z^9, 3 z^7 w, 3 sqrt(3) z^5 w^2, sqrt(30) z^3 w^3, 3 z w^4, w^9)",
            "cyclic group invariant map",
        ),
        entry(
            "F(1,1/10)",
            "rational member of the family through H(2,3)",
            "rational deformation family",
        ),
        entry(
            "juxt(H(2,1),H(2,2),3/5)",
            "juxtaposition, always degenerate",
            "juxtaposition",
        ),
        entry("pad(H(2,2),1)", "H(2,2) with one zero component", "padding"),
        entry(
            "tensor(whitney,[2],H(2,1))",
            "(z w^2, w^3, z, z w)",
            "tensor product of the Whitney map",
        ),
        entry(
            "rot(quartic,1,3,3/5,4/5)",
            "unitary image of the quartic map",
            "unitary equivalence",
        ),
    ]
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

fn integer<T: std::str::FromStr>(s: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("expected an integer, got {s:?}")))
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("expected a rational number, got {s:?}")))
}

/// A real scalar such as `3/5` or `sqrt(2)/2`.
pub fn real(s: &str) -> Result<RadicalReal, CliError> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("expected a real scalar, got {s:?}")))
}

/// A complex scalar such as `1/2 + i/2`.
pub fn complex(s: &str) -> Result<ComplexRadical, CliError> {
    BiPoly::parse(1, s)
        .ok()
        .and_then(|p| p.as_constant())
        .ok_or_else(|| bad(format!("expected a complex scalar, got {s:?}")))
}

fn indices(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| bad(format!("expected an index list like [0,2], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(integer).collect()
}

/// Splits `name(a,b,...)` into the name and its top-level arguments.
fn call(key: &str) -> Result<(&str, Vec<&str>), CliError> {
    let key = key.trim();
    match key.find('(') {
        None => Ok((key, Vec::new())),
        Some(i) => {
            let inner = key[i + 1..]
                .strip_suffix(')')
                .ok_or_else(|| bad(format!("unbalanced parentheses in {key:?}")))?;
            Ok((key[..i].trim(), split_top_level(inner, ',')))
        }
    }
}

fn arity(name: &str, args: &[&str], n: usize) -> Result<(), CliError> {
    if args.len() != n {
        return Err(bad(format!("{name} takes {n} arguments, got {}", args.len())));
    }
    Ok(())
}

/// Builds the map named by `key`, without checking the sphere condition.
pub fn build(key: &str, opts: &MapOptions) -> Result<SphereMap, CliError> {
    let (name, args) = call(key)?;
    let map = match name {
        "H" => {
            arity(name, &args, 2)?;
            homogeneous_map(integer(args[0])?, integer(args[1])?)?
        }
        "identity" => {
            arity(name, &args, 1)?;
            identity_map(integer(args[0])?)?
        }
        "G" => {
            arity(name, &args, 1)?;
            group_invariant_map(integer(args[0])?)?
        }
        "F" => {
            arity(name, &args, 2)?;
            let s = args[1].trim();
            let s = s.strip_prefix("s=").unwrap_or(s);
            family_map(integer(args[0])?, &rational(s)?)?
        }
        "whitney" => {
            arity(name, &args, 0)?;
            whitney_map()
        }
        "quartic" => {
            arity(name, &args, 0)?;
            quartic_map()
        }
        "isolated" => match args.len() {
            0 => isolated_point_default(),
            2 => isolated_point_map(&complex(args[0])?, &complex(args[1])?)?,
            _ => return Err(bad("isolated takes 0 or 2 arguments")),
        },
        "pencil" => {
            let (c, s) = match args.len() {
                0 => (
                    opts.cos.as_deref().unwrap_or("3/5").to_string(),
                    opts.sin.as_deref().unwrap_or("4/5").to_string(),
                ),
                2 => (args[0].to_string(), args[1].to_string()),
                _ => return Err(bad("pencil takes 0 or 2 arguments")),
            };
            pencil_map(&real(&c)?, &real(&s)?)?
        }
        "juxt" => {
            arity(name, &args, 3)?;
            juxtapose(&build(args[0], opts)?, &build(args[1], opts)?, &real(args[2])?)?
        }
        "pad" => {
            arity(name, &args, 2)?;
            pad_map(&build(args[0], opts)?, integer(args[1])?)?
        }
        "tensor" => {
            arity(name, &args, 3)?;
            let h = build(args[0], opts)?;
            let sel = SubspaceSelector::coordinates(&indices(args[1])?);
            tensor_map(&h, &sel, &build(args[2], opts)?)?
        }
        "rot" => {
            arity(name, &args, 5)?;
            let h = build(args[0], opts)?;
            let (i, j): (usize, usize) = (integer(args[1])?, integer(args[2])?);
            if i >= h.m() || j >= h.m() || i == j {
                return Err(bad(format!("rot indices must be distinct and below {}", h.m())));
            }
            let u = rotation_block(h.m(), i, j, complex(args[3])?, complex(args[4])?);
            apply_unitary(&h, &u)?
        }
        _ => {
            return Err(bad(format!(
                "unknown map {key:?}; run `spheremap catalog` for the list"
            )))
        }
    };
    Ok(map.with_name(canonical_key(key)))
}

fn canonical_key(key: &str) -> String {
    key.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Reads a map from a JSON file in the `MapJson` layout.
pub fn load_json(path: &Path) -> Result<SphereMap, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let j: MapJson = serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let h = SphereMap::from_json(&j)?;
    if j.name.is_empty() {
        Ok(h.with_name(path.display().to_string()))
    } else {
        Ok(h)
    }
}

/// Resolves a command-line map argument: an existing file is read as JSON,
/// anything else is a catalog key.
pub fn resolve(arg: &str, opts: &MapOptions) -> Result<SphereMap, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        load_json(path)
    } else {
        build(arg, opts)
    }
}
