//! Acceptance run: one line per criterion with its verdict and runtime.
//!
//! All checks are exact; the only tolerances are the runtime budgets below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use spheremap::deformations::{
    dim_formula, hom_deformation_basis, in_hol, is_infinitesimally_rigid, is_trivial_deformation, push_through_v,
    real_rank, solve_hol,
};
use spheremap::degeneracy::{
    classify_map, commutator_relations, default_max_order, degeneracy_witness, generic_rank, jet_degeneracy,
    kernel_at_point, stratify, two_variable_relation, x_classify, VectorField, XClassification,
};
use spheremap::maps::{
    apply_unitary, family_derivative, family_map, group_invariant_coefficients, group_invariant_map, homogeneous_map,
    isolated_point_default, pencil_map, quartic_map, rotation_block, whitney_map, SphereMap,
};
use spheremap::polys::{parse_list, rational_sphere_points, special_points, BiPoly, Point, PolyMatrix, PolyVector};
use spheremap::reflection::{build_reflection, holomorphic_extension_on_sphere};
use spheremap::scalars::{rat, ComplexRadical, RadicalReal};
use spheremap_cli::catalog::{self, MapOptions};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn pt(s: &str) -> Point {
    Point::parse(s).expect("literal point")
}

fn catalog_maps() -> Vec<SphereMap> {
    catalog::entries()
        .iter()
        .map(|e| catalog::build(&e.key, &MapOptions::default()).expect("catalog entry builds"))
        .collect()
}

fn c1() -> Check {
    let mut dims = Vec::new();
    for d in 1..=3u32 {
        let b = solve_hol(&homogeneous_map(2, d).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let want = ((d + 1) as usize).pow(3);
        ensure(
            b.real_dimension == want,
            format!("d={d}: got {}, want {want}", b.real_dimension),
        )?;
        dims.push(b.real_dimension);
    }
    Ok(format!("dims {dims:?}"))
}

fn c2() -> Check {
    let b = solve_hol(&homogeneous_map(3, 2).unwrap()).map_err(|e| e.to_string())?;
    // K = C(4,2) monomials of degree 2 in three variables, C(4,3) = 4.
    let k = 6;
    let closed = k * k + 2 * k * 4;
    ensure(b.real_dimension == 84, format!("got {}", b.real_dimension))?;
    ensure(dim_formula(3, 2) == 84 && closed == 84, "closed form disagrees")?;
    Ok(format!("dim {} = dim_formula(3,2)", b.real_dimension))
}

fn c3() -> Check {
    let r = build_reflection(&quartic_map()).map_err(|e| e.to_string())?;
    let expected = PolyMatrix::new(
        [
            "(1, 0, 0, 0)",
            "(0, 1/2, sqrt(3)/2*z^2, 0)",
            "(0, 0, sqrt(2)*z*w, 0)",
            "(0, 0, sqrt(3)/2*w^2, z/2)",
            "(0, 0, 0, w)",
        ]
        .iter()
        .map(|row| parse_list(2, row).unwrap())
        .collect(),
    );
    ensure(r.vh() == &expected, format!("got {:?}", r.vh()))?;
    let labels: Vec<String> = (0..r.rows()).map(|i| r.row_label(i)).collect();
    ensure(
        labels == ["z^4", "z^3*w", "z^2*w^2", "z*w^3", "w^4"],
        format!("row order {labels:?}"),
    )?;
    Ok("5x4 matrix matches entry for entry".into())
}

fn profile(h: &SphereMap, p: &Point) -> Result<(usize, (usize, usize)), String> {
    let r = build_reflection(h).map_err(|e| e.to_string())?;
    let k = kernel_at_point(&r, p).map_err(|e| e.to_string())?;
    let j = jet_degeneracy(h, p, default_max_order(h)).map_err(|e| e.to_string())?;
    let label = j.label().ok_or("no jet label")?;
    Ok((k.kernel_dim, label))
}

fn c4() -> Check {
    let h = quartic_map();
    for (p, want) in [
        ("3/5,0,4/5,0", (0, (3, 0))),
        ("0,0,1,0", (0, (4, 0))),
        ("1,0,0,0", (1, (3, 1))),
    ] {
        let got = profile(&h, &pt(p))?;
        ensure(got == want, format!("at {p}: got {got:?}, want {want:?}"))?;
    }
    for p in rational_sphere_points(2, 5, 11) {
        let got = profile(&h, &p)?;
        ensure(got.0 == 0, format!("kernel at w != 0 point {p}"))?;
    }
    Ok("labels (3,0) (4,0) (3,1); kernel 0 at 5 generic points".into())
}

fn c5() -> Check {
    let h = isolated_point_default();
    for (p, want) in [
        ("3/5,0,4/5,0", (0, (3, 0))),
        ("1,0,0,0", (1, (2, 1))),
        ("0,0,1,0", (2, (1, 2))),
    ] {
        let got = profile(&h, &pt(p))?;
        ensure(got == want, format!("at {p}: got {got:?}, want {want:?}"))?;
    }
    Ok("kernels (0,1,2), labels (3,0) (2,1) (1,2)".into())
}

fn c6() -> Check {
    let h = pencil_map(&RadicalReal::from_ratio(3, 5), &RadicalReal::from_ratio(4, 5)).map_err(|e| e.to_string())?;
    let c = classify_map(&h).map_err(|e| e.to_string())?;
    ensure(!c.holomorphically_nondegenerate, "classified nondegenerate")?;
    let r = build_reflection(&h).map_err(|e| e.to_string())?;
    for p in rational_sphere_points(2, 5, 3) {
        let k = kernel_at_point(&r, &p).map_err(|e| e.to_string())?;
        ensure(k.kernel_dim == 1, format!("degeneracy {} at {p}", k.kernel_dim))?;
    }
    for p in ["0,0,1,0", "0,0,0,1", "0,0,-3/5,4/5"] {
        let k = kernel_at_point(&r, &pt(p)).map_err(|e| e.to_string())?;
        ensure(k.kernel_dim == 2, format!("degeneracy {} at {p}", k.kernel_dim))?;
    }
    let s = stratify(&r).map_err(|e| e.to_string())?;
    ensure(
        s.certified && s.strata.len() == 1 && s.strata[0].degeneracy == 2,
        "strata",
    )?;
    ensure(
        s.strata[0]
            .minors
            .iter()
            .all(|m| m.terms().keys().all(|mono| mono.holo[0] > 0)),
        "jump locus is not inside {z = 0}",
    )?;
    let y = degeneracy_witness(&r).map_err(|e| e.to_string())?.ok_or("no witness")?;
    let expected = PolyVector::new(parse_list(2, "(0, 1, -3/4*z, -3/4*w)").unwrap());
    // Proportional: the first nonzero entry of the witness is normalized to 1.
    ensure(y == expected, format!("witness {y}"))?;
    let pairing = y.dot(&h.numerator().conjugate());
    ensure(
        pairing.vanishes_on_sphere(),
        "witness does not annihilate conj(H) on the sphere",
    )?;
    Ok("degenerate; 1 off {z=0}, 2 on it; witness (0, 1, -3/4 z, -3/4 w)".into())
}

fn c7() -> Check {
    let sqrt = |k: u64| RadicalReal::sqrt_int(k);
    let int = RadicalReal::from_integer;
    let c3 = group_invariant_coefficients(3).map_err(|e| e.to_string())?;
    ensure(c3[1..3] == [sqrt(7), sqrt(14)], format!("l=3 coefficients {c3:?}"))?;
    let c4 = group_invariant_coefficients(4).map_err(|e| e.to_string())?;
    ensure(
        c4[1..5] == [int(3), int(3) * sqrt(3), sqrt(30), int(3)],
        format!("l=4 coefficients {c4:?}"),
    )?;
    for l in 0..=4 {
        let g = group_invariant_map(l).map_err(|e| e.to_string())?;
        ensure(g.validate(), format!("G({l}) invalid"))?;
        let r = build_reflection(&g).map_err(|e| e.to_string())?;
        let rank = generic_rank(&r).map_err(|e| e.to_string())?;
        ensure(rank.rank == g.m(), format!("G({l}) rank {}", rank.rank))?;
        let x = x_classify(&r).map_err(|e| e.to_string())?;
        ensure(
            x == XClassification::Graph { certified: true },
            format!("G({l}) X-variety {x:?}"),
        )?;
    }
    Ok("coefficients match; full rank; X-variety is the graph for l = 0..4".into())
}

fn c8() -> Check {
    let rigid = |h: &SphereMap| is_infinitesimally_rigid(h).map_err(|e| e.to_string());
    ensure(rigid(&group_invariant_map(1).unwrap())?, "G(1) not rigid")?;
    ensure(rigid(&whitney_map())?, "(z, zw, w^2) not rigid")?;
    let g4 = group_invariant_map(4).unwrap();
    ensure(!rigid(&g4)?, "G(4) rigid")?;
    for (a, b) in [("1", "1"), ("i", "-i")] {
        let x = PolyVector::new(
            parse_list(
                2,
                &"(0, -1/3*B*z^6*w^3, -2/3*sqrt(3)*B*z^4*w^4, 1/30*sqrt(30)*z^2*w*(A*z^2 - 9*B*w^4), \
                  1/3*w^2*(3*A*z^2 - B*w^4), A*z*w^7)"
                    .replace('A', &format!("({a})"))
                    .replace('B', &format!("({b})")),
            )
            .unwrap(),
        );
        ensure(in_hol(&g4, &x), format!("X (a = {a}) not in hol(G(4))"))?;
        let trivial = is_trivial_deformation(&g4, &x).map_err(|e| e.to_string())?;
        ensure(!trivial, format!("X (a = {a}) is trivial"))?;
    }
    Ok("G(1), (z,zw,w^2) rigid; G(4) not rigid, explicit X nontrivial".into())
}

fn c9() -> Check {
    let mut checked = 0;
    for h in catalog_maps() {
        let r = build_reflection(&h).map_err(|e| format!("{}: {e}", h.name()))?;
        let mut points = rational_sphere_points(h.n(), 5, 23);
        points.extend(special_points(h.n(), 23));
        for p in &points {
            let k = kernel_at_point(&r, p).map_err(|e| e.to_string())?;
            let j = jet_degeneracy(&h, p, default_max_order(&h)).map_err(|e| e.to_string())?;
            ensure(!j.inconclusive, format!("{} at {p}: jet cap reached", h.name()))?;
            ensure(
                j.kernel_dim == k.kernel_dim,
                format!("{} at {p}: jet {} vs kernel {}", h.name(), j.kernel_dim, k.kernel_dim),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{} maps, {checked} points agree", catalog::entries().len()))
}

fn c10() -> Check {
    let mut count = 0;
    for h in catalog_maps().into_iter().filter(SphereMap::is_polynomial) {
        let r = build_reflection(&h).map_err(|e| e.to_string())?;
        ensure(
            r.verify_fundamental_identity(),
            format!("{}: fundamental identity", h.name()),
        )?;
        let ids = r.map_identities().map_err(|e| e.to_string())?;
        ensure(ids == (true, true), format!("{}: map identities {ids:?}", h.name()))?;
        count += 1;
    }
    for (n, d) in [(2, 1), (2, 3), (3, 2), (4, 2)] {
        let h = homogeneous_map(n, d).unwrap();
        let r = build_reflection(&h).map_err(|e| e.to_string())?;
        ensure(
            r.vh() == &PolyMatrix::identity(n, h.m()),
            format!("V of H({n},{d}) is not I"),
        )?;
    }
    Ok(format!("{count} polynomial catalog maps; V = I for H(n,d)"))
}

fn c11() -> Check {
    let h = quartic_map();
    let target = homogeneous_map(2, 4).unwrap();
    let r = build_reflection(&h).map_err(|e| e.to_string())?;
    let b = solve_hol(&h).map_err(|e| e.to_string())?;
    let images: Vec<PolyVector> = b.basis.iter().map(|x| push_through_v(&r, x)).collect();
    for (x, y) in b.basis.iter().zip(&images) {
        ensure(in_hol(&target, y), format!("V X not in hol(H(2,4)) for X = {x}"))?;
    }
    let rank = real_rank(&images);
    ensure(
        rank == b.basis.len(),
        format!("images have rank {rank} of {}", b.basis.len()),
    )?;
    Ok(format!("{} images in hol(H(2,4)), independent", images.len()))
}

fn c12() -> Check {
    let mut maps = catalog_maps();
    let u = rotation_block(
        3,
        0,
        2,
        ComplexRadical::from_ratio(3, 5),
        ComplexRadical::from_ratio(4, 5),
    );
    maps.push(apply_unitary(&homogeneous_map(2, 2).unwrap(), &u).map_err(|e| e.to_string())?);
    let mut equal = Vec::new();
    let mut checked = 0;
    for h in maps {
        let b = solve_hol(&h).map_err(|e| e.to_string())?;
        if b.truncated {
            // Degenerate maps have infinite dimensional hol; the bound is for
            // nondegenerate maps.
            continue;
        }
        let bound = dim_formula(h.n(), h.degree());
        ensure(
            b.real_dimension <= bound,
            format!("{}: {} > {bound}", h.name(), b.real_dimension),
        )?;
        checked += 1;
        if b.real_dimension == bound {
            ensure(
                h.is_polynomial(),
                format!("{}: rational map attains the bound", h.name()),
            )?;
            let hd = homogeneous_map(h.n(), h.degree()).unwrap();
            // A unitary image of H(n,d) has |P|^2 = |H(n,d)|^2 identically and the same size.
            let same = h.m() == hd.m()
                && (&h.numerator().dot(&h.numerator().conjugate()) - &hd.numerator().dot(&hd.numerator().conjugate()))
                    .is_zero();
            ensure(
                same,
                format!("{} attains the bound but is not a unitary image of H(n,d)", h.name()),
            )?;
            equal.push(h.name().to_string());
        }
    }
    Ok(format!("{checked} maps within the bound; equality only for {equal:?}"))
}

fn c13() -> Check {
    let f = family_map(1, &rat(1, 10)).map_err(|e| e.to_string())?;
    ensure(f.validate(), "F(1, 1/10) invalid")?;
    ensure(
        classify_map(&f)
            .map_err(|e| e.to_string())?
            .holomorphically_nondegenerate,
        "degenerate",
    )?;
    let h3 = homogeneous_map(2, 3).unwrap();
    let x = family_derivative(1);
    ensure(in_hol(&h3, &x), "derivative not in hol(H(2,3))")?;
    ensure(
        !is_trivial_deformation(&h3, &x).map_err(|e| e.to_string())?,
        "derivative is trivial",
    )?;
    let basis = hom_deformation_basis(3);
    let mut with = basis.clone();
    with.push(x);
    ensure(
        real_rank(&with) == real_rank(&basis),
        "derivative not in the span of the closed-form basis",
    )?;
    Ok("valid, nondegenerate; derivative nontrivial and in the closed-form span".into())
}

fn c14() -> Check {
    let mut count = 0;
    for n in [3, 4] {
        let relations = commutator_relations(n);
        if let Some(bad) = relations.iter().find(|r| !r.holds()) {
            return Err(format!(
                "{} fails for n = {n} at (i,j,k,l) = {:?}",
                bad.name, bad.indices
            ));
        }
        count += relations.len();
    }
    ensure(two_variable_relation().holds(), "[S, Lbar] = 2 Lbar fails for n = 2")?;
    // [T_ki, Lbar_kj] is Lbar_ij, not zero.
    let barred = VectorField::t(3, 2, 0).lie_bracket(&VectorField::lbar(3, 2, 1));
    ensure(!barred.is_zero(), "[T_ki, Lbar_kj] vanishes")?;
    Ok(format!(
        "{count} relation instances for n = 3, 4 and the n = 2 relation; third L relation checked as [T_ki, L_kj] = 0"
    ))
}

fn c15() -> Check {
    let g = group_invariant_map(3).unwrap();
    let r = build_reflection(&g).map_err(|e| e.to_string())?;
    let alpha = PolyVector::unit(2, 5, 3, ComplexRadical::one());
    let x = alpha.sub(&g.numerator().mul_poly(&g.numerator().entries[3]));
    ensure(in_hol(&g, &x), "X not a deformation")?;
    let v = r.transpose_conjugate_apply(&r.apply_v(&x));
    let bound = 2 * g.degree();
    ensure(
        holomorphic_extension_on_sphere(&v, bound).is_none(),
        "extends holomorphically",
    )?;
    let sanity = BiPoly::parse(2, "z*conj(z) + w*conj(w)").unwrap();
    let control = g.numerator().mul_poly(&sanity);
    ensure(
        holomorphic_extension_on_sphere(&control, bound).is_some(),
        "control fails to extend",
    )?;
    Ok(format!("no holomorphic extension at degree bound {bound}"))
}

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "dim hol(H(2,d)) = (d+1)^3, d = 1..3",
            budget: s(30),
            run: c1,
        },
        Criterion {
            id: 2,
            title: "dim hol(H(3,2)) = 84",
            budget: s(60),
            run: c2,
        },
        Criterion {
            id: 3,
            title: "reflection matrix of the quartic map",
            budget: s(1),
            run: c3,
        },
        Criterion {
            id: 4,
            title: "degeneracy profile of the quartic map",
            budget: s(5),
            run: c4,
        },
        Criterion {
            id: 5,
            title: "isolated degenerate point",
            budget: s(5),
            run: c5,
        },
        Criterion {
            id: 6,
            title: "pencil map is holomorphically degenerate",
            budget: s(2),
            run: c6,
        },
        Criterion {
            id: 7,
            title: "group invariant maps G(0..4)",
            budget: s(5),
            run: c7,
        },
        Criterion {
            id: 8,
            title: "rigidity verdicts",
            budget: s(30),
            run: c8,
        },
        Criterion {
            id: 9,
            title: "jet and reflection degeneracy agree on the catalog",
            budget: s(120),
            run: c9,
        },
        Criterion {
            id: 10,
            title: "reflection identities",
            budget: s(30),
            run: c10,
        },
        Criterion {
            id: 11,
            title: "transport through V into hol(H(2,4))",
            budget: s(30),
            run: c11,
        },
        Criterion {
            id: 12,
            title: "upper bound and maximality",
            budget: s(120),
            run: c12,
        },
        Criterion {
            id: 13,
            title: "rational family member F(1, 1/10)",
            budget: s(30),
            run: c13,
        },
        Criterion {
            id: 14,
            title: "commutator relations",
            budget: s(5),
            run: c14,
        },
        Criterion {
            id: 15,
            title: "reflected G(3) field has no holomorphic extension",
            budget: s(10),
            run: c15,
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= c.budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {verdict}  {}  [{:.2} s / {} s]  {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("acceptance: {} of 15 criteria passed", 15 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
