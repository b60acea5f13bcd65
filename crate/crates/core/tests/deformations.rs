use num_traits::ToPrimitive;
use spheremap::deformations::*;
use spheremap::maps::*;
use spheremap::polys::{parse_list, BiPoly, Point, PolyVector};
use spheremap::reflection::build_reflection;
use spheremap::scalars::{rat, ComplexRadical, RadicalReal};

fn vector(n: usize, s: &str) -> PolyVector {
    PolyVector::new(parse_list(n, s).unwrap())
}

/// Instantiates a template in which `A` is a parameter and `B` its conjugate.
fn instances(template: &str) -> Vec<PolyVector> {
    [("(1)", "(1)"), ("(i)", "(-i)")]
        .iter()
        .map(|(a, b)| vector(2, &template.replace('A', a).replace('B', b)))
        .collect()
}

const R2: &str = "1/2*sqrt(2)";
const R3: &str = "1/3*sqrt(3)";

fn y22() -> Vec<String> {
    vec![
        format!("(A*w, -{R2}*B*z^3, -B*z^2*w)"),
        format!("(-B*z^2*w, {R2}*(A*z - B*z*w^2), 0)"),
    ]
}

fn y32() -> Vec<String> {
    vec![
        format!("(A*z - B*z^5, -2*{R3}*B*z^4*w, -{R3}*B*z^3*w^2, 0)"),
        format!("(A*w, -{R3}*B*z^5, -2*{R3}*B*z^4*w, -B*z^3*w^2)"),
        format!("(A*w^2, 0, -{R3}*B*z^4, -B*z^3*w)"),
        format!("(A*z*w, -{R3}*B*z^4, -{R3}*B*z^3*w, 0)"),
        format!("(-B*z^4*w, {R3}*(A*z - 2*B*z^3*w^2), -{R3}*B*z^2*w^3, 0)"),
        format!("(0, {R3}*(A*w - B*z^4*w), -2*{R3}*B*z^3*w^2, -B*z^2*w^3)"),
        format!("(0, {R3}*A*w^2, -{R3}*B*z^3*w, -B*z^2*w^2)"),
        format!("(-B*z^3*w, {R3}*(A*z^2 - B*z^2*w^2), 0, 0)"),
        format!("(0, {R3}*(A*z*w - B*z^3*w), -{R3}*B*z^2*w^2, 0)"),
    ]
}

fn g4_vector() -> Vec<PolyVector> {
    // c1 = c4 = 3, c2 = 3 sqrt(3), c3 = sqrt(30)
    instances(
        "(0, -1/3*B*z^6*w^3, -2/3*sqrt(3)*B*z^4*w^4, 1/30*sqrt(30)*z^2*w*(A*z^2 - 9*B*w^4), \
         1/3*w^2*(3*A*z^2 - B*w^4), A*z*w^7)",
    )
}

#[test]
fn homogeneous_dimensions() {
    for (n, d) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let h = homogeneous_map(n, d).unwrap();
        let b = solve_hol(&h).unwrap();
        assert_eq!(b.real_dimension, dim_formula(n, d), "H({n},{d})");
        assert!(!b.truncated);
        if n == 2 {
            assert_eq!(b.real_dimension, ((d + 1) as usize).pow(3));
        }
        for x in &b.basis {
            assert!(in_hol(&h, x));
            assert!(x.degree() <= 2 * d);
        }
        assert_eq!(real_rank(&b.basis), b.basis.len());
        // H_n^1 is the identity, whose stabilizer is all of hol(S^{2n-1}).
        let stab = if d == 1 { n * (n + 2) } else { n * n };
        assert_eq!(b.stabilizer_dimension, stab, "H({n},{d})");
    }
}

#[test]
fn dimension_formula_values() {
    assert_eq!(dim_formula(2, 1), 8);
    assert_eq!(dim_formula(3, 2), 84);
    for d in 1..6 {
        assert_eq!(dim_formula(2, d), ((d + 1) as usize).pow(3));
    }
}

#[test]
fn identity_map_has_only_trivial_deformations() {
    let h = identity_map(2).unwrap();
    let b = solve_hol(&h).unwrap();
    assert_eq!(b.real_dimension, 8);
    assert_eq!(b.aut_dimension, 8);
    assert_eq!(b.rigid(), Some(true));
}

#[test]
fn stabilizers() {
    let h = homogeneous_map(2, 2).unwrap();
    let aut = aut_basis(&h);
    assert_eq!(aut.raw_count, 3 * 5 + 8);
    let expected: Vec<PolyVector> = sphere_automorphisms(2)
        .into_iter()
        .filter(|(l, _)| !l.starts_with("S1"))
        .map(|(_, v)| v)
        .collect();
    assert_eq!(expected.len(), 4);
    let mut all = expected.clone();
    all.extend(aut.stabilizer.clone());
    assert_eq!(real_rank(&all), 4);
    for l in 1..=3 {
        let g = group_invariant_map(l).unwrap();
        let aut = aut_basis(&g);
        assert_eq!(aut.stabilizer.len(), 2, "G{l}");
        let s3: Vec<PolyVector> = sphere_automorphisms(2)
            .into_iter()
            .filter(|(l, _)| l.starts_with("S3"))
            .map(|(_, v)| v)
            .chain(aut.stabilizer.clone())
            .collect();
        assert_eq!(real_rank(&s3), 2);
    }
}

#[test]
fn aut_generators_are_deformations() {
    let maps = vec![
        homogeneous_map(2, 3).unwrap(),
        whitney_map(),
        quartic_map(),
        group_invariant_map(2).unwrap(),
        family_map(1, &rat(1, 10)).unwrap(),
    ];
    for h in maps {
        let aut = aut_basis(&h);
        assert!(generators_are_members(&h, &aut), "{}", h.name());
    }
}

#[test]
fn rigidity_verdicts() {
    assert!(is_infinitesimally_rigid(&group_invariant_map(1).unwrap()).unwrap());
    assert!(is_infinitesimally_rigid(&whitney_map()).unwrap());
    let g4 = group_invariant_map(4).unwrap();
    assert!(!is_infinitesimally_rigid(&g4).unwrap());
    for x in g4_vector() {
        assert!(in_hol(&g4, &x));
        assert!(!is_trivial_deformation(&g4, &x).unwrap());
    }
}

#[test]
fn membership_basics() {
    for h in [whitney_map(), quartic_map(), group_invariant_map(2).unwrap()] {
        let ih = h.numerator().scale(&ComplexRadical::i());
        assert!(in_hol(&h, &ih));
        assert!(is_trivial_deformation(&h, &ih).unwrap());
        assert!(!in_hol(&h, h.numerator()));
        assert!(is_trivial_deformation(&h, h.numerator()).is_err());
    }
}

#[test]
fn first_target_generator_is_trivial() {
    let h = homogeneous_map(2, 2).unwrap();
    let x = PolyVector::unit(2, 3, 0, ComplexRadical::one()).sub(&h.numerator().mul_poly(&h.numerator().entries[0]));
    assert!(is_trivial_deformation(&h, &x).unwrap());
}

#[test]
fn listed_deformations_of_homogeneous_maps() {
    let h2 = homogeneous_map(2, 2).unwrap();
    for t in y22() {
        for x in instances(&t) {
            assert!(in_hol(&h2, &x), "{x}");
            assert!(!is_trivial_deformation(&h2, &x).unwrap(), "{x}");
            assert!(in_hol(&h2, &swap_symmetry(&x)));
        }
    }
    let h3 = homogeneous_map(2, 3).unwrap();
    let mut rows = Vec::new();
    for t in y32() {
        for x in instances(&t) {
            assert!(in_hol(&h3, &x), "{x}");
            assert!(!is_trivial_deformation(&h3, &x).unwrap(), "{x}");
            rows.push(swap_symmetry(&x));
            rows.push(x);
        }
    }
    // Together with their mirror images and aut they fill hol(H^3_2).
    rows.extend(aut_basis(&h3).generators);
    assert_eq!(real_rank(&rows), 64);
}

#[test]
fn closed_form_generators_span_hol() {
    for d in 1..=3 {
        let h = homogeneous_map(2, d).unwrap();
        let gens = hom_deformation_basis(d);
        let size = (d + 1) as usize;
        assert_eq!(gens.len(), size * size * (size + 1));
        for x in &gens {
            assert!(in_hol(&h, x), "{x}");
            assert!(in_hol(&h, &swap_symmetry(x)));
        }
        assert_eq!(real_rank(&gens), size.pow(3));
        let mut both = gens.clone();
        both.extend(solve_hol(&h).unwrap().basis);
        assert_eq!(real_rank(&both), size.pow(3));
    }
    let first = vector(2, &format!("(w, -{R2}*z^3, -z^2*w)"));
    let mut with = hom_deformation_basis(2);
    let r = real_rank(&with);
    with.push(first);
    assert_eq!(real_rank(&with), r);
}

#[test]
fn transport_through_the_reflection_matrix() {
    let h = quartic_map();
    let r = build_reflection(&h).unwrap();
    let hd = homogeneous_map(2, 4).unwrap();
    let b = solve_hol(&h).unwrap();
    let images: Vec<PolyVector> = b.basis.iter().map(|x| push_through_v(&r, x)).collect();
    for y in &images {
        assert!(in_hol(&hd, y));
    }
    assert_eq!(real_rank(&images), b.basis.len());
    assert!(!in_hol(&hd, &push_through_v(&r, h.numerator())));
    let id = build_reflection(&hd).unwrap();
    let x = &b.basis[0];
    let padded = push_through_v(&r, x);
    assert_eq!(push_through_v(&id, &padded), padded);
}

#[test]
fn tensoring_deformations() {
    let h = homogeneous_map(2, 3).unwrap();
    let g = homogeneous_map(2, 1).unwrap();
    let a = SubspaceSelector::coordinates(&[0]);
    let f = tensor_map(&h, &a, &g).unwrap();
    let x = PolyVector::unit(2, 4, 0, ComplexRadical::one()).sub(&h.numerator().mul_poly(&h.numerator().entries[0]));
    assert!(in_hol(&h, &x));
    let tx = tensor_deformation(&x, &h, &a, &g).unwrap();
    assert!(in_hol(&f, &tx));
    assert!(!is_trivial_deformation(&f, &tx).unwrap());

    let ih = h.numerator().scale(&ComplexRadical::i());
    let t_ih = tensor_deformation(&ih, &h, &a, &g).unwrap();
    assert_eq!(t_ih, f.numerator().scale(&ComplexRadical::i()));

    let none = SubspaceSelector::coordinates(&[]);
    assert_eq!(tensor_deformation(&x, &h, &none, &g).unwrap(), x);
    assert!(tensor_deformation(h.numerator(), &h, &a, &g).is_err());

    assert!(solve_hol(&h).unwrap().real_dimension <= solve_hol(&f).unwrap().real_dimension);
}

#[test]
fn upper_bound_and_maximality() {
    let u = rotation_block(
        3,
        0,
        2,
        ComplexRadical::from_ratio(3, 5),
        ComplexRadical::from_ratio(4, 5),
    );
    let rotated = apply_unitary(&homogeneous_map(2, 2).unwrap(), &u).unwrap();
    assert_eq!(solve_hol(&rotated).unwrap().real_dimension, 27);
    let others = vec![
        whitney_map(),
        group_invariant_map(1).unwrap(),
        quartic_map(),
        isolated_point_default(),
        family_map(1, &rat(1, 10)).unwrap(),
    ];
    for h in others {
        let b = solve_hol(&h).unwrap();
        assert!(b.real_dimension < dim_formula(h.n(), h.degree()), "{}", h.name());
    }
}

#[test]
fn degenerate_maps_are_truncated() {
    let t = RadicalReal::from_ratio(3, 5);
    let j = juxtapose(&homogeneous_map(2, 1).unwrap(), &homogeneous_map(2, 2).unwrap(), &t).unwrap();
    let p = pad_map(&homogeneous_map(2, 2).unwrap(), 1).unwrap();
    for h in [j, p] {
        let b = solve_hol(&h).unwrap();
        assert!(b.truncated);
        assert_eq!(b.rigid(), None);
        assert!(b.dimension_label().starts_with("truncated; infinite"));
        assert!(is_infinitesimally_rigid(&h).is_err());
    }
}

#[test]
fn rational_family_member() {
    let h = family_map(1, &rat(1, 10)).unwrap();
    assert!(h.validate());
    let b = solve_hol(&h).unwrap();
    assert!(!b.truncated);
    for x in &b.basis {
        assert!(in_hol(&h, x));
    }
    // Some trivial deformations are not of the form X'/Q with X' polynomial.
    assert!(b.aut_total_dimension > b.aut_dimension);
}

#[test]
fn family_derivative_is_a_nontrivial_deformation() {
    let h = homogeneous_map(2, 3).unwrap();
    let x = family_derivative(1);
    assert!(in_hol(&h, &x));
    assert!(!is_trivial_deformation(&h, &x).unwrap());
    let mut gens = hom_deformation_basis(3);
    let r = real_rank(&gens);
    gens.push(x);
    assert_eq!(real_rank(&gens), r);
}

fn approx(c: &ComplexRadical) -> (f64, f64) {
    let f = |r: &RadicalReal| r.bounds(60).0.to_f64().unwrap();
    (f(&c.re), f(&c.im))
}

#[test]
fn family_derivative_matches_difference_quotient() {
    let s = rat(1, 1000);
    let plus = family_map(1, &s).unwrap();
    let minus = family_map(1, &-s.clone()).unwrap();
    let x = family_derivative(1);
    let points = ["1/2,0,1/3,0", "1/5,1/7,-1/2,1/4", "0,1/3,1/3,-1/6"];
    for p in points {
        let p = Point::parse(p).unwrap();
        let a = plus.evaluate(&p).unwrap();
        let b = minus.evaluate(&p).unwrap();
        let d = x.evaluate(p.coords());
        let two_s = ComplexRadical::from_rational(&s * rat(2, 1));
        for k in 0..4 {
            let q = &(&a[k] - &b[k]) * &two_s.inverse().unwrap();
            let (er, ei) = approx(&(&q - &d[k]));
            assert!(er.abs() < 1e-4 && ei.abs() < 1e-4, "component {k}: {er} {ei}");
        }
    }
    let _ = BiPoly::zero(2);
}
