use spheremap::degeneracy::*;
use spheremap::maps::*;
use spheremap::polys::{parse_list, rational_sphere_points, special_points, BiPoly, Point};
use spheremap::reflection::build_reflection;
use spheremap::scalars::{ComplexRadical, RadicalReal};

fn pt(s: &str) -> Point {
    Point::parse(s).unwrap()
}

fn pencil() -> SphereMap {
    pencil_map(&RadicalReal::from_ratio(3, 5), &RadicalReal::from_ratio(4, 5)).unwrap()
}

fn profile(h: &SphereMap, p: &Point) -> (usize, (usize, usize)) {
    let r = build_reflection(h).unwrap();
    let k = kernel_at_point(&r, p).unwrap();
    let j = jet_degeneracy(h, p, default_max_order(h)).unwrap();
    assert!(!j.inconclusive);
    (k.kernel_dim, j.label().unwrap())
}

#[test]
fn quartic_profile() {
    let h = quartic_map();
    assert_eq!(profile(&h, &pt("3/5,0,4/5,0")), (0, (3, 0)));
    assert_eq!(profile(&h, &pt("0,0,1,0")), (0, (4, 0)));
    assert_eq!(profile(&h, &pt("1,0,0,0")), (1, (3, 1)));
    let r = build_reflection(&h).unwrap();
    for p in rational_sphere_points(2, 5, 3) {
        assert_eq!(kernel_at_point(&r, &p).unwrap().kernel_dim, 0);
    }
}

#[test]
fn isolated_point_profile() {
    let h = isolated_point_default();
    assert_eq!(profile(&h, &pt("3/5,0,4/5,0")), (0, (3, 0)));
    assert_eq!(profile(&h, &pt("1,0,0,0")), (1, (2, 1)));
    assert_eq!(profile(&h, &pt("0,0,-1,0")), (1, (2, 1)));
    assert_eq!(profile(&h, &pt("0,0,1,0")), (2, (1, 2)));
}

#[test]
fn isolated_point_strata_are_certified() {
    let s = stratify(&build_reflection(&isolated_point_default()).unwrap()).unwrap();
    assert!(s.certified);
    assert_eq!(s.generic_degeneracy, 0);
    let levels: Vec<usize> = s.strata.iter().map(|t| t.degeneracy).collect();
    assert_eq!(levels, vec![1, 2]);
    // The degeneracy-one locus is cut out by z^2 w.
    assert_eq!(s.strata[0].minors, vec![BiPoly::parse(2, "z^2*w").unwrap()]);
    assert_eq!(s.strata[1].witnesses, vec![pt("0,0,1,0")]);
}

#[test]
fn homogeneous_maps_are_d_nondegenerate() {
    for (n, d) in [(2, 1), (2, 2), (2, 3), (3, 2)] {
        let h = homogeneous_map(n, d).unwrap();
        for p in rational_sphere_points(n, 3, 5) {
            let j = jet_degeneracy(&h, &p, 10).unwrap();
            assert_eq!(j.label(), Some((d as usize, 0)), "H({n},{d}) at {p}");
        }
        let c = classify_map(&h).unwrap();
        assert!(c.holomorphically_nondegenerate);
        assert!(degeneracy_witness(&build_reflection(&h).unwrap()).unwrap().is_none());
        let r = build_reflection(&h).unwrap();
        assert_eq!(x_classify(&r).unwrap(), XClassification::Graph { certified: true });
    }
}

#[test]
fn jet_cap_is_reported() {
    let h = quartic_map();
    let j = jet_degeneracy(&h, &pt("0,0,1,0"), 2).unwrap();
    assert!(j.inconclusive);
    assert!(j.kernel_dim > 0);
}

#[test]
fn off_sphere_points_are_rejected() {
    let r = build_reflection(&quartic_map()).unwrap();
    assert!(kernel_at_point(&r, &pt("1,0,1,0")).is_err());
    assert!(jet_degeneracy(&quartic_map(), &pt("1/2,0,0,0"), 4).is_err());
}

#[test]
fn pencil_is_degenerate() {
    let h = pencil();
    let c = classify_map(&h).unwrap();
    assert!(c.shortcut && !c.holomorphically_nondegenerate);
    let r = build_reflection(&h).unwrap();
    assert_eq!(generic_rank(&r).unwrap().rank, 3);
    let y = degeneracy_witness(&r).unwrap().unwrap();
    assert_eq!(y.entries, parse_list(2, "0, 1, -3/4*z, -3/4*w").unwrap());
    assert!(y.dot(&h.numerator().conjugate()).vanishes_on_sphere());
    assert_eq!(kernel_at_point(&r, &pt("3/5,0,0,4/5")).unwrap().kernel_dim, 1);
    assert_eq!(kernel_at_point(&r, &pt("0,0,0,1")).unwrap().kernel_dim, 2);
    let s = stratify(&r).unwrap();
    assert_eq!(s.generic_degeneracy, 1);
    assert_eq!(s.strata.len(), 1);
    assert_eq!(s.strata[0].degeneracy, 2);
    for p in &s.strata[0].witnesses {
        assert!(p.coords()[0].is_zero());
    }
}

#[test]
fn quartic_strata() {
    let r = build_reflection(&quartic_map()).unwrap();
    let s = stratify(&r).unwrap();
    assert!(s.certified);
    assert_eq!(s.generic_degeneracy, 0);
    assert_eq!(s.strata.len(), 1);
    let st = &s.strata[0];
    assert_eq!(st.degeneracy, 1);
    let w = BiPoly::z(2, 1);
    for minor in &st.minors {
        assert!(minor.div_exact(&w).is_some(), "{minor}");
    }
    for p in &st.witnesses {
        assert!(p.coords()[1].is_zero());
        for minor in &st.minors {
            assert!(minor.evaluate(p.coords()).is_zero());
        }
    }
    match x_classify_from(&s) {
        XClassification::ExceptionalFibers { generic, strata } => {
            assert_eq!(generic, 0);
            assert_eq!(strata.len(), 1);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn monotone_and_shortcut_consistency() {
    let maps = vec![
        quartic_map(),
        isolated_point_default(),
        pencil(),
        whitney_map(),
        group_invariant_map(2).unwrap(),
    ];
    for h in maps {
        let r = build_reflection(&h).unwrap();
        let s = stratify(&r).unwrap();
        let rows = spheremap::polys::count_monomials(h.n(), h.degree());
        for p in special_points(2, 1).iter().chain(&rational_sphere_points(2, 5, 2)) {
            let k = kernel_at_point(&r, p).unwrap();
            assert!(k.kernel_dim >= s.generic_degeneracy);
            if rows < h.m() {
                assert!(k.kernel_dim >= h.m() - rows);
            }
        }
        for st in &s.strata {
            assert!(st.degeneracy > s.generic_degeneracy);
            for p in &st.witnesses {
                assert_eq!(kernel_at_point(&r, p).unwrap().kernel_dim, st.degeneracy);
            }
        }
    }
}

#[test]
fn group_invariant_maps_are_graphs() {
    for l in 0..=4 {
        let h = group_invariant_map(l).unwrap();
        let r = build_reflection(&h).unwrap();
        let g = generic_rank(&r).unwrap();
        assert_eq!(g.rank, h.m(), "G{l}");
        assert!(matches!(x_classify(&r).unwrap(), XClassification::Graph { .. }), "G{l}");
    }
}

#[test]
fn juxtaposition_is_degenerate() {
    let a = homogeneous_map(2, 1).unwrap();
    let b = homogeneous_map(2, 2).unwrap();
    let t = RadicalReal::from_ratio(3, 5);
    let j = juxtapose(&a, &b, &t).unwrap();
    let r = build_reflection(&j).unwrap();
    let y = degeneracy_witness(&r).unwrap().unwrap();
    assert!(y.dot(&j.numerator().conjugate()).vanishes_on_sphere());
    let expected = juxtaposition_witness(&a, &b, &t).unwrap();
    assert!(r.vh().mul_vec(&expected).is_zero());
    for p in rational_sphere_points(2, 5, 9) {
        assert!(x_fiber(&r, &p).unwrap().dim() >= 1);
    }
}

#[test]
fn padded_map_witness_lives_on_the_zero_block() {
    let h = pad_map(&homogeneous_map(2, 2).unwrap(), 1).unwrap();
    let r = build_reflection(&h).unwrap();
    let y = degeneracy_witness(&r).unwrap().unwrap();
    let zero = BiPoly::zero(2);
    assert_eq!(&y.entries[..3], &[zero.clone(), zero.clone(), zero]);
    assert!(!y.entries[3].is_zero());
}

#[test]
fn fibers() {
    let r = build_reflection(&isolated_point_default()).unwrap();
    let f = x_fiber(&r, &pt("0,0,1,0")).unwrap();
    assert_eq!(f.dim(), 2);
    assert_eq!(f.base, r.map().evaluate(&pt("0,0,1,0")).unwrap());
    assert!(x_fiber(&r, &pt("0,0,0,0")).is_err());
    let g = build_reflection(&whitney_map()).unwrap();
    assert_eq!(x_fiber(&g, &pt("3/5,0,0,4/5")).unwrap().dim(), 0);
    // off the sphere is fine
    assert_eq!(x_fiber(&g, &pt("2,0,1,1")).unwrap().dim(), 0);
}

#[test]
fn family_member_is_nondegenerate() {
    let h = family_map(1, &spheremap::scalars::rat(1, 10)).unwrap();
    let c = classify_map(&h).unwrap();
    assert!(c.holomorphically_nondegenerate);
}

#[test]
fn commutators_in_two_variables() {
    let l = VectorField::l(2, 0, 1);
    let lb = VectorField::lbar(2, 0, 1);
    let s = l.lie_bracket(&lb);
    assert_eq!(s, -&VectorField::s(2, 0, 1));
    assert_eq!(s.lie_bracket(&lb), lb.scale(&ComplexRadical::from_integer(2)));
}
