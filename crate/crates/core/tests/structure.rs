use lff_core::bflin::{
    gamma_ratio_check, is_general_position, lin_l_langlands, lin_l_via_derivatives, translation_cases,
    verify_main_theorem,
};
use lff_core::cosets::{enumerate_relevant, modulus_identity_defect, modulus_quotient_closed_form, modulus_quotient_direct};
use lff_core::distinction::{classify_generic, ShalikaCriterion};
use lff_core::galois::{clebsch_gordan, WDRep};
use lff_core::pairs::pair_l;
use lff_core::reps::Derivative;
use lff_core::{Cuspidal, EulerFactor, GLRep, Monomial, Segment, Q};
use proptest::prelude::*;

fn character() -> impl Strategy<Value = Cuspidal> {
    (1u32..4, -2i64..=2, 0i64..2).prop_map(|(z, e, sign)| {
        Cuspidal::character(Monomial::symbol(z) * Monomial::q_pow(Q::new(e, 2)) * Monomial::zeta(sign, 2))
    })
}

fn segment() -> impl Strategy<Value = Segment> {
    (character(), 1u32..4).prop_map(|(c, k)| Segment::centered(c, k))
}

fn rep() -> impl Strategy<Value = GLRep> {
    prop::collection::vec(segment(), 1..4).prop_map(GLRep::new)
}

fn small_rep() -> impl Strategy<Value = GLRep> {
    prop::collection::vec(segment(), 1..3)
        .prop_filter("n <= 5", |s| s.iter().map(Segment::dim).sum::<u32>() <= 5)
        .prop_map(GLRep::new)
}

fn triv() -> Cuspidal {
    Cuspidal::trivial_character()
}

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..ProptestConfig::default() })]

    #[test]
    fn segment_derivatives_compose(d in segment(), i in 0u32..4, j in 0u32..4) {
        prop_assume!(i + j < d.k());
        let Derivative::Seg(a) = d.derivative(i).unwrap() else { unreachable!() };
        let Derivative::Seg(b) = a.derivative(j).unwrap() else { unreachable!() };
        prop_assert_eq!(d.derivative(i + j).unwrap(), Derivative::Seg(b));
    }

    #[test]
    fn components_partition_tuples(pi in rep()) {
        let mut total = 0usize;
        for l in 0..=pi.n() {
            total += pi.derivative_components(l).unwrap().len();
        }
        let tuples: usize = pi.segments.iter().map(|s| s.k() as usize + 1).product();
        prop_assert_eq!(total, tuples);
    }

    #[test]
    fn langlands_sort_is_idempotent_permutation(pi in rep()) {
        let s = pi.langlands_sort();
        prop_assert_eq!(s.langlands_sort(), s.clone());
        prop_assert!(s.same_multiset(&pi));
        prop_assert!(pi.dual().langlands_sort().same_multiset(&s.dual()));
    }

    #[test]
    fn galois_identities(pi in rep()) {
        let phi = WDRep::langlands_param(&pi);
        prop_assert_eq!(phi.tensor(&phi).unwrap().artin_l(), phi.wedge2().unwrap().artin_l().mul(&phi.sym2().unwrap().artin_l()));
        let d = phi.dim() as usize;
        prop_assert_eq!(phi.wedge2().unwrap().dim() as usize, d * (d - 1) / 2);
        prop_assert_eq!(phi.wedge2().unwrap().dual(), phi.dual().wedge2().unwrap());
        prop_assert_eq!(phi.wedge2_l(), phi.wedge2().unwrap().artin_l());
    }

    #[test]
    fn artin_additive(a in rep(), b in rep()) {
        let (pa, pb) = (WDRep::langlands_param(&a), WDRep::langlands_param(&b));
        prop_assert_eq!(pa.direct_sum(&pb).artin_l(), pa.artin_l().mul(&pb.artin_l()));
    }

    #[test]
    fn pair_symmetry_and_twists(a in segment(), b in segment(), u in -2i64..=2) {
        let u = Q::new(u, 2);
        let ab = pair_l(&a, &b);
        prop_assert_eq!(&ab, &pair_l(&b, &a));
        let tw = pair_l(&a.twist_abs(u), &b);
        prop_assert_eq!(tw.l, ab.l.shift(u));
        prop_assert_eq!(tw.lradex, ab.lradex.shift(u));
        prop_assert!(ab.lradex.max_multiplicity() <= 1);
        for i in 0..a.k() {
            for j in 0..b.k() {
                let (Derivative::Seg(da), Derivative::Seg(db)) = (a.derivative(i).unwrap(), b.derivative(j).unwrap()) else {
                    unreachable!()
                };
                prop_assert!(pair_l(&da, &db).l.divides(&ab.l));
            }
        }
    }

    #[test]
    fn main_theorem_on_products(pi in small_rep()) {
        prop_assume!(pi.is_generic());
        let r = verify_main_theorem(&pi).unwrap();
        prop_assert!(r.equal, "{}: only lhs {} only rhs {}", pi, r.only_lhs, r.only_rhs);
        prop_assert!(gamma_ratio_check(&pi, &triv(), &ShalikaCriterion).unwrap());
    }

    #[test]
    fn two_paths_in_general_position(pi in small_rep(), ts in prop::collection::vec(1u32..40, 3)) {
        let o = ShalikaCriterion;
        let twists: Vec<Monomial> = ts.iter().take(pi.len()).map(|&z| Monomial::symbol(10 + z)).collect();
        let rep = is_general_position(&pi, &twists, &triv(), &o).unwrap();
        let u = rep.twisted.clone();
        if rep.in_general_position() {
            let a = lin_l_via_derivatives(&u, &triv(), &o).unwrap();
            prop_assert_eq!(a, lin_l_langlands(&u, &triv(), &o).unwrap().l);
        } else {
            prop_assert!(!rep.violated().is_empty());
        }
    }

    #[test]
    fn translation_situations(pi in small_rep()) {
        prop_assume!(pi.is_generic() && pi.len() >= 2);
        for (u, cases) in translation_cases(&pi, &triv(), &ShalikaCriterion).unwrap() {
            prop_assert!(!cases.is_empty(), "{} at {}", pi, u);
        }
    }

    #[test]
    fn distinction_dual_invariance(pi in small_rep()) {
        prop_assume!(pi.is_generic() && pi.n() % 2 == 0);
        let o = ShalikaCriterion;
        let a = classify_generic(&pi, &triv(), &o).unwrap().is_some();
        prop_assert_eq!(a, classify_generic(&pi.dual(), &triv(), &o).unwrap().is_some());
    }
}

#[test]
fn clebsch_gordan_dimensions() {
    for a in 1..=8 {
        for b in 1..=8 {
            assert_eq!(clebsch_gordan(a, b).iter().sum::<u32>(), a * b);
        }
    }
}

#[test]
fn cosets_sweep() {
    for n in 1..=6u32 {
        for nbar in lff_core::cosets::compositions(n) {
            let subs = enumerate_relevant(&nbar);
            let mut rev = nbar.clone();
            rev.reverse();
            assert_eq!(subs.len(), enumerate_relevant(&rev).len());
            for s in subs {
                assert!(s.is_valid());
                assert!(modulus_identity_defect(&s).is_trivial());
                assert_eq!(modulus_quotient_direct(&s), modulus_quotient_closed_form(&s), "{s}");
            }
        }
    }
}

#[test]
fn unit_rep_has_trivial_factor() {
    let r = verify_main_theorem(&GLRep::unit());
    assert!(r.map(|r| r.lhs == EulerFactor::one()).unwrap_or(true));
}
