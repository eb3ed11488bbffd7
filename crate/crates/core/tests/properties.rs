use euler_chow::monoid::{product, Generator};
use euler_chow::oracle::{naive_convolve, naive_expand, naive_pullback, naive_pushforward};
use euler_chow::{
    FormalSeries, GradedMonoid, IntSeries, MonoidElement, MonoidMorphism, RationalSeries,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn monoid_strategy(max_rank: usize) -> impl Strategy<Value = GradedMonoid> {
    prop::collection::vec(1u32..=3, 1..=max_rank).prop_map(|weights| {
        let gens = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| Generator::new(format!("g{i}"), w))
            .collect();
        GradedMonoid::new(gens).unwrap()
    })
}

/// A series over `m` keeping each element of grade ≤ `bound` with a coin
/// flip, coefficients in -4..=4.
fn series_over(m: GradedMonoid, bound: u64) -> impl Strategy<Value = IntSeries> {
    let elements = m.enumerate_up_to(bound);
    let n = elements.len();
    prop::collection::vec((any::<bool>(), -4i64..=4), n).prop_map(move |picks| {
        let terms = elements
            .iter()
            .zip(picks)
            .filter(|(_, (keep, _))| *keep)
            .map(|(e, (_, c))| (e.clone(), BigInt::from(c)));
        FormalSeries::from_terms(m.clone(), bound, terms).unwrap()
    })
}

fn three_series() -> impl Strategy<Value = (IntSeries, IntSeries, IntSeries)> {
    (monoid_strategy(3), 0u64..=6).prop_flat_map(|(m, b)| {
        (
            series_over(m.clone(), b),
            series_over(m.clone(), b),
            series_over(m, b),
        )
    })
}

fn images(source_rank: usize, target_rank: usize) -> impl Strategy<Value = Vec<MonoidElement>> {
    prop::collection::vec(
        prop::collection::vec(0u32..=2, target_rank)
            .prop_filter("nonzero image", |e| e.iter().any(|&x| x > 0))
            .prop_map(MonoidElement::from),
        source_rank,
    )
}

fn morphism_and_series() -> impl Strategy<Value = (MonoidMorphism, IntSeries, IntSeries)> {
    (monoid_strategy(3), monoid_strategy(2), 0u64..=6).prop_flat_map(|(m, n, b)| {
        let (mr, nr) = (m.rank(), n.rank());
        (
            images(mr, nr),
            series_over(m.clone(), b),
            series_over(m.clone(), b),
        )
            .prop_map(move |(img, f, g)| {
                (
                    MonoidMorphism::new(m.clone(), n.clone(), img).unwrap(),
                    f,
                    g,
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convolution_is_a_commutative_ring((f, g, h) in three_series()) {
        let b = f.bound();
        let fg = f.convolve(&g).unwrap();
        prop_assert!(fg.equals_up_to(&g.convolve(&f).unwrap(), b).unwrap());
        let l = fg.convolve(&h).unwrap();
        let r = f.convolve(&g.convolve(&h).unwrap()).unwrap();
        prop_assert!(l.equals_up_to(&r, b).unwrap());
        let d = f.convolve(&g.add(&h).unwrap()).unwrap();
        let s = fg.add(&f.convolve(&h).unwrap()).unwrap();
        prop_assert!(d.equals_up_to(&s, b).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn convolution_matches_oracle((f, g, _h) in three_series()) {
        let b = f.bound();
        prop_assert!(naive_convolve(&f, &g, b).unwrap().matches(&f.convolve(&g).unwrap()));
    }

    #[test]
    fn pushforward_is_a_homomorphism((psi, f, g) in morphism_and_series()) {
        let pf = f.pushforward(&psi).unwrap();
        let pg = g.pushforward(&psi).unwrap();
        let pfg = f.convolve(&g).unwrap().pushforward(&psi).unwrap();
        let prod = pf.convolve(&pg).unwrap();
        prop_assert!(prod.equals_up_to(&pfg, prod.bound().min(pfg.bound())).unwrap());
        let sum = f.add(&g).unwrap().pushforward(&psi).unwrap();
        prop_assert_eq!(sum, pf.add(&pg).unwrap());
        prop_assert!(naive_pushforward(&psi, &f, pf.bound()).unwrap().matches(&pf));
    }

    #[test]
    fn pullback_matches_oracle_and_pushforward_adjunction((psi, f, _g) in morphism_and_series()) {
        // Pull back the pushed series: same coefficients as the direct oracle.
        let pf = f.pushforward(&psi).unwrap();
        let back = pf.pullback(&psi).unwrap();
        prop_assert!(naive_pullback(&psi, &pf, back.bound()).unwrap().matches(&back));
        prop_assert!(back.bound() <= f.bound());
    }

    #[test]
    fn exterior_products_associate((f, g, h) in three_series()) {
        let l = f.exterior(&g).exterior(&h);
        let r = f.exterior(&g.exterior(&h));
        let r = r.relabeled(l.monoid().clone()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn exterior_is_product_of_injected_series((f, g, _h) in three_series()) {
        // f ⊙ g = ι_1♯ f ∗ ι_2♯ g on M × N.
        let prod = product(f.monoid(), g.monoid());
        let a = f.pushforward(&prod.injections.0).unwrap();
        let b = g.pushforward(&prod.injections.1).unwrap();
        let ext = f.exterior(&g);
        let conv = a.convolve(&b).unwrap();
        let bound = ext.bound().min(conv.bound());
        prop_assert!(ext.equals_up_to(&conv, bound).unwrap());
    }

    #[test]
    fn enumeration_is_sorted_and_complete(m in monoid_strategy(3), b in 0u64..=8) {
        let all = m.enumerate_up_to(b);
        for w in all.windows(2) {
            prop_assert_eq!(m.graded_lex_cmp(&w[0], &w[1]), std::cmp::Ordering::Less);
        }
        prop_assert!(all.iter().all(|e| m.grade(e) <= b));
        // Brute-force count over the exponent box.
        let weights: Vec<u64> = m.weights().map(u64::from).collect();
        let mut count = 0usize;
        let mut stack = vec![(0usize, 0u64)];
        while let Some((i, g)) = stack.pop() {
            if i == weights.len() {
                count += 1;
                continue;
            }
            let mut k = 0;
            while g + k * weights[i] <= b {
                stack.push((i + 1, g + k * weights[i]));
                k += 1;
            }
        }
        prop_assert_eq!(all.len(), count);
    }

    #[test]
    fn expansion_matches_binomial_product(
        m in monoid_strategy(2),
        factors in prop::collection::vec((prop::collection::vec(0u32..=2, 2), 1u32..=3), 0..=3),
        b in 0u64..=6,
    ) {
        let factors: Vec<(MonoidElement, u32)> = factors
            .into_iter()
            .map(|(e, k)| (MonoidElement::from(e[..m.rank()].to_vec()), k))
            .filter(|(e, _)| !e.is_zero())
            .collect();
        let r = RationalSeries::product_of_geometrics(m.clone(), factors.clone()).unwrap();
        prop_assert!(naive_expand(&r, b).unwrap().matches(&r.expand(b)));
        let mut reversed = factors;
        reversed.reverse();
        let r2 = RationalSeries::product_of_geometrics(m, reversed).unwrap();
        prop_assert_eq!(r.expand(b), r2.expand(b));
    }
}
