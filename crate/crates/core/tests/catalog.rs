use euler_chow::catalog::{
    euler_chow, flag012_series, grassmannian13_closed_form, grassmannian_pipeline, lawson_yau_pn,
    split_bundle_closed_form, split_bundle_series, CatalogError, Method, Variety,
};
use euler_chow::schubert::{basis, FlagType};
use euler_chow::{GradedMonoid, IntSeries, RationalSeries};

#[test]
fn every_descriptor_in_range_evaluates() {
    let varieties = [
        Variety::ProjectiveSpace(3),
        Variety::ProductPnP1(2),
        Variety::ProjClosureLineBundle { base_n: 2, d: 3 },
        Variety::Hirzebruch(2),
        Variety::BlowupPnAtPoint(3),
        Variety::Flag012,
        Variety::Grassmannian13,
        Variety::SymmetricPointCase(6),
    ];
    for v in varieties {
        let mut p = 0;
        while let Ok(r) = euler_chow(v, p, 6, Method::Auto) {
            assert_eq!(r.series.bound(), 6);
            assert_eq!(r.generator_dictionary.len(), r.series.monoid().rank());
            let closed = r.closed_form.expect("every entry has a closed form");
            assert_eq!(closed.expand(6), r.series, "{v} p={p}");
            p += 1;
        }
        assert!(p > 0, "{v} has no valid p");
    }
}

#[test]
fn bundle_pipeline_beyond_the_acceptance_cases() {
    for n in 1..=3 {
        for d in 0..=4 {
            for p in 0..=n {
                let pipeline = split_bundle_series(n, d, p, 7).unwrap();
                let closed = split_bundle_closed_form(n, d, p).unwrap().expand(7);
                assert_eq!(pipeline, closed, "(n,d,p)=({n},{d},{p})");
            }
        }
    }
}

#[test]
fn pipeline_only_requests() {
    let r = euler_chow(Variety::Grassmannian13, 2, 5, Method::Pipeline).unwrap();
    assert!(r.closed_form.is_none());
    assert_eq!(r.series, grassmannian13_closed_form(2).unwrap().expand(5));
    assert!(matches!(
        euler_chow(Variety::Flag012, 1, 5, Method::Pipeline),
        Err(CatalogError::NoPipeline { .. })
    ));
}

#[test]
fn assembly_rejects_series_without_schubert_labels() {
    let trivial = IntSeries::one(GradedMonoid::trivial(), 4);
    let plain = lawson_yau_pn(2, 1).unwrap().expand(4);
    let err = grassmannian_pipeline(1, 3, 1, &trivial, &plain, &trivial, 4).unwrap_err();
    assert!(matches!(err, CatalogError::Schubert(_)), "{err}");

    // A G(1,2) symbol in the wrong slot has no image in the trace map.
    let g12 = FlagType::grassmannian(1, 2).unwrap();
    let fixed = plain.relabeled(basis(&g12, 1)).unwrap();
    assert!(grassmannian_pipeline(1, 3, 1, &fixed, &trivial, &trivial, 4).is_err());
    let ok = grassmannian_pipeline(1, 3, 1, &trivial, &fixed, &trivial, 4).unwrap();
    let expected = RationalSeries::product_of_geometrics(
        basis(&FlagType::grassmannian(1, 3).unwrap(), 1),
        [(vec![1].into(), 3)],
    )
    .unwrap();
    assert_eq!(ok, expected.expand(4));
}

#[test]
fn flag_closed_forms_are_over_schubert_bases() {
    let f = FlagType::new(vec![0, 1], 2).unwrap();
    for p in 0..=2 {
        assert_eq!(flag012_series(p).unwrap().monoid(), &basis(&f, p));
    }
    assert!(flag012_series(3).is_err());
}
