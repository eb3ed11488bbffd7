use euler_chow::oracle::partitions_in_box;
use euler_chow::schubert::{
    basis, basis_symbols, enumerate_symbols, euler_characteristic, inclusion_i, inclusion_j,
    trace_phi, FlagType, SchubertSymbol,
};

fn sym(s: &str) -> SchubertSymbol {
    s.parse().unwrap()
}

#[test]
fn grassmannian_bases_count_box_partitions() {
    for n in 0..=6 {
        for d in 0..=n {
            let ft = FlagType::grassmannian(d, n).unwrap();
            let mut total = 0;
            for p in 0..=ft.variety_dimension() {
                let count = basis(&ft, p).rank() as u64;
                assert_eq!(
                    count,
                    partitions_in_box(d + 1, n - d, p),
                    "G({d},{n}) p={p}"
                );
                total += count;
            }
            assert_eq!(total, u64::from(euler_characteristic(&ft)));
        }
    }
}

#[test]
fn basis_labels_parse_back() {
    let ft = FlagType::new(vec![0, 1], 3).unwrap();
    for p in 0..=ft.variety_dimension() {
        for sigma in basis_symbols(&ft, p) {
            assert_eq!(sym(&sigma.label()), sigma);
            assert_eq!(sym(&sigma.ascii_label()), sigma);
            assert_eq!(sigma.dimension(), p);
        }
    }
}

#[test]
fn flag_bases_in_dimension_one_and_two() {
    let f = FlagType::new(vec![0, 1], 2).unwrap();
    let labels = |p| basis(&f, p).labels().map(String::from).collect::<Vec<_>>();
    assert_eq!(labels(1), ["⟨0;0,2⟩^2", "⟨1;0,1⟩^2"]);
    assert_eq!(labels(2), ["⟨1;1,2⟩^2", "⟨2;0,2⟩^2"]);
    assert_eq!(euler_characteristic(&f), 6);
}

#[test]
fn trace_raises_dimension_on_two_step_flags() {
    for (dims, n) in [
        (vec![0, 1], 2),
        (vec![0, 1], 3),
        (vec![1, 2], 3),
        (vec![2, 3], 3),
        (vec![1, 2], 4),
    ] {
        let ft = FlagType::new(dims, n).unwrap();
        for sigma in enumerate_symbols(&ft) {
            let image = trace_phi(&sigma).unwrap();
            assert_eq!(image.dimension(), sigma.dimension() + 1, "{sigma}");
            assert_eq!(image.flag_type().ambient(), n + 1);
        }
    }
}

#[test]
fn trace_images_used_by_the_grassmannian() {
    assert_eq!(trace_phi(&sym("⟨0;0,1⟩^2")).unwrap(), sym("⟨0,2⟩^3"));
    assert_eq!(trace_phi(&sym("⟨1;0,1⟩^2")).unwrap(), sym("⟨1,2⟩^3"));
    assert_eq!(trace_phi(&sym("⟨0;0,2⟩^2")).unwrap(), sym("⟨0,3⟩^3"));
    assert_eq!(trace_phi(&sym("⟨1;1,2⟩^2")).unwrap(), sym("⟨1,3⟩^3"));
    assert_eq!(trace_phi(&sym("⟨2;0,2⟩^2")).unwrap(), sym("⟨1,3⟩^3"));
    assert!(trace_phi(&sym("⟨0,1⟩^3")).is_err());
}

#[test]
fn inclusions_are_injective_and_preserve_dimension() {
    for n in 2..=5 {
        for d in 1..n {
            let i_images: Vec<_> = enumerate_symbols(&FlagType::grassmannian(d, n - 1).unwrap())
                .into_iter()
                .map(|sigma| {
                    let image = inclusion_i(&sigma).unwrap();
                    assert_eq!(image.dimension(), sigma.dimension());
                    image
                })
                .collect();
            let j_images: Vec<_> =
                enumerate_symbols(&FlagType::grassmannian(d - 1, n - 1).unwrap())
                    .into_iter()
                    .map(|sigma| {
                        let image = inclusion_j(&sigma).unwrap();
                        assert_eq!(image.dimension(), sigma.dimension());
                        image
                    })
                    .collect();
            // Each map is injective; their images may share point classes.
            for images in [i_images, j_images] {
                let mut unique = images.clone();
                unique.sort();
                unique.dedup();
                assert_eq!(unique.len(), images.len(), "G({d},{n})");
            }
        }
    }
}
