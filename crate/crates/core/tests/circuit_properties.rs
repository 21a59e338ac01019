use ppt_core::random::Generator;
use ppt_core::{
    cohn_lempel_check, digraph_of, norm_of, overlap_graph, pivot, trace_partition, walk_distribution, walk_string,
    DoubleOccurrenceString, Subset,
};
use proptest::prelude::*;

fn dos(max: usize) -> impl Strategy<Value = DoubleOccurrenceString> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| Generator::new(seed).double_occurrence_string(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cohn_lempel_for_every_subset(s in dos(7)) {
        for mask in 0..1u64 << s.domain().len() {
            let x = Subset::from_mask(s.domain(), mask).unwrap();
            let (walks, expected) = cohn_lempel_check(&s, &x).unwrap();
            prop_assert_eq!(walks, expected);
        }
    }

    #[test]
    fn walks_partition_the_arcs(s in dos(8), bits in any::<u64>()) {
        let x = Subset::from_mask(s.domain(), bits & s.domain().full_mask()).unwrap();
        let p = trace_partition(&s, &x).unwrap();
        let mut arcs: Vec<usize> = p.walks.iter().flatten().copied().collect();
        arcs.sort_unstable();
        prop_assert_eq!(arcs, (0..s.len()).collect::<Vec<_>>());
    }

    #[test]
    fn distribution_is_the_overlap_norm(s in dos(7)) {
        let dist = walk_distribution(&s).unwrap();
        prop_assert_eq!(&dist, &norm_of(&overlap_graph(&s).to_matrix()).unwrap());
        let d = digraph_of(&s);
        prop_assert!(d.is_two_in_two_out());
        prop_assert_eq!(dist.counts()[0], d.euler_circuit_count());
    }

    #[test]
    fn single_walk_strings_have_pivoted_overlap_graphs(s in dos(7), bits in any::<u64>()) {
        let x = Subset::from_mask(s.domain(), bits & s.domain().full_mask()).unwrap();
        if let Some((t, arcs)) = walk_string(&s, &x).unwrap() {
            let mut sorted = arcs.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..s.len()).collect::<Vec<_>>());
            let o = overlap_graph(&s).to_matrix();
            prop_assert_eq!(overlap_graph(&t).to_matrix(), pivot(&o, &x).unwrap());
        }
    }

    #[test]
    fn rotation_preserves_everything(s in dos(8), k in any::<usize>()) {
        let mut letters = s.letters().to_vec();
        let len = letters.len();
        letters.rotate_left(k % len);
        let r = DoubleOccurrenceString::from_letters(letters).unwrap();
        prop_assert!(r.cyclically_equal(&s));
        prop_assert_eq!(overlap_graph(&r), overlap_graph(&s));
    }
}

#[test]
fn text_forms() {
    let s = DoubleOccurrenceString::parse("146543625123").unwrap();
    assert_eq!(s.render(), "146543625123");
    let m = DoubleOccurrenceString::parse("ab  cd ab cd").unwrap();
    assert_eq!(m.render(), "ab cd ab cd");
    assert!(DoubleOccurrenceString::parse("").is_err());
}
