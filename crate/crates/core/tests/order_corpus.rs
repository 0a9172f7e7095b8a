use scottlab_core::order::corpus::{exhaustive, is_isomorphic};

// Known numbers of unlabelled posets on n points.
const CLASS_COUNTS: [usize; 8] = [1, 1, 2, 5, 16, 63, 318, 2045];

#[test]
fn class_counts_up_to_seven() {
    for (n, &count) in CLASS_COUNTS.iter().enumerate().skip(1) {
        assert_eq!(exhaustive(n).unwrap().len(), count, "size {n}");
    }
}

#[test]
fn representatives_are_pairwise_non_isomorphic() {
    let reps = exhaustive(4).unwrap();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            assert!(!is_isomorphic(&reps[i], &reps[j]));
        }
    }
}
