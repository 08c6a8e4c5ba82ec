use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;
use qdscott::gf::FpMatrix;
use qdscott::group::{FiniteGroup, GroupConfig, GroupElement, Perm};
use qdscott::park::{qd_model, Model};
use qdscott::qd::{build_qd, QdElement};
use qdscott::wreath_centralizer::permanent;

fn qd3() -> &'static (FiniteGroup<QdElement>, Model<QdElement>) {
    static CELL: OnceLock<(FiniteGroup<QdElement>, Model<QdElement>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = GroupConfig::default();
        (build_qd(3, &cfg).unwrap(), qd_model(3, &cfg).unwrap())
    })
}

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = FpMatrix> {
    proptest::collection::vec(0..p, rows * cols)
        .prop_map(move |xs| FpMatrix::from_fn(p, rows, cols, |r, c| xs[r * cols + c]).unwrap())
}

fn brute_permanent(w: &[Vec<u64>]) -> u64 {
    fn go(w: &[Vec<u64>], row: usize, used: &mut Vec<bool>) -> u64 {
        if row == w.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..w.len() {
            if !used[c] && w[row][c] != 0 {
                used[c] = true;
                total += w[row][c] * go(w, row + 1, used);
                used[c] = false;
            }
        }
        total
    }
    go(w, 0, &mut vec![false; w.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in (1usize..7, 1usize..7).prop_flat_map(|(r, c)| matrix(3, r, c))) {
        prop_assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
    }

    #[test]
    fn solutions_solve(m in matrix(5, 4, 5), x in proptest::collection::vec(0u32..5, 5)) {
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("b is in the column space");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn inverses_invert(m in matrix(2, 5, 5)) {
        if let Some(inv) = m.inverse().unwrap() {
            prop_assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(2, 5).unwrap());
        } else {
            prop_assert!(m.rank() < 5);
        }
    }

    #[test]
    fn embedding_is_a_homomorphism(a in 0u32..216, b in 0u32..216) {
        let (m, model) = qd3();
        let lhs = model.embed(m.element(m.mul(a, b))).unwrap();
        let rhs = model.embed(m.element(a)).unwrap().op(&model.embed(m.element(b)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wreath_inverse(a in 0u32..216) {
        let (m, model) = qd3();
        let w = model.embed(m.element(a)).unwrap();
        prop_assert!(w.op(&w.inverse()).is_identity());
        prop_assert_eq!(w.inverse(), model.embed(m.element(m.inv(a))).unwrap());
    }

    #[test]
    fn embedding_acts_by_left_multiplication(a in 0u32..216, g in 0u32..216) {
        let (m, model) = qd3();
        let w = model.embed(m.element(a)).unwrap();
        prop_assert_eq!(model.apply(&w, m.element(g)).unwrap(), m.element(a).op(m.element(g)));
    }

    #[test]
    fn cycles_rebuild_the_permutation(images in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Perm::new(images).unwrap();
        let cycles = p.cycles();
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        prop_assert_eq!(Perm::from_cycles(9, &refs).unwrap(), p.clone());
        prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), 9);
    }

    #[test]
    fn permanent_matches_expansion(w in (1usize..6).prop_flat_map(|k| proptest::collection::vec(proptest::collection::vec(0u64..4, k), k))) {
        let big: Vec<Vec<BigUint>> = w.iter().map(|r| r.iter().map(|&x| BigUint::from(x)).collect()).collect();
        prop_assert_eq!(permanent(&big, 1 << 16).unwrap(), BigUint::from(brute_permanent(&w)));
    }
}
