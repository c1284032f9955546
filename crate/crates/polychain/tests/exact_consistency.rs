//! Cross-checks between the exact-rational route and the binary64 route.
//! Over the rationals the reduction pipeline must reproduce the matrix
//! inverse *identically* — not approximately — and rounding the exact
//! results must land on the float engine's answers.

use num_bigint::BigInt;
use num_rational::BigRational;
use polychain::chain::{ChainSpec, LabeledChainGraph};
use polychain::exact;
use polychain::reduction;
use polychain::resistance;

fn specs_under_test() -> Vec<ChainSpec> {
    vec![
        ChainSpec::new(5, 2, vec![]).unwrap(),
        ChainSpec::new(6, 2, vec![]).unwrap(),
        ChainSpec::new(6, 3, vec![1]).unwrap(),
        ChainSpec::new(7, 3, vec![2]).unwrap(),
        ChainSpec::new(5, 4, vec![1, 0]).unwrap(),
        ChainSpec::new(8, 3, vec![4]).unwrap(),
    ]
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[test]
fn rational_reduction_equals_rational_inverse_exactly() {
    for spec in specs_under_test() {
        let g = LabeledChainGraph::build(&spec);
        let fan = reduction::fan_reduce::<BigRational>(&g, None, None).unwrap();
        let table = exact::resistance_matrix_exact(&g.unit_network_as()).unwrap();
        for (x, omega) in &fan.omegas {
            assert_eq!(
                omega,
                table.omega(fan.source, *x),
                "spec {spec}, source {}, target {x}",
                fan.source
            );
        }
    }
}

#[test]
fn rational_reduction_handles_rational_weights_exactly() {
    for spec in specs_under_test() {
        let g = LabeledChainGraph::build(&spec);
        // Deterministic non-unit weights: 1/3, 2/3, 3/3, ... per edge slot.
        let weights: Vec<BigRational> = (0..g.edge_count())
            .map(|i| ratio(i as i64 + 1, 3))
            .collect();
        let fan = reduction::fan_reduce::<BigRational>(&g, Some(&weights), None).unwrap();
        let net = g.weighted_network(&weights).unwrap();
        let table = exact::resistance_matrix_exact(&net).unwrap();
        for (x, omega) in &fan.omegas {
            assert_eq!(
                omega,
                table.omega(fan.source, *x),
                "spec {spec}, source {}, target {x}",
                fan.source
            );
        }
    }
}

#[test]
fn exact_and_binary64_indices_agree_to_twelve_digits() {
    for spec in specs_under_test() {
        let exact_kf = exact::to_f64(&exact::chain_kirchhoff_exact(&spec).unwrap());
        let float_kf =
            resistance::kirchhoff_index(&LabeledChainGraph::build(&spec).unit_network())
                .unwrap();
        assert!(
            (exact_kf - float_kf).abs() <= 1e-12 * exact_kf.max(1.0),
            "spec {spec}: exact {exact_kf} vs float {float_kf}"
        );
    }
}

#[test]
fn exact_and_binary64_pairwise_values_agree() {
    let spec = ChainSpec::new(6, 3, vec![1]).unwrap();
    let g = LabeledChainGraph::build(&spec);
    let exact_table = exact::resistance_matrix_exact(&g.unit_network_as()).unwrap();
    let float_table = resistance::resistance_matrix(&g.unit_network()).unwrap();
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..n {
            let want = exact::to_f64(exact_table.omega(u, v));
            let got = float_table.omega(u, v);
            assert!(
                (want - got).abs() <= 1e-12,
                "pair ({u}, {v}): exact {want} vs float {got}"
            );
        }
    }
}
