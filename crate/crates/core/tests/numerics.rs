use betasplit::numerics::{beta_transform, lebesgue_function, lebesgue_max, Approx, PiecewiseLinear};

#[test]
fn lebesgue_function_at_n_two_by_hand() {
    // phi_{2,0} = 1 - 5x/2 + 3x^2/2, phi_{2,1} = 3x - 3x^2, phi_{2,2} = -x/2 + 3x^2/2
    let x: f64 = 0.1;
    let expected = (1.0 - 2.5 * x + 1.5 * x * x).abs() + (3.0 * x - 3.0 * x * x).abs() + (-0.5 * x + 1.5 * x * x).abs();
    let v = lebesgue_function::<128>(2, x).unwrap();
    assert!((v - expected).abs() < 1e-14, "{v} vs {expected}");
    assert!((lebesgue_function::<128>(5, 0.0).unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn lebesgue_of_n_one_is_one() {
    let m = lebesgue_max::<64>(1).unwrap();
    assert!((m.max - 1.0).abs() < 1e-12);
}

#[test]
fn beta_transform_of_square_matches_rising_ratio() {
    for n in [1usize, 3, 7] {
        for x in [0.2, 0.5, 0.85] {
            let nx = n as f64 * x;
            let expected = nx * (nx + 1.0) / (n as f64 * (n as f64 + 1.0));
            let r = beta_transform(&|t| t * t, n, x, 1e-12, &[]).unwrap();
            assert!((r.value.to_f64() - expected).abs() < 1e-10, "n={n} x={x}");
        }
    }
}

#[test]
fn hat_functions_partition_unity() {
    let n = 4;
    let hats: Vec<_> = (0..=n).map(|i| PiecewiseLinear::hat(n, i).unwrap()).collect();
    for t in [0.0, 0.13, 0.5, 0.77, 1.0] {
        let s: f64 = hats.iter().map(|h| h.eval(t)).sum();
        assert!((s - 1.0).abs() < 1e-15);
    }
}

#[test]
fn approx_arithmetic_keeps_precision() {
    let third = Approx::<256>::from_f64(1.0) / Approx::<256>::from_f64(3.0);
    let back = third.clone() * Approx::<256>::from_f64(3.0) - Approx::<256>::from_f64(1.0);
    assert!(back.to_f64().abs() < 1e-70);
    assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
}
