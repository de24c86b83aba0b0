use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fourier_nc::analytics::random::random_table_instance;
use fourier_nc::fourier::{global_modes, linearisation_params};
use fourier_nc::model::{topology, CostFunction, NetworkInstance};
use fourier_nc::sampler::{
    convergence_experiment, coupon_budget, harmonic_number, measurement_distribution, sample_from, sample_modes,
};

fn cosine_ring() -> NetworkInstance {
    let ring = topology::ring(4);
    let costs = (0..4).map(|e| CostFunction::cosine(6, vec![1.0, 0.25 * (e + 1) as f64]).unwrap()).collect();
    NetworkInstance::cyclic(ring, costs).unwrap()
}

#[test]
fn same_seed_same_batch() {
    let inst = cosine_ring();
    assert_eq!(sample_modes(&inst, 500, 9).unwrap(), sample_modes(&inst, 500, 9).unwrap());
    let dist = measurement_distribution(&inst, &linearisation_params(&inst).unwrap()).unwrap();
    let a = sample_from(&dist, 500, 9, 0, true).unwrap();
    assert_eq!(a, sample_from(&dist, 500, 9, 0, true).unwrap());
    assert_ne!(a.counts, sample_from(&dist, 500, 10, 0, true).unwrap().counts);
    assert_ne!(a.counts, sample_from(&dist, 500, 9, 1, true).unwrap().counts);
    assert_eq!(a.counts.values().sum::<usize>(), 500);
}

#[test]
fn curves_do_not_depend_on_thread_count() {
    let inst = cosine_ring();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| convergence_experiment(&inst, 60, 40, 3, true).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn empirical_frequencies_follow_mode_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let inst = random_table_instance(3, 5, &mut rng);
    let params = linearisation_params(&inst).unwrap();
    let dist = measurement_distribution(&inst, &params).unwrap();

    // conditional law recomputed from |Ĥ(k)|² of each mode
    let modes = global_modes(&inst).unwrap();
    let total: f64 = modes.iter().map(|m| m.coeff.norm_sqr()).sum();
    for (m, p) in modes.iter().zip(&dist.conditional) {
        assert!((m.coeff.norm_sqr() / total - p).abs() < 1e-12);
    }

    let samples = 200_000;
    let batch = sample_modes(&inst, samples, rng.gen()).unwrap();
    assert_eq!(batch.total, samples);
    let zero_rate = batch.zero_count as f64 / samples as f64;
    assert!((zero_rate - dist.p_zero).abs() < 5.0 * (dist.p_zero * (1.0 - dist.p_zero) / samples as f64).sqrt() + 1e-9);
    let batch = sample_from(&dist, samples, 4, 0, true).unwrap();
    assert_eq!(batch.zero_count, 0);
    for (m, &q) in modes.iter().zip(&dist.conditional) {
        let seen = batch.counts.get(&(m.edge, m.k_i)).copied().unwrap_or(0) as f64 / samples as f64;
        let sd = (q * (1.0 - q) / samples as f64).sqrt();
        assert!((seen - q).abs() < 5.0 * sd + 1e-9, "mode ({}, {}): {seen} vs {q}", m.edge, m.k_i);
    }
}

#[test]
fn coupon_quantities() {
    let h: f64 = (1..=20).map(|i| 1.0 / i as f64).sum();
    assert!((harmonic_number(20) - h).abs() < 1e-12);
    assert_eq!(coupon_budget(10, 0.01), (10.0 * (10.0f64 / 0.01).ln()).ceil() as usize);
}

#[test]
fn curve_fraction_is_monotone_and_saturates() {
    let inst = cosine_ring();
    let curve = convergence_experiment(&inst, 400, 30, 2, true).unwrap();
    let crossing = curve.full_recovery_crossing().expect("all modes seen by T = 400");
    assert!(crossing + 1 >= curve.modes);
    assert!(curve.mean_fraction.windows(2).all(|w| w[0] <= w[1] + 1e-12));
    let text = curve.to_csv();
    assert_eq!(text.lines().count(), 401);
}
