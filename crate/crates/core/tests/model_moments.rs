//! Distributional checks of the generators at sweep scale: sample moments
//! against closed-form or independently recounted oracles.

use revan_core::models::{generate_er, generate_rg, unit_square_points, ErSpec, RgSpec, SeedSpec};
use revan_core::stats::Welford;

fn seed(i: u64) -> SeedSpec {
    SeedSpec {
        master_seed: 42,
        realization_index: i,
    }
}

#[test]
fn er_edge_count_matches_binomial_moments() {
    // |E| ~ Binomial(124750, 0.1): mean 12475, variance 11227.5.
    let spec = ErSpec { n: 500, p: 0.1 };
    let pairs = 500.0 * 499.0 / 2.0;
    let mean = pairs * spec.p;
    let variance = pairs * spec.p * (1.0 - spec.p);

    let mut edges = Welford::new();
    for i in 0..1000 {
        let g = generate_er(&spec, seed(i)).unwrap();
        edges.push(g.edge_count() as f64);
    }

    let sem = (variance / 1000.0).sqrt();
    assert!(
        (edges.mean() - mean).abs() <= 3.0 * sem,
        "mean edge count {} not within 3 SEM ({sem}) of {mean}",
        edges.mean()
    );
    // Sample variance has standard error ≈ σ²·√(2/(R−1)).
    let var_se = variance * (2.0 / 999.0f64).sqrt();
    assert!(
        (edges.variance() - variance).abs() <= 4.0 * var_se,
        "edge count variance {} not within 4 SE ({var_se}) of {variance}",
        edges.variance()
    );
}

#[test]
fn rg_mean_degree_matches_recount_of_the_same_points() {
    let spec = RgSpec { n: 500, ell: 0.3 };
    let mut generated = Welford::new();
    let mut recounted = Welford::new();
    for i in 0..1000 {
        let g = generate_rg(&spec, seed(i)).unwrap();

        // Independent O(n²) recount on the regenerated point set.
        let points = unit_square_points(spec.n, seed(i));
        let mut pairs = 0u64;
        for a in 0..spec.n {
            for b in (a + 1)..spec.n {
                let dx = points[a].0 - points[b].0;
                let dy = points[a].1 - points[b].1;
                if dx * dx + dy * dy <= spec.ell * spec.ell {
                    pairs += 1;
                }
            }
        }

        assert_eq!(g.edge_count() as u64, pairs, "realization {i}");
        generated.push(2.0 * g.edge_count() as f64 / spec.n as f64);
        recounted.push(2.0 * pairs as f64 / spec.n as f64);
    }
    let tolerance = 3.0 * generated.sem().max(recounted.sem());
    assert!(
        (generated.mean() - recounted.mean()).abs() <= tolerance,
        "generated mean degree {} vs recounted {}",
        generated.mean(),
        recounted.mean()
    );
}
