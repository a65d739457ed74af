//! Cross-module integration through the public API: wire formats in,
//! certified vectors out, with independent arithmetic cross-checks.

use std::sync::Arc;

use levelq::ff::Field;
use levelq::homology;
use levelq::macaulay;
use levelq::reduction::{self, ThetaSpec};
use levelq::scomplex::SimplicialComplex;

fn gf2_16() -> Arc<Field> {
    Arc::new(Field::default_binary())
}

/// For Buchsbaum* complexes the level-quotient Hilbert function is
/// determined by face counts and Betti numbers alone:
/// h̄_q = h_q + C(d,q) Σ_{p<q} (-1)^{q-p} β_p for q < d, and
/// h̄_d = β_{d-1}. The disjoint union of two hollow triangles is such a
/// complex, and it is not Cohen–Macaulay, so this cross-checks the rank
/// pipeline away from the doubly-CM regime.
#[test]
fn disjoint_spheres_match_the_betti_formula() {
    let complex: SimplicialComplex =
        serde_json::from_str(r#"{"vertices":6,"facets":[[1,2],[1,3],[2,3],[4,5],[4,6],[5,6]]}"#)
            .unwrap();
    assert!(!complex.is_cm(2).unwrap());
    let d = complex.d();
    let (_, h) = complex.f_and_h();
    let betti = homology::betti(&complex, 2).unwrap();

    let binom = |n: usize, k: usize| -> i64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
    };
    let mut expect = vec![0i64; d + 1];
    for q in 0..d {
        let mut correction = 0i64;
        for p in 0..q {
            let sign = if (q - p) % 2 == 0 { 1 } else { -1 };
            correction += sign * betti.get(p);
        }
        expect[q] = h[q] + binom(d, q) * correction;
    }
    expect[d] = betti.get(d - 1);
    assert_eq!(expect, vec![1, 2, 2]);

    let rep = reduction::hbar_certified(&complex, gf2_16(), &ThetaSpec::Generic, 0, 3).unwrap();
    assert_eq!(rep.hbar, expect);
    assert!(!rep.disagreement);
}

/// The 6-vertex real projective plane is a homology manifold that is
/// not Cohen–Macaulay over GF(2) (its middle homology survives), yet it
/// is Buchsbaum*, so the Betti formula pins h̄ = (1,3,3,1) against
/// h = (1,3,6,0) — a sharp test of the level quotient away from spheres.
#[test]
fn projective_plane_level_quotient() {
    let rp2: SimplicialComplex = serde_json::from_str(
        r#"{"vertices":6,"facets":[[1,2,3],[1,2,4],[1,3,5],[1,4,6],[1,5,6],
             [2,3,6],[2,4,5],[2,5,6],[3,4,5],[3,4,6]]}"#,
    )
    .unwrap();
    assert!(!rp2.is_cm(2).unwrap());
    let (_, h) = rp2.f_and_h();
    assert_eq!(h.entries(), &[1, 3, 6, 0]);
    assert_eq!(homology::betti(&rp2, 2).unwrap().entries(), &[0, 1, 1]);

    let rep = reduction::hbar_certified(&rp2, gf2_16(), &ThetaSpec::Generic, 0, 3).unwrap();
    assert_eq!(rep.hbar, vec![1, 3, 3, 1]);
    assert_eq!(rep.gbar, vec![1, 2]);
    assert_eq!(rep.cbar, vec![0, 0]);
    assert!(!rep.disagreement);

    // The unique mod-2 fundamental class realizes the whole h̄-vector.
    let model = reduction::build_model(&rp2, gf2_16(), &ThetaSpec::Generic, 0).unwrap();
    let cycles = homology::top_cycle_basis(&rp2, 2).unwrap();
    let good = reduction::find_good_cycle(&model, &cycles, 0).unwrap();
    assert_eq!(good.certificate.gorenstein, vec![1, 3, 3, 1]);
}

/// The suspension of K_{2,3} (join with two points) multiplies the
/// h-polynomial by (1 + t) and stays doubly Cohen–Macaulay, so h̄ = h.
#[test]
fn suspension_keeps_level_quotient_full() {
    let k23: SimplicialComplex =
        serde_json::from_str(r#"{"vertices":5,"facets":[[1,2],[1,4],[2,3],[2,5],[3,4],[4,5]]}"#)
            .unwrap();
    let two: SimplicialComplex =
        serde_json::from_str(r#"{"vertices":2,"facets":[[1],[2]]}"#).unwrap();
    let susp = levelq::scomplex::join(&k23, &two);
    assert!(susp.is_doubly_cm(2).unwrap());
    let (_, h) = susp.f_and_h();
    assert_eq!(h.entries(), &[1, 4, 5, 2]);
    let rep = reduction::hbar_certified(&susp, gf2_16(), &ThetaSpec::Generic, 1, 3).unwrap();
    assert_eq!(rep.hbar, h.entries());
    assert!(macaulay::is_m_vector(&rep.gbar).0);
    assert!(macaulay::is_sum_of_m_vectors(&rep.cbar));
}

/// Certificates round-trip through their JSON wire format.
#[test]
fn certificate_json_shape() {
    let complex: SimplicialComplex =
        serde_json::from_str(r#"{"vertices":5,"facets":[[1,2],[1,4],[2,3],[2,5],[3,4],[4,5]]}"#)
            .unwrap();
    let model = reduction::build_model(&complex, gf2_16(), &ThetaSpec::Generic, 0).unwrap();
    let cycles = homology::top_cycle_basis(&complex, 2).unwrap();
    let good = reduction::find_good_cycle(&model, &cycles, 0).unwrap();
    let value = serde_json::to_value(&good.certificate).unwrap();
    for key in [
        "hbar",
        "gbar",
        "cbar",
        "mu",
        "lefschetz",
        "seeds",
        "gorenstein",
    ] {
        assert!(value.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(value["hbar"], serde_json::json!([1, 3, 2]));
    assert_eq!(
        value["lefschetz"][1],
        serde_json::json!({"q": 1, "rank": 3})
    );
    // μ coefficients are hex strings over the working field.
    for m in value["mu"].as_array().unwrap() {
        assert!(m.as_str().unwrap().starts_with("0x"));
    }
}

/// The explicit-theta wire format drives the non-generic model.
#[test]
fn explicit_theta_from_json() {
    let complex: SimplicialComplex =
        serde_json::from_str(r#"{"vertices":5,"facets":[[1,2],[1,4],[2,3],[2,5],[3,4],[4,5]]}"#)
            .unwrap();
    let theta: ThetaSpec = serde_json::from_str(
        r#"{"mode":"explicit","rows":[{"support":[1,3,5]},{"support":[1,2,3,4,5]}]}"#,
    )
    .unwrap();
    let model = reduction::build_model(&complex, gf2_16(), &theta, 0).unwrap();
    assert_eq!(model.hilbert_h().entries(), &[1, 3, 2]);
}
