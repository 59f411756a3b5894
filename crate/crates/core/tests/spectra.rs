mod common;

use common::{desk, rel, units};
use specbound_core::numerics::{
    compare_spectra, discretize, fd_eigenvalues, simpson_integrate, Boundary, Domain, OracleSpectrum, RadialGrid,
};
use specbound_core::parametric::{consistency_check, BranchConstants};
use specbound_core::potentials::{
    closed_form_energy, default_grid, oracle_grid, spectrum, PotentialSpec, UnitsConfig,
};

#[test]
fn three_way_agreement_on_every_family() {
    let u = units();
    for spec in desk() {
        let states = spectrum(&spec, 0, &u, 2).unwrap();
        assert!(!states.is_empty(), "{spec:?}");
        let grid = oracle_grid(&spec, 0, &u, 2).unwrap();
        let oracle = fd_eigenvalues(&spec, 0, &u, &grid, 3).unwrap();
        for s in &states {
            let cf = closed_form_energy(&spec, 0, &u, s.n).unwrap();
            assert!(rel(cf, s.energy) < 1e-10, "{spec:?} n={}: closed {cf} vs root {}", s.n, s.energy);
            let o = oracle.eigenvalues[s.n];
            assert!(rel(o, s.energy) < 1e-5, "{spec:?} n={}: oracle {o} vs root {}", s.n, s.energy);
        }
    }
}

#[test]
fn coulomb_levels_are_exact() {
    let states = spectrum(&PotentialSpec::Coulomb { e2: 1.0 }, 0, &units(), 4).unwrap();
    assert_eq!(states.len(), 5);
    for s in &states {
        let n0 = (s.n + 1) as f64;
        assert!((s.energy + 0.5 / (n0 * n0)).abs() < 1e-12);
    }
}

#[test]
fn coulomb_oracle_on_the_standard_grid() {
    let grid = RadialGrid::new(1e-4, 80.0, 4000).unwrap();
    let o = fd_eigenvalues(&PotentialSpec::Coulomb { e2: 1.0 }, 0, &units(), &grid, 3).unwrap();
    for (n, e) in o.eigenvalues.iter().enumerate() {
        let n0 = (n + 1) as f64;
        assert!(rel(*e, -0.5 / (n0 * n0)) < 1e-5);
    }
    assert_eq!(o.boundary, (Boundary::Dirichlet, Boundary::Dirichlet));
    assert!(o.effective_potential_includes_centrifugal);
}

#[test]
fn node_theorem() {
    let u = units();
    for spec in desk() {
        let grid = oracle_grid(&spec, 0, &u, 4).unwrap();
        for s in spectrum(&spec, 0, &u, 4).unwrap() {
            assert_eq!(s.node_count(&grid).unwrap(), s.n, "{spec:?}");
        }
    }
}

#[test]
fn orthonormality() {
    let u = units();
    for spec in desk() {
        let states = spectrum(&spec, 0, &u, 3).unwrap();
        if states.len() < 2 {
            continue;
        }
        let grid = oracle_grid(&spec, 0, &u, 3).unwrap();
        let (xs, h) = states[0].quadrature_nodes(&grid, 2 * grid.n_points + 1);
        let weight: Vec<f64> = xs.iter().map(|&x| states[0].map.measure(x)).collect();
        let psi: Vec<Vec<f64>> = states.iter().map(|s| xs.iter().map(|&x| s.wavefunction(x).unwrap()).collect()).collect();
        for i in 0..states.len() {
            for j in 0..states.len() {
                let f: Vec<f64> = (0..xs.len()).map(|k| psi[i][k] * psi[j][k] * weight[k]).collect();
                let ip = simpson_integrate(&f, h).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-6, "{spec:?} <{i}|{j}> = {ip}");
            }
        }
    }
}

#[test]
fn jacobi_levels_satisfy_both_series_conditions() {
    let u = units();
    for spec in desk().into_iter().skip(6) {
        for s in spectrum(&spec, 0, &u, 4).unwrap() {
            let BranchConstants::Jacobi(j) = s.branch_constants else { panic!("{spec:?} is not Jacobi") };
            let r = consistency_check(&j).unwrap();
            assert!(r.r2_abs < 1e-10 && r.r1_plus_r3_abs < 1e-10, "{spec:?} n={}: {r:?}", s.n);
        }
    }
}

#[test]
fn coulomb_degeneracy_in_principal_number() {
    let c = PotentialSpec::Coulomb { e2: 1.0 };
    let s0 = spectrum(&c, 0, &units(), 1).unwrap();
    let s1 = spectrum(&c, 1, &units(), 0).unwrap();
    assert!((s0[1].energy - s1[0].energy).abs() < 1e-12);
    assert!((s1[0].energy + 0.125).abs() < 1e-12);
}

#[test]
fn noncentral_reduces_to_coulomb() {
    for (hbar, mass) in [(1.0, 1.0), (0.7, 1.9)] {
        let u = UnitsConfig::new(hbar, mass).unwrap();
        for l in 0..=3usize {
            let lambda = hbar * hbar * (l * (l + 1)) as f64 / (2.0 * mass);
            let nc = PotentialSpec::NoncentralRadial { alpha: -1.3, lambda };
            let c = PotentialSpec::Coulomb { e2: 1.3 };
            let a = spectrum(&nc, 0, &u, 3).unwrap();
            let b = spectrum(&c, l, &u, 3).unwrap();
            assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                assert!((x.energy - y.energy).abs() < 1e-12, "l={l}: {} vs {}", x.energy, y.energy);
            }
        }
    }
}

#[test]
fn morse_count_matches_oracle_and_exhausts() {
    let u = units();
    let m = PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 };
    let states = spectrum(&m, 0, &u, 10).unwrap();
    let grid = RadialGrid::new(-3.0, 12.0, 4000).unwrap();
    let o = fd_eigenvalues(&m, 0, &u, &grid, 10).unwrap();
    assert_eq!(states.len(), o.eigenvalues.len());
    assert!(closed_form_energy(&m, 0, &u, states.len()).is_err());
    let report = compare_spectra(&states, &o, 1e-5);
    assert!(report.pass, "{report:?}");
}

/// The printed closed form `−(2a²ħ²/8m)(2n+1 − √(2mV2)/(ħa√V1))²` against
/// the rederived `−(a²ħ²/8m)(2n+1 − √(2m)V2/(ħa√V1))²`.
#[test]
fn morse_printed_form_is_rejected_by_the_oracle() {
    let (v1, v2, a, m, hbar) = (100.0f64, 20.0f64, 1.0f64, 1.0f64, 1.0f64);
    let spec = PotentialSpec::GeneralizedMorse { v1, v2, a };
    let o = fd_eigenvalues(&spec, 0, &units(), &default_grid(&spec, 0, &units()).unwrap(), 5).unwrap();
    let e0 = o.eigenvalues[0];
    let printed = -(2.0 * a * a * hbar * hbar / (8.0 * m)) * (1.0 - (2.0 * m * v2).sqrt() / (hbar * a * v1.sqrt())).powi(2);
    let printed_prefactor = -(2.0 * a * a * hbar * hbar / (8.0 * m))
        * (1.0 - (2.0 * m).sqrt() * v2 / (hbar * a * v1.sqrt())).powi(2);
    let derived = -(a * a * hbar * hbar / (8.0 * m)) * (1.0 - (2.0 * m).sqrt() * v2 / (hbar * a * v1.sqrt())).powi(2);
    assert!(rel(derived, e0) < 1e-5);
    assert!(rel(printed, e0) > 1e-5);
    assert!(rel(printed_prefactor, e0) > 1e-5);
    assert!(rel(closed_form_energy(&spec, 0, &units(), 0).unwrap(), derived) < 1e-14);
}

#[test]
fn morse_ground_state_matches_oracle_eigenvector() {
    let u = units();
    let spec = PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 };
    let state = &spectrum(&spec, 0, &u, 0).unwrap()[0];
    let grid = default_grid(&spec, 0, &u).unwrap();
    let d = discretize(|x| spec.effective_potential(0, &u, x), Domain::Line, &grid, &u).unwrap();
    let ev = d.eigenvector(d.eigenvalues(1)[0]).unwrap();
    let mut worst = 0.0f64;
    for (x, v) in ev.x.iter().zip(&ev.u) {
        if (-2.0..=6.0).contains(x) {
            worst = worst.max((state.wavefunction(*x).unwrap() - v).abs());
        }
    }
    assert!(worst < 1e-3, "max deviation {worst}");
}

#[test]
fn pseudoharmonic_ground_state() {
    let u = units();
    for (v0, r0) in [(2.0, 1.0), (7.5, 0.6), (0.4, 2.3)] {
        let spec = PotentialSpec::Pseudoharmonic { v0, r0 };
        let s = spectrum(&spec, 0, &u, 0).unwrap();
        assert_eq!(s.len(), 1);
        let o = fd_eigenvalues(&spec, 0, &u, &oracle_grid(&spec, 0, &u, 0).unwrap(), 1).unwrap();
        assert!(rel(o.eigenvalues[0], s[0].energy) < 1e-5, "{v0} {r0}: {} vs {}", o.eigenvalues[0], s[0].energy);
    }
}

#[test]
fn higher_angular_momentum_agrees_with_oracle() {
    let u = UnitsConfig::new(1.0, 2.0).unwrap();
    for spec in desk().into_iter().filter(|s| s.family().supports_l()) {
        let states = spectrum(&spec, 2, &u, 1).unwrap();
        let o = fd_eigenvalues(&spec, 2, &u, &oracle_grid(&spec, 2, &u, 1).unwrap(), 2).unwrap();
        let report = compare_spectra(&states, &o, 1e-5);
        assert!(report.pass, "{spec:?}: {report:?}");
    }
}

#[test]
fn missing_oracle_levels_are_a_count_discrepancy() {
    let states = spectrum(&PotentialSpec::Coulomb { e2: 1.0 }, 0, &units(), 0).unwrap();
    let empty = OracleSpectrum {
        eigenvalues: vec![],
        raw_eigenvalues: vec![],
        refined_eigenvalues: vec![],
        grid: RadialGrid::new(1e-4, 80.0, 4000).unwrap(),
        domain: Domain::HalfLine,
        boundary: (Boundary::Dirichlet, Boundary::Dirichlet),
        effective_potential_includes_centrifugal: true,
        asymptote: Some(0.0),
        richardson_shift: 0.0,
        grid_adequate: true,
    };
    let r = compare_spectra(&states, &empty, 1e-5);
    assert!(!r.pass);
    let c = r.count_discrepancy.unwrap();
    assert_eq!((c.analytic, c.oracle), (1, 0));
}

#[test]
fn single_precision_spectrum() {
    let u = UnitsConfig::<f32>::default();
    let s = spectrum(&PotentialSpec::Coulomb { e2: 1.0f32 }, 0, &u, 2).unwrap();
    assert_eq!(s.len(), 3);
    for st in &s {
        let n0 = (st.n + 1) as f32;
        assert!((st.energy + 0.5 / (n0 * n0)).abs() < 1e-5);
    }
    let w = spectrum(&PotentialSpec::WoodsSaxon { v1: 5.0f32, v2: 10.0, a: 1.0 }, 0, &u, 2).unwrap();
    assert_eq!(w.len(), 1);
    assert!((w[0].energy + 5.28125).abs() < 1e-4);
}

#[test]
fn wavefunction_vanishes_at_the_origin_for_positive_q() {
    let u = units();
    for spec in [PotentialSpec::Mie { v0: 5.0, a: 1.0 }, PotentialSpec::KratzerFues { de: 10.0, re: 1.0 }] {
        let s = &spectrum(&spec, 0, &u, 0).unwrap()[0];
        assert_eq!(s.wavefunction(0.0).unwrap(), 0.0);
    }
}

#[test]
fn kratzer_excited_state_matches_oracle_eigenvector() {
    let u = units();
    let spec = PotentialSpec::KratzerFues { de: 10.0, re: 1.0 };
    let state = &spectrum(&spec, 0, &u, 1).unwrap()[1];
    let grid = oracle_grid(&spec, 0, &u, 1).unwrap();
    let d = discretize(|x| spec.effective_potential(0, &u, x), Domain::HalfLine, &grid, &u).unwrap();
    let ev = d.eigenvector(d.eigenvalues(2)[1]).unwrap();
    let analytic: Vec<f64> = ev.x.iter().map(|&x| state.reduced(x).unwrap()).collect();
    let sign = if analytic.iter().zip(&ev.u).map(|(a, b)| a * b).sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    let worst = analytic.iter().zip(&ev.u).map(|(a, b)| (a - sign * b).abs()).fold(0.0, f64::max);
    assert!(worst < 1e-3, "max deviation {worst}");
    let peak = ev.x.iter().zip(&analytic).skip(1).take_while(|(_, v)| **v * analytic[1] > 0.0).fold((0.0, 0.0), |best, (x, v)| {
        if v.abs() > best.1 { (*x, v.abs()) } else { best }
    });
    assert!((peak.0 - 1.0).abs() < 0.1, "first lobe peaks at {}", peak.0);
}
