use specbound_core::numerics::fd_eigenvalues;
use specbound_core::potentials::{closed_form_energy, spectrum, PotentialSpec, UnitsConfig};

fn main() {
    let u = UnitsConfig::default();
    let cases: Vec<PotentialSpec<f64>> = vec![
        PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 },
        PotentialSpec::Mie { v0: 5.0, a: 1.0 },
        PotentialSpec::KratzerFues { de: 10.0, re: 1.0 },
        PotentialSpec::Coulomb { e2: 1.0 },
        PotentialSpec::Pseudoharmonic { v0: 2.0, r0: 1.0 },
        PotentialSpec::NoncentralRadial { alpha: -1.0, lambda: 0.0 },
        PotentialSpec::DeformedRosenMorse { v1: 4.0, v2: 8.0, a: 0.5, eta: 1.0 },
        PotentialSpec::WoodsSaxon { v1: 5.0, v2: 10.0, a: 1.0 },
        PotentialSpec::PoschlTeller { v0: 10.0, a: 1.0, eta: 1.0 },
    ];
    for spec in cases {
        let t = std::time::Instant::now();
        let states = spectrum(&spec, 0, &u, 4).unwrap();
        let grid = specbound_core::potentials::oracle_grid(&spec, 0, &u, 4).unwrap();
        let oracle = fd_eigenvalues(&spec, 0, &u, &grid, 5);
        println!("{:?} grid {:?}", spec.family(), grid);
        match &oracle {
            Ok(o) => println!("  oracle {:?} shift {:e}", o.eigenvalues, o.richardson_shift),
            Err(e) => println!("  oracle err {e}"),
        }
        for s in &states {
            let cf = closed_form_energy(&spec, 0, &u, s.n).unwrap();
            let nodes = s.node_count(&grid).unwrap();
            println!("  n={} E={:.15} cf_rel={:e} nodes={} res={:e}", s.n, s.energy, ((cf - s.energy) / s.energy).abs(), nodes, s.residual);
        }
        println!("  {:?}", t.elapsed());
    }
}
