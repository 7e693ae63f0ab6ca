//! Trajectory export: `t` and the real and imaginary parts of the six
//! phase coordinates.

use std::io::Write;

use painleve_core::algebra::PHASE;
use painleve_core::numeric::{integrate_sampled, seeded_params, seeded_state, CompiledField, Trajectory};
use painleve_core::systems::system;

use crate::args::IntegrateArgs;

pub fn header() -> String {
    let mut cols = vec![String::from("t")];
    for v in PHASE {
        cols.push(format!("{v}_re"));
        cols.push(format!("{v}_im"));
    }
    cols.join(",")
}

pub fn write_csv<W: Write>(w: &mut W, traj: &Trajectory) -> std::io::Result<()> {
    writeln!(w, "{}", header())?;
    for (t, y) in &traj.samples {
        write!(w, "{t:e}")?;
        for c in y {
            write!(w, ",{:e},{:e}", c.re, c.im)?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Seeded trajectory of the named system.
pub fn integrate(a: &IntegrateArgs) -> anyhow::Result<Trajectory> {
    let sys = system(a.system);
    let field = CompiledField::new(&sys.vector_field());
    let params = seeded_params(&sys, a.seed);
    let traj = integrate_sampled(&field, &params, &seeded_state(a.seed), a.t0, a.t1, a.tol, a.samples.max(1))?;
    Ok(traj)
}
