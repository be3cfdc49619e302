//! One function per subcommand, each producing a [`Table`].

use catgate::gate::{perfect_cat, GateParams};
use catgate::metrics::{fidelity_cat, fidelity_scl, mixed_fidelity, outcome_density, AcceptanceWindow};
use catgate::phase_map::{disk_samples, map_disk, resource_circle, PhasePoint};
use catgate::wigner::{default_axes, wigner_cat_reference, wigner_exact_quadrature, wigner_mehler, WignerGrid, DEFAULT_AXIS_COUNT};
use catgate::{CoherentParams, Grid1D, Result};

use crate::output::{Table, Value};
use crate::{CatFidelity, Engine, FidelityScan, MixedFidelity, ProbDensity, SclMap, Wigner};

fn reals(values: &[f64]) -> Value {
    values.to_vec().into()
}

pub fn fidelity_scan(args: &FidelityScan) -> Result<Table> {
    let mut t = Table::new(&["n", "y_m", "x0", "p0", "F_scl"]);
    t.config("command", "fidelity-scan");
    t.config("n", args.n.clone());
    t.config("y_m", args.ym);
    t.config("x0", reals(&args.x0));
    t.config("p0", args.p0);
    for &x0 in &args.x0 {
        let input = CoherentParams::new(x0, args.p0)?;
        for &n in &args.n {
            let f = fidelity_scl(GateParams::new(n, args.ym)?, input)?;
            t.push(vec![n.into(), args.ym.into(), x0.into(), args.p0.into(), f.into()]);
        }
    }
    Ok(t)
}

pub fn cat_fidelity(args: &CatFidelity) -> Result<Table> {
    let mut t = Table::new(&["n", "y_m", "x0", "p0", "F_cat"]);
    t.config("command", "cat-fidelity");
    t.config("n", args.n.clone());
    if args.ym_equals_x0 {
        t.config("y_m", "x0");
    } else {
        t.config("y_m", args.ym);
    }
    t.config("x0", reals(&args.x0));
    t.config("p0", args.p0);
    for &x0 in &args.x0 {
        let y_m = if args.ym_equals_x0 { x0 } else { args.ym };
        let input = CoherentParams::new(x0, args.p0)?;
        for &n in &args.n {
            let f = fidelity_cat(GateParams::new(n, y_m)?, input)?;
            t.push(vec![n.into(), y_m.into(), x0.into(), args.p0.into(), f.into()]);
        }
    }
    Ok(t)
}

pub fn prob_density(args: &ProbDensity) -> Result<Table> {
    let mut t = Table::new(&["n", "y_m", "x0", "P"]);
    t.config("command", "prob-density");
    t.config("n", args.n.clone());
    t.config("y_m", reals(&args.ym));
    t.config("x0", args.x0);
    for &n in &args.n {
        for &y_m in &args.ym {
            let p = outcome_density(n, args.x0, y_m);
            t.push(vec![n.into(), y_m.into(), args.x0.into(), p.into()]);
        }
    }
    t.meta("method", "generating function");
    Ok(t)
}

pub fn mixed(args: &MixedFidelity) -> Result<Table> {
    let mut t = Table::new(&["n", "x0", "p0", "d", "F_mix", "P_mix"]);
    t.config("command", "mixed-fidelity");
    t.config("n", args.n.clone());
    t.config("x0", args.x0);
    t.config("p0", args.p0);
    t.config("d", reals(&args.d));
    let input = CoherentParams::new(args.x0, args.p0)?;
    for &n in &args.n {
        for &d in &args.d {
            let m = mixed_fidelity(n, input, AcceptanceWindow::new(args.x0, d)?)?;
            t.push(vec![
                n.into(),
                args.x0.into(),
                args.p0.into(),
                d.into(),
                m.fidelity.into(),
                m.probability.into(),
            ]);
        }
    }
    t.meta("window_center", "x0");
    t.meta("window_nodes", catgate::metrics::WINDOW_NODES);
    t.meta("window_tolerance", catgate::metrics::WINDOW_TOL);
    Ok(t)
}

fn axis_value(axis: &Grid1D) -> Value {
    Value::List(vec![axis.x_min().into(), axis.x_max().into(), axis.count().into()])
}

pub fn wigner(args: &Wigner) -> Result<Table> {
    let params = GateParams::new(args.n, args.ym)?;
    let input = CoherentParams::new(args.x0, args.p0)?;
    let (default_x, default_p) = default_axes(params, input, DEFAULT_AXIS_COUNT)?;
    let x_axis = args.x_range.unwrap_or(default_x);
    let p_axis = args.p_range.unwrap_or(default_p);

    let mut grids: Vec<(&str, WignerGrid)> = Vec::new();
    if matches!(args.engine, Engine::Mehler | Engine::Both) {
        grids.push(("mehler", wigner_mehler(params, input, x_axis, p_axis)));
    }
    if matches!(args.engine, Engine::Quadrature | Engine::Both) {
        grids.push(("quadrature", wigner_exact_quadrature(params, input, x_axis, p_axis)?.1));
    }
    if args.reference_cat {
        let cat = perfect_cat(params, input)?;
        grids.push(("cat", wigner_cat_reference(&cat, x_axis, p_axis)?));
    }

    let mut columns = vec!["x".to_owned(), "p".to_owned()];
    if grids.len() == 1 {
        columns.push("W".into());
    } else {
        columns.extend(grids.iter().map(|(name, _)| format!("W_{name}")));
    }
    let mut t = Table {
        columns,
        ..Table::default()
    };
    t.config("command", "wigner");
    t.config("n", args.n);
    t.config("y_m", args.ym);
    t.config("x0", args.x0);
    t.config("p0", args.p0);
    t.config("x_range", axis_value(&x_axis));
    t.config("p_range", axis_value(&p_axis));
    t.config("engine", args.engine.name());
    t.config("reference_cat", args.reference_cat);

    for j in 0..x_axis.count() {
        for k in 0..p_axis.count() {
            let mut row = vec![x_axis.point(j).into(), p_axis.point(k).into()];
            row.extend(grids.iter().map(|(_, g)| Value::from(g.get(j, k))));
            t.push(row);
        }
    }
    for (name, g) in &grids {
        t.meta(&format!("integral_{name}"), g.integral());
    }
    if let [(_, a), (_, b), ..] = &grids[..] {
        if matches!(args.engine, Engine::Both) {
            t.meta("max_abs_diff", a.max_abs_diff(b)?);
        }
    }
    Ok(t)
}

pub fn scl_map(args: &SclMap) -> Result<Table> {
    let params = GateParams::new(args.n, args.ym)?;
    let center = PhasePoint::new(args.x0, args.p0);
    let image = map_disk(params, center, args.radius, args.samples as usize)?;
    let mut t = Table::new(&["branch", "q", "p"]);
    t.config("command", "scl-map");
    t.config("n", args.n);
    t.config("y_m", args.ym);
    t.config("x0", args.x0);
    t.config("p0", args.p0);
    t.config("radius", args.radius);
    t.config("samples", args.samples as usize);
    let sets = [
        ("input", disk_samples(center, args.radius, args.samples as usize)),
        ("upper", image.upper),
        ("lower", image.lower),
    ];
    for (name, points) in &sets {
        for pt in points {
            t.push(vec![(*name).into(), pt.q.into(), pt.p.into()]);
        }
    }
    let circle = resource_circle(args.n, 0.0);
    t.meta("circle_radius", circle.radius);
    t.meta("dropped", image.dropped);
    Ok(t)
}
