//! Value parsers for list, range and axis flags.

use catgate::Grid1D;

fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if !v.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(v)
}

/// `a,b,c` or `a:b:count` (inclusive, evenly spaced).
pub fn reals(s: &str) -> Result<Vec<f64>, String> {
    if s.contains(':') {
        let (a, b, count) = triple(s)?;
        if count == 1 {
            return Ok(vec![a]);
        }
        let grid = Grid1D::new(a, b, count).map_err(|e| e.to_string())?;
        return Ok(grid.points().collect());
    }
    s.split(',').map(real).collect()
}

/// Like [`reals`], every value strictly positive.
pub fn positive_reals(s: &str) -> Result<Vec<f64>, String> {
    let values = reals(s)?;
    match values.iter().find(|&&v| v <= 0.0) {
        Some(v) => Err(format!("{v} is not positive")),
        None => Ok(values),
    }
}

pub fn positive_real(s: &str) -> Result<f64, String> {
    let v = real(s)?;
    if v <= 0.0 {
        return Err(format!("{v} is not positive"));
    }
    Ok(v)
}

pub fn finite_real(s: &str) -> Result<f64, String> {
    real(s)
}

/// `a,b,c` or the inclusive range `a:b`.
pub fn photon_numbers(s: &str) -> Result<Vec<u32>, String> {
    let int = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("'{t}' is not a non-negative integer"))
    };
    if let Some((a, b)) = s.split_once(':') {
        let (a, b) = (int(a)?, int(b)?);
        if a > b {
            return Err(format!("empty range {a}:{b}"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(int).collect()
}

fn triple(s: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, count] = parts[..] else {
        return Err(format!("expected a:b:count, got '{s}'"));
    };
    let count: usize = count
        .trim()
        .parse()
        .map_err(|_| format!("'{count}' is not a sample count"))?;
    if count == 0 {
        return Err("sample count must be positive".into());
    }
    Ok((real(a)?, real(b)?, count))
}

/// `a:b:count` with `a < b` and `count >= 2`.
pub fn axis(s: &str) -> Result<Grid1D, String> {
    let (a, b, count) = triple(s)?;
    if count < 2 {
        return Err("an axis needs at least 2 samples".into());
    }
    Grid1D::new(a, b, count).map_err(|e| e.to_string())
}
