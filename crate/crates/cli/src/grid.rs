//! Parameter grids for sweeps: either an explicit comma list
//! (`0.1,0.25,sqrt2`) or a log-spaced range (`log:0.001:1:25`).

/// One numeric token; `sqrt2` names the unit-square diameter so geometric
/// sweeps can hit their upper bound exactly.
pub fn parse_value(token: &str) -> Result<f64, String> {
    let token = token.trim();
    if token.eq_ignore_ascii_case("sqrt2") {
        return Ok(std::f64::consts::SQRT_2);
    }
    let value: f64 = token
        .parse()
        .map_err(|_| format!("`{token}` is not a number"))?;
    if !value.is_finite() {
        return Err(format!("`{token}` is not finite"));
    }
    Ok(value)
}

pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    if let Some(range) = spec.strip_prefix("log:") {
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(format!("log grid must be `log:start:stop:count`, got `{spec}`"));
        };
        let start = parse_value(start)?;
        let stop = parse_value(stop)?;
        let count: usize = count
            .parse()
            .map_err(|_| format!("`{count}` is not a point count"))?;
        if count == 0 {
            return Err("log grid needs at least 1 point".into());
        }
        if start <= 0.0 || stop <= 0.0 {
            return Err(format!("log grid bounds must be positive, got {start}..{stop}"));
        }
        if count == 1 {
            if start != stop {
                return Err("single-point log grid needs start = stop".into());
            }
            return Ok(vec![start]);
        }
        if start >= stop {
            return Err(format!("log grid needs start < stop, got {start}..{stop}"));
        }
        let ratio = stop / start;
        let mut points: Vec<f64> = (0..count)
            .map(|k| start * ratio.powf(k as f64 / (count - 1) as f64))
            .collect();
        // Land exactly on the bounds; powf drift must not push a sweep past
        // a validated parameter limit like sqrt2.
        points[0] = start;
        points[count - 1] = stop;
        Ok(points)
    } else {
        let points = spec
            .split(',')
            .map(parse_value)
            .collect::<Result<Vec<f64>, String>>()?;
        if points.is_empty() {
            return Err("empty grid".into());
        }
        Ok(points)
    }
}
