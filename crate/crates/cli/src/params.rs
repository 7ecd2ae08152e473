//! `--params` values: comma-separated, each a word, an integer or an
//! inclusive range `a..b` with optional step `a..b:s` (ranges only where
//! sweeps are allowed).

use crate::{Failure, EX_USAGE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params(Vec<String>);

impl Params {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let parts: Vec<String> =
            text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        if let Some(r) = parts.iter().find(|p| p.contains("..")) {
            return Err(Failure::new(EX_USAGE, format!("range `{r}` is only accepted by growth")));
        }
        Ok(Params(parts))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[String] {
        &self.0
    }

    pub fn text(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn int(&self, i: usize) -> Result<usize, Failure> {
        self.0[i]
            .parse()
            .map_err(|_| Failure::new(EX_USAGE, format!("parameter `{}` is not a non-negative integer", self.0[i])))
    }
}

fn axis(part: &str) -> Result<Vec<String>, Failure> {
    let bad = || Failure::new(EX_USAGE, format!("bad range `{part}`"));
    match part.split_once("..") {
        Some((a, rest)) => {
            let (b, step) = rest.split_once(':').unwrap_or((rest, "1"));
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            let step: usize = step.trim().parse().map_err(|_| bad())?;
            if a > b || step == 0 {
                return Err(bad());
            }
            Ok((a..=b).step_by(step).map(|v| v.to_string()).collect())
        }
        None => Ok(vec![part.to_string()]),
    }
}

/// Cartesian product of the axes, first axis varying slowest.
pub fn expand(text: &str) -> Result<Vec<Params>, Failure> {
    let mut out = vec![Vec::new()];
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let values = axis(part)?;
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<String>| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(Params).collect())
}
