use linemap_core::{Error, FieldSpec, Result, Scalar, Vector};

/// Reads a direction list given inline or as `@path`.
pub fn load(spec: &str) -> Result<String> {
    match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}"))),
        None => Ok(spec.to_string()),
    }
}

/// Parses directions of length `n` over the rationals.
///
/// Groups are separated by `;` or newlines, tokens by `,` or whitespace. `eK` is the `K`-th unit
/// vector and `v` is the all-ones vector. Runs of numeric tokens are split into vectors of length `n`.
pub fn parse(text: &str, n: usize) -> Result<Vec<Vector>> {
    let q = FieldSpec::RATIONAL;
    let mut out = Vec::new();
    for group in text.split([';', '\n']) {
        let mut run: Vec<Scalar> = Vec::new();
        let flush = |run: &mut Vec<Scalar>, out: &mut Vec<Vector>| -> Result<()> {
            if !run.len().is_multiple_of(n) {
                return Err(Error::Input(format!(
                    "{} numeric entries do not split into vectors of length {n}",
                    run.len()
                )));
            }
            for chunk in run.chunks(n) {
                out.push(Vector::new(q, chunk.to_vec())?);
            }
            run.clear();
            Ok(())
        };
        for tok in group.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            if tok == "v" {
                flush(&mut run, &mut out)?;
                out.push(Vector::ones(q, n));
            } else if let Some(k) = tok.strip_prefix('e') {
                flush(&mut run, &mut out)?;
                let k: usize = k.parse().map_err(|_| Error::Input(format!("bad unit vector token {tok:?}")))?;
                if k == 0 || k > n {
                    return Err(Error::Input(format!("{tok} is out of range for dimension {n}")));
                }
                out.push(Vector::unit(q, n, k - 1));
            } else {
                run.push(q.parse(tok).map_err(|_| Error::Input(format!("bad direction token {tok:?}")))?);
            }
        }
        flush(&mut run, &mut out)?;
    }
    if out.is_empty() {
        return Err(Error::Input("empty direction list".into()));
    }
    Ok(out)
}

/// Parses one vector of non-negative residues, e.g. `1,1`.
pub fn parse_residues(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Input(format!("bad residue {t:?}"))))
        .collect()
}
