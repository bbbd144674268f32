use serde::Serialize;

use crate::error::Result;
use crate::lab::check::{check_family, check_parallelism, CheckMode};
use crate::lab::family::LineFamily;
use crate::lab::lines::{add_mod, rank_mod, span_points, sub_mod};
use crate::lab::table::FiniteMapTable;

/// Which conclusion about `G = F - F(0)` and the first `k` directions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaConclusion {
    /// `G(v_1), ..., G(v_k)` are linearly independent.
    ImagesIndependent,
    /// `G(span{v_1..v_k}) = span{G(v_1)..G(v_k)}`.
    SpanImage,
    /// `G(x + span{v_1..v_k}) = G(x) + span{G(v_1)..G(v_k)}` for every `x`.
    SliceImage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum LemmaReport {
    Holds,
    HypothesisViolation { detail: String },
    LemmaViolation { k: usize, conclusion: LemmaConclusion, point: Vec<u32> },
}

fn sorted(mut pts: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Checks the hypotheses (bijection, `n` independent directions mapped onto parallel lines),
/// then the three conclusions for every `k <= n`. Reports the first failure.
pub fn verify_parallelism_lemma(table: &FiniteMapTable, fam: &LineFamily) -> Result<LemmaReport> {
    let hypothesis = |d: &str| Ok(LemmaReport::HypothesisViolation { detail: d.to_string() });
    let (p, n) = (table.p(), table.n());
    if !table.is_bijection() {
        return hypothesis("table is not a bijection of (Z_p)^n");
    }
    if fam.n() != n || fam.len() != n {
        return hypothesis("family must consist of n directions in dimension n");
    }
    let dirs = fam.residues(p)?;
    if rank_mod(&dirs, p) != n {
        return hypothesis("family directions are not linearly independent mod p");
    }
    if !check_family(table, fam, CheckMode::Onto)?.ok {
        return hypothesis("some family line is not mapped onto a line");
    }
    if !check_parallelism(table, fam)? {
        return hypothesis("parallel family lines have non-parallel images");
    }

    let grid = table.grid();
    let base = table.value(0).to_vec();
    let g = |x: &[u32]| sub_mod(table.value_at(x), &base, p);
    for k in 1..=n {
        let vs = &dirs[..k];
        let gs: Vec<Vec<u32>> = vs.iter().map(|v| g(v)).collect();
        if rank_mod(&gs, p) != k {
            return Ok(LemmaReport::LemmaViolation {
                k,
                conclusion: LemmaConclusion::ImagesIndependent,
                point: vec![0; n],
            });
        }
        let domain_span = span_points(vs, n, p);
        let image_span = sorted(span_points(&gs, n, p));
        if sorted(domain_span.iter().map(|y| g(y)).collect()) != image_span {
            return Ok(LemmaReport::LemmaViolation {
                k,
                conclusion: LemmaConclusion::SpanImage,
                point: vec![0; n],
            });
        }
        let mut covered = vec![false; grid.size()];
        for start in 0..grid.size() {
            if covered[start] {
                continue;
            }
            let x = grid.point(start);
            let gx = g(&x);
            let slice: Vec<Vec<u32>> = domain_span
                .iter()
                .map(|y| {
                    let z = add_mod(&x, y, p);
                    covered[grid.index(&z)] = true;
                    g(&z)
                })
                .collect();
            let shifted = sorted(image_span.iter().map(|w| add_mod(&gx, w, p)).collect());
            if sorted(slice) != shifted {
                return Ok(LemmaReport::LemmaViolation {
                    k,
                    conclusion: LemmaConclusion::SliceImage,
                    point: x,
                });
            }
        }
    }
    Ok(LemmaReport::Holds)
}
