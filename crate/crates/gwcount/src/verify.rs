//! Named property suites behind the `verify` CLI subcommand. The acceptance
//! tests run the same code, so the CLI and the test suite cannot drift.

use crate::error::{Error, Result};
use crate::genus1;
use crate::gw0::{self, MemoTable};
use crate::lattice::{
    self, candidate_filter, cremona_once, intersect, make_surface, weyl_normalize, CurveClass,
    SurfaceKind, SurfaceModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: pass ({} checks)", self.name, self.checks)
        } else {
            format!(
                "{}: FAIL ({} of {} checks failed)",
                self.name,
                self.failures.len(),
                self.checks
            )
        }
    }
}

pub const SUITE_NAMES: [&str; 6] = [
    "p2-oracle",
    "wdvv-pairs",
    "blowdown",
    "weyl",
    "quadric-bl2",
    "pipeline-identity",
];

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    match name {
        "p2-oracle" => p2_oracle(8),
        "wdvv-pairs" => wdvv_pairs(50),
        "blowdown" => blowdown(),
        "weyl" => weyl_invariance(),
        "quadric-bl2" => quadric_bl2(6),
        "pipeline-identity" => pipeline_identity(200),
        _ => Err(Error::Validation(format!(
            "unknown verify suite {name:?} (known: {})",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn all_blowups() -> Vec<SurfaceModel> {
    (0..=8u8)
        .map(|k| make_surface(SurfaceKind::P2Blowup(k)).unwrap())
        .collect()
}

/// Draws candidate classes on a surface with c1.beta bounded, seeded for
/// reproducibility.
pub fn random_candidate_classes(
    s: &SurfaceModel,
    rng: &mut ChaCha8Rng,
    count: usize,
    max_c1: i64,
) -> Vec<CurveClass> {
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 200_000 {
        attempts += 1;
        let beta = match s.kind {
            SurfaceKind::P2Blowup(k) => {
                let d = rng.gen_range(1..=6i64);
                let mut coords = vec![d];
                for _ in 0..k {
                    coords.push(rng.gen_range(0..=d.min(3)));
                }
                CurveClass(coords)
            }
            SurfaceKind::Quadric => {
                CurveClass(vec![rng.gen_range(0..=4i64), rng.gen_range(0..=4i64)])
            }
        };
        if candidate_filter(s, &beta)
            && lattice::c1_pairing(s, &beta).unwrap() <= max_c1
        {
            out.push(beta);
        }
    }
    out
}

/// n_0(P^2, d) against the independent Kontsevich oracle for 1 <= d <= max_d.
pub fn p2_oracle(max_d: i64) -> Result<SuiteReport> {
    let s = make_surface(SurfaceKind::P2Blowup(0))?;
    let mut memo = MemoTable::new(&s);
    let mut failures = Vec::new();
    let mut checks = 0;
    for d in 1..=max_d {
        checks += 1;
        let got = gw0::n0(&s, &CurveClass(vec![d]), &mut memo)?;
        let want = gw0::kontsevich_p2(d)?;
        if got != want {
            failures.push(format!("d={d}: n0={got}, oracle={want}"));
        }
    }
    Ok(SuiteReport {
        name: "p2-oracle".into(),
        checks,
        failures,
    })
}

fn divisor_pool(s: &SurfaceModel) -> Vec<CurveClass> {
    match s.kind {
        SurfaceKind::P2Blowup(k) => {
            let mut line = vec![0i64; s.rank];
            line[0] = 1;
            let mut pool = vec![CurveClass(line.clone())];
            if k >= 1 {
                let mut v = line.clone();
                v[1] = 1; // L - E_1 in multiplicity coordinates
                pool.push(CurveClass(v));
            }
            let mut conic = vec![0i64; s.rank];
            conic[0] = 2;
            if k >= 2 {
                conic[1] = 1;
                conic[2] = 1;
            }
            pool.push(CurveClass(conic));
            pool
        }
        SurfaceKind::Quadric => vec![
            CurveClass(vec![1, 0]),
            CurveClass(vec![0, 1]),
            CurveClass(vec![1, 1]),
            CurveClass(vec![2, 1]),
        ],
    }
}

/// Every divisor pair with A.B != 0 from a fixed pool recovers the same n_0,
/// on >= `min_classes` classes with delta >= 3 across Bl_0..Bl_4 and the
/// quadric.
pub fn wdvv_pairs(min_classes: usize) -> Result<SuiteReport> {
    let mut surfaces: Vec<SurfaceModel> = (0..=4u8)
        .map(|k| make_surface(SurfaceKind::P2Blowup(k)).unwrap())
        .collect();
    surfaces.push(make_surface(SurfaceKind::Quadric)?);
    let mut rng = ChaCha8Rng::seed_from_u64(0x57dd);
    let mut checks = 0;
    let mut failures = Vec::new();
    let per_surface = min_classes.div_ceil(surfaces.len()) + 1;
    for s in &surfaces {
        let mut memo = MemoTable::new(s);
        let pool = divisor_pool(s);
        let mut seen = std::collections::HashSet::new();
        for beta in random_candidate_classes(s, &mut rng, per_surface * 3, 12) {
            if lattice::delta(s, &beta)? < 3 || !seen.insert(beta.clone()) {
                continue;
            }
            if seen.len() > per_surface {
                break;
            }
            let mut pairs = Vec::new();
            for a in &pool {
                for b in &pool {
                    if intersect(s, a, b)? != 0 {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
            checks += 1;
            if !gw0::consistency_check(s, &beta, &pairs, &mut memo)? {
                failures.push(format!("{}: class {beta}", s.surface_id()));
            }
        }
    }
    if checks < min_classes {
        failures.push(format!("only {checks} classes sampled, need {min_classes}"));
    }
    Ok(SuiteReport {
        name: "wdvv-pairs".into(),
        checks,
        failures,
    })
}

/// Dropping a trailing zero multiplicity does not change n_0.
pub fn blowdown() -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb10d);
    let mut checks = 0;
    let mut failures = Vec::new();
    let blowups = all_blowups();
    for k in 1..=8usize {
        let s = &blowups[k];
        let s_down = &blowups[k - 1];
        let mut memo = MemoTable::new(s);
        let mut memo_down = MemoTable::new(s_down);
        for beta in random_candidate_classes(s, &mut rng, 6, 10) {
            let mut padded = beta.clone();
            padded.0[k] = 0; // force a trailing zero
            if !candidate_filter(s, &padded) {
                continue;
            }
            let truncated = CurveClass(padded.0[..k].to_vec());
            checks += 1;
            let up = gw0::n0(s, &padded, &mut memo)?;
            let down = gw0::n0(s_down, &truncated, &mut memo_down)?;
            if up != down {
                failures.push(format!(
                    "{} {padded} = {up}, {} {truncated} = {down}",
                    s.surface_id(),
                    s_down.surface_id()
                ));
            }
        }
    }
    Ok(SuiteReport {
        name: "blowdown".into(),
        checks,
        failures,
    })
}

/// Permutation, Cremona, and normalization invariance of n_0, plus
/// idempotence and invariant preservation of the normal form itself.
pub fn weyl_invariance() -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3e71);
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in all_blowups().iter().skip(1) {
        let k = s.rank - 1;
        let mut memo = MemoTable::new(s);
        for beta in random_candidate_classes(s, &mut rng, 6, 10) {
            let base = gw0::n0(s, &beta, &mut memo)?;

            // Random permutation of the multiplicities.
            let mut perm = beta.clone();
            for i in (2..=k).rev() {
                let j = rng.gen_range(1..=i);
                perm.0.swap(i, j);
            }
            checks += 1;
            let permuted = gw0::n0(s, &perm, &mut memo)?;
            if permuted != base {
                failures.push(format!("permutation: {beta} vs {perm}"));
            }

            // Cremona move where it applies.
            if k >= 3 {
                let sorted = {
                    let mut c = beta.clone();
                    c.0[1..].sort_unstable_by(|a, b| b.cmp(a));
                    c
                };
                if sorted.0[1] + sorted.0[2] + sorted.0[3] > sorted.0[0] {
                    let moved = cremona_once(s, &sorted)?;
                    checks += 1;
                    // Evaluate the image through the unnormalized path so the
                    // check does not collapse to a memo lookup.
                    let mut fresh = MemoTable::new(s);
                    let img = gw0::n0_opts(s, &moved, &mut fresh, false)?;
                    if img != base {
                        failures.push(format!("cremona: {sorted} -> {moved}"));
                    }
                }
            }

            // Normal form: idempotent and invariant-preserving.
            let nf = weyl_normalize(s, &beta);
            checks += 1;
            if weyl_normalize(s, &nf) != nf {
                failures.push(format!("normalize not idempotent on {beta}"));
            }
            checks += 1;
            if intersect(s, &nf, &nf)? != intersect(s, &beta, &beta)?
                || lattice::c1_pairing(s, &nf)? != lattice::c1_pairing(s, &beta)?
            {
                failures.push(format!("normalize broke invariants of {beta}"));
            }
        }
    }
    Ok(SuiteReport {
        name: "weyl".into(),
        checks,
        failures,
    })
}

/// n_0 on the quadric matches n_0 of (a+b; a, b) on Bl_2 for a + b <= max_sum.
pub fn quadric_bl2(max_sum: i64) -> Result<SuiteReport> {
    let q = make_surface(SurfaceKind::Quadric)?;
    let b2 = make_surface(SurfaceKind::P2Blowup(2))?;
    let mut memo_q = MemoTable::new(&q);
    let mut memo_b2 = MemoTable::new(&b2);
    let mut checks = 0;
    let mut failures = Vec::new();
    for a in 0..=max_sum {
        for b in 0..=(max_sum - a) {
            if a == 0 && b == 0 {
                continue;
            }
            checks += 1;
            let on_q = gw0::n0(&q, &CurveClass(vec![a, b]), &mut memo_q)?;
            let on_b2 = gw0::n0(&b2, &CurveClass(vec![a + b, a, b]), &mut memo_b2)?;
            if on_q != on_b2 {
                failures.push(format!("(a,b)=({a},{b}): quadric {on_q}, Bl2 {on_b2}"));
            }
        }
    }
    Ok(SuiteReport {
        name: "quadric-bl2".into(),
        checks,
        failures,
    })
}

/// RT1 = aut * n1j + CR and RT1 = rt1_via_pairing on random candidate
/// classes across every surface, for aut in {2, 4, 6}.
pub fn pipeline_identity(min_classes: usize) -> Result<SuiteReport> {
    let mut surfaces = all_blowups();
    surfaces.push(make_surface(SurfaceKind::Quadric)?);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea);
    let per_surface = min_classes.div_ceil(surfaces.len()) + 1;
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in &surfaces {
        let mut memo = MemoTable::new(s);
        for beta in random_candidate_classes(s, &mut rng, per_surface, 8) {
            for aut in [2i64, 4, 6] {
                checks += 1;
                match genus1::decomposition_identity_check(s, &beta, aut, &mut memo) {
                    Ok(true) => {}
                    Ok(false) => {
                        failures.push(format!("{}: {beta} aut={aut}", s.surface_id()))
                    }
                    Err(e) => failures.push(format!("{}: {beta} aut={aut}: {e}", s.surface_id())),
                }
            }
            let n0_val = gw0::n0(s, &beta, &mut memo)?;
            checks += 1;
            if genus1::rt1(s, &beta, &n0_val)? != genus1::rt1_via_pairing(s, &beta, &n0_val)? {
                failures.push(format!("{}: pairing sum mismatch on {beta}", s.surface_id()));
            }
        }
    }
    if checks < min_classes * 3 {
        failures.push(format!(
            "only {checks} identity checks run, need {}",
            min_classes * 3
        ));
    }
    Ok(SuiteReport {
        name: "pipeline-identity".into(),
        checks,
        failures,
    })
}
