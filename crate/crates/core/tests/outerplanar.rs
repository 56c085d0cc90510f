use std::collections::BTreeSet;

use cfcolor::generators::{random_cactus, random_outerplanar};
use cfcolor::outerplanar::{cactus_state, complete_cf_outerplanar_with, CaseId, InductionOptions};
use cfcolor::verify::verify_cf;

#[test]
fn random_outerplanar_runs_audit_clean() {
    let mut seen = BTreeSet::new();
    let opts = InductionOptions { audit_each_step: true };
    for seed in 0..500u64 {
        let n = 2 + (seed as usize * 7) % 39;
        let density = [1.0, 0.9, 0.7, 0.5][seed as usize % 4];
        let g = random_outerplanar(n, seed, density);
        let run = complete_cf_outerplanar_with(&g, opts).unwrap_or_else(|e| panic!("seed {seed} n {n}: {e}\n{g:?}"));
        let report = verify_cf(&g, &run.coloring).unwrap();
        assert!(report.valid, "seed {seed}: {:?}", report.failures);
        assert!(run.coloring.palette_size() <= 4);
        seen.extend(run.state.cases());
    }
    let missing: Vec<CaseId> = CaseId::ALL.iter().copied().filter(|c| !c.is_cactus() && !seen.contains(c)).collect();
    eprintln!("not reached by the random corpus: {missing:?}");
}

#[test]
fn random_cacti() {
    for seed in 0..300u64 {
        let n = 2 + (seed as usize * 5) % 39;
        let g = random_cactus(n, seed);
        let state = cactus_state(&g).unwrap();
        let c = state.to_complete();
        let report = verify_cf(&g, &c).unwrap();
        assert!(report.valid, "seed {seed}: {:?} {g:?} {:?}", report.failures, c.colors);
        assert!(c.palette_size() <= 3);
    }
}
