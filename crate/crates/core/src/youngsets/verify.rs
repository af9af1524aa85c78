use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{image_of_subset, Point, YoungSet};

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// A counterexample when the check fails.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub young_set: String,
    pub n_max: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// All injections `[n] → [m]` as image lists.
fn injections(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                go(n, m, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n <= m {
        go(n, m, &mut Vec::new(), &mut vec![false; m], &mut out);
    }
    out
}

/// At most `k` injections, chosen reproducibly.
fn sample(mut all: Vec<Vec<usize>>, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if all.len() > k {
        all.shuffle(rng);
        all.truncate(k);
    }
    all
}

fn check(axiom: &'static str, witness: Option<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

/// Check the Young-set axioms for all `n ≤ n_max`. Functoriality is checked
/// on a fixed pseudo-random sample of composable injections; everything else
/// is exhaustive.
pub fn verify_axioms(y: &dyn YoungSet, n_max: usize) -> AxiomReport {
    let mut checks = Vec::new();
    let pts: Vec<Vec<Point>> = (0..=n_max).map(|n| y.points(n)).collect();

    checks.push(check(
        "empty set has no points",
        (!pts[0].is_empty()).then(|| format!("Y_0 = {:?}", pts[0])),
    ));

    let unsorted = (0..=n_max).find(|&n| pts[n].windows(2).any(|w| w[0] >= w[1]));
    checks.push(check(
        "points sorted and distinct",
        unsorted.map(|n| format!("Y_{n} = {:?}", pts[n])),
    ));

    let mut bad_id = None;
    'id: for n in 0..=n_max {
        let id: Vec<usize> = (0..n).collect();
        for p in &pts[n] {
            let q = y.map_point(&id, n, p);
            if q != *p {
                bad_id = Some(format!("identity on [{n}] sends {p:?} to {q:?}"));
                break 'id;
            }
        }
    }
    checks.push(check("identity acts trivially", bad_id));

    let mut bad_inj = None;
    'inj: for m in 0..=n_max {
        let target: HashSet<&Point> = pts[m].iter().collect();
        for n in 0..=m {
            for w in injections(n, m) {
                let mut seen = HashSet::new();
                for p in &pts[n] {
                    let q = y.map_point(&w, m, p);
                    if !target.contains(&q) {
                        bad_inj = Some(format!("{w:?}: [{n}]→[{m}] sends {p:?} to non-point {q:?}"));
                        break 'inj;
                    }
                    if !seen.insert(q.clone()) {
                        bad_inj = Some(format!("{w:?}: [{n}]→[{m}] is not injective on points; {q:?} hit twice"));
                        break 'inj;
                    }
                }
            }
        }
    }
    checks.push(check("injections act injectively", bad_inj));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bad_comp = None;
    'comp: for k in 0..=n_max {
        for m in 0..=k {
            let vs = sample(injections(m, k), 12, &mut rng);
            for n in 0..=m {
                let ws = sample(injections(n, m), 12, &mut rng);
                for w in &ws {
                    for v in &vs {
                        let vw: Vec<usize> = w.iter().map(|&i| v[i]).collect();
                        for p in &pts[n] {
                            let a = y.map_point(&vw, k, p);
                            let b = y.map_point(v, k, &y.map_point(w, m, p));
                            if a != b {
                                bad_comp = Some(format!("v={v:?}, w={w:?}, p={p:?}: {a:?} vs {b:?}"));
                                break 'comp;
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(check("functoriality", bad_comp));

    let mut bad_cap = None;
    'cap: for n in 0..=n_max {
        let images: Vec<BTreeSet<Point>> = (0u32..1 << n)
            .map(|mask| {
                let k: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                image_of_subset(y, n, &k).into_iter().collect()
            })
            .collect();
        for a in 0..images.len() {
            for b in a..images.len() {
                let meet: BTreeSet<Point> = images[a].intersection(&images[b]).cloned().collect();
                if meet != images[a & b] {
                    bad_cap = Some(format!("n={n}, K={a:#b}, L={b:#b}: intersection {meet:?} vs {:?}", images[a & b]));
                    break 'cap;
                }
            }
        }
    }
    checks.push(check("intersection axiom", bad_cap));

    AxiomReport {
        young_set: y.name(),
        n_max,
        checks,
    }
}
