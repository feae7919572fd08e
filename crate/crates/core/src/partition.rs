//! Grouping a list of orbits into strong Nielsen classes.

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::sn::{sn_equivalent_rel_a, SearchBudget, SnInstance, SnStatus};
use crate::word::BraidWord;

/// Classes are lists of input indices, each sorted, ordered by their
/// smallest member. `unresolved` lists pairs `(i, j)`, `i < j`, that ended up
/// in different classes only because the search was inconclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub unresolved: Vec<(usize, usize)>,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Decides every pair of orbits (kernel braids over the common `β_A`) and
/// merges equivalent ones. Pairs are evaluated on `threads` worker threads;
/// the merge runs afterwards in input order, so the result does not depend
/// on the thread count.
pub fn partition_sn_classes(
    n: usize,
    m: usize,
    beta_a: &BraidWord,
    orbits: &[BraidWord],
    budget: SearchBudget,
    threads: usize,
) -> Result<Partition> {
    let k = orbits.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    // validate up front so worker errors can only be internal
    for o in orbits {
        SnInstance::new(n, m, beta_a.clone(), o.clone(), o.clone())?;
    }
    let decide = |&(i, j): &(usize, usize)| -> Result<SnStatus> {
        let inst = SnInstance::new(n, m, beta_a.clone(), orbits[i].clone(), orbits[j].clone())?;
        Ok(sn_equivalent_rel_a(&inst, budget)?.status)
    };

    let threads = threads.max(1).min(pairs.len().max(1));
    let statuses: Vec<SnStatus> = if threads == 1 {
        pairs.iter().map(decide).collect::<Result<_>>()?
    } else {
        let mut slots: Vec<Option<Result<SnStatus>>> = (0..pairs.len()).map(|_| None).collect();
        std::thread::scope(|scope| {
            let chunk = pairs.len().div_ceil(threads);
            for (ps, out) in pairs.chunks(chunk).zip(slots.chunks_mut(chunk)) {
                let decide = &decide;
                scope.spawn(move || {
                    for (p, slot) in ps.iter().zip(out) {
                        *slot = Some(decide(p));
                    }
                });
            }
        });
        slots
            .into_iter()
            .map(|s| s.unwrap_or_else(|| Err(BraidError::Invalid("worker did not finish".into()))))
            .collect::<Result<_>>()?
    };

    let mut parent: Vec<usize> = (0..k).collect();
    for (&(i, j), status) in pairs.iter().zip(&statuses) {
        if *status == SnStatus::Equivalent {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            // the smaller index stays the root
            parent[a.max(b)] = a.min(b);
        }
    }
    let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; k];
    for (i, &r) in roots.iter().enumerate() {
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of[r]].push(i);
    }
    let unresolved = pairs
        .iter()
        .zip(&statuses)
        .filter(|&(&(i, j), s)| *s == SnStatus::Inconclusive && roots[i] != roots[j])
        .map(|(&p, _)| p)
        .collect();
    Ok(Partition {
        classes,
        unresolved,
    })
}
