use std::collections::BTreeMap;
use std::thread;

use super::{commutant, simple, witnessed, Aggregate, MapSpace, SpaceKind, WitnessSpace};
use crate::algebra::HomAlgebra;

/// Every requested space for `k = 0..=max_k`, solved once.
///
/// Per-power solves are independent; they run on scoped threads and are
/// merged by `(kind, k)` so the table is the same regardless of scheduling.
#[derive(Debug, Clone)]
pub struct SpaceTable {
    n: usize,
    max_k: usize,
    spaces: BTreeMap<(SpaceKind, usize), MapSpace>,
    witnesses: BTreeMap<(SpaceKind, usize), WitnessSpace>,
}

enum Solved {
    Plain(MapSpace),
    Witnessed(MapSpace, WitnessSpace),
}

impl SpaceTable {
    /// All six derivation-type kinds plus the commutant.
    pub fn compute(a: &HomAlgebra, max_k: usize) -> Self {
        SpaceTable::compute_kinds(a, &SpaceKind::DERIVATION_TYPES, max_k)
    }

    pub fn compute_kinds(a: &HomAlgebra, kinds: &[SpaceKind], max_k: usize) -> Self {
        let jobs: Vec<(SpaceKind, usize)> = kinds
            .iter()
            .filter(|k| **k != SpaceKind::Commutant)
            .flat_map(|&kind| (0..=max_k).map(move |k| (kind, k)))
            .collect();
        let results: Vec<((SpaceKind, usize), Solved)> = thread::scope(|scope| {
            let handles: Vec<_> = jobs
                .iter()
                .map(|&(kind, k)| {
                    scope.spawn(move || {
                        let solved = match kind {
                            SpaceKind::Gder | SpaceKind::Qder => {
                                let (m, w) = witnessed(a, kind, k);
                                Solved::Witnessed(m, w)
                            }
                            _ => Solved::Plain(simple(a, kind, k)),
                        };
                        ((kind, k), solved)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("solver thread panicked"))
                .collect()
        });

        let mut spaces = BTreeMap::new();
        let mut witnesses = BTreeMap::new();
        spaces.insert((SpaceKind::Commutant, 0), commutant(a));
        for (key, solved) in results {
            match solved {
                Solved::Plain(m) => {
                    spaces.insert(key, m);
                }
                Solved::Witnessed(m, w) => {
                    spaces.insert(key, m);
                    witnesses.insert(key, w);
                }
            }
        }
        SpaceTable {
            n: a.dim(),
            max_k,
            spaces,
            witnesses,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    /// Panics if `(kind, k)` was not part of the computation.
    pub fn get(&self, kind: SpaceKind, k: usize) -> &MapSpace {
        let key = if kind == SpaceKind::Commutant {
            (kind, 0)
        } else {
            (kind, k)
        };
        self.spaces
            .get(&key)
            .unwrap_or_else(|| panic!("{kind} at power {k} was not computed"))
    }

    pub fn witnesses(&self, kind: SpaceKind, k: usize) -> &WitnessSpace {
        self.witnesses
            .get(&(kind, k))
            .unwrap_or_else(|| panic!("no witness space for {kind} at power {k}"))
    }

    pub fn aggregate(&self, kind: SpaceKind) -> Aggregate {
        let per_k = (0..=self.max_k)
            .map(|k| self.get(kind, k).clone())
            .collect();
        Aggregate::from_spaces(kind, self.n, per_k)
    }

    pub fn spaces(&self) -> impl Iterator<Item = &MapSpace> {
        self.spaces.values()
    }
}
