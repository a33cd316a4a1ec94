//! Exact cover by l-sets and 3-dimensional matching, the source problems of
//! every reduction, with plain depth-first decision oracles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_COVER_CAP: usize = 24;
pub const DEFAULT_MATCHING_CAP: usize = 20;

/// Ground set `0..universe`, a family of `set_size`-element subsets, and an
/// optional bound on how many subsets any element may occur in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactCoverInstance {
    pub universe: usize,
    pub set_size: usize,
    pub occurrence_cap: Option<usize>,
    pub subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum CoverViolation {
    SetSizeTooSmall {
        set_size: usize,
    },
    EmptyGroundSet,
    GroundSetNotDivisible {
        universe: usize,
        set_size: usize,
    },
    WrongSubsetSize {
        index: usize,
        len: usize,
    },
    ElementOutOfRange {
        index: usize,
        element: usize,
    },
    RepeatedElement {
        index: usize,
        element: usize,
    },
    OccurrenceCapExceeded {
        element: usize,
        occurrences: usize,
        cap: usize,
    },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SetSizeTooSmall { set_size } => write!(f, "subset size {set_size} is below 3"),
            Self::EmptyGroundSet => write!(f, "ground set is empty"),
            Self::GroundSetNotDivisible { universe, set_size } => {
                write!(f, "|X| = {universe} is not divisible by l = {set_size}")
            }
            Self::WrongSubsetSize { index, len } => {
                write!(f, "subset {index} has {len} elements")
            }
            Self::ElementOutOfRange { index, element } => {
                write!(f, "subset {index} mentions element {element} outside X")
            }
            Self::RepeatedElement { index, element } => {
                write!(f, "subset {index} repeats element {element}")
            }
            Self::OccurrenceCapExceeded {
                element,
                occurrences,
                cap,
            } => write!(
                f,
                "element {element} occurs in {occurrences} subsets (cap {cap})"
            ),
        }
    }
}

impl ExactCoverInstance {
    pub fn new(
        universe: usize,
        set_size: usize,
        occurrence_cap: Option<usize>,
        subsets: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut inst = Self {
            universe,
            set_size,
            occurrence_cap,
            subsets,
        };
        for s in &mut inst.subsets {
            s.sort_unstable();
        }
        inst.validate().map_err(Error::InvalidCover)?;
        Ok(inst)
    }

    /// Exact 3-cover with every element in at most three subsets.
    pub fn x3c3(universe: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(universe, 3, Some(3), subsets)
    }

    pub fn x3c(universe: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(universe, 3, None, subsets)
    }

    /// Number of subsets in any exact cover, `|X| / l`.
    pub fn q(&self) -> usize {
        self.universe / self.set_size
    }

    pub fn validate(&self) -> std::result::Result<(), CoverViolation> {
        if self.set_size < 3 {
            return Err(CoverViolation::SetSizeTooSmall {
                set_size: self.set_size,
            });
        }
        if self.universe == 0 {
            return Err(CoverViolation::EmptyGroundSet);
        }
        if !self.universe.is_multiple_of(self.set_size) {
            return Err(CoverViolation::GroundSetNotDivisible {
                universe: self.universe,
                set_size: self.set_size,
            });
        }
        let mut occurrences = vec![0usize; self.universe];
        for (index, s) in self.subsets.iter().enumerate() {
            if s.len() != self.set_size {
                return Err(CoverViolation::WrongSubsetSize {
                    index,
                    len: s.len(),
                });
            }
            let mut seen = Vec::with_capacity(s.len());
            for &element in s {
                if element >= self.universe {
                    return Err(CoverViolation::ElementOutOfRange { index, element });
                }
                if seen.contains(&element) {
                    return Err(CoverViolation::RepeatedElement { index, element });
                }
                seen.push(element);
                occurrences[element] += 1;
            }
        }
        if let Some(cap) = self.occurrence_cap {
            if let Some((element, &occ)) = occurrences.iter().enumerate().find(|&(_, &o)| o > cap) {
                return Err(CoverViolation::OccurrenceCapExceeded {
                    element,
                    occurrences: occ,
                    cap,
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// First element that no subset contains.
    pub fn uncovered_element(&self) -> Option<usize> {
        let mut hit = vec![false; self.universe];
        for s in &self.subsets {
            for &x in s {
                hit[x] = true;
            }
        }
        hit.iter().position(|&h| !h)
    }

    pub fn contains(&self, subset: usize, element: usize) -> bool {
        self.subsets[subset].binary_search(&element).is_ok()
    }
}

/// Subset indices (ascending) of an exact cover, if one exists. Branches on
/// the smallest uncovered element, trying subsets in index order.
pub fn solve_exact_cover(inst: &ExactCoverInstance) -> Result<Option<Vec<usize>>> {
    solve_exact_cover_with_cap(inst, DEFAULT_COVER_CAP)
}

pub fn solve_exact_cover_with_cap(
    inst: &ExactCoverInstance,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    inst.validate().map_err(Error::InvalidCover)?;
    if inst.subsets.len() > cap {
        return Err(Error::CapExceeded {
            what: "subset family",
            size: inst.subsets.len(),
            cap,
        });
    }
    let mut containing = vec![Vec::new(); inst.universe];
    for (i, s) in inst.subsets.iter().enumerate() {
        for &x in s {
            containing[x].push(i);
        }
    }
    let mut covered = vec![false; inst.universe];
    let mut chosen = Vec::new();
    if cover_from(inst, &containing, &mut covered, &mut chosen) {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn cover_from(
    inst: &ExactCoverInstance,
    containing: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(x) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for &i in &containing[x] {
        let s = &inst.subsets[i];
        if s.iter().any(|&y| covered[y]) {
            continue;
        }
        for &y in s {
            covered[y] = true;
        }
        chosen.push(i);
        if cover_from(inst, containing, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &y in s {
            covered[y] = false;
        }
    }
    false
}

/// Independent check that `chosen` partitions the ground set.
pub fn verify_cover(inst: &ExactCoverInstance, chosen: &[usize]) -> bool {
    let mut count = vec![0usize; inst.universe];
    for &i in chosen {
        let Some(s) = inst.subsets.get(i) else {
            return false;
        };
        for &x in s {
            match count.get_mut(x) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
    }
    count.iter().all(|&c| c == 1)
}

/// Disjoint sets P, Q, R of size `n` each (coordinates `0..n`) and triples
/// drawn from P x Q x R.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleSystem {
    pub n: usize,
    pub triples: Vec<[usize; 3]>,
}

impl TripleSystem {
    pub fn new(n: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let ts = Self { n, triples };
        ts.validate()?;
        Ok(ts)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidTriples("coordinate sets are empty".into()));
        }
        if self.triples.is_empty() {
            return Err(Error::InvalidTriples("no triples".into()));
        }
        for (j, t) in self.triples.iter().enumerate() {
            if let Some(c) = t.iter().find(|&&c| c >= self.n) {
                return Err(Error::InvalidTriples(format!(
                    "triple {j} has coordinate {c} outside 0..{}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Indices of `n` coordinate-disjoint triples covering P, Q and R. Covers P
/// in order, trying triples in index order.
pub fn solve_3dm(ts: &TripleSystem) -> Result<Option<Vec<usize>>> {
    solve_3dm_with_cap(ts, DEFAULT_MATCHING_CAP)
}

pub fn solve_3dm_with_cap(ts: &TripleSystem, cap: usize) -> Result<Option<Vec<usize>>> {
    ts.validate()?;
    if ts.triples.len() > cap {
        return Err(Error::CapExceeded {
            what: "triple set",
            size: ts.triples.len(),
            cap,
        });
    }
    let mut by_p = vec![Vec::new(); ts.n];
    for (j, t) in ts.triples.iter().enumerate() {
        by_p[t[0]].push(j);
    }
    let mut used_q = vec![false; ts.n];
    let mut used_r = vec![false; ts.n];
    let mut chosen = Vec::new();
    fn go(
        ts: &TripleSystem,
        by_p: &[Vec<usize>],
        p: usize,
        used_q: &mut [bool],
        used_r: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if p == ts.n {
            return true;
        }
        for &j in &by_p[p] {
            let [_, q, r] = ts.triples[j];
            if used_q[q] || used_r[r] {
                continue;
            }
            used_q[q] = true;
            used_r[r] = true;
            chosen.push(j);
            if go(ts, by_p, p + 1, used_q, used_r, chosen) {
                return true;
            }
            chosen.pop();
            used_q[q] = false;
            used_r[r] = false;
        }
        false
    }
    if go(ts, &by_p, 0, &mut used_q, &mut used_r, &mut chosen) {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

pub fn verify_matching(ts: &TripleSystem, chosen: &[usize]) -> bool {
    let mut hits = vec![[0usize; 3]; ts.n];
    for &j in chosen {
        let Some(t) = ts.triples.get(j) else {
            return false;
        };
        for (axis, &c) in t.iter().enumerate() {
            if c >= ts.n {
                return false;
            }
            hits[c][axis] += 1;
        }
    }
    hits.iter().all(|h| h == &[1, 1, 1])
}
