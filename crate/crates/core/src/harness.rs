//! Verification campaigns: reduction equivalence against the cover oracle,
//! structural class checks on every construction and on random split-like
//! graphs, and polynomial solvers against the exhaustive oracle.
//!
//! Checks are either asserted (a failure fails the campaign) or observed
//! (counted and reported only). Every instance draws its randomness from a
//! seed derived from the campaign seed, the check family and its index, so
//! reports are reproducible and failures replay from their stored payload.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    bisplit_diam3_condition, chordal_trisplit_check, is_chordal, is_k1r_free, max_induced_star,
    max_induced_star_with_cap, recognize_bipartite, star_center_bipartite, star_center_bisplit,
    star_center_independent, verify_partition, PartitionKind, SplitLikePartition,
};
use crate::cover::{solve_exact_cover, ExactCoverInstance, TripleSystem, DEFAULT_COVER_CAP};
use crate::error::{Error, Result};
use crate::exact::{decide, solve_exact, verify_solution, SteinerInstance, DEFAULT_EXACT_CAP};
use crate::gadgets::{tdm_to_k14free_chordal, Reduction};
use crate::graph::{diameter, gen_random_split_like, Distance, Graph, VertexSet};
use crate::io::{parse_stp, write_stp, ParseError, StpDocument, FORMAT_VERSION};
use crate::poly::{
    finite_class_bound, solve_chordal_ksplit, solve_chordal_trisplit,
    solve_chordal_trisplit_literal, solve_claw_free_bipartite, solve_k1rfree_bisplit,
    solve_k1rfree_trisplit, solve_star_convex_bisplit, solve_via_hub, PolyResult,
};

/// Counterexamples kept per check.
pub const MAX_COUNTEREXAMPLES: usize = 5;
/// `r` of the finite-class lemma and solver checks.
pub const FINITE_R: usize = 3;
/// Neighborhood cap for star checks on the path-graph construction, whose
/// global clique grows with the number of triples.
const GADGET_STAR_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Equivalence,
    Structure,
    Fuzz,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub seed: u64,
    /// Random cover sources per family.
    pub sources: usize,
    /// Also run every covering family of two or three triples on six elements.
    pub exhaustive_sources: bool,
    /// Random sources are all planted yes-instances.
    pub planted_only: bool,
    /// Random graphs per lemma check.
    pub lemma_instances: usize,
    /// Random in-class instances per solver.
    pub fuzz_instances: usize,
    pub max_universe: usize,
    pub max_subsets: usize,
    pub max_fuzz_order: usize,
    pub suites: Vec<Suite>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            sources: 200,
            exhaustive_sources: true,
            planted_only: false,
            lemma_instances: 500,
            fuzz_instances: 1000,
            max_universe: 9,
            max_subsets: 6,
            max_fuzz_order: 16,
            suites: vec![Suite::Equivalence, Suite::Structure, Suite::Fuzz],
        }
    }
}

impl CampaignConfig {
    /// No instances at all.
    pub fn empty(seed: u64) -> Self {
        Self {
            seed,
            sources: 0,
            exhaustive_sources: false,
            lemma_instances: 0,
            fuzz_instances: 0,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        if self.max_universe < 4 {
            return bad("max_universe must allow at least one 4-set".into());
        }
        // Three subset copies make up the candidate pool of the trisplit construction.
        if 3 * self.max_subsets > DEFAULT_EXACT_CAP || self.max_subsets > DEFAULT_COVER_CAP {
            return bad(format!(
                "max_subsets {} exceeds the oracle limit {}",
                self.max_subsets,
                DEFAULT_EXACT_CAP / 3
            ));
        }
        if self.max_subsets < self.max_universe / 3 {
            return bad("max_subsets cannot cover max_universe".into());
        }
        if !(4..=DEFAULT_EXACT_CAP).contains(&self.max_fuzz_order) {
            return bad(format!(
                "max_fuzz_order must lie in 4..={DEFAULT_EXACT_CAP}"
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Asserted,
    Observed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStats {
    pub mode: Mode,
    pub passed: u64,
    pub failed: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: BTreeMap<String, CheckStats>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock milliseconds per suite; excluded from determinism.
    #[serde(default)]
    pub timing_ms: BTreeMap<String, u64>,
}

impl Report {
    fn stats(&mut self, check: &str, mode: Mode) -> &mut CheckStats {
        self.checks.entry(check.to_string()).or_insert(CheckStats {
            mode,
            passed: 0,
            failed: 0,
            metrics: BTreeMap::new(),
        })
    }

    pub fn record(&mut self, check: &str, mode: Mode, ok: bool) {
        let s = self.stats(check, mode);
        if ok {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
    }

    pub fn count(&mut self, check: &str, mode: Mode, metric: &str) {
        *self
            .stats(check, mode)
            .metrics
            .entry(metric.to_string())
            .or_default() += 1;
    }

    fn outcome(
        &mut self,
        check: &str,
        mode: Mode,
        seed: u64,
        index: u64,
        case: Case,
        out: Outcome,
    ) {
        self.record(check, mode, out.pass);
        for m in &out.metrics {
            self.count(check, mode, m);
        }
        if !out.pass {
            self.counterexamples.push(Counterexample {
                format: FORMAT_VERSION,
                check: check.to_string(),
                mode,
                seed,
                index,
                case,
                detail: out.detail,
            });
        }
    }

    /// Order-independent: counts add, counterexamples are re-sorted and
    /// capped per check.
    pub fn merge(&mut self, other: Report) {
        for (name, s) in other.checks {
            let mine = self.stats(&name, s.mode);
            mine.passed += s.passed;
            mine.failed += s.failed;
            for (k, v) in s.metrics {
                *mine.metrics.entry(k).or_default() += v;
            }
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by(|a, b| {
            (&a.check, a.seed, a.index, &a.detail).cmp(&(&b.check, b.seed, b.index, &b.detail))
        });
        let mut kept: BTreeMap<String, usize> = BTreeMap::new();
        self.counterexamples.retain(|c| {
            let n = kept.entry(c.check.clone()).or_default();
            *n += 1;
            *n <= MAX_COUNTEREXAMPLES
        });
        for (k, v) in other.timing_ms {
            *self.timing_ms.entry(k).or_default() += v;
        }
    }

    pub fn failures(&self, mode: Mode) -> u64 {
        self.checks
            .values()
            .filter(|s| s.mode == mode)
            .map(|s| s.failed)
            .sum()
    }

    pub fn asserted_ok(&self) -> bool {
        self.failures(Mode::Asserted) == 0
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Serialization with timing cleared, for byte-level comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.timing_ms.clear();
        copy.to_json()
    }

    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|(name, s)| {
                let mode = match s.mode {
                    Mode::Asserted => "asserted",
                    Mode::Observed => "observed",
                };
                let mut line = format!("{name} [{mode}] pass {} fail {}", s.passed, s.failed);
                for (k, v) in &s.metrics {
                    line.push_str(&format!(" {k}={v}"));
                }
                line
            })
            .collect()
    }
}

/// A stored failure, self-contained enough to re-run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub format: u32,
    pub check: String,
    pub mode: Mode,
    pub seed: u64,
    pub index: u64,
    pub case: Case,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Case {
    Reduction {
        reduction: Reduction,
        relation: Relation,
        source: ExactCoverInstance,
    },
    PathChordal {
        source: TripleSystem,
    },
    Property {
        property: Property,
        stp: String,
    },
    Solver {
        solver: SolverKind,
        stp: String,
    },
}

/// What a reduction check compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// Cover oracle vs `decide` at the construction's budget.
    Equivalence,
    /// Class membership claims of the construction.
    Structure,
    /// Trisplit construction decided at `|X| / 3` instead of `|X|`.
    ThirdBudget,
    /// Trisplit construction's true optimum against `|X|`.
    Optimum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Split graphs have diameter at most 3.
    SplitDiameter,
    /// Bisplit and trisplit graphs have diameter at most 4.
    SplitLikeDiameter,
    /// The clause-based chordal trisplit test agrees with chordality.
    ChordalTrisplitIff,
    /// The pairwise neighborhood condition agrees with diameter <= 3.
    BisplitDiameter3Iff,
    /// Bisplit graphs above the size bound contain an induced `K_{1,3}`.
    FiniteBisplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    ClawFreeBipartite,
    Hub,
    ChordalTrisplit,
    ChordalTrisplitLiteral,
    ChordalKSplit,
    StarBisplit,
    FiniteClass,
}

impl SolverKind {
    pub fn run(
        self,
        inst: &SteinerInstance,
        p: Option<&SplitLikePartition>,
    ) -> Result<Option<PolyResult>> {
        let need =
            || p.ok_or_else(|| Error::Precondition("solver needs a partition certificate".into()));
        match self {
            Self::ClawFreeBipartite => solve_claw_free_bipartite(inst).map(Some),
            Self::Hub => solve_via_hub(inst),
            Self::ChordalTrisplit => solve_chordal_trisplit(inst, need()?).map(Some),
            Self::ChordalTrisplitLiteral => solve_chordal_trisplit_literal(inst, need()?).map(Some),
            Self::ChordalKSplit => solve_chordal_ksplit(inst, need()?).map(Some),
            Self::StarBisplit => {
                let p = need()?;
                let center = star_center_bisplit(inst.graph(), p)?
                    .ok_or_else(|| Error::NotInClass("no biclique star center".into()))?;
                solve_star_convex_bisplit(inst, p, center).map(Some)
            }
            Self::FiniteClass => {
                let p = need()?;
                match p.k() {
                    2 => solve_k1rfree_bisplit(inst, p, FINITE_R).map(Some),
                    _ => solve_k1rfree_trisplit(inst, p, FINITE_R).map(Some),
                }
            }
        }
    }
}

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
    pub metrics: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self {
            pass,
            detail,
            metrics: Vec::new(),
        }
    }

    fn error(e: Error) -> Self {
        Self::new(false, format!("error: {e}"))
    }
}

/// Seed for instance `index` of check family `tag`.
pub fn derive_seed(seed: u64, tag: &str, index: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn instance_rng(seed: u64, tag: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag, index))
}

fn check_name(family: &str, reduction: Reduction, src: &ExactCoverInstance) -> String {
    match reduction {
        Reduction::Bisplit => format!("{family}/bisplit-l{}", src.set_size),
        r => format!("{family}/{}", r.tag()),
    }
}

/// Whether a construction's output is checked as asserted.
pub fn equivalence_mode(reduction: Reduction) -> Mode {
    match reduction {
        Reduction::K14Bipartite | Reduction::TrisplitDiameter3 => Mode::Observed,
        _ => Mode::Asserted,
    }
}

fn has_disjoint_pair(src: &ExactCoverInstance) -> bool {
    let s = &src.subsets;
    (0..s.len()).any(|i| (i + 1..s.len()).any(|j| s[i].iter().all(|x| !s[j].contains(x))))
}

pub fn evaluate_reduction(
    reduction: Reduction,
    relation: Relation,
    src: &ExactCoverInstance,
) -> Result<Outcome> {
    let art = match relation {
        Relation::ThirdBudget | Relation::Optimum => crate::gadgets::x3c_to_trisplit(src)?,
        _ => reduction.apply(src)?,
    };
    let g = art.graph();
    match relation {
        Relation::Equivalence => {
            let yes = solve_exact_cover(src)?.is_some();
            let got = decide(&art.instance, art.budget())?;
            Ok(Outcome::new(
                yes == got,
                format!("cover oracle {yes}, decide at k={} {got}", art.budget()),
            ))
        }
        Relation::ThirdBudget => {
            let yes = solve_exact_cover(src)?.is_some();
            let got = decide(&art.instance, src.q())?;
            Ok(Outcome::new(
                yes == got,
                format!("cover oracle {yes}, decide at |X|/3={} {got}", src.q()),
            ))
        }
        Relation::Optimum => {
            let yes = solve_exact_cover(src)?.is_some();
            let opt = solve_exact(&art.instance)?.size();
            let x = src.universe;
            let relation = if opt == x {
                "optimum=|X|"
            } else if opt == src.q() {
                "optimum=|X|/3"
            } else if opt < x {
                "optimum<|X|"
            } else {
                "optimum>|X|"
            };
            let pass = if yes { opt == x } else { opt > x };
            let mut out = Outcome::new(pass, format!("cover oracle {yes}, optimum {opt}, |X| {x}"));
            out.metrics
                .push(format!("{}:{relation}", if yes { "yes" } else { "no" }));
            Ok(out)
        }
        Relation::Structure => {
            let part_ok = match &art.partition {
                Some(p) => verify_partition(g, p)?,
                None => true,
            };
            let (ok, detail) = match reduction {
                Reduction::K15Bipartite => {
                    let s = max_induced_star(g)?;
                    (
                        recognize_bipartite(g).is_some() && s <= 4,
                        format!("max induced star {s}"),
                    )
                }
                Reduction::K14Bipartite => {
                    let s = max_induced_star(g)?;
                    (
                        recognize_bipartite(g).is_some() && s <= 3,
                        format!("max induced star {s}, max degree {}", g.max_degree()),
                    )
                }
                Reduction::Bisplit => {
                    let r = src.subsets.len() + src.set_size + 1;
                    (is_k1r_free(g, r)?, format!("K_1,{r}-freeness"))
                }
                Reduction::Trisplit => {
                    let d = diameter(g);
                    (d <= Distance::Finite(4), format!("diameter {d}"))
                }
                Reduction::BisplitDiameter3 => {
                    let d = diameter(g);
                    let p = art.partition.as_ref().expect("bisplit certificate");
                    let want = if has_disjoint_pair(src) {
                        d == Distance::Finite(3)
                    } else {
                        d <= Distance::Finite(3)
                    };
                    (
                        want && bisplit_diam3_condition(g, p)?,
                        format!("diameter {d}"),
                    )
                }
                Reduction::TrisplitDiameter3 => {
                    let d = diameter(g);
                    (d <= Distance::Finite(3), format!("diameter {d}"))
                }
                Reduction::StarBipartite => {
                    let terminals = art.instance.terminals();
                    let others = art.instance.non_terminals();
                    let c = star_center_bipartite(g, terminals, &others)?;
                    (
                        recognize_bipartite(g).is_some() && c == Some(0),
                        format!("star center {c:?}"),
                    )
                }
                Reduction::StarBisplitIndependent => {
                    let p = art.partition.as_ref().expect("bisplit certificate");
                    let c = star_center_independent(g, p)?;
                    (c == Some(0), format!("independent-side star center {c:?}"))
                }
            };
            Ok(Outcome::new(
                ok && part_ok && g.is_connected(),
                format!("{detail}; certificate valid {part_ok}"),
            ))
        }
    }
}

pub fn evaluate_path_chordal(src: &TripleSystem) -> Result<Outcome> {
    let gadget = tdm_to_k14free_chordal(src)?;
    let chordal = is_chordal(&gadget.graph);
    let star = max_induced_star_with_cap(&gadget.graph, GADGET_STAR_CAP)?;
    Ok(Outcome::new(
        chordal && star <= 3,
        format!("chordal {chordal}, max induced star {star}"),
    ))
}

pub fn evaluate_property(property: Property, g: &Graph, p: &SplitLikePartition) -> Result<Outcome> {
    Ok(match property {
        Property::SplitDiameter => {
            let d = diameter(g);
            Outcome::new(d <= Distance::Finite(3), format!("diameter {d}"))
        }
        Property::SplitLikeDiameter => {
            let d = diameter(g);
            Outcome::new(d <= Distance::Finite(4), format!("diameter {d}"))
        }
        Property::ChordalTrisplitIff => {
            let check = chordal_trisplit_check(g, p)?;
            let chordal = is_chordal(g);
            let mut out = Outcome::new(
                check == chordal,
                format!("clause test {check}, chordal {chordal}"),
            );
            out.metrics
                .push(format!("clauses={check},chordal={chordal}"));
            out
        }
        Property::BisplitDiameter3Iff => {
            let cond = bisplit_diam3_condition(g, p)?;
            let d = diameter(g);
            Outcome::new(
                cond == (d <= Distance::Finite(3)),
                format!("condition {cond}, diameter {d}"),
            )
        }
        Property::FiniteBisplit => {
            let bound = finite_class_bound(2, FINITE_R);
            let free = is_k1r_free(g, FINITE_R)?;
            Outcome::new(
                g.n() <= bound || !free,
                format!("n {} (bound {bound}), K_1,{FINITE_R}-free {free}", g.n()),
            )
        }
    })
}

pub fn evaluate_solver(
    inst: &SteinerInstance,
    p: Option<&SplitLikePartition>,
    solve: impl Fn(&SteinerInstance, Option<&SplitLikePartition>) -> Result<Option<PolyResult>>,
) -> Outcome {
    let exact = match solve_exact(inst) {
        Ok(s) => s,
        Err(e) => return Outcome::error(e),
    };
    match solve(inst, p) {
        Ok(Some(res)) => {
            let valid = verify_solution(inst, &res.solution);
            Outcome::new(
                valid && res.size() == exact.size(),
                format!(
                    "solver {} (valid {valid}), oracle {}",
                    res.solution.steiner, exact.steiner
                ),
            )
        }
        Ok(None) => Outcome::new(
            false,
            format!("solver gave no answer, oracle {}", exact.steiner),
        ),
        Err(e) => Outcome::error(e),
    }
}

fn stp_of(g: &Graph, terminals: Option<&VertexSet>, p: Option<&SplitLikePartition>) -> String {
    write_stp(&StpDocument {
        graph: g.clone(),
        terminals: terminals.cloned(),
        partition: p.cloned(),
        budget: None,
        comments: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Generators

/// Random cover source over `l`-sets. Planted sources contain a hidden exact
/// cover; all sources cover every element.
pub fn random_exact_cover(
    rng: &mut impl Rng,
    l: usize,
    max_universe: usize,
    max_subsets: usize,
    occurrence_cap: Option<usize>,
    planted: bool,
) -> ExactCoverInstance {
    let q_max = (max_universe / l).min(max_subsets).max(1);
    loop {
        let q = rng.random_range(1..=q_max);
        let universe = q * l;
        let target = rng.random_range(q..=max_subsets.max(q));
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut occ = vec![0usize; universe];
        if planted {
            let mut perm: Vec<usize> = (0..universe).collect();
            perm.shuffle(rng);
            for chunk in perm.chunks(l) {
                let mut s = chunk.to_vec();
                s.sort_unstable();
                s.iter().for_each(|&x| occ[x] += 1);
                subsets.push(s);
            }
        }
        for _ in 0..50 * max_subsets {
            if subsets.len() >= target {
                break;
            }
            let mut s = index::sample(rng, universe, l).into_vec();
            s.sort_unstable();
            if subsets.contains(&s)
                || occurrence_cap.is_some_and(|c| s.iter().any(|&x| occ[x] >= c))
            {
                continue;
            }
            s.iter().for_each(|&x| occ[x] += 1);
            subsets.push(s);
        }
        subsets.shuffle(rng);
        let src = ExactCoverInstance::new(universe, l, occurrence_cap, subsets)
            .expect("generated sources are valid");
        if src.uncovered_element().is_none() {
            return src;
        }
    }
}

/// Every family of two or three distinct triples over six elements that
/// covers all six, in lexicographic order.
pub fn exhaustive_small_sources() -> Vec<ExactCoverInstance> {
    let mut triples = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                triples.push(vec![a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    let t = triples.len();
    for i in 0..t {
        for j in i + 1..t {
            let pair = vec![triples[i].clone(), triples[j].clone()];
            if let Ok(src) = ExactCoverInstance::x3c(6, pair) {
                if src.uncovered_element().is_none() {
                    out.push(src);
                }
            }
            for k in j + 1..t {
                let fam = vec![triples[i].clone(), triples[j].clone(), triples[k].clone()];
                let src = ExactCoverInstance::x3c(6, fam).expect("valid triples");
                if src.uncovered_element().is_none() {
                    out.push(src);
                }
            }
        }
    }
    out
}

fn random_terminals(rng: &mut impl Rng, candidates: &[usize]) -> VertexSet {
    let p = rng.random_range(0.2..0.8);
    let mut set: VertexSet = candidates
        .iter()
        .copied()
        .filter(|_| rng.random_bool(p))
        .collect();
    if set.is_empty() {
        set.insert(candidates[rng.random_range(0..candidates.len())]);
    }
    set
}

/// Applies a random vertex permutation to a graph and its certificate.
fn relabel(
    rng: &mut impl Rng,
    n: usize,
    edges: &[(usize, usize)],
    p: Option<SplitLikePartition>,
) -> (Graph, Option<SplitLikePartition>, Vec<usize>) {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mapped: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let map_set = |s: &VertexSet| s.iter().map(|v| perm[v]).collect::<VertexSet>();
    let p = p.map(|p| SplitLikePartition {
        kind: p.kind,
        parts: p.parts.iter().map(map_set).collect(),
        independent: map_set(&p.independent),
    });
    (
        Graph::new(n, &mapped).expect("relabeled graph is simple"),
        p,
        perm,
    )
}

pub type Generated = (SteinerInstance, Option<SplitLikePartition>);

fn finish(g: Graph, terminals: VertexSet, p: Option<SplitLikePartition>) -> Generated {
    (
        SteinerInstance::new(g, terminals, None).expect("generated instances are connected"),
        p,
    )
}

/// A path or an even cycle, randomly labeled.
pub fn random_claw_free_bipartite(rng: &mut impl Rng, max_n: usize) -> Generated {
    let mut n = rng.random_range(1..=max_n);
    let cyclic = n >= 4 && rng.random_bool(0.5);
    if cyclic {
        n -= n % 2;
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if cyclic {
        edges.push((n - 1, 0));
    }
    let (g, _, _) = relabel(rng, n, &edges, None);
    let all: Vec<usize> = (0..n).collect();
    let r = random_terminals(rng, &all);
    finish(g, r, None)
}

/// A random graph plus one universal vertex.
pub fn random_with_universal(rng: &mut impl Rng, max_n: usize) -> Generated {
    let n = rng.random_range(2..=max_n);
    let p = rng.random_range(0.0..0.6);
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    for u in 1..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let (g, _, _) = relabel(rng, n, &edges, None);
    let all: Vec<usize> = (0..n).collect();
    let r = random_terminals(rng, &all);
    finish(g, r, None)
}

/// `K_{1,1,m}` plus independent vertices touching distinct parts with at
/// most one vertex of the large part: the clause-certified chordal trisplit
/// shape. Terminals in the independent set.
pub fn random_chordal_trisplit(rng: &mut impl Rng, max_n: usize) -> Generated {
    let m = rng.random_range(2..=5.min(max_n - 3));
    let indep = rng.random_range(1..=max_n - 2 - m);
    let (edges, p) = chordal_trisplit_edges(rng, m, indep);
    let n = 2 + m + indep;
    let (g, p, _) = relabel(rng, n, &edges, Some(p));
    let p = p.expect("partition");
    let cands: Vec<usize> = p.independent.iter().collect();
    let r = random_terminals(rng, &cands);
    finish(g, r, Some(p))
}

fn chordal_trisplit_edges(
    rng: &mut impl Rng,
    m: usize,
    indep: usize,
) -> (Vec<(usize, usize)>, SplitLikePartition) {
    let (a, b) = (0, 1);
    let large: Vec<usize> = (2..2 + m).collect();
    let mut edges = vec![(a, b)];
    for &c in &large {
        edges.push((a, c));
        edges.push((b, c));
    }
    for i in 0..indep {
        let u = 2 + m + i;
        let pattern = rng.random_range(1..8u8);
        if pattern & 1 == 1 {
            edges.push((a, u));
        }
        if pattern & 2 == 2 {
            edges.push((b, u));
        }
        if pattern & 4 == 4 {
            edges.push((large[rng.random_range(0..m)], u));
        }
    }
    let p = SplitLikePartition::multipartite(
        vec![
            VertexSet::from([a]),
            VertexSet::from([b]),
            large.into_iter().collect(),
        ],
        (2 + m..2 + m + indep).collect(),
    );
    (edges, p)
}

/// Linear-size chordal trisplit instance for timing: `n` vertices, a large
/// part of about a quarter of them, half the independent set terminal.
pub fn chordal_trisplit_family(n: usize, seed: u64) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = (n / 4).max(2);
    let indep = n.saturating_sub(2 + m).max(1);
    let (edges, p) = chordal_trisplit_edges(&mut rng, m, indep);
    let g = Graph::new(2 + m + indep, &edges).expect("simple");
    let r: VertexSet = p.independent.iter().filter(|v| v % 2 == 0).collect();
    let r = if r.is_empty() {
        p.independent.clone()
    } else {
        r
    };
    finish(g, r, Some(p))
}

/// Chordal `k`-split graph, `k` in 2..=4: `k - 1` hubs, one large part,
/// independent vertices added one at a time while the graph stays chordal.
pub fn random_chordal_ksplit(rng: &mut impl Rng, max_n: usize) -> Generated {
    let k = rng.random_range(2..=4);
    let m = rng.random_range(1..=4.min(max_n - k));
    let big = rng.random_range(0..k);
    let mut parts = Vec::with_capacity(k);
    let mut next = 0;
    for i in 0..k {
        let size = if i == big { m } else { 1 };
        parts.push((next..next + size).collect::<Vec<usize>>());
        next += size;
    }
    let k_size = next;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for &u in &parts[i] {
                for &v in &parts[j] {
                    edges.push((u, v));
                }
            }
        }
    }
    let hubs: Vec<usize> = (0..k).filter(|&i| i != big).map(|i| parts[i][0]).collect();
    let large = parts[big].clone();
    let indep = rng.random_range(1..=max_n - k_size);
    for i in 0..indep {
        let u = k_size + i;
        let mut placed = false;
        for _ in 0..20 {
            let mut nbrs: Vec<usize> = hubs
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            let roll: f64 = rng.random();
            if roll < 0.6 {
                nbrs.push(large[rng.random_range(0..large.len())]);
            } else if roll < 0.8 {
                nbrs.extend(large.iter().copied().filter(|_| rng.random_bool(0.5)));
            }
            if nbrs.is_empty() {
                continue;
            }
            let mut trial = edges.clone();
            trial.extend(nbrs.iter().map(|&w| (w, u)));
            if is_chordal(&Graph::new(u + 1, &trial).expect("simple")) {
                edges = trial;
                placed = true;
                break;
            }
        }
        if !placed {
            edges.push((hubs[rng.random_range(0..hubs.len())], u));
        }
    }
    let n = k_size + indep;
    let p = SplitLikePartition::multipartite(
        parts.iter().map(|q| q.iter().copied().collect()).collect(),
        (k_size..n).collect(),
    );
    let (g, p, _) = relabel(rng, n, &edges, Some(p));
    let p = p.expect("partition");
    let cands: Vec<usize> = p.independent.iter().collect();
    let r = random_terminals(rng, &cands);
    finish(g, r, Some(p))
}

/// Bisplit graph whose independent vertices are pendant or adjacent to a
/// chosen biclique vertex. Terminals in the independent set.
pub fn random_star_convex_bisplit(rng: &mut impl Rng, max_n: usize) -> Generated {
    let a = rng.random_range(1..=4);
    let b = rng.random_range(1..=4);
    let k_size = a + b;
    let indep = rng.random_range(1..=max_n - k_size);
    let center = rng.random_range(0..k_size);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..k_size {
            edges.push((u, v));
        }
    }
    for i in 0..indep {
        let u = k_size + i;
        if rng.random_bool(0.4) {
            edges.push((rng.random_range(0..k_size), u));
        } else {
            edges.push((center, u));
            for v in (0..k_size).filter(|&v| v != center) {
                if rng.random_bool(0.3) {
                    edges.push((v, u));
                }
            }
        }
    }
    let n = k_size + indep;
    let p = SplitLikePartition::multipartite(
        vec![(0..a).collect(), (a..k_size).collect()],
        (k_size..n).collect(),
    );
    let (g, p, _) = relabel(rng, n, &edges, Some(p));
    let p = p.expect("partition");
    let cands: Vec<usize> = p.independent.iter().collect();
    let r = random_terminals(rng, &cands);
    finish(g, r, Some(p))
}

/// `K_{1,3}`-free bisplit or trisplit graph (rejection sampling over small
/// random split-like graphs). Terminals anywhere.
pub fn random_finite_class(rng: &mut impl Rng) -> Generated {
    loop {
        let k = rng.random_range(2..=3);
        let sizes: Vec<usize> = (0..k).map(|_| rng.random_range(1..=2)).collect();
        let indep = rng.random_range(0..=4);
        let p = rng.random_range(0.1..0.7);
        let (g, part) =
            gen_random_split_like(PartitionKind::Multipartite, &sizes, indep, p, rng.random())
                .expect("valid parameters");
        if g.n() > finite_class_bound(k, FINITE_R) || !is_k1r_free(&g, FINITE_R).expect("small") {
            continue;
        }
        let all: Vec<usize> = (0..g.n()).collect();
        let r = random_terminals(rng, &all);
        return finish(g, r, Some(part));
    }
}

fn random_lemma_graph(rng: &mut impl Rng, property: Property) -> (Graph, SplitLikePartition) {
    let p = rng.random_range(0.1..0.9);
    let seed: u64 = rng.random();
    let (kind, sizes, indep) = match property {
        Property::SplitDiameter => (
            PartitionKind::Clique,
            vec![rng.random_range(1..=6)],
            rng.random_range(0..=8),
        ),
        Property::SplitLikeDiameter => {
            let k = rng.random_range(2..=3);
            (
                PartitionKind::Multipartite,
                (0..k).map(|_| rng.random_range(1..=4)).collect(),
                rng.random_range(0..=8),
            )
        }
        Property::ChordalTrisplitIff => {
            // Half the draws use the two-singleton shape the clauses single out.
            let mut sizes = if rng.random_bool(0.5) {
                vec![1, 1, rng.random_range(1..=5)]
            } else {
                (0..3).map(|_| rng.random_range(1..=4)).collect()
            };
            sizes.shuffle(rng);
            (PartitionKind::Multipartite, sizes, rng.random_range(0..=6))
        }
        Property::BisplitDiameter3Iff => (
            PartitionKind::Multipartite,
            (0..2).map(|_| rng.random_range(1..=4)).collect(),
            rng.random_range(0..=8),
        ),
        Property::FiniteBisplit => {
            let a = rng.random_range(1..=5);
            let b = rng.random_range(1..=5);
            let over = finite_class_bound(2, FINITE_R) + 1;
            (
                PartitionKind::Multipartite,
                vec![a, b],
                over - a - b + rng.random_range(0..=4),
            )
        }
    };
    gen_random_split_like(kind, &sizes, indep, p, seed).expect("valid parameters")
}

// ---------------------------------------------------------------------------
// Suites

fn par_reports(count: usize, f: impl Fn(u64) -> Report + Sync + Send) -> Report {
    let reports: Vec<Report> = (0..count as u64).into_par_iter().map(f).collect();
    let mut total = Report::default();
    for r in reports {
        total.merge(r);
    }
    total
}

/// Cover sources for the equivalence and structure suites, tagged by family.
pub fn campaign_sources(cfg: &CampaignConfig) -> Vec<(String, u64, ExactCoverInstance)> {
    let mut out = Vec::new();
    for i in 0..cfg.sources as u64 {
        let planted = cfg.planted_only || i % 2 == 0;
        let families: [(&str, usize, Option<usize>); 3] =
            [("x3c3", 3, Some(3)), ("x3c", 3, None), ("x4c", 4, None)];
        for (tag, l, cap) in families {
            let mut rng = instance_rng(cfg.seed, tag, i);
            let src =
                random_exact_cover(&mut rng, l, cfg.max_universe, cfg.max_subsets, cap, planted);
            out.push((tag.to_string(), i, src));
        }
    }
    if cfg.exhaustive_sources && !cfg.planted_only && cfg.max_subsets >= 3 && cfg.max_universe >= 6
    {
        for (i, src) in exhaustive_small_sources().into_iter().enumerate() {
            out.push(("exhaustive".to_string(), i as u64, src));
        }
    }
    out
}

fn applicable(family: &str, reduction: Reduction, src: &ExactCoverInstance) -> bool {
    let capped = src
        .subsets
        .iter()
        .flatten()
        .fold(vec![0; src.universe], |mut occ, &x| {
            occ[x] += 1;
            occ
        });
    match reduction {
        Reduction::K15Bipartite | Reduction::K14Bipartite => {
            family == "x3c3" || (family == "exhaustive" && capped.iter().all(|&c| c <= 3))
        }
        Reduction::Bisplit => true,
        _ => src.set_size == 3,
    }
}

fn as_x3c3(src: &ExactCoverInstance) -> ExactCoverInstance {
    ExactCoverInstance::x3c3(src.universe, src.subsets.clone()).expect("checked by applicable")
}

fn run_reduction_checks(cfg: &CampaignConfig, relation_family: &str) -> Report {
    let sources = campaign_sources(cfg);
    let seed = cfg.seed;
    let structure = relation_family == "structure";
    let reports: Vec<Report> = sources
        .par_iter()
        .map(|(family, index, src)| {
            let mut report = Report::default();
            for reduction in Reduction::ALL {
                if !applicable(family, reduction, src) {
                    continue;
                }
                let src = match reduction {
                    Reduction::K15Bipartite | Reduction::K14Bipartite => as_x3c3(src),
                    _ => src.clone(),
                };
                let (relation, mode) = if structure {
                    (Relation::Structure, Mode::Asserted)
                } else {
                    (Relation::Equivalence, equivalence_mode(reduction))
                };
                let name = check_name(relation_family, reduction, &src);
                run_one_reduction(
                    &mut report,
                    &name,
                    mode,
                    seed,
                    *index,
                    reduction,
                    relation,
                    &src,
                );
            }
            if !structure && src.set_size == 3 {
                for (relation, name) in [
                    (Relation::ThirdBudget, "equivalence/trisplit-budget-third"),
                    (Relation::Optimum, "equivalence/trisplit-optimum"),
                ] {
                    run_one_reduction(
                        &mut report,
                        name,
                        Mode::Observed,
                        seed,
                        *index,
                        Reduction::Trisplit,
                        relation,
                        src,
                    );
                }
            }
            report
        })
        .collect();
    let mut total = Report::default();
    for r in reports {
        total.merge(r);
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn run_one_reduction(
    report: &mut Report,
    name: &str,
    mode: Mode,
    seed: u64,
    index: u64,
    reduction: Reduction,
    relation: Relation,
    src: &ExactCoverInstance,
) {
    let out = evaluate_reduction(reduction, relation, src).unwrap_or_else(Outcome::error);
    let case = Case::Reduction {
        reduction,
        relation,
        source: src.clone(),
    };
    report.outcome(name, mode, seed, index, case, out);
}

pub fn run_equivalence_suite(cfg: &CampaignConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = run_reduction_checks(cfg, "equivalence");
    report
        .timing_ms
        .insert("equivalence".into(), start.elapsed().as_millis() as u64);
    Ok(report)
}

pub const LEMMA_PROPERTIES: [(Property, &str); 5] = [
    (Property::SplitDiameter, "lemma/split-diameter"),
    (Property::SplitLikeDiameter, "lemma/splitlike-diameter"),
    (Property::ChordalTrisplitIff, "lemma/chordal-trisplit-iff"),
    (Property::BisplitDiameter3Iff, "lemma/bisplit-diameter3-iff"),
    (Property::FiniteBisplit, "lemma/finite-bisplit"),
];

pub fn run_lemma_suite(cfg: &CampaignConfig) -> Report {
    let seed = cfg.seed;
    let mut total = Report::default();
    for (property, name) in LEMMA_PROPERTIES {
        total.merge(par_reports(cfg.lemma_instances, |i| {
            let mut rng = instance_rng(seed, name, i);
            let (g, p) = random_lemma_graph(&mut rng, property);
            let out = evaluate_property(property, &g, &p).unwrap_or_else(Outcome::error);
            let case = Case::Property {
                property,
                stp: stp_of(&g, None, Some(&p)),
            };
            let mut report = Report::default();
            report.outcome(name, Mode::Asserted, seed, i, case, out);
            report
        }));
    }
    total
}

pub fn run_structure_suite(cfg: &CampaignConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = run_reduction_checks(cfg, "structure");
    let seed = cfg.seed;
    report.merge(par_reports(cfg.sources, |i| {
        let mut rng = instance_rng(seed, "path-chordal", i);
        let n = rng.random_range(1..=3);
        let m = rng.random_range(1..=5);
        let triples = (0..m)
            .map(|_| [0; 3].map(|_| rng.random_range(0..n)))
            .collect();
        let src = TripleSystem::new(n, triples).expect("valid triples");
        let out = evaluate_path_chordal(&src).unwrap_or_else(Outcome::error);
        let mut report = Report::default();
        report.outcome(
            "structure/path-chordal",
            Mode::Asserted,
            seed,
            i,
            Case::PathChordal { source: src },
            out,
        );
        report
    }));
    report.merge(run_lemma_suite(cfg));
    report
        .timing_ms
        .insert("structure".into(), start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Runs `solve` on `count` generated instances and compares with the oracle.
pub fn fuzz_solver<G, S>(
    check: &str,
    mode: Mode,
    solver: SolverKind,
    seed: u64,
    count: usize,
    generate: G,
    solve: S,
) -> Report
where
    G: Fn(&mut ChaCha8Rng) -> Generated + Sync,
    S: Fn(&SteinerInstance, Option<&SplitLikePartition>) -> Result<Option<PolyResult>> + Sync,
{
    par_reports(count, |i| {
        let mut rng = instance_rng(seed, check, i);
        let (inst, p) = generate(&mut rng);
        let out = evaluate_solver(&inst, p.as_ref(), &solve);
        let case = Case::Solver {
            solver,
            stp: stp_of(inst.graph(), Some(inst.terminals()), p.as_ref()),
        };
        let mut report = Report::default();
        report.outcome(check, mode, seed, i, case, out);
        report
    })
}

pub fn solver_generator(
    kind: SolverKind,
    max_n: usize,
) -> impl Fn(&mut ChaCha8Rng) -> Generated + Sync {
    move |rng| match kind {
        SolverKind::ClawFreeBipartite => random_claw_free_bipartite(rng, max_n),
        SolverKind::Hub => random_with_universal(rng, max_n),
        SolverKind::ChordalTrisplit | SolverKind::ChordalTrisplitLiteral => {
            random_chordal_trisplit(rng, max_n)
        }
        SolverKind::ChordalKSplit => random_chordal_ksplit(rng, max_n),
        SolverKind::StarBisplit => random_star_convex_bisplit(rng, max_n),
        SolverKind::FiniteClass => random_finite_class(rng),
    }
}

pub const FUZZ_CHECKS: [(SolverKind, &str, Mode); 7] = [
    (
        SolverKind::ClawFreeBipartite,
        "fuzz/claw-free-bipartite",
        Mode::Asserted,
    ),
    (SolverKind::Hub, "fuzz/hub", Mode::Asserted),
    (
        SolverKind::ChordalTrisplit,
        "fuzz/chordal-trisplit",
        Mode::Asserted,
    ),
    (
        SolverKind::ChordalKSplit,
        "fuzz/chordal-ksplit",
        Mode::Asserted,
    ),
    (
        SolverKind::StarBisplit,
        "fuzz/star-convex-bisplit",
        Mode::Asserted,
    ),
    (SolverKind::FiniteClass, "fuzz/finite-class", Mode::Asserted),
    (
        SolverKind::ChordalTrisplitLiteral,
        "fuzz/chordal-trisplit-literal",
        Mode::Observed,
    ),
];

pub fn run_solver_fuzz(cfg: &CampaignConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = Report::default();
    for (kind, name, mode) in FUZZ_CHECKS {
        report.merge(fuzz_solver(
            name,
            mode,
            kind,
            cfg.seed,
            cfg.fuzz_instances,
            solver_generator(kind, cfg.max_fuzz_order),
            |inst: &SteinerInstance, p: Option<&SplitLikePartition>| kind.run(inst, p),
        ));
    }
    report
        .timing_ms
        .insert("fuzz".into(), start.elapsed().as_millis() as u64);
    Ok(report)
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<Report> {
    let mut report = Report::default();
    for suite in &cfg.suites {
        report.merge(match suite {
            Suite::Equivalence => run_equivalence_suite(cfg)?,
            Suite::Structure => run_structure_suite(cfg)?,
            Suite::Fuzz => run_solver_fuzz(cfg)?,
        });
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Replay

pub fn write_counterexample(cx: &Counterexample) -> String {
    let mut s = serde_json::to_string_pretty(cx).expect("counterexamples serialize");
    s.push('\n');
    s
}

pub fn parse_counterexample(text: &str) -> Result<Counterexample> {
    let cx: Counterexample = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        message: e.to_string(),
    })?;
    if cx.format != FORMAT_VERSION {
        return Err(ParseError {
            line: 1,
            message: format!("unsupported format version {}", cx.format),
        }
        .into());
    }
    Ok(cx)
}

fn partition_of(doc: &StpDocument) -> Result<&SplitLikePartition> {
    doc.partition
        .as_ref()
        .ok_or_else(|| Error::Precondition("stored graph lacks its partition".into()))
}

/// Re-runs a stored case and reports it under its original check name.
pub fn replay(cx: &Counterexample) -> Result<Report> {
    let out = match &cx.case {
        Case::Reduction {
            reduction,
            relation,
            source,
        } => evaluate_reduction(*reduction, *relation, source)?,
        Case::PathChordal { source } => evaluate_path_chordal(source)?,
        Case::Property { property, stp } => {
            let doc = parse_stp(stp)?;
            evaluate_property(*property, &doc.graph, partition_of(&doc)?)?
        }
        Case::Solver { solver, stp } => {
            let doc = parse_stp(stp)?;
            let inst = doc.instance()?;
            evaluate_solver(&inst, doc.partition.as_ref(), |i, p| solver.run(i, p))
        }
    };
    let mut report = Report::default();
    report.outcome(&cx.check, cx.mode, cx.seed, cx.index, cx.case.clone(), out);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seed: u64) -> CampaignConfig {
        CampaignConfig {
            seed,
            sources: 6,
            exhaustive_sources: false,
            lemma_instances: 10,
            fuzz_instances: 10,
            ..CampaignConfig::default()
        }
    }

    #[test]
    fn empty_config_gives_empty_report() {
        let r = run_campaign(&CampaignConfig::empty(3)).unwrap();
        assert!(r.is_empty());
        assert!(r.asserted_ok());
    }

    #[test]
    fn planted_sources_are_all_yes() {
        let cfg = CampaignConfig {
            planted_only: true,
            ..small(1)
        };
        for (_, _, src) in campaign_sources(&cfg) {
            assert!(solve_exact_cover(&src).unwrap().is_some());
        }
        let r = run_equivalence_suite(&cfg).unwrap();
        let k15 = &r.checks["equivalence/k15-bip"];
        assert_eq!(k15.failed, 0);
        assert!(k15.passed > 0);
    }

    #[test]
    fn same_seed_same_report() {
        let a = run_campaign(&small(9)).unwrap();
        let b = run_campaign(&small(9)).unwrap();
        assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
    }

    #[test]
    fn merge_is_order_independent() {
        let cfg = small(4);
        let eq = run_equivalence_suite(&cfg).unwrap();
        let fz = run_solver_fuzz(&cfg).unwrap();
        let mut ab = eq.clone();
        ab.merge(fz.clone());
        let mut ba = fz;
        ba.merge(eq);
        assert_eq!(ab.to_json_without_timing(), ba.to_json_without_timing());
    }

    #[test]
    fn corrupted_solver_is_caught_and_replays() {
        // Returns every non-terminal: valid but rarely minimum.
        let bloated = |inst: &SteinerInstance, _: Option<&SplitLikePartition>| {
            crate::exact::SteinerSolution::from_steiner_set(inst, inst.non_terminals()).map(|s| {
                Some(PolyResult {
                    solution: s,
                    algorithm: crate::poly::Algorithm::Exact,
                    certificate: crate::poly::Certificate::None,
                })
            })
        };
        let r = fuzz_solver(
            "fuzz/bloated",
            Mode::Asserted,
            SolverKind::ClawFreeBipartite,
            5,
            40,
            solver_generator(SolverKind::ClawFreeBipartite, 12),
            bloated,
        );
        assert!(r.checks["fuzz/bloated"].failed > 0);
        assert!(!r.asserted_ok());

        let cx = &r.counterexamples[0];
        let parsed = parse_counterexample(&write_counterexample(cx)).unwrap();
        assert_eq!(&parsed, cx);
        // Replay re-runs the real solver named in the case, which is minimum.
        assert!(replay(&parsed).unwrap().asserted_ok());
    }

    #[test]
    fn failing_case_replays_as_failure() {
        // Literal four-candidate family on its known bad instance.
        let g = Graph::new(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (0, 4),
                (2, 4),
                (1, 5),
                (2, 5),
            ],
        )
        .unwrap();
        let p = SplitLikePartition::multipartite(
            vec![
                VertexSet::from([0]),
                VertexSet::from([1]),
                VertexSet::from([2, 3]),
            ],
            VertexSet::from([4, 5]),
        );
        let stp = stp_of(&g, Some(&VertexSet::from([4, 5])), Some(&p));
        let cx = Counterexample {
            format: FORMAT_VERSION,
            check: "fuzz/chordal-trisplit-literal".into(),
            mode: Mode::Observed,
            seed: 0,
            index: 0,
            case: Case::Solver {
                solver: SolverKind::ChordalTrisplitLiteral,
                stp,
            },
            detail: String::new(),
        };
        let r = replay(&cx).unwrap();
        assert_eq!(r.checks["fuzz/chordal-trisplit-literal"].failed, 1);
        assert_eq!(r.counterexamples.len(), 1);
        assert!(r.asserted_ok());
    }

    #[test]
    fn corrupt_counterexample_is_a_parse_error() {
        assert!(matches!(
            parse_counterexample("{\"format\": 1, \"check\": "),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn single_vertex_instances_need_nothing() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..200 {
            let (inst, _) = random_claw_free_bipartite(&mut rng, 3);
            if inst.graph().n() == 1 {
                let res = solve_claw_free_bipartite(&inst).unwrap();
                assert!(res.solution.steiner.is_empty());
            }
        }
    }

    #[test]
    fn generators_stay_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (inst, p) = random_chordal_trisplit(&mut rng, 16);
            assert!(chordal_trisplit_check(inst.graph(), p.as_ref().unwrap()).unwrap());
            let (inst, p) = random_chordal_ksplit(&mut rng, 16);
            assert!(is_chordal(inst.graph()));
            assert!(verify_partition(inst.graph(), p.as_ref().unwrap()).unwrap());
            let (inst, p) = random_star_convex_bisplit(&mut rng, 16);
            assert!(star_center_bisplit(inst.graph(), p.as_ref().unwrap())
                .unwrap()
                .is_some());
            let (inst, _) = random_finite_class(&mut rng);
            assert!(is_k1r_free(inst.graph(), FINITE_R).unwrap());
            assert!(inst.graph().n() <= 16);
        }
    }

    #[test]
    fn exhaustive_sources_cover_six_elements() {
        let all = exhaustive_small_sources();
        assert!(all.iter().all(|s| s.uncovered_element().is_none()));
        // Ten disjoint pairs among the two-triple families.
        assert_eq!(all.iter().filter(|s| s.subsets.len() == 2).count(), 10);
    }
}
