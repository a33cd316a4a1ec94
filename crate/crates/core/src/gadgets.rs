//! Hardness constructions: exact cover and 3-dimensional matching instances
//! turned into Steiner instances on the restricted graph classes.
//!
//! Every generator is deterministic. Vertex ids are assigned group by group
//! in the order the groups are listed on each function, and
//! `ReductionArtifact::vertex_names` records the group and index of each id.

use serde::{Deserialize, Serialize};

use crate::classes::SplitLikePartition;
use crate::cover::{ExactCoverInstance, TripleSystem};
use crate::error::{Error, Result};
use crate::exact::SteinerInstance;
use crate::graph::{Graph, VertexSet};

/// Class the construction claims its output belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "class")]
pub enum ClaimedClass {
    K15FreeBipartite,
    K14FreeBipartite,
    /// Bisplit and `K_{1,r}`-free.
    K1rFreeBisplit {
        r: usize,
    },
    Trisplit,
    BisplitDiameter3,
    TrisplitDiameter3,
    StarConvexBipartite {
        center: usize,
    },
    StarConvexBisplitIndependent {
        center: usize,
    },
}

impl ClaimedClass {
    pub fn describe(&self) -> String {
        match self {
            Self::K15FreeBipartite => "K_{1,5}-free bipartite".into(),
            Self::K14FreeBipartite => "K_{1,4}-free bipartite".into(),
            Self::K1rFreeBisplit { r } => format!("K_{{1,{r}}}-free bisplit"),
            Self::Trisplit => "trisplit".into(),
            Self::BisplitDiameter3 => "bisplit diameter 3".into(),
            Self::TrisplitDiameter3 => "trisplit diameter 3".into(),
            Self::StarConvexBipartite { .. } => "star-convex bipartite".into(),
            Self::StarConvexBisplitIndependent { .. } => {
                "star-convex bisplit (independent side)".into()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Source {
    ExactCover(ExactCoverInstance),
    TripleSystem(TripleSystem),
}

/// A generated Steiner instance (budget set) with its class certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub instance: SteinerInstance,
    pub partition: Option<SplitLikePartition>,
    pub claimed_class: ClaimedClass,
    pub source: Source,
    pub vertex_names: Vec<String>,
    pub notes: Vec<String>,
}

impl ReductionArtifact {
    pub fn budget(&self) -> usize {
        self.instance
            .budget()
            .expect("artifacts always carry a budget")
    }

    pub fn graph(&self) -> &Graph {
        self.instance.graph()
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }
}

/// Output of the path-graph construction: a graph plus the cliques it was
/// assembled from. No terminal set or budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGadget {
    pub graph: Graph,
    pub cliques: Vec<VertexSet>,
    pub vertex_names: Vec<String>,
    pub source: TripleSystem,
}

/// The Steiner-producing constructions, named by their target class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    K15Bipartite,
    K14Bipartite,
    Bisplit,
    Trisplit,
    BisplitDiameter3,
    TrisplitDiameter3,
    StarBipartite,
    StarBisplitIndependent,
}

impl Reduction {
    pub const ALL: [Reduction; 8] = [
        Self::K15Bipartite,
        Self::K14Bipartite,
        Self::Bisplit,
        Self::Trisplit,
        Self::BisplitDiameter3,
        Self::TrisplitDiameter3,
        Self::StarBipartite,
        Self::StarBisplitIndependent,
    ];

    /// Command-line name of the target class.
    pub fn tag(self) -> &'static str {
        match self {
            Self::K15Bipartite => "k15-bip",
            Self::K14Bipartite => "k14-bip",
            Self::Bisplit => "bisplit",
            Self::Trisplit => "trisplit",
            Self::BisplitDiameter3 => "bisplit-d3",
            Self::TrisplitDiameter3 => "trisplit-d3",
            Self::StarBipartite => "star-bip",
            Self::StarBisplitIndependent => "star-bisplit-i",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.tag() == tag)
    }

    pub fn apply(self, src: &ExactCoverInstance) -> Result<ReductionArtifact> {
        match self {
            Self::K15Bipartite => x3c3_to_k15free_bipartite(src),
            Self::K14Bipartite => split_degree4_transform(&x3c3_to_k15free_bipartite(src)?),
            Self::Bisplit => xlc_to_bisplit(src),
            Self::Trisplit => x3c_to_trisplit(src),
            Self::BisplitDiameter3 => x3c_to_bisplit_diam3(src),
            Self::TrisplitDiameter3 => x3c_to_trisplit_diam3(src),
            Self::StarBipartite => x3c_to_star_convex_bipartite(src),
            Self::StarBisplitIndependent => x3c_to_star_convex_bisplit_indep(src),
        }
    }
}

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    fn group(&mut self, prefix: &str, count: usize) -> Vec<usize> {
        (0..count)
            .map(|i| self.vertex(format!("{prefix}{i}")))
            .collect()
    }

    fn join(&mut self, left: &[usize], right: &[usize]) {
        for &u in left {
            for &v in right {
                self.edges.push((u, v));
            }
        }
    }

    /// Subset copy `sets[i]` adjacent to element copy `elems[x]` for `x ∈ c_i`.
    fn membership(&mut self, src: &ExactCoverInstance, sets: &[usize], elems: &[usize]) {
        for (i, subset) in src.subsets.iter().enumerate() {
            for &x in subset {
                self.edges.push((sets[i], elems[x]));
            }
        }
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn graph(&self) -> Result<Graph> {
        Graph::new(self.names.len(), &self.edges)
    }
}

fn require_covered(src: &ExactCoverInstance) -> Result<()> {
    src.validate().map_err(Error::InvalidCover)?;
    match src.uncovered_element() {
        Some(x) => Err(Error::Precondition(format!(
            "element {x} lies in no subset, so the construction is disconnected"
        ))),
        None => Ok(()),
    }
}

fn require_triples(src: &ExactCoverInstance) -> Result<()> {
    if src.set_size != 3 {
        return Err(Error::Precondition(format!(
            "expected 3-element subsets, got {}",
            src.set_size
        )));
    }
    require_covered(src)
}

fn artifact(
    b: &Builder,
    terminals: VertexSet,
    budget: usize,
    partition: Option<SplitLikePartition>,
    claimed_class: ClaimedClass,
    source: Source,
    notes: Vec<String>,
) -> Result<ReductionArtifact> {
    Ok(ReductionArtifact {
        instance: SteinerInstance::new(b.graph()?, terminals, Some(budget))?,
        partition,
        claimed_class,
        source,
        vertex_names: b.names.clone(),
        notes,
    })
}

fn set_of(groups: &[&[usize]]) -> VertexSet {
    groups.iter().flat_map(|g| g.iter().copied()).collect()
}

/// Groups: elements `X`, subsets `C`, then binary-tree nodes `T`.
/// Terminals are `X ∪ T`, budget `|X| / 3`.
///
/// Each tree round pairs the current level left to right under a new
/// common parent; an odd last vertex gets a parent of its own. Rounds repeat
/// until one node remains, with at least one round so `T` is nonempty.
pub fn x3c3_to_k15free_bipartite(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    if src.occurrence_cap.is_none_or(|cap| cap > 3) {
        return Err(Error::Precondition(
            "source must bound element occurrences by 3".into(),
        ));
    }
    require_triples(src)?;
    let mut b = Builder::default();
    let elems = b.group("X", src.universe);
    let sets = b.group("C", src.subsets.len());
    b.membership(src, &sets, &elems);
    let mut tree = Vec::new();
    let mut level = sets.clone();
    loop {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        for pair in level.chunks(2) {
            let parent = b.vertex(format!("T{}", tree.len()));
            tree.push(parent);
            for &child in pair {
                b.edges.push((child, parent));
            }
            next.push(parent);
        }
        level = next;
        if level.len() == 1 {
            break;
        }
    }
    artifact(
        &b,
        set_of(&[&elems, &tree]),
        src.q(),
        None,
        ClaimedClass::K15FreeBipartite,
        Source::ExactCover(src.clone()),
        Vec::new(),
    )
}

/// Replaces every degree-4 non-terminal `v` by a path `v1 - m - v2`:
/// `v1` keeps the id of `v` and its two smallest neighbors, `m` and `v2`
/// are appended (in order of `v`) and `v2` takes the other two neighbors.
/// Terminals are unchanged and the budget triples.
pub fn split_degree4_transform(src: &ReductionArtifact) -> Result<ReductionArtifact> {
    let g = src.graph();
    let terminals = src.instance.terminals();
    if let Some(t) = terminals.iter().find(|&t| g.degree(t) == 4) {
        return Err(Error::Precondition(format!(
            "terminal {t} has degree 4 and cannot be split"
        )));
    }
    let mut b = Builder {
        names: src.vertex_names.clone(),
        edges: Vec::new(),
    };
    let mut moved: Vec<Option<usize>> = vec![None; g.n()];
    let mut notes = src.notes.clone();
    for v in g.vertices().filter(|&v| g.degree(v) == 4) {
        let name = &src.vertex_names[v];
        let mid = b.vertex(format!("{name}.mid"));
        let far = b.vertex(format!("{name}.far"));
        b.edges.push((v, mid));
        b.edges.push((mid, far));
        moved[v] = Some(far);
    }
    for (u, w) in g.edges() {
        // An edge goes to v2 when it is one of v's two largest neighbors.
        let end = |v: usize, other: usize| match moved[v] {
            Some(far) if g.neighbors(v)[2..].contains(&other) => far,
            _ => v,
        };
        b.edges.push((end(u, w), end(w, u)));
    }
    let split = moved.iter().filter(|m| m.is_some()).count();
    notes.push(format!("split {split} degree-4 vertices; budget 3k"));
    artifact(
        &b,
        terminals.clone(),
        3 * src.budget(),
        None,
        if split == 0 {
            src.claimed_class
        } else {
            ClaimedClass::K14FreeBipartite
        },
        src.source.clone(),
        notes,
    )
}

/// Groups: `A`, `B` (copies of the subsets, joined into a biclique), then
/// `I`, `I'` (copies of the elements, attached to `A` and `B`
/// respectively). Terminals `I ∪ I'`, budget `2|X| / l`.
pub fn xlc_to_bisplit(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    require_covered(src)?;
    let mut b = Builder::default();
    let left = b.group("A", src.subsets.len());
    let right = b.group("B", src.subsets.len());
    let first = b.group("I", src.universe);
    let second = b.group("I'", src.universe);
    b.join(&left, &right);
    b.membership(src, &left, &first);
    b.membership(src, &right, &second);
    let partition = SplitLikePartition::multipartite(
        vec![set_of(&[&left]), set_of(&[&right])],
        set_of(&[&first, &second]),
    );
    artifact(
        &b,
        set_of(&[&first, &second]),
        2 * src.q(),
        Some(partition),
        ClaimedClass::K1rFreeBisplit {
            r: src.subsets.len() + src.set_size + 1,
        },
        Source::ExactCover(src.clone()),
        Vec::new(),
    )
}

/// Groups: `A`, `B`, `D` (subset copies forming a complete tripartite
/// graph), then `I`, `I'`, `I''` (element copies, one per part). Terminals
/// `I ∪ I' ∪ I''`, budget `|X|`: a cover of `q` subsets uses three copies
/// of each.
pub fn x3c_to_trisplit(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    require_triples(src)?;
    let mut b = Builder::default();
    let m = src.subsets.len();
    let parts = [b.group("A", m), b.group("B", m), b.group("D", m)];
    let copies = [
        b.group("I", src.universe),
        b.group("I'", src.universe),
        b.group("I''", src.universe),
    ];
    b.join(&parts[0], &parts[1]);
    b.join(&parts[0], &parts[2]);
    b.join(&parts[1], &parts[2]);
    for (part, copy) in parts.iter().zip(&copies) {
        b.membership(src, part, copy);
    }
    let independent = set_of(&[&copies[0], &copies[1], &copies[2]]);
    let partition = SplitLikePartition::multipartite(
        parts.iter().map(|p| set_of(&[p])).collect(),
        independent.clone(),
    );
    artifact(
        &b,
        independent,
        src.universe,
        Some(partition),
        ClaimedClass::Trisplit,
        Source::ExactCover(src.clone()),
        vec![format!(
            "budget |X| = {}; the alternative reading |X|/3 = {} is tracked as an observed check",
            src.universe,
            src.q()
        )],
    )
}

/// Groups: `A`, `B` (subset copies, biclique), then one element copy `I`
/// attached to both. Terminals `I`, budget `|X| / 3`.
pub fn x3c_to_bisplit_diam3(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    shared_independent(src, 2, ClaimedClass::BisplitDiameter3)
}

/// Three subset copies `A`, `B`, `D` (complete tripartite) all attached to a
/// single element copy `I`. Terminals `I`, budget `|X| / 3`.
pub fn x3c_to_trisplit_diam3(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    shared_independent(src, 3, ClaimedClass::TrisplitDiameter3)
}

fn shared_independent(
    src: &ExactCoverInstance,
    copies: usize,
    claimed_class: ClaimedClass,
) -> Result<ReductionArtifact> {
    require_triples(src)?;
    let mut b = Builder::default();
    let parts: Vec<Vec<usize>> = ["A", "B", "D"][..copies]
        .iter()
        .map(|p| b.group(p, src.subsets.len()))
        .collect();
    let elems = b.group("I", src.universe);
    for i in 0..copies {
        for j in i + 1..copies {
            b.join(&parts[i], &parts[j]);
        }
        b.membership(src, &parts[i], &elems);
    }
    let partition = SplitLikePartition::multipartite(
        parts.iter().map(|p| set_of(&[p])).collect(),
        set_of(&[&elems]),
    );
    artifact(
        &b,
        set_of(&[&elems]),
        src.q(),
        Some(partition),
        claimed_class,
        Source::ExactCover(src.clone()),
        Vec::new(),
    )
}

/// Groups: apex (id 0), subset copies `A`, element copies `B`. The apex is
/// adjacent to all of `A`. Terminals `B ∪ {apex}`, budget `|X| / 3`.
pub fn x3c_to_star_convex_bipartite(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    require_triples(src)?;
    let mut b = Builder::default();
    let apex = b.vertex("apex".into());
    let sets = b.group("A", src.subsets.len());
    let elems = b.group("B", src.universe);
    b.join(&[apex], &sets);
    b.membership(src, &sets, &elems);
    artifact(
        &b,
        set_of(&[&[apex], &elems]),
        src.q(),
        None,
        ClaimedClass::StarConvexBipartite { center: apex },
        Source::ExactCover(src.clone()),
        Vec::new(),
    )
}

/// Groups: apex (id 0), subset copies `A`, `B` (biclique, both joined to
/// the apex), element copies `I'`, `I''` attached to `A` and `B`.
/// Terminals `I' ∪ I'' ∪ {apex}`, budget `2|X| / 3`.
pub fn x3c_to_star_convex_bisplit_indep(src: &ExactCoverInstance) -> Result<ReductionArtifact> {
    require_triples(src)?;
    let mut b = Builder::default();
    let apex = b.vertex("apex".into());
    let left = b.group("A", src.subsets.len());
    let right = b.group("B", src.subsets.len());
    let first = b.group("I'", src.universe);
    let second = b.group("I''", src.universe);
    b.join(&left, &right);
    b.join(&[apex], &left);
    b.join(&[apex], &right);
    b.membership(src, &left, &first);
    b.membership(src, &right, &second);
    let independent = set_of(&[&[apex], &first, &second]);
    let partition = SplitLikePartition::multipartite(
        vec![set_of(&[&left]), set_of(&[&right])],
        independent.clone(),
    );
    artifact(
        &b,
        independent,
        2 * src.q(),
        Some(partition),
        ClaimedClass::StarConvexBisplitIndependent { center: apex },
        Source::ExactCover(src.clone()),
        Vec::new(),
    )
}

/// Per triple `j`: `a, b, c, x, y, z1, z2, z3`; then the element vertices
/// of the three coordinates. Cliques: all `a, b, c, x` together; per triple
/// `{a, b, x, y}`, `{a, y, z1}`, `{b, y, z2}`, `{c, x, z3}`; per element,
/// the element with the matching corner of every triple containing it.
pub fn tdm_to_k14free_chordal(src: &TripleSystem) -> Result<CliqueGadget> {
    src.validate()?;
    let mut b = Builder::default();
    let roles = ["a", "b", "c", "x", "y", "z1", "z2", "z3"];
    let blocks: Vec<[usize; 8]> = (0..src.triples.len())
        .map(|j| roles.map(|r| b.vertex(format!("{r}{j}"))))
        .collect();
    let coords = [
        b.group("P", src.n),
        b.group("Q", src.n),
        b.group("R", src.n),
    ];

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    cliques.push(
        blocks
            .iter()
            .flat_map(|blk| blk[..4].iter().copied())
            .collect(),
    );
    for &[a, bb, c, x, y, z1, z2, z3] in &blocks {
        cliques.push(vec![a, bb, x, y]);
        cliques.push(vec![a, y, z1]);
        cliques.push(vec![bb, y, z2]);
        cliques.push(vec![c, x, z3]);
    }
    for (axis, elems) in coords.iter().enumerate() {
        for (e, &vertex) in elems.iter().enumerate() {
            let mut members = vec![vertex];
            members.extend(
                src.triples
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t[axis] == e)
                    .map(|(j, _)| blocks[j][axis]),
            );
            cliques.push(members);
        }
    }
    for c in &cliques {
        b.clique(c);
    }
    Ok(CliqueGadget {
        graph: b.graph()?,
        cliques: cliques.into_iter().map(VertexSet::from).collect(),
        vertex_names: b.names,
        source: src.clone(),
    })
}
