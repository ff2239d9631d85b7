//! Combinatorial data on `K4`: edges, triangles, multiplicities, signed graphs
//! and classification results.
//!
//! Edges are stored in lexicographic order `01, 02, 03, 12, 13, 23`, aliased
//! `a, b, c, d, e, f`. In the essential coordinates `x = x1 - x0`,
//! `y = x2 - x0`, `z = x3 - x0` the edge forms are `x, y, z, x - y, x - z, y - z`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactalg::LinearForm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("multiplicities must be >= 1 (edge {edge} is 0)")]
    ZeroEntry { edge: EdgeIndex },
    #[error("expected 6 comma-separated multiplicities, got {0}")]
    WrongLength(usize),
    #[error("invalid multiplicity entry {0:?}")]
    BadEntry(String),
    #[error("not a permutation of 0..4: {0:?}")]
    BadPermutation([usize; 4]),
    #[error("vertices must be distinct and below 4: {0:?}")]
    BadVertices(Vec<usize>),
}

/// An unordered pair `{i, j}` of vertices of `K4`, stored as its position in
/// the lexicographic edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeIndex(u8);

pub const EDGE_VERTICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl EdgeIndex {
    pub const ALL: [EdgeIndex; 6] = [
        EdgeIndex(0),
        EdgeIndex(1),
        EdgeIndex(2),
        EdgeIndex(3),
        EdgeIndex(4),
        EdgeIndex(5),
    ];

    pub fn new(i: usize, j: usize) -> Result<Self, ModelError> {
        if i == j || i > 3 || j > 3 {
            return Err(ModelError::BadVertices(vec![i, j]));
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let pos = EDGE_VERTICES
            .iter()
            .position(|&e| e == (lo, hi))
            .expect("every pair is an edge of K4");
        Ok(EdgeIndex(pos as u8))
    }

    pub fn from_position(pos: usize) -> Self {
        assert!(pos < 6, "edge position out of range");
        EdgeIndex(pos as u8)
    }

    pub fn position(self) -> usize {
        self.0 as usize
    }

    pub fn vertices(self) -> (usize, usize) {
        EDGE_VERTICES[self.position()]
    }

    pub fn contains(self, v: usize) -> bool {
        let (i, j) = self.vertices();
        i == v || j == v
    }

    /// The edge sharing no vertex with this one (`01 <-> 23` and so on).
    pub fn opposite(self) -> EdgeIndex {
        EdgeIndex(5 - self.0)
    }

    /// Letter alias `a..f`.
    pub fn alias(self) -> char {
        (b'a' + self.0) as char
    }

    /// Defining linear form in essential coordinates.
    pub fn form(self) -> LinearForm {
        const FORMS: [LinearForm; 6] = [
            LinearForm([1, 0, 0]),
            LinearForm([0, 1, 0]),
            LinearForm([0, 0, 1]),
            LinearForm([1, -1, 0]),
            LinearForm([1, 0, -1]),
            LinearForm([0, 1, -1]),
        ];
        FORMS[self.position()]
    }
}

impl fmt::Display for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.vertices();
        write!(f, "{i}{j}")
    }
}

pub fn opposite_edge(e: EdgeIndex) -> EdgeIndex {
    e.opposite()
}

/// An unordered triple of vertices, identified by the vertex it omits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TriangleIndex(u8);

impl TriangleIndex {
    /// `012, 013, 023, 123`.
    pub const ALL: [TriangleIndex; 4] = [
        TriangleIndex(3),
        TriangleIndex(2),
        TriangleIndex(1),
        TriangleIndex(0),
    ];

    pub fn new(i: usize, j: usize, k: usize) -> Result<Self, ModelError> {
        let mut v = [i, j, k];
        v.sort_unstable();
        if v[2] > 3 || v[0] == v[1] || v[1] == v[2] {
            return Err(ModelError::BadVertices(vec![i, j, k]));
        }
        let missing = (0..4)
            .find(|x| !v.contains(x))
            .expect("three of four vertices");
        Ok(TriangleIndex(missing as u8))
    }

    pub fn omitted(self) -> usize {
        self.0 as usize
    }

    pub fn vertices(self) -> [usize; 3] {
        let mut out = [0; 3];
        let mut n = 0;
        for v in 0..4 {
            if v != self.omitted() {
                out[n] = v;
                n += 1;
            }
        }
        out
    }

    /// The three edges `ij, ik, jk` in lexicographic order.
    pub fn edges(self) -> [EdgeIndex; 3] {
        let [i, j, k] = self.vertices();
        [
            EdgeIndex::new(i, j).unwrap(),
            EdgeIndex::new(i, k).unwrap(),
            EdgeIndex::new(j, k).unwrap(),
        ]
    }
}

impl fmt::Display for TriangleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.vertices();
        write!(f, "{i}{j}{k}")
    }
}

pub fn triangle_edges(t: TriangleIndex) -> [EdgeIndex; 3] {
    t.edges()
}

/// A permutation of the vertex set `{0, 1, 2, 3}`: vertex `i` maps to `map[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation([usize; 4]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3]);

    pub fn new(map: [usize; 4]) -> Result<Self, ModelError> {
        let mut seen = [false; 4];
        for &v in &map {
            if v > 3 || seen[v] {
                return Err(ModelError::BadPermutation(map));
            }
            seen[v] = true;
        }
        Ok(Permutation(map))
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn map(&self) -> [usize; 4] {
        self.0
    }

    /// `self` after `first`: `v -> self(first(v))`.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.map(|v| self.0[v]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0; 4];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn apply_edge(&self, e: EdgeIndex) -> EdgeIndex {
        let (i, j) = e.vertices();
        EdgeIndex::new(self.apply(i), self.apply(j)).unwrap()
    }

    /// All 24 permutations in lexicographic order of their images.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Ok(p) = Permutation::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Multiplicities `(m01, m02, m03, m12, m13, m23)` on the six hyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multiplicity([u32; 6]);

impl Multiplicity {
    /// Unchecked constructor; zero entries are allowed here and rejected by
    /// [`Multiplicity::validated`] at classification entry points.
    pub const fn new(m: [u32; 6]) -> Self {
        Multiplicity(m)
    }

    pub fn validated(self) -> Result<Self, ModelError> {
        match self.0.iter().position(|&x| x == 0) {
            Some(pos) => Err(ModelError::ZeroEntry {
                edge: EdgeIndex::from_position(pos),
            }),
            None => Ok(self),
        }
    }

    pub fn constant(v: u32) -> Self {
        Multiplicity([v; 6])
    }

    pub fn values(&self) -> [u32; 6] {
        self.0
    }

    /// Entries as signed integers, for formulas that take differences.
    pub fn signed(&self) -> [i64; 6] {
        self.0.map(i64::from)
    }

    pub fn get(&self, e: EdgeIndex) -> u32 {
        self.0[e.position()]
    }

    pub fn between(&self, i: usize, j: usize) -> u32 {
        self.get(EdgeIndex::new(i, j).expect("distinct vertices"))
    }

    /// `|m|`, the sum of all six entries.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> u32 {
        *self.0.iter().min().unwrap()
    }

    /// Multiplicities of the three edges of `t`, in the order of [`TriangleIndex::edges`].
    pub fn triangle(&self, t: TriangleIndex) -> [u32; 3] {
        t.edges().map(|e| self.get(e))
    }

    /// `m'_{perm(i) perm(j)} = m_ij`.
    pub fn relabel(&self, perm: &Permutation) -> Multiplicity {
        let mut out = [0; 6];
        for e in EdgeIndex::ALL {
            out[perm.apply_edge(e).position()] = self.get(e);
        }
        Multiplicity(out)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.0;
        write!(f, "({a},{b},{c},{d},{e},{g})")
    }
}

impl FromStr for Multiplicity {
    type Err = ModelError;

    /// Parses `a,b,c,d,e,f` (surrounding parentheses and spaces tolerated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(ModelError::WrongLength(parts.len()));
        }
        let mut m = [0u32; 6];
        for (slot, part) in m.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| ModelError::BadEntry(part.to_string()))?;
        }
        Ok(Multiplicity(m))
    }
}

pub fn relabel(m: &Multiplicity, perm: &Permutation) -> Multiplicity {
    m.relabel(perm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
    Absent,
}

impl Sign {
    /// `m_G(ij)`: `+1`, `-1` or `0`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Absent => 0,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            0 => Some(Sign::Absent),
            _ => None,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Absent => Sign::Absent,
        }
    }
}

/// A signed graph on the vertices of `K4`: each edge is `+`, `-` or absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedGraph4 {
    signs: [Sign; 6],
}

impl SignedGraph4 {
    pub const EMPTY: SignedGraph4 = SignedGraph4 {
        signs: [Sign::Absent; 6],
    };

    pub fn new(signs: [Sign; 6]) -> Self {
        SignedGraph4 { signs }
    }

    pub fn complete(sign: Sign) -> Self {
        SignedGraph4 { signs: [sign; 6] }
    }

    /// Builds a graph from `m_G` values in `{-1, 0, 1}`.
    pub fn from_values(values: [i64; 6]) -> Option<Self> {
        let mut signs = [Sign::Absent; 6];
        for (s, v) in signs.iter_mut().zip(values) {
            *s = Sign::from_value(v)?;
        }
        Some(SignedGraph4 { signs })
    }

    /// Builds a graph from explicit positive and negative edge lists.
    pub fn from_edges(
        plus: &[(usize, usize)],
        minus: &[(usize, usize)],
    ) -> Result<Self, ModelError> {
        let mut signs = [Sign::Absent; 6];
        for &(i, j) in plus {
            signs[EdgeIndex::new(i, j)?.position()] = Sign::Plus;
        }
        for &(i, j) in minus {
            let e = EdgeIndex::new(i, j)?;
            if signs[e.position()] == Sign::Plus {
                return Err(ModelError::BadVertices(vec![i, j]));
            }
            signs[e.position()] = Sign::Minus;
        }
        Ok(SignedGraph4 { signs })
    }

    pub fn sign(&self, e: EdgeIndex) -> Sign {
        self.signs[e.position()]
    }

    pub fn sign_between(&self, i: usize, j: usize) -> Sign {
        self.sign(EdgeIndex::new(i, j).expect("distinct vertices"))
    }

    pub fn signs(&self) -> [Sign; 6] {
        self.signs
    }

    /// `m_G(ij)` for every edge.
    pub fn values(&self) -> [i64; 6] {
        self.signs.map(Sign::value)
    }

    pub fn plus_edges(&self) -> Vec<EdgeIndex> {
        EdgeIndex::ALL
            .into_iter()
            .filter(|&e| self.sign(e) == Sign::Plus)
            .collect()
    }

    pub fn minus_edges(&self) -> Vec<EdgeIndex> {
        EdgeIndex::ALL
            .into_iter()
            .filter(|&e| self.sign(e) == Sign::Minus)
            .collect()
    }

    /// Interchanges `+` and `-`.
    pub fn swap_signs(&self) -> SignedGraph4 {
        SignedGraph4 {
            signs: self.signs.map(Sign::negate),
        }
    }

    pub fn relabel(&self, perm: &Permutation) -> SignedGraph4 {
        let mut signs = [Sign::Absent; 6];
        for e in EdgeIndex::ALL {
            signs[perm.apply_edge(e).position()] = self.sign(e);
        }
        SignedGraph4 { signs }
    }

    /// All `3^6` signed graphs.
    pub fn all() -> Vec<SignedGraph4> {
        const CHOICES: [Sign; 3] = [Sign::Minus, Sign::Absent, Sign::Plus];
        (0..729usize)
            .map(|mut code| {
                let mut signs = [Sign::Absent; 6];
                for s in signs.iter_mut().rev() {
                    *s = CHOICES[code % 3];
                    code /= 3;
                }
                SignedGraph4 { signs }
            })
            .collect()
    }
}

impl fmt::Display for SignedGraph4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_edges = |edges: Vec<EdgeIndex>| {
            edges
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "E+={{{}}} E-={{{}}}",
            fmt_edges(self.plus_edges()),
            fmt_edges(self.minus_edges())
        )
    }
}

/// A bijection from the four vertices to positions `0..4`; `order[v]` is the
/// position of vertex `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EliminationOrdering {
    order: [usize; 4],
}

impl EliminationOrdering {
    pub fn new(order: [usize; 4]) -> Result<Self, ModelError> {
        Permutation::new(order)?;
        Ok(EliminationOrdering { order })
    }

    pub fn position(&self, v: usize) -> usize {
        self.order[v]
    }

    pub fn order(&self) -> [usize; 4] {
        self.order
    }

    /// The vertex placed at position `i`.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.order
            .iter()
            .position(|&p| p == i)
            .expect("bijective ordering")
    }

    /// All 24 orderings, lexicographic in `order`.
    pub fn all() -> Vec<EliminationOrdering> {
        Permutation::all()
            .into_iter()
            .map(|p| EliminationOrdering { order: p.map() })
            .collect()
    }
}

/// `m_ij = 2k + n_i + n_j + m_G(ij)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnnDecomposition {
    pub k: u32,
    pub n: [u32; 4],
    pub graph: SignedGraph4,
}

impl AnnDecomposition {
    /// `N = 4k + n0 + n1 + n2 + n3`.
    pub fn big_n(&self) -> u32 {
        4 * self.k + self.n.iter().sum::<u32>()
    }

    /// The multiplicity this decomposition describes, if all entries are nonnegative.
    pub fn multiplicity(&self) -> Option<Multiplicity> {
        let mut out = [0u32; 6];
        for e in EdgeIndex::ALL {
            let (i, j) = e.vertices();
            let v = 2 * i64::from(self.k)
                + i64::from(self.n[i])
                + i64::from(self.n[j])
                + self.graph.sign(e).value();
            out[e.position()] = u32::try_from(v).ok()?;
        }
        Some(Multiplicity(out))
    }

    pub fn reconstructs(&self, m: &Multiplicity) -> bool {
        self.multiplicity().as_ref() == Some(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Free,
    NonFree,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Free => "FREE",
            Verdict::NonFree => "NON-FREE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FreeWitness {
    /// Three edges at this vertex minimally generate the global ideal.
    FreeVertex { vertex: usize },
    /// ANN decomposition whose signed graph is eliminable under `ordering`.
    AnnFree {
        decomposition: AnnDecomposition,
        ordering: EliminationOrdering,
    },
    /// Verdict taken from the syzygy oracle; no combinatorial witness.
    Oracle,
}

impl FreeWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            FreeWitness::FreeVertex { .. } => "free_vertex",
            FreeWitness::AnnFree { .. } => "ann_free",
            FreeWitness::Oracle => "oracle",
        }
    }
}

impl fmt::Display for FreeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeWitness::FreeVertex { vertex } => write!(f, "free vertex {vertex}"),
            FreeWitness::AnnFree {
                decomposition: d,
                ordering,
            } => {
                let [n0, n1, n2, n3] = d.n;
                let seq: Vec<String> = (0..4).map(|i| ordering.vertex_at(i).to_string()).collect();
                write!(
                    f,
                    "ANN decomposition k={}, n=({n0},{n1},{n2},{n3}), {}, elimination order {}",
                    d.k,
                    d.graph,
                    seq.join("<")
                )
            }
            FreeWitness::Oracle => f.write_str("locally generated syzygies"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonFreeCertificate {
    /// One of the six residue/parity cases of the discriminant obstruction fired.
    GeneralNonFreeCase { bullet: u8 },
    /// The Hilbert-function lower bound is positive in this degree.
    LbPositive { degree: u32, gap: i64 },
    /// Neither a free vertex nor a free ANN decomposition exists.
    NoFreeStructure,
    /// The oracle found syzygies that are not locally generated.
    OracleGap { degree: u32, dimension_gap: u64 },
}

impl NonFreeCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            NonFreeCertificate::GeneralNonFreeCase { .. } => "general_non_free_case",
            NonFreeCertificate::LbPositive { .. } => "lb_positive",
            NonFreeCertificate::NoFreeStructure => "no_free_structure",
            NonFreeCertificate::OracleGap { .. } => "oracle_gap",
        }
    }
}

impl fmt::Display for NonFreeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonFreeCertificate::GeneralNonFreeCase { bullet } => {
                write!(f, "discriminant obstruction, case {bullet}")
            }
            NonFreeCertificate::LbPositive { degree, gap } => {
                write!(f, "LB(m,{degree}) = {gap} > 0")
            }
            NonFreeCertificate::NoFreeStructure => {
                f.write_str("no free vertex and no free ANN decomposition")
            }
            NonFreeCertificate::OracleGap {
                degree,
                dimension_gap,
            } => {
                write!(
                    f,
                    "syzygy gap of dimension {dimension_gap} in degree {degree}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassificationResult {
    Free {
        witness: FreeWitness,
        /// Sorted ascending; absent when no witness supplies them.
        exponents: Option<[u32; 4]>,
    },
    NonFree {
        certificate: NonFreeCertificate,
    },
}

impl ClassificationResult {
    pub fn verdict(&self) -> Verdict {
        match self {
            ClassificationResult::Free { .. } => Verdict::Free,
            ClassificationResult::NonFree { .. } => Verdict::NonFree,
        }
    }

    pub fn is_free(&self) -> bool {
        self.verdict() == Verdict::Free
    }

    pub fn exponents(&self) -> Option<[u32; 4]> {
        match self {
            ClassificationResult::Free { exponents, .. } => *exponents,
            ClassificationResult::NonFree { .. } => None,
        }
    }
}

/// Assignment of two values `r` and `s` to the six edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwoValued {
    R,
    S,
}

/// Two-valued edge pattern used for `(r, s)` grids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoValuedPattern {
    pub name: String,
    pub slots: [TwoValued; 6],
}

impl TwoValuedPattern {
    fn named(name: &str, s_edges: [bool; 6]) -> Self {
        TwoValuedPattern {
            name: name.to_string(),
            slots: s_edges.map(|s| if s { TwoValued::S } else { TwoValued::R }),
        }
    }

    /// `s` on edge `01`, `r` elsewhere.
    pub fn single_edge() -> Self {
        Self::named("single-edge", [true, false, false, false, false, false])
    }

    /// `s` on two edges meeting at vertex 0.
    pub fn adjacent_pair() -> Self {
        Self::named("adjacent-pair", [true, true, false, false, false, false])
    }

    /// `s` on the star at vertex 0, `r` on the opposite triangle.
    pub fn star_triangle() -> Self {
        Self::named("star-triangle", [true, true, true, false, false, false])
    }

    /// `s` on the opposite pair `01, 23`.
    pub fn matching() -> Self {
        Self::named("matching", [true, false, false, false, false, true])
    }

    /// `s` on the path `1-0-3-2`; its complement is again a three-edge path.
    pub fn path() -> Self {
        Self::named("path", [true, false, true, false, false, true])
    }

    pub fn standard() -> Vec<TwoValuedPattern> {
        vec![
            Self::single_edge(),
            Self::adjacent_pair(),
            Self::star_triangle(),
            Self::path(),
            Self::matching(),
        ]
    }

    /// Looks up a standard pattern by name or alias.
    pub fn by_name(name: &str) -> Option<Self> {
        let canonical = match name {
            "star0" => "single-edge",
            "star-vs-triangle" => "star-triangle",
            "perfect-matching" => "matching",
            "triangle-pair" => "path",
            other => other,
        };
        Self::standard().into_iter().find(|p| p.name == canonical)
    }

    /// Parses a six-letter word over `{r, s}`, e.g. `srrrrr`.
    pub fn from_word(word: &str) -> Option<Self> {
        let chars: Vec<char> = word.trim().chars().filter(|c| *c != ',').collect();
        if chars.len() != 6 {
            return None;
        }
        let mut slots = [TwoValued::R; 6];
        for (slot, c) in slots.iter_mut().zip(chars) {
            *slot = match c.to_ascii_lowercase() {
                'r' => TwoValued::R,
                's' => TwoValued::S,
                _ => return None,
            };
        }
        Some(TwoValuedPattern {
            name: word.trim().to_string(),
            slots,
        })
    }

    pub fn instantiate(&self, r: u32, s: u32) -> Multiplicity {
        Multiplicity(self.slots.map(|v| match v {
            TwoValued::R => r,
            TwoValued::S => s,
        }))
    }
}
