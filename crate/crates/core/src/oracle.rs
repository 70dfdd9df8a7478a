//! Brute-force genus distributions by exhaustive enumeration of rotation
//! systems.
//!
//! Graphs are stored at the dart level so the parallel edges of the dipole
//! need no special casing: edge `e` owns darts `2e` (leaving its first
//! endpoint) and `2e + 1` (leaving its second), and `d ^ 1` is the reverse
//! dart. Faces are orbits of `d ↦ rot(d ^ 1)`, i.e. cross the edge, then
//! turn to the rotation successor.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pgd::{rotation_system_count, PgdVector};
use crate::poly::IntPoly;

/// Default largest `n` the oracle runs without an explicit acknowledgment.
pub const DEFAULT_CAP: usize = 4;

/// Largest `n` whose rotation index fits the 64-bit enumeration counter.
pub const HARD_LIMIT: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    root: usize,
    darts_at: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// # Panics
    /// If an endpoint or the root is out of range.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, root: usize) -> Self {
        assert!(root < vertex_count);
        let mut darts_at = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            assert!(
                u < vertex_count && v < vertex_count,
                "edge {e} out of range"
            );
            darts_at[u].push(2 * e);
            darts_at[v].push(2 * e + 1);
        }
        MultiGraph {
            vertex_count,
            edges,
            root,
            darts_at,
        }
    }

    /// `D_3`: two vertices joined by three parallel edges, rooted at vertex 0.
    pub fn dipole() -> Self {
        MultiGraph::new(2, vec![(0, 1); 3], 0)
    }

    /// Subdivide every edge at the root and join the three subdivision
    /// vertices to a new root.
    pub fn newclaw(&self) -> Self {
        let old_root = self.root;
        let new_root = self.vertex_count;
        let mut next = self.vertex_count + 1;
        let mut edges = self.edges.clone();
        let mut extra = Vec::new();
        for e in 0..self.edges.len() {
            let (u, v) = self.edges[e];
            // A loop at the root would need two subdivision vertices; Y_n has none.
            debug_assert!(!(u == old_root && v == old_root));
            if u != old_root && v != old_root {
                continue;
            }
            let mid = next;
            next += 1;
            edges[e] = if u == old_root { (mid, v) } else { (u, mid) };
            extra.push((old_root, mid));
            extra.push((mid, new_root));
        }
        edges.extend(extra);
        MultiGraph::new(next, edges, new_root)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn darts_at(&self, v: usize) -> &[usize] {
        &self.darts_at[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at[v].len()
    }

    pub fn tail(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn head(&self, dart: usize) -> usize {
        self.tail(dart ^ 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &self.darts_at[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// `Y_n`: the dipole after `n` newclaw surgeries.
pub fn build_iterated_claw(n: usize) -> MultiGraph {
    (0..n).fold(MultiGraph::dipole(), |g, _| g.newclaw())
}

/// Cyclic successor of every dart around its tail vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    succ: Vec<usize>,
}

impl RotationSystem {
    /// Build from one cyclic order per vertex; each must list exactly the
    /// darts leaving that vertex.
    pub fn from_orders(g: &MultiGraph, orders: &[Vec<usize>]) -> Result<Self> {
        if orders.len() != g.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "{} vertex orders for {} vertices",
                orders.len(),
                g.vertex_count()
            )));
        }
        let mut succ = vec![usize::MAX; g.dart_count()];
        for (v, order) in orders.iter().enumerate() {
            let mut want = g.darts_at(v).to_vec();
            let mut got = order.clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(Error::InvalidArgument(format!(
                    "rotation at vertex {v} is not a cyclic order of its darts"
                )));
            }
            for (k, &d) in order.iter().enumerate() {
                succ[d] = order[(k + 1) % order.len()];
            }
        }
        Ok(RotationSystem { succ })
    }

    /// For graphs whose vertices all have degree 3: bit `v` of `mask` picks
    /// between the two cyclic orders `(d0 d1 d2)` and `(d0 d2 d1)`.
    ///
    /// # Panics
    /// If some vertex is not 3-valent.
    pub fn from_mask(g: &MultiGraph, mask: u64) -> Self {
        let mut succ = vec![0; g.dart_count()];
        fill_cubic_rotation(g, mask, &mut succ);
        RotationSystem { succ }
    }

    pub fn successor(&self, dart: usize) -> usize {
        self.succ[dart]
    }
}

fn fill_cubic_rotation(g: &MultiGraph, mask: u64, succ: &mut [usize]) {
    for v in 0..g.vertex_count() {
        let d = g.darts_at(v);
        assert_eq!(d.len(), 3, "vertex {v} is not 3-valent");
        if mask >> v & 1 == 0 {
            succ[d[0]] = d[1];
            succ[d[1]] = d[2];
            succ[d[2]] = d[0];
        } else {
            succ[d[0]] = d[2];
            succ[d[2]] = d[1];
            succ[d[1]] = d[0];
        }
    }
}

/// How many distinct faces meet the root's three corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootClass {
    /// Three distinct faces.
    A,
    /// Exactly two.
    B,
    /// One face, three times.
    C,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::A => "a",
            RootClass::B => "b",
            RootClass::C => "c",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: usize,
    pub genus: usize,
}

/// Reusable face-tracing state; labels are reset by bumping a generation
/// counter instead of clearing.
struct Tracer {
    succ: Vec<usize>,
    label: Vec<u32>,
    stamp: Vec<u32>,
    generation: u32,
}

impl Tracer {
    fn new(darts: usize) -> Self {
        Tracer {
            succ: vec![0; darts],
            label: vec![0; darts],
            stamp: vec![0; darts],
            generation: 0,
        }
    }

    /// Label every dart with its face; returns the face count.
    fn trace(&mut self) -> usize {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let gen = self.generation;
        let mut faces = 0u32;
        for start in 0..self.succ.len() {
            if self.stamp[start] == gen {
                continue;
            }
            let mut d = start;
            while self.stamp[d] != gen {
                self.stamp[d] = gen;
                self.label[d] = faces;
                d = self.succ[d ^ 1];
            }
            faces += 1;
        }
        faces as usize
    }

    fn root_class(&self, g: &MultiGraph) -> RootClass {
        let d = g.darts_at(g.root());
        let l: Vec<u32> = d.iter().map(|&x| self.label[x]).collect();
        let distinct = match l.as_slice() {
            [a, b, c] => 1 + usize::from(a != b) + usize::from(c != a && c != b),
            _ => unreachable!("root is not 3-valent"),
        };
        match distinct {
            3 => RootClass::A,
            2 => RootClass::B,
            _ => RootClass::C,
        }
    }
}

fn genus_from_faces(g: &MultiGraph, faces: usize) -> Result<usize> {
    // V - E + F = 2 - 2 genus
    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + faces as i64;
    let twice = 2 - euler;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidTrace(format!(
            "V={} E={} F={faces} gives Euler characteristic {euler}",
            g.vertex_count(),
            g.edge_count()
        )));
    }
    Ok((twice / 2) as usize)
}

pub fn face_trace(g: &MultiGraph, rot: &RotationSystem) -> Result<FaceTrace> {
    if !g.is_connected() {
        return Err(Error::InvalidTrace("graph is disconnected".into()));
    }
    let mut t = Tracer::new(g.dart_count());
    t.succ.copy_from_slice(&rot.succ);
    let faces = t.trace();
    Ok(FaceTrace {
        faces,
        genus: genus_from_faces(g, faces)?,
    })
}

/// # Panics
/// If the root is not 3-valent.
pub fn root_class(g: &MultiGraph, rot: &RotationSystem) -> RootClass {
    let mut t = Tracer::new(g.dart_count());
    t.succ.copy_from_slice(&rot.succ);
    t.trace();
    t.root_class(g)
}

/// Per-genus tallies of embeddings split by root class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OraclePgd {
    pub n: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl OraclePgd {
    fn with_len(n: usize, len: usize) -> Self {
        OraclePgd {
            n,
            a: vec![0; len],
            b: vec![0; len],
            c: vec![0; len],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (x, y) in [
            (&mut self.a, &other.a),
            (&mut self.b, &other.b),
            (&mut self.c, &other.c),
        ] {
            for (p, q) in x.iter_mut().zip(y) {
                *p += q;
            }
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.a.iter().chain(&self.b).chain(&self.c).sum()
    }

    /// Genus range with a nonzero tally.
    pub fn genus_range(&self) -> Option<(usize, usize)> {
        let any = |i: usize| self.a[i] + self.b[i] + self.c[i] > 0;
        let lo = (0..self.a.len()).find(|&i| any(i))?;
        let hi = (0..self.a.len()).rev().find(|&i| any(i))?;
        Some((lo, hi))
    }

    pub fn to_pgd(&self) -> PgdVector {
        let poly = |v: &[u64]| IntPoly::new(v.iter().map(|&x| x.into()).collect());
        PgdVector {
            n: self.n,
            a: poly(&self.a),
            b: poly(&self.b),
            c: poly(&self.c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub parallelism: usize,
    /// Largest `n` run without `acknowledge_cost`.
    pub cap: usize,
    pub acknowledge_cost: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            parallelism: 1,
            cap: DEFAULT_CAP,
            acknowledge_cost: false,
        }
    }
}

/// Exhaustively enumerate all `2^(4n+2)` rotation systems of `Y_n` and
/// tally them by genus and root class.
pub fn oracle_pgd(n: usize, config: &OracleConfig) -> Result<OraclePgd> {
    if n > HARD_LIMIT || (n > config.cap && !config.acknowledge_cost) {
        return Err(Error::OracleCap {
            n,
            cap: if n > HARD_LIMIT {
                HARD_LIMIT
            } else {
                config.cap
            },
            rotation_systems: rotation_system_count(n).to_string(),
        });
    }
    let g = build_iterated_claw(n);
    enumerate(&g, n, config.parallelism.max(1))
}

/// Rotation indices handled per work unit.
const CHUNK_BITS: u32 = 12;

fn enumerate(g: &MultiGraph, n: usize, parallelism: usize) -> Result<OraclePgd> {
    let bits = g.vertex_count() as u32;
    let total: u64 = 1 << bits;
    let chunk = 1u64 << CHUNK_BITS.min(bits);
    let chunks = total / chunk;
    let len = g.edge_count() + 1;

    let work = |k: u64| -> Result<OraclePgd> {
        let mut t = Tracer::new(g.dart_count());
        let mut out = OraclePgd::with_len(n, len);
        for mask in k * chunk..(k + 1) * chunk {
            fill_cubic_rotation(g, mask, &mut t.succ);
            let faces = t.trace();
            let genus = genus_from_faces(g, faces)?;
            let slot = match t.root_class(g) {
                RootClass::A => &mut out.a,
                RootClass::B => &mut out.b,
                RootClass::C => &mut out.c,
            };
            slot[genus] += 1;
        }
        Ok(out)
    };

    let mut tallies = crate::in_pool(parallelism, || {
        (0..chunks)
            .into_par_iter()
            .map(work)
            .try_reduce(|| OraclePgd::with_len(n, len), |x, y| Ok(x.merge(y)))
    })??;
    let keep = tallies.genus_range().map_or(0, |(_, hi)| hi + 1);
    for v in [&mut tallies.a, &mut tallies.b, &mut tallies.c] {
        v.truncate(keep);
    }
    Ok(tallies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgd;

    #[test]
    fn iterated_claw_shapes() {
        for n in 0..=5 {
            let g = build_iterated_claw(n);
            assert_eq!(g.vertex_count(), 4 * n + 2);
            assert_eq!(g.edge_count(), 6 * n + 3);
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 3));
            assert!(g.is_connected());
        }
        let d3 = build_iterated_claw(0);
        assert!(d3.edges().iter().all(|&e| e == (0, 1)));
    }

    #[test]
    fn y1_is_k33() {
        let g = build_iterated_claw(1);
        // simple, bipartite and cubic on six vertices
        let mut pairs: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), 9);
        let mut color = [None; 6];
        color[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &d in g.darts_at(v) {
                let w = g.head(d);
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        stack.push(w);
                    }
                    Some(c) => assert_ne!(Some(c), color[v]),
                }
            }
        }
        assert_eq!(color.iter().filter(|c| **c == Some(true)).count(), 3);
    }

    #[test]
    fn dipole_embeddings() {
        let g = MultiGraph::dipole();
        let mut seen = Vec::new();
        for mask in 0..4 {
            let rot = RotationSystem::from_mask(&g, mask);
            let ft = face_trace(&g, &rot).unwrap();
            let class = root_class(&g, &rot);
            seen.push((ft.genus, ft.faces, class));
        }
        seen.sort_by_key(|s| s.0);
        assert_eq!(
            seen,
            [
                (0, 3, RootClass::A),
                (0, 3, RootClass::A),
                (1, 1, RootClass::C),
                (1, 1, RootClass::C)
            ]
        );
    }

    #[test]
    fn triangle_is_planar() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)], 0);
        let orders: Vec<Vec<usize>> = (0..3).map(|v| g.darts_at(v).to_vec()).collect();
        let rot = RotationSystem::from_orders(&g, &orders).unwrap();
        assert_eq!(
            face_trace(&g, &rot).unwrap(),
            FaceTrace { faces: 2, genus: 0 }
        );
    }

    #[test]
    fn from_orders_validates() {
        let g = MultiGraph::dipole();
        assert!(RotationSystem::from_orders(&g, &[vec![0, 2, 4], vec![1, 3]]).is_err());
        assert!(RotationSystem::from_orders(&g, &[vec![0, 2, 4]]).is_err());
        let rot = RotationSystem::from_orders(&g, &[vec![0, 4, 2], vec![1, 3, 5]]).unwrap();
        assert_eq!(rot.successor(4), 2);
        assert_eq!(rot, RotationSystem::from_mask(&g, 1));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = MultiGraph::new(4, vec![(0, 1), (2, 3)], 0);
        let orders: Vec<Vec<usize>> = (0..4).map(|v| g.darts_at(v).to_vec()).collect();
        let rot = RotationSystem::from_orders(&g, &orders).unwrap();
        assert!(matches!(face_trace(&g, &rot), Err(Error::InvalidTrace(_))));
    }

    #[test]
    fn small_oracles_match_productions() {
        let cfg = OracleConfig::default();
        let o0 = oracle_pgd(0, &cfg).unwrap();
        assert_eq!(
            (o0.a.clone(), o0.b.clone(), o0.c.clone()),
            (vec![2, 0], vec![0, 0], vec![0, 2])
        );
        for n in 0..=3 {
            let o = oracle_pgd(n, &cfg).unwrap();
            assert_eq!(o.to_pgd(), pgd::pgd(n), "n = {n}");
            assert_eq!(o.total(), 1u64 << (4 * n + 2));
            let genus_1: Vec<_> = (0..=1).map(|i| o.a[i] + o.b[i] + o.c[i]).collect();
            if n == 1 {
                assert_eq!(genus_1, vec![0, 40]);
                assert_eq!(o.genus_range(), Some((1, 2)));
            }
        }
    }

    #[test]
    fn oracle_cap_refuses() {
        let cfg = OracleConfig {
            cap: 2,
            ..OracleConfig::default()
        };
        match oracle_pgd(3, &cfg) {
            Err(Error::OracleCap {
                rotation_systems, ..
            }) => assert_eq!(rotation_systems, "16384"),
            other => panic!("{other:?}"),
        }
        let ack = OracleConfig {
            acknowledge_cost: true,
            ..cfg
        };
        assert!(oracle_pgd(3, &ack).is_ok());
        assert!(oracle_pgd(HARD_LIMIT + 1, &ack).is_err());
    }
}
