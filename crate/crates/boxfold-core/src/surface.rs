//! Labeled surface graph of an axis-aligned box.
//!
//! The surface of an `a x b x c` box is modeled as its unit squares plus
//! the adjacency between squares that share a geometric unit edge. Each
//! square carries a fixed frame derived from a dot label placed at the
//! square corner farthest from the origin (box in the positive octant).
//! All cross-face bookkeeping (adjacency, local directions, relative
//! orientations, corner triples, 2x2 patches) is computed from shared 3D
//! edge geometry rather than per-face case tables, so a single code path
//! covers every face pair.
//!
//! Coordinates are kept doubled (`2x`) so that square centers and edge
//! midpoints are exact integer points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Integer 3D point/vector in doubled coordinates.
pub type P3 = [i64; 3];

fn add(a: P3, b: P3) -> P3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: P3, k: i64) -> P3 {
    [a[0] * k, a[1] * k, a[2] * k]
}

/// Box dimensions, normalized so `a <= b <= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxDims {
    a: u32,
    b: u32,
    c: u32,
}

/// Error for non-positive box dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BadDims;

impl fmt::Display for BadDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "box dimensions must be positive")
    }
}

impl core::error::Error for BadDims {}

impl BoxDims {
    /// Creates normalized dimensions; inputs are sorted so `a <= b <= c`.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, BadDims> {
        if a == 0 || b == 0 || c == 0 {
            return Err(BadDims);
        }
        let mut d = [a, b, c];
        d.sort_unstable();
        Ok(BoxDims {
            a: d[0],
            b: d[1],
            c: d[2],
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// Surface area `2(ab + ac + bc)`, which equals the number of unit
    /// squares on the surface.
    pub fn area(&self) -> u32 {
        2 * (self.a * self.b + self.a * self.c + self.b * self.c)
    }

    /// True for `1 x 1 x n` boxes, which admit extra symmetry breaking.
    pub fn is_square_tube(&self) -> bool {
        self.a == 1 && self.b == 1
    }

    fn extent(&self) -> P3 {
        [self.a as i64, self.b as i64, self.c as i64]
    }
}

impl fmt::Display for BoxDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// One of the six faces of the box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    Xp,
    Xn,
    Yp,
    Yn,
    Zp,
    Zn,
}

pub const FACES: [Face; 6] = [Face::Xp, Face::Xn, Face::Yp, Face::Yn, Face::Zp, Face::Zn];

impl Face {
    /// Short label used by renderers.
    pub fn label(&self) -> char {
        match self {
            Face::Xp => 'X',
            Face::Xn => 'x',
            Face::Yp => 'Y',
            Face::Yn => 'y',
            Face::Zp => 'Z',
            Face::Zn => 'z',
        }
    }

    /// Face axes `(u, v)` chosen so `u x v` is the outward normal. All
    /// axis vectors point in positive coordinate directions, which makes
    /// the dot corner (farthest from the origin) sit at `base + u + v`
    /// of every square, i.e. the dot frame coincides with the face frame.
    fn axes(&self) -> (P3, P3) {
        match self {
            Face::Xp => ([0, 1, 0], [0, 0, 1]),
            Face::Xn => ([0, 0, 1], [0, 1, 0]),
            Face::Yp => ([0, 0, 1], [1, 0, 0]),
            Face::Yn => ([1, 0, 0], [0, 0, 1]),
            Face::Zp => ([1, 0, 0], [0, 1, 0]),
            Face::Zn => ([0, 1, 0], [1, 0, 0]),
        }
    }

    fn base(&self, dims: &BoxDims) -> P3 {
        let e = dims.extent();
        match self {
            Face::Xp => [e[0], 0, 0],
            Face::Xn => [0, 0, 0],
            Face::Yp => [0, e[1], 0],
            Face::Yn => [0, 0, 0],
            Face::Zp => [0, 0, e[2]],
            Face::Zn => [0, 0, 0],
        }
    }

    fn grid(&self, dims: &BoxDims) -> (u32, u32) {
        let (u, v) = self.axes();
        let e = dims.extent();
        let len = |ax: P3| -> u32 {
            let mut n = 0i64;
            for i in 0..3 {
                n += ax[i] * e[i];
            }
            n as u32
        };
        (len(u), len(v))
    }
}

/// Identity of a surface square: face plus in-face grid coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareId {
    pub face: Face,
    pub u: u16,
    pub v: u16,
}

/// Canonical unordered pair of adjacent square indices, smaller first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32, pub u32);

impl EdgeId {
    pub fn new(s1: u32, s2: u32) -> Self {
        if s1 <= s2 {
            EdgeId(s1, s2)
        } else {
            EdgeId(s2, s1)
        }
    }
}

/// Error returned when two squares do not share a geometric edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotAdjacent(pub u32, pub u32);

impl fmt::Display for NotAdjacent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "squares {} and {} are not adjacent", self.0, self.1)
    }
}

impl core::error::Error for NotAdjacent {}

/// Four squares around a flat surface vertex, in cyclic order.
/// `edges[i]` joins `squares[i]` and `squares[(i + 1) % 4]`.
#[derive(Debug, Clone)]
pub struct Patch4 {
    pub squares: [u32; 4],
    pub edges: [u32; 4],
}

/// Three squares around a box corner, in cyclic order.
/// `edges[i]` joins `squares[i]` and `squares[(i + 1) % 3]`.
#[derive(Debug, Clone)]
pub struct Patch3 {
    pub squares: [u32; 3],
    pub edges: [u32; 3],
}

/// The labeled surface graph of a box.
///
/// Immutable after construction; safe to share across worker threads.
pub struct SurfaceGraph {
    dims: BoxDims,
    squares: Vec<SquareId>,
    index: BTreeMap<SquareId, u32>,
    /// `neighbors[s][k]` is the square across the edge in local direction
    /// `k` of `s`'s dot frame (0 = +u, 1 = +v, 2 = -u, 3 = -v).
    neighbors: Vec<[u32; 4]>,
    /// `edge_at[s][k]` is the edge index of that same edge.
    edge_at: Vec<[u32; 4]>,
    edges: Vec<EdgeId>,
    edge_index: BTreeMap<EdgeId, u32>,
    /// Edge midpoints in doubled coordinates, for geometric lookups.
    edge_mid2: Vec<P3>,
    center2: Vec<P3>,
    corners: Vec<Patch3>,
    patches4: Vec<Patch4>,
}

impl SurfaceGraph {
    /// Builds the surface graph: squares, adjacency with local direction
    /// labels, edge table, corner triples, and 2x2 patches.
    pub fn build(dims: BoxDims) -> SurfaceGraph {
        let mut squares = Vec::new();
        let mut index = BTreeMap::new();
        for face in FACES {
            let (nu, nv) = face.grid(&dims);
            for u in 0..nu {
                for v in 0..nv {
                    let id = SquareId {
                        face,
                        u: u as u16,
                        v: v as u16,
                    };
                    index.insert(id, squares.len() as u32);
                    squares.push(id);
                }
            }
        }
        let n = squares.len();
        debug_assert_eq!(n as u32, dims.area());

        let mut center2 = Vec::with_capacity(n);
        for id in &squares {
            let (us, vs) = id.face.axes();
            let base = id.face.base(&dims);
            let origin = add(base, add(scale(us, id.u as i64), scale(vs, id.v as i64)));
            center2.push(add(scale(origin, 2), add(us, vs)));
        }

        // Group (square, slot) by the shared edge midpoint; each surface
        // edge belongs to exactly two squares.
        let mut by_mid: BTreeMap<P3, Vec<(u32, u8)>> = BTreeMap::new();
        for (s, id) in squares.iter().enumerate() {
            let (us, vs) = id.face.axes();
            let dirs = [us, vs, scale(us, -1), scale(vs, -1)];
            for (k, d) in dirs.iter().enumerate() {
                let mid = add(center2[s], *d);
                by_mid.entry(mid).or_default().push((s as u32, k as u8));
            }
        }

        let mut neighbors = alloc::vec![[u32::MAX; 4]; n];
        let mut edge_at = alloc::vec![[u32::MAX; 4]; n];
        let mut edges = Vec::new();
        let mut edge_index = BTreeMap::new();
        let mut edge_mid2 = Vec::new();
        for (mid, members) in &by_mid {
            assert_eq!(members.len(), 2, "surface edge must join exactly 2 squares");
            let (s1, k1) = members[0];
            let (s2, k2) = members[1];
            let eid = EdgeId::new(s1, s2);
            let e = edges.len() as u32;
            edge_index.insert(eid, e);
            edges.push(eid);
            edge_mid2.push(*mid);
            neighbors[s1 as usize][k1 as usize] = s2;
            neighbors[s2 as usize][k2 as usize] = s1;
            edge_at[s1 as usize][k1 as usize] = e;
            edge_at[s2 as usize][k2 as usize] = e;
        }
        debug_assert_eq!(edges.len(), 2 * n);

        // Vertex census: squares incident to each lattice point of the
        // surface. Box corners have 3 incident squares, all other surface
        // vertices have 4.
        let mut by_vertex: BTreeMap<P3, Vec<u32>> = BTreeMap::new();
        for s in 0..n {
            let (us, vs) = squares[s].face.axes();
            for su in [-1i64, 1] {
                for sv in [-1i64, 1] {
                    let corner = add(center2[s], add(scale(us, su), scale(vs, sv)));
                    by_vertex.entry(corner).or_default().push(s as u32);
                }
            }
        }

        let mut corners = Vec::new();
        let mut patches4 = Vec::new();
        for (vtx, sqs) in &by_vertex {
            let cyc = cyclic_order(*vtx, sqs, &center2, &squares, &edge_at);
            match sqs.len() {
                3 => {
                    let mut squares3 = [0u32; 3];
                    let mut edges3 = [0u32; 3];
                    for i in 0..3 {
                        squares3[i] = cyc[i].0;
                        edges3[i] = cyc[i].1;
                    }
                    corners.push(Patch3 {
                        squares: squares3,
                        edges: edges3,
                    });
                }
                4 => {
                    let mut squares4 = [0u32; 4];
                    let mut edges4 = [0u32; 4];
                    for i in 0..4 {
                        squares4[i] = cyc[i].0;
                        edges4[i] = cyc[i].1;
                    }
                    patches4.push(Patch4 {
                        squares: squares4,
                        edges: edges4,
                    });
                }
                k => panic!("surface vertex with {k} incident squares"),
            }
        }
        assert_eq!(corners.len(), 8);

        SurfaceGraph {
            dims,
            squares,
            index,
            neighbors,
            edge_at,
            edges,
            edge_index,
            edge_mid2,
            center2,
            corners,
            patches4,
        }
    }

    pub fn dims(&self) -> BoxDims {
        self.dims
    }

    pub fn square_count(&self) -> u32 {
        self.squares.len() as u32
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.len() as u32
    }

    pub fn square(&self, s: u32) -> SquareId {
        self.squares[s as usize]
    }

    pub fn index_of(&self, id: SquareId) -> Option<u32> {
        self.index.get(&id).copied()
    }

    /// Square across the edge in local direction `k` of `s`'s dot frame.
    pub fn neighbor(&self, s: u32, k: u8) -> u32 {
        self.neighbors[s as usize][k as usize]
    }

    /// Local direction of `s2` as seen from `s1`, if adjacent.
    pub fn local_dir(&self, s1: u32, s2: u32) -> Option<u8> {
        self.neighbors[s1 as usize]
            .iter()
            .position(|&t| t == s2)
            .map(|k| k as u8)
    }

    pub fn edge_between(&self, s1: u32, s2: u32) -> Option<u32> {
        self.edge_index.get(&EdgeId::new(s1, s2)).copied()
    }

    pub fn edge(&self, e: u32) -> EdgeId {
        self.edges[e as usize]
    }

    /// Edge index of the edge in local direction `k` of `s`.
    pub fn edge_in_dir(&self, s: u32, k: u8) -> u32 {
        self.edge_at[s as usize][k as usize]
    }

    /// Midpoint of edge `e` in doubled coordinates. Stable across runs,
    /// so it also serves as an index-independent edge name.
    pub fn edge_mid2(&self, e: u32) -> P3 {
        self.edge_mid2[e as usize]
    }

    pub fn edge_by_mid2(&self, mid: P3) -> Option<u32> {
        self.edge_mid2.iter().position(|&m| m == mid).map(|i| i as u32)
    }

    pub fn center2(&self, s: u32) -> P3 {
        self.center2[s as usize]
    }

    /// The square's dot corner in doubled coordinates.
    pub fn dot_corner2(&self, s: u32) -> P3 {
        let (us, vs) = self.squares[s as usize].face.axes();
        add(self.center2[s as usize], add(us, vs))
    }

    /// Relative orientation of `s2` with respect to `s1` in Z4: the
    /// orientation `s2` takes when the pair is unfolded flat with `s1` at
    /// orientation 0. Depends only on the fixed dot labeling.
    ///
    /// Unfolding maps the two local directions across the shared edge to
    /// opposite plane directions, which gives `r = k1 - k2 + 2 (mod 4)`.
    pub fn relative_orientation(&self, s1: u32, s2: u32) -> Result<u8, NotAdjacent> {
        let k1 = self.local_dir(s1, s2).ok_or(NotAdjacent(s1, s2))?;
        let k2 = self.local_dir(s2, s1).ok_or(NotAdjacent(s1, s2))?;
        Ok((k1 + 6 - k2) % 4)
    }

    /// The eight corner triples, each pairwise adjacent.
    pub fn corner_triples(&self) -> &[Patch3] {
        &self.corners
    }

    /// 2x2 patches around flat vertices and corner patches.
    pub fn patches(&self) -> (&[Patch4], &[Patch3]) {
        (&self.patches4, &self.corners)
    }

    /// All axis-aligned isometries of the box, as permutations of square
    /// indices. Includes reflections: 8, 16, or 48 elements depending on
    /// how many dimensions coincide.
    pub fn symmetries(&self) -> Vec<Vec<u32>> {
        let e = self.dims.extent();
        let center_lookup: BTreeMap<P3, u32> = self
            .center2
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();

        let mut perms = Vec::new();
        // All signed axis permutations; keep those mapping the box to itself.
        let axis_perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for ap in axis_perms {
            for signs in 0..8u32 {
                let sign = |i: usize| if signs >> i & 1 == 1 { -1i64 } else { 1 };
                // q[i] = sign(i) * p[ap[i]] + offset(i); offset folds the
                // reflected axis back into [0, 2*dim].
                let mut perm = Vec::with_capacity(self.squares.len());
                let mut ok = true;
                for s in 0..self.squares.len() {
                    let p = self.center2[s];
                    let mut q = [0i64; 3];
                    for i in 0..3 {
                        q[i] = sign(i) * p[ap[i]] + if sign(i) < 0 { 2 * e[ap[i]] } else { 0 };
                    }
                    match center_lookup.get(&q) {
                        Some(&t) => perm.push(t),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    perms.push(perm);
                }
            }
        }
        perms
    }
}

/// Orders the squares around a surface vertex cyclically: consecutive
/// squares share the edge between them that is incident to the vertex.
fn cyclic_order(
    vtx: P3,
    sqs: &[u32],
    center2: &[P3],
    squares: &[SquareId],
    edge_at: &[[u32; 4]],
) -> Vec<(u32, u32)> {
    // The two edges of square s incident to vtx, as (slot, edge) pairs.
    let incident = |s: u32| -> Vec<(u8, u32)> {
        let (us, vs) = squares[s as usize].face.axes();
        let dirs = [us, vs, scale(us, -1), scale(vs, -1)];
        let mut out = Vec::new();
        for (k, d) in dirs.iter().enumerate() {
            let mid = add(center2[s as usize], *d);
            // Edge midpoint is one unit (doubled: distance 1) from the
            // vertex exactly when the edge touches it.
            let delta = sub(mid, vtx);
            let l1: i64 = delta.iter().map(|x| x.abs()).sum();
            if l1 == 1 {
                out.push((k as u8, edge_at[s as usize][k as usize]));
            }
        }
        debug_assert_eq!(out.len(), 2);
        out
    };

    let edge_squares = |e: u32, s: u32, all: &[u32]| -> u32 {
        // The other square of edge e among the vertex's squares.
        *all.iter()
            .find(|&&t| t != s && incident(t).iter().any(|&(_, e2)| e2 == e))
            .expect("vertex walk: edge must join two incident squares")
    };

    let start = sqs[0];
    let mut out: Vec<(u32, u32)> = Vec::new();
    let mut cur = start;
    let mut via = incident(start)[0].1;
    loop {
        out.push((cur, via));
        let next = edge_squares(via, cur, sqs);
        if next == start {
            break;
        }
        let next_edges = incident(next);
        via = if next_edges[0].1 == via {
            next_edges[1].1
        } else {
            next_edges[0].1
        };
        cur = next;
    }
    assert_eq!(out.len(), sqs.len());
    out
}
