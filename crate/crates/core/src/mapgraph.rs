//! Unoriented 4-valent maps: the orientation-free skeleton of a diagram.
//!
//! Used wherever orientation is a derived choice rather than an input:
//! rebuilding a diagram after irregular smoothing, enumerating the
//! orientations of an unoriented link, and assembling tangle
//! constructions. Ports are counterclockwise per node; the under-strand
//! always occupies the diagonal {0, 2} and the over-strand {1, 3},
//! matching the crossing tuple convention.

use crate::diagram::{Crossing, LinkDiagram};
use crate::error::KnotError;
use crate::faces::arc_ends;

#[derive(Clone, Debug)]
pub struct UnoMap {
    /// nodes[n][p] = (node, port) glued to port p of node n.
    pub nodes: Vec<[(usize, u8); 4]>,
    pub free_loops: usize,
}

impl UnoMap {
    pub fn from_diagram(d: &LinkDiagram) -> UnoMap {
        let ends = arc_ends(d);
        let mut nodes = vec![[(usize::MAX, 4u8); 4]; d.crossing_count()];
        for a in 1..=d.arc_count() {
            let h = ends.head[a];
            let t = ends.tail[a];
            nodes[t.crossing][t.port as usize] = (h.crossing, h.port);
            nodes[h.crossing][h.port as usize] = (t.crossing, t.port);
        }
        UnoMap { nodes, free_loops: d.free_loops() }
    }

    /// Strand components as passage cycles. Each passage is (node,
    /// in-port); the cycle lists passages in traversal order. Component
    /// k is discovered at the smallest unvisited dart, entered through
    /// that dart unless `flip[k]` reverses it.
    fn strand_cycles(&self, flip: &[bool]) -> Vec<Vec<(usize, u8)>> {
        let n = self.nodes.len();
        let mut visited = vec![false; 4 * n];
        let idx = |node: usize, port: u8| node * 4 + port as usize;
        let mut cycles = Vec::new();
        for node in 0..n {
            for port in 0..4u8 {
                if visited[idx(node, port)] {
                    continue;
                }
                let rev = flip.get(cycles.len()).copied().unwrap_or(false);
                let (mut cur_node, mut cur_in) =
                    if rev { (node, (port + 2) % 4) } else { (node, port) };
                let mut cycle = Vec::new();
                loop {
                    if visited[idx(cur_node, cur_in)] {
                        break;
                    }
                    visited[idx(cur_node, cur_in)] = true;
                    visited[idx(cur_node, (cur_in + 2) % 4)] = true;
                    cycle.push((cur_node, cur_in));
                    let out = (cur_in + 2) % 4;
                    let (next_node, next_in) = self.nodes[cur_node][out as usize];
                    cur_node = next_node;
                    cur_in = next_in;
                }
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub fn strand_count(&self) -> usize {
        self.strand_cycles(&[]).len() + self.free_loops
    }

    /// Orients every strand and rebuilds the crossing tuples. `flip[k]`
    /// reverses the default direction of strand k (defaults preserve the
    /// discovery orientation). Arc numbering follows the walk: the arc
    /// entering the j-th passage of a k-passage strand starting at label
    /// f is `f + j`, so successors advance along the walk.
    pub fn to_diagram_with(&self, flip: &[bool]) -> Result<LinkDiagram, KnotError> {
        let cycles = self.strand_cycles(flip);
        let mut arc_at_port = vec![[0u32; 4]; self.nodes.len()];
        let mut in_ports = vec![[false; 4]; self.nodes.len()];
        let mut ranges = Vec::with_capacity(cycles.len());
        let mut next: u32 = 1;
        for cycle in &cycles {
            let k = cycle.len() as u32;
            let first = next;
            for (j, &(node, in_port)) in cycle.iter().enumerate() {
                let incoming = first + j as u32;
                let outgoing = first + ((j as u32 + 1) % k);
                arc_at_port[node][in_port as usize] = incoming;
                arc_at_port[node][(in_port + 2) as usize % 4] = outgoing;
                in_ports[node][in_port as usize] = true;
            }
            ranges.push((first, first + k - 1));
            next += k;
        }
        let mut crossings = Vec::with_capacity(self.nodes.len());
        for (n, ports) in arc_at_port.iter().enumerate() {
            let under_in: u8 = if in_ports[n][0] { 0 } else { 2 };
            let over_in_port: u8 = if in_ports[n][1] { 1 } else { 3 };
            let arcs = [
                ports[under_in as usize],
                ports[(under_in + 1) as usize % 4],
                ports[(under_in + 2) as usize % 4],
                ports[(under_in + 3) as usize % 4],
            ];
            let over_in = (over_in_port + 4 - under_in) % 4;
            crossings.push(Crossing::new(arcs, over_in));
        }
        LinkDiagram::new(crossings, ranges, self.free_loops)
    }

    pub fn to_diagram(&self) -> Result<LinkDiagram, KnotError> {
        self.to_diagram_with(&[])
    }

    /// All orientation assignments of the strands, up to reversing every
    /// strand at once (the first strand's direction is pinned).
    pub fn orientations(&self) -> Result<Vec<LinkDiagram>, KnotError> {
        let n = self.strand_cycles(&[]).len();
        let mut out = Vec::new();
        let choices = 1usize << n.saturating_sub(1);
        for mask in 0..choices {
            let flip: Vec<bool> = (0..n).map(|k| k > 0 && (mask >> (k - 1)) & 1 == 1).collect();
            out.push(self.to_diagram_with(&flip)?);
        }
        Ok(out)
    }
}

/// Node-gluing surface for tangle constructions.
#[derive(Clone, Debug, Default)]
pub(crate) struct MapBuilder {
    nodes: Vec<[Option<(usize, u8)>; 4]>,
}

impl MapBuilder {
    pub fn new() -> Self {
        MapBuilder::default()
    }

    /// New node, all four ports dangling.
    pub fn add_node(&mut self) -> usize {
        self.nodes.push([None; 4]);
        self.nodes.len() - 1
    }

    pub fn glue(&mut self, a: (usize, u8), b: (usize, u8)) {
        assert!(self.nodes[a.0][a.1 as usize].is_none(), "port already glued");
        assert!(self.nodes[b.0][b.1 as usize].is_none(), "port already glued");
        self.nodes[a.0][a.1 as usize] = Some(b);
        self.nodes[b.0][b.1 as usize] = Some(a);
    }

    pub fn finish(self, free_loops: usize) -> UnoMap {
        let nodes = self
            .nodes
            .into_iter()
            .map(|ports| {
                [
                    ports[0].expect("dangling port"),
                    ports[1].expect("dangling port"),
                    ports[2].expect("dangling port"),
                    ports[3].expect("dangling port"),
                ]
            })
            .collect();
        UnoMap { nodes, free_loops }
    }
}
