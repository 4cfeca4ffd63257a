//! Shared planner machinery: a mutable star arena that the per-case planners
//! grow, plus the greedy placement of leftover valencies as exterior trees.

use super::plan::{cyclic_open, Branch, GapGrowth, PlanNode, Side, StarTree, SunflowerPlan};
use crate::passport::{derived, LaurentPassport};
use std::collections::{BTreeMap, BTreeSet};

/// Canonical passport digest used by all planners. Vectors are 0-indexed by
/// color minus one; `b` rows are weakly increasing.
pub(super) struct Digest {
    pub r: usize,
    pub n: usize,
    pub s: usize,
    pub q: Vec<usize>,
    pub b: Vec<Vec<usize>>,
    pub sum_rest: usize,
}

impl Digest {
    pub fn of(p: &LaurentPassport) -> Self {
        let stats = derived(p);
        let q: Vec<usize> = stats.rows.iter().map(|row| row.q).collect();
        let b: Vec<Vec<usize>> = stats.rows.iter().map(|row| row.b.clone()).collect();
        let sum_rest = q[1..].iter().sum();
        Digest { r: p.r(), n: p.n(), s: p.s(), q, b, sum_rest }
    }
}

/// A place where stars can be glued: a cycle vertex, the tip of a cycle star,
/// or the tip of an already-placed star.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum VertexRef {
    Node(usize),
    GapTip { gap: usize, color: usize },
    Tip { star: usize, color: usize },
}

struct ProtoStar {
    anchor_color: usize,
    grown: BTreeMap<usize, Vec<usize>>,
}

/// Stars under construction, keyed by insertion id. Cycle stars are implicit;
/// ids refer only to branch/growth stars.
pub(super) struct Arena {
    pub r: usize,
    pub cycle: Vec<usize>,
    stars: Vec<ProtoStar>,
    node_roots: Vec<Vec<usize>>,
    gap_roots: BTreeMap<(usize, usize), Vec<usize>>,
}

impl Arena {
    pub fn new(r: usize, cycle: Vec<usize>) -> Self {
        let m = cycle.len();
        Arena { r, cycle, stars: Vec::new(), node_roots: vec![Vec::new(); m], gap_roots: BTreeMap::new() }
    }

    pub fn anchor_color(&self, at: VertexRef) -> usize {
        match at {
            VertexRef::Node(t) => self.cycle[t],
            VertexRef::GapTip { color, .. } => color,
            VertexRef::Tip { color, .. } => color,
        }
    }

    /// Glues `k` fresh stars at the given vertex and returns their ids.
    pub fn add_stars(&mut self, at: VertexRef, k: usize) -> Vec<usize> {
        let anchor_color = self.anchor_color(at);
        let mut ids = Vec::with_capacity(k);
        for _ in 0..k {
            let id = self.stars.len();
            self.stars.push(ProtoStar { anchor_color, grown: BTreeMap::new() });
            ids.push(id);
        }
        match at {
            VertexRef::Node(t) => self.node_roots[t].extend(&ids),
            VertexRef::GapTip { gap, color } => {
                self.gap_roots.entry((gap, color)).or_default().extend(&ids)
            }
            VertexRef::Tip { star, color } => {
                debug_assert_ne!(self.stars[star].anchor_color, color);
                self.stars[star].grown.entry(color).or_default().extend(&ids)
            }
        }
        ids
    }

    pub fn star_anchor_color(&self, id: usize) -> usize {
        self.stars[id].anchor_color
    }

    fn tree_of(&self, id: usize) -> StarTree {
        StarTree {
            grown: self.stars[id]
                .grown
                .iter()
                .map(|(&c, kids)| (c, kids.iter().map(|&k| self.tree_of(k)).collect()))
                .collect(),
        }
    }

    /// Finalizes the plan. Roots listed in `interior` (node-anchored only)
    /// hang in the interior face.
    pub fn into_plan(self, interior: &BTreeSet<usize>, interior_size: usize) -> SunflowerPlan {
        let mut branches = Vec::new();
        for (t, roots) in self.node_roots.iter().enumerate() {
            for &root in roots {
                branches.push(Branch {
                    node: t,
                    side: if interior.contains(&root) { Side::Interior } else { Side::Exterior },
                    tree: self.tree_of(root),
                });
            }
        }
        let gap_growth = self
            .gap_roots
            .iter()
            .map(|(&(gap, color), roots)| GapGrowth {
                gap,
                color,
                trees: roots.iter().map(|&id| self.tree_of(id)).collect(),
            })
            .collect();
        SunflowerPlan {
            r: self.r,
            cycle: self.cycle.iter().map(|&color| PlanNode { color }).collect(),
            branches,
            gap_growth,
            interior_size,
        }
    }
}

/// Greedy placement of leftover valencies as exterior trees hanging off open
/// tips. Every placed value `v` of color `c` consumes one open `c`-tip and
/// glues `v - 1` stars there, each opening fresh tips of the other colors.
pub(super) struct Dump {
    open: Vec<Vec<VertexRef>>,
}

impl Dump {
    pub fn new(r: usize) -> Self {
        Dump { open: vec![Vec::new(); r + 1] }
    }

    pub fn offer(&mut self, color: usize, tip: VertexRef) {
        self.open[color].push(tip);
    }

    /// Offers every exterior-side tip of every cycle star.
    pub fn seed_gap_tips(&mut self, arena: &Arena) {
        let m = arena.cycle.len();
        for gap in 0..m {
            let a = arena.cycle[gap];
            let b = arena.cycle[(gap + 1) % m];
            for c in cyclic_open(b, a, arena.r) {
                self.offer(c, VertexRef::GapTip { gap, color: c });
            }
        }
    }

    /// Offers every tip of a freshly created star.
    pub fn seed_star(&mut self, arena: &Arena, id: usize) {
        let anchor = arena.star_anchor_color(id);
        for c in 1..=arena.r {
            if c != anchor {
                self.offer(c, VertexRef::Tip { star: id, color: c });
            }
        }
    }

    /// Places all leftover values (`leftovers[color - 1]`, weakly increasing)
    /// and exhausts them, preferring the color with the most pending values.
    pub fn run(&mut self, arena: &mut Arena, leftovers: &mut [Vec<usize>]) -> Result<(), String> {
        loop {
            let mut pick = None;
            for color in 1..=arena.r {
                if leftovers[color - 1].is_empty() || self.open[color].is_empty() {
                    continue;
                }
                if pick.is_none_or(|p: usize| leftovers[color - 1].len() > leftovers[p - 1].len())
                {
                    pick = Some(color);
                }
            }
            let Some(color) = pick else {
                if leftovers.iter().all(Vec::is_empty) {
                    return Ok(());
                }
                return Err("value placement deadlocked with open tips exhausted".into());
            };
            let value = leftovers[color - 1].pop().unwrap();
            let tip = self.open[color].pop().unwrap();
            let ids = arena.add_stars(tip, value - 1);
            for id in ids {
                self.seed_star(arena, id);
            }
        }
    }
}
