//! Symbolic description of a cycle-with-branches two-face constellation,
//! prior to permutation synthesis.
//!
//! The cycle is a closed alternating sequence of colored vertices listed in
//! clockwise drawing order; one star sits between consecutive vertices. Trees
//! of further stars hang at cycle vertices (shiftable between the interior
//! and exterior face) or at leaf tips of cycle stars (side forced by the tip
//! position). The intended interior face size obeys
//!
//! `s = #(color-1 cycle vertices) + #(cycle stars with an interior 1-tip)
//!      + sum of interior branch weights`
//!
//! where a branch's weight is its star count.

use crate::passport::Partition;

/// Which face a branch hangs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Interior,
    Exterior,
}

/// A colored vertex on the skeleton cycle. Its valency is `2` plus the
/// number of branches anchored at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanNode {
    /// Color in `1..=r`.
    pub color: usize,
}

/// One star of a branch: glued to its parent vertex at the tip of the
/// parent's color; each entry of `grown` lists a tip color and the stars
/// glued at that tip vertex. Tips not listed are leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTree {
    pub grown: Vec<(usize, Vec<StarTree>)>,
}

impl StarTree {
    pub fn leaf_star() -> Self {
        StarTree { grown: Vec::new() }
    }

    /// Number of stars in the tree.
    pub fn weight(&self) -> usize {
        1 + self
            .grown
            .iter()
            .map(|(_, children)| children.iter().map(StarTree::weight).sum::<usize>())
            .sum::<usize>()
    }
}

/// A shiftable unit: one root star (plus its subtree) anchored at a cycle
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub node: usize,
    pub side: Side,
    pub tree: StarTree,
}

/// Stars glued at a leaf tip of a cycle star. The tip's side is determined
/// by the colors adjacent to the gap, so no side is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapGrowth {
    /// Index of the cycle star (between cycle vertices `gap` and `gap + 1`).
    pub gap: usize,
    /// Tip color; must differ from both adjacent vertex colors.
    pub color: usize,
    pub trees: Vec<StarTree>,
}

/// Plan for a two-face constellation with prescribed interior size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunflowerPlan {
    pub r: usize,
    pub cycle: Vec<PlanNode>,
    pub branches: Vec<Branch>,
    pub gap_growth: Vec<GapGrowth>,
    /// Intended interior face size.
    pub interior_size: usize,
}

/// Colors strictly between `a` and `b` walking cyclically upward through
/// `1..=r`; these are the tips of an `(a, b)` cycle star facing the interior
/// face. The complement `cyclic_open(b, a)` faces the exterior.
pub fn cyclic_open(a: usize, b: usize, r: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut c = a % r + 1;
    while c != b {
        out.push(c);
        c = c % r + 1;
    }
    out
}

impl SunflowerPlan {
    pub fn star_count(&self) -> usize {
        self.cycle.len()
            + self.branches.iter().map(|b| b.tree.weight()).sum::<usize>()
            + self
                .gap_growth
                .iter()
                .map(|g| g.trees.iter().map(StarTree::weight).sum::<usize>())
                .sum::<usize>()
    }

    pub fn gap_colors(&self, gap: usize) -> (usize, usize) {
        let m = self.cycle.len();
        (self.cycle[gap].color, self.cycle[(gap + 1) % m].color)
    }

    /// Side of the tip of color `c` on cycle star `gap`.
    pub fn tip_side(&self, gap: usize, c: usize) -> Side {
        let (a, b) = self.gap_colors(gap);
        debug_assert!(c != a && c != b);
        if cyclic_open(a, b, self.r).contains(&c) {
            Side::Interior
        } else {
            Side::Exterior
        }
    }

    /// Interior face size computed from the structure; must equal
    /// `interior_size` for a consistent plan.
    pub fn interior_size_computed(&self) -> usize {
        let mut s = self.cycle.iter().filter(|node| node.color == 1).count();
        for gap in 0..self.cycle.len() {
            let (a, b) = self.gap_colors(gap);
            if a != 1 && b != 1 && cyclic_open(a, b, self.r).contains(&1) {
                s += 1;
            }
        }
        for branch in &self.branches {
            if branch.side == Side::Interior {
                s += branch.tree.weight();
            }
        }
        for growth in &self.gap_growth {
            if self.tip_side(growth.gap, growth.color) == Side::Interior {
                s += growth.trees.iter().map(StarTree::weight).sum::<usize>();
            }
        }
        s
    }

    /// Valencies of every colored vertex, per color, including valency-1
    /// leaves; for a sound plan this equals the target colored partitions.
    pub fn valency_datum(&self) -> Vec<Partition> {
        let m = self.cycle.len();
        let mut per_color: Vec<Vec<usize>> = vec![Vec::new(); self.r + 1];

        let mut node_extra = vec![0usize; m];
        for branch in &self.branches {
            node_extra[branch.node] += 1;
        }
        for (t, node) in self.cycle.iter().enumerate() {
            per_color[node.color].push(2 + node_extra[t]);
        }

        for gap in 0..m {
            let (a, b) = self.gap_colors(gap);
            for (c, bucket) in per_color.iter_mut().enumerate().skip(1) {
                if c == a || c == b {
                    continue;
                }
                let grown: usize = self
                    .gap_growth
                    .iter()
                    .filter(|g| g.gap == gap && g.color == c)
                    .map(|g| g.trees.len())
                    .sum();
                bucket.push(1 + grown);
            }
        }

        fn walk(tree: &StarTree, anchor_color: usize, r: usize, per_color: &mut [Vec<usize>]) {
            for c in 1..=r {
                if c == anchor_color {
                    continue;
                }
                match tree.grown.iter().find(|(gc, _)| *gc == c) {
                    Some((_, children)) => {
                        per_color[c].push(1 + children.len());
                        for child in children {
                            walk(child, c, r, per_color);
                        }
                    }
                    None => per_color[c].push(1),
                }
            }
        }
        for branch in &self.branches {
            walk(&branch.tree, self.cycle[branch.node].color, self.r, &mut per_color);
        }
        for growth in &self.gap_growth {
            for tree in &growth.trees {
                walk(tree, growth.color, self.r, &mut per_color);
            }
        }

        per_color.into_iter().skip(1).map(Partition::new).collect()
    }

    /// Structural checks that do not depend on a passport: colors in range,
    /// adjacent cycle colors distinct, gap growth on legal tips, tree colors
    /// consistent.
    pub fn check_structure(&self) -> Result<(), String> {
        let m = self.cycle.len();
        if self.r < 2 {
            return Err("need at least two colors".into());
        }
        if m < 2 {
            return Err("cycle needs at least two vertices".into());
        }
        for (t, node) in self.cycle.iter().enumerate() {
            if node.color < 1 || node.color > self.r {
                return Err(format!("cycle vertex {t} has color {} out of range", node.color));
            }
            let next = self.cycle[(t + 1) % m].color;
            if node.color == next {
                return Err(format!("cycle vertices {t} and next share color {}", node.color));
            }
        }
        fn check_tree(tree: &StarTree, anchor: usize, r: usize) -> Result<(), String> {
            let mut seen = vec![false; r + 1];
            for (c, children) in &tree.grown {
                if *c < 1 || *c > r || *c == anchor {
                    return Err(format!("tree grows illegal tip color {c}"));
                }
                if seen[*c] {
                    return Err(format!("tree grows tip color {c} twice"));
                }
                seen[*c] = true;
                for child in children {
                    check_tree(child, *c, r)?;
                }
            }
            Ok(())
        }
        for branch in &self.branches {
            if branch.node >= m {
                return Err("branch anchored at missing cycle vertex".into());
            }
            check_tree(&branch.tree, self.cycle[branch.node].color, self.r)?;
        }
        for growth in &self.gap_growth {
            if growth.gap >= m {
                return Err("gap growth on missing cycle star".into());
            }
            let (a, b) = self.gap_colors(growth.gap);
            if growth.color == a || growth.color == b || growth.color < 1 || growth.color > self.r
            {
                return Err(format!(
                    "gap growth color {} collides with gap ({a},{b})",
                    growth.color
                ));
            }
            for tree in &growth.trees {
                check_tree(tree, growth.color, self.r)?;
            }
        }
        Ok(())
    }
}
