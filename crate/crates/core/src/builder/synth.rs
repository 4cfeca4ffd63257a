//! Turns a plan into a permutation tuple.
//!
//! Stars are numbered: cycle stars first in cycle order, then branch and gap
//! trees depth-first. Each colored vertex contributes one cycle to its
//! color's rotation: at a cycle vertex the incident stars are ordered as
//! (cycle-predecessor star, interior branch roots, cycle-successor star,
//! exterior branch roots); at a grown tip, parent star first, then the stars
//! glued there. With the cycle stored in clockwise drawing order this is the
//! counterclockwise rotation, and the face permutation
//! `g_q = (g_1 ... g_{q-1})^{-1}` splits into the two intended faces.

use super::plan::{Side, StarTree, SunflowerPlan};
use super::BuildError;
use crate::constellation::{ConstellationTuple, Perm};
use crate::passport::Partition;

struct Synth {
    /// Rotation lists per color (index 0 unused).
    rotations: Vec<Vec<Vec<usize>>>,
    next_star: usize,
}

impl Synth {
    /// Assigns ids to the stars of `tree` (root first), records the rotation
    /// cycles of its grown tips, and returns the root id.
    fn emit_tree(&mut self, tree: &StarTree) -> usize {
        let root = self.next_star;
        self.next_star += 1;
        for (color, children) in &tree.grown {
            let mut vertex = vec![root];
            for child in children {
                vertex.push(self.emit_tree(child));
            }
            self.rotations[*color].push(vertex);
        }
        root
    }
}

/// Synthesizes the permutation tuple of a plan and checks the result: two
/// faces of sizes `{s, n-s}`, transitivity and genus 0. Any failure is a
/// construction bug and is reported as `PlanInconsistent`, never silently.
pub fn synthesize(plan: &SunflowerPlan) -> Result<ConstellationTuple, BuildError> {
    plan.check_structure().map_err(|msg| BuildError::PlanInconsistent { detail: msg })?;
    let m = plan.cycle.len();
    let n = plan.star_count();
    let r = plan.r;

    let mut synth = Synth { rotations: vec![Vec::new(); r + 1], next_star: m };

    // Cycle vertices: branches in listed order, interior before exterior.
    let mut node_interior: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut node_exterior: Vec<Vec<usize>> = vec![Vec::new(); m];
    for branch in &plan.branches {
        let root = synth.emit_tree(&branch.tree);
        match branch.side {
            Side::Interior => node_interior[branch.node].push(root),
            Side::Exterior => node_exterior[branch.node].push(root),
        }
    }
    for growth in &plan.gap_growth {
        let mut vertex = vec![growth.gap];
        for tree in &growth.trees {
            vertex.push(synth.emit_tree(tree));
        }
        synth.rotations[growth.color].push(vertex);
    }
    for (t, node) in plan.cycle.iter().enumerate() {
        let prev_star = (t + m - 1) % m;
        let next_star = t;
        let mut vertex = vec![prev_star];
        vertex.extend(&node_interior[t]);
        vertex.push(next_star);
        vertex.extend(&node_exterior[t]);
        synth.rotations[node.color].push(vertex);
    }
    debug_assert_eq!(synth.next_star, n);

    let mut perms = Vec::with_capacity(r);
    for color in 1..=r {
        let mut images: Vec<usize> = (0..n).collect();
        for vertex in &synth.rotations[color] {
            for w in 0..vertex.len() {
                images[vertex[w]] = vertex[(w + 1) % vertex.len()];
            }
        }
        let perm = Perm::from_images(images).map_err(|_| BuildError::PlanInconsistent {
            detail: format!("rotation lists for color {color} overlap"),
        })?;
        perms.push(perm);
    }

    let tuple = ConstellationTuple::from_rotations(n, perms)
        .map_err(|e| BuildError::PlanInconsistent { detail: e.to_string() })?;

    let s = plan.interior_size;
    if plan.interior_size_computed() != s {
        return Err(BuildError::PlanInconsistent {
            detail: format!(
                "plan accounting: interior size {} != intended {s}",
                plan.interior_size_computed()
            ),
        });
    }
    let face_type = tuple.face().cycle_type();
    if face_type != Partition::new(vec![s, n - s]) {
        return Err(BuildError::PlanInconsistent {
            detail: format!("face cycle type {face_type} is not {{{s},{}}}", n - s),
        });
    }
    if !tuple.is_transitive() {
        return Err(BuildError::PlanInconsistent { detail: "tuple not transitive".into() });
    }
    match tuple.genus() {
        Ok(0) => {}
        Ok(g) => {
            return Err(BuildError::PlanInconsistent { detail: format!("genus {g}, expected 0") })
        }
        Err(e) => return Err(BuildError::PlanInconsistent { detail: e.to_string() }),
    }
    debug_assert_eq!(
        {
            let mut got: Vec<Partition> = tuple.colored().iter().map(Perm::cycle_type).collect();
            got.sort();
            got
        },
        {
            let mut want = plan.valency_datum();
            want.sort();
            want
        }
    );
    Ok(tuple)
}

#[cfg(test)]
mod tests {
    use super::super::plan::{Branch, GapGrowth, PlanNode};
    use super::*;

    fn node(color: usize) -> PlanNode {
        PlanNode { color }
    }

    #[test]
    fn bigon_synthesizes_to_transposition_pair() {
        let plan = SunflowerPlan {
            r: 2,
            cycle: vec![node(1), node(2)],
            branches: vec![],
            gap_growth: vec![],
            interior_size: 1,
        };
        let t = synthesize(&plan).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.face().cycle_type(), Partition::new(vec![1, 1]));
    }

    #[test]
    fn square_cycle_synthesizes_klein_type() {
        let plan = SunflowerPlan {
            r: 2,
            cycle: vec![node(1), node(2), node(1), node(2)],
            branches: vec![],
            gap_growth: vec![],
            interior_size: 2,
        };
        let t = synthesize(&plan).unwrap();
        for p in t.perms() {
            assert_eq!(p.cycle_type(), Partition::new(vec![2, 2]));
        }
    }

    #[test]
    fn pendant_chain_gives_unequal_faces() {
        // Bigon; 2-vertex valency 3; pendant's 1-tip grown once: the tuple
        // for {2,2}, {1,3} with face {1,3}.
        let plan = SunflowerPlan {
            r: 2,
            cycle: vec![node(1), node(2)],
            branches: vec![Branch {
                node: 1,
                side: Side::Exterior,
                tree: StarTree { grown: vec![(1, vec![StarTree::leaf_star()])] },
            }],
            gap_growth: vec![],
            interior_size: 1,
        };
        let t = synthesize(&plan).unwrap();
        assert_eq!(t.degree(), 4);
        assert_eq!(t.face().cycle_type(), Partition::new(vec![1, 3]));
    }

    #[test]
    fn interior_exterior_choice_moves_the_small_face() {
        // Cycle (1,2,1,2) with one pendant star at a 2-vertex: faces {2,3}
        // exterior (s = 2) or {3,2} when shifted (s = 3).
        let base = SunflowerPlan {
            r: 2,
            cycle: vec![node(1), node(2), node(1), node(2)],
            branches: vec![Branch {
                node: 1,
                side: Side::Exterior,
                tree: StarTree::leaf_star(),
            }],
            gap_growth: vec![],
            interior_size: 2,
        };
        let t = synthesize(&base).unwrap();
        assert_eq!(t.face().cycle_type(), Partition::new(vec![2, 3]));

        let mut shifted = base;
        shifted.branches[0].side = Side::Interior;
        shifted.interior_size = 3;
        let t = synthesize(&shifted).unwrap();
        assert_eq!(t.face().cycle_type(), Partition::new(vec![2, 3]));
    }

    #[test]
    fn descending_gap_has_interior_one_tip() {
        // r = 3, cycle (1, 3, 2): the (3, 2) gap faces the interior with its
        // 1-tip, so s = 1 (cycle vertex) + 1 (interior leaf) = 2.
        let plan = SunflowerPlan {
            r: 3,
            cycle: vec![node(1), node(3), node(2)],
            branches: vec![],
            gap_growth: vec![],
            interior_size: 2,
        };
        let t = synthesize(&plan).unwrap();
        assert_eq!(t.degree(), 3);
        assert_eq!(t.face().cycle_type(), Partition::new(vec![1, 2]));
    }

    #[test]
    fn gap_growth_attaches_at_cycle_star_tips() {
        // r = 3, cycle (1, 2, 3); grow the exterior 1-tip of the (2,3) star.
        let plan = SunflowerPlan {
            r: 3,
            cycle: vec![node(1), node(2), node(3)],
            branches: vec![],
            gap_growth: vec![GapGrowth { gap: 1, color: 1, trees: vec![StarTree::leaf_star()] }],
            interior_size: 1,
        };
        let t = synthesize(&plan).unwrap();
        assert_eq!(t.degree(), 4);
        assert_eq!(t.face().cycle_type(), Partition::new(vec![1, 3]));
    }
}
