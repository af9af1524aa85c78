use std::collections::HashMap;
use std::hash::Hash;

use super::group::{Group, PermGroup};
use super::perm::Perm;
use crate::error::{invalid, Result};

/// One orbit: point indices into the caller's list, representative first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// The action table of `g` on `points`: `table[s][i]` is the index of the
/// image of point `i` under generator `s`.
fn generator_table<G, P, A>(g: &G, points: &[P], act: &A) -> Result<(Vec<usize>, Vec<Vec<usize>>)>
where
    G: Group + ?Sized,
    P: Hash + Eq,
    A: Fn(usize, &P) -> P,
{
    let index: HashMap<&P, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if index.len() != points.len() {
        return Err(invalid("duplicate points in orbit computation"));
    }
    let gens = g.generators();
    let mut table = Vec::with_capacity(gens.len());
    for &s in &gens {
        let mut row = Vec::with_capacity(points.len());
        for p in points {
            let q = act(s, p);
            let j = *index
                .get(&q)
                .ok_or_else(|| invalid("action is not closed on the point list"))?;
            row.push(j);
        }
        table.push(row);
    }
    Ok((gens, table))
}

/// Orbits of a group action given on element indices. Representatives are the
/// least point (in list order) of each orbit, and orbits are listed by
/// representative.
pub fn orbits_by_index<G, P, A>(g: &G, points: &[P], act: A) -> Result<Vec<Orbit>>
where
    G: Group + ?Sized,
    P: Hash + Eq,
    A: Fn(usize, &P) -> P,
{
    let (_, table) = generator_table(g, points, &act)?;
    let mut seen = vec![false; points.len()];
    let mut out = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for row in &table {
                let y = row[x];
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(Orbit {
            representative: start,
            members,
        });
    }
    Ok(out)
}

/// Orbits of a permutation group under an action callback on permutations.
pub fn orbits<P, A>(g: &PermGroup, points: &[P], act: A) -> Result<Vec<Orbit>>
where
    P: Hash + Eq,
    A: Fn(&Perm, &P) -> P,
{
    orbits_by_index(g, points, |i, p| act(g.element(i), p))
}

/// The isotropy group of `point` in `g`.
pub fn stabilizer<P, A>(g: &PermGroup, point: &P, act: A) -> PermGroup
where
    P: Eq,
    A: Fn(&Perm, &P) -> P,
{
    g.filter_subgroup(|w| act(w, point) == *point)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act_on_set(w: &Perm, s: &Vec<usize>) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().map(|&x| w.apply(x)).collect();
        v.sort();
        v
    }

    #[test]
    fn s2_on_subsets() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let pts = vec![vec![], vec![0], vec![1], vec![0, 1]];
        let orbs = orbits(&s2, &pts, act_on_set).unwrap();
        assert_eq!(orbs.len(), 3);
        assert_eq!(orbs[1].members, vec![1, 2]);
        assert_eq!(orbs[1].representative, 1);
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let g = PermGroup::trivial(3);
        let pts: Vec<usize> = (0..7).collect();
        assert_eq!(orbits(&g, &pts, |_, &p| p).unwrap().len(), 7);
    }

    #[test]
    fn orbit_stabilizer() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let mut pts = Vec::new();
        for m in 0u32..16 {
            pts.push((0..4).filter(|i| m >> i & 1 == 1).collect::<Vec<usize>>());
        }
        for o in orbits(&s4, &pts, act_on_set).unwrap() {
            let st = stabilizer(&s4, &pts[o.representative], act_on_set);
            assert_eq!(o.members.len() * st.order(), 24);
        }
    }

    #[test]
    fn non_closed_action_rejected() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let pts = vec![vec![0usize]];
        assert!(orbits(&s2, &pts, act_on_set).is_err());
        assert!(orbits(&s2, &[1usize, 1], |_, &p| p).is_err());
    }
}
