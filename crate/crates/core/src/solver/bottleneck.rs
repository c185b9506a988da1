//! Bottleneck search over the token-walk state graph.
//!
//! States are (i, j, delta): sample indices of the two boundary tokens plus
//! their relative lift in sample steps, clamped to [-m, m]. A move advances
//! one token one sample step forward or backward on the boundary circle.
//! Every diagonal state (s, s, 0) is a source; the targets are the diagonal
//! states with |delta| = m, i.e. walks whose concatenated loop winds once
//! around the boundary. The objective is the minimum over walks of the
//! maximum state cost G[i][j].

use crate::error::{Error, Result};

/// Move labels; also used to replay a witness walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    AlphaFwd,
    AlphaBack,
    BetaFwd,
    BetaBack,
}

impl Move {
    fn code(self) -> u8 {
        match self {
            Move::AlphaFwd => 1,
            Move::AlphaBack => 2,
            Move::BetaFwd => 3,
            Move::BetaBack => 4,
        }
    }

    fn from_code(c: u8) -> Move {
        match c {
            1 => Move::AlphaFwd,
            2 => Move::AlphaBack,
            3 => Move::BetaFwd,
            4 => Move::BetaBack,
            _ => unreachable!("bad move code"),
        }
    }
}

const ALL_MOVES: [Move; 4] = [Move::AlphaFwd, Move::AlphaBack, Move::BetaFwd, Move::BetaBack];
const MONOTONE_MOVES: [Move; 2] = [Move::AlphaFwd, Move::BetaFwd];

#[derive(Debug, Clone, Copy)]
struct State {
    i: usize,
    j: usize,
    /// delta + m, in [0, 2m].
    d: usize,
}

struct StateSpace {
    m: usize,
    strict: bool,
}

impl StateSpace {
    fn total(&self) -> usize {
        (2 * self.m + 1) * self.m * self.m
    }

    fn id(&self, s: State) -> usize {
        (s.d * self.m + s.i) * self.m + s.j
    }

    fn decode(&self, id: usize) -> State {
        let j = id % self.m;
        let rest = id / self.m;
        let i = rest % self.m;
        let d = rest / self.m;
        State { i, j, d }
    }

    fn apply(&self, s: State, mv: Move) -> Option<State> {
        let m = self.m;
        let next = |x: usize| (x + 1) % m;
        let prev = |x: usize| (x + m - 1) % m;
        let out = match mv {
            Move::AlphaFwd => State { i: next(s.i), j: s.j, d: s.d + 1 },
            Move::AlphaBack => State { i: prev(s.i), j: s.j, d: s.d.wrapping_sub(1) },
            Move::BetaFwd => State { i: s.i, j: next(s.j), d: s.d.wrapping_sub(1) },
            Move::BetaBack => State { i: s.i, j: prev(s.j), d: s.d + 1 },
        };
        // The wrapping subtraction above turns d = -1 into usize::MAX.
        if out.d > 2 * m {
            None
        } else {
            Some(out)
        }
    }

    fn moves(&self) -> &'static [Move] {
        if self.strict {
            &MONOTONE_MOVES
        } else {
            &ALL_MOVES
        }
    }

    fn is_target(&self, s: State) -> bool {
        s.i == s.j && (s.d == 0 || s.d == 2 * self.m)
    }
}

/// Outcome of the search: optimal bottleneck value plus one witness walk
/// from a source to a target, as a state sequence.
pub struct BottleneckSolution {
    pub value: f64,
    /// (i, j) per step, source first.
    pub walk: Vec<(usize, usize)>,
    /// Net lift difference in sample steps at the end: +m or -m.
    pub final_delta: i64,
}

/// Best-first expansion ordered by state cost. Costs are first ranked
/// against the sorted distinct matrix entries, which makes the priority
/// queue a simple bucket list; each state is finalized at most once. A
/// second, breadth-first pass restricted to states at or below the optimal
/// bottleneck recovers a witness with the fewest moves, with deterministic
/// tie-breaking by scan order.
pub fn solve_bottleneck(
    matrix: &[f64],
    m: usize,
    strict: bool,
    state_cap: u64,
) -> Result<BottleneckSolution> {
    assert_eq!(matrix.len(), m * m, "matrix shape");
    let space = StateSpace { m, strict };
    let total = space.total() as u64;
    if total > state_cap {
        return Err(Error::ResourceLimit { states: total, cap: state_cap });
    }

    // Rank each matrix entry against the sorted distinct values.
    let mut distinct: Vec<f64> = matrix.to_vec();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    distinct.dedup();
    let rank_of = |v: f64| -> u32 {
        distinct.partition_point(|&x| x < v) as u32
    };
    let rank: Vec<u32> = matrix.iter().map(|&v| rank_of(v)).collect();

    let opt_rank = best_first_rank(&space, &rank, distinct.len())?;
    let value = distinct[opt_rank as usize];

    let (walk, final_delta) = witness_walk(&space, &rank, opt_rank)?;
    Ok(BottleneckSolution { value, walk, final_delta })
}

/// Phase 1: Dial-style best-first expansion; returns the optimal bottleneck
/// rank over walks from any source to any target.
fn best_first_rank(space: &StateSpace, rank: &[u32], n_ranks: usize) -> Result<u32> {
    let m = space.m;
    let total = space.total();
    let mut best = vec![u32::MAX; total];
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); n_ranks];
    // State ids fit in u32 only for modest m; guard and fall back to u64
    // never triggers under the default cap (2m+1)m^2 < 2^32.
    assert!(total < u32::MAX as usize, "state space exceeds u32 indexing");

    for s in 0..m {
        let st = State { i: s, j: s, d: m };
        let r = rank[s * m + s];
        let id = space.id(st);
        if r < best[id] {
            best[id] = r;
            buckets[r as usize].push(id as u32);
        }
    }

    for cur in 0..n_ranks as u32 {
        let mut k = 0;
        // Bucket grows while we drain it; index manually.
        while k < buckets[cur as usize].len() {
            let id = buckets[cur as usize][k] as usize;
            k += 1;
            if best[id] != cur {
                continue;
            }
            let st = space.decode(id);
            if space.is_target(st) {
                return Ok(cur);
            }
            for &mv in space.moves() {
                if let Some(ns) = space.apply(st, mv) {
                    let nid = space.id(ns);
                    let nr = cur.max(rank[ns.i * m + ns.j]);
                    if nr < best[nid] {
                        best[nid] = nr;
                        buckets[nr as usize].push(nid as u32);
                    }
                }
            }
        }
        buckets[cur as usize] = Vec::new();
    }
    Err(Error::NoPath)
}

/// Phase 2: breadth-first search over states whose cost rank does not
/// exceed the optimal bottleneck, recovering a fewest-moves witness. Each
/// state stores only the move that reached it; the walk is rebuilt by
/// undoing moves back to a source.
fn witness_walk(
    space: &StateSpace,
    rank: &[u32],
    opt_rank: u32,
) -> Result<(Vec<(usize, usize)>, i64)> {
    let m = space.m;
    let total = space.total();
    // 0 = unvisited, 5 = source, otherwise Move code.
    let mut came = vec![0u8; total];
    let mut queue = std::collections::VecDeque::new();

    for s in 0..m {
        if rank[s * m + s] > opt_rank {
            continue;
        }
        let id = space.id(State { i: s, j: s, d: m });
        came[id] = 5;
        queue.push_back(id as u32);
    }

    let mut target = None;
    'bfs: while let Some(id) = queue.pop_front() {
        let st = space.decode(id as usize);
        if space.is_target(st) {
            target = Some(id as usize);
            break 'bfs;
        }
        for &mv in space.moves() {
            if let Some(ns) = space.apply(st, mv) {
                if rank[ns.i * m + ns.j] > opt_rank {
                    continue;
                }
                let nid = space.id(ns);
                if came[nid] == 0 {
                    came[nid] = mv.code();
                    queue.push_back(nid as u32);
                }
            }
        }
    }
    let Some(target) = target else {
        return Err(Error::NoPath);
    };

    // Undo moves back to the source.
    let mut rev = Vec::new();
    let mut cur = space.decode(target);
    let final_delta = cur.d as i64 - m as i64;
    rev.push((cur.i, cur.j));
    loop {
        let code = came[space.id(cur)];
        if code == 5 {
            break;
        }
        let mv = Move::from_code(code);
        let undo = match mv {
            Move::AlphaFwd => Move::AlphaBack,
            Move::AlphaBack => Move::AlphaFwd,
            Move::BetaFwd => Move::BetaBack,
            Move::BetaBack => Move::BetaFwd,
        };
        // Undoing ignores the strict-mode move filter.
        let relaxed = StateSpace { m, strict: false };
        cur = relaxed.apply(cur, undo).expect("undo stays in range");
        rev.push((cur.i, cur.j));
    }
    rev.reverse();
    Ok((rev, final_delta))
}
