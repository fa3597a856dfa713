//! Two internally disjoint `s`-`t` paths in an acyclic oriented graph whose
//! Hamiltonian path `P` has every internal vertex covered by some edge.
//!
//! Vertices are the positions `0..len` along `P` (`s = 0`, `t = len - 1`);
//! every edge points forward.

use crate::error::{Error, Result};

/// `edges` may omit the path edges `(i, i + 1)`; they are implied.
pub fn oriented_two_paths(len: usize, edges: &[(usize, usize)]) -> Result<(Vec<usize>, Vec<usize>)> {
    if len < 2 {
        return Err(Error::Precondition("a path needs at least two vertices".into()));
    }
    let t = len - 1;
    // farthest head reachable from each tail
    let mut reach: Vec<usize> = (0..len).map(|i| (i + 1).min(t)).collect();
    for &(a, b) in edges {
        if a >= b || b > t {
            return Err(Error::Precondition(format!("edge {a}->{b} does not point forward along the path")));
        }
        reach[a] = reach[a].max(b);
    }
    // x is covered iff some tail before x reaches past x
    let mut best = 0;
    for x in 1..t {
        best = best.max(reach[x - 1]);
        if best <= x {
            return Err(Error::Precondition(format!("internal vertex at position {x} is not covered")));
        }
    }

    // v_0: farthest out-neighbour of s; v_i: farthest head over tails in [s, v_{i-1}),
    // u_i: the greatest such tail
    let mut us = vec![0];
    let mut vs = vec![reach[0]];
    while *vs.last().unwrap() != t {
        let prev = *vs.last().unwrap();
        let head = (0..prev).map(|a| reach[a]).max().unwrap();
        debug_assert!(head > prev);
        let tail = (0..prev).rev().find(|&a| reach[a] == head).unwrap();
        us.push(tail);
        vs.push(head);
    }

    let build = |k: usize| {
        let mut path = vec![0];
        let mut p = 0;
        while p != t {
            p = match (0..us.len()).find(|&i| i % 2 == k && us[i] == p) {
                Some(i) => vs[i],
                None => p + 1,
            };
            path.push(p);
        }
        path
    };
    Ok((build(0), build(1)))
}
