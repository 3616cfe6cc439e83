// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Experiment harness: the exhaustive happy-leaf search and the
//! approximation-ratio tables on the hard families.

use rayon::prelude::*;
use serde::Serialize;
use tokswap::approx::{cycle_algorithm, happy_swap_algorithm, vaughan_algorithm};
use tokswap::constructions::{gen_tk, gen_tkb_any_parity};
use tokswap::enumerate::free_trees;
use tokswap::perm::next_permutation;
use tokswap::{all_distances, distance_metrics, DistanceTable, Error, Instance, Result, Tree};

/// Largest tree size the search accepts.
pub const SEARCH_CAP: usize = 10;

/// A placement whose initially happy leaves cannot all stay put in an
/// optimal sort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub placement: Vec<usize>,
    pub happy_leaves: Vec<usize>,
    /// Optimum on the whole tree.
    pub unrestricted: u32,
    /// Optimum with the happy leaves deleted.
    pub restricted: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub max_n: usize,
    pub trees_checked: usize,
    pub placements_checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

/// Looks for counterexamples on every tree with `3..=max_n` vertices.
///
/// Trees on two vertices or fewer have no placement with a happy leaf
/// that is not already sorted.
pub fn happy_leaf_search(max_n: usize) -> Result<SearchReport> {
    if max_n > SEARCH_CAP {
        return Err(Error::TooLarge {
            n: max_n,
            cap: SEARCH_CAP,
        });
    }
    let trees: Vec<Tree> = (3..=max_n).flat_map(free_trees).collect();
    let results: Vec<(u64, Vec<Counterexample>)> =
        trees.par_iter().map(search_tree).collect::<Result<_>>()?;
    let mut report = SearchReport {
        max_n,
        trees_checked: trees.len(),
        placements_checked: 0,
        counterexamples: Vec::new(),
    };
    for (count, found) in results {
        report.placements_checked += count;
        report.counterexamples.extend(found);
    }
    report
        .counterexamples
        .sort_by(|a, b| (a.n, &a.edges, &a.placement).cmp(&(b.n, &b.edges, &b.placement)));
    Ok(report)
}

struct Restricted {
    table: DistanceTable,
    map: Vec<Option<usize>>,
}

/// Checks every placement of one tree. Returns the number of placements
/// examined and the counterexamples, in lexicographic placement order.
///
/// For a placement whose happy leaves form the set `S`, the restricted
/// optimum is the distance of the induced placement on `T - S`.
pub fn search_tree(tree: &Tree) -> Result<(u64, Vec<Counterexample>)> {
    let n = tree.n();
    if n > SEARCH_CAP {
        return Err(Error::TooLarge { n, cap: SEARCH_CAP });
    }
    let full = all_distances(tree)?;
    let leaves = tree.leaves();
    let mut by_subset: Vec<Option<Restricted>> = Vec::with_capacity(1 << leaves.len());
    for mask in 0usize..1 << leaves.len() {
        let removed: Vec<usize> = (0..leaves.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| leaves[i])
            .collect();
        if mask == 0 || removed.len() >= n {
            by_subset.push(None);
            continue;
        }
        let (rest, map) = tree.remove_vertices(&removed)?;
        by_subset.push(Some(Restricted {
            table: all_distances(&rest)?,
            map,
        }));
    }

    let mut found = Vec::new();
    let mut count = 0u64;
    let mut p: Vec<usize> = (0..n).collect();
    let mut induced = Vec::with_capacity(n);
    loop {
        count += 1;
        let mask = leaves
            .iter()
            .enumerate()
            .filter(|&(_, &l)| p[l] == l)
            .fold(0usize, |m, (i, _)| m | 1 << i);
        if let Some(sub) = &by_subset[mask] {
            let d = full.distance(&p);
            induced.clear();
            induced.resize(sub.table.n(), 0);
            for (v, &t) in p.iter().enumerate() {
                if let Some(w) = sub.map[v] {
                    induced[w] = sub.map[t].expect("happy tokens stay on removed leaves");
                }
            }
            let r = sub.table.distance(&induced);
            if r > d {
                found.push(Counterexample {
                    n,
                    edges: tree.edges().iter().map(|&(u, v)| [u, v]).collect(),
                    placement: p.clone(),
                    happy_leaves: (0..leaves.len())
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| leaves[i])
                        .collect(),
                    unrestricted: d,
                    restricted: r,
                });
            }
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    Ok((count, found))
}

/// One line of a ratio table. Costs of algorithms that were skipped are
/// left empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub family: String,
    pub k: usize,
    pub b: Option<usize>,
    pub n: usize,
    pub distance_sum: u64,
    pub companion: u64,
    pub reversal: Option<u64>,
    pub happy_swap: Option<u64>,
    pub cycle: Option<u64>,
    pub vaughan: Option<u64>,
    pub reversal_ratio: Option<f64>,
    pub happy_swap_ratio: Option<f64>,
    pub cycle_ratio: Option<f64>,
    pub vaughan_ratio: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioFamily {
    Tk,
    Tkb,
}

fn ratio(x: Option<u64>, companion: u64) -> Option<f64> {
    x.map(|x| x as f64 / companion as f64)
}

fn fill(
    family: &str,
    k: usize,
    b: Option<usize>,
    inst: &Instance,
    companion: u64,
    reversal: Option<u64>,
    approx: bool,
) -> Result<RatioRow> {
    let run = |f: fn(&Instance) -> Result<tokswap::SwapSequence>| -> Result<Option<u64>> {
        if approx {
            Ok(Some(f(inst)?.len() as u64))
        } else {
            Ok(None)
        }
    };
    let happy_swap = run(happy_swap_algorithm)?;
    let cycle = run(cycle_algorithm)?;
    let vaughan = run(vaughan_algorithm)?;
    Ok(RatioRow {
        family: family.into(),
        k,
        b,
        n: inst.n(),
        distance_sum: distance_metrics(inst)?.total,
        companion,
        reversal,
        happy_swap,
        cycle,
        vaughan,
        reversal_ratio: ratio(reversal, companion),
        happy_swap_ratio: ratio(happy_swap, companion),
        cycle_ratio: ratio(cycle, companion),
        vaughan_ratio: ratio(vaughan, companion),
    })
}

pub fn tk_row(k: usize, approx: bool) -> Result<RatioRow> {
    let (inst, seq, reversal) = gen_tk(k)?;
    fill(
        "tk",
        k,
        None,
        &inst,
        seq.len() as u64,
        Some(reversal),
        approx,
    )
}

/// Even `b` is allowed here; its companion carries the extra leaf fix.
pub fn tkb_row(k: usize, b: usize, approx: bool) -> Result<RatioRow> {
    let (inst, seq) = gen_tkb_any_parity(k, b)?;
    fill("tkb", k, Some(b), &inst, seq.len() as u64, None, approx)
}

/// Evaluates every parameter point in parallel; rows come back sorted by
/// `(k, b)`. For `Tk` the `bs` list is ignored.
pub fn ratio_table(
    family: RatioFamily,
    ks: &[usize],
    bs: &[usize],
    approx: bool,
) -> Result<Vec<RatioRow>> {
    let points: Vec<(usize, Option<usize>)> = match family {
        RatioFamily::Tk => ks.iter().map(|&k| (k, None)).collect(),
        RatioFamily::Tkb => ks
            .iter()
            .flat_map(|&k| bs.iter().map(move |&b| (k, Some(b))))
            .collect(),
    };
    let mut rows: Vec<RatioRow> = points
        .par_iter()
        .map(|&(k, b)| match b {
            None => tk_row(k, approx),
            Some(b) => tkb_row(k, b, approx),
        })
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| (r.k, r.b));
    Ok(rows)
}

pub fn write_csv<W: std::io::Write>(rows: &[RatioRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees_have_no_counterexample() {
        let report = happy_leaf_search(6).unwrap();
        assert_eq!(report.trees_checked, 1 + 2 + 3 + 6);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn search_rejects_large_trees() {
        assert!(matches!(
            happy_leaf_search(11),
            Err(Error::TooLarge { n: 11, cap: 10 })
        ));
    }

    #[test]
    fn tkb_row_figures() {
        let row = tkb_row(2, 3, true).unwrap();
        assert_eq!(row.n, 9);
        assert_eq!(row.companion, 28);
        assert_eq!(row.cycle, Some(14));
    }

    #[test]
    fn tkb_cycle_ratio_grows() {
        let rows: Vec<f64> = [8, 20, 50]
            .iter()
            .map(|&k| tkb_row(k, k, true).unwrap().cycle_ratio.unwrap())
            .collect();
        assert!(rows.windows(2).all(|w| w[0] < w[1]), "{rows:?}");
        assert!(rows[2] >= 1.75 && rows[2] < 2.0);
    }

    #[test]
    fn csv_has_header() {
        let rows = ratio_table(RatioFamily::Tk, &[2, 4], &[], false).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("family,k,b,n,"));
        assert_eq!(lines.count(), 2);
    }
}
