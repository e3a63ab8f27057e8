use tetcensus::graphfilter::{filter_verdict, summarize};
use tetcensus::multigraph::enumerate_graphs;
use std::time::Instant;

fn main() {
    let old_exp = [2usize, 6, 16, 58, 221, 997, 4930, 27681];
    let sb_exp = [1usize, 4, 13, 56, 227, 1083, 5730, 34059];
    let sq_exp = [0usize, 1, 2, 5, 13, 46, 170, 746];
    let mt_exp = [0usize, 0, 1, 2, 5, 14, 47, 176];
    let new_exp = [1usize, 4, 14, 60, 238, 1116, 5834, 34452];
    let all_exp = [2usize, 6, 19, 74, 290, 1343, 6904, 40353];
    for n in 3..=10usize {
        let t = Instant::now();
        let graphs = enumerate_graphs(n).unwrap();
        let verdicts: Vec<_> = graphs.iter().map(filter_verdict).collect();
        let r = summarize(n, &verdicts);
        let i = n - 3;
        let ok = r.old == old_exp[i] && r.straybigon == sb_exp[i] && r.square == sq_exp[i]
            && r.mountains == mt_exp[i] && r.new_union == new_exp[i] && r.all_union == all_exp[i];
        println!(
            "n={} total={} old={}/{} sb={}/{} sq={}/{} mt={}/{} new={}/{} all={}/{} kept={} [{}] {:.2?}",
            n, r.total, r.old, old_exp[i], r.straybigon, sb_exp[i], r.square, sq_exp[i],
            r.mountains, mt_exp[i], r.new_union, new_exp[i], r.all_union, all_exp[i], r.kept,
            if ok { "OK" } else { "MISMATCH" }, t.elapsed()
        );
    }
}
