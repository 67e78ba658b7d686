//! Property suites checked against independent brute-force oracles.

use num_bigint::BigUint;
use proptest::prelude::*;

use splitmw::bitset::binomial;
use splitmw::flats::{cyclic_flats, is_split};
use splitmw::graph::{count_spanning_trees, graphic};
use splitmw::mw::check_mw;
use splitmw::tutte::{tutte, tutte_subset_sum, TuttePolynomial};
use splitmw::{ElementSet, Matroid, Multigraph};

/// Rank straight from the definition: the largest intersection with a basis.
fn naive_rank(m: &Matroid, a: u32) -> i64 {
    m.bases().iter().map(|b| (b & a).count_ones() as i64).max().unwrap_or(0)
}

/// Tutte coefficients from the corank-nullity sum, expanded with signed
/// machine integers; shares no code with either library engine.
fn naive_tutte(m: &Matroid) -> Vec<Vec<i128>> {
    let (n, r) = (m.n(), m.rank());
    let c = n - r;
    let mut raw = vec![vec![0i128; c + 1]; r + 1];
    for a in 0u32..(1u32 << n) {
        let ra = naive_rank(m, a);
        raw[(r as i64 - ra) as usize][(a.count_ones() as i64 - ra) as usize] += 1;
    }
    let choose = |n: usize, k: usize| binomial(n, k) as i128;
    let mut out = vec![vec![0i128; c + 1]; r + 1];
    for (p, row) in raw.iter().enumerate() {
        for (q, &w) in row.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for i in 0..=p {
                for j in 0..=q {
                    let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                    out[i][j] += sign * w * choose(p, i) * choose(q, j);
                }
            }
        }
    }
    out
}

fn as_i128(t: &TuttePolynomial) -> Vec<Vec<i128>> {
    t.coeffs()
        .iter()
        .map(|row| row.iter().map(|c| c.to_string().parse().unwrap()).collect())
        .collect()
}

/// Matrix-tree theorem with fraction-free elimination.
fn kirchhoff(g: &Multigraph) -> i128 {
    let v = g.vertex_count();
    if v <= 1 {
        return 1;
    }
    let mut lap = vec![vec![0i128; v]; v];
    for &(a, b) in g.edges() {
        if a != b {
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    let mut mat: Vec<Vec<i128>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let k = v - 1;
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..k {
        if mat[i][i] == 0 {
            match (i + 1..k).find(|&r| mat[r][i] != 0) {
                Some(r) => {
                    mat.swap(i, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                mat[r][c] = (mat[r][c] * mat[i][i] - mat[r][i] * mat[i][c]) / prev;
            }
        }
        prev = mat[i][i];
    }
    sign * mat[k - 1][k - 1]
}

fn arb_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_vertices).prop_flat_map(move |v| {
        prop::collection::vec((0..v, 0..v), 1..=max_edges)
            .prop_map(move |edges| Multigraph::new(v, edges).unwrap())
    })
}

fn arb_partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 2..=4)
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        arb_graph(6, 9).prop_map(|g| graphic(&g).unwrap()),
        (1usize..=9).prop_flat_map(|n| (0..=n, Just(n))).prop_map(|(k, n)| Matroid::uniform(k, n).unwrap()),
        (2usize..=9).prop_flat_map(|n| (1..n, Just(n))).prop_map(|(k, n)| Matroid::minimal(k, n).unwrap()),
        arb_partition().prop_map(|p| Matroid::rank2_from_partition(&p).unwrap()),
    ]
}

fn arb_small_pair() -> impl Strategy<Value = (Matroid, Matroid)> {
    (arb_matroid(), arb_matroid()).prop_filter("sum too large", |(a, b)| a.n() + b.n() <= 14)
}

fn clean(m: &Matroid) -> bool {
    m.n() > 0 && m.loops().is_empty() && m.coloops().is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_matches_definition_and_is_submodular(m in arb_matroid()) {
        let full = (1u32 << m.n()) - 1;
        let table = m.rank_table().unwrap();
        for a in 0..=full {
            let r = table.rank(ElementSet(a));
            prop_assert_eq!(r as i64, naive_rank(&m, a));
            prop_assert!(r <= a.count_ones() as usize);
            for e in 0..m.n() {
                prop_assert!(table.rank(ElementSet(a | (1 << e))) >= r);
            }
        }
        // submodularity on a sample of pairs
        for a in (0..=full).step_by(7) {
            for b in (0..=full).step_by(11) {
                let lhs = table.rank(ElementSet(a)) + table.rank(ElementSet(b));
                let rhs = table.rank(ElementSet(a | b)) + table.rank(ElementSet(a & b));
                prop_assert!(lhs >= rhs);
            }
        }
    }

    #[test]
    fn double_dual_is_identity(m in arb_matroid()) {
        prop_assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn deletion_adds_no_loops_contraction_adds_no_coloops(m in arb_matroid(), pick in any::<usize>()) {
        prop_assume!(m.n() >= 1);
        let e = pick % m.n();
        let d = m.delete(e).unwrap();
        for new in d.matroid.loops().iter() {
            prop_assert!(m.loops().contains(d.labels[new]));
        }
        if !m.loops().contains(e) {
            let c = m.contract(e).unwrap();
            for new in c.matroid.coloops().iter() {
                prop_assert!(m.coloops().contains(c.labels[new]));
            }
        }
    }

    #[test]
    fn cyclic_flats_complement_under_duality(m in arb_matroid()) {
        let full = (1u32 << m.n()) - 1;
        let mut primal: Vec<u32> = cyclic_flats(&m).unwrap().flats.iter().map(|f| full & !f.set.0).collect();
        let mut dual: Vec<u32> = cyclic_flats(&m.dual()).unwrap().flats.iter().map(|f| f.set.0).collect();
        primal.sort_unstable();
        dual.sort_unstable();
        prop_assert_eq!(primal, dual);
    }

    #[test]
    fn split_is_self_dual(m in arb_matroid()) {
        prop_assert_eq!(is_split(&m).unwrap(), is_split(&m.dual()).unwrap());
    }

    #[test]
    fn engines_agree_with_naive_sum(m in arb_matroid()) {
        let dc = tutte(&m);
        prop_assert_eq!(&dc, &tutte_subset_sum(&m).unwrap());
        prop_assert_eq!(as_i128(&dc), naive_tutte(&m));
    }

    #[test]
    fn duality_transposes(m in arb_matroid()) {
        prop_assert_eq!(tutte(&m.dual()), tutte(&m).transpose());
    }

    #[test]
    fn direct_sum_multiplies((a, b) in arb_small_pair()) {
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(tutte_subset_sum(&sum).unwrap(), tutte(&a).product(&tutte(&b)));
    }

    #[test]
    fn inequality_chain_and_basis_bound(m in arb_matroid()) {
        prop_assume!(clean(&m));
        let r = check_mw(&m).unwrap();
        prop_assert!(r.implication_chain_holds());
        prop_assert!(r.t11 <= BigUint::from(binomial(m.n(), m.rank())));
        prop_assert_eq!(r.t11.clone(), BigUint::from(m.basis_count()));
    }

    #[test]
    fn spanning_trees_match_kirchhoff(g in arb_graph(7, 10)) {
        let t11 = tutte(&graphic(&g).unwrap()).evaluate(1, 1);
        let brute = count_spanning_trees(&g).unwrap();
        if g.is_connected() {
            let k = kirchhoff(&g);
            prop_assert_eq!(brute as i128, k);
            prop_assert_eq!(t11, k.into());
        } else {
            prop_assert_eq!(brute, 0);
        }
    }
}

#[test]
fn rank_one_passes_multiplicative_up_to_twenty() {
    for n in 2..=20 {
        let r = check_mw(&Matroid::uniform(1, n).unwrap()).unwrap();
        assert!(r.mult_ok, "U(1,{n})");
        assert_eq!(r.t11, BigUint::from(n));
    }
}

#[test]
fn kirchhoff_oracle_sanity() {
    assert_eq!(kirchhoff(&Multigraph::complete(4)), 16);
    assert_eq!(kirchhoff(&Multigraph::complete(5)), 125);
    assert_eq!(kirchhoff(&Multigraph::cycle(6)), 6);
}
