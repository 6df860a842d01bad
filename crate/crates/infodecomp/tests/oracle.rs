//! Brute-force re-derivation of every measure from first principles, kept
//! deliberately naive (literal sums over states, no shared helpers with the
//! crate) so the two implementations can check each other.

use infodecomp::{decompose, specific_decompose, JointDistribution3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// p[x][y1][y2]
type Cube = Vec<Vec<Vec<f64>>>;

fn log2(v: f64) -> f64 {
    v.ln() / std::f64::consts::LN_2
}

fn o_px(p: &Cube, x: usize) -> f64 {
    p[x].iter().map(|row| row.iter().sum::<f64>()).sum()
}

fn o_py1(p: &Cube, y1: usize) -> f64 {
    p.iter().map(|cube| cube[y1].iter().sum::<f64>()).sum()
}

fn o_py2(p: &Cube, y2: usize) -> f64 {
    p.iter()
        .map(|cube| cube.iter().map(|row| row[y2]).sum::<f64>())
        .sum()
}

fn o_pxy1(p: &Cube, x: usize, y1: usize) -> f64 {
    p[x][y1].iter().sum()
}

fn o_pxy2(p: &Cube, x: usize, y2: usize) -> f64 {
    p[x].iter().map(|row| row[y2]).sum()
}

fn o_py1y2(p: &Cube, y1: usize, y2: usize) -> f64 {
    p.iter().map(|cube| cube[y1][y2]).sum()
}

/// I(X=x; Y1) = sum_y1 p(y1|x) log2(p(y1|x) / p(y1))
fn o_specific_y1(p: &Cube, x: usize) -> f64 {
    let px = o_px(p, x);
    let mut acc = 0.0;
    for y1 in 0..p[0].len() {
        let joint = o_pxy1(p, x, y1);
        if joint > 0.0 {
            let cond = joint / px;
            acc += cond * log2(cond / o_py1(p, y1));
        }
    }
    acc
}

fn o_specific_y2(p: &Cube, x: usize) -> f64 {
    let px = o_px(p, x);
    let mut acc = 0.0;
    for y2 in 0..p[0][0].len() {
        let joint = o_pxy2(p, x, y2);
        if joint > 0.0 {
            let cond = joint / px;
            acc += cond * log2(cond / o_py2(p, y2));
        }
    }
    acc
}

/// I(X=x; Y1,Y2) = sum_{y1,y2} p(y1,y2|x) log2(p(y1,y2|x) / p(y1,y2))
fn o_specific_pair(p: &Cube, x: usize) -> f64 {
    let px = o_px(p, x);
    let mut acc = 0.0;
    for y1 in 0..p[0].len() {
        for y2 in 0..p[0][0].len() {
            let joint = p[x][y1][y2];
            if joint > 0.0 {
                let cond = joint / px;
                acc += cond * log2(cond / o_py1y2(p, y1, y2));
            }
        }
    }
    acc
}

/// I(X;Y) by direct double sum over the (x, y1) marginal.
fn o_mi_y1(p: &Cube) -> f64 {
    let mut acc = 0.0;
    for x in 0..p.len() {
        for y1 in 0..p[0].len() {
            let joint = o_pxy1(p, x, y1);
            if joint > 0.0 {
                acc += joint * log2(joint / (o_px(p, x) * o_py1(p, y1)));
            }
        }
    }
    acc
}

fn o_mi_y2(p: &Cube) -> f64 {
    let mut acc = 0.0;
    for x in 0..p.len() {
        for y2 in 0..p[0][0].len() {
            let joint = o_pxy2(p, x, y2);
            if joint > 0.0 {
                acc += joint * log2(joint / (o_px(p, x) * o_py2(p, y2)));
            }
        }
    }
    acc
}

fn o_total(p: &Cube) -> f64 {
    let mut acc = 0.0;
    for x in 0..p.len() {
        for y1 in 0..p[0].len() {
            for y2 in 0..p[0][0].len() {
                let joint = p[x][y1][y2];
                if joint > 0.0 {
                    acc += joint * log2(joint / (o_px(p, x) * o_py1y2(p, y1, y2)));
                }
            }
        }
    }
    acc
}

fn o_redundancy(p: &Cube) -> f64 {
    (0..p.len())
        .filter(|&x| o_px(p, x) > 0.0)
        .map(|x| o_px(p, x) * o_specific_y1(p, x).min(o_specific_y2(p, x)))
        .sum()
}

struct OracleParts {
    total: f64,
    redundancy: f64,
    unique_y1: f64,
    unique_y2: f64,
    synergy: f64,
}

fn o_decompose(p: &Cube) -> OracleParts {
    let total = o_total(p);
    let redundancy = o_redundancy(p);
    let unique_y1 = o_mi_y1(p) - redundancy;
    let unique_y2 = o_mi_y2(p) - redundancy;
    OracleParts {
        total,
        redundancy,
        unique_y1,
        unique_y2,
        synergy: total - redundancy - unique_y1 - unique_y2,
    }
}

fn to_dist(p: &Cube) -> JointDistribution3 {
    let nx = p.len();
    let ny1 = p[0].len();
    let ny2 = p[0][0].len();
    let mut flat = Vec::with_capacity(nx * ny1 * ny2);
    for cube in p {
        for row in cube {
            flat.extend_from_slice(row);
        }
    }
    JointDistribution3::from_probabilities(nx, ny1, ny2, flat).unwrap()
}

fn assert_matches_oracle(p: &Cube, tol: f64) {
    let dist = to_dist(p);
    let got = decompose(&dist);
    let want = o_decompose(p);
    assert!((got.total - want.total).abs() <= tol, "total");
    assert!(
        (got.redundancy - want.redundancy).abs() <= tol,
        "redundancy"
    );
    assert!((got.unique_y1 - want.unique_y1).abs() <= tol, "unique_y1");
    assert!((got.unique_y2 - want.unique_y2).abs() <= tol, "unique_y2");
    assert!((got.synergy - want.synergy).abs() <= tol, "synergy");

    let specific = specific_decompose(&dist).unwrap();
    for state in &specific.states {
        let x = state.x;
        let s1 = o_specific_y1(p, x);
        let s2 = o_specific_y2(p, x);
        let st = o_specific_pair(p, x);
        let sr = s1.min(s2);
        assert!((state.total - st).abs() <= tol, "specific total x={x}");
        assert!((state.redundancy - sr).abs() <= tol, "specific rdn x={x}");
        assert!(
            (state.unique_y1 - (s1 - sr)).abs() <= tol,
            "specific u1 x={x}"
        );
        assert!(
            (state.unique_y2 - (s2 - sr)).abs() <= tol,
            "specific u2 x={x}"
        );
        assert!(
            (state.synergy - (st - sr - (s1 - sr) - (s2 - sr))).abs() <= tol,
            "specific syn x={x}"
        );
    }
}

/// Binary gate x = f(y1, y2) with independent uniform binary inputs.
fn gate(f: impl Fn(usize, usize) -> usize) -> Cube {
    let mut p = vec![vec![vec![0.0; 2]; 2]; 2];
    for y1 in 0..2 {
        for y2 in 0..2 {
            p[f(y1, y2)][y1][y2] += 0.25;
        }
    }
    p
}

#[test]
fn xor_gate_is_pure_synergy() {
    let p = gate(|a, b| a ^ b);
    assert_matches_oracle(&p, 1e-12);
    let d = decompose(&to_dist(&p));
    assert!((d.total - 1.0).abs() < 1e-12);
    assert!(d.redundancy.abs() < 1e-12);
    assert!(d.unique_y1.abs() < 1e-12);
    assert!(d.unique_y2.abs() < 1e-12);
    assert!((d.synergy - 1.0).abs() < 1e-12);
    assert!((d.interaction_info - 1.0).abs() < 1e-12);
}

#[test]
fn and_gate_splits_into_redundancy_and_synergy() {
    let p = gate(|a, b| a & b);
    assert_matches_oracle(&p, 1e-12);
    let d = decompose(&to_dist(&p));
    // Exact closed forms: redundancy = 3/2 - (3/4) log2 3, synergy = 1/2.
    let rdn = 1.5 - 0.75 * 3f64.log2();
    let total = 2.0 - 0.75 * 3f64.log2();
    assert!((d.redundancy - rdn).abs() < 1e-12);
    assert!((d.redundancy - 0.3112781244591328).abs() < 1e-12);
    assert!((d.total - total).abs() < 1e-12);
    assert!((d.synergy - 0.5).abs() < 1e-12);
    assert!(d.unique_y1.abs() < 1e-12);
    assert!(d.unique_y2.abs() < 1e-12);
}

#[test]
fn copy_with_distractor_is_pure_unique() {
    // X = Y1, with Y2 an independent uniform bit.
    let mut p = vec![vec![vec![0.0; 2]; 2]; 2];
    for y1 in 0..2 {
        for y2 in 0..2 {
            p[y1][y1][y2] += 0.25;
        }
    }
    assert_matches_oracle(&p, 1e-12);
    let d = decompose(&to_dist(&p));
    assert!((d.total - 1.0).abs() < 1e-12);
    assert!(d.redundancy.abs() < 1e-12);
    assert!((d.unique_y1 - 1.0).abs() < 1e-12);
    assert!(d.unique_y2.abs() < 1e-12);
    assert!(d.synergy.abs() < 1e-12);
}

#[test]
fn double_copy_is_pure_redundancy() {
    // Y1 = Y2 = X, uniform bit.
    let mut p = vec![vec![vec![0.0; 2]; 2]; 2];
    p[0][0][0] = 0.5;
    p[1][1][1] = 0.5;
    assert_matches_oracle(&p, 1e-12);
    let d = decompose(&to_dist(&p));
    assert!((d.total - 1.0).abs() < 1e-12);
    assert!((d.redundancy - 1.0).abs() < 1e-12);
    assert!(d.unique_y1.abs() < 1e-12);
    assert!(d.unique_y2.abs() < 1e-12);
    assert!(d.synergy.abs() < 1e-12);
    assert!((d.interaction_info + 1.0).abs() < 1e-12);
}

fn random_cube(rng: &mut impl Rng, nx: usize, ny1: usize, ny2: usize, sparse: bool) -> Cube {
    loop {
        let mut p = vec![vec![vec![0.0; ny2]; ny1]; nx];
        let mut sum = 0.0;
        for cube in &mut p {
            for row in cube.iter_mut() {
                for cell in row.iter_mut() {
                    if sparse && rng.gen_bool(0.4) {
                        continue;
                    }
                    let mass = -rng.gen::<f64>().max(1e-300).ln();
                    *cell = mass;
                    sum += mass;
                }
            }
        }
        if sum == 0.0 {
            continue;
        }
        for cube in &mut p {
            for row in cube.iter_mut() {
                for cell in row.iter_mut() {
                    *cell /= sum;
                }
            }
        }
        return p;
    }
}

#[test]
fn random_distributions_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1df0_dec0);
    for i in 0..100 {
        let nx = rng.gen_range(2..=4);
        let ny1 = rng.gen_range(2..=4);
        let ny2 = rng.gen_range(2..=4);
        let p = random_cube(&mut rng, nx, ny1, ny2, i % 3 == 0);
        assert_matches_oracle(&p, 1e-9);
    }
}

#[test]
fn interaction_info_consistency_on_random_distributions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    for _ in 0..50 {
        let p = random_cube(&mut rng, 3, 3, 3, false);
        let d = decompose(&to_dist(&p));
        let want = o_total(&p) - o_mi_y1(&p) - o_mi_y2(&p);
        assert!((d.interaction_info - want).abs() <= 1e-9);
        assert!((d.interaction_info - (d.synergy - d.redundancy)).abs() <= 1e-9);
    }
}
