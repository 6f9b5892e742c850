//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hfst_core::algebra::LaurentPoly;
use hfst_core::curves::{curve_to_typed, line_intersection_dim, line_typed, CurveComponent, Letter, MultiCurve, Slope};
use hfst_core::hfst::{filling_dim, is_hfst, solid_torus_pairings, triangle_rank_check, HfstInput};
use hfst_core::pairing::{box_tensor, mor_pairing, ChainComplex};
use hfst_core::seifert::{classify, Base, SeifertData};
use hfst_core::structures::{
    builtin, random_typed, solid_torus_module, Builtin, IdempotentPolicy, TypeD,
};

/// Every complex produced by the suites passes through here.
#[derive(Default)]
struct Floor {
    complexes: usize,
    failures: Vec<String>,
}

impl Floor {
    fn dim(&mut self, c: &ChainComplex, what: &str) -> usize {
        self.complexes += 1;
        if !c.d_squared().is_empty() {
            self.failures.push(format!("{what}: d^2 != 0"));
        }
        let d = c.len() - 2 * c.rank();
        if d % 2 != c.len() % 2 {
            self.failures.push(format!("{what}: parity"));
        }
        d
    }
}

type Outcome = Result<String, String>;

fn curve(lines: &[&str]) -> MultiCurve {
    let comps = lines
        .iter()
        .map(|s| {
            let (w, z) = s.strip_suffix(" @z").map_or((*s, false), |w| (w, true));
            let w: Vec<Letter> = w.chars().map(|c| Letter::from_char(c).unwrap()).collect();
            CurveComponent::new(&w, z).unwrap()
        })
        .collect();
    MultiCurve::new(comps).unwrap()
}

fn fig3() -> TypeD {
    match builtin("fig3_typeD").unwrap() {
        Builtin::TypeD(p) => p,
        Builtin::Module(_) => unreachable!(),
    }
}

fn three_cycle(floor: &mut Floor) -> Outcome {
    let from_curve = curve_to_typed(&curve(&["lll"])).map_err(|e| e.to_string())?;
    if !from_curve.isomorphic(&fig3()) {
        return Err("curve lll does not give the three-cycle".into());
    }
    let c = box_tensor(&solid_torus_module(true), &fig3()).map_err(|e| e.to_string())?;
    let idx = |n: &str| c.basis().iter().position(|b| b == n).unwrap();
    let mut expected = Vec::new();
    for i in 1..=3 {
        let j = i % 3 + 1;
        expected.push((idx(&format!("p*v{i}")), idx(&format!("q*v{i}")), LaurentPoly::one()));
        expected.push((idx(&format!("p*v{i}")), idx(&format!("q*v{j}")), LaurentPoly::t()));
    }
    expected.sort_by_key(|e| (e.0, e.1));
    let got: Vec<(usize, usize, LaurentPoly)> = c.entries().map(|(i, j, x)| (i, j, x.clone())).collect();
    if c.len() != 6 || got != expected {
        return Err(format!("unexpected complex:\n{}", c.dump()));
    }
    let twisted = floor.dim(&c, "three-cycle twisted");
    let plain = box_tensor(&solid_torus_module(false), &from_curve).map_err(|e| e.to_string())?;
    let untwisted = floor.dim(&plain, "three-cycle untwisted");
    if (twisted, untwisted) != (0, 2) {
        return Err(format!("dims twisted {twisted}, untwisted {untwisted}"));
    }
    Ok("6 generators, exact arrows, twisted 0, untwisted 2".into())
}

fn i0_vanishing(floor: &mut Floor) -> Outcome {
    let m = solid_torus_module(true);
    for seed in 0..500u64 {
        let n = 1 + (seed as usize % 12);
        let p = random_typed(seed, n, IdempotentPolicy::AllI0).unwrap();
        let c = box_tensor(&m, &p).map_err(|e| e.to_string())?;
        let d = floor.dim(&c, "i0 suite");
        if d != 0 {
            return Err(format!("seed {seed}: twisted dimension {d}"));
        }
    }
    Ok("500 seeds, 1..=12 generators, all twisted 0".into())
}

fn untwisted_to_twisted(floor: &mut Floor) -> Outcome {
    let (mt, mu) = (solid_torus_module(true), solid_torus_module(false));
    let mut zero = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed as usize % 12);
        let p = random_typed(seed, n, IdempotentPolicy::Mixed).unwrap();
        let t = floor.dim(&box_tensor(&mt, &p).map_err(|e| e.to_string())?, "mixed twisted");
        let u = floor.dim(&box_tensor(&mu, &p).map_err(|e| e.to_string())?, "mixed untwisted");
        if t > u {
            return Err(format!("seed {seed}: twisted {t} > untwisted {u}"));
        }
        zero += usize::from(u == 0);
    }
    Ok(format!("500 seeds, twisted <= untwisted everywhere, {zero} with untwisted 0"))
}

fn corpus() -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&str>> = vec![
        vec!["l"], vec!["ll"], vec!["lll"], vec!["LLLL"], vec!["lllll"],
        vec!["l @z"], vec!["L @z"], vec!["l", "ll"], vec!["l @z", "lll"], vec!["ll", "LL", "l"],
        vec!["m"], vec!["mm"], vec!["MMM"], vec!["mmmm"], vec!["m @z"],
        vec!["lm"], vec!["lM"], vec!["llm"], vec!["lmm"], vec!["lmlml"], vec!["lMlMl"],
        vec!["lmlm"], vec!["lllm"], vec!["mlmm"], vec!["lm @z"], vec!["llM @z"],
        vec!["l", "m"], vec!["ll", "lm"], vec!["l @z", "lM"], vec!["lll", "mm"],
        vec![],
    ];
    out.push(vec!["lmllmllm"]);
    out
}

fn criteria_agree() -> Outcome {
    let mut hfst = 0;
    let cases = corpus();
    for words in &cases {
        let c = curve(words);
        let v = is_hfst(&HfstInput::Curve(c), None).map_err(|e| format!("{words:?}: {e}"))?;
        if v.condition3_supported != Some(v.is_hfst) || v.condition2_constant != v.is_hfst {
            return Err(format!("{words:?}: criteria disagree"));
        }
        hfst += usize::from(v.is_hfst);
    }
    Ok(format!("{} multicurves, {hfst} HFST, all three criteria agree", cases.len()))
}

fn mor_geometry(floor: &mut Floor) -> Outcome {
    let mut slopes = Vec::new();
    for q in 0..=7 {
        for p in -7..=7 {
            if let Ok(s) = Slope::new(p, q) {
                if (s.p(), s.q()) == (p, q) {
                    slopes.push(s);
                }
            }
        }
    }
    let mut pairs = 0;
    for (i, a) in slopes.iter().enumerate() {
        for b in &slopes[i..] {
            let c = mor_pairing(&line_typed(*a, 1), &line_typed(*b, 1)).map_err(|e| e.to_string())?;
            let d = floor.dim(&c, "mor lines") as u64;
            let expected = line_intersection_dim(*a, *b, 2);
            if d != expected {
                return Err(format!("{a} vs {b}: {d} != {expected}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{} slopes, {pairs} unordered pairs", slopes.len()))
}

fn surgery_triangle(floor: &mut Floor) -> Outcome {
    let p = curve_to_typed(&curve(&["l @z"])).map_err(|e| e.to_string())?;
    let c = box_tensor(&solid_torus_module(true), &p).map_err(|e| e.to_string())?;
    let d_lambda = floor.dim(&c, "solid torus twisted");
    let (twisted, _) = solid_torus_pairings(&p).map_err(|e| e.to_string())?;
    if twisted != d_lambda {
        return Err("twisted dimension mismatch".into());
    }
    for k in -5..=5 {
        let dk = filling_dim(&p, k).map_err(|e| e.to_string())?;
        let dk1 = filling_dim(&p, k + 1).map_err(|e| e.to_string())?;
        for kk in [k, k + 1] {
            floor.dim(&mor_pairing(&line_typed(Slope::filling(kk), 1), &p).unwrap(), "filling");
        }
        triangle_rank_check(dk, dk1, d_lambda).map_err(|v| format!("k={k}: {v:?}"))?;
    }
    Ok(format!("k in [-5, 5], twisted lambda dimension {d_lambda}"))
}

fn q(b: i64, a: i64) -> Ratio<i64> {
    Ratio::new(b, a)
}

fn random_cone(rng: &mut ChaCha8Rng) -> Ratio<i64> {
    let a = rng.random_range(2..=9);
    let mut b = rng.random_range(-20..=20);
    while b % a == 0 {
        b += 1;
    }
    q(b, a)
}

/// One Seifert move that preserves the manifold.
fn random_move(rng: &mut ChaCha8Rng, d: &mut SeifertData) {
    let k = d.cones.len();
    match rng.random_range(0..4) {
        0 if k >= 2 => {
            let (i, j) = (rng.random_range(0..k), rng.random_range(0..k));
            d.cones.swap(i, j);
        }
        1 if k >= 2 => {
            let i = rng.random_range(0..k);
            let j = (i + 1 + rng.random_range(0..k - 1)) % k;
            let n = rng.random_range(-3..=3);
            d.cones[i] += n;
            d.cones[j] -= n;
        }
        2 if k >= 1 => {
            let n = rng.random_range(-3..=3);
            let j = rng.random_range(0..k);
            d.cones[j] -= n;
            d.cones.insert(rng.random_range(0..=k), Ratio::from_integer(n));
        }
        _ => {
            if let Some(i) = d.cones.iter().position(|r| r.is_integer()) {
                let n = d.cones.remove(i);
                if let Some(r) = d.cones.first_mut() {
                    *r += n;
                } else {
                    d.cones.push(n);
                }
            }
        }
    }
}

fn seifert_table() -> Outcome {
    let disk = |cones: Vec<Ratio<i64>>| SeifertData { base: Base::Disk, cones };
    for n in 2..=9 {
        if !classify(&disk(vec![q(1, n), q(-1, n)])).is_hfst {
            return Err(format!("D2(1/{n}, -1/{n}) not recognized"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..10 {
        let cones = (0..i % 3).map(|_| random_cone(&mut rng)).collect();
        let d = SeifertData { base: Base::Mobius, cones };
        if !classify(&d).is_hfst {
            return Err(format!("{d} not recognized"));
        }
    }
    for cones in [vec![q(1, 2), q(1, 3)], vec![q(1, 2), q(1, 3), q(1, 5)], vec![q(1, 2), q(-1, 3)]] {
        let d = disk(cones);
        if classify(&d).is_hfst {
            return Err(format!("{d} wrongly accepted"));
        }
    }
    for seq in 0..100 {
        let base = if seq % 4 == 0 { Base::Mobius } else { Base::Disk };
        let k = rng.random_range(0..=4);
        let mut d = SeifertData { base, cones: (0..k).map(|_| random_cone(&mut rng)).collect() };
        if seq % 5 == 1 && k >= 1 {
            // force some zero-Euler pairs into the sweep
            d.cones = vec![d.cones[0], -d.cones[0]];
        }
        let before = classify(&d);
        for _ in 0..rng.random_range(1..=6) {
            random_move(&mut rng, &mut d);
        }
        let after = classify(&d);
        if (before.is_hfst, before.reason, before.longitude.delta)
            != (after.is_hfst, after.reason, after.longitude.delta)
        {
            return Err(format!("verdict changed under moves, ending at {d}"));
        }
    }
    Ok("table of 21 cases and 100 move sequences".into())
}

fn main() -> ExitCode {
    let mut floor = Floor::default();
    let mut failed = 0;
    let mut line = |id: usize, name: &str, start: Instant, r: Outcome| {
        let (tag, msg) = match r {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("{tag} {id} {name}: {msg} ({:.1}s)", start.elapsed().as_secs_f64());
    };
    let t = Instant::now();
    line(1, "three-cycle pipeline", t, three_cycle(&mut floor));
    let t = Instant::now();
    line(2, "i0-only structures have twisted vanishing", t, i0_vanishing(&mut floor));
    let t = Instant::now();
    line(3, "untwisted vanishing implies twisted vanishing", t, untwisted_to_twisted(&mut floor));
    let t = Instant::now();
    line(4, "HFST criteria agree on curves", t, criteria_agree());
    let t = Instant::now();
    line(5, "morphism pairing matches intersection numbers", t, mor_geometry(&mut floor));
    let t = Instant::now();
    line(6, "surgery triangle ranks", t, surgery_triangle(&mut floor));
    let t = Instant::now();
    line(7, "Seifert classification", t, seifert_table());
    let t = Instant::now();
    let floor_result = if floor.failures.is_empty() {
        Ok(format!("{} complexes with d^2 = 0 and matching parity", floor.complexes))
    } else {
        Err(floor.failures.join("; "))
    };
    line(8, "structural floor", t, floor_result);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
