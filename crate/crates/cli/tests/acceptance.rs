//! Acceptance suite: every release criterion as one test, one pass/fail
//! line each (visible with `cargo test --test acceptance -- --nocapture`).

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use zolotarev6::poly::alternation_profile;
use zolotarev6::verify::{
    abel_pell_residual, product_form_diff, ps_system_residuals,
    side_solution_counterexample,
};
use zolotarev6::zolotarev::{
    build, critical_points, l_of_t, limit_polynomials, i6_lower, s_of_t,
    ZParam,
};
use zolotarev6::{
    bernstein_asymptotic, minimax_fixed_leading, solve, t_polynomial,
};

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion {
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        if !ok {
            self.failures.push(detail);
        }
    }

    fn runtime(&mut self, start: Instant, limit: Duration) {
        let elapsed = start.elapsed();
        self.check(
            elapsed <= limit,
            format!("runtime {elapsed:?} exceeded {limit:?}"),
        );
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("acceptance {}: PASS", self.label);
        } else {
            println!(
                "acceptance {}: FAIL — {}",
                self.label,
                self.failures.join("; ")
            );
            panic!("{} failed: {}", self.label, self.failures.join("; "));
        }
    }
}

fn zolo6(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zolo6"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_1_example_one_reproduction() {
    let mut c = Criterion::new("criterion 1 (t = -0.05 construction)");
    let start = Instant::now();
    let out = zolo6(&["eval", "--t", "-0.05", "--format", "json"]);
    c.runtime(start, Duration::from_secs(1));
    c.check(out.status.success(), format!("exit {:?}", out.status.code()));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let p = &v["payload"];

    let close = |name: &str, got: f64, want: f64, c: &mut Criterion| {
        c.check(
            (got - want).abs() <= 1e-5,
            format!("{name}: {got} vs {want}"),
        );
    };
    close("gamma", p["gamma"].as_f64().unwrap(), 1.24531, &mut c);
    close("alpha", p["alpha"].as_f64().unwrap(), 1.39116, &mut c);
    close("beta", p["beta"].as_f64().unwrap(), 1.43197, &mut c);
    let z_want = [-0.84550, -0.42403, 0.14868, 0.70680];
    for (k, want) in z_want.iter().enumerate() {
        close(
            &format!("z{}", k + 1),
            p["z"][k].as_f64().unwrap(),
            *want,
            &mut c,
        );
    }
    let b_want = [
        -0.70806, -3.73827, 10.09830, 15.98439, -22.66944, -13.24611,
        13.27920,
    ];
    for (k, want) in b_want.iter().enumerate() {
        close(
            &format!("b{k}"),
            p["b"][k].as_f64().unwrap(),
            *want,
            &mut c,
        );
    }
    c.finish();
}

#[test]
fn criterion_2_example_two_reproduction() {
    let mut c = Criterion::new("criterion 2 (s = 1 solution)");
    let start = Instant::now();
    let out = zolo6(&["solve", "--s", "1"]);
    c.runtime(start, Duration::from_secs(1));
    c.check(out.status.success(), format!("exit {:?}", out.status.code()));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let p = &v["payload"];

    let t_star = p["t_star"].as_f64().unwrap();
    c.check(
        (t_star + 0.002272).abs() <= 1e-5,
        format!("t*: {t_star}"),
    );
    let monic_want = [-0.06207, -1.86731, 0.81036, 7.48972, -1.74828];
    for (k, want) in monic_want.iter().enumerate() {
        let got = p["monic"][k].as_f64().unwrap();
        c.check(
            (got - want).abs() <= 1e-5,
            format!("monic c{k}: {got} vs {want}"),
        );
    }
    let c5 = p["monic"][5].as_f64().unwrap();
    c.check((c5 + 6.0).abs() <= 1e-9, format!("x^5 coefficient {c5}"));
    let c6 = p["monic"][6].as_f64().unwrap();
    c.check(c6 == 1.0, format!("leading coefficient {c6}"));
    let l = p["L"].as_f64().unwrap();
    c.check((l - 0.37758).abs() <= 1e-5, format!("L: {l}"));
    c.finish();
}

#[test]
fn criterion_3_octic_cross_check() {
    let mut c = Criterion::new("criterion 3 (degree-8 cross-check at s = 1)");
    let start = Instant::now();
    let reference = [
        1.0, 436.0, -1748.0, 5272.0, -15632.0, 24592.0, -12752.0, -48416.0,
        212272.0,
    ];
    let octic = t_polynomial(1.0);
    c.check(octic.degree() == 8, format!("degree {}", octic.degree()));
    let scale = octic.coeff(0) / reference[0];
    c.check(scale != 0.0, "zero scale".to_string());
    for (k, want) in reference.iter().enumerate() {
        let got = octic.coeff(k) / scale;
        c.check(
            got == *want,
            format!("coefficient {k}: {got} vs {want} (exact match required)"),
        );
    }
    c.runtime(start, Duration::from_secs(1));
    c.finish();
}

#[test]
fn criterion_4_identity_suites() {
    let mut c = Criterion::new("criterion 4 (identity suites on 25 parameters)");
    let start = Instant::now();
    for i in 0..25 {
        let t = -0.09 + (0.085) * i as f64 / 24.0;
        let zs = build(ZParam::new(t).unwrap()).unwrap();

        let ap = abel_pell_residual(&zs, 1001);
        c.check(ap <= 1e-8, format!("t={t}: Abel-Pell residual {ap}"));

        let (lin, pow) = ps_system_residuals(&zs);
        c.check(lin <= 1e-8, format!("t={t}: PS linear residual {lin}"));
        for (k, r) in pow.iter().enumerate() {
            c.check(
                *r <= 1e-8,
                format!("t={t}: PS power residual k={} is {r}", k + 1),
            );
        }

        let (pf1, pf2) = product_form_diff(&zs, 1001);
        c.check(pf1 <= 1e-9, format!("t={t}: product form 1 diff {pf1}"));
        c.check(pf2 <= 1e-9, format!("t={t}: product form 2 diff {pf2}"));

        let p = zs.polynomial();
        let inner = alternation_profile(&p, -1.0, 1.0, 1.0, 1e-6).unwrap();
        c.check(
            inner.points.len() == 6,
            format!("t={t}: {} points on [-1,1]", inner.points.len()),
        );
        let outer =
            alternation_profile(&p, zs.alpha, zs.beta, 1.0, 1e-6).unwrap();
        c.check(
            outer.points.len() == 2,
            format!("t={t}: {} points on [alpha,beta]", outer.points.len()),
        );
    }
    c.runtime(start, Duration::from_secs(10));
    c.finish();
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut c = Criterion::new("criterion 5 (oracle vs closed form)");
    let start = Instant::now();
    for &s in &[0.1, 0.16625464, 0.5, 1.0, 2.0] {
        let oracle = minimax_fixed_leading(s, 2049).unwrap();
        let sol = solve(s, 1e-12).unwrap();
        let gap = (oracle.deviation - sol.l).abs();
        c.check(gap <= 1e-5, format!("s={s}: |deviation - L| = {gap}"));

        // monic from the oracle: x⁶ − 6s·x⁵ − q(x)
        let mut sup = 0.0f64;
        for k in 0..7 {
            let oracle_ck = match k {
                6 => 1.0,
                5 => -6.0 * s,
                _ => -oracle.q.coeff(k),
            };
            sup = sup.max((oracle_ck - sol.monic.coeff(k)).abs());
        }
        c.check(sup <= 1e-4, format!("s={s}: monic sup diff {sup}"));
    }
    c.runtime(start, Duration::from_secs(30));
    c.finish();
}

#[test]
fn criterion_6_bernstein_asymptotic() {
    let mut c = Criterion::new("criterion 6 (deviation asymptotic)");
    let start = Instant::now();

    let t20 = ZParam::new(-0.05).unwrap();
    let l = l_of_t(t20);
    let l_inf = bernstein_asymptotic(6, s_of_t(t20));
    c.check(
        (l_inf - 0.07531).abs() < 1e-5 && (l - 0.07530).abs() < 1e-5,
        format!("printed values: L_inf={l_inf} L={l}"),
    );
    let ratio = l_inf / l;
    c.check(
        (0.999..=1.0015).contains(&ratio),
        format!("ratio {ratio}"),
    );

    let sol = solve(1.0, 1e-12).unwrap();
    let l_inf1 = bernstein_asymptotic(6, 1.0);
    let rel = (sol.l - l_inf1).abs() / sol.l;
    c.check(
        rel <= 1e-9,
        format!("s=1: relative gap {rel} (need 9 significant digits)"),
    );
    c.runtime(start, Duration::from_secs(1));
    c.finish();
}

#[test]
fn criterion_7_limits() {
    let mut c = Criterion::new("criterion 7 (boundary limits)");
    let start = Instant::now();
    let (minus_t5, shifted_t6) = limit_polynomials();
    let sup = |p: &zolotarev6::DensePoly, q: &zolotarev6::DensePoly| {
        (0..=1000)
            .map(|i| -1.0 + 2.0 * i as f64 / 1000.0)
            .map(|x| (p.eval(x) - q.eval(x)).abs())
            .fold(0.0, f64::max)
    };

    let near_zero = ZParam::new(-1e-5).unwrap();
    let d5 = sup(&build(near_zero).unwrap().polynomial(), &minus_t5);
    c.check(d5 <= 5e-3, format!("distance to -T5 at t=-1e-5: {d5}"));

    let near_lower = ZParam::new(i6_lower() + 1e-6).unwrap();
    let d6 = sup(&build(near_lower).unwrap().polynomial(), &shifted_t6);
    c.check(
        d6 <= 5e-3,
        format!("distance to shifted T6 at lower probe: {d6}"),
    );

    let (_, alpha0, beta0) = critical_points(near_zero);
    c.check(alpha0 > 1e3, format!("alpha(-1e-5) = {alpha0} not > 1e3"));
    c.check(beta0 > 1e3, format!("beta(-1e-5) = {beta0} not > 1e3"));

    let (_, alpha1, beta1) = critical_points(near_lower);
    c.check(
        (alpha1 - 1.0).abs() < 0.01,
        format!("alpha at lower probe: {alpha1}"),
    );
    let beta_limit = 15.0 - 8.0 * 3.0_f64.sqrt();
    c.check(
        (beta1 - beta_limit).abs() < 0.01,
        format!("beta at lower probe: {beta1} vs {beta_limit}"),
    );
    c.runtime(start, Duration::from_secs(1));
    c.finish();
}

#[test]
fn criterion_8_side_solution_counterexample() {
    let mut c = Criterion::new("criterion 8 (rational side-solution fails)");
    let start = Instant::now();
    for &t in &[1.01, 1.5, 2.0] {
        let prof = side_solution_counterexample(t).unwrap();
        c.check(
            prof.points.len() == 4,
            format!("t={t}: {} equioscillation points", prof.points.len()),
        );
        // the verification suite requires 6 points (5 alternations) on
        // [-1,1]; this family never meets it
        c.check(
            prof.count != 5,
            format!("t={t}: unexpectedly meets the alternation requirement"),
        );
    }
    c.runtime(start, Duration::from_secs(1));
    c.finish();
}

#[test]
fn criterion_9_monic_instance() {
    let mut c = Criterion::new("criterion 9 (already-monic instance)");
    let start = Instant::now();
    let l = l_of_t(ZParam::new(-0.0003253).unwrap());
    c.check((l - 1.0).abs() <= 1e-3, format!("L(-0.0003253) = {l}"));
    c.runtime(start, Duration::from_secs(1));
    c.finish();
}
