use codepth3::classtable::{fg_polys, ClassId, RingInvariants};
use codepth3::galg::table_algebra;
use codepth3::powser::{LaurentPoly, RationalSeries};
use codepth3::resolve::{bass_oracle, poincare_oracle};
use codepth3::Fp;

fn one_plus_t() -> LaurentPoly {
    LaurentPoly::from_terms(&[(0, 1), (1, 1)])
}

/// Predicted slice dimensions of the semifree layers for resolving a module
/// whose generator counts follow `gen_series` over the algebra dims `adims`.
fn layers(gen: &[f64], adims: &[usize], hi: usize) -> Vec<f64> {
    (0..=hi)
        .map(|j| {
            adims
                .iter()
                .enumerate()
                .map(|(k, &a)| if j >= k { a as f64 * gen[j - k] } else { 0.0 })
                .sum()
        })
        .collect()
}

fn cost(lay: &[f64]) -> (f64, f64) {
    let mut ops = 0.0;
    let mut mem = 0.0f64;
    for j in 1..lay.len() {
        let (r, c) = (lay[j - 1], lay[j]);
        ops += r * r * c;
        let next = if j + 1 < lay.len() { lay[j + 1] } else { 0.0 };
        ops += next * c * c;
        mem = mem.max(r * c + (c - r).max(0.0) * c + c * c);
    }
    (ops, mem)
}

fn probe(cls: ClassId, h: u32, l: i64, n: u32, np: Option<i64>, ni: Option<i64>) {
    let inv = RingInvariants::for_class(cls, h, l, n).unwrap();
    let (f, g) = fg_polys(cls, &inv, false).unwrap();
    let adims = [1usize, (l + 1) as usize, inv.m as usize, inv.n as usize];
    let c = inv.c() as i64;
    let fld = Fp::new(10007).unwrap();
    let a = table_algebra(cls, &inv, fld).unwrap();
    if let Some(np) = np {
        let pak = RationalSeries::new(LaurentPoly::from_terms(&[(0, 1)]), one_plus_t().mul(&g)).unwrap();
        let b: Vec<f64> = pak.taylor(0, np).iter().map(|x| format!("{x}").parse::<f64>().unwrap()).collect();
        let lay = layers(&b, &adims, np as usize);
        let (ops, mem) = cost(&lay);
        let k = a.zero_action_module(0, vec![1]);
        let t0 = std::time::Instant::now();
        let got = poincare_oracle(&a, &k, np).unwrap();
        let secs = t0.elapsed().as_secs_f64();
        let lmax = lay.iter().cloned().fold(0.0, f64::max);
        println!(
            "P {cls} h={h} l={l} n={n} deg={np}: {secs:.2}s  Lmax={lmax:.0} ops={ops:.2e} mem={:.2e}B rate={:.2e}",
            mem * 8.0,
            ops / secs
        );
        let want = pak.taylor(0, np);
        let ok = (0..=np).all(|j| want[(j) as usize] == got.coeff(j));
        assert!(ok, "P mismatch {cls} l={l} n={n}");
    }
    if let Some(ni) = ni {
        let ia = RationalSeries::new(f.shift(-c), g.clone()).unwrap();
        let s = a.top() as i64;
        let hi = ni + s;
        let mu: Vec<f64> = ia.taylor(-s, hi - s).iter().map(|x| format!("{x}").parse::<f64>().unwrap()).collect();
        let lay = layers(&mu, &adims, hi as usize);
        let (ops, mem) = cost(&lay);
        let t0 = std::time::Instant::now();
        let got = bass_oracle(&a, ni).unwrap();
        let secs = t0.elapsed().as_secs_f64();
        let lmax = lay.iter().cloned().fold(0.0, f64::max);
        println!(
            "I {cls} h={h} l={l} n={n} win=[{},{ni}]: {secs:.2}s  Lmax={lmax:.0} ops={ops:.2e} mem={:.2e}B rate={:.2e}",
            -c,
            mem * 8.0,
            ops / secs
        );
        let want = ia.taylor(-3, ni);
        let ok = (-3..=ni).all(|j| want[(j + 3) as usize] == got.coeff(j));
        assert!(ok, "I mismatch {cls} l={l} n={n}: want {:?} got {got:?}", want);
    }
}

#[test]
#[ignore]
fn calibrate() {
    probe(ClassId::T, 0, 3, 3, Some(10), None);
    probe(ClassId::H(0, 0), 0, 2, 2, Some(10), Some(5));
    probe(ClassId::H(0, 0), 0, 5, 5, Some(7), Some(3));
    probe(ClassId::H(0, 0), 0, 5, 5, Some(8), None);
    probe(ClassId::B, 0, 5, 5, Some(8), Some(4));
    probe(ClassId::S, 0, 5, 0, Some(10), Some(8));
}
