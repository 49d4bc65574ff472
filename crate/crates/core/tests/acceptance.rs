//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Criteria known to be unattainable are listed in `KNOWN_RED`
//! with the reason; the test fails if the set of red criteria changes.

mod support;

use std::collections::BTreeSet;

use artinian::apolar::{hilbert_function, GradedAlgebraModel};
use artinian::jordan::{dominance_compare, jordan_degree_type, jordan_type, Dominance, JordanDegreeType, Partition};
use artinian::linalg::{FieldElement, FieldSpec};
use artinian::perazzo::{
    a_bounds, full_perazzo_form, hankel_hf, perazzo_dim, perazzo_hf, symmetric_dual_generator, verify_full_perazzo,
    CaseTag, PerazzoParams, VerificationReport, VerifyMode,
};
use artinian::poly::{parse_linear_form, parse_polynomial, LinearForm, Polynomial, Side, VariableSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

/// The two degree types displayed for `ℓ ∈ span(x_α)` on the toy algebra put
/// 6 and 8 beads in degree 1, where `h_1 = 5`; no computation can match them.
const KNOWN_RED: [u8; 1] = [2];

const PARAMS: [(usize, usize); 5] = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)];
const SAMPLES_PER_CASE: usize = 500;

type Verdict = Result<String, String>;

fn jdt(s: &str) -> JordanDegreeType {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Verdict {
    let mut lines = Vec::new();
    for field in [FieldSpec::Rationals, P] {
        let vars = VariableSet::generic(&["x", "y"]).unwrap();
        let gens: Vec<Polynomial> =
            ["x^3", "x*y^2", "y^3"].iter().map(|g| parse_polynomial(g, &vars, Side::Ring, field).unwrap()).collect();
        let model = GradedAlgebraModel::from_ideal(&gens, 6).map_err(|e| e.to_string())?;
        let ell = parse_linear_form("x + y", &vars, field).unwrap();
        let h = model.hvector();
        let p = jordan_type(&model, &ell).map_err(|e| e.to_string())?;
        let t = jordan_degree_type(&model, &ell).map_err(|e| e.to_string())?;
        ensure(h.entries() == [1, 2, 3, 1], || format!("h = {h}"))?;
        ensure(p == part("(4,2,1)"), || format!("P = {p}"))?;
        ensure(t == jdt("4_0,2_1,1_2"), || format!("JDT = {t}"))?;
        lines.push(format!("{field}: h={h} P={p} JDT={t}"));
    }
    Ok(lines.join("; "))
}

fn criterion_2() -> Verdict {
    let params = PerazzoParams::new(2, 3).unwrap();
    let report =
        verify_full_perazzo(&params, FieldSpec::Prime(7), 0, 0, VerifyMode::Enumerate).map_err(|e| e.to_string())?;
    let seen: BTreeSet<Partition> = report.summary.distinct_types.iter().map(|(p, _)| p.clone()).collect();
    let chain: Vec<Partition> = ["(2^3,1^6)", "(2^4,1^4)", "(3^2,2^2,1^2)", "(4,2^3,1^2)"].map(part).to_vec();
    ensure(seen == chain.iter().cloned().collect(), || format!("types {seen:?}"))?;
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            let ord = dominance_compare(&chain[i], &chain[j]).unwrap();
            ensure(ord == Dominance::Less, || format!("{} vs {}: {ord:?}", chain[i], chain[j]))?;
        }
    }
    let model = perazzo_model(&params, FieldSpec::Rationals);
    let q = FieldSpec::Rationals;
    let degree_type = |s: &str| jordan_degree_type(&model, &parse_linear_form(s, &params.vars(), q).unwrap()).unwrap();
    // (a) and (b), for a few members of each family
    for s in ["y1 + y2", "3*y1 - 2*y2", "x[1,1] + 2*x[0,2] + y1", "y1"] {
        let t = degree_type(s);
        ensure(t == jdt("3_0,3_1,2_1^2,1_1,1_2"), || format!("ℓ = {s}: {t}"))?;
    }
    for s in ["x[2,0] + y1", "2*x[2,0] - x[1,1] + 5*y1 + y2", "x[0,2] + y2"] {
        let t = degree_type(s);
        ensure(t == jdt("4_0,2_1^3,1_1,1_2"), || format!("ℓ = {s}: {t}"))?;
    }
    // (c): the displayed degree types against what the algebra allows
    let displayed = [("x[2,0] + x[0,2]", "2_0,2_1^2,2_2,1_1^3,1_2"), ("x[2,0]", "2_0,2_1,2_2,1_1^6")];
    let h = model.hvector();
    let mut red = Vec::new();
    for (s, shown) in displayed {
        let t = degree_type(s);
        ensure(t.partition() == jdt(shown).partition(), || format!("ℓ = {s}: {}", t.partition()))?;
        ensure(t.bead_counts(4) == h.entries(), || format!("computed {t} breaks bead conservation"))?;
        if t != jdt(shown) {
            let beads = jdt(shown).bead_counts(4);
            red.push(format!("ℓ = {s}: displayed {shown} has beads {beads:?} vs h = {h}, computed {t}"));
        }
    }
    let base = format!(
        "{} forms over GF(7), chain {}",
        report.samples.len(),
        chain.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" < ")
    );
    if red.is_empty() {
        Ok(base)
    } else {
        Err(format!("{base}; (a),(b) match; {}", red.join("; ")))
    }
}

fn reports() -> Vec<VerificationReport> {
    PARAMS
        .iter()
        .map(|&(m, d)| {
            let params = PerazzoParams::new(m, d).unwrap();
            verify_full_perazzo(&params, P, SAMPLES_PER_CASE, 1, VerifyMode::Sample).unwrap()
        })
        .collect()
}

fn criterion_3(reports: &[VerificationReport]) -> Verdict {
    let mut lines = Vec::new();
    for r in reports {
        let mut literal = 0;
        for tag in [CaseTag::CaseI, CaseTag::CaseII, CaseTag::CaseIII] {
            let n = r.samples.iter().filter(|s| s.case == tag).count();
            ensure(n >= SAMPLES_PER_CASE, || format!("{}: {n} samples for {tag}", r.params))?;
        }
        for s in r.samples.iter().filter(|s| s.literal_match) {
            literal += 1;
            ensure(s.computed == s.predicted, || {
                format!(
                    "{} sample {} ({}): computed {} predicted {}",
                    r.params, s.index, s.ell, s.computed, s.predicted
                )
            })?;
            if s.case != CaseTag::CaseIII {
                let want = s.predicted_jdt.as_ref().ok_or("missing predicted JDT")?;
                ensure(&s.computed_jdt == want, || {
                    format!("{} sample {}: JDT {} predicted {want}", r.params, s.index, s.computed_jdt)
                })?;
            }
        }
        ensure(r.summary.mismatches == 0, || format!("{}: {} mismatches", r.params, r.summary.mismatches))?;
        lines.push(format!("{} {literal} literal/0 mismatches", r.params));
    }
    Ok(lines.join("; "))
}

fn criterion_4(reports: &[VerificationReport]) -> Verdict {
    let mut lines = Vec::new();
    for r in reports {
        let (m, d) = (r.params.m(), r.params.d());
        let want = 2 * binom(d + m - 2, m - 1);
        for s in r.samples.iter().filter(|s| s.case == CaseTag::CaseII && s.literal_match) {
            ensure(s.computed.num_parts() == want, || {
                format!(
                    "{} sample {}: {} has {} parts, want {want}",
                    r.params,
                    s.index,
                    s.computed,
                    s.computed.num_parts()
                )
            })?;
        }
        lines.push(format!("{}: {want}", r.params));
    }
    Ok(lines.join(", "))
}

/// Closed form for the largest `a`, evaluated independently of the library.
fn a_max_formula(m: usize, d: usize) -> usize {
    if d % 2 == 1 {
        binom((d - 1) / 2 + m - 1, m - 1) + 2 * (0..=(d - 3) / 2).map(|i| binom(i + m - 1, m - 1)).sum::<usize>()
    } else {
        2 * (0..=(d - 2) / 2).map(|i| binom(i + m - 1, m - 1)).sum::<usize>()
    }
}

/// `ℓ` with only x-coefficients, read off a divided-power form `G` of degree
/// `d−1` in the y's: `a_α = coefficient of Y^α in G`, so that `ℓ∘F = G`.
fn ell_for(params: &PerazzoParams, g: &Polynomial) -> LinearForm {
    let vars = params.vars();
    let tuples = vars.x_tuples().unwrap().to_vec();
    let a: Vec<FieldElement> = tuples
        .iter()
        .map(|alpha| {
            g.terms()
                .find(|(mono, _)| mono.exponents() == alpha.as_slice())
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| P.zero())
        })
        .collect();
    LinearForm::from_blocks(&vars, P, a, vec![P.zero(); params.m()]).unwrap()
}

fn criterion_5(reports: &[VerificationReport]) -> Verdict {
    let mut lines = Vec::new();
    for r in reports {
        let params = r.params;
        let (m, d) = (params.m(), params.d());
        let (lo, hi) = a_bounds(&params);
        ensure((lo, hi) == (d, a_max_formula(m, d)), || format!("{params}: bounds ({lo},{hi})"))?;
        let model = perazzo_model(&params, P);
        let f = full_perazzo_form(&params, P);
        let dim = model.dim();
        // Y_m^{d-1}
        let mut top = vec![0u32; m];
        top[m - 1] = (d - 1) as u32;
        let ymin = params.vars().x_index_of(&top).unwrap();
        let mut a = vec![P.zero(); params.n_plus_1()];
        a[ymin] = P.one();
        let lmin = LinearForm::from_blocks(&params.vars(), P, a, vec![P.zero(); m]).unwrap();
        let g = lmin.to_polynomial().contract(&f).unwrap();
        let amin = hilbert_function(&g).unwrap().total();
        ensure(amin == d, || format!("{params}: a = {amin} for ℓ∘F = {g}"))?;
        ensure(jordan_type(&model, &lmin).unwrap() == two_one(d, dim), || format!("{params}: minimal type"))?;
        // the symmetric divided-power generator in the y's
        let sym = symmetric_dual_generator(m, d - 1, P).unwrap();
        let lmax = ell_for(&params, &sym);
        let g = lmax.to_polynomial().contract(&f).unwrap();
        let amax = hilbert_function(&g).unwrap().total();
        ensure(amax == hi, || format!("{params}: a = {amax}, want {hi}"))?;
        ensure(jordan_type(&model, &lmax).unwrap() == two_one(hi, dim), || format!("{params}: maximal type"))?;
        for s in r.samples.iter().filter(|s| s.case == CaseTag::CaseIII) {
            let p = &s.computed;
            let a = p.parts().iter().filter(|&&x| x == 2).count();
            ensure(p.largest() <= 2 && p == &two_one(a, dim) && lo <= a && a <= hi, || {
                format!("{params} sample {}: {p}", s.index)
            })?;
        }
        lines.push(format!("{params} a in [{lo},{hi}]"));
    }
    Ok(lines.join(", "))
}

fn criterion_6() -> Verdict {
    let params = PerazzoParams::new(2, 5).unwrap();
    let f = full_perazzo_form(&params, P);
    let check = |a: &[FieldElement]| -> Result<(), String> {
        let ell = LinearForm::from_blocks(&params.vars(), P, a.to_vec(), vec![P.zero(); 2]).unwrap();
        let g = ell.to_polynomial().contract(&f).unwrap();
        let direct = hilbert_function(&g).unwrap();
        let by_rank = hankel_hf(a, 5).unwrap();
        ensure(direct == by_rank, || format!("a = {a:?}: hankel {by_rank}, catalecticant {direct}"))
    };
    ensure(hankel_hf(&elems(P, &[1, 0, 0, 0, 0]), 5).unwrap().entries() == [1, 1, 1, 1, 1], || "rank 1".into())?;
    ensure(hankel_hf(&elems(P, &[1, 0, 0, 0, 1]), 5).unwrap().entries() == [1, 2, 2, 2, 1], || "rank 2".into())?;
    ensure(hankel_hf(&elems(P, &[1, 0, 1]), 3).unwrap().entries() == [1, 2, 1], || "d = 3".into())?;
    check(&elems(P, &[1, 0, 0, 0, 0]))?;
    check(&elems(P, &[1, 0, 0, 0, 1]))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut by_s = [0usize; 4];
    for i in 0..200 {
        // a third uniform, the rest sums of r geometric rows (Hankel rank r)
        let a: Vec<FieldElement> = if i % 3 == 0 {
            (0..5).map(|_| P.from_u64(rng.gen_range(0..32003))).collect()
        } else {
            let r = 1 + (i / 3) % 3;
            let mut a = vec![P.zero(); 5];
            for _ in 0..r {
                let (c, t) = (P.from_u64(rng.gen_range(1..32003)), P.from_u64(rng.gen_range(0..32003)));
                for (k, ak) in a.iter_mut().enumerate() {
                    *ak = &*ak + &(&c * &t.pow(k as u32));
                }
            }
            a
        };
        if a.iter().all(FieldElement::is_zero) {
            continue;
        }
        check(&a)?;
        by_s[hankel_hf(&a, 5).unwrap().get(2)] += 1;
    }
    Ok(format!("200 a-vectors, h_2 distribution {:?}", &by_s[1..]))
}

fn criterion_7() -> Verdict {
    let mut lines = Vec::new();
    for (m, d) in PARAMS {
        let params = PerazzoParams::new(m, d).unwrap();
        let formula: Vec<usize> = (0..=d)
            .map(|i| if i == 0 || i == d { 1 } else { binom(i + m - 1, m - 1) + binom(d - i + m - 1, m - 1) })
            .collect();
        let computed = hilbert_function(&full_perazzo_form(&params, P)).unwrap();
        let closed = perazzo_hf(&params);
        ensure(closed.entries() == formula.as_slice(), || format!("{params}: {closed} vs {formula:?}"))?;
        ensure(computed == closed, || format!("{params}: catalecticant {computed} vs {closed}"))?;
        let dim = 2 * binom(d + m - 1, m);
        ensure(perazzo_dim(&params) == dim && computed.total() == dim, || format!("{params}: dim"))?;
        lines.push(format!("{params} {computed} dim {dim}"));
    }
    ensure(lines.iter().any(|l| l.contains("(1,13,12,13,1) dim 40")), || "(3,4) golden".into())?;
    Ok(lines.join(", "))
}

fn criterion_8() -> Verdict {
    let mut failed = Vec::new();
    for (name, suite) in props::SUITES {
        if let Err(e) = suite() {
            failed.push(format!("{name}: {e}"));
        }
    }
    if failed.is_empty() {
        Ok(format!("{} suites x {} trials", props::SUITES.len(), props::CASES))
    } else {
        Err(failed.join("; "))
    }
}

fn main() {
    let reports = reports();
    let results: Vec<(u8, &str, Verdict)> = vec![
        (1, "ideal quotient golden", criterion_1()),
        (2, "toy Perazzo enumeration", criterion_2()),
        (3, "predicted Jordan types", criterion_3(&reports)),
        (4, "generic part count", criterion_4(&reports)),
        (5, "range of a", criterion_5(&reports)),
        (6, "Hankel h-vectors", criterion_6()),
        (7, "HF and dim formulas", criterion_7()),
        (8, "property suites", criterion_8()),
    ];
    let mut red = Vec::new();
    for (id, name, verdict) in &results {
        match verdict {
            Ok(detail) => println!("criterion {id} [{name}]: PASS  {detail}"),
            Err(detail) => {
                let note = if KNOWN_RED.contains(id) { " (known)" } else { "" };
                println!("criterion {id} [{name}]: FAIL{note}  {detail}");
                red.push(*id);
            }
        }
    }
    if red != KNOWN_RED {
        eprintln!("unexpected set of failing criteria: {red:?}, expected {KNOWN_RED:?}");
        std::process::exit(1);
    }
    println!(
        "acceptance: {} of {} criteria pass; known failures {KNOWN_RED:?}",
        results.len() - red.len(),
        results.len()
    );
}
