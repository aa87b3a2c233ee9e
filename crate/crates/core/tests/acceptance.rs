//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use polymat::lab::{run_harness, Harness, IdealSpace, ItemStatus, LabReport};
use polymat::polymatroid::{
    has_nonpure_exchange, is_componentwise_polymatroidal, is_componentwise_veronese,
    is_polymatroidal, veronese, VeroneseParams,
};
use polymat::quotients::{
    check_lq_order, componentwise_veronese_lq, extend_lq_veronese, find_lq_order,
};
use polymat::resolution::{
    betti_table, has_linear_relations, has_linear_resolution, is_componentwise_linear,
};
use polymat::{Characteristic, Error, Limits, Monomial, MonomialIdeal, VarSubset};

const Q: Characteristic = Characteristic::ZERO;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ideal(text: &str, n: usize) -> MonomialIdeal {
    MonomialIdeal::parse(text, n).unwrap()
}

fn mono(text: &str, n: usize) -> Monomial {
    ideal(text, n).gens()[0].clone()
}

fn ones(idx: &[usize], n: usize) -> VarSubset {
    VarSubset::from_one_based(idx, n).unwrap()
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Exhaustive spaces of the equivalence corpus.
fn tiny_spaces() -> Vec<IdealSpace> {
    vec![
        IdealSpace::exhaustive(2, 4, 14),
        IdealSpace::exhaustive(3, 3, 4),
    ]
}

fn corpus_spaces() -> Vec<IdealSpace> {
    let mut s = tiny_spaces();
    s.push(IdealSpace::sampled(3, 3, 5, 250, 20_240_601));
    s.push(IdealSpace::sampled(4, 3, 5, 250, 20_240_602));
    s
}

fn corpus() -> Vec<MonomialIdeal> {
    corpus_spaces()
        .iter()
        .flat_map(|s| s.ideals(&Limits::default()).unwrap())
        .collect()
}

fn clean(r: &LabReport) -> Result<(), String> {
    let s = &r.summary;
    ensure(s.violations.is_empty(), || {
        format!("violations at {:?}", s.violations)
    })?;
    ensure(s.failed.is_empty(), || format!("errors at {:?}", s.failed))?;
    ensure(s.skipped.is_empty(), || {
        format!("budget skips at {:?}", s.skipped)
    })
}

fn c1() -> Check {
    let i = ideal("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6);
    let c = ones(&[4], 6);
    let t = Instant::now();
    let l = i.localize(&c).map_err(err)?;
    let dt = t.elapsed();
    ensure(l == ideal("x2*x3, x3*x5*x6", 6), || format!("got ({l})"))?;
    ensure(dt < Duration::from_millis(1), || {
        format!("localization took {dt:?}")
    })?;
    Ok(format!("({l})"))
}

fn c2() -> Check {
    let i = ideal("x1^2, x1*x2, x3^2, x2*x3", 3);
    ensure(!is_polymatroidal(&i).map_err(err)?.holds, || {
        "polymatroidal".into()
    })?;
    for mask in 0..8 {
        let l = i.localize(&VarSubset::from_mask(mask, 3)).map_err(err)?;
        ensure(l.is_single_degree().map_err(err)?, || {
            format!("localization {mask:03b} is ({l})")
        })?;
    }
    ensure(!has_linear_resolution(&i, Q).map_err(err)?, || {
        "linear resolution".into()
    })?;
    Ok("not polymatroidal, 8 single-degree localizations, no linear resolution".into())
}

fn c3() -> Check {
    let i = ideal("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3);
    ensure(has_linear_resolution(&i, Q).map_err(err)?, || {
        "I not linear".into()
    })?;
    for k in 0..3 {
        let c = i.colon(&Monomial::var(3, k)).map_err(err)?;
        ensure(has_linear_resolution(&c, Q).map_err(err)?, || {
            format!("I : x{} = ({c}) not linear", k + 1)
        })?;
    }
    let p = is_polymatroidal(&i).map_err(err)?;
    ensure(!p.holds, || "polymatroidal".into())?;
    let w = p.witness().ok_or("no exchange witness")?;
    ensure(
        w.u == mono("x1*x3^2", 3) && w.v == mono("x2^2*x3", 3) && w.i == 0,
        || format!("witness u={}, v={}, i={}", w.u, w.v, w.i + 1),
    )?;
    Ok(format!("witness u={}, v={}, i={}", w.u, w.v, w.i + 1))
}

fn c4() -> Check {
    let b = ideal(
        "x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4",
        4,
    );
    for k in 1..=4 {
        let l = b.localize(&ones(&[k], 4)).map_err(err)?;
        // the unit ideal is resolved by S itself
        ensure(
            l.is_unit() || has_linear_resolution(&l, Q).map_err(err)?,
            || format!("(b) I(P_{k}) = ({l})"),
        )?;
    }
    ensure(!is_polymatroidal(&b).map_err(err)?.holds, || {
        "(b) polymatroidal".into()
    })?;

    let c = ideal(
        "x1^3, x1^2*x2, x1^2*x3, x2^3, x1*x2^2, x2^2*x3, x3^3, x1*x3^2, x2*x3^2",
        3,
    );
    ensure(has_linear_relations(&c, Q).map_err(err)?, || {
        "(c) no linear relations".into()
    })?;
    for k in 1..=3 {
        let l = c.localize(&ones(&[k], 3)).map_err(err)?;
        ensure(
            l.is_unit() || is_polymatroidal(&l).map_err(err)?.holds,
            || format!("(c) I(P_{k}) = ({l})"),
        )?;
    }
    ensure(!is_polymatroidal(&c).map_err(err)?.holds, || {
        "(c) polymatroidal".into()
    })?;
    Ok("(b) and (c) as stated".into())
}

fn c5() -> Check {
    let i = ideal("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3);
    ensure(
        is_componentwise_polymatroidal(&i, 2).map_err(err)?.holds,
        || "not componentwise polymatroidal".into(),
    )?;
    let l = i
        .power(2)
        .map_err(err)?
        .component(6)
        .map_err(err)?
        .localize(&ones(&[3], 3))
        .map_err(err)?;
    ensure(l == ideal("x1*x2^3, x2^4, x1^2*x2, x1^3", 3), || {
        format!("got ({l})")
    })?;
    ensure(!l.is_single_degree().map_err(err)?, || {
        "single degree".into()
    })?;
    Ok(format!("(({l}))"))
}

fn c6() -> Check {
    let i = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
    ensure(has_nonpure_exchange(&i).map_err(err)?.holds, || {
        "no non-pure exchange".into()
    })?;
    let cw = is_componentwise_polymatroidal(&i, 1).map_err(err)?;
    ensure(!cw.holds && cw.failing_degree == Some(3), || {
        format!("componentwise check {cw:?}")
    })?;
    let cert = find_lq_order(&MonomialIdeal::zero(3), i.gens(), &Limits::default())
        .map_err(err)?
        .ok_or("no linear-quotients order")?;
    ensure(cert.verify() && cert.ideal() == i, || {
        "certificate does not verify".into()
    })?;
    for u in i.capped_divisors() {
        let c = i.colon(&u).map_err(err)?;
        if c.is_unit() {
            continue;
        }
        ensure(
            is_componentwise_linear(&c, Q, 1).map_err(err)?.holds,
            || format!("I : {u} = ({c})"),
        )?;
    }
    Ok(format!(
        "order {:?}",
        cert.appended
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
    ))
}

fn c7() -> Check {
    let r = run_harness(
        Harness::Equivalences,
        &corpus_spaces(),
        Q,
        &Limits::default(),
    )
    .map_err(err)?;
    clean(&r)?;
    let poly = r
        .items
        .iter()
        .filter(|it| it.verdicts.get("polymatroidal") == Some(&true))
        .count();
    let sensitive = r
        .items
        .iter()
        .filter(|it| it.note.as_deref().is_some_and(|n| n.contains("convention")))
        .count();
    Ok(format!(
        "{} ideals, {poly} polymatroidal, {sensitive} convention-sensitive, 0 violations",
        r.items.len()
    ))
}

fn c8() -> Check {
    let spaces: Vec<IdealSpace> = (1..=4).map(IdealSpace::squarefree).collect();
    let r = run_harness(
        Harness::Squarefree { kmax: 3 },
        &spaces,
        Q,
        &Limits::default(),
    )
    .map_err(err)?;
    clean(&r)?;
    let m = r
        .items
        .iter()
        .filter(|it| it.verdicts.get("matroidal") == Some(&true))
        .count();
    Ok(format!(
        "{} squarefree ideals, {m} matroidal, 0 violations",
        r.items.len()
    ))
}

/// All caps vectors of length `n` with entries in `0..=hi`.
fn caps(n: usize, hi: u32) -> Vec<Vec<u32>> {
    common::box_monomials(&vec![hi; n])
        .into_iter()
        .map(|m| m.exps().to_vec())
        .collect()
}

fn c9() -> Check {
    let mut valid = 0usize;
    let mut rejected = 0usize;
    for n in 1..=4 {
        for d in 1..=4u32 {
            let mut ps: Vec<VeroneseParams> = caps(n, d + 1)
                .into_iter()
                .filter_map(|a| VeroneseParams::new(d, a).ok())
                .map(|p| p.normalized())
                .collect();
            ps.sort_by(|a, b| a.caps().cmp(b.caps()));
            ps.dedup();
            let qs: Vec<(VeroneseParams, MonomialIdeal)> = caps(n, d + 1)
                .into_iter()
                .filter_map(|b| VeroneseParams::new(d + 1, b).ok())
                .map(|q| {
                    let j = veronese(&q);
                    (q, j)
                })
                .collect();
            let m = MonomialIdeal::maximal(n);
            for p in &ps {
                let im = veronese(p).product(&m).map_err(err)?;
                for (q, j) in &qs {
                    if im.is_subset_of(j) {
                        let cert =
                            extend_lq_veronese(p, q).map_err(|e| format!("{p} -> {q}: {e}"))?;
                        ensure(cert.base == im && cert.ideal() == *j, || {
                            format!("{p} -> {q}: wrong ideals")
                        })?;
                        let recheck = check_lq_order(&im, &cert.appended).map_err(err)?;
                        ensure(recheck.certificate() == Some(&cert), || {
                            format!("{p} -> {q}: does not verify")
                        })?;
                        valid += 1;
                    } else if n <= 3 {
                        match extend_lq_veronese(p, q) {
                            Err(Error::Precondition(_)) => rejected += 1,
                            other => {
                                return Err(format!(
                                    "{p} -> {q}: expected a precondition error, got {other:?}"
                                ))
                            }
                        }
                    }
                }
            }
        }
    }

    let mut cw = 0usize;
    for i in corpus() {
        if !is_componentwise_veronese(&i, 1).map_err(err)?.holds {
            continue;
        }
        let outcome = componentwise_veronese_lq(&i)
            .map_err(err)?
            .ok_or_else(|| format!("({i}): no chain"))?;
        let cert = outcome
            .certificate()
            .ok_or_else(|| format!("({i}): chain fails"))?;
        ensure(cert.verify(), || format!("({i}): chain does not verify"))?;
        let found = find_lq_order(
            &MonomialIdeal::zero(i.nvars()),
            i.gens(),
            &Limits::default(),
        )
        .map_err(err)?;
        ensure(found.is_some(), || format!("({i}): search finds no order"))?;
        cw += 1;
    }
    Ok(format!("{valid} extensions verified, {rejected} invalid pairs rejected, {cw} componentwise-Veronese ideals certified"))
}

fn c10() -> Check {
    let lim = Limits::default();
    let a = run_harness(Harness::Conjecture, &tiny_spaces(), Q, &lim).map_err(err)?;
    let b = run_harness(Harness::Conjecture, &tiny_spaces(), Q, &lim).map_err(err)?;
    clean(&a)?;
    ensure(a.summary.counterexamples.is_empty(), || {
        format!("counterexamples at {:?}", a.summary.counterexamples)
    })?;
    ensure(a.deterministic_json() == b.deterministic_json(), || {
        "reports differ between runs".into()
    })?;
    let agree = a
        .items
        .iter()
        .filter(|it| it.status == ItemStatus::Ok)
        .count();
    Ok(format!(
        "{} ideals, {agree} agree, reports identical",
        a.items.len()
    ))
}

fn c11() -> Check {
    let ideals = common::random_ideals(20_240_611, 200, 4, 2..=4, 8);
    let mut entries = 0usize;
    let largest = ideals.iter().map(|i| i.num_gens()).max().unwrap_or(0);
    for i in &ideals {
        for ch in [0u64, 2] {
            let t = betti_table(i, Characteristic::new(ch).unwrap()).map_err(err)?;
            let got: Vec<(usize, u64, u64)> =
                t.entries().iter().map(|e| (e.i, e.j, e.rank)).collect();
            let want: Vec<(usize, u64, u64)> = common::taylor_betti(i, ch)
                .into_iter()
                .map(|((a, b), r)| (a, b, r))
                .collect();
            ensure(got == want, || {
                format!("({i}) char {ch}: {got:?} vs {want:?}")
            })?;
            entries += got.len();
        }
    }
    Ok(format!(
        "200 ideals with up to {largest} generators, {entries} nonzero entries agree"
    ))
}

fn c12() -> Check {
    let mut hits = 0usize;
    for i in corpus() {
        let n = i.nvars();
        let pure: HashMap<usize, ()> = i
            .gens()
            .iter()
            .filter_map(|g| g.pure_power_var())
            .map(|k| (k, ()))
            .collect();
        if pure.len() < n || !has_linear_resolution(&i, Q).map_err(err)? {
            continue;
        }
        let k = i.single_degree().map_err(err)? as u32;
        ensure(i == MonomialIdeal::maximal_power(n, k), || {
            format!("({i}) is not m^{k}")
        })?;
        hits += 1;
    }
    for n in 1..=4 {
        for k in 1..=4 {
            let mk = MonomialIdeal::maximal_power(n, k);
            ensure(has_linear_resolution(&mk, Q).map_err(err)?, || {
                format!("m^{k} in {n} variables")
            })?;
        }
    }
    Ok(format!(
        "{hits} corpus ideals with all pure powers and a linear resolution, all m^k"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 12] = [
        ("C1 localization example", c1, Duration::from_millis(1000)),
        ("C2 single-degree localizations", c2, Duration::from_secs(1)),
        ("C3 linear colons", c3, Duration::from_secs(5)),
        (
            "C4 linear localizations and relations",
            c4,
            Duration::from_secs(10),
        ),
        ("C5 componentwise powers", c5, Duration::from_secs(5)),
        ("C6 non-pure exchange", c6, Duration::from_secs(10)),
        ("C7 colon characterization", c7, Duration::from_secs(600)),
        (
            "C8 squarefree characterizations",
            c8,
            Duration::from_secs(300),
        ),
        ("C9 Veronese extensions", c9, Duration::from_secs(300)),
        ("C10 conjecture scan", c10, Duration::from_secs(900)),
        ("C11 Betti oracle", c11, Duration::from_secs(600)),
        ("C12 pure powers", c12, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let t = Instant::now();
        let result = f();
        let dt = t.elapsed();
        let result = result.and_then(|s| {
            if dt > limit {
                Err(format!("took {dt:?}, limit {limit:?}"))
            } else {
                Ok(s)
            }
        });
        match result {
            Ok(s) => println!("PASS {name} [{:.3}s] {s}", dt.as_secs_f64()),
            Err(s) => {
                failed += 1;
                println!("FAIL {name} [{:.3}s] {s}", dt.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
