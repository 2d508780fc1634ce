//! Cross-validation suites behind `fg verify`. Each check prints one
//! PASS/FAIL line; a FAIL serializes its witness and the process exits
//! nonzero.

use anyhow::{bail, Result};
use fg_core::blocks::{is_generic, weights_of_block, BlockId, SpecialVertex};
use fg_core::category::{
    bgg_multiplicity, block_equivalence, build_quiver, bwb_row_euler_consistent, bwb_table,
    emit_relations, equivalence_preserves_adjacency, ext_dim, projective,
    projective_multiplicity, relations_closed, translation_map, QuiverShape,
};
use fg_core::characters::{hull_bound_holds, is_weyl_invariant, CharContext};
use fg_core::weightspace::{q, qi, specialize_sdim, AlgebraId};
use fg_core::weylgroup::{dominance_disagreements, DisagreementClass};

struct Report {
    failures: usize,
}

impl Report {
    fn new() -> Report {
        Report { failures: 0 }
    }

    fn check(&mut self, name: &str, ok: bool, detail: String) {
        if ok {
            println!("PASS  {name}: {detail}");
        } else {
            self.failures += 1;
            println!("FAIL  {name}: {detail}");
        }
    }
}

pub fn run_suite(suite: &str) -> Result<()> {
    let mut report = Report::new();
    match suite {
        "dominance" => dominance(&mut report)?,
        "characters" => characters(&mut report)?,
        "quiver" => quiver(&mut report)?,
        "translation" => translation(&mut report)?,
        "cache" => cache(&mut report)?,
        "all" => {
            dominance(&mut report)?;
            characters(&mut report)?;
            quiver(&mut report)?;
            translation(&mut report)?;
            cache(&mut report)?;
        }
        other => bail!("unknown suite {other:?} (expected all, dominance, characters, quiver, translation, cache)"),
    }
    if report.failures > 0 {
        bail!("{} check(s) failed", report.failures);
    }
    Ok(())
}

fn dominance(report: &mut Report) -> Result<()> {
    for algebra in [AlgebraId::F4, AlgebraId::G3] {
        let bound = 4;
        let witnesses = dominance_disagreements(algebra, bound);
        let grid = fg_core::weylgroup::integral_grid(algebra, bound).len();
        let unexplained: Vec<_> = witnesses
            .iter()
            .filter(|w| w.class == DisagreementClass::Unexplained)
            .collect();
        for w in witnesses.iter().take(4) {
            println!(
                "      witness {}: coordinates={} labels={} ({:?})",
                w.lambda, w.coordinates, w.kac, w.class
            );
        }
        report.check(
            &format!("dominance[{algebra}]"),
            unexplained.is_empty(),
            format!(
                "grid size {}, {} disagreement witnesses, {} unexplained",
                grid,
                witnesses.len(),
                unexplained.len()
            ),
        );
    }
    Ok(())
}

fn characters(report: &mut Report) -> Result<()> {
    let cases = [
        (AlgebraId::F4, BlockId::F4 { a: 1, b: 1 }),
        (AlgebraId::G3, BlockId::G3 { a: 1 }),
    ];
    for (algebra, block) in cases {
        let ctx = CharContext::new(algebra)?;
        let mut agreed = 0;
        let mut euler_ok = 0;
        let mut sdim_ok = 0;
        let mut failures = Vec::new();
        for bw in weights_of_block(&ctx.rs, &block, q(-9, 2), q(9, 2))? {
            let direct = ctx.character(&bw, false)?;
            let rec = ctx.character(&bw, true)?;
            if direct.character == rec.character {
                agreed += 1;
            } else {
                failures.push(format!("paths disagree at {bw}"));
            }
            if ctx.euler_sdim(&bw.lambda) == 0 {
                euler_ok += 1;
            } else {
                failures.push(format!("euler superdimension nonzero at {bw}"));
            }
            let closed = ctx.superdimension(&bw)?;
            let mut ok = closed == direct.sdim;
            if is_generic(&bw) && bw.special.is_none() {
                ok &= ctx.generic_superdimension_oracle(&bw)? == closed;
            }
            if ok {
                sdim_ok += 1;
            } else {
                failures.push(format!("superdimension mismatch at {bw}"));
            }
            if !is_weyl_invariant(&ctx.weyl, &direct.character) {
                failures.push(format!("character not Weyl invariant at {bw}"));
            }
            if !hull_bound_holds(&ctx.rs, &bw.lambda, &direct.character) {
                failures.push(format!("support leaves the cone below {bw}"));
            }
        }
        for f in &failures {
            println!("      {f}");
        }
        report.check(
            &format!("characters[{block}]"),
            failures.is_empty(),
            format!("{agreed} path agreements, {euler_ok} euler checks, {sdim_ok} superdimensions"),
        );
    }
    Ok(())
}

fn quiver(report: &mut Report) -> Result<()> {
    for (algebra, block, shape) in [
        (AlgebraId::F4, BlockId::F4 { a: 1, b: 1 }, QuiverShape::DInf),
        (AlgebraId::F4, BlockId::F4 { a: 4, b: 1 }, QuiverShape::AInf),
        (AlgebraId::G3, BlockId::G3 { a: 1 }, QuiverShape::DInf),
    ] {
        let ctx = CharContext::new(algebra)?;
        let rs = &ctx.rs;
        let window = if algebra == AlgebraId::G3 { q(13, 2) } else { qi(4) };
        let q = build_quiver(rs, &block, window)?;
        let mut failures = Vec::new();
        if q.shape != shape {
            failures.push("wrong shape".to_string());
        }
        let branch_count = (0..q.vertices.len()).filter(|&i| q.degree(i) == 3).count();
        let expected_branches = usize::from(shape == QuiverShape::DInf);
        if branch_count != expected_branches {
            failures.push(format!("{branch_count} branch vertices"));
        }
        // ext symmetry and bound
        for u in &q.vertices {
            for v in &q.vertices {
                let e = ext_dim(rs, u, v)?;
                if e > 1 || e != ext_dim(rs, v, u)? {
                    failures.push(format!("ext irregular at ({u}, {v})"));
                }
            }
        }
        // projectives against the reciprocity recomputation
        let table = bwb_table(rs, &block, window)?;
        let inner = weights_of_block(rs, &block, -window + qi(1), window - qi(1))?;
        for l in &inner {
            let p = projective(rs, l)?;
            for m in &inner {
                let truth = projective_multiplicity(rs, &p, m)?;
                if !(0..=2).contains(&truth) {
                    failures.push(format!("multiplicity out of range at ({l}, {m})"));
                }
                let recomputed = bgg_multiplicity(&table, l, m);
                let endpoint_pair = matches!(
                    (l.special, m.special),
                    (Some(SpecialVertex::Lambda1), Some(SpecialVertex::Lambda2))
                        | (Some(SpecialVertex::Lambda2), Some(SpecialVertex::Lambda1))
                );
                let expected = if endpoint_pair { truth + 1 } else { truth };
                if recomputed != expected {
                    failures.push(format!("reciprocity mismatch at ({l}, {m})"));
                }
            }
        }
        // cohomology rows against Euler characteristics
        let coh = bwb_table(rs, &block, q_small(&block))?;
        for row in &coh.rows {
            if !bwb_row_euler_consistent(&ctx, row)? {
                failures.push(format!("cohomology row fails at {}", row.vertex));
            }
        }
        let rel = emit_relations(rs, &block, window)?;
        if !relations_closed(&rel) {
            failures.push("relations use undeclared arrows".to_string());
        }
        for f in &failures {
            println!("      {f}");
        }
        report.check(
            &format!("quiver[{block}]"),
            failures.is_empty(),
            format!(
                "{} vertices, {} edges, {} cohomology rows",
                q.vertices.len(),
                q.edges.len(),
                coh.rows.len()
            ),
        );
    }
    Ok(())
}

fn q_small(block: &BlockId) -> fg_core::weightspace::Q {
    match block {
        BlockId::G3 { .. } => fg_core::weightspace::q(11, 2),
        _ => fg_core::weightspace::q(5, 2),
    }
}

fn translation(report: &mut Report) -> Result<()> {
    let cases = [
        (AlgebraId::F4, BlockId::F4 { a: 1, b: 1 }, BlockId::F4 { a: 2, b: 2 }),
        (AlgebraId::F4, BlockId::F4 { a: 4, b: 1 }, BlockId::F4 { a: 5, b: 2 }),
        (AlgebraId::G3, BlockId::G3 { a: 1 }, BlockId::G3 { a: 3 }),
    ];
    for (algebra, source, target) in cases {
        let ctx = CharContext::new(algebra)?;
        let rs = &ctx.rs;
        let mut failures = Vec::new();
        let map = translation_map(rs, &source, qi(-5), qi(5))?;
        if map.target != target {
            failures.push("wrong target".to_string());
        }
        let mut seen: Vec<String> = map.pairs.iter().map(|p| p.target.to_string()).collect();
        seen.sort();
        let before = seen.len();
        seen.dedup();
        if seen.len() != before {
            failures.push("image not injective".to_string());
        }
        for t in weights_of_block(rs, &target, qi(-3), qi(3))? {
            if !map.pairs.iter().any(|p| p.target.c == t.c) {
                failures.push(format!("image misses {t}"));
            }
        }
        let pairs = block_equivalence(rs, &source, &target, qi(-4), qi(4))?;
        if !equivalence_preserves_adjacency(rs, &pairs)? {
            failures.push("equivalence breaks adjacency".to_string());
        }
        for f in &failures {
            println!("      {f}");
        }
        report.check(
            &format!("translation[{source} -> {target}]"),
            failures.is_empty(),
            format!("{} pairs mapped", map.pairs.len()),
        );
    }
    Ok(())
}

fn cache(report: &mut Report) -> Result<()> {
    use fg_core::blocks::block_weight_at;
    let dir = tempfile::tempdir()?;
    let ctx = CharContext::new(AlgebraId::F4)?;
    let block = BlockId::F4 { a: 1, b: 1 };
    let mut failures = Vec::new();
    let mut checked = 0;
    for c in [q(-3, 2), qi(2), q(5, 2)] {
        let bw = block_weight_at(&ctx.rs, &block, c)?;
        let key = crate::cache::CacheKey::of(&ctx, &bw, false);
        let sc = ctx.character(&bw, false)?;
        let doc = crate::render::character_json(&bw, &sc);
        let bytes = format!("{}\n", serde_json::to_string(&doc)?);
        crate::cache::store(dir.path(), &key, bytes.as_bytes())?;
        // a warm read must byte-equal an independent recomputation
        let warm = crate::cache::lookup(dir.path(), &key)?.unwrap();
        let fresh_ctx = CharContext::new(AlgebraId::F4)?;
        let fresh = fresh_ctx.character(&bw, false)?;
        let fresh_bytes =
            format!("{}\n", serde_json::to_string(&crate::render::character_json(&bw, &fresh))?);
        if warm != fresh_bytes.as_bytes() {
            failures.push(format!("cache divergence at {bw}"));
        }
        checked += 1;
    }
    // superdimension sanity on the cached entries
    let l1 = block_weight_at(&ctx.rs, &block, q(-3, 2))?;
    if specialize_sdim(&ctx.character(&l1, false)?.character)? != 1 {
        failures.push("endpoint superdimension drifted".to_string());
    }
    for f in &failures {
        println!("      {f}");
    }
    report.check("cache", failures.is_empty(), format!("{checked} entries byte-checked"));
    Ok(())
}
