//! `fg`: exact structure and character computations for the exceptional
//! Lie superalgebras F(4) and G(3).
//!
//! Output is deterministic: identical invocations produce identical bytes.
//! Exit codes: 0 on success, 1 on a mathematical-consistency failure (the
//! witness is serialized to standard error), 2 on usage errors.

mod cache;
mod render;
mod verify;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fg_core::blocks::{block_weight_at, weights_of_block, BlockId};
use fg_core::category::{
    build_quiver, bwb_table, emit_relations, projective, quiver_dot, translation_map,
};
use fg_core::characters::CharContext;
use fg_core::rootsystems::{build_root_system, odd_base_orbit};
use fg_core::weightspace::{q_from_str, AlgebraId, Q, Weight};
use fg_core::weylgroup::generate_weyl;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fg", version, about = "Exact F(4)/G(3) block and character computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra: f4 or g3
    #[arg(long, value_parser = parse_algebra)]
    algebra: AlgebraId,
}

fn parse_algebra(s: &str) -> std::result::Result<AlgebraId, String> {
    AlgebraId::parse(s).ok_or_else(|| format!("unknown algebra {s:?} (expected f4 or g3)"))
}

#[derive(Subcommand)]
enum Command {
    /// Root system data: roots, base, Cartan matrix, rho vectors
    Rootsys {
        #[command(subcommand)]
        action: RootsysCmd,
    },
    /// Weyl group queries
    Weyl {
        #[command(subcommand)]
        action: WeylCmd,
    },
    /// Block enumeration
    Blocks {
        #[command(subcommand)]
        action: BlocksCmd,
    },
    /// Simple characters and superdimensions
    Char {
        #[command(subcommand)]
        action: CharCmd,
    },
    /// Block quiver window
    Quiver {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        block: String,
        #[arg(long, default_value = "6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cohomology table of a block window
    Bwb {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        block: String,
        #[arg(long, default_value = "6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Projective radical layers over a block window
    Projectives {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        block: String,
        #[arg(long, default_value = "4", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Path-algebra relations of a block
    Relations {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        block: String,
        #[arg(long, default_value = "6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
    },
    /// Translation-functor weight map to the next block up
    Translate {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Source block, e.g. 1,1 for F4 or 1 for G3
        #[arg(long)]
        from: String,
        #[arg(long, default_value = "-6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_min: Q,
        #[arg(long, default_value = "6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the cross-validation suites
    Verify {
        /// Suite: all, dominance, characters, quiver, translation, cache
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum RootsysCmd {
    Dump {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Print the group order
    Order {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Apply every element to a weight
    Orbit {
        /// Weight in JSON form, e.g. {"algebra":"F4","scaled":[6,4,2,4],"scale":2}
        #[arg(long)]
        weight: String,
    },
}

#[derive(Subcommand)]
enum BlocksCmd {
    List {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Block label, e.g. 1,1 for F4 or 1 for G3
        #[arg(long)]
        block: String,
        #[arg(long, default_value = "-3", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_min: Q,
        #[arg(long, default_value = "6", value_parser = q_from_cli, allow_hyphen_values = true)]
        c_max: Q,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct CharTarget {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Block label, e.g. 1,1 for F4 or 1 for G3
    #[arg(long)]
    block: String,
    /// The c parameter, e.g. 2 or -3/2
    #[arg(long, value_parser = q_from_cli, allow_hyphen_values = true)]
    c: Q,
}

#[derive(Subcommand)]
enum CharCmd {
    /// Full simple character with both specializations
    Compute {
        #[command(flatten)]
        target: CharTarget,
        /// direct (subset-sum formulas) or recursion (exact sequences)
        #[arg(long, default_value = "direct")]
        method: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cache directory (also FG_CACHE_DIR); default ~/.cache/fg
        #[arg(long)]
        cache_dir: Option<std::path::PathBuf>,
        /// Disable the character cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Superdimension only
    Sdim {
        #[command(flatten)]
        target: CharTarget,
    },
}

fn q_from_cli(s: &str) -> std::result::Result<Q, String> {
    q_from_str(s).map_err(|e| e.to_string())
}

fn parse_block(algebra: AlgebraId, s: &str) -> Result<BlockId> {
    match algebra {
        AlgebraId::F4 => {
            let (a, b) = s
                .split_once(',')
                .ok_or_else(|| anyhow!("F4 blocks are labeled a,b (got {s:?})"))?;
            let a: i64 = a.trim().parse()?;
            let b: i64 = b.trim().parse()?;
            if a < b || b < 1 || (a - b) % 3 != 0 {
                bail!("invalid F4 block ({a},{b}): need a >= b >= 1 and a = b mod 3");
            }
            Ok(BlockId::F4 { a, b })
        }
        AlgebraId::G3 => {
            let a: i64 = s.trim().parse()?;
            if a < 1 || a % 2 == 0 {
                bail!("invalid G3 block {a}: need odd a >= 1");
            }
            Ok(BlockId::G3 { a })
        }
        other => bail!("blocks exist only for f4 and g3, not {other}"),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Rootsys { action } => match action {
            RootsysCmd::Dump { algebra, format } => {
                let rs = build_root_system(algebra.algebra);
                let orbit = odd_base_orbit(&rs);
                let doc = render::rootsys_json(&rs, &orbit);
                emit(&doc, format, render::rootsys_table)
            }
        },
        Command::Weyl { action } => match action {
            WeylCmd::Order { algebra } => {
                let group = generate_weyl(algebra.algebra)?;
                println!("{}", group.order());
                Ok(())
            }
            WeylCmd::Orbit { weight } => {
                let w: Weight = serde_json::from_str(&weight).context("parsing weight JSON")?;
                let group = generate_weyl(w.algebra())?;
                let items: Vec<Value> = group
                    .elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        json!({
                            "element": i,
                            "image": e.apply(&w),
                            "sign": e.sign,
                        })
                    })
                    .collect();
                println!("{}", json!({"schema": 1, "orbit": items}));
                Ok(())
            }
        },
        Command::Blocks { action } => match action {
            BlocksCmd::List { algebra, block, c_min, c_max, format } => {
                let rs = build_root_system(algebra.algebra);
                let block = parse_block(algebra.algebra, &block)?;
                let ws = weights_of_block(&rs, &block, c_min, c_max)?;
                let doc = json!({
                    "schema": 1,
                    "block": block.to_string(),
                    "weights": ws,
                });
                emit(&doc, format, render::blocks_table)
            }
        },
        Command::Char { action } => match action {
            CharCmd::Compute { target, method, format, cache_dir, no_cache } => {
                let recursion = match method.as_str() {
                    "direct" => false,
                    "recursion" => true,
                    other => bail!("unknown method {other:?} (expected direct or recursion)"),
                };
                let ctx = CharContext::new(target.algebra.algebra)?;
                let block = parse_block(target.algebra.algebra, &target.block)?;
                let bw = block_weight_at(&ctx.rs, &block, target.c)?;
                let key = cache::CacheKey::of(&ctx, &bw, recursion);
                let dir = if no_cache { None } else { Some(cache::resolve_dir(cache_dir)?) };
                if let Some(dir) = &dir {
                    if let Some(bytes) = cache::lookup(dir, &key)? {
                        print!("{}", String::from_utf8(bytes)?);
                        return Ok(());
                    }
                }
                let sc = ctx.character(&bw, recursion)?;
                let doc = render::character_json(&bw, &sc);
                let bytes = format!("{}\n", serde_json::to_string(&doc)?);
                if let Some(dir) = &dir {
                    cache::store(dir, &key, bytes.as_bytes())?;
                }
                match format {
                    Format::Json => print!("{bytes}"),
                    _ => println!("{}", render::character_table(&doc)),
                }
                Ok(())
            }
            CharCmd::Sdim { target } => {
                let ctx = CharContext::new(target.algebra.algebra)?;
                let block = parse_block(target.algebra.algebra, &target.block)?;
                let bw = block_weight_at(&ctx.rs, &block, target.c)?;
                println!("{}", ctx.superdimension(&bw)?);
                Ok(())
            }
        },
        Command::Quiver { algebra, block, c_max, format } => {
            let rs = build_root_system(algebra.algebra);
            let block = parse_block(algebra.algebra, &block)?;
            let quiver = build_quiver(&rs, &block, c_max)?;
            if format == Format::Dot {
                print!("{}", quiver_dot(&quiver));
                return Ok(());
            }
            let doc = render::quiver_json(&quiver);
            emit(&doc, format, render::quiver_table)
        }
        Command::Bwb { algebra, block, c_max, format } => {
            let rs = build_root_system(algebra.algebra);
            let block = parse_block(algebra.algebra, &block)?;
            let table = bwb_table(&rs, &block, c_max)?;
            let doc = render::bwb_json(&table);
            emit(&doc, format, render::bwb_table_text)
        }
        Command::Projectives { algebra, block, c_max, format } => {
            let rs = build_root_system(algebra.algebra);
            let block = parse_block(algebra.algebra, &block)?;
            let mut items = Vec::new();
            for bw in weights_of_block(&rs, &block, -c_max, c_max)? {
                items.push(render::projective_json(&projective(&rs, &bw)?));
            }
            let doc = json!({"schema": 1, "block": block.to_string(), "projectives": items});
            emit(&doc, format, render::projectives_table)
        }
        Command::Relations { algebra, block, c_max } => {
            let rs = build_root_system(algebra.algebra);
            let block = parse_block(algebra.algebra, &block)?;
            let rel = emit_relations(&rs, &block, c_max)?;
            let doc = json!({"schema": 1, "relations": rel});
            println!("{}", serde_json::to_string(&doc)?);
            Ok(())
        }
        Command::Translate { algebra, from, c_min, c_max, format } => {
            let rs = build_root_system(algebra.algebra);
            let block = parse_block(algebra.algebra, &from)?;
            let map = translation_map(&rs, &block, c_min, c_max)?;
            let doc = render::translation_json(&map);
            emit(&doc, format, render::translation_table)
        }
        Command::Verify { suite } => verify::run_suite(&suite),
    }
}

fn emit(doc: &Value, format: Format, table: impl Fn(&Value) -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(doc)?),
        Format::Table | Format::Dot => println!("{}", table(doc)),
    }
    Ok(())
}
