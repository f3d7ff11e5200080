//! Command-line adapter: parses arguments, calls the library, and renders
//! results as JSON.

use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rockblocks::{
    all_rocks, block_of_multipartition, find_dom_w_chamber, find_dominant, find_n,
    oracle_in_support, oracle_wall_bounds, rock_weight, scopes_equivalent, test_rock,
    weight_from_block, Abacus, AlcovePoint, Block, Context, EnumerationBudget, Error,
    Multipartition, Rational, WallBounds,
};
use serde_json::{json, Map, Value};

pub const MAX_BOXES_VAR: &str = "ROCKBLOCKS_MAX_BOXES";
const DEFAULT_MAX_BOXES: i64 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "rockblocks",
    version,
    about = "Scopes chambers and RoCK blocks of affine sl_e"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Quantum characteristic
    #[arg(long)]
    e: Option<usize>,
    /// Comma-separated charges, reduced mod e
    #[arg(long, allow_hyphen_values = true)]
    multicharge: Option<String>,
    /// Residue counts as "r:count,..."; absent residues are 0
    #[arg(long)]
    block: Option<String>,
    /// JSON request file; command-line flags take precedence
    #[arg(long)]
    input: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Block of a multipartition
    Block {
        #[command(flatten)]
        common: Common,
        /// Components separated by "|", parts by ","
        #[arg(long)]
        multipartition: Option<String>,
    },
    /// Greedy reduced word to the dominant block
    FindDominant {
        #[command(flatten)]
        common: Common,
    },
    /// Dominant block and a point of the block's alcove
    Chamber {
        #[command(flatten)]
        common: Common,
    },
    /// Wall bounds k+ of a dominant block
    FindN {
        #[command(flatten)]
        common: Common,
    },
    /// Whether the block is RoCK
    TestRock {
        #[command(flatten)]
        common: Common,
        /// Print one line per pair instead of JSON
        #[arg(long)]
        verbose: bool,
    },
    /// Closest RoCK block in the Weyl chamber of a point
    RockWeight {
        #[command(flatten)]
        common: Common,
        /// Coordinates as "p/q,..."
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// A RoCK block for every Weyl chamber
    AllRocks {
        #[command(flatten)]
        common: Common,
    },
    /// Bead counts per runner at a shift
    WeightFromBlock {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
    },
    /// Abacus of a multipartition
    Abacus {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        multipartition: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        /// Number of rows to draw
        #[arg(long)]
        rows: Option<usize>,
        /// Print the diagram instead of JSON
        #[arg(long)]
        ascii: bool,
    },
    /// Support membership by enumerating multipartitions
    OracleSupport {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_boxes: Option<i64>,
    },
    /// Wall bounds by enumerating multipartitions
    OracleWalls {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_boxes: Option<i64>,
    },
    /// Whether two blocks lie in the same Scopes chamber
    ScopesEquivalent {
        #[command(flatten)]
        common: Common,
        /// The second block, as "r:count,..."
        #[arg(long)]
        other: Option<String>,
    },
}

/// Problems with the request itself, as opposed to the mathematics.
#[derive(Debug)]
struct Usage(String);

enum Failure {
    Usage(Usage),
    Domain(Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(message: impl Into<String>) -> Usage {
    Usage(message.into())
}

/// Exit code and text for one invocation: 0 on success, 1 on usage errors
/// (text meant for stderr), 2 on domain errors (a JSON error document).
pub fn dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    dispatch_with_cap(argv, max_boxes_cap())
}

fn max_boxes_cap() -> i64 {
    std::env::var(MAX_BOXES_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_BOXES)
}

pub fn dispatch_with_cap<I, T>(argv: I, cap: i64) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            return (code, err.render().to_string());
        }
    };
    match run(cli.command, cap) {
        Ok(out) => (0, out),
        Err(Failure::Usage(Usage(message))) => (1, format!("error: {message}\n")),
        Err(Failure::Domain(err)) => {
            let doc = json!({"error": error_kind(&err), "detail": err.to_string()});
            (2, format!("{doc}\n"))
        }
    }
}

pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::InvalidCharacteristic(_) => "invalid_characteristic",
        Error::EmptyMulticharge => "empty_multicharge",
        Error::ResidueOutOfRange { .. } => "residue_out_of_range",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::NegativeCount { .. } => "negative_count",
        Error::InvalidRoot { .. } => "invalid_root",
        Error::CoordinateOutOfRange { .. } => "coordinate_out_of_range",
        Error::OutOfSupport(_) => "out_of_support",
        Error::NotDominant(_) => "not_dominant",
        Error::ComponentCountMismatch { .. } => "component_count_mismatch",
        Error::InvalidPartition(_) => "invalid_partition",
        Error::NegativeBeadCount { .. } => "negative_bead_count",
        Error::NegativeBeta { .. } => "negative_beta",
        Error::OnWall(_) => "on_wall",
        Error::BudgetExceeded(_) => "budget_exceeded",
        Error::AbacusBoundary(_) => "abacus_boundary",
        Error::SwapPrecondition { .. } => "swap_precondition",
        Error::AbacusParse(_) => "abacus_parse",
    }
}

/// Flag values merged over the optional JSON request file.
struct Request {
    common: Common,
    file: Map<String, Value>,
}

impl Request {
    fn new(common: Common) -> Result<Self, Usage> {
        let file = match &common.input {
            None => Map::new(),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
                match serde_json::from_str(&text) {
                    Ok(Value::Object(map)) => map,
                    Ok(_) => return Err(usage("request file must hold a JSON object")),
                    Err(e) => return Err(usage(format!("malformed JSON in {path}: {e}"))),
                }
            }
        };
        Ok(Request { common, file })
    }

    fn field(&self, name: &str) -> Option<&Value> {
        self.file.get(name)
    }

    fn context(&self) -> Result<Arc<Context>, Failure> {
        let e = match (self.common.e, self.field("e")) {
            (Some(e), _) => e,
            (None, Some(v)) => v
                .as_u64()
                .map(|e| e as usize)
                .ok_or_else(|| usage("\"e\" must be a non-negative integer"))?,
            (None, None) => return Err(usage("--e is required").into()),
        };
        let charges: Vec<i64> = match (&self.common.multicharge, self.field("multicharge")) {
            (Some(text), _) => parse_list(text)?,
            (None, Some(v)) => int_array(v, "multicharge")?,
            (None, None) => return Err(usage("--multicharge is required").into()),
        };
        if e == 0 {
            return Err(Error::InvalidCharacteristic(0).into());
        }
        let reduced = charges
            .into_iter()
            .map(|k| k.rem_euclid(e as i64) as usize)
            .collect();
        Ok(Context::new(e, reduced)?)
    }

    fn block_named(
        &self,
        ctx: &Arc<Context>,
        flag: Option<&str>,
        key: &str,
    ) -> Result<Block, Failure> {
        let counts = match (flag, self.field(key)) {
            (Some(text), _) => parse_block_text(text, ctx.e())?,
            (None, Some(v)) => block_json(v, ctx.e())?,
            (None, None) => return Err(usage(format!("--{key} is required")).into()),
        };
        Ok(Block::new(ctx, counts)?)
    }

    fn block(&self, ctx: &Arc<Context>) -> Result<Block, Failure> {
        self.block_named(ctx, self.common.block.as_deref(), "block")
    }

    fn multipartition(&self, flag: Option<&str>) -> Result<Multipartition, Failure> {
        let parts = match (flag, self.field("multipartition")) {
            (Some(text), _) => text
                .split('|')
                .map(|c| {
                    if c.trim().is_empty() {
                        Ok(Vec::new())
                    } else {
                        parse_list(c)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?,
            (None, Some(Value::Array(items))) => items
                .iter()
                .map(|v| int_array(v, "multipartition"))
                .collect::<Result<Vec<_>, _>>()?,
            (None, Some(_)) => {
                return Err(usage("\"multipartition\" must be a list of lists").into())
            }
            (None, None) => return Err(usage("--multipartition is required").into()),
        };
        let parts = parts
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Error::InvalidPartition(Vec::new())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Multipartition::new(parts)?)
    }

    fn point(&self, flag: Option<&str>) -> Result<AlcovePoint, Failure> {
        let coords = match (flag, self.field("point")) {
            (Some(text), _) => text
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?,
            (None, Some(Value::Array(items))) => items
                .iter()
                .map(|v| match v {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => n
                        .as_i64()
                        .map(Rational::from)
                        .ok_or_else(|| usage(format!("bad coordinate {n}"))),
                    other => Err(usage(format!("bad coordinate {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()?,
            (None, Some(_)) => return Err(usage("\"point\" must be a list").into()),
            (None, None) => return Err(usage("--point is required").into()),
        };
        Ok(AlcovePoint::new(coords)?)
    }

    fn integer(&self, flag: Option<i64>, key: &str) -> Result<Option<i64>, Usage> {
        match (flag, self.field(key)) {
            (Some(v), _) => Ok(Some(v)),
            (None, Some(v)) => v
                .as_i64()
                .map(Some)
                .ok_or_else(|| usage(format!("\"{key}\" must be an integer"))),
            (None, None) => Ok(None),
        }
    }

    fn budget(&self, flag: Option<i64>, cap: i64) -> Result<EnumerationBudget, Usage> {
        let asked = self.integer(flag, "max_boxes")?.unwrap_or(cap);
        Ok(EnumerationBudget::boxes(asked.min(cap)))
    }
}

fn parse_list(text: &str) -> Result<Vec<i64>, Usage> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("not an integer: {s:?}")))
        })
        .collect()
}

fn parse_rational(text: &str) -> Result<Rational, Usage> {
    let bad = || usage(format!("not a rational: {text:?}"));
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let (n, d): (i64, i64) = (
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            );
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => text.parse::<i64>().map(Rational::from).map_err(|_| bad()),
    }
}

fn int_array(value: &Value, key: &str) -> Result<Vec<i64>, Usage> {
    value
        .as_array()
        .and_then(|items| items.iter().map(Value::as_i64).collect())
        .ok_or_else(|| usage(format!("\"{key}\" must be a list of integers")))
}

fn set_count(counts: &mut [Option<i64>], residue: &str, count: i64) -> Result<(), Usage> {
    let e = counts.len();
    let r: usize = residue
        .trim()
        .parse()
        .map_err(|_| usage(format!("not a residue: {residue:?}")))?;
    let slot = counts
        .get_mut(r)
        .ok_or_else(|| usage(format!("residue {r} is outside [0, {e})")))?;
    if slot.replace(count).is_some() {
        return Err(usage(format!("residue {r} given twice")));
    }
    Ok(())
}

fn parse_block_text(text: &str, e: usize) -> Result<Vec<i64>, Usage> {
    let mut counts = vec![None; e];
    for entry in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (r, c) = entry
            .split_once(':')
            .ok_or_else(|| usage(format!("expected r:count, got {entry:?}")))?;
        let c = c
            .trim()
            .parse()
            .map_err(|_| usage(format!("not a count: {c:?}")))?;
        set_count(&mut counts, r, c)?;
    }
    Ok(counts.into_iter().map(|c| c.unwrap_or(0)).collect())
}

fn block_json(value: &Value, e: usize) -> Result<Vec<i64>, Usage> {
    match value {
        Value::Object(map) => {
            let mut counts = vec![None; e];
            for (r, c) in map {
                let c = c
                    .as_i64()
                    .ok_or_else(|| usage(format!("count for residue {r} must be an integer")))?;
                set_count(&mut counts, r, c)?;
            }
            Ok(counts.into_iter().map(|c| c.unwrap_or(0)).collect())
        }
        Value::Array(_) => {
            let counts = int_array(value, "block")?;
            if counts.len() != e {
                return Err(usage(format!(
                    "block lists {} counts for e = {e}",
                    counts.len()
                )));
            }
            Ok(counts)
        }
        _ => Err(usage("\"block\" must be an object or a list")),
    }
}

fn block_value(b: &Block) -> Value {
    let map: Map<String, Value> = b
        .counts()
        .iter()
        .enumerate()
        .map(|(r, &c)| (r.to_string(), json!(c)))
        .collect();
    Value::Object(map)
}

fn point_value(p: &AlcovePoint) -> Value {
    Value::Array(p.coords().iter().map(|q| json!(q.to_string())).collect())
}

fn point_key(p: &AlcovePoint) -> String {
    p.coords()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn bounds_value(bounds: &WallBounds) -> Value {
    let map: Map<String, Value> = bounds
        .iter()
        .map(|((i, j), k)| (format!("{i},{j}"), json!(k)))
        .collect();
    Value::Object(map)
}

fn render(value: Value) -> String {
    format!("{value}\n")
}

fn run(command: Command, cap: i64) -> Result<String, Failure> {
    match command {
        Command::Block {
            common,
            multipartition,
        } => {
            let req = Request::new(common)?;
            let ctx = req.context()?;
            let mp = req.multipartition(multipartition.as_deref())?;
            let b = block_of_multipartition(&ctx, &mp)?;
            Ok(render(json!({"block": block_value(&b)})))
        }
        Command::FindDominant { common } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let (word, dom) = find_dominant(&b)?;
            Ok(render(
                json!({"word": word.letters(), "dominant": block_value(&dom)}),
            ))
        }
        Command::Chamber { common } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let (p, dom) = find_dom_w_chamber(&b)?;
            Ok(render(
                json!({"point": point_value(&p), "dominant": block_value(&dom)}),
            ))
        }
        Command::FindN { common } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            Ok(render(json!({"bounds": bounds_value(&find_n(&b)?)})))
        }
        Command::TestRock { common, verbose } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let report = test_rock(&b)?;
            if verbose {
                Ok(format!("{report}\n"))
            } else {
                Ok(render(json!({"rock": report.is_rock()})))
            }
        }
        Command::RockWeight { common, point } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let p = req.point(point.as_deref())?;
            Ok(render(json!({"block": block_value(&rock_weight(&p, &b)?)})))
        }
        Command::AllRocks { common } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let map: Map<String, Value> = all_rocks(&b)?
                .iter()
                .map(|(p, rock)| (point_key(p), block_value(rock)))
                .collect();
            Ok(render(Value::Object(map)))
        }
        Command::WeightFromBlock { common, shift } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let shift = req
                .integer(shift, "shift")?
                .ok_or_else(|| usage("--shift is required"))?;
            let coords = weight_from_block(&b, shift)?;
            Ok(render(
                json!({"t": coords.t, "reference": coords.reference}),
            ))
        }
        Command::Abacus {
            common,
            multipartition,
            shift,
            rows,
            ascii,
        } => {
            let req = Request::new(common)?;
            let ctx = req.context()?;
            let mp = req.multipartition(multipartition.as_deref())?;
            let shift = req
                .integer(shift, "shift")?
                .ok_or_else(|| usage("--shift is required"))?;
            let mut ab = Abacus::from_multipartition(&ctx, &mp, shift)?;
            if let Some(rows) = rows {
                ab = ab.with_rows(rows)?;
            }
            if ascii {
                return Ok(format!("{}\n", ab.render_ascii()));
            }
            let beads: Vec<Vec<usize>> = ab
                .components()
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect();
            Ok(render(json!({
                "rows": ab.rows(),
                "beads": beads,
                "census": ab.runner_census(),
            })))
        }
        Command::OracleSupport { common, max_boxes } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let budget = req.budget(max_boxes, cap)?;
            Ok(render(
                json!({"in_support": oracle_in_support(&b, &budget)?}),
            ))
        }
        Command::OracleWalls { common, max_boxes } => {
            let req = Request::new(common)?;
            let b = req.block(&req.context()?)?;
            let budget = req.budget(max_boxes, cap)?;
            Ok(render(
                json!({"bounds": bounds_value(&oracle_wall_bounds(&b, &budget)?)}),
            ))
        }
        Command::ScopesEquivalent { common, other } => {
            let req = Request::new(common)?;
            let ctx = req.context()?;
            let a = req.block(&ctx)?;
            let b = req.block_named(&ctx, other.as_deref(), "other")?;
            Ok(render(json!({"equivalent": scopes_equivalent(&a, &b)?})))
        }
    }
}
