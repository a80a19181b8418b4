//! Command-line interface. Every command prints JSON on standard output
//! (or DOT with `--format dot`); diagnostics go to standard error.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classification::{
    boundary_profile, gen_ref_quiver, iso, iso_plain_backtrack, morita_census, reference_params,
    PlainGraph, RefQuiverParams,
};
use crate::error::{Error, Result};
use crate::pairs::{find_pairs, hook_scopes_classes, regularity_profile, Direction, PairData, ScopesPair};
use crate::partitions::Partition;
use crate::principal_seed::{check_reciprocity, specht_structures};
use crate::quiver::{ChainOrder, QuiverCache};
use crate::weight2::{delta, hook_core, valid_hooks, BlockData, BlockLabel};

#[derive(Parser, Debug)]
#[command(name = "hookquiver", version, about = "Ext-quivers of weight-2 hook blocks of symmetric groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Chain {
    KFirst,
    LFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusKind {
    Morita,
    Scopes,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partitions of a weight-2 block with their ∂-values and colours.
    Block {
        #[arg(long)]
        prime: usize,
        /// p-core as a comma-separated part list; empty for the principal block.
        #[arg(long, default_value = "")]
        core: Partition,
    },
    /// Ext-quiver of the block with core (k, 1^l).
    Quiver {
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value = "k-first")]
        chain: Chain,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Loewy layers of Specht modules: the whole principal block of F𝔖_{2p},
    /// or with --k/--l the six exceptional ones of the step reaching (k, l).
    Specht {
        #[arg(long)]
        prime: usize,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        l: Option<usize>,
    },
    /// ∂-value and colour of a weight-2 partition.
    Delta {
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        partition: Partition,
    },
    /// (2:k)-pairs with the given block as the upper block.
    Pairs {
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value = "")]
        core: Partition,
    },
    /// Morita or Scopes classes of hook blocks.
    Census {
        #[arg(long)]
        prime: usize,
        #[arg(long, value_enum, default_value = "morita")]
        kind: CensusKind,
    },
    /// The reference graph Q_{i,j}(n).
    Refquiver {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Undirected isomorphism test of two graphs given as JSON files.
    Iso { left: PathBuf, right: PathBuf },
    /// Run the invariant suites for one prime.
    Verify {
        #[arg(long)]
        prime: usize,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Output { text, ok }) => {
            let _ = writeln!(out, "{}", text.trim_end());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn json_out(v: &impl Serialize) -> Result<Output> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Error::InvalidParams(e.to_string()))?;
    Ok(Output { text, ok: true })
}

fn hook_block(prime: usize, k: usize, l: usize) -> Result<BlockLabel> {
    hook_core(prime, k, l).ok_or(Error::InvalidHook(k, l))
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Block { prime, core } => {
            let bd = BlockData::new(&BlockLabel::new(prime, core, 2)?)?;
            let parts: Vec<Value> = bd
                .partitions
                .iter()
                .map(|l| {
                    let dc = bd.data[l];
                    json!({"partition": l, "delta": dc.delta, "colour": dc.colour, "regular": l.is_p_regular(prime)})
                })
                .collect();
            json_out(&json!({"block": bd.label, "partitions": parts}))
        }
        Command::Quiver { prime, k, l, chain, format } => {
            let order = match chain {
                Chain::KFirst => ChainOrder::KFirst,
                Chain::LFirst => ChainOrder::LFirst,
            };
            hook_block(prime, k, l)?;
            let mut cache = QuiverCache::new(prime, order)?;
            let q = cache.get(k, l)?;
            match format {
                Format::Json => json_out(q),
                Format::Dot => Ok(Output { text: q.to_dot(), ok: true }),
            }
        }
        Command::Specht { prime, k: None, .. } => {
            let map: BTreeMap<String, _> =
                specht_structures(prime)?.into_iter().map(|(lam, ls)| (lam.to_string(), ls)).collect();
            json_out(&map)
        }
        Command::Specht { prime, k: Some(k), l } => {
            let l = l.unwrap_or(0);
            hook_block(prime, k, l)?;
            let mut cache = QuiverCache::new(prime, ChainOrder::KFirst)?;
            cache.get(k, l)?;
            let (pd, es) = cache
                .step_data(k, l)
                .ok_or_else(|| Error::NotAPair(format!("({k}, {l}) is not reached by a (2:1)-step")))?;
            let named: BTreeMap<&str, &Partition> = pd.named().into_iter().collect();
            let map: BTreeMap<String, _> =
                es.specht.iter().map(|(name, ls)| (named[name].to_string(), ls)).collect();
            json_out(&json!({"case": pd.case_no, "structures": map}))
        }
        Command::Delta { prime, partition } => json_out(&delta(&partition, prime)?),
        Command::Pairs { prime, core } => {
            let upper = BlockLabel::new(prime, core, 2)?;
            let mut list = Vec::new();
            for (k, lower) in find_pairs(&upper)? {
                list.push(if k == 1 {
                    serde_json::to_value(PairData::new(&upper, &lower)?)
                } else {
                    serde_json::to_value(ScopesPair::new(&upper, &lower)?)
                }
                .map_err(|e| Error::InvalidParams(e.to_string()))?);
            }
            json_out(&list)
        }
        Command::Census { prime, kind: CensusKind::Morita } => json_out(&morita_census(prime)?),
        Command::Census { prime, kind: CensusKind::Scopes } => {
            crate::error::check_prime(prime, 3)?;
            json_out(&hook_scopes_classes(prime))
        }
        Command::Refquiver { n, i, j, format } => {
            let g = gen_ref_quiver(RefQuiverParams::new(n, i, j)?)?;
            match format {
                Format::Json => json_out(&g),
                Format::Dot => Ok(Output { text: g.to_dot(), ok: true }),
            }
        }
        Command::Iso { left, right } => {
            let (g, h) = (read_graph(&left)?, read_graph(&right)?);
            let map = iso(&g, &h);
            json_out(&json!({"isomorphic": map.is_some(), "map": map}))
        }
        Command::Verify { prime } => {
            let report = verify(prime)?;
            let ok = report.iter().all(|s| s.pass);
            let mut out = json_out(&json!({"prime": prime, "pass": ok, "suites": report}))?;
            out.ok = ok;
            Ok(out)
        }
    }
}

/// Reads a graph from either the plain graph schema or the quiver schema.
fn read_graph(path: &PathBuf) -> Result<PlainGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
    let v = match v.get("vertices") {
        Some(Value::Array(verts)) => json!({"vertices": verts.len(), "edges": v["edges"]}),
        _ => v,
    };
    serde_json::from_value(v).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

fn suite(name: &'static str, f: impl FnOnce(&mut Vec<String>) -> Result<usize>) -> SuiteResult {
    let mut failures = Vec::new();
    let checked = match f(&mut failures) {
        Ok(n) => n,
        Err(e) => {
            failures.push(e.to_string());
            0
        }
    };
    SuiteResult { name, pass: failures.is_empty(), checked, failures }
}

/// Cross-module invariant suites for one prime. Suites needing the seed
/// block's closed forms run only for p ≥ 5.
pub fn verify(prime: usize) -> Result<Vec<SuiteResult>> {
    crate::error::check_prime(prime, 3)?;
    let hooks = valid_hooks(prime);
    let mut out = Vec::new();
    out.push(suite("delta_defined", |fail| {
        let mut n = 0;
        for &(k, l) in &hooks {
            let bd = BlockData::new(&hook_block(prime, k, l)?)?;
            for lam in &bd.partitions {
                n += 1;
                if let Err(e) = delta(lam, prime) {
                    fail.push(format!("{lam}: {e}"));
                }
            }
        }
        Ok(n)
    }));
    out.push(suite("plus_minus_existence", |fail| {
        let mut n = 0;
        for &(k, l) in &hooks {
            let bd = BlockData::new(&hook_block(prime, k, l)?)?;
            for lam in &bd.partitions {
                n += 1;
                let plus = bd.plus(lam).ok().flatten().is_some();
                let minus = bd.minus(lam).ok().flatten().is_some();
                if plus != lam.is_p_restricted(prime) || minus != lam.is_p_regular(prime) {
                    fail.push(format!("{lam}: plus {plus}, minus {minus}"));
                }
            }
        }
        Ok(n)
    }));
    out.push(suite("pair_tables_and_phi", |fail| {
        let mut n = 0;
        for &(k, l) in &hooks {
            let upper = hook_block(prime, k, l)?;
            for (gap, lower) in find_pairs(&upper)? {
                if gap != 1 {
                    continue;
                }
                n += 1;
                let pd = PairData::new(&upper, &lower)?;
                if let Err(e) = regularity_profile(&pd) {
                    fail.push(format!("({k},{l}): {e}"));
                }
                let (bu, bl) = (BlockData::new(&upper)?, BlockData::new(&lower)?);
                for lam in bu.partitions.iter().filter(|m| !pd.is_exceptional(m)) {
                    let image = pd.phi(lam, Direction::Down)?;
                    if bu.data[lam] != bl.data[&image] {
                        fail.push(format!("Φ changes ∂/colour of {lam}"));
                    }
                }
            }
        }
        Ok(n)
    }));
    if prime < 5 {
        return Ok(out);
    }
    out.push(suite("seed_reciprocity", |_| check_reciprocity(prime).map(|_| 1)));
    let mut cache = QuiverCache::new(prime, ChainOrder::KFirst)?;
    let mut other = QuiverCache::new(prime, ChainOrder::LFirst)?;
    let mut quivers = BTreeMap::new();
    out.push(suite("quivers_match_reference", |fail| {
        for &(k, l) in &hooks {
            let q = cache.get(k, l)?.clone();
            let (i, j) = if k + l < prime { (k, l) } else { (k - 1, l - 1) };
            let g = gen_ref_quiver(RefQuiverParams::new(prime, i, j)?)?;
            if iso(&q.to_plain(), &g).is_none() {
                fail.push(format!("({k},{l}) is not Q_{{{i},{j}}}"));
            }
            quivers.insert((k, l), q);
        }
        Ok(hooks.len())
    }));
    out.push(suite("chains_and_conjugation", |fail| {
        for &(k, l) in &hooks {
            let q = &quivers[&(k, l)];
            if other.get(k, l)? != q {
                fail.push(format!("chains disagree at ({k},{l})"));
            }
            if k >= 1 && iso(&q.to_plain(), &quivers[&(l + 1, k - 1)].to_plain()).is_none() {
                fail.push(format!("({k},{l}) and its conjugate differ"));
            }
        }
        Ok(hooks.len())
    }));
    out.push(suite("morita_census", |fail| {
        let classes = morita_census(prime)?;
        if classes.len() != (prime - 1) * prime / 2 + 1 {
            fail.push(format!("{} Morita classes", classes.len()));
        }
        // Morita equivalent blocks have isomorphic quivers.
        for c in &classes {
            let rep = quivers[&c.representative].to_plain();
            for m in &c.members {
                if iso(&rep, &quivers[m].to_plain()).is_none() {
                    fail.push(format!("{m:?} differs from {:?}", c.representative));
                }
            }
        }
        Ok(classes.len())
    }));
    out.push(suite("reference_classification", |fail| {
        let params = reference_params(prime)?;
        let graphs: Vec<_> = params.iter().map(|p| gen_ref_quiver(*p)).collect::<Result<_>>()?;
        let mut n = 0;
        for (a, pa) in params.iter().enumerate() {
            for (b, pb) in params.iter().enumerate().skip(a) {
                n += 1;
                let want = a == b || pa.mirror() == Some(*pb);
                let got = iso(&graphs[a], &graphs[b]).is_some();
                if got != want {
                    fail.push(format!("{pa:?} vs {pb:?}: isomorphic = {got}"));
                }
                if prime <= 7 && iso_plain_backtrack(&graphs[a], &graphs[b]).is_some() != got {
                    fail.push(format!("{pa:?} vs {pb:?}: engines disagree"));
                }
                if got && boundary_profile(&graphs[a]).invariant() != boundary_profile(&graphs[b]).invariant() {
                    fail.push(format!("{pa:?} vs {pb:?}: boundary profiles differ"));
                }
            }
        }
        Ok(n)
    }));
    Ok(out)
}
