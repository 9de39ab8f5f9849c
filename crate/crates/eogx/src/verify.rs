//! Self-check suites behind `eogx verify`: bounded sweeps of the library
//! invariants, reporting instance counts, serialized counterexamples, and
//! the tightest bound margins observed.
//!
//! Suites run single-threaded in a fixed order with all randomness drawn
//! from the configured seed, so a report is byte-identical across runs
//! with the same seed and sample count.

use serde::Serialize;

use crate::classify::{
    classify_path, close_two_coloring, is_right_caterpillar, is_semi_caterpillar,
    peel_extensions, replay_extensions, semi_caterpillar_by_forbidden_paths, Class,
};
use crate::containment::{
    contains, contains_anchored_at_top, contains_bigraph, enumerate_embeddings,
    find_embedding, find_embedding_bigraph,
};
use crate::enumerate::{enumerate_bigraphs, enumerate_graphs, Flow, Limits};
use crate::graph::Side;
use crate::iso::isomorphic_bigraphs;
use crate::leaning::{
    extract_caterpillar, halves_decomposition, inclined_conclusion,
    inclined_conclusion_pattern, inclined_partition, inclined_premise,
    inclined_premise_pattern, leaning_class, non_leaning_edges, residual_edges, Incline,
};
use crate::matrix::{
    classify_matrix, contains_pattern, eex_exact, elementary_op, forbidden_family,
    is_connected_matrix, parse_matrix, reach_from_unit, staircase_certificate, Matrix01,
    MatrixClass, Staircase,
};
use crate::parse::{parse_path, parse_signed_path, serialize_bigraph, serialize_graph};
use crate::random::{rng_from_seed, sample_bigraph};
use crate::turan::{
    exact_ex, k33_canonical_sample, pendant_extension, AttachEnd, Budget, CanonicalVariant,
    PathRegime, FIVE_EDGE_PATH_ROWS,
};
use crate::{Error, Result};

/// Failing instance in a re-parsable format (graph file, matrix rows, or a
/// path shorthand), with enough detail to rerun the check by hand.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
}

/// Tightest point a bounded check reached: largest observed value shown
/// against the bound in force there.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Margin {
    pub observed: u64,
    pub bound: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub failures: Vec<Counterexample>,
    pub margin: Option<Margin>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn instance_count(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            samples: 200,
        }
    }
}

struct Check {
    name: &'static str,
    instances: u64,
    failures: Vec<Counterexample>,
    margin: Option<Margin>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: Vec::new(),
            margin: None,
        }
    }

    fn tick(&mut self) {
        self.instances += 1;
    }

    fn fail(&mut self, instance: String, detail: String) {
        self.failures.push(Counterexample { instance, detail });
    }

    fn ensure(&mut self, ok: bool, instance: &str, detail: &str) {
        if !ok {
            self.fail(instance.to_string(), detail.to_string());
        }
    }

    /// Records the tightest observed/bound pair, compared by ratio.
    fn bound(&mut self, observed: u64, bound: u64) {
        let tighter = match self.margin {
            None => true,
            Some(m) => observed * m.bound > m.observed * bound,
        };
        if tighter {
            self.margin = Some(Margin { observed, bound });
        }
    }

    fn done(self) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            instances: self.instances,
            failures: self.failures,
            margin: self.margin,
        }
    }
}

const SUITES: &[&str] = &[
    "core",
    "containment",
    "equivalence",
    "semi",
    "paths",
    "leaning",
    "inclined",
    "k33",
    "turan",
    "matrix",
];

pub fn available_suites() -> &'static [&'static str] {
    SUITES
}

/// Expands a suite argument; "all" covers every suite in registry order.
pub fn expand_suites(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|&&s| s == name)
        .map(|&s| vec![s])
        .ok_or_else(|| {
            Error::BadArgument(format!(
                "unknown suite {name:?}; pick one of {} or all",
                SUITES.join(", ")
            ))
        })
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match name {
        "core" => suite_core(cfg),
        "containment" => suite_containment(cfg),
        "equivalence" => suite_equivalence(cfg),
        "semi" => suite_semi(cfg),
        "paths" => suite_paths(cfg),
        "leaning" => suite_leaning(cfg),
        "inclined" => suite_inclined(cfg),
        "k33" => suite_k33(cfg),
        "turan" => suite_turan(cfg),
        "matrix" => suite_matrix(cfg),
        other => {
            return Err(Error::BadArgument(format!(
                "unknown suite {other:?}; pick one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        checks,
    })
}

fn suite_core(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut rng = rng_from_seed(cfg.seed);
    let mut norm = Check::new("normalized-ranks");
    let mut rev = Check::new("reversal-involution");
    let mut close = Check::new("close-vertices");
    let mut comp = Check::new("component-partition");
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 12, 24);
        let g = b.graph();
        let text = serialize_graph(g);

        norm.tick();
        let n = g.normalized();
        let labels: Vec<u64> = n.edges().iter().map(|e| e.label).collect();
        norm.ensure(
            labels == (1..=g.edge_count() as u64).collect::<Vec<_>>(),
            &text,
            "normalization must relabel to 1..=m in rank order",
        );
        norm.ensure(
            n.normalized().edges() == n.edges(),
            &text,
            "normalization must be idempotent",
        );

        rev.tick();
        let back = g.reversed().reversed().normalized();
        rev.ensure(
            back.edges() == g.normalized().edges(),
            &text,
            "double reversal must restore the rank order",
        );

        close.tick();
        let listed = g.close_vertices();
        for v in 0..g.vertex_count() {
            let inc = g.incident(v);
            let interval =
                inc.is_empty() || inc[inc.len() - 1] - inc[0] + 1 == inc.len();
            close.ensure(
                g.is_close(v) == interval,
                &text,
                "closeness must match the incident rank interval",
            );
            close.ensure(
                listed.contains(&v) == g.is_close(v),
                &text,
                "close_vertices must list exactly the close vertices",
            );
            if g.degree(v) <= 1 {
                close.ensure(g.is_close(v), &text, "degree <= 1 is always close");
            }
        }

        comp.tick();
        let comps = g.components();
        let mut seen = vec![0u32; g.vertex_count()];
        for c in &comps {
            for &v in c {
                seen[v] += 1;
            }
        }
        comp.ensure(
            seen.iter().all(|&s| s == 1),
            &text,
            "components must partition the vertices",
        );
        comp.ensure(
            g.is_connected() == (comps.len() <= 1),
            &text,
            "connectivity must match the component count",
        );
    }
    vec![norm.done(), rev.done(), close.done(), comp.done()]
}

fn suite_containment(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut rng = rng_from_seed(cfg.seed);
    let mut selfc = Check::new("self-containment");
    let mut valid = Check::new("embeddings-valid");
    let mut anchored = Check::new("anchored-implies-contained");
    let patterns = ["P:12", "P:21", "P:123", "P:132", "P:213"]
        .map(|s| parse_path(s).unwrap());
    let bigraph_patterns = ["P:+12", "P:-12", "P:+132"].map(|s| parse_signed_path(s).unwrap());
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 10, 20);
        let g = b.graph();
        let text = serialize_graph(g);

        selfc.tick();
        selfc.ensure(
            contains(g, g).unwrap(),
            &text,
            "every graph contains itself",
        );
        let own = find_embedding(g, g).unwrap();
        selfc.ensure(
            own.is_some_and(|e| e.is_valid(g, g)),
            &text,
            "the self-embedding must validate",
        );

        for h in &patterns {
            valid.tick();
            let found = find_embedding(g, h).unwrap();
            valid.ensure(
                found.is_some() == contains(g, h).unwrap(),
                &text,
                "contains must agree with embedding search",
            );
            if let Some(e) = found {
                valid.ensure(e.is_valid(g, h), &text, "found embeddings must validate");
            }
            for e in enumerate_embeddings(g, h).unwrap() {
                valid.ensure(e.is_valid(g, h), &text, "enumerated embeddings must validate");
            }
            anchored.tick();
            anchored.ensure(
                !contains_anchored_at_top(g, h).unwrap() || contains(g, h).unwrap(),
                &text,
                "an anchored match is in particular a match",
            );
        }
        for h in &bigraph_patterns {
            valid.tick();
            let found = find_embedding_bigraph(&b, h).unwrap();
            valid.ensure(
                found.is_some() == contains_bigraph(&b, h).unwrap(),
                &serialize_bigraph(&b),
                "bigraph contains must agree with embedding search",
            );
            if let Some(e) = found {
                valid.ensure(
                    e.is_valid_bigraph(&b, h),
                    &serialize_bigraph(&b),
                    "found bigraph embeddings must validate",
                );
            }
        }
    }
    vec![selfc.done(), valid.done(), anchored.done()]
}

fn suite_equivalence(_cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut agree = Check::new("certificate-agreement");
    let mut rebuild = Check::new("replay-reconstruction");
    enumerate_bigraphs(Limits::forests(8, 5), |state| {
        let b = state.to_bigraph();
        if !b.graph().is_tree() {
            return Flow::Extend;
        }
        let text = serialize_bigraph(&b);
        agree.tick();
        let cat = is_right_caterpillar(&b).unwrap();
        let seq = peel_extensions(&b).unwrap();
        agree.ensure(
            cat == seq.is_some(),
            &text,
            "peeling must succeed exactly on right caterpillars",
        );
        if let Some(seq) = seq {
            rebuild.tick();
            let back = replay_extensions(&seq).unwrap();
            rebuild.ensure(
                isomorphic_bigraphs(&b, &back),
                &text,
                "replaying the certificate must rebuild the bigraph",
            );
        }
        Flow::Extend
    });
    vec![agree.done(), rebuild.done()]
}

fn suite_semi(_cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut agree = Check::new("forbidden-path-agreement");
    enumerate_graphs(Limits::forests(8, 5), |state| {
        let g = state.to_graph();
        if !g.is_tree() {
            return Flow::Extend;
        }
        if close_two_coloring(&g).unwrap().is_none() {
            return Flow::Extend;
        }
        agree.tick();
        agree.ensure(
            is_semi_caterpillar(&g).unwrap()
                == semi_caterpillar_by_forbidden_paths(&g).unwrap(),
            &serialize_graph(&g),
            "the interval recognizer and the forbidden paths must agree",
        );
        Flow::Extend
    });
    vec![agree.done()]
}

fn suite_paths(_cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut table = Check::new("five-edge-regimes");
    let mut consistent = Check::new("verdicts-validate");
    for (ranks, regime) in FIVE_EDGE_PATH_ROWS {
        let p = parse_path(&format!("P:{ranks}")).unwrap();
        table.tick();
        let verdict = classify_path(&p).unwrap();
        let expect_linear = matches!(regime, PathRegime::Linear);
        table.ensure(
            (verdict.class == Class::Linear) == expect_linear,
            &format!("P:{ranks}"),
            "the verdict must land in the published regime",
        );
        let coloring = close_two_coloring(&p).unwrap();
        let colorable = matches!(regime, PathRegime::Linear | PathRegime::Superlinear);
        table.ensure(
            coloring.is_some() == colorable,
            &format!("P:{ranks}"),
            "a close coloring must exist exactly below the dense regimes",
        );
        consistent.tick();
        consistent.ensure(
            verdict.validate(&p),
            &format!("P:{ranks}"),
            "the verdict evidence must re-validate",
        );
    }
    vec![table.done(), consistent.done()]
}

fn suite_leaning(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut non = Check::new("non-leaning-bound");
    let mut res = Check::new("residual-bound");
    let mut wit = Check::new("witnesses-certify");
    enumerate_bigraphs(Limits::new(8, 5), |state| {
        let b = state.to_bigraph();
        let text = serialize_bigraph(&b);
        for c in 1..=2usize {
            non.tick();
            let count = non_leaning_edges(&b, c).unwrap().len();
            let bound = 2 * c * b.vertex_count();
            non.bound(count as u64, bound as u64);
            non.ensure(count <= bound, &text, "non-leaning edges exceed the bound");
        }
        Flow::Extend
    });
    let mut rng = rng_from_seed(cfg.seed);
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 20, 40);
        let text = serialize_bigraph(&b);
        for c in 1..=2usize {
            for i in 1..=2usize {
                res.tick();
                let r = residual_edges(&b, c, i).unwrap().len();
                let bound = 2 * i * i * c * b.vertex_count();
                res.bound(r as u64, bound as u64);
                res.ensure(r <= bound, &text, "residual edges exceed the bound");
            }
            for e in 0..b.edge_count() {
                wit.tick();
                let cls = leaning_class(&b, e, c).unwrap();
                if let Some(w) = &cls.left {
                    wit.ensure(
                        w.certifies(&b, e, c, Side::Left),
                        &text,
                        "left witnesses must certify",
                    );
                }
                if let Some(w) = &cls.right {
                    wit.ensure(
                        w.certifies(&b, e, c, Side::Right),
                        &text,
                        "right witnesses must certify",
                    );
                }
            }
        }
    }
    let mut extract = Check::new("extraction-validates");
    let t = parse_signed_path("P:+132").unwrap();
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 12, 36);
        extract.tick();
        if let Some(emb) = extract_caterpillar(&b, &t).unwrap() {
            extract.ensure(
                emb.is_valid_bigraph(&b, &t),
                &serialize_bigraph(&b),
                "extracted embeddings must validate",
            );
        }
    }
    vec![non.done(), res.done(), wit.done(), extract.done()]
}

fn suite_inclined(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut sparse = Check::new("non-inclined-bound");
    let mut part = Check::new("classes-partition");
    let mut rng = rng_from_seed(cfg.seed);
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 16, 40);
        let text = serialize_bigraph(&b);
        let p = inclined_partition(&b);
        sparse.tick();
        let non = p.edges_in(Incline::NonInclined).len();
        let bound = 2 * b.vertex_count();
        sparse.bound(non as u64, bound as u64);
        sparse.ensure(non <= bound, &text, "non-inclined edges exceed the bound");
        part.tick();
        let total = p.edges_in(Incline::LeftInclined).len()
            + p.edges_in(Incline::RightInclined).len()
            + non;
        part.ensure(
            total == b.edge_count(),
            &text,
            "the three classes must cover every edge once",
        );
    }
    let mut implication = Check::new("avoidance-implication");
    enumerate_bigraphs(Limits::new(8, 5), |state| {
        let b = state.to_bigraph();
        for side in [Side::Left, Side::Right] {
            implication.tick();
            if inclined_premise(&b, side).unwrap() {
                implication.ensure(
                    inclined_conclusion(&b, side).unwrap(),
                    &serialize_bigraph(&b),
                    "the premise must force the conclusion",
                );
            }
        }
        Flow::Extend
    });
    let mut halves = Check::new("guarded-separation");
    let premise = inclined_premise_pattern(Side::Right);
    let conclusion = inclined_conclusion_pattern(Side::Left);
    for _ in 0..cfg.samples {
        let b = sample_bigraph(&mut rng, 12, 24);
        if contains_bigraph(&b, &premise).unwrap()
            || contains_bigraph(&b, &conclusion).unwrap()
        {
            continue;
        }
        halves.tick();
        halves.ensure(
            halves_decomposition(&b).separated,
            &serialize_bigraph(&b),
            "guarded hosts must separate",
        );
    }
    vec![sparse.done(), part.done(), implication.done(), halves.done()]
}

fn suite_k33(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut hits = Check::new("canonical-containment-rate");
    for variant in [CanonicalVariant::SmallestNine, CanonicalVariant::LargestNine] {
        hits.tick();
        let rate = k33_canonical_sample(cfg.seed, cfg.samples.max(1), variant);
        let observed = (rate * cfg.samples.max(1) as f64).round() as u64;
        hits.bound(observed, cfg.samples.max(1) as u64);
        hits.ensure(
            rate == 1.0,
            &format!("{variant:?}"),
            "every sampled canonical order must contain the pattern",
        );
    }
    vec![hits.done()]
}

fn suite_turan(_cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut oversized = Check::new("oversized-patterns-saturate");
    for ranks in ["1423", "2413"] {
        let h = parse_path(&format!("P:{ranks}")).unwrap();
        oversized.tick();
        let r = exact_ex(4, &h, &Budget::unlimited()).unwrap();
        oversized.ensure(
            r.value == 6,
            &format!("P:{ranks}"),
            "a five-vertex pattern cannot embed in four vertices",
        );
    }
    let mut sandwich = Check::new("pendant-sandwich");
    for ranks in ["12", "123", "132"] {
        let h = parse_path(&format!("P:{ranks}")).unwrap();
        for end in [AttachEnd::End1, AttachEnd::End2] {
            let h2 = pendant_extension(&h, end).unwrap();
            for n in 2..=4usize {
                sandwich.tick();
                let lo = exact_ex(n, &h, &Budget::unlimited()).unwrap().value;
                let hi = exact_ex(n, &h2, &Budget::unlimited()).unwrap().value;
                let cap = lo + h2.vertex_count() * n;
                sandwich.bound(hi as u64, cap as u64);
                sandwich.ensure(
                    lo <= hi && hi <= cap,
                    &format!("P:{ranks} with a pendant edge, n = {n}"),
                    "the extension must sit in the additive sandwich",
                );
            }
        }
    }
    vec![oversized.done(), sandwich.done()]
}

fn suite_matrix(_cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut frozen = Check::new("frozen-extremal-values");
    let one = parse_matrix("1").unwrap();
    for n in 1..=4 {
        frozen.tick();
        let v = eex_exact(n, &one, &Budget::unlimited()).unwrap().value;
        frozen.ensure(v == 0, "1", "any 1 entry contains the unit pattern");
    }
    let block = parse_matrix("11\n11").unwrap();
    for (n, want) in [(2, 3), (3, 6)] {
        frozen.tick();
        let v = eex_exact(n, &block, &Budget::unlimited()).unwrap().value;
        frozen.ensure(
            v == want,
            "11\n11",
            "the all-ones block values are pinned",
        );
    }
    let mut family = Check::new("family-size");
    family.tick();
    family.ensure(
        forbidden_family().len() == 9,
        "(generator)",
        "the family must have nine distinct members",
    );
    let mut dichotomy = Check::new("small-dichotomy");
    let mut growth = Check::new("staircases-grow-from-unit");
    for (rows, cols) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
        for bits in 0u64..1 << (rows * cols) {
            let mut a = Matrix01::zeros(rows, cols).unwrap();
            for c in 0..rows * cols {
                if bits >> c & 1 == 1 {
                    a.set(c / cols, c % cols, true);
                }
            }
            if a.is_all_zero() || !is_connected_matrix(&a) {
                continue;
            }
            dichotomy.tick();
            match classify_matrix(&a).unwrap() {
                MatrixClass::Linear {
                    certificate,
                    column_reversed,
                } => {
                    let target = if column_reversed {
                        a.column_reversed()
                    } else {
                        a.clone()
                    };
                    dichotomy.ensure(
                        certificate.describes(&target),
                        &a.to_string(),
                        "linear certificates must describe the matrix",
                    );
                    growth.tick();
                    let ops = reach_from_unit(&a);
                    let mut ok = false;
                    if let Some(ops) = ops {
                        let mut cur = one.clone();
                        for op in ops {
                            cur = elementary_op(&cur, op).unwrap();
                        }
                        ok = cur == a;
                    }
                    growth.ensure(
                        ok,
                        &a.to_string(),
                        "every small staircase must grow from the unit matrix",
                    );
                }
                MatrixClass::OmegaNLogN { evidence } => {
                    dichotomy.ensure(
                        contains_pattern(&a, &evidence).unwrap(),
                        &a.to_string(),
                        "superlinear evidence must be contained",
                    );
                    dichotomy.ensure(
                        staircase_certificate(&a).unwrap().is_none(),
                        &a.to_string(),
                        "superlinear matrices must have no walk",
                    );
                }
            }
        }
    }
    let mut walks = Check::new("walk-validity");
    walks.tick();
    let sc = Staircase {
        positions: vec![(0, 0), (0, 1), (1, 1)],
    };
    walks.ensure(
        sc.is_walk() && sc.describes(&parse_matrix("11\n01").unwrap()),
        "11\n01",
        "the fixed walk example must describe its matrix",
    );
    vec![
        frozen.done(),
        family.done(),
        dichotomy.done(),
        growth.done(),
        walks.done(),
    ]
}

/// CSV with one row per check.
pub fn reports_to_csv(reports: &[SuiteReport]) -> String {
    let mut out =
        String::from("suite,check,instances,failures,margin_observed,margin_bound\n");
    for r in reports {
        for c in &r.checks {
            let (mo, mb) = match c.margin {
                Some(m) => (m.observed.to_string(), m.bound.to_string()),
                None => (String::new(), String::new()),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.suite,
                c.name,
                c.instances,
                c.failures.len(),
                mo,
                mb
            ));
        }
    }
    out
}

pub fn reports_to_json(reports: &[SuiteReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// Human-readable table, one block per suite.
pub fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "suite {} (seed {}, samples {}): {}\n",
            r.suite,
            r.seed,
            r.samples,
            if r.passed() { "ok" } else { "FAILED" }
        ));
        for c in &r.checks {
            let margin = match c.margin {
                Some(m) => format!("  worst {}/{}", m.observed, m.bound),
                None => String::new(),
            };
            out.push_str(&format!(
                "  {:<32} {:>8} instances  {:>3} failures{}\n",
                c.name,
                c.instances,
                c.failures.len(),
                margin
            ));
            for f in &c.failures {
                out.push_str(&format!("    counterexample ({}):\n", f.detail));
                for line in f.instance.lines() {
                    out.push_str(&format!("      {line}\n"));
                }
            }
        }
    }
    out
}
