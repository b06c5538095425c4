//! The full verification suite behind `verify-all`: every reproducible
//! computation in the library, each as one pass/fail report entry with the
//! claimed value pinned in code.

use ncgraded_core::exactnum::{rat, IntMatrix, Rational, RationalFunction, UniPoly};
use ncgraded_core::k0::{
    dimension_group, is_simple_stationary, lattice_chain_quotients, limit_membership,
    BratteliDiagram,
};
use ncgraded_core::monomial::{free_product_hilbert, MonomialAlgebra};
use ncgraded_core::ncalg::{verify_module_splitting, zhang_twist, GradedAutomorphism, NCPoly};
use ncgraded_core::points::{
    annihilator_degree, sequence_module_is_valid, special_module_for_word,
    special_sequence_count, special_sequences, validate_sequence, ProjPoint,
};
use ncgraded_core::quiver::{
    algebra_hom_check, letter_assignment, mckay_quiver, quiver_iso, skew_group_graded_dim,
    McKayWeights, Quiver,
};
use ncgraded_core::sklyanin::{
    classify_with_witness, cycle_presentation, degenerate_points, squares_presentation,
    FamilyClass,
};

use num_bigint::BigInt;

use crate::report::ReportEntry;

pub struct SuiteOptions {
    /// Bound for all degree-indexed checks.
    pub maxdeg: usize,
    /// Include the informational caveat entries.
    pub strict: bool,
    /// Corrupt the claimed value of the named entry, to exercise failure
    /// reporting end to end.
    pub inject_fault: Option<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { maxdeg: 8, strict: false, inject_fault: None }
    }
}

fn entry(opts: &SuiteOptions, name: &str, claimed: String, computed: String) -> ReportEntry {
    let claimed = if opts.inject_fault.as_deref() == Some(name) {
        format!("INJECTED-FAULT({})", claimed)
    } else {
        claimed
    };
    ReportEntry::check(name, claimed, computed)
}

fn matrix_text(m: &IntMatrix) -> String {
    format!("{:?}", m)
}

fn series_text(f: &RationalFunction) -> String {
    format!("{}", f)
}

const STANDARD_SERIES: &str = "(1 + t) / (1 - 2*t)";

/// Runs every check, in a fixed order, and returns the entries.
pub fn run_suite(opts: &SuiteOptions) -> Vec<ReportEntry> {
    let mut out = Vec::new();
    witness_checks(opts, &mut out);
    twist_checks(opts, &mut out);
    hilbert_checks(opts, &mut out);
    graph_checks(opts, &mut out);
    hom_checks(opts, &mut out);
    mckay_checks(opts, &mut out);
    bratteli_checks(opts, &mut out);
    k0_checks(opts, &mut out);
    splitting_checks(opts, &mut out);
    points_checks(opts, &mut out);
    out
}

fn witness_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    for p in degenerate_points() {
        let name = format!("witness:{}", p);
        let (class, witness) = match classify_with_witness(&p) {
            Ok(r) => r,
            Err(e) => {
                out.push(entry(opts, &name, "valid witness".into(), format!("error: {e}")));
                continue;
            }
        };
        let target = match class {
            FamilyClass::DegenerateSquares(_) => "squares",
            FamilyClass::DegenerateCycle(_) => "cycle",
            FamilyClass::NonDegenerate => "none",
        };
        let computed = match witness {
            Some((_, true)) => format!("valid witness to {target}"),
            Some((_, false)) => format!("INVALID witness to {target}"),
            None => "no witness".into(),
        };
        let claimed = format!("valid witness to {target}");
        out.push(entry(opts, &name, claimed, computed));
    }
}

fn twist_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let squares = squares_presentation();
    let cycle = cycle_presentation();
    let describe = |ok: bool| {
        if ok {
            "twisted span matches".to_string()
        } else {
            "twisted span differs".to_string()
        }
    };
    // Twisting the cyclic relations by the rotation u -> v -> w -> u yields
    // the squared relations, and twisting those by u -> w, v -> u, w -> v
    // yields the cyclic ones back.
    let tau = GradedAutomorphism::from_permutation(&cycle, &[1, 2, 0]).expect("rotation preserves the cycle span");
    let twisted = zhang_twist(&cycle, &tau).expect("quadratic");
    let ok = twisted.same_relation_span(&squares).unwrap_or(false);
    out.push(entry(opts, "twist:cycle-to-squares", describe(true), describe(ok)));

    let theta = GradedAutomorphism::from_permutation(&squares, &[2, 0, 1]).expect("permutations preserve the squares span");
    let twisted = zhang_twist(&squares, &theta).expect("quadratic");
    let ok = twisted.same_relation_span(&cycle).unwrap_or(false);
    out.push(entry(opts, "twist:squares-to-cycle", describe(true), describe(ok)));
}

fn hilbert_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let squares = MonomialAlgebra::squares(3);
    let cycle = MonomialAlgebra::cycle(3);
    let h_squares = squares.hilbert_series().expect("graph determinant has unit constant term");
    let h_cycle = cycle.hilbert_series().expect("graph determinant has unit constant term");
    out.push(entry(opts, "hilbert:squares", STANDARD_SERIES.into(), series_text(&h_squares)));
    out.push(entry(opts, "hilbert:cycle", STANDARD_SERIES.into(), series_text(&h_cycle)));

    let closed_form: Vec<String> = (0..=opts.maxdeg)
        .map(|n| {
            if n == 0 {
                "1".to_string()
            } else {
                (BigInt::from(3) * BigInt::from(2).pow(n as u32 - 1)).to_string()
            }
        })
        .collect();
    let claimed = closed_form.join(",");
    let from_series: Vec<String> = h_squares
        .series_coefficients(opts.maxdeg)
        .iter()
        .map(|c| c.to_string())
        .collect();
    out.push(entry(opts, "hilbert:series-coefficients", claimed.clone(), from_series.join(",")));
    let from_words: Vec<String> = (0..=opts.maxdeg)
        .map(|n| squares.normal_words(n).len().to_string())
        .collect();
    out.push(entry(opts, "hilbert:word-counts", claimed.clone(), from_words.join(",")));
    let from_words_cycle: Vec<String> = (0..=opts.maxdeg)
        .map(|n| cycle.normal_words(n).len().to_string())
        .collect();
    out.push(entry(opts, "hilbert:word-counts-cycle", claimed, from_words_cycle.join(",")));

    let dual = RationalFunction::reduce(UniPoly::from_i64(&[1, 1]), UniPoly::one()).unwrap();
    let free_product = free_product_hilbert(&[dual.clone(), dual.clone(), dual])
        .map(|f| series_text(&f))
        .unwrap_or_else(|e| format!("error: {e}"));
    out.push(entry(opts, "hilbert:free-product", STANDARD_SERIES.into(), free_product));
}

/// The adjacency matrices as displayed, in the vertex orders that realize
/// them: letter order for the squares graph and the letters reordered to
/// `u, w, v` for the cycle graph.
fn graph_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let squares_graph = MonomialAlgebra::squares(3).normal_word_graph();
    let cycle_graph = MonomialAlgebra::cycle(3).normal_word_graph();
    let squares_display = IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]);
    let cycle_display = IntMatrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 1, 1, 0, 1]);

    out.push(entry(
        opts,
        "graph:squares-adjacency",
        matrix_text(&squares_display),
        matrix_text(&squares_graph.adjacency()),
    ));
    let permuted = permute_vertices(&cycle_graph.adjacency(), &[0, 2, 1]);
    out.push(entry(
        opts,
        "graph:cycle-adjacency",
        matrix_text(&cycle_display),
        matrix_text(&permuted),
    ));
    let iso_text = |r: Result<Option<Vec<usize>>, _>| match r {
        Ok(Some(_)) => "isomorphic".to_string(),
        Ok(None) => "not isomorphic".to_string(),
        Err(_) => "search refused".to_string(),
    };
    out.push(entry(
        opts,
        "graph:squares-iso",
        "isomorphic".into(),
        iso_text(quiver_iso(&squares_graph, &Quiver::from_adjacency(&squares_display))),
    ));
    out.push(entry(
        opts,
        "graph:cycle-iso",
        "isomorphic".into(),
        iso_text(quiver_iso(&cycle_graph, &Quiver::from_adjacency(&cycle_display))),
    ));

    let cube = IntMatrix::from_i64(3, 3, &[2, 3, 3, 3, 2, 3, 3, 3, 2]);
    out.push(entry(
        opts,
        "veronese:squares-cube",
        matrix_text(&cube),
        matrix_text(&squares_graph.veronese(3).adjacency()),
    ));
    out.push(entry(
        opts,
        "veronese:cycle-cube",
        matrix_text(&cube),
        matrix_text(&cycle_graph.veronese(3).adjacency()),
    ));
}

fn permute_vertices(m: &IntMatrix, perm: &[usize]) -> IntMatrix {
    let n = m.rows();
    let mut out = IntMatrix::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            *out.entry_mut(r, c) = m.entry(perm[r], perm[c]).clone();
        }
    }
    out
}

fn hom_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let squares_graph = MonomialAlgebra::squares(3).normal_word_graph();
    let cycle_graph = MonomialAlgebra::cycle(3).normal_word_graph();
    let verdict = |ok: bool| {
        if ok {
            "all relations vanish".to_string()
        } else {
            "some relation survives".to_string()
        }
    };
    let squares = squares_presentation();
    let cycle = cycle_presentation();
    out.push(entry(
        opts,
        "hom:squares",
        verdict(true),
        verdict(algebra_hom_check(&squares, &squares_graph, &letter_assignment(&squares_graph, 3))),
    ));
    out.push(entry(
        opts,
        "hom:cycle",
        verdict(true),
        verdict(algebra_hom_check(&cycle, &cycle_graph, &letter_assignment(&cycle_graph, 3))),
    ));
    out.push(entry(
        opts,
        "hom:cross",
        verdict(false),
        verdict(algebra_hom_check(&squares, &cycle_graph, &letter_assignment(&cycle_graph, 3))),
    ));
}

fn mckay_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let alpha = mckay_quiver(&McKayWeights::new(3, vec![1, 2]));
    let beta = mckay_quiver(&McKayWeights::new(3, vec![1, 0]));
    let squares_graph = MonomialAlgebra::squares(3).normal_word_graph();
    let cycle_graph = MonomialAlgebra::cycle(3).normal_word_graph();
    let iso = |a: &Quiver, b: &Quiver| match quiver_iso(a, b) {
        Ok(Some(_)) => "isomorphic".to_string(),
        Ok(None) => "not isomorphic".to_string(),
        Err(_) => "search refused".to_string(),
    };
    out.push(entry(opts, "mckay:weights-1-2", "isomorphic".into(), iso(&alpha, &squares_graph)));
    out.push(entry(opts, "mckay:weights-1-0", "isomorphic".into(), iso(&beta, &cycle_graph)));

    let claimed: Vec<String> = (0..=opts.maxdeg)
        .map(|d| skew_group_graded_dim(2, 3, d).to_string())
        .collect();
    let alpha_counts: Vec<String> = (0..=opts.maxdeg).map(|d| alpha.path_count(d).to_string()).collect();
    let beta_counts: Vec<String> = (0..=opts.maxdeg).map(|d| beta.path_count(d).to_string()).collect();
    out.push(entry(opts, "mckay:path-counts-1-2", claimed.join(","), alpha_counts.join(",")));
    out.push(entry(opts, "mckay:path-counts-1-0", claimed.join(","), beta_counts.join(",")));
}

fn incidence_matrix() -> IntMatrix {
    IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0])
}

fn bratteli_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let d = BratteliDiagram::new(incidence_matrix(), vec![BigInt::from(1); 3]).unwrap();
    let levels: Vec<String> = (0..=2)
        .map(|n| {
            let sizes: Vec<String> = d.level_sizes(n).iter().map(|s| s.to_string()).collect();
            format!("({})", sizes.join(","))
        })
        .collect();
    out.push(entry(
        opts,
        "bratteli:levels",
        "(1,1,1) (2,2,2) (4,4,4)".into(),
        levels.join(" "),
    ));

    let doubling = BratteliDiagram::new(IntMatrix::from_i64(1, 1, &[2]), vec![BigInt::from(1)]).unwrap();
    let chain: Vec<String> = (0..=3).map(|n| doubling.level_sizes(n)[0].to_string()).collect();
    out.push(entry(opts, "bratteli:doubling", "1 2 4 8".into(), chain.join(" ")));

    let (simple, power) = is_simple_stationary(&incidence_matrix());
    out.push(entry(
        opts,
        "bratteli:simplicity",
        "simple at power 2".into(),
        match (simple, power) {
            (true, Some(n)) => format!("simple at power {n}"),
            _ => "not simple".into(),
        },
    ));
}

fn k0_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let m = incidence_matrix();
    let m3 = m.pow(3).unwrap();
    // The displayed eigenvectors and eigenvalues of the cubed matrix.
    let displayed: [(&str, [i64; 3], i64); 3] = [
        ("(1,1,1)", [1, 1, 1], 8),
        ("(-1,1,0)", [-1, 1, 0], -1),
        ("(0,-1,1)", [0, -1, 1], -1),
    ];
    let mut verdicts = Vec::new();
    for (label, vec3, lambda) in &displayed {
        let v: Vec<BigInt> = vec3.iter().map(|&x| BigInt::from(x)).collect();
        let image = m3.apply(&v);
        let scaled: Vec<BigInt> = v.iter().map(|x| x * BigInt::from(*lambda)).collect();
        if image == scaled {
            verdicts.push(format!("{label} scales by {lambda}"));
        } else {
            verdicts.push(format!("{label} fails"));
        }
    }
    out.push(entry(
        opts,
        "k0:eigen-equations",
        "(1,1,1) scales by 8; (-1,1,0) scales by -1; (0,-1,1) scales by -1".into(),
        verdicts.join("; "),
    ));

    // Dyadic membership certificates: (1,1,1)/8^m enters at step 3m.
    let mut steps = Vec::new();
    for exp in 0..=4u32 {
        let denom = BigInt::from(8).pow(exp);
        let v: Vec<Rational> =
            (0..3).map(|_| Rational::new(BigInt::from(1), denom.clone())).collect();
        match limit_membership(&m, &v, 3 * exp as usize + 3) {
            Ok(Some(n)) => steps.push(n.to_string()),
            Ok(None) => steps.push("none".into()),
            Err(e) => steps.push(format!("error: {e}")),
        }
    }
    out.push(entry(opts, "k0:membership-dyadic", "0,3,6,9,12".into(), steps.join(",")));

    let third = vec![Rational::new(BigInt::from(1), BigInt::from(3)), rat(0), rat(0)];
    let rejected = match limit_membership(&m, &third, 24) {
        Ok(None) => "rejected".to_string(),
        Ok(Some(n)) => format!("accepted at {n}"),
        Err(e) => format!("error: {e}"),
    };
    out.push(entry(opts, "k0:membership-rejects-denominator-3", "rejected".into(), rejected));

    let quotients = lattice_chain_quotients(&m, 4)
        .map(|q| q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .unwrap_or_else(|e| format!("error: {e}"));
    out.push(entry(opts, "k0:lattice-quotients", "2,2,2,2".into(), quotients));

    let descriptor = dimension_group(&m, 3)
        .map(|d| format!("{}, eigenbasis index {}", d.component_summary(), d.eigenbasis_index))
        .unwrap_or_else(|e| format!("error: {e}"));
    out.push(entry(
        opts,
        "k0:descriptor",
        "Z[1/8] (+) Z (+) Z, eigenbasis index 3".into(),
        descriptor,
    ));

    let doubling = dimension_group(&IntMatrix::from_i64(1, 1, &[2]), 1)
        .map(|d| d.component_summary())
        .unwrap_or_else(|e| format!("error: {e}"));
    out.push(entry(opts, "k0:descriptor-doubling", "Z[1/2]".into(), doubling));

    if opts.strict {
        out.push(ReportEntry::info(
            "k0:eigenbasis-index-caveat",
            "the eigenvector lattice has index 3 in the full lattice, so the displayed \
             direct-sum form is read off the eigen data rather than certified; the \
             membership certificates above are the machine-checked content",
        ));
        out.push(ReportEntry::info(
            "k0:structure-class",
            "the class of the algebra itself is recorded as (1,0,0) in the eigen basis; \
             it is an input convention, not a computed value",
        ));
    }
}

fn splitting_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let squares = squares_presentation();
    let u_minus_v = &NCPoly::generator(0) - &NCPoly::generator(1);
    let v_minus_w = &NCPoly::generator(1) - &NCPoly::generator(2);
    match verify_module_splitting(&squares, &[u_minus_v, v_minus_w], opts.maxdeg) {
        Ok(report) => {
            out.push(entry(
                opts,
                "splitting:injectivity",
                format!("injective through degree {}", opts.maxdeg),
                format!("injective through degree {}", report.injective_up_to),
            ));
            let mut claimed = vec!["1".to_string(), "1".to_string()];
            claimed.extend(std::iter::repeat_n("0".to_string(), opts.maxdeg.saturating_sub(1)));
            let cokernels: Vec<String> =
                report.cokernel_dims.iter().map(|d| d.to_string()).collect();
            out.push(entry(
                opts,
                "splitting:cokernels",
                claimed.join(","),
                cokernels.join(","),
            ));
        }
        Err(e) => {
            out.push(entry(opts, "splitting:injectivity", "computed".into(), format!("error: {e}")));
        }
    }
    if opts.strict {
        out.push(ReportEntry::info(
            "splitting:sidedness-note",
            "the check multiplies the shifting elements from the left, i.e. it is the \
             right-module map (a,b) -> (u-v)a + (v-w)b; the mirrored one-sided statement \
             follows by symmetry of the relations",
        ));
    }
}

fn points_checks(opts: &SuiteOptions, out: &mut Vec<ReportEntry>) {
    let algebra = MonomialAlgebra::squares(3);
    // Counts up to degree 10, against both the closed form and the
    // normal-word dimensions one degree up.
    let top = 10usize;
    let claimed: Vec<String> = (0..=top).map(|n| special_sequence_count(n).to_string()).collect();
    let counted: Vec<String> = (0..=top).map(|n| special_sequences(n).len().to_string()).collect();
    out.push(entry(opts, "points:special-counts", claimed.join(","), counted.join(",")));
    let words_up: Vec<String> =
        (0..=top).map(|n| algebra.count_normal_words(n + 1).to_string()).collect();
    out.push(entry(
        opts,
        "points:counts-match-word-dimensions",
        counted.join(","),
        words_up.join(","),
    ));

    // Validator vs module oracle on every corner sequence of length <= 6.
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    for len in 1..=6usize {
        let mut idx = vec![0usize; len];
        loop {
            let seq: Vec<ProjPoint> = idx.iter().map(|&i| ProjPoint::unit(i)).collect();
            if validate_sequence(&seq) != sequence_module_is_valid(&seq) {
                disagreements += 1;
            }
            checked += 1;
            let mut pos = 0;
            while pos < len {
                idx[pos] += 1;
                if idx[pos] < 3 {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    out.push(entry(
        opts,
        "points:validator-vs-module-oracle",
        format!("agreement on {checked} sequences"),
        format!(
            "{} on {checked} sequences",
            if disagreements == 0 { "agreement" } else { "disagreement" }
        ),
    ));

    // Each special module separates exactly its own word (lengths <= 5).
    let mut separated = true;
    for n in 1..=5usize {
        for s in algebra.normal_words(n) {
            let module = special_module_for_word(&s).expect("normal word");
            for t in algebra.normal_words(n) {
                let hit = !module.act_from_bottom(&t).is_zero();
                if hit != (s == t) {
                    separated = false;
                }
            }
        }
    }
    out.push(entry(
        opts,
        "points:word-separation",
        "each module separates exactly its word".into(),
        if separated {
            "each module separates exactly its word".to_string()
        } else {
            "separation fails".to_string()
        },
    ));

    let degrees: Vec<String> =
        (1..=opts.maxdeg).map(|n| annihilator_degree(n).to_string()).collect();
    let zeros: Vec<String> = (1..=opts.maxdeg).map(|_| "0".to_string()).collect();
    out.push(entry(opts, "points:annihilator-degrees", zeros.join(","), degrees.join(",")));

    if opts.strict {
        out.push(ReportEntry::info(
            "points:scope-note",
            "point modules are computed over the squared-generator algebra only; the \
             graded equivalences transport them to the cyclic algebra and to every \
             degenerate family member",
        ));
        out.push(ReportEntry::info(
            "points:basis-note",
            "annihilator checks read the degree-n component in its normal-word basis, \
             the only graded basis in play",
        ));
    }
}
