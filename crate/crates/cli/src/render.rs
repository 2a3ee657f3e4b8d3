//! Plain-text reports.

use std::fmt::Write;

use gspin_core::clifford::MultivectorJson;

use crate::{HtVerdict, Output, Report, Request};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn multivector(j: &MultivectorJson) -> String {
    if j.terms.is_empty() {
        return "0".into();
    }
    j.terms
        .iter()
        .map(|(k, c)| {
            if k.is_empty() {
                c.clone()
            } else {
                let mono: Vec<String> = k.split(',').map(|i| format!("e{i}")).collect();
                format!("({c})*{}", mono.join("*"))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn ht_line(name: &str, v: &HtVerdict, keys: &[&str]) -> String {
    match &v.witness {
        Some(w) if !v.pass => {
            let parts: Vec<String> = keys
                .iter()
                .zip(w)
                .map(|(k, x)| format!("{k}={x}"))
                .collect();
            format!("{name}: FAIL ({})", parts.join(","))
        }
        _ => format!("{name}: {}", pass_fail(v.pass)),
    }
}

/// Human-readable form of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let o = &mut out;
    match &report.result {
        Output::Conj(c) => {
            let _ = writeln!(o, "gspin conjugate: {}", yes_no(c.gspin_conjugate));
            let _ = writeln!(o, "steinberg criterion: {}", yes_no(c.steinberg_conjugate));
            let _ = writeln!(o, "std conjugate: {}", yes_no(c.std_conjugate));
            let _ = writeln!(o, "GO conjugate: {}", yes_no(c.go_conjugate));
            for i in 0..2 {
                let _ = writeln!(
                    o,
                    "t{}: canonical {}, N = {}, bad position {}, sign twist {}",
                    i + 1,
                    c.canonical[i],
                    c.spinor_norm[i],
                    yes_no(c.bad_position[i]),
                    yes_no(c.sign_twist[i])
                );
            }
            let _ = writeln!(o, "criteria agree: {}", yes_no(c.criteria_agree));
        }
        Output::Lfactor(l) => {
            for f in &l.factors {
                let label = f
                    .label
                    .as_deref()
                    .map(|s| format!(" [{s}]"))
                    .unwrap_or_default();
                let _ = writeln!(o, "q = {}{label} {}: {}", f.q, f.class, f.factored);
                let _ = writeln!(o, "  {} = {}", l.rep, f.poly);
            }
        }
        Output::Lsum(v) => {
            let shift = v
                .shift
                .as_deref()
                .map(|w| format!(", shift {w}"))
                .unwrap_or_default();
            let _ = writeln!(
                o,
                "L^S(s = {}, {}) over q <= {}{shift}: {}",
                v.s, v.rep, v.cutoff, v.decimal
            );
            let _ = writeln!(o, "convergence bound: s > {}", v.bound);
            for t in &v.terms {
                let _ = writeln!(
                    o,
                    "  q = {} {}: {} -> {}",
                    t.q, t.class, t.factored, t.local_value
                );
            }
        }
        Output::WeightsCheck(w) => {
            let _ = writeln!(o, "spin HT numbers: {}", w.spin_ht_numbers.join(", "));
            let _ = writeln!(o, "std HT numbers: {}", w.std_ht_numbers.join(", "));
            let _ = writeln!(o, "spin-regular: {}", yes_no(w.spin_regular));
            let _ = writeln!(o, "std-regular: {}", yes_no(w.std_regular));
            let _ = writeln!(o, "{}", ht_line("HT1", &w.ht1, &["x"]));
            match &w.ht2 {
                Some(v) => {
                    let _ = writeln!(o, "{}", ht_line("HT2", v, &["a", "b"]));
                }
                None => {
                    let _ = writeln!(o, "HT2: n/a (n != 3)");
                }
            }
        }
        Output::WeightsHodge(h) => {
            let _ = writeln!(o, "Hodge cocharacter: ({})", h.hodge.coords.join(", "));
            let _ = writeln!(o, "C-normalized: ({})", h.c_normalized.coords.join(", "));
            let _ = writeln!(o, "spin-regular: {}", yes_no(h.spin_regular));
        }
        Output::Classicality(c) => {
            let vbeta = match &report.request {
                Request::Classicality { vbeta, .. } => vbeta.as_str(),
                _ => "?",
            };
            let _ = writeln!(o, "bound: {}", c.bound);
            let _ = writeln!(
                o,
                "v(beta) = {vbeta}: {}",
                if c.classical {
                    "small slope, classical"
                } else {
                    "not below the bound"
                }
            );
            if let Some(a) = c.admissible {
                let _ = writeln!(o, "cone admissible: {}", yes_no(a));
            }
        }
        Output::G2(g) => {
            let e = &g.embedding;
            let _ = writeln!(o, "embedding: ({}; {})", e.c, e.a.join(", "));
            let _ = writeln!(o, "spin eigenvalues: {}", g.spin_eigenvalues.join(", "));
            let _ = writeln!(o, "std eigenvalues: {}", g.std_eigenvalues.join(", "));
            let _ = writeln!(
                o,
                "trace spin = {}, trace std = {}",
                g.trace_spin, g.trace_std
            );
            let _ = writeln!(o, "8 = 7 + 1: {}", pass_fail(g.trace_ok && g.multiset_ok));
            let _ = writeln!(o, "G2 class: {}", yes_no(g.g2_class));
            let _ = writeln!(o, "principal type: {}", yes_no(g.principal_type));
        }
        Output::CliffordMul(m) => {
            let _ = writeln!(o, "ab = {}", multivector(&m.product));
            let _ = writeln!(o, "ba = {}", multivector(&m.reversed_product));
            let _ = writeln!(o, "ab + ba = {}", multivector(&m.anticommutator));
        }
        Output::CliffordNorm(nm) => {
            let _ = writeln!(o, "even: {}", yes_no(nm.even));
            let _ = writeln!(o, "in GSpin: {}", yes_no(nm.is_gspin));
            if let (Some(s), Some(sim)) = (&nm.spinor_norm, &nm.similitude) {
                let _ = writeln!(o, "spinor norm: {s}");
                let _ = writeln!(o, "GO similitude: {sim}");
            }
        }
        Output::CliffordTorus(t) => {
            let _ = writeln!(o, "element: {}", multivector(&t.element));
            let _ = writeln!(o, "spinor norm: {}", t.spinor_norm);
            let _ = writeln!(o, "spin diagonal: {}", t.spin_diagonal.join(", "));
            let _ = writeln!(o, "SO diagonal: {}", t.so_diagonal.join(", "));
        }
        Output::CliffordCheck(c) => {
            let _ = writeln!(
                o,
                "v^2 = Q(v) on {} vectors: {}",
                c.vectors,
                pass_fail(c.square_law)
            );
            let _ = writeln!(
                o,
                "associativity on {} triples: {}",
                c.triples,
                pass_fail(c.associativity)
            );
        }
        Output::Store(s) => {
            let ranks: Vec<String> = s.ranks.iter().map(ToString::to_string).collect();
            let primes: Vec<String> = s.primes.iter().map(ToString::to_string).collect();
            let _ = writeln!(o, "records: {} ({} new)", s.records, s.added);
            let _ = writeln!(o, "ranks: {}", ranks.join(", "));
            let _ = writeln!(o, "q values: {}", primes.join(", "));
        }
    }
    out
}
