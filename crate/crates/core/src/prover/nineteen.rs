//! The elimination trace for `(1,19,17,19,1)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{enumerate_gorenstein_decompositions, injectivity_socle, zanello_socle, HVector};
use crate::engine::{build_ideal, restriction_profile, PolyTerm, Polynomial, DEFAULT_PRIME};
use crate::extremal::{predicted_scheme_hf, recognize_hypersurface_form};
use crate::lex::{cancellation_socle_lower_bound, ek_betti, lex_ideal, truncate_ideal};
use crate::macaulay::{expand, green_bound, macaulay_bound};

use super::replay::replay;
use super::trace::{
    degree_extension, BettiEntry, Binding, Branch, CompareOp, Constraint, DegreeRow, Operand, ProofTrace,
    RestrictionCheck, Rule, Split, Status, Step,
};
use super::{ProverError, Result, Verdict};

pub const TRACE_VERSION: u32 = 1;
/// Seed for the random forms of the representative schemes.
pub const FORM_SEED: u64 = 19;
/// Seed for the general linear form used in restriction checks.
pub const RESTRICTION_SEED: u64 = 11;

pub const GOAL: [u64; 5] = [1, 19, 17, 19, 1];

const BETTI_30: [(usize, usize); 11] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (18, 19),
    (18, 20),
    (18, 21),
    (18, 22),
    (19, 20),
    (19, 21),
    (19, 23),
];
const BETTI_29: [(usize, usize); 6] = [(1, 2), (1, 4), (1, 5), (18, 21), (19, 21), (19, 23)];

fn construction(step: &str, e: impl std::fmt::Display) -> ProverError {
    ProverError::Construction {
        step: step.to_string(),
        reason: e.to_string(),
    }
}

struct Builder {
    steps: Vec<Step>,
    splits: Vec<Split>,
}

impl Builder {
    fn check(&mut self, id: &str, branch: Option<&str>, title: impl Into<String>, rule: Rule, citation: &str) -> &mut Step {
        self.steps.push(Step {
            id: id.to_string(),
            branch: branch.map(str::to_string),
            title: title.into(),
            rule,
            status: Status::MachineChecked,
            citation: citation.to_string(),
            group: None,
            uses: Vec::new(),
            closes: false,
            flags: Vec::new(),
        });
        self.steps.last_mut().expect("just pushed")
    }

    #[allow(clippy::too_many_arguments)]
    fn cite(
        &mut self,
        id: &str,
        branch: Option<&str>,
        group: &str,
        title: impl Into<String>,
        claim: &str,
        yields: &[(&str, i64)],
        citation: &str,
    ) -> &mut Step {
        self.steps.push(Step {
            id: id.to_string(),
            branch: branch.map(str::to_string),
            title: title.into(),
            rule: Rule::Cited {
                claim: claim.to_string(),
                yields: yields.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            },
            status: Status::CitedAxiom,
            citation: citation.to_string(),
            group: Some(group.to_string()),
            uses: Vec::new(),
            closes: false,
            flags: Vec::new(),
        });
        self.steps.last_mut().expect("just pushed")
    }

    fn split(&mut self, id: &str, parent: Option<&str>, justified_by: &str, description: &str, branches: &[(&str, &str)]) {
        self.splits.push(Split {
            id: id.to_string(),
            parent: parent.map(str::to_string),
            justified_by: justified_by.to_string(),
            description: description.to_string(),
            branches: branches
                .iter()
                .map(|&(id, assumption)| Branch {
                    id: id.to_string(),
                    assumption: assumption.to_string(),
                })
                .collect(),
        });
    }
}

trait StepExt {
    fn uses(&mut self, input: &str, step: &str, output: &str) -> &mut Self;
    fn closes(&mut self) -> &mut Self;
    fn flag(&mut self, f: &str) -> &mut Self;
}

impl StepExt for Step {
    fn uses(&mut self, input: &str, step: &str, output: &str) -> &mut Self {
        self.uses.push(Binding {
            input: input.to_string(),
            step: step.to_string(),
            output: output.to_string(),
        });
        self
    }

    fn closes(&mut self) -> &mut Self {
        self.closes = true;
        self
    }

    fn flag(&mut self, f: &str) -> &mut Self {
        self.flags.push(f.to_string());
        self
    }
}

fn mac(id: &str, h: u64, d: usize) -> Result<Rule> {
    Ok(Rule::MacaulayBound {
        h,
        d,
        bound: macaulay_bound(h, d).map_err(|e| construction(id, e))?,
    })
}

fn green(id: &str, h: u64, d: usize) -> Result<Rule> {
    Ok(Rule::GreenBound {
        h,
        d,
        bound: green_bound(h, d).map_err(|e| construction(id, e))?,
    })
}

fn zanello(id: &str, h: &[u64], d: usize) -> Result<Rule> {
    let w = zanello_socle(h, d)
        .map_err(|e| construction(id, e))?
        .ok_or_else(|| construction(id, "no socle forced"))?;
    Ok(Rule::ZanelloSocle {
        h: h.to_vec(),
        d,
        socle_degree: w.degree,
        dimension: w.dimension,
    })
}

fn injectivity(id: &str, h: &[u64], l: &[u64], d: usize) -> Result<Rule> {
    let w = injectivity_socle(h, l, d)
        .map_err(|e| construction(id, e))?
        .ok_or_else(|| construction(id, "no socle forced"))?;
    Ok(Rule::InjectivitySocle {
        h: h.to_vec(),
        l: l.to_vec(),
        d,
        socle_degree: w.degree,
        dimension: w.dimension,
    })
}

fn lex_cancellation(id: &str, h: &[u64], positions: &[(usize, usize)]) -> Result<Rule> {
    let nvars = h[1] as usize;
    let ideal = truncate_ideal(&lex_ideal(h, nvars).map_err(|e| construction(id, e))?, 4);
    let table = ek_betti(&ideal).map_err(|e| construction(id, e))?;
    let (i, j) = (nvars, nvars + 2);
    Ok(Rule::LexCancellation {
        h: h.to_vec(),
        nvars,
        truncate_at: 4,
        entries: positions
            .iter()
            .map(|&(i, j)| BettiEntry {
                i,
                j,
                value: table.get(i, j),
            })
            .collect(),
        generators: vec![(5, ideal.generators_of_degree(5).count() as u64)],
        i,
        j,
        lower_bound: cancellation_socle_lower_bound(&table, i, j),
        socle_degree: j - i,
    })
}

fn engine(id: &str, nvars: usize, cap: usize, generators: Vec<Polynomial>, restrict: bool) -> Result<Rule> {
    let model = build_ideal(&generators, nvars, DEFAULT_PRIME, cap).map_err(|e| construction(id, e))?;
    let restriction = if restrict {
        let p = restriction_profile(&model, RESTRICTION_SEED).map_err(|e| construction(id, e))?;
        Some(RestrictionCheck {
            seed: RESTRICTION_SEED,
            hf: p.l,
        })
    } else {
        None
    };
    Ok(Rule::EngineHilbertFunction {
        nvars,
        prime: DEFAULT_PRIME,
        cap,
        hf: model.hilbert_function(),
        generators,
        restriction,
    })
}

fn enumerate(variable: &str, lo: i64, hi: i64, constraints: Vec<Constraint>, resolved: &[i64]) -> Result<Rule> {
    let mut survivors = Vec::new();
    for x in lo..=hi {
        let mut keep = true;
        for (c, &v) in constraints.iter().zip(resolved) {
            keep &= match c {
                Constraint::AtMost { .. } => x <= v,
                Constraint::AtLeast { .. } => x >= v,
                Constraint::MacaulayAtLeast { degree, .. } => macaulay_bound(x as u64, *degree)? as i64 >= v,
                Constraint::GreenAtLeast { degree, .. } => green_bound(x as u64, *degree)? as i64 >= v,
            };
        }
        if keep {
            survivors.push(x);
        }
    }
    Ok(Rule::Enumerate {
        variable: variable.to_string(),
        lo,
        hi,
        constraints,
        survivors,
    })
}

fn extension(id: &str, d: usize, h_max: u64, b: Vec<u64>, l: Vec<u64>) -> Result<Rule> {
    let survivors = degree_extension(d, h_max, &b, &l).map_err(|e| construction(id, e))?;
    Ok(Rule::DegreeExtension {
        d,
        h_max,
        b_options: b,
        l_options: l,
        survivors,
    })
}

fn survivors_of(rule: &Rule) -> Vec<DegreeRow> {
    match rule {
        Rule::DegreeExtension { survivors, .. } => survivors.clone(),
        _ => Vec::new(),
    }
}

fn enum_values(rule: &Rule) -> Vec<i64> {
    match rule {
        Rule::Enumerate { survivors, .. } => survivors.clone(),
        _ => Vec::new(),
    }
}

fn mono(coef: i64, exp: &[u16]) -> PolyTerm {
    PolyTerm { coef, exp: exp.to_vec() }
}

fn times_monomial(f: &Polynomial, exp: &[u16]) -> Polynomial {
    Polynomial::new(
        f.terms()
            .iter()
            .map(|t| PolyTerm {
                coef: t.coef,
                exp: t.exp.iter().zip(exp).map(|(a, b)| a + b).collect(),
            })
            .collect(),
    )
}

/// Builds and replays the trace.
pub fn prove_not_gorenstein_19() -> Result<ProofTrace> {
    let trace = build()?;
    replay(&trace)?;
    Ok(trace)
}

/// Builds the trace without replaying it.
pub fn build() -> Result<ProofTrace> {
    let mut t = Builder {
        steps: Vec::new(),
        splits: Vec::new(),
    };
    let h = GOAL;

    // Degree 4 of R/J.
    let r1 = mac("1", h[3], 3)?;
    let Rule::MacaulayBound { bound: top, .. } = r1 else { unreachable!() };
    t.check("1", None, "H(R/J,4) <= macaulay_bound(19,3)", r1, "Macaulay's theorem");
    t.split(
        "top",
        None,
        "1",
        "value of H(R/J,4) below the Macaulay bound",
        &[
            ("h4=31", "H(R/J,4) = 31"),
            ("h4=30", "H(R/J,4) = 30"),
            ("h4=29", "H(R/J,4) = 29"),
            ("h4<=28", "H(R/J,4) <= 28"),
        ],
    );
    t.check(
        "2",
        Some("h4=31"),
        "maximal growth in degree 3 forces a socle in degree 2",
        zanello("2", &[1, 19, 17, 19, top], 3)?,
        "socle from maximal growth",
    )
    .closes();
    for (id, v, positions) in [("3.30", 30u64, &BETTI_30[..]), ("3.29", 29, &BETTI_29[..])] {
        let branch = format!("h4={v}");
        t.check(
            id,
            Some(&branch),
            format!("lex Betti table of (1,19,17,19,{v}) truncated at 4 leaves socle in degree 2"),
            lex_cancellation(id, &[1, 19, 17, 19, v], positions)?,
            "Eliahou-Kervaire resolution; cancellation principle",
        )
        .closes();
    }

    // The three decompositions.
    let hv = HVector::new(h.to_vec()).map_err(|e| construction("5", e))?;
    let candidates = enumerate_gorenstein_decompositions(&hv).map_err(|e| construction("5", e))?;
    if candidates.len() != 3 {
        return Err(construction("5", format!("expected 3 decompositions, found {}", candidates.len())));
    }
    let rows: Vec<(Vec<u64>, Vec<u64>)> = candidates.iter().map(|c| (c.b.clone(), c.l.clone())).collect();
    t.check(
        "5",
        Some("h4<=28"),
        "decompositions of (1,19,17,19,1) by a general linear form",
        Rule::GorensteinDecompositions {
            h: h.to_vec(),
            candidates,
        },
        "Gorenstein decomposition constraints",
    );
    let case_names: Vec<String> = rows.iter().map(|(b, _)| format!("colon row (1,{},{},1)", b[1], b[2])).collect();
    t.split(
        "decomposition",
        Some("h4<=28"),
        "5",
        "which decomposition occurs",
        &[
            ("case-1", &case_names[0]),
            ("case-2", &case_names[1]),
            ("case-3", &case_names[2]),
        ],
    );

    case_one(&mut t)?;
    case_three(&mut t, &rows[2].1)?;
    case_two(&mut t, &rows[1].1)?;

    Ok(ProofTrace {
        version: TRACE_VERSION,
        goal: h.to_vec(),
        hypotheses: vec![
            "char k = 0".into(),
            "R/I is Artinian Gorenstein with h-vector (1,19,17,19,1)".into(),
            "J is generated by the components of I in degrees <= 3".into(),
            "L, L1, L2 are general linear forms".into(),
        ],
        steps: t.steps,
        splits: t.splits,
        conclusion: Verdict::NotGorenstein,
    })
}

fn case_one(t: &mut Builder) -> Result<()> {
    let b = Some("case-1");
    t.check("6.1", b, "green_bound(19,3)", green("6.1", 19, 3)?, "Green's theorem");
    t.check(
        "6.2",
        b,
        "the restriction attains Green's bound in degree 3",
        Rule::Compare {
            lhs: Operand::at("5", "l0[3]"),
            op: CompareOp::Eq,
            rhs: Operand::at("6.1", "bound"),
            holds: true,
        },
        "Green's theorem",
    );
    let f = recognize_hypersurface_form(19, 3)
        .map_err(|e| construction("6.3", e))?
        .ok_or_else(|| construction("6.3", "19 is not of hypersurface form"))?;
    let predicted = predicted_scheme_hf(&f, 4).map_err(|e| construction("6.3", e))?;
    t.check(
        "6.3",
        b,
        "extremal restriction: J agrees with the ideal of a cubic surface in a P^3 in degree 4",
        Rule::HypersurfaceForm {
            h: 19,
            d: 3,
            c: f.c,
            k: f.k,
            t: 4,
            predicted,
        },
        "extremal Green restriction for hypersurfaces in a linear space",
    );
    t.check(
        "6.4",
        b,
        "the predicted value exceeds H(R/J,4) <= 28",
        Rule::Compare {
            lhs: Operand::at("6.3", "predicted"),
            op: CompareOp::Le,
            rhs: Operand::lit(28),
            holds: false,
        },
        "comparison",
    )
    .closes();
    Ok(())
}

fn case_three(t: &mut Builder, l: &[u64]) -> Result<()> {
    let b = Some("case-3");
    t.check(
        "7.1",
        b,
        "the restriction row has maximal growth from degree 2 to 3",
        Rule::MaximalGrowth { row: l[..4].to_vec(), d: 2 },
        "Macaulay's theorem",
    )
    .uses("row[2]", "5", "l2[2]")
    .uses("row[3]", "5", "l2[3]");
    let l4 = macaulay_bound(l[3], 3).map_err(|e| construction("7.2", e))?;
    t.check(
        "7.2",
        b,
        "persistence fixes H(R/(J,L),4)",
        Rule::Gotzmann {
            h_d: l[3],
            d: 3,
            values: vec![l4],
        },
        "Gotzmann persistence",
    )
    .uses("h_d", "7.1", "next");
    t.check("7.3", b, "green_bound(28,4)", green("7.3", 28, 4)?, "Green's theorem");
    t.check("7.4", b, "green_bound(27,4)", green("7.4", 27, 4)?, "Green's theorem");
    t.cite(
        "7.5",
        b,
        "case-3-geometry",
        "J^sat is a quadric surface in a P^3 plus a finite scheme; multiplication by L is injective from [R/J]_3 to [R/J]_4",
        "H(R/(J:L),3) >= H(R/J,3) = 19",
        &[("colon_h3_min", 19)],
        "local:quadric-surface-union",
    );
    let c = vec![Constraint::AtLeast {
        value: Operand::at("7.5", "colon_h3_min"),
    }];
    let r = enumerate("H(R/(J:L),3)", 0, 19, c, &[19])?;
    let colon: Vec<u64> = enum_values(&r).iter().map(|&v| v as u64).collect();
    t.check("7.6", b, "H(R/(J:L),3) is at most H(R/J,3) = 19", r, "bound by H(R/J,3)");
    let r = extension("7.7", 4, 28, colon, vec![l4])?;
    let row = survivors_of(&r)
        .first()
        .copied()
        .ok_or_else(|| construction("7.7", "no degree-4 row"))?;
    t.check("7.7", b, "degree-4 row of the decomposition of R/J", r, "Green's theorem")
        .uses("b_options[0]", "7.6", "min")
        .uses("l_options[0]", "7.2", "h[4]");
    let hj = [1, 19, 17, 19, row.h];
    let lj = [1, 18, l[2], l[3], row.l];
    t.check(
        "7.8",
        b,
        "injectivity into degree 4 with a kernel into degree 3 forces socle in degree 2",
        injectivity("7.8", &hj, &lj, 3)?,
        "socle from injectivity",
    )
    .uses("h[4]", "7.7", "h0")
    .uses("l[4]", "7.7", "l0")
    .uses("l[2]", "5", "l2[2]")
    .uses("l[3]", "5", "l2[3]")
    .closes();
    Ok(())
}

fn case_two(t: &mut Builder, l: &[u64]) -> Result<()> {
    let b = Some("case-2");
    let x_max = green_bound(l[2], 2)?;
    let y_max = green_bound(l[3], 3)?;
    t.check("8.1", b, "H(R/(J,L1,L2),2) <= green_bound(6,2)", green("8.1", l[2], 2)?, "Green's theorem")
        .uses("h", "5", "l1[2]");
    t.check("8.2", b, "H(R/(J,L1,L2),3) <= green_bound(8,3)", green("8.2", l[3], 3)?, "Green's theorem")
        .uses("h", "5", "l1[3]");
    let c = vec![
        Constraint::AtLeast {
            value: Operand::diff(Operand::at("5", "l1[3]"), Operand::at("5", "l1[2]")),
        },
        Constraint::AtMost {
            value: Operand::at("8.2", "bound"),
        },
    ];
    let r = enumerate("H(R/(J,L1,L2),3)", 0, l[3] as i64, c, &[l[3] as i64 - l[2] as i64, y_max as i64])?;
    let y = *enum_values(&r).first().ok_or_else(|| construction("8.3", "empty squeeze"))?;
    t.check(
        "8.3",
        b,
        "squeeze: l3 - l2 <= H(R/(J,L1,L2),3) <= green_bound(8,3)",
        r,
        "exact sequence for multiplication by L2",
    );
    let c = vec![
        Constraint::AtMost {
            value: Operand::at("8.1", "bound"),
        },
        Constraint::MacaulayAtLeast {
            degree: 2,
            value: Operand::at("8.3", "min"),
        },
    ];
    let r = enumerate("H(R/(J,L1,L2),2)", 0, l[2] as i64, c, &[x_max as i64, y])?;
    t.check(
        "8.4",
        b,
        "H(R/(J,L1,L2),2) is 2 or 3",
        r,
        "Green's theorem; Macaulay's theorem",
    );
    t.split(
        "case-2",
        Some("case-2"),
        "8.4",
        "value of H(R/(J,L1,L2),2)",
        &[("2a", "H(R/(J,L1,L2),2) = 2"), ("2b", "H(R/(J,L1,L2),2) = 3")],
    );
    let reuse = part_a(t, l, y as u64)?;
    part_b(t, l, reuse)
}

fn part_a(t: &mut Builder, l: &[u64], y: u64) -> Result<(String, Vec<DegreeRow>)> {
    let b = Some("2a");
    let hl = [1, l[1], l[2], l[3]];
    let ll = [1, l[1] - 1, 2, y];
    let next_l = macaulay_bound(y, 3)?;
    t.check(
        "8.a.1",
        b,
        "R/(J,L1): no kernel into degree 3 and maximal growth 2 -> 2 give, by persistence, injectivity into degree 4",
        Rule::InjectivityPropagation {
            h: hl.to_vec(),
            l: ll.to_vec(),
            d: 3,
            next_l,
            next_h: hl[3] + next_l,
        },
        "Gotzmann persistence; 2-regularity of (J,L1,L2)",
    )
    .uses("h[2]", "5", "l1[2]")
    .uses("h[3]", "5", "l1[3]")
    .uses("l[3]", "8.3", "min")
    .uses("l[2]", "8.4", "min");
    let l4 = hl[3] + next_l;
    t.check("8.a.2", b, "green_bound(28,4)", green("8.a.2", 28, 4)?, "Green's theorem");
    t.check("8.a.3", b, "green_bound(27,4)", green("8.a.3", 27, 4)?, "Green's theorem");
    let r = extension("8.a.4", 4, 28, (0..=19).collect(), vec![l4])?;
    let survivors = survivors_of(&r);
    let row = *survivors.first().ok_or_else(|| construction("8.a.4", "no degree-4 row"))?;
    t.check(
        "8.a.4",
        b,
        "degree-4 row with H(R/(J,L1),4) = 10 and H(R/J,4) <= 28 forces H(R/J,4) = 28",
        r,
        "Green's theorem",
    )
    .uses("l_options[0]", "8.a.1", "next_h");
    t.check(
        "8.a.5",
        b,
        "R/(J,L1) has maximal growth from degree 3 to 4",
        Rule::MaximalGrowth {
            row: vec![1, l[1], l[2], l[3], l4],
            d: 3,
        },
        "Macaulay's theorem",
    )
    .uses("row[4]", "8.a.1", "next_h");
    let terms = expand(row.h, 4)?.terms().iter().map(|t| (t.top, t.bottom)).collect();
    t.check(
        "8.a.6",
        b,
        "28 = C(6,4) + C(5,3) + C(3,2)",
        Rule::Expansion { h: row.h, d: 4, terms },
        "binomial expansion",
    )
    .uses("h", "8.a.4", "h0");
    t.check(
        "8.a.7",
        b,
        "Hilbert polynomial of R/(J,L1) is 2t + 2",
        Rule::HilbertPolynomial {
            h: l4,
            d: 4,
            slope: 2,
            intercept: 2,
        },
        "Gotzmann persistence",
    )
    .uses("h", "8.a.1", "next_h");
    t.split(
        "2a",
        Some("2a"),
        "8.a.7",
        "(J,L1) defines a conic and a point, or two skew lines; the saturation of J lifts this",
        &[
            ("2a-planes", "J^sat defines two planes meeting in a point, plus m points"),
            ("2a-quadric-line", "J^sat defines a quadric surface and a line in a P^3, plus m points"),
        ],
    );
    let planes = vec![
        Polynomial::monomial(1, vec![1, 0, 1, 0, 0]),
        Polynomial::monomial(1, vec![1, 0, 0, 1, 0]),
        Polynomial::monomial(1, vec![0, 1, 1, 0, 0]),
        Polynomial::monomial(1, vec![0, 1, 0, 1, 0]),
    ];
    t.check(
        "8.a.8",
        Some("2a-planes"),
        "Hilbert function of two planes in P^4 meeting in a point",
        engine("8.a.8", 5, 4, planes, false)?,
        "prime-field linear algebra",
    );
    t.check(
        "8.a.9",
        Some("2a-planes"),
        "29 + m exceeds H(R/J,4) = 28",
        Rule::Compare {
            lhs: Operand::at("8.a.8", "h[4]"),
            op: CompareOp::Le,
            rhs: Operand::at("8.a.4", "h0"),
            holds: false,
        },
        "comparison",
    )
    .closes();
    let q = Polynomial::new(vec![mono(1, &[1, 1, 0, 0]), mono(1, &[0, 0, 2, 0]), mono(1, &[0, 0, 0, 2])]);
    let ql = vec![times_monomial(&q, &[0, 0, 1, 0]), times_monomial(&q, &[0, 0, 0, 1])];
    let sub = Some("2a-quadric-line");
    let r = engine("8.a.10", 4, 5, ql, false)?;
    let Rule::EngineHilbertFunction { hf: xhf, .. } = &r else { unreachable!() };
    let xhf = xhf.clone();
    t.check(
        "8.a.10",
        sub,
        "Hilbert function of a smooth quadric surface union a line in P^3",
        r,
        "prime-field linear algebra",
    );
    let c = vec![Constraint::AtMost {
        value: Operand::diff(Operand::at("8.a.4", "h0"), Operand::at("8.a.10", "h[4]")),
    }];
    t.check(
        "8.a.11",
        sub,
        "number m of further points: 28 + m <= 28",
        enumerate("m", 0, row.h as i64, c, &[row.h as i64 - xhf[4] as i64])?,
        "comparison",
    );
    t.check("8.a.12", sub, "macaulay_bound(28,4)", mac("8.a.12", row.h, 4)?, "Macaulay's theorem")
        .uses("h", "8.a.4", "h0");
    t.check(
        "8.a.13",
        sub,
        "H(R/J,5) = 40 attains the Macaulay bound",
        Rule::Compare {
            lhs: Operand::at("8.a.10", "h[5]"),
            op: CompareOp::Eq,
            rhs: Operand::at("8.a.12", "bound"),
            holds: true,
        },
        "Macaulay's theorem",
    );
    t.check(
        "8.a.14",
        sub,
        "maximal growth in degree 4 forces a socle in degree 3",
        zanello("8.a.14", &[1, 19, 17, 19, row.h, xhf[5]], 4)?,
        "socle from maximal growth",
    )
    .uses("h[4]", "8.a.4", "h0")
    .uses("h[5]", "8.a.10", "h[5]")
    .closes();
    Ok(("8.a.4".to_string(), survivors))
}

fn part_b(t: &mut Builder, l: &[u64], reuse: (String, Vec<DegreeRow>)) -> Result<()> {
    let b = Some("2b");
    t.check(
        "8.b.1",
        b,
        "H(R/(J,L1,L2),2) = 3 attains Green's bound",
        Rule::Compare {
            lhs: Operand::at("8.4", "max"),
            op: CompareOp::Eq,
            rhs: Operand::at("8.1", "bound"),
            holds: true,
        },
        "Green's theorem",
    );
    let f = recognize_hypersurface_form(l[2], 2)?.ok_or_else(|| construction("8.b.2", "not of hypersurface form"))?;
    t.check(
        "8.b.2",
        b,
        "(J,L1) agrees in degree 2 with the ideal of a plane",
        Rule::HypersurfaceForm {
            h: l[2],
            d: 2,
            c: f.c,
            k: f.k,
            t: 3,
            predicted: predicted_scheme_hf(&f, 3)?,
        },
        "extremal Green restriction for hypersurfaces in a linear space",
    )
    .uses("h", "5", "l1[2]");

    let types: [(&str, &str, [[u16; 3]; 2]); 3] = [
        ("8.b.3", "complete intersection of two plane cubics", [[3, 0, 0], [0, 3, 0]]),
        ("8.b.4", "plane cubics with a linear common factor", [[1, 2, 0], [1, 0, 2]]),
        ("8.b.5", "plane cubics with a quadratic common factor", [[2, 1, 0], [2, 0, 1]]),
    ];
    let mut type_l4 = Vec::new();
    for (id, name, gens) in types {
        let gens = gens.iter().map(|e| Polynomial::monomial(1, e.to_vec())).collect();
        let r = engine(id, 3, 5, gens, false)?;
        if let Rule::EngineHilbertFunction { hf, .. } = &r {
            type_l4.push(hf[4]);
        }
        t.check(
            id,
            b,
            format!("H(R/(J,L1)) in degrees >= 3 for the pencil type: {name}"),
            r,
            "prime-field linear algebra",
        );
    }
    let group = "case-2b-geometry";
    t.cite(
        "8.b.6",
        b,
        group,
        "(J,L1) is saturated from degree 3 on, so H(R/((J:L2),L1),3) = H(R/(J,L1),3)",
        "H(R/((J:L2),L1),3) = 8",
        &[("h3", l[3] as i64)],
        "local:saturation-sandwich",
    );
    let c = vec![Constraint::GreenAtLeast {
        degree: 3,
        value: Operand::at("8.b.6", "h3"),
    }];
    let r = enumerate("H(R/(J:L1),3)", 0, 19, c, &[l[3] as i64])?;
    let colon: Vec<u64> = enum_values(&r).iter().map(|&v| v as u64).collect();
    t.check("8.b.7", b, "H(R/(J:L1),3) is 18 or 19", r, "Green's theorem");
    let mut l_options = type_l4.clone();
    l_options.sort_unstable();
    l_options.dedup();
    let r = extension("8.b.8", 4, 28, colon, l_options)?;
    let survivors = survivors_of(&r);
    if survivors.len() != 3 {
        return Err(construction("8.b.8", format!("expected 3 rows, found {}", survivors.len())));
    }
    t.check("8.b.8", b, "the three possible degree-4 rows", r, "Green's theorem")
        .uses("b_options[0]", "8.b.7", "min")
        .uses("b_options[1]", "8.b.7", "max")
        .uses("l_options[0]", "8.b.3", "h[4]")
        .uses("l_options[0]", "8.b.4", "h[4]")
        .uses("l_options[1]", "8.b.5", "h[4]");
    let names: Vec<String> = survivors
        .iter()
        .map(|r| format!("H(R/J,4) = {}, H(R/(J:L1),3) = {}, H(R/(J,L1),4) = {}", r.h, r.b, r.l))
        .collect();
    t.split(
        "2b",
        Some("2b"),
        "8.b.8",
        "which degree-4 row occurs",
        &[
            ("2b-first", &names[0]),
            ("2b-second", &names[1]),
            ("2b-third", &names[2]),
        ],
    );

    let first = survivors[0];
    t.check(
        "8.b.9",
        Some("2b-first"),
        "injectivity into degree 4 with a kernel into degree 3 forces socle in degree 2",
        injectivity("8.b.9", &[1, 19, 17, 19, first.h], &[1, 18, l[2], l[3], first.l], 3)?,
        "socle from injectivity",
    )
    .uses("h[4]", "8.b.8", "h0")
    .uses("l[4]", "8.b.8", "l0")
    .flag("reconstructed")
    .closes();

    let (reuse_step, reuse_rows) = reuse;
    if reuse_rows != [survivors[1]] {
        return Err(construction("8.b.10", "the second row does not match part (a)"));
    }
    t.check(
        "8.b.10",
        Some("2b-second"),
        "this row was eliminated in part (a)",
        Rule::Reuse {
            step: reuse_step,
            survivors: reuse_rows,
        },
        "part (a)",
    )
    .closes();

    t.check(
        "8.b.11",
        Some("2b-third"),
        "the quadratic-factor pencil gives H(R/(J,L1),4) = 10, not 9",
        Rule::Compare {
            lhs: Operand::at("8.b.5", "h[4]"),
            op: CompareOp::Eq,
            rhs: Operand::at("8.b.8", "l2"),
            holds: false,
        },
        "comparison",
    );
    t.split(
        "2b-third",
        Some("2b-third"),
        "8.b.11",
        "remaining pencil types",
        &[
            ("2b-third-i", "complete intersection pencil"),
            ("2b-third-ii", "pencil with a linear common factor"),
        ],
    );

    let mut rng = ChaCha8Rng::seed_from_u64(FORM_SEED);
    let all = [0, 1, 2, 3];
    let cubics = vec![
        Polynomial::random_form(4, 3, &all, DEFAULT_PRIME, &mut rng),
        Polynomial::random_form(4, 3, &all, DEFAULT_PRIME, &mut rng),
    ];
    let quadrics = [
        Polynomial::random_form(4, 2, &all, DEFAULT_PRIME, &mut rng),
        Polynomial::random_form(4, 2, &all, DEFAULT_PRIME, &mut rng),
    ];
    let linear_factor: Vec<Polynomial> = quadrics.iter().map(|q| times_monomial(q, &[1, 0, 0, 0])).collect();

    let schemes: [(&str, &str, &str, Vec<Polynomial>, &str, &str); 2] = [
        (
            "2b-third-i",
            "8.b.12",
            "C is a complete intersection of two cubic surfaces, m = 0, and J agrees with I_C in degrees 4 and 5",
            cubics,
            "strano; migliore",
            "complete intersection of two cubic surfaces in P^3",
        ),
        (
            "2b-third-ii",
            "8.b.15",
            "J^sat contains (L Q1, L Q2) with H(X,4) = 27, so J agrees with I_X in degrees 4 and 5",
            linear_factor,
            "local:linear-factor-scheme",
            "a plane union a complete intersection of two quadrics in P^3",
        ),
    ];
    for (branch, id, claim, gens, citation, name) in schemes {
        let next = |k: usize| {
            let (prefix, n) = id.rsplit_once('.').expect("dotted id");
            format!("{prefix}.{}", n.parse::<usize>().expect("numeric id") + k)
        };
        let (e_id, s_id) = (next(1), next(2));
        let branch = Some(branch);
        t.cite(id, branch, group, claim, claim, &[], citation);
        let r = engine(&e_id, 4, 5, gens, true)?;
        let (hf, rl) = match &r {
            Rule::EngineHilbertFunction {
                hf,
                restriction: Some(rc),
                ..
            } => (hf.clone(), rc.hf.clone()),
            _ => unreachable!(),
        };
        t.check(&e_id, branch, format!("Hilbert function of {name}"), r, "prime-field linear algebra");
        t.check(
            &s_id,
            branch,
            "injectivity into degree 5 with a kernel into degree 4 forces socle in degree 3",
            injectivity(&s_id, &[1, 19, 17, 19, hf[4], hf[5]], &[1, 18, l[2], l[3], rl[4], rl[5]], 4)?,
            "socle from injectivity",
        )
        .uses("h[4]", "8.b.8", "h2")
        .uses("h[4]", &e_id, "h[4]")
        .uses("h[5]", &e_id, "h[5]")
        .uses("l[4]", "8.b.8", "l2")
        .uses("l[4]", &e_id, "l[4]")
        .uses("l[5]", &e_id, "l[5]")
        .closes();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    #[test]
    fn builds_and_replays() {
        let trace = prove_not_gorenstein_19().unwrap();
        assert_eq!(trace.conclusion, Verdict::NotGorenstein);
        let ids: BTreeMap<&str, &Step> = trace.steps.iter().map(|s| (s.id.as_str(), s)).collect();
        assert!(ids.contains_key("3.30"));
    }
}
