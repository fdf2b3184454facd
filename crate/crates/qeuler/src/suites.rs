//! Named verification suites and their default bounds.

use clap::ValueEnum;
use qeuler_core::{genfun, posetlab, quasisym, wordcomb, Executor, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    #[value(name = "thm1-1")]
    Thm1_1,
    #[value(name = "eq1")]
    Eq1,
    #[value(name = "thm1-2")]
    Thm1_2,
    #[value(name = "reductions")]
    Reductions,
    #[value(name = "thm4-1")]
    Thm4_1,
    #[value(name = "thm2-1")]
    Thm2_1,
    #[value(name = "symmetry")]
    Symmetry,
    #[value(name = "eq6")]
    Eq6,
    #[value(name = "thm2-2")]
    Thm2_2,
    #[value(name = "cor2-3")]
    Cor2_3,
    #[value(name = "rec9")]
    Rec9,
    #[value(name = "cor2-4")]
    Cor2_4,
    #[value(name = "prop2-5")]
    Prop2_5,
    #[value(name = "thm2-6")]
    Thm2_6,
    #[value(name = "thm3-3")]
    Thm3_3,
    #[value(name = "eq13")]
    Eq13,
    /// The unreflected subspace weights; expected to fail.
    #[value(name = "eq13-literal")]
    Eq13Literal,
    #[value(name = "all")]
    All,
}

/// Bounds requested on the command line; unset fields take the suite defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub q: Option<u32>,
    pub small: bool,
}

/// Bounds after defaults are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub n: usize,
    pub m: Option<usize>,
    pub q: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub suite: Suite,
    pub bounds: Resolved,
    pub report: Report,
    /// Extra values worth showing, such as homology dimensions.
    pub details: Vec<String>,
}

impl SuiteRun {
    pub fn pass(&self) -> bool {
        self.report.pass()
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1_1 => "thm1-1",
            Suite::Eq1 => "eq1",
            Suite::Thm1_2 => "thm1-2",
            Suite::Reductions => "reductions",
            Suite::Thm4_1 => "thm4-1",
            Suite::Thm2_1 => "thm2-1",
            Suite::Symmetry => "symmetry",
            Suite::Eq6 => "eq6",
            Suite::Thm2_2 => "thm2-2",
            Suite::Cor2_3 => "cor2-3",
            Suite::Rec9 => "rec9",
            Suite::Cor2_4 => "cor2-4",
            Suite::Prop2_5 => "prop2-5",
            Suite::Thm2_6 => "thm2-6",
            Suite::Thm3_3 => "thm3-3",
            Suite::Eq13 => "eq13",
            Suite::Eq13Literal => "eq13-literal",
            Suite::All => "all",
        }
    }

    /// Every suite that `all` runs, in order.
    pub fn members() -> Vec<Suite> {
        Suite::value_variants()
            .iter()
            .copied()
            .filter(|s| !matches!(s, Suite::All | Suite::Eq13Literal))
            .collect()
    }

    /// Default `(n, m, q)`. `m = None` for suites without variables; a `Some`
    /// of 0 means "m = n".
    fn defaults(self, small: bool) -> (usize, Option<usize>, Option<u32>) {
        let pick = |full: usize, reduced: usize| if small { reduced } else { full };
        match self {
            Suite::Thm1_1 | Suite::Eq1 | Suite::Thm1_2 | Suite::Reductions | Suite::Thm4_1 => (pick(8, 6), None, None),
            Suite::Thm2_1 | Suite::Symmetry | Suite::Cor2_3 | Suite::Rec9 => (6, Some(0), None),
            Suite::Eq6 => (6, Some(0), None),
            Suite::Thm2_2 | Suite::Prop2_5 => (pick(5, 4), Some(4), None),
            Suite::Cor2_4 | Suite::Thm2_6 => (pick(5, 4), Some(0), None),
            Suite::Thm3_3 => (pick(5, 4), None, None),
            Suite::Eq13 | Suite::Eq13Literal => (3, None, Some(2)),
            Suite::All => (0, None, None),
        }
    }

    pub fn resolve(self, b: &Bounds) -> Resolved {
        let (n, m, q) = self.defaults(b.small);
        let n = b.n.unwrap_or(n);
        let m = m.map(|m| b.m.unwrap_or(if m == 0 { n } else { m }));
        Resolved { n, m, q: q.map(|q| b.q.unwrap_or(q)) }
    }

    /// Runs one suite; `All` runs every member and returns one entry per member.
    pub fn run(self, b: &Bounds, exec: &dyn Executor) -> Vec<SuiteRun> {
        if self == Suite::All {
            return Suite::members().into_iter().flat_map(|s| s.run(b, exec)).collect();
        }
        let r = self.resolve(b);
        let (n, m, q) = (r.n, r.m.unwrap_or(0), r.q.unwrap_or(0));
        let mut details = Vec::new();
        let report = match self {
            Suite::Thm1_1 => genfun::verify_thm_1_1_with(n, exec),
            Suite::Eq1 => genfun::verify_eq_1(n),
            Suite::Thm1_2 => genfun::verify_thm_1_2_with(n, exec),
            Suite::Reductions => genfun::verify_reductions(n),
            Suite::Thm4_1 => genfun::verify_thm_4_1_with(n, exec),
            Suite::Thm2_1 => quasisym::verify_thm_2_1(n, m),
            Suite::Symmetry => quasisym::verify_symmetry(n, m),
            Suite::Eq6 => quasisym::verify_specialization_6(n, m as u32),
            Suite::Thm2_2 => wordcomb::verify_thm_2_2_upto(n, m as u32),
            Suite::Cor2_3 => quasisym::verify_cor_2_3(n, m),
            Suite::Rec9 => quasisym::verify_recurrence_9(n, m),
            Suite::Cor2_4 => wordcomb::verify_cor_2_4_upto(n, Some(m as u32)),
            Suite::Prop2_5 => wordcomb::verify_prop_2_5_upto(n, m as u32),
            Suite::Thm2_6 => wordcomb::verify_thm_2_6_upto(n, Some(m as u32)),
            Suite::Thm3_3 => posetlab::verify_thm_3_3_upto(n),
            Suite::Eq13 | Suite::Eq13Literal => {
                for k in 1..=n {
                    if let Ok(dims) = posetlab::top_dims(k, Some(q)) {
                        details.push(format!("dims n={k},q={q}: {dims:?}"));
                    }
                }
                if self == Suite::Eq13 {
                    posetlab::verify_eq_13_14(n, q)
                } else {
                    posetlab::verify_eq_13_literal(n, q)
                }
            }
            Suite::All => unreachable!(),
        };
        vec![SuiteRun { suite: self, bounds: r, report, details }]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qeuler_core::Sequential;

    #[test]
    fn names_round_trip() {
        for s in Suite::value_variants() {
            assert_eq!(Suite::from_str(s.name(), false).unwrap(), *s);
        }
        assert!(!Suite::members().contains(&Suite::Eq13Literal));
    }

    #[test]
    fn defaults_follow_n() {
        let b = Bounds { n: Some(3), ..Bounds::default() };
        assert_eq!(Suite::Cor2_4.resolve(&b), Resolved { n: 3, m: Some(3), q: None });
        assert_eq!(Suite::Thm2_2.resolve(&b).m, Some(4));
        assert_eq!(Suite::Eq13.resolve(&Bounds::default()).q, Some(2));
        let small = Bounds { small: true, ..Bounds::default() };
        assert_eq!(Suite::Thm3_3.resolve(&small).n, 4);
    }

    #[test]
    fn tiny_runs_pass() {
        let b = Bounds { n: Some(3), ..Bounds::default() };
        for run in Suite::All.run(&b, &Sequential) {
            assert!(run.pass(), "{} {:?}", run.suite.name(), run.report.first_mismatch());
        }
        assert!(!Suite::Eq13Literal.run(&b, &Sequential)[0].pass());
    }
}
