//! Closed-form predictions for secant varieties of curves and a verifier
//! that diffs them against computed Betti tables and Hilbert data.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::hilbert::{binomial, HilbertData};
use crate::resolve::BettiTable;

/// A curve of genus `g` and degree `d` in `P^n`, and a secant index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveParams {
    pub g: i64,
    pub d: i64,
    pub n: i64,
    pub k: i64,
}

impl CurveParams {
    /// Linearly normal embedding by a nonspecial bundle: `n = d - g`.
    pub fn new(g: i64, d: i64, k: i64) -> Result<Self> {
        if g < 0 || d < 1 || k < 0 {
            return Err(AlgebraError::Precondition(format!("invalid curve data g={g}, d={d}, k={k}")));
        }
        Ok(CurveParams { g, d, n: d - g, k })
    }

    /// Whether `d >= 2g + 3`, the range in which the secant statements hold.
    pub fn in_range(&self) -> bool {
        self.d >= 2 * self.g + 3
    }
}

fn c(n: i64, k: i64) -> i64 {
    binomial(n, k) as i64
}

/// Degree of the secant variety: `C(d-1, 2) - g`.
pub fn deg_secant(c_: &CurveParams) -> i64 {
    c(c_.d - 1, 2) - c_.g
}

/// Genus `G = (d-2)(d+2g-3)/2` of a codimension-two linear section.
pub fn genus_section(c_: &CurveParams) -> i64 {
    let twice = (c_.d - 2) * (c_.d + 2 * c_.g - 3);
    assert!(twice % 2 == 0, "(d-2)(d+2g-3) is always even");
    twice / 2
}

/// Corner Betti number `C(g+k, k+1)` and its position `(n-2k-1, n+1)`.
pub fn predict_corner(g: i64, k: i64, n: i64) -> (i64, (i64, i64)) {
    (c(g + k, k + 1), (n - 2 * k - 1, n + 1))
}

/// `(alpha_0, alpha_1, alpha_2, alpha_3)` of the secant Hilbert polynomial
/// in the basis `C(m+i-1, i)`.
pub fn hilbert_alphas(c_: &CurveParams) -> [i64; 4] {
    let n = c_.n;
    let d = deg_secant(c_);
    let g = genus_section(c_);
    let a1 = c(n + 2, 2) - (n + 1) - 3 * d - 2 * (1 - g);
    let a0 = -c(n + 2, 2) + 2 * (n + 1) + 2 * d + 1 - g;
    [a0, a1, 1 - g, d]
}

/// `P(m) = D C(m+2,3) + (1-G) C(m+1,2) + alpha_1 m + alpha_0`.
pub fn predict_hilbert_poly(c_: &CurveParams, m: i64) -> i64 {
    let [a0, a1, a2, a3] = hilbert_alphas(c_);
    a3 * binomial_poly(m + 2, 3) + a2 * binomial_poly(m + 1, 2) + a1 * m + a0
}

fn binomial_poly(x: i64, r: u32) -> i64 {
    crate::hilbert::binom_poly(x, r) as i64
}

/// Both evaluations of the number of cubic generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Beta13 {
    /// `C(n+1,3) - 3D + G - 1`, from the Hilbert function of the section.
    pub proof_form: i64,
    /// `C(n+1,3) - (d-2)n - 3g + 1`, the simplified closed form.
    pub display_form: i64,
}

pub fn predict_beta13(c_: &CurveParams) -> Beta13 {
    let n = c_.n;
    Beta13 {
        proof_form: c(n + 1, 3) - 3 * deg_secant(c_) + genus_section(c_) - 1,
        display_form: c(n + 1, 3) - (c_.d - 2) * n - 3 * c_.g + 1,
    }
}

/// `beta_{2,4} = beta_{1,4} + beta_{1,3}(n+1) - C(n+4, n) + P(4)`.
pub fn predict_beta24(c_: &CurveParams, beta14: i64, beta13: i64) -> i64 {
    let n = c_.n;
    beta14 + beta13 * (n + 1) - c(n + 4, n) + predict_hilbert_poly(c_, 4)
}

/// Nonvanishing position `(p, k+1+p)` from an Eagon-Northcott subcomplex,
/// valid when `d >= 2g + 2k + 1 + p`.
pub fn en_strand_bound(c_: &CurveParams, p: i64) -> Result<(i64, i64)> {
    if c_.d < 2 * c_.g + 2 * c_.k + 1 + p {
        return Err(AlgebraError::Precondition(format!(
            "need d >= 2g+2k+1+p = {}",
            2 * c_.g + 2 * c_.k + 1 + p
        )));
    }
    Ok((p, c_.k + 1 + p))
}

/// Nonvanishing position `(s+t-2k-1, s+t-k)` from a Koszul cycle built on a
/// factorization with `h^0(L_1) = s+1`, `h^0(L_2) = t+1`.
pub fn cycle_strand_bound(k: i64, s: i64, t: i64) -> Result<(i64, i64)> {
    if s + 1 < k + 2 {
        return Err(AlgebraError::Precondition(format!("s+1 = {} < k+2 = {}", s + 1, k + 2)));
    }
    if s > t {
        return Err(AlgebraError::Precondition(format!("need s <= t, got s={s}, t={t}")));
    }
    Ok((s + t - 2 * k - 1, s + t - k))
}

/// Largest `p` with `d >= 2g + 2k + 1 + p`.
pub fn max_p(c_: &CurveParams) -> i64 {
    c_.d - 2 * c_.g - 2 * c_.k - 1
}

/// Balanced factorization of a general nonspecial bundle of degree `d` into
/// two general bundles: `s + t = d - 2g`, `s = floor((d-2g)/2)`.
pub fn balanced_factorization(c_: &CurveParams) -> (i64, i64) {
    let total = c_.d - 2 * c_.g;
    (total / 2, total - total / 2)
}

/// Regularity of the secant ideal: 3 for rational curves, 5 otherwise.
pub fn predict_reg_ideal(c_: &CurveParams) -> i64 {
    if c_.g == 0 {
        3
    } else {
        5
    }
}

/// Conjectural regularity of the coordinate ring of `Sigma_k`.
pub fn conjectured_reg(c_: &CurveParams) -> i64 {
    if c_.g == 0 {
        c_.k + 1
    } else {
        2 * c_.k + 2
    }
}

/// Tail entries with the three free values read from the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Tail {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub predicted_n4_n: i64,
    pub predicted_n4_n1: i64,
    pub computed_n4_n: i64,
    pub computed_n4_n1: i64,
}

impl Tail {
    pub fn matches(&self) -> bool {
        self.predicted_n4_n == self.computed_n4_n && self.predicted_n4_n1 == self.computed_n4_n1
    }
}

fn beta_at(t: &BettiTable, i: i64, j: i64) -> i64 {
    if i < 0 || j < 0 {
        0
    } else {
        t.get(i as usize, j as usize) as i64
    }
}

/// Reads `A = beta_{n-3,n-1}`, `B = beta_{n-5,n-1}`, `C = beta_{n-3,n}` and
/// predicts `beta_{n-4,n}` and `beta_{n-4,n-1}`.
pub fn tail_values(t: &BettiTable, c_: &CurveParams) -> Result<Tail> {
    let n = c_.n;
    if !t.is_exact() && (t.max_i() as i64) < n - 3 {
        return Err(AlgebraError::Inconclusive(format!(
            "table stops at column {}, the tail needs column {}",
            t.max_i(),
            n - 3
        )));
    }
    let g = c_.g;
    let a = beta_at(t, n - 3, n - 1);
    let b = beta_at(t, n - 5, n - 1);
    let cc = beta_at(t, n - 3, n);
    Ok(Tail {
        a,
        b,
        c: cc,
        predicted_n4_n: cc + c(g, 2) * (n - 3),
        predicted_n4_n1: a + b + c(g + 1, 2) * c(n, 2) - c(g, 2) * (n - 3) * (n - 1) - genus_section(c_),
        computed_n4_n: beta_at(t, n - 4, n),
        computed_n4_n1: beta_at(t, n - 4, n - 1),
    })
}

/// How a report row is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowKind {
    /// Backed by a theorem; a mismatch fails verification.
    Theorem,
    /// Conjectural; informational only.
    Conjecture,
    /// The simplified closed form of the cubic count; informational only.
    DisplayForm,
}

impl RowKind {
    pub fn tag(&self) -> &'static str {
        match self {
            RowKind::Theorem => "THEOREM",
            RowKind::Conjecture => "CONJECTURE",
            RowKind::DisplayForm => "DISPLAY-FORM",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub predicted: String,
    pub computed: Option<String>,
    /// `None` when there is nothing to compare against.
    pub matches: Option<bool>,
    pub kind: RowKind,
    pub anchor: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PredictionReport {
    pub rows: Vec<ReportRow>,
}

impl PredictionReport {
    pub fn push(&mut self, name: &str, predicted: impl ToString, computed: Option<String>, kind: RowKind, anchor: &str) {
        let predicted = predicted.to_string();
        // "-" marks a value that is reported without a prediction
        let matches = computed.as_ref().filter(|_| predicted != "-").map(|c| *c == predicted);
        self.rows.push(ReportRow {
            name: name.to_string(),
            predicted,
            computed,
            matches,
            kind,
            anchor: anchor.to_string(),
        });
    }

    fn push_result<T: ToString>(&mut self, name: &str, predicted: impl ToString, computed: Result<T>, kind: RowKind, anchor: &str) {
        let computed = match computed {
            Ok(v) => Some(v.to_string()),
            Err(e) => Some(format!("inconclusive: {e}")),
        };
        self.push(name, predicted, computed, kind, anchor);
    }

    pub fn row(&self, name: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// True when no theorem-backed row mismatches.
    pub fn theorem_rows_match(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.kind == RowKind::Theorem)
            .all(|r| r.matches != Some(false))
    }

    pub fn mismatches(&self) -> Vec<&ReportRow> {
        self.rows.iter().filter(|r| r.matches == Some(false)).collect()
    }

    pub fn to_text(&self) -> String {
        let header = ["prediction", "predicted", "computed", "status", "kind", "anchor"];
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.predicted.clone(),
                    r.computed.clone().unwrap_or_else(|| "-".into()),
                    match r.matches {
                        Some(true) => "match".into(),
                        Some(false) => "MISMATCH".into(),
                        None => "-".into(),
                    },
                    r.kind.tag().into(),
                    r.anchor.clone(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.len());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cols: Vec<&str>| {
            let mut s = String::new();
            for (k, (c, w)) in cols.iter().zip(&widths).enumerate() {
                if k > 0 {
                    s.push_str("  ");
                }
                let pad = w.saturating_sub(c.chars().count());
                write!(s, "{c}{}", " ".repeat(pad)).unwrap();
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(header.to_vec());
        for row in &cells {
            line(row.iter().map(|s| s.as_str()).collect());
        }
        out
    }
}

/// Compares every prediction for the secant variety of a curve with the
/// Betti table and Hilbert data computed for its ideal.
pub fn verify_all(c_: &CurveParams, t: &BettiTable, h: &HilbertData) -> PredictionReport {
    let mut r = PredictionReport::default();
    let n = c_.n;
    let k = c_.k;
    let b = |i: i64, j: i64| beta_at(t, i, j);
    if k == 1 {
        let codim = (n - 3).max(0) as usize;
        r.push_result("ACM", true, t.is_acm(codim), RowKind::Theorem, "Sigma is ACM");
        r.push_result(
            "reg I_Sigma",
            predict_reg_ideal(c_),
            t.regularity().map(|v| v + 1),
            RowKind::Theorem,
            "reg I_Sigma is 3 if C is rational and 5 otherwise",
        );
        r.push_result(
            "reg S_Sigma",
            predict_reg_ideal(c_) - 1,
            t.regularity(),
            RowKind::Theorem,
            "reg S_Sigma = reg I_Sigma - 1",
        );
        let sec = h.surface_section;
        r.push(
            "deg Sigma",
            deg_secant(c_),
            sec.map(|s| s.0.to_string()).or(Some(h.degree.to_string())),
            RowKind::Theorem,
            "deg Sigma = C(d-1,2) - g",
        );
        r.push(
            "G",
            genus_section(c_),
            sec.map(|s| s.1.to_string()),
            RowKind::Theorem,
            "genus of the codim-2 section G = (d-2)(d+2g-3)/2",
        );
        for m in 1..=4 {
            r.push(
                &format!("P({m})"),
                predict_hilbert_poly(c_, m),
                Some(h.polynomial(m).to_string()),
                RowKind::Theorem,
                "Hilbert polynomial D C(m+2,3) + (1-G) C(m+1,2) + a1 m + a0",
            );
        }
        r.push(
            "HF = HP for m >= 1",
            true,
            Some((h.stabilization <= 1).to_string()),
            RowKind::Theorem,
            "Hilbert polynomial agrees with the Hilbert function for m >= 1",
        );
        let b13 = predict_beta13(c_);
        r.push(
            "beta_{1,3}",
            b13.proof_form,
            Some(b(1, 3).to_string()),
            RowKind::Theorem,
            "beta_{1,3} = C(n+1,3) - 3D + G - 1",
        );
        r.push(
            "beta_{1,3} display form",
            b13.display_form,
            Some(b(1, 3).to_string()),
            RowKind::DisplayForm,
            "beta_{1,3} = C(n+1,3) - (d-2)n - 3g + 1 (simplified form)",
        );
        r.push(
            "beta_{2,4}",
            predict_beta24(c_, b(1, 4), b(1, 3)),
            Some(b(2, 4).to_string()),
            RowKind::Theorem,
            "beta_{2,4} = beta_{1,4} + beta_{1,3}(n+1) - C(n+4,n) + P(4)",
        );
        let (corner, (ci, cj)) = predict_corner(c_.g, 1, n);
        r.push(
            &format!("corner beta_{{{ci},{cj}}}"),
            corner,
            Some(b(ci, cj).to_string()),
            RowKind::Theorem,
            "beta_{n-3,n+1} = C(g+1,2)",
        );
        match tail_values(t, c_) {
            Ok(tail) => {
                let note = format!("A={} B={} C={}", tail.a, tail.b, tail.c);
                r.push(
                    &format!("tail beta_{{{},{}}} ({note})", n - 4, n),
                    tail.predicted_n4_n,
                    Some(tail.computed_n4_n.to_string()),
                    RowKind::Theorem,
                    "beta_{n-4,n} = C + C(g,2)(n-3)",
                );
                r.push(
                    &format!("tail beta_{{{},{}}} ({note})", n - 4, n - 1),
                    tail.predicted_n4_n1,
                    Some(tail.computed_n4_n1.to_string()),
                    RowKind::Theorem,
                    "beta_{n-4,n-1} = A + B + C(g+1,2)C(n,2) - C(g,2)(n-3)(n-1) - G",
                );
            }
            Err(e) => r.push("tail", "-", Some(format!("inconclusive: {e}")), RowKind::Theorem, "tail of the Betti diagram"),
        }
    } else {
        let (corner, (ci, cj)) = predict_corner(c_.g, k, n);
        r.push(
            &format!("corner beta_{{{ci},{cj}}}"),
            corner,
            Some(b(ci, cj).to_string()),
            RowKind::Conjecture,
            "beta_{n-2k-1,n+1} = C(g+k,k+1)",
        );
    }

    // Strand bounds from Eagon-Northcott subcomplexes and Koszul cycles.
    let p = max_p(c_);
    if p >= 0 {
        if let Ok((i, j)) = en_strand_bound(c_, p) {
            r.push(
                &format!("beta_{{{i},{j}}} != 0 (p={p})"),
                true,
                Some((b(i, j) > 0).to_string()),
                RowKind::Theorem,
                "d >= 2g+2k+1+p implies beta_{p,k+1+p} != 0",
            );
        }
        let (s, tt) = balanced_factorization(c_);
        if let Ok((i, j)) = cycle_strand_bound(k, s, tt) {
            r.push(
                &format!("beta_{{{i},{j}}} != 0 (s={s}, t={tt})"),
                true,
                Some((b(i, j) > 0).to_string()),
                RowKind::Theorem,
                "beta_{s+t-2k-1,s+t-k}(Sigma_k) != 0",
            );
        }
    }

    // Conjectural rows.
    if k != 1 {
        r.push_result("ACM", true, t.is_acm((n - 2 * k - 1).max(0) as usize), RowKind::Conjecture, "Sigma_k is ACM");
    }
    r.push_result(
        "reg S_Sigma_k",
        conjectured_reg(c_),
        t.regularity(),
        RowKind::Conjecture,
        "regularity 2k+2, or k+1 when g = 0 (compared with reg S)",
    );
    if p >= 0 {
        r.push_result(
            &format!("N_{{{},{p}}}", k + 2),
            true,
            t.n_dp_check((k + 2) as usize, p as usize),
            RowKind::Conjecture,
            "Sigma_k satisfies N_{k+2,p}",
        );
        r.push_result(
            &format!("N_{{{},{}}}", k + 2, p + 1),
            false,
            t.n_dp_check((k + 2) as usize, (p + 1) as usize),
            RowKind::Conjecture,
            "the degree k+2 strand stops at column p",
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cp(g: i64, d: i64) -> CurveParams {
        CurveParams::new(g, d, 1).unwrap()
    }

    #[test]
    fn genus_two_degree_nine() {
        let c_ = cp(2, 9);
        assert_eq!(c_.n, 7);
        assert_eq!(deg_secant(&c_), 26);
        assert_eq!(genus_section(&c_), 35);
        assert_eq!(hilbert_alphas(&c_), [-2, 18, -34, 26]);
        let p: Vec<i64> = (1..=6).map(|m| predict_hilbert_poly(&c_, m)).collect();
        assert_eq!(p, vec![8, 36, 108, 250, 488, 848]);
        assert_eq!(predict_beta13(&c_), Beta13 { proof_form: 12, display_form: 2 });
        assert_eq!(predict_beta24(&c_, 0, 12), 16);
        assert_eq!(predict_corner(2, 1, 7), (3, (4, 8)));
        assert_eq!(en_strand_bound(&c_, 2).unwrap(), (2, 4));
        assert_eq!(predict_reg_ideal(&c_), 5);
    }

    #[test]
    fn genus_two_degree_twelve() {
        let c_ = cp(2, 12);
        assert_eq!(c_.n, 10);
        assert_eq!(deg_secant(&c_), 53);
        assert_eq!(genus_section(&c_), 65);
        assert_eq!(predict_hilbert_poly(&c_, 4), 514);
        assert_eq!(predict_beta13(&c_), Beta13 { proof_form: 70, display_form: 60 });
        assert_eq!(predict_beta24(&c_, 0, 70), 283);
        assert_eq!(predict_corner(2, 1, 10), (3, (7, 11)));
        assert_eq!(predict_corner(2, 2, 10), (4, (5, 11)));
    }

    #[test]
    fn rational_cases() {
        assert_eq!(deg_secant(&cp(0, 4)), 3);
        assert_eq!(deg_secant(&cp(0, 3)), 1);
        assert_eq!(genus_section(&cp(0, 4)), 1);
        assert_eq!(genus_section(&cp(0, 5)), 3);
        assert_eq!(predict_beta13(&cp(0, 4)).proof_form, 1);
        assert_eq!(predict_beta24(&cp(0, 4), 0, 1), 0);
        for k in 0..5 {
            assert_eq!(predict_corner(0, k, 10).0, 0);
        }
        assert_eq!(cycle_strand_bound(1, 2, 3).unwrap(), (2, 4));
        assert!(cycle_strand_bound(2, 2, 3).is_err());
    }

    #[test]
    fn corner_consistency_across_k() {
        for g in 0..10 {
            assert_eq!(predict_corner(g, 1, 0).0, c(g + 1, 2));
        }
    }

    #[test]
    fn tail_on_genus_two_tables() {
        // The two reference secant diagrams.
        let p7 = BettiTable::from_entries(8, [(0, 0, 1), (1, 3, 12), (2, 4, 16), (3, 6, 4), (3, 7, 4), (4, 8, 3)]).unwrap();
        let tail = tail_values(&p7, &cp(2, 9)).unwrap();
        assert_eq!((tail.a, tail.b, tail.c), (0, 0, 0));
        assert_eq!((tail.predicted_n4_n, tail.predicted_n4_n1), (4, 4));
        assert!(tail.matches());
        let p10 = BettiTable::from_entries(
            11,
            [(0, 0, 1), (1, 3, 70), (2, 4, 283), (3, 5, 483), (4, 6, 413), (5, 7, 155), (6, 9, 7), (6, 10, 7), (7, 11, 3)],
        )
        .unwrap();
        let tail = tail_values(&p10, &cp(2, 12)).unwrap();
        assert_eq!((tail.predicted_n4_n, tail.predicted_n4_n1), (7, 7));
        assert!(tail.matches());
    }

    /// The alternating-sum identity at m = 4, with the ideal empty below
    /// degree 3 and the Hilbert function equal to P(4), rearranges to the
    /// beta_{2,4} formula.
    #[test]
    fn beta24_is_the_alternating_sum_at_four() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = rng.gen_range(0..6);
            let d = rng.gen_range(2 * g + 3..2 * g + 12);
            let c_ = cp(g, d);
            let n = c_.n;
            let b13 = rng.gen_range(0..200);
            let b14 = rng.gen_range(0..20);
            let b24 = predict_beta24(&c_, b14, b13);
            // HF(4) = C(n+4,n) - b13 C(n+1,n) - b14 + b24
            let hf4 = c(n + 4, n) - b13 * (n + 1) - b14 + b24;
            assert_eq!(hf4, predict_hilbert_poly(&c_, 4));
        }
    }

    #[test]
    fn hilbert_poly_matches_low_degrees() {
        for g in 0..6 {
            for d in 2 * g + 3..2 * g + 10 {
                let c_ = cp(g, d);
                assert_eq!(predict_hilbert_poly(&c_, 1), c_.n + 1);
                assert_eq!(predict_hilbert_poly(&c_, 2), c(c_.n + 2, 2));
            }
        }
    }
}
