//! The sweep report and its emitters: JSON (round-trippable), CSV, and a
//! self-contained SVG histogram with a Gaussian overlay.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;

use serde::{Deserialize, Serialize};

use super::stats::BinomialModel;
use super::HarnessError;

/// Echo of the configuration that produced a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub curve: [i64; 5],
    pub bad_primes: Vec<u64>,
    pub p_anchor: u64,
    pub l_anchor: u64,
    pub moments: Vec<u32>,
    pub seed: u64,
    pub shards: usize,
    #[serde(default)]
    pub out_json: Option<String>,
    #[serde(default)]
    pub out_csv: Option<String>,
    #[serde(default)]
    pub out_svg: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub k: u32,
    pub empirical: f64,
    pub gaussian: f64,
    pub abs_delta: f64,
}

/// Parameters of the binomial reference model, echoed into the report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelEcho {
    pub n: u32,
    pub p_success: f64,
    pub mean: f64,
    pub sd: f64,
}

/// Full result of one `(P, L)` sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ConfigEcho,
    /// Number of good primes in `[P, 2P]` (the histogram total).
    pub population: u64,
    /// Number of good odd primes in `[L, 2L]`.
    pub n_primes_ell: u32,
    pub mu: f64,
    pub sigma: f64,
    /// `N_e` value -> number of primes attaining it.
    pub histogram: BTreeMap<u32, u64>,
    pub moments: Vec<MomentRow>,
    pub model: ModelEcho,
    pub elapsed_ms: u64,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<ExperimentReport, HarnessError> {
        serde_json::from_str(s).map_err(|e| HarnessError::BadConfig(format!("bad report JSON: {e}")))
    }

    /// CSV with one row per histogram bucket (`ne,count,model_count`)
    /// followed by one row per moment (`k,empirical,gaussian,abs_delta`).
    pub fn to_csv(&self, model: &BinomialModel) -> String {
        let mut s = String::new();
        s.push_str("ne,count,model_count\n");
        for ne in 0..=self.n_primes_ell {
            let count = self.histogram.get(&ne).copied().unwrap_or(0);
            let expect = self.population as f64 * model.pmf_f64(ne);
            let _ = writeln!(s, "{ne},{count},{expect}");
        }
        s.push_str("k,empirical,gaussian,abs_delta\n");
        for m in &self.moments {
            let _ = writeln!(s, "{},{},{},{}", m.k, m.empirical, m.gaussian, m.abs_delta);
        }
        s
    }

    /// Fixed 800x600 bar chart of the histogram with the Gaussian density
    /// `population * phi((x - mu)/sigma)/sigma` overlaid as a polyline.
    pub fn to_svg(&self) -> String {
        const W: f64 = 800.0;
        const H: f64 = 600.0;
        const ML: f64 = 60.0; // left margin
        const MR: f64 = 20.0;
        const MT: f64 = 30.0;
        const MB: f64 = 50.0;
        let plot_w = W - ML - MR;
        let plot_h = H - MT - MB;
        let buckets = self.n_primes_ell + 1;
        let bar_w = plot_w / buckets as f64;

        let gauss = |x: f64| -> f64 {
            let z = (x - self.mu) / self.sigma;
            self.population as f64 * (-0.5 * z * z).exp()
                / (self.sigma * (2.0 * std::f64::consts::PI).sqrt())
        };
        let max_count = self
            .histogram
            .values()
            .copied()
            .max()
            .unwrap_or(0)
            .max(gauss(self.mu).ceil() as u64)
            .max(1);
        let y_of = |v: f64| MT + plot_h * (1.0 - v / max_count as f64);

        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
        );
        let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"18\" font-family=\"monospace\" font-size=\"13\">N_e distribution: P={} L={} (population {})</text>",
            ML,
            self.config.p_anchor,
            self.config.l_anchor,
            self.population
        );
        // axes
        let _ = writeln!(
            s,
            "<line x1=\"{ML}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
            H - MB,
            W - MR,
            H - MB
        );
        let _ = writeln!(s, "<line x1=\"{ML}\" y1=\"{MT}\" x2=\"{ML}\" y2=\"{}\" stroke=\"black\"/>", H - MB);
        // bars
        for ne in 0..buckets {
            let count = self.histogram.get(&ne).copied().unwrap_or(0);
            if count == 0 {
                continue;
            }
            let x = ML + ne as f64 * bar_w;
            let y = y_of(count as f64);
            let _ = writeln!(
                s,
                "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"steelblue\"/>",
                x,
                y,
                (bar_w * 0.9).max(0.5),
                (H - MB) - y
            );
        }
        // Gaussian overlay
        let mut pts = String::new();
        for i in 0..=256 {
            let ne = buckets as f64 * i as f64 / 256.0;
            let x = ML + ne * bar_w;
            let y = y_of(gauss(ne - 0.5).min(max_count as f64));
            let _ = write!(pts, "{x:.2},{y:.2} ");
        }
        let _ = writeln!(s, "<polyline points=\"{}\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>", pts.trim());
        // x tick labels every few buckets
        let step = (buckets / 10).max(1);
        for ne in (0..buckets).step_by(step as usize) {
            let x = ML + (ne as f64 + 0.5) * bar_w;
            let _ = writeln!(
                s,
                "<text x=\"{:.1}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                x,
                H - MB + 18.0,
                ne
            );
        }
        let _ = writeln!(
            s,
            "<text x=\"8\" y=\"{MT}\" font-family=\"monospace\" font-size=\"11\">{max_count}</text>"
        );
        s.push_str("</svg>\n");
        s
    }

    pub fn write_json(&self, path: &str) -> Result<(), HarnessError> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json().as_bytes())?;
        Ok(())
    }

    pub fn write_csv(&self, path: &str, model: &BinomialModel) -> Result<(), HarnessError> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_csv(model).as_bytes())?;
        Ok(())
    }

    pub fn write_svg(&self, path: &str) -> Result<(), HarnessError> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_svg().as_bytes())?;
        Ok(())
    }
}
