use std::io::Write;

use crate::error::{Error, Result};

pub const CSV_HEADER: &str =
    "experiment,n,epsilon,trial,seed,l1_size,l1_excess,core_size,d2,d3,w4plus,kernel_v,kernel_e,cubic_m,tw,rw,runtime_ms";

/// Measurements of one trial. Optional fields are written as empty CSV cells.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub experiment: String,
    pub n: usize,
    pub epsilon: f64,
    pub trial: usize,
    pub seed: u64,
    /// Order of the largest component.
    pub l1_size: usize,
    /// Edges minus vertices of the largest component.
    pub l1_excess: i64,
    /// Order of the 2-core of the largest component.
    pub core_size: usize,
    pub d2: usize,
    pub d3: usize,
    /// `sum_{i >= 4} i D_i` over the core.
    pub w4plus: usize,
    pub kernel_v: usize,
    pub kernel_e: usize,
    /// Order of the extracted cubic configuration.
    pub cubic_m: Option<usize>,
    /// Exact widths of the largest component, when small enough.
    pub tw: Option<usize>,
    pub rw: Option<usize>,
    pub runtime_ms: Option<u64>,
}

/// `%.17g`: 17 significant digits, trailing zeros dropped.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-5..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa), exp.abs())
    } else {
        trim(&format!("{:.*}", (16 - exp) as usize, x))
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl TrialRecord {
    fn fields(&self) -> [String; 17] {
        [
            self.experiment.clone(),
            self.n.to_string(),
            format_float(self.epsilon),
            self.trial.to_string(),
            self.seed.to_string(),
            self.l1_size.to_string(),
            self.l1_excess.to_string(),
            self.core_size.to_string(),
            self.d2.to_string(),
            self.d3.to_string(),
            self.w4plus.to_string(),
            self.kernel_v.to_string(),
            self.kernel_e.to_string(),
            opt(self.cubic_m),
            opt(self.tw),
            opt(self.rw),
            opt(self.runtime_ms),
        ]
    }

    fn from_fields(r: &csv::StringRecord) -> Result<Self> {
        let bad = |what: &str| Error::Validation(format!("bad {what} field in {r:?}"));
        let get = |i: usize| r.get(i).ok_or_else(|| bad("missing"));
        macro_rules! num {
            ($i:expr, $name:expr) => {
                get($i)?.parse().map_err(|_| bad($name))?
            };
        }
        macro_rules! optnum {
            ($i:expr, $name:expr) => {{
                let s = get($i)?;
                if s.is_empty() {
                    None
                } else {
                    Some(s.parse().map_err(|_| bad($name))?)
                }
            }};
        }
        Ok(TrialRecord {
            experiment: get(0)?.to_string(),
            n: num!(1, "n"),
            epsilon: num!(2, "epsilon"),
            trial: num!(3, "trial"),
            seed: num!(4, "seed"),
            l1_size: num!(5, "l1_size"),
            l1_excess: num!(6, "l1_excess"),
            core_size: num!(7, "core_size"),
            d2: num!(8, "d2"),
            d3: num!(9, "d3"),
            w4plus: num!(10, "w4plus"),
            kernel_v: num!(11, "kernel_v"),
            kernel_e: num!(12, "kernel_e"),
            cubic_m: optnum!(13, "cubic_m"),
            tw: optnum!(14, "tw"),
            rw: optnum!(15, "rw"),
            runtime_ms: optnum!(16, "runtime_ms"),
        })
    }
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Validation(format!("{other:?}")),
    }
}

pub fn write_csv<W: Write>(records: &[TrialRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER.split(',')).map_err(csv_error)?;
    for r in records {
        w.write_record(r.fields()).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(text: &str) -> Result<Vec<TrialRecord>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let header = rd.headers().map_err(csv_error)?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(Error::Validation(format!("unexpected CSV header {header:?}")));
    }
    rd.records().map(|r| TrialRecord::from_fields(&r.map_err(csv_error)?)).collect()
}
