//! Output shaping for the three formats. Text favors one labeled line per
//! fact; JSON uses a fixed key order with raw decimal integers, except
//! matrix entries, which are quoted strings so that consumers reading JSON
//! numbers as doubles cannot silently lose precision; CSV quotes a field
//! only when it contains a comma, quote, or newline.

use algper::catalog::GenusSummary;
use algper::dold::{
    APSet, DoldSequence, PeriodBoundKind, PeriodBoundReport, RealizabilityViolation, RootSpectrum,
};
use algper::genus::GenusWitness;
use algper::symplectic::{FormLayout, IntMatrix, SymplecticForm, VerificationReport};

pub fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn layout_name(layout: FormLayout) -> &'static str {
    match layout {
        FormLayout::Paired => "paired",
        FormLayout::Split => "split",
    }
}

pub fn kind_name(kind: PeriodBoundKind) -> &'static str {
    match kind {
        PeriodBoundKind::OddExact => "odd-exact",
        PeriodBoundKind::EvenPair => "even-pair",
    }
}

fn set_json(set: &APSet) -> String {
    let inner: Vec<String> = set.iter().map(|n| n.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn spectrum_json(spectrum: &RootSpectrum) -> String {
    let inner: Vec<String> = spectrum.iter().map(|(k, r)| format!("[{k},{r}]")).collect();
    format!("[{}]", inner.join(","))
}

fn dold_json(dold: &DoldSequence) -> String {
    let inner: Vec<String> = dold.iter().map(|(n, a)| format!("[{n},{a}]")).collect();
    format!("[{}]", inner.join(","))
}

fn matrix_json(matrix: &IntMatrix) -> String {
    let rows: Vec<String> = (0..matrix.rows())
        .map(|i| {
            let cells: Vec<String> = matrix.row(i).iter().map(|v| format!("\"{v}\"")).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Everything `convert` reports about one sequence/spectrum pair.
pub struct Conversion {
    pub spectrum: RootSpectrum,
    pub dold: DoldSequence,
    pub violations: Vec<RealizabilityViolation>,
    pub ap: APSet,
    pub mper: APSet,
}

impl Conversion {
    /// Genus is reported only when defined: non-negative multiplicities of
    /// even total weight.
    pub fn genus(&self) -> Option<u64> {
        self.violations.is_empty().then(|| self.spectrum.genus())
    }
}

pub fn convert_text(c: &Conversion) -> String {
    let mut out = String::new();
    out.push_str(&format!("spectrum:   {}\n", c.spectrum));
    out.push_str(&format!("dold:       {}\n", c.dold));
    match c.genus() {
        Some(g) => out.push_str(&format!("genus:      {g}\n")),
        None => out.push_str("genus:      n/a\n"),
    }
    if c.violations.is_empty() {
        out.push_str("realizable: yes\n");
    } else {
        out.push_str("realizable: no\n");
        for v in &c.violations {
            out.push_str(&format!("  - {v}\n"));
        }
    }
    out.push_str(&format!("ap:         {}\n", c.ap));
    out.push_str(&format!("mper:       {}\n", c.mper));
    out
}

pub fn convert_json(c: &Conversion) -> String {
    let genus = match c.genus() {
        Some(g) => g.to_string(),
        None => "null".to_string(),
    };
    let violations: Vec<String> = c
        .violations
        .iter()
        .map(|v| json_string(&v.to_string()))
        .collect();
    format!(
        "{{\"spectrum\":{},\"dold\":{},\"genus\":{},\"realizable\":{},\"violations\":[{}],\"ap\":{},\"mper\":{}}}\n",
        spectrum_json(&c.spectrum),
        dold_json(&c.dold),
        genus,
        c.violations.is_empty(),
        violations.join(","),
        set_json(&c.ap),
        set_json(&c.mper),
    )
}

pub fn convert_csv(c: &Conversion) -> String {
    let genus = c.genus().map_or(String::new(), |g| g.to_string());
    format!(
        "spectrum,dold,genus,realizable,ap,mper\n{},{},{},{},{},{}\n",
        csv_field(&c.spectrum.to_string()),
        csv_field(&c.dold.to_string()),
        genus,
        c.violations.is_empty(),
        csv_field(&c.ap.to_string()),
        csv_field(&c.mper.to_string()),
    )
}

pub fn witness_text(w: &GenusWitness, ap: &APSet, mper: &APSet) -> String {
    format!(
        "minimal genus: {}\nspectrum:      {}\ndold:          {}\nap:            {}\nmper:          {}\n",
        w.genus,
        w.spectrum,
        w.dold.sparse_string(),
        ap,
        mper,
    )
}

pub fn realize_text(
    spectrum: &RootSpectrum,
    matrix: &IntMatrix,
    form: &SymplecticForm,
    report: &VerificationReport,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("spectrum: {spectrum}\n"));
    out.push_str(&format!(
        "genus:    {} ({} layout, {}x{})\n",
        form.genus(),
        layout_name(form.layout()),
        form.size(),
        form.size(),
    ));
    out.push_str("matrix:\n");
    out.push_str(&matrix.grid_string());
    out.push_str(&format!(
        "verification: symplectic {}, char-poly {}, lefschetz {} (horizon {})\n",
        yes_no(report.symplectic),
        yes_no(report.char_poly_matches),
        yes_no(report.lefschetz_matches),
        report.horizon,
    ));
    out
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "NO"
    }
}

pub fn realize_json(
    spectrum: &RootSpectrum,
    matrix: &IntMatrix,
    form: &SymplecticForm,
    report: &VerificationReport,
) -> String {
    format!(
        "{{\"spectrum\":{},\"genus\":{},\"layout\":{},\"matrix\":{},\"verification\":{{\"symplectic\":{},\"char_poly\":{},\"lefschetz\":{},\"horizon\":{}}}}}\n",
        spectrum_json(spectrum),
        form.genus(),
        json_string(layout_name(form.layout())),
        matrix_json(matrix),
        report.symplectic,
        report.char_poly_matches,
        report.lefschetz_matches,
        report.horizon,
    )
}

pub fn bounds_text(report: &PeriodBoundReport) -> String {
    let mut out = String::from("period kind bound\n");
    for b in report.iter() {
        out.push_str(&format!("{} {} {}\n", b.period, kind_name(b.kind), b.bound));
    }
    out
}

pub fn bounds_json(report: &PeriodBoundReport) -> String {
    let rows: Vec<String> = report
        .iter()
        .map(|b| {
            format!(
                "{{\"period\":{},\"kind\":{},\"bound\":{}}}",
                b.period,
                json_string(kind_name(b.kind)),
                b.bound,
            )
        })
        .collect();
    format!("{{\"bounds\":[{}]}}\n", rows.join(","))
}

pub const SUMMARY_TEXT_HEADER: &str = "genus spectra distinct_ap distinct_mper\n";
pub const SUMMARY_CSV_HEADER: &str = "genus,spectra,distinct_ap,distinct_mper\n";

pub fn summary_text_row(s: &GenusSummary) -> String {
    format!(
        "{} {} {} {}\n",
        s.genus, s.spectra, s.distinct_ap, s.distinct_mper
    )
}

pub fn summary_csv_row(s: &GenusSummary) -> String {
    format!(
        "{},{},{},{}\n",
        s.genus, s.spectra, s.distinct_ap, s.distinct_mper
    )
}

pub fn summary_json_line(s: &GenusSummary) -> String {
    format!(
        "{{\"genus\":{},\"spectra\":{},\"distinct_ap\":{},\"distinct_mper\":{}}}\n",
        s.genus, s.spectra, s.distinct_ap, s.distinct_mper
    )
}

pub const CATALOG_TEXT_HEADER: &str = "genus spectrum dold ap mper\n";

/// Space-separated text row; every field is itself free of spaces.
pub fn catalog_text_row(record: &algper::catalog::CatalogRecord) -> String {
    format!(
        "{} {} {} {} {}\n",
        record.genus,
        record.spectrum,
        record.dold.dense_string(),
        record.ap,
        record.mper,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_strings_escape_specials() {
        assert_eq!(json_string("plain"), "\"plain\"");
        assert_eq!(json_string("a\"b\\c"), "\"a\\\"b\\\\c\"");
        assert_eq!(json_string("line\nbreak"), "\"line\\nbreak\"");
    }

    #[test]
    fn csv_fields_quote_only_when_needed() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("{1,2}"), "\"{1,2}\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn conversion_renders_all_fields() {
        let spectrum = RootSpectrum::from_multiset(&[3, 4]);
        let dold = spectrum.to_dold();
        let c = Conversion {
            violations: spectrum.violations(),
            ap: dold.algebraic_periods(false),
            mper: dold.algebraic_periods(true),
            spectrum,
            dold,
        };
        let text = convert_text(&c);
        assert!(text.contains("spectrum:   {3,4}"));
        assert!(text.contains("dold:       (3,1,-1,-1)"));
        assert!(text.contains("genus:      2"));
        assert!(text.contains("realizable: yes"));
        let json = convert_json(&c);
        assert_eq!(
            json,
            "{\"spectrum\":[[3,1],[4,1]],\"dold\":[[1,3],[2,1],[3,-1],[4,-1]],\"genus\":2,\"realizable\":true,\"violations\":[],\"ap\":[1,2,3,4],\"mper\":[1,3]}\n"
        );
    }

    #[test]
    fn unrealizable_conversion_has_no_genus() {
        let spectrum = RootSpectrum::from_multiset(&[1]);
        let dold = spectrum.to_dold();
        let c = Conversion {
            violations: spectrum.violations(),
            ap: dold.algebraic_periods(false),
            mper: dold.algebraic_periods(true),
            spectrum,
            dold,
        };
        assert_eq!(c.genus(), None);
        assert!(convert_text(&c).contains("genus:      n/a"));
        assert!(convert_json(&c).contains("\"genus\":null"));
        assert!(convert_json(&c).contains("r_1 = 1 must be even"));
    }
}
