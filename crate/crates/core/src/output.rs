//! CSV emission. Comma separated, LF line endings, double-quote quoting.
//! Byte strings are rendered with printable ASCII kept and every other byte
//! (and the backslash) escaped as `\xHH`.

use std::io::{self, Write};

use crate::bounds::BoundReport;
use crate::lowerbound::LowerBoundInstance;
use crate::mus::MusSet;
use crate::report::VerificationReport;
use crate::sensitivity::SensitivityRecord;
use crate::text::Text;

pub fn escape_bytes(b: &[u8]) -> String {
    let mut s = String::with_capacity(b.len());
    for &c in b {
        if (0x20..0x7f).contains(&c) && c != b'\\' {
            s.push(c as char);
        } else {
            s.push_str(&format!("\\x{c:02x}"));
        }
    }
    s
}

/// Double-quoted CSV field with embedded quotes doubled.
pub fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Plain field, quoted only when it would otherwise break the row.
pub fn field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        quoted(s)
    } else {
        s.to_string()
    }
}

pub fn write_mus_csv<W: Write>(
    w: &mut W,
    t: &Text,
    ms: &MusSet,
    show_strings: bool,
) -> io::Result<()> {
    write_intervals_csv(w, t, ms.intervals(), show_strings)
}

pub fn write_intervals_csv<W: Write>(
    w: &mut W,
    t: &Text,
    intervals: &[crate::mus::MusInterval],
    show_strings: bool,
) -> io::Result<()> {
    if show_strings {
        writeln!(w, "start,end,length,substring")?;
    } else {
        writeln!(w, "start,end,length")?;
    }
    for m in intervals {
        write!(w, "{},{},{}", m.start, m.end, m.len())?;
        if show_strings {
            write!(w, ",{}", quoted(&escape_bytes(m.content(t))))?;
        }
        writeln!(w)?;
    }
    Ok(())
}

pub fn write_stats_csv<W: Write>(w: &mut W, b: &BoundReport) -> io::Result<()> {
    writeln!(w, "n,mus_count,rle,max_stab_pos,max_stab_count,sqrt_bound")?;
    writeln!(
        w,
        "{},{},{},{},{},{:.3}",
        b.n, b.mus_count, b.rle_size, b.max_stab_pos, b.max_stab_count, b.sqrt_bound
    )
}

pub fn write_family_csv<W: Write>(w: &mut W, inst: &LowerBoundInstance) -> io::Result<()> {
    writeln!(w, "i,start,end,string")?;
    for f in &inst.family {
        writeln!(
            w,
            "{},{},{},{}",
            f.i,
            f.interval.start,
            f.interval.end,
            quoted(&escape_bytes(&f.content))
        )?;
    }
    Ok(())
}

pub fn write_report_csv<W: Write>(w: &mut W, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(w, "suite,texts,checks,violations")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{}",
            field(&r.suite),
            r.texts,
            r.checks,
            r.violations.len()
        )?;
    }
    Ok(())
}

/// One violation per line: `suite,text,witness`.
pub fn write_violations<W: Write>(w: &mut W, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        for v in &r.violations {
            writeln!(
                w,
                "{},{},{}",
                field(&r.suite),
                quoted(&escape_bytes(&v.text)),
                quoted(&v.witness)
            )?;
        }
    }
    Ok(())
}

pub const SENSITIVITY_HEADER: &str =
    "kind,pos,symbol,pre_count,post_count,additive,multiplicative,new_at_edit,new_elsewhere";

pub fn write_sensitivity_row<W: Write>(w: &mut W, r: &SensitivityRecord) -> io::Result<()> {
    let symbol = r
        .edit
        .symbol
        .map(|c| escape_bytes(&[c]))
        .unwrap_or_default();
    writeln!(
        w,
        "{},{},{},{},{},{},{:.6},{},{}",
        r.edit.kind.name(),
        r.edit.pos,
        field(&symbol),
        r.pre_count,
        r.post_count,
        r.additive,
        r.multiplicative,
        r.new_at_edit,
        r.new_elsewhere
    )
}
