//! Verdict reporting in human and machine form.

use relhom::relhom::CheckReport;
use relhom::verdict::{Answer, Bounds, DimVerdict, IntVerdict, Record, Verdict, Witness};

pub struct Output {
    machine: bool,
    lines: Vec<String>,
    unknowns: usize,
    failures: usize,
}

impl Output {
    pub fn new(machine: bool) -> Self {
        Output { machine, lines: Vec::new(), unknowns: 0, failures: 0 }
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    /// 0 when every verdict was decisive, 2 with unknowns, 1 on failed checks.
    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 {
            1
        } else if self.unknowns > 0 {
            2
        } else {
            0
        }
    }

    fn push(&mut self, line: String) {
        self.lines.push(line);
    }

    /// Shown in both modes.
    pub fn data(&mut self, line: String) {
        self.push(line);
    }

    /// Shown in human mode only.
    pub fn info(&mut self, line: String) {
        if !self.machine {
            self.push(line);
        }
    }

    pub fn caveat(&mut self, text: &str) {
        self.info(format!("  caveat: {text}"));
    }

    pub fn verdict(&mut self, question: &str, v: &Verdict) {
        if v.answer == Answer::Unknown {
            self.unknowns += 1;
        }
        if self.machine {
            self.push(v.record(question));
            return;
        }
        self.push(format!("{question}: {}", v.answer));
        self.undecided(v.answer == Answer::Unknown, &v.bounded.to_string(), v.bounds);
        self.witness(&v.witness);
    }

    pub fn dim(&mut self, question: &str, v: &DimVerdict) {
        if !v.certified {
            self.unknowns += 1;
        }
        if self.machine {
            self.push(v.record(question));
            return;
        }
        let value = if v.certified { v.value.to_string() } else { "unknown".into() };
        self.push(format!("{question}: {value}"));
        self.undecided(!v.certified, &v.value.to_string(), v.bounds);
        self.witness(&v.witness);
        if let Some(c) = &v.caveat {
            self.caveat(c);
        }
    }

    pub fn int(&mut self, question: &str, v: &IntVerdict) {
        if !v.certified {
            self.unknowns += 1;
        }
        if self.machine {
            self.push(v.record(question));
            return;
        }
        let value = if v.certified { v.value.to_string() } else { "unknown".into() };
        self.push(format!("{question}: {value}"));
        self.undecided(!v.certified, &v.value.to_string(), v.bounds);
        self.witness(&v.witness);
    }

    /// A theorem check: violations fail the run, advisory passes count as
    /// unknown.
    pub fn check(&mut self, question: &str, r: &CheckReport, bounds: Bounds) {
        let mut v = if !r.passed() {
            self.failures += 1;
            Verdict::no(true, bounds, Witness::Note(r.violations[0].clone()))
        } else {
            Verdict::yes(r.hard && r.checked > 0, bounds)
        };
        if v.answer == Answer::Unknown {
            self.unknowns += 1;
        }
        if self.machine {
            if v.witness.is_none() && !r.hard {
                v = v.with_witness(Witness::Note("advisory".into()));
            }
            self.push(format!("{} checked={} undecided={}", v.record(question), r.checked, r.undecided));
            return;
        }
        let status = match v.answer {
            Answer::Yes => "pass",
            Answer::No => "FAIL",
            Answer::Unknown => "pass (advisory)",
        };
        self.push(format!("{question}: {status} ({} checked, {} undecided)", r.checked, r.undecided));
        for violation in &r.violations {
            self.push(format!("  violation: {violation}"));
        }
        for note in &r.notes {
            self.push(format!("  note: {note}"));
        }
        if !r.hard {
            self.caveat("the inventory is not certified complete, so a pass is evidence rather than proof");
        }
    }

    fn undecided(&mut self, unknown: bool, bounded: &str, bounds: Bounds) {
        if unknown {
            self.push(format!("  within bounds {bounds}: {bounded}"));
        }
    }

    fn witness(&mut self, w: &Option<Witness>) {
        if let Some(w) = w {
            self.push(format!("  witness: {}", w.inline()));
        }
    }
}
