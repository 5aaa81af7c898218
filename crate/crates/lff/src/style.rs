//! Optional ANSI color, controlled by `LFF_COLOR`.

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// Color is on when `LFF_COLOR` is `1`, `true`, `always` or `on`.
    pub fn from_env() -> Self {
        let v = std::env::var("LFF_COLOR").unwrap_or_default().to_ascii_lowercase();
        Style { color: matches!(v.as_str(), "1" | "true" | "always" | "on") }
    }

    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn pass(&self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn fail(&self, s: &str) -> String {
        self.paint("31", s)
    }
}
