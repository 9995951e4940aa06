use serde::Serialize;
use serde_json::Value;

/// What a command produced, ready to print either way.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    /// Normalized input; feeding it back reproduces `result`.
    pub input: String,
    pub plain: String,
    pub result: Value,
    pub success: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    input: &'a str,
    result: &'a Value,
}

impl Report {
    pub fn new(command: &'static str, input: String, plain: String, result: Value) -> Self {
        Report {
            command,
            input,
            plain,
            result,
            success: true,
        }
    }

    pub fn json(&self) -> String {
        let envelope = Envelope {
            command: self.command,
            input: &self.input,
            result: &self.result,
        };
        let mut text = serde_json::to_string_pretty(&envelope).expect("values serialize");
        text.push('\n');
        text
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json()
        } else {
            self.plain.clone()
        }
    }
}
