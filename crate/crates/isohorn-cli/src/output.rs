use serde_json::{Map, Value};

/// One invocation's result: ordered key/value lines followed by the same
/// content as a single JSON document.
pub struct Doc {
    command: String,
    params: Vec<(String, Value)>,
    fields: Vec<(String, Value)>,
    provenance: Vec<(String, Value)>,
    pub verdict: Option<bool>,
}

impl Doc {
    pub fn new(command: &str) -> Self {
        Doc { command: command.into(), params: Vec::new(), fields: Vec::new(), provenance: Vec::new(), verdict: None }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.params.push((key.into(), v.into()));
        self
    }

    pub fn field(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), v.into()));
        self
    }

    pub fn provenance(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.provenance.push((key.into(), v.into()));
        self
    }

    pub fn verdict(&mut self, ok: bool) -> &mut Self {
        self.verdict = Some(ok);
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }

    fn object(pairs: &[(String, Value)]) -> Value {
        Value::Object(pairs.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn render(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in self.params.iter().chain(&self.fields) {
            out.push_str(&format!("{k}: {}\n", inline(v)));
        }
        for (k, v) in &self.provenance {
            out.push_str(&format!("provenance.{k}: {}\n", inline(v)));
        }
        if let Some(ok) = self.verdict {
            out.push_str(&format!("verdict: {}\n", if ok { "PASS" } else { "FAIL" }));
        }
        let mut doc = Map::new();
        doc.insert("command".into(), self.command.clone().into());
        doc.insert("params".into(), Self::object(&self.params));
        doc.insert("result".into(), Self::object(&self.fields));
        if !self.provenance.is_empty() {
            doc.insert("provenance".into(), Self::object(&self.provenance));
        }
        if let Some(ok) = self.verdict {
            doc.insert("verdict".into(), (if ok { "PASS" } else { "FAIL" }).into());
        }
        out.push_str(&serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize"));
        out.push('\n');
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn error_doc(command: &str, kind: &str, message: &str) -> String {
    let mut doc = Map::new();
    doc.insert("command".into(), command.into());
    doc.insert("error".into(), kind.into());
    doc.insert("message".into(), message.into());
    format!(
        "command: {command}\nerror: {kind}\nmessage: {message}\n{}\n",
        serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize")
    )
}
