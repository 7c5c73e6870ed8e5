//! Batch execution: a config file holds one invocation per line
//! (subcommand and flags, whitespace separated; `#` comments and blank
//! lines skipped). All lines run in order and a single JSON array is
//! emitted; the exit status is nonzero when any item failed.

use crate::{output, run, CmdError, EXIT_OK};

pub(crate) fn run_batch(_json: bool, config: &str) -> Result<String, CmdError> {
    let text = std::fs::read_to_string(config)
        .map_err(|e| CmdError::Usage(format!("cannot read batch config '{config}': {e}")))?;
    let mut items = Vec::new();
    let mut any_failed = false;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens: Vec<String> = vec!["arithyp".into(), "--json".into()];
        tokens.extend(line.split_whitespace().map(String::from));
        if tokens.iter().any(|t| t == "batch") {
            any_failed = true;
            items.push(format!(
                "{{\"line\":{},\"invocation\":{},\"ok\":false,\"error\":{}}}",
                lineno + 1,
                output::json_str(line),
                output::json_str("nested batch invocations are not allowed")
            ));
            continue;
        }
        let (code, out) = run(&tokens);
        let out = out.trim_end();
        if code == EXIT_OK {
            items.push(format!(
                "{{\"line\":{},\"invocation\":{},\"ok\":true,\"result\":{}}}",
                lineno + 1,
                output::json_str(line),
                out
            ));
        } else {
            any_failed = true;
            items.push(format!(
                "{{\"line\":{},\"invocation\":{},\"ok\":false,\"error\":{}}}",
                lineno + 1,
                output::json_str(line),
                output::json_str(out)
            ));
        }
    }
    let body = format!("[{}]\n", items.join(","));
    if any_failed {
        // partial results are still reported, flagged item by item
        Err(CmdError::PartialOutput(body))
    } else {
        Ok(body)
    }
}
