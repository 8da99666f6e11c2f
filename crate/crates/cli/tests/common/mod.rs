#![allow(dead_code)]

use std::process::Command;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the built binary from the crate root with a clean step-cap variable.
pub fn incomm(args: &[&str]) -> Run {
    incomm_env(args, None)
}

pub fn incomm_env(args: &[&str], max_steps: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_incomm"));
    cmd.args(args).current_dir(env!("CARGO_MANIFEST_DIR")).env_remove("ANTH_MAX_STEPS");
    if let Some(v) = max_steps {
        cmd.env("ANTH_MAX_STEPS", v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exited normally"),
    }
}
