//! One module per subcommand. Each returns `Ok(true)` when every check it
//! performs passes and `Ok(false)` when one fails.

mod bounds;
mod catalog;
mod convergence;
mod counterexample;
mod gradcheck;
mod optimize;
mod squashed;

use std::path::Path;

use serde::Serialize;

use crate::cli::{CatalogAction, Command};
use crate::envelope;
use crate::error::Result;

pub struct Context<'a> {
    pub command: &'a [String],
}

impl Context<'_> {
    pub fn emit<T: Serialize>(
        &self,
        out: Option<&Path>,
        seed: Option<u64>,
        payload: &T,
    ) -> Result<()> {
        match out {
            Some(path) => envelope::emit(path, self.command, seed, payload),
            None => Ok(()),
        }
    }
}

pub fn run(command: &Command, echo: &[String]) -> Result<bool> {
    let ctx = Context { command: echo };
    match command {
        Command::Optimize(args) => optimize::run(args, &ctx),
        Command::Catalog { action } => match action {
            CatalogAction::Verify(args) => catalog::verify(args.out.as_deref(), &ctx),
            CatalogAction::Construct(args) => catalog::construct(args.out.as_deref(), &ctx),
            CatalogAction::Export { out } => catalog::export(out, &ctx),
        },
        Command::SquashedCp3(args) => squashed::run(args.out.as_deref(), &ctx),
        Command::Bounds(args) => bounds::run(args.out.as_deref(), &ctx),
        Command::Gradcheck(args) => gradcheck::run(args, &ctx),
        Command::Counterexample(args) => counterexample::run(args, &ctx),
        Command::ConvergenceLog(args) => convergence::run(args, &ctx),
    }
}

/// Prints to stdout unless stdout carries the JSON envelope.
pub fn say(out: Option<&Path>, line: impl AsRef<str>) {
    if out == Some(Path::new("-")) {
        eprintln!("{}", line.as_ref());
    } else {
        println!("{}", line.as_ref());
    }
}
