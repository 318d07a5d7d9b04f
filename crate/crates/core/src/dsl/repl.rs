use std::io::{self, BufRead, Write};

use super::eval::eval_text;
use super::scene::Scene;

const HELP: &str = "\
queries:
  eta A b | pt? P Q [--budget n] | between? A B C | boundary? P Q
  interior-point? P Q | sat-interior? P Q | concent? A B | ext? P Q
  convex? Q [--samples n] | hausdorff A B | closure? P Q
  check mereo|regopen|geometry|kuratowski-all [--cases n] [--seed s] [--budget d]
commands:
  :scene  print the loaded scene
  :help   this text
  :quit   leave";

/// Read one query per line and print its answer or diagnostic. Stops at
/// `:quit` or end of input. With `prompt` set, it is written before each
/// line is read.
pub fn repl<R: BufRead, W: Write>(
    scene: &Scene,
    budget: u32,
    input: R,
    mut out: W,
    prompt: Option<&str>,
) -> io::Result<()> {
    let mut lines = input.lines();
    loop {
        if let Some(p) = prompt {
            write!(out, "{p}")?;
            out.flush()?;
        }
        let Some(line) = lines.next().transpose()? else {
            break;
        };
        let line = line.trim();
        match line {
            "" => continue,
            ":quit" | ":q" => break,
            ":help" => writeln!(out, "{HELP}")?,
            ":scene" => write!(out, "{scene}")?,
            _ => match eval_text(scene, line, budget) {
                Ok(e) => writeln!(out, "{e}")?,
                Err(d) => writeln!(out, "{d}")?,
            },
        }
    }
    Ok(())
}
