"""Regenerate src/multctl/data/corpus.txt.

Each command first runs with --oracle; it is frozen only if every oracle
cross-check agrees and the exit code is the expected one.
"""

import shlex
import sys
from pathlib import Path

from multctl.cli import run_captured
from multctl.harness import random_instance
from multctl.syntax import render_ideal

a0, b0, g0 = random_instance(0)

COMMANDS = [
    # exit code, command
    (0, 'lct --vars x,y "<x^2, y^3>"'),
    (0, 'lct --vars x,y,z "<x, y, z>"'),
    (0, 'lct --vars x,y "<x^2, x*y, y^3>"'),
    (0, 'lct --vars x,y "<1>"'),
    (0, 'mi --vars x,y --coeff 5/6 "<x^2, y^3>"'),
    (0, 'mi --vars x,y --coeff 4/3 "<x^2, y^3>"'),
    (0, 'mi --vars x,y --coeff 3/2 "<x^2, x*y, y^2>"'),
    (0, 'mi --vars x,y,z --coeff 7/2 "<x, y, z>"'),
    (0, 'mi --vars x,y --coeff 0 "<x^2, y^3>"'),
    (0, 'mi --vars x,y --coeff 2 "<x^3*y, x*y^4>"'),
    (0, 'jn --vars x,y --max 4/3 "<x^2, y^3>"'),
    (0, 'jn --vars x --max 3 "<x^2>"'),
    (0, 'jn --vars x,y --max 3 "<x, y>"'),
    (0, 'amult --vars x,y --coeff 2 --qmax 4 "<x, y>"'),
    (0, 'amult --vars x,y --coeff 5/6 --p 2 --qmax 2 "<x^2, y^3>"'),
    (0, 'verify thm1 --vars x,y --coeff 5/6 "<x^2>" "<y^3>"'),
    (0, 'verify thm1 --vars x,y --coeff 2 "<x, y>" "<x, y>"'),
    (0, 'verify thm1 --vars x,y --coeff 0 "<x^3>" "<x*y>"'),
    (0, f'verify thm1 --vars x --coeff {g0} "{render_ideal(a0)}" "{render_ideal(b0)}"'),
    (0, 'verify equality --vars x --vars-b y --coeff 5/6 "<x^2>" "<y^3>"'),
    (0, 'verify equality --vars x --vars-b y --coeff 1 "<x>" "<y>"'),
    (0, 'verify equality --vars x1,x2 --vars-b y1 --coeff 2 "<x1^2, x2>" "<y1^3>"'),
    (0, 'verify lemma --vars x --vars-b y --coeff 5/6 "<x^2>" "<y^3>"'),
    (0, 'verify lemma --vars x --vars-b y --coeff 2 "<x>" "<y>"'),
    (0, 'verify main --vars x,y --m 2 --n 2 --coeff 5/3 "<x^2>" "<y^3>"'),
    (0, 'verify main --vars x,y --m 2 --n 2 --coeff 4 "<x, y>" "<x, y>"'),
    (0, 'verify main --vars x --vars-b y --m 3 --n 6 --coeff 2 --product-space "<x^2>" "<y^3>"'),
    (0, 'verify approx --vars x,y --p 4 --coeff 5/6 --eps 1/2 "<x^2, y^3>"'),
    (0, 'verify approx --vars x --p 2 --coeff 1 --eps 1 "<x>"'),
    (0, 'verify subvariety --vars x,y --r 1 --coeff 1/4 "<x^2, y>"'),
    (0, 'verify subvariety --vars x,y --r 1 --coeff 1/2 "<x, y>"'),
    (0, 'verify subvariety --vars x,y,z --r 1 --coeff -1/2 "<x^2*y, z>"'),
    (0, 'verify jumpshift --vars x --r 1 --max 3 "<x>"'),
    (0, 'verify jumpshift --vars x --r 1 --max 2 "<x^2>"'),
    (0, 'verify jumpshift --vars x,y --r 2 --max 2 "<x^2, y^3>"'),
    (0, 'verify thm2 --vars x,y --coeff 5/6 --mmax 3 --qmax 2 "<x^2>" "<y^3>"'),
    (0, 'verify thm2 --vars x,y --coeff 2 --mmax 2 --qmax 2 "<x, y>" "<x, y>"'),
    (3, 'verify thm2 --vars x,y --coeff 5/6 --mmax 3 --qmax 1 "<x^2>" "<y^3>"'),
    (0, 'verify thm1 --trials 5 --seed 42'),
    (0, 'verify equality --trials 5 --seed 7'),
    (0, 'verify jumpshift --trials 5 --seed 1'),
]


def main() -> int:
    blocks = ["# Regression corpus: '$ command' followed by its frozen plain output (timing off).",
              "# Regenerate with tools/freeze_corpus.py; every entry passed its --oracle cross-check.", ""]
    for want, cmd in COMMANDS:
        argv = shlex.split(cmd)
        code, checked = run_captured(argv + ["--oracle"])
        if code != want or "disagrees" in checked:
            print(f"oracle check failed for: {cmd}\n{checked}", file=sys.stderr)
            return 1
        code, out = run_captured(argv)
        if code != want:
            print(f"unexpected exit {code} for: {cmd}", file=sys.stderr)
            return 1
        blocks += [f"$ {cmd}", out, ""]
    path = Path(__file__).resolve().parents[1] / "src" / "multctl" / "data" / "corpus.txt"
    path.write_text("\n".join(blocks))
    print(f"wrote {len(COMMANDS)} entries to {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
