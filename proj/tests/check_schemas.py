"""Run each JSON-emitting subcommand and validate its output against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("config", ["config", "build", "--kind", "hesse3"]),
    ("config", ["config", "build", "--kind", "dual-hesse"]),
    ("config", ["config", "build", "--kind", "torsion", "--m", "4"]),
    ("config", ["config", "build", "--kind", "fermat-zm", "--m", "3"]),
    ("config", ["config", "build", "--kind", "cubic", "--s", "9"]),
    ("lemma", ["lemma", "verify", "--k", "2"]),
    ("lemma", ["lemma", "verify", "--k", "3"]),
    ("lemma", ["lemma", "probe", "--k", "4", "--budget", "500", "--seed", "1"]),
    ("giants", ["lemma", "giants"]),
    ("orbit", ["cremona", "orbit", "--max-degree", "6", "--allow-backtrack", "--all-seeds"]),
    ("reduce", ["cremona", "reduce", "--class", "6;3,1,2,1,2,3,2,2,1"]),
    ("search", ["classify", "search", "--kind", "dual-hesse", "--max-degree", "6"]),
    ("search", ["classify", "search", "--kind", "fermat-zm", "--m", "4", "--max-degree", "3"]),
    ("bnc", ["classify", "bnc", "--kind", "hesse3"]),
    ("bnc", ["classify", "bnc", "--kind", "torsion", "--m", "4"]),
    ("bnc", ["classify", "bnc", "--kind", "cubic", "--s", "12"]),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        out = subprocess.run([exe, *args], capture_output=True, text=True)
        label = " ".join(args)
        if out.returncode != 0:
            print(f"FAIL {label}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = list(jsonschema.Draft202012Validator(schema).iter_errors(json.loads(out.stdout)))
        for e in errors[:3]:
            print(f"FAIL {label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
