"""Run every CLI subcommand in JSON mode and validate the output against the schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"],
    ["expand", "--shape", "4,2,2,1/2,2"],
    ["expand", "--shape", "3,2,1/2,1", "--n-vars", "2"],
    ["multfree", "--shape", "3,3,2,1/1,1", "--n-vars", "2"],
    ["multfree", "--shape", "3,2,1/2,1"],
    ["heads", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2"],
    ["heads", "--w", "2,7,9", "--n", "9", "--max-levi", "--r", "2"],
    ["decompose", "--w", "4,7,8,9", "--n", "9", "--blocks", "4,3,2", "--r", "2"],
    ["reduce", "--w", "1,2,5,7", "--n", "8", "--blocks", "2,3,2,1"],
    ["classify", "--w", "2,7,9", "--n", "9", "--blocks", "2,5,2"],
    ["classify", "--w", "4,7,8,9", "--n", "9", "--blocks", "4,3,2"],
    ["classify", "--w", "2,4,6,8", "--n", "8", "--max-levi"],
    ["classify", "--w", "1,2", "--n", "5", "--blocks", "2,3"],
    ["toric", "--w", "1,3,4,7", "--n", "8", "--timings"],
    ["verify", "--n-max", "4", "--r-max", "2"],
    # library errors still produce a structured object
    ["heads", "--w", "1,7,9", "--n", "9", "--blocks", "1,6,2"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        out = proc.stdout if proc.returncode == 0 else proc.stderr
        lines = [line for line in out.splitlines() if line.strip()]
        if len(lines) != 1:
            print(f"FAIL {' '.join(args)}: expected one line, got {len(lines)}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(lines[0])))
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
