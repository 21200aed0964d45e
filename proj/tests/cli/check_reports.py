"""Runs the nkayles binary over a set of invocations and validates every
report against the published schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, args, cwd):
    return subprocess.run([binary, *args], cwd=cwd, capture_output=True, text=True)


def main():
    binary = str(pathlib.Path(sys.argv[1]).resolve())
    schema_path = sys.argv[2]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    with tempfile.TemporaryDirectory() as tmp:
        work = pathlib.Path(tmp)
        corpus = work / "corpus"
        corpus.mkdir()
        (corpus / "p4.txt").write_text("4\n0 1\n1 2\n2 3\n")
        (corpus / "k555.g6").write_text("N?B~vrw}F~~}~{~{^}?\n")
        (corpus / "broken.txt").write_text("3\n0 7\n")
        (work / "k13.g6").write_text("Cs\n")
        (work / "empty.txt").write_text("0\n")

        cases = [
            ["solve", "--gen", "path 4", "--move"],
            ["solve", "--gen", "spider 3", "--oracle"],
            ["solve", "k13.g6", "--move"],
            ["params", "--gen", "path 4"],
            ["params", "--gen", "complete 5"],
            ["params", "empty.txt"],
            ["ksets", "--gen", "path 3", "--list", "--dp"],
            ["verify", "spider-count"],
            ["verify", "vc-bound", "--sweep-n", "4"],
            ["verify", "vc-bound", "--gen", "spider 2"],
            ["verify", "kernel", "--gen", "multipartite 3,3,3"],
            ["verify", "expansion", "--gen", "multipartite 2,3"],
            ["verify", "nimsum", "--gen", "gnp 10 0.2 3"],
            ["verify", "tree-quotient", "--gen", "tree 12 4"],
            ["kernelize", "--gen", "multipartite 1,5"],
            ["kernelize", "k13.g6", "--fixpoint", "-o", "kernel.txt"],
            ["generate", "spider", "3"],
            ["generate", "gnp", "12", "0.5", "--seed", "7", "-o", "g.g6"],
            ["bench", "corpus", "--kernel", "--csv", "bench.csv", "--jobs", "2"],
        ]
        for args in cases:
            proc = run(binary, args, work)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL exit {proc.returncode}: {label}\n{proc.stderr}")
                failures += 1
                continue
            report = json.loads(proc.stdout)
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            for err in errors:
                print(f"FAIL schema: {label}: {list(err.path)}: {err.message}")
            failures += bool(errors)

            masked = ["--mask-timings", *args]
            first = run(binary, masked, work).stdout
            second = run(binary, masked, work).stdout
            if first != second:
                print(f"FAIL nondeterministic output: {label}")
                failures += 1

        for args, code in [
            (["solve", "missing.txt"], 2),
            (["solve", "corpus/broken.txt"], 2),
            (["solve", "--gen", "path 30", "--oracle"], 3),
            (["generate", "star", "0"], 2),
        ]:
            proc = run(binary, args, work)
            label = " ".join(args)
            if proc.returncode != code or proc.stdout:
                print(f"FAIL expected exit {code} and empty stdout: {label}")
                failures += 1
                continue
            err = json.loads(proc.stderr)
            if set(err) != {"error"} or not {"kind", "message"} <= set(err["error"]):
                print(f"FAIL malformed error object: {label}: {proc.stderr}")
                failures += 1

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
