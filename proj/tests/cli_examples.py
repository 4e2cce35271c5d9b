#!/usr/bin/env python3
"""Run the hgrig binary on documented invocations and check exit codes.

usage: cli_examples.py HGRIG CHECK_DOT
"""
import importlib.util
import json
import os
import subprocess
import sys
import tempfile

CASES = [
    (["bs", "check-lemma", "3.4", "--m", "2", "--n", "4", "--radius", "8"], 0),
    (["higman", "fsigma", "--sigma", "1,2;1,2;1,2;1,2;1,2"], 0),
    (["bs", "gaps", "--m", "2", "--n", "3", "--u1", "e", "--u2", "TT", "--radius", "3"], 3),
    (["bs", "gaps", "--m", "2", "--n", "3", "--u1", "e", "--u2", "TT", "--radius", "8"], 0),
    (["bs", "check-lemma", "nonsense"], 2),
    (["higman", "ball", "--sigma", "1,2;1,2;1,2"], 2),
    (["theta", "equivariance", "--sigma", "1,2;1,3;1,2;1,3", "--r", "1", "--tau", "1", "--force"], 1),
]


def run(binary, args, env=None):
    return subprocess.run([binary] + args, capture_output=True, text=True, env=env)


def main(binary, check_dot):
    failures = 0

    def expect(ok, message):
        nonlocal failures
        print(("ok   " if ok else "FAIL ") + message)
        failures += not ok

    for args, code in CASES:
        result = run(binary, args)
        expect(result.returncode == code, f"{' '.join(args)} -> {result.returncode} (expected {code})")
        if code in (0, 1) and result.stdout.startswith("{"):
            expect(json.loads(result.stdout).get("schema") == 1, "  schema 1")

    report = json.loads(run(binary, CASES[0][0]).stdout)["report"]
    gaps = [g["measured_gap"] for g in report["stats"]["gaps"]]
    expect(gaps == ["4", "2"], f"gaps {gaps}")
    fsigma = json.loads(run(binary, CASES[1][0]).stdout)
    expect(fsigma["order"] == 5 and fsigma["translations"] == [0, 1, 2, 3, 4], "F_sigma cyclic of order 5")

    env = dict(os.environ, HGRIG_CELL_CAP="10")
    expect(run(binary, ["higman", "ball", "--r", "2"], env).returncode == 4, "cell cap -> 4")

    first = run(binary, ["theta", "cycles", "--r", "2", "--s", "1", "--threads", "1"]).stdout
    second = run(binary, ["theta", "cycles", "--r", "2", "--s", "1", "--threads", "3"]).stdout
    expect(first == second and first, "byte-identical output across thread counts")

    spec = importlib.util.spec_from_file_location("check_dot", check_dot)
    dot = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(dot)
    with tempfile.TemporaryDirectory() as tmp:
        for name, args in [
            ("ball", ["bs", "ball", "--m", "2", "--n", "3", "--radius", "2"]),
            ("lambda", ["bs", "lambda", "--m", "2", "--n", "3", "--radius", "2"]),
            ("higman", ["higman", "ball", "--r", "1", "--s", "1"]),
            ("theta", ["theta", "build", "--r", "1", "--s", "1"]),
        ]:
            path = os.path.join(tmp, name + ".dot")
            code = run(binary, args + ["--format", "dot", "--output", path]).returncode
            try:
                nodes, edges = dot.counts(path)
            except Exception as error:  # parse errors come in several types
                expect(False, f"{name} DOT: {error}")
                continue
            expect(code == 0 and nodes > 0 and edges > 0, f"{name} DOT parses: {nodes} nodes, {edges} edges")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
