#!/usr/bin/env python3
"""Exit codes, JSON shape and determinism of the astk binary."""
import json
import os
import subprocess
import sys
import tempfile

ASTK, FIXTURES, DATA = sys.argv[1], sys.argv[2], sys.argv[3]
failures = []


def run(*args, env=None):
    p = subprocess.run([ASTK, *args], capture_output=True, text=True, env=env)
    try:
        body = json.loads(p.stdout)
    except json.JSONDecodeError:
        body = None
    return p.returncode, body, p.stdout


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


code, body, _ = run("bgm-k", "--precision", "8")
expect(code == 0 and body["status"] == "pass" and body["result"]["rank"] == 9, "bgm-k passes with rank 9")
expect(body["report_v"] == 1 and "timings" in body and "digest" in body, "report carries version, timings, digest")

_, _, out1 = run("cech", "--group", "mu3")
_, _, out2 = run("cech", "--group", "mu3")
strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "timings"}
expect(strip(out1) == strip(out2), "two runs agree outside timings")
expect(list(json.loads(out1).keys()) == sorted(json.loads(out1).keys()), "keys are sorted")

code, body, _ = run("change-of-groups", "--pair", "t1-sl2", "--max-exponent", "1")
expect(code == 3 and body["status"] == "undetermined", "exhausted bound gives exit 3")

code, body, _ = run("change-of-groups", "--pair", "t1-sl2")
expect(code == 0 and body["result"]["cases"][0]["exponent"] == 2, "T1 in SL2 has exponent 2")

code, body, _ = run("descent-gap", "--group", "mu1")
expect(code == 0 and body["result"]["triple"] == [1, 1, 1], "descent gap of mu1")

for args in (["bogus"], ["bgm-k", "--precision", "x"], ["bgm-k", "--nope", "1"], ["cech", "--group", "gm"],
             ["cech"], ["trace", "--group", "s3", "--element", "t"], ["verify-all", "--exclude", "nothing"]):
    code, body, _ = run(*args)
    expect(code == 2 and body is not None and "error" in body, "usage error: " + " ".join(args))

code, body, _ = run("group", "validate", os.path.join(DATA, "groups", "s3.json"))
expect(code == 0 and body["result"]["classes"] == 3, "s3.json validates with 3 classes")
code, body, _ = run("group", "validate", os.path.join(DATA, "groups", "c2.json"))
expect(code == 0 and body["result"]["order"] == 2, "c2.json validates")
code, body, _ = run("group", "validate", os.path.join(FIXTURES, "s3_broken_assoc.json"))
expect(code == 1 and "associativity" in body["result"]["load_error"], "broken table names the triple")

code, body, _ = run("cech", "--group-file", os.path.join(DATA, "groups", "s3.json"), "--truncation", "3")
expect(code == 0 and body["result"]["h_dims"][0] == 1 and "files" in body["input_digests"], "cech on a group file")

env = dict(os.environ, ASTK_SEED="7")
_, a, _ = run("properties", "--ideals", "20", env=env)
_, b, _ = run("properties", "--ideals", "20", env=env)
expect(a["digest"] == b["digest"] and a["result"]["seed"] == "7", "ASTK_SEED fixes the property run")

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "r.json")
    code, body, _ = run("verify-all", "--jobs", "2", "--exclude", "properties,cech", "--out", out)
    expect(code == 0 and body["status"] == "pass", "verify-all with exclusions passes")
    expect("properties" in body["excluded"] and "cech[mu1]" in body["excluded"], "exclusions are recorded")
    with open(out) as f:
        expect(json.load(f)["digest"] == body["digest"], "--out writes the same report")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
