#!/usr/bin/env python3
"""Exit-code and output contract of the tau_twist command-line tool."""

import json
import os
import subprocess
import sys
from pathlib import Path

TOOL = os.environ.get("TAU_TWIST", "tau_twist")
ROOT = Path(__file__).resolve().parent.parent
failures = []


def run(args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("TAU_TWIST_BUDGET", None)
    full_env.update(env or {})
    return subprocess.run([TOOL, *args], input=stdin, capture_output=True, text=True, env=full_env)


def check(name, condition, detail=""):
    print(("PASS " if condition else "FAIL ") + name + ("" if condition else ": " + detail))
    if not condition:
        failures.append(name)


def result(proc):
    return json.loads(proc.stdout)["result"]


def build(*args):
    proc = run(["build", *args])
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


torus1 = run(["build", "torus2", "--n", "1"])
check("build torus2 n=1", torus1.stdout.strip() == "< x1, x2 | x1^2, x1*x2*x1*x2*x1^-1*x2^-1 >", torus1.stdout)
check("build cyclic m=1", build("cyclic", "--m", "1").strip() == "< x1 | x1 >")
check("build fixture", build("fixture", "--name", "12a427_D2").startswith("< x1, x2, x3 |"))
bad = run(["build", "nosuch"])
check("unknown family exits 2", bad.returncode == 2 and bad.stderr and not bad.stdout, repr(bad))
bad = run(["build", "dihedral", "--m", "0"])
check("bad parameter exits 2", bad.returncode == 2 and bad.stderr, repr(bad))

proc = run(["enumerate", "-"], stdin=build("torus2", "--n", "3"))
check("enumerate torus2 n=3", proc.returncode == 0 and result(proc)["order"] == 14, proc.stdout)
proc = run(["enumerate", "-"], stdin=build("dihedral", "--m", "1"))
check("enumerate dihedral(1)", proc.returncode == 0 and result(proc)["order"] == 2, proc.stdout)
inf = build("coxeter", "--m1", "3", "--m2", "3", "--m3", "inf")
proc = run(["enumerate", "--max-cosets", "10000", "-"], stdin=inf)
check("budget exceeded exits 3", proc.returncode == 3, repr(proc))
proc = run(["enumerate", "-"], stdin=inf, env={"TAU_TWIST_BUDGET": "5000"})
check("budget from environment", proc.returncode == 3 and result(proc)["budget"] == 5000, proc.stdout)
proc = run(["enumerate", "-"], stdin="< x1 | x1^2 ")
check("parse error exits 2", proc.returncode == 2 and proc.stderr, repr(proc))
proc = run(["enumerate", "--subgroup", "x1=1,x2=1", "-"], stdin=build("torus2", "--n", "2"))
check("index-2 subgroup", proc.returncode == 0 and result(proc)["order"] == 2, proc.stdout)

proc = run(["recognize", "-"], stdin=build("torus2", "--n", "2"))
rec = result(proc)
check("recognize torus2 n=2", rec["type"] == "dihedral" and rec["m"] == 5, proc.stdout)

fp553 = result(run(["fingerprint", "--fixture", "12n553"]))
fp556 = result(run(["fingerprint", "--fixture", "12n556"]))
check("fingerprints 12n553 = 12n556", fp553 == fp556 and fp553["version"] == 1, f"{fp553} {fp556}")
fp_small = result(run(["fingerprint", "--targets", "S3,A4", "--fixture", "12n553"]))
check("fingerprint targets", fp_small["targets"] == ["S3", "A4"], str(fp_small))

proc = run(["witness", "--extra", "(x3*x1)^2", "-"], stdin=inf)
w = result(proc)
check("witness W(3,3,inf)", proc.returncode == 0 and w["status"] == "witness" and w["quotient_order"] == 24, proc.stdout)
proc = run(["witness", "--extra", "x1*x2", "-"], stdin=inf)
check("inconclusive witness exits 4", proc.returncode == 4, repr(proc))

proc = run(["invariant", "det2bridge", "--family", "1", "--a", "1", "--b", "1"])
check("det2bridge family 1", result(proc)["determinant"] == "81", proc.stdout)
proc = run(["invariant", "pochette-h1", "--p", "2", "--q", "1", "--ell", "0"])
check("pochette H1", result(proc)["h1"] == "Z2", proc.stdout)
proc = run(["invariant", "pretzel", "--p", "2", "--q", "1", "--r", "1"])
check("even pretzel parameter exits 2", proc.returncode == 2, repr(proc))

script = ROOT / "data" / "scripts" / "thm_pi1_n1.json"
proc = run(["replay", str(script)])
check("replay thm_pi1_n1", proc.returncode == 0 and result(proc)["matches_expected"] is True, proc.stdout)
proc = run(["replay", "-"], stdin='{"initial": "< a | a^2 >", "moves": [{"op": "InvertRelator", "rel": 3}]}')
check("illegal move exits 1", proc.returncode == 1, repr(proc))

proc = run(["accept", "--json"])
check("accept", proc.returncode == 0 and result(proc)["all_passed"] is True, proc.stdout[-400:])

version = run(["--version"])
check("version", version.returncode == 0 and version.stdout.strip().endswith("1.0.0"), version.stdout)


def payload(proc):
    doc = json.loads(proc.stdout)
    doc.pop("elapsed_ms")
    return json.dumps(doc, sort_keys=True)


for args, stdin in [
    (["enumerate", "-"], build("torus", "--p", "3", "--q", "4")),
    (["fingerprint", "--fixture", "12a990"], None),
    (["recognize", "-"], build("dihedral", "--m", "9")),
    (["replay", str(script)], None),
]:
    first, second = run(args, stdin), run(args, stdin)
    check("deterministic " + args[0], payload(first) == payload(second))

sys.exit(1 if failures else 0)
