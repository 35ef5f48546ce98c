#!/usr/bin/env python3
"""Exercises the coh1 command line binary: exit codes, JSON stability,
text/JSON agreement."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1] if len(sys.argv) > 1 else "coh1"
SPACES_DB = sys.argv[2] if len(sys.argv) > 2 else None

failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("COHOMO_DB", None)
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e)


def check(name, cond, extra=""):
    if cond:
        print(f"ok {name}")
    else:
        print(f"FAIL {name} {extra}")
        failures.append(name)


def payload(res):
    return json.loads(res.stdout)["payload"]


# --- gradation: exact payload from the worked example
res = run("--format", "json", "gradation", "G2_2/SO4", "--phi", "2")
check("gradation exit 0", res.returncode == 0, res.stderr)
p = payload(res)
check("gradation payload", p == {"level_dims": [2, 1, 2], "depth": 3}, str(p))

# byte stability across runs
res2 = run("--format", "json", "gradation", "G2_2/SO4", "--phi", "2")
check("json byte-stable", res.stdout == res2.stdout)

# --- parabolic with the full subset: no radical
res = run("--format", "json", "parabolic", "G2_2/SO4", "--phi", "1,2")
check("parabolic full exit 0", res.returncode == 0, res.stderr)
check("parabolic full dim_n", payload(res)["dim_n_phi"] == 0)

# text and JSON agree on the numbers
text = run("parabolic", "SL3(R)/SO3", "--phi", "1")
check("parabolic text has dim_l_phi 4", "dim_l_phi" in text.stdout and " 4" in text.stdout)
jsn = payload(run("--format", "json", "parabolic", "SL3(R)/SO3", "--phi", "1"))
check("parabolic json dim_l", jsn["dim_l_phi"] == 4 and jsn["dim_n_phi"] == 2)

# --- classify with the corpus diff
res = run("--format", "json", "classify", "SL3(R)/SO3", "--diff-paper")
check("classify diff exit 0", res.returncode == 0, res.stderr)
check("classify diff empty", payload(res)["diff"]["empty"] is True)
check("classify groups", payload(res)["group_count"] == 4)

res = run("classify", "SO(2,3)/SO2SO3", "--diff-paper")
check("classify so23 exit 0", res.returncode == 0, res.stderr)
check("classify so23 text", "diff against the bundled corpus: empty" in res.stdout)

# --- space list / info
res = run("space", "list")
check("space list", res.returncode == 0 and "G2_2/SO4" in res.stdout)
res = run("--format", "json", "space", "info", "OH2")
check("space info OH2", res.returncode == 0 and payload(res)["dim"] == 16)
res = run("space", "info", "RH{n}", "--param", "5")
check("space info parametric", res.returncode == 0 and "RH5" in res.stdout)

# --- boundary / nilpotent / extend
res = run("--format", "json", "boundary", "SL4(R)/SO4", "--phi", "1,2")
check("boundary exit 0", res.returncode == 0, res.stderr)
check("boundary candidates", "SL3(R)/SO3" in payload(res)["name_candidates"])

res = run("--format", "json", "nilpotent", "G2_2/SO4", "--phi", "2")
check("nilpotent exit 0", res.returncode == 0, res.stderr)
cands = payload(res)["candidates"]
check("nilpotent verdict", len(cands) == 1 and cands[0]["verdict"] == "pass")

inner = json.dumps({"kind": "reductive-tg", "key": "RH:k=0"})
res = run("--format", "json", "extend", "SL3(R)/SO3", "--phi", "1", "--inner", inner)
check("extend exit 0", res.returncode == 0, res.stderr)
check("extend codim", payload(res)["orbit"]["singular_codim"] == 2)

# --- error paths
res = run("space", "info", "G2_2/SO5")
check("unknown space exit 1", res.returncode == 1, str(res.returncode))
check("unknown space suggests", "G2_2/SO4" in res.stderr, res.stderr)
res = run("gradation", "G2_2/SO4", "--phi", "7")
check("bad phi index exit 1", res.returncode == 1)
res = run("gradation", "G2_2/SO4", "--phi", "1;2")
check("malformed phi exit 2", res.returncode == 2, str(res.returncode))
res = run("nosuchcommand")
check("unknown command exit 2", res.returncode == 2)
res = run("classify", "SL4(R)/SO4", "--diff-paper")
check("no corpus exit 1", res.returncode == 1)

# --- extend with the inner descriptor supplied through a file
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    f.write('{"kind":"foliation-n","i":1}')
    inner_file = f.name
res = run("--format", "json", "extend", "SL4(R)/SO4", "--phi", "1,2",
          "--inner", "@" + inner_file)
check("extend @file", res.returncode == 0
      and payload(res)["orbit"]["singular_codim"] == 0, res.stderr)
os.unlink(inner_file)

# --- db validate on the bundled file and COHOMO_DB override
if SPACES_DB:
    res = run("db", "validate", SPACES_DB)
    check("db validate bundled", res.returncode == 0 and "canonical" in res.stdout,
          res.stdout + res.stderr)
    res = run("--format", "json", "space", "info", "RH4", env={"COHOMO_DB": SPACES_DB})
    check("COHOMO_DB override", res.returncode == 0 and payload(res)["dim"] == 4)
    with tempfile.NamedTemporaryFile("w", suffix=".db", delete=False) as f:
        f.write("name=Broken\nfamily=Q\nrank=2\nmult=1\ndim_k0=0\n")
        broken = f.name
    res = run("db", "validate", broken)
    check("db validate broken exit 1", res.returncode == 1)
    os.unlink(broken)

    # A user-supplied record: the structural operations work on it, and
    # classification degrades honestly (no catalogs -> incomplete).
    with open(SPACES_DB) as f:
        custom = f.read()
    custom += ("\nname=Custom/B3\nfamily=B\nrank=3\nmult=2,1\ndim_k0=5\n"
               "notes=user-added record\n")
    with tempfile.NamedTemporaryFile("w", suffix=".db", delete=False) as f:
        f.write(custom)
        custom_db = f.name
    env = {"COHOMO_DB": custom_db}
    res = run("db", "validate", custom_db)
    check("custom db validates", res.returncode == 0, res.stdout + res.stderr)
    res = run("--format", "json", "space", "info", "Custom/B3", env=env)
    # B3: 3 long + 3 short + 3 short... positive roots: 9; lengths: 3 long
    # pairs e_i±e_j (6 roots, m=2) and 3 short e_i (m=1): dim = 3 + 12 + 3.
    check("custom space dim", res.returncode == 0 and payload(res)["dim"] == 18,
          res.stdout[:200])
    res = run("--format", "json", "parabolic", "Custom/B3", "--phi", "1,2", env=env)
    check("custom parabolic", res.returncode == 0
          and payload(res)["dim_a_phi"] == 1, res.stderr)
    res = run("--format", "json", "classify", "Custom/B3", env=env)
    check("custom classify incomplete", res.returncode == 0
          and payload(res)["complete"] is False, res.stdout[:200])
    os.unlink(custom_db)

if failures:
    print(f"{len(failures)} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
