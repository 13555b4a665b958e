"""End-to-end checks of the knotzeta command line: exact outputs, exit codes,
and JSON schema conformance of every document it prints."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

registry = Registry()
schemas = {}
for path in SCHEMAS.glob("*.json"):
    doc = json.loads(path.read_text())
    schemas[path.stem] = doc
    registry = registry.with_resource(path.name, Resource.from_contents(doc))

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=300)


def validate(doc, schema):
    jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(doc)


def expect(name, args, code=0, schema=None, stdout=None, check=None, stream="stdout", env=None):
    r = run(*args, env=env)
    text = r.stdout if stream == "stdout" else r.stderr
    try:
        assert r.returncode == code, f"exit {r.returncode}, wanted {code}; stderr: {r.stderr.strip()}"
        if stdout is not None:
            assert r.stdout == stdout, f"stdout {r.stdout!r}"
        if schema is not None:
            for line in text.strip().splitlines():
                validate(json.loads(line), schema)
        if check is not None:
            check(text)
    except (AssertionError, jsonschema.ValidationError, json.JSONDecodeError) as e:
        failures.append(f"{name}: {e}")
        print(f"FAIL {name}: {e}")
    else:
        print(f"ok   {name}")


expect("alexander trefoil", ["alexander", "trefoil.knot"], stdout='{"poly":{"0":1,"1":-1,"2":1},"det":3}\n',
       schema="alexander")
expect("alexander json", ["alexander", "figure_eight.knot", "--json"], schema="alexander",
       check=lambda s: json.loads(s)["text"] == "t^2 - 3t + 1")
expect("alexander eq10", ["alexander", "trefoil.knot", "--convention", "eq10"], schema="alexander",
       check=lambda s: json.loads(s)["denominator"] == {"0": -1, "1": 1})
expect("alexander root", ["alexander", "5_2.knot", "--root", "3"], schema="alexander",
       check=lambda s: json.loads(s)["poly"] == {"0": 2, "1": -3, "2": 2})
expect("det unknot", ["det", "unknot.knot"], stdout='{"det":1}\n', schema="det")
expect("det json", ["det", "6_1.knot", "--json"], schema="det", check=lambda s: abs(json.loads(s)["tree_sum"]) == 9)
expect("inline diagram", ["det", "X+ 3 1 2 / X+ 1 2 3 / X+ 2 3 1"], stdout='{"det":3}\n')
expect("corpus override", ["det", "trefoil.knot"], code=2, schema="error", stream="stderr",
       env={"KNOTZETA_CORPUS": tempfile.gettempdir() + "/no-such-corpus"})

expect("twisted dihedral", ["twisted", "trefoil.knot", "--dihedral", "3"], schema="twisted",
       check=lambda s: json.loads(s)["field"] == 7 and json.loads(s)["dim"] == 2)
expect("twisted trivial", ["twisted", "trefoil.knot"], schema="twisted",
       check=lambda s: json.loads(s)["denominator"] == {"0": 2147483646, "1": 1})
expect("twisted bad prime", ["twisted", "trefoil.knot", "--dihedral", "5"], code=2, schema="error",
       stream="stderr")

with tempfile.TemporaryDirectory() as tmp:
    rep = run("twisted", "trefoil.knot", "--dihedral", "3", "--json")
    rep_path = Path(tmp) / "rep.json"
    rep_path.write_text(json.dumps(json.loads(rep.stdout)["representation"]))
    validate(json.loads(rep_path.read_text()), "representation")
    expect("twisted rep file", ["twisted", "trefoil.knot", "--rep", str(rep_path)], schema="twisted",
           check=lambda s: json.loads(s)["numerator"] == json.loads(rep.stdout)["numerator"])
    broken = Path(tmp) / "broken.json"
    broken.write_text('{"dim": 2, "field": 7, "images": {"x1": [[1, 0], [0, 1]]}}')
    expect("twisted short rep", ["twisted", "trefoil.knot", "--rep", str(broken)], code=2, schema="error",
           stream="stderr")
    bad_knot = Path(tmp) / "bad.knot"
    bad_knot.write_text("X+ 3 1 2\nX+ 1 2 x\n")
    expect("parse error position", ["alexander", str(bad_knot)], code=2, schema="error", stream="stderr",
           check=lambda s: json.loads(s)["error"]["line"] == 2 and json.loads(s)["error"]["column"] == 8)

expect("tree-poly root", ["tree-poly", "trefoil.knot", "--root", "1"], schema="tree-poly",
       check=lambda s: json.loads(s) == {"poly": {"0": 1, "1": -1, "2": 1}, "arborescences": 3})
expect("tree-poly cut", ["tree-poly", "figure_eight.knot", "--cut", "2", "--json"], schema="tree-poly")

for check in ["trace", "euler", "path-sum", "cable"]:
    expect(f"zeta {check}", ["zeta", "trefoil.knot", "--check", check, "--cut", "1"], schema="verdict",
           check=lambda s: json.loads(s)["status"] == "pass")
expect("zeta euler exact", ["zeta", "trefoil.knot", "--check", "euler", "--t", "1/2", "--max-len", "2"],
       schema="verdict", check=lambda s: json.loads(s)["lhs"] == json.loads(s)["rhs"])
expect("zeta composition", ["zeta", "trefoil.knot", "figure_eight.knot", "--check", "composition"],
       schema="verdict")
expect("zeta divergent", ["zeta", "figure_eight.knot", "--check", "euler", "--t", "1/10"], code=3,
       schema="verdict", check=lambda s: "warning" in json.loads(s)["detail"])
expect("zeta bad t", ["zeta", "trefoil.knot", "--check", "euler", "--t", "1/0"], code=2, schema="error",
       stream="stderr")

expect("verify triple", ["verify", "triple", "trefoil.knot"],
       check=lambda s: "fail " not in s and "input:trefoil" in s)
expect("verify cable", ["verify", "cable", "trefoil.knot", "--n", "2", "--t", "1/2"],
       check=lambda s: s.strip().endswith("0 failed, 0 skipped") or " 0 failed" in s)
expect("verify json", ["verify", "composition", "--json"], schema="report",
       check=lambda s: json.loads(s)["failed"] == 0)
expect("verify unknown suite", ["verify", "nonsense"], code=2, schema="error", stream="stderr")

expect("export diagram", ["export", "5_2.knot"], schema="diagram")
expect("export graph", ["export", "trefoil.knot", "--format", "graph", "--cut", "1"], schema="graph",
       check=lambda s: len(json.loads(s)["vertices"]) == 4)
expect("export dot", ["export", "trefoil.knot", "--format", "dot"],
       check=lambda s: s.startswith("digraph") and s.count("->") == 6)
expect("export pd", ["export", "figure_eight.knot", "--format", "pd"],
       check=lambda s: run("det", s.replace("\n", " / ").strip(" /")).stdout == '{"det":5}\n')

expect("missing file", ["alexander", "nowhere.knot"], code=2, schema="error", stream="stderr")
expect("empty diagram", ["alexander", " "], code=2, schema="error", stream="stderr")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
