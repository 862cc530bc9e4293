import json
import pathlib
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]
ROOT = pathlib.Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"

CASES = [
    ("period", ["period", "-e", "(x+y+1)^3/(x*y*z)+z", "-n", "10"]),
    ("pf", ["pf", "--family", "1-13"]),
    ("pf", ["pf", "-e", "(x+y+z+1)^4/(x*y*z)", "--max-order", "3", "--max-degree", "1"]),
    ("monodromy", ["monodromy", "--family", "1-13", "--at", "inf"]),
    ("monodromy", ["monodromy", "--family", "1-7"]),
    ("pencil", ["pencil", "--family", "2-12", "--param", "a=2"]),
    ("fiber", ["fiber", "--family", "1-6", "--fiber", "0"]),
    ("fiber", ["fiber", "-e", "(x+y+z+1)^4/(x*y*z)"]),
    ("verdict", ["classify", "--family", "2-12", "--param", "a=2"]),
    ("verdict", ["classify", "--family", "1-2"]),
    ("verdict", ["classify", "--family", "1-10"]),
    ("sweep", ["sweep", "--family", "2-12", "--grid", "a=1,2,3"]),
    ("sweep", ["sweep", "--family", "3-2", "--grid", "a=1,2", "--grid", "b=1,3", "--pencil-only"]),
    ("catalog-list", ["catalog-list"]),
]

failures = 0


def run(args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(ok, message):
    global failures
    print(("ok   " if ok else "FAIL ") + message)
    if not ok:
        failures += 1


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


outputs = {}
for name, args in CASES:
    label = " ".join(args)
    first = run([*args, "--json", "--seed", "7"])
    second = run([*args, "--json", "--seed", "7"])
    expect(first.returncode in (0, 3), f"{label}: exit {first.returncode}")
    expect(first.stdout == second.stdout, f"{label}: byte-identical output")
    try:
        doc = json.loads(first.stdout)
        jsonschema.validate(doc, schema(name))
        expect(True, f"{label}: matches {name} schema")
        outputs[label] = doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        expect(False, f"{label}: {e}")

period = outputs.get("period -e (x+y+1)^3/(x*y*z)+z -n 10", [])
expect(period[:5] == ["1", "0", "12", "0", "540"], "period example begins 1, 0, 12, 0, 540")

mono = outputs.get("monodromy --family 1-13 --at inf", {"points": [{}]})["points"][0]
expect(mono.get("exponents") == ["2/3", "1", "4/3"], "1-13 exponents at inf")
expect(mono.get("class") == "QuasiUnipotentNonUnipotent", "1-13 class at inf")

verdict = outputs.get("classify --family 2-12 --param a=2", {})
expect(verdict.get("theorem2_consistent") is True, "2-12 verdict consistent")

ann = ROOT / "data" / "annotations.json"
explicit = run(["classify", "--family", "2-12", "--param", "a=2", "--annotations", str(ann), "--json"])
expect(explicit.returncode == 0 and json.loads(explicit.stdout)["theorem2_consistent"], "explicit annotation file")

expect(run(["classify", "--family", "1-10"]).returncode == 3, "indeterminate verdict exits 3")
bad = run(["period", "-e", "(x+y+1^3/(x*y", "-n", "3"])
expect(bad.returncode == 2 and "position 13" in bad.stderr, "parse error exits 2 and names the position")
expect(run(["period", "--nonsense"]).returncode == 2, "unknown flag exits 2")
expect(run(["classify", "--family", "2-12", "--param", "a=1"]).returncode == 2, "excluded parameter exits 2")
expect(run(["classify", "--family", "9-9"]).returncode == 2, "unknown family exits 2")
missing = run(["catalog-list", "--catalog", "/nonexistent/catalog.json"])
expect(missing.returncode == 2, "missing catalog exits 2")

text = run(["monodromy", "--family", "1-13", "--at", "inf"])
expect(text.returncode == 0 and "2/3, 1, 4/3" in text.stdout, "aligned text output")

sys.exit(1 if failures else 0)
