"""End-to-end checks of the logcouple binary.

usage: cli_test.py <path-to-logcouple> <schema-dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


def expect(label, ok, detail=""):
    if not ok:
        failures.append(f"{label}: {detail}")
    print(("ok    " if ok else "FAIL  ") + label)


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validator(name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema, registry=REGISTRY)


def check_json(label, schema, *args, exit_code=0):
    # two runs must agree byte for byte
    first, second = run(*args), run(*args)
    expect(f"{label} exit {exit_code}", first.returncode == exit_code, first.stderr)
    expect(f"{label} deterministic", first.stdout == second.stdout)
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError as e:
        expect(f"{label} parses", False, str(e))
        return None
    errors = sorted(validator(schema).iter_errors(doc), key=str)
    expect(f"{label} matches {schema} schema", not errors, errors[0].message if errors else "")
    return doc


# documented examples
r = run("eval", "psi(x)", "--at", "[0,0,5]")
expect("eval psi(x) at [0,0,5]", r.returncode == 0 and r.stdout == "[1,1,1]\n", r.stdout + r.stderr)

doc = check_json("normalize p(s(x))", "piecewise", "normalize", "p(s(x))", "--format", "json")
expect(
    "normalize p(s(x)) is the identity on Psi",
    doc == [{"interval": {"lo_level": 0, "hi_level": None},
             "fn": {"kind": "linear", "shifts": [[0, "1"]], "beta": []}}],
    json.dumps(doc),
)

r = run("check", "--suite", "all", "--seed", "42", "--samples", "10000")
expect("check all at 10^4 samples", r.returncode == 0, r.stdout[-2000:])
expect("check all reports every suite passing", "FAIL" not in r.stdout)
again = run("check", "--suite", "all", "--seed", "42", "--samples", "10000")
expect("check all deterministic", r.stdout == again.stdout)

# schema coverage across commands
terms = [
    "x", "0", "inf", "[1,-1/2,3]", "psi(x)", "s(x)", "p(x)", "d3(x)", "-(x)",
    "psi(x - s(x))", "p(p(x))", "s(s(x)) - x - x",
    "psi(x - [1,1])", "p(x + [0,-1])", "s(d2(x) - [0,0,1])", "x + inf",
    "p(s(x + p(psi(x)))) - p(psi(x))",
]
for t in terms:
    # a leading minus would read as an option, so inputs go after "--"
    check_json(f"normalize {t!r}", "piecewise", "normalize", "--format", "json", "--", t)
    check_json(f"eventual {t!r}", "eventual", "eventual", "--format", "json", "--", t)
    check_json(f"eval {t!r}", "eval", "eval", "--at", "[1,1,-3/4]", "--format", "json", "--", t)

conditions = [
    "s(x) < [1,1,1]", "x = [1,1,1,1,1]", "!(psi(x) = s(x))", "x > 0 & s(x) < [1,1,1,1]",
    "p(x) = inf | x < [1,1]", "x = -p(psi(x)) + p(s(x + p(psi(x))))",
]
for c in conditions:
    check_json(f"solve {c!r}", "psi_subset", "solve", c, "--format", "json")
    check_json(f"eval {c!r}", "eval", "eval", c, "--at", "inf", "--format", "json")

check_json("check all json", "check", "check", "--suite", "all", "--samples", "200", "--seed", "7", "--format", "json")
check_json("closure 50 json", "closure", "closure", "50", "--format", "json")

# psi names only change presentation
plain, named = run("solve", "s(x) < [1,1,1]"), run("solve", "s(x) < [1,1,1]", "--psi-names")
expect("psi-names solve", named.stdout == "{psi_0}\n", named.stdout)
expect("plain solve", plain.stdout == "{[1]}\n", plain.stdout)

# exit status contract
for label, args in [
    ("no subcommand", []),
    ("unknown subcommand", ["frobnicate"]),
    ("syntax error", ["eval", "psi(x", "--at", "[1]"]),
    ("unknown function", ["normalize", "q(x)"]),
    ("bad vector", ["eval", "x", "--at", "[1,,2]"]),
    ("missing --at", ["eval", "psi(x)"]),
    ("bad format", ["solve", "x = 0", "--format", "xml"]),
    ("unknown suite", ["check", "--suite", "nope"]),
    ("zero samples", ["check", "--samples", "0"]),
    ("zero closure length", ["closure", "0"]),
    ("condition where a term is needed", ["normalize", "x < 0"]),
]:
    r = run(*args)
    expect(f"usage error: {label}", r.returncode == 2, f"exit {r.returncode}: {r.stdout}{r.stderr}")

r = run("eval", "[1,2]")
expect("eval closed term needs no --at", r.returncode == 0 and r.stdout == "[1,2]\n", r.stdout + r.stderr)
r = run("check", "--suite", "T0", "--seed", "1", "--samples", "101")
expect("single suite", r.returncode == 0 and r.stdout.startswith("pass  T0  101 cases"), r.stdout)

if failures:
    print(f"\n{len(failures)} failures")
    for f in failures:
        print("  " + f)
    sys.exit(1)
print("\nall CLI checks passed")
