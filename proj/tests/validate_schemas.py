"""Run each CLI action and validate every emitted JSON file against schemas/."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

exe, schema_dir, scratch = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

resources = []
for p in sorted(schema_dir.glob("*.schema.json")):
    s = json.loads(p.read_text())
    Draft202012Validator.check_schema(s)
    resources.append((s["$id"], Resource.from_contents(s)))
registry = Registry().with_resources(resources)
validators = {
    name: Draft202012Validator(json.loads((schema_dir / f"{name}.schema.json").read_text()), registry=registry)
    for name in ["manifest", "conservation", "dims", "check", "spectrum"]
}
outputs = {"conservation.json": "conservation", "dims.json": "dims", "check.json": "check",
           "spectrum.json": "spectrum", "manifest.json": "manifest"}

short = ["--dt", "0.01", "--t-end", "0.2"]
runs = {
    "top": ["simulate", "--model", "top", "--J", "1,2,3"] + short,
    "top_lax": ["simulate", "--model", "top", "--tau", "0.1,1.2"] + short,
    "cm_v": ["simulate", "--model", "cm", "--variant", "V", "--tau", "0,1"] + short,
    "cm_iii": ["simulate", "--model", "cm", "--variant", "III"] + short,
    "cm_iv": ["simulate", "--model", "cm", "--variant", "IV"] + short,
    "gaudin": ["simulate", "--model", "gaudin", "--marks", "0,1,2.5"] + short,
    "dims": ["dims", "--type", "A1,A2,B2,G2", "--genus", "2", "--marked", "3"],
    "spectrum": ["spectrum", "--l", "1.5", "--J", "1,2,3"],
    "check": ["check", "--seed", "3"],
}
configs = {
    "gaudin_cfg": {"action": "simulate", "model": "gaudin", "class": "V",
                   "params": {"marks": [[0, 0], [1, 0.5], [-1, 2]],
                              "flow": [{"site": 2, "which": "H1", "coef": [0.5, 0]},
                                       {"site": 1, "which": "H2", "coef": 1}]},
                   "integrator": {"dt": 0.01, "t_end": 0.1}},
    "spectrum_cfg": {"action": "spectrum", "params": {"l": 1, "J": [[1, 0.5], 2, 3]}},
}

failures = 0
def run(name, args):
    global failures
    out = scratch / name
    r = subprocess.run([exe] + args + ["--out", str(out)], capture_output=True, text=True)
    if r.returncode != 0:
        print(f"{name}: exit {r.returncode}\n{r.stderr}")
        failures += 1
        return
    report = json.loads(r.stdout)
    found = [f for f in outputs if (out / f).exists()]
    if "manifest.json" not in found:
        print(f"{name}: no manifest written")
        failures += 1
    for f in found:
        doc = json.loads((out / f).read_text())
        errs = list(validators[outputs[f]].iter_errors(doc))
        for e in errs:
            print(f"{name}/{f}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += len(errs)
        if f != "manifest.json" and doc != report:
            print(f"{name}/{f}: differs from stdout report")
            failures += 1
    print(f"{name}: validated {', '.join(found)}")

for name, args in runs.items():
    run(name, args)
for name, cfg in configs.items():
    path = scratch / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(cfg))
    run(name, [cfg["action"], "--config", str(path)])

# exit status: 1 for validation errors
for name, args in {"bad_tau": ["simulate", "--model", "top", "--tau", "0,-1"],
                   "bad_marks": ["simulate", "--model", "gaudin", "--marks", "0,0"],
                   "bad_action": ["fly"]}.items():
    r = subprocess.run([exe] + args + ["--out", str(scratch / name)], capture_output=True, text=True)
    if r.returncode != 1:
        print(f"{name}: expected exit 1, got {r.returncode}")
        failures += 1

sys.exit(1 if failures else 0)
