"""Validates shipped scenarios and CLI JSON reports against the documented schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(__file__).resolve().parent.parent
cli = sys.argv[1]
scenario_schema = json.loads((root / "docs" / "scenario.schema.json").read_text())
result_schema = json.loads((root / "docs" / "result.schema.json").read_text())

runs = {
    "two_point.json": ["validate", "forms", "junk"],
    "two_point_module.json": ["curvature", "product-spectrum"],
    "two_point_connection.json": ["curvature", "correspondence"],
    "two_point_pair.json": ["external"],
    "three_point_junk.json": ["junk"],
    "heisenberg.json": ["submersion"],
    "heisenberg_explicit.json": ["submersion"],
}

count = 0
for path in sorted((root / "scenarios").glob("*.json")):
    jsonschema.validate(json.loads(path.read_text()), scenario_schema)
    for command in runs.get(path.name, ["validate"]):
        out = subprocess.run([cli, command, str(path), "--format", "json", "--emit-matrices"],
                             capture_output=True, text=True, check=True)
        jsonschema.validate(json.loads(out.stdout), result_schema)
        count += 1
out = subprocess.run([cli, "selftest", "--format", "json"], capture_output=True, text=True, check=True)
jsonschema.validate(json.loads(out.stdout), result_schema)
print(f"{count + 1} reports valid")
