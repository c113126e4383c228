# Copyright 2026 The mpcode Authors
# SPDX-License-Identifier: Apache-2.0
"""Runs the CLI and validates its JSON documents against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)

    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp)
        runs = {
            "distance_sweep": ["rate-fit", "--m", "4,5,6", "--trials", "3", "--json", str(out / "sweep.json")],
            "delta_scaling": ["delta-scaling", "--m", "5,6", "--trials", "10", "--out", str(out / "delta.json")],
            "concentration": ["concentration", "--m", "6", "--trials", "200", "--out", str(out / "conc.json")],
        }
        files = {"distance_sweep": "sweep.json", "delta_scaling": "delta.json", "concentration": "conc.json"}
        for name, args in runs.items():
            subprocess.run([cli, *args], check=True, stdout=subprocess.DEVNULL)
            schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
            validator = jsonschema.Draft202012Validator(schema, registry=registry)
            validator.validate(json.loads((out / files[name]).read_text()))
            print(f"{name}: valid")
        # the fit is null when fewer than three degrees are swept
        subprocess.run([cli, "rate-fit", "--m", "5", "--trials", "2", "--json", str(out / "one.json")],
                       check=True, stdout=subprocess.DEVNULL)
        schema = json.loads((schema_dir / "distance_sweep.schema.json").read_text())
        doc = json.loads((out / "one.json").read_text())
        jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)
        assert doc["fit"] is None
        print("distance_sweep (single m): valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
