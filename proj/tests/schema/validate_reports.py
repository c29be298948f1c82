"""Validates example documents and the reports they produce against docs/schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

EXPECTED_EXIT = {"check_set_bad_carrier.json": 1, "convergence_bad_lambda.json": 1}


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def main():
    ordtop, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schema_dir = root / "docs" / "schema"
    schemas = {p.name: load(p) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )
    problem = jsonschema.Draft202012Validator(schemas["problem.schema.json"], registry=registry)
    report = jsonschema.Draft202012Validator(schemas["report.schema.json"], registry=registry)
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)

    failures = []
    examples = sorted((root / "docs" / "examples").glob("*.json"))
    if not examples:
        failures.append("no example documents found")
    for doc_path in examples:
        doc = load(doc_path)
        errors = sorted(problem.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures.append(f"{doc_path.name}: document invalid: {errors[0].message}")
            continue
        kind = doc["task"]["kind"]
        command = "theorems" if kind == "theorem" else kind
        with tempfile.TemporaryDirectory() as tmp:
            out = pathlib.Path(tmp) / "report.json"
            run = subprocess.run(
                [ordtop, command, str(doc_path), "--output", str(out)],
                capture_output=True,
                text=True,
                check=False,
            )
            want = EXPECTED_EXIT.get(doc_path.name, 0)
            if run.returncode != want:
                failures.append(f"{doc_path.name}: exit {run.returncode}, expected {want}: {run.stderr}")
                continue
            if want != 0:
                if out.exists() or "error: at '" not in run.stderr:
                    failures.append(f"{doc_path.name}: input error without a pointer diagnostic")
                continue
            rep = load(out)
            errors = sorted(report.iter_errors(rep), key=lambda e: list(e.path))
            if errors:
                failures.append(f"{doc_path.name}: report invalid at {list(errors[0].path)}: {errors[0].message}")
                continue
            statuses = []
            if command == "check-set":
                statuses = [v["status"] for v in rep["results"].values()]
            elif command == "theorems":
                statuses = [rep["theorem"]["conclusion"]]
            elif command == "fit":
                statuses = [rep["order_open"]["status"]]
            for s in statuses:
                if s not in run.stdout:
                    failures.append(f"{doc_path.name}: text summary lacks verdict '{s}'")
        print(f"checked {doc_path.name}")

    bad = load(examples[0]) if examples else {}
    bad["unexpected"] = 1
    if problem.is_valid(bad):
        failures.append("schema accepts an unknown top-level field")

    for f in failures:
        print("FAIL", f)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
