"""Runs the CLI with --format json for every subcommand and validates the
output (and exported bundles) against the schemas in schemas/."""
import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources((n, Resource.from_contents(s)) for n, s in schemas.items())


def validate(doc, name):
    cls = jsonschema.validators.validator_for(schemas[name])
    cls.check_schema(schemas[name])
    cls(schemas[name], registry=registry).validate(doc)


def run(*args, env=None, status=0):
    p = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True, env=env)
    if p.returncode != status:
        sys.exit(f"{args}: exit {p.returncode}\n{p.stderr}")
    return json.loads(p.stdout)


with tempfile.TemporaryDirectory() as tmp:
    env = dict(os.environ, ALPHALAB_CACHE_DIR=tmp)
    store = ["--data-dir", str(pathlib.Path(tmp) / "store")]
    checks = [
        (("table", "B2", "121"), "report-table.schema.json"),
        (("table", "G2", "w0"), "report-table.schema.json"),
        (("tau", "B3", "2123"), "report-tau.schema.json"),
        (("survey", "B3"), "report-survey.schema.json"),
        (("survey", "B4", "--rationally-smooth", "--max-length", "6"), "report-survey.schema.json"),
        (("conjecture", "G2"), "report-verdicts.schema.json"),
        (("verify", "B2"), "report-verdicts.schema.json"),
    ]
    for args, name in checks:
        validate(run(*args, env=env), name)
    for kind in ["CharTable", "HeckeValues", "FourierBlocks", "SpringerData", "GreenTable"]:
        path = pathlib.Path(tmp) / f"{kind}.json"
        subprocess.run([cli, "export", "G2", "--kind", kind, "-o", str(path)], check=True, capture_output=True)
        validate(json.loads(path.read_text()), "bundle.schema.json")
        validate(run(*store, "ingest", str(path), env=env), "report-ingest.schema.json")
    validate(run(*store, "table", "G2", "12", "--backend", "data", env=env), "report-table.schema.json")
    validate(run(*store, "cache", "status", env=env), "report-cache.schema.json")
    validate(run(*store, "cache", "clear", env=env), "report-cache.schema.json")
print("all JSON outputs validate")
