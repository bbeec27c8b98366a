"""Validate documents against the shipped coquasi-doc/1 schema."""
import json
import sys

import jsonschema


def main(schema_path, paths):
    schema = json.load(open(schema_path))
    jsonschema.Draft202012Validator.check_schema(schema)
    v = jsonschema.Draft202012Validator(schema)
    bad = 0
    for p in paths:
        errors = sorted(v.iter_errors(json.load(open(p))), key=lambda e: list(e.path))
        for e in errors:
            print(f"{p}: {'/'.join(map(str, e.path))}: {e.message}")
        bad += bool(errors)
        if not errors:
            print(f"{p}: valid")
    # documents that must be rejected
    for doc in ({"format": "coquasi-doc/1", "kind": "crossed-system"},
                {"format": "coquasi-doc/2", "kind": "h2-datum"},
                {"format": "coquasi-doc/1", "kind": "h2-datum", "B": {}, "F": [], "c": [1]}):
        if v.is_valid(doc):
            print(f"accepted an invalid document: {doc}")
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2:]))
